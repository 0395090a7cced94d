//! Double description: extreme rays of a pointed cone {y : A y <= 0}.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{inverse, primitive, rank, to_primitive_int};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<BigInt>,
    z: Bits,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays (primitive integer vectors) of `{y : row . y <= 0 for all rows}`.
/// Returns `None` when the cone is not pointed (rows do not span).
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Option<Vec<Vec<BigInt>>> {
    let qrows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut basis: Vec<usize> = Vec::new();
    let mut acc: Vec<Vec<Rational>> = Vec::new();
    for (i, r) in qrows.iter().enumerate() {
        if basis.len() == d {
            break;
        }
        acc.push(r.clone());
        if rank(&acc) > basis.len() {
            basis.push(i);
        } else {
            acc.pop();
        }
    }
    if basis.len() < d {
        return None;
    }
    let inv = inverse(&acc).expect("basis rows are independent");
    let m = rows.len();
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<Rational> = (0..d).map(|i| -inv[i][j].clone()).collect();
            let mut z = Bits::new(m);
            for (jj, &b) in basis.iter().enumerate() {
                if jj != j {
                    z.set(b);
                }
            }
            Ray { v: to_primitive_int(&col), z }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].z.and(&rays[n].z);
                if common.count() + 2 < d {
                    continue;
                }
                let blocked = (0..rays.len()).any(|k| k != p && k != n && common.subset_of(&rays[k].z));
                if blocked {
                    continue;
                }
                let mut v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(a, b)| &vals[p] * a - &vals[n] * b)
                    .collect();
                primitive(&mut v);
                let mut z = common;
                z.set(i);
                fresh.push(Ray { v, z });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_zero() {
                r.z.set(i);
                next.push(r);
            } else if vals[k].is_negative() {
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }
    Some(rays.into_iter().map(|r| r.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn orthant_and_square_cone() {
        let r = extreme_rays(&b(&[&[-1, 0], &[0, -1]]), 2).unwrap();
        assert_eq!(r.len(), 2);
        // homogenized unit square: x<=s, y<=s, x>=0, y>=0
        let rows = b(&[&[1, 0, -1], &[0, 1, -1], &[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        let r = extreme_rays(&rows, 3).unwrap();
        assert_eq!(r.len(), 4);
        assert!(extreme_rays(&b(&[&[1, 0]]), 2).is_none());
    }
}
