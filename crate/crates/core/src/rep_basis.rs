//! Explicit vectors `v(a)` inside tensor products of wedge modules of C^{n+1}.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chevalley::{chevalley_f, sbar, IntMatrix};
use crate::error::{Error, Result};
use crate::linalg::{rank_int, to_primitive_int};
use crate::no_body::d_lambda;
use crate::poset::{gt_poset, mco_lattice_points, DominantWeight, Partition, TypeTag};
use crate::rational::Rational;

/// One wedge index set per tensor factor, 1-based and increasing.
pub type TensorKey = Vec<Vec<u8>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    pub n: usize,
    /// Wedge degree of each factor.
    pub shape: Vec<usize>,
    coords: BTreeMap<TensorKey, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    F(usize),
    Sbar(usize),
    DividedF(usize, u32),
}

/// Sort `idx` in place, returning the sign of the permutation, or `None` on a repeat.
fn sort_sign(idx: &mut [u8]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        s => (0..s)
            .filter(|&c| m[0][c] != 0)
            .map(|c| {
                let sub: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det_i64(&sub)
            })
            .sum(),
    }
}

fn subsets(m: u8, k: usize) -> Vec<Vec<u8>> {
    fn rec(start: u8, m: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..=m {
            cur.push(j);
            rec(j + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

impl TensorVector {
    pub fn zero(n: usize, shape: Vec<usize>) -> Self {
        TensorVector { n, shape, coords: BTreeMap::new() }
    }

    /// `lambda_i` factors of `Lambda^i C^{n+1}` for each `i`, holding `e_1 ^ ... ^ e_i`.
    pub fn highest(n: usize, lambda: &DominantWeight) -> Self {
        let shape: Vec<usize> =
            lambda.coords().iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c as usize)).collect();
        let key: TensorKey = shape.iter().map(|&d| (1..=d as u8).collect()).collect();
        let mut v = Self::zero(n, shape);
        v.coords.insert(key, Rational::one());
        v
    }

    pub fn coords(&self) -> &BTreeMap<TensorKey, Rational> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Dimension of the ambient tensor product.
    pub fn ambient_dim(&self) -> BigInt {
        self.shape.iter().map(|&d| binom(self.n + 1, d)).product()
    }

    fn add_to(map: &mut BTreeMap<TensorKey, Rational>, key: TensorKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = map.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            map.remove(&key);
        }
    }

    /// Lie algebra action: derivation on wedges, Leibniz rule across factors.
    pub fn apply_lie(&self, x: &IntMatrix) -> Self {
        let mut out = BTreeMap::new();
        for (key, c) in &self.coords {
            for f in 0..key.len() {
                for p in 0..key[f].len() {
                    let j = key[f][p] as usize - 1;
                    for (r, row) in x.iter().enumerate() {
                        if row[j] == 0 {
                            continue;
                        }
                        let mut w = key[f].clone();
                        w[p] = r as u8 + 1;
                        let Some(sign) = sort_sign(&mut w) else { continue };
                        let mut k2 = key.clone();
                        k2[f] = w;
                        Self::add_to(&mut out, k2, c * Rational::from_integer(BigInt::from(sign * row[j])));
                    }
                }
            }
        }
        TensorVector { n: self.n, shape: self.shape.clone(), coords: out }
    }

    /// Group action: `M e_J = sum_I det(M[I, J]) e_I` on every factor.
    pub fn apply_group(&self, m: &IntMatrix) -> Self {
        let size = m.len() as u8;
        let mut cache: BTreeMap<Vec<u8>, Vec<(Vec<u8>, i64)>> = BTreeMap::new();
        let mut cur = self.coords.clone();
        for f in 0..self.shape.len() {
            let rows = subsets(size, self.shape[f]);
            let mut next = BTreeMap::new();
            for (key, c) in &cur {
                let img = cache.entry(key[f].clone()).or_insert_with(|| {
                    let cols: Vec<usize> = key[f].iter().map(|&j| j as usize - 1).collect();
                    rows.iter()
                        .filter_map(|i| {
                            let sub: Vec<Vec<i64>> =
                                i.iter().map(|&r| cols.iter().map(|&cc| m[r as usize - 1][cc]).collect()).collect();
                            let d = det_i64(&sub);
                            (d != 0).then(|| (i.clone(), d))
                        })
                        .collect()
                });
                for (i, d) in img.iter() {
                    let mut k2 = key.clone();
                    k2[f] = i.clone();
                    Self::add_to(&mut next, k2, c * Rational::from_integer(BigInt::from(*d)));
                }
            }
            cur = next;
        }
        TensorVector { n: self.n, shape: self.shape.clone(), coords: cur }
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Type-A action of `f_i`, `sbar_i` or the divided power `f_i^(a)`.
pub fn apply_generator(g: Generator, v: &TensorVector) -> Result<TensorVector> {
    let n = v.n;
    match g {
        Generator::F(i) => Ok(v.apply_lie(&chevalley_f(TypeTag::A, n, i)?)),
        Generator::Sbar(i) => Ok(v.apply_group(&sbar(TypeTag::A, n, i)?)),
        Generator::DividedF(i, a) => {
            let f = chevalley_f(TypeTag::A, n, i)?;
            let mut w = v.clone();
            let mut fact = BigInt::one();
            for k in 1..=a {
                w = w.apply_lie(&f);
                fact *= BigInt::from(k);
            }
            let d = Rational::from_integer(fact);
            for c in w.coords.values_mut() {
                *c /= &d;
            }
            if v.coords.values().all(|c| c.is_integer()) && !w.coords.values().all(|c| c.is_integer()) {
                return Err(Error::Internal("divided power left the integral lattice".into()));
            }
            Ok(w)
        }
    }
}

/// `v(a) = ubar_1 f_{i_1}^(a_1) ... ubar_N f_{i_N}^(a_N) v_lambda`.
pub fn basis_vector(n: usize, lambda: &DominantWeight, part: &Partition, a: &[i64]) -> Result<TensorVector> {
    let word = crate::chevalley::reduced_word(TypeTag::A, n);
    part.check_len(word.letters.len())?;
    if a.len() != word.letters.len() {
        return Err(Error::DimMismatch(word.letters.len(), a.len()));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 0) {
        return Err(Error::Internal(format!("negative exponent {bad} in index {a:?}")));
    }
    let mut v = TensorVector::highest(n, lambda);
    for k in (0..a.len()).rev() {
        let i = word.letters[k];
        v = apply_generator(Generator::DividedF(i, a[k] as u32), &v)?;
        if part.is_chain(k) {
            v = apply_generator(Generator::Sbar(i), &v)?;
        }
    }
    Ok(v)
}

/// The index set `(Delta_{C,O}(lambda) - d_lambda) cap Z^N`.
pub fn basis_indices(n: usize, lambda: &DominantWeight, part: &Partition) -> Result<Vec<Vec<i64>>> {
    let d = d_lambda(n, lambda, part);
    let pts = mco_lattice_points(&gt_poset(TypeTag::A, n, lambda)?, part)?;
    Ok(pts.points.iter().map(|p| p.iter().zip(&d).map(|(x, y)| x - y).collect()).collect())
}

pub fn basis_vectors(n: usize, lambda: &DominantWeight, part: &Partition) -> Result<Vec<TensorVector>> {
    basis_indices(n, lambda, part)?.iter().map(|a| basis_vector(n, lambda, part, a)).collect()
}

/// Exact rank of a list of vectors in a common ambient space.
pub fn rank_check(vectors: &[TensorVector]) -> Result<usize> {
    let Some(first) = vectors.first() else { return Ok(0) };
    if let Some(v) = vectors.iter().find(|v| v.shape != first.shape || v.n != first.n) {
        return Err(Error::DimMismatch(first.shape.len(), v.shape.len()));
    }
    let keys: Vec<&TensorKey> = {
        let mut s: Vec<&TensorKey> = vectors.iter().flat_map(|v| v.coords.keys()).collect();
        s.sort();
        s.dedup();
        s
    };
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let r: Vec<Rational> = keys.iter().map(|k| v.coords.get(*k).cloned().unwrap_or_default()).collect();
            to_primitive_int(&r)
        })
        .collect();
    Ok(rank_int(&rows))
}
