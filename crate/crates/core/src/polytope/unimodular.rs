use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{hull_int, int_vertices, vertex_set, volume, VPolytope};
use crate::error::{Error, Result};
use crate::linalg::{self, int_to_rat, row_hermite_transform};
use crate::rational::{self, Rational};

/// `x -> matrix * x + shift` with an integer matrix of determinant +-1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineUnimodularMap {
    pub matrix: Vec<Vec<i64>>,
    pub shift: Vec<i64>,
}

impl AffineUnimodularMap {
    pub fn identity(n: usize) -> Self {
        AffineUnimodularMap {
            matrix: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
            shift: vec![0; n],
        }
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, s)| row.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() + s)
            .collect()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, s)| {
                row.iter().zip(x).fold(rational::rat(*s), |acc, (a, b)| acc + rational::rat(*a) * b)
            })
            .collect()
    }

    pub fn det(&self) -> Rational {
        linalg::det(&int_to_rat(&self.matrix))
    }

    pub fn image(&self, p: &VPolytope) -> VPolytope {
        let pts: Vec<Vec<Rational>> = p.vertices().iter().map(|v| self.apply(v)).collect();
        super::hull(&pts, p.dim)
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
        .collect()
}

/// Coordinates of the vertices in the saturated lattice of their affine hull.
struct Intrinsic {
    base: Vec<i64>,
    v: Vec<Vec<i64>>,
    v_inv: Vec<Vec<i64>>,
    k: usize,
    pts: Vec<Vec<i64>>,
}

fn intrinsic(verts: &[Vec<i64>], n: usize) -> Intrinsic {
    let base = verts[0].clone();
    let dirs: Vec<Vec<i64>> = verts[1..].iter().map(|p| sub(p, &base)).collect();
    let (v, k) = row_hermite_transform(&dirs, n);
    let v_inv: Vec<Vec<i64>> = linalg::inverse(&int_to_rat(&v))
        .expect("unimodular")
        .iter()
        .map(|r| r.iter().map(|x| rational::to_i64(x).expect("integral inverse")).collect())
        .collect();
    let pts = verts.iter().map(|p| mat_vec(&v, &sub(p, &base))[..k].to_vec()).collect();
    Intrinsic { base, v, v_inv, k, pts }
}

fn signatures(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    pts.iter()
        .map(|p| {
            let mut s: Vec<i64> = pts.iter().map(|q| content(&sub(p, q))).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// Search for an affine unimodular map sending the vertex set of `p` onto that of `q`.
pub fn unimodular_equiv(p: &VPolytope, q: &VPolytope) -> Result<Option<AffineUnimodularMap>> {
    if p.dim != q.dim {
        return Err(Error::DimMismatch(p.dim, q.dim));
    }
    let n = p.dim;
    let pv = int_vertices(p)?;
    let qv = int_vertices(q)?;
    if pv.len() != qv.len() || p.affine_dim() != q.affine_dim() {
        return Ok(None);
    }
    let ip = intrinsic(&pv, n);
    let iq = intrinsic(&qv, n);
    let k = ip.k;
    if k == 0 {
        let shift = sub(&qv[0], &pv[0]);
        return Ok(Some(AffineUnimodularMap { shift, ..AffineUnimodularMap::identity(n) }));
    }
    let hp = hull_int(&ip.pts, k);
    let hq = hull_int(&iq.pts, k);
    if volume(&hp) != volume(&hq) {
        return Ok(None);
    }
    for d in 1..=2i64 {
        let r = rational::rat(d);
        if hp.dilate(&r).lattice_points().len() != hq.dilate(&r).lattice_points().len() {
            return Ok(None);
        }
    }
    let Some((t, pf0, qf0)) = frame_search(&ip.pts, &iq.pts, k) else {
        return Ok(None);
    };
    // lift: A = Vq^-1 diag(T, I) Vp, shift = bq - A bp + Vq^-1 ext(qf0 - T pf0)
    let mut big = AffineUnimodularMap::identity(n).matrix;
    for i in 0..k {
        for j in 0..k {
            big[i][j] = t[i][j];
        }
    }
    let a = mat_mul(&iq.v_inv, &mat_mul(&big, &ip.v));
    let mut c = sub(&qf0, &mat_vec(&t, &pf0));
    c.resize(n, 0);
    let lift = mat_vec(&iq.v_inv, &c);
    let ab = mat_vec(&a, &ip.base);
    let shift: Vec<i64> = (0..n).map(|i| iq.base[i] - ab[i] + lift[i]).collect();
    let map = AffineUnimodularMap { matrix: a, shift };
    let target = vertex_set(&qv);
    if !map.det().abs().is_one() || !pv.iter().all(|x| target.contains(&map.apply_int(x))) {
        return Err(Error::Internal("lifted unimodular map does not match".into()));
    }
    Ok(Some(map))
}

/// `(T, p_base, q_base)`: the map `x -> T (x - p_base) + q_base`.
type Frame = (Vec<Vec<i64>>, Vec<i64>, Vec<i64>);

/// Returns `(T, p_base, q_base)` with `T (x - p_base) + q_base` mapping vertices onto vertices.
fn frame_search(pv: &[Vec<i64>], qv: &[Vec<i64>], k: usize) -> Option<Frame> {
    let mut frame = vec![0usize];
    for i in 1..pv.len() {
        if frame.len() == k + 1 {
            break;
        }
        let mut rows: Vec<Vec<Rational>> = frame[1..].iter().map(|&f| rational::from_ints(&sub(&pv[f], &pv[frame[0]]))).collect();
        rows.push(rational::from_ints(&sub(&pv[i], &pv[frame[0]])));
        if linalg::rank(&rows) == rows.len() {
            frame.push(i);
        }
    }
    // columns are frame differences
    let dp: Vec<Vec<Rational>> = (0..k)
        .map(|r| (1..=k).map(|c| rational::rat(pv[frame[c]][r] - pv[frame[0]][r])).collect())
        .collect();
    let dp_inv = linalg::inverse(&dp)?;
    let sp = signatures(pv);
    let sq = signatures(qv);
    let target = vertex_set(qv);
    let mut chosen: Vec<usize> = Vec::new();
    search(pv, qv, &frame, &sp, &sq, &dp_inv, &target, k, &mut chosen)
}

#[allow(clippy::too_many_arguments)]
fn search(
    pv: &[Vec<i64>],
    qv: &[Vec<i64>],
    frame: &[usize],
    sp: &[Vec<i64>],
    sq: &[Vec<i64>],
    dp_inv: &[Vec<Rational>],
    target: &std::collections::HashSet<Vec<i64>>,
    k: usize,
    chosen: &mut Vec<usize>,
) -> Option<Frame> {
    let depth = chosen.len();
    if depth == k + 1 {
        let dq: Vec<Vec<Rational>> = (0..k)
            .map(|r| (1..=k).map(|c| rational::rat(qv[chosen[c]][r] - qv[chosen[0]][r])).collect())
            .collect();
        let t = linalg::mat_mul(&dq, dp_inv);
        let t: Vec<Vec<i64>> = t
            .iter()
            .map(|r| r.iter().map(rational::to_i64).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()?;
        if !linalg::abs_det_is_one(&int_to_rat(&t)) {
            return None;
        }
        let p0 = &pv[frame[0]];
        let q0 = &qv[chosen[0]];
        let ok = pv.iter().all(|x| {
            let y: Vec<i64> = mat_vec(&t, &sub(x, p0)).iter().zip(q0).map(|(a, b)| a + b).collect();
            target.contains(&y)
        });
        return ok.then(|| (t, p0.clone(), q0.clone()));
    }
    let pf = frame[depth];
    for cand in 0..qv.len() {
        if chosen.contains(&cand) || sp[pf] != sq[cand] {
            continue;
        }
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(i, &c)| content(&sub(&pv[frame[i]], &pv[pf])) == content(&sub(&qv[c], &qv[cand])));
        if !consistent {
            continue;
        }
        chosen.push(cand);
        if let Some(found) = search(pv, qv, frame, sp, sq, dp_inv, target, k, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::hull_int;

    #[test]
    fn translate_is_found() {
        let p = hull_int(&[vec![0, 0], vec![2, 0], vec![0, 1]], 2);
        let q = hull_int(&[vec![1, 0], vec![3, 0], vec![1, 1]], 2);
        let m = unimodular_equiv(&p, &q).unwrap().unwrap();
        assert_eq!(m.image(&p), q);
    }

    #[test]
    fn shear_and_lower_dimension() {
        let p = hull_int(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]], 3);
        let q = hull_int(&[vec![0, 0, 5], vec![1, 1, 5], vec![0, 1, 6]], 3);
        let m = unimodular_equiv(&p, &q).unwrap().unwrap();
        assert_eq!(m.image(&p), q);
        let r = hull_int(&[vec![0, 0, 0], vec![2, 0, 0], vec![0, 1, 0]], 3);
        assert!(unimodular_equiv(&p, &r).unwrap().is_none());
    }

    #[test]
    fn rejects_non_integral() {
        let p = super::super::hull(&[vec![rational::ratio(1, 2)], vec![rational::rat(1)]], 1);
        assert_eq!(unimodular_equiv(&p, &p), Err(Error::NonIntegral));
    }
}
