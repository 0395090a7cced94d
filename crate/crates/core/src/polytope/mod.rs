//! Exact rational polytopes: H- and V-descriptions, hulls, volumes, lattice points
//! and unimodular equivalence.

mod dd;
mod unimodular;

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, null_space, rref, to_primitive_int};
use crate::rational::{self, rat, Rational};

pub use unimodular::{unimodular_equiv, AffineUnimodularMap};

/// One inequality `a . x <= b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ineq {
    #[serde(serialize_with = "rational::ser_vec", deserialize_with = "rational::de_vec")]
    pub a: Vec<Rational>,
    #[serde(serialize_with = "rational::ser_one", deserialize_with = "rational::de_one")]
    pub b: Rational,
}

impl Ineq {
    pub fn new(a: Vec<Rational>, b: Rational) -> Self {
        Ineq { a, b }
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        dot(&self.a, x) <= self.b
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        dot(&self.a, x) == self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    pub dim: usize,
    pub ineqs: Vec<Ineq>,
}

impl HPolytope {
    pub fn new(dim: usize, ineqs: Vec<Ineq>) -> Result<Self> {
        if let Some(bad) = ineqs.iter().find(|r| r.a.len() != dim) {
            return Err(Error::DimMismatch(dim, bad.a.len()));
        }
        Ok(HPolytope { dim, ineqs })
    }

    /// Build from integer rows `(a, b)`.
    pub fn from_int_rows(dim: usize, rows: &[(Vec<i64>, i64)]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter()
                .map(|(a, b)| Ineq::new(rational::from_ints(a), rat(*b)))
                .collect(),
        )
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.ineqs.iter().all(|r| r.holds(x))
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        self.contains(&rational::from_ints(x))
    }

    /// `k * P`.
    pub fn dilate(&self, k: &Rational) -> HPolytope {
        HPolytope {
            dim: self.dim,
            ineqs: self.ineqs.iter().map(|r| Ineq::new(r.a.clone(), &r.b * k)).collect(),
        }
    }

    /// `P + t`.
    pub fn translate(&self, t: &[Rational]) -> HPolytope {
        HPolytope {
            dim: self.dim,
            ineqs: self.ineqs.iter().map(|r| Ineq::new(r.a.clone(), &r.b + dot(&r.a, t))).collect(),
        }
    }

    /// Remove duplicate rows after scaling each row to a primitive integer normal.
    pub fn dedup(&self) -> HPolytope {
        let mut seen = BTreeSet::new();
        let mut ineqs = Vec::new();
        for r in &self.ineqs {
            let key = normalize_row(r);
            if seen.insert(key.clone()) {
                ineqs.push(key);
            }
        }
        HPolytope { dim: self.dim, ineqs }
    }
}

fn normalize_row(r: &Ineq) -> Ineq {
    let mut full = r.a.clone();
    full.push(r.b.clone());
    if r.a.iter().all(|x| x.is_zero()) {
        let sign = if r.b.is_negative() { -1 } else { 1 };
        return Ineq::new(r.a.clone(), rat(sign));
    }
    let l = full.iter().fold(BigInt::one(), |l, x| num_integer::Integer::lcm(&l, x.denom()));
    let scaled: Vec<BigInt> = full.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = r.a.iter().zip(&scaled).fold(BigInt::zero(), |g, (_, s)| num_integer::Integer::gcd(&g, s));
    let to_r = |x: &BigInt| Rational::new(x.clone(), g.clone());
    Ineq::new(scaled[..r.a.len()].iter().map(to_r).collect(), to_r(&scaled[r.a.len()]))
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// A polytope by its irredundant vertex list, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytope {
    pub dim: usize,
    #[serde(serialize_with = "rational::ser_mat", deserialize_with = "rational::de_mat")]
    vertices: Vec<Vec<Rational>>,
}

impl VPolytope {
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| rational::is_integral(v))
    }

    pub fn affine_dim(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn dilate(&self, k: &Rational) -> VPolytope {
        let mut vertices: Vec<Vec<Rational>> = self.vertices.iter().map(|v| v.iter().map(|x| x * k).collect()).collect();
        if k.is_zero() {
            vertices.truncate(1);
        }
        vertices.sort();
        vertices.dedup();
        VPolytope { dim: self.dim, vertices }
    }

    pub fn translate(&self, t: &[Rational]) -> VPolytope {
        let mut vertices: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(x, y)| x + y).collect())
            .collect();
        vertices.sort();
        VPolytope { dim: self.dim, vertices }
    }

    /// Irredundant inequality description, including equalities of the affine hull as row pairs.
    pub fn hrep(&self) -> HPolytope {
        let info = hull_info(&self.vertices, self.dim);
        let mut ineqs = Vec::new();
        for (a, b) in &info.equalities {
            ineqs.push(Ineq::new(a.clone(), b.clone()));
            ineqs.push(Ineq::new(a.iter().map(|x| -x).collect(), -b.clone()));
        }
        ineqs.extend(info.facets.iter().cloned());
        HPolytope { dim: self.dim, ineqs }
    }

    pub fn facets(&self) -> Vec<Ineq> {
        hull_info(&self.vertices, self.dim).facets
    }

    pub fn lattice_points(&self) -> LatticePointSet {
        scan_box(&self.hrep(), &self.vertices)
    }
}

/// Finite set of integer points of a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub dim: usize,
    pub points: BTreeSet<Vec<i64>>,
}

impl LatticePointSet {
    pub fn new(dim: usize) -> Self {
        LatticePointSet { dim, points: BTreeSet::new() }
    }

    pub fn from_points(dim: usize, pts: impl IntoIterator<Item = Vec<i64>>) -> Self {
        LatticePointSet { dim, points: pts.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn translate(&self, t: &[i64]) -> Self {
        Self::from_points(self.dim, self.points.iter().map(|p| p.iter().zip(t).map(|(a, b)| a + b).collect()))
    }

    pub fn minkowski(&self, other: &Self) -> Self {
        let mut out = BTreeSet::new();
        for p in &self.points {
            for q in &other.points {
                out.insert(p.iter().zip(q).map(|(a, b)| a + b).collect());
            }
        }
        LatticePointSet { dim: self.dim, points: out }
    }

    pub fn hull(&self) -> VPolytope {
        let pts: Vec<Vec<Rational>> = self.points.iter().map(|p| rational::from_ints(p)).collect();
        hull(&pts, self.dim)
    }
}

pub(crate) struct HullInfo {
    pub vertices: Vec<Vec<Rational>>,
    pub equalities: Vec<(Vec<Rational>, Rational)>,
    pub facets: Vec<Ineq>,
}

fn affine_rank(pts: &[Vec<Rational>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let dirs: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&dirs)
}

pub(crate) fn hull_info(points: &[Vec<Rational>], dim: usize) -> HullInfo {
    let mut pts: Vec<Vec<Rational>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let base = pts[0].clone();
    let mut dirs: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let pivots = if dirs.is_empty() { Vec::new() } else { rref(&mut dirs) };
    let k = pivots.len();
    let equalities: Vec<(Vec<Rational>, Rational)> = {
        let rows: Vec<Vec<Rational>> = dirs[..k.min(dirs.len())].to_vec();
        let comp = if rows.is_empty() {
            (0..dim)
                .map(|i| (0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
                .collect()
        } else {
            null_space(&rows, dim)
        };
        comp.into_iter()
            .map(|c| {
                let c = int_vec_to_rat(&to_primitive_int(&c));
                let b = dot(&c, &base);
                (c, b)
            })
            .collect()
    };
    if k == 0 {
        return HullInfo { vertices: vec![base], equalities, facets: Vec::new() };
    }
    let proj: Vec<Vec<Rational>> = pts.iter().map(|p| pivots.iter().map(|&c| p[c].clone()).collect()).collect();
    let rows: Vec<Vec<BigInt>> = proj
        .iter()
        .map(|q| {
            let mut r = q.clone();
            r.push(rat(-1));
            to_primitive_int(&r)
        })
        .collect();
    let rays = dd::extreme_rays(&rows, k + 1).expect("projected hull is full-dimensional");
    let mut facets = Vec::new();
    for r in rays {
        if r[..k].iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut a = vec![Rational::zero(); dim];
        for (i, &c) in pivots.iter().enumerate() {
            a[c] = Rational::from_integer(r[i].clone());
        }
        facets.push(Ineq::new(a, Rational::from_integer(r[k].clone())));
    }
    facets.sort();
    let vertices: Vec<Vec<Rational>> = pts
        .iter()
        .zip(&proj)
        .filter(|(p, _)| {
            let normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.is_tight(p))
                .map(|f| pivots.iter().map(|&c| f.a[c].clone()).collect())
                .collect();
            linalg::rank(&normals) == k
        })
        .map(|(p, _)| p.clone())
        .collect();
    HullInfo { vertices, equalities, facets }
}

fn int_vec_to_rat(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Convex hull of a nonempty point list.
pub fn hull(points: &[Vec<Rational>], dim: usize) -> VPolytope {
    assert!(!points.is_empty(), "hull of an empty point set");
    let info = hull_info(points, dim);
    VPolytope { dim, vertices: info.vertices }
}

pub fn hull_int(points: &[Vec<i64>], dim: usize) -> VPolytope {
    let pts: Vec<Vec<Rational>> = points.iter().map(|p| rational::from_ints(p)).collect();
    hull(&pts, dim)
}

/// Exact vertex enumeration by double description on the homogenized cone.
pub fn vertices(h: &HPolytope) -> Result<VPolytope> {
    let d = h.dim;
    let mut rows: Vec<Vec<BigInt>> = h
        .ineqs
        .iter()
        .map(|r| {
            let mut v = r.a.clone();
            v.push(-r.b.clone());
            to_primitive_int(&v)
        })
        .collect();
    let mut s = vec![BigInt::zero(); d + 1];
    s[d] = BigInt::from(-1);
    rows.push(s);
    let rays = dd::extreme_rays(&rows, d + 1).ok_or(Error::Unbounded)?;
    if rays.is_empty() {
        return Err(Error::Empty);
    }
    let mut verts = Vec::new();
    for r in rays {
        if r[d].is_zero() {
            return Err(Error::Unbounded);
        }
        verts.push(r[..d].iter().map(|x| Rational::new(x.clone(), r[d].clone())).collect::<Vec<_>>());
    }
    verts.sort();
    verts.dedup();
    Ok(VPolytope { dim: d, vertices: verts })
}

fn scan_box(h: &HPolytope, verts: &[Vec<Rational>]) -> LatticePointSet {
    let d = h.dim;
    let mut out = LatticePointSet::new(d);
    if d == 0 {
        out.points.insert(Vec::new());
        return out;
    }
    let lo: Vec<i64> = (0..d)
        .map(|i| rational::to_i64(&verts.iter().map(|v| v[i].clone()).min().unwrap().ceil()).unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| rational::to_i64(&verts.iter().map(|v| v[i].clone()).max().unwrap().floor()).unwrap())
        .collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return out;
    }
    // integer rows a.x <= floor(b) with a primitive
    let rows: Vec<(Vec<i64>, i64)> = h
        .ineqs
        .iter()
        .map(|r| {
            let mut v = r.a.clone();
            v.push(-r.b.clone());
            let p = to_primitive_int(&v);
            let a: Vec<i64> = p[..d].iter().map(|x| i64::try_from(x).unwrap()).collect();
            let b = -i64::try_from(&p[d]).unwrap();
            (a, b)
        })
        .collect();
    let mut x = lo.clone();
    loop {
        if rows.iter().all(|(a, b)| a.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() <= *b) {
            out.points.insert(x.clone());
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// All integer points of a bounded H-polytope.
pub fn lattice_points(h: &HPolytope) -> Result<LatticePointSet> {
    match vertices(h) {
        Ok(v) => Ok(scan_box(h, v.vertices())),
        Err(Error::Empty) => Ok(LatticePointSet::new(h.dim)),
        Err(e) => Err(e),
    }
}

pub fn minkowski(a: &VPolytope, b: &VPolytope) -> Result<VPolytope> {
    if a.dim != b.dim {
        return Err(Error::DimMismatch(a.dim, b.dim));
    }
    let mut sums = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for p in &a.vertices {
        for q in &b.vertices {
            sums.push(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    Ok(hull(&sums, a.dim))
}

/// Euclidean volume with respect to Z^N; zero for lower-dimensional input.
pub fn volume(p: &VPolytope) -> Rational {
    let n = p.dim;
    if n == 0 {
        return Rational::one();
    }
    if p.affine_dim() < n {
        return Rational::zero();
    }
    let info = hull_info(&p.vertices, n);
    let verts = &info.vertices;
    let incid: Vec<Vec<usize>> = info
        .facets
        .iter()
        .map(|f| (0..verts.len()).filter(|&i| f.is_tight(&verts[i])).collect())
        .collect();
    let all: Vec<usize> = (0..verts.len()).collect();
    let mut total = Rational::zero();
    for simplex in triangulate(&all, n, verts, &incid) {
        let m: Vec<Vec<Rational>> = simplex[1..]
            .iter()
            .map(|&i| verts[i].iter().zip(&verts[simplex[0]]).map(|(a, b)| a - b).collect())
            .collect();
        total += linalg::det(&m).abs();
    }
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    total / Rational::from_integer(fact)
}

/// Pulling triangulation of a face given by vertex indices.
fn triangulate(face: &[usize], dim: usize, verts: &[Vec<Rational>], incid: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if dim == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in incid {
        if f.binary_search(&apex).is_ok() {
            continue;
        }
        let g: Vec<usize> = face.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
        if g.len() < dim {
            continue;
        }
        let pts: Vec<Vec<Rational>> = g.iter().map(|&i| verts[i].clone()).collect();
        if affine_rank(&pts) == dim - 1 {
            subfaces.insert(g);
        }
    }
    let mut out = Vec::new();
    for g in subfaces {
        for mut s in triangulate(&g, dim - 1, verts, incid) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

pub(crate) fn int_vertices(p: &VPolytope) -> Result<Vec<Vec<i64>>> {
    p.vertices
        .iter()
        .map(|v| v.iter().map(|x| rational::to_i64(x).ok_or(Error::NonIntegral)).collect())
        .collect()
}

pub(crate) fn vertex_set(v: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    v.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn cube(d: usize) -> HPolytope {
        let mut rows = Vec::new();
        for i in 0..d {
            let mut a = vec![0; d];
            a[i] = 1;
            rows.push((a.clone(), 1));
            a[i] = -1;
            rows.push((a, 0));
        }
        HPolytope::from_int_rows(d, &rows).unwrap()
    }

    #[test]
    fn square_and_cube() {
        assert_eq!(vertices(&cube(2)).unwrap().num_vertices(), 4);
        assert_eq!(lattice_points(&cube(3)).unwrap().len(), 8);
        assert_eq!(volume(&vertices(&cube(4)).unwrap()), rat(1));
    }

    #[test]
    fn simplex_volume() {
        let mut pts = vec![vec![0i64; 4]];
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = 1;
            pts.push(e);
        }
        assert_eq!(volume(&hull_int(&pts, 4)), ratio(1, 24));
    }

    #[test]
    fn collinear_hull() {
        let pts = vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![ratio(1, 2), rat(0)]];
        let h = hull(&pts, 2);
        assert_eq!(h.vertices(), &[vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
        assert_eq!(volume(&h), rat(0));
        let back = vertices(&h.hrep()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn lower_dimensional_simplex_in_3d() {
        let h = hull_int(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(h.num_vertices(), 3);
        assert_eq!(h.affine_dim(), 2);
        assert_eq!(h.lattice_points().len(), 3);
    }

    #[test]
    fn segments_sum_to_square() {
        let a = hull_int(&[vec![0, 0], vec![1, 0]], 2);
        let b = hull_int(&[vec![0, 0], vec![0, 1]], 2);
        let s = minkowski(&a, &b).unwrap();
        assert_eq!(s, vertices(&cube(2)).unwrap());
        let zero = hull_int(&[vec![0, 0]], 2);
        assert_eq!(minkowski(&s, &zero).unwrap(), s);
    }

    #[test]
    fn empty_and_unbounded() {
        let e = HPolytope::from_int_rows(1, &[(vec![1], -1), (vec![-1], 0)]).unwrap();
        assert_eq!(vertices(&e), Err(Error::Empty));
        assert!(lattice_points(&e).unwrap().is_empty());
        let u = HPolytope::from_int_rows(2, &[(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 0], 1)]).unwrap();
        assert_eq!(vertices(&u), Err(Error::Unbounded));
    }

    #[test]
    fn dedup_rows() {
        let h = HPolytope::from_int_rows(1, &[(vec![2], 2), (vec![1], 1), (vec![-1], 0)]).unwrap();
        assert_eq!(h.dedup().ineqs.len(), 2);
    }
}
