//! Marked posets, Gelfand-Tsetlin posets of types A and C, marked chain-order
//! polytopes and transfer maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{HPolytope, Ineq, LatticePointSet};
use crate::rational::{rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    A,
    C,
}

impl TypeTag {
    /// Number of unmarked elements of the GT poset, i.e. the length of the reduced word.
    pub fn num_coords(self, n: usize) -> usize {
        match self {
            TypeTag::A => n * (n + 1) / 2,
            TypeTag::C => n * n,
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeTag::A => "A",
            TypeTag::C => "C",
        })
    }
}

impl FromStr for TypeTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(TypeTag::A),
            "C" | "c" => Ok(TypeTag::C),
            _ => Err(Error::Parse(format!("unknown type {s:?}"))),
        }
    }
}

/// `coords[i-1] = <lambda, h_i>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    pub type_tag: TypeTag,
    coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(type_tag: TypeTag, coords: Vec<i64>) -> Result<Self> {
        if let Some(i) = coords.iter().position(|&c| c < 0) {
            return Err(Error::NegativeWeight(i + 1));
        }
        Ok(DominantWeight { type_tag, coords })
    }

    pub fn fundamental(type_tag: TypeTag, n: usize, k: usize) -> Self {
        let mut c = vec![0; n];
        c[k - 1] = 1;
        DominantWeight { type_tag, coords: c }
    }

    pub fn rho(type_tag: TypeTag, n: usize) -> Self {
        DominantWeight { type_tag, coords: vec![1; n] }
    }

    pub fn zero(type_tag: TypeTag, n: usize) -> Self {
        DominantWeight { type_tag, coords: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn scale(&self, k: i64) -> Self {
        DominantWeight { type_tag: self.type_tag, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// `lambda_{>=k}`, zero for `k > n`.
    pub fn ge(&self, k: usize) -> i64 {
        self.coords.iter().skip(k.saturating_sub(1)).sum()
    }

    /// `lambda_{<=k}`.
    pub fn le(&self, k: usize) -> i64 {
        self.coords.iter().take(k).sum()
    }
}

/// Two-coloring of the coordinate positions: `true` marks a chain element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    chain: Vec<bool>,
}

impl Partition {
    pub fn new(chain: Vec<bool>) -> Self {
        Partition { chain }
    }

    /// Bitmask string over `q_1..q_N`, `1` meaning chain.
    pub fn from_mask(mask: &str) -> Result<Self> {
        mask.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidPartition(format!("bad mask character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Partition::new)
    }

    /// Chain positions given 1-based.
    pub fn from_chain_positions(len: usize, chain: &[usize]) -> Result<Self> {
        let mut v = vec![false; len];
        for &c in chain {
            if c == 0 || c > len {
                return Err(Error::IndexOutOfRange { index: c, max: len });
            }
            v[c - 1] = true;
        }
        Ok(Partition::new(v))
    }

    pub fn all_order(len: usize) -> Self {
        Partition::new(vec![false; len])
    }

    pub fn all_chain(len: usize) -> Self {
        Partition::new(vec![true; len])
    }

    /// All `2^len` partitions; bit `k` of the index colors position `k+1`.
    pub fn all(len: usize) -> impl Iterator<Item = Partition> {
        (0u64..1 << len).map(move |bits| Partition::new((0..len).map(|k| bits >> k & 1 == 1).collect()))
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// 0-based position.
    pub fn is_chain(&self, pos: usize) -> bool {
        self.chain[pos]
    }

    pub fn mask(&self) -> String {
        self.chain.iter().map(|&c| if c { '1' } else { '0' }).collect()
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if self.chain.len() != len {
            return Err(Error::InvalidPartition(format!("mask has length {}, expected {len}", self.chain.len())));
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.mask())
    }
}

/// Finite poset with marked elements and a fixed arrangement of the unmarked ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoset {
    labels: Vec<String>,
    marking: Vec<Option<i64>>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    order: Vec<usize>,
    coord: Vec<Option<usize>>,
    topo: Vec<usize>,
}

impl MarkedPoset {
    /// `covers` holds pairs `(a, b)` with `a` covered by `b`.
    pub fn new(labels: Vec<String>, covers: &[(usize, usize)], marking: Vec<Option<i64>>, order: Vec<usize>) -> Result<Self> {
        let e = labels.len();
        let bad = |m: String| Error::InvalidPoset(m);
        if marking.len() != e {
            return Err(bad("marking length differs from element count".into()));
        }
        let mut lower = vec![Vec::new(); e];
        let mut upper = vec![Vec::new(); e];
        for &(a, b) in covers {
            if a >= e || b >= e || a == b {
                return Err(bad(format!("bad cover ({a}, {b})")));
            }
            upper[a].push(b);
            lower[b].push(a);
        }
        // Kahn's algorithm for acyclicity and a linear extension
        let mut indeg: Vec<usize> = lower.iter().map(|l| l.len()).collect();
        let mut ready: Vec<usize> = (0..e).filter(|&i| indeg[i] == 0).rev().collect();
        let mut topo = Vec::with_capacity(e);
        while let Some(x) = ready.pop() {
            topo.push(x);
            for &u in upper[x].iter().rev() {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    ready.push(u);
                }
            }
        }
        if topo.len() != e {
            return Err(bad("cover relation has a cycle".into()));
        }
        for i in 0..e {
            if (lower[i].is_empty() || upper[i].is_empty()) && marking[i].is_none() {
                return Err(bad(format!("extremal element {} is unmarked", labels[i])));
            }
        }
        for a in 0..e {
            let Some(la) = marking[a] else { continue };
            let mut stack = upper[a].clone();
            let mut seen = vec![false; e];
            while let Some(x) = stack.pop() {
                if std::mem::replace(&mut seen[x], true) {
                    continue;
                }
                if let Some(lx) = marking[x] {
                    if lx < la {
                        return Err(bad(format!("marking decreases from {} to {}", labels[a], labels[x])));
                    }
                }
                stack.extend(&upper[x]);
            }
        }
        let mut coord = vec![None; e];
        for (pos, &x) in order.iter().enumerate() {
            if x >= e || marking[x].is_some() || coord[x].is_some() {
                return Err(bad("coordinate order is not a bijection onto the unmarked elements".into()));
            }
            coord[x] = Some(pos);
        }
        if (0..e).any(|x| marking[x].is_none() && coord[x].is_none()) {
            return Err(bad("coordinate order misses an unmarked element".into()));
        }
        Ok(MarkedPoset { labels, marking, lower, upper, order, coord, topo })
    }

    pub fn num_coords(&self) -> usize {
        self.order.len()
    }

    pub fn num_elements(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn marking(&self, x: usize) -> Option<i64> {
        self.marking[x]
    }

    /// Element at a 0-based coordinate position.
    pub fn element_at(&self, pos: usize) -> usize {
        self.order[pos]
    }

    pub fn coord_labels(&self) -> Vec<&str> {
        self.order.iter().map(|&x| self.labels[x].as_str()).collect()
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.labels.len())
            .flat_map(|a| self.upper[a].iter().map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    fn is_chain_elem(&self, x: usize, part: &Partition) -> bool {
        self.coord[x].is_some_and(|p| part.is_chain(p))
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [self.labels[a].clone(), self.labels[b].clone()]).collect(),
            marked: (0..self.labels.len())
                .filter_map(|x| self.marking[x].map(|v| (self.labels[x].clone(), v)))
                .collect(),
            order: self.coord_labels().into_iter().map(String::from).collect(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<Self> {
        let idx: BTreeMap<&str, usize> = j.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let get = |l: &str| idx.get(l).copied().ok_or_else(|| Error::InvalidPoset(format!("unknown element {l:?}")));
        let covers = j.covers.iter().map(|[a, b]| Ok((get(a)?, get(b)?))).collect::<Result<Vec<_>>>()?;
        let mut marking = vec![None; j.elements.len()];
        for (l, v) in &j.marked {
            marking[get(l)?] = Some(*v);
        }
        let order = j.order.iter().map(|l| get(l)).collect::<Result<Vec<_>>>()?;
        MarkedPoset::new(j.elements.clone(), &covers, marking, order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    pub marked: BTreeMap<String, i64>,
    pub order: Vec<String>,
}

fn q_label(i: usize, j: usize) -> String {
    format!("q_{j}^{i}")
}

/// The Gelfand-Tsetlin marked poset of the given type and rank.
pub fn gt_poset(type_tag: TypeTag, n: usize, lambda: &DominantWeight) -> Result<MarkedPoset> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    if lambda.rank() != n {
        return Err(Error::RankMismatch { expected: n, got: lambda.rank() });
    }
    if lambda.type_tag != type_tag {
        return Err(Error::Unsupported(format!("weight of type {} on a type {type_tag} poset", lambda.type_tag)));
    }
    match type_tag {
        TypeTag::A => Ok(gt_poset_a(n, lambda)),
        TypeTag::C => Ok(gt_poset_c(n, lambda)),
    }
}

fn gt_poset_a(n: usize, lambda: &DominantWeight) -> MarkedPoset {
    let mut labels = Vec::new();
    let mut marking = Vec::new();
    // marked m_1..m_{n+1}: m_j = lambda_{>= n+2-j}
    let mark: Vec<usize> = (1..=n + 1)
        .map(|j| {
            labels.push(format!("m_{j}"));
            marking.push(Some(lambda.ge(n + 2 - j)));
            labels.len() - 1
        })
        .collect();
    let mut q = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            labels.push(q_label(i, j));
            marking.push(None);
            q.insert((i, j), labels.len() - 1);
        }
    }
    let row = |i: usize, j: usize| if i == 0 { mark[j - 1] } else { q[&(i, j)] };
    let mut covers = Vec::new();
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            covers.push((row(i - 1, j), q[&(i, j)]));
            covers.push((q[&(i, j)], row(i - 1, j + 1)));
        }
    }
    let order = (1..=n).flat_map(|m| (1..=m).map(move |l| (m + 1 - l, l))).map(|(i, j)| q[&(i, j)]).collect();
    MarkedPoset::new(labels, &covers, marking, order).expect("GT poset of type A is valid")
}

fn gt_poset_c(n: usize, lambda: &DominantWeight) -> MarkedPoset {
    let mut labels = Vec::new();
    let mut marking = Vec::new();
    // row 0 holds lambda_{<=n} >= ... >= lambda_{<=1}
    let top: Vec<usize> = (1..=n)
        .map(|c| {
            labels.push(format!("l_{c}"));
            marking.push(Some(lambda.le(n + 1 - c)));
            labels.len() - 1
        })
        .collect();
    let len = |r: usize| n - r / 2;
    // entry (r, c) for r = 1..2n-1 is q_j^(i) with i = n+1-c, j = 2i-r
    let mut entry = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=2 * i - 1 {
            labels.push(q_label(i, j));
            marking.push(None);
            entry.insert((2 * i - j, n + 1 - i), labels.len() - 1);
        }
    }
    let mut zero = BTreeMap::new();
    for r in (1..2 * n).step_by(2) {
        labels.push(format!("z_{r}"));
        marking.push(Some(0));
        zero.insert(r, labels.len() - 1);
    }
    let at = |r: usize, c: usize| if r == 0 { top[c - 1] } else { entry[&(r, c)] };
    let mut covers = Vec::new();
    for r in 1..2 * n {
        let l = len(r);
        for c in 1..=l {
            covers.push((at(r, c), at(r - 1, c)));
            if c < len(r - 1) {
                covers.push((at(r - 1, c + 1), at(r, c)));
            } else {
                covers.push((zero[&r], at(r, c)));
            }
        }
    }
    let mut order = Vec::new();
    for i in 1..=n {
        let js = (2..=i).chain(std::iter::once(1)).chain(i + 1..=2 * i - 1);
        order.extend(js.map(|j| entry[&(2 * i - j, n + 1 - i)]));
    }
    MarkedPoset::new(labels, &covers, marking, order).expect("GT poset of type C is valid")
}

/// Inequality description of the marked chain-order polytope.
pub fn mco_hrep(p: &MarkedPoset, part: &Partition) -> Result<HPolytope> {
    part.check_len(p.num_coords())?;
    let n = p.num_coords();
    let mut ineqs = Vec::new();
    for pos in 0..n {
        if part.is_chain(pos) {
            let mut a = vec![Rational::zero(); n];
            a[pos] = rat(-1);
            ineqs.push(Ineq::new(a, Rational::zero()));
        }
    }
    let anchor = |x: usize| !p.is_chain_elem(x, part);
    for a in (0..p.num_elements()).filter(|&x| anchor(x)) {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(a, Vec::new())];
        while let Some((x, path)) = stack.pop() {
            for &u in p.upper_covers(x) {
                if anchor(u) {
                    let mut coeffs = vec![0i64; n];
                    let mut rhs = 0i64;
                    for &c in &path {
                        coeffs[p.coord[c].unwrap()] += 1;
                    }
                    match p.marking(u) {
                        Some(v) => rhs += v,
                        None => coeffs[p.coord[u].unwrap()] -= 1,
                    }
                    match p.marking(a) {
                        Some(v) => rhs -= v,
                        None => coeffs[p.coord[a].unwrap()] += 1,
                    }
                    if coeffs.iter().all(|&c| c == 0) {
                        continue;
                    }
                    ineqs.push(Ineq::new(coeffs.into_iter().map(rat).collect(), rat(rhs)));
                } else {
                    let mut next = path.clone();
                    next.push(u);
                    stack.push((u, next));
                }
            }
        }
    }
    Ok(HPolytope::new(n, ineqs)?.dedup())
}

/// The transfer map from the marked order polytope onto the chain-order polytope.
pub fn transfer(p: &MarkedPoset, part: &Partition, x: &[Rational]) -> Result<Vec<Rational>> {
    part.check_len(p.num_coords())?;
    if x.len() != p.num_coords() {
        return Err(Error::DimMismatch(p.num_coords(), x.len()));
    }
    let y = |e: usize| match p.marking(e) {
        Some(v) => rat(v),
        None => x[p.coord[e].unwrap()].clone(),
    };
    Ok((0..p.num_coords())
        .map(|pos| {
            if !part.is_chain(pos) {
                return x[pos].clone();
            }
            let e = p.element_at(pos);
            p.lower_covers(e).iter().map(|&l| &x[pos] - y(l)).min().expect("unmarked element has a lower cover")
        })
        .collect())
}

pub fn transfer_int(p: &MarkedPoset, part: &Partition, x: &[i64]) -> Result<Vec<i64>> {
    let q = transfer(p, part, &crate::rational::from_ints(x))?;
    Ok(q.iter().map(|v| crate::rational::to_i64(v).expect("integral image")).collect())
}

/// Lattice points of the marked order polytope, in coordinate order.
pub fn order_lattice_points(p: &MarkedPoset) -> LatticePointSet {
    let n = p.num_coords();
    let free: Vec<usize> = p.topo.iter().copied().filter(|&x| p.marking(x).is_none()).collect();
    let global_max = (0..p.num_elements()).filter_map(|x| p.marking(x)).max().unwrap_or(0);
    let mut out = BTreeSet::new();
    let mut val = vec![0i64; p.num_elements()];
    fn rec(p: &MarkedPoset, free: &[usize], depth: usize, val: &mut Vec<i64>, gmax: i64, out: &mut BTreeSet<Vec<i64>>) {
        if depth == free.len() {
            out.insert(p.order.iter().map(|&x| val[x]).collect());
            return;
        }
        let x = free[depth];
        let v = |e: usize, val: &Vec<i64>| p.marking(e).unwrap_or(val[e]);
        let lo = p.lower_covers(x).iter().map(|&l| v(l, val)).max().unwrap();
        let hi = p.upper_covers(x).iter().filter_map(|&u| p.marking(u)).min().unwrap_or(gmax).min(gmax);
        for t in lo..=hi {
            val[x] = t;
            rec(p, free, depth + 1, val, gmax, out);
        }
    }
    for x in 0..p.num_elements() {
        if let Some(m) = p.marking(x) {
            val[x] = m;
        }
    }
    rec(p, &free, 0, &mut val, global_max, &mut out);
    LatticePointSet { dim: n, points: out }
}

/// Lattice points of the marked chain-order polytope, obtained through the transfer map.
pub fn mco_lattice_points(p: &MarkedPoset, part: &Partition) -> Result<LatticePointSet> {
    part.check_len(p.num_coords())?;
    let base = order_lattice_points(p);
    let mut out = LatticePointSet::new(p.num_coords());
    for x in &base.points {
        out.points.insert(transfer_int(p, part, x)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::lattice_points;
    use crate::rational::from_ints;

    fn rho2() -> MarkedPoset {
        gt_poset(TypeTag::A, 2, &DominantWeight::rho(TypeTag::A, 2)).unwrap()
    }

    fn rows(h: &HPolytope) -> BTreeSet<(Vec<i64>, i64)> {
        h.ineqs
            .iter()
            .map(|r| {
                (r.a.iter().map(|x| crate::rational::to_i64(x).unwrap()).collect(), crate::rational::to_i64(&r.b).unwrap())
            })
            .collect()
    }

    #[test]
    fn type_a_shape() {
        let p = rho2();
        assert_eq!(p.num_coords(), 3);
        assert_eq!(p.coord_labels(), ["q_1^1", "q_1^2", "q_2^1"]);
        let marks: Vec<i64> = (0..3).map(|j| p.marking(j).unwrap()).collect();
        assert_eq!(marks, [0, 1, 2]);
        let p3 = gt_poset(TypeTag::A, 3, &DominantWeight::rho(TypeTag::A, 3)).unwrap();
        assert_eq!(p3.num_coords(), 6);
    }

    #[test]
    fn type_c_shape() {
        let p = gt_poset(TypeTag::C, 2, &DominantWeight::rho(TypeTag::C, 2)).unwrap();
        assert_eq!(p.coord_labels(), ["q_1^1", "q_2^2", "q_1^2", "q_3^2"]);
        assert_eq!(order_lattice_points(&p).len(), 16);
    }

    #[test]
    fn chain_order_system_of_the_mixed_partition() {
        let p = rho2();
        let h = mco_hrep(&p, &Partition::from_mask("010").unwrap()).unwrap();
        // 0<=a1<=1, 1<=a3<=2, 0<=a2<=a3-a1
        let want: BTreeSet<(Vec<i64>, i64)> = [
            (vec![-1, 0, 0], 0),
            (vec![1, 0, 0], 1),
            (vec![0, 0, -1], -1),
            (vec![0, 0, 1], 2),
            (vec![0, -1, 0], 0),
            (vec![1, 1, -1], 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(rows(&h), want);
    }

    #[test]
    fn gt_and_fflv_systems() {
        let p = rho2();
        let gt = rows(&mco_hrep(&p, &Partition::from_mask("000").unwrap()).unwrap());
        let want: BTreeSet<(Vec<i64>, i64)> = [
            (vec![-1, 0, 0], 0),
            (vec![1, -1, 0], 0),
            (vec![0, 1, -1], 0),
            (vec![0, 0, 1], 2),
            (vec![1, 0, 0], 1),
            (vec![0, 0, -1], -1),
        ]
        .into_iter()
        .collect();
        assert_eq!(gt, want);
        let fflv = rows(&mco_hrep(&p, &Partition::from_mask("111").unwrap()).unwrap());
        let want: BTreeSet<(Vec<i64>, i64)> = [
            (vec![-1, 0, 0], 0),
            (vec![0, -1, 0], 0),
            (vec![0, 0, -1], 0),
            (vec![1, 0, 0], 1),
            (vec![0, 0, 1], 1),
            (vec![1, 1, 1], 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(fflv, want);
    }

    #[test]
    fn transfer_examples() {
        let p = rho2();
        let full = Partition::all_chain(3);
        assert_eq!(transfer_int(&p, &full, &[1, 1, 2]).unwrap(), [1, 0, 1]);
        let none = Partition::all_order(3);
        let x = from_ints(&[1, 2, 2]);
        assert_eq!(transfer(&p, &none, &x).unwrap(), x);
    }

    #[test]
    fn lattice_point_examples() {
        let p = rho2();
        for part in Partition::all(3) {
            let pts = mco_lattice_points(&p, &part).unwrap();
            assert_eq!(pts.len(), 8);
            assert_eq!(pts, lattice_points(&mco_hrep(&p, &part).unwrap()).unwrap());
        }
        let w1 = gt_poset(TypeTag::A, 2, &DominantWeight::fundamental(TypeTag::A, 2, 1)).unwrap();
        let pts = mco_lattice_points(&w1, &Partition::all_order(3)).unwrap();
        let want: BTreeSet<Vec<i64>> = [vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]].into_iter().collect();
        assert_eq!(pts.points, want);
        let z = gt_poset(TypeTag::A, 3, &DominantWeight::zero(TypeTag::A, 3)).unwrap();
        assert_eq!(order_lattice_points(&z).points, [vec![0; 6]].into_iter().collect());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(gt_poset(TypeTag::A, 2, &DominantWeight::rho(TypeTag::A, 3)).is_err());
        assert_eq!(DominantWeight::new(TypeTag::A, vec![1, -1]), Err(Error::NegativeWeight(2)));
        assert!(mco_hrep(&rho2(), &Partition::all_chain(4)).is_err());
        let cyc = MarkedPoset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)], vec![Some(0), Some(1)], vec![]);
        assert!(cyc.is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = gt_poset(TypeTag::C, 2, &DominantWeight::rho(TypeTag::C, 2)).unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back = MarkedPoset::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.coord_labels(), p.coord_labels());
        assert_eq!(back.covers(), p.covers());
    }
}
