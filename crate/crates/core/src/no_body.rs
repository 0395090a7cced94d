//! Section polynomials, d-vectors, level-k value sets, main-theorem checks and
//! the Sp_4 classification table.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{omega_product, PolyMatrix};
use crate::crystal::Column;
use crate::error::{Error, Result};
use crate::poly::{adapted_basis, value_set, Mode, Poly, ValuationVector, VarOrder};
use crate::polytope::{self, unimodular_equiv, HPolytope, LatticePointSet, VPolytope};
use crate::poset::{gt_poset, mco_hrep, mco_lattice_points, order_lattice_points, DominantWeight, Partition, TypeTag};
use crate::rational::{self, Rational};

/// `Omega_{C,O}` for a fixed type, rank and partition.
#[derive(Clone, Debug)]
pub struct Chart {
    pub type_tag: TypeTag,
    pub n: usize,
    pub part: Partition,
    pub omega: PolyMatrix,
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    Column::all(m - 1, k).into_iter().map(|c| c.entries().iter().map(|j| j - 1).collect()).collect()
}

impl Chart {
    pub fn new(type_tag: TypeTag, n: usize, part: &Partition) -> Result<Self> {
        let omega = omega_product(type_tag, n, part)?;
        Ok(Chart { type_tag, n, part: part.clone(), omega })
    }

    pub fn nvars(&self) -> usize {
        self.omega.nvars
    }

    /// Number of leading columns carrying the highest weight vector of the `i`-th fundamental module.
    pub fn fundamental_width(&self, i: usize) -> usize {
        match self.type_tag {
            TypeTag::A => i,
            // e_1 ^ ... ^ e_m has weight w_{n+1-m} for Sp_{2n}
            TypeTag::C => self.n + 1 - i,
        }
    }

    /// Minor with (0-based) rows `rows` on the leading columns.
    pub fn minor(&self, rows: &[usize]) -> Poly {
        let cols: Vec<usize> = (0..rows.len()).collect();
        self.omega.minor(rows, &cols)
    }

    /// Pullbacks of the coordinates of the `i`-th fundamental module.
    pub fn fundamental_sections(&self, i: usize) -> Vec<Poly> {
        let w = self.fundamental_width(i);
        subsets(self.omega.size(), w).iter().map(|r| self.minor(r)).collect()
    }
}

/// The minor with row set `b` on columns `1..k` of `Omega_{C,O}` (type A).
pub fn fundamental_section(n: usize, k: usize, b: &Column, part: &Partition) -> Result<Poly> {
    Ok(fundamental_section_in(&Chart::new(TypeTag::A, n, part)?, k, b))
}

pub fn fundamental_section_in(chart: &Chart, k: usize, b: &Column) -> Poly {
    debug_assert_eq!(b.len(), k);
    let rows: Vec<usize> = b.entries().iter().map(|j| j - 1).collect();
    chart.minor(&rows)
}

/// `d_{w_k}` in coordinate order (type A).
pub fn d_vector(n: usize, k: usize, part: &Partition) -> Vec<i64> {
    let mut out = Vec::new();
    for m in 1..=n {
        for l in 1..=m {
            let pos = out.len();
            out.push(i64::from(l + k >= n + 2 && !part.is_chain(pos)));
        }
    }
    out
}

pub fn d_lambda(n: usize, lambda: &DominantWeight, part: &Partition) -> Vec<i64> {
    let mut d = vec![0; n * (n + 1) / 2];
    for (i, &c) in lambda.coords().iter().enumerate() {
        for (x, y) in d.iter_mut().zip(d_vector(n, i + 1, part)) {
            *x += c * y;
        }
    }
    d
}

/// The translation `a^high_lambda` relating the Gelfand-Tsetlin polytope to its value set.
pub fn a_high(n: usize, lambda: &DominantWeight) -> Vec<i64> {
    (1..=n).flat_map(|m| (1..=m).map(move |l| if l == 1 { 0 } else { lambda.ge(n + 2 - l) })).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionSpace {
    pub lambda: DominantWeight,
    pub level: usize,
    pub span: Vec<Poly>,
    pub expected_dim: usize,
}

/// A basis of the span, via elimination.
fn reduce(span: Vec<Poly>) -> Vec<Poly> {
    if span.is_empty() {
        return span;
    }
    let ord = VarOrder::identity(span[0].nvars());
    adapted_basis(&span, &ord, Mode::Low).expect("consistent variable count").into_iter().map(|(_, p)| p).collect()
}

fn product_span(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            out.push(f * g);
        }
    }
    reduce(out)
}

/// Products of fundamental sections of total degree `k * lambda`.
pub fn level_space(type_tag: TypeTag, n: usize, lambda: &DominantWeight, part: &Partition, k: usize) -> Result<SectionSpace> {
    level_space_in(&Chart::new(type_tag, n, part)?, lambda, k)
}

pub fn level_space_in(chart: &Chart, lambda: &DominantWeight, k: usize) -> Result<SectionSpace> {
    if lambda.rank() != chart.n {
        return Err(Error::RankMismatch { expected: chart.n, got: lambda.rank() });
    }
    let mut span = vec![Poly::one(chart.nvars())];
    for (i, &c) in lambda.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let fund = reduce(chart.fundamental_sections(i + 1));
        for _ in 0..c * k as i64 {
            span = product_span(&span, &fund);
        }
    }
    let big = lambda.scale(k as i64);
    let expected_dim = order_lattice_points(&gt_poset(chart.type_tag, chart.n, &big)?).len();
    if span.len() != expected_dim {
        return Err(Error::DimensionDeficiency { expected: expected_dim, got: span.len() });
    }
    Ok(SectionSpace { lambda: lambda.clone(), level: k, span, expected_dim })
}

pub fn level_value_set(space: &SectionSpace, ord: &VarOrder, mode: Mode) -> Result<BTreeSet<ValuationVector>> {
    value_set(&space.span, ord, mode)
}

fn to_points(vals: &BTreeSet<ValuationVector>, dim: usize) -> LatticePointSet {
    LatticePointSet::from_points(dim, vals.iter().map(|v| v.0.clone()))
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// Outcome of a set comparison between computed values and an oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetComparison {
    pub computed: usize,
    pub expected: usize,
    pub missing: Vec<Vec<i64>>,
    pub extra: Vec<Vec<i64>>,
}

impl SetComparison {
    pub fn new(computed: &LatticePointSet, expected: &LatticePointSet) -> Self {
        SetComparison {
            computed: computed.len(),
            expected: expected.len(),
            missing: expected.points.difference(&computed.points).cloned().collect(),
            extra: computed.points.difference(&expected.points).cloned().collect(),
        }
    }

    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremReport {
    pub n: usize,
    pub partition: String,
    pub lambda: Vec<i64>,
    pub d: Vec<i64>,
    pub points: SetComparison,
    pub hull_match: bool,
    pub pass: bool,
}

/// Level-1 value set (ambient order, lowest terms) against the chain-order polytope shifted by `-d_lambda`.
pub fn verify_main_theorem(n: usize, part: &Partition, lambda: &DominantWeight) -> Result<MainTheoremReport> {
    verify_main_theorem_in(&Chart::new(TypeTag::A, n, part)?, lambda)
}

pub fn verify_main_theorem_in(chart: &Chart, lambda: &DominantWeight) -> Result<MainTheoremReport> {
    let (n, part) = (chart.n, &chart.part);
    let nn = chart.nvars();
    let space = level_space_in(chart, lambda, 1)?;
    let vals = to_points(&level_value_set(&space, &VarOrder::identity(nn), Mode::Low)?, nn);
    let d = d_lambda(n, lambda, part);
    let poset = gt_poset(TypeTag::A, n, lambda)?;
    let expected = mco_lattice_points(&poset, part)?.translate(&neg(&d));
    let points = SetComparison::new(&vals, &expected);
    let body = polytope::vertices(&mco_hrep(&poset, part)?)?.translate(&rational::from_ints(&neg(&d)));
    let hull_match = vals.hull() == body;
    let pass = points.matches() && hull_match;
    Ok(MainTheoremReport { n, partition: part.mask(), lambda: lambda.coords().to_vec(), d, points, hull_match, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub k: usize,
    pub points: SetComparison,
    /// Lattice points of the Gelfand-Tsetlin polytope of `k * lambda`.
    pub gt_count: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub n: usize,
    pub partition: String,
    pub lambda: Vec<i64>,
    pub levels: Vec<LevelReport>,
    pub pass: bool,
}

/// Level-k value sets against `(k Delta cap Z^N) - k d`, with `k Delta`'s lattice points taken
/// from the lattice Minkowski decomposition into fundamental pieces.
pub fn saturation_check(n: usize, part: &Partition, lambda: &DominantWeight, kmax: usize) -> Result<SaturationReport> {
    let chart = Chart::new(TypeTag::A, n, part)?;
    let nn = chart.nvars();
    let d = d_lambda(n, lambda, part);
    let pieces: Vec<LatticePointSet> = (1..=n)
        .map(|i| mco_lattice_points(&gt_poset(TypeTag::A, n, &DominantWeight::fundamental(TypeTag::A, n, i))?, part))
        .collect::<Result<_>>()?;
    let mut levels = Vec::new();
    for k in 1..=kmax {
        let mut oracle = LatticePointSet::from_points(nn, [vec![0; nn]]);
        for (i, &c) in lambda.coords().iter().enumerate() {
            for _ in 0..c * k as i64 {
                oracle = oracle.minkowski(&pieces[i]);
            }
        }
        let kd: Vec<i64> = d.iter().map(|x| -x * k as i64).collect();
        let oracle = oracle.translate(&kd);
        let space = level_space_in(&chart, lambda, k)?;
        let vals = to_points(&level_value_set(&space, &VarOrder::identity(nn), Mode::Low)?, nn);
        let points = SetComparison::new(&vals, &oracle);
        let gt_count = space.expected_dim;
        let pass = points.matches() && gt_count == vals.len();
        levels.push(LevelReport { k, points, gt_count, pass });
    }
    let pass = levels.iter().all(|l| l.pass);
    Ok(SaturationReport { n, partition: part.mask(), lambda: lambda.coords().to_vec(), levels, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestBody {
    pub polytope: VPolytope,
    pub k: usize,
    /// Whether level `k - 1` gives the same scaled hull.
    pub stabilized: bool,
}

/// Hull of `(1/k)` times the level-k highest-term value set (type A, ambient order).
pub fn highest_body(n: usize, part: &Partition, lambda: &DominantWeight, kmax: usize) -> Result<HighestBody> {
    let chart = Chart::new(TypeTag::A, n, part)?;
    let nn = chart.nvars();
    let scaled = |k: usize| -> Result<VPolytope> {
        let space = level_space_in(&chart, lambda, k)?;
        let vals = to_points(&level_value_set(&space, &VarOrder::identity(nn), Mode::High)?, nn);
        Ok(vals.hull().dilate(&rational::ratio(1, k as i64)))
    };
    let top = scaled(kmax)?;
    let stabilized = kmax > 1 && scaled(kmax - 1)? == top;
    Ok(HighestBody { polytope: top, k: kmax, stabilized })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeCLabel {
    #[serde(rename = "GT")]
    Gt,
    #[serde(rename = "NZ")]
    Nz,
    #[serde(rename = "DELTA")]
    Delta,
    #[serde(rename = "CROSS")]
    Cross,
}

impl TypeCLabel {
    /// Short symbol as printed in the table.
    pub fn symbol(self) -> &'static str {
        match self {
            TypeCLabel::Gt => "GT",
            TypeCLabel::Nz => "NZ",
            TypeCLabel::Delta => "Δ",
            TypeCLabel::Cross => "×",
        }
    }
}

impl fmt::Display for TypeCLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeCLabel::Gt => "GT",
            TypeCLabel::Nz => "NZ",
            TypeCLabel::Delta => "DELTA",
            TypeCLabel::Cross => "CROSS",
        })
    }
}

impl FromStr for TypeCLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "GT" => Ok(TypeCLabel::Gt),
            "NZ" => Ok(TypeCLabel::Nz),
            "DELTA" | "Δ" => Ok(TypeCLabel::Delta),
            "CROSS" | "×" | "x" => Ok(TypeCLabel::Cross),
            _ => Err(Error::Parse(format!("unknown label {s:?}"))),
        }
    }
}

/// The three partitions of the Sp_4 table: none chain, all chain, `{q_3, q_4}` chain.
pub fn type_c_partition(index: usize) -> Result<Partition> {
    match index {
        1 => Ok(Partition::all_order(4)),
        2 => Ok(Partition::all_chain(4)),
        3 => Partition::from_chain_positions(4, &[3, 4]),
        _ => Err(Error::IndexOutOfRange { index, max: 3 }),
    }
}

/// The Gelfand-Tsetlin, Nakashima-Zelevinsky and Delta reference polytopes for `rho` on Sp_4.
pub fn type_c_references() -> Result<Vec<(TypeCLabel, VPolytope)>> {
    let rho = DominantWeight::rho(TypeTag::C, 2);
    let gt = polytope::vertices(&mco_hrep(&gt_poset(TypeTag::C, 2, &rho)?, &Partition::all_order(4))?)?;
    let nonneg: Vec<(Vec<i64>, i64)> = (0..4)
        .map(|i| {
            let mut a = vec![0; 4];
            a[i] = -1;
            (a, 0)
        })
        .collect();
    let with = |rows: &[(Vec<i64>, i64)]| -> Result<VPolytope> {
        let mut all = nonneg.clone();
        all.extend_from_slice(rows);
        polytope::vertices(&HPolytope::from_int_rows(4, &all)?)
    };
    let nz = with(&[
        (vec![0, 0, 0, 1], 1),
        (vec![0, 0, 1, -1], 1),
        (vec![0, 1, -1, 0], 1),
        (vec![0, 1, -2, 0], 0),
        (vec![2, -1, 0, 0], 0),
        (vec![2, 0, 0, 0], 2),
    ])?;
    let delta = with(&[
        (vec![0, 1, 0, 0], 1),
        (vec![0, 0, 0, 1], 1),
        (vec![1, 1, 0, -1], 1),
        (vec![0, 1, 1, 1], 2),
    ])?;
    Ok(vec![(TypeCLabel::Gt, gt), (TypeCLabel::Nz, nz), (TypeCLabel::Delta, delta)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub partition: usize,
    pub order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub cell: Cell,
    pub label: TypeCLabel,
    #[serde(serialize_with = "rational::ser_one", deserialize_with = "rational::de_one")]
    pub volume: Rational,
    pub points: Vec<Vec<i64>>,
}

/// Classify the level-1 body of `rho` on Sp_4 for one partition and one lex order.
pub fn classify_type_c(part_index: usize, ord: &VarOrder) -> Result<CellReport> {
    let chart = Chart::new(TypeTag::C, 2, &type_c_partition(part_index)?)?;
    classify_in(&chart, part_index, ord, &type_c_references()?)
}

fn classify_in(chart: &Chart, part_index: usize, ord: &VarOrder, refs: &[(TypeCLabel, VPolytope)]) -> Result<CellReport> {
    let space = level_space_in(chart, &DominantWeight::rho(TypeTag::C, 2), 1)?;
    let vals = level_value_set(&space, ord, Mode::Low)?;
    let pts = to_points(&vals, 4);
    let hull = pts.hull();
    let volume = polytope::volume(&hull);
    let cell = Cell { partition: part_index, order: ord.one_based() };
    let points: Vec<Vec<i64>> = pts.points.iter().cloned().collect();
    if volume == rational::ratio(5, 6) {
        return Ok(CellReport { cell, label: TypeCLabel::Cross, volume, points });
    }
    if volume != rational::rat(1) {
        return Err(Error::Classification(format!("hull volume {} is neither 5/6 nor 1", rational::fmt_rational(&volume))));
    }
    let mut hits = Vec::new();
    for (label, r) in refs {
        if let Some(map) = unimodular_equiv(&hull, r)? {
            if polytope::volume(&map.image(&hull)) != volume {
                return Err(Error::Internal("unimodular map changed the volume".into()));
            }
            hits.push(*label);
        }
    }
    match hits.as_slice() {
        [label] => Ok(CellReport { cell, label: *label, volume, points }),
        [] => Err(Error::Classification("no reference polytope matches".into())),
        _ => Err(Error::Classification(format!("ambiguous match {hits:?}"))),
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            cur.push(x);
            rec(cur, left, out);
            cur.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// Reference labels: rows in lexicographic order of the permutation,
/// columns for the three partitions.
pub const GOLDEN_TABLE1: [[&str; 3]; 24] = [
    ["NZ", "NZ", "NZ"],
    ["NZ", "NZ", "NZ"],
    ["NZ", "×", "×"],
    ["×", "×", "×"],
    ["×", "NZ", "NZ"],
    ["×", "NZ", "NZ"],
    ["NZ", "Δ", "NZ"],
    ["NZ", "Δ", "NZ"],
    ["GT", "Δ", "NZ"],
    ["GT", "Δ", "NZ"],
    ["NZ", "Δ", "NZ"],
    ["GT", "Δ", "NZ"],
    ["GT", "×", "×"],
    ["GT", "×", "×"],
    ["GT", "NZ", "×"],
    ["GT", "NZ", "×"],
    ["GT", "×", "×"],
    ["GT", "×", "×"],
    ["NZ", "NZ", "NZ"],
    ["NZ", "NZ", "NZ"],
    ["NZ", "GT", "NZ"],
    ["GT", "GT", "NZ"],
    ["GT", "NZ", "NZ"],
    ["GT", "NZ", "NZ"],
];

pub fn golden_label(row: usize, col: usize) -> TypeCLabel {
    GOLDEN_TABLE1[row][col].parse().expect("golden table labels parse")
}

/// Classify all 72 cells; results are in row-major order (permutation, then partition).
pub fn table1() -> Result<Vec<CellReport>> {
    let refs = type_c_references()?;
    let charts: Vec<Chart> = (1..=3).map(|i| Chart::new(TypeTag::C, 2, &type_c_partition(i)?)).collect::<Result<_>>()?;
    let cells: Vec<(usize, Vec<usize>)> =
        permutations(4).into_iter().flat_map(|p| (1..=3).map(move |i| (i, p.clone()))).collect();
    cells
        .par_iter()
        .map(|(i, p)| classify_in(&charts[i - 1], *i, &VarOrder::from_one_based(p)?, &refs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_of_the_mixed_sl4_chart() {
        let part = Partition::from_chain_positions(6, &[5, 6]).unwrap();
        let f = |b: &[usize]| fundamental_section(3, 1, &Column::new(3, b.to_vec()).unwrap(), &part).unwrap();
        assert_eq!(f(&[1]), Poly::parse("-t6", 6, "t").unwrap());
        assert_eq!(f(&[4]), Poly::parse("t4", 6, "t").unwrap());
    }

    #[test]
    fn d_vectors() {
        let o = Partition::all_order(3);
        assert_eq!(d_vector(2, 2, &o), [0, 0, 1]);
        assert_eq!(d_vector(2, 1, &Partition::from_mask("010").unwrap()), [0, 0, 0]);
        assert_eq!(d_vector(3, 2, &Partition::all_chain(6)), [0; 6]);
        let rho = DominantWeight::rho(TypeTag::A, 2);
        assert_eq!(a_high(2, &rho), [0, 0, 1]);
        assert_eq!(d_lambda(2, &rho, &o), a_high(2, &rho));
    }

    #[test]
    fn small_spaces() {
        let w1 = DominantWeight::fundamental(TypeTag::A, 2, 1);
        let s = level_space(TypeTag::A, 2, &w1, &Partition::all_order(3), 1).unwrap();
        assert_eq!(s.expected_dim, 3);
        let vals = level_value_set(&s, &VarOrder::identity(3), Mode::Low).unwrap();
        let want: BTreeSet<ValuationVector> =
            [vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]].into_iter().map(ValuationVector).collect();
        assert_eq!(vals, want);
        let rho = DominantWeight::rho(TypeTag::A, 2);
        assert_eq!(level_space(TypeTag::A, 2, &rho, &Partition::all_chain(3), 2).unwrap().span.len(), 27);
        let c = level_space(TypeTag::C, 2, &DominantWeight::rho(TypeTag::C, 2), &Partition::all_order(4), 1).unwrap();
        assert_eq!(c.span.len(), 16);
    }

    #[test]
    fn rank_one_main_theorem() {
        for m in 0..=3 {
            for part in Partition::all(1) {
                let lam = DominantWeight::new(TypeTag::A, vec![m]).unwrap();
                let r = verify_main_theorem(1, &part, &lam).unwrap();
                assert!(r.pass);
                assert_eq!(r.points.computed, m as usize + 1);
            }
        }
    }

    #[test]
    fn permutation_order_matches_table_rows() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p[2], [1, 3, 2, 4]);
        assert_eq!(p[20], [4, 2, 1, 3]);
    }
}
