//! Sparse integer polynomials and lex lowest/highest-term valuations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `t_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exp: Exponent, c: impl Into<BigInt>) -> Self {
        let nvars = exp.len();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Exact division of every coefficient; `None` if some coefficient is not divisible.
    pub fn div_exact(&self, c: &BigInt) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(e.clone(), q);
        }
        Some(Poly { nvars: self.nvars, terms })
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitute `subs[i]` for variable `i`; the result lives in the ring of the substitutes.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars);
        let m = subs.first().map_or(0, |s| s.nvars);
        let mut cache: Vec<Vec<Poly>> = subs.iter().map(|s| vec![Poly::one(m), s.clone()]).collect();
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = &cache[i][cache[i].len() - 1] * &subs[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Reinterpret in a ring with more (trailing) variables.
    pub fn extend_vars(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars);
        Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn to_text(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("{prefix}{}", i + 1)),
                    _ => factors.push(format!("{prefix}{}^{k}", i + 1)),
                }
            }
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, mag.to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse text such as `3*t1^2*t3 - t2 + 5` in `nvars` variables.
    pub fn parse(s: &str, nvars: usize, prefix: &str) -> Result<Poly> {
        let bad = |m: &str| Error::Parse(format!("{m} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    chunks.push((sign, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                sign = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        chunks.push((sign, cur));
        let mut p = Poly::zero(nvars);
        for (neg, chunk) in chunks {
            let mut c = BigInt::one();
            let mut e = vec![0u32; nvars];
            for f in chunk.split('*') {
                if let Some(rest) = f.strip_prefix(prefix) {
                    let (v, k) = match rest.split_once('^') {
                        Some((v, k)) => (v, k.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (rest, 1),
                    };
                    let v: usize = v.parse().map_err(|_| bad("bad variable"))?;
                    if v == 0 || v > nvars {
                        return Err(Error::IndexOutOfRange { index: v, max: nvars });
                    }
                    e[v - 1] += k;
                } else {
                    c *= f.parse::<BigInt>().map_err(|_| bad("bad factor"))?;
                }
            }
            p.add_term(e, if neg { -c } else { c });
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            match out.terms.get_mut(e) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        out.terms.remove(e);
                    }
                }
                None => {
                    out.terms.insert(e.clone(), c.clone());
                }
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut terms: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { nvars: self.nvars, terms }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| TermJson { coeff: c.to_string(), exp: e.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in raw.terms {
            if t.exp.len() != raw.nvars {
                return Err(serde::de::Error::custom("exponent length differs from nvars"));
            }
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.push((t.exp, c));
        }
        Ok(Poly::from_terms(raw.nvars, terms))
    }
}

/// A lex order `t_{perm[0]} > t_{perm[1]} > ...` (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarOrder {
    perm: Vec<usize>,
}

impl VarOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidOrder(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(VarOrder { perm })
    }

    /// From 1-based variable indices, e.g. `[2, 3, 1, 4]` for `t2 > t3 > t1 > t4`.
    pub fn from_one_based(idx: &[usize]) -> Result<Self> {
        if idx.contains(&0) {
            return Err(Error::InvalidOrder("variable indices start at 1".into()));
        }
        Self::new(idx.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        VarOrder { perm: (0..n).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    fn key(&self, e: &[u32]) -> Vec<u32> {
        self.perm.iter().map(|&i| e[i]).collect()
    }

    /// Undo the permutation of a reported vector: ambient t-index order.
    pub fn to_ambient(&self, v: &ValuationVector) -> ValuationVector {
        let mut out = vec![0; v.0.len()];
        for (pos, &i) in self.perm.iter().enumerate() {
            out[i] = v.0[pos];
        }
        ValuationVector(out)
    }
}

/// A point of Z^N, reported in the coordinate order of a [`VarOrder`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValuationVector(pub Vec<i64>);

impl ValuationVector {
    pub fn zero(n: usize) -> Self {
        ValuationVector(vec![0; n])
    }
    pub fn add(&self, o: &Self) -> Self {
        ValuationVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        ValuationVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Low,
    High,
}

fn check_order(f: &Poly, ord: &VarOrder) -> Result<()> {
    if ord.len() != f.nvars {
        return Err(Error::DimMismatch(ord.len(), f.nvars));
    }
    Ok(())
}

fn to_vv(k: Vec<u32>, neg: bool) -> ValuationVector {
    ValuationVector(k.into_iter().map(|x| if neg { -(x as i64) } else { x as i64 }).collect())
}

/// Lex-minimal exponent, permuted by `ord`.
pub fn low_val(f: &Poly, ord: &VarOrder) -> Result<ValuationVector> {
    check_order(f, ord)?;
    let k = f.terms.keys().map(|e| ord.key(e)).min().ok_or(Error::ZeroPolynomial)?;
    Ok(to_vv(k, false))
}

/// Minus the lex-maximal exponent, permuted by `ord`.
pub fn high_val(f: &Poly, ord: &VarOrder) -> Result<ValuationVector> {
    check_order(f, ord)?;
    let k = f.terms.keys().map(|e| ord.key(e)).max().ok_or(Error::ZeroPolynomial)?;
    Ok(to_vv(k, true))
}

pub fn val(f: &Poly, ord: &VarOrder, mode: Mode) -> Result<ValuationVector> {
    match mode {
        Mode::Low => low_val(f, ord),
        Mode::High => high_val(f, ord),
    }
}

pub fn val_quotient(f: &Poly, g: &Poly, ord: &VarOrder, mode: Mode) -> Result<ValuationVector> {
    Ok(val(f, ord, mode)?.sub(&val(g, ord, mode)?))
}

/// Rows keyed by permuted exponents, so lex comparisons are plain `Vec` comparisons.
type KeyedRow = BTreeMap<Vec<u32>, BigInt>;

fn keyed(f: &Poly, ord: &VarOrder) -> KeyedRow {
    f.terms.iter().map(|(e, c)| (ord.key(e), c.clone())).collect()
}

fn lead(r: &KeyedRow, mode: Mode) -> Option<&Vec<u32>> {
    match mode {
        Mode::Low => r.keys().next(),
        Mode::High => r.keys().next_back(),
    }
}

fn make_primitive(r: &mut KeyedRow) {
    let g = r.values().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in r.values_mut() {
            *c /= &g;
        }
    }
}

/// Valuation-adapted basis of the span: each returned polynomial's leading
/// monomial (under `mode`) is distinct and absent from the others.
pub fn adapted_basis(span: &[Poly], ord: &VarOrder, mode: Mode) -> Result<Vec<(ValuationVector, Poly)>> {
    let n = ord.len();
    for f in span {
        check_order(f, ord)?;
    }
    let mut rows: Vec<KeyedRow> = span.iter().map(|f| keyed(f, ord)).filter(|r| !r.is_empty()).collect();
    let mut done: Vec<KeyedRow> = Vec::new();
    while !rows.is_empty() {
        let mut best = 0;
        for i in 1..rows.len() {
            let (a, b) = (lead(&rows[i], mode).unwrap(), lead(&rows[best], mode).unwrap());
            let better = match mode {
                Mode::Low => a < b,
                Mode::High => a > b,
            };
            if better {
                best = i;
            }
        }
        let pivot = rows.remove(best);
        let pm = lead(&pivot, mode).unwrap().clone();
        let pc = pivot[&pm].clone();
        for r in rows.iter_mut() {
            // the pivot monomial is extremal, so it can only be the leading one of r
            let Some(c) = r.get(&pm).cloned() else { continue };
            let mut next: KeyedRow = KeyedRow::new();
            for (k, v) in r.iter() {
                next.insert(k.clone(), v * &pc);
            }
            for (k, v) in pivot.iter() {
                let e = next.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= v * &c;
            }
            next.retain(|_, v| !v.is_zero());
            make_primitive(&mut next);
            *r = next;
        }
        rows.retain(|r| !r.is_empty());
        done.push(pivot);
    }
    let inv = ord.to_ambient_perm();
    Ok(done
        .into_iter()
        .map(|r| {
            let k = lead(&r, mode).unwrap().clone();
            let v = to_vv(k, mode == Mode::High);
            let p = Poly::from_terms(n, r.into_iter().map(|(k, c)| (inv.iter().map(|&j| k[j]).collect(), c)));
            (v, p)
        })
        .collect())
}

impl VarOrder {
    /// `inv[i]` is the position of variable `i` in the order.
    fn to_ambient_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (pos, &i) in self.perm.iter().enumerate() {
            inv[i] = pos;
        }
        inv
    }
}

/// The set of valuations of all nonzero elements of the span.
pub fn value_set(span: &[Poly], ord: &VarOrder, mode: Mode) -> Result<BTreeSet<ValuationVector>> {
    Ok(adapted_basis(span, ord, mode)?.into_iter().map(|(v, _)| v).collect())
}

/// Exact rank of the coefficient matrix of a list of polynomials.
pub fn span_rank(span: &[Poly]) -> usize {
    let monos: BTreeSet<&Exponent> = span.iter().flat_map(|f| f.terms.keys()).collect();
    let monos: Vec<&Exponent> = monos.into_iter().collect();
    let rows: Vec<Vec<BigInt>> = span.iter().map(|f| monos.iter().map(|m| f.coeff(m)).collect()).collect();
    crate::linalg::rank_int(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, n, "t").unwrap()
    }

    fn vv(v: &[i64]) -> ValuationVector {
        ValuationVector(v.to_vec())
    }

    #[test]
    fn low_and_high() {
        let f = p("t1 + t1*t2", 2);
        let id = VarOrder::identity(2);
        let rev = VarOrder::from_one_based(&[2, 1]).unwrap();
        assert_eq!(low_val(&f, &id).unwrap(), vv(&[1, 0]));
        assert_eq!(low_val(&f, &rev).unwrap(), vv(&[0, 1]));
        assert_eq!(high_val(&f, &id).unwrap(), vv(&[-1, -1]));
        assert_eq!(high_val(&p("t1^2 + t2^3", 2), &id).unwrap(), vv(&[-2, 0]));
        assert_eq!(low_val(&Poly::constant(3, 7), &VarOrder::identity(3)).unwrap(), vv(&[0, 0, 0]));
        assert_eq!(high_val(&Poly::constant(2, 7), &id).unwrap(), vv(&[0, 0]));
        assert_eq!(low_val(&Poly::zero(2), &id), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quotients() {
        let id = VarOrder::identity(2);
        let f = p("3*t1^2 - t2", 2);
        assert_eq!(val_quotient(&f, &f, &id, Mode::Low).unwrap(), vv(&[0, 0]));
        assert_eq!(val_quotient(&p("t1*t2", 2), &p("t2", 2), &id, Mode::Low).unwrap(), vv(&[1, 0]));
        assert_eq!(val_quotient(&Poly::one(2), &p("t1", 2), &id, Mode::Low).unwrap(), vv(&[-1, 0]));
        assert!(val_quotient(&f, &Poly::zero(2), &id, Mode::Low).is_err());
    }

    #[test]
    fn value_sets() {
        let id = VarOrder::identity(2);
        let s = value_set(&[p("t1", 2), p("t1 + t1*t2", 2)], &id, Mode::Low).unwrap();
        assert_eq!(s, [vv(&[1, 0]), vv(&[1, 1])].into_iter().collect());
        let s = value_set(&[Poly::one(2)], &id, Mode::Low).unwrap();
        assert_eq!(s.len(), 1);
        let s = value_set(&[p("t1", 2), p("2*t1", 2), Poly::zero(2)], &id, Mode::High).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn text_round_trip() {
        let f = p("1 - t2*t5 - t2*t3*t6 + 3*t1^2", 6);
        assert_eq!(Poly::parse(&f.to_text("t"), 6, "t").unwrap(), f);
        assert_eq!(f.constant_term(), BigInt::from(1));
        assert_eq!(p("t1 - t1", 1).to_string(), "0");
        assert!(Poly::parse("t3", 2, "t").is_err());
        assert!(Poly::parse("t1 +", 2, "t").is_err());
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Poly>(&j).unwrap(), f);
    }

    #[test]
    fn compose_and_pow() {
        let f = p("t1*t2 + 1", 2);
        let g = f.compose(&[p("t1 + t2", 2), p("t2", 2)]);
        assert_eq!(g, p("t1*t2 + t2^2 + 1", 2));
        assert_eq!(p("t1 + 1", 1).pow(2), p("t1^2 + 2*t1 + 1", 1));
    }
}
