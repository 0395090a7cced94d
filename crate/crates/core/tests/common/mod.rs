//! Brute-force oracles used by the integration tests. They only read the poset
//! structure and never touch the polytope code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use chainorder::{MarkedPoset, Partition, Poly};
use num_bigint::BigInt;
use rand::Rng;

/// `(lower, chain coordinates, upper)`: sum of the chain coordinates is at most `upper - lower`,
/// where the ends are either markings or order coordinates.
type ChainIneq = (usize, Vec<usize>, usize);

fn position(p: &MarkedPoset) -> Vec<Option<usize>> {
    let mut pos = vec![None; p.num_elements()];
    for k in 0..p.num_coords() {
        pos[p.element_at(k)] = Some(k);
    }
    pos
}

fn chain_ineqs(p: &MarkedPoset, part: &Partition) -> Vec<ChainIneq> {
    let pos = position(p);
    let is_chain = |x: usize| pos[x].is_some_and(|k| part.is_chain(k));
    let mut out = Vec::new();
    fn walk(p: &MarkedPoset, x: usize, start: usize, path: &mut Vec<usize>, is_chain: &dyn Fn(usize) -> bool, out: &mut Vec<ChainIneq>) {
        for &y in p.upper_covers(x) {
            if is_chain(y) {
                path.push(y);
                walk(p, y, start, path, is_chain, out);
                path.pop();
            } else {
                out.push((start, path.clone(), y));
            }
        }
    }
    for a in 0..p.num_elements() {
        if !is_chain(a) {
            walk(p, a, a, &mut Vec::new(), &is_chain, &mut out);
        }
    }
    out
}

fn value(p: &MarkedPoset, pos: &[Option<usize>], x: &[i64], e: usize) -> i64 {
    p.marking(e).unwrap_or_else(|| x[pos[e].unwrap()])
}

/// Lattice points of the marked chain-order polytope by scanning `[0, top]^N`.
pub fn mco_points(p: &MarkedPoset, part: &Partition) -> BTreeSet<Vec<i64>> {
    let pos = position(p);
    let ineqs = chain_ineqs(p, part);
    let top = (0..p.num_elements()).filter_map(|e| p.marking(e)).max().unwrap_or(0);
    let bottom = (0..p.num_elements()).filter_map(|e| p.marking(e)).min().unwrap_or(0);
    let n = p.num_coords();
    let mut out = BTreeSet::new();
    let mut x = vec![bottom.min(0); n];
    loop {
        let ok = (0..n).all(|k| !part.is_chain(k) || x[k] >= 0)
            && ineqs.iter().all(|(a, c, b)| {
                let s: i64 = c.iter().map(|&e| x[pos[e].unwrap()]).sum();
                s <= value(p, &pos, &x, *b) - value(p, &pos, &x, *a)
            });
        if ok {
            out.insert(x.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if x[k] < top {
                x[k] += 1;
                break;
            }
            x[k] = bottom.min(0);
            k += 1;
        }
    }
}

/// Weyl dimension formula for SL_{n+1}.
pub fn weyl_dim(lambda: &[i64]) -> i64 {
    let n = lambda.len();
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..n {
        for j in i..n {
            let s: i64 = lambda[i..=j].iter().sum();
            num *= (s + (j - i + 1) as i64) as i128;
            den *= (j - i + 1) as i128;
        }
    }
    (num / den) as i64
}

pub fn random_poly(rng: &mut impl Rng, nvars: usize, max_terms: usize, max_exp: u32) -> Poly {
    loop {
        let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
            let mut c = rng.gen_range(-5i64..=5);
            if c == 0 {
                c = 1;
            }
            (e, BigInt::from(c))
        });
        let f = Poly::from_terms(nvars, terms);
        if !f.is_zero() {
            return f;
        }
    }
}
