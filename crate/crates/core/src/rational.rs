//! Exact rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Always `p/q`, also for integers.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.denom().is_one())
}

pub fn from_ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

pub(crate) fn ser_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rational))
}

pub(crate) fn de_vec<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
    let raw: Vec<String> = Vec::deserialize(d)?;
    raw.iter()
        .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
        .collect()
}

pub(crate) fn ser_one<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

pub(crate) fn de_one<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let raw = String::deserialize(d)?;
    parse_rational(&raw).map_err(serde::de::Error::custom)
}

pub(crate) fn ser_mat<S: Serializer>(m: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|row| row.iter().map(fmt_rational).collect::<Vec<_>>()))
}

pub(crate) fn de_mat<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
    let raw: Vec<Vec<String>> = Vec::deserialize(d)?;
    raw.iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        })
        .collect()
}
