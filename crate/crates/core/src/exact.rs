//! Exact rationals and their textual form `"p/q"` (or `"p"` when integral).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Rat = BigRational;

pub fn rat(n: i128) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i128, d: i128) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn to_f64(q: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// `#[serde(with = "crate::exact::opt_vec")]` for `Option<Vec<Rat>>`.
pub mod opt_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rat>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(v) => s.collect_seq(v.iter().map(to_string)),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rat>>, D::Error> {
        let raw: Option<Vec<String>> = Option::deserialize(d)?;
        raw.map(|v| v.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>())
            .transpose()
            .map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "crate::exact::single")]` for `Rat`.
pub mod single {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        parse(&raw).map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "crate::exact::pair")]` for `[Rat; 2]`.
pub mod pair {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rat; 2], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rat; 2], D::Error> {
        let [a, b]: [String; 2] = Deserialize::deserialize(d)?;
        Ok([
            parse(&a).map_err(serde::de::Error::custom)?,
            parse(&b).map_err(serde::de::Error::custom)?,
        ])
    }
}
