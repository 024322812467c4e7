use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Exact rational scalar used everywhere in the crate.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Closest rational with denominator `den` to a finite float.
pub fn from_f64_grid(x: f64, den: i64) -> Rational {
    rat((x * den as f64).round() as i64, den)
}

/// Formats `p/q` or `p` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// JSON wire form of a rational: `[numerator, denominator]`.
///
/// Components that fit in an `i64` are written as JSON integers, larger ones
/// as decimal strings. Both forms are accepted on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalJson(pub Rational);

impl Serialize for RationalJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        for part in [self.0.numer(), self.0.denom()] {
            match i64::try_from(part) {
                Ok(v) => t.serialize_element(&v)?,
                Err(_) => t.serialize_element(&part.to_string())?,
            }
        }
        t.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntPart {
    Int(i64),
    Str(String),
}

impl IntPart {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntPart::Int(v) => Ok(BigInt::from(v)),
            IntPart::Str(s) => BigInt::from_str(s.trim()).map_err(E::custom),
        }
    }
}

impl<'de> Deserialize<'de> for RationalJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (n, q): (IntPart, IntPart) = Deserialize::deserialize(d)?;
        let n = n.into_bigint::<D::Error>()?;
        let q = q.into_bigint::<D::Error>()?;
        if q.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(RationalJson(Rational::new(n, q)))
    }
}
