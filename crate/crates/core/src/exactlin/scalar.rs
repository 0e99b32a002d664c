//! Exact scalars: rationals and elements of a single real quadratic field Q(sqrt d).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// `a + b*sqrt(d)` with `b != 0` and `d` square-free, `d > 1`.
#[derive(Clone, Debug)]
pub struct QuadSurd {
    a: BigRational,
    b: BigRational,
    d: u32,
}

impl QuadSurd {
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// An exact scalar. Quadratic values always carry a nonzero irrational part,
/// so every value has exactly one representation.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic(QuadSurd),
}

pub fn is_square_free(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Builds `a + b*sqrt(d)`; collapses to a rational when `b == 0`.
    pub fn quadratic(a: BigRational, b: BigRational, d: u32) -> Result<Self, Error> {
        if b.is_zero() {
            return Ok(Scalar::Rational(a));
        }
        if !is_square_free(d) {
            return Err(Error::InvalidParams(format!(
                "quadratic field parameter d = {d} must be a square-free integer > 1"
            )));
        }
        Ok(Scalar::Quadratic(QuadSurd { a, b, d }))
    }

    pub fn sqrt(d: u32) -> Result<Self, Error> {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quadratic(_) => false,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quadratic(_) => None,
        }
    }

    /// The field parameter `d` when the value is irrational.
    pub fn field(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Quadratic(q) => Some(q.d),
        }
    }

    /// Rational and irrational parts.
    pub fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(r) => (r.clone(), BigRational::zero()),
            Scalar::Quadratic(q) => (q.a.clone(), q.b.clone()),
        }
    }

    /// Exact sign of `a + b*sqrt(d)`: case analysis on the signs of `a`, `b`,
    /// then comparison of `a^2` against `d*b^2`.
    pub fn signum(&self) -> Ordering {
        match self {
            Scalar::Rational(r) => r.cmp(&BigRational::zero()),
            Scalar::Quadratic(q) => {
                let sa = q.a.cmp(&BigRational::zero());
                let sb = q.b.cmp(&BigRational::zero());
                if sa == sb || sa == Ordering::Equal {
                    return sb;
                }
                let a2 = &q.a * &q.a;
                let db2 = &q.b * &q.b * BigRational::from_integer(BigInt::from(q.d));
                match a2.cmp(&db2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    // a^2 = d b^2 is impossible for square-free d and b != 0
                    Ordering::Equal => unreachable!("sqrt({}) is irrational", q.d),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Quadratic(q) => {
                let norm =
                    &q.a * &q.a - &q.b * &q.b * BigRational::from_integer(BigInt::from(q.d));
                Scalar::Quadratic(QuadSurd {
                    a: &q.a / &norm,
                    b: -(&q.b / &norm),
                    d: q.d,
                })
            }
        }
    }

    fn combine_field(x: Option<u32>, y: Option<u32>) -> Option<u32> {
        match (x, y) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "mixed quadratic fields Q(sqrt {a}) and Q(sqrt {b})");
                Some(a)
            }
            (a, b) => a.or(b),
        }
    }

    fn from_parts(a: BigRational, b: BigRational, d: Option<u32>) -> Scalar {
        match d {
            Some(d) if !b.is_zero() => Scalar::Quadratic(QuadSurd { a, b, d }),
            _ => Scalar::Rational(a),
        }
    }

    /// Renders the value; rationals as `p/q` (or `p`), quadratics as `a+b*sqrt(d)`.
    pub fn to_plain_string(&self) -> String {
        match self {
            Scalar::Rational(r) => rational_to_string(r),
            Scalar::Quadratic(q) => {
                let b = rational_to_string(&q.b);
                if q.a.is_zero() {
                    format!("{b}*sqrt({})", q.d)
                } else if q.b.is_negative() {
                    format!("{}{b}*sqrt({})", rational_to_string(&q.a), q.d)
                } else {
                    format!("{}+{b}*sqrt({})", rational_to_string(&q.a), q.d)
                }
            }
        }
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Quadratic(x), Scalar::Quadratic(y)) => {
                x.d == y.d && x.a == y.a && x.b == y.b
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rational(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            Scalar::Quadratic(q) => {
                1u8.hash(state);
                q.a.hash(state);
                q.b.hash(state);
                q.d.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            _ => (self - other).signum(),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let d = Scalar::combine_field(self.field(), rhs.field());
                let (a1, b1) = self.parts();
                let (a2, b2) = rhs.parts();
                Scalar::from_parts(a1 + a2, b1 + b2, d)
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let d = Scalar::combine_field(self.field(), rhs.field());
                let (a1, b1) = self.parts();
                let (a2, b2) = rhs.parts();
                Scalar::from_parts(a1 - a2, b1 - b2, d)
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let d = Scalar::combine_field(self.field(), rhs.field());
                let (a1, b1) = self.parts();
                let (a2, b2) = rhs.parts();
                let dd = BigRational::from_integer(BigInt::from(d.unwrap_or(0)));
                let a = &a1 * &a2 + &b1 * &b2 * dd;
                let b = a1 * b2 + a2 * b1;
                Scalar::from_parts(a, b, d)
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                assert!(!b.is_zero(), "division by zero");
                Scalar::Rational(a / b)
            }
            _ => self * &rhs.recip(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quadratic(q) => Scalar::Quadratic(QuadSurd {
                a: -&q.a,
                b: -&q.b,
                d: q.d,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain_string())
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(r) => serializer.serialize_str(&rational_to_string(r)),
            Scalar::Quadratic(q) => {
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("a", &rational_to_string(&q.a))?;
                map.serialize_entry("b", &rational_to_string(&q.b))?;
                map.serialize_entry("d", &q.d)?;
                map.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Text(String),
    Int(i64),
    Quad { a: String, b: String, d: u32 },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Text(s) => parse_rational(&s)
                .map(Scalar::Rational)
                .map_err(de::Error::custom),
            ScalarRepr::Int(n) => Ok(Scalar::from_int(n)),
            ScalarRepr::Quad { a, b, d } => {
                let a = parse_rational(&a).map_err(de::Error::custom)?;
                let b = parse_rational(&b).map_err(de::Error::custom)?;
                Scalar::quadratic(a, b, d).map_err(de::Error::custom)
            }
        }
    }
}

impl Scalar {
    /// Integer value, when the scalar is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => r.numer().to_i64(),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn square_free() {
        assert!(is_square_free(2));
        assert!(is_square_free(6));
        assert!(!is_square_free(4));
        assert!(!is_square_free(12));
        assert!(!is_square_free(1));
    }

    #[test]
    fn quadratic_sign_cases() {
        let s = |a, b| Scalar::quadratic(q(a, 1), q(b, 1), 2).unwrap().signum();
        assert_eq!(s(1, 1), Ordering::Greater);
        assert_eq!(s(-1, -1), Ordering::Less);
        // 3 - 2 sqrt 2 > 0 since 9 > 8
        assert_eq!(s(3, -2), Ordering::Greater);
        // 1 - sqrt 2 < 0
        assert_eq!(s(1, -1), Ordering::Less);
        assert_eq!(s(-3, 2), Ordering::Less);
        assert_eq!(s(0, -5), Ordering::Less);
    }

    #[test]
    fn collapse_when_rational() {
        let r2 = Scalar::sqrt(2).unwrap();
        assert_eq!(&r2 * &r2, Scalar::from_int(2));
        assert!((&r2 - &r2).is_zero());
        let x = Scalar::quadratic(q(1, 1), q(1, 1), 2).unwrap();
        assert_eq!(&x * &x.recip(), Scalar::one());
    }

    #[test]
    fn rejects_bad_field() {
        assert!(Scalar::sqrt(4).is_err());
        assert!(Scalar::quadratic(q(1, 1), q(0, 1), 4).is_ok());
    }

    #[test]
    fn serde_formats() {
        let r = Scalar::ratio(-3, 6);
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"-1/2\"");
        assert_eq!(
            serde_json::to_string(&Scalar::from_int(4)).unwrap(),
            "\"4\""
        );
        let x = Scalar::quadratic(q(1, 2), q(-1, 1), 2).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"a":"1/2","b":"-1","d":2}"#);
        let back: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let back: Scalar = serde_json::from_str("\"7/21\"").unwrap();
        assert_eq!(back, Scalar::ratio(1, 3));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixed_fields_panic() {
        let _ = Scalar::sqrt(2).unwrap() + Scalar::sqrt(3).unwrap();
    }
}
