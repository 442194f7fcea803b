//! Exact rational edge weights.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always kept in reduced form with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(BigRational);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidWeight(format!("{numer}/0")));
        }
        Ok(Weight(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Weight(r)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Weight(self.0.abs())
    }

    /// Smallest integer not below this value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `self / k` for a positive integer `k`.
    pub fn div_int(&self, k: usize) -> Self {
        Weight(&self.0 / BigRational::from_integer(BigInt::from(k)))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Weight(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

impl fmt::Display for Weight {
    /// `p/q`, or the bare integer when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts integers (`-3`), decimals (`2.75`, `-.5`) and fractions (`7/4`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidWeight(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Weight(BigRational::new(p, q)));
        }
        let (neg, body) = match t.as_bytes()[0] {
            b'-' => (true, &t[1..]),
            b'+' => (false, &t[1..]),
            _ => (false, t),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
        let r = BigRational::new(numer, denom);
        Ok(Weight(if neg { -r } else { r }))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &'a Weight) -> Weight {
        Weight(&self.0 - &rhs.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

// Integer terms are accumulated in an i128 and only the rest goes through
// rational addition, which normalizes by gcd on every step.
fn sum_refs<'a, I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
    let mut whole: i128 = 0;
    let mut rest = BigRational::zero();
    for w in iter {
        let small = if w.0.denom().is_one() { w.0.numer().to_i64() } else { None };
        match small.and_then(|x| whole.checked_add(x as i128)) {
            Some(s) => whole = s,
            None => rest += &w.0,
        }
    }
    Weight(rest + BigRational::from_integer(BigInt::from(whole)))
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        let items: Vec<Weight> = iter.collect();
        sum_refs(items.iter())
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        sum_refs(iter)
    }
}

impl From<i64> for Weight {
    fn from(n: i64) -> Self {
        Weight::from_integer(n)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Weights rescaled by the least common denominator so that dynamic programs
/// can run on machine integers without losing exactness.
#[derive(Clone, Debug)]
pub(crate) struct IntegerScale {
    denom: BigInt,
}

impl IntegerScale {
    /// Fails when the sum of absolute scaled weights would not fit in `i128`.
    pub(crate) fn fit<'a>(weights: impl Iterator<Item = &'a Weight> + Clone) -> Result<Self, Error> {
        let mut denom = BigInt::from(1);
        for w in weights.clone() {
            denom = num_integer::Integer::lcm(&denom, w.denom());
        }
        let scale = IntegerScale { denom };
        let mut total = BigInt::zero();
        for w in weights {
            total += scale.scaled_big(w).abs();
        }
        if total.to_i128().is_none() {
            return Err(Error::Overflow);
        }
        Ok(scale)
    }

    fn scaled_big(&self, w: &Weight) -> BigInt {
        w.numer() * (&self.denom / w.denom())
    }

    pub(crate) fn scale(&self, w: &Weight) -> i128 {
        self.scaled_big(w)
            .to_i128()
            .expect("scale bound checked in fit")
    }

    pub(crate) fn unscale(&self, v: i128) -> Weight {
        Weight(BigRational::new(BigInt::from(v), self.denom.clone()))
    }
}
