use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Rational function `num(u) / den(u)` in lowest terms with a monic
/// denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The indeterminate `u`.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    /// `u + k`.
    pub fn linear(k: i64) -> Self {
        RatFunc::from_poly(Poly::linear(k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        (0..k).fold(RatFunc::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, point: &Rational) -> Result<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole(point.clone()));
        }
        Ok(self.num.eval(point) / d)
    }

    /// `f(-u)`.
    pub fn reflect(&self) -> RatFunc {
        Self::normalized(self.num.reflect(), self.den.reflect())
    }

    /// `f(u + shift)`.
    pub fn shift(&self, shift: &Rational) -> RatFunc {
        Self::normalized(self.num.shift(shift), self.den.shift(shift))
    }

    /// Primitive integer form: integer coefficient vectors `(n, d)` with
    /// `f = n / d`, the leading coefficient of `d` positive, and no common
    /// integer factor across all coefficients.
    pub fn to_integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let all = self.num.coeffs().iter().chain(self.den.coeffs());
        let scale = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |p: &Poly| -> Vec<BigInt> {
            p.coeffs().iter().map(|c| (c * Rational::from_integer(scale.clone())).to_integer()).collect()
        };
        let (mut n, mut d) = (scaled(&self.num), scaled(&self.den));
        let content = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            n.iter_mut().for_each(|c| *c /= &content);
            d.iter_mut().for_each(|c| *c /= &content);
        }
        (n, d)
    }

    pub fn from_integer_form(num: &[BigInt], den: &[BigInt]) -> Result<RatFunc> {
        let to_poly =
            |v: &[BigInt]| Poly::new(v.iter().map(|c| Rational::from_integer(c.clone())).collect());
        RatFunc::new(to_poly(num), to_poly(den))
    }

    /// Integer zeros and poles (without multiplicity, sorted). `None` if the
    /// numerator or denominator does not split over the integers.
    pub fn integer_zeros_and_poles(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut zeros = self.num.integer_roots()?;
        let mut poles = self.den.integer_roots()?;
        zeros.dedup();
        poles.dedup();
        Some((zeros, poles))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn json_int(c: &BigInt) -> serde_json::Value {
    let n: serde_json::Number = c.to_string().parse().expect("integer literal");
    serde_json::Value::Number(n)
}

impl RatFunc {
    pub fn to_json(&self) -> serde_json::Value {
        let (n, d) = self.to_integer_form();
        serde_json::json!({
            "num": n.iter().map(json_int).collect::<Vec<_>>(),
            "den": d.iter().map(json_int).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<RatFunc> {
        let bad = || Error::Parse(format!("not a rational function object: {v}"));
        let read = |key: &str| -> Result<Vec<BigInt>> {
            v.get(key)
                .and_then(|a| a.as_array())
                .ok_or_else(bad)?
                .iter()
                .map(|c| {
                    let s = match c {
                        serde_json::Value::Number(n) => n.to_string(),
                        serde_json::Value::String(s) => s.clone(),
                        _ => return Err(bad()),
                    };
                    s.parse::<BigInt>().map_err(|_| bad())
                })
                .collect()
        };
        let num = read("num")?;
        let den = read("den")?;
        if den.last().is_some_and(|c| c.is_negative()) {
            return Err(bad());
        }
        RatFunc::from_integer_form(&num, &den)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        RatFunc::from_json(&v).map_err(D::Error::custom)
    }
}
