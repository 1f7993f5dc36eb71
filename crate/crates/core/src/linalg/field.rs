//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The base field of every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Rationals,
    /// Residues modulo a prime `p < 2^32`.
    Prime(u64),
}

impl Field {
    /// Validates the characteristic (primality and range).
    pub fn new_prime(p: u64) -> Result<Self, Error> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den`; panics when `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        self.from_i64(num)
            .div(&self.from_i64(den))
            .expect("denominator vanishes in the field")
    }

    /// Parses `"p/q"`, `"n"` (rationals) or a plain integer (prime fields).
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        match self {
            Field::Rationals => {
                let value = if let Some((n, d)) = text.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| Error::ScalarParse(text.into()))?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| Error::ScalarParse(text.into()))?;
                    if d.is_zero() {
                        return Err(Error::ScalarParse(text.into()));
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(
                        BigInt::from_str(text).map_err(|_| Error::ScalarParse(text.into()))?,
                    )
                };
                Ok(Scalar::Rational(value))
            }
            Field::Prime(p) => {
                let v = BigInt::from_str(text).map_err(|_| Error::ScalarParse(text.into()))?;
                let r = ((v % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                Ok(Scalar::Residue { value: r.to_u64().unwrap(), modulus: *p })
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::Prime(p), Scalar::Residue { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: (a + b) % modulus, modulus: *modulus }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: (a * b) % modulus, modulus: *modulus }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// `self += a * b`, the elimination kernel.
    pub fn add_assign_product(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(a), Scalar::Rational(b)) => {
                if a.is_integer() && b.is_integer() && s.is_integer() {
                    let v = s.numer() + a.numer() * b.numer();
                    *s = BigRational::from_integer(v);
                } else {
                    *s += a * b;
                }
            }
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: a, .. },
                Scalar::Residue { value: b, .. },
            ) => {
                *value = (*value + a * b % *modulus) % *modulus;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    /// Serialized form: `"p/q"` (or `"n"`) for rationals, an integer for residues.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(r) => serde_json::Value::String(format_rational(r)),
            Scalar::Residue { value, .. } => serde_json::Value::from(*value),
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_negative() || !r.is_integer() {
                    write!(f, "{}", format_rational(r))
                } else {
                    write!(f, "{}", r.numer())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}
