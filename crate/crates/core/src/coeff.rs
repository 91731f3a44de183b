//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! A [`FieldSpec`] names the ground field; [`FieldElem`] values carry enough
//! information (the modulus, for prime fields) to do arithmetic on their own.
//! Mixing elements of different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted prime modulus. Products of two residues fit in `u128`,
/// and trial division up to `sqrt(MAX_PRIME)` stays cheap.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldSpec::PrimeField(Prime::new(p)?))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p.get(),
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let m = p.get() as i64;
                FieldElem::Residue {
                    value: v.rem_euclid(m) as u64,
                    modulus: p.get(),
                }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match self {
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let r = v.mod_floor(&m);
                FieldElem::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p.get(),
                }
            }
        }
    }

    /// Parses a literal such as `"-4"`, `"2/3"` or `" 7 "`.
    pub fn parse_elem(&self, text: &str) -> Result<FieldElem> {
        let t = text.trim();
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("invalid field literal `{t}`"),
        };
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_bigint(&num).checked_div(&self.from_bigint(&den))
    }

    /// `"Q"` or `"F<p>"`.
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField(p) => format!("F{}", p.get()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_field_name(&s).map_err(serde::de::Error::custom)
    }
}

/// Accepts `Q`, `QQ`, `F<p>`, `Fp<p>` and `GF(<p>)`.
pub fn parse_field_name(s: &str) -> Result<FieldSpec> {
    let t = s.trim();
    if t == "Q" || t == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("Fp"))
        .or_else(|| t.strip_prefix('F'));
    match digits.and_then(|d| d.parse::<u64>().ok()) {
        Some(p) => FieldSpec::prime(p),
        None => Err(Error::InvalidSpec(format!("unknown field `{t}`"))),
    }
}

/// An element of `Q` or of `F_p`, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    /// Lowest terms, positive denominator (maintained by `BigRational`).
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Residue { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElem::Rational(_) => FieldSpec::Rationals,
            FieldElem::Residue { modulus, .. } => FieldSpec::PrimeField(Prime(*modulus)),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Rational(r) => FieldElem::Rational(r.recip()),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self * &other.inv()?)
    }

    pub fn add_assign(&mut self, other: &FieldElem) {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => *a += b,
            (FieldElem::Residue { value, modulus }, FieldElem::Residue { value: b, modulus: m }) => {
                debug_assert_eq!(modulus, m);
                *value = ((*value as u128 + *b as u128) % *modulus as u128) as u64;
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn sub_assign(&mut self, other: &FieldElem) {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => *a -= b,
            (FieldElem::Residue { value, modulus }, FieldElem::Residue { value: b, modulus: m }) => {
                debug_assert_eq!(modulus, m);
                *value = ((*value as u128 + (*modulus - *b) as u128) % *modulus as u128) as u64;
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn mul_assign(&mut self, other: &FieldElem) {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => *a *= b,
            (FieldElem::Residue { value, modulus }, FieldElem::Residue { value: b, modulus: m }) => {
                debug_assert_eq!(modulus, m);
                *value = mul_mod(*value, *b, *modulus);
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg_assign(&mut self) {
        match self {
            FieldElem::Rational(a) => *a = -a.clone(),
            FieldElem::Residue { value, modulus } => {
                if *value != 0 {
                    *value = *modulus - *value;
                }
            }
        }
    }

    /// Multiplies by a non-negative integer, reducing into the field.
    pub fn scale_int(&self, k: u64) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(a * BigRational::from_integer(BigInt::from(k))),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: mul_mod(*value, k % *modulus, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(a) => a.is_negative(),
            FieldElem::Residue { .. } => false,
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        out.mul_assign(rhs);
        out
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let mut out = self.clone();
        out.neg_assign();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldSpec::Rationals.from_i64(n).checked_div(&FieldSpec::Rationals.from_i64(d)).unwrap()
    }

    #[test]
    fn characteristic() {
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
        assert_eq!(FieldSpec::prime(3).unwrap().characteristic(), 3);
        assert_eq!(FieldSpec::prime(2).unwrap().characteristic(), 2);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(FieldSpec::prime(9), Err(Error::InvalidPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::InvalidPrime(1)));
        assert!(FieldSpec::prime(65_537).is_ok());
    }

    #[test]
    fn rational_examples() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        let r = FieldSpec::Rationals.from_i64(-4).checked_div(&FieldSpec::Rationals.from_i64(6)).unwrap();
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(r, q(2, -3));
    }

    #[test]
    fn prime_field_inverse() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.from_i64(2).inv().unwrap(), f3.from_i64(2));
        assert_eq!(f3.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f3.from_i64(-1), f3.from_i64(2));
    }

    #[test]
    fn parses_literals() {
        let f = FieldSpec::Rationals;
        assert_eq!(f.parse_elem(" -6/4 ").unwrap(), q(-3, 2));
        assert!(f.parse_elem("1/0").is_err());
        assert!(f.parse_elem("x").is_err());
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_elem("1/2").unwrap(), f5.from_i64(3));
        assert_eq!(parse_field_name("F3").unwrap(), FieldSpec::prime(3).unwrap());
        assert_eq!(parse_field_name("Q").unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn summing_one_char_times_gives_zero() {
        for p in [2u64, 3, 5, 7, 101] {
            let f = FieldSpec::prime(p).unwrap();
            let mut acc = f.zero();
            for _ in 0..p {
                acc.add_assign(&f.one());
            }
            assert!(acc.is_zero());
        }
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::prime(2).unwrap()),
            Just(FieldSpec::prime(3).unwrap()),
            Just(FieldSpec::prime(10_007).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(f in arb_field(), a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50) {
            let x = f.from_i64(a).checked_div(&f.from_i64(b)).unwrap_or_else(|_| f.from_i64(a));
            let y = f.from_i64(c).checked_div(&f.from_i64(d)).unwrap_or_else(|_| f.from_i64(c));
            let z = f.from_i64(e);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x - &x).is_zero());
            prop_assert!((&x + &(-&x)).is_zero());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }
}
