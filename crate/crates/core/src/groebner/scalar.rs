//! Coefficient types used inside the Buchberger engine.
//!
//! Over `Q` the engine works fraction-free on integers (content removed after
//! reductions); over `F_p` it works with monic vectors and raw residues.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::coeff::FieldElem;

/// Integer with an inline fast path for values that fit in `i64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum ZInt {
    S(i64),
    B(BigInt),
}

impl Default for ZInt {
    fn default() -> Self {
        ZInt::S(0)
    }
}

impl ZInt {
    pub(crate) fn from_big(b: BigInt) -> ZInt {
        match b.to_i64() {
            Some(v) => ZInt::S(v),
            None => ZInt::B(b),
        }
    }

    pub(crate) fn to_big(&self) -> BigInt {
        match self {
            ZInt::S(v) => BigInt::from(*v),
            ZInt::B(b) => b.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, ZInt::S(0))
    }

    fn is_one(&self) -> bool {
        matches!(self, ZInt::S(1))
    }

    fn is_negative(&self) -> bool {
        match self {
            ZInt::S(v) => *v < 0,
            ZInt::B(b) => b.is_negative(),
        }
    }

    fn neg(&self) -> ZInt {
        match self {
            ZInt::S(v) => v.checked_neg().map(ZInt::S).unwrap_or_else(|| ZInt::B(-BigInt::from(*v))),
            ZInt::B(b) => ZInt::from_big(-b),
        }
    }

    fn mul(&self, o: &ZInt) -> ZInt {
        if let (ZInt::S(a), ZInt::S(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return ZInt::S(v);
            }
        }
        ZInt::from_big(self.to_big() * o.to_big())
    }

    fn sub(&self, o: &ZInt) -> ZInt {
        if let (ZInt::S(a), ZInt::S(b)) = (self, o) {
            if let Some(v) = a.checked_sub(*b) {
                return ZInt::S(v);
            }
        }
        ZInt::from_big(self.to_big() - o.to_big())
    }

    /// Non-negative gcd.
    fn gcd(&self, o: &ZInt) -> ZInt {
        if let (ZInt::S(a), ZInt::S(b)) = (self, o) {
            let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
            while y != 0 {
                let t = x % y;
                x = y;
                y = t;
            }
            if let Ok(v) = i64::try_from(x) {
                return ZInt::S(v);
            }
            return ZInt::B(BigInt::from(x));
        }
        ZInt::from_big(self.to_big().gcd(&o.to_big()))
    }

    /// Exact division; `o` must divide `self`.
    fn div_exact(&self, o: &ZInt) -> ZInt {
        if let (ZInt::S(a), ZInt::S(b)) = (self, o) {
            if let Some(v) = a.checked_div(*b) {
                return ZInt::S(v);
            }
        }
        ZInt::from_big(self.to_big() / o.to_big())
    }
}

/// Arithmetic the engine needs from its coefficients.
pub(crate) trait Scalar: Clone + Debug + PartialEq + Default {
    type Ctx: Copy + Debug;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn one(cx: Self::Ctx) -> Self;
    fn mul(&self, o: &Self, cx: Self::Ctx) -> Self;
    /// `self * u - o * v`.
    fn mul_sub(&self, u: &Self, o: &Self, v: &Self, cx: Self::Ctx) -> Self;
    fn neg(&self, cx: Self::Ctx) -> Self;
    /// Returns `(u, v)` with `u * a == v * b` and `u != 0`. `b` is the
    /// leading coefficient of a normalized reducer.
    fn cancel(a: &Self, b: &Self, cx: Self::Ctx) -> (Self, Self);
    /// Factor to divide a coefficient list by so that it becomes canonical
    /// (monic over a field, primitive with positive lead over the integers).
    fn normalizer<'a>(coeffs: impl Iterator<Item = &'a Self>, cx: Self::Ctx) -> Option<Self>
    where
        Self: 'a;
    /// Divides by a value returned from [`Scalar::normalizer`].
    fn apply_normalizer(&self, by: &Self, cx: Self::Ctx) -> Self;
    /// Cheap test whether periodic content removal is worthwhile.
    fn is_large(&self) -> bool;
    fn to_field(&self, den: &Self, cx: Self::Ctx) -> FieldElem;
}

impl Scalar for ZInt {
    type Ctx = ();

    fn is_zero(&self) -> bool {
        ZInt::is_zero(self)
    }

    fn is_one(&self) -> bool {
        ZInt::is_one(self)
    }

    fn one(_: ()) -> Self {
        ZInt::S(1)
    }

    fn mul(&self, o: &Self, _: ()) -> Self {
        ZInt::mul(self, o)
    }

    fn mul_sub(&self, u: &Self, o: &Self, v: &Self, _: ()) -> Self {
        let a = if u.is_one() { self.clone() } else { ZInt::mul(self, u) };
        a.sub(&ZInt::mul(o, v))
    }

    fn neg(&self, _: ()) -> Self {
        ZInt::neg(self)
    }

    fn cancel(a: &Self, b: &Self, _: ()) -> (Self, Self) {
        let g = a.gcd(b);
        let mut u = b.div_exact(&g);
        let mut v = a.div_exact(&g);
        if u.is_negative() {
            u = u.neg();
            v = v.neg();
        }
        (u, v)
    }

    fn normalizer<'a>(coeffs: impl Iterator<Item = &'a Self>, _: ()) -> Option<Self> {
        let mut g = ZInt::S(0);
        let mut lead_negative = None;
        for c in coeffs {
            if lead_negative.is_none() {
                lead_negative = Some(c.is_negative());
            }
            g = g.gcd(c);
            if g.is_one() && lead_negative == Some(false) {
                return None;
            }
        }
        if g.is_zero() {
            return None;
        }
        if lead_negative == Some(true) {
            g = g.neg();
        }
        (!g.is_one()).then_some(g)
    }

    fn apply_normalizer(&self, by: &Self, _: ()) -> Self {
        self.div_exact(by)
    }

    fn is_large(&self) -> bool {
        match self {
            ZInt::S(v) => v.unsigned_abs() > (1 << 40),
            ZInt::B(_) => true,
        }
    }

    fn to_field(&self, den: &Self, _: ()) -> FieldElem {
        FieldElem::Rational(BigRational::new(self.to_big(), den.to_big()))
    }
}

/// Residue modulo the context prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub(crate) struct Fp(pub(crate) u64);

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

impl Scalar for Fp {
    type Ctx = u64;

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn is_one(&self) -> bool {
        self.0 == 1
    }

    fn one(_: u64) -> Self {
        Fp(1)
    }

    fn mul(&self, o: &Self, p: u64) -> Self {
        Fp(mulmod(self.0, o.0, p))
    }

    fn mul_sub(&self, u: &Self, o: &Self, v: &Self, p: u64) -> Self {
        let a = mulmod(self.0, u.0, p);
        let b = mulmod(o.0, v.0, p);
        Fp((a + p - b) % p)
    }

    fn neg(&self, p: u64) -> Self {
        Fp((p - self.0) % p)
    }

    fn cancel(a: &Self, b: &Self, p: u64) -> (Self, Self) {
        if b.0 == 1 {
            (Fp(1), *a)
        } else {
            (Fp(1), Fp(mulmod(a.0, invmod(b.0, p), p)))
        }
    }

    fn normalizer<'a>(mut coeffs: impl Iterator<Item = &'a Self>, _: u64) -> Option<Self> {
        coeffs.next().filter(|c| c.0 != 1 && c.0 != 0).copied()
    }

    fn apply_normalizer(&self, by: &Self, p: u64) -> Self {
        Fp(mulmod(self.0, invmod(by.0, p), p))
    }

    fn is_large(&self) -> bool {
        false
    }

    fn to_field(&self, den: &Self, p: u64) -> FieldElem {
        FieldElem::Residue {
            value: mulmod(self.0, invmod(den.0, p), p),
            modulus: p,
        }
    }
}

/// Clears denominators of a list of rationals, returning integer numerators.
pub(crate) fn clear_denominators(cs: &[&BigRational]) -> Vec<ZInt> {
    let mut l = BigInt::one();
    for c in cs {
        l = l.lcm(c.denom());
    }
    cs.iter()
        .map(|c| ZInt::from_big(c.numer() * (&l / c.denom())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_int_overflow_promotes() {
        let a = ZInt::S(i64::MAX);
        let b = ZInt::mul(&a, &ZInt::S(2));
        assert!(matches!(b, ZInt::B(_)));
        assert_eq!(b.div_exact(&ZInt::S(2)), a);
        assert_eq!(ZInt::S(i64::MIN).neg().to_big(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn cancel_gives_common_multiple() {
        let (u, v) = <ZInt as Scalar>::cancel(&ZInt::S(6), &ZInt::S(-4), ());
        assert_eq!(ZInt::mul(&u, &ZInt::S(6)), ZInt::mul(&v, &ZInt::S(-4)));
        assert!(!u.is_negative());
        let (u, v) = Fp::cancel(&Fp(2), &Fp(3), 5);
        assert_eq!(Fp(2).mul(&u, 5), Fp(3).mul(&v, 5));
    }

    #[test]
    fn normalizer_makes_primitive_positive() {
        let cs = [ZInt::S(-4), ZInt::S(6), ZInt::S(10)];
        let g = ZInt::normalizer(cs.iter(), ()).unwrap();
        assert_eq!(g, ZInt::S(-2));
        assert_eq!(ZInt::normalizer([ZInt::S(3), ZInt::S(2)].iter(), ()), None);
    }
}
