//! Sparse multivariate polynomials over [`FieldSpec`] coefficients.
//!
//! Variable `X_i` always lives in exponent slot `i`. The projective ring
//! `K[X_0..X_n]` uses slots `0..=n`; the affine ring `K[x_1..x_n]` uses slots
//! `1..=n` and keeps slot 0 at zero, so dehomogenizing is just clearing slot 0.
//! One extra slot past the largest supported ring is kept free for the
//! auxiliary variable used by ideal intersection.

use std::cmp::Ordering;
use std::fmt;

use crate::coeff::{FieldElem, FieldSpec};
use crate::error::{Error, Result};

/// Largest number of ring variables (`n + 1` for the projective ring).
pub const MAX_VARS: usize = 9;

/// Exponent slots per term: the ring variables plus one auxiliary slot.
pub const SLOTS: usize = MAX_VARS + 1;

/// Largest exponent or total degree a term may carry.
pub const MAX_DEGREE: u32 = u8::MAX as u32;

/// A monomial `X^a`. Exponents are stored per slot; the total degree is cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    exps: [u8; SLOTS],
    deg: u16,
}

impl Term {
    pub const fn one() -> Self {
        Term {
            exps: [0; SLOTS],
            deg: 0,
        }
    }

    pub fn var(slot: usize) -> Self {
        let mut t = Term::one();
        t.exps[slot] = 1;
        t.deg = 1;
        t
    }

    /// Builds a term from exponents for slots `0..exps.len()`.
    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > SLOTS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut t = Term::one();
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_DEGREE {
                return Err(Error::DegreeOverflow(MAX_DEGREE));
            }
            t.exps[i] = e as u8;
            deg += e;
        }
        if deg > MAX_DEGREE {
            return Err(Error::DegreeOverflow(MAX_DEGREE));
        }
        t.deg = deg as u16;
        Ok(t)
    }

    pub fn exp(&self, slot: usize) -> u32 {
        self.exps[slot] as u32
    }

    pub fn exponents(&self) -> &[u8; SLOTS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &Term) -> Option<Term> {
        let mut out = *self;
        for i in 0..SLOTS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        let deg = self.deg + other.deg;
        if deg as u32 > MAX_DEGREE {
            return None;
        }
        out.deg = deg;
        Some(out)
    }

    pub fn mul(&self, other: &Term) -> Result<Term> {
        self.checked_mul(other).ok_or(Error::DegreeOverflow(MAX_DEGREE))
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.deg <= other.deg && (0..SLOTS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    pub fn quotient_of(&self, other: &Term) -> Term {
        debug_assert!(self.divides(other));
        let mut out = *other;
        for i in 0..SLOTS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        out
    }

    pub fn lcm(&self, other: &Term) -> Term {
        let mut out = Term::one();
        let mut deg = 0u16;
        for i in 0..SLOTS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u16;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        (0..SLOTS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit `i` set iff slot `i` has a positive exponent.
    pub fn support_mask(&self) -> u32 {
        let mut m = 0;
        for i in 0..SLOTS {
            if self.exps[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub(crate) fn set_exp(&mut self, slot: usize, e: u8) {
        self.deg = self.deg - self.exps[slot] as u16 + e as u16;
        self.exps[slot] = e;
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term{:?}", &self.exps)
    }
}

/// Degree reverse lexicographic comparison with `X_0 > X_1 > ...`.
pub fn degrevlex_cmp(a: &Term, b: &Term) -> Ordering {
    a.deg.cmp(&b.deg).then_with(|| {
        for i in (0..SLOTS).rev() {
            if a.exps[i] != b.exps[i] {
                return b.exps[i].cmp(&a.exps[i]);
            }
        }
        Ordering::Equal
    })
}

/// A monomial ordering on [`Term`]s.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Variables in slots `>= split` form an eliminated block that dominates
    /// the rest; DegRevLex is used inside each block.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(split) => {
                let (ha, la) = split_term(a, *split);
                let (hb, lb) = split_term(b, *split);
                degrevlex_cmp(&ha, &hb).then_with(|| degrevlex_cmp(&la, &lb))
            }
        }
    }
}

fn split_term(t: &Term, split: usize) -> (Term, Term) {
    let mut hi = *t;
    let mut lo = *t;
    for i in 0..SLOTS {
        if i < split {
            hi.set_exp(i, 0);
        } else {
            lo.set_exp(i, 0);
        }
    }
    (hi, lo)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `K[X_0, ..., X_n]`.
    Projective,
    /// `K[x_1, ..., x_n]`.
    Affine,
}

/// Ring descriptor: field, ambient dimension `n` and projective/affine flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldSpec,
    n: usize,
    kind: RingKind,
}

impl Ring {
    pub fn new(field: FieldSpec, n: usize, kind: RingKind) -> Result<Self> {
        if n + 1 > MAX_VARS {
            return Err(Error::TooManyVariables(n + 1));
        }
        Ok(Ring { field, n, kind })
    }

    pub fn projective(field: FieldSpec, n: usize) -> Result<Self> {
        Ring::new(field, n, RingKind::Projective)
    }

    pub fn affine(field: FieldSpec, n: usize) -> Result<Self> {
        Ring::new(field, n, RingKind::Affine)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_projective(&self) -> bool {
        self.kind == RingKind::Projective
    }

    /// Slot of the first variable (0 for projective, 1 for affine).
    pub fn first_var(&self) -> usize {
        match self.kind {
            RingKind::Projective => 0,
            RingKind::Affine => 1,
        }
    }

    /// Slots of the ring variables.
    pub fn vars(&self) -> std::ops::RangeInclusive<usize> {
        self.first_var()..=self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1 - self.first_var()
    }

    pub fn has_var(&self, slot: usize) -> bool {
        slot >= self.first_var() && slot <= self.n
    }

    pub fn var_name(&self, slot: usize) -> String {
        match self.kind {
            RingKind::Projective => format!("X{slot}"),
            RingKind::Affine => format!("x{slot}"),
        }
    }

    pub fn to_affine(&self) -> Ring {
        Ring {
            kind: RingKind::Affine,
            ..*self
        }
    }

    pub fn to_projective(&self) -> Ring {
        Ring {
            kind: RingKind::Projective,
            ..*self
        }
    }
}

/// All terms of degree `d` in the ring variables, strictly decreasing in DegRevLex.
pub fn terms_of_degree(ring: &Ring, d: u32) -> Vec<Term> {
    let vars: Vec<usize> = ring.vars().collect();
    let mut out = Vec::new();
    let mut cur = Term::one();
    fill_terms(&vars, 0, d, &mut cur, &mut out);
    out.sort_by(|a, b| degrevlex_cmp(b, a));
    out
}

fn fill_terms(vars: &[usize], idx: usize, left: u32, cur: &mut Term, out: &mut Vec<Term>) {
    if idx + 1 == vars.len() {
        cur.set_exp(vars[idx], left as u8);
        out.push(*cur);
        cur.set_exp(vars[idx], 0);
        return;
    }
    for e in 0..=left {
        cur.set_exp(vars[idx], e as u8);
        fill_terms(vars, idx + 1, left - e, cur, out);
    }
    cur.set_exp(vars[idx], 0);
}

/// A polynomial: terms strictly decreasing in DegRevLex, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Term, FieldElem)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: FieldElem) -> Self {
        Polynomial::monomial(ring, Term::one(), c)
    }

    pub fn one(ring: Ring) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn monomial(ring: Ring, t: Term, c: FieldElem) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(t, c)] };
        Polynomial { ring, terms }
    }

    pub fn var(ring: Ring, slot: usize) -> Result<Self> {
        if !ring.has_var(slot) {
            return Err(Error::WrongRing(ring.var_name(slot)));
        }
        Ok(Polynomial::monomial(ring, Term::var(slot), ring.field.one()))
    }

    /// Normalizes an arbitrary list of terms: sorts, merges equal terms, drops zeros.
    pub fn from_terms(ring: Ring, mut terms: Vec<(Term, FieldElem)>) -> Self {
        terms.sort_by(|a, b| degrevlex_cmp(&b.0, &a.0));
        let mut out: Vec<(Term, FieldElem)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => lc.add_assign(&c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Term, FieldElem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| degrevlex_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Term, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term and coefficient in DegRevLex.
    pub fn leading(&self) -> Option<&(Term, FieldElem)> {
        self.terms.first()
    }

    /// Maximal total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.degree()).max()
    }

    /// The common degree of all terms, if there is one. Zero has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(t, _)| t.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn constant_coeff(&self) -> FieldElem {
        match self.terms.last() {
            Some((t, c)) if t.is_one() => c.clone(),
            _ => self.ring.field.zero(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ta, ca) = &self.terms[i];
            let (tb, cb) = &other.terms[j];
            match degrevlex_cmp(ta, tb) {
                Ordering::Greater => {
                    out.push((*ta, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*tb, if negate { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ta, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(t, c)| (*t, if negate { -c } else { c.clone() })),
        );
        Polynomial::from_sorted_terms(self.ring, out)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(t, c)| (*t, -c)).collect();
        Polynomial::from_sorted_terms(self.ring, terms)
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (*t, a * c)).collect();
        Polynomial::from_sorted_terms(self.ring, terms)
    }

    /// Multiplies by `c * t`.
    pub fn mul_term(&self, t: &Term, c: &FieldElem) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (s, a) in &self.terms {
            terms.push((s.mul(t)?, a * c));
        }
        Ok(Polynomial::from_sorted_terms(self.ring, terms))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                terms.push((ta.mul(tb)?, ca * cb));
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to the variable in `slot`.
    pub fn partial_derivative(&self, slot: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (t, c) in &self.terms {
            let e = t.exp(slot);
            if e == 0 {
                continue;
            }
            let d = c.scale_int(e as u64);
            if d.is_zero() {
                continue;
            }
            let mut s = *t;
            s.set_exp(slot, (e - 1) as u8);
            terms.push((s, d));
        }
        Polynomial::from_terms(self.ring, terms)
    }

    /// Substitutes `X_0 = 1`, landing in the affine ring.
    pub fn dehomogenize(&self) -> Polynomial {
        let ring = self.ring.to_affine();
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut s = *t;
                s.set_exp(0, 0);
                (s, c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Multiplies every term by the power of `X_0` that brings it to degree `d`.
    pub fn homogenize(&self, d: u32) -> Result<Polynomial> {
        let deg = self.degree().unwrap_or(0);
        if d < deg {
            return Err(Error::DegreeTooSmall { target: d, degree: deg });
        }
        if d > MAX_DEGREE {
            return Err(Error::DegreeOverflow(MAX_DEGREE));
        }
        let ring = self.ring.to_projective();
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut s = *t;
                s.set_exp(0, (t.exp(0) + d - t.degree()) as u8);
                (s, c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Evaluates at a point given by one value per slot `0..=n`.
    pub fn evaluate(&self, point: &[FieldElem]) -> FieldElem {
        let mut acc = self.ring.field.zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..t.exp(i) {
                    v.mul_assign(x);
                }
            }
            acc.add_assign(&v);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || t.is_one() {
                factors.push(abs.to_string());
            }
            for v in self.ring.vars() {
                match t.exp(v) {
                    0 => {}
                    1 => factors.push(self.ring.var_name(v)),
                    e => factors.push(format!("{}^{e}", self.ring.var_name(v))),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p2(field: FieldSpec) -> Ring {
        Ring::projective(field, 2).unwrap()
    }

    fn x(ring: Ring, i: usize) -> Polynomial {
        Polynomial::var(ring, i).unwrap()
    }

    fn c(ring: Ring, v: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(v))
    }

    #[test]
    fn difference_of_squares() {
        let r = p2(FieldSpec::Rationals);
        let a = x(r, 1).add(&x(r, 0)).unwrap();
        let b = x(r, 1).sub(&x(r, 0)).unwrap();
        let expect = x(r, 1).pow(2).unwrap().sub(&x(r, 0).pow(2).unwrap()).unwrap();
        assert_eq!(a.mul(&b).unwrap(), expect);
        assert_eq!(a.add(&Polynomial::zero(r)).unwrap(), a);
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = p2(FieldSpec::prime(2).unwrap());
        let s = x(r, 1).add(&x(r, 0)).unwrap().pow(2).unwrap();
        let expect = x(r, 1).pow(2).unwrap().add(&x(r, 0).pow(2).unwrap()).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = x(p2(FieldSpec::Rationals), 1);
        let b = x(p2(FieldSpec::prime(3).unwrap()), 1);
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn derivatives() {
        let r = p2(FieldSpec::Rationals);
        let f = x(r, 1).pow(2).unwrap().add(&x(r, 0).pow(2).unwrap()).unwrap();
        assert_eq!(f.partial_derivative(1), x(r, 1).scale(&r.field().from_i64(2)));
        let r2 = p2(FieldSpec::prime(2).unwrap());
        assert!(x(r2, 1).pow(2).unwrap().partial_derivative(1).is_zero());
        let g2 = x(r, 0)
            .mul(&x(r, 1).pow(2).unwrap())
            .unwrap()
            .add(&x(r, 1).pow(3).unwrap())
            .unwrap()
            .add(&x(r, 2).pow(3).unwrap())
            .unwrap();
        assert_eq!(g2.partial_derivative(2), x(r, 2).pow(2).unwrap().scale(&r.field().from_i64(3)));
    }

    #[test]
    fn dehomogenize_examples() {
        let r = p2(FieldSpec::Rationals);
        let a = r.to_affine();
        let f = x(r, 1).pow(2).unwrap().add(&x(r, 0).pow(2).unwrap()).unwrap();
        assert_eq!(f.dehomogenize(), x(a, 1).pow(2).unwrap().add(&c(a, 1)).unwrap());
        assert_eq!(x(r, 0).pow(3).unwrap().dehomogenize(), c(a, 1));
        let g = x(r, 2)
            .pow(2)
            .unwrap()
            .sub(&x(r, 0).scale(&r.field().from_i64(2)))
            .unwrap()
            .pow(2)
            .unwrap();
        let h = x(a, 2).pow(2).unwrap().sub(&c(a, 2)).unwrap().pow(2).unwrap();
        assert_eq!(g.dehomogenize(), h);
    }

    #[test]
    fn homogenize_examples() {
        let r = p2(FieldSpec::Rationals);
        let a = r.to_affine();
        let f = x(a, 1).pow(2).unwrap().add(&c(a, 1)).unwrap();
        assert_eq!(f.homogenize(2).unwrap(), x(r, 1).pow(2).unwrap().add(&x(r, 0).pow(2).unwrap()).unwrap());
        assert_eq!(c(a, 1).homogenize(3).unwrap(), x(r, 0).pow(3).unwrap());
        let g = x(a, 1).mul(&x(a, 2)).unwrap();
        let expect = x(r, 0).pow(2).unwrap().mul(&x(r, 1)).unwrap().mul(&x(r, 2)).unwrap();
        assert_eq!(g.homogenize(4).unwrap(), expect);
        assert_eq!(g.homogenize(1), Err(Error::DegreeTooSmall { target: 1, degree: 2 }));
    }

    #[test]
    fn enumerates_terms_in_degrevlex_order() {
        let a2 = Ring::affine(FieldSpec::Rationals, 2).unwrap();
        let ts = terms_of_degree(&a2, 2);
        let expect: Vec<Term> = [[0, 2, 0], [0, 1, 1], [0, 0, 2]]
            .iter()
            .map(|e| Term::from_exponents(e).unwrap())
            .collect();
        assert_eq!(ts, expect);
        assert_eq!(terms_of_degree(&a2, 1).len(), 2);

        // Oracle: brute-force every exponent vector with entries <= 2 and sort by the definition.
        let a3 = Ring::affine(FieldSpec::Rationals, 3).unwrap();
        let mut brute = Vec::new();
        for e1 in 0..=2u32 {
            for e2 in 0..=2u32 {
                for e3 in 0..=2u32 {
                    if e1 + e2 + e3 == 2 {
                        brute.push([0, e1, e2, e3]);
                    }
                }
            }
        }
        // Same degree; the larger term has the smaller exponent in the last differing variable.
        brute.sort_by(|a, b| {
            for i in (0..4).rev() {
                if a[i] != b[i] {
                    return a[i].cmp(&b[i]);
                }
            }
            Ordering::Equal
        });
        let brute: Vec<Term> = brute.iter().map(|e| Term::from_exponents(e).unwrap()).collect();
        let ts = terms_of_degree(&a3, 2);
        assert_eq!(ts.len(), 6);
        assert_eq!(ts, brute);
        assert_eq!(ts[0], Term::from_exponents(&[0, 2]).unwrap());
        assert_eq!(ts[5], Term::from_exponents(&[0, 0, 0, 2]).unwrap());
    }

    #[test]
    fn display_is_readable() {
        let r = p2(FieldSpec::Rationals);
        let f = x(r, 1).sub(&x(r, 0)).unwrap().pow(2).unwrap();
        assert_eq!(f.to_string(), "X0^2 - 2*X0*X1 + X1^2");
        assert_eq!(Polynomial::zero(r).to_string(), "0");
        assert_eq!(c(r, -3).to_string(), "-3");
    }

    fn arb_term(nslots: usize) -> impl Strategy<Value = Term> {
        proptest::collection::vec(0u32..4, nslots).prop_map(|e| Term::from_exponents(&e).unwrap())
    }

    fn arb_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
        let n = ring.n();
        let first = ring.first_var();
        proptest::collection::vec((proptest::collection::vec(0u32..4, n + 1), -5i64..6), 0..6).prop_map(
            move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(mut e, c)| {
                        if first == 1 {
                            e[0] = 0;
                        }
                        (Term::from_exponents(&e).unwrap(), ring.field().from_i64(c))
                    })
                    .collect();
                Polynomial::from_terms(ring, terms)
            },
        )
    }

    fn homogeneous_part(f: &Polynomial) -> Polynomial {
        match f.degree() {
            None => f.clone(),
            Some(d) => Polynomial::from_terms(
                *f.ring(),
                f.terms().iter().filter(|(t, _)| t.degree() == d).cloned().collect(),
            ),
        }
    }

    proptest! {
        #[test]
        fn euler_relation(f in arb_poly(p2(FieldSpec::Rationals)), p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)]) {
            let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::prime(p).unwrap() };
            let ring = p2(field);
            let f = Polynomial::from_terms(ring, f.terms().iter().map(|(t, c)| (*t, field.parse_elem(&c.to_string()).unwrap())).collect());
            let f = homogeneous_part(&f);
            let d = f.degree().unwrap_or(0);
            let mut lhs = Polynomial::zero(ring);
            for i in 0..=2 {
                lhs = lhs.add(&x(ring, i).mul(&f.partial_derivative(i)).unwrap()).unwrap();
            }
            prop_assert_eq!(lhs, f.scale(&field.from_i64(d as i64)));
        }

        #[test]
        fn homogenize_round_trip(f in arb_poly(Ring::affine(FieldSpec::Rationals, 3).unwrap()), extra in 0u32..3) {
            let d = f.degree().unwrap_or(0) + extra;
            prop_assert_eq!(f.homogenize(d).unwrap().dehomogenize(), f);
        }

        #[test]
        fn degrevlex_is_graded_and_multiplicative(a in arb_term(4), b in arb_term(4), c in arb_term(4)) {
            if a.degree() > b.degree() {
                prop_assert_eq!(degrevlex_cmp(&a, &b), Ordering::Greater);
            }
            let ord = degrevlex_cmp(&a, &b);
            prop_assert_eq!(degrevlex_cmp(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()), ord);
            prop_assert_eq!(ord == Ordering::Equal, a == b);
        }

        #[test]
        fn other_orders_are_multiplicative(a in arb_term(4), b in arb_term(4), c in arb_term(4)) {
            for ord in [MonomialOrder::Lex, MonomialOrder::Elimination(3)] {
                let o = ord.cmp(&a, &b);
                prop_assert_eq!(ord.cmp(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()), o);
                prop_assert_eq!(ord.cmp(&b, &a), o.reverse());
            }
        }

        #[test]
        fn multiplication_commutes_and_distributes(f in arb_poly(p2(FieldSpec::Rationals)), g in arb_poly(p2(FieldSpec::Rationals)), h in arb_poly(p2(FieldSpec::Rationals))) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
            prop_assert!(f.sub(&f).unwrap().is_zero());
        }
    }
}
