//! Buchberger's algorithm on sparse vectors over a graded free module.
//!
//! Ideals are handled as rank-1 modules. Every (term, position) pair is mapped
//! to a `u128` key whose numeric order is the module order, so comparisons are
//! single integer compares and multiplying by a monomial adds a fixed delta.

use std::cmp::Ordering;

use super::scalar::Scalar;
use crate::poly::{Term, SLOTS};

/// Ring part of an engine order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RingOrd {
    DegRevLex,
    /// DegRevLex with the variable order reversed, so `X_0` is the smallest
    /// variable. Used for saturation by `X_0`.
    DegRevLexX0Last,
    Lex,
    /// Slots `>= split` form a dominating block.
    Elimination(usize),
}

/// Full module order: optional block split on positions, then (for graded
/// ring orders) total degree including twists, then the ring order on the
/// monomial, then position with lower index larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct EOrder {
    pub ring: RingOrd,
    pub twists: Vec<u32>,
    /// Positions below this index dominate all others.
    pub split: Option<usize>,
}

fn put(bytes: &mut [u8; 16], i: &mut usize, v: u8) {
    bytes[*i] = v;
    *i += 1;
}

fn revlex_bytes(t: &Term, slots: impl Iterator<Item = usize>, bytes: &mut [u8; 16], i: &mut usize) {
    for s in slots {
        put(bytes, i, 255 - t.exponents()[s]);
    }
}

impl EOrder {
    pub fn new(ring: RingOrd, twists: Vec<u32>) -> Self {
        EOrder {
            ring,
            twists,
            split: None,
        }
    }

    fn graded(&self) -> bool {
        matches!(self.ring, RingOrd::DegRevLex | RingOrd::DegRevLexX0Last)
    }

    pub fn total_degree(&self, t: &Term, pos: usize) -> u32 {
        t.degree() + self.twists[pos]
    }

    pub fn key(&self, t: &Term, pos: usize) -> u128 {
        let mut b = [0u8; 16];
        let mut i = 0;
        let block = match self.split {
            Some(s) if pos < s => 1,
            _ => 0,
        };
        put(&mut b, &mut i, block);
        let total = if self.graded() {
            u8::try_from(self.total_degree(t, pos)).expect("total degree exceeds 255")
        } else {
            0
        };
        put(&mut b, &mut i, total);
        match self.ring {
            RingOrd::DegRevLex => {
                put(&mut b, &mut i, t.degree() as u8);
                revlex_bytes(t, (0..SLOTS).rev(), &mut b, &mut i);
            }
            RingOrd::DegRevLexX0Last => {
                put(&mut b, &mut i, t.degree() as u8);
                revlex_bytes(t, 0..SLOTS, &mut b, &mut i);
            }
            RingOrd::Lex => {
                for s in 0..SLOTS {
                    put(&mut b, &mut i, t.exponents()[s]);
                }
            }
            RingOrd::Elimination(split) => {
                let hi: u32 = (split..SLOTS).map(|s| t.exp(s)).sum();
                put(&mut b, &mut i, hi as u8);
                revlex_bytes(t, (split..SLOTS).rev(), &mut b, &mut i);
                put(&mut b, &mut i, (t.degree() - hi) as u8);
                revlex_bytes(t, (0..split).rev(), &mut b, &mut i);
            }
        }
        let p = u16::try_from(pos).expect("module rank exceeds 65535");
        b[14..16].copy_from_slice(&(u16::MAX - p).to_be_bytes());
        u128::from_be_bytes(b)
    }

    /// `key(m * t, pos) == key(m, pos).wrapping_add(delta(t))` for all `m`, `pos`.
    pub fn delta(&self, t: &Term) -> u128 {
        self.key(t, 0).wrapping_sub(self.key(&Term::one(), 0))
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ETerm<S> {
    pub key: u128,
    pub mono: Term,
    pub pos: u32,
    pub c: S,
}

/// Sparse vector, terms strictly decreasing by key.
#[derive(Clone, Debug, Default)]
pub(crate) struct Vector<S> {
    pub terms: Vec<ETerm<S>>,
}

impl<S: Scalar> Vector<S> {
    /// Builds a vector from unsorted, possibly repeated terms.
    pub fn from_terms(ord: &EOrder, raw: Vec<(Term, usize, S)>, cx: S::Ctx) -> Self {
        let mut terms: Vec<ETerm<S>> = raw
            .into_iter()
            .filter(|(_, _, c)| !c.is_zero())
            .map(|(m, p, c)| ETerm {
                key: ord.key(&m, p),
                mono: m,
                pos: p as u32,
                c,
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        let mut out: Vec<ETerm<S>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.key == t.key => {
                    last.c = last.c.mul_sub(&S::one(cx), &t.c, &S::one(cx).neg(cx), cx);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ETerm<S> {
        &self.terms[0]
    }

    pub fn normalize(&mut self, cx: S::Ctx) {
        if let Some(g) = S::normalizer(self.terms.iter().map(|t| &t.c), cx) {
            for t in &mut self.terms {
                t.c = t.c.apply_normalizer(&g, cx);
            }
        }
    }

    /// `t * self`.
    pub fn mul_term(&self, t: &Term, ord: &EOrder) -> Self {
        let d = ord.delta(t);
        Vector {
            terms: self
                .terms
                .iter()
                .map(|e| ETerm {
                    key: e.key.wrapping_add(d),
                    mono: e.mono.checked_mul(t).expect("exponent overflow"),
                    pos: e.pos,
                    c: e.c.clone(),
                })
                .collect(),
        }
    }
}

/// `u * a - v * t * g`.
fn sub_mul<S: Scalar>(a: &[ETerm<S>], u: &S, v: &S, t: &Term, g: &[ETerm<S>], ord: &EOrder, cx: S::Ctx) -> Vec<ETerm<S>> {
    let d = ord.delta(t);
    let mut out = Vec::with_capacity(a.len() + g.len());
    let zero = S::default();
    let (mut i, mut j) = (0, 0);
    let scale = |c: &S| if u.is_one() { c.clone() } else { c.mul(u, cx) };
    while i < a.len() || j < g.len() {
        let gk = g.get(j).map(|e| e.key.wrapping_add(d));
        let ord_ij = match (a.get(i), gk) {
            (Some(x), Some(k)) => x.key.cmp(&k),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord_ij {
            Ordering::Greater => {
                let x = &a[i];
                out.push(ETerm {
                    key: x.key,
                    mono: x.mono,
                    pos: x.pos,
                    c: scale(&x.c),
                });
                i += 1;
            }
            Ordering::Less => {
                let y = &g[j];
                out.push(ETerm {
                    key: gk.unwrap(),
                    mono: y.mono.checked_mul(t).expect("exponent overflow"),
                    pos: y.pos,
                    c: zero.mul_sub(u, &y.c, v, cx),
                });
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].c.mul_sub(u, &g[j].c, v, cx);
                if !c.is_zero() {
                    out.push(ETerm {
                        key: a[i].key,
                        mono: a[i].mono,
                        pos: a[i].pos,
                        c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
struct LeadInfo {
    pos: u32,
    mono: Term,
    mask: u32,
}

fn lead_info<S>(v: &Vector<S>) -> LeadInfo {
    let l = &v.terms[0];
    LeadInfo {
        pos: l.pos,
        mono: l.mono,
        mask: l.mono.support_mask(),
    }
}

/// A set of reducers with their leading data cached.
pub(crate) struct Reducers<'a, S> {
    elems: Vec<&'a Vector<S>>,
    leads: Vec<LeadInfo>,
}

impl<'a, S: Scalar> Reducers<'a, S> {
    pub fn new(elems: impl IntoIterator<Item = &'a Vector<S>>) -> Self {
        let elems: Vec<&Vector<S>> = elems.into_iter().filter(|v| !v.is_zero()).collect();
        let leads = elems.iter().map(|v| lead_info(v)).collect();
        Reducers { elems, leads }
    }

    fn find(&self, e: &ETerm<S>) -> Option<usize> {
        let mask = e.mono.support_mask();
        self.leads
            .iter()
            .position(|l| l.pos == e.pos && l.mask & !mask == 0 && l.mono.divides(&e.mono))
    }

    /// Full reduction. Returns `(r, lambda)` with `r = lambda * f - (combination of reducers)`.
    pub fn reduce(&self, f: Vector<S>, ord: &EOrder, cx: S::Ctx, remove_content: bool) -> (Vector<S>, S) {
        let mut done: Vec<ETerm<S>> = Vec::new();
        let mut rest = f.terms;
        let mut idx = 0;
        let mut lambda = S::one(cx);
        let mut steps = 0usize;
        while idx < rest.len() {
            match self.find(&rest[idx]) {
                None => {
                    let e = std::mem::replace(
                        &mut rest[idx],
                        ETerm {
                            key: 0,
                            mono: Term::one(),
                            pos: 0,
                            c: S::default(),
                        },
                    );
                    done.push(e);
                    idx += 1;
                }
                Some(k) => {
                    let g = self.elems[k];
                    let (u, v) = S::cancel(&rest[idx].c, &g.terms[0].c, cx);
                    let t = g.terms[0].mono.quotient_of(&rest[idx].mono);
                    rest = sub_mul(&rest[idx..], &u, &v, &t, &g.terms, ord, cx);
                    idx = 0;
                    if !u.is_one() {
                        for e in &mut done {
                            e.c = e.c.mul(&u, cx);
                        }
                        lambda = lambda.mul(&u, cx);
                    }
                    steps += 1;
                    if remove_content && steps % 8 == 0 {
                        let big = rest.first().map(|e| e.c.is_large()).unwrap_or(false)
                            || done.first().map(|e| e.c.is_large()).unwrap_or(false);
                        if big {
                            let g = S::normalizer(done.iter().chain(rest.iter()).map(|e| &e.c), cx);
                            if let Some(g) = g {
                                for e in done.iter_mut().chain(rest.iter_mut()) {
                                    e.c = e.c.apply_normalizer(&g, cx);
                                }
                            }
                        }
                    }
                }
            }
        }
        (Vector { terms: done }, lambda)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    pos: u32,
    key: u128,
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Options {
    /// Discard pairs and generators above this total degree (graded input only).
    pub max_degree: Option<u32>,
    /// Use the coprime-leading-term criterion (valid only for rank 1).
    pub product_criterion: bool,
}

struct State<'o, S: Scalar> {
    ord: &'o EOrder,
    cx: S::Ctx,
    opts: Options,
    basis: Vec<Vector<S>>,
    leads: Vec<LeadInfo>,
    redundant: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'o, S: Scalar> State<'o, S> {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.leads[i].mono.lcm(&self.leads[j].mono);
        let pos = self.leads[i].pos;
        Pair {
            i,
            j,
            lcm,
            pos,
            key: self.ord.key(&lcm, pos as usize),
        }
    }

    fn coprime(&self, p: &Pair) -> bool {
        self.opts.product_criterion && self.leads[p.i].mono.is_coprime(&self.leads[p.j].mono)
    }

    fn update(&mut self, h: Vector<S>) {
        let k = self.basis.len();
        let lk = lead_info(&h);
        self.basis.push(h);
        self.leads.push(lk);
        self.redundant.push(false);

        let mut c: Vec<Pair> = (0..k)
            .filter(|&i| !self.redundant[i] && self.leads[i].pos == lk.pos)
            .map(|i| self.make_pair(i, k))
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let keep = self.coprime(&p)
                || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if keep {
                d.push(p);
            }
        }
        d.retain(|p| !self.coprime(p));

        let leads = &self.leads;
        self.pairs.retain(|p| {
            if p.pos != lk.pos || !lk.mono.divides(&p.lcm) {
                return true;
            }
            let lik = leads[p.i].mono.lcm(&lk.mono);
            let ljk = leads[p.j].mono.lcm(&lk.mono);
            lik == p.lcm || ljk == p.lcm
        });
        self.pairs.extend(d);

        for i in 0..k {
            if !self.redundant[i] && self.leads[i].pos == lk.pos && lk.mono.divides(&self.leads[i].mono) {
                self.redundant[i] = true;
            }
        }
    }

    fn reducers(&self) -> Reducers<'_, S> {
        Reducers::new(
            self.basis
                .iter()
                .zip(&self.redundant)
                .filter(|(_, r)| !**r)
                .map(|(v, _)| v),
        )
    }

    fn s_vector(&self, p: &Pair) -> Vector<S> {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let ti = self.leads[p.i].mono.quotient_of(&p.lcm);
        let tj = self.leads[p.j].mono.quotient_of(&p.lcm);
        let (u, v) = S::cancel(&gi.terms[0].c, &gj.terms[0].c, self.cx);
        let a = gi.mul_term(&ti, self.ord);
        Vector {
            terms: sub_mul(&a.terms, &u, &v, &tj, &gj.terms, self.ord, self.cx),
        }
    }

    fn too_high(&self, mono: &Term, pos: usize) -> bool {
        match self.opts.max_degree {
            Some(d) => self.ord.total_degree(mono, pos) > d,
            None => false,
        }
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// increasing leading key. Each element is normalized.
pub(crate) fn buchberger<S: Scalar>(gens: Vec<Vector<S>>, ord: &EOrder, cx: S::Ctx, opts: Options) -> Vec<Vector<S>> {
    let mut st = State {
        ord,
        cx,
        opts,
        basis: Vec::new(),
        leads: Vec::new(),
        redundant: Vec::new(),
        pairs: Vec::new(),
    };
    let mut queue: Vec<Vector<S>> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .filter(|g| {
            let l = g.lead();
            !st.too_high(&l.mono, l.pos as usize)
        })
        .collect();
    // Pop from the back: smallest leading key last.
    queue.sort_by(|a, b| b.lead().key.cmp(&a.lead().key));

    loop {
        if let Some(d) = opts.max_degree {
            st.pairs.retain(|p| ord.total_degree(&p.lcm, p.pos as usize) <= d);
        }
        let best_pair = st
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| p.key)
            .map(|(i, p)| (i, p.key));
        let next_gen = queue.last().map(|g| g.lead().key);
        let take_pair = match (best_pair, next_gen) {
            (None, None) => break,
            (Some((i, pk)), Some(gk)) if pk < gk => Some(i),
            (Some((i, _)), None) => Some(i),
            _ => None,
        };
        let candidate = match take_pair {
            Some(i) => {
                let p = st.pairs.swap_remove(i);
                st.s_vector(&p)
            }
            None => queue.pop().unwrap(),
        };
        let (mut h, _) = st.reducers().reduce(candidate, ord, cx, true);
        if !h.is_zero() {
            h.normalize(cx);
            st.update(h);
        }
    }

    let minimal: Vec<Vector<S>> = st
        .basis
        .into_iter()
        .zip(st.redundant)
        .filter(|(_, r)| !*r)
        .map(|(v, _)| v)
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v));
        let g = &minimal[i];
        let head = Vector {
            terms: vec![g.terms[0].clone()],
        };
        let (tail, lambda) = others.reduce(
            Vector {
                terms: g.terms[1..].to_vec(),
            },
            ord,
            cx,
            false,
        );
        let mut v = Vector {
            terms: head.terms,
        };
        v.terms[0].c = v.terms[0].c.mul(&lambda, cx);
        v.terms.extend(tail.terms);
        v.normalize(cx);
        reduced.push(v);
    }
    reduced.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    reduced
}

/// Checks that every S-vector of `gb` reduces to zero.
pub(crate) fn is_groebner<S: Scalar>(gb: &[Vector<S>], ord: &EOrder, cx: S::Ctx) -> bool {
    let red = Reducers::new(gb.iter());
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let (a, b) = (gb[i].lead(), gb[j].lead());
            if a.pos != b.pos {
                continue;
            }
            let lcm = a.mono.lcm(&b.mono);
            let ti = a.mono.quotient_of(&lcm);
            let tj = b.mono.quotient_of(&lcm);
            let (u, v) = S::cancel(&a.c, &b.c, cx);
            let s = Vector {
                terms: sub_mul(&gb[i].mul_term(&ti, ord).terms, &u, &v, &tj, &gb[j].terms, ord, cx),
            };
            if !red.reduce(s, ord, cx, true).0.is_zero() {
                return false;
            }
        }
    }
    true
}
