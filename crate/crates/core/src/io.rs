//! Polynomial text syntax, JSON scheme files and result documents.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := literal | variable | '(' expr ')'
//! ```
//!
//! Literals are integers or `a/b` fractions. Variables are `X0..Xn` in the
//! projective ring and `x1..xn` in the affine ring. Juxtaposition is not
//! multiplication: `X1X2` and `2X1` are rejected.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coeff::{FieldElem, FieldSpec};
use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::poly::{Polynomial, Ring};
use crate::schemes::{FatPoint, LocalRingProfile, SchemeCtx, SchemeSource, SchemeSpec};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            // a fraction literal: digits '/' digits
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((start, Tok::Num(chars[start..i].iter().collect())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Var(chars[start..i].iter().collect())));
        } else if "+-*^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?)?;
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::Sym('('))) {
                return Err(self.err("implicit multiplication; write `*`"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(s)) if !s.contains('/') => {
                    let e: u32 = s.parse().map_err(|_| self.err("exponent too large"))?;
                    self.at += 1;
                    return base.pow(e);
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let ring = *self.ring;
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                let pos = self.pos();
                self.at += 1;
                let c = ring.field().parse_elem(&s).map_err(|e| match e {
                    Error::Syntax { msg, .. } => Error::Syntax { pos, msg },
                    other => other,
                })?;
                Ok(Polynomial::constant(ring, c))
            }
            Some(Tok::Var(name)) => {
                self.at += 1;
                Polynomial::var(ring, variable_slot(&ring, &name)?)
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.err("expected a literal, variable or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn variable_slot(ring: &Ring, name: &str) -> Result<usize> {
    let mut chars = name.chars();
    let letter = chars.next().unwrap_or(' ');
    let digits = chars.as_str();
    let slot: usize = match (letter, digits.parse()) {
        ('X' | 'x', Ok(s)) => s,
        _ => return Err(Error::UnknownVariable(name.to_string())),
    };
    let want = if ring.is_projective() { 'X' } else { 'x' };
    if letter != want || !ring.has_var(slot) {
        return Err(Error::WrongRing(name.to_string()));
    }
    Ok(slot)
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.chars().count(),
        ring,
    };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Text form accepted back by [`parse_polynomial`].
pub fn render_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn to_elem(&self, field: FieldSpec) -> Result<FieldElem> {
        match self {
            Literal::Int(v) => Ok(field.from_i64(*v)),
            Literal::Text(s) => field.parse_elem(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct PointEntry {
    coords: Vec<Literal>,
    #[serde(default = "one")]
    multiplicity: u32,
}

fn one() -> u32 {
    1
}

/// On-disk scheme description. Exactly one of `points`, `ideal` and
/// `components` must be present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub format: u32,
    pub field: FieldSpec,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<PointEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<crate::schemes::LocalRing>>,
}

pub const FORMAT_VERSION: u32 = 1;

impl SchemeFile {
    pub fn parse(text: &str) -> Result<SchemeFile> {
        let f: SchemeFile = serde_json::from_str(text)?;
        if f.format != FORMAT_VERSION {
            return Err(Error::InvalidSpec(format!("unsupported format version {}", f.format)));
        }
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<SchemeFile> {
        SchemeFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scheme files always serialize")
    }

    pub fn to_spec(&self) -> Result<SchemeSpec> {
        let ring = Ring::projective(self.field, self.n)?;
        let parse_all = |gens: &[String]| -> Result<Vec<Polynomial>> {
            gens.iter().map(|g| parse_polynomial(g, &ring)).collect()
        };
        let source = match (&self.points, &self.ideal, &self.components) {
            (Some(pts), None, None) => SchemeSource::FatPoints(
                pts.iter()
                    .map(|p| {
                        Ok(FatPoint {
                            coords: p.coords.iter().map(|c| c.to_elem(self.field)).collect::<Result<_>>()?,
                            multiplicity: p.multiplicity,
                        })
                    })
                    .collect::<Result<_>>()?,
            ),
            (None, Some(gens), None) => SchemeSource::Ideal(parse_all(gens)?),
            (None, None, Some(comps)) => {
                SchemeSource::Components(comps.iter().map(|c| parse_all(c)).collect::<Result<_>>()?)
            }
            _ => {
                return Err(Error::InvalidSpec(
                    "exactly one of `points`, `ideal`, `components` is required".into(),
                ))
            }
        };
        Ok(SchemeSpec {
            field: self.field,
            n: self.n,
            source,
            label: self.label.clone(),
            profile: self.profile.clone().map(|rings| LocalRingProfile { rings }),
        })
    }

    pub fn from_spec(spec: &SchemeSpec) -> SchemeFile {
        let render_all = |gens: &[Polynomial]| gens.iter().map(render_polynomial).collect::<Vec<_>>();
        let mut f = SchemeFile {
            format: FORMAT_VERSION,
            field: spec.field,
            n: spec.n,
            points: None,
            ideal: None,
            components: None,
            label: spec.label.clone(),
            profile: spec.profile.clone().map(|p| p.rings),
        };
        match &spec.source {
            SchemeSource::FatPoints(pts) => {
                f.points = Some(
                    pts.iter()
                        .map(|p| PointEntry {
                            coords: p.coords.iter().map(|c| Literal::Text(c.to_string())).collect(),
                            multiplicity: p.multiplicity,
                        })
                        .collect(),
                )
            }
            SchemeSource::Ideal(g) => f.ideal = Some(render_all(g)),
            SchemeSource::Components(cs) => f.components = Some(cs.iter().map(|c| render_all(c)).collect()),
        }
        f
    }
}

/// Reads and parses a scheme file into a spec.
pub fn load_scheme(path: &Path) -> Result<SchemeSpec> {
    SchemeFile::load(path)?.to_spec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub field: String,
    pub n: usize,
    pub deg: u64,
    pub r: usize,
    pub hf: Vec<i64>,
}

impl SchemeSummary {
    pub fn of(ctx: &SchemeCtx) -> Self {
        SchemeSummary {
            label: ctx.spec().label.clone(),
            field: ctx.field().name(),
            n: ctx.n(),
            deg: ctx.deg(),
            r: ctx.r(),
            hf: ctx.hf().values.clone(),
        }
    }
}

/// One reported quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Hilbert(HilbertData),
    Flag(bool),
    Number(i64),
    Text(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Hilbert(h) => render_hilbert(h),
            Value::Flag(b) => b.to_string(),
            Value::Number(v) => v.to_string(),
            Value::Text(s) => s.clone(),
        }
    }
}

/// `values  hp H  ri R`, listing values through degree `ri + 1`.
pub fn render_hilbert(h: &HilbertData) -> String {
    let shown = (h.ri + 2).min(h.values.len()).max(1);
    let vals: Vec<String> = (0..shown).map(|i| h.at(i).to_string()).collect();
    format!("{}  hp {}  ri {}", vals.join(" "), h.hp, h.ri)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ok: Option<bool>,
}

impl Entry {
    pub fn new(name: impl Into<String>, value: Value) -> Self {
        Entry {
            name: name.into(),
            value,
            expected: None,
            ok: None,
        }
    }

    /// An entry compared against an expected value.
    pub fn check(name: impl Into<String>, value: Value, expected: Value) -> Self {
        let ok = value == expected;
        Entry {
            name: name.into(),
            value,
            expected: Some(expected),
            ok: Some(ok),
        }
    }

    /// A pass/fail line whose comparison was done by the caller.
    pub fn verdict(name: impl Into<String>, value: Value, ok: bool) -> Self {
        Entry {
            name: name.into(),
            value,
            expected: None,
            ok: Some(ok),
        }
    }
}

/// Output of one CLI command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeSummary>,
    pub results: Vec<Entry>,
}

impl ResultDocument {
    pub fn new(command: Vec<String>) -> Self {
        ResultDocument {
            command,
            scheme: None,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.results.push(e);
    }

    /// False if some compared entry failed.
    pub fn all_ok(&self) -> bool {
        self.results.iter().all(|e| e.ok != Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents always serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        if let Some(s) = &self.scheme {
            let label = s.label.as_deref().unwrap_or("scheme");
            let hf: Vec<String> = s.hf.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "{label}: field {} n {} deg {} r {} HF {}",
                s.field,
                s.n,
                s.deg,
                s.r,
                hf.join(" ")
            );
        }
        let width = self.results.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.results {
            let mut line = format!("{:width$}  {}", e.name, e.value.render());
            if let Some(x) = &e.expected {
                let _ = write!(line, "  (expected {})", x.render());
            }
            match e.ok {
                Some(true) => line.push_str("  ok"),
                Some(false) => line.push_str("  MISMATCH"),
                None => {}
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p2() -> Ring {
        Ring::projective(FieldSpec::Rationals, 2).unwrap()
    }

    #[test]
    fn parses_basic_forms() {
        let r = p2();
        let g = parse_polynomial("X1^2+X0^2", &r).unwrap();
        assert_eq!(g.len(), 2);
        let q = parse_polynomial("(X2^2-2*X0^2)^2", &r).unwrap();
        assert_eq!(q.len(), 3);
        assert_eq!(q.homogeneous_degree(), Some(4));
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let h = parse_polynomial(" - 1/2 * X1 + -X2 ", &r).unwrap();
        assert_eq!(h.to_string(), "-1/2*X1 - X2");
    }

    #[test]
    fn parse_errors() {
        let r = p2();
        assert!(matches!(parse_polynomial("X1X2", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("2X1", &r), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_polynomial("X1 +", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_polynomial("(X1", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("X1 $ X2", &r), Err(Error::Syntax { pos: 3, .. })));
        assert_eq!(parse_polynomial("y", &r), Err(Error::UnknownVariable("y".into())));
        assert_eq!(parse_polynomial("x1", &r), Err(Error::WrongRing("x1".into())));
        assert_eq!(parse_polynomial("X3", &r), Err(Error::WrongRing("X3".into())));
        let a = Ring::affine(FieldSpec::Rationals, 2).unwrap();
        assert_eq!(parse_polynomial("X0", &a), Err(Error::WrongRing("X0".into())));
        assert!(parse_polynomial("x1*x2-1", &a).is_ok());
    }

    #[test]
    fn finite_field_literals() {
        let r = Ring::projective(FieldSpec::prime(3).unwrap(), 2).unwrap();
        let p = parse_polynomial("4*X1 + 1/2*X2", &r).unwrap();
        assert_eq!(p.to_string(), "X1 + 2*X2");
        assert_eq!(parse_polynomial("1/3*X1", &r), Err(Error::DivisionByZero));
    }

    #[test]
    fn scheme_file_round_trip() {
        let text = r#"{"format": 1, "field": "F3", "n": 2, "label": "ci",
            "ideal": ["X1^2 + X2^2", "X0*X1^2 + X1^3 + X2^3"]}"#;
        let f = SchemeFile::parse(text).unwrap();
        let spec = f.to_spec().unwrap();
        let again = SchemeFile::from_spec(&spec).to_spec().unwrap();
        assert_eq!(spec, again);

        let pts = r#"{"format": 1, "field": "Q", "n": 2,
            "points": [{"coords": [1, 0, 0], "multiplicity": 2}, {"coords": ["1", "1/2", "0"]}]}"#;
        let spec = SchemeFile::parse(pts).unwrap().to_spec().unwrap();
        let SchemeSource::FatPoints(p) = &spec.source else { panic!() };
        assert_eq!(p[1].multiplicity, 1);
        assert_eq!(SchemeFile::from_spec(&spec).to_spec().unwrap(), spec);
    }

    #[test]
    fn scheme_file_rejections() {
        let two = r#"{"format": 1, "field": "Q", "n": 2, "ideal": ["X1"], "points": []}"#;
        assert!(SchemeFile::parse(two).unwrap().to_spec().is_err());
        let version = r#"{"format": 2, "field": "Q", "n": 2, "ideal": ["X1"]}"#;
        assert!(SchemeFile::parse(version).is_err());
        let unknown = r#"{"format": 1, "field": "Q", "n": 2, "ideal": ["X1"], "colour": 1}"#;
        assert!(SchemeFile::parse(unknown).is_err());
    }

    #[test]
    fn table_and_json_agree() {
        let mut doc = ResultDocument::new(vec!["kaehler".into(), "hf".into()]);
        let h = HilbertData {
            values: vec![0, 3, 8, 11, 10, 10, 10, 10],
            hp: 10,
            ri: 4,
        };
        doc.push(Entry::new("omega1", Value::Hilbert(h.clone())));
        doc.push(Entry::check("deg", Value::Number(6), Value::Number(6)));
        let table = doc.to_table();
        assert!(table.contains("0 3 8 11 10 10  hp 10  ri 4"));
        assert!(table.contains("ok"));
        let back: ResultDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert!(doc.all_ok());
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..20, 1i64..6), 0..6)
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(terms in arb_poly()) {
            let r = p2();
            let mut p = Polynomial::zero(r);
            for (e, num, den) in terms {
                let t = crate::poly::Term::from_exponents(&e).unwrap();
                let c = r.field().from_i64(num).checked_div(&r.field().from_i64(den)).unwrap();
                p = p.add(&Polynomial::monomial(r, t, c)).unwrap();
            }
            let back = parse_polynomial(&render_polynomial(&p), &r).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
