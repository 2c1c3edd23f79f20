//! Exact rings: a fixed set of coefficient rings, polynomial and Laurent
//! polynomial rings over them, and the one truncated quotient `ℚ[t,s]/(t²)`.
//!
//! Every element carries its [`Ring`]. Arithmetic between elements of
//! different rings is an error (`try_*` methods) or a panic (operators).
//! Elements are kept in canonical form: no zero coefficients, truncation
//! applied, coefficients reduced, so structural equality is ring equality.

mod coeff;
mod hom;
mod parse;
pub mod scalars;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

pub use coeff::Base;
pub use coeff::Coeff;
pub use hom::{canonical_lift, halve_gaussian, Hom, IdealSpec, SubringSpec};

use crate::error::{Error, Result};

/// Polynomial variables, in the fixed global order used for exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    T,
    S,
    Z,
    X,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::T, Symbol::S, Symbol::Z, Symbol::X];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::T => "t",
            Symbol::S => "s",
            Symbol::Z => "z",
            Symbol::X => "x",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var {
    pub symbol: Symbol,
    /// Laurent variables admit negative exponents.
    pub laurent: bool,
}

impl Var {
    pub fn ordinary(symbol: Symbol) -> Var {
        Var { symbol, laurent: false }
    }

    pub fn laurent(symbol: Symbol) -> Var {
        Var { symbol, laurent: true }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingSpec {
    base: Base,
    vars: Vec<Var>,
    /// Terms with t-degree at or above this bound are dropped.
    t_truncation: Option<u32>,
}

/// A ring descriptor. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingSpec>);

pub type Monomial = Vec<i32>;

impl Ring {
    pub fn new(base: Base, vars: &[Var], t_truncation: Option<u32>) -> Result<Ring> {
        let mut vars = vars.to_vec();
        vars.sort_by_key(|v| v.symbol);
        if vars.windows(2).any(|w| w[0].symbol == w[1].symbol) {
            return Err(Error::Parse("repeated variable in ring".into()));
        }
        if let Some(n) = t_truncation {
            let ok = n > 0 && vars.iter().any(|v| v.symbol == Symbol::T && !v.laurent);
            if !ok {
                return Err(Error::Parse("t-truncation needs an ordinary variable t".into()));
            }
        }
        Ok(Ring(Arc::new(RingSpec { base, vars, t_truncation })))
    }

    /// Polynomial ring over `base` in ordinary variables.
    pub fn polynomial(base: Base, symbols: &[Symbol]) -> Ring {
        let vars: Vec<Var> = symbols.iter().map(|&s| Var::ordinary(s)).collect();
        Ring::new(base, &vars, None).expect("distinct symbols")
    }

    pub fn base(&self) -> Base {
        self.0.base
    }

    pub fn vars(&self) -> &[Var] {
        &self.0.vars
    }

    pub fn t_truncation(&self) -> Option<u32> {
        self.0.t_truncation
    }

    pub fn var_index(&self, symbol: Symbol) -> Option<usize> {
        self.0.vars.iter().position(|v| v.symbol == symbol)
    }

    pub fn has_var(&self, symbol: Symbol) -> bool {
        self.var_index(symbol).is_some()
    }

    pub fn is_laurent(&self, symbol: Symbol) -> bool {
        self.var_index(symbol).is_some_and(|k| self.0.vars[k].laurent)
    }

    /// The same ring with `symbol` adjoined (or re-flagged).
    pub fn with_var(&self, var: Var) -> Ring {
        let mut vars: Vec<Var> = self.0.vars.iter().copied().filter(|v| v.symbol != var.symbol).collect();
        vars.push(var);
        Ring::new(self.0.base, &vars, self.0.t_truncation).expect("valid extension")
    }

    pub fn without_var(&self, symbol: Symbol) -> Ring {
        let vars: Vec<Var> = self.0.vars.iter().copied().filter(|v| v.symbol != symbol).collect();
        let trunc = if symbol == Symbol::T { None } else { self.0.t_truncation };
        Ring::new(self.0.base, &vars, trunc).expect("valid restriction")
    }

    pub fn with_base(&self, base: Base) -> Ring {
        Ring::new(base, &self.0.vars, self.0.t_truncation).expect("valid base change")
    }

    pub fn with_t_truncation(&self, bound: Option<u32>) -> Result<Ring> {
        Ring::new(self.0.base, &self.0.vars, bound)
    }

    pub fn descriptor(&self) -> String {
        let mut out = self.0.base.descriptor().to_string();
        if !self.0.vars.is_empty() {
            let items: Vec<String> = self
                .0
                .vars
                .iter()
                .map(|v| if v.laurent { format!("{0},{0}^-1", v.symbol) } else { v.symbol.to_string() })
                .collect();
            out.push('[');
            out.push_str(&items.join(","));
            out.push(']');
        }
        if let Some(n) = self.0.t_truncation {
            out.push_str(&format!("/(t^{n})"));
        }
        out
    }

    pub fn zero(&self) -> Elem {
        Elem { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Elem {
        self.constant(Coeff::one(self.base())).expect("same base")
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> Elem {
        self.constant(Coeff::from_int(self.base(), n)).expect("same base")
    }

    pub fn constant(&self, c: Coeff) -> Result<Elem> {
        self.monomial(c, vec![0; self.0.vars.len()])
    }

    pub fn monomial(&self, c: Coeff, exps: Monomial) -> Result<Elem> {
        if c.base() != self.base() {
            return Err(Error::RingMismatch { left: c.base().to_string(), right: self.descriptor() });
        }
        if exps.len() != self.0.vars.len() {
            return Err(Error::Dimension(format!("monomial of length {} in {}", exps.len(), self.descriptor())));
        }
        for (v, &e) in self.0.vars.iter().zip(&exps) {
            if e < 0 && !v.laurent {
                return Err(Error::Parse(format!("negative exponent on ordinary variable {}", v.symbol)));
            }
        }
        let mut terms = BTreeMap::new();
        terms.insert(exps, c);
        Ok(Elem::normalized(self.clone(), terms))
    }

    pub fn var(&self, symbol: Symbol) -> Result<Elem> {
        let k = self.var_index(symbol).ok_or_else(|| Error::UnknownVariable(symbol.to_string()))?;
        let mut exps = vec![0; self.0.vars.len()];
        exps[k] = 1;
        self.monomial(Coeff::one(self.base()), exps)
    }

    /// `i`, `σ` or `ε` as an element of this ring.
    pub fn generator(&self) -> Option<Elem> {
        self.base().generator().map(|c| self.constant(c).expect("same base"))
    }

    /// Parse an expression such as `1 + s*t - s^2t^2` or `(1-σ^2)(x-σ)`.
    pub fn parse(&self, src: &str) -> Result<Elem> {
        parse::parse_expr(self, src)
    }

    /// Parse an element, panicking on malformed input. Intended for
    /// hard-coded constants.
    pub fn elem(&self, src: &str) -> Elem {
        self.parse(src).unwrap_or_else(|e| panic!("{src:?}: {e}"))
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        let mut bases = Base::ALL;
        bases.sort_by_key(|b| std::cmp::Reverse(b.descriptor().len()));
        let base = bases
            .into_iter()
            .find(|b| s.starts_with(b.descriptor()))
            .ok_or_else(|| Error::Parse(format!("unknown ring {s:?}")))?;
        let mut rest = &s[base.descriptor().len()..];
        let mut vars: Vec<Var> = Vec::new();
        if let Some(inner) = rest.strip_prefix('[') {
            let close = inner.find(']').ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            for item in inner[..close].split(',').map(str::trim) {
                if let Some(name) = item.strip_suffix("^-1") {
                    match vars.last_mut() {
                        Some(v) if v.symbol.name() == name => v.laurent = true,
                        _ => return Err(Error::Parse(format!("{item} must follow {name} in {s:?}"))),
                    }
                } else {
                    let sym = Symbol::from_name(item).ok_or_else(|| Error::UnknownVariable(item.to_string()))?;
                    vars.push(Var::ordinary(sym));
                }
            }
            rest = &inner[close + 1..];
        }
        let truncation = match rest.trim() {
            "" => None,
            r => {
                let n = r
                    .strip_prefix("/(t^")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad ring suffix {r:?}")))?;
                Some(n)
            }
        };
        Ring::new(base, &vars, truncation)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.descriptor())
    }
}

/// An element of a [`Ring`] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Elem {
    fn normalized(ring: Ring, mut terms: BTreeMap<Monomial, Coeff>) -> Elem {
        let t_cut = ring.t_truncation().and_then(|n| ring.var_index(Symbol::T).map(|k| (k, n as i32)));
        terms.retain(|m, c| !c.is_zero() && t_cut.is_none_or(|(k, n)| m[k] < n));
        Elem { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coeff(&self, exps: &[i32]) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(|| Coeff::zero(self.ring.base()))
    }

    /// The constant coefficient, if the element is a constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero(self.ring.base())),
            1 => self.terms.iter().next().filter(|(m, _)| m.iter().all(|&e| e == 0)).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    fn check_same(&self, other: &Elem) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: other.ring.descriptor() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c);
        }
        Ok(Elem::normalized(self.ring.clone(), terms))
    }

    pub fn try_sub(&self, other: &Elem) -> Result<Elem> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Elem) -> Result<Elem> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                accumulate(&mut terms, m, &c1.mul(c2));
            }
        }
        Ok(Elem::normalized(self.ring.clone(), terms))
    }

    fn neg_ref(&self) -> Elem {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Elem { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Result<Elem> {
        if c.base() != self.ring.base() {
            return Err(Error::RingMismatch { left: c.base().to_string(), right: self.ring.descriptor() });
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect();
        Ok(Elem::normalized(self.ring.clone(), terms))
    }

    pub fn pow(&self, mut k: u32) -> Elem {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`Elem::try_invert`].
    pub fn powi(&self, k: i64) -> Result<Elem> {
        let e = u32::try_from(k.unsigned_abs()).map_err(|_| Error::Parse(format!("exponent {k} too large")))?;
        if k >= 0 {
            Ok(self.pow(e))
        } else {
            Ok(self.try_invert()?.pow(e))
        }
    }

    /// True if the term is nilpotent in this ring: either its coefficient is
    /// (the ε-part of a dual number) or it involves t in the t-truncated ring.
    fn term_is_nilpotent(&self, m: &Monomial, c: &Coeff) -> bool {
        if c.is_nilpotent() {
            return true;
        }
        match (self.ring.t_truncation(), self.ring.var_index(Symbol::T)) {
            (Some(_), Some(k)) => m[k] > 0,
            _ => false,
        }
    }

    /// Inverse for the recognized unit classes: a unit-coefficient monomial in
    /// Laurent variables, plus optionally a nilpotent correction (inverted
    /// by a terminating geometric series).
    pub fn try_invert(&self) -> Result<Elem> {
        let not_unit = || Error::NotAUnit(self.to_string());
        let (nil, rest): (Vec<_>, Vec<_>) =
            self.terms.iter().partition(|(m, c)| self.term_is_nilpotent(m, c));
        let [(m, c)] = rest.as_slice() else {
            return Err(not_unit());
        };
        let laurent_only = m.iter().zip(self.ring.vars()).all(|(&e, v)| e == 0 || v.laurent);
        if !laurent_only {
            return Err(not_unit());
        }
        let c_inv = c.inverse().ok_or_else(not_unit)?;
        let m_inv: Monomial = m.iter().map(|e| -e).collect();
        let unit_inv = self.ring.monomial(c_inv, m_inv)?;
        if nil.is_empty() {
            return Ok(unit_inv);
        }
        let nil_part = Elem::normalized(
            self.ring.clone(),
            nil.into_iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
        );
        // (u + n)⁻¹ = u⁻¹ Σ (-u⁻¹n)^k
        let w = -(&unit_inv * &nil_part);
        let mut sum = self.ring.one();
        let mut power = self.ring.one();
        for _ in 0..1024 {
            power = &power * &w;
            if power.is_zero() {
                let inv = &unit_inv * &sum;
                debug_assert!((self * &inv).is_one());
                return Ok(inv);
            }
            sum = &sum + &power;
        }
        Err(not_unit())
    }

    /// Exponent range `(min, max)` of `symbol` over the stored terms.
    pub fn degree_range(&self, symbol: Symbol) -> Option<(i32, i32)> {
        let k = self.ring.var_index(symbol)?;
        let mut it = self.terms.keys().map(|m| m[k]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// The coefficient of `symbol^k`, as an element of the ring without `symbol`.
    pub fn coefficient_of(&self, symbol: Symbol, k: i32) -> Result<Elem> {
        let idx = self.ring.var_index(symbol).ok_or_else(|| Error::UnknownVariable(symbol.to_string()))?;
        let target = self.ring.without_var(symbol);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m[idx] == k)
            .map(|(m, c)| {
                let mut m = m.clone();
                m.remove(idx);
                (m, c.clone())
            })
            .collect();
        Ok(Elem::normalized(target, terms))
    }

    /// Map into a ring with the same base whose variables include every
    /// variable this element actually uses.
    pub fn embed(&self, target: &Ring) -> Result<Elem> {
        if target.base() != self.ring.base() {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: target.descriptor() });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut out = vec![0; target.vars().len()];
            for (v, &e) in self.ring.vars().iter().zip(m) {
                if e == 0 {
                    continue;
                }
                let k = target.var_index(v.symbol).ok_or_else(|| Error::UnknownVariable(v.symbol.to_string()))?;
                if e < 0 && !target.vars()[k].laurent {
                    return Err(Error::RingMismatch { left: self.ring.descriptor(), right: target.descriptor() });
                }
                out[k] = e;
            }
            accumulate(&mut terms, out, c);
        }
        Ok(Elem::normalized(target.clone(), terms))
    }

    /// Homomorphic evaluation into `target`. Variables without an assignment
    /// map to the same-named variable of `target`.
    pub fn substitute(&self, target: &Ring, assignments: &[(Symbol, Elem)]) -> Result<Elem> {
        if target.base() != self.ring.base() {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: target.descriptor() });
        }
        for (_, img) in assignments {
            if img.ring != *target {
                return Err(Error::RingMismatch { left: img.ring.descriptor(), right: target.descriptor() });
            }
        }
        let mut images = Vec::with_capacity(self.ring.vars().len());
        for v in self.ring.vars() {
            let img = match assignments.iter().find(|(s, _)| *s == v.symbol) {
                Some((_, e)) => e.clone(),
                None => target.var(v.symbol)?,
            };
            let inv = if v.laurent {
                Some(img.try_invert().map_err(|_| Error::NonUnitImage(v.symbol.to_string())))
            } else {
                None
            };
            images.push((img, inv));
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone())?;
            for ((img, inv), &e) in images.iter().zip(m) {
                if e > 0 {
                    term = &term * &img.pow(e as u32);
                } else if e < 0 {
                    let inv = inv.as_ref().expect("negative exponent only on Laurent variables").clone()?;
                    term = &term * &inv.pow((-e) as u32);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Formal partial derivative in an ordinary variable.
    pub fn derivative(&self, symbol: Symbol) -> Result<Elem> {
        let k = self.ring.var_index(symbol).ok_or_else(|| Error::UnknownVariable(symbol.to_string()))?;
        if self.ring.vars()[k].laurent {
            return Err(Error::LaurentVariable(symbol.to_string()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m[k] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[k] -= 1;
            accumulate(&mut terms, m2, &c.scale_int(&BigInt::from(m[k])));
        }
        Ok(Elem::normalized(self.ring.clone(), terms))
    }

    /// Apply a function to every coefficient, landing in `target` (which must
    /// have the same variables).
    pub(crate) fn map_coeffs(&self, target: &Ring, f: impl Fn(&Coeff) -> Coeff) -> Result<Elem> {
        if target.vars() != self.ring.vars() {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: target.descriptor() });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, m.clone(), &f(c));
        }
        Ok(Elem::normalized(target.clone(), terms))
    }

    /// Term list `[[exponents, coefficient], ...]` in canonical order.
    pub fn terms_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(m, c)| json!([m, c.to_json()])).collect())
    }

    pub fn from_terms_json(ring: &Ring, v: &Value) -> Result<Elem> {
        let Value::Array(items) = v else {
            return Err(Error::Parse(format!("expected term list, got {v}")));
        };
        let mut acc = ring.zero();
        for item in items {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse(format!("bad term {item}")))?;
            let exps: Monomial = pair[0]
                .as_array()
                .ok_or_else(|| Error::Parse(format!("bad exponents {}", pair[0])))?
                .iter()
                .map(|e| e.as_i64().and_then(|e| i32::try_from(e).ok()).ok_or_else(|| Error::Parse(format!("bad exponent {e}"))))
                .collect::<Result<_>>()?;
            let c = Coeff::from_json(ring.base(), &pair[1])?;
            acc = acc.try_add(&ring.monomial(c, exps)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        json!({ "ring": self.ring.descriptor(), "terms": self.terms_json() })
    }

    pub fn from_json(v: &Value) -> Result<Elem> {
        let ring: Ring = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing \"ring\"".into()))?
            .parse()?;
        let terms = v.get("terms").ok_or_else(|| Error::Parse("missing \"terms\"".into()))?;
        Elem::from_terms_json(&ring, terms)
    }

    /// LaTeX source for the element, e.g. `1 - t^{2}s^{2}z^{-1}`.
    pub fn to_latex(&self) -> String {
        latex_from_display(&self.to_string())
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: &Coeff) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().add(c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn latex_from_display(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '*' => {}
            'σ' => out.push_str("\\sigma "),
            'ε' => out.push_str("\\epsilon "),
            '^' => {
                out.push_str("^{");
                if chars.peek() == Some(&'-') {
                    out.push(chars.next().unwrap());
                }
                while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                    out.push(d);
                    chars.next();
                }
                out.push('}');
            }
            c => out.push(c),
        }
    }
    out.replace(" }", "}").replace("\\sigma ^", "\\sigma^").replace("\\epsilon ^", "\\epsilon^")
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = self
                .ring
                .vars()
                .iter()
                .zip(m)
                .filter(|(_, &e)| e != 0)
                .map(|(v, &e)| if e == 1 { v.symbol.to_string() } else { format!("{}^{e}", v.symbol) })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_string();
            let compound = cs.chars().skip(1).any(|c| c == '+' || c == '-');
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let body = match (mono.is_empty(), compound, mag.as_str()) {
                (true, true, _) if self.terms.len() > 1 => format!("({mag})"),
                (true, _, _) => mag,
                (false, _, "1") => mono,
                (false, true, _) => format!("({mag})*{mono}"),
                (false, false, _) => format!("{mag}*{mono}"),
            };
            match (n, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}
