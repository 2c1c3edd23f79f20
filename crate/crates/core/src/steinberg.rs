//! Formal words in the Steinberg generators `x_ij(a)`, the `h_ij` and
//! Dennis–Stein expansions, and evaluation to elementary-matrix products.
//!
//! Words are never rewritten with the Steinberg relations; two words are
//! compared only through [`StWord::eval`].

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{Elem, Ring};

/// `x_ij(a)`, or its formal inverse. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub i: usize,
    pub j: usize,
    pub param: Elem,
    pub inverted: bool,
}

impl Letter {
    pub fn new(i: usize, j: usize, param: Elem) -> Result<Letter> {
        if i == j {
            return Err(Error::DiagonalLetter { i, j });
        }
        if i == 0 || j == 0 {
            return Err(Error::IndexOutOfRange { index: 0, size: i.max(j) });
        }
        Ok(Letter { i, j, param, inverted: false })
    }

    pub fn inverse(&self) -> Letter {
        Letter { inverted: !self.inverted, ..self.clone() }
    }

    /// The parameter of the elementary matrix this letter evaluates to.
    pub fn effective_param(&self) -> Elem {
        if self.inverted {
            -&self.param
        } else {
            self.param.clone()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}{}({})", self.i, self.j, self.param)?;
        if self.inverted {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StWord {
    ring: Ring,
    letters: Vec<Letter>,
}

impl StWord {
    pub fn empty(ring: &Ring) -> StWord {
        StWord { ring: ring.clone(), letters: Vec::new() }
    }

    pub fn from_letters(ring: &Ring, letters: Vec<Letter>) -> Result<StWord> {
        if let Some(bad) = letters.iter().find(|l| l.param.ring() != ring) {
            return Err(Error::RingMismatch { left: bad.param.ring().descriptor(), right: ring.descriptor() });
        }
        Ok(StWord { ring: ring.clone(), letters })
    }

    /// The one-letter word `x_ij(a)`.
    pub fn x(i: usize, j: usize, a: Elem) -> Result<StWord> {
        let ring = a.ring().clone();
        StWord::from_letters(&ring, vec![Letter::new(i, j, a)?])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &StWord) -> Result<StWord> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: other.ring.descriptor() });
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(StWord { ring: self.ring.clone(), letters })
    }

    /// Reverse the word and invert every letter.
    pub fn inverse(&self) -> StWord {
        StWord { ring: self.ring.clone(), letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.i.max(l.j)).max().unwrap_or(0)
    }

    /// Ordered product of elementary `n x n` matrices. Inverse letters
    /// evaluate as `x_ij(-a)`, so no unit condition is involved.
    pub fn eval(&self, n: usize) -> Result<Matrix> {
        let needed = self.max_index();
        if needed > n {
            return Err(Error::IndexOutOfRange { index: needed, size: n });
        }
        let mut acc = Matrix::identity(&self.ring, n);
        for l in &self.letters {
            let e = Matrix::elementary(&self.ring, n, l.i - 1, l.j - 1, &l.effective_param())?;
            acc = acc.try_mul(&e)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let letters: Vec<Value> = self
            .letters
            .iter()
            .map(|l| json!({ "i": l.i, "j": l.j, "param": l.param.terms_json(), "inverted": l.inverted }))
            .collect();
        json!({ "ring": self.ring.descriptor(), "letters": letters })
    }

    pub fn from_json(v: &Value) -> Result<StWord> {
        let ring: Ring = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("word JSON missing \"ring\"".into()))?
            .parse()?;
        let items = v
            .get("letters")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("word JSON missing \"letters\"".into()))?;
        let mut letters = Vec::with_capacity(items.len());
        for item in items {
            let idx = |k: &str| {
                item.get(k).and_then(Value::as_u64).map(|n| n as usize).ok_or_else(|| Error::Parse(format!("letter missing {k:?}")))
            };
            let param = Elem::from_terms_json(&ring, item.get("param").ok_or_else(|| Error::Parse("letter missing \"param\"".into()))?)?;
            let mut letter = Letter::new(idx("i")?, idx("j")?, param)?;
            letter.inverted = item.get("inverted").and_then(Value::as_bool).unwrap_or(false);
            letters.push(letter);
        }
        StWord::from_letters(&ring, letters)
    }
}

impl fmt::Display for StWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `h_ij(a) = x_ij(a) x_ji(-a⁻¹) x_ij(a) x_ij(-1) x_ji(1) x_ij(-1)`.
pub fn expand_h(i: usize, j: usize, a: &Elem) -> Result<StWord> {
    let ring = a.ring();
    let a_inv = a.try_invert()?;
    let one = ring.one();
    let letters = vec![
        Letter::new(i, j, a.clone())?,
        Letter::new(j, i, -&a_inv)?,
        Letter::new(i, j, a.clone())?,
        Letter::new(i, j, -&one)?,
        Letter::new(j, i, one.clone())?,
        Letter::new(i, j, -&one)?,
    ];
    StWord::from_letters(ring, letters)
}

/// The Dennis–Stein word for `⟨a, b⟩`, defined when `1 - ab` is a unit:
/// `x_ji(-b(1-ab)⁻¹) x_ij(-a) x_ji(b) x_ij((1-ab)⁻¹a) h_ij(1-ab)⁻¹`.
pub fn dennis_stein_word(i: usize, j: usize, a: &Elem, b: &Elem) -> Result<StWord> {
    let ring = a.ring();
    let u = &ring.one() - &a.try_mul(b)?;
    let u_inv = u.try_invert()?;
    let head = vec![
        Letter::new(j, i, -(b * &u_inv))?,
        Letter::new(i, j, -a)?,
        Letter::new(j, i, b.clone())?,
        Letter::new(i, j, &u_inv * a)?,
    ];
    StWord::from_letters(ring, head)?.concat(&expand_h(i, j, &u)?.inverse())
}

/// F2[ε,x]/(ε²), where the dual-number words live.
pub fn dual_ring() -> Ring {
    "F2[e]/(e^2)[x]".parse().expect("valid descriptor")
}

/// The word `X = x12(-x-ε-εx²) x12(-ε)… h12(1-εx)⁻¹` obtained from
/// `⟨ε, x+ε⟩`, with parameters stored exactly as displayed.
pub fn reduced_x_word() -> StWord {
    let r = dual_ring();
    let (i, j) = (1, 2);
    let letters = vec![
        Letter::new(j, i, r.elem("-x-ε-ε*x^2")).expect("valid"),
        Letter::new(i, j, r.elem("-ε")).expect("valid"),
        Letter::new(j, i, r.elem("x+ε")).expect("valid"),
        Letter::new(i, j, r.elem("ε")).expect("valid"),
    ];
    let h = expand_h(i, j, &r.elem("1-ε*x")).expect("1-εx is a unit");
    StWord::from_letters(&r, letters).expect("same ring").concat(&h.inverse()).expect("same ring")
}
