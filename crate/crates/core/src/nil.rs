//! Verschiebung and Frobenius on nilpotent representatives, and checkers for
//! (elementary) strong shift equivalence and shift equivalence witnesses.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::NilRep;
use crate::matrix::Matrix;

/// The k·n companion with `N` in the top-right block and identities below the diagonal.
pub fn verschiebung(n: &NilRep, k: usize) -> Result<NilRep> {
    if k == 0 {
        return Err(Error::Dimension("verschiebung needs k >= 1".into()));
    }
    let m = n.matrix();
    let size = m.rows();
    let id = Matrix::identity(m.ring(), size);
    let mut placed = vec![(0, (k - 1) * size, m)];
    placed.extend((1..k).map(|b| (b * size, (b - 1) * size, &id)));
    NilRep::new(Matrix::block_assemble(m.ring(), k * size, k * size, &placed)?)
}

/// `Nᵏ`.
pub fn frobenius(n: &NilRep, k: usize) -> Result<NilRep> {
    if k == 0 {
        return Err(Error::Dimension("frobenius needs k >= 1".into()));
    }
    NilRep::new(n.matrix().pow(k as u32)?)
}

fn product(u: &Matrix, v: &Matrix) -> Result<Matrix> {
    if u.cols() != v.rows() {
        return Err(Error::Dimension(format!("{}x{} times {}x{}", u.rows(), u.cols(), v.rows(), v.cols())));
    }
    u.try_mul(v)
}

/// `A = UV`, `B = VU`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsseWitness {
    pub u: Matrix,
    pub v: Matrix,
}

pub fn verify_esse(a: &Matrix, b: &Matrix, w: &EsseWitness) -> Result<bool> {
    let uv = product(&w.u, &w.v)?;
    let vu = product(&w.v, &w.u)?;
    if (uv.rows(), uv.cols()) != (a.rows(), a.cols()) || (vu.rows(), vu.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Dimension("witness shape does not match A and B".into()));
    }
    Ok(uv == *a && vu == *b)
}

/// A chain `start = A₀ ~ A₁ ~ … ~ A_ℓ`, each link an ESSE witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SseChain {
    pub start: Matrix,
    pub steps: Vec<(Matrix, EsseWitness)>,
}

/// Outcome of checking a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainVerdict {
    Valid,
    /// The 0-based index of the first link that does not verify.
    BrokenLink(usize),
}

impl SseChain {
    pub fn end(&self) -> &Matrix {
        self.steps.last().map(|(m, _)| m).unwrap_or(&self.start)
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> =
            self.steps.iter().map(|(m, w)| json!({"matrix": m.to_json(), "U": w.u.to_json(), "V": w.v.to_json()})).collect();
        json!({"ring": self.start.ring().descriptor(), "start": self.start.to_json(), "steps": steps})
    }

    pub fn from_json(v: &Value) -> Result<SseChain> {
        let start = Matrix::from_json(field(v, "start")?)?;
        let items = field(v, "steps")?.as_array().ok_or_else(|| Error::Parse("\"steps\" is not a list".into()))?;
        let mut steps = Vec::with_capacity(items.len());
        for item in items {
            let m = Matrix::from_json(field(item, "matrix")?)?;
            let u = Matrix::from_json(field(item, "U")?)?;
            let w = Matrix::from_json(field(item, "V")?)?;
            steps.push((m, EsseWitness { u, v: w }));
        }
        Ok(SseChain { start, steps })
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing {key:?}")))
}

/// Shape mismatches are errors that name the link index.
pub fn verify_sse_chain(chain: &SseChain) -> Result<ChainVerdict> {
    let mut prev = &chain.start;
    for (idx, (m, w)) in chain.steps.iter().enumerate() {
        match verify_esse(prev, m, w) {
            Ok(true) => {}
            Ok(false) => return Ok(ChainVerdict::BrokenLink(idx)),
            Err(e) => return Err(Error::Verification(format!("link {idx}: {e}"))),
        }
        prev = m;
    }
    Ok(ChainVerdict::Valid)
}

/// `A^ℓ = UV`, `B^ℓ = VU`, `AU = UB`, `VA = BV`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeWitness {
    pub u: Matrix,
    pub v: Matrix,
    pub lag: usize,
}

impl SeWitness {
    pub fn to_json(&self, a: &Matrix, b: &Matrix) -> Value {
        json!({"A": a.to_json(), "B": b.to_json(), "U": self.u.to_json(), "V": self.v.to_json(), "lag": self.lag})
    }

    /// Returns `(A, B, witness)`.
    pub fn from_json(v: &Value) -> Result<(Matrix, Matrix, SeWitness)> {
        let lag = field(v, "lag")?.as_u64().ok_or_else(|| Error::Parse("\"lag\" is not a count".into()))? as usize;
        let w = SeWitness { u: Matrix::from_json(field(v, "U")?)?, v: Matrix::from_json(field(v, "V")?)?, lag };
        Ok((Matrix::from_json(field(v, "A")?)?, Matrix::from_json(field(v, "B")?)?, w))
    }
}

/// The four identities, labelled, with whether each holds.
pub fn se_identities(a: &Matrix, b: &Matrix, w: &SeWitness) -> Result<Vec<(&'static str, bool)>> {
    if w.lag == 0 {
        return Err(Error::Dimension("lag must be positive".into()));
    }
    if !a.is_square() || !b.is_square() {
        return Err(Error::Dimension("A and B must be square".into()));
    }
    if (w.u.rows(), w.u.cols()) != (a.rows(), b.rows()) || (w.v.rows(), w.v.cols()) != (b.rows(), a.rows()) {
        return Err(Error::Dimension(format!(
            "U is {}x{} and V is {}x{}, expected {}x{} and {}x{}",
            w.u.rows(),
            w.u.cols(),
            w.v.rows(),
            w.v.cols(),
            a.rows(),
            b.rows(),
            b.rows(),
            a.rows()
        )));
    }
    let lag = w.lag as u32;
    Ok(vec![
        ("A^ℓ = UV", a.pow(lag)? == product(&w.u, &w.v)?),
        ("B^ℓ = VU", b.pow(lag)? == product(&w.v, &w.u)?),
        ("AU = UB", product(a, &w.u)? == product(&w.u, b)?),
        ("VA = BV", product(&w.v, a)? == product(b, &w.v)?),
    ])
}

pub fn verify_se(a: &Matrix, b: &Matrix, w: &SeWitness) -> Result<bool> {
    Ok(se_identities(a, b, w)?.iter().all(|(_, ok)| *ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    fn q() -> Ring {
        "Q[t]".parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::parse(&q(), rows).unwrap()
    }

    #[test]
    fn verschiebung_of_zero() {
        let z = NilRep::new(m(&[&["0"]])).unwrap();
        assert_eq!(verschiebung(&z, 2).unwrap().matrix(), &m(&[&["0", "0"], &["1", "0"]]));
        assert_eq!(verschiebung(&z, 1).unwrap(), z);
    }

    #[test]
    fn frobenius_kills_at_index() {
        let n = NilRep::new(m(&[&["0", "1"], &["0", "0"]])).unwrap();
        assert!(frobenius(&n, 2).unwrap().matrix().is_zero());
        assert_eq!(frobenius(&n, 1).unwrap(), n);
    }

    #[test]
    fn esse_examples() {
        let n = m(&[&["0", "1"], &["0", "0"]]);
        let w = EsseWitness { u: m(&[&["1"], &["0"]]), v: m(&[&["0", "1"]]) };
        let zero = m(&[&["0"]]);
        assert!(verify_esse(&n, &zero, &w).unwrap());
        let bad = EsseWitness { u: w.u.clone(), v: m(&[&["1", "1"]]) };
        assert!(!verify_esse(&n, &zero, &bad).unwrap());
        assert!(verify_esse(&n, &n, &EsseWitness { u: m(&[&["1"]]), v: m(&[&["1"]]) }).is_err());
    }

    #[test]
    fn chain_reports_broken_link() {
        let n = m(&[&["0", "1"], &["0", "0"]]);
        let zero = m(&[&["0"]]);
        let one = m(&[&["1"]]);
        let good = EsseWitness { u: m(&[&["1"], &["0"]]), v: m(&[&["0", "1"]]) };
        let trivial = EsseWitness { u: zero.clone(), v: one.clone() };
        let chain = SseChain { start: n.clone(), steps: vec![(zero.clone(), good.clone()), (zero.clone(), trivial)] };
        assert_eq!(verify_sse_chain(&chain).unwrap(), ChainVerdict::Valid);
        let broken = SseChain { start: n, steps: vec![(zero.clone(), good), (zero, EsseWitness { u: one.clone(), v: one })] };
        assert_eq!(verify_sse_chain(&broken).unwrap(), ChainVerdict::BrokenLink(1));
        let back = SseChain::from_json(&chain.to_json()).unwrap();
        assert_eq!(back, chain);
    }

    #[test]
    fn se_examples() {
        let n = m(&[&["0", "1"], &["0", "0"]]);
        let zero = m(&[&["0"]]);
        let w = SeWitness { u: m(&[&["0"], &["0"]]), v: m(&[&["0", "0"]]), lag: 2 };
        assert!(verify_se(&n, &zero, &w).unwrap());
        let short = SeWitness { lag: 1, ..w.clone() };
        let ids = se_identities(&n, &zero, &short).unwrap();
        assert_eq!(ids[0], ("A^ℓ = UV", false));
        let a = m(&[&["t", "1"], &["2", "0"]]);
        let id = Matrix::identity(&q(), 2);
        assert!(verify_se(&a, &a, &SeWitness { u: a.clone(), v: id, lag: 1 }).unwrap());
        let (a2, b2, w2) = SeWitness::from_json(&w.to_json(&n, &zero)).unwrap();
        assert_eq!((a2, b2, w2), (n, zero, w));
    }
}
