//! Dense matrices over a single [`Ring`].

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::{Elem, Hom, IdealSpec, Ring, SubringSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch { left: bad.ring().descriptor(), right: ring.descriptor() });
        }
        Ok(Matrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    /// Build from entry expressions, e.g. `Matrix::parse(&r, &[&["1+s*t", "0"], &["0", "1"]])`.
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|src| ring.parse(src)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ring, rows)
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n, n);
        for k in 0..n {
            m.entries[k * n + k] = ring.one();
        }
        m
    }

    pub fn diagonal(ring: &Ring, diag: &[Elem]) -> Result<Matrix> {
        let n = diag.len();
        let mut m = Matrix::zero(ring, n, n);
        for (k, d) in diag.iter().enumerate() {
            m.set(k, k, d.clone())?;
        }
        Ok(m)
    }

    /// The identity with `a` at `(i, j)`, 0-based.
    pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, a: &Elem) -> Result<Matrix> {
        if i == j {
            return Err(Error::DiagonalLetter { i: i + 1, j: j + 1 });
        }
        for k in [i, j] {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, size: n });
            }
        }
        let mut m = Matrix::identity(ring, n);
        m.set(i, j, a.clone())?;
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        assert!(r < self.rows && c < self.cols, "({r},{c}) out of range for {}x{}", self.rows, self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Elem) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::IndexOutOfRange { index: r.max(c), size: self.rows.max(self.cols) });
        }
        if value.ring() != &self.ring {
            return Err(Error::RingMismatch { left: value.ring().descriptor(), right: self.ring.descriptor() });
        }
        self.entries[r * self.cols + c] = value;
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &Elem> {
        self.entries.iter()
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Elem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.ring, self.rows)
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.descriptor(), right: other.ring.descriptor() });
        }
        Ok(())
    }

    fn check_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Elem) -> Result<Matrix> {
        let entries = self.entries.iter().map(|e| s.try_mul(e)).collect::<Result<_>>()?;
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let n = self.check_square()?;
        let mut acc = Matrix::identity(&self.ring, n);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        Matrix::block_assemble(
            &self.ring,
            self.rows + other.rows,
            self.cols + other.cols,
            &[(0, 0, self), (self.rows, self.cols, other)],
        )
    }

    /// A `rows x cols` zero matrix with each block copied in at its
    /// `(row, col)` offset. Later blocks overwrite earlier ones.
    pub fn block_assemble(ring: &Ring, rows: usize, cols: usize, blocks: &[(usize, usize, &Matrix)]) -> Result<Matrix> {
        let mut out = Matrix::zero(ring, rows, cols);
        for &(r0, c0, b) in blocks {
            if b.ring != *ring {
                return Err(Error::RingMismatch { left: b.ring.descriptor(), right: ring.descriptor() });
            }
            if r0 + b.rows > rows || c0 + b.cols > cols {
                return Err(Error::Dimension(format!(
                    "{}x{} block at ({r0},{c0}) exceeds {rows}x{cols}",
                    b.rows, b.cols
                )));
            }
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.entries[(r0 + r) * cols + c0 + c] = b.get(r, c).clone();
                }
            }
        }
        Ok(out)
    }

    /// The `rows x cols` sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Result<Matrix> {
        if r0 + rows > self.rows || c0 + cols > self.cols {
            return Err(Error::Dimension(format!("block out of range of {}x{}", self.rows, self.cols)));
        }
        let entries = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| self.get(r0 + r, c0 + c).clone())
            .collect();
        Ok(Matrix { ring: self.ring.clone(), rows, cols, entries })
    }

    /// Determinant by Laplace expansion along rows, memoized on the set of
    /// used columns (O(n·2ⁿ) products).
    pub fn det(&self) -> Result<Elem> {
        let n = self.check_square()?;
        if n > 20 {
            return Err(Error::Dimension(format!("determinant of a {n}x{n} matrix is out of reach")));
        }
        let mut memo: HashMap<u32, Elem> = HashMap::new();
        Ok(self.det_rec(0, n, &mut memo))
    }

    fn det_rec(&self, used: u32, n: usize, memo: &mut HashMap<u32, Elem>) -> Elem {
        let row = used.count_ones() as usize;
        if row == n {
            return self.ring.one();
        }
        if let Some(d) = memo.get(&used) {
            return d.clone();
        }
        let mut acc = self.ring.zero();
        let mut sign_neg = false;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let term = a * &self.det_rec(used | (1 << c), n, memo);
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(used, acc.clone());
        acc
    }

    pub fn minor(&self, skip_r: usize, skip_c: usize) -> Matrix {
        let entries = (0..self.rows)
            .filter(|&r| r != skip_r)
            .flat_map(|r| (0..self.cols).filter(move |&c| c != skip_c).map(move |c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        Matrix { ring: self.ring.clone(), rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    pub fn adjugate(&self) -> Result<Matrix> {
        let n = self.check_square()?;
        if n == 1 {
            return Ok(Matrix::identity(&self.ring, 1));
        }
        let mut out = Matrix::zero(&self.ring, n, n);
        for r in 0..n {
            for c in 0..n {
                let cof = self.minor(r, c).det()?;
                let cof = if (r + c) % 2 == 1 { -cof } else { cof };
                // adjugate is the transposed cofactor matrix
                out.entries[c * n + r] = cof;
            }
        }
        Ok(out)
    }

    /// Adjugate over determinant; the determinant must be a recognized unit.
    pub fn inverse_small(&self) -> Result<Matrix> {
        self.check_square()?;
        let det = self.det()?;
        let det_inv = det.try_invert().map_err(|_| Error::NotInvertible(det.to_string()))?;
        self.adjugate()?.scale(&det_inv)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.try_mul(self).is_ok_and(|sq| sq == *self)
    }

    /// Least `k ≤ max_k` with `selfᵏ = 0`, or `None`.
    pub fn nilpotency_index(&self, max_k: usize) -> Option<usize> {
        if !self.is_square() {
            return None;
        }
        let mut power = self.clone();
        for k in 1..=max_k {
            if power.is_zero() {
                return Some(k);
            }
            if k < max_k {
                power = power.try_mul(self).ok()?;
            }
        }
        None
    }

    /// Multiply row `i` (0-based) by a recognized unit.
    pub fn row_scale(&self, i: usize, u: &Elem) -> Result<Matrix> {
        u.try_invert()?;
        if i >= self.rows {
            return Err(Error::IndexOutOfRange { index: i, size: self.rows });
        }
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries[i * self.cols + c] = u.try_mul(self.get(i, c))?;
        }
        Ok(out)
    }

    /// Multiply column `j` (0-based) by a recognized unit.
    pub fn col_scale(&self, j: usize, u: &Elem) -> Result<Matrix> {
        u.try_invert()?;
        if j >= self.cols {
            return Err(Error::IndexOutOfRange { index: j, size: self.cols });
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            out.entries[r * self.cols + j] = self.get(r, j).try_mul(u)?;
        }
        Ok(out)
    }

    pub fn map_entries(&self, target: &Ring, f: impl Fn(&Elem) -> Result<Elem>) -> Result<Matrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Matrix::new(target, self.rows, self.cols, entries)
    }

    pub fn apply_hom(&self, h: Hom) -> Result<Matrix> {
        let target = h.target(&self.ring)?;
        self.map_entries(&target, |e| h.apply(e))
    }

    pub fn embed(&self, target: &Ring) -> Result<Matrix> {
        self.map_entries(target, |e| e.embed(target))
    }

    pub fn entries_in_ideal(&self, ideal: IdealSpec) -> Result<bool> {
        for e in &self.entries {
            if !ideal.contains(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn entries_in_subring(&self, sub: SubringSpec) -> bool {
        self.entries.iter().all(|e| sub.contains(e))
    }

    /// `{ring, rows, cols, entries}`; each entry is an element term list.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            (0..self.rows).map(|r| Value::Array(self.row(r).iter().map(Elem::terms_json).collect())).collect();
        json!({
            "ring": self.ring.descriptor(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": rows,
        })
    }

    pub fn from_json(v: &Value) -> Result<Matrix> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("matrix JSON missing {k:?}")));
        let ring: Ring = field("ring")?.as_str().ok_or_else(|| Error::Parse("ring must be a string".into()))?.parse()?;
        let rows = field("rows")?.as_u64().ok_or_else(|| Error::Parse("rows must be a count".into()))? as usize;
        let cols = field("cols")?.as_u64().ok_or_else(|| Error::Parse("cols must be a count".into()))? as usize;
        let data = field("entries")?.as_array().ok_or_else(|| Error::Parse("entries must be an array".into()))?;
        if data.len() != rows {
            return Err(Error::Parse(format!("expected {rows} rows, found {}", data.len())));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in data {
            let row = row.as_array().filter(|r| r.len() == cols).ok_or_else(|| Error::Parse(format!("row must have {cols} entries")))?;
            for e in row {
                entries.push(Elem::from_terms_json(&ring, e)?);
            }
        }
        Matrix::new(&ring, rows, cols, entries)
    }

    /// `\begin{pmatrix} ... \end{pmatrix}` source, one matrix row per line.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(Elem::to_latex).collect();
            out.push_str(&cells.join(" & "));
            if r + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}");
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {}: {}", self.rows, self.cols, self.ring, self)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { entries: self.entries.iter().map(|e| -e).collect(), ..self.clone() }
    }
}
