//! A deliberately naive polynomial and 2×2 matrix implementation, written
//! separately from the library, used to recompute the constructions.

use std::collections::BTreeMap;

use nilk::{Coeff, Elem};
use num_rational::Rational64;
use num_traits::ToPrimitive;

pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for Rational64 {
    fn zero() -> Self {
        Rational64::from_integer(0)
    }
    fn one() -> Self {
        Rational64::from_integer(1)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `re + im·i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gi(pub i64, pub i64);

impl Scalar for Gi {
    fn zero() -> Self {
        Gi(0, 0)
    }
    fn one() -> Self {
        Gi(1, 0)
    }
    fn add(&self, o: &Self) -> Self {
        Gi(self.0 + o.0, self.1 + o.1)
    }
    fn mul(&self, o: &Self) -> Self {
        Gi(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn neg(&self) -> Self {
        Gi(-self.0, -self.1)
    }
}

/// `Σ c[k] σᵏ` with σ⁴ = 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct C4(pub [i64; 4]);

impl Scalar for C4 {
    fn zero() -> Self {
        C4([0; 4])
    }
    fn one() -> Self {
        C4([1, 0, 0, 0])
    }
    fn add(&self, o: &Self) -> Self {
        C4(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = [0; 4];
        for a in 0..4 {
            for b in 0..4 {
                out[(a + b) % 4] += self.0[a] * o.0[b];
            }
        }
        C4(out)
    }
    fn neg(&self) -> Self {
        C4(self.0.map(|c| -c))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S: Scalar> {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i32>, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn term(nvars: usize, c: S, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        if c != S::zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Poly::term(nvars, c, &vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, S::one())
    }

    fn push(&mut self, m: Vec<i32>, c: S) {
        let sum = match self.terms.get(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum == S::zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Vec<i32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.push(m, c1.mul(c2));
            }
        }
        out
    }

    /// Terms whose exponent at `var` equals `k`, with that exponent zeroed.
    pub fn slice(&self, var: usize, k: i32) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[var] == k {
                let mut m = m.clone();
                m[var] = 0;
                out.push(m, c.clone());
            }
        }
        out
    }

    pub fn max_exp(&self, var: usize) -> i32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.push(m.clone(), f(c));
        }
        out
    }
}

pub type M2<S> = [[Poly<S>; 2]; 2];

pub fn m2_mul<S: Scalar>(a: &M2<S>, b: &M2<S>) -> M2<S> {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]))))
}

pub fn m2_det<S: Scalar>(a: &M2<S>) -> Poly<S> {
    a[0][0].mul(&a[1][1]).sub(&a[0][1].mul(&a[1][0]))
}

pub fn m2_transpose<S: Scalar>(a: &M2<S>) -> M2<S> {
    [[a[0][0].clone(), a[1][0].clone()], [a[0][1].clone(), a[1][1].clone()]]
}

/// Adjugate; equal to the inverse when the determinant is one.
pub fn m2_adj<S: Scalar>(a: &M2<S>) -> M2<S> {
    [[a[1][1].clone(), a[0][1].neg()], [a[1][0].neg(), a[0][0].clone()]]
}

/// `e_ij(a)` for 2×2, 1-based.
pub fn m2_elem<S: Scalar>(nvars: usize, i: usize, j: usize, a: Poly<S>) -> M2<S> {
    let mut m: M2<S> = [[Poly::one(nvars), Poly::zero(nvars)], [Poly::zero(nvars), Poly::one(nvars)]];
    m[i - 1][j - 1] = a;
    m
}

pub fn from_elem_q(e: &Elem) -> Poly<Rational64> {
    let n = e.ring().vars().len();
    let mut p = Poly::zero(n);
    for (m, c) in e.terms() {
        let Coeff::Rational(q) = c else { panic!("not rational: {c}") };
        let q = Rational64::new(q.numer().to_i64().unwrap(), q.denom().to_i64().unwrap());
        p.push(m.clone(), q);
    }
    p
}

pub fn from_elem_gi(e: &Elem) -> Poly<Gi> {
    let mut p = Poly::zero(e.ring().vars().len());
    for (m, c) in e.terms() {
        let Coeff::Gaussian(g) = c else { panic!("not Gaussian: {c}") };
        p.push(m.clone(), Gi(g.re.to_i64().unwrap(), g.im.to_i64().unwrap()));
    }
    p
}

pub fn from_elem_c4(e: &Elem) -> Poly<C4> {
    let mut p = Poly::zero(e.ring().vars().len());
    for (m, c) in e.terms() {
        let Coeff::GroupRingZ4(g) = c else { panic!("not in Z[C4]: {c}") };
        p.push(m.clone(), C4(std::array::from_fn(|k| g.c[k].to_i64().unwrap())));
    }
    p
}
