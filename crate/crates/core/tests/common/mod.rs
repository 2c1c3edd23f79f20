//! Shared pieces for the integration tests: proptest strategies producing
//! library values, and a small independent polynomial oracle.
#![allow(dead_code)]

pub mod oracle;

use nilk::rings::scalars::{DualF2, GaussianInt, GroupRingZ4, F2};
use nilk::steinberg::{Letter, StWord};
use nilk::{Base, Coeff, Elem, Matrix, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub const CASES: u32 = 1000;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

pub fn ring(d: &str) -> Ring {
    d.parse().unwrap()
}

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

pub fn coeff(base: Base) -> BoxedStrategy<Coeff> {
    match base {
        Base::Integer => (-4i64..=4).prop_map(|n| Coeff::Integer(BigInt::from(n))).boxed(),
        Base::Rational => small_rational().prop_map(Coeff::Rational).boxed(),
        Base::Gaussian => (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Coeff::Gaussian(GaussianInt::new(a, b))).boxed(),
        Base::GroupRingZ4 => [-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2]
            .prop_map(|[a, b, c, d]| Coeff::GroupRingZ4(GroupRingZ4::new(a, b, c, d)))
            .boxed(),
        Base::F2 => any::<bool>().prop_map(|b| Coeff::F2(F2(b))).boxed(),
        Base::DualF2 => (any::<bool>(), any::<bool>()).prop_map(|(a, b)| Coeff::DualF2(DualF2::new(a, b))).boxed(),
    }
}

/// Up to `terms` random terms with exponents bounded by `max_exp`.
pub fn elem(r: &Ring, terms: usize, max_exp: i32) -> BoxedStrategy<Elem> {
    let exps: Vec<BoxedStrategy<i32>> =
        r.vars().iter().map(|v| if v.laurent { (-max_exp..=max_exp).boxed() } else { (0..=max_exp).boxed() }).collect();
    let r2 = r.clone();
    prop::collection::vec((exps, coeff(r.base())), 0..=terms)
        .prop_map(move |ts| {
            ts.into_iter().fold(r2.zero(), |acc, (m, c)| &acc + &r2.monomial(c, m).unwrap())
        })
        .boxed()
}

pub fn matrix(r: &Ring, n: usize, terms: usize, max_exp: i32) -> BoxedStrategy<Matrix> {
    let r2 = r.clone();
    prop::collection::vec(elem(r, terms, max_exp), n * n).prop_map(move |es| Matrix::new(&r2, n, n, es).unwrap()).boxed()
}

pub fn rect(r: &Ring, rows: usize, cols: usize) -> BoxedStrategy<Matrix> {
    let r2 = r.clone();
    prop::collection::vec(elem(r, 2, 2), rows * cols).prop_map(move |es| Matrix::new(&r2, rows, cols, es).unwrap()).boxed()
}

/// A random word on indices `1..=n`.
pub fn word(r: &Ring, n: usize, max_len: usize) -> BoxedStrategy<StWord> {
    let r2 = r.clone();
    let letter = (1..=n, 1..n, elem(r, 2, 2), any::<bool>()).prop_map(|(i, j, a, inv)| {
        let j = if j >= i { j + 1 } else { j };
        let mut l = Letter::new(i, j, a).unwrap();
        l.inverted = inv;
        l
    });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |ls| StWord::from_letters(&r2, ls).unwrap()).boxed()
}

/// Strictly upper-triangular `n × n` matrices, which are nilpotent.
pub fn strictly_upper(r: &Ring, n: usize) -> BoxedStrategy<Matrix> {
    let r2 = r.clone();
    prop::collection::vec(elem(r, 2, 2), n * n)
        .prop_map(move |es| {
            let es = es.into_iter().enumerate().map(|(k, e)| if k % n > k / n { e } else { r2.zero() }).collect();
            Matrix::new(&r2, n, n, es).unwrap()
        })
        .boxed()
}

pub const ALL_RINGS: [&str; 7] = ["Q[t,s]", "Q[t,s]/(t^2)", "Q[t,s,z,z^-1]", "Z[i][x]", "Z[C4][x]", "F2[e]/(e^2)[x]", "F2[x]"];
