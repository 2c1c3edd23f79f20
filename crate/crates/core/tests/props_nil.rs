mod common;

use common::{config, rect, ring, strictly_upper};
use nilk::laurent::NilRep;
use nilk::nil::{frobenius, verify_esse, verify_se, verify_sse_chain, verschiebung, ChainVerdict, EsseWitness, SeWitness, SseChain};
use nilk::Matrix;
use proptest::prelude::*;

fn nilpotent() -> impl Strategy<Value = NilRep> {
    prop::sample::select(vec!["Q[t,s]", "Z[C4][x]", "F2[x]"])
        .prop_flat_map(|d| (1usize..=4).prop_flat_map(move |n| strictly_upper(&ring(d), n)))
        .prop_map(|m| NilRep::new(m).unwrap())
}

fn block_diagonal(m: &Matrix, k: usize) -> Matrix {
    (1..k).fold(m.clone(), |acc, _| acc.direct_sum(m).unwrap())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn verschiebung_power_is_block_diagonal(n in nilpotent(), k in 1usize..=3) {
        let v = verschiebung(&n, k).unwrap();
        prop_assert_eq!(v.matrix().rows(), k * n.matrix().rows());
        prop_assert_eq!(v.matrix().pow(k as u32).unwrap(), block_diagonal(n.matrix(), k));
        let (i, vi) = (n.index(), v.index());
        prop_assert!(vi <= k * i && vi > k * (i - 1), "index {} from {} at k={}", vi, i, k);
    }

    #[test]
    fn frobenius_index_is_ceiling(n in nilpotent(), k in 1usize..=4) {
        let f = frobenius(&n, k).unwrap();
        prop_assert_eq!(f.index(), n.index().div_ceil(k));
        prop_assert!(frobenius(&n, n.index()).unwrap().matrix().is_zero());
    }

    /// `UV ~ VU` for any rectangular U and V, and the same pair is a lag-one
    /// shift equivalence.
    #[test]
    fn products_are_strong_shift_equivalent(
        (u, v) in prop::sample::select(&common::ALL_RINGS[..]).prop_flat_map(|d| {
            let r = ring(d);
            (1usize..=3, 1usize..=3).prop_flat_map(move |(a, b)| (rect(&r, a, b), rect(&r, b, a)))
        })
    ) {
        let (a, b) = (&u * &v, &v * &u);
        let w = EsseWitness { u: u.clone(), v: v.clone() };
        prop_assert!(verify_esse(&a, &b, &w).unwrap());
        let se = SeWitness { u: u.clone(), v: v.clone(), lag: 1 };
        prop_assert!(verify_se(&a, &b, &se).unwrap());
        let chain = SseChain { start: a.clone(), steps: vec![(b.clone(), w)] };
        prop_assert_eq!(verify_sse_chain(&chain).unwrap(), ChainVerdict::Valid);
        prop_assert_eq!(SseChain::from_json(&chain.to_json()).unwrap(), chain);
    }

    /// `(A, I)` relates A to itself; a chain back and forth stays valid and a
    /// wrong endpoint breaks the right link.
    #[test]
    fn chains(n in nilpotent()) {
        let a = n.matrix().clone();
        let id = Matrix::identity(a.ring(), a.rows());
        let step = (a.clone(), EsseWitness { u: a.clone(), v: id.clone() });
        let mut chain = SseChain { start: a.clone(), steps: vec![step.clone(), step.clone()] };
        prop_assert_eq!(verify_sse_chain(&chain).unwrap(), ChainVerdict::Valid);
        chain.steps.push((&a + &id, EsseWitness { u: a.clone(), v: id }));
        prop_assert_eq!(verify_sse_chain(&chain).unwrap(), ChainVerdict::BrokenLink(2));
    }

    /// A nilpotent matrix is shift equivalent to the 1×1 zero matrix at lag = index.
    #[test]
    fn nilpotent_is_shift_equivalent_to_zero(n in nilpotent()) {
        let a = n.matrix();
        let z = Matrix::zero(a.ring(), 1, 1);
        let w = SeWitness { u: Matrix::zero(a.ring(), a.rows(), 1), v: Matrix::zero(a.ring(), 1, a.rows()), lag: n.index() };
        prop_assert!(verify_se(a, &z, &w).unwrap());
        if n.index() > 1 {
            let short = SeWitness { lag: n.index() - 1, ..w };
            prop_assert!(!verify_se(a, &z, &short).unwrap());
        }
    }
}

#[test]
fn rejects_bad_input() {
    let r = ring("Q[t,s]");
    let n = NilRep::new(Matrix::zero(&r, 2, 2)).unwrap();
    assert!(verschiebung(&n, 0).is_err());
    assert!(frobenius(&n, 0).is_err());
    assert!(NilRep::new(Matrix::identity(&r, 2)).is_err());
    let w = EsseWitness { u: Matrix::zero(&r, 2, 2), v: Matrix::zero(&r, 3, 2) };
    assert!(verify_esse(&Matrix::zero(&r, 2, 2), &Matrix::zero(&r, 2, 2), &w).is_err());
}
