//! The full verification run behind `nilk verify-all`: both pipelines, the
//! Nil₀ maps, witness checks, generalized units and seeded randomized suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groupring;
use crate::laurent::{self, NilRep};
use crate::matrix::Matrix;
use crate::nil::{frobenius, verify_esse, verify_se, verify_sse_chain, verschiebung, ChainVerdict, EsseWitness, SeWitness, SseChain};
use crate::report::Report;
use crate::rings::scalars::{DualF2, GaussianInt, GroupRingZ4, F2};
use crate::rings::{Base, Coeff, Elem, Hom, IdealSpec, Ring, Symbol, SubringSpec};
use crate::steinberg::{dennis_stein_word, dual_ring, Letter, StWord};

#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Cases per randomized suite.
    pub cases: usize,
    pub seed: u64,
    /// Randomized units for the generalized clutching run.
    pub units: usize,
}

impl Default for Options {
    fn default() -> Options {
        Options { cases: 1000, seed: 0x6e696c6b, units: 50 }
    }
}

/// Small random ring elements.
pub mod sample {
    use super::*;

    pub fn coeff(rng: &mut impl Rng, base: Base) -> Coeff {
        match base {
            Base::Integer => Coeff::Integer(rng.gen_range(-3i64..=3).into()),
            Base::Rational => Coeff::Rational(rational(rng, 5, 4)),
            Base::Gaussian => Coeff::Gaussian(GaussianInt::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3))),
            Base::GroupRingZ4 => {
                let mut c = || rng.gen_range(-2i64..=2);
                Coeff::GroupRingZ4(GroupRingZ4::new(c(), c(), c(), c()))
            }
            Base::F2 => Coeff::F2(F2(rng.gen())),
            Base::DualF2 => Coeff::DualF2(DualF2::new(rng.gen(), rng.gen())),
        }
    }

    pub fn rational(rng: &mut impl Rng, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(rng.gen_range(-num..=num)), BigInt::from(rng.gen_range(1..=den)))
    }

    /// Up to `terms` terms with exponents in `0..=max_exp` (`-max_exp..` for Laurent variables).
    pub fn elem(rng: &mut impl Rng, ring: &Ring, terms: usize, max_exp: i32) -> Elem {
        let mut acc = ring.zero();
        for _ in 0..rng.gen_range(0..=terms) {
            let exps = ring
                .vars()
                .iter()
                .map(|v| if v.laurent { rng.gen_range(-max_exp..=max_exp) } else { rng.gen_range(0..=max_exp) })
                .collect();
            acc = &acc + &ring.monomial(coeff(rng, ring.base()), exps).expect("valid exponents");
        }
        acc
    }

    pub fn matrix(rng: &mut impl Rng, ring: &Ring, n: usize, terms: usize, max_exp: i32) -> Matrix {
        let entries = (0..n * n).map(|_| elem(rng, ring, terms, max_exp)).collect();
        Matrix::new(ring, n, n, entries).expect("n x n")
    }

    /// A word of up to `len` letters on indices `1..=n`.
    pub fn word(rng: &mut impl Rng, ring: &Ring, n: usize, len: usize) -> StWord {
        let letters = (0..rng.gen_range(0..=len))
            .map(|_| {
                let i = rng.gen_range(1..=n);
                let mut j = rng.gen_range(1..n);
                if j >= i {
                    j += 1;
                }
                let mut l = Letter::new(i, j, elem(rng, ring, 2, 2)).expect("i != j");
                l.inverted = rng.gen();
                l
            })
            .collect();
        StWord::from_letters(ring, letters).expect("one ring")
    }
}

/// The rings exercised by the randomized suites.
pub fn sample_rings() -> Vec<Ring> {
    ["Q[t,s]", "Q[t,s]/(t^2)", "Q[t,s,z,z^-1]", "Z[i][x]", "Z[C4][x]", "F2[e]/(e^2)[x]", "F2[x]"]
        .iter()
        .map(|d| d.parse().expect("valid descriptor"))
        .collect()
}

/// Run `cases` trials; record the first counterexample if any.
fn suite(rep: &mut Report, id: &str, anchor: &str, cases: usize, mut trial: impl FnMut() -> Result<Option<String>>) {
    let mut failures = 0usize;
    let mut first = None;
    for _ in 0..cases {
        let outcome = trial().unwrap_or_else(|e| Some(format!("error: {e}")));
        if let Some(bad) = outcome {
            failures += 1;
            first.get_or_insert(bad);
        }
    }
    let computed = match first {
        None => format!("{cases} cases, 0 failures"),
        Some(bad) => format!("{cases} cases, {failures} failures; first: {bad}"),
    };
    rep.check(id, anchor, failures == 0, computed, format!("{cases} cases, 0 failures"));
}

fn fail_if(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(what())
    }
}

pub fn ring_axioms(rep: &mut Report, rng: &mut ChaCha8Rng, cases: usize) {
    for ring in sample_rings() {
        let id = format!("prop.ring_axioms[{}]", ring.descriptor());
        suite(rep, &id, "commutative ring axioms", cases, || {
            let [a, b, c] = [0, 1, 2].map(|_| sample::elem(rng, &ring, 3, 2));
            let one = ring.one();
            let zero = ring.zero();
            let ok = &(&a * &b) * &c == &a * &(&b * &c)
                && &a * &b == &b * &a
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &(&a + &b) + &c == &a + &(&b + &c)
                && &a * &one == a
                && &a + &zero == a
                && (&a + &(-&a)).is_zero();
            Ok(fail_if(ok, || format!("a={a}, b={b}, c={c}")))
        });
    }
}

pub fn hom_properties(rep: &mut Report, rng: &mut ChaCha8Rng, cases: usize) {
    let homs = [(Hom::TruncateT2, "Q[t,s]"), (Hom::Psi, "Z[C4][x]"), (Hom::Rho, "Z[i][x]")];
    for (h, src) in homs {
        let ring: Ring = src.parse().expect("valid descriptor");
        suite(rep, &format!("prop.hom[{h}]"), "additive, multiplicative, unital", cases, || {
            let a = sample::elem(rng, &ring, 3, 3);
            let b = sample::elem(rng, &ring, 3, 3);
            let ok = h.apply(&(&a * &b))? == &h.apply(&a)? * &h.apply(&b)?
                && h.apply(&(&a + &b))? == &h.apply(&a)? + &h.apply(&b)?
                && h.apply(&ring.one())?.is_one();
            Ok(fail_if(ok, || format!("a={a}, b={b}")))
        });
    }
}

pub fn ideal_closure(rep: &mut Report, rng: &mut ChaCha8Rng, cases: usize) {
    let cases_ = [
        (IdealSpec::MonomialT2, "Q[t,s]", "t^2"),
        (IdealSpec::PrincipalTwo, "Z[i][x]", "2"),
        (IdealSpec::PrincipalOneMinusSigmaSq, "Z[C4][x]", "1-σ^2"),
    ];
    for (ideal, src, gen) in cases_ {
        let ring: Ring = src.parse().expect("valid descriptor");
        let g = ring.elem(gen);
        suite(rep, &format!("prop.ideal_closure[{ideal}]"), "ideal closed under + and ring multiples", cases, || {
            let p = &g * &sample::elem(rng, &ring, 3, 2);
            let q = &g * &sample::elem(rng, &ring, 3, 2);
            let r = sample::elem(rng, &ring, 3, 2);
            let ok = ideal.contains(&p)? && ideal.contains(&(&p + &q))? && ideal.contains(&(&r * &p))?;
            Ok(fail_if(ok, || format!("p={p}, q={q}, r={r}")))
        });
    }
}

pub fn det_multiplicative(rep: &mut Report, rng: &mut ChaCha8Rng, cases: usize) {
    let ring = laurent::base_ring();
    suite(rep, "prop.det_multiplicative", "det(AB) = det(A) det(B)", cases, || {
        let n = rng.gen_range(1..=3);
        let a = sample::matrix(rng, &ring, n, 2, 2);
        let b = sample::matrix(rng, &ring, n, 2, 2);
        let ok = a.try_mul(&b)?.det()? == &a.det()? * &b.det()?;
        Ok(fail_if(ok, || format!("A={a}, B={b}")))
    });
}

pub fn word_properties(rep: &mut Report, rng: &mut ChaCha8Rng, cases: usize) {
    let ring = dual_ring();
    suite(rep, "prop.eval_homomorphism", "eval(w1 w2) = eval(w1) eval(w2), det = 1", cases, || {
        let n = rng.gen_range(2..=3);
        let w1 = sample::word(rng, &ring, n, 4);
        let w2 = sample::word(rng, &ring, n, 4);
        let e = w1.concat(&w2)?.eval(n)?;
        let ok = e == w1.eval(n)?.try_mul(&w2.eval(n)?)? && e.det()?.is_one();
        Ok(fail_if(ok, || format!("w1={w1}, w2={w2}")))
    });
    let eps = ring.elem("ε");
    suite(rep, "prop.dennis_stein_identity", "Dennis-Stein words evaluate to I", cases, || {
        let n = rng.gen_range(2..=3);
        let i = rng.gen_range(1..=n);
        let j = (i % n) + 1;
        let nil = &eps * &sample::elem(rng, &ring, 3, 3);
        let other = sample::elem(rng, &ring, 3, 3);
        let (a, b) = if rng.gen() { (nil, other) } else { (other, nil) };
        let ok = dennis_stein_word(i, j, &a, &b)?.eval(n)?.is_identity();
        Ok(fail_if(ok, || format!("<{a}, {b}> at ({i},{j})")))
    });
}

pub fn generalized_units(rep: &mut Report, rng: &mut ChaCha8Rng, units: usize) {
    suite(rep, "laurent.generalized_units", "any unit a + b·st with a != 0", units, || {
        let mut a = sample::rational(rng, 9, 9);
        while a == BigRational::from_integer(0.into()) {
            a = sample::rational(rng, 9, 9);
        }
        let b = sample::rational(rng, 9, 9);
        let k1 = laurent::generalized_k1(&a, &b)?;
        let m = k1.matrix();
        let det_unit = m.det()?.try_invert().is_ok();
        let trivial = laurent::specialize(m, Symbol::S)?.is_identity();
        let sub = m.entries_in_subring(SubringSpec);
        Ok(fail_if(det_unit && trivial && sub, || format!("a={a}, b={b}: det unit {det_unit}, s->0 {trivial}, subring {sub}")))
    });
}

/// Verschiebung and Frobenius on the 10×10 N, and its trivial shift-equivalence witness.
pub fn nil_maps(rep: &mut Report, n: &NilRep) -> Result<()> {
    let m = n.matrix();
    let v2 = verschiebung(n, 2)?;
    let size = v2.matrix().rows();
    rep.check("nil.verschiebung_2", "V_2(N) is 20x20 nilpotent", size == 20, format!("{size}x{size}, index {}", v2.index()), "20x20 nilpotent");
    let v1 = verschiebung(n, 1)?;
    rep.check("nil.verschiebung_1", "V_1(N) = N", &v1 == n, v1.matrix(), m);
    let f10 = frobenius(n, 10)?;
    rep.check("nil.frobenius_10", "F_10(N) = 0", f10.matrix().is_zero(), f10.matrix(), 0);
    let zero = Matrix::zero(m.ring(), 1, 1);
    let w = SeWitness { u: Matrix::zero(m.ring(), 10, 1), v: Matrix::zero(m.ring(), 1, 10), lag: 10 };
    rep.check("nil.se_to_zero", "N is SE to (0) with lag 10", verify_se(m, &zero, &w)?, "accepted", "accepted");
    Ok(())
}

/// Overwrite entry `(r, c)` of `m` with `entry + 1`.
fn bump(m: &Matrix, r: usize, c: usize) -> Result<Matrix> {
    let mut out = m.clone();
    out.set(r, c, m.get(r, c) + &m.ring().one())?;
    Ok(out)
}

/// The three trivial witnesses, and their single-entry perturbations.
pub fn witness_checks(rep: &mut Report) -> Result<()> {
    let q: Ring = "Q[t]".parse().expect("valid descriptor");
    let a = Matrix::parse(&q, &[&["t", "1"], &["2", "t^2"]])?;
    let n = a.rows();

    // A ⊕ 0 ~ A through U = [A; 0], V = [I | 0].
    let a0 = a.direct_sum(&Matrix::zero(&q, 1, 1))?;
    let u = Matrix::block_assemble(&q, n + 1, n, &[(0, 0, &a)])?;
    let v = Matrix::block_assemble(&q, n, n + 1, &[(0, 0, &Matrix::identity(&q, n))])?;
    let w = EsseWitness { u: u.clone(), v: v.clone() };
    rep.check("sse.direct_sum_zero", "A ⊕ 0 = UV, A = VU", verify_esse(&a0, &a, &w)?, "accepted", "accepted");
    let bad_u = EsseWitness { u: bump(&u, 0, 0)?, v: v.clone() };
    let bad_v = EsseWitness { u, v: bump(&v, 0, 0)? };
    let rejected = !verify_esse(&a0, &a, &bad_u)? && !verify_esse(&a0, &a, &bad_v)?;
    rep.check("sse.direct_sum_zero_perturbed", "perturbed U or V rejected", rejected, rejected, true);

    // [[0,1],[0,0]] ~ (0), as a one-link chain.
    let nil = Matrix::parse(&q, &[&["0", "1"], &["0", "0"]])?;
    let zero = Matrix::zero(&q, 1, 1);
    let w = EsseWitness { u: Matrix::parse(&q, &[&["1"], &["0"]])?, v: Matrix::parse(&q, &[&["0", "1"]])? };
    let chain = SseChain { start: nil.clone(), steps: vec![(zero.clone(), w.clone())] };
    let ok = verify_sse_chain(&chain)? == ChainVerdict::Valid;
    rep.check("sse.nilpotent_chain", "N = UV, (0) = VU", ok, "valid", "valid");
    let mut broken = 0;
    for (du, dv) in [(true, false), (false, true)] {
        let w2 = EsseWitness {
            u: if du { bump(&w.u, 1, 0)? } else { w.u.clone() },
            v: if dv { bump(&w.v, 0, 0)? } else { w.v.clone() },
        };
        let c = SseChain { start: nil.clone(), steps: vec![(zero.clone(), w2)] };
        if verify_sse_chain(&c)? == ChainVerdict::BrokenLink(0) {
            broken += 1;
        }
    }
    rep.check("sse.nilpotent_chain_perturbed", "perturbed link reported at index 0", broken == 2, broken, 2);

    // N ~ (0) in the shift-equivalence sense, lag = index.
    let se = SeWitness { u: Matrix::zero(&q, 2, 1), v: Matrix::zero(&q, 1, 2), lag: 2 };
    rep.check("se.nilpotent_to_zero", "N^2 = UV, 0 = VU, NU = U0, VN = 0V", verify_se(&nil, &zero, &se)?, "accepted", "accepted");
    let bad_u = SeWitness { u: bump(&se.u, 1, 0)?, ..se.clone() };
    let bad_v = SeWitness { v: bump(&se.v, 0, 0)?, ..se.clone() };
    let rejected = !verify_se(&nil, &zero, &bad_u)? && !verify_se(&nil, &zero, &bad_v)?;
    rep.check("se.nilpotent_to_zero_perturbed", "perturbed U or V rejected", rejected, rejected, true);
    Ok(())
}

pub fn verify_all(opts: Options) -> Result<Report> {
    let mut rep = Report::new();
    let t3 = laurent::run()?;
    rep.extend(t3.report);
    rep.extend(groupring::run()?.report);
    nil_maps(&mut rep, &t3.n)?;
    witness_checks(&mut rep)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    generalized_units(&mut rep, &mut rng, opts.units);
    ring_axioms(&mut rep, &mut rng, opts.cases);
    hom_properties(&mut rep, &mut rng, opts.cases);
    ideal_closure(&mut rep, &mut rng, opts.cases);
    det_multiplicative(&mut rep, &mut rng, opts.cases);
    word_properties(&mut rep, &mut rng, opts.cases);
    Ok(rep)
}
