//! The clutching construction over ℚ[t,s]: a lift of `diag(u, u⁻¹)`, the
//! idempotent pair it defines, excision to ℚ[t²,t³,s], the `·z` loop map,
//! and Higman's linearization.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::rings::{Base, Coeff, Elem, Hom, IdealSpec, Ring, SubringSpec, Symbol, Var};

/// ℚ[t,s].
pub fn base_ring() -> Ring {
    Ring::polynomial(Base::Rational, &[Symbol::T, Symbol::S])
}

/// ℚ[t,s,z,z⁻¹], where the K₁ representatives live.
pub fn loop_ring() -> Ring {
    base_ring().with_var(Var::laurent(Symbol::Z))
}

/// ℚ[t,z,z⁻¹], where the Higman blocks and N live.
pub fn block_ring() -> Ring {
    loop_ring().without_var(Symbol::S)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

fn p_matrix(ring: &Ring) -> Matrix {
    Matrix::diagonal(ring, &[ring.one(), ring.zero()]).expect("2x2")
}

/// `diag(1, -1)`.
fn d_matrix(ring: &Ring) -> Matrix {
    Matrix::diagonal(ring, &[ring.one(), ring.from_int(-1)]).expect("2x2")
}

/// A pair of matrices whose difference lies entrywise in an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublePair {
    pub first: Matrix,
    pub second: Matrix,
    pub ideal: IdealSpec,
}

impl DoublePair {
    pub fn new(first: Matrix, second: Matrix, ideal: IdealSpec) -> Result<DoublePair> {
        let diff = first.try_sub(&second)?;
        if !diff.entries_in_ideal(ideal)? {
            return Err(Error::NotInIdeal { elem: diff.to_string(), ideal: ideal.to_string() });
        }
        Ok(DoublePair { first, second, ideal })
    }

    pub fn is_diagonal(&self) -> bool {
        self.first == self.second
    }
}

/// An invertible matrix standing for a class in K₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K1Rep(pub Matrix);

impl K1Rep {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    /// The determinant is a recognized unit and `s ↦ 0` gives the identity.
    pub fn check_nk1(&self) -> Result<()> {
        let m = &self.0;
        m.det()?.try_invert()?;
        let at_zero = specialize(m, Symbol::S)?;
        ensure(at_zero.is_identity(), || format!("s -> 0 gives {at_zero}, not the identity"))
    }
}

/// A square nilpotent matrix standing for a class in Nil₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilRep(pub Matrix);

impl NilRep {
    /// Accepts `m` only if `mᵏ = 0` for some `k ≤ size`.
    pub fn new(m: Matrix) -> Result<NilRep> {
        let n = m.rows();
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        m.nilpotency_index(n).ok_or(Error::NotNilpotentWithin(n))?;
        Ok(NilRep(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn index(&self) -> usize {
        self.0.nilpotency_index(self.0.rows()).expect("checked at construction")
    }
}

/// Substitute `sym ↦ 0` entrywise, landing in the ring without `sym`.
pub fn specialize(m: &Matrix, sym: Symbol) -> Result<Matrix> {
    let target = m.ring().without_var(sym);
    let zero = target.zero();
    m.map_entries(&target, |e| e.substitute(&target, &[(sym, zero.clone())]))
}

/// The lift of `diag(1+st, 1-st)` used throughout.
pub fn lift_a() -> Result<Matrix> {
    let r = base_ring();
    let a = Matrix::parse(&r, &[&["1+s*t+s^2*t^2+s^3*t^3", "-s^2*t^2"], &["s^2*t^2", "1-s*t"]])?;
    verify_lift(&a, &r.elem("1+s*t"))?;
    Ok(a)
}

/// `a` reduces mod t² to `diag(u, u⁻¹)` and has determinant one.
pub fn verify_lift(a: &Matrix, u: &Elem) -> Result<()> {
    let reduced = a.apply_hom(Hom::TruncateT2)?;
    let ub = Hom::TruncateT2.apply(u)?;
    let expected = Matrix::diagonal(reduced.ring(), &[ub.clone(), ub.try_invert()?])?;
    ensure(reduced == expected, || format!("{a} reduces to {reduced}, not {expected}"))?;
    let det = a.det()?;
    ensure(det.is_one(), || format!("det = {det}"))
}

/// `e12(u) e21(-v) e12(u) e12(-1) e21(1) e12(-1)`; a lift of `diag(u, u⁻¹)`
/// whenever `v` lifts `u⁻¹`.
pub fn whitehead_lift(u: &Elem, v: &Elem) -> Result<Matrix> {
    let r = u.ring();
    let e = |i, j, a: &Elem| Matrix::elementary(r, 2, i, j, a);
    let one = r.one();
    let factors = [e(0, 1, u)?, e(1, 0, &-v)?, e(0, 1, u)?, e(0, 1, &-&one)?, e(1, 0, &one)?, e(0, 1, &-&one)?];
    factors.iter().skip(1).try_fold(factors[0].clone(), |acc, f| acc.try_mul(f))
}

/// The four displayed factors of A, `e12(1+st) e21(-(1+st)) e12(1+st) [[0,-1],[1,0]]`,
/// multiplied left to right and right to left.
pub fn four_factor_products() -> Result<(Matrix, Matrix)> {
    let r = base_ring();
    let u = r.elem("1+s*t");
    let factors = [
        Matrix::elementary(&r, 2, 0, 1, &u)?,
        Matrix::elementary(&r, 2, 1, 0, &-&u)?,
        Matrix::elementary(&r, 2, 0, 1, &u)?,
        Matrix::parse(&r, &[&["0", "-1"], &["1", "0"]])?,
    ];
    let lr = factors.iter().skip(1).try_fold(factors[0].clone(), |acc, f| acc.try_mul(f))?;
    let rl = factors.iter().rev().skip(1).try_fold(factors[3].clone(), |acc, f| acc.try_mul(f))?;
    Ok((lr, rl))
}

/// The idempotent pair `(D·A·P·A⁻¹·D, P)` attached to a lift `A`.
pub fn clutch_pair(a: &Matrix) -> Result<DoublePair> {
    let r = a.ring();
    let d = d_matrix(r);
    let p = p_matrix(r);
    let first = d.try_mul(a)?.try_mul(&p)?.try_mul(&a.inverse_small()?)?.try_mul(&d)?;
    DoublePair::new(first, p, IdealSpec::MonomialT2)
}

/// The displayed pair `(B₁, P)`, checked against [`clutch_pair`] of [`lift_a`].
pub fn double_idempotent_b() -> Result<DoublePair> {
    let r = base_ring();
    let b1 = Matrix::parse(
        &r,
        &[&["1-s^4*t^4", "(-s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)"], &["s^3*t^3-s^2*t^2", "s^4*t^4"]],
    )?;
    let pair = DoublePair::new(b1, p_matrix(&r), IdealSpec::MonomialT2)?;
    ensure(pair.first.is_idempotent(), || "B1 is not idempotent".into())?;
    ensure(pair.second.is_idempotent(), || "B2 is not idempotent".into())?;
    let derived = clutch_pair(&lift_a()?)?;
    ensure(derived == pair, || format!("pair from A is {}, displayed {}", derived.first, pair.first))?;
    Ok(pair)
}

/// `(Aᵀ)⁻¹ · P · Aᵀ`.
pub fn clutch_projector(a: &Matrix, p: &Matrix) -> Result<Matrix> {
    if !p.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let at = a.transpose();
    let e = at.inverse_small()?.try_mul(p)?.try_mul(&at)?;
    ensure(e.is_idempotent(), || format!("conjugate {e} is not idempotent"))?;
    Ok(e)
}

/// The three bookkeeping stages carrying `[B] - [P,P]` to `[P,e₂] - [P,P]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transport {
    /// Relative pair over ℚ[t,s].
    pub relative: DoublePair,
    /// Ideal part `e₂ - P` of the unitized form; its integer part is `P`.
    pub ideal_part: Matrix,
    pub integer_part: Matrix,
    /// Relative pair `(P, e₂)` over ℚ[t²,t³,s].
    pub target: DoublePair,
}

impl Transport {
    pub fn is_trivial(&self) -> bool {
        self.relative.is_diagonal() && self.ideal_part.is_zero() && self.target.is_diagonal()
    }
}

pub fn excision_transport(b: &DoublePair, e2: &Matrix) -> Result<Transport> {
    let relative = DoublePair::new(b.first.clone(), b.second.clone(), b.ideal)?;
    let p = relative.second.clone();
    ensure(p.is_idempotent(), || "integer part is not idempotent".into())?;
    ensure(e2.is_idempotent(), || "e2 is not idempotent".into())?;
    let ideal_part = e2.try_sub(&p)?;
    if !ideal_part.entries_in_ideal(b.ideal)? {
        return Err(Error::NotInIdeal { elem: ideal_part.to_string(), ideal: b.ideal.to_string() });
    }
    let target = DoublePair::new(p.clone(), e2.clone(), b.ideal)?;
    for m in [&target.first, &target.second] {
        ensure(m.entries_in_subring(SubringSpec), || format!("{m} leaves {SubringSpec}"))?;
    }
    Ok(Transport { relative, ideal_part, integer_part: p, target })
}

/// `I + (z-1)·q` over the ring with a Laurent variable z adjoined.
pub fn loop_z(q: &Matrix) -> Result<Matrix> {
    if !q.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let ring = q.ring().with_var(Var::laurent(Symbol::Z));
    let q = q.embed(&ring)?;
    let zm1 = &ring.var(Symbol::Z)? - &ring.one();
    Matrix::identity(&ring, q.rows()).try_add(&q.scale(&zm1)?)
}

/// Loop `e₂` of a lift and scale the first column by `z⁻¹`.
pub fn k1_from_lift(a: &Matrix) -> Result<K1Rep> {
    let e2 = clutch_projector(a, &p_matrix(a.ring()))?;
    let looped = loop_z(&e2)?;
    let zinv = looped.ring().elem("z^-1");
    let m = looped.col_scale(0, &zinv)?;
    let rep = K1Rep(m);
    rep.check_nk1()?;
    let m = rep.matrix();
    ensure(m.entries_in_subring(SubringSpec), || format!("{m} leaves {SubringSpec}"))?;
    Ok(rep)
}

/// The NK₁ representative over ℚ[t²,t³,z,z⁻¹,s].
pub fn theorem31_matrix() -> Result<K1Rep> {
    let rep = k1_from_lift(&lift_a()?)?;
    ensure(rep.matrix().det()?.is_one(), || "det is not 1".into())?;
    Ok(rep)
}

/// `M = I - rep` split as `Σ sⁱ Mᵢ`, `i = 1..d`, blocks over the ring without s.
pub fn decompose_m(rep: &K1Rep) -> Result<Vec<Matrix>> {
    decompose_in(rep.matrix(), Symbol::S)
}

/// `I - m = Σ symⁱ Mᵢ` for `i = 1..d`; fails if `I - m` has a `sym`-constant part.
pub fn decompose_in(m: &Matrix, sym: Symbol) -> Result<Vec<Matrix>> {
    let m = Matrix::identity(m.ring(), m.rows()).try_sub(m)?;
    let mut d = 0;
    for e in m.entries() {
        if !e.coefficient_of(sym, 0)?.is_zero() {
            return Err(Error::ConstantTerm);
        }
        if let Some((_, hi)) = e.degree_range(sym) {
            d = d.max(hi);
        }
    }
    let target = m.ring().without_var(sym);
    (1..=d).map(|i| m.map_entries(&target, |e| e.coefficient_of(sym, i))).collect()
}

/// The block companion with `[M₁ … M_d]` on top and identities below the diagonal.
pub fn higman_companion(blocks: &[Matrix]) -> Result<NilRep> {
    let first = blocks.first().ok_or(Error::EmptyDecomposition)?;
    let n = first.rows();
    let ring = first.ring().clone();
    for b in blocks {
        if !b.is_square() || b.rows() != n {
            return Err(Error::Dimension(format!("block of shape {}x{}, expected {n}x{n}", b.rows(), b.cols())));
        }
    }
    let d = blocks.len();
    let id = Matrix::identity(&ring, n);
    let mut placed: Vec<(usize, usize, &Matrix)> = blocks.iter().enumerate().map(|(k, b)| (0, k * n, b)).collect();
    placed.extend((1..d).map(|k| (k * n, (k - 1) * n, &id)));
    NilRep::new(Matrix::block_assemble(&ring, d * n, d * n, &placed)?)
}

/// Higman's trick for an invertible `m` over a ring containing `sym`. When
/// `m` is not the identity at `sym = 0` it is first multiplied by the inverse
/// of that specialization.
pub fn linearize(m: &Matrix, sym: Symbol) -> Result<NilRep> {
    let at0 = specialize(m, sym)?.embed(m.ring())?;
    let normalized = if at0.is_identity() { m.clone() } else { at0.inverse_small()?.try_mul(m)? };
    higman_companion(&decompose_in(&normalized, sym)?)
}

/// `I - s·N` over the ring with s adjoined.
pub fn one_minus_s_n(n: &Matrix) -> Result<Matrix> {
    let ring = n.ring().with_var(Var::ordinary(Symbol::S));
    let s = ring.var(Symbol::S)?;
    Matrix::identity(&ring, n.rows()).try_sub(&n.embed(&ring)?.scale(&s)?)
}

/// Lift of `diag(u, u⁻¹)` for `u = a + b·st`, with `v = a⁻¹ - a⁻²b·st`.
pub fn generalized_lift(a: &BigRational, b: &BigRational) -> Result<Matrix> {
    if a.is_zero() {
        return Err(Error::NotAUnit(format!("{a} + {b}*s*t")));
    }
    let r = base_ring();
    let c = |q: &BigRational| r.constant(Coeff::Rational(q.clone()));
    let st = r.elem("s*t");
    let u = &c(a)? + &(&c(b)? * &st);
    let ainv = a.recip();
    let v = &c(&ainv)? - &(&c(&(&ainv * &ainv * b))? * &st);
    let lift = whitehead_lift(&u, &v)?;
    verify_lift(&lift, &u)?;
    Ok(lift)
}

/// The K₁ representative obtained from the unit `a + b·st`.
pub fn generalized_k1(a: &BigRational, b: &BigRational) -> Result<K1Rep> {
    k1_from_lift(&generalized_lift(a, b)?)
}

/// Printed reference values, kept separate from the computation.
pub mod display {
    use super::*;

    pub fn e2() -> Matrix {
        Matrix::parse(
            &base_ring(),
            &[&["1-s^4*t^4", "s^2*t^2-s^3*t^3"], &["s^2*t^2*(1+s*t+s^2*t^3+s^3*t^3)", "s^4*t^4"]],
        )
        .expect("valid")
    }

    pub fn theorem31() -> Matrix {
        Matrix::parse(
            &loop_ring(),
            &[
                &["1-(1+z^-1)*s^4*t^4", "(z-1)*(s^2*t^2-s^3*t^3)"],
                &["(1-z^-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "1+(z-1)*(s^4*t^4)"],
            ],
        )
        .expect("valid")
    }

    pub fn m() -> Matrix {
        Matrix::parse(
            &loop_ring(),
            &[
                &["(1-z^-1)*s^4*t^4", "(1-z)*(s^2*t^2-s^3*t^3)"],
                &["(z^-1-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "(1-z)*(s^4*t^4)"],
            ],
        )
        .expect("valid")
    }

    pub fn n10() -> Matrix {
        let top: [[&str; 10]; 2] = [
            ["0", "0", "0", "(1-z)*t^2", "0", "(1-z)*(-t^3)", "(1-z^-1)*t^4", "0", "0", "0"],
            ["0", "0", "(z^-1-1)*t^2", "0", "(z^-1-1)*t^3", "0", "(z^-1-1)*t^4", "(1-z)*t^4", "(z^-1-1)*t^5", "0"],
        ];
        let mut rows: Vec<Vec<&str>> = top.iter().map(|r| r.to_vec()).collect();
        for k in 2..10 {
            let mut row = vec!["0"; 10];
            row[k - 2] = "1";
            rows.push(row);
        }
        let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        Matrix::parse(&block_ring(), &refs).expect("valid")
    }

    /// `M₁..M₅` read off the top block row of [`n10`].
    pub fn m_blocks() -> Vec<Matrix> {
        let n = n10();
        (0..5).map(|k| n.block(0, 2 * k, 2, 2).expect("in range")).collect()
    }
}

/// Everything the construction produces, with its verification report.
#[derive(Debug, Clone)]
pub struct Theorem3 {
    pub a: Matrix,
    pub pair: DoublePair,
    pub e2: Matrix,
    pub transport: Transport,
    pub rep: K1Rep,
    pub blocks: Vec<Matrix>,
    pub n: NilRep,
    pub report: Report,
}

pub fn run() -> Result<Theorem3> {
    let mut rep = Report::new();
    let r = base_ring();
    let lr = loop_ring();

    let a = lift_a()?;
    let diag = Matrix::parse(&r.with_t_truncation(Some(2))?, &[&["1+s*t", "0"], &["0", "1-s*t"]])?;
    let reduced = a.apply_hom(Hom::TruncateT2)?;
    rep.check("lift.reduces_to_diag", "pi_t2(A) = diag(1+st, 1-st)", reduced == diag, &reduced, &diag);
    let det = a.det()?;
    rep.check("lift.det", "det A = 1", det.is_one(), &det, 1);
    let a_inv = a.inverse_small()?;
    let a_inv_expected = Matrix::parse(&r, &[&["1-s*t", "s^2*t^2"], &["-s^2*t^2", "1+s*t+s^2*t^2+s^3*t^3"]])?;
    rep.check("lift.inverse", "A^-1 by adjugate", a_inv == a_inv_expected, &a_inv, &a_inv_expected);
    let (prod_lr, prod_rl) = four_factor_products()?;
    rep.compare_display("lift.four_factors_lr", "elementary factorization of A, left to right", prod_lr == a, &prod_lr, &a);
    rep.compare_display("lift.four_factors_rl", "elementary factorization of A, right to left", prod_rl == a, &prod_rl, &a);
    let wh = whitehead_lift(&r.elem("1+s*t"), &r.elem("1-s*t"))?;
    rep.check("lift.whitehead", "e12(u) e21(-v) e12(u) [[0,-1],[1,0]] with v = 1-st", wh == a, &wh, &a);

    let pair = double_idempotent_b()?;
    rep.check("pair.b1_idempotent", "B1^2 = B1", pair.first.is_idempotent(), &pair.first, "idempotent");
    rep.check("pair.b2_is_p", "B2 = diag(1,0)", pair.second == p_matrix(&r), &pair.second, p_matrix(&r));
    let diff = pair.first.try_sub(&pair.second)?;
    rep.check("pair.difference_in_ideal", "B1 - P in M2((t^2))", diff.entries_in_ideal(IdealSpec::MonomialT2)?, &diff, "(t^2)");

    let p = p_matrix(&r);
    let e2 = clutch_projector(&a, &p)?;
    let e2_expected = Matrix::parse(
        &r,
        &[&["1-s^4*t^4", "s^2*t^2-s^3*t^3"], &["s^2*t^2*(1+s*t+s^2*t^2+s^3*t^3)", "s^4*t^4"]],
    )?;
    rep.check("e2.value", "e2 = (A^T)^-1 P A^T", e2 == e2_expected, &e2, &e2_expected);
    rep.compare_display("e2.display", "printed e2", e2 == display::e2(), &e2, display::e2());
    rep.check("e2.idempotent", "e2^2 = e2", e2.is_idempotent(), &e2, "idempotent");
    let e2p = e2.try_sub(&p)?;
    rep.check("e2.minus_p_in_ideal", "e2 - P in M2((t^2))", e2p.entries_in_ideal(IdealSpec::MonomialT2)?, &e2p, "(t^2)");
    rep.check("e2.subring", "e2 over Q[t^2,t^3,s]", e2.entries_in_subring(SubringSpec), &e2, SubringSpec);
    let d = d_matrix(&r);
    let conj = d.try_mul(&pair.first.transpose())?.try_mul(&d)?;
    rep.check("e2.conjugate_of_b1", "e2 = D B1^T D, D = diag(1,-1)", conj == e2, &conj, &e2);

    let transport = excision_transport(&pair, &e2)?;
    rep.check("transport.relative", "[B] - [P,P] over Q[t,s]", transport.relative == pair, &transport.relative.first, &pair.first);
    rep.check("transport.unitized", "[e2 - P, P] - [0, P]", transport.ideal_part == e2p, &transport.ideal_part, &e2p);
    rep.check(
        "transport.target",
        "[P, e2] - [P, P] over Q[t^2,t^3,s]",
        transport.target.first == p && transport.target.second == e2,
        &transport.target.second,
        &e2,
    );

    let looped_p = loop_z(&p)?;
    let diag_z1 = Matrix::parse(&lr, &[&["z", "0"], &["0", "1"]])?;
    rep.check("loop.of_p", "loop_z(P) = diag(z,1)", looped_p == diag_z1, &looped_p, &diag_z1);
    let looped = loop_z(&e2)?;
    let back = Matrix::identity(&lr, 2).try_add(&e2.embed(&lr)?.scale(&lr.elem("z^-1-1"))?)?;
    let prod = looped.try_mul(&back)?;
    rep.check("loop.inverse", "(I+(z-1)e2)(I+(z^-1-1)e2) = I", prod.is_identity(), &prod, "I");
    let det_loop = looped.det()?;
    rep.check("loop.det", "det(I+(z-1)e2) = z", det_loop == lr.elem("z"), &det_loop, "z");

    let k1 = theorem31_matrix()?;
    let m = k1.matrix();
    let shown = display::theorem31();
    for (id, rr, cc) in [("thm31.entry12", 0, 1), ("thm31.entry21", 1, 0), ("thm31.entry22", 1, 1)] {
        rep.check(id, "NK1 representative, printed entry", m.get(rr, cc) == shown.get(rr, cc), m.get(rr, cc), shown.get(rr, cc));
    }
    let e11 = lr.elem("1-(1-z^-1)*s^4*t^4");
    rep.check("thm31.entry11", "z^-1 + (1-z^-1)(1-s^4t^4) expanded", m.get(0, 0) == &e11, m.get(0, 0), &e11);
    rep.compare_display("thm31.display", "NK1 representative as printed", *m == shown, m, &shown);
    let rs = looped.row_scale(0, &lr.elem("z^-1"))?;
    rep.check("thm31.row_scale_entry11", "first-row scaling gives the same (1,1)", rs.get(0, 0) == &e11, rs.get(0, 0), &e11);
    let det = m.det()?;
    rep.check("thm31.det", "det = 1", det.is_one(), &det, 1);
    let at0 = specialize(m, Symbol::S)?;
    rep.check("thm31.s_to_zero", "s -> 0 gives I", at0.is_identity(), &at0, "I");
    rep.check("thm31.subring", "entries in Q[t^2,t^3,z,z^-1,s]", m.entries_in_subring(SubringSpec), m, SubringSpec);

    let m_full = Matrix::identity(&lr, 2).try_sub(m)?;
    rep.check("m.value", "M = I - (NK1 representative)", m_full == display::m(), &m_full, display::m());
    let blocks = decompose_m(&k1)?;
    let mut sum = Matrix::zero(&lr, 2, 2);
    for (i, b) in blocks.iter().enumerate() {
        sum = sum.try_add(&b.embed(&lr)?.scale(&lr.var(Symbol::S)?.pow(i as u32 + 1))?)?;
    }
    rep.check("m.reassemble", "M = sum s^i M_i", sum == m_full, &sum, &m_full);
    let printed_blocks = display::m_blocks();
    rep.check("m.block_count", "five blocks", blocks.len() == 5, blocks.len(), 5);
    for (k, want) in printed_blocks.iter().enumerate() {
        let got = blocks.get(k).map(ToString::to_string).unwrap_or_else(|| "missing".into());
        rep.check(&format!("m.block{}", k + 1), "block of N's top row", blocks.get(k) == Some(want), got, want);
    }

    let n = higman_companion(&blocks)?;
    let nm = n.matrix();
    rep.check("n.display", "10x10 nilpotent N as printed", *nm == display::n10(), nm, display::n10());
    let n10 = nm.pow(10)?;
    rep.check("n.nilpotent", "N^10 = 0", n10.is_zero(), format!("index {}", n.index()), "index <= 10");
    let det_n = one_minus_s_n(nm)?.det()?;
    rep.check("n.det_one_minus_sn", "det(I - sN) = 1", det_n.is_one(), &det_n, 1);
    rep.check("n.subring", "N over Q[t^2,t^3,z,z^-1]", nm.entries_in_subring(SubringSpec), "N", SubringSpec);

    Ok(Theorem3 { a, pair, e2, transport, rep: k1, blocks, n, report: rep })
}
