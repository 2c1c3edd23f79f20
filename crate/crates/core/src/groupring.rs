//! The group-ring construction: the words Y and Z over ℤ[i][x], their
//! reduction to dual numbers, the lift through ψ to ℤ[ℤ/4][x], and the
//! Kähler-differential check on `⟨ε, x+ε⟩`.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{linearize, specialize, NilRep};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::rings::{canonical_lift, halve_gaussian, Base, Elem, Hom, IdealSpec, Ring, Symbol};
use crate::steinberg::{dennis_stein_word, dual_ring, reduced_x_word, Letter, StWord};

/// ℤ[i][x].
pub fn gaussian_ring() -> Ring {
    "Z[i][x]".parse().expect("valid descriptor")
}

/// ℤ[ℤ/4][x].
pub fn group_ring() -> Ring {
    "Z[C4][x]".parse().expect("valid descriptor")
}

/// 𝔽₂[x].
pub fn f2_ring() -> Ring {
    "F2[x]".parse().expect("valid descriptor")
}

fn word(letters: &[(usize, usize, &str)]) -> StWord {
    let r = gaussian_ring();
    let letters = letters.iter().map(|&(i, j, p)| Letter::new(i, j, r.elem(p)).expect("i != j")).collect();
    StWord::from_letters(&r, letters).expect("one ring")
}

/// `Y = e21(-x+1-i+(1-i)x²) e12(1-i) e21(x+i-1) e12(i-1)`.
pub fn word_y() -> StWord {
    word(&[(2, 1, "-x+1-i+(1-i)*x^2"), (1, 2, "1-i"), (2, 1, "x+i-1"), (1, 2, "i-1")])
}

/// `Z = e12(1) e21(-1) e12(1) e12((i-1)x-1) e21(1+(i-1)x) e12((i-1)x-1)`.
pub fn word_z() -> StWord {
    word(&[
        (1, 2, "1"),
        (2, 1, "-1"),
        (1, 2, "1"),
        (1, 2, "(i-1)*x-1"),
        (2, 1, "1+(i-1)*x"),
        (1, 2, "(i-1)*x-1"),
    ])
}

/// A matrix over ℤ[i][x] congruent to the identity mod 2, with determinant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeRep(Matrix);

impl RelativeRep {
    pub fn new(m: Matrix) -> Result<RelativeRep> {
        if m.ring().base() != Base::Gaussian {
            return Err(Error::NotInSource(m.ring().descriptor()));
        }
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let diff = m.try_sub(&Matrix::identity(m.ring(), m.rows()))?;
        if !diff.entries_in_ideal(IdealSpec::PrincipalTwo)? {
            return Err(Error::NotInIdeal { elem: diff.to_string(), ideal: IdealSpec::PrincipalTwo.to_string() });
        }
        let det = m.det()?;
        if !det.is_one() {
            return Err(Error::Verification(format!("det = {det}")));
        }
        Ok(RelativeRep(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }
}

/// `eval(Y·Z)` over ℤ[i][x].
pub fn yz_matrix() -> Result<RelativeRep> {
    RelativeRep::new(word_y().concat(&word_z())?.eval(2)?)
}

/// Apply ρ entrywise.
pub fn reduce_to_dual(m: &RelativeRep) -> Result<Matrix> {
    m.0.apply_hom(Hom::Rho)
}

/// Entrywise `δ + (1-σ²)·ĝ` where `entry - δ = 2g` and `ĝ` is the canonical lift of g.
pub fn lift_to_group_ring(m: &RelativeRep) -> Result<Matrix> {
    let src = m.matrix();
    let target = group_ring_of(src.ring());
    let gen = target.elem("1-σ^2");
    let mut entries = Vec::with_capacity(src.rows() * src.cols());
    for r in 0..src.rows() {
        for c in 0..src.cols() {
            let delta = if r == c { src.ring().one() } else { src.ring().zero() };
            let g = halve_gaussian(&(src.get(r, c) - &delta))?;
            let d = if r == c { target.one() } else { target.zero() };
            entries.push(&d + &(&gen * &canonical_lift(&g)?));
        }
    }
    let lifted = Matrix::new(&target, src.rows(), src.cols(), entries)?;
    let back = lifted.apply_hom(Hom::Psi)?;
    if &back != src {
        return Err(Error::Verification(format!("psi(lift) = {back}, expected {src}")));
    }
    let det = lifted.det()?;
    if !det.is_one() {
        return Err(Error::Verification(format!("det(lift) = {det}")));
    }
    Ok(lifted)
}

fn group_ring_of(r: &Ring) -> Ring {
    r.with_base(Base::GroupRingZ4)
}

/// Diagonal entries in `1 + (1-σ²)`, off-diagonal entries in `(1-σ²)`.
pub fn has_relative_shape(m: &Matrix) -> Result<bool> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let e = if r == c { m.get(r, c) - &m.ring().one() } else { m.get(r, c).clone() };
            if !IdealSpec::PrincipalOneMinusSigmaSq.contains(&e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Kähler differential `c·dx` of 𝔽₂[x].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialF2(pub Elem);

impl DifferentialF2 {
    pub fn coefficient(&self) -> &Elem {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for DifferentialF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else if self.0.is_one() {
            f.write_str("dx")
        } else {
            write!(f, "({}) dx", self.0)
        }
    }
}

/// `D(⟨fε, g+g′ε⟩) = f·dg`.
pub fn kahler_d(f: &Elem, g: &Elem) -> Result<DifferentialF2> {
    Ok(DifferentialF2(f.try_mul(&g.derivative(Symbol::X)?)?))
}

/// Printed reference values.
pub mod display {
    use super::*;

    const A: &str = "1 - (1-σ^2)*(x-2*x^2+2*x^3-σ+x*σ+x^2*σ)";
    const B: &str = "(σ^2-1)*(1+2*x-x^2-x^3-2*x^4+σ-x*σ-2*x^2*σ-3*x^3*σ+2*x^4*σ)";
    const C: &str = "(σ^2-1)*(-1+2*x-5*x^2+7*x^3-3*x^4+2*x^5-σ+2*x*σ-2*x^3*σ+3*x^4*σ-2*x^5*σ)";
    const D: &str = "1 - (1-σ^2)*(2+x-2*x^2-4*x^4-2*x^5+σ-3*x*σ-x^2*σ-4*x^3*σ+6*x^4*σ-4*x^5*σ+4*x^6*σ)";

    pub fn theorem42() -> Matrix {
        Matrix::parse(&group_ring(), &[&[A, B], &[C, D]]).expect("valid")
    }
}

/// The 12×12 companion from `L(0)⁻¹·L`, where `L` is the lifted block.
pub fn theorem42_higman(lifted: &Matrix) -> Result<NilRep> {
    linearize(lifted, Symbol::X)
}

#[derive(Debug, Clone)]
pub struct Theorem4 {
    pub yz: RelativeRep,
    pub lifted: Matrix,
    pub report: Report,
}

pub fn run() -> Result<Theorem4> {
    let mut rep = Report::new();
    let dr = dual_ring();
    let id_dual = Matrix::identity(&dr, 2);

    let ds = dennis_stein_word(1, 2, &dr.elem("ε"), &dr.elem("x+ε"))?.eval(2)?;
    rep.check("words.dennis_stein_identity", "<ε, x+ε> evaluates to I", ds.is_identity(), &ds, &id_dual);
    let x = reduced_x_word().eval(2)?;
    rep.check("words.x_identity", "X evaluates to I", x.is_identity(), &x, &id_dual);
    let (y, z) = (word_y(), word_z());
    rep.check("words.lengths", "Y and Z have 4 and 6 letters", (y.len(), z.len()) == (4, 6), format!("{} {}", y.len(), z.len()), "4 6");

    let yz = yz_matrix()?;
    let m = yz.matrix();
    let det = m.det()?;
    rep.check("yz.det", "det YZ = 1", det.is_one(), &det, 1);
    let diff = m.try_sub(&Matrix::identity(m.ring(), 2))?;
    rep.check("yz.congruent", "YZ - I in M2((2))", diff.entries_in_ideal(IdealSpec::PrincipalTwo)?, &diff, "(2)");
    let dual = reduce_to_dual(&yz)?;
    rep.check("yz.reduces_to_identity", "rho(YZ) = I", dual.is_identity(), &dual, &id_dual);

    let lifted = lift_to_group_ring(&yz)?;
    let back = lifted.apply_hom(Hom::Psi)?;
    rep.check("c4.psi", "psi(lift) = YZ", &back == m, &back, m);
    let det = lifted.det()?;
    rep.check("c4.det", "det(lift) = 1", det.is_one(), &det, 1);
    rep.check("c4.shape", "1 - (1-σ^2)(…) on the diagonal, (σ^2-1)(…) off it", has_relative_shape(&lifted)?, &lifted, "relative shape");
    let shown = display::theorem42();
    let shown_psi = shown.apply_hom(Hom::Psi)?;
    rep.check("c4.display_psi", "psi of the printed block = YZ", &shown_psi == m, &shown_psi, m);
    rep.compare_display("c4.display", "printed block over Z[C4][x]", lifted == shown, &lifted, &shown);

    let at0 = specialize(&lifted, Symbol::X)?;
    let det0 = at0.det()?;
    rep.check("c4.at_x0_det", "x -> 0 specialization has det 1", det0.is_one(), &at0, 1);

    let f2 = f2_ring();
    let d = kahler_d(&f2.one(), &f2.elem("x"))?;
    rep.check("kahler.epsilon_x", "D(<ε, x+ε>) = dx", d.coefficient().is_one(), &d, "dx");
    let d2 = kahler_d(&f2.elem("x"), &f2.elem("x^2"))?;
    rep.check("kahler.x_x2", "D(<xε, x^2>) = 0", d2.is_zero(), &d2, 0);

    let n = theorem42_higman(&lifted)?;
    rep.check("higman.size", "12x12 nilpotent companion", n.matrix().rows() == 12, n.matrix().rows(), 12);

    Ok(Theorem4 { yz, lifted, report: rep })
}
