use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::scalars::{DualF2, GaussianInt, GroupRingZ4};
use super::{Base, Coeff, Elem, Ring, Symbol};
use crate::error::{Error, Result};

/// The fixed ring homomorphisms used by the two constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hom {
    /// ℚ[t,s] → ℚ[t,s]/(t²): drop every term of t-degree ≥ 2.
    TruncateT2,
    /// ℤ[ℤ/4][x] → ℤ[i][x], σ ↦ i.
    Psi,
    /// ℤ[i][x] → F2[ε,x]/(ε²), i ↦ 1+ε, coefficients mod 2.
    Rho,
}

impl Hom {
    pub fn target(self, source: &Ring) -> Result<Ring> {
        let bad = || Error::NotInSource(source.descriptor());
        match self {
            Hom::TruncateT2 => {
                if source.t_truncation().is_some() || !source.has_var(Symbol::T) || source.is_laurent(Symbol::T) {
                    return Err(bad());
                }
                source.with_t_truncation(Some(2))
            }
            Hom::Psi if source.base() == Base::GroupRingZ4 => Ok(source.with_base(Base::Gaussian)),
            Hom::Rho if source.base() == Base::Gaussian => Ok(source.with_base(Base::DualF2)),
            _ => Err(bad()),
        }
    }

    pub fn apply(self, p: &Elem) -> Result<Elem> {
        let target = self.target(p.ring())?;
        match self {
            Hom::TruncateT2 => p.map_coeffs(&target, Coeff::clone),
            Hom::Psi => p.map_coeffs(&target, |c| match c {
                Coeff::GroupRingZ4(g) => Coeff::Gaussian(GaussianInt { re: &g.c[0] - &g.c[2], im: &g.c[1] - &g.c[3] }),
                _ => unreachable!("source base checked"),
            }),
            Hom::Rho => p.map_coeffs(&target, |c| match c {
                // re + im(1+ε) = (re+im) + im·ε
                Coeff::Gaussian(g) => Coeff::DualF2(DualF2::new((&g.re + &g.im).is_odd(), g.im.is_odd())),
                _ => unreachable!("source base checked"),
            }),
        }
    }
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hom::TruncateT2 => "π_t2",
            Hom::Psi => "ψ",
            Hom::Rho => "ρ",
        })
    }
}

/// The canonical set-theoretic lift ℤ[i][x] → ℤ[ℤ/4][x], `g₀ + g₁i ↦ g₀ + g₁σ`.
/// It is a section of [`Hom::Psi`] but not a ring map.
pub fn canonical_lift(g: &Elem) -> Result<Elem> {
    if g.ring().base() != Base::Gaussian {
        return Err(Error::NotInSource(g.ring().descriptor()));
    }
    let target = g.ring().with_base(Base::GroupRingZ4);
    g.map_coeffs(&target, |c| match c {
        Coeff::Gaussian(z) => Coeff::GroupRingZ4(GroupRingZ4 {
            c: [z.re.clone(), z.im.clone(), BigInt::zero(), BigInt::zero()],
        }),
        _ => unreachable!("base checked"),
    })
}

/// Exact division by 2 in ℤ[i][x]; fails if any Gaussian coefficient is odd.
pub fn halve_gaussian(p: &Elem) -> Result<Elem> {
    if p.ring().base() != Base::Gaussian {
        return Err(Error::NotInSource(p.ring().descriptor()));
    }
    let mut out = p.ring().zero();
    for (m, c) in p.terms() {
        let Coeff::Gaussian(z) = c else { unreachable!("base checked") };
        let half = z.halve().ok_or_else(|| Error::NotInIdeal { elem: p.to_string(), ideal: "(2)".into() })?;
        out = &out + &p.ring().monomial(Coeff::Gaussian(half), m.clone())?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSpec {
    /// The ideal generated by t² (in any ring with a variable t).
    MonomialT2,
    /// The ideal (2) of ℤ[i][x].
    PrincipalTwo,
    /// The ideal (1 - σ²) of ℤ[ℤ/4][x].
    PrincipalOneMinusSigmaSq,
}

impl IdealSpec {
    pub fn contains(self, p: &Elem) -> Result<bool> {
        let ring = p.ring();
        let mismatch = || Error::RingMismatch { left: ring.descriptor(), right: self.to_string() };
        match self {
            IdealSpec::MonomialT2 => {
                let k = ring.var_index(Symbol::T).ok_or_else(mismatch)?;
                Ok(p.terms().all(|(m, _)| m[k] >= 2))
            }
            IdealSpec::PrincipalTwo => {
                if ring.base() != Base::Gaussian {
                    return Err(mismatch());
                }
                Ok(p.terms().all(|(_, c)| matches!(c, Coeff::Gaussian(z) if z.is_even())))
            }
            IdealSpec::PrincipalOneMinusSigmaSq => {
                if ring.base() != Base::GroupRingZ4 {
                    return Err(mismatch());
                }
                Ok(p.terms().all(|(_, c)| matches!(c, Coeff::GroupRingZ4(g) if g.in_one_minus_sigma_sq())))
            }
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealSpec::MonomialT2 => "(t^2)",
            IdealSpec::PrincipalTwo => "(2)",
            IdealSpec::PrincipalOneMinusSigmaSq => "(1-σ^2)",
        })
    }
}

/// ℚ[t², t³, …] inside ℚ[t, …]: no monomial of t-degree exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubringSpec;

impl SubringSpec {
    pub fn contains(self, p: &Elem) -> bool {
        match p.ring().var_index(Symbol::T) {
            Some(k) => p.terms().all(|(m, _)| m[k] != 1),
            None => true,
        }
    }
}

impl fmt::Display for SubringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q[t^2,t^3,...]")
    }
}
