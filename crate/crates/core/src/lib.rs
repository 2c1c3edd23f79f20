//! Exact symbolic computation of explicit NK₁ / Nil₀ representatives.

pub mod error;
pub mod groupring;
pub mod laurent;
pub mod matrix;
pub mod nil;
pub mod report;
pub mod rings;
pub mod steinberg;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{Check, Report, Status};
pub use rings::{Base, Coeff, Elem, Hom, IdealSpec, Ring, SubringSpec, Symbol, Var};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/rings.md")]
    struct Rings;
    #[doc = include_str!("../../../book/src/matrices.md")]
    struct Matrices;
    #[doc = include_str!("../../../book/src/steinberg.md")]
    struct Steinberg;
    #[doc = include_str!("../../../book/src/clutching.md")]
    struct Clutching;
    #[doc = include_str!("../../../book/src/higman.md")]
    struct Higman;
    #[doc = include_str!("../../../book/src/group-ring.md")]
    struct GroupRing;
    #[doc = include_str!("../../../book/src/nil.md")]
    struct Nil;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
