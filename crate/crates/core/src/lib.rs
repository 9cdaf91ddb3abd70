//! Exactly solvable quantum systems built from orthogonal-polynomial data.
//!
//! A wavefunction is written as `Ψ(r) = f(r)·F(s(r))`, where `F` satisfies a
//! hypergeometric-type equation with known polynomial coefficients. Choosing
//! the coordinate map `s(r)` and the factor `f` from those coefficients yields
//! the potential, the whole spectrum and every eigenfunction in closed form,
//! each split into a polynomial part and a factor part.
//!
//! Units follow `ħ = 2m = 1`: the Schrödinger operator is `-d²/dr² + V(r)`.
//!
//! ```
//! use nu_forge::catalog;
//!
//! let pt = catalog::poschl_teller(1.0, 1.0, 1.0)?;
//! assert!((pt.energy(0)? - 2.25).abs() < 1e-12);
//! # Ok::<(), nu_forge::Error>(())
//! ```
//!
//! Every closed form can be checked against the finite-difference eigensolver
//! and the pointwise residuals in [`oracle`].

pub mod catalog;
pub mod cli;
mod error;
pub mod kg;
pub mod nucore;
pub mod oracle;
pub mod orthopoly;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/factorization.md")]
    mod factorization {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/klein_gordon.md")]
    mod klein_gordon {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
