//! Jacobi, generalized Laguerre and Hermite polynomials: values, derivatives,
//! hypergeometric-type data and an exact Rodrigues reference.

mod eval;
mod family;
mod hypergeometric;
mod polynomial;
mod power_exp;
mod rodrigues;

pub(crate) use eval::eval_with_derivatives;
pub use eval::{eval_poly, eval_poly_derivative, poly_coefficients};
pub use family::{PolynomialFamily, WeightFunction};
pub use hypergeometric::{
    hypergeometric_data, hypergeometric_data_variant, lambda_n, ode_residual, HypergeometricData,
    JacobiWeighting,
};
pub use polynomial::Polynomial;
pub use power_exp::{PowerExpFactor, SigmaShape};
pub use rodrigues::{rodrigues_reference, RODRIGUES_MAX_DEGREE};
