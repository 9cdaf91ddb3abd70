//! Hypergeometric-type data `(σ, τ̃, σ̃)` for the function `F(s)` that enters
//! a wavefunction, where `F'' + (τ̃/σ) F' + (σ̃/σ²) F = 0`.
//!
//! `F` is always a [`PowerExpFactor`] times the family polynomial. For the
//! standard Jacobi case the factor is one, `τ̃ = τ` and `σ̃ = Λ_n σ`, so the
//! equation collapses to the classical one.

use super::eval::eval_with_derivatives;
use super::family::PolynomialFamily;
use super::polynomial::Polynomial;
use super::power_exp::PowerExpFactor;
use crate::error::{Error, Result};

/// Which function of a Jacobi polynomial plays the role of `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JacobiWeighting {
    /// `F = P_n^(α,β)(s)`.
    #[default]
    Standard,
    /// `F = (1-s)^α (1+s)^β P_n^(α,β)(s)`.
    Weighted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricData {
    pub family: PolynomialFamily,
    pub weighting: JacobiWeighting,
    pub n: usize,
    pub sigma: Polynomial,
    pub tau_tilde: Polynomial,
    pub sigma_tilde: Polynomial,
    /// `Λ_n` when `σ̃ = Λ_n σ` identically.
    pub lambda: Option<f64>,
    /// `F = prefactor(s) · y_n(s)`.
    pub prefactor: PowerExpFactor,
    /// True when `F` is the bare classical polynomial and `τ̃` is the classical `τ`.
    pub classical_collapse: bool,
}

impl HypergeometricData {
    /// Returns `(F, F', F'')` at `s`, derivatives with respect to `s`.
    pub fn eval_f(&self, s: f64) -> (f64, f64, f64) {
        let (y, y1, y2) = eval_with_derivatives(self.family, self.n, s);
        let g = self.prefactor.value(s);
        let l1 = self.prefactor.log_derivative(s);
        let l2 = self.prefactor.log_second_derivative(s);
        (
            g * y,
            g * (l1 * y + y1),
            g * ((l2 + l1 * l1) * y + 2.0 * l1 * y1 + y2),
        )
    }

    /// `σF'' + τ̃F' + (σ̃/σ)F` together with a magnitude scale for relative checks.
    pub fn equation_residual(&self, s: f64) -> (f64, f64) {
        let (f0, f1, f2) = self.eval_f(s);
        let sig = self.sigma.eval(s);
        let a = sig * f2;
        let b = self.tau_tilde.eval(s) * f1;
        let c = self.sigma_tilde.eval(s) / sig * f0;
        (a + b + c, a.abs() + b.abs() + c.abs())
    }
}

/// The `(σ, τ̃, σ̃)` triple for the standard form of each family.
pub fn hypergeometric_data(family: PolynomialFamily, n: usize) -> Result<HypergeometricData> {
    hypergeometric_data_variant(family, JacobiWeighting::Standard, n)
}

/// Like [`hypergeometric_data`], with the Jacobi weighting selectable.
///
/// The weighted Jacobi form has `τ̃ = (α-β) + (α+β-2)s` and
/// `Λ_n = (n+1)(n+α+β)`; its `τ̃'` is positive whenever `α+β > 2`.
pub fn hypergeometric_data_variant(
    family: PolynomialFamily,
    weighting: JacobiWeighting,
    n: usize,
) -> Result<HypergeometricData> {
    family.validate()?;
    let nf = n as f64;
    let data = match (family, weighting) {
        (PolynomialFamily::Jacobi { alpha, beta }, JacobiWeighting::Standard) => {
            let sigma = Polynomial::quadratic(1.0, 0.0, -1.0);
            let lambda = nf * (nf + alpha + beta + 1.0);
            HypergeometricData {
                family,
                weighting,
                n,
                sigma_tilde: sigma.scale(lambda),
                sigma,
                tau_tilde: Polynomial::linear(beta - alpha, -(alpha + beta + 2.0)),
                lambda: Some(lambda),
                prefactor: PowerExpFactor::one(),
                classical_collapse: true,
            }
        }
        (PolynomialFamily::Jacobi { alpha, beta }, JacobiWeighting::Weighted) => {
            if alpha + beta <= 0.0 {
                return Err(Error::ParameterDomain {
                    name: "alpha + beta",
                    value: alpha + beta,
                    requirement: "weighted Jacobi form requires alpha + beta > 0",
                });
            }
            let sigma = Polynomial::quadratic(1.0, 0.0, -1.0);
            let lambda = (nf + 1.0) * (nf + alpha + beta);
            HypergeometricData {
                family,
                weighting,
                n,
                sigma_tilde: sigma.scale(lambda),
                sigma,
                tau_tilde: Polynomial::linear(alpha - beta, alpha + beta - 2.0),
                lambda: Some(lambda),
                prefactor: PowerExpFactor {
                    pow_one_minus_s: alpha,
                    pow_one_plus_s: beta,
                    ..PowerExpFactor::default()
                },
                classical_collapse: false,
            }
        }
        (PolynomialFamily::Laguerre { alpha }, _) => HypergeometricData {
            family,
            weighting: JacobiWeighting::Standard,
            n,
            sigma: Polynomial::linear(0.0, 1.0),
            tau_tilde: Polynomial::linear(1.0, 1.0),
            sigma_tilde: Polynomial::linear(-alpha * alpha / 4.0, nf + alpha / 2.0 + 1.0),
            lambda: None,
            prefactor: PowerExpFactor {
                pow_s: alpha / 2.0,
                exp_linear: -1.0,
                ..PowerExpFactor::default()
            },
            classical_collapse: false,
        },
        (PolynomialFamily::Hermite, _) => HypergeometricData {
            family,
            weighting: JacobiWeighting::Standard,
            n,
            sigma: Polynomial::constant(1.0),
            tau_tilde: Polynomial::constant(0.0),
            sigma_tilde: Polynomial::quadratic(2.0 * nf + 1.0, 0.0, -1.0),
            lambda: None,
            prefactor: PowerExpFactor {
                exp_quadratic: -0.5,
                ..PowerExpFactor::default()
            },
            classical_collapse: false,
        },
    };
    Ok(data)
}

/// `Λ_n = -n τ' - n(n-1)/2 · σ''`, the consistency value of the classical method.
pub fn lambda_n(sigma: &Polynomial, tau: &Polynomial, n: usize) -> f64 {
    let nf = n as f64;
    let tau_prime = tau.coeff(1);
    let sigma_second = 2.0 * sigma.coeff(2);
    -nf * tau_prime - nf * (nf - 1.0) / 2.0 * sigma_second
}

/// `σy'' + τy' + Λ_n y` for the classical equation of the family.
pub fn ode_residual(family: PolynomialFamily, n: usize, s: f64) -> Result<f64> {
    family.validate()?;
    let (y, y1, y2) = eval_with_derivatives(family, n, s);
    Ok(family.classical_sigma().eval(s) * y2
        + family.classical_tau().eval(s) * y1
        + family.classical_lambda(n) * y)
}
