use std::fmt;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// A classical orthogonal polynomial family.
///
/// Jacobi `P_n^(α,β)` lives on `(-1, 1)`, generalized Laguerre `L_n^α` on
/// `(0, ∞)` and physicists' Hermite `H_n` on the whole line. Parameter checks
/// are strict (`α > -1`), so every weight is integrable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolynomialFamily {
    Jacobi { alpha: f64, beta: f64 },
    Laguerre { alpha: f64 },
    Hermite,
}

fn check_weight_param(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > -1.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain {
            name,
            value,
            requirement: "must be finite and > -1",
        })
    }
}

impl PolynomialFamily {
    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        let family = Self::Jacobi { alpha, beta };
        family.validate()?;
        Ok(family)
    }

    pub fn laguerre(alpha: f64) -> Result<Self> {
        let family = Self::Laguerre { alpha };
        family.validate()?;
        Ok(family)
    }

    pub fn hermite() -> Self {
        Self::Hermite
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Jacobi { alpha, beta } => {
                check_weight_param("alpha", alpha)?;
                check_weight_param("beta", beta)
            }
            Self::Laguerre { alpha } => check_weight_param("alpha", alpha),
            Self::Hermite => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Jacobi { .. } => "jacobi",
            Self::Laguerre { .. } => "laguerre",
            Self::Hermite => "hermite",
        }
    }

    /// Orthogonality interval as an open interval.
    pub fn interval(&self) -> (f64, f64) {
        match self {
            Self::Jacobi { .. } => (-1.0, 1.0),
            Self::Laguerre { .. } => (0.0, f64::INFINITY),
            Self::Hermite => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    /// `σ` of the classical equation `σ y'' + τ y' + Λ_n y = 0`.
    pub fn classical_sigma(&self) -> Polynomial {
        match self {
            Self::Jacobi { .. } => Polynomial::quadratic(1.0, 0.0, -1.0),
            Self::Laguerre { .. } => Polynomial::linear(0.0, 1.0),
            Self::Hermite => Polynomial::constant(1.0),
        }
    }

    /// `τ` of the classical equation; `(σρ)' = τρ` for the family weight.
    pub fn classical_tau(&self) -> Polynomial {
        match *self {
            Self::Jacobi { alpha, beta } => Polynomial::linear(beta - alpha, -(alpha + beta + 2.0)),
            Self::Laguerre { alpha } => Polynomial::linear(alpha + 1.0, -1.0),
            Self::Hermite => Polynomial::linear(0.0, -2.0),
        }
    }

    /// Eigenvalue `Λ_n` of the classical equation.
    pub fn classical_lambda(&self, n: usize) -> f64 {
        let n = n as f64;
        match *self {
            Self::Jacobi { alpha, beta } => n * (n + alpha + beta + 1.0),
            Self::Laguerre { .. } => n,
            Self::Hermite => 2.0 * n,
        }
    }
}

impl fmt::Display for PolynomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Jacobi { alpha, beta } => write!(f, "Jacobi(alpha={alpha}, beta={beta})"),
            Self::Laguerre { alpha } => write!(f, "Laguerre(alpha={alpha})"),
            Self::Hermite => write!(f, "Hermite"),
        }
    }
}

/// Orthogonality weight `ρ(s)` of a family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightFunction {
    family: PolynomialFamily,
}

impl WeightFunction {
    pub fn new(family: PolynomialFamily) -> Result<Self> {
        family.validate()?;
        Ok(Self { family })
    }

    pub fn family(&self) -> PolynomialFamily {
        self.family
    }

    pub fn eval(&self, s: f64) -> f64 {
        match self.family {
            PolynomialFamily::Jacobi { alpha, beta } => {
                (1.0 - s).powf(alpha) * (1.0 + s).powf(beta)
            }
            PolynomialFamily::Laguerre { alpha } => s.powf(alpha) * (-s).exp(),
            PolynomialFamily::Hermite => (-s * s).exp(),
        }
    }

    /// `ρ'(s) / ρ(s)`.
    pub fn log_derivative(&self, s: f64) -> f64 {
        match self.family {
            PolynomialFamily::Jacobi { alpha, beta } => -alpha / (1.0 - s) + beta / (1.0 + s),
            PolynomialFamily::Laguerre { alpha } => alpha / s - 1.0,
            PolynomialFamily::Hermite => -2.0 * s,
        }
    }

    pub fn descriptor(&self) -> String {
        match self.family {
            PolynomialFamily::Jacobi { alpha, beta } => {
                format!("(1-s)^{alpha} (1+s)^{beta} on (-1, 1)")
            }
            PolynomialFamily::Laguerre { alpha } => format!("s^{alpha} exp(-s) on (0, inf)"),
            PolynomialFamily::Hermite => "exp(-s^2) on (-inf, inf)".to_string(),
        }
    }
}
