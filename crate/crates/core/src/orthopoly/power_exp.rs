use std::fmt;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `g(s) = |s|^p0 · |1-s|^p1 · |1+s|^p2 · exp(e1·s + e2·s²)`.
///
/// Positive on the interior of every orthogonality interval used here, so it
/// is handled through `ln g` and its derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PowerExpFactor {
    pub pow_s: f64,
    pub pow_one_minus_s: f64,
    pub pow_one_plus_s: f64,
    pub exp_linear: f64,
    pub exp_quadratic: f64,
}

impl PowerExpFactor {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn ln_value(&self, s: f64) -> f64 {
        let mut v = self.exp_linear * s + self.exp_quadratic * s * s;
        if self.pow_s != 0.0 {
            v += self.pow_s * s.abs().ln();
        }
        if self.pow_one_minus_s != 0.0 {
            v += self.pow_one_minus_s * (1.0 - s).abs().ln();
        }
        if self.pow_one_plus_s != 0.0 {
            v += self.pow_one_plus_s * (1.0 + s).abs().ln();
        }
        v
    }

    pub fn value(&self, s: f64) -> f64 {
        self.ln_value(s).exp()
    }

    /// `(ln g)'(s)`.
    pub fn log_derivative(&self, s: f64) -> f64 {
        let mut v = self.exp_linear + 2.0 * self.exp_quadratic * s;
        if self.pow_s != 0.0 {
            v += self.pow_s / s;
        }
        if self.pow_one_minus_s != 0.0 {
            v -= self.pow_one_minus_s / (1.0 - s);
        }
        if self.pow_one_plus_s != 0.0 {
            v += self.pow_one_plus_s / (1.0 + s);
        }
        v
    }

    /// `(ln g)''(s)`.
    pub fn log_second_derivative(&self, s: f64) -> f64 {
        let mut v = 2.0 * self.exp_quadratic;
        if self.pow_s != 0.0 {
            v -= self.pow_s / (s * s);
        }
        if self.pow_one_minus_s != 0.0 {
            v -= self.pow_one_minus_s / ((1.0 - s) * (1.0 - s));
        }
        if self.pow_one_plus_s != 0.0 {
            v -= self.pow_one_plus_s / ((1.0 + s) * (1.0 + s));
        }
        v
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            pow_s: self.pow_s + other.pow_s,
            pow_one_minus_s: self.pow_one_minus_s + other.pow_one_minus_s,
            pow_one_plus_s: self.pow_one_plus_s + other.pow_one_plus_s,
            exp_linear: self.exp_linear + other.exp_linear,
            exp_quadratic: self.exp_quadratic + other.exp_quadratic,
        }
    }

    /// `exp(½ ∫ τ̃/σ ds)` for `σ ∈ {c(1-s²), c·s, c}` and linear `τ̃`.
    pub fn exp_half_integral(tau: &Polynomial, sigma: &Polynomial) -> Result<Self> {
        if tau.degree() > 1 {
            return Err(Error::DecompositionFailure(format!(
                "tau_tilde = {tau} has degree above one"
            )));
        }
        let (t0, t1) = (tau.coeff(0), tau.coeff(1));
        match SigmaShape::classify(sigma)? {
            SigmaShape::OneMinusSquare(c) => {
                // τ̃/σ = c1/(1-s) + c2/(1+s)
                let c1 = (t0 + t1) / (2.0 * c);
                let c2 = (t0 - t1) / (2.0 * c);
                Ok(Self {
                    pow_one_minus_s: -c1 / 2.0,
                    pow_one_plus_s: c2 / 2.0,
                    ..Self::default()
                })
            }
            SigmaShape::Linear(c) => Ok(Self {
                pow_s: t0 / (2.0 * c),
                exp_linear: t1 / (2.0 * c),
                ..Self::default()
            }),
            SigmaShape::Constant(c) => Ok(Self {
                exp_linear: t0 / (2.0 * c),
                exp_quadratic: t1 / (4.0 * c),
                ..Self::default()
            }),
        }
    }
}

impl fmt::Display for PowerExpFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.pow_s != 0.0 {
            parts.push(format!("s^{}", self.pow_s));
        }
        if self.pow_one_minus_s != 0.0 {
            parts.push(format!("(1-s)^{}", self.pow_one_minus_s));
        }
        if self.pow_one_plus_s != 0.0 {
            parts.push(format!("(1+s)^{}", self.pow_one_plus_s));
        }
        match (self.exp_linear != 0.0, self.exp_quadratic != 0.0) {
            (true, true) => parts.push(format!(
                "exp({}*s + {}*s^2)",
                self.exp_linear, self.exp_quadratic
            )),
            (true, false) => parts.push(format!("exp({}*s)", self.exp_linear)),
            (false, true) => parts.push(format!("exp({}*s^2)", self.exp_quadratic)),
            (false, false) => {}
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// The three shapes of `σ` reachable from the supported families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SigmaShape {
    /// `σ = c(1 - s²)`
    OneMinusSquare(f64),
    /// `σ = c·s`
    Linear(f64),
    /// `σ = c`
    Constant(f64),
}

impl SigmaShape {
    pub fn classify(sigma: &Polynomial) -> Result<Self> {
        let (s0, s1, s2) = (sigma.coeff(0), sigma.coeff(1), sigma.coeff(2));
        if sigma.degree() > 2 {
            return Err(Error::DecompositionFailure(format!(
                "sigma = {sigma} has degree above two"
            )));
        }
        if s1 == 0.0 && s2 != 0.0 && s0 == -s2 {
            Ok(Self::OneMinusSquare(s0))
        } else if s0 == 0.0 && s2 == 0.0 && s1 != 0.0 {
            Ok(Self::Linear(s1))
        } else if s1 == 0.0 && s2 == 0.0 && s0 != 0.0 {
            Ok(Self::Constant(s0))
        } else {
            Err(Error::DecompositionFailure(format!(
                "sigma = {sigma} is not of the form c(1-s^2), c*s or c"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numeric_d(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
    }

    #[test]
    fn log_derivatives_match_finite_differences() {
        let g = PowerExpFactor {
            pow_s: 0.3,
            pow_one_minus_s: 1.25,
            pow_one_plus_s: -0.5,
            exp_linear: 0.7,
            exp_quadratic: -0.2,
        };
        for &s in &[0.2, 0.5, 0.8] {
            let d1 = numeric_d(|x| g.ln_value(x), s, 1e-4);
            let d2 = numeric_d(|x| g.log_derivative(x), s, 1e-4);
            assert!((d1 - g.log_derivative(s)).abs() < 1e-9);
            assert!((d2 - g.log_second_derivative(s)).abs() < 1e-8);
        }
    }

    #[test]
    fn half_integral_is_half_tau_over_sigma() {
        let cases = [
            (
                Polynomial::linear(0.4, -3.0),
                Polynomial::quadratic(1.0, 0.0, -1.0),
            ),
            (Polynomial::linear(1.0, 1.0), Polynomial::linear(0.0, 1.0)),
            (Polynomial::linear(0.5, -2.0), Polynomial::constant(2.0)),
        ];
        for (tau, sigma) in cases {
            let g = PowerExpFactor::exp_half_integral(&tau, &sigma).unwrap();
            for &s in &[0.1, 0.45, 0.7] {
                let expected = 0.5 * tau.eval(s) / sigma.eval(s);
                assert!((g.log_derivative(s) - expected).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn classify_rejects_other_shapes() {
        assert!(SigmaShape::classify(&Polynomial::quadratic(1.0, 1.0, 0.0)).is_err());
        assert!(SigmaShape::classify(&Polynomial::quadratic(2.0, 0.0, -1.0)).is_err());
        assert_eq!(
            SigmaShape::classify(&Polynomial::quadratic(2.0, 0.0, -2.0)).unwrap(),
            SigmaShape::OneMinusSquare(2.0)
        );
    }
}
