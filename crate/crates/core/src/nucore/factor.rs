use std::fmt;

use super::transform::Transformation;
use crate::error::{Error, Result};
use crate::orthopoly::{HypergeometricData, Polynomial, PowerExpFactor};

/// The modulation factor `f(r) = |s'|^{-1/2} exp(½ ∫ τ̃/σ ds)`.
///
/// Carried through its logarithmic derivatives `ℓ1 = (ln f)'` and
/// `ℓ2 = (ln f)''`, so `f''/f = ℓ2 + ℓ1²` needs no numerical
/// differentiation. The closed form is kept alongside for evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorF {
    transformation: Transformation,
    sigma: Polynomial,
    tau_tilde: Polynomial,
    envelope: PowerExpFactor,
    ln_scale: f64,
}

impl FactorF {
    pub fn transformation(&self) -> &Transformation {
        &self.transformation
    }

    pub fn sigma(&self) -> &Polynomial {
        &self.sigma
    }

    pub fn tau_tilde(&self) -> &Polynomial {
        &self.tau_tilde
    }

    /// `exp(½ ∫ τ̃/σ ds)` as a function of `s`.
    pub fn envelope(&self) -> &PowerExpFactor {
        &self.envelope
    }

    /// Multiplies `f` by a positive constant.
    pub fn with_scale(mut self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::ParameterDomain {
                name: "scale",
                value: factor,
                requirement: "must be finite and > 0",
            });
        }
        self.ln_scale += factor.ln();
        Ok(self)
    }

    pub fn ln_value(&self, r: f64) -> f64 {
        let d = self.transformation.derivatives(r);
        -0.5 * d.d1.abs().ln() + self.envelope.ln_value(d.s) + self.ln_scale
    }

    pub fn value(&self, r: f64) -> f64 {
        self.ln_value(r).exp()
    }

    fn ratio(&self, s: f64) -> (f64, f64) {
        let sig = self.sigma.eval(s);
        let tau = self.tau_tilde.eval(s);
        let r = tau / sig;
        let dr = (self.tau_tilde.derivative().eval(s) * sig
            - tau * self.sigma.derivative().eval(s))
            / (sig * sig);
        (r, dr)
    }

    /// `ℓ1 = -s''/(2s') + ½ (τ̃/σ)(s) s'`.
    pub fn ell1(&self, r: f64) -> f64 {
        let d = self.transformation.derivatives(r);
        let (ratio, _) = self.ratio(d.s);
        -d.d2 / (2.0 * d.d1) + 0.5 * ratio * d.d1
    }

    /// `ℓ2 = dℓ1/dr`.
    pub fn ell2(&self, r: f64) -> f64 {
        let d = self.transformation.derivatives(r);
        let (ratio, dratio) = self.ratio(d.s);
        let q = d.d2 / d.d1;
        -0.5 * (d.d3 / d.d1 - q * q) + 0.5 * (dratio * d.d1 * d.d1 + ratio * d.d2)
    }

    /// `f''/f = ℓ2 + ℓ1²`.
    pub fn second_log_ratio(&self, r: f64) -> f64 {
        let l1 = self.ell1(r);
        self.ell2(r) + l1 * l1
    }

    pub fn descriptor(&self) -> String {
        format!("|s'|^(-1/2) {}", self.envelope)
    }
}

impl fmt::Display for FactorF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Builds `f` from the data's `τ̃/σ` and the coordinate map.
pub fn build_factor_f(data: &HypergeometricData, t: &Transformation) -> Result<FactorF> {
    let (left, right) = t.domain();
    let (s_lo, s_hi) = {
        let probe = t.sample_points(64);
        let values: Vec<f64> = probe.iter().map(|&r| t.s(r)).collect();
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    };
    // σ must keep one sign on the image of the open domain.
    let roots = real_roots(&data.sigma);
    if let Some(root) = roots.iter().find(|&&x| x > s_lo && x < s_hi) {
        return Err(Error::SingularTransformation(format!(
            "sigma = {} vanishes at s = {root} inside r in ({left}, {right})",
            data.sigma
        )));
    }
    if data.sigma.is_zero() {
        return Err(Error::SingularTransformation(
            "sigma is identically zero".into(),
        ));
    }
    let envelope = PowerExpFactor::exp_half_integral(&data.tau_tilde, &data.sigma)?;
    Ok(FactorF {
        transformation: *t,
        sigma: data.sigma.clone(),
        tau_tilde: data.tau_tilde.clone(),
        envelope,
        ln_scale: 0.0,
    })
}

fn real_roots(p: &Polynomial) -> Vec<f64> {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    if a != 0.0 {
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 {
            return Vec::new();
        }
        let sq = disc.sqrt();
        vec![(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
    } else if b != 0.0 {
        vec![-c / b]
    } else {
        Vec::new()
    }
}
