use std::fmt;

use super::decompose::{decompose_factor_part, decompose_polynomial_part};
use super::factor::{build_factor_f, FactorF};
use super::potential::PotentialExpr;
use super::transform::Transformation;
use crate::error::{Error, Result};
use crate::orthopoly::{
    eval_with_derivatives, hypergeometric_data_variant, HypergeometricData, JacobiWeighting,
    PolynomialFamily,
};

/// `(Ψ, Ψ', Ψ'')` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveValue {
    pub psi: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Closed-form spectrum attached by the catalog builders.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyFormula {
    /// `a²(n + (α+β+1)/2)²`
    PoschlTeller { alpha: f64, beta: f64, a: f64 },
    /// `a²[(n+1)(n+α+β) + (α+β-1)²/4]`
    PoschlTellerShifted { alpha: f64, beta: f64, a: f64 },
    /// `w(2n + ℓ + 3/2)`
    RadialOscillator { ell: u32, w: f64 },
    /// `-a²` for the single level the system carries.
    Constant { value: f64 },
}

impl EnergyFormula {
    pub fn eval(&self, n: usize) -> f64 {
        let nf = n as f64;
        match *self {
            Self::PoschlTeller { alpha, beta, a } => {
                let k = nf + (alpha + beta + 1.0) / 2.0;
                a * a * k * k
            }
            Self::PoschlTellerShifted { alpha, beta, a } => {
                let g = alpha + beta;
                a * a * ((nf + 1.0) * (nf + g) + (g - 1.0) * (g - 1.0) / 4.0)
            }
            Self::RadialOscillator { ell, w } => w * (2.0 * nf + ell as f64 + 1.5),
            Self::Constant { value } => value,
        }
    }
}

impl fmt::Display for EnergyFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PoschlTeller { alpha, beta, a } => {
                write!(f, "E_n = {a}^2 (n + ({alpha} + {beta} + 1)/2)^2")
            }
            Self::PoschlTellerShifted { alpha, beta, a } => write!(
                f,
                "E_n = {a}^2 [(n + 1)(n + {alpha} + {beta}) + ({alpha} + {beta} - 1)^2/4]"
            ),
            Self::RadialOscillator { ell, w } => write!(f, "E_n = {w} (2n + {ell} + 3/2)"),
            Self::Constant { value } => write!(f, "E = {value}"),
        }
    }
}

/// One bound state of an assembled system.
#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub n: usize,
    pub data: HypergeometricData,
    pub factor: FactorF,
    /// `V_F` with its energy `E_F`.
    pub poly_potential: PotentialExpr,
    pub poly_energy: f64,
    /// `V_f` with its energy `E_f`.
    pub factor_potential: PotentialExpr,
    pub factor_energy: f64,
    pub potential: PotentialExpr,
}

impl Level {
    pub fn energy(&self) -> f64 {
        self.poly_energy + self.factor_energy
    }

    /// `Ψ = f·F` with derivatives assembled by the chain rule.
    ///
    /// `r` must be strictly inside the domain.
    pub fn wavefunction(&self, r: f64) -> Result<WaveValue> {
        let t = self.factor.transformation();
        let (left, right) = t.domain();
        if !(r > left && r < right) {
            return Err(Error::Domain { r, left, right });
        }
        let d = t.derivatives(r);
        let (y, y1, y2) = eval_with_derivatives(self.data.family, self.n, d.s);
        let g = &self.data.prefactor;
        let amplitude = (self.factor.ln_value(r) + g.ln_value(d.s)).exp();
        let l1 = self.factor.ell1(r);
        let l2 = self.factor.ell2(r);
        let g1 = g.log_derivative(d.s);
        let g2 = g.log_second_derivative(d.s);
        // F/g, F_s/g and F_ss/g
        let f0 = y;
        let f1 = g1 * y + y1;
        let f2 = (g2 + g1 * g1) * y + 2.0 * g1 * y1 + y2;
        Ok(WaveValue {
            psi: amplitude * f0,
            d1: amplitude * (l1 * f0 + d.d1 * f1),
            d2: amplitude
                * ((l2 + l1 * l1) * f0 + (2.0 * l1 * d.d1 + d.d2) * f1 + d.d1 * d.d1 * f2),
        })
    }
}

/// Potential, spectrum and wavefunctions of an exactly solvable system.
#[derive(Debug, Clone, PartialEq)]
pub struct SolvableSystem {
    pub name: String,
    pub family: PolynomialFamily,
    pub weighting: JacobiWeighting,
    pub transformation: Transformation,
    pub potential: PotentialExpr,
    pub closed_form: Option<EnergyFormula>,
    levels: Vec<Level>,
}

impl SolvableSystem {
    pub fn domain(&self) -> (f64, f64) {
        self.transformation.domain()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Degrees this system carries.
    pub fn level_numbers(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.iter().map(|l| l.n)
    }

    pub fn level(&self, n: usize) -> Result<&Level> {
        self.levels
            .iter()
            .find(|l| l.n == n)
            .ok_or(Error::LevelUnavailable(n))
    }

    pub fn energy(&self, n: usize) -> Result<f64> {
        Ok(self.level(n)?.energy())
    }

    /// `(E_F, E_f)` for level `n`.
    pub fn energy_split(&self, n: usize) -> Result<(f64, f64)> {
        let l = self.level(n)?;
        Ok((l.poly_energy, l.factor_energy))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_closed_form(mut self, formula: EnergyFormula) -> Self {
        self.closed_form = Some(formula);
        self
    }
}

fn build_level(
    family: PolynomialFamily,
    weighting: JacobiWeighting,
    n: usize,
    t: &Transformation,
) -> Result<Level> {
    let data = hypergeometric_data_variant(family, weighting, n)?;
    let factor = build_factor_f(&data, t)?;
    let (poly_potential, poly_energy) = decompose_polynomial_part(&data, t)?;
    let (factor_potential, factor_energy) = decompose_factor_part(&factor)?;
    let potential = poly_potential.plus(&factor_potential)?;
    Ok(Level {
        n,
        data,
        factor,
        poly_potential,
        poly_energy,
        factor_potential,
        factor_energy,
        potential,
    })
}

/// Assembles levels `0..=n_max`; fails if the potential changes with `n`.
pub fn assemble_system(
    family: PolynomialFamily,
    weighting: JacobiWeighting,
    n_max: usize,
    t: &Transformation,
) -> Result<SolvableSystem> {
    let mut levels = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        levels.push(build_level(family, weighting, n, t)?);
    }
    let potential = levels[0].potential.clone();
    if let Some(l) = levels
        .iter()
        .find(|l| !l.potential.approx_eq(&potential, 1e-12))
    {
        return Err(Error::DecompositionFailure(format!(
            "potential depends on n (n = 0: {potential}; n = {}: {}); assemble single levels instead",
            l.n, l.potential
        )));
    }
    Ok(SolvableSystem {
        name: format!("{family} with {t}"),
        family,
        weighting,
        transformation: *t,
        potential,
        closed_form: None,
        levels,
    })
}

/// Assembles the single level `n`, for families whose potential carries `n`.
pub fn assemble_level_system(
    family: PolynomialFamily,
    weighting: JacobiWeighting,
    n: usize,
    t: &Transformation,
) -> Result<SolvableSystem> {
    let level = build_level(family, weighting, n, t)?;
    Ok(SolvableSystem {
        name: format!("{family} level {n} with {t}"),
        family,
        weighting,
        transformation: *t,
        potential: level.potential.clone(),
        closed_form: None,
        levels: vec![level],
    })
}

/// `(Ψ_n, Ψ_n', Ψ_n'')` at `r`.
pub fn evaluate_wavefunction(system: &SolvableSystem, n: usize, r: f64) -> Result<WaveValue> {
    system.level(n)?.wavefunction(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nucore::potential::Basis;
    use std::f64::consts::PI;

    fn pt(alpha: f64, beta: f64, a: f64, n_max: usize) -> SolvableSystem {
        assemble_system(
            PolynomialFamily::Jacobi { alpha, beta },
            JacobiWeighting::Standard,
            n_max,
            &Transformation::cosine(a).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn jacobi_spectrum_is_completed_square() {
        let s = pt(1.0, 1.0, 1.0, 3);
        for n in 0..=3 {
            let k = n as f64 + 1.5;
            assert!((s.energy(n).unwrap() - k * k).abs() < 1e-13);
        }
        assert!(s.energy(1).unwrap() > s.energy(0).unwrap());
        assert!((s.potential.coefficient(Basis::CscSq { a: 1.0 }) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn oscillator_ground_state() {
        // α = ℓ + 1/2, a² = 2w with ℓ = 0, w = 1
        let s = assemble_system(
            PolynomialFamily::Laguerre { alpha: 0.5 },
            JacobiWeighting::Standard,
            2,
            &Transformation::quadratic(2f64.sqrt()).unwrap(),
        )
        .unwrap();
        assert!((s.energy(0).unwrap() - 1.5).abs() < 1e-14);
        assert!((s.potential.coefficient(Basis::RSquared) - 0.25).abs() < 1e-15);
        assert!(s.potential.coefficient(Basis::InvR2).abs() < 1e-15);
        // Ψ(r) → 0 as r → 0
        let near = evaluate_wavefunction(&s, 0, 1e-6).unwrap().psi;
        let mid = evaluate_wavefunction(&s, 0, 1.0).unwrap().psi;
        assert!(near.abs() < 1e-5 * mid.abs());
    }

    #[test]
    fn hermite_potential_depends_on_n() {
        let t = Transformation::sqrt(1.0).unwrap();
        let err = assemble_system(PolynomialFamily::Hermite, JacobiWeighting::Standard, 2, &t)
            .unwrap_err();
        assert!(matches!(err, Error::DecompositionFailure(_)));
        let single =
            assemble_level_system(PolynomialFamily::Hermite, JacobiWeighting::Standard, 2, &t)
                .unwrap();
        assert_eq!(single.level_numbers().collect::<Vec<_>>(), vec![2]);
        assert!(single.energy(0).is_err());
    }

    #[test]
    fn midpoint_derivative_vanishes_for_equal_parameters() {
        let s = pt(1.0, 1.0, 1.0, 0);
        let w = evaluate_wavefunction(&s, 0, PI / 2.0).unwrap();
        assert!(w.d1.abs() < 1e-14);
        assert!(w.psi > 0.0);
    }

    #[test]
    fn rejects_points_outside_domain() {
        let s = pt(1.0, 1.0, 1.0, 0);
        assert!(matches!(
            evaluate_wavefunction(&s, 0, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            evaluate_wavefunction(&s, 0, PI),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            evaluate_wavefunction(&s, 0, -1.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn second_derivative_matches_central_differences() {
        let s = pt(2.0, 1.0, 1.0, 3);
        let r = 1.1;
        let psi = |x: f64| evaluate_wavefunction(&s, 3, x).unwrap().psi;
        let exact = evaluate_wavefunction(&s, 3, r).unwrap();
        let mut prev = f64::INFINITY;
        for h in [1e-2, 5e-3, 2.5e-3] {
            let fd = (psi(r + h) - 2.0 * psi(r) + psi(r - h)) / (h * h);
            let err = (fd - exact.d2).abs();
            assert!(err < prev);
            prev = err;
        }
        assert!(prev < 1e-4 * (1.0 + exact.d2.abs()));
        let fd1 = (psi(r + 1e-5) - psi(r - 1e-5)) / 2e-5;
        assert!((fd1 - exact.d1).abs() < 1e-7 * (1.0 + exact.d1.abs()));
    }

    #[test]
    fn schrodinger_identity_pointwise() {
        let s = pt(2.0, 1.0, 1.3, 4);
        for n in 0..=4 {
            let e = s.energy(n).unwrap();
            for i in 1..50 {
                let r = s.domain().1 * i as f64 / 50.0;
                let w = evaluate_wavefunction(&s, n, r).unwrap();
                let res = -w.d2 + s.potential.eval(r) * w.psi - e * w.psi;
                let scale = (1.0 + e.abs()) * (w.psi.abs() + w.d2.abs() / (1.0 + e.abs()));
                assert!(res.abs() < 1e-10 * scale.max(1e-300), "n={n} r={r}: {res}");
            }
        }
    }
}
