//! Klein–Gordon bound states in mixed vector–scalar inversely linear potentials.
//!
//! The equation `-ψ'' + (m + V_s)²ψ = (ε - V_v)²ψ` is a Schrödinger equation
//! with potential `2(mV_s + εV_v) + V_s² - V_v²` and energy `ε² - m²`. With
//! `V_v = -A/r`, `V_s = -B/r` and `A² - B² = 3/16` this is the inversely
//! linear catalog entry with `a = 4(mB + εA)/(2n+1)`.

use crate::catalog;
use crate::error::{Error, Result};
use crate::nucore::{Basis, PotentialExpr, SolvableSystem, WaveValue};

const HALF_LINE: (f64, f64) = (0.0, f64::INFINITY);

/// `A² - B²` required for the `-3/(16r²)` term.
pub const COUPLING_GAP: f64 = 3.0 / 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Self::Plus => 1.0,
            Self::Minus => -1.0,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Self::Plus),
            "-" | "minus" => Ok(Self::Minus),
            _ => Err(format!("sign must be `+` or `-`, got `{s}`")),
        }
    }
}

/// Vector coupling `A`, scalar coupling `B` and rest mass `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KgPotential {
    pub vector: f64,
    pub scalar: f64,
    pub mass: f64,
}

impl KgPotential {
    /// Arbitrary couplings. [`kg_spectrum`] additionally needs `A² - B² = 3/16`.
    pub fn new(vector: f64, scalar: f64, mass: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::ParameterDomain {
                name: "m",
                value: mass,
                requirement: "must be finite and > 0",
            });
        }
        for (name, value) in [("A", vector), ("B", scalar)] {
            if !value.is_finite() {
                return Err(Error::ParameterDomain {
                    name,
                    value,
                    requirement: "must be finite",
                });
            }
        }
        Ok(Self {
            vector,
            scalar,
            mass,
        })
    }

    /// `A = ±√(B² + 3/16)`.
    pub fn from_scalar(scalar: f64, sign: Sign, mass: f64) -> Result<Self> {
        Self::new(
            sign.value() * (scalar * scalar + COUPLING_GAP).sqrt(),
            scalar,
            mass,
        )
    }

    pub fn constraint_gap(&self) -> f64 {
        self.vector * self.vector - self.scalar * self.scalar - COUPLING_GAP
    }

    /// `V_v = -A/r`
    pub fn vector_potential(&self) -> PotentialExpr {
        inv_r(-self.vector)
    }

    /// `V_s = -B/r`
    pub fn scalar_potential(&self) -> PotentialExpr {
        inv_r(-self.scalar)
    }
}

fn inv_r(c: f64) -> PotentialExpr {
    PotentialExpr::from_terms(HALF_LINE, [(c, Basis::InvR)]).expect("1/r is in the basis")
}

/// A relativistic bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KgLevel {
    pub n: usize,
    pub epsilon: f64,
    /// Scale of `s = √(2ar)`.
    pub a: f64,
    /// Energy carried by the polynomial part, `ε_F`.
    pub epsilon_poly: f64,
    /// Energy carried by the factor part, `ε_f`.
    pub epsilon_factor: f64,
    pub potential: KgPotential,
}

impl KgLevel {
    /// `ε² - m² + 16(mB + εA)²/(2n+1)²`
    pub fn spectrum_residual(&self) -> f64 {
        spectrum_residual(&self.potential, self.n, self.epsilon)
    }

    /// The non-relativistic system whose single level this state maps to.
    pub fn system(&self) -> Result<SolvableSystem> {
        catalog::inversely_linear_nonrel(self.a, self.n)
    }
}

fn spectrum_residual(p: &KgPotential, n: usize, eps: f64) -> f64 {
    let m = p.mass;
    let k = 2.0 * n as f64 + 1.0;
    let c = m * p.scalar + eps * p.vector;
    eps * eps - m * m + 16.0 * c * c / (k * k)
}

/// Maps scalar and vector potentials at energy `ε` to the Schrödinger form
/// `(2(mV_s + εV_v) + V_s² - V_v², ε² - m²)`.
pub fn kg_map(
    vs: &PotentialExpr,
    vv: &PotentialExpr,
    m: f64,
    epsilon: f64,
) -> Result<(PotentialExpr, f64)> {
    let linear = vs.scaled(2.0 * m).plus(&vv.scaled(2.0 * epsilon))?;
    let quadratic = vs.mul(vs)?.plus(&vv.mul(vv)?.scaled(-1.0))?;
    Ok((linear.plus(&quadratic)?, epsilon * epsilon - m * m))
}

/// One summand of the mapped problem.
#[derive(Debug, Clone, PartialEq)]
pub struct KgPart {
    pub potential: PotentialExpr,
    pub energy: f64,
}

/// Splits the mapped problem into the linear part `2(mV_s + εV_v)` with
/// `ε_F` and the correction `V_s² - V_v²` with `ε_f = 0`.
pub fn kg_decompose(pot: &KgPotential, epsilon: f64) -> (KgPart, KgPart) {
    let m = pot.mass;
    let mut linear = PotentialExpr::new(HALF_LINE);
    let mut correction = PotentialExpr::new(HALF_LINE);
    linear
        .add_term(-2.0 * (m * pot.scalar + epsilon * pot.vector), Basis::InvR)
        .expect("1/r is in the basis");
    correction
        .add_term(
            pot.scalar * pot.scalar - pot.vector * pot.vector,
            Basis::InvR2,
        )
        .expect("1/r^2 is in the basis");
    (
        KgPart {
            potential: linear,
            energy: epsilon * epsilon - m * m,
        },
        KgPart {
            potential: correction,
            energy: 0.0,
        },
    )
}

fn require_constraint(pot: &KgPotential) -> Result<()> {
    if pot.constraint_gap().abs() <= 1e-12 * (1.0 + pot.vector * pot.vector) {
        Ok(())
    } else {
        Err(Error::Admissibility(format!(
            "A^2 - B^2 = {} but the inversely linear solution needs 3/16",
            pot.vector * pot.vector - pot.scalar * pot.scalar
        )))
    }
}

fn quadratic_roots(pot: &KgPotential, n: usize) -> Vec<f64> {
    let (a, b, m) = (pot.vector, pot.scalar, pot.mass);
    let k = 2.0 * n as f64 + 1.0;
    let d = 16.0 / (k * k);
    let qa = 1.0 + d * a * a;
    let qb = 2.0 * d * a * b * m;
    let qc = m * m * (d * b * b - 1.0);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Vec::new();
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let q = if q == 0.0 { 0.5 * disc.sqrt() } else { q };
    let mut roots = vec![q / qa];
    if q != 0.0 {
        roots.push(qc / q);
    }
    roots
}

fn level_from_root(pot: &KgPotential, n: usize, epsilon: f64) -> Option<KgLevel> {
    let m = pot.mass;
    let a = 4.0 * (m * pot.scalar + epsilon * pot.vector) / (2.0 * n as f64 + 1.0);
    (epsilon.abs() < m && a > 0.0).then(|| {
        let (poly, factor) = kg_decompose(pot, epsilon);
        KgLevel {
            n,
            epsilon,
            a,
            epsilon_poly: poly.energy - factor.energy,
            epsilon_factor: factor.energy,
            potential: *pot,
        }
    })
}

/// Every admissible root, largest `ε` first.
pub fn kg_admissible_levels(pot: &KgPotential, n: usize) -> Result<Vec<KgLevel>> {
    require_constraint(pot)?;
    let mut levels: Vec<KgLevel> = quadratic_roots(pot, n)
        .into_iter()
        .filter_map(|e| level_from_root(pot, n, e))
        .collect();
    levels.sort_by(|x, y| y.epsilon.total_cmp(&x.epsilon));
    levels.dedup_by(|x, y| x.epsilon == y.epsilon);
    Ok(levels)
}

/// The bound state of degree `n`. If both roots are admissible the larger
/// `ε` is taken.
pub fn kg_spectrum(pot: &KgPotential, n: usize) -> Result<KgLevel> {
    kg_admissible_levels(pot, n)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoBoundState {
            n,
            reason: "no root of the spectrum quadratic has |eps| < m and a > 0".into(),
        })
}

/// `ψ = s^{1/2} e^{-s²/2} H_n(s)` with `s = √(2ar)`, up to normalization.
pub fn kg_wavefunction(level: &KgLevel, r: f64) -> Result<f64> {
    Ok(kg_wavefunction_derivatives(level, r)?.psi)
}

pub fn kg_wavefunction_derivatives(level: &KgLevel, r: f64) -> Result<WaveValue> {
    level.system()?.level(level.n)?.wavefunction(r)
}

/// Energies `-4g²/(2n+1)²` of the fixed potential `-g/r - 3/(16r²)`.
///
/// Each level is the catalog member `n` with `a = 2g/(2n+1)`.
pub fn effective_spectrum(g: f64, n_max: usize) -> Result<Vec<f64>> {
    if !(g.is_finite() && g > 0.0) {
        return Err(Error::ParameterDomain {
            name: "g",
            value: g,
            requirement: "must be finite and > 0",
        });
    }
    Ok((0..=n_max)
        .map(|n| {
            let a = 2.0 * g / (2.0 * n as f64 + 1.0);
            -a * a
        })
        .collect())
}
