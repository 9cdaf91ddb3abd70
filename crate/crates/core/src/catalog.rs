//! Named systems with parameter schemas and closed-form spectra.
//!
//! | id | polynomial | map | potential |
//! |----|------------|-----|-----------|
//! | `poschl_teller` | `P_n^(α,β)` | `cos(ar)` | `csc²`, `csc·cot` |
//! | `poschl_teller_alt` | `(1-s)^α(1+s)^β P_n^(α,β)` | `cos(ar)` | same as above |
//! | `radial_oscillator` | `L_n^(ℓ+1/2)` | `wr²/2` | `ℓ(ℓ+1)/r² + w²r²/4` |
//! | `inversely_linear_nonrel` | `e^{-s²/2} H_n` | `√(2ar)` | `-a(2n+1)/(2r) - 3/(16r²)` |
//!
//! The Pöschl–Teller ranges `α, β > 1/2` are a choice made here: with them
//! `Ψ` vanishes at both walls faster than `√r`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nucore::{
    assemble_level_system, assemble_system, EnergyFormula, SolvableSystem, Transformation,
};
use crate::orthopoly::{JacobiWeighting, PolynomialFamily};

/// Highest level built by the catalog constructors.
pub const MAX_LEVEL: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogId {
    PoschlTeller,
    PoschlTellerAlt,
    RadialOscillator,
    InverselyLinearNonrel,
}

impl CatalogId {
    pub const ALL: [CatalogId; 4] = [
        Self::PoschlTeller,
        Self::PoschlTellerAlt,
        Self::RadialOscillator,
        Self::InverselyLinearNonrel,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::PoschlTeller => "poschl_teller",
            Self::PoschlTellerAlt => "poschl_teller_alt",
            Self::RadialOscillator => "radial_oscillator",
            Self::InverselyLinearNonrel => "inversely_linear_nonrel",
        }
    }

    pub fn entry(&self) -> &'static CatalogEntry {
        &ENTRIES[*self as usize]
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown catalog id `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub range: &'static str,
    pub default: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub params: &'static [ParamSpec],
    /// Which polynomial and coordinate map the entry comes from.
    pub provenance: &'static str,
    pub spectrum: &'static str,
}

static ENTRIES: [CatalogEntry; 4] = [
    CatalogEntry {
        id: CatalogId::PoschlTeller,
        params: &[
            ParamSpec {
                name: "alpha",
                range: "> 1/2",
                default: 1.0,
            },
            ParamSpec {
                name: "beta",
                range: "> 1/2",
                default: 1.0,
            },
            ParamSpec {
                name: "a",
                range: "> 0",
                default: 1.0,
            },
        ],
        provenance: "Jacobi P_n^(alpha,beta), s = cos(ar)",
        spectrum: "a^2 (n + (alpha+beta+1)/2)^2",
    },
    CatalogEntry {
        id: CatalogId::PoschlTellerAlt,
        params: &[
            ParamSpec {
                name: "alpha",
                range: "> 1/2",
                default: 1.0,
            },
            ParamSpec {
                name: "beta",
                range: "> 1/2",
                default: 1.0,
            },
            ParamSpec {
                name: "a",
                range: "> 0",
                default: 1.0,
            },
        ],
        provenance: "weighted Jacobi (1-s)^alpha (1+s)^beta P_n^(alpha,beta), s = cos(ar)",
        spectrum: "a^2 [(n+1)(n+alpha+beta) + (alpha+beta-1)^2/4]",
    },
    CatalogEntry {
        id: CatalogId::RadialOscillator,
        params: &[
            ParamSpec {
                name: "ell",
                range: "integer >= 0",
                default: 0.0,
            },
            ParamSpec {
                name: "w",
                range: "> 0",
                default: 1.0,
            },
        ],
        provenance: "Laguerre L_n^(ell+1/2), s = w r^2 / 2",
        spectrum: "w (2n + ell + 3/2)",
    },
    CatalogEntry {
        id: CatalogId::InverselyLinearNonrel,
        params: &[ParamSpec {
            name: "a",
            range: "> 0",
            default: 1.0,
        }],
        provenance: "Hermite e^(-s^2/2) H_n, s = sqrt(2ar); potential depends on n",
        spectrum: "-a^2 (one level per n-dependent potential)",
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain {
            name,
            value,
            requirement: "must be finite and > 0",
        })
    }
}

fn require_wall_exponent(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.5 {
        Ok(())
    } else {
        Err(Error::Admissibility(format!(
            "{name} = {value}; bound states vanishing at both walls need {name} > 1/2"
        )))
    }
}

fn jacobi_system(
    alpha: f64,
    beta: f64,
    a: f64,
    weighting: JacobiWeighting,
) -> Result<SolvableSystem> {
    require_positive("a", a)?;
    require_wall_exponent("alpha", alpha)?;
    require_wall_exponent("beta", beta)?;
    let family = PolynomialFamily::jacobi(alpha, beta)?;
    assemble_system(family, weighting, MAX_LEVEL, &Transformation::cosine(a)?)
}

/// Trigonometric Pöschl–Teller system from standard Jacobi polynomials.
pub fn poschl_teller(alpha: f64, beta: f64, a: f64) -> Result<SolvableSystem> {
    Ok(jacobi_system(alpha, beta, a, JacobiWeighting::Standard)?
        .with_name(CatalogId::PoschlTeller.as_str())
        .with_closed_form(EnergyFormula::PoschlTeller { alpha, beta, a }))
}

/// Same potential built from the weighted Jacobi function; the spectrum comes
/// out in the shifted form `(n+1)(n+α+β) + (α+β-1)²/4`.
pub fn poschl_teller_alt(alpha: f64, beta: f64, a: f64) -> Result<SolvableSystem> {
    Ok(jacobi_system(alpha, beta, a, JacobiWeighting::Weighted)?
        .with_name(CatalogId::PoschlTellerAlt.as_str())
        .with_closed_form(EnergyFormula::PoschlTellerShifted { alpha, beta, a }))
}

/// Three-dimensional radial oscillator `ℓ(ℓ+1)/r² + w²r²/4`.
pub fn radial_oscillator(ell: u32, w: f64) -> Result<SolvableSystem> {
    require_positive("w", w)?;
    let alpha = ell as f64 + 0.5;
    let a = (2.0 * w).sqrt();
    let family = PolynomialFamily::laguerre(alpha)?;
    Ok(assemble_system(
        family,
        JacobiWeighting::Standard,
        MAX_LEVEL,
        &Transformation::quadratic(a)?,
    )?
    .with_name(CatalogId::RadialOscillator.as_str())
    .with_closed_form(EnergyFormula::RadialOscillator { ell, w }))
}

/// The `n`-th member of the inversely linear family
/// `-a(2n+1)/(2r) - 3/(16r²)`, with `E = -a²`.
pub fn inversely_linear_nonrel(a: f64, n: usize) -> Result<SolvableSystem> {
    require_positive("a", a)?;
    Ok(assemble_level_system(
        PolynomialFamily::Hermite,
        JacobiWeighting::Standard,
        n,
        &Transformation::sqrt(a)?,
    )?
    .with_name(CatalogId::InverselyLinearNonrel.as_str())
    .with_closed_form(EnergyFormula::Constant { value: -a * a }))
}

/// Parameter values keyed by schema name.
pub type Params = BTreeMap<String, f64>;

/// Fills unspecified parameters with their schema defaults.
pub fn with_defaults(id: CatalogId, given: &Params) -> Params {
    let mut out = Params::new();
    for p in id.entry().params {
        out.insert(
            p.name.to_string(),
            given.get(p.name).copied().unwrap_or(p.default),
        );
    }
    out
}

fn ell_param(value: f64) -> Result<u32> {
    if value.is_finite() && value >= 0.0 && value.fract() == 0.0 && value <= u32::MAX as f64 {
        Ok(value as u32)
    } else {
        Err(Error::ParameterDomain {
            name: "ell",
            value,
            requirement: "must be a non-negative integer",
        })
    }
}

/// Builds a catalog system from a parameter map. For the inversely linear
/// entry, `level` selects the member of the family.
pub fn build(id: CatalogId, params: &Params, level: usize) -> Result<SolvableSystem> {
    let p = with_defaults(id, params);
    match id {
        CatalogId::PoschlTeller => poschl_teller(p["alpha"], p["beta"], p["a"]),
        CatalogId::PoschlTellerAlt => poschl_teller_alt(p["alpha"], p["beta"], p["a"]),
        CatalogId::RadialOscillator => radial_oscillator(ell_param(p["ell"])?, p["w"]),
        CatalogId::InverselyLinearNonrel => inversely_linear_nonrel(p["a"], level),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nucore::Basis;

    #[test]
    fn poschl_teller_unit_case() {
        let s = poschl_teller(1.0, 1.0, 1.0).unwrap();
        assert!((s.potential.coefficient(Basis::CscSq { a: 1.0 }) - 0.75).abs() < 1e-15);
        assert_eq!(s.potential.terms().len(), 1);
        assert!((s.energy(0).unwrap() - 2.25).abs() < 1e-13);
        assert_eq!(s.closed_form.unwrap().eval(0), 2.25);
    }

    #[test]
    fn poschl_teller_asymmetric_ground_state() {
        let s = poschl_teller(2.0, 1.0, 1.0).unwrap();
        assert!((s.energy(0).unwrap() - 4.0).abs() < 1e-13);
        assert!(s.potential.coefficient(Basis::CscCot { a: 1.0 }) != 0.0);
    }

    #[test]
    fn admissibility() {
        assert!(matches!(
            poschl_teller(0.1, 1.0, 1.0),
            Err(Error::Admissibility(_))
        ));
        assert!(matches!(
            poschl_teller(1.0, 0.5, 1.0),
            Err(Error::Admissibility(_))
        ));
        assert!(matches!(
            poschl_teller(1.0, 1.0, 0.0),
            Err(Error::ParameterDomain { .. })
        ));
        assert!(radial_oscillator(0, -1.0).is_err());
        assert!(inversely_linear_nonrel(0.0, 0).is_err());
    }

    #[test]
    fn alt_matches_standard_ground_state() {
        let s = poschl_teller_alt(1.0, 1.0, 1.0).unwrap();
        assert_eq!(s.energy_split(0).unwrap(), (2.0, 0.25));
        assert!((s.energy(0).unwrap() - 2.25).abs() < 1e-15);
    }

    #[test]
    fn alt_level_three_equals_standard() {
        let a = poschl_teller(2.0, 1.0, 2.0).unwrap();
        let b = poschl_teller_alt(2.0, 1.0, 2.0).unwrap();
        assert!((a.energy(3).unwrap() - b.energy(3).unwrap()).abs() < 1e-12);
        assert!(a.potential.approx_eq(&b.potential, 1e-13));
    }

    #[test]
    fn oscillator_examples() {
        let s = radial_oscillator(0, 1.0).unwrap();
        assert!((s.energy(0).unwrap() - 1.5).abs() < 1e-14);
        let s = radial_oscillator(1, 2.0).unwrap();
        assert!((s.energy(0).unwrap() - 5.0).abs() < 1e-13);
        assert!((s.potential.coefficient(Basis::InvR2) - 2.0).abs() < 1e-13);
        assert!((s.potential.coefficient(Basis::RSquared) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn inversely_linear_ground_member() {
        let s = inversely_linear_nonrel(1.0, 0).unwrap();
        assert!((s.potential.coefficient(Basis::InvR) + 0.5).abs() < 1e-15);
        assert!((s.potential.coefficient(Basis::InvR2) + 3.0 / 16.0).abs() < 1e-15);
        assert_eq!(s.energy(0).unwrap(), -1.0);
        let far = s.level(0).unwrap().wavefunction(60.0).unwrap().psi;
        assert!(far.abs() < 1e-20);
    }

    #[test]
    fn build_from_params() {
        let mut p = Params::new();
        p.insert("ell".into(), 1.5);
        assert!(build(CatalogId::RadialOscillator, &p, 0).is_err());
        p.insert("ell".into(), 2.0);
        let s = build(CatalogId::RadialOscillator, &p, 0).unwrap();
        assert!((s.energy(1).unwrap() - 5.5).abs() < 1e-13);
        assert_eq!(
            "radial_oscillator".parse::<CatalogId>().unwrap(),
            CatalogId::RadialOscillator
        );
        assert!("morse".parse::<CatalogId>().is_err());
    }

    #[test]
    fn entries_are_indexed_by_id() {
        for id in CatalogId::ALL {
            assert_eq!(id.entry().id, id);
        }
    }
}
