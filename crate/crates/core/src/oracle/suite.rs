use std::collections::BTreeMap;

use super::fd::{convergence_study, fd_eigensolve, Grid};
use super::quadrature::{max_off_diagonal, orthogonality_matrix};
use super::report::VerificationRecord;
use super::residual::{kg_equation_residual, schrodinger_residual};
use crate::catalog::{self, CatalogId, Params};
use crate::error::Result;
use crate::kg::{kg_admissible_levels, KgPotential};
use crate::nucore::{SolvableSystem, TransformationKind};

/// Offset of the finite-difference grid from singular endpoints.
pub const WALL_OFFSET: f64 = 1e-4;
/// Offset used for the grid-halving study, small enough that the wall
/// truncation error stays below the discretization error.
pub const CONVERGENCE_OFFSET: f64 = 1e-8;
pub const FD_NODES: usize = 6000;
pub const CONVERGENCE_NODES: usize = 2000;
pub const RESIDUAL_NODES: usize = 100;
pub const QUADRATURE_POINTS: usize = 400;
pub const LEVELS_CHECKED: usize = 4;

pub const FD_TOLERANCE: f64 = 1e-3;
pub const ENERGY_TOLERANCE: f64 = 1e-12;
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-8;
pub const RATIO_RANGE: (f64, f64) = (3.5, 4.5);
pub const KG_SPECTRUM_TOLERANCE: f64 = 1e-12;

/// Right end of the truncated grid: the wall for trigonometric systems,
/// otherwise far enough that `Ψ` has decayed.
fn grid_right(system: &SolvableSystem, offset: f64) -> f64 {
    let t = &system.transformation;
    match t.kind() {
        TransformationKind::CosineMap { a } => std::f64::consts::PI / a - offset,
        // 12/√w with a² = 2w
        TransformationKind::QuadraticMap { a } => 12.0 * std::f64::consts::SQRT_2 / a,
        // e^{-s²/2} = e^{-ar}
        TransformationKind::SqrtMap { a } => 40.0 / a,
    }
}

/// Dirichlet grid on which the finite-difference spectrum is compared.
pub fn standard_fd_grid(system: &SolvableSystem) -> Result<Grid> {
    Grid::new(WALL_OFFSET, grid_right(system, WALL_OFFSET), FD_NODES)
}

/// 100 interior nodes for pointwise residuals.
pub fn standard_residual_grid(system: &SolvableSystem) -> Result<Grid> {
    Grid::new(WALL_OFFSET, grid_right(system, WALL_OFFSET), RESIDUAL_NODES)
}

pub fn convergence_grid(system: &SolvableSystem) -> Result<Grid> {
    Grid::new(
        CONVERGENCE_OFFSET,
        grid_right(system, CONVERGENCE_OFFSET),
        CONVERGENCE_NODES,
    )
}

/// Whether Dirichlet finite differences reproduce the closed-form levels.
/// The inversely linear members have `Ψ ~ r^{1/4}` for even `n`, which the
/// discretization does not select.
pub fn fd_applicable(system: &SolvableSystem) -> bool {
    !matches!(
        system.transformation.kind(),
        TransformationKind::SqrtMap { .. }
    )
}

struct Context<'a> {
    system: &'a str,
    params: &'a BTreeMap<String, f64>,
}

impl Context<'_> {
    #[allow(clippy::too_many_arguments)]
    fn record(
        &self,
        grid: Option<Grid>,
        check: String,
        closed_form: f64,
        oracle_value: f64,
        abs_err: f64,
        rel_err: f64,
        tolerance: f64,
        pass: bool,
    ) -> VerificationRecord {
        VerificationRecord {
            system: self.system.to_string(),
            params: self.params.clone(),
            grid,
            check,
            closed_form,
            oracle_value,
            abs_err,
            rel_err,
            tolerance,
            pass,
        }
    }

    fn compare(
        &self,
        grid: Option<Grid>,
        check: String,
        expected: f64,
        value: f64,
        tolerance: f64,
    ) -> VerificationRecord {
        let abs_err = (value - expected).abs();
        let rel_err = abs_err / expected.abs().max(f64::MIN_POSITIVE);
        self.record(
            grid,
            check,
            expected,
            value,
            abs_err,
            rel_err,
            tolerance,
            rel_err < tolerance,
        )
    }
}

/// Every check for one catalog system: closed form against assembled
/// energies, finite-difference spectrum, residuals, orthogonality and
/// optionally the grid-halving study.
pub fn verify_system(
    system: &SolvableSystem,
    params: &BTreeMap<String, f64>,
    grid_halve: bool,
) -> Result<Vec<VerificationRecord>> {
    let ctx = Context {
        system: &system.name,
        params,
    };
    let mut out = Vec::new();
    let levels: Vec<usize> = system
        .level_numbers()
        .filter(|&n| n <= LEVELS_CHECKED)
        .collect();

    if let Some(formula) = system.closed_form {
        for &n in &levels {
            out.push(ctx.compare(
                None,
                format!("closed_form n={n}"),
                formula.eval(n),
                system.energy(n)?,
                ENERGY_TOLERANCE,
            ));
        }
    }

    if fd_applicable(system) {
        let grid = standard_fd_grid(system)?;
        let fd = fd_eigensolve(&system.potential, &grid, levels.len())?;
        for (&n, value) in levels.iter().zip(fd) {
            out.push(ctx.compare(
                Some(grid),
                format!("fd_eigenvalue n={n}"),
                system.energy(n)?,
                value,
                FD_TOLERANCE,
            ));
        }
    }

    let grid = standard_residual_grid(system)?;
    for &n in &levels {
        let r = schrodinger_residual(system, n, &grid)?;
        out.push(ctx.record(
            Some(grid),
            format!("residual n={n}"),
            0.0,
            r.max_rel,
            r.max_abs,
            r.max_rel,
            RESIDUAL_TOLERANCE,
            r.max_rel < RESIDUAL_TOLERANCE,
        ));
    }

    if levels.len() > 1 && levels[0] == 0 {
        let n_max = *levels.last().expect("non-empty");
        let m = orthogonality_matrix(system, n_max, QUADRATURE_POINTS)?;
        let off = max_off_diagonal(&m);
        out.push(ctx.record(
            None,
            format!("orthogonality n<={n_max}"),
            0.0,
            off,
            off,
            off,
            ORTHOGONALITY_TOLERANCE,
            off < ORTHOGONALITY_TOLERANCE,
        ));
    }

    if grid_halve && fd_applicable(system) {
        let grid = convergence_grid(system)?;
        let c = convergence_study(&system.potential, &grid, 0, system.energy(0)?)?;
        let abs_err = (c.ratio - 4.0).abs();
        out.push(ctx.record(
            Some(grid),
            "grid_halving_ratio n=0".into(),
            4.0,
            c.ratio,
            abs_err,
            abs_err / 4.0,
            0.5,
            (RATIO_RANGE.0..=RATIO_RANGE.1).contains(&c.ratio),
        ));
    }
    Ok(out)
}

/// Checks for a catalog id. The inversely linear entry is checked for the
/// members `0..=2` (or the single member `n` when given).
pub fn verify_catalog(
    id: CatalogId,
    params: &Params,
    level: Option<usize>,
    grid_halve: bool,
) -> Result<Vec<VerificationRecord>> {
    let full = catalog::with_defaults(id, params);
    if id == CatalogId::InverselyLinearNonrel {
        let members: Vec<usize> = level.map_or_else(|| (0..=2).collect(), |n| vec![n]);
        let mut out = Vec::new();
        for n in members {
            let mut p = full.clone();
            p.insert("n".into(), n as f64);
            out.extend(verify_system(
                &catalog::build(id, &full, n)?,
                &p,
                grid_halve,
            )?);
        }
        return Ok(out);
    }
    verify_system(&catalog::build(id, &full, 0)?, &full, grid_halve)
}

/// Spectrum-quadratic residual, Klein–Gordon pointwise residual and the
/// energy of the mapped non-relativistic level for `n = 0..=n_max`.
pub fn verify_kg(potential: &KgPotential, n_max: usize) -> Result<Vec<VerificationRecord>> {
    let params = BTreeMap::from([
        ("A".to_string(), potential.vector),
        ("B".to_string(), potential.scalar),
        ("m".to_string(), potential.mass),
    ]);
    let ctx = Context {
        system: "klein_gordon",
        params: &params,
    };
    let m2 = potential.mass * potential.mass;
    let mut out = Vec::new();
    for n in 0..=n_max {
        for level in kg_admissible_levels(potential, n)? {
            let res = level.spectrum_residual().abs();
            out.push(ctx.record(
                None,
                format!("spectrum_residual n={n} eps={}", level.epsilon),
                0.0,
                res,
                res,
                res / m2,
                KG_SPECTRUM_TOLERANCE,
                res < KG_SPECTRUM_TOLERANCE * m2 && level.epsilon.abs() < potential.mass,
            ));
            let system = level.system()?;
            let expected = level.epsilon * level.epsilon - m2;
            out.push(ctx.compare(
                None,
                format!("mapped_energy n={n}"),
                expected,
                system.energy(n)?,
                ENERGY_TOLERANCE,
            ));
            let grid = standard_residual_grid(&system)?;
            let r = kg_equation_residual(&level, potential, &grid)?;
            out.push(ctx.record(
                Some(grid),
                format!("kg_residual n={n}"),
                0.0,
                r,
                r,
                r,
                RESIDUAL_TOLERANCE,
                r < RESIDUAL_TOLERANCE,
            ));
        }
    }
    Ok(out)
}

/// Default parameters of every catalog entry plus the Klein–Gordon ground
/// configuration `m = 1, B = 0, A = √3/4`.
pub fn verify_all() -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for id in CatalogId::ALL {
        out.extend(verify_catalog(id, &Params::new(), None, false)?);
    }
    let p = KgPotential::from_scalar(0.0, crate::kg::Sign::Plus, 1.0)?;
    out.extend(verify_kg(&p, 2)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poschl_teller_suite_passes() {
        let recs = verify_catalog(CatalogId::PoschlTeller, &Params::new(), None, true).unwrap();
        for r in &recs {
            assert!(r.pass, "{r:?}");
        }
        assert!(recs.iter().any(|r| r.check.starts_with("grid_halving")));
        assert!(recs.iter().any(|r| r.check.starts_with("orthogonality")));
    }

    #[test]
    fn inversely_linear_has_no_fd_rows() {
        let recs = verify_catalog(
            CatalogId::InverselyLinearNonrel,
            &Params::new(),
            Some(1),
            false,
        )
        .unwrap();
        assert!(recs.iter().all(|r| !r.check.starts_with("fd")));
        assert!(recs.iter().all(|r| r.pass), "{recs:?}");
    }
}
