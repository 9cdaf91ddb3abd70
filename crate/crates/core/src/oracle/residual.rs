use serde::Serialize;

use super::fd::Grid;
use crate::error::Result;
use crate::kg::{KgLevel, KgPotential};
use crate::nucore::SolvableSystem;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub max_abs: f64,
    /// `max_abs / ((1 + |E|)·max|Ψ|)`
    pub max_rel: f64,
}

/// `-Ψ'' + VΨ - E_nΨ` at every grid node with the analytic `Ψ''`.
pub fn schrodinger_residual(system: &SolvableSystem, n: usize, grid: &Grid) -> Result<Residual> {
    schrodinger_residual_at_energy(system, n, system.energy(n)?, grid)
}

/// As [`schrodinger_residual`] with `E` replaced by `energy`.
pub fn schrodinger_residual_at_energy(
    system: &SolvableSystem,
    n: usize,
    energy: f64,
    grid: &Grid,
) -> Result<Residual> {
    grid.check_inside(system.domain())?;
    let level = system.level(n)?;
    let mut max_abs: f64 = 0.0;
    let mut max_psi: f64 = 0.0;
    for r in grid.nodes() {
        let w = level.wavefunction(r)?;
        let res = -w.d2 + (system.potential.eval(r) - energy) * w.psi;
        max_abs = max_abs.max(res.abs());
        max_psi = max_psi.max(w.psi.abs());
    }
    Ok(Residual {
        max_abs,
        max_rel: max_abs / ((1.0 + energy.abs()) * max_psi),
    })
}

/// `-ψ'' + (m + V_s)²ψ - (ε - V_v)²ψ` at every grid node, scaled as in
/// [`schrodinger_residual`] with `E = ε² - m²`.
pub fn kg_equation_residual(level: &KgLevel, potential: &KgPotential, grid: &Grid) -> Result<f64> {
    kg_residual_at(level, level.epsilon, potential, grid)
}

pub(crate) fn kg_residual_at(
    level: &KgLevel,
    epsilon: f64,
    potential: &KgPotential,
    grid: &Grid,
) -> Result<f64> {
    let system = level.system()?;
    grid.check_inside(system.domain())?;
    let psi = system.level(level.n)?;
    let m = potential.mass;
    let vs = potential.scalar_potential();
    let vv = potential.vector_potential();
    let mut max_abs: f64 = 0.0;
    let mut max_psi: f64 = 0.0;
    for r in grid.nodes() {
        let w = psi.wavefunction(r)?;
        let mass = m + vs.eval(r);
        let energy = epsilon - vv.eval(r);
        let res = -w.d2 + (mass * mass - energy * energy) * w.psi;
        max_abs = max_abs.max(res.abs());
        max_psi = max_psi.max(w.psi.abs());
    }
    Ok(max_abs / ((1.0 + (epsilon * epsilon - m * m).abs()) * max_psi))
}
