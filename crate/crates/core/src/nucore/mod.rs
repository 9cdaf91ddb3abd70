//! The factorized construction `Ψ(r) = f(r)·F(s(r))`: coordinate maps, the
//! modulation factor `f`, the potential/energy split and system assembly.

mod decompose;
mod factor;
mod potential;
mod system;
mod transform;

pub use decompose::{decompose_factor_part, decompose_polynomial_part};
pub use factor::{build_factor_f, FactorF};
pub use potential::{Basis, PotentialExpr};
pub use system::{
    assemble_level_system, assemble_system, evaluate_wavefunction, EnergyFormula, Level,
    SolvableSystem, WaveValue,
};
pub use transform::{
    solve_transformation_constraint, Branch, MapDerivatives, Transformation, TransformationKind,
};
