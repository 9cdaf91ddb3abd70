//! Independent checks of the closed forms: a finite-difference eigensolver,
//! pointwise residuals and quadrature inner products.

mod fd;
mod quadrature;
mod report;
mod residual;
mod suite;

pub use fd::{convergence_study, fd_eigensolve, ConvergenceStudy, Grid, TridiagonalOperator};
pub use quadrature::{
    gauss_legendre, integrate, integration_interval, max_off_diagonal, orthogonality_matrix,
    quadrature_norm, PANEL_ORDER, TAIL_THRESHOLD,
};
pub use report::{json_number, sig17, VerificationRecord};
pub use residual::{
    kg_equation_residual, schrodinger_residual, schrodinger_residual_at_energy, Residual,
};
pub use suite::*;
