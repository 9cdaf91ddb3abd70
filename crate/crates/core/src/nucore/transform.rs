use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::orthopoly::PolynomialFamily;

/// Closed-form coordinate maps `s(r)`, each with scale `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformationKind {
    /// `s = cos(ar)` on `(0, π/a)`; `s'²/(1-s²) = a²`.
    CosineMap { a: f64 },
    /// `s = a²r²/4` on `(0, ∞)`; `s'²/s = a²`.
    QuadraticMap { a: f64 },
    /// `s = √(2ar)` on `(0, ∞)`; `s'² s² = a²`.
    SqrtMap { a: f64 },
}

/// Solution selector for the transformation constraint.
///
/// Only [`Branch::Principal`] is implemented. For Jacobi data it is the
/// `cos(ar)` solution; the hyperbolic and exponential solutions are listed so
/// callers can name them, and selecting one is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Principal,
    Cosh,
    Sinh,
    Tanh,
    Exponential,
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Principal => "principal",
            Self::Cosh => "cosh",
            Self::Sinh => "sinh",
            Self::Tanh => "tanh",
            Self::Exponential => "exponential",
        }
    }
}

/// `s(r)` and its first three derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapDerivatives {
    pub s: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transformation {
    kind: TransformationKind,
}

impl Transformation {
    pub fn new(kind: TransformationKind) -> Result<Self> {
        let a = match kind {
            TransformationKind::CosineMap { a }
            | TransformationKind::QuadraticMap { a }
            | TransformationKind::SqrtMap { a } => a,
        };
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::ParameterDomain {
                name: "a",
                value: a,
                requirement: "transformation scale must be finite and > 0",
            });
        }
        Ok(Self { kind })
    }

    pub fn cosine(a: f64) -> Result<Self> {
        Self::new(TransformationKind::CosineMap { a })
    }

    pub fn quadratic(a: f64) -> Result<Self> {
        Self::new(TransformationKind::QuadraticMap { a })
    }

    pub fn sqrt(a: f64) -> Result<Self> {
        Self::new(TransformationKind::SqrtMap { a })
    }

    pub fn kind(&self) -> TransformationKind {
        self.kind
    }

    pub fn scale(&self) -> f64 {
        match self.kind {
            TransformationKind::CosineMap { a }
            | TransformationKind::QuadraticMap { a }
            | TransformationKind::SqrtMap { a } => a,
        }
    }

    /// The constant `C = a²` of the defining identity.
    pub fn constant(&self) -> f64 {
        self.scale() * self.scale()
    }

    /// Natural open domain in `r`.
    pub fn domain(&self) -> (f64, f64) {
        match self.kind {
            TransformationKind::CosineMap { a } => (0.0, PI / a),
            TransformationKind::QuadraticMap { .. } | TransformationKind::SqrtMap { .. } => {
                (0.0, f64::INFINITY)
            }
        }
    }

    pub fn s(&self, r: f64) -> f64 {
        match self.kind {
            TransformationKind::CosineMap { a } => (a * r).cos(),
            TransformationKind::QuadraticMap { a } => a * a * r * r / 4.0,
            TransformationKind::SqrtMap { a } => (2.0 * a * r).sqrt(),
        }
    }

    pub fn derivatives(&self, r: f64) -> MapDerivatives {
        match self.kind {
            TransformationKind::CosineMap { a } => {
                let (sin, cos) = (a * r).sin_cos();
                MapDerivatives {
                    s: cos,
                    d1: -a * sin,
                    d2: -a * a * cos,
                    d3: a * a * a * sin,
                }
            }
            TransformationKind::QuadraticMap { a } => MapDerivatives {
                s: a * a * r * r / 4.0,
                d1: a * a * r / 2.0,
                d2: a * a / 2.0,
                d3: 0.0,
            },
            TransformationKind::SqrtMap { a } => {
                let s = (2.0 * a * r).sqrt();
                let d1 = a / s;
                MapDerivatives {
                    s,
                    d1,
                    d2: -d1 / (2.0 * r),
                    d3: 3.0 * d1 / (4.0 * r * r),
                }
            }
        }
    }

    /// Left side of the defining identity, which should equal `a²`.
    pub fn identity_value(&self, r: f64) -> f64 {
        let d = self.derivatives(r);
        match self.kind {
            TransformationKind::CosineMap { .. } => d.d1 * d.d1 / (1.0 - d.s * d.s),
            TransformationKind::QuadraticMap { .. } => d.d1 * d.d1 / d.s,
            TransformationKind::SqrtMap { .. } => d.d1 * d.d1 * d.s * d.s,
        }
    }

    pub fn descriptor(&self) -> String {
        match self.kind {
            TransformationKind::CosineMap { a } => format!("s = cos({a} r)"),
            TransformationKind::QuadraticMap { a } => format!("s = {a}^2 r^2 / 4"),
            TransformationKind::SqrtMap { a } => format!("s = sqrt(2 {a} r)"),
        }
    }

    /// Sample points strictly inside the domain, used by the pointwise checks.
    pub(crate) fn sample_points(&self, count: usize) -> Vec<f64> {
        let (left, right) = match self.kind {
            TransformationKind::CosineMap { a } => (0.0, PI / a),
            TransformationKind::QuadraticMap { a } | TransformationKind::SqrtMap { a } => {
                (0.0, 12.0 / a)
            }
        };
        (1..=count)
            .map(|i| left + (right - left) * i as f64 / (count + 1) as f64)
            .collect()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// Picks the coordinate map whose defining identity matches the family's
/// `σ̃/σ` structure, with `constant = C = a²`.
pub fn solve_transformation_constraint(
    family: PolynomialFamily,
    constant: f64,
    branch: Branch,
) -> Result<Transformation> {
    family.validate()?;
    if !(constant.is_finite() && constant > 0.0) {
        return Err(Error::ParameterDomain {
            name: "C",
            value: constant,
            requirement: "transformation constant must be finite and > 0",
        });
    }
    if branch != Branch::Principal {
        return Err(Error::BranchNotImplemented(branch.name()));
    }
    let a = constant.sqrt();
    match family {
        PolynomialFamily::Jacobi { .. } => Transformation::cosine(a),
        PolynomialFamily::Laguerre { .. } => Transformation::quadratic(a),
        PolynomialFamily::Hermite => Transformation::sqrt(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_cosine_branch() {
        let t = solve_transformation_constraint(
            PolynomialFamily::Jacobi {
                alpha: 1.0,
                beta: 1.0,
            },
            4.0,
            Branch::Principal,
        )
        .unwrap();
        assert_eq!(t.kind(), TransformationKind::CosineMap { a: 2.0 });
        let (l, r) = t.domain();
        assert_eq!(l, 0.0);
        assert!((r - PI / 2.0).abs() < 1e-15);
        assert!((t.s(0.3) - (0.6f64).cos()).abs() < 1e-15);
    }

    #[test]
    fn hermite_sqrt_branch() {
        let t = solve_transformation_constraint(PolynomialFamily::Hermite, 1.0, Branch::Principal)
            .unwrap();
        assert_eq!(t.kind(), TransformationKind::SqrtMap { a: 1.0 });
        assert!((t.s(2.0) - 2.0).abs() < 1e-15);
        assert!((t.identity_value(0.37) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn other_branches_are_declared_only() {
        let family = PolynomialFamily::Jacobi {
            alpha: 0.0,
            beta: 0.0,
        };
        for b in [
            Branch::Cosh,
            Branch::Sinh,
            Branch::Tanh,
            Branch::Exponential,
        ] {
            assert_eq!(
                solve_transformation_constraint(family, 1.0, b),
                Err(Error::BranchNotImplemented(b.name()))
            );
        }
    }

    #[test]
    fn identities_hold_across_domains() {
        let maps = [
            Transformation::cosine(1.7).unwrap(),
            Transformation::quadratic(0.8).unwrap(),
            Transformation::sqrt(2.5).unwrap(),
        ];
        for t in maps {
            let c = t.constant();
            for r in t.sample_points(20) {
                assert!((t.identity_value(r) - c).abs() < 1e-12 * c, "{t} at {r}");
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let maps = [
            Transformation::cosine(1.3).unwrap(),
            Transformation::quadratic(0.9).unwrap(),
            Transformation::sqrt(1.1).unwrap(),
        ];
        let h = 1e-4;
        for t in maps {
            for r in [0.4, 0.9, 1.7] {
                let d = t.derivatives(r);
                let at = |x: f64| t.derivatives(x);
                let fd1 = (at(r + h).s - at(r - h).s) / (2.0 * h);
                let fd2 = (at(r + h).d1 - at(r - h).d1) / (2.0 * h);
                let fd3 = (at(r + h).d2 - at(r - h).d2) / (2.0 * h);
                assert!((fd1 - d.d1).abs() < 1e-7);
                assert!((fd2 - d.d2).abs() < 1e-7);
                assert!((fd3 - d.d3).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn rejects_bad_scale() {
        assert!(Transformation::cosine(0.0).is_err());
        assert!(Transformation::sqrt(-1.0).is_err());
        assert!(solve_transformation_constraint(
            PolynomialFamily::Hermite,
            -1.0,
            Branch::Principal
        )
        .is_err());
    }
}
