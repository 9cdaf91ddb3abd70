//! Splitting `-σ̃ s'²/σ²` and `f''/f` into potential and energy pieces.
//!
//! Both functions are reduced analytically to the potential basis for each
//! coordinate map, using `f''/f = -½·{s, r} + s'²·(R'/2 + R²/4)` with
//! `R = τ̃/σ` and `{s, r}` the Schwarzian derivative. The energy is the
//! negated constant term; the returned potential has no constant term. Each
//! result is then checked pointwise against the direct evaluation, and a
//! mismatch is reported as a decomposition failure.

use super::factor::FactorF;
use super::potential::{Basis, PotentialExpr};
use super::transform::{Transformation, TransformationKind};
use crate::error::{Error, Result};
use crate::orthopoly::{HypergeometricData, SigmaShape};

const SAMPLE_POINTS: usize = 50;
const POLY_PART_TOL: f64 = 1e-12;
const FACTOR_PART_TOL: f64 = 1e-10;

fn mismatch(t: &Transformation, shape: SigmaShape) -> Error {
    Error::DecompositionFailure(format!("{t} does not match sigma of shape {shape:?}"))
}

/// `(V_F, E_F)` with `-σ̃ s'²/σ² = V_F - E_F`.
pub fn decompose_polynomial_part(
    data: &HypergeometricData,
    t: &Transformation,
) -> Result<(PotentialExpr, f64)> {
    let shape = SigmaShape::classify(&data.sigma)?;
    let (q0, q1, q2) = (
        data.sigma_tilde.coeff(0),
        data.sigma_tilde.coeff(1),
        data.sigma_tilde.coeff(2),
    );
    if data.sigma_tilde.degree() > 2 {
        return Err(Error::DecompositionFailure(format!(
            "sigma_tilde = {} has degree above two",
            data.sigma_tilde
        )));
    }
    let domain = t.domain();
    let mut full = PotentialExpr::new(domain);
    match (t.kind(), shape) {
        (TransformationKind::CosineMap { a }, SigmaShape::OneMinusSquare(c)) => {
            // -(a²/c²) σ̃/(1-s²) with σ̃ = -q2(1-s²) + d1(1+s) + d2(1-s)
            let k = a * a / (c * c);
            let d1 = (q0 + q2 + q1) / 2.0;
            let d2 = (q0 + q2 - q1) / 2.0;
            full.add_term(k * q2, Basis::Const)?;
            full.add_term(-k * (d1 + d2), Basis::CscSq { a })?;
            full.add_term(-k * (d1 - d2), Basis::CscCot { a })?;
        }
        (TransformationKind::QuadraticMap { a }, SigmaShape::Linear(c)) => {
            // -(a²/c²)(q0/s + q1 + q2 s), s = a²r²/4
            let c2 = c * c;
            full.add_term(-4.0 * q0 / c2, Basis::InvR2)?;
            full.add_term(-a * a * q1 / c2, Basis::Const)?;
            full.add_term(-a.powi(4) * q2 / (4.0 * c2), Basis::RSquared)?;
        }
        (TransformationKind::SqrtMap { a }, SigmaShape::Constant(c)) => {
            // -(a²/c²)(q0/s² + q1/s + q2), s² = 2ar
            if q1 != 0.0 {
                return Err(Error::DecompositionFailure(
                    "a linear sigma_tilde term produces r^(-1/2), outside the potential basis"
                        .into(),
                ));
            }
            let c2 = c * c;
            full.add_term(-a * q0 / (2.0 * c2), Basis::InvR)?;
            full.add_term(-a * a * q2 / c2, Basis::Const)?;
        }
        _ => return Err(mismatch(t, shape)),
    }
    let energy = -full.constant_term();
    let potential = full.without_constant();

    for r in t.sample_points(SAMPLE_POINTS) {
        let d = t.derivatives(r);
        let sig = data.sigma.eval(d.s);
        let direct = -data.sigma_tilde.eval(d.s) * d.d1 * d.d1 / (sig * sig);
        let split = potential.eval(r) - energy;
        let scale = 1.0 + direct.abs() + potential.eval_abs(r) + energy.abs();
        if (direct - split).abs() > POLY_PART_TOL * scale {
            return Err(Error::DecompositionFailure(format!(
                "polynomial part mismatch at r = {r}: {direct} vs {split}"
            )));
        }
    }
    Ok((potential, energy))
}

/// `(V_f, E_f)` with `f''/f = V_f - E_f`.
pub fn decompose_factor_part(f: &FactorF) -> Result<(PotentialExpr, f64)> {
    let t = f.transformation();
    let shape = SigmaShape::classify(f.sigma())?;
    let tau = f.tau_tilde();
    if tau.degree() > 1 {
        return Err(Error::DecompositionFailure(format!(
            "tau_tilde = {tau} has degree above one"
        )));
    }
    let (t0, t1) = (tau.coeff(0), tau.coeff(1));
    let mut full = PotentialExpr::new(t.domain());
    match (t.kind(), shape) {
        (TransformationKind::CosineMap { a }, SigmaShape::OneMinusSquare(c)) => {
            // R = c1/(1-s) + c2/(1+s); s'²·(R'/2 + R²/4) maps through
            // (1+s)/(1-s) = 2csc² + 2csc·cot - 1 and (1-s)/(1+s) = 2csc² - 2csc·cot - 1.
            let c1 = (t0 + t1) / (2.0 * c);
            let c2 = (t0 - t1) / (2.0 * c);
            let plus = c1 / 2.0 + c1 * c1 / 4.0;
            let minus = c2 * c2 / 4.0 - c2 / 2.0;
            let cross = c1 * c2 / 2.0;
            let a2 = a * a;
            // Schwarzian piece: -a²/4 + (3a²/4) csc²
            full.add_term(a2 * (0.75 + 2.0 * plus + 2.0 * minus), Basis::CscSq { a })?;
            full.add_term(
                a2 * (c1 + c2) * (1.0 + (c1 - c2) / 2.0),
                Basis::CscCot { a },
            )?;
            full.add_term(a2 * (-0.25 - plus - minus + cross), Basis::Const)?;
        }
        (TransformationKind::QuadraticMap { a }, SigmaShape::Linear(c)) => {
            // R = u/s + v; Schwarzian piece 3/(4r²)
            let (u, v) = (t0 / c, t1 / c);
            full.add_term(0.75 + u * u - 2.0 * u, Basis::InvR2)?;
            full.add_term(a * a * u * v / 2.0, Basis::Const)?;
            full.add_term(a.powi(4) * v * v / 16.0, Basis::RSquared)?;
        }
        (TransformationKind::SqrtMap { a }, SigmaShape::Constant(c)) => {
            // R = u + v s; Schwarzian piece -3/(16r²)
            let (u, v) = (t0 / c, t1 / c);
            if u * v != 0.0 {
                return Err(Error::DecompositionFailure(
                    "mixed tau_tilde terms produce r^(-1/2), outside the potential basis".into(),
                ));
            }
            full.add_term(-3.0 / 16.0, Basis::InvR2)?;
            full.add_term(a * (v / 2.0 + u * u / 4.0) / 2.0, Basis::InvR)?;
            full.add_term(a * a * v * v / 4.0, Basis::Const)?;
        }
        _ => return Err(mismatch(t, shape)),
    }
    let energy = -full.constant_term();
    let potential = full.without_constant();

    for r in t.sample_points(SAMPLE_POINTS) {
        let direct = f.second_log_ratio(r);
        let split = potential.eval(r) - energy;
        let scale = 1.0 + direct.abs() + potential.eval_abs(r) + energy.abs();
        if (direct - split).abs() > FACTOR_PART_TOL * scale {
            return Err(Error::DecompositionFailure(format!(
                "factor part mismatch at r = {r}: {direct} vs {split}"
            )));
        }
    }
    Ok((potential, energy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nucore::factor::build_factor_f;
    use crate::orthopoly::{
        hypergeometric_data, hypergeometric_data_variant, JacobiWeighting, Polynomial,
        PolynomialFamily,
    };

    #[test]
    fn jacobi_polynomial_part() {
        let (alpha, beta, a) = (1.3, 0.6, 1.7);
        for n in 0..5 {
            let data = hypergeometric_data(PolynomialFamily::Jacobi { alpha, beta }, n).unwrap();
            let t = Transformation::cosine(a).unwrap();
            let (v, e) = decompose_polynomial_part(&data, &t).unwrap();
            assert!(v.is_empty());
            let nf = n as f64;
            assert!((e - a * a * nf * (nf + alpha + beta + 1.0)).abs() < 1e-12 * (1.0 + e));
        }
    }

    #[test]
    fn laguerre_polynomial_part() {
        let (alpha, a) = (1.5, 1.2);
        let data = hypergeometric_data(PolynomialFamily::Laguerre { alpha }, 3).unwrap();
        let (v, e) =
            decompose_polynomial_part(&data, &Transformation::quadratic(a).unwrap()).unwrap();
        assert!((v.coefficient(Basis::InvR2) - alpha * alpha).abs() < 1e-14);
        assert_eq!(v.terms().len(), 1);
        assert!((e - a * a * (3.0 + alpha / 2.0 + 1.0)).abs() < 1e-13);
    }

    #[test]
    fn hermite_polynomial_part() {
        let a = 0.8;
        let n = 2;
        let data = hypergeometric_data(PolynomialFamily::Hermite, n).unwrap();
        let (v, e) = decompose_polynomial_part(&data, &Transformation::sqrt(a).unwrap()).unwrap();
        assert!((v.coefficient(Basis::InvR) + a * 5.0 / 2.0).abs() < 1e-14);
        assert_eq!(v.terms().len(), 1);
        assert!((e + a * a).abs() < 1e-15);
    }

    #[test]
    fn jacobi_factor_part() {
        let (alpha, beta, a) = (2.0, 1.0, 1.5);
        let data = hypergeometric_data(PolynomialFamily::Jacobi { alpha, beta }, 0).unwrap();
        let t = Transformation::cosine(a).unwrap();
        let f = build_factor_f(&data, &t).unwrap();
        let (v, e) = decompose_factor_part(&f).unwrap();
        let a2 = a * a;
        let csc2 = a2 / 4.0 * ((alpha - beta).powi(2) + (alpha + beta).powi(2) - 1.0);
        let csccot = a2 / 2.0 * (alpha * alpha - beta * beta);
        assert!((v.coefficient(Basis::CscSq { a }) - csc2).abs() < 1e-13);
        assert!((v.coefficient(Basis::CscCot { a }) - csccot).abs() < 1e-13);
        assert!((e - a2 / 4.0 * (alpha + beta + 1.0).powi(2)).abs() < 1e-13);
    }

    #[test]
    fn weighted_jacobi_factor_part_has_same_potential() {
        let (alpha, beta, a) = (2.5, 1.25, 0.9);
        let family = PolynomialFamily::Jacobi { alpha, beta };
        let t = Transformation::cosine(a).unwrap();
        let std = build_factor_f(&hypergeometric_data(family, 0).unwrap(), &t).unwrap();
        let alt = build_factor_f(
            &hypergeometric_data_variant(family, JacobiWeighting::Weighted, 0).unwrap(),
            &t,
        )
        .unwrap();
        let (v1, _) = decompose_factor_part(&std).unwrap();
        let (v2, e2) = decompose_factor_part(&alt).unwrap();
        assert!(v1.approx_eq(&v2, 1e-13));
        assert!((e2 - a * a / 4.0 * (alpha + beta - 1.0).powi(2)).abs() < 1e-13);
    }

    #[test]
    fn equal_parameters_drop_csc_cot() {
        let t = Transformation::cosine(1.0).unwrap();
        for alpha in [0.75, 1.0, 3.3] {
            let data =
                hypergeometric_data(PolynomialFamily::Jacobi { alpha, beta: alpha }, 0).unwrap();
            let (v, _) = decompose_factor_part(&build_factor_f(&data, &t).unwrap()).unwrap();
            assert_eq!(v.coefficient(Basis::CscCot { a: 1.0 }), 0.0);
            assert_eq!(v.terms().len(), 1);
        }
    }

    #[test]
    fn laguerre_factor_part() {
        let a = 1.4;
        let data = hypergeometric_data(PolynomialFamily::Laguerre { alpha: 0.5 }, 0).unwrap();
        let f = build_factor_f(&data, &Transformation::quadratic(a).unwrap()).unwrap();
        let (v, e) = decompose_factor_part(&f).unwrap();
        assert!((v.coefficient(Basis::RSquared) - a.powi(4) / 16.0).abs() < 1e-14);
        assert!((v.coefficient(Basis::InvR2) + 0.25).abs() < 1e-15);
        assert!((e + a * a / 2.0).abs() < 1e-14);
    }

    #[test]
    fn hermite_factor_part() {
        let data = hypergeometric_data(PolynomialFamily::Hermite, 1).unwrap();
        let f = build_factor_f(&data, &Transformation::sqrt(2.0).unwrap()).unwrap();
        let (v, e) = decompose_factor_part(&f).unwrap();
        assert_eq!(v.terms(), &[(-3.0 / 16.0, Basis::InvR2)]);
        assert_eq!(e, 0.0);
    }

    #[test]
    fn mismatched_transformation_fails() {
        let data = hypergeometric_data(PolynomialFamily::Hermite, 1).unwrap();
        let t = Transformation::cosine(1.0).unwrap();
        assert!(matches!(
            decompose_polynomial_part(&data, &t),
            Err(Error::DecompositionFailure(_))
        ));
    }

    #[test]
    fn sigma_tilde_outside_grammar_fails() {
        let mut data = hypergeometric_data(PolynomialFamily::Hermite, 1).unwrap();
        data.sigma_tilde = Polynomial::quadratic(3.0, 0.5, -1.0);
        let t = Transformation::sqrt(1.0).unwrap();
        assert!(matches!(
            decompose_polynomial_part(&data, &t),
            Err(Error::DecompositionFailure(_))
        ));
    }

    #[test]
    fn scaled_factor_gives_same_split() {
        let data = hypergeometric_data(
            PolynomialFamily::Jacobi {
                alpha: 1.5,
                beta: 0.8,
            },
            0,
        )
        .unwrap();
        let f = build_factor_f(&data, &Transformation::cosine(1.1).unwrap()).unwrap();
        let g = f.clone().with_scale(1.0 / 1.1f64.sqrt()).unwrap();
        assert_eq!(
            decompose_factor_part(&f).unwrap(),
            decompose_factor_part(&g).unwrap()
        );
    }
}
