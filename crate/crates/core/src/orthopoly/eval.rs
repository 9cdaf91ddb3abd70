//! Pointwise evaluation by three-term recurrence.
//!
//! Values are produced by running the recurrence at the evaluation point,
//! which stays accurate for the degrees the CLI accepts (n ≤ 64). The same
//! recurrence run on coefficient vectors gives the monomial expansion in
//! [`poly_coefficients`], useful for low degrees and for cross-checks.

use super::family::PolynomialFamily;
use crate::error::{Error, Result};

/// Evaluates `P_n^(α,β)(s)`, `L_n^α(s)` or `H_n(s)`.
pub fn eval_poly(family: PolynomialFamily, n: usize, s: f64) -> Result<f64> {
    family.validate()?;
    Ok(eval_unchecked(family, n, s))
}

/// First or second derivative with respect to `s`.
pub fn eval_poly_derivative(family: PolynomialFamily, n: usize, s: f64, order: u32) -> Result<f64> {
    if !(1..=2).contains(&order) {
        return Err(Error::UnsupportedOrder(order));
    }
    family.validate()?;
    Ok(derivative_unchecked(family, n, s, order))
}

/// Returns `(y, y', y'')` at `s`.
pub(crate) fn eval_with_derivatives(family: PolynomialFamily, n: usize, s: f64) -> (f64, f64, f64) {
    (
        eval_unchecked(family, n, s),
        derivative_unchecked(family, n, s, 1),
        derivative_unchecked(family, n, s, 2),
    )
}

fn derivative_unchecked(family: PolynomialFamily, n: usize, s: f64, order: u32) -> f64 {
    let k = order as usize;
    if n < k {
        return 0.0;
    }
    // d/ds P_n^(α,β) = (n+α+β+1)/2 · P_{n-1}^(α+1,β+1)
    // d/ds L_n^α = -L_{n-1}^(α+1)
    // d/ds H_n = 2n · H_{n-1}
    match family {
        PolynomialFamily::Jacobi { alpha, beta } => {
            let mut factor = 1.0;
            for j in 0..k {
                factor *= (n as f64 + alpha + beta + 1.0 + j as f64) / 2.0;
            }
            let shifted = PolynomialFamily::Jacobi {
                alpha: alpha + k as f64,
                beta: beta + k as f64,
            };
            factor * eval_unchecked(shifted, n - k, s)
        }
        PolynomialFamily::Laguerre { alpha } => {
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            let shifted = PolynomialFamily::Laguerre {
                alpha: alpha + k as f64,
            };
            sign * eval_unchecked(shifted, n - k, s)
        }
        PolynomialFamily::Hermite => {
            let mut factor = 1.0;
            for j in 0..k {
                factor *= 2.0 * (n - j) as f64;
            }
            factor * eval_unchecked(PolynomialFamily::Hermite, n - k, s)
        }
    }
}

/// Recurrence coefficients `(a, b, c)` so that
/// `y_n = (a + b·s)·y_{n-1} - c·y_{n-2}` for `n ≥ 2`.
fn recurrence(family: PolynomialFamily, n: usize) -> (f64, f64, f64) {
    let nf = n as f64;
    match family {
        PolynomialFamily::Jacobi { alpha, beta } => {
            let ab = alpha + beta;
            let two_n_ab = 2.0 * nf + ab;
            let denom = 2.0 * nf * (nf + ab) * (two_n_ab - 2.0);
            let a = (two_n_ab - 1.0) * (alpha * alpha - beta * beta) / denom;
            let b = (two_n_ab - 1.0) * two_n_ab * (two_n_ab - 2.0) / denom;
            let c = 2.0 * (nf + alpha - 1.0) * (nf + beta - 1.0) * two_n_ab / denom;
            (a, b, c)
        }
        PolynomialFamily::Laguerre { alpha } => (
            (2.0 * nf - 1.0 + alpha) / nf,
            -1.0 / nf,
            (nf - 1.0 + alpha) / nf,
        ),
        PolynomialFamily::Hermite => (0.0, 2.0, 2.0 * (nf - 1.0)),
    }
}

/// `(y_0, y_1)` as linear polynomials `(c0, c1)`.
fn seed(family: PolynomialFamily) -> (f64, f64) {
    match family {
        PolynomialFamily::Jacobi { alpha, beta } => {
            ((alpha - beta) / 2.0, (alpha + beta + 2.0) / 2.0)
        }
        PolynomialFamily::Laguerre { alpha } => (1.0 + alpha, -1.0),
        PolynomialFamily::Hermite => (0.0, 2.0),
    }
}

pub(crate) fn eval_unchecked(family: PolynomialFamily, n: usize, s: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (c0, c1) = seed(family);
    let mut prev = 1.0;
    let mut curr = c0 + c1 * s;
    for k in 2..=n {
        let (a, b, c) = recurrence(family, k);
        let next = (a + b * s) * curr - c * prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Monomial coefficients (ascending) generated by the same recurrence.
///
/// Cancellation in the monomial basis grows quickly with degree, so this is
/// meant for low-degree work and consistency checks rather than evaluation.
pub fn poly_coefficients(family: PolynomialFamily, n: usize) -> Result<Vec<f64>> {
    family.validate()?;
    let mut prev = vec![1.0];
    if n == 0 {
        return Ok(prev);
    }
    let (c0, c1) = seed(family);
    let mut curr = vec![c0, c1];
    for k in 2..=n {
        let (a, b, c) = recurrence(family, k);
        let mut next = vec![0.0; k + 1];
        for (j, &v) in curr.iter().enumerate() {
            next[j] += a * v;
            next[j + 1] += b * v;
        }
        for (j, &v) in prev.iter().enumerate() {
            next[j] -= c * v;
        }
        prev = curr;
        curr = next;
    }
    Ok(curr)
}
