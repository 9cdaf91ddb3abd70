//! Reference evaluation through the Rodrigues formula
//! `y_n = B_n / ρ · dⁿ/dsⁿ [σⁿ ρ]`.
//!
//! Every finite `f64` is a dyadic rational, so parameters and the evaluation
//! point are lifted to exact rationals and the n-th derivative is expanded by
//! the Leibniz rule (Jacobi, Laguerre) or by repeated differentiation of
//! `p_j(s) e^{-s²}` (Hermite). The only rounding is the final conversion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::family::PolynomialFamily;
use crate::error::{Error, Result};

/// Largest degree the reference accepts.
pub const RODRIGUES_MAX_DEGREE: usize = 12;

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `p (p-1) ... (p-k+1)`.
fn falling(p: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, j| acc * (p - int(j as i64)))
}

fn binomial(n: usize, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc = acc * int((n - j) as i64) / int((j + 1) as i64);
    }
    acc
}

fn factorial(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, j| acc * int(j as i64))
}

fn pow(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

/// Evaluates the family polynomial via the Rodrigues formula, normalized to
/// agree with [`super::eval_poly`].
pub fn rodrigues_reference(family: PolynomialFamily, n: usize, s: f64) -> Result<f64> {
    family.validate()?;
    if n > RODRIGUES_MAX_DEGREE {
        return Err(Error::OracleRange {
            n,
            max: RODRIGUES_MAX_DEGREE,
        });
    }
    if !s.is_finite() {
        return Err(Error::ParameterDomain {
            name: "s",
            value: s,
            requirement: "must be finite",
        });
    }
    let x = rational(s);
    let value = match family {
        PolynomialFamily::Jacobi { alpha, beta } => {
            // σⁿρ = (1-s)^(n+α) (1+s)^(n+β); dividing the k-th Leibniz term by ρ
            // leaves (1-s)^(n-k) (1+s)^k.
            let pa = int(n as i64) + rational(alpha);
            let pb = int(n as i64) + rational(beta);
            let one_minus = int(1) - &x;
            let one_plus = int(1) + &x;
            let mut sum = BigRational::zero();
            for k in 0..=n {
                let sign = if k % 2 == 1 { -int(1) } else { int(1) };
                let term = binomial(n, k)
                    * sign
                    * falling(&pa, k)
                    * falling(&pb, n - k)
                    * pow(&one_minus, n - k)
                    * pow(&one_plus, k);
                sum += term;
            }
            // B_n = (-1)^n / (2^n n!)
            let sign = if n % 2 == 1 { -int(1) } else { int(1) };
            sum * sign / (pow(&int(2), n) * factorial(n))
        }
        PolynomialFamily::Laguerre { alpha } => {
            // σⁿρ = s^(n+α) e^(-s); B_n = 1/n!
            let pa = int(n as i64) + rational(alpha);
            let mut sum = BigRational::zero();
            for k in 0..=n {
                let sign = if (n - k) % 2 == 1 { -int(1) } else { int(1) };
                sum += binomial(n, k) * falling(&pa, k) * pow(&x, n - k) * sign;
            }
            sum / factorial(n)
        }
        PolynomialFamily::Hermite => {
            // dʲ/dsʲ e^(-s²) = p_j(s) e^(-s²) with p_{j+1} = p_j' - 2s p_j; B_n = (-1)^n
            let mut p: Vec<BigRational> = vec![int(1)];
            for _ in 0..n {
                let mut next = vec![BigRational::zero(); p.len() + 1];
                for (k, c) in p.iter().enumerate() {
                    if k > 0 {
                        next[k - 1] += c * int(k as i64);
                    }
                    next[k + 1] -= c * int(2);
                }
                p = next;
            }
            let value = p
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * &x + c);
            if n % 2 == 1 {
                -value
            } else {
                value
            }
        }
    };
    Ok(value.to_f64().unwrap_or(f64::NAN))
}
