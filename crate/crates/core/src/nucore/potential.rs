use std::fmt;

use crate::error::{Error, Result};

/// Basis functions a potential may be built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Basis {
    Const,
    InvR,
    InvR2,
    RSquared,
    /// `csc²(a r)`
    CscSq {
        a: f64,
    },
    /// `csc(a r)·cot(a r)`
    CscCot {
        a: f64,
    },
}

impl Basis {
    pub fn eval(&self, r: f64) -> f64 {
        match *self {
            Self::Const => 1.0,
            Self::InvR => 1.0 / r,
            Self::InvR2 => 1.0 / (r * r),
            Self::RSquared => r * r,
            Self::CscSq { a } => {
                let sin = (a * r).sin();
                1.0 / (sin * sin)
            }
            Self::CscCot { a } => {
                let (sin, cos) = (a * r).sin_cos();
                cos / (sin * sin)
            }
        }
    }

    fn order(&self) -> u8 {
        match self {
            Self::Const => 0,
            Self::InvR => 1,
            Self::InvR2 => 2,
            Self::RSquared => 3,
            Self::CscSq { .. } => 4,
            Self::CscCot { .. } => 5,
        }
    }

    /// Product of two basis functions, when it stays inside the basis.
    fn product(&self, other: &Self) -> Option<Self> {
        use Basis::*;
        match (*self, *other) {
            (Const, b) | (b, Const) => Some(b),
            (InvR, InvR) => Some(InvR2),
            (InvR2, RSquared) | (RSquared, InvR2) => Some(Const),
            _ => None,
        }
    }

    fn label(&self) -> String {
        match self {
            Self::Const => String::new(),
            Self::InvR => "/r".into(),
            Self::InvR2 => "/r^2".into(),
            Self::RSquared => "*r^2".into(),
            Self::CscSq { a } => format!("*csc^2({a} r)"),
            Self::CscCot { a } => format!("*csc({a} r)cot({a} r)"),
        }
    }
}

/// A real potential `V(r) = Σ cᵢ bᵢ(r)` on an open interval.
///
/// Terms are collected on insertion: each basis function appears at most once
/// and terms whose coefficient is exactly zero are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialExpr {
    terms: Vec<(f64, Basis)>,
    domain: (f64, f64),
}

impl PotentialExpr {
    pub fn new(domain: (f64, f64)) -> Self {
        Self {
            terms: Vec::new(),
            domain,
        }
    }

    pub fn from_terms(
        domain: (f64, f64),
        terms: impl IntoIterator<Item = (f64, Basis)>,
    ) -> Result<Self> {
        let mut p = Self::new(domain);
        for (c, b) in terms {
            p.add_term(c, b)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, coefficient: f64, basis: Basis) -> Result<()> {
        match basis {
            Basis::CscSq { a } | Basis::CscCot { a } if !(a.is_finite() && a > 0.0) => {
                return Err(Error::ParameterDomain {
                    name: "a",
                    value: a,
                    requirement: "basis scale must be finite and > 0",
                })
            }
            _ => {}
        }
        if let Some(slot) = self.terms.iter_mut().find(|(_, b)| *b == basis) {
            slot.0 += coefficient;
        } else {
            self.terms.push((coefficient, basis));
        }
        self.terms.retain(|(c, _)| *c != 0.0);
        self.terms.sort_by_key(|t| t.1.order());
        Ok(())
    }

    pub fn terms(&self) -> &[(f64, Basis)] {
        &self.terms
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, basis: Basis) -> f64 {
        self.terms
            .iter()
            .find(|(_, b)| *b == basis)
            .map_or(0.0, |(c, _)| *c)
    }

    pub fn constant_term(&self) -> f64 {
        self.coefficient(Basis::Const)
    }

    pub fn without_constant(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|(_, b)| *b != Basis::Const)
                .collect(),
            domain: self.domain,
        }
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms.iter().map(|(c, b)| c * b.eval(r)).sum()
    }

    /// `Σ |cᵢ bᵢ(r)|`, a magnitude scale for relative comparisons.
    pub fn eval_abs(&self, r: f64) -> f64 {
        self.terms.iter().map(|(c, b)| (c * b.eval(r)).abs()).sum()
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for &(c, b) in &other.terms {
            out.add_term(c, b)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, k: f64) -> Self {
        let mut out = Self::new(self.domain);
        for &(c, b) in &self.terms {
            // scaling cannot introduce duplicates
            out.terms.push((c * k, b));
        }
        out.terms.retain(|(c, _)| *c != 0.0);
        out
    }

    /// Product of two potentials, failing when a cross term leaves the basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::new(self.domain);
        for &(c1, b1) in &self.terms {
            for &(c2, b2) in &other.terms {
                let b = b1.product(&b2).ok_or_else(|| {
                    Error::DecompositionFailure(format!(
                        "product of {} and {} is outside the potential basis",
                        Basis::describe(b1),
                        Basis::describe(b2)
                    ))
                })?;
                out.add_term(c1 * c2, b)?;
            }
        }
        Ok(out)
    }

    /// Term-wise comparison with relative tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let mut bases: Vec<Basis> = self.terms.iter().map(|t| t.1).collect();
        for &(_, b) in &other.terms {
            if !bases.contains(&b) {
                bases.push(b);
            }
        }
        bases.iter().all(|&b| {
            let (x, y) = (self.coefficient(b), other.coefficient(b));
            (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
        })
    }
}

impl Basis {
    fn describe(b: Basis) -> String {
        match b {
            Basis::Const => "1".into(),
            other => other.label().trim_start_matches(['*', '/']).to_string(),
        }
    }
}

impl fmt::Display for PotentialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, b)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0.0 { '-' } else { '+' })?;
                write!(f, "{}{}", c.abs(), b.label())?;
            } else {
                write!(f, "{}{}", c, b.label())?;
            }
        }
        Ok(())
    }
}
