use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::EvalParams;

/// Kernel parameter `x`, zero budget and length of the companion `n`-sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    pub x: f64,
    pub k_zeros: usize,
    pub n_terms: usize,
}

impl Default for KernelParams {
    // 3.14 is the customary kernel parameter, not an approximation of pi
    #[allow(clippy::approx_constant)]
    fn default() -> Self {
        Self {
            x: 3.14,
            k_zeros: 10_000,
            n_terms: 100_000,
        }
    }
}

impl KernelParams {
    pub fn new(x: f64, k_zeros: usize, n_terms: usize) -> Result<Self> {
        let p = Self {
            x,
            k_zeros,
            n_terms,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(3.0..PI).contains(&self.x) {
            return Err(Error::InvalidParams(format!(
                "x = {} must lie in [3, pi)",
                self.x
            )));
        }
        if self.k_zeros == 0 {
            return Err(Error::InvalidParams("k_zeros must be at least 1".into()));
        }
        if self.n_terms < 8 {
            return Err(Error::InvalidParams(format!(
                "n_terms = {} must be at least 8",
                self.n_terms
            )));
        }
        Ok(())
    }

    pub fn with_x(mut self, x: f64) -> Self {
        self.x = x;
        self
    }

    pub fn with_k_zeros(mut self, k: usize) -> Self {
        self.k_zeros = k;
        self
    }

    pub fn with_n_terms(mut self, n: usize) -> Self {
        self.n_terms = n;
        self
    }

    /// `cot(x/2)`, the rescaling factor of every reconstruction.
    pub fn cot_half(&self) -> f64 {
        1.0 / (0.5 * self.x).tan()
    }
}

/// A report side: real numbers serialize as plain JSON numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl Scalar {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Scalar::Real(v) => Complex64::new(v, 0.0),
            Scalar::Complex { re, im } => Complex64::new(re, im),
        }
    }

    pub fn re(self) -> f64 {
        self.to_complex().re
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Real(v)
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Complex { re: z.re, im: z.im }
    }
}

/// Parameters a report was produced with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReportParams {
    Kernel(KernelParams),
    Eval(EvalParams),
}

/// One identity evaluated at one point: both sides and their distance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub residual: f64,
    pub params: ReportParams,
    pub notes: String,
    /// Named intermediate quantities (tails, decompositions, sub-checks).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
}

impl IdentityReport {
    /// Builds a report; the residual is always `|lhs - rhs|`.
    pub fn new(
        name: impl Into<String>,
        lhs: impl Into<Scalar>,
        rhs: impl Into<Scalar>,
        params: ReportParams,
    ) -> Self {
        let lhs = lhs.into();
        let rhs = rhs.into();
        Self {
            name: name.into(),
            residual: (lhs.to_complex() - rhs.to_complex()).norm(),
            lhs,
            rhs,
            params,
            notes: String::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }
}

/// A sampled curve `t -> value` next to the ground truth on the same grid.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SeriesGrid {
    pub t_values: Vec<f64>,
    pub values: Vec<f64>,
    pub reference: Vec<f64>,
}

impl SeriesGrid {
    pub fn len(&self) -> usize {
        self.t_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t_values.is_empty()
    }

    pub fn push(&mut self, t: f64, value: f64, reference: f64) {
        debug_assert!(self.t_values.last().is_none_or(|&p| p < t));
        self.t_values.push(t);
        self.values.push(value);
        self.reference.push(reference);
    }

    /// Rows `(t, value, reference)`.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.t_values
            .iter()
            .zip(&self.values)
            .zip(&self.reference)
            .map(|((&t, &v), &r)| (t, v, r))
    }
}

/// Euler's constant, Catalan's constant and the constant `A` of the Cramér
/// expansion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub euler_c: f64,
    pub catalan_g: f64,
    pub constant_a: f64,
}
