//! Establishment data model and Leontief (fixed-proportions) production.
//!
//! An establishment turns labor `l` and capital `k` into output through
//! `y = min(l/a, k/b)` with technical coefficients `a, b > 0`. The inverses
//! `1/a` and `1/b` are the average productivities of labor and capital. At any
//! point exactly one factor binds (or both, when the two ratios coincide),
//! which this module exposes as a [`Regime`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default relative tolerance for deciding that the two factor ratios tie.
///
/// Exact float equality is fragile, so "balanced" means the ratios agree to
/// within this relative margin unless a caller supplies its own.
pub const DEFAULT_REGIME_TOL: f64 = 1e-9;

/// One production unit with fixed-proportions technology.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Establishment {
    /// 1-based establishment index.
    pub id: u32,
    /// Labor technical coefficient (labor units per output unit).
    pub a: f64,
    /// Capital technical coefficient (capital units per output unit).
    pub b: f64,
    /// Capital quantity.
    pub k: f64,
    /// Labor quantity.
    pub l: f64,
}

impl Establishment {
    /// Builds a validated establishment. All four quantities must be
    /// strictly positive and finite.
    pub fn new(id: u32, a: f64, b: f64, k: f64, l: f64) -> Result<Self> {
        let est = Establishment { id, a, b, k, l };
        est.validate()?;
        Ok(est)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b), ("k", self.k), ("l", self.l)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(format!(
                    "establishment {}: field {name} must be positive and finite, got {v}",
                    self.id
                )));
            }
        }
        Ok(())
    }

    /// Output attainable from labor alone: `l/a`.
    pub fn labor_ratio(&self) -> f64 {
        self.l / self.a
    }

    /// Output attainable from capital alone: `k/b`.
    pub fn capital_ratio(&self) -> f64 {
        self.k / self.b
    }
}

/// Which factor attains the minimum in the production function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// `l/a < k/b`: labor binds, capital has slack.
    LaborLimited,
    /// `k/b < l/a`: capital binds, labor has slack.
    CapitalLimited,
    /// The two ratios agree within tolerance.
    Balanced,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::LaborLimited => "LaborLimited",
            Regime::CapitalLimited => "CapitalLimited",
            Regime::Balanced => "Balanced",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of evaluating the production function at one establishment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// Output `min(l/a, k/b)`.
    pub y: f64,
    /// Binding-factor classification at the tolerance used for evaluation.
    pub regime: Regime,
    /// Raw gap between the two ratios, `|l/a - k/b|`. Zero exactly when the
    /// ratios tie; classification may still report `Balanced` for a small
    /// positive slack when a nonzero tolerance is in use.
    pub slack: f64,
}

/// Evaluates the production function with the default regime tolerance.
pub fn eval_leontief(est: &Establishment) -> Result<OutputRecord> {
    eval_leontief_with_tol(est, DEFAULT_REGIME_TOL)
}

/// Evaluates the production function, classifying the regime at `tol`.
pub fn eval_leontief_with_tol(est: &Establishment, tol: f64) -> Result<OutputRecord> {
    let regime = classify_regime(est, tol)?;
    let la = est.labor_ratio();
    let kb = est.capital_ratio();
    Ok(OutputRecord {
        y: la.min(kb),
        regime,
        slack: (la - kb).abs(),
    })
}

/// Classifies which factor binds, treating ratios within a relative
/// tolerance of each other as balanced.
///
/// Labor is binding when `l/a < (k/b)(1 - tol)`, capital when the symmetric
/// condition holds; anything else is `Balanced`.
pub fn classify_regime(est: &Establishment, tol: f64) -> Result<Regime> {
    est.validate()?;
    if !(tol >= 0.0) || !tol.is_finite() {
        return Err(Error::domain(format!(
            "regime tolerance must be finite and >= 0, got {tol}"
        )));
    }
    let la = est.labor_ratio();
    let kb = est.capital_ratio();
    if la < kb * (1.0 - tol) {
        Ok(Regime::LaborLimited)
    } else if kb < la * (1.0 - tol) {
        Ok(Regime::CapitalLimited)
    } else {
        Ok(Regime::Balanced)
    }
}
