//! Economy-wide sums, the Cobb-Douglas TFP residual, regime-break detection
//! along the output ordering, and the per-worker curve.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leontief::{classify_regime, eval_leontief, Regime, DEFAULT_REGIME_TOL};
use crate::scenarios::Scenario;

/// Component-wise totals of a scenario at one moment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateRecord {
    pub y: f64,
    pub k: f64,
    pub l: f64,
    /// Time index the totals refer to.
    pub moment: i64,
}

/// TFP residual of an aggregate under `Y = Z * K^alpha * L^(1-alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TfpRecord {
    pub alpha: f64,
    pub z: f64,
    pub source: AggregateRecord,
}

/// Difference in the residual between two aggregates computed at one alpha.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TfpDecomposition {
    /// `variant.z - base.z`.
    pub d_z_total: f64,
    /// True when the two aggregates share (K, L), so the whole difference is
    /// an output effect.
    pub shared_factors: bool,
}

/// One switch of the binding factor along the output ordering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BreakPoint {
    /// 1-based position in the output ordering where the new regime starts.
    pub index: usize,
    pub before: Regime,
    pub after: Regime,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakReport {
    pub breaks: Vec<BreakPoint>,
    /// Confirms the input passed the output-ordering check.
    pub ordered: bool,
}

/// One establishment's (k/l, y/l) point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub k_per_l: f64,
    pub y_per_l: f64,
}

/// Per-establishment (capital per worker, output per worker) pairs, in the
/// order of the scenario handed in (callers pass output-ordered scenarios).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerWorkerCurve {
    pub points: Vec<CurvePoint>,
}

/// Sums output, capital, and labor over the scenario.
pub fn aggregate(sc: &Scenario, moment: i64) -> Result<AggregateRecord> {
    if sc.is_empty() {
        return Err(Error::domain(format!(
            "scenario {}: cannot aggregate an empty scenario",
            sc.label
        )));
    }
    let mut y = 0.0;
    let mut k = 0.0;
    let mut l = 0.0;
    for est in &sc.establishments {
        y += eval_leontief(est)?.y;
        k += est.k;
        l += est.l;
    }
    Ok(AggregateRecord { y, k, l, moment })
}

/// Computes the residual `Z = Y / (K^alpha * L^(1-alpha))`.
pub fn tfp(agg: &AggregateRecord, alpha: f64) -> Result<TfpRecord> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie strictly inside (0, 1), got {alpha}"
        )));
    }
    for (name, v) in [("Y", agg.y), ("K", agg.k), ("L", agg.l)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::domain(format!(
                "aggregate {name} must be positive and finite, got {v}"
            )));
        }
    }
    let z = agg.y / (agg.k.powf(alpha) * agg.l.powf(1.0 - alpha));
    Ok(TfpRecord { alpha, z, source: *agg })
}

fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Splits the residual difference between two aggregates computed at the
/// same alpha, flagging whether they share the same factor totals.
pub fn decompose_tfp(base: &TfpRecord, variant: &TfpRecord) -> Result<TfpDecomposition> {
    if base.alpha != variant.alpha {
        return Err(Error::domain(format!(
            "decompose_tfp requires a common alpha, got {} and {}",
            base.alpha, variant.alpha
        )));
    }
    Ok(TfpDecomposition {
        d_z_total: variant.z - base.z,
        shared_factors: rel_eq(base.source.k, variant.source.k, 1e-12)
            && rel_eq(base.source.l, variant.source.l, 1e-12),
    })
}

/// Finds every position along the output ordering where the binding factor
/// changes, using the default regime tolerance.
///
/// The input must already be sorted ascending by output; unsorted input is
/// rejected rather than silently re-sorted.
pub fn detect_breaks(sc: &Scenario) -> Result<BreakReport> {
    detect_breaks_with_tol(sc, DEFAULT_REGIME_TOL)
}

pub fn detect_breaks_with_tol(sc: &Scenario, tol: f64) -> Result<BreakReport> {
    let outputs: Vec<f64> = sc
        .establishments
        .iter()
        .map(|e| eval_leontief(e).map(|o| o.y))
        .collect::<Result<_>>()?;
    for (i, w) in outputs.windows(2).enumerate() {
        if w[1] < w[0] {
            return Err(Error::ordering(format!(
                "scenario {}: establishments are not output-ordered at position {} \
                 (y {} follows y {})",
                sc.label,
                i + 2,
                w[1],
                w[0]
            )));
        }
    }
    let regimes: Vec<Regime> = sc
        .establishments
        .iter()
        .map(|e| classify_regime(e, tol))
        .collect::<Result<_>>()?;
    let breaks = regimes
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] != w[1])
        .map(|(i, w)| BreakPoint { index: i + 2, before: w[0], after: w[1] })
        .collect();
    Ok(BreakReport { breaks, ordered: true })
}

/// Builds the (k/l, y/l) curve, one point per establishment, in input order.
pub fn per_worker_curve(sc: &Scenario) -> Result<PerWorkerCurve> {
    let points = sc
        .establishments
        .iter()
        .map(|e| {
            eval_leontief(e).map(|out| CurvePoint {
                k_per_l: e.k / e.l,
                y_per_l: out.y / e.l,
            })
        })
        .collect::<Result<_>>()?;
    Ok(PerWorkerCurve { points })
}
