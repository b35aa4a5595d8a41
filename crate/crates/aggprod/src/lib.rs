//! Micro-to-macro production aggregation toolkit.
//!
//! Generates ensembles of fixed-proportions (Leontief) establishments,
//! aggregates them, measures the Cobb-Douglas total-factor-productivity
//! residual of the aggregate, detects binding-regime breaks along the
//! output ordering, fits functional forms to aggregate and per-worker data,
//! and simulates expectation-driven factor adjustment toward factor-price
//! parity.

pub mod aggregate;
pub mod commands;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod fit;
pub mod leontief;
pub mod output;
pub mod scenarios;

pub use error::{Error, Result};
pub use leontief::{
    classify_regime, eval_leontief, eval_leontief_with_tol, Establishment, OutputRecord, Regime,
    DEFAULT_REGIME_TOL,
};
pub use scenarios::{
    generate, generate_distribution, order_by_output, DistributionFamily, DistributionSpec,
    Scenario, ScenarioKind, ScenarioSpec,
};
