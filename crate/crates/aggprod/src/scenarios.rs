//! Ensemble generators.
//!
//! The four labeled kinds differ in which ingredient varies across
//! establishments:
//!
//! * kind I   — one shared coefficient pair, capital/labor intensities vary;
//! * kind II  — coefficients vary, every establishment shares one intensity;
//! * kind III — both vary, with geometrically decaying coefficients and a
//!   single engineered switch of the binding factor at `break_index`;
//! * kind IV  — kind III's intensities with faster coefficient decay.
//!
//! A fifth kind draws average productivities from a Pareto or Weibull
//! distribution through inverse-CDF sampling of a seeded ChaCha8 stream, so
//! regeneration from the same spec is bit-identical on any platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leontief::{eval_leontief, Establishment};

/// Scenario family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScenarioKind {
    I,
    II,
    III,
    IV,
    Distribution,
}

impl ScenarioKind {
    pub fn label(&self) -> &'static str {
        match self {
            ScenarioKind::I => "I",
            ScenarioKind::II => "II",
            ScenarioKind::III => "III",
            ScenarioKind::IV => "IV",
            ScenarioKind::Distribution => "distribution",
        }
    }
}

/// Distribution family for sampled average productivities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistributionFamily {
    Pareto,
    Weibull,
}

/// Parameters for `ScenarioKind::Distribution`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistributionSpec {
    pub family: DistributionFamily,
    pub shape: f64,
    pub scale: f64,
    /// Labor assigned to each establishment.
    #[serde(default = "default_quantity_l")]
    pub quantity_l: f64,
    /// Capital per unit of labor assigned to each establishment.
    #[serde(default = "default_intensity")]
    pub intensity: f64,
}

fn default_quantity_l() -> f64 {
    100.0
}

fn default_intensity() -> f64 {
    0.65
}

/// Optional knobs for the deterministic schedules. Every field defaults per
/// kind; set only what you want to move.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleParams {
    /// Proportional capital slack kept above the labor requirement in kinds
    /// I and II so labor stays the binding factor (default 0.05).
    pub slack_margin: Option<f64>,
    /// Intensity ramp endpoints for kind I (defaults 0.45 and 0.90).
    pub intensity_lo: Option<f64>,
    pub intensity_hi: Option<f64>,
    /// Labor-productivity ramp endpoints (1/a) for kind II
    /// (defaults 0.9 and 1.3).
    pub productivity_lo: Option<f64>,
    pub productivity_hi: Option<f64>,
    /// Kind III/IV base labor coefficient a_1 (default 1.77).
    pub base_a: Option<f64>,
    /// Kind III/IV labor-coefficient decay per establishment
    /// (defaults 0.97 for III, 0.965 for IV).
    pub decay_a: Option<f64>,
    /// Kind III/IV capital-coefficient decay per establishment
    /// (defaults 0.998 for III, 0.9975 for IV).
    pub decay_b: Option<f64>,
    /// Kind III/IV per-establishment growth of the capital/labor intensity
    /// (default 1.0185 for both, so the two kinds share intensities).
    pub intensity_growth: Option<f64>,
}

/// Full description of one ensemble; generation is a pure function of this.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    /// Establishment count.
    #[serde(default = "default_n")]
    pub n: usize,
    /// RNG seed (only the distribution kind draws randomness).
    #[serde(default)]
    pub seed: u64,
    /// Optional label override; defaults to the kind's name.
    #[serde(default)]
    pub label: Option<String>,
    /// Aggregate capital target; quantities are scaled to hit it.
    #[serde(default)]
    pub target_k: Option<f64>,
    /// Aggregate labor target.
    #[serde(default)]
    pub target_l: Option<f64>,
    /// Output-ordered position at which the binding factor switches
    /// (kind III only).
    #[serde(default)]
    pub break_index: Option<usize>,
    #[serde(default)]
    pub schedule: ScheduleParams,
    /// Sampling parameters, required for the distribution kind.
    #[serde(default)]
    pub distribution: Option<DistributionSpec>,
}

fn default_n() -> usize {
    50
}

/// Aggregate (K, L) the deterministic kinds target when the spec leaves the
/// targets unset. Kind II pairs a round capital stock with a round labor
/// force; the other kinds share one pair.
pub const DEFAULT_TARGETS_I_III_IV: (f64, f64) = (3257.98, 4879.44);
pub const DEFAULT_TARGETS_II: (f64, f64) = (3250.0, 5000.0);

/// Default break position for kind III.
pub const DEFAULT_BREAK_INDEX: usize = 18;

impl ScenarioSpec {
    /// Minimal spec for a kind with all defaults.
    pub fn of_kind(kind: ScenarioKind) -> Self {
        ScenarioSpec {
            kind,
            n: default_n(),
            seed: 0,
            label: None,
            target_k: None,
            target_l: None,
            break_index: None,
            schedule: ScheduleParams::default(),
            distribution: None,
        }
    }

    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.kind.label().to_string())
    }

    /// Resolved aggregate targets.
    pub fn targets(&self) -> (f64, f64) {
        let (dk, dl) = match self.kind {
            ScenarioKind::II => DEFAULT_TARGETS_II,
            _ => DEFAULT_TARGETS_I_III_IV,
        };
        (self.target_k.unwrap_or(dk), self.target_l.unwrap_or(dl))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::spec(format!(
                "scenario {}: n must be >= 2, got {}",
                self.label(),
                self.n
            )));
        }
        if let Some(m) = self.break_index {
            if self.kind != ScenarioKind::III {
                return Err(Error::spec(format!(
                    "scenario {}: break_index only applies to kind III",
                    self.label()
                )));
            }
            if m < 2 || m > self.n - 1 {
                return Err(Error::spec(format!(
                    "scenario {}: break_index must lie in [2, n-1] = [2, {}], got {m}",
                    self.label(),
                    self.n - 1
                )));
            }
        }
        match self.kind {
            ScenarioKind::Distribution => {
                let d = self.distribution.as_ref().ok_or_else(|| {
                    Error::spec(format!(
                        "scenario {}: distribution parameters are required for the distribution kind",
                        self.label()
                    ))
                })?;
                if !(d.shape > 0.0) || !(d.scale > 0.0) {
                    return Err(Error::spec(format!(
                        "scenario {}: distribution shape and scale must be > 0 (shape={}, scale={})",
                        self.label(),
                        d.shape,
                        d.scale
                    )));
                }
                if !(d.quantity_l > 0.0) || !(d.intensity > 0.0) {
                    return Err(Error::spec(format!(
                        "scenario {}: quantity_l and intensity must be > 0",
                        self.label()
                    )));
                }
            }
            _ => {
                if self.distribution.is_some() {
                    return Err(Error::spec(format!(
                        "scenario {}: distribution parameters only apply to the distribution kind",
                        self.label()
                    )));
                }
            }
        }
        let (tk, tl) = self.targets();
        if !(tk > 0.0) || !(tl > 0.0) {
            return Err(Error::spec(format!(
                "scenario {}: aggregate targets must be > 0 (K={tk}, L={tl})",
                self.label()
            )));
        }
        Ok(())
    }
}

/// A labeled, generated ensemble together with the spec that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub label: String,
    pub spec: ScenarioSpec,
    pub establishments: Vec<Establishment>,
}

impl Scenario {
    pub fn len(&self) -> usize {
        self.establishments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.establishments.is_empty()
    }
}

/// Generates the ensemble described by `spec`. Pure: identical specs yield
/// bit-identical scenarios.
pub fn generate(spec: &ScenarioSpec) -> Result<Scenario> {
    spec.validate()?;
    let establishments = match spec.kind {
        ScenarioKind::I => generate_kind_i(spec)?,
        ScenarioKind::II => generate_kind_ii(spec)?,
        ScenarioKind::III => generate_kind_iii_iv(spec, false)?,
        ScenarioKind::IV => generate_kind_iii_iv(spec, true)?,
        ScenarioKind::Distribution => generate_distribution_establishments(spec)?,
    };
    for est in &establishments {
        est.validate()?;
    }
    Ok(Scenario {
        label: spec.label(),
        spec: spec.clone(),
        establishments,
    })
}

/// Generates a sampled ensemble; `spec.kind` must be `Distribution`.
pub fn generate_distribution(spec: &ScenarioSpec) -> Result<Scenario> {
    if spec.kind != ScenarioKind::Distribution {
        return Err(Error::spec(format!(
            "generate_distribution requires the distribution kind, got {:?}",
            spec.kind
        )));
    }
    generate(spec)
}

/// Returns a copy of the scenario sorted ascending by establishment output,
/// ties broken by id. The input is left untouched.
pub fn order_by_output(sc: &Scenario) -> Result<Scenario> {
    let mut keyed: Vec<(f64, u32, Establishment)> = sc
        .establishments
        .iter()
        .map(|e| eval_leontief(e).map(|out| (out.y, e.id, *e)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    Ok(Scenario {
        label: sc.label.clone(),
        spec: sc.spec.clone(),
        establishments: keyed.into_iter().map(|(_, _, e)| e).collect(),
    })
}

fn lerp(lo: f64, hi: f64, t: f64) -> f64 {
    lo + (hi - lo) * t
}

/// Kind I: one (a, b) pair shared by all establishments, intensities on a
/// ramp, labor binding everywhere. With a = 1 the output of every
/// establishment equals its labor, so aggregate Y equals aggregate L
/// identically.
fn generate_kind_i(spec: &ScenarioSpec) -> Result<Vec<Establishment>> {
    let n = spec.n;
    let s = spec.schedule.slack_margin.unwrap_or(0.05);
    let lo = spec.schedule.intensity_lo.unwrap_or(0.45);
    let hi = spec.schedule.intensity_hi.unwrap_or(0.90);
    if !(s > 0.0) {
        return Err(Error::spec(format!("kind I: slack_margin must be > 0, got {s}")));
    }
    if !(lo > 0.0) || !(hi > lo) {
        return Err(Error::spec(format!(
            "kind I: intensity ramp must satisfy 0 < lo < hi, got [{lo}, {hi}]"
        )));
    }
    let (target_k, target_l) = spec.targets();

    let l_raw = 100.0;
    let ratios: Vec<f64> = (0..n).map(|i| lerp(lo, hi, i as f64 / (n - 1) as f64)).collect();
    let sum_l_raw = l_raw * n as f64;
    let sum_k_raw: f64 = ratios.iter().map(|c| c * l_raw).sum();
    let l_scale = target_l / sum_l_raw;
    let k_scale = target_k / sum_k_raw;

    let ls: Vec<f64> = (0..n).map(|_| l_raw * l_scale).collect();
    let ks: Vec<f64> = ratios.iter().map(|c| c * l_raw * k_scale).collect();

    // Shared capital coefficient: tightest establishment keeps exactly the
    // requested proportional slack, everyone else keeps more.
    let a = 1.0;
    let b = ks
        .iter()
        .zip(&ls)
        .map(|(k, l)| k / ((1.0 + s) * l))
        .fold(f64::INFINITY, f64::min);

    Ok((0..n)
        .map(|i| Establishment {
            id: (i + 1) as u32,
            a,
            b,
            k: ks[i],
            l: ls[i],
        })
        .collect())
}

/// Kind II: every establishment uses capital and labor in the same
/// proportion (the aggregate K/L), while both coefficients ramp across
/// establishments. Labor binds everywhere by the slack-margin construction.
fn generate_kind_ii(spec: &ScenarioSpec) -> Result<Vec<Establishment>> {
    let n = spec.n;
    let s = spec.schedule.slack_margin.unwrap_or(0.05);
    let plo = spec.schedule.productivity_lo.unwrap_or(0.9);
    let phi = spec.schedule.productivity_hi.unwrap_or(1.3);
    if !(s > 0.0) {
        return Err(Error::spec(format!("kind II: slack_margin must be > 0, got {s}")));
    }
    if !(plo > 0.0) || !(phi > plo) {
        return Err(Error::spec(format!(
            "kind II: productivity ramp must satisfy 0 < lo < hi, got [{plo}, {phi}]"
        )));
    }
    let (target_k, target_l) = spec.targets();
    let intensity = target_k / target_l;
    let l_each = target_l / n as f64;

    Ok((0..n)
        .map(|i| {
            let p = lerp(plo, phi, i as f64 / (n - 1) as f64); // 1/a
            let a = 1.0 / p;
            // Capital productivity set so k/b = (1+s) * l/a.
            let b = intensity / ((1.0 + s) * p);
            Establishment {
                id: (i + 1) as u32,
                a,
                b,
                k: intensity * l_each,
                l: l_each,
            }
        })
        .collect())
}

/// Shared construction for kinds III and IV.
///
/// Coefficients decay geometrically (`a_i = a_1 g^(i-1)`, `b_i = b_1 h^(i-1)`)
/// and the capital/labor intensity grows geometrically, so the ratio of the
/// capital ratio to the labor ratio is itself geometric:
/// `rho_i = rho_1 * s^(i-1)` with `s = intensity_growth * g / h`. Anchoring
/// `rho_1 = s^-(m - 1.5)` puts the single sign change of `k/b - l/a` exactly
/// between positions m-1 and m.
fn generate_kind_iii_iv(spec: &ScenarioSpec, is_iv: bool) -> Result<Vec<Establishment>> {
    let n = spec.n;
    let a1 = spec.schedule.base_a.unwrap_or(1.77);
    let (g_default, h_default) = if is_iv { (0.965, 0.9975) } else { (0.97, 0.998) };
    let g = spec.schedule.decay_a.unwrap_or(g_default);
    let h = spec.schedule.decay_b.unwrap_or(h_default);
    let igrow = spec.schedule.intensity_growth.unwrap_or(1.0185);
    let kind = if is_iv { "IV" } else { "III" };
    if !(a1 > 0.0) {
        return Err(Error::spec(format!("kind {kind}: base_a must be > 0, got {a1}")));
    }
    if !(g > 0.0 && g < 1.0) || !(h > 0.0 && h < 1.0) {
        return Err(Error::spec(format!(
            "kind {kind}: coefficient decays must lie in (0, 1), got decay_a={g}, decay_b={h}"
        )));
    }
    if !(igrow > 1.0) {
        return Err(Error::spec(format!(
            "kind {kind}: intensity_growth must be > 1, got {igrow}"
        )));
    }
    let srate = igrow * g / h;
    if !(srate < 1.0) {
        return Err(Error::spec(format!(
            "kind {kind}: intensity_growth * decay_a / decay_b must be < 1 for a single \
             labor-to-capital switch, got {srate}"
        )));
    }
    if !(srate > g * g) {
        return Err(Error::spec(format!(
            "kind {kind}: schedule would not be output-ordered (need intensity_growth * \
             decay_a / decay_b > decay_a^2, got {srate} <= {})",
            g * g
        )));
    }

    let m = if is_iv {
        DEFAULT_BREAK_INDEX.min(n - 1).max(2)
    } else {
        spec.break_index.unwrap_or_else(|| DEFAULT_BREAK_INDEX.min(n - 1).max(2))
    };
    let (target_k, target_l) = spec.targets();
    let l_each = target_l / n as f64;

    // Intensities c_i = c_1 * igrow^(i-1), with c_1 fixed by the capital target.
    let sum_growth: f64 = (0..n).map(|i| igrow.powi(i as i32)).sum();
    let c1 = target_k * n as f64 / (target_l * sum_growth);

    // rho_1 places the regime switch between positions m-1 and m.
    let rho1 = srate.powf(-(m as f64 - 1.5));
    let b1 = a1 * c1 / rho1;

    Ok((0..n)
        .map(|i| {
            let a = a1 * g.powi(i as i32);
            let b = b1 * h.powi(i as i32);
            let c = c1 * igrow.powi(i as i32);
            Establishment {
                id: (i + 1) as u32,
                a,
                b,
                k: c * l_each,
                l: l_each,
            }
        })
        .collect())
}

/// Inverse CDF of the Pareto distribution with the given shape and scale
/// (minimum). `u` must lie in `[0, 1)`.
pub fn pareto_inverse_cdf(shape: f64, scale: f64, u: f64) -> f64 {
    scale * (1.0 - u).powf(-1.0 / shape)
}

/// Inverse CDF of the Weibull distribution. `u` must lie in `[0, 1)`.
pub fn weibull_inverse_cdf(shape: f64, scale: f64, u: f64) -> f64 {
    scale * (-(1.0 - u).ln()).powf(1.0 / shape)
}

fn generate_distribution_establishments(spec: &ScenarioSpec) -> Result<Vec<Establishment>> {
    let d = spec.distribution.as_ref().expect("validated");
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let draw = |rng: &mut ChaCha8Rng| -> f64 {
        let u: f64 = rng.random();
        match d.family {
            DistributionFamily::Pareto => pareto_inverse_cdf(d.shape, d.scale, u),
            DistributionFamily::Weibull => weibull_inverse_cdf(d.shape, d.scale, u),
        }
    };

    let mut ests = Vec::with_capacity(n);
    for i in 0..n {
        // One productivity draw per factor, interleaved on a single stream.
        let inv_a = draw(&mut rng).max(f64::MIN_POSITIVE);
        let inv_b = draw(&mut rng).max(f64::MIN_POSITIVE);
        ests.push(Establishment {
            id: (i + 1) as u32,
            a: 1.0 / inv_a,
            b: 1.0 / inv_b,
            k: d.intensity * d.quantity_l,
            l: d.quantity_l,
        });
    }

    // Optional aggregate targeting by linear scaling.
    if spec.target_k.is_some() || spec.target_l.is_some() {
        let sum_k: f64 = ests.iter().map(|e| e.k).sum();
        let sum_l: f64 = ests.iter().map(|e| e.l).sum();
        let k_scale = spec.target_k.map(|t| t / sum_k).unwrap_or(1.0);
        let l_scale = spec.target_l.map(|t| t / sum_l).unwrap_or(1.0);
        for e in &mut ests {
            e.k *= k_scale;
            e.l *= l_scale;
        }
    }
    Ok(ests)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leontief::{classify_regime, Regime, DEFAULT_REGIME_TOL};

    #[test]
    fn kind_i_all_coefficient_pairs_identical_and_labor_binds() {
        let sc = generate(&ScenarioSpec::of_kind(ScenarioKind::I)).unwrap();
        assert_eq!(sc.len(), 50);
        let first = (sc.establishments[0].a, sc.establishments[0].b);
        for e in &sc.establishments {
            assert_eq!((e.a, e.b), first);
            assert_eq!(classify_regime(e, DEFAULT_REGIME_TOL).unwrap(), Regime::LaborLimited);
        }
        // Intensities vary.
        let r0 = sc.establishments[0].k / sc.establishments[0].l;
        let rn = sc.establishments[49].k / sc.establishments[49].l;
        assert!(rn > r0 * 1.5);
    }

    #[test]
    fn kind_i_output_equals_labor_bitwise() {
        let sc = generate(&ScenarioSpec::of_kind(ScenarioKind::I)).unwrap();
        let sum_y: f64 = sc.establishments.iter().map(|e| eval_leontief(e).unwrap().y).sum();
        let sum_l: f64 = sc.establishments.iter().map(|e| e.l).sum();
        assert_eq!(sum_y, sum_l);
    }

    #[test]
    fn kind_i_hits_aggregate_targets() {
        let sc = generate(&ScenarioSpec::of_kind(ScenarioKind::I)).unwrap();
        let sum_k: f64 = sc.establishments.iter().map(|e| e.k).sum();
        let sum_l: f64 = sc.establishments.iter().map(|e| e.l).sum();
        assert!((sum_k - 3257.98).abs() < 1e-9);
        assert!((sum_l - 4879.44).abs() < 1e-9);
    }

    #[test]
    fn kind_ii_intensities_identical() {
        let sc = generate(&ScenarioSpec::of_kind(ScenarioKind::II)).unwrap();
        let r = 3250.0 / 5000.0;
        for e in &sc.establishments {
            assert!((e.k / e.l - r).abs() < 1e-12);
        }
        // Coefficients vary pairwise.
        let mut pairs: Vec<(f64, f64)> = sc.establishments.iter().map(|e| (e.a, e.b)).collect();
        pairs.dedup();
        assert_eq!(pairs.len(), 50);
    }

    #[test]
    fn kind_ii_minimal_two_establishments() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::II);
        spec.n = 2;
        spec.target_k = Some(65.0);
        spec.target_l = Some(100.0);
        let sc = generate(&spec).unwrap();
        for e in &sc.establishments {
            assert!((e.k / e.l - 0.65).abs() < 1e-12);
        }
    }

    #[test]
    fn kind_iii_breaks_once_at_requested_position() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::III);
        spec.break_index = Some(18);
        let sc = generate(&spec).unwrap();
        let ordered = order_by_output(&sc).unwrap();
        // Output order must coincide with construction order.
        let ids: Vec<u32> = ordered.establishments.iter().map(|e| e.id).collect();
        assert_eq!(ids, (1..=50).collect::<Vec<u32>>());
        for (pos, e) in ordered.establishments.iter().enumerate() {
            let expected = if pos + 1 < 18 { Regime::LaborLimited } else { Regime::CapitalLimited };
            assert_eq!(
                classify_regime(e, DEFAULT_REGIME_TOL).unwrap(),
                expected,
                "position {}",
                pos + 1
            );
        }
    }

    #[test]
    fn kind_iii_outputs_strictly_increasing() {
        let sc = generate(&ScenarioSpec::of_kind(ScenarioKind::III)).unwrap();
        let ys: Vec<f64> = sc
            .establishments
            .iter()
            .map(|e| eval_leontief(e).unwrap().y)
            .collect();
        assert!(ys.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn kind_iv_shares_kind_iii_intensities_with_wider_coefficients() {
        let iii = generate(&ScenarioSpec::of_kind(ScenarioKind::III)).unwrap();
        let iv = generate(&ScenarioSpec::of_kind(ScenarioKind::IV)).unwrap();
        for (e3, e4) in iii.establishments.iter().zip(&iv.establishments) {
            assert_eq!(e3.k, e4.k);
            assert_eq!(e3.l, e4.l);
        }
        let disp = |sc: &Scenario| {
            let a_first = sc.establishments[0].a;
            let a_last = sc.establishments[49].a;
            a_first / a_last
        };
        assert!(disp(&iv) > disp(&iii));
        // Faster-decaying coefficients raise every output, so aggregate Y is larger.
        let y = |sc: &Scenario| -> f64 {
            sc.establishments.iter().map(|e| eval_leontief(e).unwrap().y).sum()
        };
        assert!(y(&iv) > y(&iii));
    }

    #[test]
    fn generation_is_deterministic() {
        for kind in [
            ScenarioKind::I,
            ScenarioKind::II,
            ScenarioKind::III,
            ScenarioKind::IV,
        ] {
            let spec = ScenarioSpec::of_kind(kind);
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
    }

    #[test]
    fn distribution_pareto_sample_mean_near_analytic_mean() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::Distribution);
        spec.n = 1000;
        spec.seed = 7;
        spec.distribution = Some(DistributionSpec {
            family: DistributionFamily::Pareto,
            shape: 2.0,
            scale: 1.0,
            quantity_l: 100.0,
            intensity: 0.65,
        });
        let sc = generate_distribution(&spec).unwrap();
        let mean: f64 =
            sc.establishments.iter().map(|e| 1.0 / e.a).sum::<f64>() / sc.len() as f64;
        // Pareto(shape s, scale m) has mean s*m/(s-1) = 2 for s=2, m=1.
        assert!((mean - 2.0).abs() / 2.0 < 0.05, "sample mean {mean}");
    }

    #[test]
    fn distribution_weibull_shape_one_is_exponential() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::Distribution);
        spec.n = 1000;
        spec.seed = 7;
        spec.distribution = Some(DistributionSpec {
            family: DistributionFamily::Weibull,
            shape: 1.0,
            scale: 1.0,
            quantity_l: 100.0,
            intensity: 0.65,
        });
        let sc = generate_distribution(&spec).unwrap();
        let mean: f64 =
            sc.establishments.iter().map(|e| 1.0 / e.a).sum::<f64>() / sc.len() as f64;
        assert!((mean - 1.0).abs() < 0.05, "sample mean {mean}");
    }

    #[test]
    fn distribution_same_seed_bit_identical() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::Distribution);
        spec.n = 200;
        spec.seed = 42;
        spec.distribution = Some(DistributionSpec {
            family: DistributionFamily::Pareto,
            shape: 3.0,
            scale: 0.5,
            quantity_l: 100.0,
            intensity: 0.65,
        });
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn pareto_inverse_cdf_matches_closed_form_quantiles() {
        // F(x) = 1 - (m/x)^s, so F^-1(1/2) = m * 2^(1/s).
        let x = pareto_inverse_cdf(2.0, 1.0, 0.5);
        assert!((x - 2.0_f64.powf(0.5)).abs() < 1e-15);
        // Weibull median: m * ln(2)^(1/s).
        let w = weibull_inverse_cdf(1.5, 2.0, 0.5);
        assert!((w - 2.0 * (2.0_f64.ln()).powf(1.0 / 1.5)).abs() < 1e-15);
    }

    #[test]
    fn order_by_output_sorts_and_breaks_ties_by_id() {
        let mk = |id, l| Establishment { id, a: 1.0, b: 1.0, k: 1e6, l };
        let spec = ScenarioSpec::of_kind(ScenarioKind::I);
        let sc = Scenario {
            label: "toy".into(),
            spec,
            establishments: vec![mk(1, 3.0), mk(5, 1.0), mk(2, 1.0), mk(4, 2.0)],
        };
        let ordered = order_by_output(&sc).unwrap();
        let ids: Vec<u32> = ordered.establishments.iter().map(|e| e.id).collect();
        assert_eq!(ids, vec![2, 5, 4, 1]);
        // Idempotent, and the input is untouched.
        assert_eq!(order_by_output(&ordered).unwrap(), ordered);
        assert_eq!(sc.establishments[0].id, 1);
    }

    #[test]
    fn spec_errors_cover_named_invariants() {
        let mut spec = ScenarioSpec::of_kind(ScenarioKind::I);
        spec.n = 1;
        assert!(matches!(generate(&spec), Err(Error::Spec(_))));

        let mut spec = ScenarioSpec::of_kind(ScenarioKind::II);
        spec.break_index = Some(10);
        assert!(matches!(generate(&spec), Err(Error::Spec(_))));

        let mut spec = ScenarioSpec::of_kind(ScenarioKind::III);
        spec.break_index = Some(50);
        assert!(matches!(generate(&spec), Err(Error::Spec(_))));

        let mut spec = ScenarioSpec::of_kind(ScenarioKind::Distribution);
        spec.distribution = Some(DistributionSpec {
            family: DistributionFamily::Pareto,
            shape: 0.0,
            scale: 1.0,
            quantity_l: 100.0,
            intensity: 0.65,
        });
        assert!(matches!(generate(&spec), Err(Error::Spec(_))));

        let spec = ScenarioSpec::of_kind(ScenarioKind::Distribution);
        assert!(matches!(generate(&spec), Err(Error::Spec(_))));
    }
}
