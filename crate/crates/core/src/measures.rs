//! Entropy, order/disorder, and complexity measures on categorical
//! probability distributions.
//!
//! All measures are evaluated on one validated [`Distribution`] `{p_i}`,
//! i = 1..n:
//!
//! - Shannon entropy `S = -Σ p_i log p_i` with the convention `0 log 0 = 0`,
//!   and its ceiling `S_max = log n`
//! - information `I = 1/S` (reciprocal entropy; singular at `S = 0`)
//! - disorder `Δ = S / S_max` and order `Ω = 1 − Δ`
//! - SDL statistical complexity `Γ = Δ^α · Ω^β`
//! - disequilibrium `D = Σ (p_i − 1/n)²` and LMC complexity `C = S · D`
//! - discrete Fisher information `F = Σ_{i=1}^{n−1} (p_{i+1} − p_i)² / p_i`,
//!   where a `0/0` term contributes 0 and a `x/0` term is singular
//!
//! The logarithm base fixes the entropy unit (2 = bits, e = nats,
//! 10 = hartleys). `Δ`, `Ω`, `Γ` and `D` are base-independent; `C` carries
//! the entropy unit. Everything here is a pure function of its inputs, so
//! values can be shared and evaluated from multiple threads freely.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Absolute tolerance for `Σ p_i = 1` when validating a [`Distribution`].
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-9;

/// Absolute slack allowed on invariant checks (`Δ + Ω = 1`, entropy bounds).
pub const INVARIANT_TOLERANCE: f64 = 1e-12;

/// Default tolerance on a raw percentage row's deviation from a 100 sum.
pub const DEFAULT_ROW_TOLERANCE: f64 = 5.0;

/// What to do when a measure divides by zero (`I` at `S = 0`, a Fisher
/// term with `p_i = 0` and `p_{i+1} > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityPolicy {
    /// Report the value as [`MeasureValue::Saturated`], rendered as `"inf"`.
    Saturate,
    /// Fail with a [`MeasureError`] identifying the singular quantity.
    Error,
}

impl SingularityPolicy {
    pub fn as_str(&self) -> &'static str {
        match self {
            SingularityPolicy::Saturate => "saturate",
            SingularityPolicy::Error => "error",
        }
    }
}

/// A measure that may saturate instead of taking a finite value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureValue {
    Finite(f64),
    /// Marker for a division by zero under [`SingularityPolicy::Saturate`].
    Saturated,
}

impl MeasureValue {
    pub fn is_saturated(&self) -> bool {
        matches!(self, MeasureValue::Saturated)
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<f64> {
        match self {
            MeasureValue::Finite(x) => Some(*x),
            MeasureValue::Saturated => None,
        }
    }

    /// Collapse to `f64`, mapping saturation to `+inf`.
    pub fn to_f64(self) -> f64 {
        match self {
            MeasureValue::Finite(x) => x,
            MeasureValue::Saturated => f64::INFINITY,
        }
    }

    /// Inverse of [`to_f64`](Self::to_f64): `+inf` becomes `Saturated`.
    pub fn from_f64(x: f64) -> Self {
        if x.is_infinite() && x > 0.0 {
            MeasureValue::Saturated
        } else {
            MeasureValue::Finite(x)
        }
    }
}

/// Errors from distribution validation and measure evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("log base {0} is invalid: must be finite and > 1")]
    InvalidBase(f64),
    #[error("SDL exponents must be finite and >= 0, got alpha={alpha}, beta={beta}")]
    InvalidExponents { alpha: f64, beta: f64 },
    #[error("normalization tolerance {0} is invalid: must be finite and >= 0")]
    InvalidTolerance(f64),
    #[error("distribution needs at least 2 outcomes, got {0}")]
    TooFewOutcomes(usize),
    #[error("{probs} probabilities but {labels} labels")]
    LabelCountMismatch { probs: usize, labels: usize },
    #[error("probability {value} at index {index} is outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, expected 1 within {PROBABILITY_SUM_TOLERANCE}")]
    NotNormalized { sum: f64 },
    #[error("entropy {0} is negative")]
    NegativeEntropy(f64),
    #[error("maximum entropy {0} is not positive")]
    InvalidMaxEntropy(f64),
    #[error("entropy {entropy} exceeds its maximum {max_entropy}")]
    EntropyAboveMax { entropy: f64, max_entropy: f64 },
    #[error("disorder {0} is outside [0, 1]")]
    DisorderOutOfRange(f64),
    #[error("order {0} is outside [0, 1]")]
    OrderOutOfRange(f64),
    #[error("disorder {disorder} and order {order} do not sum to 1")]
    NotComplementary { disorder: f64, order: f64 },
    #[error("information is singular: entropy is zero")]
    SingularInformation,
    #[error("Fisher information is singular: p[{index}] = 0 with a nonzero successor")]
    SingularFisher { index: usize },
    #[error("measure vector invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown measure \"{0}\": expected one of S, S_max, I, delta, omega, gamma, D, C, F")]
    UnknownMeasure(String),
}

/// Name of one column of the measure battery, in fixed report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    S,
    SMax,
    I,
    Delta,
    Omega,
    Gamma,
    D,
    C,
    F,
}

impl Measure {
    /// Every measure, in report column order.
    pub const ALL: [Measure; 9] = [
        Measure::S,
        Measure::SMax,
        Measure::I,
        Measure::Delta,
        Measure::Omega,
        Measure::Gamma,
        Measure::D,
        Measure::C,
        Measure::F,
    ];

    /// The report/CLI spelling of the name.
    pub fn as_str(&self) -> &'static str {
        match self {
            Measure::S => "S",
            Measure::SMax => "S_max",
            Measure::I => "I",
            Measure::Delta => "delta",
            Measure::Omega => "omega",
            Measure::Gamma => "gamma",
            Measure::D => "D",
            Measure::C => "C",
            Measure::F => "F",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = MeasureError;

    fn from_str(name: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .iter()
            .copied()
            .find(|m| m.as_str() == name)
            .ok_or_else(|| MeasureError::UnknownMeasure(name.to_string()))
    }
}

/// A validated categorical probability distribution with ordered, labeled
/// outcomes.
///
/// Ordering is significant: the discrete Fisher information depends on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
    labels: Vec<String>,
}

impl Distribution {
    /// Validates and builds a distribution.
    ///
    /// Requires at least two outcomes, one label per probability, every
    /// `p_i` in `[0, 1]`, and `Σ p_i = 1` within
    /// [`PROBABILITY_SUM_TOLERANCE`].
    pub fn new(probs: Vec<f64>, labels: Vec<String>) -> Result<Self, MeasureError> {
        if probs.len() < 2 {
            return Err(MeasureError::TooFewOutcomes(probs.len()));
        }
        if probs.len() != labels.len() {
            return Err(MeasureError::LabelCountMismatch {
                probs: probs.len(),
                labels: labels.len(),
            });
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(MeasureError::ProbabilityOutOfRange { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(MeasureError::NotNormalized { sum });
        }
        Ok(Self { probs, labels })
    }

    /// Builds a distribution with generated labels `p1..pn`.
    pub fn from_probs(probs: Vec<f64>) -> Result<Self, MeasureError> {
        let labels = (1..=probs.len()).map(|i| format!("p{i}")).collect();
        Self::new(probs, labels)
    }

    /// The uniform distribution on `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self, MeasureError> {
        Self::from_probs(vec![1.0 / n as f64; n.max(1)])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of outcomes (`n >= 2`).
    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Evaluation parameters shared by the whole measure battery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    /// Logarithm base for entropy (must be > 1). Default 10 (hartleys).
    pub log_base: f64,
    /// Strength of disorder in `Γ = Δ^α Ω^β`. Default 1.
    pub alpha: f64,
    /// Strength of order in `Γ = Δ^α Ω^β`. Default 1.
    pub beta: f64,
    /// Max allowed deviation of a raw percentage row's sum from 100.
    pub normalization_tolerance: f64,
    pub singularity_policy: SingularityPolicy,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            log_base: 10.0,
            alpha: 1.0,
            beta: 1.0,
            normalization_tolerance: DEFAULT_ROW_TOLERANCE,
            singularity_policy: SingularityPolicy::Saturate,
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<(), MeasureError> {
        check_base(self.log_base)?;
        if !self.alpha.is_finite() || !self.beta.is_finite() || self.alpha < 0.0 || self.beta < 0.0
        {
            return Err(MeasureError::InvalidExponents {
                alpha: self.alpha,
                beta: self.beta,
            });
        }
        if !self.normalization_tolerance.is_finite() || self.normalization_tolerance < 0.0 {
            return Err(MeasureError::InvalidTolerance(self.normalization_tolerance));
        }
        Ok(())
    }
}

/// Every measure evaluated on one distribution at one point in time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureVector {
    /// Shannon entropy `S`, in units of the configured base.
    pub entropy: f64,
    /// `S_max = log n`, same units.
    pub max_entropy: f64,
    /// `I = 1/S`; saturated when `S = 0`.
    pub information: MeasureValue,
    /// `Δ = S/S_max`, dimensionless in `[0, 1]`.
    pub disorder: f64,
    /// `Ω = 1 − Δ`, dimensionless in `[0, 1]`.
    pub order: f64,
    /// `Γ = Δ^α Ω^β`, dimensionless.
    pub sdl: f64,
    /// `D = Σ (p_i − 1/n)²`, dimensionless in `[0, (n−1)/n]`.
    pub disequilibrium: f64,
    /// `C = S·D`, same units as `S`.
    pub lmc: f64,
    /// Discrete Fisher information; saturated on a `x/0` term.
    pub fisher: MeasureValue,
}

impl MeasureVector {
    /// The named component, with always-finite measures wrapped as
    /// [`MeasureValue::Finite`].
    pub fn value_of(&self, measure: Measure) -> MeasureValue {
        match measure {
            Measure::S => MeasureValue::Finite(self.entropy),
            Measure::SMax => MeasureValue::Finite(self.max_entropy),
            Measure::I => self.information,
            Measure::Delta => MeasureValue::Finite(self.disorder),
            Measure::Omega => MeasureValue::Finite(self.order),
            Measure::Gamma => MeasureValue::Finite(self.sdl),
            Measure::D => MeasureValue::Finite(self.disequilibrium),
            Measure::C => MeasureValue::Finite(self.lmc),
            Measure::F => self.fisher,
        }
    }

    /// Re-checks the bound and complementarity invariants on computed
    /// values, within [`INVARIANT_TOLERANCE`].
    pub fn check_invariants(&self, n: usize) -> Result<(), MeasureError> {
        let fail = |what: String| Err(MeasureError::InvariantViolation(what));
        if (self.disorder + self.order - 1.0).abs() > INVARIANT_TOLERANCE {
            return fail(format!(
                "disorder {} + order {} != 1",
                self.disorder, self.order
            ));
        }
        if self.entropy < -INVARIANT_TOLERANCE
            || self.entropy > self.max_entropy + INVARIANT_TOLERANCE
        {
            return fail(format!(
                "entropy {} outside [0, {}]",
                self.entropy, self.max_entropy
            ));
        }
        let ceiling = (n as f64 - 1.0) / n as f64;
        if self.disequilibrium < -INVARIANT_TOLERANCE
            || self.disequilibrium > ceiling + INVARIANT_TOLERANCE
        {
            return fail(format!(
                "disequilibrium {} outside [0, {ceiling}]",
                self.disequilibrium
            ));
        }
        Ok(())
    }
}

fn check_base(base: f64) -> Result<(), MeasureError> {
    if !base.is_finite() || base <= 1.0 {
        return Err(MeasureError::InvalidBase(base));
    }
    Ok(())
}

/// Shannon entropy `S = -Σ p_i log_base p_i`, with `0 log 0 = 0`.
///
/// Computed as a natural-log sum divided by `ln base`, so changing the
/// base rescales the result by a constant.
pub fn shannon_entropy(dist: &Distribution, base: f64) -> Result<f64, MeasureError> {
    check_base(base)?;
    let nats: f64 = dist
        .probs()
        .iter()
        .map(|&p| if p > 0.0 { -p * p.ln() } else { 0.0 })
        .sum();
    Ok((nats / base.ln()).max(0.0))
}

/// `S_max = log_base n`, the entropy of the uniform distribution on `n`
/// outcomes.
pub fn max_entropy(n: usize, base: f64) -> Result<f64, MeasureError> {
    check_base(base)?;
    if n < 2 {
        return Err(MeasureError::TooFewOutcomes(n));
    }
    Ok((n as f64).ln() / base.ln())
}

/// Reciprocal information `I = 1/S`.
///
/// At `S = 0` the value saturates or errors according to `policy`.
pub fn information(entropy: f64, policy: SingularityPolicy) -> Result<MeasureValue, MeasureError> {
    if entropy.is_nan() || entropy < 0.0 {
        return Err(MeasureError::NegativeEntropy(entropy));
    }
    if entropy == 0.0 {
        return match policy {
            SingularityPolicy::Saturate => Ok(MeasureValue::Saturated),
            SingularityPolicy::Error => Err(MeasureError::SingularInformation),
        };
    }
    Ok(MeasureValue::Finite(1.0 / entropy))
}

/// Disorder `Δ = S / S_max`, clamped into `[0, 1]` against rounding dust.
///
/// An entropy exceeding its maximum by more than 1e-9 is rejected as an
/// internal consistency failure rather than clamped.
pub fn disorder(entropy: f64, max_entropy: f64) -> Result<f64, MeasureError> {
    if entropy.is_nan() || entropy < 0.0 {
        return Err(MeasureError::NegativeEntropy(entropy));
    }
    if max_entropy.is_nan() || max_entropy <= 0.0 {
        return Err(MeasureError::InvalidMaxEntropy(max_entropy));
    }
    if entropy > max_entropy + 1e-9 {
        return Err(MeasureError::EntropyAboveMax {
            entropy,
            max_entropy,
        });
    }
    Ok((entropy / max_entropy).clamp(0.0, 1.0))
}

/// Order `Ω = 1 − Δ`.
pub fn order(disorder: f64) -> Result<f64, MeasureError> {
    if !disorder.is_finite() || !(0.0..=1.0).contains(&disorder) {
        return Err(MeasureError::DisorderOutOfRange(disorder));
    }
    Ok(1.0 - disorder)
}

/// SDL statistical complexity `Γ = Δ^α · Ω^β`.
///
/// Vanishes at complete order (`Δ = 0`) and complete disorder (`Δ = 1`)
/// for positive exponents; with `α = β = 1` it peaks at 0.25.
pub fn sdl_complexity(
    disorder: f64,
    order: f64,
    alpha: f64,
    beta: f64,
) -> Result<f64, MeasureError> {
    if !alpha.is_finite() || !beta.is_finite() || alpha < 0.0 || beta < 0.0 {
        return Err(MeasureError::InvalidExponents { alpha, beta });
    }
    if !disorder.is_finite() || !(0.0..=1.0).contains(&disorder) {
        return Err(MeasureError::DisorderOutOfRange(disorder));
    }
    if !order.is_finite() || !(0.0..=1.0).contains(&order) {
        return Err(MeasureError::OrderOutOfRange(order));
    }
    if (disorder + order - 1.0).abs() > 1e-9 {
        return Err(MeasureError::NotComplementary { disorder, order });
    }
    // Exponent 1 is the default; keep that path an exact product.
    let pow = |x: f64, e: f64| if e == 1.0 { x } else { x.powf(e) };
    Ok(pow(disorder, alpha) * pow(order, beta))
}

/// Disequilibrium `D = Σ (p_i − 1/n)²`, the squared Euclidean distance
/// from the uniform distribution.
pub fn disequilibrium(dist: &Distribution) -> f64 {
    let even = 1.0 / dist.len() as f64;
    dist.probs().iter().map(|&p| (p - even) * (p - even)).sum()
}

/// LMC complexity `C = S · D`.
pub fn lmc_complexity(entropy: f64, disequilibrium: f64) -> f64 {
    entropy * disequilibrium
}

/// Discrete Fisher information `F = Σ_{i=1}^{n−1} (p_{i+1} − p_i)² / p_i`.
///
/// A term with `p_i = 0` and `p_{i+1} = 0` contributes 0; a term with
/// `p_i = 0` and `p_{i+1} > 0` saturates or errors according to `policy`.
/// Unlike the other measures, the result depends on outcome ordering.
pub fn fisher_discrete(
    dist: &Distribution,
    policy: SingularityPolicy,
) -> Result<MeasureValue, MeasureError> {
    let probs = dist.probs();
    let mut sum = 0.0;
    for (index, pair) in probs.windows(2).enumerate() {
        let diff = pair[1] - pair[0];
        if pair[0] == 0.0 {
            if diff == 0.0 {
                continue;
            }
            return match policy {
                SingularityPolicy::Saturate => Ok(MeasureValue::Saturated),
                SingularityPolicy::Error => Err(MeasureError::SingularFisher { index }),
            };
        }
        sum += diff * diff / pair[0];
    }
    Ok(MeasureValue::Finite(sum))
}

/// Evaluates the whole battery on one distribution, reusing intermediate
/// values so the fields are mutually consistent (`Γ` is computed from the
/// returned `Δ` and `Ω`, `C` from the returned `S` and `D`).
pub fn measure_vector(
    dist: &Distribution,
    config: &AnalysisConfig,
) -> Result<MeasureVector, MeasureError> {
    config.validate()?;
    let policy = config.singularity_policy;
    let entropy = shannon_entropy(dist, config.log_base)?;
    let max_entropy = max_entropy(dist.len(), config.log_base)?;
    let disorder = disorder(entropy, max_entropy)?;
    let order = order(disorder)?;
    let sdl = sdl_complexity(disorder, order, config.alpha, config.beta)?;
    let disequilibrium = disequilibrium(dist);
    Ok(MeasureVector {
        entropy,
        max_entropy,
        information: information(entropy, policy)?,
        disorder,
        order,
        sdl,
        disequilibrium,
        lmc: lmc_complexity(entropy, disequilibrium),
        fisher: fisher_discrete(dist, policy)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn dist(probs: &[f64]) -> Distribution {
        Distribution::from_probs(probs.to_vec()).unwrap()
    }

    // Reference values below were frozen from a term-by-term summation
    // oracle evaluated at high precision before this module was written.

    // ----- Distribution validation -----

    #[test]
    fn distribution_rejects_single_outcome() {
        assert_eq!(
            Distribution::from_probs(vec![1.0]).unwrap_err(),
            MeasureError::TooFewOutcomes(1)
        );
    }

    #[test]
    fn distribution_rejects_label_mismatch() {
        let err = Distribution::new(vec![0.5, 0.5], vec!["a".into()]).unwrap_err();
        assert_eq!(
            err,
            MeasureError::LabelCountMismatch {
                probs: 2,
                labels: 1
            }
        );
    }

    #[test]
    fn distribution_rejects_out_of_range() {
        assert!(matches!(
            Distribution::from_probs(vec![1.2, -0.2]).unwrap_err(),
            MeasureError::ProbabilityOutOfRange { index: 0, .. }
        ));
        assert!(matches!(
            Distribution::from_probs(vec![f64::NAN, 1.0]).unwrap_err(),
            MeasureError::ProbabilityOutOfRange { index: 0, .. }
        ));
    }

    #[test]
    fn distribution_rejects_bad_sum() {
        assert!(matches!(
            Distribution::from_probs(vec![0.5, 0.6]).unwrap_err(),
            MeasureError::NotNormalized { .. }
        ));
        // 1e-10 off is inside the tolerance
        assert!(Distribution::from_probs(vec![0.5, 0.5 + 1e-10]).is_ok());
    }

    // ----- shannon_entropy -----

    #[test]
    fn entropy_uniform_three_base_ten() {
        let s = shannon_entropy(&Distribution::uniform(3).unwrap(), 10.0).unwrap();
        assert_abs_diff_eq!(s, 0.47712125471966244, epsilon = 1e-12);
    }

    #[test]
    fn entropy_degenerate_is_zero() {
        let s = shannon_entropy(&dist(&[1.0, 0.0, 0.0]), 10.0).unwrap();
        assert_eq!(s, 0.0);
    }

    #[test]
    fn entropy_even_split_base_two_is_one_bit() {
        let s = shannon_entropy(&dist(&[0.5, 0.5]), 2.0).unwrap();
        assert_abs_diff_eq!(s, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_seventy_thirty_base_e() {
        let s = shannon_entropy(&dist(&[0.7, 0.3]), std::f64::consts::E).unwrap();
        assert_abs_diff_eq!(s, 0.6108643020548935, epsilon = 1e-12);
    }

    #[test]
    fn entropy_skewed_triple_base_ten() {
        let s = shannon_entropy(&dist(&[0.45, 0.40, 0.15]), 10.0).unwrap();
        assert_abs_diff_eq!(s, 0.4388166834115582, epsilon = 1e-12);
    }

    #[test]
    fn entropy_rejects_bad_base() {
        for base in [1.0, 0.5, -2.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                shannon_entropy(&dist(&[0.5, 0.5]), base),
                Err(MeasureError::InvalidBase(_))
            ));
        }
    }

    // ----- max_entropy -----

    #[test]
    fn max_entropy_values() {
        assert_abs_diff_eq!(
            max_entropy(3, 10.0).unwrap(),
            0.47712125471966244,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(max_entropy(2, 2.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            max_entropy(2, std::f64::consts::E).unwrap(),
            std::f64::consts::LN_2,
            epsilon = 1e-15
        );
    }

    #[test]
    fn max_entropy_rejects_small_n() {
        assert_eq!(
            max_entropy(1, 10.0).unwrap_err(),
            MeasureError::TooFewOutcomes(1)
        );
        assert_eq!(
            max_entropy(0, 10.0).unwrap_err(),
            MeasureError::TooFewOutcomes(0)
        );
    }

    // ----- information -----

    #[test]
    fn information_is_reciprocal() {
        assert_eq!(
            information(0.5, SingularityPolicy::Saturate).unwrap(),
            MeasureValue::Finite(2.0)
        );
        let i = information(0.47712125471966244, SingularityPolicy::Saturate)
            .unwrap()
            .finite()
            .unwrap();
        assert_abs_diff_eq!(i, 2.0959032742893844, epsilon = 1e-12);
    }

    #[test]
    fn information_singularity_policies() {
        assert_eq!(
            information(0.0, SingularityPolicy::Saturate).unwrap(),
            MeasureValue::Saturated
        );
        assert_eq!(
            information(0.0, SingularityPolicy::Error).unwrap_err(),
            MeasureError::SingularInformation
        );
        assert!(information(-0.1, SingularityPolicy::Saturate).is_err());
    }

    // ----- disorder / order -----

    #[test]
    fn disorder_extremes() {
        let s_max = 0.47712125471966244;
        assert_eq!(disorder(s_max, s_max).unwrap(), 1.0);
        assert_eq!(disorder(0.0, s_max).unwrap(), 0.0);
    }

    #[test]
    fn disorder_skewed_triple() {
        let delta = disorder(0.4388166834115582, 0.47712125471966244).unwrap();
        assert_abs_diff_eq!(delta, 0.9197173235750932, epsilon = 1e-12);
    }

    #[test]
    fn disorder_clamps_dust_but_rejects_excess() {
        assert_eq!(disorder(1.0 + 5e-10, 1.0).unwrap(), 1.0);
        assert!(matches!(
            disorder(1.1, 1.0),
            Err(MeasureError::EntropyAboveMax { .. })
        ));
        assert!(matches!(
            disorder(0.5, 0.0),
            Err(MeasureError::InvalidMaxEntropy(_))
        ));
    }

    #[test]
    fn order_is_complement() {
        assert_eq!(order(1.0).unwrap(), 0.0);
        assert_eq!(order(0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(
            order(0.9197173235750932).unwrap(),
            0.08028267642490688,
            epsilon = 1e-12
        );
        assert!(matches!(
            order(1.2),
            Err(MeasureError::DisorderOutOfRange(_))
        ));
        assert!(matches!(
            order(-0.1),
            Err(MeasureError::DisorderOutOfRange(_))
        ));
    }

    // ----- sdl_complexity -----

    #[test]
    fn sdl_vanishes_at_both_extremes() {
        assert_eq!(sdl_complexity(1.0, 0.0, 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(sdl_complexity(0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn sdl_peaks_at_one_half() {
        assert_abs_diff_eq!(
            sdl_complexity(0.5, 0.5, 1.0, 1.0).unwrap(),
            0.25,
            epsilon = 1e-15
        );
    }

    #[test]
    fn sdl_skewed_triple() {
        let gamma = sdl_complexity(0.9197173235750932, 0.08028267642490688, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(gamma, 0.07383736829096059, epsilon = 1e-12);
    }

    #[test]
    fn sdl_rejects_bad_inputs() {
        assert!(matches!(
            sdl_complexity(0.5, 0.5, -1.0, 1.0),
            Err(MeasureError::InvalidExponents { .. })
        ));
        assert!(matches!(
            sdl_complexity(0.5, 0.2, 1.0, 1.0),
            Err(MeasureError::NotComplementary { .. })
        ));
    }

    // ----- disequilibrium / lmc -----

    #[test]
    fn disequilibrium_uniform_is_zero() {
        assert_eq!(disequilibrium(&Distribution::uniform(3).unwrap()), 0.0);
    }

    #[test]
    fn disequilibrium_degenerate_hits_ceiling() {
        // (n-1)/n for n = 3
        let d = disequilibrium(&dist(&[1.0, 0.0, 0.0]));
        assert_abs_diff_eq!(d, 0.6666666666666666, epsilon = 1e-15);
    }

    #[test]
    fn disequilibrium_skewed_triple() {
        let d = disequilibrium(&dist(&[0.45, 0.40, 0.15]));
        assert_abs_diff_eq!(d, 0.05166666666666667, epsilon = 1e-15);
    }

    #[test]
    fn lmc_vanishes_at_both_extremes() {
        assert_eq!(lmc_complexity(0.4771212547196624, 0.0), 0.0);
        assert_eq!(lmc_complexity(0.0, 0.6666666666666666), 0.0);
    }

    #[test]
    fn lmc_skewed_triple() {
        let c = lmc_complexity(0.4388166834115582, 0.05166666666666667);
        assert_abs_diff_eq!(c, 0.022672195309597173, epsilon = 1e-12);
    }

    // ----- fisher_discrete -----

    #[test]
    fn fisher_uniform_is_zero() {
        let f = fisher_discrete(
            &Distribution::uniform(3).unwrap(),
            SingularityPolicy::Saturate,
        );
        assert_eq!(f.unwrap(), MeasureValue::Finite(0.0));
    }

    #[test]
    fn fisher_skewed_triple() {
        // (-0.05)^2/0.45 + (-0.25)^2/0.40
        let f = fisher_discrete(&dist(&[0.45, 0.40, 0.15]), SingularityPolicy::Saturate)
            .unwrap()
            .finite()
            .unwrap();
        assert_abs_diff_eq!(f, 0.16180555555555556, epsilon = 1e-12);
    }

    #[test]
    fn fisher_degenerate_uses_zero_term_convention() {
        // (0-1)^2/1 + 0/0 -> 1
        let f = fisher_discrete(&dist(&[1.0, 0.0, 0.0]), SingularityPolicy::Saturate).unwrap();
        assert_eq!(f, MeasureValue::Finite(1.0));
    }

    #[test]
    fn fisher_singularity_policies() {
        let d = dist(&[0.0, 0.5, 0.5]);
        assert_eq!(
            fisher_discrete(&d, SingularityPolicy::Saturate).unwrap(),
            MeasureValue::Saturated
        );
        assert_eq!(
            fisher_discrete(&d, SingularityPolicy::Error).unwrap_err(),
            MeasureError::SingularFisher { index: 0 }
        );
    }

    #[test]
    fn fisher_depends_on_ordering() {
        let forward = fisher_discrete(&dist(&[0.45, 0.40, 0.15]), SingularityPolicy::Saturate)
            .unwrap()
            .to_f64();
        let reversed = fisher_discrete(&dist(&[0.15, 0.40, 0.45]), SingularityPolicy::Saturate)
            .unwrap()
            .to_f64();
        assert_abs_diff_eq!(reversed, 0.42291666666666666, epsilon = 1e-12);
        assert!((forward - reversed).abs() > 0.1);
    }

    // ----- measure_vector -----

    #[test]
    fn vector_uniform_composition() {
        let v = measure_vector(
            &Distribution::uniform(3).unwrap(),
            &AnalysisConfig::default(),
        )
        .unwrap();
        assert_abs_diff_eq!(v.entropy, 0.47712125471966244, epsilon = 1e-12);
        // The term-by-term sum may land an ulp away from ln(n)/ln(base).
        assert_abs_diff_eq!(v.entropy, v.max_entropy, epsilon = 1e-15);
        assert_abs_diff_eq!(v.disorder, 1.0, epsilon = 1e-14);
        assert!(v.order.abs() <= 1e-14);
        assert!(v.sdl.abs() <= 1e-14);
        assert_eq!(v.disequilibrium, 0.0);
        assert_eq!(v.lmc, 0.0);
        assert_eq!(v.fisher, MeasureValue::Finite(0.0));
        v.check_invariants(3).unwrap();
    }

    #[test]
    fn vector_degenerate_composition() {
        let v = measure_vector(&dist(&[1.0, 0.0, 0.0]), &AnalysisConfig::default()).unwrap();
        assert_eq!(v.entropy, 0.0);
        assert_eq!(v.information, MeasureValue::Saturated);
        assert_eq!(v.disorder, 0.0);
        assert_eq!(v.order, 1.0);
        assert_eq!(v.sdl, 0.0);
        assert_abs_diff_eq!(v.disequilibrium, 0.6666666666666666, epsilon = 1e-15);
        assert_eq!(v.lmc, 0.0);
        assert_eq!(v.fisher, MeasureValue::Finite(1.0));
        v.check_invariants(3).unwrap();
    }

    #[test]
    fn vector_skewed_triple_matches_oracles() {
        let v = measure_vector(&dist(&[0.45, 0.40, 0.15]), &AnalysisConfig::default()).unwrap();
        assert_abs_diff_eq!(v.entropy, 0.4388166834115582, epsilon = 1e-12);
        assert_abs_diff_eq!(v.disorder, 0.9197173235750932, epsilon = 1e-12);
        assert_abs_diff_eq!(v.order, 0.08028267642490688, epsilon = 1e-12);
        assert_abs_diff_eq!(v.sdl, 0.07383736829096059, epsilon = 1e-12);
        assert_abs_diff_eq!(v.disequilibrium, 0.05166666666666667, epsilon = 1e-15);
        assert_abs_diff_eq!(v.lmc, 0.022672195309597173, epsilon = 1e-12);
        assert_abs_diff_eq!(v.fisher.to_f64(), 0.16180555555555556, epsilon = 1e-12);
        v.check_invariants(3).unwrap();
    }

    #[test]
    fn vector_propagates_singularity_error() {
        let config = AnalysisConfig {
            singularity_policy: SingularityPolicy::Error,
            ..AnalysisConfig::default()
        };
        assert_eq!(
            measure_vector(&dist(&[1.0, 0.0]), &config).unwrap_err(),
            MeasureError::SingularInformation
        );
        assert_eq!(
            measure_vector(&dist(&[0.0, 0.5, 0.5]), &config).unwrap_err(),
            MeasureError::SingularFisher { index: 0 }
        );
    }

    #[test]
    fn config_default_and_validation() {
        let config = AnalysisConfig::default();
        assert_eq!(config.log_base, 10.0);
        assert_eq!(config.alpha, 1.0);
        assert_eq!(config.beta, 1.0);
        assert_eq!(config.normalization_tolerance, 5.0);
        assert_eq!(config.singularity_policy, SingularityPolicy::Saturate);
        config.validate().unwrap();

        let bad = AnalysisConfig {
            log_base: 1.0,
            ..config
        };
        assert!(bad.validate().is_err());
        let bad = AnalysisConfig {
            beta: -0.5,
            ..config
        };
        assert!(bad.validate().is_err());
        let bad = AnalysisConfig {
            normalization_tolerance: -1.0,
            ..config
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.as_str().parse::<Measure>().unwrap(), m);
        }
        let err = "Q".parse::<Measure>().unwrap_err();
        assert_eq!(err, MeasureError::UnknownMeasure("Q".into()));
        let listing = err.to_string();
        for name in ["S", "S_max", "I", "delta", "omega", "gamma", "D", "C", "F"] {
            assert!(listing.contains(name), "missing {name} in {listing}");
        }
    }

    #[test]
    fn value_of_projects_each_field() {
        let v = measure_vector(&dist(&[0.45, 0.40, 0.15]), &AnalysisConfig::default()).unwrap();
        assert_eq!(v.value_of(Measure::S), MeasureValue::Finite(v.entropy));
        assert_eq!(
            v.value_of(Measure::SMax),
            MeasureValue::Finite(v.max_entropy)
        );
        assert_eq!(v.value_of(Measure::I), v.information);
        assert_eq!(v.value_of(Measure::Delta), MeasureValue::Finite(v.disorder));
        assert_eq!(v.value_of(Measure::Omega), MeasureValue::Finite(v.order));
        assert_eq!(v.value_of(Measure::Gamma), MeasureValue::Finite(v.sdl));
        assert_eq!(
            v.value_of(Measure::D),
            MeasureValue::Finite(v.disequilibrium)
        );
        assert_eq!(v.value_of(Measure::C), MeasureValue::Finite(v.lmc));
        assert_eq!(v.value_of(Measure::F), v.fisher);
    }

    #[test]
    fn invariant_check_catches_corruption() {
        let mut v = measure_vector(
            &Distribution::uniform(3).unwrap(),
            &AnalysisConfig::default(),
        )
        .unwrap();
        v.order = 0.5;
        assert!(matches!(
            v.check_invariants(3),
            Err(MeasureError::InvariantViolation(_))
        ));
    }

    // ----- properties -----

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Random weights that normalize into a valid distribution.
        fn weights() -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(0.0f64..1000.0, 2..=8)
                .prop_filter("needs positive mass", |w| w.iter().sum::<f64>() > 1e-6)
        }

        fn normalized(weights: &[f64]) -> Distribution {
            let sum: f64 = weights.iter().sum();
            Distribution::from_probs(weights.iter().map(|w| w / sum).collect()).unwrap()
        }

        proptest! {
            #[test]
            fn bounds_hold(w in weights()) {
                let d = normalized(&w);
                let v = measure_vector(&d, &AnalysisConfig::default()).unwrap();
                prop_assert!(v.entropy >= 0.0 && v.entropy <= v.max_entropy + 1e-12);
                prop_assert!((v.disorder + v.order - 1.0).abs() <= 1e-12);
                prop_assert!(v.sdl >= 0.0 && v.sdl <= 0.25 + 1e-12);
                let ceiling = (d.len() as f64 - 1.0) / d.len() as f64;
                prop_assert!(v.disequilibrium >= 0.0 && v.disequilibrium <= ceiling + 1e-12);
                prop_assert!(v.lmc >= 0.0);
            }

            #[test]
            fn ordering_free_measures_survive_reversal(w in weights()) {
                let d = normalized(&w);
                let mut rev = d.probs().to_vec();
                rev.reverse();
                let r = Distribution::from_probs(rev).unwrap();
                let config = AnalysisConfig::default();
                let a = measure_vector(&d, &config).unwrap();
                let b = measure_vector(&r, &config).unwrap();
                prop_assert!((a.entropy - b.entropy).abs() <= 1e-12);
                prop_assert!((a.disequilibrium - b.disequilibrium).abs() <= 1e-12);
                prop_assert!((a.lmc - b.lmc).abs() <= 1e-12);
                prop_assert!((a.sdl - b.sdl).abs() <= 1e-12);
            }

            #[test]
            fn base_change_is_a_constant_factor(w in weights()) {
                let d = normalized(&w);
                let nats = shannon_entropy(&d, std::f64::consts::E).unwrap();
                let bits = shannon_entropy(&d, 2.0).unwrap();
                if nats > 1e-9 {
                    let ratio = bits / nats;
                    prop_assert!((ratio - std::f64::consts::LN_2.recip()).abs() <= 1e-9);
                }
            }

            #[test]
            fn mixing_toward_uniform_raises_entropy(w in weights(), lambda in 0.0f64..=1.0) {
                let d = normalized(&w);
                let n = d.len() as f64;
                let mixed: Vec<f64> =
                    d.probs().iter().map(|&p| lambda / n + (1.0 - lambda) * p).collect();
                let m = Distribution::from_probs(mixed).unwrap();
                let s_orig = shannon_entropy(&d, 10.0).unwrap();
                let s_mixed = shannon_entropy(&m, 10.0).unwrap();
                prop_assert!(s_mixed >= s_orig - 1e-12);
            }
        }
    }
}
