//! Canonical partition functions and internal energies of a single particle
//! in a [`WellSpec`] box.
//!
//! Every sum is shifted by the ground level before exponentiating:
//!
//! ```text
//! ln Z = ln g − θ₁ + ln S,   S = Σ_{n≥1} exp(−θ₁(n^α − 1)),   θ₁ = βE₁
//! ```
//!
//! so S ≥ 1 and ln Z stays accurate for θ₁ anywhere from 1e-3 to 1e8.
//! Truncation is certified with the integral remainder bound
//! Σ_{n>N} exp(−θ₁n^α) ≤ ∫_N^∞ exp(−θ₁x^α) dx.

use thiserror::Error;

use crate::constants::BOLTZMANN;
use crate::error::{require_positive, ParameterError};
use crate::numerics::{ln_upper_incomplete_gamma, NeumaierSum};
use crate::scalar::Scalar;
use crate::spectrum::{ground_reduced_gap, WellSpec};

pub const DEFAULT_TOLERANCE: f64 = 1e-14;
pub const DEFAULT_MAX_TERMS: u64 = 10_000_000;
pub const MAX_TOLERANCE: f64 = 1e-6;

/// A heat bath.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalContext<T> {
    temperature: T,
    inverse_temperature: T,
    boltzmann: T,
}

impl<T: Scalar> ThermalContext<T> {
    /// Bath at `temperature` kelvin, SI Boltzmann constant.
    pub fn new(temperature: T) -> Result<Self, ParameterError> {
        Self::with_boltzmann(temperature, T::lit(BOLTZMANN))
    }

    pub fn with_boltzmann(temperature: T, boltzmann: T) -> Result<Self, ParameterError> {
        require_positive("temperature", temperature)?;
        require_positive("boltzmann", boltzmann)?;
        Ok(Self {
            temperature,
            inverse_temperature: T::one() / (boltzmann * temperature),
            boltzmann,
        })
    }

    /// Bath with the given β (1/J).
    pub fn from_inverse_temperature(inverse_temperature: T, boltzmann: T) -> Result<Self, ParameterError> {
        require_positive("inverse_temperature", inverse_temperature)?;
        require_positive("boltzmann", boltzmann)?;
        Ok(Self {
            temperature: T::one() / (boltzmann * inverse_temperature),
            inverse_temperature,
            boltzmann,
        })
    }

    pub fn temperature(&self) -> T {
        self.temperature
    }

    pub fn inverse_temperature(&self) -> T {
        self.inverse_temperature
    }

    pub fn boltzmann(&self) -> T {
        self.boltzmann
    }

    /// k_B·T in joules.
    pub fn thermal_energy(&self) -> T {
        self.boltzmann * self.temperature
    }
}

/// When to stop summing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation<T> {
    /// Relative bound required on the neglected tail, in (0, 1e-6].
    pub tolerance: T,
    /// Give up after this many terms.
    pub max_terms: u64,
}

impl<T: Scalar> Truncation<T> {
    pub fn new(tolerance: T, max_terms: u64) -> Result<Self, ParameterError> {
        if !(tolerance > T::zero() && tolerance <= T::lit(MAX_TOLERANCE)) {
            return Err(ParameterError::new("tolerance", tolerance, "must lie in (0, 1e-6]"));
        }
        if max_terms == 0 {
            return Err(ParameterError::new("max_terms", max_terms, "must be at least 1"));
        }
        Ok(Self { tolerance, max_terms })
    }
}

impl<T: Scalar> Default for Truncation<T> {
    fn default() -> Self {
        Self {
            tolerance: T::lit(DEFAULT_TOLERANCE),
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// ln Z together with how it was truncated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPartitionResult<T> {
    pub log_z: T,
    /// Number of levels summed.
    pub terms_used: u64,
    /// Upper bound on (neglected tail of Z) / (partial sum).
    pub tail_bound: T,
}

/// The term cap was hit before the remainder bound met the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("partition sum not converged after {max_terms} terms (relative tail bound {:e})", partial.tail_bound)]
pub struct TruncationError<T: Scalar> {
    pub max_terms: u64,
    /// Best partial result and its bound.
    pub partial: LogPartitionResult<T>,
}

/// Log partition function and mean energy of one box in one bath, from a
/// single pass over the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalState<T> {
    pub log_partition: LogPartitionResult<T>,
    /// U = −∂ln Z/∂β, joules.
    pub internal_energy: T,
    /// E₁, joules.
    pub ground_energy: T,
    /// θ₁ = βE₁.
    pub reduced_ground_gap: T,
    /// ln S = ln Z − ln g + θ₁.
    pub log_shifted_sum: T,
    /// β(U − E₁), the mean excitation in units of k_B T.
    pub mean_excitation: T,
    /// ln g.
    pub log_degeneracy: T,
}

impl<T: Scalar> CanonicalState<T> {
    pub fn log_z(&self) -> T {
        self.log_partition.log_z
    }
}

struct ShiftedSums<T> {
    /// Σ exp(−θ₁(n^α−1))
    weights: T,
    /// Σ θ₁(n^α−1)·exp(−θ₁(n^α−1))
    excitation: T,
    terms: u64,
    tail_bound: T,
}

/// Sums the shifted Boltzmann series until both the next term and the
/// integral remainder are below `tolerance` relative to the partial sum.
/// With `with_energy`, the energy-weighted series must also meet the bound.
fn shifted_sums<T: Scalar>(
    theta1: T,
    alpha: T,
    truncation: &Truncation<T>,
    with_energy: bool,
) -> Result<ShiftedSums<T>, ShiftedSums<T>> {
    let tol = truncation.tolerance;
    let mut weights = NeumaierSum::new();
    let mut excitation = NeumaierSum::new();
    weights.add(T::one());
    let mut n: u64 = 1;
    let mut tail_bound = T::infinity();
    loop {
        let next_exponent = theta1 * (T::from_count(n + 1).powf(alpha) - T::one());
        let next_weight = (-next_exponent).exp();
        let partial = weights.value();
        if next_weight < tol * partial {
            // Remainders in the shifted frame carry a factor e^{θ₁}.
            let ln_tail = ln_integral_tail_bound(theta1, alpha, n) + theta1;
            tail_bound = (ln_tail - partial.ln()).exp();
            let energy_converged = !with_energy || {
                let ln_energy_tail = ln_energy_tail_bound(theta1, alpha, n).map(|b| b + theta1);
                let energy_scale = theta1 * partial + excitation.value();
                ln_energy_tail.is_some_and(|b| (b - energy_scale.ln()).exp() <= tol)
            };
            if tail_bound <= tol && energy_converged {
                return Ok(ShiftedSums {
                    weights: partial,
                    excitation: excitation.value(),
                    terms: n,
                    tail_bound,
                });
            }
        }
        if n >= truncation.max_terms {
            return Err(ShiftedSums {
                weights: partial,
                excitation: excitation.value(),
                terms: n,
                tail_bound: tail_bound.min(
                    (ln_integral_tail_bound(theta1, alpha, n) + theta1 - partial.ln()).exp(),
                ),
            });
        }
        weights.add(next_weight);
        excitation.add(next_exponent * next_weight);
        n += 1;
    }
}

fn log_partition_from<T: Scalar>(spec: &WellSpec<T>, theta1: T, sums: &ShiftedSums<T>) -> LogPartitionResult<T> {
    let ln_g = T::from_count(u64::from(spec.degeneracy())).ln();
    LogPartitionResult {
        log_z: ln_g - theta1 + sums.weights.ln(),
        terms_used: sums.terms,
        tail_bound: sums.tail_bound,
    }
}

fn truncation_error<T: Scalar>(
    spec: &WellSpec<T>,
    theta1: T,
    truncation: &Truncation<T>,
    sums: ShiftedSums<T>,
) -> TruncationError<T> {
    TruncationError {
        max_terms: truncation.max_terms,
        partial: log_partition_from(spec, theta1, &sums),
    }
}

/// ln Z = ln Σ_{n≥1} g·exp(−βE_n).
pub fn log_partition<T: Scalar>(
    spec: &WellSpec<T>,
    ctx: &ThermalContext<T>,
    truncation: &Truncation<T>,
) -> Result<LogPartitionResult<T>, TruncationError<T>> {
    let theta1 = ground_reduced_gap(spec, ctx.inverse_temperature());
    shifted_sums(theta1, spec.alpha(), truncation, false)
        .map(|sums| log_partition_from(spec, theta1, &sums))
        .map_err(|sums| truncation_error(spec, theta1, truncation, sums))
}

/// ln Z and U from one pass, truncated so that both meet the tolerance.
pub fn canonical_state<T: Scalar>(
    spec: &WellSpec<T>,
    ctx: &ThermalContext<T>,
    truncation: &Truncation<T>,
) -> Result<CanonicalState<T>, TruncationError<T>> {
    let theta1 = ground_reduced_gap(spec, ctx.inverse_temperature());
    let sums = shifted_sums(theta1, spec.alpha(), truncation, true)
        .map_err(|sums| truncation_error(spec, theta1, truncation, sums))?;
    let log_partition = log_partition_from(spec, theta1, &sums);
    let mean_excitation = sums.excitation / sums.weights;
    let ground_energy = spec.ground_energy();
    Ok(CanonicalState {
        log_partition,
        internal_energy: ground_energy + mean_excitation * ctx.thermal_energy(),
        ground_energy,
        reduced_ground_gap: theta1,
        log_shifted_sum: sums.weights.ln(),
        mean_excitation,
        log_degeneracy: T::from_count(u64::from(spec.degeneracy())).ln(),
    })
}

/// U = Σ g E_n e^{−βE_n} / Z = E₁ + Σ(E_n−E₁)e^{−β(E_n−E₁)} / Σ e^{−β(E_n−E₁)}.
pub fn internal_energy<T: Scalar>(
    spec: &WellSpec<T>,
    ctx: &ThermalContext<T>,
    truncation: &Truncation<T>,
) -> Result<T, TruncationError<T>> {
    canonical_state(spec, ctx, truncation).map(|s| s.internal_energy)
}

/// F = −k_B T ln Z.
pub fn helmholtz_free_energy<T: Scalar>(
    spec: &WellSpec<T>,
    ctx: &ThermalContext<T>,
    truncation: &Truncation<T>,
) -> Result<T, TruncationError<T>> {
    log_partition(spec, ctx, truncation).map(|r| -ctx.thermal_energy() * r.log_z)
}

/// ln ∫_{n_cut}^∞ exp(−θ₁x^α) dx = ln[Γ(1/α, θ₁n_cut^α) / (α θ₁^{1/α})].
pub fn ln_integral_tail_bound<T: Scalar>(theta1: T, alpha: T, n_cut: u64) -> T {
    let s = alpha.recip();
    let x = theta1 * T::from_count(n_cut).powf(alpha);
    ln_upper_incomplete_gamma(s, x) - alpha.ln() - s * theta1.ln()
}

/// Upper bound on Σ_{n>n_cut} exp(−θ₁n^α).
pub fn integral_tail_bound<T: Scalar>(theta1: T, alpha: T, n_cut: u64) -> T {
    ln_integral_tail_bound(theta1, alpha, n_cut).exp()
}

/// ln of an upper bound on Σ_{n>n_cut} θ₁n^α·exp(−θ₁n^α), namely
/// Γ(1+1/α, θ₁n_cut^α)/(α θ₁^{1/α}). Only valid once the summand is
/// decreasing (θ₁n_cut^α ≥ 1); `None` before that.
fn ln_energy_tail_bound<T: Scalar>(theta1: T, alpha: T, n_cut: u64) -> Option<T> {
    let s = alpha.recip();
    let x = theta1 * T::from_count(n_cut).powf(alpha);
    (x >= T::one()).then(|| ln_upper_incomplete_gamma(s + T::one(), x) - alpha.ln() - s * theta1.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::energy_level;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn spec(alpha: f64, a: f64) -> WellSpec<f64> {
        WellSpec::electron(alpha, a).unwrap()
    }

    fn ctx(t: f64) -> ThermalContext<f64> {
        ThermalContext::new(t).unwrap()
    }

    /// Spec whose ground level sits at θ₁·k_B·T for the given bath.
    fn spec_with_gap(theta1: f64, alpha: f64, t: f64) -> WellSpec<f64> {
        let probe = spec(alpha, 1e-9);
        let theta_probe = ground_reduced_gap(&probe, ctx(t).inverse_temperature());
        // θ ∝ a^{−α}
        let a = 1e-9 * (theta_probe / theta1).powf(1.0 / alpha);
        spec(alpha, a)
    }

    fn trunc() -> Truncation<f64> {
        Truncation::default()
    }

    #[test]
    fn context_caches_inverse_temperature() {
        for t in [1e-3, 1.0, 2.0, 300.0] {
            let c = ctx(t);
            assert_relative_eq!(c.inverse_temperature() * BOLTZMANN * t, 1.0, max_relative = 1e-15);
        }
        assert!(ThermalContext::new(0.0).is_err());
        assert!(ThermalContext::new(-1.0).is_err());
    }

    #[test]
    fn truncation_settings_are_checked() {
        assert!(Truncation::new(0.0, 10).is_err());
        assert!(Truncation::new(1e-5, 10).is_err());
        assert!(Truncation::new(1e-10, 0).is_err());
        assert!(Truncation::new(1e-6, 1).is_ok());
    }

    #[test]
    fn ground_state_dominates_at_large_gap() {
        let s = spec_with_gap(50.0, 2.0, 1.0);
        let r = log_partition(&s, &ctx(1.0), &trunc()).unwrap();
        assert_relative_eq!(r.log_z, -50.0, max_relative = 1e-13);
        assert!(r.tail_bound <= 1e-14);
        assert!(r.terms_used >= 1);
    }

    #[test]
    fn internal_energy_saturates_at_ground_level() {
        let s = spec_with_gap(200.0, 2.0, 1.0);
        let u = internal_energy(&s, &ctx(1.0), &trunc()).unwrap();
        let e1 = energy_level(&s, 1).unwrap().energy;
        assert_relative_eq!(u, e1, max_relative = 1e-15);
    }

    #[test]
    fn divided_sum_equals_even_undivided_levels() {
        for (alpha, a) in [(2.0, 2e-8), (1.3, 2e-7), (0.7, 5e-6)] {
            let whole = spec(alpha, a);
            let c = ctx(2.0);
            let split = log_partition(&whole.with_divided(true), &c, &trunc()).unwrap();
            let beta = c.inverse_temperature();
            let e2 = energy_level(&whole, 2).unwrap().energy;
            let mut sum = NeumaierSum::new();
            for n in 1..200_000u64 {
                let e = energy_level(&whole, 2 * n).unwrap().energy;
                let w = (-beta * (e - e2)).exp();
                sum.add(w);
                if w < 1e-20 {
                    break;
                }
            }
            let even = -beta * e2 + sum.value().ln();
            assert_relative_eq!(split.log_z - std::f64::consts::LN_2, even, max_relative = 1e-13);
        }
    }

    #[test]
    fn matches_high_precision_direct_summation() {
        // 60-digit direct summation at m = 9.11e-31 kg, a = 20 nm, α = 2, χ = 1/2.
        let s = spec(2.0, 2e-8);
        let hot = ctx(2.0);
        let state = canonical_state(&s, &hot, &trunc()).unwrap();
        assert_relative_eq!(state.log_z(), -1.346_939_929_004_223_947_09, max_relative = 1e-12);
        assert_relative_eq!(state.internal_energy, 3.951_548_512_557_194_46e-23, max_relative = 1e-10);
        let lz = log_partition(&s, &hot, &trunc()).unwrap();
        assert_relative_eq!(lz.log_z, -1.346_939_929_004_223_947_09, max_relative = 1e-12);
        let f = helmholtz_free_energy(&s, &hot, &trunc()).unwrap();
        assert_relative_eq!(f, -2.0 * BOLTZMANN * -1.346_939_929_004_223_947_09, max_relative = 1e-12);

        let split_cold = canonical_state(&s.with_divided(true), &ctx(1.0), &trunc()).unwrap();
        assert_relative_eq!(split_cold.log_z(), -10.215_236_899_786_569_767_6, max_relative = 1e-12);
        assert_relative_eq!(split_cold.internal_energy, 1.506_064_957_214_662_124_59e-22, max_relative = 1e-10);
    }

    #[test]
    fn free_energy_limits() {
        let s = spec_with_gap(300.0, 1.5, 1.0);
        let c = ctx(1.0);
        let f = helmholtz_free_energy(&s, &c, &trunc()).unwrap();
        assert_relative_eq!(f, s.ground_energy(), max_relative = 1e-14);

        let s = spec(1.5, 3e-7);
        let fa = helmholtz_free_energy(&s, &c, &trunc()).unwrap();
        let fb = helmholtz_free_energy(&s.with_divided(true), &c, &trunc()).unwrap();
        let za = log_partition(&s, &c, &trunc()).unwrap().log_z;
        let zb = log_partition(&s.with_divided(true), &c, &trunc()).unwrap().log_z;
        assert_relative_eq!(fb - fa, -c.thermal_energy() * (zb - za), max_relative = 1e-12);
    }

    #[test]
    fn tail_bound_for_linear_exponent_is_closed_form() {
        for (theta, n) in [(0.5, 10u64), (0.01, 3), (2.0, 1), (3.0, 40)] {
            let expected = (-theta * n as f64).exp() / theta;
            assert_relative_eq!(integral_tail_bound(theta, 1.0, n), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn tail_bound_brackets_true_tail() {
        // θ₁ = 0.5, α = 1.5, cut at 10. High-precision values:
        // ∫ = 5.617947070667018516585708e-8, Σ_{n>10} = 1.297445436978349763610914e-8
        let bound = integral_tail_bound(0.5, 1.5, 10);
        assert_relative_eq!(bound, 5.617_947_070_667_018_5e-8, max_relative = 1e-12);
        let tail = 1.297_445_436_978_349_8e-8;
        assert!(bound >= tail && bound <= 10.0 * tail);
    }

    #[test]
    fn tail_bound_decreases_with_cut() {
        for (theta, alpha) in [(0.5, 1.5), (1e-3, 2.0), (20.0, 0.3)] {
            let mut prev = f64::INFINITY;
            for n in 1..200 {
                let b = ln_integral_tail_bound(theta, alpha, n);
                assert!(b < prev, "θ={theta} α={alpha} n={n}");
                prev = b;
            }
        }
    }

    #[test]
    fn term_cap_surfaces_partial_result() {
        let s = spec(2.0, 2e-7);
        let tight = Truncation { tolerance: 1e-14, max_terms: 10 };
        let err = log_partition(&s, &ctx(2.0), &tight).unwrap_err();
        assert_eq!(err.max_terms, 10);
        assert_eq!(err.partial.terms_used, 10);
        assert!(err.partial.tail_bound > 1e-14);
        assert!(err.partial.log_z.is_finite());
        assert!(internal_energy(&s, &ctx(2.0), &tight).is_err());
    }

    #[test]
    fn near_classical_regime_converges() {
        // θ₁ ≈ 1e-4: a few hundred terms.
        let s = spec_with_gap(1e-4, 2.0, 1.0);
        let r = log_partition(&s, &ctx(1.0), &trunc()).unwrap();
        // Z ≈ ½√(π/θ) − ½
        let classical = (0.5 * (std::f64::consts::PI / 1e-4).sqrt() - 0.5).ln();
        assert_relative_eq!(r.log_z, classical, max_relative = 1e-6);
        assert!(r.terms_used > 100);
    }

    #[test]
    fn doubling_terms_changes_little() {
        for (alpha, a, t) in [(2.0, 5e-8, 2.0), (1.2, 4e-6, 1.0), (0.8, 1e-3, 2.0)] {
            let s = spec(alpha, a);
            let c = ctx(t);
            let r = log_partition(&s, &c, &trunc()).unwrap();
            let theta1 = ground_reduced_gap(&s, c.inverse_temperature());
            let fixed = |terms: u64| {
                let mut acc = NeumaierSum::new();
                for n in 1..=terms {
                    acc.add((-theta1 * ((n as f64).powf(alpha) - 1.0)).exp());
                }
                -theta1 + acc.value().ln()
            };
            let shifted_n = fixed(r.terms_used);
            let shifted_2n = fixed(2 * r.terms_used);
            assert!((shifted_2n - shifted_n).abs() < 2.0 * 1e-14, "α={alpha} a={a}");
            assert!((r.log_z - shifted_2n).abs() < 2.0 * 1e-14 * r.log_z.abs().max(1.0));
        }
    }

    #[test]
    fn single_precision_partition_function() {
        let s = WellSpec::<f32>::electron(2.0, 2e-8).unwrap();
        let c = ThermalContext::<f32>::new(2.0).unwrap();
        let t = Truncation { tolerance: 1e-7, max_terms: 1_000 };
        let r = log_partition(&s, &c, &t).unwrap();
        assert!((r.log_z - (-1.346_939_9)).abs() < 1e-5);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn log_z_decreases_with_beta(alpha in 0.3f64..=2.0, a_nm in 0.5f64..300.0, t in 0.2f64..10.0) {
            let s = spec(alpha, a_nm * 1e-9);
            let hot = log_partition(&s, &ctx(t * 1.05), &trunc()).unwrap().log_z;
            let cold = log_partition(&s, &ctx(t), &trunc()).unwrap().log_z;
            prop_assert!(cold < hot);
        }

        #[test]
        fn energy_is_at_least_ground_level(alpha in 0.3f64..=2.0, a_nm in 0.5f64..300.0, t in 0.2f64..10.0, divided: bool) {
            let s = spec(alpha, a_nm * 1e-9).with_divided(divided);
            let state = canonical_state(&s, &ctx(t), &trunc()).unwrap();
            prop_assert!(state.internal_energy >= state.ground_energy);
            prop_assert!(state.log_partition.tail_bound <= 1e-14);
        }

        #[test]
        fn energy_is_minus_log_z_slope(alpha in 0.6f64..=2.0, a_nm in 0.5f64..50.0, t in 0.5f64..4.0, divided: bool) {
            let s = spec(alpha, a_nm * 1e-9).with_divided(divided);
            let c = ctx(t);
            let beta = c.inverse_temperature();
            let delta = 1e-6 * beta;
            let at = |b: f64| {
                let c = ThermalContext::from_inverse_temperature(b, BOLTZMANN).unwrap();
                log_partition(&s, &c, &trunc()).unwrap().log_z
            };
            let slope = -(at(beta + delta) - at(beta - delta)) / (2.0 * delta);
            let u = internal_energy(&s, &c, &trunc()).unwrap();
            prop_assert!(((slope - u) / u).abs() < 1e-5, "slope {} vs U {}", slope, u);
        }
    }
}
