use std::f64::consts::LN_2;
use std::fmt;

use crate::constants::PhysicalConstants;
use crate::cycle::{run_cycle, CycleConfig};
use crate::numerics::NeumaierSum;
use crate::spectrum::{energy_level, ground_reduced_gap, WellSpec};
use crate::thermo::{internal_energy, log_partition, ThermalContext, Truncation, DEFAULT_MAX_TERMS};

use super::config::{CycleTemplate, SweepConfig};
use super::reference::REFERENCE_POINTS;
use super::sweep::{run_sweep, SweepStatus};

/// Knobs for exercising the validator itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationOptions {
    pub constants: PhysicalConstants<f64>,
    pub max_terms: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        Self {
            constants: PhysicalConstants::si(),
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    pub limit: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}  {:<26} worst {:>10.3e}  limit {:>9.3e}  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.worst,
                c.limit,
                c.detail
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct Tracker {
    worst: f64,
    failures: usize,
    count: usize,
}

impl Tracker {
    fn new() -> Self {
        Self {
            worst: 0.0,
            failures: 0,
            count: 0,
        }
    }

    /// Records a value that must stay at or below `limit`; NaN counts as failure.
    fn observe(&mut self, value: f64, limit: f64) {
        self.count += 1;
        if value.is_nan() {
            self.worst = f64::NAN;
            self.failures += 1;
            return;
        }
        if !self.worst.is_nan() {
            self.worst = self.worst.max(value);
        }
        if !(value <= limit) {
            self.failures += 1;
        }
    }

    fn fail(&mut self) {
        self.count += 1;
        self.failures += 1;
    }

    fn outcome(self, name: &'static str, limit: f64, what: &str) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: self.failures == 0 && self.count > 0,
            worst: self.worst,
            limit,
            detail: format!("{} {what}, {} out of bounds", self.count, self.failures),
        }
    }
}

fn rel(x: f64, reference: f64) -> f64 {
    ((x - reference) / reference).abs()
}

fn template(options: &ValidationOptions) -> CycleTemplate {
    CycleTemplate {
        max_terms: options.max_terms,
        constants: options.constants,
        ..CycleTemplate::default()
    }
}

fn well(options: &ValidationOptions, alpha: f64, a_nm: f64) -> WellSpec<f64> {
    WellSpec::electron(alpha, a_nm * 1e-9)
        .expect("validation geometry is valid")
        .with_constants(options.constants)
}

fn truncation(options: &ValidationOptions) -> Truncation<f64> {
    Truncation {
        max_terms: options.max_terms,
        ..Truncation::default()
    }
}

/// Deterministic points filling [0, 1)² (additive recurrence on the plastic number).
fn quasi_random(count: usize) -> impl Iterator<Item = (f64, f64)> {
    const G1: f64 = 0.754_877_666_246_692_7;
    const G2: f64 = 0.569_840_290_998_053_3;
    (1..=count).map(|i| ((0.5 + G1 * i as f64).fract(), (0.5 + G2 * i as f64).fract()))
}

fn check_reference(options: &ValidationOptions) -> Vec<CheckOutcome> {
    let template = template(options);
    let mut log_z = Tracker::new();
    let mut energy = Tracker::new();
    let mut work = Tracker::new();
    let mut eta = Tracker::new();
    for p in &REFERENCE_POINTS {
        let result = template.cycle(p.alpha, p.a_nm).ok().and_then(|c| run_cycle(&c).ok());
        let Some(r) = result else {
            log_z.fail();
            energy.fail();
            work.fail();
            eta.fail();
            continue;
        };
        for (got, want) in [r.log_z_a, r.log_z_b, r.log_z_c, r.log_z_d].into_iter().zip(p.log_z) {
            log_z.observe(rel(got, want), 1e-12);
        }
        for (got, want) in [r.u_a, r.u_b, r.u_c, r.u_d].into_iter().zip(p.internal_energy) {
            energy.observe(rel(got, want), 1e-10);
        }
        work.observe(rel(r.work, p.work), 1e-10);
        match (r.efficiency, p.efficiency) {
            (Some(got), Some(want)) => eta.observe(rel(got, want), 1e-10),
            (None, None) => eta.observe(0.0, 1e-10),
            _ => eta.fail(),
        }
    }
    vec![
        log_z.outcome("reference ln Z", 1e-12, "corner values"),
        energy.outcome("reference U", 1e-10, "corner values"),
        work.outcome("reference W", 1e-10, "cycles"),
        eta.outcome("reference efficiency", 1e-10, "cycles"),
    ]
}

fn check_default_sweep(options: &ValidationOptions) -> Vec<CheckOutcome> {
    let cfg = SweepConfig {
        base: template(options),
        ..SweepConfig::default()
    };
    let kt_hot = options.constants.boltzmann * cfg.base.t_hot_k;
    let carnot = 1.0 - cfg.base.t_cold_k / cfg.base.t_hot_k;
    let records = run_sweep(&cfg);

    let mut converged = Tracker::new();
    let mut first_law = Tracker::new();
    let mut carnot_bound = Tracker::new();
    for r in &records {
        match r.status {
            SweepStatus::TruncationFailed => converged.observe(r.tail_bound_max, cfg.base.tolerance),
            SweepStatus::FirstLawViolation => first_law.fail(),
            _ => converged.observe(r.tail_bound_max, cfg.base.tolerance),
        }
        if let Some(c) = &r.cycle {
            first_law.observe(c.first_law_residual.abs() / c.work.abs().max(kt_hot), 1e-10);
            if let Some(eta) = c.efficiency {
                carnot_bound.observe(eta - carnot, 1e-9);
            }
        }
    }
    vec![
        converged.outcome("sweep convergence", cfg.base.tolerance, "grid points"),
        first_law.outcome("first law", 1e-10, "grid points"),
        carnot_bound.outcome("Carnot bound", 1e-9, "engine points"),
    ]
}

fn check_limits(options: &ValidationOptions) -> Vec<CheckOutcome> {
    let kb = options.constants.boltzmann;
    let trunc = truncation(options);

    let mut zero = Tracker::new();
    for alpha in [2.0, 1.5, 0.9] {
        for a_nm in [2.0, 20.0, 80.0] {
            let t = 1.5;
            let r = CycleConfig::new(well(options, alpha, a_nm), t, t)
                .map(|c| c.with_truncation(trunc))
                .ok()
                .and_then(|c| run_cycle(&c).ok());
            match r {
                Some(r) => {
                    let worst = r.work.abs().max(r.q_bc.abs()).max(r.q_da.abs());
                    zero.observe(worst / (kb * t), 1e-12);
                }
                None => zero.fail(),
            }
        }
    }

    let mut szilard = Tracker::new();
    let (th, tc) = (2.0, 1.0);
    let cold = ThermalContext::with_boltzmann(tc, kb).expect("positive temperature");
    for alpha in [2.0, 1.8, 1.5, 1.2, 0.8] {
        for target in [100.0, 300.0, 1e4] {
            let probe = well(options, alpha, 1.0);
            let theta_probe = ground_reduced_gap(&probe, cold.inverse_temperature());
            let a_nm = (theta_probe / target).powf(1.0 / alpha);
            let r = CycleConfig::new(well(options, alpha, a_nm), th, tc)
                .map(|c| c.with_truncation(trunc))
                .ok()
                .and_then(|c| run_cycle(&c).ok());
            match r {
                Some(r) => szilard.observe(rel(r.work, kb * (th - tc) * LN_2), 1e-4),
                None => szilard.fail(),
            }
        }
    }

    let mut classical = Tracker::new();
    for a_nm in [500.0, 1000.0, 2000.0] {
        let r = CycleConfig::new(well(options, 2.0, a_nm), th, tc)
            .map(|c| c.with_truncation(trunc))
            .ok()
            .and_then(|c| run_cycle(&c).ok());
        match r {
            Some(r) => classical.observe(r.work.abs() / (kb * th), 0.02),
            None => classical.fail(),
        }
    }

    vec![
        zero.outcome("equal-bath cycle", 1e-12, "cycles (|W|,|Q_BC|,|Q_DA| / kT)"),
        szilard.outcome("Szilard limit", 1e-4, "deep-quantum cycles"),
        classical.outcome("classical limit", 0.02, "wide wells (|W| / kT_h)"),
    ]
}

fn check_thermo(options: &ValidationOptions) -> Vec<CheckOutcome> {
    let kb = options.constants.boltzmann;
    let trunc = truncation(options);

    let mut slope = Tracker::new();
    for (i, (u, v)) in quasi_random(30).enumerate() {
        let alpha = 0.6 + 1.4 * u;
        let a_nm = 0.5 + 49.5 * v;
        let t = if i % 2 == 0 { 1.0 } else { 2.0 };
        let spec = well(options, alpha, a_nm).with_divided(i % 3 == 0);
        let ctx = ThermalContext::with_boltzmann(t, kb).expect("positive temperature");
        let beta = ctx.inverse_temperature();
        let delta = 1e-6 * beta;
        let ln_z = |b: f64| {
            ThermalContext::from_inverse_temperature(b, kb)
                .ok()
                .and_then(|c| log_partition(&spec, &c, &trunc).ok())
                .map(|r| r.log_z)
        };
        match (ln_z(beta + delta), ln_z(beta - delta), internal_energy(&spec, &ctx, &trunc).ok()) {
            (Some(up), Some(down), Some(energy)) => {
                slope.observe(rel(-(up - down) / (2.0 * delta), energy), 1e-5)
            }
            _ => slope.fail(),
        }
    }

    let mut degeneracy = Tracker::new();
    for (alpha, a_nm) in [(2.0, 20.0), (2.0, 150.0), (1.5, 300.0), (1.2, 900.0)] {
        let spec = well(options, alpha, a_nm);
        let ctx = ThermalContext::with_boltzmann(2.0, kb).expect("positive temperature");
        let beta = ctx.inverse_temperature();
        let Ok(split) = log_partition(&spec.with_divided(true), &ctx, &trunc) else {
            degeneracy.fail();
            continue;
        };
        let level = |k: u64| energy_level(&spec, k).expect("k ≥ 1").energy;
        let e2 = level(2);
        let mut sum = NeumaierSum::new();
        for n in 1..=1_000_000u64 {
            let w = (-beta * (level(2 * n) - e2)).exp();
            sum.add(w);
            if w < 1e-18 * sum.value() {
                break;
            }
        }
        let even = -beta * e2 + sum.value().ln();
        degeneracy.observe(rel(split.log_z - LN_2, even), 1e-13);
    }

    let mut reduction = Tracker::new();
    let hbar = options.constants.reduced_planck();
    for a_nm in [0.5, 20.0, 500.0] {
        let spec = well(options, 2.0, a_nm);
        let a = a_nm * 1e-9;
        for n in [1u64, 2, 17, 1000] {
            let nf = n as f64;
            let expected = nf * nf * std::f64::consts::PI.powi(2) * hbar * hbar / (8.0 * spec.mass() * a * a);
            let got = energy_level(&spec, n).expect("n ≥ 1").energy;
            reduction.observe(rel(got, expected), 1e-14);
        }
    }

    vec![
        slope.outcome("dlnZ/dβ = −U", 1e-5, "points"),
        degeneracy.outcome("degeneracy factor", 1e-13, "points"),
        reduction.outcome("α = 2 spectrum", 1e-14, "levels"),
    ]
}

/// Runs the reference comparison and every invariant suite.
pub fn validate(options: &ValidationOptions) -> ValidationReport {
    let mut checks = Vec::new();
    checks.extend(check_reference(options));
    checks.extend(check_default_sweep(options));
    checks.extend(check_limits(options));
    checks.extend(check_thermo(options));
    ValidationReport { checks }
}
