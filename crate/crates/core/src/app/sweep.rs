use rayon::prelude::*;

use crate::cycle::{run_cycle, CycleError, CycleResult};

use super::config::SweepConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepStatus {
    Ok,
    TruncationFailed,
    EtaUndefined,
    /// The first-law audit tripped; indicates a numerical defect.
    FirstLawViolation,
}

impl SweepStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepStatus::Ok => "ok",
            SweepStatus::TruncationFailed => "truncation-failed",
            SweepStatus::EtaUndefined => "eta-undefined",
            SweepStatus::FirstLawViolation => "first-law-violation",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            SweepStatus::Ok,
            SweepStatus::TruncationFailed,
            SweepStatus::EtaUndefined,
            SweepStatus::FirstLawViolation,
        ]
        .into_iter()
        .find(|status| status.as_str() == s)
    }
}

/// One (α, a) grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub alpha: f64,
    pub a_nm: f64,
    pub status: SweepStatus,
    /// Full cycle when every corner converged.
    pub cycle: Option<CycleResult<f64>>,
    pub terms_used_max: u64,
    pub tail_bound_max: f64,
}

impl SweepRecord {
    fn evaluate(cfg: &SweepConfig, alpha: f64, a_nm: f64) -> Self {
        let cycle_cfg = cfg
            .base
            .cycle(alpha, a_nm)
            .expect("sweep grid validated when the config was built");
        let (status, cycle, terms_used_max, tail_bound_max) = match run_cycle(&cycle_cfg) {
            Ok(r) => {
                let status = if r.efficiency.is_some() {
                    SweepStatus::Ok
                } else {
                    SweepStatus::EtaUndefined
                };
                (status, Some(r), r.terms_used_max, r.tail_bound_max)
            }
            Err(CycleError::Truncation { source, .. }) => (
                SweepStatus::TruncationFailed,
                None,
                source.partial.terms_used,
                source.partial.tail_bound,
            ),
            Err(CycleError::FirstLaw { .. }) => (SweepStatus::FirstLawViolation, None, 0, f64::NAN),
        };
        Self {
            alpha,
            a_nm,
            status,
            cycle,
            terms_used_max,
            tail_bound_max,
        }
    }

    pub fn work(&self) -> Option<f64> {
        self.cycle.map(|c| c.work)
    }

    pub fn efficiency(&self) -> Option<f64> {
        self.cycle.and_then(|c| c.efficiency)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

/// One record per (α, a), α-major in config order, a in grid order.
pub fn run_sweep(cfg: &SweepConfig) -> Vec<SweepRecord> {
    run_sweep_with(cfg, Execution::default())
}

pub fn run_sweep_with(cfg: &SweepConfig, execution: Execution) -> Vec<SweepRecord> {
    let points: Vec<(f64, f64)> = cfg
        .alpha_grid
        .iter()
        .flat_map(|&alpha| cfg.a_grid_nm.iter().map(move |&a| (alpha, a)))
        .collect();
    match execution {
        Execution::Serial => points
            .iter()
            .map(|&(alpha, a)| SweepRecord::evaluate(cfg, alpha, a))
            .collect(),
        Execution::Parallel => points
            .par_iter()
            .map(|&(alpha, a)| SweepRecord::evaluate(cfg, alpha, a))
            .collect(),
    }
}
