//! Thermodynamics of a single-particle quantum Szilard engine whose kinetic
//! energy follows the space-fractional law D_α|p|^α.
//!
//! The core is generic over the floating-point type ([`Scalar`]); the
//! aliases below fix it to `f64`, which is what the sweep and CLI use.
//!
//! ```
//! use fractional_szilard::{run_cycle, CycleConfig, WellSpec};
//!
//! let well = WellSpec::electron(1.5, 20e-9).unwrap();
//! let cycle = CycleConfig::new(well, 2.0, 1.0).unwrap();
//! let result = run_cycle(&cycle).unwrap();
//! assert!(result.work > 0.0);
//! ```

// Frozen reference values carry more digits than f64 holds; negated
// comparisons deliberately treat NaN as failure.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod app;
pub mod constants;
pub mod cycle;
pub mod error;
pub mod numerics;
mod scalar;
pub mod spectrum;
pub mod thermo;

pub use constants::PhysicalConstants;
pub use cycle::{
    efficiency, heat_isochoric, heat_isothermal_insertion, heat_isothermal_removal, run_cycle, work, Corner,
    CycleError, IsochoricStage,
};
pub use error::ParameterError;
pub use scalar::Scalar;
pub use spectrum::{d_alpha, energy_level, ground_reduced_gap, reduced_gap, EnergyLevel};
pub use thermo::{
    canonical_state, helmholtz_free_energy, integral_tail_bound, internal_energy, log_partition,
    CanonicalState, LogPartitionResult, Truncation, TruncationError,
};

pub type WellSpec<T = f64> = spectrum::WellSpec<T>;
pub type ThermalContext<T = f64> = thermo::ThermalContext<T>;
pub type CycleConfig<T = f64> = cycle::CycleConfig<T>;
pub type CycleResult<T = f64> = cycle::CycleResult<T>;

pub type WellSpec32 = spectrum::WellSpec<f32>;
pub type ThermalContext32 = thermo::ThermalContext<f32>;
pub type CycleConfig32 = cycle::CycleConfig<f32>;
pub type CycleResult32 = cycle::CycleResult<f32>;
