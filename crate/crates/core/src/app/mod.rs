//! Sweeps over well width and fractional exponent, their configuration
//! file, CSV output, and the self-check run by `fqhe validate`.

mod config;
mod output;
mod reference;
mod sweep;
mod validate;

pub use config::{load_config, parse_config, AGrid, ConfigError, CycleTemplate, Spacing, SweepConfig};
pub use output::{read_csv, write_csv, write_csv_to, CsvRow, OutputError, CSV_HEADER};
pub use reference::{ReferencePoint, REFERENCE_POINTS};
pub use sweep::{run_sweep, run_sweep_with, Execution, SweepRecord, SweepStatus};
pub use validate::{validate, CheckOutcome, ValidationOptions, ValidationReport};
