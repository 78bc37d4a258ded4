use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fractional_szilard::app::{self, Execution, SweepStatus, ValidationOptions};
use fractional_szilard::constants::ELECTRON_MASS_ROUNDED;
use fractional_szilard::thermo::{DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE};
use fractional_szilard::{
    canonical_state, ground_reduced_gap, run_cycle, spectrum, CycleConfig, ThermalContext, Truncation, WellSpec,
};

/// Space-fractional quantum Szilard engine: spectra, partition functions,
/// cycle work and efficiency.
#[derive(Parser)]
#[command(name = "fqhe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Particle {
    /// Particle mass, kg
    #[arg(long, default_value_t = ELECTRON_MASS_ROUNDED)]
    mass_kg: f64,
    /// Kinetic coefficient parameter χ
    #[arg(long, default_value_t = 0.5)]
    chi: f64,
}

#[derive(Args, Clone, Copy)]
struct Summation {
    /// Relative tail tolerance, in (0, 1e-6]
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Term cap for each partition sum
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lowest energy levels of a box
    Spectrum {
        #[arg(long)]
        alpha: f64,
        /// Half-width a, nm
        #[arg(long)]
        a_nm: f64,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        /// Barrier inserted (twofold degenerate levels)
        #[arg(long)]
        divided: bool,
        #[command(flatten)]
        particle: Particle,
    },
    /// ln Z, U and F of one box in one bath
    Partition {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        a_nm: f64,
        #[arg(long)]
        temp_k: f64,
        #[arg(long)]
        divided: bool,
        #[command(flatten)]
        particle: Particle,
        #[command(flatten)]
        summation: Summation,
    },
    /// Heats, work and efficiency of one cycle
    Cycle {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        a_nm: f64,
        #[arg(long, default_value_t = 2.0)]
        th_k: f64,
        #[arg(long, default_value_t = 1.0)]
        tc_k: f64,
        #[command(flatten)]
        particle: Particle,
        #[command(flatten)]
        summation: Summation,
    },
    /// Evaluate a grid of (α, a) and write CSV
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Overrides output_path from the config
        #[arg(long)]
        out: Option<PathBuf>,
        /// Evaluate grid points on one thread
        #[arg(long)]
        serial: bool,
    },
    /// Check against reference values and run the invariant suites
    Validate,
}

enum Failure {
    Config(String),
    Numerical(String),
}

impl From<fractional_szilard::ParameterError> for Failure {
    fn from(e: fractional_szilard::ParameterError) -> Self {
        Failure::Config(e.to_string())
    }
}

fn well(particle: Particle, alpha: f64, a_nm: f64) -> Result<WellSpec, Failure> {
    Ok(WellSpec::new(particle.mass_kg, alpha, particle.chi, a_nm * 1e-9)?)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_owned(), |v| format!("{v:.16e}"))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Spectrum {
            alpha,
            a_nm,
            n_max,
            divided,
            particle,
        } => {
            let spec = well(particle, alpha, a_nm)?.with_divided(divided);
            println!("n,energy_J,degeneracy");
            for level in spectrum::levels(&spec, n_max) {
                println!("{},{:.16e},{}", level.n, level.energy, level.degeneracy);
            }
        }
        Command::Partition {
            alpha,
            a_nm,
            temp_k,
            divided,
            particle,
            summation,
        } => {
            let spec = well(particle, alpha, a_nm)?.with_divided(divided);
            let ctx = ThermalContext::new(temp_k)?;
            let trunc = Truncation::new(summation.tolerance, summation.max_terms)?;
            let state = canonical_state(&spec, &ctx, &trunc).map_err(|e| Failure::Numerical(e.to_string()))?;
            println!("theta1 = {:.16e}", ground_reduced_gap(&spec, ctx.inverse_temperature()));
            println!("log_z = {:.16e}", state.log_z());
            println!("terms_used = {}", state.log_partition.terms_used);
            println!("tail_bound = {:.3e}", state.log_partition.tail_bound);
            println!("internal_energy_J = {:.16e}", state.internal_energy);
            println!("free_energy_J = {:.16e}", -ctx.thermal_energy() * state.log_z());
        }
        Command::Cycle {
            alpha,
            a_nm,
            th_k,
            tc_k,
            particle,
            summation,
        } => {
            let cfg = CycleConfig::new(well(particle, alpha, a_nm)?, th_k, tc_k)?
                .with_truncation(Truncation::new(summation.tolerance, summation.max_terms)?);
            let r = run_cycle(&cfg).map_err(|e| Failure::Numerical(e.to_string()))?;
            for (name, value) in [
                ("log_z_a", r.log_z_a),
                ("log_z_b", r.log_z_b),
                ("log_z_c", r.log_z_c),
                ("log_z_d", r.log_z_d),
                ("u_a_J", r.u_a),
                ("u_b_J", r.u_b),
                ("u_c_J", r.u_c),
                ("u_d_J", r.u_d),
                ("q_ab_J", r.q_ab),
                ("q_bc_J", r.q_bc),
                ("q_cd_J", r.q_cd),
                ("q_da_J", r.q_da),
                ("work_J", r.work),
                ("first_law_residual_J", r.first_law_residual),
            ] {
                println!("{name} = {value:.16e}");
            }
            println!("efficiency = {}", fmt_opt(r.efficiency));
            println!("work_over_kTh = {:.16e}", r.work / cfg.hot().thermal_energy());
        }
        Command::Sweep { config, out, serial } => {
            let mut cfg = app::load_config(&config).map_err(|e| Failure::Config(e.to_string()))?;
            if let Some(out) = out {
                cfg.output_path = out;
            }
            let execution = if serial { Execution::Serial } else { Execution::Parallel };
            let records = app::run_sweep_with(&cfg, execution);
            app::write_csv(&records, &cfg.output_path).map_err(|e| Failure::Config(e.to_string()))?;
            let count = |s: SweepStatus| records.iter().filter(|r| r.status == s).count();
            eprintln!(
                "{} rows -> {} (ok {}, eta-undefined {}, truncation-failed {}, first-law-violation {})",
                records.len(),
                cfg.output_path.display(),
                count(SweepStatus::Ok),
                count(SweepStatus::EtaUndefined),
                count(SweepStatus::TruncationFailed),
                count(SweepStatus::FirstLawViolation),
            );
        }
        Command::Validate => {
            let report = app::validate(&ValidationOptions::default());
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Numerical("validation failed".to_owned()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
