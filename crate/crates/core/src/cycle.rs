//! The four-stroke Szilard/Stirling cycle.
//!
//! ```text
//!   A (undivided, T_h) --insert barrier--> B (divided, T_h)
//!   ^                                        |
//!   | isochoric heating         isochoric cooling
//!   |                                        v
//!   D (undivided, T_c) <--remove barrier-- C (divided, T_c)
//! ```
//!
//! Q > 0 is heat absorbed by the particle, W > 0 is work extracted. Barrier
//! insertion/removal and bath coupling cost nothing.
//!
//! The heats and the work are assembled from the shifted quantities of each
//! corner (see [`CanonicalState`]). Corners A/D share E₁ and so do B/C, so
//! every ground-level contribution cancels analytically:
//!
//! ```text
//! Q_AB = k T_h [ β_h(U_B−E₁ᴮ) − β_h(U_A−E₁ᴬ) + ln(g_B/g_A) + ln(S_B/S_A) ]
//! W    = k T_h [ ln(g_B/g_A) + ln(S_B/S_A) ] − k T_c [ ln(g_C/g_D) + ln(S_C/S_D) ]
//! ```
//!
//! which is the same quantity as U_B − U_A + k T_h ln(Z_B/Z_A), but without
//! subtracting two numbers of size βE₁ (up to ~1e8 at sub-nanometre widths).

use thiserror::Error;

use crate::error::ParameterError;
use crate::scalar::Scalar;
use crate::spectrum::WellSpec;
use crate::thermo::{canonical_state, CanonicalState, ThermalContext, Truncation, TruncationError};

/// First-law residual allowed, relative to max(|W|, k_B T_h).
pub const FIRST_LAW_RELATIVE_BOUND: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    A,
    B,
    C,
    D,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::A, Corner::B, Corner::C, Corner::D];

    pub fn is_divided(self) -> bool {
        matches!(self, Corner::B | Corner::C)
    }

    pub fn is_hot(self) -> bool {
        matches!(self, Corner::A | Corner::B)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsochoricStage {
    /// B → C, divided box moved from the hot to the cold bath.
    BC,
    /// D → A, undivided box moved from the cold to the hot bath.
    DA,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleConfig<T> {
    well: WellSpec<T>,
    hot: ThermalContext<T>,
    cold: ThermalContext<T>,
    truncation: Truncation<T>,
}

impl<T: Scalar> CycleConfig<T> {
    /// Cycle on `well` (its divided flag is ignored) between baths at
    /// `hot_temperature` ≥ `cold_temperature` > 0.
    pub fn new(well: WellSpec<T>, hot_temperature: T, cold_temperature: T) -> Result<Self, ParameterError> {
        let kb = well.constants().boltzmann;
        let hot = ThermalContext::with_boltzmann(hot_temperature, kb)?;
        let cold = ThermalContext::with_boltzmann(cold_temperature, kb)?;
        if hot_temperature < cold_temperature {
            return Err(ParameterError::new(
                "hot_temperature",
                hot_temperature,
                "must not be below the cold bath temperature",
            ));
        }
        Ok(Self {
            well: well.with_divided(false),
            hot,
            cold,
            truncation: Truncation::default(),
        })
    }

    pub fn with_truncation(mut self, truncation: Truncation<T>) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn well(&self) -> &WellSpec<T> {
        &self.well
    }

    pub fn hot(&self) -> &ThermalContext<T> {
        &self.hot
    }

    pub fn cold(&self) -> &ThermalContext<T> {
        &self.cold
    }

    pub fn truncation(&self) -> &Truncation<T> {
        &self.truncation
    }

    pub fn corner_spec(&self, corner: Corner) -> WellSpec<T> {
        self.well.with_divided(corner.is_divided())
    }

    pub fn corner_bath(&self, corner: Corner) -> &ThermalContext<T> {
        if corner.is_hot() {
            &self.hot
        } else {
            &self.cold
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum CycleError<T: Scalar> {
    #[error("corner {corner:?}: {source}")]
    Truncation {
        corner: Corner,
        #[source]
        source: TruncationError<T>,
    },
    #[error("first-law residual {residual:e} J exceeds {bound:e} J")]
    FirstLaw { residual: T, bound: T },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleResult<T> {
    pub q_ab: T,
    pub q_bc: T,
    pub q_cd: T,
    pub q_da: T,
    pub u_a: T,
    pub u_b: T,
    pub u_c: T,
    pub u_d: T,
    pub log_z_a: T,
    pub log_z_b: T,
    pub log_z_c: T,
    pub log_z_d: T,
    pub work: T,
    /// `None` outside the engine regime (W ≤ 0 or no net heat input).
    pub efficiency: Option<T>,
    /// W − (Q_AB + Q_BC + Q_CD + Q_DA)
    pub first_law_residual: T,
    pub terms_used_max: u64,
    pub tail_bound_max: T,
}

fn corner_state<T: Scalar>(cfg: &CycleConfig<T>, corner: Corner) -> Result<CanonicalState<T>, CycleError<T>> {
    canonical_state(&cfg.corner_spec(corner), cfg.corner_bath(corner), &cfg.truncation)
        .map_err(|source| CycleError::Truncation { corner, source })
}

/// Q for an isothermal barrier move `from` → `to` at thermal energy `kt`.
fn isothermal_heat<T: Scalar>(from: &CanonicalState<T>, to: &CanonicalState<T>, kt: T) -> T {
    kt * ((to.mean_excitation - from.mean_excitation)
        + (to.log_degeneracy - from.log_degeneracy)
        + (to.log_shifted_sum - from.log_shifted_sum))
}

/// Q for a bath swap at fixed geometry: U_to − U_from with the common E₁ removed.
fn isochoric_heat<T: Scalar>(from: &CanonicalState<T>, kt_from: T, to: &CanonicalState<T>, kt_to: T) -> T {
    kt_to * to.mean_excitation - kt_from * from.mean_excitation
}

/// k T ln(Z_to/Z_from) with the E₁ terms removed.
fn free_energy_drop<T: Scalar>(from: &CanonicalState<T>, to: &CanonicalState<T>, kt: T) -> T {
    kt * ((to.log_degeneracy - from.log_degeneracy) + (to.log_shifted_sum - from.log_shifted_sum))
}

/// Q_AB = U_B − U_A + k_B T_h ln(Z_B/Z_A).
pub fn heat_isothermal_insertion<T: Scalar>(cfg: &CycleConfig<T>) -> Result<T, CycleError<T>> {
    let a = corner_state(cfg, Corner::A)?;
    let b = corner_state(cfg, Corner::B)?;
    Ok(isothermal_heat(&a, &b, cfg.hot.thermal_energy()))
}

/// Q_CD = U_D − U_C + k_B T_c ln(Z_D/Z_C).
pub fn heat_isothermal_removal<T: Scalar>(cfg: &CycleConfig<T>) -> Result<T, CycleError<T>> {
    let c = corner_state(cfg, Corner::C)?;
    let d = corner_state(cfg, Corner::D)?;
    Ok(isothermal_heat(&c, &d, cfg.cold.thermal_energy()))
}

/// Q_BC = U_C − U_B or Q_DA = U_A − U_D.
pub fn heat_isochoric<T: Scalar>(cfg: &CycleConfig<T>, stage: IsochoricStage) -> Result<T, CycleError<T>> {
    let (kh, kc) = (cfg.hot.thermal_energy(), cfg.cold.thermal_energy());
    Ok(match stage {
        IsochoricStage::BC => {
            isochoric_heat(&corner_state(cfg, Corner::B)?, kh, &corner_state(cfg, Corner::C)?, kc)
        }
        IsochoricStage::DA => {
            isochoric_heat(&corner_state(cfg, Corner::D)?, kc, &corner_state(cfg, Corner::A)?, kh)
        }
    })
}

/// W = k_B T_h ln(Z_B/Z_A) − k_B T_c ln(Z_C/Z_D).
pub fn work<T: Scalar>(cfg: &CycleConfig<T>) -> Result<T, CycleError<T>> {
    let [a, b, c, d] = evaluate_corners(cfg)?;
    Ok(work_from(cfg, &a, &b, &c, &d))
}

fn work_from<T: Scalar>(
    cfg: &CycleConfig<T>,
    a: &CanonicalState<T>,
    b: &CanonicalState<T>,
    c: &CanonicalState<T>,
    d: &CanonicalState<T>,
) -> T {
    free_energy_drop(a, b, cfg.hot.thermal_energy()) - free_energy_drop(d, c, cfg.cold.thermal_energy())
}

fn evaluate_corners<T: Scalar>(cfg: &CycleConfig<T>) -> Result<[CanonicalState<T>; 4], CycleError<T>> {
    Ok([
        corner_state(cfg, Corner::A)?,
        corner_state(cfg, Corner::B)?,
        corner_state(cfg, Corner::C)?,
        corner_state(cfg, Corner::D)?,
    ])
}

/// η = 1 + (Q_BC + Q_CD)/(Q_DA + Q_AB), defined only when the cycle
/// extracts work from a net heat input.
pub fn efficiency<T: Scalar>(result: &CycleResult<T>) -> Option<T> {
    efficiency_of(result.q_ab, result.q_bc, result.q_cd, result.q_da, result.work)
}

fn efficiency_of<T: Scalar>(q_ab: T, q_bc: T, q_cd: T, q_da: T, work: T) -> Option<T> {
    let input = q_da + q_ab;
    (input > T::zero() && work > T::zero()).then(|| T::one() + (q_bc + q_cd) / input)
}

/// Evaluates all four corners once and assembles heats, work, efficiency
/// and the first-law audit.
pub fn run_cycle<T: Scalar>(cfg: &CycleConfig<T>) -> Result<CycleResult<T>, CycleError<T>> {
    let [a, b, c, d] = evaluate_corners(cfg)?;
    let kh = cfg.hot.thermal_energy();
    let kc = cfg.cold.thermal_energy();

    let q_ab = isothermal_heat(&a, &b, kh);
    let q_bc = isochoric_heat(&b, kh, &c, kc);
    let q_cd = isothermal_heat(&c, &d, kc);
    let q_da = isochoric_heat(&d, kc, &a, kh);
    let work = work_from(cfg, &a, &b, &c, &d);

    let first_law_residual = work - (q_ab + q_bc + q_cd + q_da);
    let bound = T::lit(FIRST_LAW_RELATIVE_BOUND) * work.abs().max(kh);
    if !(first_law_residual.abs() <= bound) {
        return Err(CycleError::FirstLaw {
            residual: first_law_residual,
            bound,
        });
    }

    let states = [&a, &b, &c, &d];
    Ok(CycleResult {
        q_ab,
        q_bc,
        q_cd,
        q_da,
        u_a: a.internal_energy,
        u_b: b.internal_energy,
        u_c: c.internal_energy,
        u_d: d.internal_energy,
        log_z_a: a.log_z(),
        log_z_b: b.log_z(),
        log_z_c: c.log_z(),
        log_z_d: d.log_z(),
        work,
        efficiency: efficiency_of(q_ab, q_bc, q_cd, q_da, work),
        first_law_residual,
        terms_used_max: states.iter().map(|s| s.log_partition.terms_used).max().unwrap_or(0),
        tail_bound_max: states
            .iter()
            .map(|s| s.log_partition.tail_bound)
            .fold(T::zero(), T::max),
    })
}
