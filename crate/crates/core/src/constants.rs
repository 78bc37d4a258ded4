//! Exact SI (2019) physical constants.

use crate::scalar::Scalar;

pub const PLANCK: f64 = 6.626_070_15e-34;
pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
pub const ELECTRON_MASS_ROUNDED: f64 = 9.11e-31;

/// The constants entering the spectrum and the Boltzmann factors.
///
/// Kept as a value rather than hard-wired so that a run can be repeated with
/// perturbed constants (the validator does this to show which checks are
/// value checks and which are identities).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants<T> {
    /// h, J·s
    pub planck: T,
    /// k_B, J/K
    pub boltzmann: T,
    /// c, m/s
    pub speed_of_light: T,
}

impl<T: Scalar> PhysicalConstants<T> {
    pub fn si() -> Self {
        Self {
            planck: T::lit(PLANCK),
            boltzmann: T::lit(BOLTZMANN),
            speed_of_light: T::lit(SPEED_OF_LIGHT),
        }
    }

    /// ħ = h / 2π
    pub fn reduced_planck(&self) -> T {
        self.planck / T::TAU()
    }
}

impl<T: Scalar> Default for PhysicalConstants<T> {
    fn default() -> Self {
        Self::si()
    }
}
