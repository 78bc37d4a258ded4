//! Energy levels of a particle in an infinite square well under the
//! space-fractional kinetic operator D_α(−ħ²∂²)^{α/2}.
//!
//! The well spans |x| < a. Inserting a thin barrier at x = 0 splits it into
//! two wells of width a; every level of the split box is twofold degenerate
//! and coincides with an even level of the undivided box.

use crate::constants::{PhysicalConstants, ELECTRON_MASS_ROUNDED};
use crate::error::{require_positive, ParameterError};
use crate::scalar::Scalar;

/// One engine box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSpec<T> {
    mass: T,
    alpha: T,
    chi: T,
    half_width: T,
    divided: bool,
    constants: PhysicalConstants<T>,
}

impl<T: Scalar> WellSpec<T> {
    /// An undivided box of half-width `half_width` (m) holding a particle of
    /// `mass` (kg), with fractional exponent `alpha` in (0, 2] and kinetic
    /// coefficient parameter `chi` > 0.
    pub fn new(mass: T, alpha: T, chi: T, half_width: T) -> Result<Self, ParameterError> {
        require_positive("mass", mass)?;
        require_positive("chi", chi)?;
        require_positive("half_width", half_width)?;
        check_alpha(alpha)?;
        Ok(Self {
            mass,
            alpha,
            chi,
            half_width,
            divided: false,
            constants: PhysicalConstants::si(),
        })
    }

    /// Electron-like particle (m = 9.11e-31 kg) with χ = 1/2.
    pub fn electron(alpha: T, half_width: T) -> Result<Self, ParameterError> {
        Self::new(T::lit(ELECTRON_MASS_ROUNDED), alpha, T::lit(0.5), half_width)
    }

    pub fn with_divided(mut self, divided: bool) -> Self {
        self.divided = divided;
        self
    }

    pub fn with_half_width(self, half_width: T) -> Result<Self, ParameterError> {
        require_positive("half_width", half_width)?;
        Ok(Self { half_width, ..self })
    }

    pub fn with_alpha(self, alpha: T) -> Result<Self, ParameterError> {
        check_alpha(alpha)?;
        Ok(Self { alpha, ..self })
    }

    pub fn with_constants(mut self, constants: PhysicalConstants<T>) -> Self {
        self.constants = constants;
        self
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn chi(&self) -> T {
        self.chi
    }

    pub fn half_width(&self) -> T {
        self.half_width
    }

    pub fn is_divided(&self) -> bool {
        self.divided
    }

    pub fn constants(&self) -> &PhysicalConstants<T> {
        &self.constants
    }

    /// 2 for the barrier-divided box, 1 otherwise.
    pub fn degeneracy(&self) -> u32 {
        if self.divided {
            2
        } else {
            1
        }
    }

    /// Lowest level of this box.
    pub fn ground_energy(&self) -> T {
        self.undivided_energy(self.undivided_index(1))
    }

    fn undivided_index(&self, n: u64) -> u64 {
        if self.divided {
            2 * n
        } else {
            n
        }
    }

    /// E_k = D_α (kπħ/2a)^α of the undivided box.
    ///
    /// Evaluated as χ·mc²·(kπħ / (2a·mc))^α, which equals D_α·p^α but never
    /// forms p^α or (mc)^α on their own; those underflow single precision.
    fn undivided_energy(&self, k: u64) -> T {
        let c = self.constants.speed_of_light;
        let rest_momentum = self.mass * c;
        let ratio = T::from_count(k) * T::PI() * self.constants.reduced_planck()
            / (T::lit(2.0) * self.half_width * rest_momentum);
        self.chi * rest_momentum * c * ratio.powf(self.alpha)
    }
}

fn check_alpha<T: Scalar>(alpha: T) -> Result<(), ParameterError> {
    if alpha.is_finite() && alpha > T::zero() && alpha <= T::lit(2.0) {
        Ok(())
    } else {
        Err(ParameterError::new("alpha", alpha, "fractional exponent must lie in (0, 2]"))
    }
}

/// A single eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel<T> {
    pub n: u64,
    /// joules
    pub energy: T,
    pub degeneracy: u32,
}

/// D_α = χmc² / (mc)^α, the coefficient of |p|^α in the kinetic energy.
///
/// Computed as χ(mc)^{2−α}/m; at α = 2 this is exactly χ/m.
pub fn d_alpha<T: Scalar>(spec: &WellSpec<T>) -> T {
    let rest_momentum = spec.mass * spec.constants.speed_of_light;
    spec.chi * rest_momentum.powf(T::lit(2.0) - spec.alpha) / spec.mass
}

/// The n-th level (n ≥ 1) of the box.
///
/// For the divided box level n is the undivided level 2n, evaluated by the
/// same routine, so the two agree bit for bit.
pub fn energy_level<T: Scalar>(spec: &WellSpec<T>, n: u64) -> Result<EnergyLevel<T>, ParameterError> {
    if n == 0 {
        return Err(ParameterError::new("n", n, "quantum numbers start at 1"));
    }
    Ok(EnergyLevel {
        n,
        energy: spec.undivided_energy(spec.undivided_index(n)),
        degeneracy: spec.degeneracy(),
    })
}

/// First `n_max` levels.
pub fn levels<T: Scalar>(spec: &WellSpec<T>, n_max: u64) -> Vec<EnergyLevel<T>> {
    (1..=n_max)
        .map(|n| EnergyLevel {
            n,
            energy: spec.undivided_energy(spec.undivided_index(n)),
            degeneracy: spec.degeneracy(),
        })
        .collect()
}

/// θ₁ = β·E₁, the ground level in units of the thermal energy.
pub fn ground_reduced_gap<T: Scalar>(spec: &WellSpec<T>, inverse_temperature: T) -> T {
    inverse_temperature * spec.ground_energy()
}

/// β·E_n, formed as θ₁·n^α.
pub fn reduced_gap<T: Scalar>(spec: &WellSpec<T>, inverse_temperature: T, n: u64) -> Result<T, ParameterError> {
    if n == 0 {
        return Err(ParameterError::new("n", n, "quantum numbers start at 1"));
    }
    require_positive("inverse_temperature", inverse_temperature)?;
    let theta1 = ground_reduced_gap(spec, inverse_temperature);
    Ok(theta1 * T::from_count(n).powf(spec.alpha))
}
