//! Brute-force partition sums in 256-bit binary floating point (~77 digits).
//!
//! Shares nothing with the library: energies are formed as
//! D_α·(kπħ/2a)^α with D_α = χmc²/(mc)^α straight from decimal constants,
//! Z and ΣE·e^{−βE} are summed unshifted, and the cycle quantities use the
//! textbook formulas without any cancellation-avoiding rearrangement.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

const PRECISION: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;
/// Nominal truncation index of the oracle sums.
pub const ORACLE_TERMS: u64 = 1_000_000;

pub struct Oracle {
    cc: Consts,
    planck: BigFloat,
    boltzmann: BigFloat,
    light: BigFloat,
    mass: BigFloat,
    chi: BigFloat,
    pi: BigFloat,
}

#[derive(Debug, Clone)]
pub struct OracleCorner {
    pub log_z: BigFloat,
    pub internal_energy: BigFloat,
    pub terms: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleCycle {
    pub log_z: [f64; 4],
    pub internal_energy: [f64; 4],
    pub q_ab: f64,
    pub q_bc: f64,
    pub q_cd: f64,
    pub q_da: f64,
    pub work: f64,
    pub efficiency: Option<f64>,
}

pub fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().expect("BigFloat formats as a decimal number")
}

impl Oracle {
    pub fn new() -> Self {
        let mut cc = Consts::new().expect("constant cache");
        let dec = |s: &str, cc: &mut Consts| BigFloat::parse(s, Radix::Dec, PRECISION, RM, cc);
        let planck = dec("6.62607015e-34", &mut cc);
        let boltzmann = dec("1.380649e-23", &mut cc);
        let light = dec("299792458", &mut cc);
        let mass = dec("9.11e-31", &mut cc);
        let chi = dec("0.5", &mut cc);
        let pi = cc.pi(PRECISION, RM);
        Self {
            cc,
            planck,
            boltzmann,
            light,
            mass,
            chi,
            pi,
        }
    }

    fn big(x: f64) -> BigFloat {
        BigFloat::from_f64(x, PRECISION)
    }

    /// ln Z and U for the box of half-width `a_nm` (nm, taken exactly from
    /// the f64) at `temperature` K.
    pub fn corner(&mut self, alpha: f64, a_nm: f64, temperature: f64, divided: bool) -> OracleCorner {
        let p = PRECISION;
        let alpha_b = Self::big(alpha);
        // a = a_nm · 10⁻⁹ exactly in decimal
        let nano = BigFloat::parse("1e-9", Radix::Dec, p, RM, &mut self.cc);
        let a = Self::big(a_nm).mul(&nano, p, RM);
        let two = Self::big(2.0);
        let hbar = self.planck.div(&two.mul(&self.pi, p, RM), p, RM);
        let mc = self.mass.mul(&self.light, p, RM);
        let d_alpha = self
            .chi
            .mul(&self.mass, p, RM)
            .mul(&self.light, p, RM)
            .mul(&self.light, p, RM)
            .div(&mc.pow(&alpha_b, p, RM, &mut self.cc), p, RM);
        let beta = Self::big(1.0).div(&self.boltzmann.mul(&Self::big(temperature), p, RM), p, RM);
        let momentum_unit = self.pi.mul(&hbar, p, RM).div(&two.mul(&a, p, RM), p, RM);
        let g = Self::big(if divided { 2.0 } else { 1.0 });

        let mut z = Self::big(0.0);
        let mut ez = Self::big(0.0);
        let negligible = BigFloat::parse("1e-66", Radix::Dec, p, RM, &mut self.cc);
        let mut terms = 0;
        for n in 1..=ORACLE_TERMS {
            let k = if divided { 2 * n } else { n };
            let momentum = momentum_unit.mul(&Self::big(k as f64), p, RM);
            let energy = d_alpha.mul(&momentum.pow(&alpha_b, p, RM, &mut self.cc), p, RM);
            let weight = g.mul(&beta.mul(&energy, p, RM).neg().exp(p, RM, &mut self.cc), p, RM);
            z = z.add(&weight, p, RM);
            ez = ez.add(&energy.mul(&weight, p, RM), p, RM);
            terms = n;
            // Terms decrease, so the remaining ≤ 10⁶ of them add at most
            // 10⁶·weight < 1e-60·Z: invisible at the precision compared.
            if weight.cmp(&z.mul(&negligible, p, RM)) == Some(-1) {
                break;
            }
        }
        OracleCorner {
            log_z: z.ln(p, RM, &mut self.cc),
            internal_energy: ez.div(&z, p, RM),
            terms,
        }
    }

    /// The cycle between baths `th` and `tc` from the literal formulas.
    pub fn cycle(&mut self, alpha: f64, a_nm: f64, th: f64, tc: f64) -> OracleCycle {
        let p = PRECISION;
        let a = self.corner(alpha, a_nm, th, false);
        let b = self.corner(alpha, a_nm, th, true);
        let c = self.corner(alpha, a_nm, tc, true);
        let d = self.corner(alpha, a_nm, tc, false);
        let kth = self.boltzmann.mul(&Self::big(th), p, RM);
        let ktc = self.boltzmann.mul(&Self::big(tc), p, RM);

        let q_ab = b
            .internal_energy
            .sub(&a.internal_energy, p, RM)
            .add(&kth.mul(&b.log_z.sub(&a.log_z, p, RM), p, RM), p, RM);
        let q_cd = d
            .internal_energy
            .sub(&c.internal_energy, p, RM)
            .add(&ktc.mul(&d.log_z.sub(&c.log_z, p, RM), p, RM), p, RM);
        let q_bc = c.internal_energy.sub(&b.internal_energy, p, RM);
        let q_da = a.internal_energy.sub(&d.internal_energy, p, RM);
        let work = kth
            .mul(&b.log_z.sub(&a.log_z, p, RM), p, RM)
            .sub(&ktc.mul(&c.log_z.sub(&d.log_z, p, RM), p, RM), p, RM);
        let input = q_da.add(&q_ab, p, RM);
        let efficiency = (input.is_positive() && work.is_positive() && !work.is_zero()).then(|| {
            to_f64(&Self::big(1.0).add(&q_bc.add(&q_cd, p, RM).div(&input, p, RM), p, RM))
        });
        OracleCycle {
            log_z: [&a, &b, &c, &d].map(|s| to_f64(&s.log_z)),
            internal_energy: [&a, &b, &c, &d].map(|s| to_f64(&s.internal_energy)),
            q_ab: to_f64(&q_ab),
            q_bc: to_f64(&q_bc),
            q_cd: to_f64(&q_cd),
            q_da: to_f64(&q_da),
            work: to_f64(&work),
            efficiency,
        }
    }
}
