#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// (α, a in nm, T in K) drawn from α ∈ [0.6, 2], a ∈ [0.5, 50] nm, T ∈ {1, 2}.
pub fn random_points(seed: u64, count: usize) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alpha = rng.gen_range(0.6..=2.0);
            let a_nm = rng.gen_range(0.5..=50.0);
            let t = if rng.gen_bool(0.5) { 1.0 } else { 2.0 };
            (alpha, a_nm, t)
        })
        .collect()
}

pub fn rel(x: f64, reference: f64) -> f64 {
    ((x - reference) / reference).abs()
}
