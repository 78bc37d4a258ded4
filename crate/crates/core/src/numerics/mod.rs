//! Numerical building blocks: compensated accumulation and the gamma-family
//! special functions used for series remainder bounds.

mod special;
mod sum;

pub use special::{ln_gamma, ln_upper_incomplete_gamma};
pub use sum::NeumaierSum;
