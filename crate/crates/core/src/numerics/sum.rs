use std::ops::AddAssign;

use crate::scalar::Scalar;

/// Kahan–Babuška–Neumaier running sum.
///
/// Carries the rounding error of every addition in a separate compensation
/// term, so long sums of decreasing positive terms stay within a few ulps
/// of the exact result.
#[derive(Debug, Clone, Copy)]
pub struct NeumaierSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Scalar> NeumaierSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation = self.compensation + ((self.sum - t) + x);
        } else {
            self.compensation = self.compensation + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }
}

impl<T: Scalar> Default for NeumaierSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> AddAssign<T> for NeumaierSum<T> {
    fn add_assign(&mut self, rhs: T) {
        self.add(rhs);
    }
}

impl<T: Scalar> FromIterator<T> for NeumaierSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}
