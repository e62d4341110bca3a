use crate::barcode::Endpoint;

/// Absolute tolerance used for comparisons between endpoints.
///
/// Infinite endpoints always compare exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    /// Panics if `tau` is negative or not finite.
    pub fn new(tau: f64) -> Self {
        assert!(
            tau.is_finite() && tau >= 0.0,
            "tolerance must be a finite nonnegative number, got {tau}"
        );
        Tolerance(tau)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn eq(self, a: Endpoint, b: Endpoint) -> bool {
        match (a, b) {
            (Endpoint::Finite(x), Endpoint::Finite(y)) => (x - y).abs() <= self.0,
            _ => a == b,
        }
    }

    /// `a < b` by more than the tolerance.
    pub fn lt(self, a: Endpoint, b: Endpoint) -> bool {
        a < b && !self.eq(a, b)
    }

    /// `a ≤ b` up to the tolerance.
    pub fn le(self, a: Endpoint, b: Endpoint) -> bool {
        a <= b || self.eq(a, b)
    }

    pub fn eq_f64(self, a: f64, b: f64) -> bool {
        if a.is_finite() && b.is_finite() {
            (a - b).abs() <= self.0
        } else {
            a == b
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}
