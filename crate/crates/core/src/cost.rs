//! Minimal interleaving costs between indecomposables.

use std::cmp::Ordering;
use std::fmt;

use crate::barcode::{GradedInterval, IntervalType};

/// A nonnegative real number or `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cost(f64);

impl Cost {
    pub const ZERO: Cost = Cost(0.0);
    pub const INFINITY: Cost = Cost(f64::INFINITY);

    /// Panics on NaN or negative input.
    pub fn new(value: f64) -> Self {
        assert!(
            !value.is_nan() && value >= 0.0,
            "cost must be nonnegative, got {value}"
        );
        Cost(value + 0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn finite(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }
}

impl Default for Cost {
    fn default() -> Self {
        Cost::ZERO
    }
}

impl Eq for Cost {}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write!(f, "{}", self.0)
        } else {
            f.write_str("inf")
        }
    }
}

fn endpoint_cost(a: &GradedInterval, b: &GradedInterval) -> Cost {
    let (x, y) = (&a.interval, &b.interval);
    Cost::new(x.lo().distance(y.lo()).max(x.hi().distance(y.hi())))
}

/// Cost of an open interval at degree `m` against a closed one at `m + 1`.
fn collapse_cost(open: &GradedInterval, closed: &GradedInterval) -> Cost {
    let c = open.interval.center().unwrap();
    let r = open.interval.radius().unwrap();
    let lo = closed.interval.lo().finite().unwrap();
    let hi = closed.interval.hi().finite().unwrap();
    Cost::new(r + (c - lo).max(hi - c))
}

/// The least ε for which `a` and `b` are ε-interleaved, or `+∞`.
pub fn pair_cost(a: &GradedInterval, b: &GradedInterval) -> Cost {
    use IntervalType::*;
    match (a.kind(), b.kind()) {
        (CentralClosed, CentralClosed) | (CentralOpen, CentralOpen) | (Right, Right) | (Left, Left)
            if a.degree == b.degree =>
        {
            endpoint_cost(a, b)
        }
        (CentralOpen, CentralClosed) if b.degree == a.degree + 1 => collapse_cost(a, b),
        (CentralClosed, CentralOpen) if a.degree == b.degree + 1 => collapse_cost(b, a),
        _ => Cost::INFINITY,
    }
}

/// The least ε for which `a` is ε-interleaved with the zero object.
///
/// Finite only for bounded half-open intervals, where it is half the length.
pub fn deletion_cost(a: &GradedInterval) -> Cost {
    match a.kind() {
        IntervalType::Right | IntervalType::Left => match a.interval.radius() {
            Some(r) => Cost::new(r),
            None => Cost::INFINITY,
        },
        IntervalType::CentralOpen | IntervalType::CentralClosed => Cost::INFINITY,
    }
}
