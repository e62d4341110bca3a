use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A point of the extended real line.
///
/// Finite values are never NaN or infinite; `-0.0` is normalized to `0.0`.
#[derive(Debug, Clone, Copy)]
pub enum Endpoint {
    NegInf,
    Finite(f64),
    PosInf,
}

impl Endpoint {
    /// Maps `±∞` to the sentinels. Panics on NaN.
    pub fn from_f64(x: f64) -> Self {
        assert!(!x.is_nan(), "endpoint must not be NaN");
        if x == f64::INFINITY {
            Endpoint::PosInf
        } else if x == f64::NEG_INFINITY {
            Endpoint::NegInf
        } else {
            Endpoint::Finite(x + 0.0)
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Endpoint::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Endpoint::Finite(_))
    }

    /// The value as an `f64`, with the sentinels mapped to `±∞`.
    pub fn to_f64(self) -> f64 {
        match self {
            Endpoint::NegInf => f64::NEG_INFINITY,
            Endpoint::Finite(x) => x,
            Endpoint::PosInf => f64::INFINITY,
        }
    }

    /// Translates a finite endpoint by `d`; infinite endpoints are fixed.
    ///
    /// Panics if the translation overflows.
    pub fn shift(self, d: f64) -> Self {
        match self {
            Endpoint::Finite(x) => {
                let y = x + d;
                assert!(y.is_finite(), "endpoint overflow: {x} + {d}");
                Endpoint::Finite(y + 0.0)
            }
            other => other,
        }
    }

    pub fn neg(self) -> Self {
        match self {
            Endpoint::NegInf => Endpoint::PosInf,
            Endpoint::Finite(x) => Endpoint::Finite(-x + 0.0),
            Endpoint::PosInf => Endpoint::NegInf,
        }
    }

    /// `|a − b|` with `|∞ − ∞| = 0` and `|∞ − x| = ∞`.
    pub fn distance(self, other: Endpoint) -> f64 {
        match (self, other) {
            (Endpoint::Finite(x), Endpoint::Finite(y)) => (x - y).abs(),
            (a, b) if a == b => 0.0,
            _ => f64::INFINITY,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Finite(_) => 1,
            Endpoint::PosInf => 2,
        }
    }
}

impl PartialEq for Endpoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Endpoint {}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Endpoint::Finite(x), Endpoint::Finite(y)) => x.total_cmp(y),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => f.write_str("-inf"),
            Endpoint::Finite(x) => write!(f, "{x}"),
            Endpoint::PosInf => f.write_str("inf"),
        }
    }
}

impl From<f64> for Endpoint {
    fn from(x: f64) -> Self {
        Endpoint::from_f64(x)
    }
}

/// A nonempty interval of ℝ.
///
/// Infinite endpoints always carry the open flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    lo: Endpoint,
    lo_closed: bool,
    hi: Endpoint,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Endpoint, lo_closed: bool, hi: Endpoint, hi_closed: bool) -> Result<Self> {
        let iv = Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        };
        if (lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()) {
            return Err(Error::InvalidInterval(format!(
                "{iv}: an infinite endpoint cannot be closed"
            )));
        }
        let nonempty = match lo.cmp(&hi) {
            Ordering::Less => lo != Endpoint::PosInf && hi != Endpoint::NegInf,
            Ordering::Equal => lo_closed && hi_closed,
            Ordering::Greater => false,
        };
        if !nonempty {
            return Err(Error::InvalidInterval(format!("{iv} is empty")));
        }
        Ok(iv)
    }

    pub fn closed(a: f64, b: f64) -> Result<Self> {
        Self::new(a.into(), true, b.into(), true)
    }

    pub fn open(a: f64, b: f64) -> Result<Self> {
        Self::new(a.into(), false, b.into(), false)
    }

    /// `[a, b)`; an infinite `a` is stored open.
    pub fn closed_open(a: f64, b: f64) -> Result<Self> {
        Self::new(a.into(), a.is_finite(), b.into(), false)
    }

    /// `(a, b]`; an infinite `b` is stored open.
    pub fn open_closed(a: f64, b: f64) -> Result<Self> {
        Self::new(a.into(), false, b.into(), b.is_finite())
    }

    pub fn point(x: f64) -> Result<Self> {
        Self::closed(x, x)
    }

    pub fn real_line() -> Self {
        Interval {
            lo: Endpoint::NegInf,
            lo_closed: false,
            hi: Endpoint::PosInf,
            hi_closed: false,
        }
    }

    pub fn lo(&self) -> Endpoint {
        self.lo
    }

    pub fn hi(&self) -> Endpoint {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Bounded intervals only.
    pub fn center(&self) -> Option<f64> {
        Some((self.lo.finite()? + self.hi.finite()?) / 2.0)
    }

    /// Half the length; `None` when unbounded.
    pub fn radius(&self) -> Option<f64> {
        Some((self.hi.finite()? - self.lo.finite()?) / 2.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        let x = Endpoint::from_f64(x);
        let above = x > self.lo || (x == self.lo && self.lo_closed);
        let below = x < self.hi || (x == self.hi && self.hi_closed);
        above && below
    }

    /// Intersection, or `None` when empty.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (other.lo, other.lo_closed),
            Ordering::Greater => (self.lo, self.lo_closed),
            Ordering::Equal => (self.lo, self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi, self.hi_closed),
            Ordering::Greater => (other.hi, other.hi_closed),
            Ordering::Equal => (self.hi, self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, lo_closed, hi, hi_closed).ok()
    }

    /// Translate both endpoints by independent amounts, keeping the flags.
    pub(crate) fn moved(&self, dlo: f64, dhi: f64) -> Result<Interval> {
        Interval::new(
            self.lo.shift(dlo),
            self.lo_closed,
            self.hi.shift(dhi),
            self.hi_closed,
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lo
            .cmp(&other.lo)
            .then(self.hi.cmp(&other.hi))
            .then(self.lo_closed.cmp(&other.lo_closed))
            .then(self.hi_closed.cmp(&other.hi_closed))
    }
}

/// The indecomposable `k_I` placed in cohomological degree `degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedInterval {
    pub interval: Interval,
    pub degree: i64,
}

impl GradedInterval {
    pub fn new(interval: Interval, degree: i64) -> Self {
        GradedInterval { interval, degree }
    }

    pub fn kind(&self) -> IntervalType {
        classify(&self.interval)
    }
}

impl fmt::Display for GradedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.interval, self.degree)
    }
}

impl PartialOrd for GradedInterval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedInterval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.interval.cmp(&other.interval))
    }
}

/// Topological type of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntervalType {
    /// Bounded open `(a, b)`.
    CentralOpen,
    /// Bounded closed `[a, b]`, points included.
    CentralClosed,
    /// `[a, b)`-shaped, including `(−∞, b)`, `[a, +∞)` and ℝ.
    Right,
    /// `(a, b]`-shaped, including `(a, +∞)` and `(−∞, b]`.
    Left,
}

impl IntervalType {
    pub fn is_central(self) -> bool {
        matches!(self, IntervalType::CentralOpen | IntervalType::CentralClosed)
    }

    pub fn side(self) -> Option<Side> {
        match self {
            IntervalType::Right => Some(Side::Right),
            IntervalType::Left => Some(Side::Left),
            _ => None,
        }
    }
}

/// Which half-open family a part belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "R",
            Side::Left => "L",
        })
    }
}

/// Central/right/left type of an interval.
///
/// An interval reads as right-type when it is closed at a finite lower end
/// and open above, or open at `−∞`; left-type is the mirror image, except
/// that ℝ itself is right-type.
pub fn classify(iv: &Interval) -> IntervalType {
    if iv.is_bounded() && iv.lo_closed == iv.hi_closed {
        return if iv.lo_closed {
            IntervalType::CentralClosed
        } else {
            IntervalType::CentralOpen
        };
    }
    // From here at least one endpoint is infinite or the flags differ.
    match (iv.lo, iv.hi) {
        (Endpoint::NegInf, Endpoint::PosInf) => IntervalType::Right,
        (Endpoint::NegInf, _) => {
            if iv.hi_closed {
                IntervalType::Left
            } else {
                IntervalType::Right
            }
        }
        (_, Endpoint::PosInf) => {
            if iv.lo_closed {
                IntervalType::Right
            } else {
                IntervalType::Left
            }
        }
        _ => {
            if iv.lo_closed {
                IntervalType::Right
            } else {
                IntervalType::Left
            }
        }
    }
}
