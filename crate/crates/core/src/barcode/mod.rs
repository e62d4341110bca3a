//! Graded barcodes and their central/right/left split.

mod interval;
pub(crate) mod parse;

use std::collections::BTreeMap;
use std::fmt;

pub use interval::{classify, Endpoint, GradedInterval, Interval, IntervalType, Side};
pub use parse::{format_barcode, parse_barcode, parse_graded_interval, parse_interval};

use crate::tolerance::Tolerance;

/// A finite multiset of graded intervals.
///
/// Items are kept in canonical order, so `==` is multiset equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedBarcode {
    items: Vec<GradedInterval>,
}

impl GradedBarcode {
    pub fn new(mut items: Vec<GradedInterval>) -> Self {
        items.sort();
        GradedBarcode { items }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn items(&self) -> &[GradedInterval] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GradedInterval> {
        self.items.iter()
    }

    /// The sub-barcode whose intervals satisfy `keep`.
    pub fn filter(&self, mut keep: impl FnMut(IntervalType) -> bool) -> GradedBarcode {
        GradedBarcode {
            items: self.items.iter().copied().filter(|g| keep(g.kind())).collect(),
        }
    }

    pub fn central_part(&self) -> GradedBarcode {
        self.filter(IntervalType::is_central)
    }

    pub fn right_part(&self) -> GradedBarcode {
        self.filter(|t| t == IntervalType::Right)
    }

    pub fn left_part(&self) -> GradedBarcode {
        self.filter(|t| t == IntervalType::Left)
    }

    /// Multiset equality with endpoints compared up to `tol`.
    pub fn approx_eq(&self, other: &GradedBarcode, tol: Tolerance) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut used = vec![false; other.len()];
        self.items.iter().all(|a| {
            let hit = other.items.iter().enumerate().position(|(k, b)| {
                !used[k]
                    && a.degree == b.degree
                    && a.interval.lo_closed() == b.interval.lo_closed()
                    && a.interval.hi_closed() == b.interval.hi_closed()
                    && tol.eq(a.interval.lo(), b.interval.lo())
                    && tol.eq(a.interval.hi(), b.interval.hi())
            });
            match hit {
                Some(k) => {
                    used[k] = true;
                    true
                }
                None => false,
            }
        })
    }
}

impl FromIterator<GradedInterval> for GradedBarcode {
    fn from_iter<T: IntoIterator<Item = GradedInterval>>(iter: T) -> Self {
        GradedBarcode::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a GradedBarcode {
    type Item = &'a GradedInterval;
    type IntoIter = std::slice::Iter<'a, GradedInterval>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// A barcode regrouped by part.
///
/// `central[m]` holds open intervals of degree `m` together with closed
/// intervals of degree `m + 1`; `right[j]` and `left[j]` hold the half-open
/// intervals of degree `j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClrSplit {
    pub central: BTreeMap<i64, Vec<GradedInterval>>,
    pub right: BTreeMap<i64, Vec<GradedInterval>>,
    pub left: BTreeMap<i64, Vec<GradedInterval>>,
}

impl ClrSplit {
    pub fn side(&self, side: Side) -> &BTreeMap<i64, Vec<GradedInterval>> {
        match side {
            Side::Right => &self.right,
            Side::Left => &self.left,
        }
    }

    /// All items of every part, as a barcode.
    pub fn union(&self) -> GradedBarcode {
        self.central
            .values()
            .chain(self.right.values())
            .chain(self.left.values())
            .flatten()
            .copied()
            .collect()
    }
}

/// The central index a central interval is filed under.
pub fn central_index(gi: &GradedInterval) -> Option<i64> {
    match gi.kind() {
        IntervalType::CentralOpen => Some(gi.degree),
        IntervalType::CentralClosed => Some(gi.degree - 1),
        _ => None,
    }
}

pub fn split_clr(b: &GradedBarcode) -> ClrSplit {
    let mut split = ClrSplit::default();
    for gi in b {
        let (map, key) = match gi.kind() {
            IntervalType::CentralOpen | IntervalType::CentralClosed => {
                (&mut split.central, central_index(gi).unwrap())
            }
            IntervalType::Right => (&mut split.right, gi.degree),
            IntervalType::Left => (&mut split.left, gi.degree),
        };
        map.entry(key).or_default().push(*gi);
    }
    split
}

/// Dimensions per cohomological degree; zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedDims(BTreeMap<i64, u64>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, degree: i64, dim: u64) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }
}

impl<const N: usize> From<[(i64, u64); N]> for GradedDims {
    fn from(entries: [(i64, u64); N]) -> Self {
        let mut dims = GradedDims::new();
        for (d, n) in entries {
            dims.add(d, n);
        }
        dims
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, n) in self.iter() {
            writeln!(f, "{d} {n}")?;
        }
        Ok(())
    }
}

/// Relative degree in which `k_I` has nonzero (compactly supported) global
/// sections, if any. The dimension is always 1 when present.
pub(crate) fn section_degree(iv: &Interval, compact_support: bool) -> Option<i64> {
    let bounded = iv.is_bounded();
    let (lc, hc) = (iv.lo_closed(), iv.hi_closed());
    let full = !iv.lo().is_finite() && !iv.hi().is_finite();
    if !compact_support {
        if full {
            return Some(0);
        }
        if bounded {
            return match (lc, hc) {
                (true, true) => Some(0),
                (false, false) => Some(1),
                _ => None,
            };
        }
        // Rays: closed rays carry a section, open rays do not.
        let closed_ray = if iv.lo().is_finite() { lc } else { hc };
        closed_ray.then_some(0)
    } else {
        if full {
            return Some(1);
        }
        if bounded {
            return match (lc, hc) {
                (true, true) => Some(0),
                (false, false) => Some(1),
                _ => None,
            };
        }
        let open_ray = if iv.lo().is_finite() { !lc } else { !hc };
        open_ray.then_some(1)
    }
}

/// Dimensions of `RΓ(ℝ; F)` (or `RΓ_c` when `compact_support`), per degree.
pub fn global_sections(b: &GradedBarcode, compact_support: bool) -> GradedDims {
    let mut dims = GradedDims::new();
    for gi in b {
        if let Some(rel) = section_degree(&gi.interval, compact_support) {
            dims.add(gi.degree + rel, 1);
        }
    }
    dims
}
