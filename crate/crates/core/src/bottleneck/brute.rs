//! Exhaustive bottleneck search, for small parts only.

use super::PartKind;
use crate::barcode::{split_clr, GradedBarcode, GradedInterval};
use crate::cost::{deletion_cost, pair_cost, Cost};
use crate::error::{Error, Result};

/// Default cap on the number of items per part.
pub const DEFAULT_LIMIT: usize = 6;

/// The bottleneck distance by enumerating every bijection of each central
/// part and every partial matching of each half-open part.
///
/// Fails with [`Error::TooLarge`] if some part of either barcode has more
/// than `limit` items.
pub fn bruteforce_distance(f: &GradedBarcode, g: &GradedBarcode, limit: usize) -> Result<Cost> {
    let parts = super::parts(&split_clr(f), &split_clr(g));
    let mut worst = Cost::ZERO;
    for (kind, left, right) in &parts {
        let size = left.len().max(right.len());
        if size > limit {
            return Err(Error::TooLarge {
                part: kind.to_string(),
                size,
                limit,
            });
        }
        let c = match kind {
            PartKind::Central(_) => best_bijection(left, right),
            PartKind::HalfOpen(..) => best_partial(left, right),
        };
        worst = worst.max(c);
    }
    Ok(worst)
}

fn best_bijection(left: &[GradedInterval], right: &[GradedInterval]) -> Cost {
    if left.len() != right.len() {
        return Cost::INFINITY;
    }
    fn go(i: usize, left: &[GradedInterval], right: &[GradedInterval], used: &mut [bool], acc: Cost) -> Cost {
        if i == left.len() {
            return acc;
        }
        let mut best = Cost::INFINITY;
        for j in 0..right.len() {
            if !used[j] {
                used[j] = true;
                let c = go(i + 1, left, right, used, acc.max(pair_cost(&left[i], &right[j])));
                best = best.min(c);
                used[j] = false;
            }
        }
        best
    }
    go(0, left, right, &mut vec![false; right.len()], Cost::ZERO)
}

fn best_partial(left: &[GradedInterval], right: &[GradedInterval]) -> Cost {
    fn go(i: usize, left: &[GradedInterval], right: &[GradedInterval], used: &mut [bool], acc: Cost) -> Cost {
        if i == left.len() {
            return right
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .fold(acc, |a, (g, _)| a.max(deletion_cost(g)));
        }
        let mut best = go(i + 1, left, right, used, acc.max(deletion_cost(&left[i])));
        for j in 0..right.len() {
            if !used[j] {
                used[j] = true;
                let c = go(i + 1, left, right, used, acc.max(pair_cost(&left[i], &right[j])));
                best = best.min(c);
                used[j] = false;
            }
        }
        best
    }
    go(0, left, right, &mut vec![false; right.len()], Cost::ZERO)
}
