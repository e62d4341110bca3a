//! Exact bottleneck distance between graded barcodes.
//!
//! A barcode splits into independent parts (see [`split_clr`]): each central
//! index `m` must be matched bijectively, while each half-open part
//! `(side, degree)` admits partial matchings in which unmatched bars pay their
//! deletion cost. The distance is the largest of the per-part optima, and it
//! equals the convolution distance between the corresponding sheaves.
//!
//! Each part is solved exactly: the optimum is always one of the finitely
//! many pair or deletion costs, so we binary-search the sorted candidate
//! costs and test feasibility at a threshold with a maximum bipartite
//! matching ([`hopcroft_karp`]). For a half-open part every bar gets a
//! private "diagonal" partner on the other side, reachable when its deletion
//! cost is within the threshold, and diagonal slots may always be matched to
//! each other.
//!
//! Items are processed in canonical order, so the returned matching is
//! deterministic.

mod brute;
mod hopcroft_karp;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use brute::{bruteforce_distance, DEFAULT_LIMIT};

use crate::barcode::{split_clr, ClrSplit, GradedBarcode, GradedInterval, Side};
use crate::cost::{deletion_cost, pair_cost, Cost};
use crate::error::{Error, Result};

/// Which part of the split a pairing lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartKind {
    /// Central index `m`: open bars of degree `m`, closed bars of degree `m+1`.
    Central(i64),
    /// Half-open bars of one side and one degree.
    HalfOpen(Side, i64),
}

impl fmt::Display for PartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartKind::Central(m) => write!(f, "C {m}"),
            PartKind::HalfOpen(side, j) => write!(f, "{side} {j}"),
        }
    }
}

/// Which barcode a deleted bar came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Origin {
    Left,
    Right,
}

/// Pairs and deletions within a single part.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Pairing {
    pub pairs: Vec<(GradedInterval, GradedInterval, Cost)>,
    pub deleted_left: Vec<(GradedInterval, Cost)>,
    pub deleted_right: Vec<(GradedInterval, Cost)>,
}

impl Pairing {
    fn achieved(&self) -> Cost {
        self.pairs
            .iter()
            .map(|p| p.2)
            .chain(self.deleted_left.iter().map(|d| d.1))
            .chain(self.deleted_right.iter().map(|d| d.1))
            .max()
            .unwrap_or(Cost::ZERO)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralPair {
    pub index: i64,
    pub left: GradedInterval,
    pub right: GradedInterval,
    pub cost: Cost,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HalfOpenPair {
    pub side: Side,
    pub degree: i64,
    pub left: GradedInterval,
    pub right: GradedInterval,
    pub cost: Cost,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Deletion {
    pub side: Side,
    pub degree: i64,
    pub origin: Origin,
    pub interval: GradedInterval,
    pub cost: Cost,
}

/// A witness for the bottleneck distance between two barcodes.
///
/// When some central part cannot be matched at all, `achieved` is infinite
/// and that part contributes no pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Matching {
    pub central_pairs: Vec<CentralPair>,
    pub halfopen_pairs: Vec<HalfOpenPair>,
    pub deletions: Vec<Deletion>,
    pub achieved: Cost,
}

impl Matching {
    /// One line per pair or deletion: `<part> <index> <left> <right> <cost>`,
    /// with `DELETED` standing in for a missing partner.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in &self.central_pairs {
            out.push(format!("C {} {} {} {}", p.index, p.left, p.right, p.cost));
        }
        for p in &self.halfopen_pairs {
            out.push(format!("{} {} {} {} {}", p.side, p.degree, p.left, p.right, p.cost));
        }
        for d in &self.deletions {
            let (l, r) = match d.origin {
                Origin::Left => (d.interval.to_string(), "DELETED".to_string()),
                Origin::Right => ("DELETED".to_string(), d.interval.to_string()),
            };
            out.push(format!("{} {} {l} {r} {}", d.side, d.degree, d.cost));
        }
        out
    }
}

fn candidates(costs: impl Iterator<Item = Cost>) -> Vec<Cost> {
    let set: BTreeSet<Cost> = costs.filter(|c| c.is_finite()).chain([Cost::ZERO]).collect();
    set.into_iter().collect()
}

/// Smallest candidate for which `feasible` holds, assuming monotonicity.
fn least_feasible<T>(cands: &[Cost], mut feasible: impl FnMut(Cost) -> Option<T>) -> Option<(Cost, T)> {
    let last = *cands.last()?;
    let mut best = (last, feasible(last)?);
    let (mut lo, mut hi) = (0usize, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible(cands[mid]) {
            Some(w) => {
                best = (cands[mid], w);
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Some(best)
}

/// Optimal bottleneck pairing of one part.
///
/// Returns `+∞` with an empty pairing when no matching of finite cost exists.
pub fn part_bottleneck(left: &[GradedInterval], right: &[GradedInterval], kind: PartKind) -> (Cost, Pairing) {
    let mut left = left.to_vec();
    let mut right = right.to_vec();
    left.sort();
    right.sort();
    let pairing = match kind {
        PartKind::Central(_) => central(&left, &right),
        PartKind::HalfOpen(..) => half_open(&left, &right),
    };
    match pairing {
        Some(p) => (p.achieved(), p),
        None => (Cost::INFINITY, Pairing::default()),
    }
}

fn cost_matrix(left: &[GradedInterval], right: &[GradedInterval]) -> Vec<Vec<Cost>> {
    left.iter()
        .map(|a| right.iter().map(|b| pair_cost(a, b)).collect())
        .collect()
}

fn central(left: &[GradedInterval], right: &[GradedInterval]) -> Option<Pairing> {
    if left.len() != right.len() {
        return None;
    }
    let costs = cost_matrix(left, right);
    let cands = candidates(costs.iter().flatten().copied());
    let n = left.len();
    let (_, mate) = least_feasible(&cands, |eps| {
        let adj: Vec<Vec<usize>> = costs
            .iter()
            .map(|row| (0..n).filter(|&j| row[j] <= eps).collect())
            .collect();
        let mate = hopcroft_karp::maximum_matching(&adj, n);
        mate.iter().all(Option::is_some).then_some(mate)
    })?;
    let pairs = mate
        .iter()
        .enumerate()
        .map(|(i, j)| {
            let j = j.unwrap();
            (left[i], right[j], costs[i][j])
        })
        .collect();
    Some(Pairing {
        pairs,
        ..Pairing::default()
    })
}

fn half_open(left: &[GradedInterval], right: &[GradedInterval]) -> Option<Pairing> {
    let (n, m) = (left.len(), right.len());
    let costs = cost_matrix(left, right);
    let del_l: Vec<Cost> = left.iter().map(deletion_cost).collect();
    let del_r: Vec<Cost> = right.iter().map(deletion_cost).collect();
    let cands = candidates(
        costs
            .iter()
            .flatten()
            .chain(del_l.iter())
            .chain(del_r.iter())
            .copied(),
    );
    // Left vertices: left items 0..n, then diagonal slots of right items.
    // Right vertices: right items 0..m, then diagonal slots of left items.
    let (_, mate) = least_feasible(&cands, |eps| {
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n + m);
        for i in 0..n {
            let mut row: Vec<usize> = (0..m).filter(|&j| costs[i][j] <= eps).collect();
            if del_l[i] <= eps {
                row.push(m + i);
            }
            adj.push(row);
        }
        for j in 0..m {
            let mut row = Vec::with_capacity(n + 1);
            if del_r[j] <= eps {
                row.push(j);
            }
            row.extend(m..m + n);
            adj.push(row);
        }
        let mate = hopcroft_karp::maximum_matching(&adj, n + m);
        mate.iter().all(Option::is_some).then_some(mate)
    })?;
    let mut p = Pairing::default();
    let mut right_taken = vec![false; m];
    for i in 0..n {
        match mate[i].unwrap() {
            j if j < m => {
                right_taken[j] = true;
                p.pairs.push((left[i], right[j], costs[i][j]));
            }
            _ => p.deleted_left.push((left[i], del_l[i])),
        }
    }
    for j in 0..m {
        if !right_taken[j] {
            p.deleted_right.push((right[j], del_r[j]));
        }
    }
    Some(p)
}

/// The parts of two splits, in canonical order, with their items.
pub(crate) fn parts(f: &ClrSplit, g: &ClrSplit) -> Vec<(PartKind, Vec<GradedInterval>, Vec<GradedInterval>)> {
    fn keys<'a>(
        a: &'a BTreeMap<i64, Vec<GradedInterval>>,
        b: &'a BTreeMap<i64, Vec<GradedInterval>>,
    ) -> BTreeSet<i64> {
        a.keys().chain(b.keys()).copied().collect()
    }
    fn get(map: &BTreeMap<i64, Vec<GradedInterval>>, k: i64) -> Vec<GradedInterval> {
        map.get(&k).cloned().unwrap_or_default()
    }
    let mut out = Vec::new();
    for m in keys(&f.central, &g.central) {
        out.push((PartKind::Central(m), get(&f.central, m), get(&g.central, m)));
    }
    for side in [Side::Right, Side::Left] {
        for j in keys(f.side(side), g.side(side)) {
            out.push((PartKind::HalfOpen(side, j), get(f.side(side), j), get(g.side(side), j)));
        }
    }
    out
}

/// The bottleneck distance and a matching attaining it.
pub fn distance_with_matching(f: &GradedBarcode, g: &GradedBarcode) -> (Cost, Matching) {
    let mut matching = Matching::default();
    for (kind, left, right) in parts(&split_clr(f), &split_clr(g)) {
        let (cost, pairing) = part_bottleneck(&left, &right, kind);
        matching.achieved = matching.achieved.max(cost);
        match kind {
            PartKind::Central(index) => {
                matching
                    .central_pairs
                    .extend(pairing.pairs.into_iter().map(|(l, r, cost)| CentralPair {
                        index,
                        left: l,
                        right: r,
                        cost,
                    }));
            }
            PartKind::HalfOpen(side, degree) => {
                matching
                    .halfopen_pairs
                    .extend(pairing.pairs.into_iter().map(|(l, r, cost)| HalfOpenPair {
                        side,
                        degree,
                        left: l,
                        right: r,
                        cost,
                    }));
                let dels = pairing
                    .deleted_left
                    .into_iter()
                    .map(|d| (Origin::Left, d))
                    .chain(pairing.deleted_right.into_iter().map(|d| (Origin::Right, d)));
                matching
                    .deletions
                    .extend(dels.map(|(origin, (interval, cost))| Deletion {
                        side,
                        degree,
                        origin,
                        interval,
                        cost,
                    }));
            }
        }
    }
    (matching.achieved, matching)
}

/// The bottleneck (equivalently, convolution) distance.
pub fn distance(f: &GradedBarcode, g: &GradedBarcode) -> Cost {
    distance_with_matching(f, g).0
}

/// Like [`distance_with_matching`], failing when the distance is infinite.
pub fn finite_matching(f: &GradedBarcode, g: &GradedBarcode) -> Result<Matching> {
    let (cost, m) = distance_with_matching(f, g);
    if cost.is_finite() {
        Ok(m)
    } else {
        Err(Error::InfiniteDistance)
    }
}
