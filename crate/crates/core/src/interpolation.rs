//! Geodesics between barcodes at finite distance.
//!
//! Given an optimal matching of cost ε between `F` and `G`, [`interpolate`]
//! returns a barcode `U_t` for each `t ∈ [0, ε]` with `U_0 = F`, `U_ε = G` and
//! `d(U_s, U_t) ≤ |s − t|`. The path is built bar by bar: every matched pair
//! travels at unit speed along [`pair_path`] and then waits at its target.
//!
//! For an open bar `(a,b)@m` matched with a closed bar `S@(m+1)`, the open
//! bar first shrinks to nothing, reaching its center `c` at time `r`, and
//! then reappears one degree up as the point `[c,c]` and grows linearly into
//! `S`. Deleted half-open bars shrink symmetrically until they vanish.
//!
//! Barcodes at infinite distance lie in different connected components of
//! the space of sheaves; [`same_component`] tests for that.

use crate::barcode::{Endpoint, GradedBarcode, GradedInterval, Interval, IntervalType};
use crate::bottleneck::{distance, Matching, Origin};
use crate::cost::{deletion_cost, pair_cost, Cost};
use crate::error::{Error, Result};

/// `(1−s)·x + s·y`, exact at `s = 0` and `s = 1`; equal endpoints (including
/// infinite ones) are returned unchanged.
fn lerp(x: Endpoint, y: Endpoint, s: f64) -> Endpoint {
    if x == y {
        return x;
    }
    let (x, y) = (x.to_f64(), y.to_f64());
    Endpoint::from_f64((1.0 - s) * x + s * y)
}

fn lerp_interval(from: &Interval, to: &Interval, s: f64) -> Interval {
    Interval::new(
        lerp(from.lo(), to.lo(), s),
        from.lo_closed(),
        lerp(from.hi(), to.hi(), s),
        from.hi_closed(),
    )
    .expect("interpolating between intervals of the same shape")
}

fn check_time(t: f64, c: Cost) -> Result<()> {
    if !c.is_finite() {
        return Err(Error::InfiniteDistance);
    }
    if !(0.0..=c.value()).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            lo: 0.0,
            hi: c.value(),
        });
    }
    Ok(())
}

/// Position at time `t` of `source` travelling to `target`, or to nothing
/// when `target` is `None`. `None` in the result means the bar has vanished.
///
/// Valid for `0 ≤ t ≤ c`, where `c` is the pair (or deletion) cost.
pub fn pair_path(
    source: &GradedInterval,
    target: Option<&GradedInterval>,
    t: f64,
) -> Result<Option<GradedInterval>> {
    let Some(target) = target else {
        let c = deletion_cost(source);
        check_time(t, c)?;
        return Ok(source
            .interval
            .moved(t, -t)
            .ok()
            .filter(|_| t < c.value())
            .map(|iv| GradedInterval::new(iv, source.degree)));
    };
    let c = pair_cost(source, target);
    check_time(t, c)?;
    let c = c.value();
    if c == 0.0 {
        return Ok(Some(*source));
    }
    use IntervalType::*;
    let at = match (source.kind(), target.kind()) {
        (CentralOpen, CentralClosed) => collapse_path(source, target, t),
        (CentralClosed, CentralOpen) => collapse_path(target, source, c - t),
        _ => GradedInterval::new(lerp_interval(&source.interval, &target.interval, t / c), source.degree),
    };
    Ok(Some(at))
}

/// The open-to-closed path at time `t`, with `open` at time 0.
fn collapse_path(open: &GradedInterval, closed: &GradedInterval, t: f64) -> GradedInterval {
    let r = open.interval.radius().unwrap();
    let center = open.interval.center().unwrap();
    if t < r {
        let iv = open.interval.moved(t, -t).expect("before the collapse time");
        return GradedInterval::new(iv, open.degree);
    }
    let c = pair_cost(open, closed).value();
    let point = Interval::point(center).unwrap();
    let s = if c > r { ((t - r) / (c - r)).min(1.0) } else { 1.0 };
    GradedInterval::new(lerp_interval(&point, &closed.interval, s), closed.degree)
}

/// The barcode `U_t` on the geodesic from `f` to `g` carried by `matching`.
///
/// `matching` must pair exactly the bars of `f` (left) with those of `g`
/// (right) at finite cost, and `0 ≤ t ≤ matching.achieved`.
pub fn interpolate(f: &GradedBarcode, g: &GradedBarcode, matching: &Matching, t: f64) -> Result<GradedBarcode> {
    let eps = matching.achieved;
    check_time(t, eps)?;
    let eps = eps.value();

    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    let mut out = Vec::new();
    let mut push = |src: &GradedInterval, dst: Option<&GradedInterval>, tt: f64| -> Result<()> {
        let c = match dst {
            Some(d) => pair_cost(src, d),
            None => deletion_cost(src),
        };
        out.extend(pair_path(src, dst, tt.min(c.value()))?);
        Ok(())
    };
    for p in &matching.central_pairs {
        lefts.push(p.left);
        rights.push(p.right);
        push(&p.left, Some(&p.right), t)?;
    }
    for p in &matching.halfopen_pairs {
        lefts.push(p.left);
        rights.push(p.right);
        push(&p.left, Some(&p.right), t)?;
    }
    for d in &matching.deletions {
        match d.origin {
            Origin::Left => {
                lefts.push(d.interval);
                push(&d.interval, None, t)?;
            }
            Origin::Right => {
                rights.push(d.interval);
                push(&d.interval, None, eps - t)?;
            }
        }
    }
    if GradedBarcode::new(lefts) != *f || GradedBarcode::new(rights) != *g {
        return Err(Error::Precondition(
            "the matching does not pair the bars of the two barcodes".into(),
        ));
    }
    Ok(GradedBarcode::new(out))
}

/// Whether `f` and `g` are at finite distance.
pub fn same_component(f: &GradedBarcode, g: &GradedBarcode) -> bool {
    distance(f, g).is_finite()
}
