//! Convolution with the kernel `K_ε`, for any real ε.
//!
//! For ε ≥ 0 the kernel is the constant sheaf on `[−ε, ε]`; for ε < 0 it is
//! the constant sheaf on `(ε, −ε)` shifted down by one degree. On
//! indecomposables the result is again an indecomposable:
//!
//! | input      | ε ≥ 0                                   | ε = −δ < 0                               |
//! |------------|-----------------------------------------|------------------------------------------|
//! | `[a,b]@j`  | `[a−ε, b+ε]@j`                          | `[a+δ, b−δ]@j` if δ ≤ r, else `(b−δ, a+δ)@(j−1)` |
//! | `(a,b)@j`  | `(a+ε, b−ε)@j` if ε < r, else `[c−(ε−r), c+(ε−r)]@(j+1)` | `(a−δ, b+δ)@j`  |
//! | `[a,b)@j`  | `[a−ε, b−ε)@j`                          | same formula                             |
//! | `(a,b]@j`  | `(a+ε, b+ε]@j`                          | same formula                             |
//!
//! with `c = (a+b)/2` the center and `r = (b−a)/2` the radius. The collapse of
//! an open interval is centered at `c`, which is what the stalks force.

use crate::barcode::{GradedBarcode, GradedDims, GradedInterval, Interval, IntervalType};
use crate::tolerance::Tolerance;

/// Stalk dimensions of a convolution at a point.
pub type StalkDims = GradedDims;

fn closed_around(c: f64, radius: f64) -> Interval {
    let radius = radius.max(0.0);
    Interval::closed(c - radius, c + radius).expect("nonnegative radius")
}

fn open_around(c: f64, radius: f64) -> Interval {
    Interval::open(c - radius, c + radius).expect("positive radius")
}

/// `gi ⋆ K_eps`. Thresholds are compared up to `tol`; at exactly `ε = r` an
/// open interval collapses to a point.
pub fn convolve_interval(gi: &GradedInterval, eps: f64, tol: Tolerance) -> GradedInterval {
    assert!(eps.is_finite(), "convolution parameter must be finite");
    let iv = &gi.interval;
    let j = gi.degree;
    let keep = |interval: Interval| GradedInterval::new(interval, j);
    match gi.kind() {
        IntervalType::Right => keep(iv.moved(-eps, -eps).expect("translation")),
        IntervalType::Left => keep(iv.moved(eps, eps).expect("translation")),
        IntervalType::CentralClosed => {
            let (c, r) = (iv.center().unwrap(), iv.radius().unwrap());
            let delta = -eps;
            if eps >= 0.0 {
                keep(iv.moved(-eps, eps).expect("widening"))
            } else if delta < r - tol.value() {
                keep(iv.moved(delta, -delta).expect("shrinking"))
            } else if delta <= r + tol.value() {
                keep(closed_around(c, 0.0))
            } else {
                GradedInterval::new(open_around(c, delta - r), j - 1)
            }
        }
        IntervalType::CentralOpen => {
            let (c, r) = (iv.center().unwrap(), iv.radius().unwrap());
            let collapses = eps >= r || (eps > 0.0 && r - eps <= tol.value());
            if eps < 0.0 {
                keep(iv.moved(eps, -eps).expect("widening"))
            } else if collapses {
                GradedInterval::new(closed_around(c, eps - r), j + 1)
            } else {
                keep(iv.moved(eps, -eps).expect("shrinking"))
            }
        }
    }
}

/// Item-wise convolution.
pub fn convolve_barcode(b: &GradedBarcode, eps: f64, tol: Tolerance) -> GradedBarcode {
    b.iter().map(|gi| convolve_interval(gi, eps, tol)).collect()
}

/// Relative degree of `RΓ_c` of a nonempty bounded interval: 0 for compact,
/// 1 for open, nothing for half-open.
fn compact_cohomology_degree(iv: &Interval) -> Option<i64> {
    match (iv.lo_closed(), iv.hi_closed()) {
        (true, true) => Some(0),
        (false, false) => Some(1),
        _ => None,
    }
}

/// Stalk of `gi ⋆ K_eps` at `x`, computed fiberwise.
///
/// The fiber over `x` meets the support of `gi` in `I ∩ W`, where `W` is the
/// closed window `[x−ε, x+ε]` for ε ≥ 0 and the open window `(x+ε, x−ε)` for
/// ε < 0. The stalk is the compactly supported cohomology of that
/// intersection, shifted by the degree of `gi` and, for ε < 0, by one more.
/// This does not consult [`convolve_interval`] and serves as its oracle.
pub fn stalk_type(gi: &GradedInterval, eps: f64, x: f64) -> StalkDims {
    assert!(x.is_finite() && eps.is_finite());
    let mut dims = StalkDims::new();
    let window = if eps >= 0.0 {
        Interval::closed(x - eps, x + eps)
    } else {
        Interval::open(x + eps, x - eps)
    }
    .expect("window is nonempty");
    let shift = if eps < 0.0 { -1 } else { 0 };
    if let Some(meet) = gi.interval.intersect(&window) {
        if let Some(rel) = compact_cohomology_degree(&meet) {
            dims.add(gi.degree + rel + shift, 1);
        }
    }
    dims
}

/// Stalk of an indecomposable at `x`: dimension 1 in its degree on its support.
pub fn stalk_of(gi: &GradedInterval, x: f64) -> StalkDims {
    let mut dims = StalkDims::new();
    if gi.interval.contains(x) {
        dims.add(gi.degree, 1);
    }
    dims
}
