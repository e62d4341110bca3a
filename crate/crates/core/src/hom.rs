//! Morphisms between indecomposables `k_I@i → k_J@j`.
//!
//! With `k_I@i = k_I[−i]`, the morphism space is `Ext^{i−j}(k_I, k_J)`. On ℝ
//! only `Ext⁰` and `Ext¹` can be nonzero, and both are at most
//! one-dimensional. [`hom_dim`] evaluates them from closed-form tables indexed
//! by the boundary shape of source and target. An infinite bound counts as an
//! open end on the source side and as a closed end on the target side, so
//! `(a,+∞)` reads as `(a,b)` when it is the source and as `(a,b]` when it is
//! the target.
//!
//! `Ext⁰` (rows: source, columns: target; `U=(a,b)`, `S=[a,b]`, ...):
//!
//! |           | `(c,d)`  | `[c,d]`      | `[c,d)`         | `(c,d]`         |
//! |-----------|----------|--------------|-----------------|-----------------|
//! | `(a,b)`   | `U ⊂ V`  | `U ∩ T ≠ ∅`  | `c < b ≤ d`     | `c ≤ a < d`     |
//! | `[a,b]`   | 0        | `T ⊂ S`      | 0               | 0               |
//! | `[a,b)`   | 0        | `a ≤ c < b`  | `a ≤ c < b ≤ d` | 0               |
//! | `(a,b]`   | 0        | `a < d ≤ b`  | 0               | `c ≤ a < d ≤ b` |
//!
//! `Ext¹`:
//!
//! |           | `(c,d)`          | `[c,d]`          | `[c,d)`             | `(c,d]`             |
//! |-----------|------------------|------------------|---------------------|---------------------|
//! | `(a,b)`   | `[c,d] ⊂ (a,b)`  | 0                | 0                   | 0                   |
//! | `[a,b]`   | `a ≤ d`, `c ≤ b` | `[a,b] ⊂ (c,d)`  | `c < a ≤ d`         | `c ≤ b < d`         |
//! | `[a,b)`   | `a ≤ d < b`      | 0                | `c < a ≤ d < b`     | 0                   |
//! | `(a,b]`   | `a < c ≤ b`      | 0                | 0                   | `a < c ≤ b < d`     |
//!
//! The closed-source row of `Ext¹` includes the cases where the closures just
//! touch: `0 → k_{(1,2)} → k_{[0,2)} → k_{[0,1]} → 0` does not split, so
//! `Ext¹(k_{[0,1]}, k_{(1,2)}) ≠ 0`. Every entry of both tables agrees with
//! [`ext_oracle`], which works from resolutions instead of the tables.

use crate::barcode::{Endpoint, GradedInterval, Interval};
use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// A morphism query `source → target` in the derived category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomQuery {
    pub source: GradedInterval,
    pub target: GradedInterval,
}

impl HomQuery {
    pub fn new(source: GradedInterval, target: GradedInterval) -> Self {
        HomQuery { source, target }
    }

    /// The `n` with `Hom(source, target) = Extⁿ(k_I, k_J)`, i.e.
    /// `source.degree − target.degree`.
    pub fn ext_degree(&self) -> i64 {
        self.source.degree - self.target.degree
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Open,
    Closed,
    ClosedOpen,
    OpenClosed,
}

/// Shape of `iv`, reading infinite bounds as open (source) or closed (target).
fn shape(iv: &Interval, as_target: bool) -> Shape {
    let lc = if iv.lo().is_finite() { iv.lo_closed() } else { as_target };
    let hc = if iv.hi().is_finite() { iv.hi_closed() } else { as_target };
    match (lc, hc) {
        (false, false) => Shape::Open,
        (true, true) => Shape::Closed,
        (true, false) => Shape::ClosedOpen,
        (false, true) => Shape::OpenClosed,
    }
}

struct Cmp(Tolerance);

impl Cmp {
    fn lt(&self, x: Endpoint, y: Endpoint) -> bool {
        self.0.lt(x, y)
    }
    fn le(&self, x: Endpoint, y: Endpoint) -> bool {
        self.0.le(x, y)
    }
}

/// `dim Hom(k_I, k_J)` in sheaves.
pub(crate) fn hom0(i: &Interval, j: &Interval, tol: Tolerance) -> u32 {
    use Shape::*;
    let (a, b, c, d) = (i.lo(), i.hi(), j.lo(), j.hi());
    let t = Cmp(tol);
    let nonzero = match (shape(i, false), shape(j, true)) {
        (Open, Open) => t.le(c, a) && t.le(b, d),
        (Open, Closed) => t.lt(c, b) && t.lt(a, d),
        (Open, ClosedOpen) => t.lt(c, b) && t.le(b, d),
        (Open, OpenClosed) => t.le(c, a) && t.lt(a, d),
        (Closed, Closed) => t.le(a, c) && t.le(d, b),
        (ClosedOpen, Closed) => t.le(a, c) && t.lt(c, b),
        (ClosedOpen, ClosedOpen) => t.le(a, c) && t.lt(c, b) && t.le(b, d),
        (OpenClosed, Closed) => t.lt(a, d) && t.le(d, b),
        (OpenClosed, OpenClosed) => t.le(c, a) && t.lt(a, d) && t.le(d, b),
        _ => false,
    };
    nonzero as u32
}

/// `dim Ext¹(k_I, k_J)`.
pub(crate) fn ext1(i: &Interval, j: &Interval, tol: Tolerance) -> u32 {
    use Shape::*;
    let (a, b, c, d) = (i.lo(), i.hi(), j.lo(), j.hi());
    let t = Cmp(tol);
    let nonzero = match (shape(i, false), shape(j, true)) {
        (Open, Open) => t.lt(a, c) && t.lt(d, b),
        (Closed, Open) => t.le(a, d) && t.le(c, b),
        (Closed, Closed) => t.lt(c, a) && t.lt(b, d),
        (Closed, ClosedOpen) => t.lt(c, a) && t.le(a, d),
        (Closed, OpenClosed) => t.le(c, b) && t.lt(b, d),
        (ClosedOpen, Open) => t.le(a, d) && t.lt(d, b),
        (ClosedOpen, ClosedOpen) => t.lt(c, a) && t.le(a, d) && t.lt(d, b),
        (OpenClosed, Open) => t.lt(a, c) && t.le(c, b),
        (OpenClosed, OpenClosed) => t.lt(a, c) && t.le(c, b) && t.lt(b, d),
        _ => false,
    };
    nonzero as u32
}

/// Dimension (0 or 1) of `Hom(source, target)` in the derived category.
pub fn hom_dim(q: &HomQuery, tol: Tolerance) -> u32 {
    let (i, j) = (&q.source.interval, &q.target.interval);
    match q.ext_degree() {
        0 => hom0(i, j, tol),
        1 => ext1(i, j, tol),
        _ => 0,
    }
}

/// Whether the composite of the canonical generators `I → J → K` is nonzero.
///
/// Each canonical generator is the identity on stalks over the overlap of its
/// source and target, so the composite is the generator of `Hom(k_I, k_K)`
/// when that space is nonzero and `I ∩ J ∩ K` is inhabited, and zero
/// otherwise. Both factors must be nonzero.
pub fn generator_composite_nonzero(
    i: &Interval,
    j: &Interval,
    k: &Interval,
    tol: Tolerance,
) -> Result<bool> {
    if hom0(i, j, tol) == 0 || hom0(j, k, tol) == 0 {
        return Err(Error::Precondition(format!(
            "Hom(k_{i}, k_{j}) and Hom(k_{j}, k_{k}) must both be nonzero"
        )));
    }
    let meet = i.intersect(j).and_then(|ij| ij.intersect(k));
    Ok(hom0(i, k, tol) == 1 && meet.is_some())
}

/// A two-term complex of sums of interval sheaves, in degrees -1 and 0 (left
/// resolutions) or 0 and 1 (right resolutions). `arrows` lists the nonzero
/// components `(from, to)` of the differential; all carry coefficient +1.
struct TwoTerm {
    first: Vec<Interval>,
    second: Vec<Interval>,
    arrows: Vec<(usize, usize)>,
}

fn ray_below(a: f64) -> Interval {
    Interval::open(f64::NEG_INFINITY, a).expect("ray")
}

fn ray_above(b: f64) -> Interval {
    Interval::open(b, f64::INFINITY).expect("ray")
}

/// `0 → O⁻¹ → O⁰ → k_I → 0` with open intervals.
fn open_resolution(iv: &Interval) -> TwoTerm {
    let (a, b) = (iv.lo().to_f64(), iv.hi().to_f64());
    match (iv.lo_closed(), iv.hi_closed()) {
        (false, false) => TwoTerm {
            first: vec![],
            second: vec![*iv],
            arrows: vec![],
        },
        (true, true) => TwoTerm {
            first: vec![ray_below(a), ray_above(b)],
            second: vec![Interval::real_line()],
            arrows: vec![(0, 0), (1, 0)],
        },
        (true, false) => TwoTerm {
            first: vec![ray_below(a)],
            second: vec![ray_below(b)],
            arrows: vec![(0, 0)],
        },
        (false, true) => TwoTerm {
            first: vec![ray_above(b)],
            second: vec![ray_above(a)],
            arrows: vec![(0, 0)],
        },
    }
}

/// `0 → k_J → K⁰ → K¹ → 0` with closed intervals.
fn closed_resolution(iv: &Interval) -> TwoTerm {
    let (c, d) = (iv.lo().to_f64(), iv.hi().to_f64());
    let mut points = Vec::new();
    if !iv.lo_closed() {
        points.push(Interval::point(c).expect("point"));
    }
    if !iv.hi_closed() {
        points.push(Interval::point(d).expect("point"));
    }
    let arrows = (0..points.len()).map(|p| (0, p)).collect();
    TwoTerm {
        first: vec![Interval::closed(c, d).expect("closure")],
        second: points,
        arrows,
    }
}

/// Rank of a small integer matrix, by exact fraction-free elimination.
fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][col] != 0 {
                let (f, g) = (m[i][col], m[r][col]);
                for k in 0..cols {
                    m[i][k] = m[i][k] * g - m[r][k] * f;
                }
                let gcd = m[i].iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
                if gcd > 1 {
                    m[i].iter_mut().for_each(|x| *x /= gcd);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `dim Extⁿ(k_I, k_J)` from the total complex of
/// `Hom^{•,•}(O•(k_I), K•(k_J))`, with `n` the query's degree difference.
///
/// The entries of the double complex are evaluated with the degree-0 table
/// and the differentials with [`generator_composite_nonzero`]; the result is
/// `dim Homⁿ − rank dⁿ − rank dⁿ⁻¹`. Only bounded intervals are supported.
pub fn ext_oracle(q: &HomQuery, tol: Tolerance) -> Result<u32> {
    let (i, j) = (&q.source.interval, &q.target.interval);
    if !i.is_bounded() || !j.is_bounded() {
        return Err(Error::Unsupported(format!(
            "resolutions are only available for bounded intervals, got k_{i} → k_{j}"
        )));
    }
    let n = q.ext_degree();
    let o = open_resolution(i);
    let k = closed_resolution(j);
    let o_at = |deg: i64| match deg {
        -1 => &o.first[..],
        0 => &o.second[..],
        _ => &[][..],
    };
    let k_at = |deg: i64| match deg {
        0 => &k.first[..],
        1 => &k.second[..],
        _ => &[][..],
    };

    // Basis of Homᵐ: generators of Hom(O^p[x], K^q[y]) with q − p = m.
    let basis = |m: i64| -> Vec<(i64, usize, i64, usize)> {
        let mut out = Vec::new();
        for p in [-1i64, 0] {
            let q = m + p;
            for (x, src) in o_at(p).iter().enumerate() {
                for (y, dst) in k_at(q).iter().enumerate() {
                    if hom0(src, dst, tol) == 1 {
                        out.push((p, x, q, y));
                    }
                }
            }
        }
        out
    };

    // dᵐ f = d_K ∘ f − (−1)ᵐ f ∘ d_O
    let differential = |m: i64| -> Result<Vec<Vec<i128>>> {
        let src = basis(m);
        let dst = basis(m + 1);
        let mut mat = vec![vec![0i128; src.len()]; dst.len()];
        let find = |key: (i64, usize, i64, usize)| dst.iter().position(|&b| b == key);
        for (col, &(p, x, q, y)) in src.iter().enumerate() {
            let from = &o_at(p)[x];
            let to = &k_at(q)[y];
            if q == 0 {
                for &(y0, y1) in k.arrows.iter().filter(|&&(y0, _)| y0 == y) {
                    let next = &k.second[y1];
                    if hom0(to, next, tol) == 1 && generator_composite_nonzero(from, to, next, tol)? {
                        if let Some(row) = find((p, x, 1, y1)) {
                            mat[row][col] += 1;
                        }
                    }
                    let _ = y0;
                }
            }
            if p == 0 {
                let sign = if m % 2 == 0 { -1 } else { 1 };
                for &(x0, _) in o.arrows.iter().filter(|&&(_, x1)| x1 == x) {
                    let prev = &o.first[x0];
                    if hom0(prev, from, tol) == 1 && generator_composite_nonzero(prev, from, to, tol)? {
                        if let Some(row) = find((-1, x0, q, y)) {
                            mat[row][col] += sign;
                        }
                    }
                }
            }
        }
        Ok(mat)
    };

    let dim = basis(n).len();
    let out_rank = rank(differential(n)?);
    let in_rank = rank(differential(n - 1)?);
    Ok((dim - out_rank - in_rank) as u32)
}
