//! Half-open parts of a barcode as persistence diagrams.
//!
//! The right part of degree `j` is the barcode of a one-parameter
//! persistence module: `[a,b)@j` becomes the pair `(a, b)`, read as the
//! interval module on `[a,b)`. Left bars `(a,b]` are reflected through the
//! origin first, becoming `(−b, −a)`, so that both sides share one
//! convention and one matching engine. The translation is lossless and
//! preserves bottleneck distances.
//!
//! The identification is at the level of barcodes. The interleaving distance
//! of persistence modules is not closed, so distinct modules can be at
//! distance zero; the sheaf side has no such ambiguity.
//!
//! Diagrams are read from `.pdg` text: one `<degree> <birth> <death>` per
//! line, with `-inf`/`inf` allowed and `#` comments.

use std::collections::BTreeMap;

use crate::barcode::{parse::parse_endpoint, ClrSplit, Endpoint, GradedInterval, Interval, Side};
use crate::error::{Error, Result};

/// A multiset of `(birth, death)` pairs with `birth < death`, in one degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PersistenceDiagram {
    pub degree: i64,
    pub pairs: Vec<(Endpoint, Endpoint)>,
}

impl PersistenceDiagram {
    /// Sorts the pairs, so that `==` is multiset equality.
    pub fn new(degree: i64, mut pairs: Vec<(Endpoint, Endpoint)>) -> Self {
        pairs.sort();
        PersistenceDiagram { degree, pairs }
    }
}

fn to_pair(iv: &Interval, side: Side) -> (Endpoint, Endpoint) {
    match side {
        Side::Right => (iv.lo(), iv.hi()),
        Side::Left => (iv.hi().neg(), iv.lo().neg()),
    }
}

/// The diagram of the `side` part of `split` in degree `degree`.
pub fn to_persistence(split: &ClrSplit, side: Side, degree: i64) -> PersistenceDiagram {
    let pairs = split
        .side(side)
        .get(&degree)
        .map(|bars| bars.iter().map(|gi| to_pair(&gi.interval, side)).collect())
        .unwrap_or_default();
    PersistenceDiagram::new(degree, pairs)
}

/// The bars on `side` whose diagram is `d`; inverse of [`to_persistence`].
///
/// Fails only on the pair `(−∞, +∞)` with `side = L`: the whole line is a
/// right-type interval.
pub fn from_persistence(d: &PersistenceDiagram, side: Side) -> Result<Vec<GradedInterval>> {
    d.pairs
        .iter()
        .map(|&(birth, death)| {
            let (lo, hi) = match side {
                Side::Right => (birth, death),
                Side::Left => (death.neg(), birth.neg()),
            };
            let (lc, hc) = match side {
                Side::Right => (lo.is_finite(), false),
                Side::Left => (false, hi.is_finite()),
            };
            let iv = Interval::new(lo, lc, hi, hc)?;
            if iv.lo() == Endpoint::NegInf && iv.hi() == Endpoint::PosInf && side == Side::Left {
                return Err(Error::Unsupported(
                    "(-inf, inf) is not a left-type interval".into(),
                ));
            }
            Ok(GradedInterval::new(iv, d.degree))
        })
        .collect()
}

/// Parses `.pdg` text into one diagram per degree, in increasing degree.
pub fn parse_diagrams(text: &str) -> Result<Vec<PersistenceDiagram>> {
    let mut by_degree: BTreeMap<i64, Vec<(Endpoint, Endpoint)>> = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [deg, birth, death] = fields[..] else {
            return Err(Error::parse(line_no, format!("expected `<degree> <birth> <death>`, got `{line}`")));
        };
        let degree = deg
            .parse::<i64>()
            .map_err(|_| Error::parse(line_no, format!("bad degree `{deg}`")))?;
        let num = |s: &str| parse_endpoint(s).ok_or_else(|| Error::parse(line_no, format!("bad number `{s}`")));
        let (b, d) = (num(birth)?, num(death)?);
        if b >= d {
            return Err(Error::parse(line_no, format!("birth {b} must be smaller than death {d}")));
        }
        by_degree.entry(degree).or_default().push((b, d));
    }
    Ok(by_degree
        .into_iter()
        .map(|(degree, pairs)| PersistenceDiagram::new(degree, pairs))
        .collect())
}

/// Canonical `.pdg` text.
pub fn format_diagrams(diagrams: &[PersistenceDiagram]) -> String {
    diagrams
        .iter()
        .flat_map(|d| d.pairs.iter().map(move |(b, e)| format!("{} {b} {e}\n", d.degree)))
        .collect()
}
