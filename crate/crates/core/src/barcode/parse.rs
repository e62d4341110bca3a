//! The `.gbc` text format.
//!
//! One entry per line, `<degree> <interval>`, e.g. `1 (0,2]` or `0 [3,inf)`.
//! `#` starts a comment; blank lines are ignored; repeated lines encode
//! multiplicity.

use super::{Endpoint, GradedBarcode, GradedInterval, Interval};
use crate::error::{Error, Result};

pub(crate) fn parse_endpoint(s: &str) -> Option<Endpoint> {
    match s {
        "inf" | "+inf" => return Some(Endpoint::PosInf),
        "-inf" => return Some(Endpoint::NegInf),
        _ => {}
    }
    // Plain decimals only: reject "nan", "infinity" and friends.
    if !s
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'))
    {
        return None;
    }
    let x: f64 = s.parse().ok()?;
    x.is_finite().then(|| Endpoint::from_f64(x))
}

/// Parses an interval literal such as `[0,1)` or `(-inf,2]`.
pub fn parse_interval(s: &str) -> std::result::Result<Interval, String> {
    let s = s.trim();
    let mut chars = s.chars();
    let lo_closed = match chars.next() {
        Some('[') => true,
        Some('(') => false,
        _ => return Err(format!("`{s}`: expected `[` or `(`")),
    };
    let hi_closed = match chars.next_back() {
        Some(']') => true,
        Some(')') => false,
        _ => return Err(format!("`{s}`: expected `]` or `)`")),
    };
    let body = chars.as_str();
    let (a, b) = body
        .split_once(',')
        .ok_or_else(|| format!("`{s}`: expected two endpoints separated by `,`"))?;
    let lo = parse_endpoint(a).ok_or_else(|| format!("`{s}`: bad number `{a}`"))?;
    let hi = parse_endpoint(b).ok_or_else(|| format!("`{s}`: bad number `{b}`"))?;
    Interval::new(lo, lo_closed, hi, hi_closed).map_err(|e| e.to_string())
}

/// Parses `I@j`, the command-line form of a graded interval.
pub fn parse_graded_interval(s: &str) -> Result<GradedInterval> {
    let (iv, deg) = s
        .rsplit_once('@')
        .ok_or_else(|| Error::parse(1, format!("`{s}`: expected `<interval>@<degree>`")))?;
    let degree = deg
        .trim()
        .parse::<i64>()
        .map_err(|_| Error::parse(1, format!("`{s}`: bad degree `{deg}`")))?;
    let interval = parse_interval(iv).map_err(|m| Error::parse(1, m))?;
    Ok(GradedInterval::new(interval, degree))
}

pub fn parse_barcode(text: &str) -> Result<GradedBarcode> {
    let mut items = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(deg), Some(iv), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::parse(line_no, format!("expected `<degree> <interval>`, got `{line}`")));
        };
        let degree = deg
            .parse::<i64>()
            .map_err(|_| Error::parse(line_no, format!("bad degree `{deg}`")))?;
        let interval = parse_interval(iv).map_err(|m| Error::parse(line_no, m))?;
        items.push(GradedInterval::new(interval, degree));
    }
    Ok(GradedBarcode::new(items))
}

/// Canonical `.gbc` text: one line per item, in canonical order.
pub fn format_barcode(b: &GradedBarcode) -> String {
    b.iter()
        .map(|gi| format!("{} {}\n", gi.degree, gi.interval))
        .collect()
}
