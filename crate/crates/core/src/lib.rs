//! Graded barcodes of constructible sheaves on the real line.
//!
//! An object of the bounded derived category of constructible sheaves on ℝ
//! is determined up to isomorphism by a finite multiset of intervals, each
//! tagged with the cohomological degree it sits in. This crate models those
//! *graded barcodes* and computes, exactly, the convolution distance between
//! two of them as a bottleneck matching problem.
//!
//! Module map:
//!
//! - [`barcode`]: intervals, graded barcodes, the central/right/left split,
//!   the `.gbc` text format and global-section dimensions.
//! - [`hom`]: dimensions of morphism spaces between indecomposables in
//!   degree shifts 0 and 1, plus an Ext oracle built from resolutions.
//! - [`convolution`]: the functor `− ⋆ K_ε` on barcodes, for any real ε.
//! - [`cost`]: closed-form interleaving costs between indecomposables.
//! - [`bottleneck`]: exact bottleneck distance and an optimal matching.
//! - [`interpolation`]: barcode-level geodesics between matched barcodes.
//! - [`bridge`]: translation between half-open parts and persistence diagrams.
//! - [`cli`]: the `sheafdist` command line.

pub mod barcode;
pub mod bottleneck;
pub mod bridge;
pub mod cli;
pub mod convolution;
pub mod cost;
mod error;
pub mod hom;
pub mod interpolation;
mod tolerance;

pub use barcode::{
    classify, format_barcode, global_sections, parse_barcode, parse_graded_interval, split_clr,
    ClrSplit, Endpoint, GradedBarcode, GradedDims, GradedInterval, Interval, IntervalType, Side,
};
pub use bottleneck::{
    bruteforce_distance, distance, distance_with_matching, part_bottleneck, Matching, PartKind,
};
pub use convolution::{convolve_barcode, convolve_interval, stalk_type};
pub use cost::{deletion_cost, pair_cost, Cost};
pub use error::{Error, Result};
pub use hom::{ext_oracle, generator_composite_nonzero, hom_dim, HomQuery};
pub use interpolation::{interpolate, pair_path, same_component};
pub use tolerance::Tolerance;
