//! The `sheafdist` command line.
//!
//! Every verb reads `.gbc` (or `.pdg`) files and writes plain text, one
//! record per line. Exit codes: 0 on success (an infinite distance is a
//! success and prints `inf`), 1 on domain errors, 2 on usage, I/O or parse
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::barcode::{
    format_barcode, global_sections, parse_barcode, parse_graded_interval, split_clr, GradedBarcode, Side,
};
use crate::bottleneck::{distance, distance_with_matching};
use crate::bridge::{from_persistence, parse_diagrams};
use crate::convolution::convolve_barcode;
use crate::error::Error;
use crate::hom::{hom_dim, HomQuery};
use crate::interpolation::{interpolate, same_component};
use crate::tolerance::Tolerance;

#[derive(Debug, Parser)]
#[command(
    name = "sheafdist",
    version,
    about = "Graded barcodes of sheaves on the real line and their convolution distance",
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Absolute tolerance for endpoint comparisons.
    #[arg(long, global = true, env = "SHEAFDIST_TOL", default_value_t = 1e-9)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a barcode and summarize its parts.
    Validate { file: PathBuf },
    /// Print the convolution distance between two barcodes.
    Dist { a: PathBuf, b: PathBuf },
    /// Print the distance and an optimal matching, one pair per line.
    Match { a: PathBuf, b: PathBuf },
    /// Convolve a barcode with the kernel K_eps.
    Convolve {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
    },
    /// Print the barcode at time t on a geodesic from A to B.
    Interpolate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        t: f64,
    },
    /// Dimension of Hom(I@i, J@j) in the derived category.
    Hom { source: String, target: String },
    /// Dimensions of global sections per degree.
    Gamma {
        file: PathBuf,
        /// Use compactly supported sections.
        #[arg(long)]
        compact: bool,
    },
    /// Whether two barcodes are at finite distance.
    Component { a: PathBuf, b: PathBuf },
    /// Convert a persistence diagram file into a barcode.
    ImportDiagram {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::R)]
        side: SideArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    R,
    L,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::R => Side::Right,
            SideArg::L => Side::Left,
        }
    }
}

/// Why a command failed, and with which exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidInterval(_) => Failure::Input(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GradedBarcode, Failure> {
    parse_barcode(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(Failure::Input(format!("--tol must be a nonnegative number, got {}", cli.tol)));
    }
    let tol = Tolerance::new(cli.tol);
    let text = match &cli.command {
        Command::Validate { file } => {
            let b = load(file)?;
            let s = split_clr(&b);
            let count = |m: &std::collections::BTreeMap<i64, Vec<_>>| m.values().map(Vec::len).sum::<usize>();
            format!(
                "ok {} intervals: {} central, {} right, {} left\n",
                b.len(),
                count(&s.central),
                count(&s.right),
                count(&s.left)
            )
        }
        Command::Dist { a, b } => {
            format!("{}\n", distance(&load(a)?, &load(b)?))
        }
        Command::Match { a, b } => {
            let (d, m) = distance_with_matching(&load(a)?, &load(b)?);
            let mut text = format!("{d}\n");
            for line in m.lines() {
                text.push_str(&line);
                text.push('\n');
            }
            text
        }
        Command::Convolve { file, eps } => {
            if !eps.is_finite() {
                return Err(Failure::Input(format!("--eps must be finite, got {eps}")));
            }
            format_barcode(&convolve_barcode(&load(file)?, *eps, tol))
        }
        Command::Interpolate { a, b, t } => {
            let (f, g) = (load(a)?, load(b)?);
            let (d, m) = distance_with_matching(&f, &g);
            // Snap times within the tolerance of the ends of [0, d].
            let t = if d.is_finite() && tol.eq_f64(*t, d.value()) {
                d.value()
            } else if tol.eq_f64(*t, 0.0) {
                0.0
            } else {
                *t
            };
            format_barcode(&interpolate(&f, &g, &m, t)?)
        }
        Command::Hom { source, target } => {
            let q = HomQuery::new(parse_graded_interval(source)?, parse_graded_interval(target)?);
            format!("{}\n", hom_dim(&q, tol))
        }
        Command::Gamma { file, compact } => {
            global_sections(&load(file)?, *compact).to_string()
        }
        Command::Component { a, b } => {
            format!("{}\n", same_component(&load(a)?, &load(b)?))
        }
        Command::ImportDiagram { file, side } => {
            let diagrams =
                parse_diagrams(&read(file)?).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let mut bars = Vec::new();
            for d in &diagrams {
                bars.extend(from_persistence(d, (*side).into())?);
            }
            format_barcode(&GradedBarcode::new(bars))
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Input(format!("writing output: {e}")))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `out`, diagnostics and usage to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let code = f.code();
            let (Failure::Input(m) | Failure::Domain(m)) = f;
            let _ = writeln!(err, "sheafdist: {m}");
            code
        }
    }
}
