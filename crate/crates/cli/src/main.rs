//! `so21`: batch evaluation of SO₀(2,1) and ISO(2,1) quantities.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as Complex;
use so21_core::numerics::Config;
use so21_core::verify::DEFAULT_SEED;

use output::{write_records, Format};
use parse::{parse_complex_list, parse_int_grid, parse_real_grid, parse_vec3};

const AFTER_HELP: &str = "\
Value syntax:
  reals and integers   0.5 | 0,0.5,1 | start:stop:step (inclusive)
  complex              a+bi | a-bi | bi | a

Output:
  One record per evaluated point, in input order. JSON-lines records hold
  `inputs` (echo of the parsed parameters), value_re, value_im, err_estimate,
  terms_used, status, message, and any subcommand-specific extras. CSV uses the
  same order: input columns, then value_re, value_im, err_estimate,
  terms_used, status, message, then extras. Reals carry 17 significant digits.
  Non-ok records have null (empty) value fields.

Exit codes: 0 all records ok, 2 usage error, 3 at least one record not ok.";

#[derive(Parser, Debug)]
#[command(name = "so21", version, about = "Tables of SO(2,1) special functions, Wigner coefficients and ISO(2,1) kinematics", after_help = AFTER_HELP)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// relative tolerance for series truncation
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    /// cap on series terms
    #[arg(long, global = true, default_value_t = 200_000)]
    max_terms: usize,
    /// nodes per axis for quadrature paths
    #[arg(long, global = true, default_value_t = 1024)]
    quad_points: usize,
    /// seed for the randomized verification suites
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

impl Global {
    fn config(&self) -> Config {
        Config { tol: self.tol, max_terms: self.max_terms, quad_points: self.quad_points }
    }
}

#[derive(Debug, Clone)]
pub struct RealGrid(pub Vec<f64>);
#[derive(Debug, Clone)]
pub struct IntGrid(pub Vec<i64>);
#[derive(Debug, Clone)]
pub struct ComplexList(pub Vec<Complex>);
#[derive(Debug, Clone, Copy)]
pub struct Triple(pub [f64; 3]);

fn real_grid(s: &str) -> Result<RealGrid, String> {
    parse_real_grid(s).map(RealGrid)
}
fn int_grid(s: &str) -> Result<IntGrid, String> {
    parse_int_grid(s).map(IntGrid)
}
fn complex_list(s: &str) -> Result<ComplexList, String> {
    parse_complex_list(s).map(ComplexList)
}
fn triple(s: &str) -> Result<Triple, String> {
    parse_vec3(s).map(Triple)
}
fn int_triple(s: &str) -> Result<[i64; 3], String> {
    parse::parse_triple(parse_int_grid(s)?, "--ms")
}
fn complex_triple(s: &str) -> Result<[Complex; 3], String> {
    parse::parse_triple(parse_complex_list(s)?, "--sigmas")
}
fn matrix9(s: &str) -> Result<[f64; 9], String> {
    parse_real_grid(s)?.try_into().map_err(|_| "--matrix needs nine row-major entries".to_string())
}

/// Group element rotation(φ₁)·boost02(α)·rotation(φ₂), or an explicit matrix.
#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi2: f64,
    /// nine row-major entries; overrides the angles
    #[arg(long, value_parser = matrix9, allow_negative_numbers = true)]
    matrix: Option<[f64; 9]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Series,
    #[value(name = "3h3")]
    H33,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AssocPath {
    Closed,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrbitKind {
    Massive,
    Tachyonic,
    Lightlike,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// zonal spherical function; inputs: sigma, alpha
    Zonal {
        #[arg(long, value_parser = complex_list, allow_negative_numbers = true)]
        sigma: ComplexList,
        #[arg(long = "alpha-grid", alias = "alpha", value_parser = real_grid, allow_negative_numbers = true)]
        alpha: RealGrid,
    },
    /// associated spherical function; inputs: sigma, m, alpha, path
    Assoc {
        #[arg(long, value_parser = complex_list, allow_negative_numbers = true)]
        sigma: ComplexList,
        #[arg(long, value_parser = int_grid, allow_negative_numbers = true)]
        m: IntGrid,
        #[arg(long = "alpha-grid", alias = "alpha", value_parser = real_grid, allow_negative_numbers = true)]
        alpha: RealGrid,
        #[arg(long, value_enum, default_value_t = AssocPath::Closed)]
        path: AssocPath,
    },
    /// representation matrix element t_{m_out, m_in}(g); inputs: sigma, m_out, m_in, phi1, alpha, phi2
    MatrixElement {
        #[arg(long, value_parser = complex_list, allow_negative_numbers = true)]
        sigma: ComplexList,
        #[arg(long, value_parser = int_grid, allow_negative_numbers = true)]
        m_out: IntGrid,
        #[arg(long, value_parser = int_grid, allow_negative_numbers = true)]
        m_in: IntGrid,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Fourier coefficients of (1 - cos psi)^lambda, or the reconstructed sum with --psi-grid;
    /// inputs: lambda, m | psi
    FourierLambda {
        #[arg(long, value_parser = complex_list, allow_negative_numbers = true)]
        lambda: ComplexList,
        #[arg(long, value_parser = int_grid, allow_negative_numbers = true, required_unless_present = "psi")]
        m: Option<IntGrid>,
        #[arg(long = "psi-grid", alias = "psi", id = "psi", value_parser = real_grid, conflicts_with = "m")]
        psi: Option<RealGrid>,
    },
    /// Gamma(m+sigma+1)/Gamma(m-sigma); inputs: sigma, m
    PhiM {
        #[arg(long, value_parser = complex_list, allow_negative_numbers = true)]
        sigma: ComplexList,
        #[arg(long, value_parser = int_grid, allow_negative_numbers = true)]
        m: IntGrid,
    },
    /// normalized Wigner coefficient; inputs: sigma1..3, m1..3, method. --ms may repeat.
    Wigner3 {
        #[arg(long, value_parser = complex_triple, allow_negative_numbers = true)]
        sigmas: [Complex; 3],
        #[arg(long, value_parser = int_triple, allow_negative_numbers = true, required = true)]
        ms: Vec<[i64; 3]>,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
    },
    /// quadrature value of the Wigner coefficient; inputs: sigma1..3, m1..3, points
    Wigner3Oracle {
        #[arg(long, value_parser = complex_triple, allow_negative_numbers = true)]
        sigmas: [Complex; 3],
        #[arg(long, value_parser = int_triple, allow_negative_numbers = true, required = true)]
        ms: Vec<[i64; 3]>,
        /// nodes per axis; defaults to --quad-points
        #[arg(long)]
        points: Option<usize>,
    },
    /// truncated covariance residual of a Wigner coefficient; inputs: sigma1..3, m1..3, truncation
    CovarianceCheck {
        #[arg(long, value_parser = complex_triple, allow_negative_numbers = true)]
        sigmas: [Complex; 3],
        #[arg(long, value_parser = int_triple, allow_negative_numbers = true)]
        ms: [i64; 3],
        #[arg(long, value_parser = int_grid, default_value = "6,8,10,12")]
        truncation: IntGrid,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// orbit class and chart coordinates of a momentum; inputs: p0, p1, p2.
    /// value = p.p; extras: class, chart_x, chart_y
    Orbit {
        #[arg(long, value_parser = triple, allow_negative_numbers = true, required = true)]
        p: Vec<Triple>,
        /// classification tolerance; default 1e-9 (1 + |p|^2)
        #[arg(long = "orbit-tol")]
        orbit_tol: Option<f64>,
    },
    /// Wigner rotation h^-1(p) r h(r^-1 p); inputs: p0, p1, p2. value = little-group parameter; extras: kind
    WignerRotation {
        #[arg(long, value_parser = triple, allow_negative_numbers = true, required = true)]
        p: Vec<Triple>,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// induced-representation multiplier of (a, r) at p; inputs: label, p0, p1, p2.
    /// extras: q0, q1, q2 (the momentum r^-1 p)
    InducedAction {
        /// mass:M:S | tachyonic:M:S | helicity:L | boundary:SIGMA
        #[arg(long)]
        label: String,
        #[arg(long, value_parser = triple, allow_negative_numbers = true, required = true)]
        p: Vec<Triple>,
        /// translation part
        #[arg(long, value_parser = triple, allow_negative_numbers = true, default_value = "0,0,0")]
        a: Triple,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// quasi-invariant orbit measure density; inputs: class, x, y
    Measure {
        #[arg(long, value_enum)]
        class: OrbitKind,
        #[arg(long = "x-grid", alias = "x", value_parser = real_grid, allow_negative_numbers = true)]
        x: RealGrid,
        #[arg(long = "y-grid", alias = "y", value_parser = real_grid, allow_negative_numbers = true)]
        y: RealGrid,
    },
    /// run the verification suites; inputs: criterion, name. value = 1 on pass; extras: detail
    Verify {
        /// all, a criterion number, or a suite name
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = cli.global.config();
    let records = match commands::run(cli.cmd, &cfg, cli.global.seed) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let stdout = std::io::stdout();
    if let Err(e) = write_records(stdout.lock(), &records, cli.global.format) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    if records.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
