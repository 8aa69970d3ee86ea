//! `b3cert`: exact certificates for Burau images of B₃, triangle groups and
//! free-group identities.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

/// Version of the JSON envelope layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "b3cert", version, about = "Exact certificates for B3 Burau images, triangle groups and free groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; SVG only for `geom tessellate`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Add wall-clock timings to the envelope (breaks byte-for-byte
    /// reproducibility).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Burau matrices, invariant forms and SO(3) images.
    #[command(subcommand)]
    Burau(BurauCmd),
    /// Disk model geometry and tessellations.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Presentations, relation checks and membership.
    #[command(subcommand)]
    Triangle(TriangleCmd),
    /// Free-group certificates.
    #[command(subcommand)]
    Free(FreeCmd),
    /// Braid word utilities.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Run a named batch of checks.
    Suite(SuiteArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct RootArgs {
    /// Order n of the root of unity q.
    #[arg(long)]
    pub n: u32,
    /// Galois exponent m, q = exp(2πi m/n).
    #[arg(long, default_value_t = 1)]
    pub galois: i64,
}

#[derive(Args, Debug, Serialize)]
pub struct RootWordArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub root: RootArgs,
    /// Braid word, e.g. "g1 g2^-1" or "1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, default_value_t = 3)]
    pub strands: usize,
}

#[derive(Subcommand, Debug)]
pub enum BurauCmd {
    /// β_{−q}(word) exactly at q = ζ_n^m.
    Eval(RootWordArgs),
    /// Signature class of the invariant form at q = ζ_n^m.
    Classify(RootArgs),
    /// SO(3) rotation of the Jones image of a B₃ word at α = 2πm/n.
    So3(RootWordArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct TessellateArgs {
    /// Δ(k,k,k) with k ≥ 4.
    #[arg(long)]
    pub k: u32,
    /// Word-length depth of the orbit.
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    pub coloring: Toggle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Toggle {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
pub enum GeomCmd {
    /// The triangle OPQ of fixed points in the disk model.
    Triangle(RootArgs),
    /// SVG of the Δ(k,k,k) tessellation.
    Tessellate(TessellateArgs),
    /// Isometry class and rotation data of β̄_{−q}(word).
    Classify(RootWordArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct KArgs {
    #[arg(long)]
    pub k: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct MemberArgs {
    /// Δ(k,k,k) with n = 2k.
    #[arg(long)]
    pub k: u32,
    #[arg(long, default_value_t = 1)]
    pub galois: i64,
    /// B₃ word whose image is tested; A and B stand for g1^2 and g2^2.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ClosureArgs {
    /// Order of t = −q.
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub galois: i64,
    #[arg(long, default_value_t = 10_000)]
    pub bound: usize,
}

#[derive(Subcommand, Debug)]
pub enum TriangleCmd {
    /// Relators of β_{−q}(B₃) and of Γ_{−q}.
    Presentation(RootArgs),
    /// Evaluate every relator exactly.
    Verify(RootArgs),
    /// Membership certificate for Δ(k,k,k).
    Member(MemberArgs),
    /// Enumerate a finite image.
    Closure(ClosureArgs),
    /// Δ(2,3,2k+1) generator dictionary, verified.
    Iso(KArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct DArgs {
    #[arg(long = "D")]
    pub d: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct H1Args {
    #[arg(long = "D")]
    pub d: u32,
    #[arg(long = "F")]
    pub f: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct FreeWordArgs {
    /// Free word, e.g. "x1 x2^-1", "[[x1,x2],x1]" or "1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Rank of the free group; defaults to the largest generator used.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Magnus truncation degree.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
}

#[derive(Subcommand, Debug)]
pub enum FreeCmd {
    /// (ab)^D a^{−D} b^{−D} as a product of commutators.
    Identity(DArgs),
    /// Normal form of (ab)^k in ℤ/k ∗ ℤ/k.
    Witness(KArgs),
    /// Class of [a^F, b^F] in H₁ of the commutator subgroup of Δ(D,D,D).
    H1(H1Args),
    /// Lower-central depth via the Magnus expansion.
    Depth(FreeWordArgs),
    /// The doubling map x_i ↦ [y_i, z_i] and its effect on depth.
    Zeta(FreeWordArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct EqualArgs {
    /// Two braid words.
    #[arg(long, num_args = 1, required = true, allow_hyphen_values = true)]
    pub word: Vec<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct WordArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Equality in B₃.
    Equal(EqualArgs),
    /// Write a pure braid as a word in A, B times a power of the center.
    Rewrite(WordArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct SuiteArgs {
    /// theorem-b3, geometry, squier, johnson or h1.
    pub name: String,
}

/// A computed result before wrapping.
pub enum Output {
    Json {
        result: Value,
        exact_verified: bool,
        /// A mathematical negative: exit status 1.
        negative: bool,
    },
    Svg(String),
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(std::io::Error),
}

impl From<braid_image::Error> for CliError {
    fn from(e: braid_image::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn echo(cli: &Cli) -> Result<(String, Value), CliError> {
    fn args<T: Serialize>(a: &T) -> Result<Value, CliError> {
        Ok(serde_json::to_value(a)?)
    }
    Ok(match &cli.command {
        Command::Burau(c) => match c {
            BurauCmd::Eval(a) => ("burau eval".into(), args(a)?),
            BurauCmd::Classify(a) => ("burau classify".into(), args(a)?),
            BurauCmd::So3(a) => ("burau so3".into(), args(a)?),
        },
        Command::Geom(c) => match c {
            GeomCmd::Triangle(a) => ("geom triangle".into(), args(a)?),
            GeomCmd::Tessellate(a) => ("geom tessellate".into(), args(a)?),
            GeomCmd::Classify(a) => ("geom classify".into(), args(a)?),
        },
        Command::Triangle(c) => match c {
            TriangleCmd::Presentation(a) => ("triangle presentation".into(), args(a)?),
            TriangleCmd::Verify(a) => ("triangle verify".into(), args(a)?),
            TriangleCmd::Member(a) => ("triangle member".into(), args(a)?),
            TriangleCmd::Closure(a) => ("triangle closure".into(), args(a)?),
            TriangleCmd::Iso(a) => ("triangle iso".into(), args(a)?),
        },
        Command::Free(c) => match c {
            FreeCmd::Identity(a) => ("free identity".into(), args(a)?),
            FreeCmd::Witness(a) => ("free witness".into(), args(a)?),
            FreeCmd::H1(a) => ("free h1".into(), args(a)?),
            FreeCmd::Depth(a) => ("free depth".into(), args(a)?),
            FreeCmd::Zeta(a) => ("free zeta".into(), args(a)?),
        },
        Command::Braid(c) => match c {
            BraidCmd::Equal(a) => ("braid equal".into(), args(a)?),
            BraidCmd::Rewrite(a) => ("braid rewrite".into(), args(a)?),
        },
        Command::Suite(a) => ("suite".into(), args(a)?),
    })
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Burau(c) => commands::burau(c),
        Command::Geom(c) => commands::geom(c, cli.format),
        Command::Triangle(c) => commands::triangle(c),
        Command::Free(c) => commands::free(c),
        Command::Braid(c) => commands::braid(c),
        Command::Suite(a) => commands::suite(a),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(CliError::Io),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(CliError::Io)
        }
    }
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let started = Instant::now();
    let (path, args) = echo(cli)?;
    let output = dispatch(cli)?;
    match output {
        Output::Svg(svg) => {
            emit(cli, &svg)?;
            Ok(false)
        }
        Output::Json { result, exact_verified, negative } => {
            if cli.format == Some(Format::Svg) {
                return Err(CliError::Input(format!("'{path}' has no SVG output")));
            }
            let timings = if cli.timings {
                json!({ "total_ms": started.elapsed().as_secs_f64() * 1e3 })
            } else {
                Value::Null
            };
            // serde_json maps are ordered, so keys come out sorted
            let envelope = json!({
                "command": { "path": path, "args": args },
                "result": result,
                "exact_verified": exact_verified,
                "version": { "tool": env!("CARGO_PKG_VERSION"), "schema": SCHEMA_VERSION },
                "timings": timings,
            });
            let mut text = serde_json::to_string_pretty(&envelope)?;
            text.push('\n');
            emit(cli, &text)?;
            Ok(negative)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
