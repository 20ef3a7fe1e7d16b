//! Command-line surface and the resolved run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use radial_core::NormModel;

use crate::mapspec::parse_float;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const SEED_ENV: &str = "RADIALMAPS_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "radialmaps",
    version,
    about = "Radii tables, bound checks and slice dumps for radial holomorphic maps"
)]
pub struct Cli {
    /// Exponent of the l^p norm (`inf` allowed).
    #[arg(long, global = true, default_value = "2", value_parser = parse_exponent)]
    pub p: f64,
    /// Dimension of the space.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Seed for sampled directions; RADIALMAPS_SEED, when set, takes precedence.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Number of sampled boundary directions (the coordinate vectors come first).
    #[arg(long, global = true, default_value_t = 64)]
    pub samples: usize,
    /// Truncation degree for printed series.
    #[arg(long, global = true, default_value_t = 32)]
    pub degree: usize,
    /// Absolute tolerance for bound checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate Bohr-Rogosinski radii.
    Radii(RadiiArgs),
    /// Check the sharp inequalities on a map.
    Verify(VerifyArgs),
    /// Dump one slice: coefficients and disc-criterion margins.
    Slice(SliceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    General,
    #[value(name = "fixed_v")]
    FixedV,
    Limit,
}

#[derive(Debug, Args)]
pub struct RadiiArgs {
    #[arg(long, value_enum, default_value_t = Variant::General)]
    pub variant: Variant,
    /// Schwarz orders as `A..B` (inclusive); used by the general variant.
    #[arg(long, default_value = "1..6", value_parser = parse_range)]
    pub m: (u32, u32),
    /// Tail starts as `A..B` (inclusive).
    #[arg(long = "N", default_value = "1..6", value_parser = parse_range)]
    pub big_n: (u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bieberbach,
    Growth,
    Covering,
    Distortion,
    Fekete,
    Bloch,
    Bohr,
    Alexander,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// `koebe`, `identity`, `profile:NUM[/DEN]`, `poly:c@e1,..;..` or a map file.
    #[arg(long)]
    pub map: String,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    #[arg(long)]
    pub map: String,
    /// Unit direction: `e<k>` (1-based) or comma-separated `re[:im]` entries.
    #[arg(long)]
    pub u: String,
}

fn parse_exponent(s: &str) -> Result<f64, String> {
    if s == "inf" {
        return Ok(f64::INFINITY);
    }
    parse_float(s)
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in `{s}`"))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in `{s}`"))?;
    if a == 0 || b < a {
        return Err(format!("range `{s}` must satisfy 1 <= A <= B"));
    }
    Ok((a, b))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: NormModel,
    pub seed: u64,
    pub samples: usize,
    pub degree: usize,
    /// Inconclusive band for criteria is ten times this.
    pub margin: f64,
    pub bound_tol: f64,
    pub root_tol: f64,
    pub s_max: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli, env_seed: Option<&str>) -> Result<Self, String> {
        let seed = match env_seed {
            Some(s) => s
                .trim()
                .parse()
                .map_err(|_| format!("{SEED_ENV} is not an unsigned integer: `{s}`"))?,
            None => cli.seed,
        };
        let model = NormModel::new(cli.p, cli.n).map_err(|e| e.to_string())?;
        if !(cli.tol > 0.0) {
            return Err("--tol must be positive".into());
        }
        if cli.samples < cli.n {
            return Err(format!("--samples must be at least n = {}", cli.n));
        }
        Ok(Self {
            model,
            seed,
            samples: cli.samples,
            degree: cli.degree,
            margin: 1e-9,
            bound_tol: cli.tol,
            root_tol: 1e-12,
            s_max: 10,
            format: cli.format,
            out: cli.out.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5"), Ok((2, 5)));
        assert_eq!(parse_range("3"), Ok((3, 3)));
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("4..2").is_err());
    }

    #[test]
    fn env_seed_wins() {
        let cli = Cli::try_parse_from(["radialmaps", "--seed", "7", "radii"]).unwrap();
        assert_eq!(RunConfig::from_cli(&cli, None).unwrap().seed, 7);
        assert_eq!(RunConfig::from_cli(&cli, Some("11")).unwrap().seed, 11);
        assert!(RunConfig::from_cli(&cli, Some("x")).is_err());
    }

    #[test]
    fn infinite_exponent() {
        let cli = Cli::try_parse_from(["radialmaps", "--p", "inf", "radii"]).unwrap();
        assert!(RunConfig::from_cli(&cli, None)
            .unwrap()
            .model
            .p()
            .is_infinite());
    }
}
