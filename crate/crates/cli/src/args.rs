use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schlicht_core::radius::GridSpec;
use schlicht_core::Complex64;

#[derive(Debug, Parser)]
#[command(name = "schlicht-scope", version, about = "Slit maps, Bloch seminorms and schlicht-disk radius reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for every random sample set.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one of the conformal maps and its derivative at a point.
    MapEval(MapEvalArgs),
    /// Run the map identity and boundary-correspondence checks.
    MapVerify(MapVerifyArgs),
    /// Grid lower bound for the Bloch seminorm of a built-in function.
    Seminorm(FnGridArgs),
    /// Radial profile of (1 - t^2)|f'(t)| toward the boundary pole at 1.
    Divergence(DivergenceArgs),
    /// Bloch-radius lower bound of a function, or the largest disk of a domain.
    Radius(RadiusArgs),
    /// Schlicht witness disk for p z/(p - z) against the conjectured class bound.
    Refute(RefuteArgs),
    /// Two-slit construction for a rational map with poles p and mu.
    TwoPole(TwoPoleArgs),
    /// The classical Bloch and Landau constant bounds.
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    /// k_u(z) = z/(1+uz)^2 with u = e^{i theta}.
    Koebe,
    /// Inverse of `koebe`.
    InverseKoebe,
    /// Disk onto the disk minus a radial slit from x e^{i theta}.
    OmegaSlit,
    /// Disk onto the disk minus [p, 1).
    Eta,
    /// Inverse of `eta`.
    Zeta,
    /// -K(r k(w)): disk onto the disk minus [p, 1), upper half to lower half.
    RealSlit,
    /// Disk onto the disk minus [p, 1) and a curved slit ending at mu.
    TwoSlit,
    /// Involutive disk automorphism exchanging the poles p and q.
    Psi,
}

#[derive(Debug, Args)]
pub struct MapEvalArgs {
    #[arg(long, value_enum)]
    pub map: MapKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z_im: f64,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    /// Slit tip radius (radial slit) or curved-slit preimage radius p1.
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[command(flatten)]
    pub mu: MuArgs,
}

#[derive(Debug, Args)]
pub struct MapVerifyArgs {
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0.5)]
    pub x: f64,
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
    pub theta: f64,
}

#[derive(Debug, Args)]
pub struct MuArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub mu_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu_im: Option<f64>,
}

impl MuArgs {
    pub fn value(&self) -> Option<Complex64> {
        (self.mu_re.is_some() || self.mu_im.is_some())
            .then(|| Complex64::new(self.mu_re.unwrap_or(0.0), self.mu_im.unwrap_or(0.0)))
    }
}

#[derive(Debug, Args)]
pub struct FnArgs {
    /// Built-in function: identity, z-over-1-minus-z, boundary-pole-quadratic,
    /// moebius-pole-p, two-pole-rational.
    #[arg(long = "fn", default_value = "z-over-1-minus-z")]
    pub name: String,
    #[arg(long)]
    pub p: Option<f64>,
    #[command(flatten)]
    pub mu: MuArgs,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 64)]
    pub grid_radial: usize,
    #[arg(long, default_value_t = 64)]
    pub grid_angular: usize,
    #[arg(long, default_value_t = 3)]
    pub refine: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub pole_margin: f64,
    /// Radius of the outermost sample ring.
    #[arg(long, default_value_t = 0.99)]
    pub grid_outer: f64,
}

impl GridArgs {
    pub fn spec(&self) -> GridSpec {
        GridSpec {
            radial_count: self.grid_radial,
            angular_count: self.grid_angular,
            refine_depth: self.refine,
            pole_margin: self.pole_margin,
            outer_radius: self.grid_outer,
        }
    }
}

#[derive(Debug, Args)]
pub struct FnGridArgs {
    #[command(flatten)]
    pub function: FnArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct DivergenceArgs {
    #[command(flatten)]
    pub function: FnArgs,
    #[arg(long, default_value_t = 20)]
    pub depth: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainKind {
    /// Disk minus [p, 1).
    OmegaP,
    /// Disk minus [p, 1) and the curved slit ending at mu.
    TwoSlit,
    /// Exterior of the closed disk omitted by p z/(p - z).
    MoebiusImage,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub function: FnArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Report the largest disk of a built-in image domain instead.
    #[arg(long, value_enum, conflicts_with = "domain_file")]
    pub domain: Option<DomainKind>,
    /// Report the largest disk of a domain read from a JSON file.
    #[arg(long)]
    pub domain_file: Option<PathBuf>,
    /// Witness radius for unbounded domains.
    #[arg(long)]
    pub target: Option<f64>,
}

#[derive(Debug, Args)]
pub struct RefuteArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 1000.0)]
    pub target: f64,
}

#[derive(Debug, Args)]
pub struct TwoPoleArgs {
    #[arg(long)]
    pub p: f64,
    #[command(flatten)]
    pub mu: MuArgs,
    #[arg(long, default_value_t = 1000.0)]
    pub target: f64,
}
