use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rextmorse::{Family, RoType};

#[derive(Parser, Debug)]
#[command(
    name = "rextmorse",
    version,
    about = "Rationally-extended Morse and radial-oscillator potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analytic bound-state spectrum compared against the grid eigensolver.
    Spectrum(Common),
    /// Potential (or one eigenfunction with --nu) sampled on a grid.
    Sample(Common),
    /// Identity residuals, intertwining, commutative diagram and QES checks.
    Verify(VerifyArgs),
    /// Point canonical transformation between oscillator and Morse problems.
    Pct(PctArgs),
    /// One member of a quasi-exactly solvable hierarchy.
    Qes(Common),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Morse extension family (II or III).
    #[arg(long)]
    pub family: Option<Family>,
    /// Radial-oscillator extension type (I, II or III).
    #[arg(long = "type")]
    pub ty: Option<RoType>,
    /// Morse parameter A, as "p/q", an integer or a decimal.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Morse parameter B > 0 (default 1).
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Oscillator angular momentum l.
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    /// Oscillator frequency omega > 0 (default 4, i.e. B = 1).
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Polynomial degree m.
    #[arg(long)]
    pub m: Option<usize>,
    /// State or hierarchy index.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<i64>,
    /// Left end of the grid (x for Morse, r for the oscillator)
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    /// Right end of the grid
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    /// Grid point count (default: spacing 1e-3 for solves, 2001 for samples).
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Run a single group of checks.
    #[arg(long, value_enum)]
    pub only: Option<Group>,
    /// Deliberately break one check to exercise the failure path.
    #[arg(long, value_enum)]
    pub inject_fault: Option<Fault>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Identities,
    Intertwining,
    Diagram,
    Qes,
    Pct,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Shift the factorization energy used by the partner Hamiltonian.
    Epsilon,
}

#[derive(Args, Debug, Clone)]
pub struct PctArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    pub direction: Direction,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Oscillator (l, omega, nu) to Morse.
    Forward,
    /// Morse (A, B, nu) to oscillator.
    Inverse,
}
