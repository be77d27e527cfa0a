use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tetramer",
    version,
    about = "Negativities of the mixed spin-(1/2,1) Heisenberg tetramer",
    long_about = "Negativities of the mixed spin-(1/2,1) Heisenberg tetramer.\n\n\
                  Energies, fields and temperatures are in units of the intradimer coupling J.\n\
                  Exit codes: 0 success, 1 bad configuration, 2 I/O failure, 3 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One-vs-two negativities of every ground state next to their closed forms.
    GsTable(GsTableArgs),
    /// Grid over J1/J and h/J at a fixed temperature.
    ScanField(ScanFieldArgs),
    /// Grid over kT/J and h/J at a fixed J1/J.
    ScanThermal(ScanThermalArgs),
    /// Ground-state phase boundaries as closed-form line segments.
    PhaseDiagram(PhaseDiagramArgs),
    /// Compare the closed-form reduced density matrices with brute force.
    VerifyAppendix(VerifyArgs),
    /// Temperature windows where a genuine negativity survives.
    Threshold(ThresholdArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for grids; 0 uses every core.
    #[arg(long, default_value_t = 0, value_name = "N")]
    pub workers: usize,
    /// Partial-transpose eigenvalues above -X count as zero.
    #[arg(long, default_value_t = 1e-10, value_name = "X")]
    pub zero_tol: f64,
    /// Levels within X·J of the lowest one form the ground manifold.
    #[arg(long, default_value_t = 1e-9, value_name = "X")]
    pub degeneracy_tol: f64,
}

/// Absolute units: `h/J = g μB B / (kB J)` and `kT/J = T / J` with J in kelvin.
#[derive(Debug, Clone, Args)]
pub struct Units {
    #[arg(long, value_name = "G")]
    pub g_factor: Option<f64>,
    /// The intradimer coupling in kelvin.
    #[arg(long, value_name = "K")]
    pub j_kelvin: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GsTableArgs {
    /// Regime of J1/J relative to 1; all three when omitted.
    #[arg(long, value_name = "below|at|above")]
    pub regime: Option<String>,
    /// Override the representative J1/J of the chosen regime.
    #[arg(long, value_name = "X", requires = "regime")]
    pub j1_over_j: Option<f64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ScanFieldArgs {
    #[arg(long, default_value_t = 0.0, value_name = "X")]
    pub kt_over_j: f64,
    /// Steps along J1/J and h/J.
    #[arg(long, default_value = "201x201", value_name = "AxB")]
    pub grid: String,
    /// Axis ranges, e.g. J1=0:2 or h=0:6; B=min:max in tesla with --g-factor and --j-kelvin.
    #[arg(long = "range", value_name = "NAME=MIN:MAX")]
    pub ranges: Vec<String>,
    /// Comma-separated columns or groups (phase, genuine, one-vs-two, pairs, all).
    #[arg(long, default_value = "all", value_name = "LIST")]
    pub observables: String,
    #[command(flatten)]
    pub units: Units,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ScanThermalArgs {
    #[arg(long, default_value_t = 0.5, value_name = "X")]
    pub j1_over_j: f64,
    /// Steps along kT/J and h/J. A range starting at kT = 0 makes the first row the ground manifold.
    #[arg(long, default_value = "201x201", value_name = "AxB")]
    pub grid: String,
    /// Axis ranges, e.g. kT=0:1.5 or h=0:6; T (kelvin) and B (tesla) with absolute units.
    #[arg(long = "range", value_name = "NAME=MIN:MAX")]
    pub ranges: Vec<String>,
    #[arg(long, default_value = "all", value_name = "LIST")]
    pub observables: String,
    #[command(flatten)]
    pub units: Units,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct PhaseDiagramArgs {
    /// J1=min:max and h=min:max; defaults J1=0:2, h=0:6.
    #[arg(long = "range", value_name = "NAME=MIN:MAX")]
    pub ranges: Vec<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2024, value_name = "N")]
    pub seed: u64,
    /// Random parameter draws in the sweep.
    #[arg(long, default_value_t = 60, value_name = "N")]
    pub draws: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_name = "X")]
    pub j1_over_j: f64,
    /// A single field; otherwise the h range is swept with the second grid number.
    #[arg(long, value_name = "X")]
    pub h_over_j: Option<f64>,
    /// A single field in tesla, with --g-factor and --j-kelvin.
    #[arg(long, value_name = "T")]
    pub b_tesla: Option<f64>,
    /// Temperature steps, or AxB with B field steps for a sweep.
    #[arg(long, default_value = "300", value_name = "A[xB]")]
    pub grid: String,
    /// kT=min:max (default 0.005:1.5) and h=min:max for a sweep.
    #[arg(long = "range", value_name = "NAME=MIN:MAX")]
    pub ranges: Vec<String>,
    /// mu1S1S2, mu1mu2S2 or both.
    #[arg(long, default_value = "both")]
    pub trimer: String,
    /// A negativity counts as present above this value.
    #[arg(long, default_value_t = 1e-10, value_name = "X")]
    pub level: f64,
    #[command(flatten)]
    pub units: Units,
    #[command(flatten)]
    pub common: Common,
}
