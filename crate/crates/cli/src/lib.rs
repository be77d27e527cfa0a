//! Command-line front end of `spin-tetramer`.
//!
//! [`run`] is the whole program; the binary only forwards its arguments and
//! exit code. Scan tables follow a fixed column order:
//!
//! ```text
//! J1_over_J, h_over_J, kT_over_J, phase_label, degenerate,
//! N_mu1_S1S2, N_mu1_mu2S2,
//! N_mu1|S1S2, N_S1|mu1S2, N_S2|mu1S1, N_mu1|mu2S2, N_mu2|mu1S2, N_S2|mu1mu2,
//! N_mu1|S1, N_mu1|S2, N_mu1|mu2, N_S1|S2, N_S1|mu2, N_mu2|S2
//! ```
//!
//! Numbers carry 12 significant digits (see [`output::format_number`]).

pub mod args;
pub mod commands;
pub mod config;
mod error;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub use error::CliError;

use args::{Cli, Command, Common, Format};

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    1
                }
            };
        }
    };
    match execute(&cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let (name, common, default_format, out): (&str, &Common, Format, commands::Output) = match cmd {
        Command::GsTable(a) => ("gs-table", &a.common, Format::Csv, commands::gs_table(a)?),
        Command::ScanField(a) => ("scan-field", &a.common, Format::Csv, commands::scan_field(a)?),
        Command::ScanThermal(a) => ("scan-thermal", &a.common, Format::Csv, commands::scan_thermal(a)?),
        Command::PhaseDiagram(a) => ("phase-diagram", &a.common, Format::Json, commands::phase_diagram(a)?),
        Command::VerifyAppendix(a) => ("verify-appendix", &a.common, Format::Json, commands::verify(a)?),
        Command::Threshold(a) => ("threshold", &a.common, Format::Csv, commands::threshold(a)?),
    };
    let bytes = match common.format.unwrap_or(default_format) {
        Format::Csv => out.table.to_csv().into_bytes(),
        Format::Json => {
            let value = out.json.unwrap_or_else(|| out.table.to_json());
            let mut s = serde_json::to_string_pretty(&value).map_err(|e| CliError::Io(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
    };
    output::emit(common.out.as_deref(), &bytes, stdout)?;
    let _ = writeln!(stderr, "{name}: {} in {:.2} s", out.summary, started.elapsed().as_secs_f64());
    match out.failure {
        Some(f) => Err(CliError::Verification(f)),
        None => Ok(()),
    }
}
