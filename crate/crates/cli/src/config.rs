//! Parsing of grids, ranges, observable lists and unit conversions.

use spin_tetramer::model::{Zeeman, MU_B_OVER_K_B};
use spin_tetramer::{OneVsTwo, Pair, Tolerances, Trimer};

use crate::args::{Common, Units};
use crate::output::format_number;
use crate::CliError;

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

/// `201x201` or `300`.
pub fn parse_grid(s: &str, dims: usize) -> Result<Vec<usize>, CliError> {
    let parts: Result<Vec<usize>, _> = s.split(['x', 'X']).map(|p| p.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|_| config(format!("grid {s:?} is not of the form AxB")))?;
    if parts.len() != dims {
        return Err(config(format!("grid {s:?} needs {dims} step count(s)")));
    }
    if let Some(n) = parts.iter().find(|&&n| n < 2) {
        return Err(config(format!("grid {s:?}: every axis needs at least 2 steps, got {n}")));
    }
    Ok(parts)
}

/// Axis names accepted by `--range`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisName {
    J1,
    H,
    Kt,
    /// Field in tesla.
    B,
    /// Temperature in kelvin.
    T,
}

impl AxisName {
    fn parse(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "J1" | "J1_over_J" | "j1" => AxisName::J1,
            "h" | "h_over_J" => AxisName::H,
            "kT" | "kT_over_J" | "kt" => AxisName::Kt,
            "B" => AxisName::B,
            "T" => AxisName::T,
            _ => return Err(config(format!("unknown range name {s:?} (use J1, h, kT, B or T)"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub name: AxisName,
    pub min: f64,
    pub max: f64,
}

pub fn parse_range(s: &str) -> Result<RangeSpec, CliError> {
    let bad = || config(format!("range {s:?} is not of the form name=min:max"));
    let (name, rest) = s.split_once('=').ok_or_else(bad)?;
    let (lo, hi) = rest.split_once(':').ok_or_else(bad)?;
    let min: f64 = lo.trim().parse().map_err(|_| bad())?;
    let max: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(config(format!("range {s:?} needs finite min < max")));
    }
    Ok(RangeSpec { name: AxisName::parse(name.trim())?, min, max })
}

/// Ranges keyed by name; each name at most once and only from `allowed`.
pub fn parse_ranges(raw: &[String], allowed: &[AxisName]) -> Result<Vec<RangeSpec>, CliError> {
    let mut out: Vec<RangeSpec> = Vec::new();
    for r in raw {
        let spec = parse_range(r)?;
        if !allowed.contains(&spec.name) {
            return Err(config(format!("range {r:?} does not apply to this command")));
        }
        if out.iter().any(|o| o.name == spec.name) {
            return Err(config(format!("range {r:?} given twice")));
        }
        out.push(spec);
    }
    Ok(out)
}

pub fn find(ranges: &[RangeSpec], name: AxisName) -> Option<(f64, f64)> {
    ranges.iter().find(|r| r.name == name).map(|r| (r.min, r.max))
}

pub fn tolerances(c: &Common) -> Result<Tolerances, CliError> {
    Ok(Tolerances::new(c.zero_tol, c.degeneracy_tol)?)
}

/// Conversion from absolute units, present when `--g-factor` or `--j-kelvin` was given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Absolute {
    pub g: Option<f64>,
    pub j_kelvin: f64,
}

impl Absolute {
    pub fn from_args(u: &Units) -> Result<Option<Self>, CliError> {
        match (u.g_factor, u.j_kelvin) {
            (None, None) => Ok(None),
            (g, Some(j)) => {
                if !(j > 0.0 && j.is_finite()) {
                    return Err(config(format!("--j-kelvin must be positive, got {j}")));
                }
                if let Some(g) = g {
                    if !(g.is_finite() && g != 0.0) {
                        return Err(config(format!("--g-factor must be finite and nonzero, got {g}")));
                    }
                }
                Ok(Some(Self { g, j_kelvin: j }))
            }
            (Some(_), None) => Err(config("--g-factor needs --j-kelvin")),
        }
    }

    /// `h/J` for a field in tesla.
    pub fn h_over_j(&self, b_tesla: f64) -> Result<f64, CliError> {
        let g = self.g.ok_or_else(|| config("a field in tesla needs --g-factor"))?;
        Ok(Zeeman { g, b_tesla }.field_kelvin() / self.j_kelvin)
    }

    pub fn kt_over_j(&self, t_kelvin: f64) -> f64 {
        t_kelvin / self.j_kelvin
    }

    pub fn describe(&self) -> String {
        let mut s = format!("J = {} K", format_number(self.j_kelvin));
        if let Some(g) = self.g {
            s.push_str(&format!(", g = {}, μB/kB = {} K/T", format_number(g), MU_B_OVER_K_B));
        }
        s
    }
}

/// Resolves the field axis from `h` or `B`, returning the range in units of J
/// and a note for the header when tesla were given.
pub fn field_range(
    ranges: &[RangeSpec],
    abs: Option<Absolute>,
    default: (f64, f64),
) -> Result<((f64, f64), Option<String>), CliError> {
    match (find(ranges, AxisName::H), find(ranges, AxisName::B)) {
        (Some(_), Some(_)) => Err(config("give the field range as h or B, not both")),
        (Some(h), None) => Ok((h, None)),
        (None, Some((b0, b1))) => {
            let a = abs.ok_or_else(|| config("a range in tesla needs --g-factor and --j-kelvin"))?;
            let note = format!("field B = {}:{} T with {}", format_number(b0), format_number(b1), a.describe());
            Ok(((a.h_over_j(b0)?, a.h_over_j(b1)?), Some(note)))
        }
        (None, None) => Ok((default, None)),
    }
}

pub fn temperature_range(
    ranges: &[RangeSpec],
    abs: Option<Absolute>,
    default: (f64, f64),
) -> Result<((f64, f64), Option<String>), CliError> {
    match (find(ranges, AxisName::Kt), find(ranges, AxisName::T)) {
        (Some(_), Some(_)) => Err(config("give the temperature range as kT or T, not both")),
        (Some(t), None) => Ok((t, None)),
        (None, Some((t0, t1))) => {
            let a = abs.ok_or_else(|| config("a range in kelvin needs --j-kelvin"))?;
            let note = format!("temperature T = {}:{} K with {}", format_number(t0), format_number(t1), a.describe());
            Ok(((a.kt_over_j(t0), a.kt_over_j(t1)), Some(note)))
        }
        (None, None) => Ok((default, None)),
    }
}

/// A value column of the scan CSV.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    PhaseLabel,
    Degenerate,
    Genuine(Trimer),
    OneVsTwo(OneVsTwo),
    Pair(Pair),
}

impl Column {
    /// Every value column in output order.
    pub fn all() -> Vec<Column> {
        let mut v = vec![Column::PhaseLabel, Column::Degenerate];
        v.extend(Trimer::ALL.map(Column::Genuine));
        v.extend(OneVsTwo::ALL.map(Column::OneVsTwo));
        v.extend(Pair::ALL.map(Column::Pair));
        v
    }

    pub fn name(self) -> String {
        match self {
            Column::PhaseLabel => "phase_label".into(),
            Column::Degenerate => "degenerate".into(),
            Column::Genuine(t) => t.column().into(),
            Column::OneVsTwo(c) => c.column().into(),
            Column::Pair(p) => p.column(),
        }
    }
}

/// Comma-separated column names or groups; the result keeps output order.
/// An empty list selects nothing.
pub fn parse_observables(s: &str) -> Result<Vec<Column>, CliError> {
    let mut picked = Vec::new();
    for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let group: Vec<Column> = match token {
            "all" => Column::all(),
            "phase" => vec![Column::PhaseLabel, Column::Degenerate],
            "genuine" => Trimer::ALL.map(Column::Genuine).to_vec(),
            "one-vs-two" => OneVsTwo::ALL.map(Column::OneVsTwo).to_vec(),
            "pairs" => Pair::ALL.map(Column::Pair).to_vec(),
            name => match Column::all().into_iter().find(|c| c.name() == name) {
                Some(c) => vec![c],
                None => return Err(config(format!("unknown observable {name:?}"))),
            },
        };
        picked.extend(group);
    }
    Ok(Column::all().into_iter().filter(|c| picked.contains(c)).collect())
}

pub fn parse_trimers(s: &str) -> Result<Vec<Trimer>, CliError> {
    match s {
        "both" => Ok(Trimer::ALL.to_vec()),
        "mu1S1S2" | "N_mu1_S1S2" => Ok(vec![Trimer::Mu1S1S2]),
        "mu1mu2S2" | "N_mu1_mu2S2" => Ok(vec![Trimer::Mu1Mu2S2]),
        _ => Err(config(format!("unknown trimer {s:?} (use mu1S1S2, mu1mu2S2 or both)"))),
    }
}
