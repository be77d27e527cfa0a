//! One function per subcommand; each returns the table to write.

use serde_json::{json, Value};
use spin_tetramer::model::{classify_ground_state, ground_state, ModelParams};
use spin_tetramer::negativity::Observables;
use spin_tetramer::oracle::gs_table::{self, Regime};
use spin_tetramer::oracle::verify_appendix;
use spin_tetramer::scan::{
    field_scan, phase_boundaries, thermal_scan, threshold_profile, Axis, PhaseBoundary, ScanRecord, Segment,
    ThresholdSearch,
};
use spin_tetramer::{OneVsTwo, Tolerances, Trimer};

use crate::args::{GsTableArgs, PhaseDiagramArgs, ScanFieldArgs, ScanThermalArgs, ThresholdArgs, VerifyArgs};
use crate::config::{
    field_range, find, parse_grid, parse_observables, parse_ranges, parse_trimers, temperature_range, tolerances,
    Absolute, AxisName, Column,
};
use crate::output::{format_number, Cell, Table};
use crate::CliError;

/// What a command produced.
pub struct Output {
    pub table: Table,
    /// Structured JSON; the table's JSON form when absent.
    pub json: Option<Value>,
    /// One line for standard error.
    pub summary: String,
    /// Set when the command ran but its checks failed.
    pub failure: Option<String>,
}

impl Output {
    fn plain(table: Table, summary: String) -> Self {
        Self { table, json: None, summary, failure: None }
    }
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn tol_comment(tol: Tolerances) -> String {
    format!("zero_tol = {}, degeneracy_tol = {}", format_number(tol.zero_tol), format_number(tol.degeneracy_tol))
}

fn trimer_name(t: Trimer) -> &'static str {
    match t {
        Trimer::Mu1S1S2 => "mu1S1S2",
        Trimer::Mu1Mu2S2 => "mu1mu2S2",
    }
}

/// Fields inside each `σT^z` plateau for a `J1/J` of the regime.
fn plateau_fields(regime: Regime, j1: f64) -> Result<[f64; 4], CliError> {
    let ok = match regime {
        Regime::Below => j1 > 0.0 && j1 < 1.0,
        Regime::At => j1 == 1.0,
        Regime::Above => j1 > 1.0 && j1.is_finite(),
    };
    if !ok {
        return Err(CliError::Config(format!("J1/J = {j1} is not in the {regime} regime")));
    }
    let edges = if j1 < 1.0 { [0.0, j1, 1.5 + 0.5 * j1, 1.5 + 1.5 * j1] } else { [0.0, j1, 2.0 * j1, 3.0 * j1] };
    Ok([
        0.5 * (edges[0] + edges[1]),
        0.5 * (edges[1] + edges[2]),
        0.5 * (edges[2] + edges[3]),
        edges[3] + 1.0,
    ])
}

pub fn gs_table(a: &GsTableArgs) -> Result<Output, CliError> {
    let tol = tolerances(&a.common)?;
    let regimes = match &a.regime {
        Some(r) => vec![r.parse::<Regime>()?],
        None => Regime::ALL.to_vec(),
    };
    let mut t = Table::new(header(&[
        "regime",
        "J1_over_J",
        "h_over_J",
        "phase_label",
        "degenerate",
        "column",
        "numeric",
        "exact",
        "formula",
        "printed",
        "abs_dev",
        "printed_dev",
    ]));
    t.comments = vec![
        "tetramer gs-table".into(),
        "one-vs-two negativities of the T = 0 ground manifold; exact is the closed form, printed its 3-decimal value"
            .into(),
        tol_comment(tol),
    ];
    let mut worst = 0.0f64;
    for regime in regimes {
        let (j1, fields) = match a.j1_over_j {
            Some(j1) => (j1, plateau_fields(regime, j1)?),
            None => (regime.ratio(), [0, 1, 2, 3].map(|tz| regime.field(tz).unwrap())),
        };
        for (tz, &h) in fields.iter().enumerate() {
            let tz = tz as u32;
            let params = ModelParams::new(1.0, j1, h)?;
            let g = classify_ground_state(&params, tol);
            let first = g.canonical_labels()[0].to_string();
            if !regime.labels(tz)?.contains(&first.as_str()) {
                return Err(CliError::Config(format!(
                    "J1/J = {j1}, h/J = {h} lands in {first}, not in row {tz} of the {regime} regime"
                )));
            }
            let obs = Observables::evaluate(&ground_state(&params, tol)?, tol.zero_tol)?;
            for (k, col) in OneVsTwo::ALL.into_iter().enumerate() {
                let cell = gs_table::cell(regime, tz, col)?;
                let n = obs.one_vs_two[k];
                worst = worst.max((n - cell.exact).abs());
                t.rows.push(vec![
                    regime.to_string().into(),
                    j1.into(),
                    h.into(),
                    g.phase_label().into(),
                    g.degenerate.into(),
                    col.column().into(),
                    n.into(),
                    cell.exact.into(),
                    cell.formula.into(),
                    cell.printed.into(),
                    (n - cell.exact).abs().into(),
                    (n - cell.printed).abs().into(),
                ]);
            }
        }
    }
    let summary = format!("{} cells, max |numeric - exact| = {:.1e}", t.rows.len(), worst);
    Ok(Output::plain(t, summary))
}

fn scan_table(comments: Vec<String>, columns: &[Column], records: &[ScanRecord]) -> Table {
    let mut names = header(&["J1_over_J", "h_over_J", "kT_over_J"]);
    names.extend(columns.iter().map(|c| c.name()));
    let mut t = Table::new(names);
    t.comments = comments;
    for r in records {
        let mut row: Vec<Cell> = vec![r.j1.into(), r.h.into(), r.kt.into()];
        for c in columns {
            row.push(match *c {
                Column::PhaseLabel => r.ground.as_ref().map(|g| g.phase_label()).into(),
                Column::Degenerate => r.degenerate().into(),
                Column::Genuine(x) => r.observables.genuine(x).into(),
                Column::OneVsTwo(x) => r.observables.one(x).into(),
                Column::Pair(x) => r.observables.pair(x).into(),
            });
        }
        t.rows.push(row);
    }
    t
}

fn axis_comment(a: &Axis) -> String {
    format!("{} {}:{} ({})", a.name, format_number(a.min), format_number(a.max), a.steps)
}

pub fn scan_field(a: &ScanFieldArgs) -> Result<Output, CliError> {
    let tol = tolerances(&a.common)?;
    let abs = Absolute::from_args(&a.units)?;
    let ranges = parse_ranges(&a.ranges, &[AxisName::J1, AxisName::H, AxisName::B])?;
    let grid = parse_grid(&a.grid, 2)?;
    let (j0, j1) = find(&ranges, AxisName::J1).unwrap_or((0.0, 2.0));
    if j0 < 0.0 {
        return Err(CliError::Config(format!("J1/J must be >= 0, got {j0}")));
    }
    let ((h0, h1), note) = field_range(&ranges, abs, (0.0, 6.0))?;
    if !(a.kt_over_j >= 0.0 && a.kt_over_j.is_finite()) {
        return Err(CliError::Config(format!("kT/J must be >= 0, got {}", a.kt_over_j)));
    }
    let columns = parse_observables(&a.observables)?;
    let j1_axis = Axis::new("J1_over_J", j0, j1, grid[0])?;
    let h_axis = Axis::new("h_over_J", h0, h1, grid[1])?;

    let mut comments = vec![
        "tetramer scan-field".to_string(),
        format!(
            "J = 1; {} x {}; kT_over_J = {}",
            axis_comment(&j1_axis),
            axis_comment(&h_axis),
            format_number(a.kt_over_j)
        ),
        tol_comment(tol),
    ];
    comments.extend(note);
    let records = if columns.is_empty() {
        Vec::new()
    } else {
        field_scan(&j1_axis, &h_axis, a.kt_over_j, tol, a.common.workers)?
    };
    let summary = format!("{} nodes", records.len());
    Ok(Output::plain(scan_table(comments, &columns, &records), summary))
}

pub fn scan_thermal(a: &ScanThermalArgs) -> Result<Output, CliError> {
    let tol = tolerances(&a.common)?;
    let abs = Absolute::from_args(&a.units)?;
    let ranges = parse_ranges(&a.ranges, &[AxisName::Kt, AxisName::T, AxisName::H, AxisName::B])?;
    let grid = parse_grid(&a.grid, 2)?;
    if !(a.j1_over_j >= 0.0 && a.j1_over_j.is_finite()) {
        return Err(CliError::Config(format!("J1/J must be >= 0, got {}", a.j1_over_j)));
    }
    let ((t0, t1), t_note) = temperature_range(&ranges, abs, (0.0, 1.5))?;
    let ((h0, h1), h_note) = field_range(&ranges, abs, (0.0, 6.0))?;
    if t0 < 0.0 {
        return Err(CliError::Config(format!("temperatures must be >= 0, got {t0}")));
    }
    let columns = parse_observables(&a.observables)?;
    let h_axis = Axis::new("h_over_J", h0, h1, grid[1])?;
    // A range from zero puts the ground manifold in the first row and spaces
    // the remaining rows evenly up to the maximum.
    let zero_row = t0 == 0.0;
    let kt_axis = if zero_row {
        if grid[0] < 3 {
            return Err(CliError::Config("a temperature range from 0 needs at least 3 steps".into()));
        }
        let n = grid[0] - 1;
        Axis::new("kT_over_J", t1 / n as f64, t1, n)?
    } else {
        Axis::new("kT_over_J", t0, t1, grid[0])?
    };

    let mut comments = vec![
        "tetramer scan-thermal".to_string(),
        format!(
            "J = 1; J1_over_J = {}; {}{} x {}",
            format_number(a.j1_over_j),
            axis_comment(&kt_axis),
            if zero_row { " after a kT = 0 ground-manifold row" } else { "" },
            axis_comment(&h_axis)
        ),
        tol_comment(tol),
    ];
    comments.extend(t_note);
    comments.extend(h_note);
    let records = if columns.is_empty() {
        Vec::new()
    } else {
        thermal_scan(a.j1_over_j, &kt_axis, &h_axis, zero_row, tol, a.common.workers)?
    };
    let summary = format!("{} nodes", records.len());
    Ok(Output::plain(scan_table(comments, &columns, &records), summary))
}

fn segment_in_field_window(s: &Segment, h_min: f64) -> bool {
    match *s {
        Segment::Field { slope, intercept, j1_min, j1_max } => {
            (intercept + slope * j1_min).max(intercept + slope * j1_max) >= h_min
        }
        Segment::Vertical { h_max, .. } => h_max >= h_min,
    }
}

pub fn phase_diagram(a: &PhaseDiagramArgs) -> Result<Output, CliError> {
    let tol = tolerances(&a.common)?;
    let ranges = parse_ranges(&a.ranges, &[AxisName::J1, AxisName::H])?;
    let (j0, j1) = find(&ranges, AxisName::J1).unwrap_or((0.0, 2.0));
    let (h0, h1) = find(&ranges, AxisName::H).unwrap_or((0.0, 6.0));
    let all = phase_boundaries(j0, j1, h1, tol)?;
    let boundaries: Vec<PhaseBoundary> = all.into_iter().filter(|b| segment_in_field_window(&b.segment, h0)).collect();

    let mut t = Table::new(header(&[
        "from", "to", "kind", "slope", "intercept", "J1_min", "J1_max", "h_min", "h_max",
    ]));
    t.comments = vec![
        "tetramer phase-diagram".into(),
        format!(
            "J = 1; J1_over_J {}:{}, h_over_J {}:{}; field boundaries read h = intercept + slope * J1",
            format_number(j0),
            format_number(j1),
            format_number(h0),
            format_number(h1)
        ),
    ];
    for b in &boundaries {
        let mut row: Vec<Cell> = vec![b.from.clone().into(), b.to.clone().into()];
        row.extend(match b.segment {
            Segment::Field { slope, intercept, j1_min, j1_max } => [
                "field".into(),
                slope.into(),
                intercept.into(),
                j1_min.into(),
                j1_max.into(),
                Cell::Empty,
                Cell::Empty,
            ],
            Segment::Vertical { j1, h_min, h_max } => [
                "vertical".into(),
                Cell::Empty,
                Cell::Empty,
                j1.into(),
                j1.into(),
                h_min.into(),
                h_max.into(),
            ],
        });
        t.rows.push(row);
    }
    let json = json!({
        "J1_over_J": [j0, j1],
        "h_over_J": [h0, h1],
        "boundaries": boundaries,
    });
    let summary = format!("{} boundary segments", boundaries.len());
    Ok(Output { table: t, json: Some(json), summary, failure: None })
}

pub fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    use spin_tetramer::oracle::verify::{ELEMENT_TOL, RELATION_TOL};

    let report = verify_appendix(a.seed, a.draws)?;
    let mut t = Table::new(header(&["kind", "dim", "item", "max_dev", "tolerance", "pass"]));
    t.comments = vec![
        "tetramer verify-appendix".into(),
        format!("seed = {}, draws = {}", a.seed, a.draws),
        format!("overall: {}", if report.pass { "pass" } else { "fail" }),
    ];
    for e in &report.elements {
        t.rows.push(vec![
            "element".into(),
            (e.dim as f64).into(),
            format!("({},{})", e.row, e.col).into(),
            e.max_dev.into(),
            ELEMENT_TOL.into(),
            (e.max_dev <= ELEMENT_TOL).into(),
        ]);
    }
    for r in &report.relations {
        t.rows.push(vec![
            "relation".into(),
            (r.dim as f64).into(),
            format!("({},{}) from ({},{})", r.target.0, r.target.1, r.source.0, r.source.1).into(),
            r.max_dev.into(),
            RELATION_TOL.into(),
            (r.max_dev <= RELATION_TOL && r.max_dev_closed_form <= ELEMENT_TOL).into(),
        ]);
    }
    for b in &report.blocks {
        let dev = b.max_spectrum_dev.max(b.max_placement_dev);
        t.rows.push(vec![
            "block".into(),
            (b.case.dim() as f64).into(),
            b.label.clone().into(),
            dev.into(),
            ELEMENT_TOL.into(),
            (dev <= ELEMENT_TOL && b.covers_once).into(),
        ]);
    }
    for n in &report.table_notes {
        t.rows.push(vec![
            "table_note".into(),
            Cell::Empty,
            format!("{} row {} {}: {} adopted over {}", n.regime, n.sigma_tz, n.column, n.adopted, n.printed).into(),
            (n.adopted_value - n.brute_force).abs().into(),
            ELEMENT_TOL.into(),
            n.adopted_matches(ELEMENT_TOL).into(),
        ]);
    }
    let json = serde_json::to_value(&report).map_err(|e| CliError::Io(e.to_string()))?;
    let summary = format!(
        "{} draws, {} elements, {} relations, {} blocks: {}",
        report.draws,
        report.elements.len(),
        report.relations.len(),
        report.blocks.len(),
        if report.pass { "pass" } else { "FAIL" }
    );
    let failure = (!report.pass).then(|| report.suspected_typos.join("; "));
    Ok(Output { table: t, json: Some(json), summary, failure })
}

pub fn threshold(a: &ThresholdArgs) -> Result<Output, CliError> {
    let tol = tolerances(&a.common)?;
    let abs = Absolute::from_args(&a.units)?;
    let ranges = parse_ranges(&a.ranges, &[AxisName::Kt, AxisName::T, AxisName::H, AxisName::B])?;
    let trimers = parse_trimers(&a.trimer)?;
    let ((t0, t1), _) = temperature_range(&ranges, abs, (0.005, 1.5))?;
    let single = match (a.h_over_j, a.b_tesla) {
        (Some(_), Some(_)) => return Err(CliError::Config("give --h-over-j or --b-tesla, not both".into())),
        (Some(h), None) => Some(h),
        (None, Some(b)) => {
            let abs = abs.ok_or_else(|| CliError::Config("--b-tesla needs --g-factor and --j-kelvin".into()))?;
            Some(abs.h_over_j(b)?)
        }
        (None, None) => None,
    };
    let (steps, fields) = match single {
        Some(h) => {
            if find(&ranges, AxisName::H).is_some() || find(&ranges, AxisName::B).is_some() {
                return Err(CliError::Config("a single field and a field range exclude each other".into()));
            }
            (parse_grid(&a.grid, 1)?[0], vec![h])
        }
        None => {
            let grid = parse_grid(&a.grid, 2)?;
            let ((h0, h1), _) = field_range(&ranges, abs, (0.0, 6.0))?;
            (grid[0], Axis::new("h_over_J", h0, h1, grid[1])?.values())
        }
    };
    let search = ThresholdSearch { kt_min: t0, kt_max: t1, steps, level: a.level, ..ThresholdSearch::default() };

    let mut t = Table::new(header(&[
        "J1_over_J",
        "h_over_J",
        "trimer",
        "windows",
        "lower",
        "upper",
        "from_zero",
        "open_above",
    ]));
    t.comments = vec![
        "tetramer threshold".into(),
        format!(
            "kT_over_J {}:{} ({} steps), bisection to {}, level {}",
            format_number(t0),
            format_number(t1),
            steps,
            format_number(search.bisection_tol),
            format_number(search.level)
        ),
        tol_comment(tol),
    ];
    let mut detached = 0;
    for &h in &fields {
        for &tr in &trimers {
            let windows = threshold_profile(a.j1_over_j, h, tr, &search, tol)?;
            if windows.iter().any(|w| !w.from_zero) {
                detached += 1;
            }
            let base: Vec<Cell> = vec![a.j1_over_j.into(), h.into(), trimer_name(tr).into(), (windows.len() as f64).into()];
            if windows.is_empty() {
                let mut row = base.clone();
                row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
                t.rows.push(row);
            }
            for w in windows {
                let mut row = base.clone();
                row.extend([w.lower.into(), w.upper.into(), w.from_zero.into(), w.open_above.into()]);
                t.rows.push(row);
            }
        }
    }
    let summary = format!("{} profiles, {} with a window detached from T = 0", fields.len() * trimers.len(), detached);
    Ok(Output::plain(t, summary))
}
