//! Parameter grids, phase boundaries and threshold temperatures.
//!
//! All quantities are in units of `J` (J = 1).

use rayon::prelude::*;
use serde::Serialize;

use crate::model::{
    all_labels, classify_ground_state, closed_form_energy, thermal_state, GroundState,
    ModelParams, QuantumLabel,
};
use crate::negativity::{genuine_tripartite, Observables, Trimer};
use crate::{Error, Result, Tolerances};

/// Evenly spaced, strictly increasing axis including both ends.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Axis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(name: impl Into<String>, min: f64, max: f64, steps: usize) -> Result<Self> {
        let name = name.into();
        if steps < 2 {
            return Err(Error::invalid(format!("axis {name} needs at least 2 steps, got {steps}")));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::invalid(format!("axis {name} needs min < max, got {min}..{max}")));
        }
        Ok(Self { name, min, max, steps })
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.steps - 1;
        (0..=n)
            .map(|k| if k == n { self.max } else { self.min + (self.max - self.min) * k as f64 / n as f64 })
            .collect()
    }
}

/// One grid node.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub j1: f64,
    pub h: f64,
    pub kt: f64,
    /// Present at T = 0.
    pub ground: Option<GroundState>,
    pub observables: Observables,
}

impl ScanRecord {
    pub fn phase_label(&self) -> String {
        self.ground.as_ref().map(|g| g.phase_label()).unwrap_or_default()
    }

    /// Co-minimal distinct phases at this node (T = 0 only).
    pub fn degenerate(&self) -> Option<bool> {
        self.ground.as_ref().map(|g| g.degenerate)
    }
}

/// Evaluates every observable at one point. `kt = 0` uses the ground manifold.
pub fn evaluate_node(j1: f64, h: f64, kt: f64, tol: Tolerances) -> Result<ScanRecord> {
    let params = ModelParams::new(1.0, j1, h)?;
    let state = thermal_state(&params, kt, tol)?;
    let ground = if kt == 0.0 { Some(classify_ground_state(&params, tol)) } else { None };
    Ok(ScanRecord { j1, h, kt, ground, observables: Observables::evaluate(&state, tol.zero_tol)? })
}

fn run(nodes: Vec<(f64, f64, f64)>, tol: Tolerances, workers: usize) -> Result<Vec<ScanRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start {workers} workers: {e}")))?;
    pool.install(|| nodes.par_iter().map(|&(j1, h, kt)| evaluate_node(j1, h, kt, tol)).collect())
}

/// Grid over `J1/J` (slow) and `h/J` (fast) at fixed `kT/J`.
/// `workers = 0` lets the pool pick.
pub fn field_scan(j1: &Axis, h: &Axis, kt: f64, tol: Tolerances, workers: usize) -> Result<Vec<ScanRecord>> {
    if !(kt >= 0.0 && kt.is_finite()) {
        return Err(Error::invalid(format!("temperature must be non-negative, got {kt}")));
    }
    let hs = h.values();
    let nodes = j1.values().into_iter().flat_map(|a| hs.iter().map(move |&b| (a, b, kt))).collect();
    run(nodes, tol, workers)
}

/// Grid over `kT/J` (slow) and `h/J` (fast) at fixed `J1/J`. With
/// `zero_row` an extra `kT = 0` row comes first.
pub fn thermal_scan(
    j1: f64,
    kt: &Axis,
    h: &Axis,
    zero_row: bool,
    tol: Tolerances,
    workers: usize,
) -> Result<Vec<ScanRecord>> {
    if kt.min <= 0.0 {
        return Err(Error::invalid("temperature axis must be positive; use the zero row for T = 0"));
    }
    let hs = h.values();
    let mut temps = kt.values();
    if zero_row {
        temps.insert(0, 0.0);
    }
    let nodes = temps.into_iter().flat_map(|t| hs.iter().map(move |&b| (j1, b, t))).collect();
    run(nodes, tol, workers)
}

/// Where a phase boundary runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Segment {
    /// `h = intercept + slope · J1` for `J1 ∈ [j1_min, j1_max]`.
    Field { slope: f64, intercept: f64, j1_min: f64, j1_max: f64 },
    /// `J1 = j1` for `h ∈ [h_min, h_max]`.
    Vertical { j1: f64, h_min: f64, h_max: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseBoundary {
    /// Phase on the low-field side, or the low-`J1` side for vertical segments.
    pub from: String,
    pub to: String,
    pub segment: Segment,
}

/// Ground-state plateaus for `h ≥ 0` at fixed `J1`: `(σT^z, labels, h_start)`
/// in increasing field order.
fn envelope(j1: f64, tol: Tolerances) -> Vec<(i32, Vec<QuantumLabel>, f64)> {
    let p0 = ModelParams { j: 1.0, j1, h: 0.0, zeeman: None };
    let labels = all_labels();
    // Lowest zero-field energy per σT^z ≥ 0 and the labels reaching it.
    let mut best: Vec<(i32, f64, Vec<QuantumLabel>)> = Vec::new();
    for k in 0..=3 {
        let of_k: Vec<&QuantumLabel> = labels.iter().filter(|l| l.twice_tz == 2 * k).collect();
        let a = of_k.iter().map(|l| closed_form_energy(l, &p0)).fold(f64::INFINITY, f64::min);
        let at: Vec<QuantumLabel> = of_k
            .into_iter()
            .filter(|l| closed_form_energy(l, &p0) - a <= tol.degeneracy_tol)
            .copied()
            .collect();
        best.push((k, a, at));
    }
    let mut out = Vec::new();
    // Start with the lowest line at h = 0, preferring larger σT^z on ties.
    let a_min = best.iter().map(|b| b.1).fold(f64::INFINITY, f64::min);
    let mut cur = best.iter().rposition(|b| b.1 - a_min <= tol.degeneracy_tol).unwrap();
    let mut h = 0.0;
    loop {
        out.push((best[cur].0, best[cur].2.clone(), h));
        let mut next: Option<(usize, f64)> = None;
        for k in cur + 1..best.len() {
            let hc = (best[k].1 - best[cur].1) / (best[k].0 - best[cur].0) as f64;
            match next {
                Some((_, hn)) if hc > hn + tol.degeneracy_tol => {}
                _ => next = Some((k, hc)),
            }
        }
        match next {
            Some((k, hc)) => {
                cur = k;
                h = hc.max(h);
            }
            None => break,
        }
    }
    out
}

fn phase_name(labels: &[QuantumLabel]) -> String {
    GroundState { energy: 0.0, labels: labels.to_vec(), degenerate: false }.phase_label()
}

/// Zero-field energy as `c + d·J1` with `J = 1`.
fn energy_line(l: &QuantumLabel) -> (f64, f64) {
    let c = closed_form_energy(l, &ModelParams { j: 1.0, j1: 0.0, h: 0.0, zeeman: None });
    let d = closed_form_energy(l, &ModelParams { j: 1.0, j1: 1.0, h: 0.0, zeeman: None }) - c;
    (c, d)
}

/// `J1` values where the plateau structure can change.
fn breakpoints(j1_min: f64, j1_max: f64) -> Vec<f64> {
    let lines: Vec<(f64, f64, i32)> = all_labels()
        .iter()
        .filter(|l| l.twice_tz >= 0)
        .map(|l| {
            let (c, d) = energy_line(l);
            (c, d, l.twice_tz / 2)
        })
        .collect();
    let mut out = vec![j1_min, j1_max];
    let mut push = |x: f64| {
        if x.is_finite() && x > j1_min && x < j1_max {
            out.push(x);
        }
    };
    for a in &lines {
        for b in &lines {
            // Same σT^z sectors swapping, or a crossing reaching h = 0.
            if (a.1 - b.1).abs() > 1e-12 {
                push((b.0 - a.0) / (a.1 - b.1));
            }
            if a.2 >= b.2 {
                continue;
            }
            for c in &lines {
                if c.2 <= b.2 {
                    continue;
                }
                // hc(a,b) = hc(b,c), both linear in J1.
                let (ka, kb) = ((b.2 - a.2) as f64, (c.2 - b.2) as f64);
                let num = (c.0 - b.0) / kb - (b.0 - a.0) / ka;
                let den = (b.1 - a.1) / ka - (c.1 - b.1) / kb;
                if den.abs() > 1e-12 {
                    push(num / den);
                }
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    out
}

/// Every ground-state crossing for `J1 ∈ [j1_min, j1_max]` and `0 ≤ h ≤ h_max`,
/// from the closed-form energies.
pub fn phase_boundaries(j1_min: f64, j1_max: f64, h_max: f64, tol: Tolerances) -> Result<Vec<PhaseBoundary>> {
    if !(j1_min.is_finite() && j1_max.is_finite() && j1_min >= 0.0 && j1_min < j1_max) {
        return Err(Error::invalid(format!("need 0 <= j1_min < j1_max, got {j1_min}..{j1_max}")));
    }
    if !(h_max > 0.0 && h_max.is_finite()) {
        return Err(Error::invalid(format!("h_max must be positive, got {h_max}")));
    }
    let bps = breakpoints(j1_min, j1_max);
    let mids: Vec<f64> = bps.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let envs: Vec<_> = mids.iter().map(|&m| envelope(m, tol)).collect();

    let mut out: Vec<PhaseBoundary> = Vec::new();
    for (w, env) in bps.windows(2).zip(&envs) {
        for pair in env.windows(2) {
            let (kp, lp, _) = &pair[0];
            let (kq, lq, _) = &pair[1];
            let (cp, dp) = energy_line(&lp[0]);
            let (cq, dq) = energy_line(&lq[0]);
            let dk = (kq - kp) as f64;
            let (slope, intercept) = ((dq - dp) / dk, (cq - cp) / dk);
            if intercept + slope * w[0] > h_max && intercept + slope * w[1] > h_max {
                continue;
            }
            let (from, to) = (phase_name(lp), phase_name(lq));
            if let Some(last) = out.last_mut() {
                if let Segment::Field { slope: s0, intercept: i0, j1_max: ref mut end, .. } = last.segment {
                    if last.from == from && last.to == to && s0 == slope && i0 == intercept && *end == w[0] {
                        *end = w[1];
                        continue;
                    }
                }
            }
            // Segments from earlier intervals may continue here too.
            if let Some(prev) = out.iter_mut().find(|b| {
                b.from == from
                    && b.to == to
                    && matches!(b.segment, Segment::Field { slope: s0, intercept: i0, j1_max: end, .. }
                        if s0 == slope && i0 == intercept && end == w[0])
            }) {
                if let Segment::Field { j1_max: ref mut end, .. } = prev.segment {
                    *end = w[1];
                }
                continue;
            }
            out.push(PhaseBoundary {
                from,
                to,
                segment: Segment::Field { slope, intercept, j1_min: w[0], j1_max: w[1] },
            });
        }
    }

    for (k, &b) in bps.iter().enumerate().skip(1).take(bps.len().saturating_sub(2)) {
        let (left, right) = (&envs[k - 1], &envs[k]);
        let here = envelope(b, tol);
        for (i, (kz, _, start)) in here.iter().enumerate() {
            let end = here.get(i + 1).map(|e| e.2).unwrap_or(f64::INFINITY).min(h_max);
            if *start >= end {
                continue;
            }
            let find = |env: &Vec<(i32, Vec<QuantumLabel>, f64)>| {
                env.iter().find(|e| e.0 == *kz).map(|e| phase_name(&e.1))
            };
            if let (Some(l), Some(r)) = (find(left), find(right)) {
                if l != r {
                    out.push(PhaseBoundary {
                        from: l,
                        to: r,
                        segment: Segment::Vertical { j1: b, h_min: *start, h_max: end },
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The phase label at a point, from the closed-form energies.
pub fn phase_at(j1: f64, h: f64, tol: Tolerances) -> Result<String> {
    Ok(classify_ground_state(&ModelParams::new(1.0, j1, h)?, tol).phase_label())
}

/// A temperature window where a negativity exceeds the level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TemperatureInterval {
    pub lower: f64,
    pub upper: f64,
    /// The window extends down to T = 0 because the ground state itself is
    /// above the level.
    pub from_zero: bool,
    /// Still above the level at the top of the scanned range.
    pub open_above: bool,
}

/// Grid and tolerances for [`threshold_profile`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdSearch {
    pub kt_min: f64,
    pub kt_max: f64,
    pub steps: usize,
    /// Bisection stops once brackets are narrower than this.
    pub bisection_tol: f64,
    /// A negativity counts as present when strictly above this level.
    pub level: f64,
}

impl Default for ThresholdSearch {
    fn default() -> Self {
        Self { kt_min: 0.005, kt_max: 1.5, steps: 300, bisection_tol: 1e-4, level: 1e-10 }
    }
}

/// Genuine negativity at `kT` (`kT = 0` is the ground manifold).
pub fn genuine_at(j1: f64, h: f64, kt: f64, trimer: Trimer, tol: Tolerances) -> Result<f64> {
    let params = ModelParams::new(1.0, j1, h)?;
    let state = thermal_state(&params, kt, tol)?;
    Ok(genuine_tripartite(&state, trimer, tol.zero_tol)?.genuine)
}

/// Temperature windows where the genuine negativity of `trimer` exceeds
/// `search.level`: grid bracketing, then bisection. Two or more windows, or a
/// window not starting at T = 0, signal reentrance.
pub fn threshold_profile(
    j1: f64,
    h: f64,
    trimer: Trimer,
    search: &ThresholdSearch,
    tol: Tolerances,
) -> Result<Vec<TemperatureInterval>> {
    let axis = Axis::new("kT_over_J", search.kt_min, search.kt_max, search.steps)?;
    if search.kt_min <= 0.0 || !(search.bisection_tol > 0.0) || !(search.level >= 0.0) {
        return Err(Error::invalid("threshold search needs kt_min > 0, bisection_tol > 0, level >= 0"));
    }
    let above = |kt: f64| genuine_at(j1, h, kt, trimer, tol).map(|n| n > search.level);
    let ground_above = above(0.0)?;
    let temps = axis.values();
    let flags: Vec<bool> = temps.iter().map(|&t| above(t)).collect::<Result<_>>()?;

    let bisect = |mut lo: f64, mut hi: f64, lo_state: bool| -> Result<f64> {
        while hi - lo > search.bisection_tol {
            let mid = 0.5 * (lo + hi);
            if above(mid)? == lo_state {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    };

    let mut out = Vec::new();
    let mut k = 0;
    while k < temps.len() {
        if !flags[k] {
            k += 1;
            continue;
        }
        let start = k;
        while k + 1 < temps.len() && flags[k + 1] {
            k += 1;
        }
        let (lower, from_zero) = if start == 0 {
            if ground_above {
                (0.0, true)
            } else {
                (bisect(0.0, temps[0], false)?, false)
            }
        } else {
            (bisect(temps[start - 1], temps[start], false)?, false)
        };
        let open_above = k + 1 == temps.len();
        let upper = if open_above { temps[k] } else { bisect(temps[k], temps[k + 1], true)? };
        out.push(TemperatureInterval { lower, upper, from_zero, open_above });
        k += 1;
    }
    Ok(out)
}

/// Fields among `fields` whose profile has a window detached from T = 0.
pub fn reentrant_fields(
    j1: f64,
    fields: &[f64],
    trimer: Trimer,
    search: &ThresholdSearch,
    tol: Tolerances,
) -> Result<Vec<(f64, Vec<TemperatureInterval>)>> {
    let profiles: Vec<(f64, Vec<TemperatureInterval>)> = fields
        .par_iter()
        .map(|&h| threshold_profile(j1, h, trimer, search, tol).map(|p| (h, p)))
        .collect::<Result<_>>()?;
    Ok(profiles.into_iter().filter(|(_, p)| p.iter().any(|i| !i.from_zero)).collect())
}

/// Highest grid temperature where the genuine negativity exceeds `level`,
/// refined by bisection; 0 when it never does.
pub fn threshold_temperature(j1: f64, h: f64, trimer: Trimer, search: &ThresholdSearch, tol: Tolerances) -> Result<f64> {
    let windows = threshold_profile(j1, h, trimer, search, tol)?;
    Ok(windows.last().map(|w| w.upper).unwrap_or(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerances = Tolerances { zero_tol: 1e-10, degeneracy_tol: 1e-9 };

    #[test]
    fn axes() {
        let a = Axis::new("h", 0.0, 6.0, 201).unwrap();
        let v = a.values();
        assert_eq!((v[0], v[200], v.len()), (0.0, 6.0, 201));
        assert!((v[1] - 0.03).abs() < 1e-15);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(Axis::new("h", 0.0, 6.0, 1).is_err());
        assert!(Axis::new("h", 1.0, 1.0, 5).is_err());
    }

    #[test]
    fn envelope_plateaus() {
        let env = envelope(0.5, TOL);
        let starts: Vec<f64> = env.iter().map(|e| e.2).collect();
        assert_eq!(env.iter().map(|e| e.0).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        for (a, b) in starts.iter().zip([0.0, 0.5, 1.75, 2.25]) {
            assert!((a - b).abs() < 1e-12);
        }
        let env = envelope(1.5, TOL);
        for (e, b) in env.iter().zip([0.0, 1.5, 3.0, 4.5]) {
            assert!((e.2 - b).abs() < 1e-12);
        }
    }

    #[test]
    fn boundaries() {
        let b = phase_boundaries(0.0, 2.0, 6.0, TOL).unwrap();
        let has = |slope: f64, intercept: f64, to: &str| {
            b.iter().any(|x| {
                x.to == to
                    && matches!(x.segment, Segment::Field { slope: s, intercept: i, .. }
                        if (s - slope).abs() < 1e-12 && (i - intercept).abs() < 1e-12)
            })
        };
        assert!(has(3.0, 0.0, "3,3/2,3/2"));
        assert!(has(1.5, 1.5, "3,3/2,3/2"));
        assert!(has(1.0, 0.0, "1,1/2,1/2"));
        assert!(has(0.5, 1.5, "2,1/2,3/2"));
        assert!(has(2.0, 0.0, "2,3/2,3/2"));
        let verticals: Vec<_> = b
            .iter()
            .filter_map(|x| match x.segment {
                Segment::Vertical { j1, h_min, h_max } => Some((j1, h_min, h_max)),
                _ => None,
            })
            .collect();
        assert_eq!(verticals.len(), 3);
        for (v, want) in verticals.iter().zip([(1.0, 0.0, 1.0), (1.0, 1.0, 2.0), (1.0, 2.0, 3.0)]) {
            assert!((v.0 - want.0).abs() < 1e-12 && (v.1 - want.1).abs() < 1e-12 && (v.2 - want.2).abs() < 1e-12);
        }
    }

    #[test]
    fn boundary_energies_agree() {
        for pb in phase_boundaries(0.0, 2.0, 6.0, TOL).unwrap() {
            if let Segment::Field { slope, intercept, j1_min, j1_max } = pb.segment {
                let j1 = 0.5 * (j1_min + j1_max);
                let h = intercept + slope * j1;
                let p = ModelParams::new(1.0, j1, h).unwrap();
                let e = |name: &str| {
                    let first = name.split(';').next().unwrap();
                    all_labels()
                        .into_iter()
                        .find(|l| l.canonical().to_string() == first)
                        .map(|l| closed_form_energy(&l, &p))
                        .unwrap()
                };
                assert!((e(&pb.from) - e(&pb.to)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn nodes() {
        let r = evaluate_node(0.5, 0.1, 0.0, TOL).unwrap();
        assert_eq!(r.phase_label(), "0,1/2,1/2");
        assert!((r.observables.genuine(Trimer::Mu1S1S2) - 0.527).abs() < 1e-3);
        assert_eq!(r.observables.genuine(Trimer::Mu1Mu2S2), 0.0);
        let r = evaluate_node(1.5, 5.0, 0.0, TOL).unwrap();
        assert_eq!(r.observables.genuine, [0.0, 0.0]);
        let hot = evaluate_node(0.7, 1.0, 100.0, TOL).unwrap();
        assert!(hot.observables.one_vs_two.iter().chain(&hot.observables.pairs).all(|&x| x < 1e-6));
        assert!(hot.ground.is_none());
    }

    #[test]
    fn worker_count_does_not_matter() {
        let j1 = Axis::new("J1_over_J", 0.0, 2.0, 7).unwrap();
        let h = Axis::new("h_over_J", 0.0, 6.0, 9).unwrap();
        let a = field_scan(&j1, &h, 0.0, TOL, 1).unwrap();
        let b = field_scan(&j1, &h, 0.0, TOL, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 63);
        assert_eq!((a[1].j1, a[1].h), (0.0, 0.75));
    }

    #[test]
    fn thresholds() {
        let s = ThresholdSearch { steps: 60, ..ThresholdSearch::default() };
        let p = threshold_profile(0.5, 0.1, Trimer::Mu1S1S2, &s, TOL).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p[0].from_zero && !p[0].open_above && p[0].upper > 0.1);
        assert!(threshold_profile(1.5, 20.0, Trimer::Mu1S1S2, &s, TOL).unwrap().is_empty());
    }
}
