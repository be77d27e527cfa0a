use spin_tetramer::model::{classify_ground_state, ModelParams};
use spin_tetramer::scan::{
    field_scan, genuine_at, phase_at, reentrant_fields, thermal_scan, threshold_profile, threshold_temperature, Axis,
    ThresholdSearch,
};
use spin_tetramer::{Tolerances, Trimer};

const TOL: Tolerances = Tolerances { zero_tol: 1e-10, degeneracy_tol: 1e-9 };

#[test]
fn reentrance_just_above_the_weak_coupling_boundary() {
    let fields: Vec<f64> = (40..=90).map(|k| k as f64 / 100.0).collect();
    let hits = reentrant_fields(0.5, &fields, Trimer::Mu1S1S2, &ThresholdSearch::default(), TOL).unwrap();
    assert!(!hits.is_empty());
    for (h, windows) in &hits {
        // Detached windows only appear where the ground state is already separable.
        assert!(*h > 0.5, "h = {h}");
        assert_eq!(genuine_at(0.5, *h, 0.0, Trimer::Mu1S1S2, TOL).unwrap(), 0.0);
        assert!(windows.iter().all(|w| !w.from_zero && w.lower > 0.0 && w.upper > w.lower));
    }
}

#[test]
fn entangled_ground_state_gives_one_window_from_zero() {
    let w = threshold_profile(0.5, 0.1, Trimer::Mu1S1S2, &ThresholdSearch::default(), TOL).unwrap();
    assert_eq!(w.len(), 1);
    assert!(w[0].from_zero && w[0].lower == 0.0 && !w[0].open_above);
    assert!(w[0].upper < 1.0);

    let deep = threshold_profile(1.5, 20.0, Trimer::Mu1S1S2, &ThresholdSearch::default(), TOL).unwrap();
    assert!(deep.is_empty());
}

#[test]
fn strong_coupling_thresholds_are_ordered() {
    // The default range stops at kT = 1.5, where the first window is still open.
    let search = ThresholdSearch { level: 1e-3, kt_max: 4.0, steps: 800, ..ThresholdSearch::default() };
    let a = threshold_temperature(1.5, 0.0, Trimer::Mu1S1S2, &search, TOL).unwrap();
    let b = threshold_temperature(1.5, 0.0, Trimer::Mu1Mu2S2, &search, TOL).unwrap();
    assert!(a < search.kt_max);
    assert!(b > 0.0 && a >= 1.5 * b, "{a} vs {b}");
}

#[test]
fn hot_states_are_separable() {
    let h = Axis::new("h_over_J", 0.0, 6.0, 7).unwrap();
    let kt = Axis::new("kT_over_J", 100.0, 101.0, 2).unwrap();
    for r in thermal_scan(1.5, &kt, &h, false, TOL, 1).unwrap() {
        let o = &r.observables;
        assert!(o.genuine.iter().chain(&o.one_vs_two).chain(&o.pairs).all(|&n| n < 1e-6));
    }
}

#[test]
fn field_enhances_the_mu_mu_s_trimer_at_finite_temperature() {
    let h = Axis::new("h_over_J", 0.0, 6.0, 61).unwrap();
    let kt = Axis::new("kT_over_J", 0.05, 1.0, 20).unwrap();
    let rows = thermal_scan(1.5, &kt, &h, true, TOL, 0).unwrap();
    let n_h = h.steps;
    let enhanced = rows[n_h..].iter().enumerate().any(|(k, r)| {
        let t0 = rows[k % n_h].observables.genuine(Trimer::Mu1Mu2S2);
        r.observables.genuine(Trimer::Mu1Mu2S2) > t0 + 1e-6
    });
    assert!(enhanced);
}

#[test]
fn scan_labels_follow_the_argmin() {
    let j1 = Axis::new("J1_over_J", 0.0, 2.0, 41).unwrap();
    let h = Axis::new("h_over_J", 0.0, 6.0, 41).unwrap();
    let rows = field_scan(&j1, &h, 0.0, TOL, 0).unwrap();
    assert_eq!(rows.len(), 41 * 41);
    for r in &rows {
        let g = classify_ground_state(&ModelParams::new(1.0, r.j1, r.h).unwrap(), TOL);
        assert_eq!(r.phase_label(), g.phase_label());
        assert_eq!(r.phase_label(), phase_at(r.j1, r.h, TOL).unwrap());
        if r.phase_label() == "3,3/2,3/2" {
            assert_eq!(r.observables.genuine, [0.0, 0.0]);
        }
        assert!(r.observables.genuine.iter().all(|&n| n >= 0.0));
    }
    let node = rows.iter().find(|r| r.j1 == 0.5 && (r.h - 0.15).abs() < 1e-12).unwrap();
    assert_eq!(node.phase_label(), "0,1/2,1/2");
    assert_eq!(node.degenerate(), Some(false));
}

#[test]
fn worker_count_does_not_change_results() {
    let j1 = Axis::new("J1_over_J", 0.0, 2.0, 13).unwrap();
    let h = Axis::new("h_over_J", 0.0, 6.0, 17).unwrap();
    let one = field_scan(&j1, &h, 0.3, TOL, 1).unwrap();
    let four = field_scan(&j1, &h, 0.3, TOL, 4).unwrap();
    assert_eq!(one, four);
}
