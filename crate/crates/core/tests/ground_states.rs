use spin_tetramer::model::{classify_ground_state, ground_state, thermal_state, ModelParams};
use spin_tetramer::negativity::{one_vs_two_negativity, two_spin_negativity, Observables};
use spin_tetramer::oracle::gs_table::{self, half_three_halves_pairs, Regime};
use spin_tetramer::reduce::partial_trace;
use spin_tetramer::{ClusterLayout, OneVsTwo, Site, ThermalState, Tolerances, Trimer};

const TOL: Tolerances = Tolerances { zero_tol: 1e-10, degeneracy_tol: 1e-9 };

fn ground(j1: f64, h: f64) -> ThermalState {
    ground_state(&ModelParams::new(1.0, j1, h).unwrap(), TOL).unwrap()
}

fn one_vs_two(j1: f64, h: f64) -> [f64; 6] {
    Observables::evaluate(&ground(j1, h), TOL.zero_tol).unwrap().one_vs_two
}

#[test]
fn nondegenerate_rows_match_closed_forms() {
    for regime in [Regime::Below, Regime::Above] {
        for tz in 0..4 {
            let h = regime.field(tz).unwrap();
            let g = classify_ground_state(&ModelParams::new(1.0, regime.ratio(), h).unwrap(), TOL);
            let labels: Vec<String> = g.canonical_labels().iter().map(|l| l.to_string()).collect();
            let want = regime.labels(tz).unwrap();
            assert_eq!(labels[0], want[0].to_string(), "{regime} row {tz}");

            let got = one_vs_two(regime.ratio(), h);
            for (k, col) in OneVsTwo::ALL.into_iter().enumerate() {
                let exact = gs_table::value(regime, tz, col).unwrap();
                assert!((got[k] - exact).abs() < 1e-9, "{regime} row {tz} {}: {} vs {exact}", col.column(), got[k]);
            }
        }
    }
}

#[test]
fn isotropic_mixtures_match_closed_forms() {
    for tz in 0..4 {
        let got = one_vs_two(1.0, Regime::At.field(tz).unwrap());
        for (k, col) in OneVsTwo::ALL.into_iter().enumerate() {
            let exact = gs_table::value(Regime::At, tz, col).unwrap();
            assert!((got[k] - exact).abs() < 1e-9, "row {tz} {}", col.column());
        }
    }
}

#[test]
fn isotropic_degeneracies() {
    for (tz, n) in [(0u32, 2usize), (1, 4), (2, 3), (3, 1)] {
        let g = classify_ground_state(&ModelParams::new(1.0, 1.0, Regime::At.field(tz).unwrap()).unwrap(), TOL);
        assert_eq!(g.degeneracy(), n, "row {tz}");
        assert_eq!(g.degenerate, n > 1);
    }
}

/// Zero (`false`) or nonzero (`true`) per column of [`OneVsTwo::ALL`].
const ZERO_PATTERN: [(&str, f64, f64, [bool; 6]); 7] = [
    ("0,1/2,1/2", 0.5, 0.1, [true, true, true, false, true, true]),
    ("1,1/2,1/2", 0.5, 1.0, [true, true, false, false, true, true]),
    ("2,1/2,3/2", 0.5, 2.0, [true, true, false, false, true, true]),
    ("0,3/2,3/2", 1.5, 0.5, [true; 6]),
    ("1,3/2,3/2", 1.5, 2.0, [true; 6]),
    ("2,3/2,3/2", 1.5, 3.5, [true; 6]),
    ("3,3/2,3/2", 1.5, 5.0, [false; 6]),
];

#[test]
fn zero_pattern_per_ground_state() {
    for (label, j1, h, pattern) in ZERO_PATTERN {
        let p = ModelParams::new(1.0, j1, h).unwrap();
        assert_eq!(classify_ground_state(&p, TOL).phase_label().split(';').next().unwrap(), label);
        let got = one_vs_two(j1, h);
        for (k, col) in OneVsTwo::ALL.into_iter().enumerate() {
            assert_eq!(got[k] > TOL.zero_tol, pattern[k], "{label} {}", col.column());
        }
    }
    // Saturation is all zeros in the weak regime too.
    assert!(one_vs_two(0.5, 3.0).iter().all(|&n| n == 0.0));
}

#[test]
fn saturation_field_is_three_j1() {
    for j1 in [1.0, 1.5, 2.0] {
        let below = Observables::evaluate(&ground(j1, 3.0 * j1 - 0.05), TOL.zero_tol).unwrap();
        let above = Observables::evaluate(&ground(j1, 3.0 * j1 + 0.05), TOL.zero_tol).unwrap();
        assert!(below.genuine.iter().all(|&n| n > 0.0), "J1 = {j1}: {:?}", below.genuine);
        assert_eq!(above.genuine, [0.0, 0.0], "J1 = {j1}");
    }
}

#[test]
fn pair_values_on_the_half_three_halves_plateau() {
    let state = ground(0.5, 2.0);
    let (want_s1, want_s2, want_dimer) = half_three_halves_pairs();
    let n = |a, b| two_spin_negativity(&state, a, b, TOL.zero_tol).unwrap().value;
    assert!((n(Site::Mu1, Site::S1) - want_s1).abs() < 1e-9);
    assert!((n(Site::Mu1, Site::S1) - (17f64.sqrt() - 3.0) / 12.0).abs() < 1e-9);
    assert_eq!(n(Site::Mu1, Site::S2), want_s2);
    let dimer = one_vs_two_negativity(&state, Site::S2, (Site::Mu1, Site::Mu2), TOL.zero_tol).unwrap().value;
    assert!((dimer - want_dimer).abs() < 1e-9);
}

#[test]
fn single_spin_entangled_with_dimer_iff_with_one_member() {
    for (label, j1, h, _) in ZERO_PATTERN {
        let state = ground(j1, h);
        for col in OneVsTwo::ALL {
            let a = col.single();
            let (b, c) = col.pair();
            let whole = one_vs_two_negativity(&state, a, (b, c), TOL.zero_tol).unwrap().value > TOL.zero_tol;
            let ab = two_spin_negativity(&state, a, b, TOL.zero_tol).unwrap().value > TOL.zero_tol;
            let ac = two_spin_negativity(&state, a, c, TOL.zero_tol).unwrap().value > TOL.zero_tol;
            assert_eq!(whole, ab || ac, "{label} {}", col.column());
        }
    }
}

#[test]
fn dimer_exchange_maps_reduced_states() {
    let layout = ClusterLayout::tetramer();
    for (j1, h, kt) in [(0.5, 0.1, 0.0), (1.3, 0.7, 0.4), (0.8, -2.0, 1.1)] {
        let state = thermal_state(&ModelParams::new(1.0, j1, h).unwrap(), kt, TOL).unwrap();
        let a = partial_trace(&state, &[Site::Mu1, Site::S1, Site::S2], &layout).unwrap();
        let b = partial_trace(&state, &[Site::Mu2, Site::S2, Site::S1], &layout).unwrap();
        assert!((a.matrix - b.matrix).amax() < 1e-12);
        let a = partial_trace(&state, &[Site::Mu1, Site::Mu2, Site::S2], &layout).unwrap();
        let b = partial_trace(&state, &[Site::Mu2, Site::Mu1, Site::S1], &layout).unwrap();
        assert!((a.matrix - b.matrix).amax() < 1e-12);
    }
}

#[test]
fn negativities_are_even_in_the_field() {
    for (j1, h, kt) in [(0.5, 0.3, 0.2), (1.5, 2.0, 0.5), (1.0, 1.5, 0.0), (0.7, 4.0, 1.0)] {
        let up = Observables::evaluate(&thermal_state(&ModelParams::new(1.0, j1, h).unwrap(), kt, TOL).unwrap(), TOL.zero_tol)
            .unwrap();
        let down = Observables::evaluate(
            &thermal_state(&ModelParams::new(1.0, j1, -h).unwrap(), kt, TOL).unwrap(),
            TOL.zero_tol,
        )
        .unwrap();
        for (a, b) in up.one_vs_two.iter().chain(&up.pairs).zip(down.one_vs_two.iter().chain(&down.pairs)) {
            assert!((a - b).abs() < 1e-10);
        }
        for t in Trimer::ALL {
            assert!((up.genuine(t) - down.genuine(t)).abs() < 1e-10);
        }
    }
}
