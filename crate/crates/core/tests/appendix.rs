use spin_tetramer::model::{gibbs_state, spectrum, ModelParams};
use spin_tetramer::oracle::verify::{draws, ELEMENT_TOL, RELATION_TOL};
use spin_tetramer::oracle::{self, eval_rdm12, eval_rdm18, verify_appendix, FormulaSet, PtCase};
use spin_tetramer::reduce::trimer_rdm;
use spin_tetramer::Trimer;

#[test]
fn sweep_of_sixty_draws_passes() {
    let report = verify_appendix(2024, 60).unwrap();
    assert!(report.pass, "{:?}", report.suspected_typos);
    assert!(report.elements.iter().all(|e| e.max_dev <= ELEMENT_TOL));
    assert!(report.matrix_max_dev.iter().all(|&d| d <= ELEMENT_TOL));
    assert!(report.relations.iter().all(|r| r.max_dev <= RELATION_TOL));
    assert_eq!(report.blocks.len(), PtCase::ALL.len());
    for b in &report.blocks {
        assert!(b.max_spectrum_dev <= ELEMENT_TOL && b.covers_once, "{}", b.label);
    }
}

#[test]
fn every_correction_is_needed() {
    let report = verify_appendix(99, 50).unwrap();
    for er in oracle::errata() {
        let e = report
            .elements
            .iter()
            .find(|e| (e.dim, e.row, e.col) == (er.dim, er.row, er.col))
            .unwrap();
        assert!(e.max_dev_uncorrected > 1e-6, "{}-dim ({},{})", er.dim, er.row, er.col);
    }
    // Only the listed elements change between the two formula sets.
    let changed = report.elements.iter().filter(|e| e.max_dev_uncorrected > ELEMENT_TOL).count();
    assert_eq!(changed, oracle::errata().len());
}

#[test]
fn same_seed_same_report() {
    let a = verify_appendix(5, 8).unwrap();
    let b = verify_appendix(5, 8).unwrap();
    assert_eq!(a, b);
    assert_ne!(draws(5, 8), draws(6, 8));
}

#[test]
fn closed_forms_outside_the_sweep_ranges() {
    // Ferromagnetic inter-dimer coupling and strong fields are not drawn by the sweep.
    for (j, j1, h, kt) in [(1.0, 0.0, 0.0, 0.3), (1.0, 3.0, 7.5, 0.8), (2.0, 0.1, -6.0, 2.0)] {
        let p = ModelParams::new(j, j1, h).unwrap();
        let beta = 1.0 / kt;
        let spec = spectrum(&p).unwrap();
        let z = spec.partition_function(beta);
        let state = gibbs_state(&spec, beta).unwrap();
        let r12 = trimer_rdm(&state, Trimer::Mu1Mu2S2).unwrap().matrix;
        let r18 = trimer_rdm(&state, Trimer::Mu1S1S2).unwrap().matrix;
        let c12 = eval_rdm12(&p, beta, z, FormulaSet::Corrected).unwrap();
        let c18 = eval_rdm18(&p, beta, z, FormulaSet::Corrected).unwrap();
        assert!((c12 - r12).amax() < 1e-10);
        assert!((c18 - r18).amax() < 1e-10);
    }
}
