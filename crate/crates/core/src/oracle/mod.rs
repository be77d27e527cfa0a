//! Closed-form reference values used to cross-check the numerical pipeline.
//!
//! Nothing here feeds back into [`crate::model`] or [`crate::negativity`]; the
//! brute-force path stays authoritative. The element tables carry a few
//! corrected transcription slips, listed by [`errata`]. Evaluating with
//! [`FormulaSet::Uncorrected`] restores them, so the slips can be shown to
//! be real.

pub mod blocks;
mod elements;
pub mod gs_table;
pub mod verify;

use serde::Serialize;

use crate::model::ModelParams;
use crate::spin::RealMatrix;
use crate::{Error, Result};

pub use blocks::{block_placement_error, blocks_of_pt, pooled_eigenvalues, PtBlock, PtCase};
pub use elements::Relation;
pub use gs_table::Regime;
pub use verify::{verify_appendix, VerificationReport};

use elements::{Element, ERRATA, RDM12, RDM18, RELATIONS12, RELATIONS18, SYMBOL_NOTES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum FormulaSet {
    #[default]
    Corrected,
    /// Element formulas with the transcription slips left in.
    Uncorrected,
}

/// A corrected element, identified by matrix size and 1-based indices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErratumInfo {
    pub dim: usize,
    pub row: usize,
    pub col: usize,
    pub note: String,
}

pub fn errata() -> Vec<ErratumInfo> {
    ERRATA
        .iter()
        .map(|e| ErratumInfo { dim: e.dim, row: e.row, col: e.col, note: e.note.to_string() })
        .collect()
}

/// Readings of ambiguous symbols, in the same shape as [`errata`].
pub fn symbol_notes() -> Vec<ErratumInfo> {
    SYMBOL_NOTES
        .iter()
        .map(|&(dim, row, col, note)| ErratumInfo { dim, row, col, note: note.to_string() })
        .collect()
}

fn table(dim: usize) -> Result<(&'static [Element], &'static [Relation])> {
    match dim {
        12 => Ok((RDM12, RELATIONS12)),
        18 => Ok((RDM18, RELATIONS18)),
        _ => Err(Error::invalid(format!("no closed form for a {dim}-dim matrix"))),
    }
}

/// The derived-element relations of the 12- or 18-dim matrix.
pub fn relations(dim: usize) -> Result<&'static [Relation]> {
    Ok(table(dim)?.1)
}

/// 1-based `(row, col)` of the elements given by their own formula.
pub fn independent_elements(dim: usize) -> Result<Vec<(usize, usize)>> {
    Ok(table(dim)?.0.iter().map(|e| (e.row, e.col)).collect())
}

fn element(dim: usize, row: usize, col: usize, set: FormulaSet) -> Result<Element> {
    if set == FormulaSet::Uncorrected {
        if let Some(e) = ERRATA.iter().find(|e| e.dim == dim && e.row == row && e.col == col) {
            return Ok(e.uncorrected);
        }
    }
    table(dim)?
        .0
        .iter()
        .find(|e| e.row == row && e.col == col)
        .copied()
        .ok_or_else(|| Error::invalid(format!("({row},{col}) has no formula of its own")))
}

fn check_inputs(beta: f64, z: f64) -> Result<()> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::invalid(format!("beta must be finite and non-negative, got {beta}")));
    }
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::invalid(format!("partition function must be positive and finite, got {z}")));
    }
    Ok(())
}

/// One independent element, 1-based.
pub fn eval_element(
    dim: usize,
    row: usize,
    col: usize,
    params: &ModelParams,
    beta: f64,
    z: f64,
    set: FormulaSet,
) -> Result<f64> {
    check_inputs(beta, z)?;
    Ok(element(dim, row, col, set)?.eval(params.j, params.j1, params.h, beta, z))
}

fn assemble(dim: usize, params: &ModelParams, beta: f64, z: f64, set: FormulaSet) -> Result<RealMatrix> {
    check_inputs(beta, z)?;
    let (elements, relations) = table(dim)?;
    let mut m = RealMatrix::zeros(dim, dim);
    let mut put = |(i, j): (usize, usize), v: f64| {
        m[(i - 1, j - 1)] = v;
        m[(j - 1, i - 1)] = v;
    };
    for e in elements {
        let e = element(dim, e.row, e.col, set)?;
        put((e.row, e.col), e.eval(params.j, params.j1, params.h, beta, z));
    }
    for r in relations {
        let e = element(dim, r.source.0, r.source.1, set)?;
        let h = if r.reverse_field { -params.h } else { params.h };
        put(r.target, r.factor * e.eval(params.j, params.j1, h, beta, z));
    }
    Ok(m)
}

/// The 12×12 matrix of the (μ1, μ2, S2) trimer, basis |μ1z, μ2z, S2z⟩.
/// `z` is the partition function of the full cluster at `beta`.
pub fn eval_rdm12(params: &ModelParams, beta: f64, z: f64, set: FormulaSet) -> Result<RealMatrix> {
    assemble(12, params, beta, z, set)
}

/// The 18×18 matrix of the (μ1, S1, S2) trimer, basis |μ1z, S1z, S2z⟩.
pub fn eval_rdm18(params: &ModelParams, beta: f64, z: f64, set: FormulaSet) -> Result<RealMatrix> {
    assemble(18, params, beta, z, set)
}

/// `max |ρ[target] − factor·ρ'[source]|` over the relations, where `ρ'` is
/// `rho_reversed` for field-reversed relations and `rho` otherwise.
pub fn relation_deviations(dim: usize, rho: &RealMatrix, rho_reversed: &RealMatrix) -> Result<Vec<(Relation, f64)>> {
    let rels = relations(dim)?;
    if rho.nrows() != dim || rho_reversed.nrows() != dim {
        return Err(Error::invalid("matrix size does not match"));
    }
    Ok(rels
        .iter()
        .map(|r| {
            let src = if r.reverse_field { rho_reversed } else { rho };
            let v = src[(r.source.0 - 1, r.source.1 - 1)] * r.factor;
            (*r, (rho[(r.target.0 - 1, r.target.1 - 1)] - v).abs())
        })
        .collect())
}
