//! Block-diagonal structure of the six trimer partial transposes.
//!
//! Each case lists a 1×1, a 3×3 and a larger block (4×4 for the 12-dim
//! trimer, 5×5 for the 18-dim one) as 1-based element references into the
//! untransposed density matrix ρ. The rows a block occupies in the partial
//! transpose are the references on its diagonal. Every block except the 4×4
//! one has a barred partner obtained by the spin flip `i → n+1−i` applied to
//! all references.

use serde::Serialize;

use crate::negativity::sorted_eigenvalues;
use crate::spin::{RealMatrix, Site};
use crate::{Error, Result, Trimer};

/// A trimer and the site whose indices are transposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PtCase {
    Mu1InMu1Mu2S2,
    Mu2InMu1Mu2S2,
    S2InMu1Mu2S2,
    Mu1InMu1S1S2,
    S1InMu1S1S2,
    S2InMu1S1S2,
}

const MU1_IN_12: [&[(usize, usize)]; 3] = [
    &[
        (6, 6),
    ],
    &[
        (1, 1), (2, 7), (4, 7),
        (2, 7), (8, 8), (8, 10),
        (4, 7), (8, 10), (10, 10),
    ],
    &[
        (2, 2), (2, 4), (3, 8), (5, 8),
        (2, 4), (4, 4), (3, 10), (3, 8),
        (3, 8), (3, 10), (9, 9), (9, 11),
        (5, 8), (3, 8), (9, 11), (11, 11),
    ],
];

const MU2_IN_12: [&[(usize, usize)]; 3] = [
    &[
        (4, 4),
    ],
    &[
        (1, 1), (2, 4), (4, 7),
        (2, 4), (5, 5), (3, 8),
        (4, 7), (3, 8), (10, 10),
    ],
    &[
        (2, 2), (2, 7), (3, 5), (5, 8),
        (2, 7), (7, 7), (3, 10), (8, 10),
        (3, 5), (3, 10), (6, 6), (6, 11),
        (5, 8), (8, 10), (6, 11), (11, 11),
    ],
];

const S2_IN_12: [&[(usize, usize)]; 3] = [
    &[
        (3, 3),
    ],
    &[
        (2, 2), (3, 5), (3, 8),
        (3, 5), (6, 6), (6, 9),
        (3, 8), (6, 9), (9, 9),
    ],
    &[
        (1, 1), (2, 4), (2, 7), (3, 10),
        (2, 4), (5, 5), (5, 8), (6, 11),
        (2, 7), (5, 8), (8, 8), (9, 11),
        (3, 10), (6, 11), (9, 11), (12, 12),
    ],
];

const MU1_IN_18: [&[(usize, usize)]; 3] = [
    &[
        (9, 9),
    ],
    &[
        (1, 1), (2, 10), (4, 10),
        (2, 10), (11, 11), (11, 13),
        (4, 10), (11, 13), (13, 13),
    ],
    &[
        (2, 2), (2, 4), (3, 11), (5, 11), (7, 11),
        (2, 4), (4, 4), (3, 13), (5, 13), (7, 13),
        (3, 11), (3, 13), (12, 12), (12, 14), (12, 16),
        (5, 11), (5, 13), (12, 14), (14, 14), (14, 16),
        (7, 11), (7, 13), (12, 16), (14, 16), (16, 16),
    ],
];

const S1_IN_18: [&[(usize, usize)]; 3] = [
    &[
        (7, 7),
    ],
    &[
        (3, 3), (3, 11), (6, 12),
        (3, 11), (11, 11), (12, 14),
        (6, 12), (12, 14), (15, 15),
    ],
    &[
        (1, 1), (2, 4), (4, 10), (3, 7), (7, 11),
        (2, 4), (5, 5), (5, 13), (6, 8), (8, 14),
        (4, 10), (5, 13), (13, 13), (6, 16), (14, 16),
        (3, 7), (6, 8), (6, 16), (9, 9), (9, 17),
        (7, 11), (8, 14), (14, 16), (9, 17), (17, 17),
    ],
];

const S2_IN_18: [&[(usize, usize)]; 3] = [
    &[
        (3, 3),
    ],
    &[
        (2, 2), (3, 5), (3, 11),
        (3, 5), (6, 6), (6, 12),
        (3, 11), (6, 12), (12, 12),
    ],
    &[
        (1, 1), (2, 4), (2, 10), (3, 7), (3, 13),
        (2, 4), (5, 5), (5, 11), (6, 8), (6, 14),
        (2, 10), (5, 11), (11, 11), (8, 12), (12, 14),
        (3, 7), (6, 8), (8, 12), (9, 9), (9, 15),
        (3, 13), (6, 14), (12, 14), (9, 15), (15, 15),
    ],
];

impl PtCase {
    pub const ALL: [PtCase; 6] = [
        PtCase::Mu1InMu1Mu2S2,
        PtCase::Mu2InMu1Mu2S2,
        PtCase::S2InMu1Mu2S2,
        PtCase::Mu1InMu1S1S2,
        PtCase::S1InMu1S1S2,
        PtCase::S2InMu1S1S2,
    ];

    pub fn trimer(self) -> Trimer {
        match self {
            PtCase::Mu1InMu1Mu2S2 | PtCase::Mu2InMu1Mu2S2 | PtCase::S2InMu1Mu2S2 => Trimer::Mu1Mu2S2,
            _ => Trimer::Mu1S1S2,
        }
    }

    pub fn site(self) -> Site {
        match self {
            PtCase::Mu1InMu1Mu2S2 | PtCase::Mu1InMu1S1S2 => Site::Mu1,
            PtCase::Mu2InMu1Mu2S2 => Site::Mu2,
            PtCase::S1InMu1S1S2 => Site::S1,
            PtCase::S2InMu1Mu2S2 | PtCase::S2InMu1S1S2 => Site::S2,
        }
    }

    pub fn dim(self) -> usize {
        match self.trimer() {
            Trimer::Mu1Mu2S2 => 12,
            Trimer::Mu1S1S2 => 18,
        }
    }

    fn refs(self) -> [&'static [(usize, usize)]; 3] {
        match self {
            PtCase::Mu1InMu1Mu2S2 => MU1_IN_12,
            PtCase::Mu2InMu1Mu2S2 => MU2_IN_12,
            PtCase::S2InMu1Mu2S2 => S2_IN_12,
            PtCase::Mu1InMu1S1S2 => MU1_IN_18,
            PtCase::S1InMu1S1S2 => S1_IN_18,
            PtCase::S2InMu1S1S2 => S2_IN_18,
        }
    }

    /// e.g. `ρ_{μ1μ2S2}^{T_μ1}`.
    pub fn describe(self) -> String {
        let [a, b, c] = self.trimer().sites();
        format!("ρ_{a}{b}{c}^T{}", self.site())
    }
}

/// One block of a partial transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct PtBlock {
    /// `Q1`, `Q1bar`, … for the 12-dim trimer and `R1`, … for the 18-dim one.
    pub name: String,
    /// 0-based rows of the partial transpose spanned by the block.
    pub rows: Vec<usize>,
    pub matrix: RealMatrix,
}

/// Assembles the blocks of `case` from the entries of `rdm`.
pub fn blocks_of_pt(rdm: &RealMatrix, case: PtCase) -> Result<Vec<PtBlock>> {
    let n = case.dim();
    if rdm.nrows() != n || rdm.ncols() != n {
        return Err(Error::invalid(format!(
            "{} needs a {n}x{n} matrix, got {}x{}",
            case.describe(),
            rdm.nrows(),
            rdm.ncols()
        )));
    }
    let letter = if n == 12 { "Q" } else { "R" };
    let mut out = Vec::new();
    for (k, refs) in case.refs().into_iter().enumerate() {
        let size = (refs.len() as f64).sqrt().round() as usize;
        let barred = !(n == 12 && k == 2);
        for bar in [false, true] {
            if bar && !barred {
                continue;
            }
            let map = |i: usize| if bar { n - i } else { i - 1 };
            let matrix = RealMatrix::from_fn(size, size, |r, c| {
                let (i, j) = refs[r * size + c];
                rdm[(map(i), map(j))]
            });
            let rows = (0..size).map(|t| map(refs[t * size + t].0)).collect();
            let name = format!("{letter}{}{}", k + 1, if bar { "bar" } else { "" });
            out.push(PtBlock { name, rows, matrix });
        }
    }
    Ok(out)
}

/// Pooled eigenvalues of all blocks, ascending.
pub fn pooled_eigenvalues(blocks: &[PtBlock]) -> Vec<f64> {
    let mut e: Vec<f64> = blocks.iter().flat_map(|b| sorted_eigenvalues(&b.matrix)).collect();
    e.sort_by(f64::total_cmp);
    e
}

/// Largest deviation between the blocks and the corresponding rows/columns of
/// `pt`, including the entries outside every block (which must vanish), and
/// whether the block rows cover each row exactly once.
pub fn block_placement_error(pt: &RealMatrix, blocks: &[PtBlock]) -> (f64, bool) {
    let n = pt.nrows();
    let mut owner = vec![usize::MAX; n];
    let mut once = true;
    for (b, block) in blocks.iter().enumerate() {
        for &r in &block.rows {
            if owner[r] != usize::MAX {
                once = false;
            }
            owner[r] = b;
        }
    }
    once &= owner.iter().all(|&o| o != usize::MAX);
    let mut worst = 0.0f64;
    for block in blocks {
        for (a, &i) in block.rows.iter().enumerate() {
            for (c, &j) in block.rows.iter().enumerate() {
                worst = worst.max((pt[(i, j)] - block.matrix[(a, c)]).abs());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if owner[i] != owner[j] || owner[i] == usize::MAX {
                worst = worst.max(pt[(i, j)].abs());
            }
        }
    }
    (worst, once)
}
