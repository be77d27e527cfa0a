//! Dense symmetric eigensolver.
//!
//! The matrix is split into the connected components of its nonzero pattern
//! (Hamiltonians and partial transposes here are block-diagonal in the
//! magnetization), and each block is diagonalized by cyclic Jacobi rotations.

use crate::spin::RealMatrix;

const MAX_SWEEPS: usize = 100;

/// Groups of indices coupled through nonzero off-diagonal entries, each sorted,
/// ordered by their smallest index.
pub fn connected_blocks(m: &RealMatrix) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)] != 0.0 || m[(j, i)] != 0.0 {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(i);
    }
    blocks
}

/// Cyclic Jacobi on a full symmetric block; returns eigenvalues (unsorted)
/// and eigenvectors as columns.
fn jacobi(mut a: RealMatrix) -> (Vec<f64>, RealMatrix) {
    let n = a.nrows();
    let mut v = RealMatrix::identity(n, n);
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[(p, q)].abs());
            }
        }
        if off <= f64::EPSILON * 1e-3 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}

/// Eigenvalues ascending with matching eigenvector columns. The input is
/// assumed symmetric; only exact zeros are used to find blocks.
pub fn symmetric_eigen(m: &RealMatrix) -> (Vec<f64>, RealMatrix) {
    let n = m.nrows();
    let mut values = Vec::with_capacity(n);
    let mut vectors = RealMatrix::zeros(n, n);
    for block in connected_blocks(m) {
        let k = block.len();
        let sub = RealMatrix::from_fn(k, k, |i, j| m[(block[i], block[j])]);
        let (vals, vecs) = jacobi(sub);
        for (c, val) in vals.into_iter().enumerate() {
            let col = values.len();
            values.push(val);
            for (r, &row) in block.iter().enumerate() {
                vectors[(row, col)] = vecs[(r, c)];
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let sorted = order.iter().map(|&k| values[k]).collect();
    let vecs = RealMatrix::from_fn(n, n, |i, c| vectors[(i, order[c])]);
    (sorted, vecs)
}

/// Eigenvalues only, ascending.
pub fn symmetric_eigenvalues(m: &RealMatrix) -> Vec<f64> {
    let mut values = Vec::with_capacity(m.nrows());
    for block in connected_blocks(m) {
        let k = block.len();
        let sub = RealMatrix::from_fn(k, k, |i, j| m[(block[i], block[j])]);
        values.extend(jacobi(sub).0);
    }
    values.sort_by(f64::total_cmp);
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn residual(m: &RealMatrix) -> (f64, f64) {
        let (vals, vecs) = symmetric_eigen(m);
        let n = m.nrows();
        let r = m * &vecs - &vecs * RealMatrix::from_diagonal(&vals.into());
        let o = vecs.transpose() * &vecs - RealMatrix::identity(n, n);
        (r.amax(), o.amax())
    }

    #[test]
    fn known_spectra() {
        let m = RealMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        assert_eq!(symmetric_eigenvalues(&m).len(), 2);
        let e = symmetric_eigenvalues(&m);
        assert!((e[0] - 1.0).abs() < 1e-15 && (e[1] - 3.0).abs() < 1e-15);
        let d = RealMatrix::from_diagonal(&vec![3.0, -1.0, 2.0].into());
        assert_eq!(symmetric_eigenvalues(&d), vec![-1.0, 2.0, 3.0]);
        let (r, o) = residual(&RealMatrix::identity(36, 36));
        assert_eq!((r, o), (0.0, 0.0));
    }

    #[test]
    fn blocks_found() {
        let mut m = RealMatrix::zeros(5, 5);
        m[(0, 3)] = 1.0;
        m[(3, 0)] = 1.0;
        m[(2, 4)] = 0.5;
        m[(4, 2)] = 0.5;
        assert_eq!(connected_blocks(&m), vec![vec![0, 3], vec![1], vec![2, 4]]);
    }

    proptest! {
        #[test]
        fn random_symmetric(entries in prop::collection::vec(-3.0f64..3.0, 64), zeros in prop::collection::vec(any::<bool>(), 64)) {
            let mut m = RealMatrix::zeros(8, 8);
            for i in 0..8 {
                for j in 0..=i {
                    let v = if zeros[i * 8 + j] { 0.0 } else { entries[i * 8 + j] };
                    m[(i, j)] = v;
                    m[(j, i)] = v;
                }
            }
            let (r, o) = residual(&m);
            prop_assert!(r < 1e-12 && o < 1e-12);
            let e = symmetric_eigenvalues(&m);
            prop_assert!((e.iter().sum::<f64>() - m.trace()).abs() < 1e-11);
        }
    }
}
