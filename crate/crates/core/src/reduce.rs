//! Partial traces onto site subsets.

use serde::Serialize;

use crate::model::ThermalState;
use crate::spin::{asymmetry, ClusterLayout, RealMatrix, Site};
use crate::{Error, Result};

/// The two trimers whose genuine negativities are studied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Trimer {
    /// μ2 traced out; 18 states in the basis |μ1z, S1z, S2z⟩.
    Mu1S1S2,
    /// S1 traced out; 12 states in the basis |μ1z, μ2z, S2z⟩.
    Mu1Mu2S2,
}

impl Trimer {
    pub const ALL: [Trimer; 2] = [Trimer::Mu1S1S2, Trimer::Mu1Mu2S2];

    pub fn sites(self) -> [Site; 3] {
        match self {
            Trimer::Mu1S1S2 => [Site::Mu1, Site::S1, Site::S2],
            Trimer::Mu1Mu2S2 => [Site::Mu1, Site::Mu2, Site::S2],
        }
    }

    /// CSV column name of the genuine negativity.
    pub fn column(self) -> &'static str {
        match self {
            Trimer::Mu1S1S2 => "N_mu1_S1S2",
            Trimer::Mu1Mu2S2 => "N_mu1_mu2S2",
        }
    }
}

/// A reduced density matrix together with the layout of its retained sites.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensity {
    pub layout: ClusterLayout,
    pub matrix: RealMatrix,
}

impl ReducedDensity {
    pub fn new(layout: ClusterLayout, matrix: RealMatrix) -> Result<Self> {
        let n = layout.total_dim();
        if matrix.nrows() != n || matrix.ncols() != n {
            return Err(Error::invalid(format!(
                "matrix is {}x{} but the layout has {n} states",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(Self { layout, matrix })
    }

    pub fn kept(&self) -> Vec<Site> {
        self.layout.site_labels()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// m-value tuples of the basis states, first kept site slowest.
    pub fn basis_labels(&self) -> Vec<Vec<f64>> {
        self.layout.basis_labels()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    pub fn asymmetry(&self) -> f64 {
        asymmetry(&self.matrix)
    }

    /// Smallest eigenvalue.
    pub fn min_eigenvalue(&self) -> f64 {
        crate::eigen::symmetric_eigenvalues(&self.matrix)[0]
    }

    /// The matrix with every spin reversed, i.e. indices mapped `i → n−1−i`.
    pub fn flip(&self) -> Self {
        let n = self.dim();
        Self {
            layout: self.layout.clone(),
            matrix: RealMatrix::from_fn(n, n, |i, j| self.matrix[(n - 1 - i, n - 1 - j)]),
        }
    }

    /// Traces out every site not listed in `kept`; the output follows `kept` order.
    pub fn partial_trace(&self, kept: &[Site]) -> Result<Self> {
        trace_out(&self.matrix, &self.layout, kept)
    }
}

/// Mixed-radix digits of `index` in `dims` (first digit slowest).
pub(crate) fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut d = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        d[k] = index % dims[k];
        index /= dims[k];
    }
    d
}

/// Contracts a matrix on `layout` down to `kept`, in `kept` order.
pub fn trace_out(matrix: &RealMatrix, layout: &ClusterLayout, kept: &[Site]) -> Result<ReducedDensity> {
    let out_layout = ClusterLayout::new(kept)?;
    let pos: Vec<usize> = kept
        .iter()
        .map(|&s| {
            layout
                .position(s)
                .ok_or_else(|| Error::invalid(format!("site {s} is not in the layout")))
        })
        .collect::<Result<_>>()?;
    let dims = layout.dims();
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !pos.contains(k)).collect();
    let kept_dims: Vec<usize> = pos.iter().map(|&k| dims[k]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
    let n_out: usize = kept_dims.iter().product();
    let n_tr: usize = traced_dims.iter().product();

    // Full index of kept state a with traced state t is kept_off[a] + traced_off[t].
    let strides: Vec<usize> = (0..dims.len()).map(|k| dims[k + 1..].iter().product()).collect();
    let offsets = |sel: &[usize], sub_dims: &[usize], count: usize| -> Vec<usize> {
        (0..count)
            .map(|x| digits(x, sub_dims).iter().zip(sel).map(|(d, &p)| d * strides[p]).sum())
            .collect()
    };
    let kept_off = offsets(&pos, &kept_dims, n_out);
    let traced_off = offsets(&traced, &traced_dims, n_tr);

    let out = RealMatrix::from_fn(n_out, n_out, |a, b| {
        traced_off.iter().map(|&t| matrix[(kept_off[a] + t, kept_off[b] + t)]).sum()
    });
    ReducedDensity::new(out_layout, out)
}

/// Partial trace of a full tetramer state.
pub fn partial_trace(state: &ThermalState, kept: &[Site], layout: &ClusterLayout) -> Result<ReducedDensity> {
    if state.rho.nrows() != layout.total_dim() {
        return Err(Error::invalid("state and layout dimensions differ"));
    }
    if kept.is_empty() {
        return Err(Error::invalid("at least one site must be kept"));
    }
    trace_out(&state.rho, layout, kept)
}

/// The 18-dim (μ1, S1, S2) or 12-dim (μ1, μ2, S2) reduced state.
pub fn trimer_rdm(state: &ThermalState, which: Trimer) -> Result<ReducedDensity> {
    partial_trace(state, &which.sites(), &ClusterLayout::tetramer())
}

/// Two-site reduced state in the order `(a, b)`.
pub fn pair_rdm(state: &ThermalState, a: Site, b: Site) -> Result<ReducedDensity> {
    if a == b {
        return Err(Error::invalid(format!("pair needs two different sites, got {a} twice")));
    }
    partial_trace(state, &[a, b], &ClusterLayout::tetramer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{gibbs_state, spectrum, ModelParams};

    fn state(j1: f64, h: f64, kt: f64) -> ThermalState {
        let spec = spectrum(&ModelParams::new(1.0, j1, h).unwrap()).unwrap();
        gibbs_state(&spec, 1.0 / kt).unwrap()
    }

    #[test]
    fn infinite_temperature_marginals() {
        let spec = spectrum(&ModelParams::new(1.0, 0.7, 0.3).unwrap()).unwrap();
        let hot = gibbs_state(&spec, 0.0).unwrap();
        for t in Trimer::ALL {
            let r = trimer_rdm(&hot, t).unwrap();
            let n = r.dim();
            assert!((r.matrix - RealMatrix::identity(n, n) / n as f64).amax() < 1e-14);
        }
        let r = pair_rdm(&hot, Site::S1, Site::S2).unwrap();
        assert!((r.matrix - RealMatrix::identity(9, 9) / 9.0).amax() < 1e-14);
    }

    #[test]
    fn full_trace_keeps_everything() {
        let s = state(0.7, 0.3, 0.5);
        let r = partial_trace(&s, &Site::ALL, &ClusterLayout::tetramer()).unwrap();
        assert_eq!(r.matrix, s.rho);
        assert!(partial_trace(&s, &[], &ClusterLayout::tetramer()).is_err());
        assert!(pair_rdm(&s, Site::Mu2, Site::Mu2).is_err());
    }

    #[test]
    fn composition() {
        let s = state(1.3, -0.4, 0.8);
        let tri = trimer_rdm(&s, Trimer::Mu1S1S2).unwrap();
        let two_step = tri.partial_trace(&[Site::Mu1, Site::S2]).unwrap();
        let one_step = pair_rdm(&s, Site::Mu1, Site::S2).unwrap();
        assert!((two_step.matrix - one_step.matrix).amax() < 1e-13);
        assert!((tri.trace() - 1.0).abs() < 1e-12);
        assert!(tri.asymmetry() < 1e-12);
        assert!(tri.min_eigenvalue() > -1e-12);
    }

    #[test]
    fn sparsity_follows_magnetization() {
        let s = state(0.9, 0.6, 0.4);
        for t in Trimer::ALL {
            let r = trimer_rdm(&s, t).unwrap();
            let m: Vec<f64> = r.basis_labels().iter().map(|l| l.iter().sum()).collect();
            for i in 0..r.dim() {
                for j in 0..r.dim() {
                    if m[i] != m[j] {
                        assert!(r.matrix[(i, j)].abs() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn field_reversal_is_spin_flip() {
        let up = state(0.6, 0.9, 0.7);
        let down = state(0.6, -0.9, 0.7);
        for t in Trimer::ALL {
            let a = trimer_rdm(&up, t).unwrap().flip();
            let b = trimer_rdm(&down, t).unwrap();
            assert!((a.matrix - b.matrix).amax() < 1e-12);
        }
    }
}
