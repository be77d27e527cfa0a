//! Partial transposes, negativities and genuine tripartite negativities.

use serde::Serialize;

use crate::model::ThermalState;
use crate::reduce::{pair_rdm, partial_trace, trimer_rdm, ReducedDensity};
use crate::spin::{ClusterLayout, RealMatrix, Site};
use crate::{Error, Result};

pub use crate::reduce::Trimer;

/// Transposes the indices of `subsystem` only.
pub fn partial_transpose(rho: &ReducedDensity, subsystem: Site) -> Result<RealMatrix> {
    let k = rho
        .layout
        .position(subsystem)
        .ok_or_else(|| Error::invalid(format!("site {subsystem} is not part of this reduced state")))?;
    let dims = rho.layout.dims();
    let stride: usize = dims[k + 1..].iter().product();
    let dk = dims[k];
    let n = rho.dim();
    let local = |i: usize| (i / stride) % dk;
    Ok(RealMatrix::from_fn(n, n, |i, j| {
        let (a, b) = (local(i), local(j));
        rho.matrix[((i - a * stride) + b * stride, (j - b * stride) + a * stride)]
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NegativityReport {
    /// Sum of |λ| over the negative eigenvalues.
    pub value: f64,
    /// Eigenvalues below `−zero_tol`, ascending.
    pub negative_eigenvalues: Vec<f64>,
    pub transposed_subsystem: Site,
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn sorted_eigenvalues(m: &RealMatrix) -> Vec<f64> {
    crate::eigen::symmetric_eigenvalues(m)
}

/// Negativity of `rho` with respect to transposing `subsystem`.
pub fn negativity(rho: &ReducedDensity, subsystem: Site, zero_tol: f64) -> Result<NegativityReport> {
    let pt = partial_transpose(rho, subsystem)?;
    let negative_eigenvalues: Vec<f64> =
        sorted_eigenvalues(&pt).into_iter().filter(|&l| l < -zero_tol).collect();
    // Adding 0.0 turns the empty sum's −0.0 into +0.0.
    let value = negative_eigenvalues.iter().map(|l| -l).sum::<f64>() + 0.0;
    Ok(NegativityReport { value, negative_eigenvalues, transposed_subsystem: subsystem })
}

/// The six single-spin versus spin-dimer splits, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OneVsTwo {
    Mu1VsS1S2,
    S1VsMu1S2,
    S2VsMu1S1,
    Mu1VsMu2S2,
    Mu2VsMu1S2,
    S2VsMu1Mu2,
}

impl OneVsTwo {
    pub const ALL: [OneVsTwo; 6] = [
        OneVsTwo::Mu1VsS1S2,
        OneVsTwo::S1VsMu1S2,
        OneVsTwo::S2VsMu1S1,
        OneVsTwo::Mu1VsMu2S2,
        OneVsTwo::Mu2VsMu1S2,
        OneVsTwo::S2VsMu1Mu2,
    ];

    pub fn single(self) -> Site {
        match self {
            OneVsTwo::Mu1VsS1S2 | OneVsTwo::Mu1VsMu2S2 => Site::Mu1,
            OneVsTwo::S1VsMu1S2 => Site::S1,
            OneVsTwo::S2VsMu1S1 | OneVsTwo::S2VsMu1Mu2 => Site::S2,
            OneVsTwo::Mu2VsMu1S2 => Site::Mu2,
        }
    }

    pub fn trimer(self) -> Trimer {
        match self {
            OneVsTwo::Mu1VsS1S2 | OneVsTwo::S1VsMu1S2 | OneVsTwo::S2VsMu1S1 => Trimer::Mu1S1S2,
            _ => Trimer::Mu1Mu2S2,
        }
    }

    pub fn pair(self) -> (Site, Site) {
        let rest: Vec<Site> = self.trimer().sites().into_iter().filter(|&s| s != self.single()).collect();
        (rest[0], rest[1])
    }

    pub fn column(self) -> &'static str {
        match self {
            OneVsTwo::Mu1VsS1S2 => "N_mu1|S1S2",
            OneVsTwo::S1VsMu1S2 => "N_S1|mu1S2",
            OneVsTwo::S2VsMu1S1 => "N_S2|mu1S1",
            OneVsTwo::Mu1VsMu2S2 => "N_mu1|mu2S2",
            OneVsTwo::Mu2VsMu1S2 => "N_mu2|mu1S2",
            OneVsTwo::S2VsMu1Mu2 => "N_S2|mu1mu2",
        }
    }
}

/// The six two-spin pairs of the tetramer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pair {
    Mu1S1,
    Mu1S2,
    Mu1Mu2,
    S1S2,
    S1Mu2,
    Mu2S2,
}

impl Pair {
    pub const ALL: [Pair; 6] = [Pair::Mu1S1, Pair::Mu1S2, Pair::Mu1Mu2, Pair::S1S2, Pair::S1Mu2, Pair::Mu2S2];

    pub fn sites(self) -> (Site, Site) {
        match self {
            Pair::Mu1S1 => (Site::Mu1, Site::S1),
            Pair::Mu1S2 => (Site::Mu1, Site::S2),
            Pair::Mu1Mu2 => (Site::Mu1, Site::Mu2),
            Pair::S1S2 => (Site::S1, Site::S2),
            Pair::S1Mu2 => (Site::S1, Site::Mu2),
            Pair::Mu2S2 => (Site::Mu2, Site::S2),
        }
    }

    pub fn column(self) -> String {
        let (a, b) = self.sites();
        format!("N_{}|{}", a.name(), b.name())
    }
}

fn distinct(sites: &[Site]) -> Result<()> {
    for (k, s) in sites.iter().enumerate() {
        if sites[..k].contains(s) {
            return Err(Error::invalid(format!("site {s} repeated")));
        }
    }
    Ok(())
}

/// `N_{A|BC}` of the three-site reduced state, transposing `single`.
pub fn one_vs_two_negativity(
    state: &ThermalState,
    single: Site,
    pair: (Site, Site),
    zero_tol: f64,
) -> Result<NegativityReport> {
    distinct(&[single, pair.0, pair.1])?;
    let kept: Vec<Site> =
        Site::ALL.into_iter().filter(|s| *s == single || *s == pair.0 || *s == pair.1).collect();
    let rho = partial_trace(state, &kept, &ClusterLayout::tetramer())?;
    negativity(&rho, single, zero_tol)
}

/// `N_{A|B}` of the two-site reduced state, transposing `a`.
pub fn two_spin_negativity(state: &ThermalState, a: Site, b: Site, zero_tol: f64) -> Result<NegativityReport> {
    negativity(&pair_rdm(state, a, b)?, a, zero_tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripartiteReport {
    pub triple: [Site; 3],
    pub n_a_bc: f64,
    pub n_b_ac: f64,
    pub n_c_ab: f64,
    /// Geometric mean of the three, exactly 0 when any factor is at or
    /// below the zero threshold.
    pub genuine: f64,
}

/// Geometric mean with the zero short-circuit.
pub fn geometric_mean(factors: [f64; 3], zero_tol: f64) -> f64 {
    if factors.iter().any(|&f| f <= zero_tol) {
        0.0
    } else {
        (factors.iter().map(|f| f.ln()).sum::<f64>() / 3.0).exp()
    }
}

pub fn genuine_tripartite(state: &ThermalState, triple: Trimer, zero_tol: f64) -> Result<TripartiteReport> {
    tripartite_of(&trimer_rdm(state, triple)?, zero_tol)
}

/// Genuine tripartite negativity of any three-site reduced state.
pub fn tripartite_of(rho: &ReducedDensity, zero_tol: f64) -> Result<TripartiteReport> {
    let kept = rho.kept();
    if kept.len() != 3 {
        return Err(Error::invalid(format!("expected three sites, got {}", kept.len())));
    }
    let n = |s: Site| negativity(rho, s, zero_tol).map(|r| r.value);
    let (a, b, c) = (n(kept[0])?, n(kept[1])?, n(kept[2])?);
    Ok(TripartiteReport {
        triple: [kept[0], kept[1], kept[2]],
        n_a_bc: a,
        n_b_ac: b,
        n_c_ab: c,
        genuine: geometric_mean([a, b, c], zero_tol),
    })
}

/// Every negativity reported by scans for one state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observables {
    /// Indexed like [`Trimer::ALL`].
    pub genuine: [f64; 2],
    /// Indexed like [`OneVsTwo::ALL`].
    pub one_vs_two: [f64; 6],
    /// Indexed like [`Pair::ALL`].
    pub pairs: [f64; 6],
}

impl Observables {
    pub fn evaluate(state: &ThermalState, zero_tol: f64) -> Result<Self> {
        let mut one_vs_two = [0.0; 6];
        let mut genuine = [0.0; 2];
        for (g, t) in Trimer::ALL.into_iter().enumerate() {
            let rho = trimer_rdm(state, t)?;
            let mut f = [0.0; 3];
            for (slot, site) in t.sites().into_iter().enumerate() {
                f[slot] = negativity(&rho, site, zero_tol)?.value;
                let k = OneVsTwo::ALL.iter().position(|o| o.trimer() == t && o.single() == site).unwrap();
                one_vs_two[k] = f[slot];
            }
            genuine[g] = geometric_mean(f, zero_tol);
        }
        let mut pairs = [0.0; 6];
        for (k, p) in Pair::ALL.into_iter().enumerate() {
            let (a, b) = p.sites();
            pairs[k] = two_spin_negativity(state, a, b, zero_tol)?.value;
        }
        Ok(Self { genuine, one_vs_two, pairs })
    }

    pub fn one(&self, which: OneVsTwo) -> f64 {
        self.one_vs_two[OneVsTwo::ALL.iter().position(|&o| o == which).unwrap()]
    }

    pub fn pair(&self, which: Pair) -> f64 {
        self.pairs[Pair::ALL.iter().position(|&p| p == which).unwrap()]
    }

    pub fn genuine(&self, which: Trimer) -> f64 {
        self.genuine[Trimer::ALL.iter().position(|&t| t == which).unwrap()]
    }
}
