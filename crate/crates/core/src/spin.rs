//! Spin operators, tensor-product layouts and Heisenberg couplings.
//!
//! Every local basis is ordered by descending magnetic quantum number
//! `m = s, s-1, ..., -s`. Composite bases follow the layout order with the
//! first site varying slowest.

use std::fmt;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::{Error, Result};

/// Dense real matrix used throughout the crate.
pub type RealMatrix = DMatrix<f64>;

/// The four sites of the tetramer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Site {
    Mu1,
    S1,
    Mu2,
    S2,
}

impl Site {
    /// Canonical order (μ1, S1, μ2, S2).
    pub const ALL: [Site; 4] = [Site::Mu1, Site::S1, Site::Mu2, Site::S2];

    /// Twice the spin quantum number (1 for μ, 2 for S).
    pub fn twice_spin(self) -> u32 {
        match self {
            Site::Mu1 | Site::Mu2 => 1,
            Site::S1 | Site::S2 => 2,
        }
    }

    pub fn dim(self) -> usize {
        self.twice_spin() as usize + 1
    }

    /// ASCII name used in column headers, e.g. `mu1`, `S2`.
    pub fn name(self) -> &'static str {
        match self {
            Site::Mu1 => "mu1",
            Site::S1 => "S1",
            Site::Mu2 => "mu2",
            Site::S2 => "S2",
        }
    }

    /// The site on the other dimer playing the same role.
    pub fn exchanged(self) -> Site {
        match self {
            Site::Mu1 => Site::Mu2,
            Site::S1 => Site::S2,
            Site::Mu2 => Site::Mu1,
            Site::S2 => Site::S1,
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Site::Mu1 => "μ1",
            Site::S1 => "S1",
            Site::Mu2 => "μ2",
            Site::S2 => "S2",
        })
    }
}

/// A site together with its spin quantum number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinSite {
    pub site: Site,
    /// Twice the spin quantum number, so `s = 1/2` is stored as 1.
    pub twice_s: u32,
}

impl SpinSite {
    pub fn new(site: Site) -> Self {
        Self { site, twice_s: site.twice_spin() }
    }

    pub fn s(&self) -> f64 {
        self.twice_s as f64 / 2.0
    }

    pub fn dim(&self) -> usize {
        self.twice_s as usize + 1
    }

    /// Magnetic quantum numbers in basis order.
    pub fn m_values(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.s() - k as f64).collect()
    }
}

/// Ordered tensor-product layout of distinct sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterLayout {
    sites: Vec<SpinSite>,
}

impl ClusterLayout {
    pub fn new(sites: &[Site]) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::invalid("a layout needs at least one site"));
        }
        for (k, s) in sites.iter().enumerate() {
            if sites[..k].contains(s) {
                return Err(Error::invalid(format!("site {s} listed twice")));
            }
        }
        Ok(Self { sites: sites.iter().map(|&s| SpinSite::new(s)).collect() })
    }

    /// The canonical tetramer layout (μ1, S1, μ2, S2), 36 states.
    pub fn tetramer() -> Self {
        Self { sites: Site::ALL.iter().map(|&s| SpinSite::new(s)).collect() }
    }

    pub fn sites(&self) -> &[SpinSite] {
        &self.sites
    }

    pub fn site_labels(&self) -> Vec<Site> {
        self.sites.iter().map(|s| s.site).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.sites.iter().map(|s| s.dim()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.sites.iter().map(|s| s.dim()).product()
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn position(&self, site: Site) -> Option<usize> {
        self.sites.iter().position(|s| s.site == site)
    }

    pub fn is_tetramer(&self) -> bool {
        self.site_labels() == Site::ALL
    }

    /// Per-site m-value tuples of every basis state, in basis order.
    pub fn basis_labels(&self) -> Vec<Vec<f64>> {
        let mut out = vec![Vec::new()];
        for site in &self.sites {
            let ms = site.m_values();
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    ms.iter().map(move |&m| {
                        let mut v = prefix.clone();
                        v.push(m);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

fn twice_spin(s: f64) -> Result<u32> {
    let t = 2.0 * s;
    if !s.is_finite() || s < 0.0 || (t - t.round()).abs() > 1e-12 {
        return Err(Error::invalid(format!("{s} is not a non-negative half-integer")));
    }
    Ok(t.round() as u32)
}

/// `diag(s, s-1, ..., -s)`.
pub fn spin_z(s: f64) -> Result<RealMatrix> {
    let n = twice_spin(s)? as usize + 1;
    Ok(RealMatrix::from_fn(n, n, |i, j| if i == j { s - i as f64 } else { 0.0 }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// `S+` or `S-` with elements `sqrt(s(s+1) - m(m±1))`.
pub fn spin_ladder(s: f64, direction: Ladder) -> Result<RealMatrix> {
    let n = twice_spin(s)? as usize + 1;
    let mut out = RealMatrix::zeros(n, n);
    // Row i holds m = s - i; raising moves column i+1 to row i.
    for i in 0..n - 1 {
        let m = s - (i + 1) as f64;
        let amp = (s * (s + 1.0) - m * (m + 1.0)).sqrt();
        match direction {
            Ladder::Raise => out[(i, i + 1)] = amp,
            Ladder::Lower => out[(i + 1, i)] = amp,
        }
    }
    Ok(out)
}

/// `1 ⊗ ... ⊗ op ⊗ ... ⊗ 1` with `op` at `site_index`.
pub fn embed(op: &RealMatrix, site_index: usize, layout: &ClusterLayout) -> Result<RealMatrix> {
    let dims = layout.dims();
    let local = *dims.get(site_index).ok_or_else(|| {
        Error::invalid(format!("site index {site_index} out of range for {} sites", dims.len()))
    })?;
    if op.nrows() != local || op.ncols() != local {
        return Err(Error::invalid(format!(
            "operator is {}x{} but site {site_index} has dimension {local}",
            op.nrows(),
            op.ncols()
        )));
    }
    let left: usize = dims[..site_index].iter().product();
    let right: usize = dims[site_index + 1..].iter().product();
    let out = RealMatrix::identity(left, left).kronecker(op);
    Ok(out.kronecker(&RealMatrix::identity(right, right)))
}

fn site_op(site: &SpinSite, index: usize, layout: &ClusterLayout) -> Result<[RealMatrix; 3]> {
    let s = site.s();
    Ok([
        embed(&spin_z(s)?, index, layout)?,
        embed(&spin_ladder(s, Ladder::Raise)?, index, layout)?,
        embed(&spin_ladder(s, Ladder::Lower)?, index, layout)?,
    ])
}

/// `Si·Sj = Siz Sjz + (Si+ Sj- + Si- Sj+)/2`, real symmetric.
pub fn heisenberg_dot(i: usize, j: usize, layout: &ClusterLayout) -> Result<RealMatrix> {
    if i == j {
        return Err(Error::invalid("heisenberg_dot needs two different sites"));
    }
    let n = layout.len();
    if i >= n || j >= n {
        return Err(Error::invalid(format!("site index out of range for {n} sites")));
    }
    let [zi, pi, mi] = site_op(&layout.sites()[i], i, layout)?;
    let [zj, pj, mj] = site_op(&layout.sites()[j], j, layout)?;
    Ok(&zi * &zj + (&pi * &mj + &mi * &pj) * 0.5)
}

/// Total `Sz` of all sites in the layout.
pub fn total_sz(layout: &ClusterLayout) -> RealMatrix {
    let n = layout.total_dim();
    let labels = layout.basis_labels();
    RealMatrix::from_fn(n, n, |i, j| if i == j { labels[i].iter().sum() } else { 0.0 })
}

/// Largest `|a_ij - a_ji|`.
pub fn asymmetry(m: &RealMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in i + 1..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}
