//! The tetramer Hamiltonian, its spectrum, thermal states and ground-state
//! quantum numbers.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::eigen::symmetric_eigen;
use crate::spin::{asymmetry, heisenberg_dot, total_sz, ClusterLayout, RealMatrix, Site};
use crate::{Error, Result, Tolerances};

/// Bohr magneton over Boltzmann constant, in kelvin per tesla.
pub const MU_B_OVER_K_B: f64 = 0.671_713_815_63;

/// Landé factor and flux density behind a field expressed in energy units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Zeeman {
    pub g: f64,
    pub b_tesla: f64,
}

impl Zeeman {
    /// `g μB B / kB` in kelvin.
    pub fn field_kelvin(&self) -> f64 {
        self.g * MU_B_OVER_K_B * self.b_tesla
    }
}

/// Couplings and field of the tetramer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    pub j: f64,
    pub j1: f64,
    pub h: f64,
    /// Present when `h` was derived from a Landé factor and a field in tesla.
    /// Energies are then in kelvin.
    pub zeeman: Option<Zeeman>,
}

impl ModelParams {
    /// Validated constructor for the antiferromagnetic regime `J > 0`, `J1 >= 0`.
    pub fn new(j: f64, j1: f64, h: f64) -> Result<Self> {
        let p = Self::unrestricted(j, j1, h)?;
        if !(j > 0.0) {
            return Err(Error::invalid(format!("J must be positive, got {j}")));
        }
        if !(j1 >= 0.0) {
            return Err(Error::invalid(format!("J1 must be non-negative, got {j1}")));
        }
        Ok(p)
    }

    /// Any finite couplings, including ferromagnetic signs.
    pub fn unrestricted(j: f64, j1: f64, h: f64) -> Result<Self> {
        if !(j.is_finite() && j1.is_finite() && h.is_finite()) {
            return Err(Error::invalid("couplings and field must be finite"));
        }
        Ok(Self { j, j1, h, zeeman: None })
    }

    /// Couplings in kelvin with `h = g μB B`.
    pub fn with_zeeman(j_kelvin: f64, j1_kelvin: f64, zeeman: Zeeman) -> Result<Self> {
        if !(zeeman.g.is_finite() && zeeman.b_tesla.is_finite()) {
            return Err(Error::invalid("g and B must be finite"));
        }
        let mut p = Self::new(j_kelvin, j1_kelvin, zeeman.field_kelvin())?;
        p.zeeman = Some(zeeman);
        Ok(p)
    }

    /// Checks that a recorded Zeeman origin still agrees with `h`.
    pub fn check_zeeman(&self) -> Result<()> {
        if let Some(z) = self.zeeman {
            let want = z.field_kelvin();
            if (self.h - want).abs() > 1e-12 * want.abs().max(f64::MIN_POSITIVE) {
                return Err(Error::invalid(format!(
                    "h = {} disagrees with g·μB·B = {want}",
                    self.h
                )));
            }
        }
        Ok(())
    }

    /// The same couplings with the field reversed.
    pub fn reversed_field(&self) -> Self {
        Self { h: -self.h, zeeman: None, ..*self }
    }

    /// The energy scale used for relative tolerances.
    pub fn energy_scale(&self) -> f64 {
        if self.j != 0.0 {
            self.j.abs()
        } else {
            self.j1.abs().max(self.h.abs()).max(1.0)
        }
    }
}

/// `J(S1·μ1 + S2·μ2) + J1(S1+μ1)·(S2+μ2) − h ΣSz` on the canonical layout.
pub fn build_hamiltonian(params: &ModelParams, layout: &ClusterLayout) -> Result<RealMatrix> {
    if !layout.is_tetramer() {
        return Err(Error::invalid("the Hamiltonian needs the canonical (μ1, S1, μ2, S2) layout"));
    }
    params.check_zeeman()?;
    let t = terms();
    Ok(&t.intra * params.j + &t.inter * params.j1 - &t.sz * params.h)
}

struct Terms {
    intra: RealMatrix,
    inter: RealMatrix,
    sz: RealMatrix,
}

/// The coupling-independent pieces, built once.
fn terms() -> &'static Terms {
    static TERMS: OnceLock<Terms> = OnceLock::new();
    TERMS.get_or_init(|| {
        let layout = ClusterLayout::tetramer();
        let idx = |s: Site| layout.position(s).unwrap();
        let (m1, s1, m2, s2) = (idx(Site::Mu1), idx(Site::S1), idx(Site::Mu2), idx(Site::S2));
        let dot = |i, j| heisenberg_dot(i, j, &layout).expect("tetramer sites are valid");
        Terms {
            intra: dot(s1, m1) + dot(s2, m2),
            inter: dot(s1, s2) + dot(s1, m2) + dot(m1, s2) + dot(m1, m2),
            sz: total_sz(&layout),
        }
    })
}

/// Eigenpairs sorted by ascending energy. Column `k` of `states` is ψk.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub energies: Vec<f64>,
    pub states: RealMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies[0]
    }

    /// `Σk e^{−β εk}`. Overflows for large β with negative energies; prefer
    /// [`Spectrum::shifted_z`].
    pub fn partition_function(&self, beta: f64) -> f64 {
        self.energies.iter().map(|e| (-beta * e).exp()).sum()
    }

    /// `Σk e^{−β (εk − ε0)}`.
    pub fn shifted_z(&self, beta: f64) -> f64 {
        let e0 = self.ground_energy();
        self.energies.iter().map(|e| (-beta * (e - e0)).exp()).sum()
    }

    /// `ln Z`, finite for any β ≥ 0.
    pub fn log_z(&self, beta: f64) -> f64 {
        self.shifted_z(beta).ln() - beta * self.ground_energy()
    }

    pub fn state(&self, k: usize) -> nalgebra::DVectorView<'_, f64> {
        self.states.column(k)
    }
}

/// Full symmetric eigendecomposition with the residual and orthonormality
/// bounds enforced.
pub fn diagonalize(h: &RealMatrix) -> Result<Spectrum> {
    let n = h.nrows();
    if n == 0 || h.ncols() != n {
        return Err(Error::invalid(format!("expected a square matrix, got {}x{}", n, h.ncols())));
    }
    if h.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("matrix has non-finite entries"));
    }
    let asym = asymmetry(h);
    if asym > 1e-12 {
        return Err(Error::invalid(format!("matrix is not symmetric (max |a_ij − a_ji| = {asym:e})")));
    }
    let (energies, states) = symmetric_eigen(h);

    let norm = h.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let bound = 1e-10 * norm.max(1.0);
    let residual = (h * &states - &states * RealMatrix::from_diagonal(&energies.clone().into()))
        .amax();
    if residual > bound {
        return Err(Error::Eigensolver(residual));
    }
    let gram = states.transpose() * &states - RealMatrix::identity(n, n);
    if gram.amax() > 1e-10 {
        return Err(Error::Eigensolver(gram.amax()));
    }
    Ok(Spectrum { energies, states })
}

/// A normalized density matrix on the full cluster.
#[derive(Debug, Clone)]
pub struct ThermalState {
    /// Inverse temperature; `f64::INFINITY` for ground-manifold mixtures.
    pub beta: f64,
    pub rho: RealMatrix,
    /// Partition function relative to the ground energy, `Σ e^{−β(εk − ε0)}`.
    /// For ground-manifold mixtures it is the degeneracy.
    pub z_shifted: f64,
    /// The ground energy ε0 used as the shift.
    pub shift: f64,
}

impl ThermalState {
    /// `ln Z` with the shift undone.
    pub fn log_z(&self) -> f64 {
        if self.beta.is_infinite() {
            f64::NEG_INFINITY
        } else {
            self.z_shifted.ln() - self.beta * self.shift
        }
    }
}

fn projector_mix(spec: &Spectrum, weights: &[f64]) -> RealMatrix {
    let n = spec.dim();
    let mut rho = RealMatrix::zeros(n, n);
    for (k, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let v = spec.state(k);
        rho.ger(w, &v, &v, 1.0);
    }
    // Symmetrize away rounding so downstream matrices are exactly symmetric.
    let t = rho.transpose();
    (rho + t) * 0.5
}

/// `ρ = Σk e^{−β(εk−ε0)} ψk ψkᵀ / Z'`.
pub fn gibbs_state(spec: &Spectrum, beta: f64) -> Result<ThermalState> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::invalid(format!("beta must be finite and non-negative, got {beta}")));
    }
    let e0 = spec.ground_energy();
    let w: Vec<f64> = spec.energies.iter().map(|e| (-beta * (e - e0)).exp()).collect();
    let z: f64 = w.iter().sum();
    let w: Vec<f64> = w.iter().map(|x| x / z).collect();
    Ok(ThermalState { beta, rho: projector_mix(spec, &w), z_shifted: z, shift: e0 })
}

/// Indices of levels within `degeneracy_tol` of the ground energy.
pub fn ground_indices(spec: &Spectrum, degeneracy_tol: f64) -> Vec<usize> {
    let e0 = spec.ground_energy();
    (0..spec.dim()).filter(|&k| spec.energies[k] - e0 <= degeneracy_tol).collect()
}

/// Uniform mixture over the levels within `degeneracy_tol` of the ground energy.
pub fn ground_manifold(spec: &Spectrum, degeneracy_tol: f64) -> Result<ThermalState> {
    if !(degeneracy_tol > 0.0) {
        return Err(Error::invalid(format!("degeneracy_tol must be positive, got {degeneracy_tol}")));
    }
    let idx = ground_indices(spec, degeneracy_tol);
    let g = idx.len() as f64;
    let mut w = vec![0.0; spec.dim()];
    for k in idx {
        w[k] = 1.0 / g;
    }
    Ok(ThermalState {
        beta: f64::INFINITY,
        rho: projector_mix(spec, &w),
        z_shifted: g,
        shift: spec.ground_energy(),
    })
}

/// The rank-1 projector on the lowest eigenvector, whatever the degeneracy.
pub fn pure_ground_state(spec: &Spectrum) -> ThermalState {
    let mut w = vec![0.0; spec.dim()];
    w[0] = 1.0;
    ThermalState {
        beta: f64::INFINITY,
        rho: projector_mix(spec, &w),
        z_shifted: 1.0,
        shift: spec.ground_energy(),
    }
}

/// Builds and diagonalizes the tetramer Hamiltonian.
pub fn spectrum(params: &ModelParams) -> Result<Spectrum> {
    diagonalize(&build_hamiltonian(params, &ClusterLayout::tetramer())?)
}

/// The T=0 state: uniform mixture over levels within `degeneracy_tol · J`.
pub fn ground_state(params: &ModelParams, tol: Tolerances) -> Result<ThermalState> {
    ground_manifold(&spectrum(params)?, tol.degeneracy_tol * params.energy_scale())
}

/// Gibbs state at temperature `kT` (same energy units as the couplings).
/// `kT = 0` gives [`ground_state`].
pub fn thermal_state(params: &ModelParams, kt: f64, tol: Tolerances) -> Result<ThermalState> {
    if !(kt >= 0.0) || kt.is_nan() {
        return Err(Error::invalid(format!("temperature must be non-negative, got {kt}")));
    }
    if kt == 0.0 {
        return ground_state(params, tol);
    }
    gibbs_state(&spectrum(params)?, 1.0 / kt)
}

/// `|σT^z, σ1, σ2⟩` together with the total spin σT. All spins are stored
/// doubled so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumLabel {
    pub twice_tz: i32,
    pub twice_sigma1: u32,
    pub twice_sigma2: u32,
    pub twice_sigma_t: u32,
}

fn half(twice: i64) -> String {
    if twice % 2 == 0 {
        format!("{}", twice / 2)
    } else {
        format!("{twice}/2")
    }
}

impl QuantumLabel {
    pub fn new(sigma_tz: f64, sigma1: f64, sigma2: f64, sigma_t: f64) -> Result<Self> {
        let twice = |x: f64| -> Result<i64> {
            let t = 2.0 * x;
            if !x.is_finite() || (t - t.round()).abs() > 1e-12 {
                return Err(Error::invalid(format!("{x} is not a half-integer")));
            }
            Ok(t.round() as i64)
        };
        let (tz, s1, s2, st) = (twice(sigma_tz)?, twice(sigma1)?, twice(sigma2)?, twice(sigma_t)?);
        for s in [s1, s2] {
            if s != 1 && s != 3 {
                return Err(Error::invalid("dimer spins must be 1/2 or 3/2"));
            }
        }
        if st < (s1 - s2).abs() || st > s1 + s2 || (st - s1 - s2) % 2 != 0 {
            return Err(Error::invalid(format!(
                "σT = {} is not reachable from σ1 = {}, σ2 = {}",
                half(st),
                half(s1),
                half(s2)
            )));
        }
        if tz.abs() > st || (tz - st) % 2 != 0 {
            return Err(Error::invalid(format!("σT^z = {} is not valid for σT = {}", half(tz), half(st))));
        }
        Ok(Self {
            twice_tz: tz as i32,
            twice_sigma1: s1 as u32,
            twice_sigma2: s2 as u32,
            twice_sigma_t: st as u32,
        })
    }

    pub fn sigma_tz(&self) -> f64 {
        self.twice_tz as f64 / 2.0
    }
    pub fn sigma1(&self) -> f64 {
        self.twice_sigma1 as f64 / 2.0
    }
    pub fn sigma2(&self) -> f64 {
        self.twice_sigma2 as f64 / 2.0
    }
    pub fn sigma_t(&self) -> f64 {
        self.twice_sigma_t as f64 / 2.0
    }

    /// The label with the two dimers swapped.
    pub fn exchanged(&self) -> Self {
        Self { twice_sigma1: self.twice_sigma2, twice_sigma2: self.twice_sigma1, ..*self }
    }

    /// Representative with `σ1 ≤ σ2`, the form used in tables.
    pub fn canonical(&self) -> Self {
        if self.twice_sigma1 > self.twice_sigma2 {
            self.exchanged()
        } else {
            *self
        }
    }
}

impl fmt::Display for QuantumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            half(self.twice_tz as i64),
            half(self.twice_sigma1 as i64),
            half(self.twice_sigma2 as i64)
        )
    }
}

/// All 36 labels: σ1, σ2 ∈ {1/2, 3/2}, σT from |σ1−σ2| to σ1+σ2, σT^z descending.
pub fn all_labels() -> Vec<QuantumLabel> {
    let mut out = Vec::with_capacity(36);
    for s1 in [1u32, 3] {
        for s2 in [1u32, 3] {
            let mut st = s1.abs_diff(s2);
            while st <= s1 + s2 {
                let mut tz = st as i32;
                while tz >= -(st as i32) {
                    out.push(QuantumLabel {
                        twice_tz: tz,
                        twice_sigma1: s1,
                        twice_sigma2: s2,
                        twice_sigma_t: st,
                    });
                    tz -= 2;
                }
                st += 2;
            }
        }
    }
    out
}

/// `(J/2)[σ1(σ1+1) + σ2(σ2+1) − 11/2] + (J1/2)[σT(σT+1) − σ1(σ1+1) − σ2(σ2+1)] − h σT^z`.
pub fn closed_form_energy(label: &QuantumLabel, params: &ModelParams) -> f64 {
    let c = |s: f64| s * (s + 1.0);
    let (s1, s2, st) = (c(label.sigma1()), c(label.sigma2()), c(label.sigma_t()));
    0.5 * params.j * (s1 + s2 - 5.5) + 0.5 * params.j1 * (st - s1 - s2) - params.h * label.sigma_tz()
}

/// Ground-state classification from the closed-form energies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroundState {
    pub energy: f64,
    /// Every label within the tolerance of the minimum, in [`all_labels`] order.
    pub labels: Vec<QuantumLabel>,
    /// True when the co-minimal labels are not all images of one another
    /// under dimer exchange.
    pub degenerate: bool,
}

impl GroundState {
    /// Distinct canonical labels in ascending (σT^z, σ1, σ2) order.
    pub fn canonical_labels(&self) -> Vec<QuantumLabel> {
        let mut v: Vec<QuantumLabel> = self.labels.iter().map(|l| l.canonical()).collect();
        v.sort_by(cmp_label);
        v.dedup();
        v
    }

    /// Canonical labels joined by `;`, e.g. `0,1/2,1/2;0,3/2,3/2`. Labels
    /// differing only in `σT` print once.
    pub fn phase_label(&self) -> String {
        let mut names: Vec<String> = Vec::new();
        for l in self.canonical_labels() {
            let name = l.to_string();
            if !names.contains(&name) {
                names.push(name);
            }
        }
        names.join(";")
    }

    pub fn degeneracy(&self) -> usize {
        self.labels.len()
    }
}

fn cmp_label(a: &QuantumLabel, b: &QuantumLabel) -> Ordering {
    (a.twice_tz, a.twice_sigma1, a.twice_sigma2, a.twice_sigma_t).cmp(&(
        b.twice_tz,
        b.twice_sigma1,
        b.twice_sigma2,
        b.twice_sigma_t,
    ))
}

/// Argmin of [`closed_form_energy`] over all labels, keeping every label within
/// `degeneracy_tol · J` of the minimum.
pub fn classify_ground_state(params: &ModelParams, tol: Tolerances) -> GroundState {
    let labels = all_labels();
    let energies: Vec<f64> = labels.iter().map(|l| closed_form_energy(l, params)).collect();
    let e0 = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let cut = tol.degeneracy_tol * params.energy_scale();
    let labels: Vec<QuantumLabel> = labels
        .into_iter()
        .zip(&energies)
        .filter(|(_, &e)| e - e0 <= cut)
        .map(|(l, _)| l)
        .collect();
    let first = labels[0].canonical();
    let degenerate = labels.iter().any(|l| l.canonical() != first);
    GroundState { energy: e0, labels, degenerate }
}
