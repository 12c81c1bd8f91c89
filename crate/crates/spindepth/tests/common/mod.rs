//! Brute-force oracles, independent of the library's computation paths.
//!
//! Everything here works on explicit product-space matrices (dimension 2^N
//! for qubits) or dense z-basis spin matrices, so agreement with the
//! library's tridiagonal / correlation-space shortcuts is a genuine
//! cross-check.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Collective spin operators of N qubits in the x-product basis
/// (bit b of a basis index = 1 means qubit b has m_x = +1/2).
pub struct QubitSpace {
    pub n: usize,
    pub dim: usize,
    pub jx: CMat,
    pub jy: CMat,
    pub jz: CMat,
}

fn single_qubit_ops() -> (CMat, CMat, CMat) {
    // x-eigenbasis, ascending m: jx diagonal, jz real tridiagonal with
    // element 1/2, jy = i/2 on the lower off-diagonal.
    let jx = CMat::from_row_slice(2, 2, &[c(-0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
    let jz = CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0)]);
    let jy = CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(0.0, 0.0)]);
    (jx, jy, jz)
}

/// op acting on `site` of an n-qubit register (site s has index stride 2^s).
pub fn site_operator(op: &CMat, site: usize, n: usize) -> CMat {
    let eye = |d: usize| CMat::identity(d, d);
    let high = eye(1 << (n - 1 - site));
    let low = eye(1 << site);
    high.kronecker(op).kronecker(&low)
}

impl QubitSpace {
    pub fn new(n: usize) -> Self {
        assert!((1..=12).contains(&n));
        let dim = 1 << n;
        let (sx, sy, sz) = single_qubit_ops();
        let mut jx = CMat::zeros(dim, dim);
        let mut jy = CMat::zeros(dim, dim);
        let mut jz = CMat::zeros(dim, dim);
        for site in 0..n {
            jx += site_operator(&sx, site, n);
            jy += site_operator(&sy, site, n);
            jz += site_operator(&sz, site, n);
        }
        QubitSpace { n, dim, jx, jy, jz }
    }

    /// Embed symmetric-subspace coefficients (index i ↔ m_x = i − N/2)
    /// into the product space: |J, m_x⟩ is the equal superposition of all
    /// bitstrings with popcount i.
    pub fn embed_symmetric(&self, coeffs: &[f64]) -> CVec {
        assert_eq!(coeffs.len(), self.n + 1);
        let mut psi = CVec::zeros(self.dim);
        let mut counts = vec![0usize; self.n + 1];
        for idx in 0..self.dim {
            counts[idx.count_ones() as usize] += 1;
        }
        for idx in 0..self.dim {
            let i = idx.count_ones() as usize;
            psi[idx] = c(coeffs[i] / (counts[i] as f64).sqrt(), 0.0);
        }
        psi
    }

    /// The unpolarized Dicke state |J = N/2, m_x = 0⟩ (N even).
    pub fn dicke_state(&self) -> CVec {
        assert!(self.n.is_multiple_of(2));
        let mut coeffs = vec![0.0; self.n + 1];
        coeffs[self.n / 2] = 1.0;
        self.embed_symmetric(&coeffs)
    }

    pub fn density(&self, psi: &CVec) -> CMat {
        psi * psi.adjoint()
    }

    /// Fully depolarize one qubit: ρ ↦ ¼ Σ_{σ ∈ {1,X,Y,Z}} σ ρ σ.
    pub fn depolarize_site(&self, rho: &CMat, site: usize) -> CMat {
        let (sx, sy, sz) = single_qubit_ops();
        let mut out = rho.clone();
        for op in [&sx, &sy, &sz] {
            let pauli = site_operator(&(op * c(2.0, 0.0)), site, self.n);
            out += &pauli * rho * &pauli;
        }
        out * c(0.25, 0.0)
    }

    /// (⟨Jx⟩, ⟨Jy⟩, ⟨Jz⟩) and (⟨Jx²⟩, ⟨Jy²⟩, ⟨Jz²⟩) of a density matrix.
    pub fn moments(&self, rho: &CMat) -> ([f64; 3], [f64; 3]) {
        let mut mean = [0.0; 3];
        let mut second = [0.0; 3];
        for (axis, op) in [&self.jx, &self.jy, &self.jz].into_iter().enumerate() {
            let a = op * rho;
            mean[axis] = a.trace().re;
            second[axis] = (op * &a).trace().re;
        }
        (mean, second)
    }
}

/// Dense z-basis spin matrices for one spin-J system (real: Lx tridiagonal,
/// Lz diagonal). Independent of the library's x-basis representation.
pub struct DenseSpinZ {
    pub two_j: u32,
    pub lx: DMatrix<f64>,
    pub lz: DMatrix<f64>,
}

impl DenseSpinZ {
    pub fn new(two_j: u32) -> Self {
        let d = two_j as usize + 1;
        let j = f64::from(two_j) / 2.0;
        let m = |i: usize| (2.0 * i as f64 - f64::from(two_j)) / 2.0;
        let mut lx = DMatrix::<f64>::zeros(d, d);
        let mut lz = DMatrix::<f64>::zeros(d, d);
        for i in 0..d {
            lz[(i, i)] = m(i);
            if i + 1 < d {
                let w = 0.5 * (j * (j + 1.0) - m(i) * (m(i) + 1.0)).sqrt();
                lx[(i + 1, i)] = w;
                lx[(i, i + 1)] = w;
            }
        }
        DenseSpinZ { two_j, lx, lz }
    }

    /// Ground vector of Lx² − λLz − λ₂Lx by dense symmetric
    /// eigendecomposition.
    pub fn ground_vector(&self, lambda: f64, lambda2: f64) -> DVector<f64> {
        let h = &self.lx * &self.lx - &self.lz * lambda - &self.lx * lambda2;
        let eig = h.symmetric_eigen();
        let mut best = 0;
        for i in 1..eig.eigenvalues.len() {
            if eig.eigenvalues[i] < eig.eigenvalues[best] {
                best = i;
            }
        }
        eig.eigenvectors.column(best).into_owned()
    }

    /// (⟨Lz⟩/J, (ΔLx)²) of a real state vector.
    pub fn polar_and_xvar(&self, v: &DVector<f64>) -> (f64, f64) {
        let j = f64::from(self.two_j) / 2.0;
        let mean_z = v.dot(&(&self.lz * v));
        let lxv = &self.lx * v;
        let mean_x = v.dot(&lxv);
        let x2 = lxv.dot(&lxv);
        (mean_z / j, x2 - mean_x * mean_x)
    }
}

/// Brute-force half-integer F_J(X): dense λ₂ grid, inner λ bisection on
/// the ⟨Lz⟩/J = x constraint, dense eigensolves throughout. Returns the
/// 1/J-normalized minimum and the λ₂ at which it was found.
pub fn brute_force_f_halfinteger(
    two_j: u32,
    x: f64,
    lambda2_max: f64,
    grid_points: usize,
) -> (f64, f64) {
    let sys = DenseSpinZ::new(two_j);
    let j = f64::from(two_j) / 2.0;
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..=grid_points {
        let lambda2 = lambda2_max * i as f64 / grid_points as f64;
        let eval = |lambda: f64| {
            let v = sys.ground_vector(lambda, lambda2);
            sys.polar_and_xvar(&v)
        };
        let (x0, _) = eval(0.0);
        if x0 > x {
            continue;
        }
        let mut lo = 0.0;
        let mut hi = 10.0 * j.max(1.0);
        if eval(hi).0 < x {
            continue;
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if eval(mid).0 < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (x_met, var) = eval(0.5 * (lo + hi));
        if (x_met - x).abs() <= 1e-7 && var / j < best.0 {
            best = (var / j, lambda2);
        }
    }
    best
}

/// Random partition of n into parts of size at most k_max.
pub fn random_partition(rng: &mut impl rand::Rng, n: u64, k_max: u64) -> Vec<u64> {
    let mut remaining = n;
    let mut parts = Vec::new();
    while remaining > 0 {
        let hi = k_max.min(remaining);
        let part = rng.gen_range(1..=hi);
        parts.push(part);
        remaining -= part;
    }
    parts
}
