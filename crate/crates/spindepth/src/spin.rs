//! Collective spin operators and squeezing Hamiltonians for a single spin-J system.
//!
//! A group of k particles with spin j is treated as one system with total
//! spin J = kj. All operators are dimensionless (ħ = 1). The squeezing
//! Hamiltonian
//!
//!   H = Lx² − λ·Lz − λ₂·Lx
//!
//! is assembled in the eigenbasis of Lx, where it is a real symmetric
//! tridiagonal matrix of dimension 2J+1: Lx contributes the diagonal m² − λ₂m
//! and Lz couples neighbouring m with matrix element ½√(J(J+1) − m(m+1)).
//! This keeps a single ground-state solve cheap for 2J+1 into the thousands.
//!
//! Basis ordering: states are sorted by ascending magnetic quantum number,
//! m = −J, −J+1, …, J. In the x-eigenbasis the phase convention makes the
//! Lz matrix elements real positive; Ly is then purely imaginary.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

/// Errors from spin-operator construction and ground-state solves.
#[derive(Debug, Error)]
pub enum SpinError {
    /// 2J must be at least 1.
    #[error("invalid spin length: 2J = {two_j} (must be >= 1)")]
    InvalidSpin { two_j: u32 },
    /// Vector/matrix dimensions disagree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// The iterative eigensolver failed to reach the residual tolerance.
    #[error("eigensolver did not converge: residual {residual:.3e} > {tolerance:.3e}")]
    ConvergenceFailure { residual: f64, tolerance: f64 },
}

/// Total spin J stored as 2J, so integer and half-integer spins are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLength {
    two_j: u32,
}

impl SpinLength {
    /// Spin 1/2.
    pub const HALF: SpinLength = SpinLength { two_j: 1 };
    /// Spin 1.
    pub const ONE: SpinLength = SpinLength { two_j: 2 };

    pub fn from_two_j(two_j: u32) -> Result<Self, SpinError> {
        if two_j == 0 {
            return Err(SpinError::InvalidSpin { two_j });
        }
        Ok(SpinLength { two_j })
    }

    /// Integer spin J = n.
    pub fn integer(n: u32) -> Result<Self, SpinError> {
        Self::from_two_j(2 * n)
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    /// J as a float.
    pub fn value(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    /// Hilbert-space dimension 2J+1.
    pub fn dimension(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn is_integer(&self) -> bool {
        self.two_j.is_multiple_of(2)
    }

    /// Total spin of a group of `k` particles of this spin, J = kj.
    pub fn times(&self, k: u64) -> Result<SpinLength, SpinError> {
        let two_j = u64::from(self.two_j)
            .checked_mul(k)
            .and_then(|v| u32::try_from(v).ok())
            .ok_or(SpinError::InvalidSpin { two_j: u32::MAX })?;
        Self::from_two_j(two_j)
    }

    /// Magnetic quantum number of basis state `i`, m = −J + i.
    pub fn m(&self, i: usize) -> f64 {
        (2.0 * i as f64 - f64::from(self.two_j)) / 2.0
    }

    /// Ladder matrix element ½√(J(J+1) − m(m+1)) between states i and i+1.
    pub fn ladder_element(&self, i: usize) -> f64 {
        let j = self.value();
        let m = self.m(i);
        0.5 * (j * (j + 1.0) - m * (m + 1.0)).sqrt()
    }
}

/// Which spin component is diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Lx diagonal; Lz real tridiagonal, Ly imaginary.
    X,
    /// Lz diagonal; Lx real tridiagonal, Ly imaginary.
    Z,
}

/// Dense collective spin components Lx, Ly, Lz of one spin-J system.
///
/// Used for small systems (oracles, invariant checks). The large-J sweep
/// paths work directly on the tridiagonal representation instead.
#[derive(Debug, Clone)]
pub struct SpinMatrices {
    pub j: SpinLength,
    pub basis: Basis,
    pub lx: DMatrix<Complex64>,
    pub ly: DMatrix<Complex64>,
    pub lz: DMatrix<Complex64>,
}

/// Build the collective spin matrices for total spin `j` in the given basis.
///
/// In the z-basis these are the textbook angular-momentum matrices with
/// ⟨m+1|Lx|m⟩ = ½√(J(J+1) − m(m+1)) real positive. In the x-basis the roles
/// of Lx and Lz are exchanged and Ly flips sign, which keeps the algebra
/// [Lx, Ly] = iLz (and cyclic) intact.
pub fn build_spin_matrices(j: SpinLength, basis: Basis) -> SpinMatrices {
    let d = j.dimension();
    let mut diag = DMatrix::<Complex64>::zeros(d, d);
    let mut tri = DMatrix::<Complex64>::zeros(d, d);
    let mut imag = DMatrix::<Complex64>::zeros(d, d);
    for i in 0..d {
        diag[(i, i)] = Complex64::new(j.m(i), 0.0);
    }
    // Ly sign convention differs between the two bases; fixed by requiring
    // the cyclic commutation relations with a real-positive tridiagonal part.
    let ly_sign = match basis {
        Basis::X => 1.0,
        Basis::Z => -1.0,
    };
    for i in 0..d.saturating_sub(1) {
        let w = j.ladder_element(i);
        tri[(i + 1, i)] = Complex64::new(w, 0.0);
        tri[(i, i + 1)] = Complex64::new(w, 0.0);
        imag[(i + 1, i)] = Complex64::new(0.0, ly_sign * w);
        imag[(i, i + 1)] = Complex64::new(0.0, -ly_sign * w);
    }
    match basis {
        Basis::X => SpinMatrices {
            j,
            basis,
            lx: diag,
            ly: imag,
            lz: tri,
        },
        Basis::Z => SpinMatrices {
            j,
            basis,
            lx: tri,
            ly: imag,
            lz: diag,
        },
    }
}

/// Real symmetric tridiagonal matrix: the squeezing Hamiltonian in the
/// x-eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSym {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagonalSym {
    pub fn dimension(&self) -> usize {
        self.diag.len()
    }

    /// Infinity norm, used as the spectral scale for tolerances.
    pub fn norm(&self) -> f64 {
        let n = self.diag.len();
        let mut best: f64 = 0.0;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            best = best.max(self.diag[i].abs() + left + right);
        }
        best
    }

    /// y = H·x.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        let n = self.diag.len();
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(y.len(), n);
        for i in 0..n {
            let mut acc = self.diag[i] * x[i];
            if i > 0 {
                acc += self.offdiag[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                acc += self.offdiag[i] * x[i + 1];
            }
            y[i] = acc;
        }
    }
}

/// H = Lx² − λ·Lz − λ₂·Lx in the x-eigenbasis.
///
/// Diagonal entries m² − λ₂m; off-diagonals −λ·½√(J(J+1) − m(m+1)).
pub fn squeezing_hamiltonian(j: SpinLength, lambda: f64, lambda2: f64) -> TridiagonalSym {
    let d = j.dimension();
    let mut diag = Vec::with_capacity(d);
    let mut offdiag = Vec::with_capacity(d - 1);
    for i in 0..d {
        let m = j.m(i);
        diag.push(m * m - lambda2 * m);
    }
    for i in 0..d - 1 {
        offdiag.push(-lambda * j.ladder_element(i));
    }
    TridiagonalSym { diag, offdiag }
}

/// Ground state of a squeezing Hamiltonian, with the parameters it came from.
#[derive(Debug, Clone)]
pub struct GroundState {
    pub energy: f64,
    /// Real unit vector in the x-eigenbasis, ascending m.
    pub vector: Vec<f64>,
    pub lambda: f64,
    pub lambda2: f64,
    /// Set when another eigenvalue lies within the degeneracy tolerance.
    pub degenerate: bool,
}

/// Ground state of H_{λ,λ₂} for spin `j`.
pub fn squeezing_ground_state(
    j: SpinLength,
    lambda: f64,
    lambda2: f64,
) -> Result<GroundState, SpinError> {
    let h = squeezing_hamiltonian(j, lambda, lambda2);
    let pair = crate::eigen::ground_state(&h)?;
    Ok(GroundState {
        energy: pair.energy,
        vector: pair.vector,
        lambda,
        lambda2,
        degenerate: pair.degenerate,
    })
}

/// Collective moments of a ground state: means and x-component variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMoments {
    pub mean_lx: f64,
    pub mean_ly: f64,
    pub mean_lz: f64,
    pub mean_lx2: f64,
    pub var_lx: f64,
}

/// Quadratic forms of the state vector with the given spin matrices.
///
/// The state vector must be expressed in the same basis as `s`; ground
/// states from this module live in the x-eigenbasis.
pub fn moments(state: &GroundState, s: &SpinMatrices) -> Result<SpinMoments, SpinError> {
    let d = s.j.dimension();
    if state.vector.len() != d {
        return Err(SpinError::DimensionMismatch {
            expected: d,
            got: state.vector.len(),
        });
    }
    let v = nalgebra::DVector::from_iterator(
        d,
        state.vector.iter().map(|&x| Complex64::new(x, 0.0)),
    );
    let form = |op: &DMatrix<Complex64>| (v.adjoint() * op * &v)[(0, 0)].re;
    let mean_lx = form(&s.lx);
    let mean_ly = form(&s.ly);
    let mean_lz = form(&s.lz);
    let lxv = &s.lx * &v;
    let mean_lx2 = lxv.norm_squared();
    Ok(SpinMoments {
        mean_lx,
        mean_ly,
        mean_lz,
        mean_lx2,
        var_lx: mean_lx2 - mean_lx * mean_lx,
    })
}

/// First and symmetrized second moments of all three components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveMoments {
    /// ⟨Lx⟩, ⟨Ly⟩, ⟨Lz⟩.
    pub mean: [f64; 3],
    /// Symmetrized ⟨(L_a L_b + L_b L_a)/2⟩, indexed x=0, y=1, z=2.
    pub second: [[f64; 3]; 3],
}

impl CollectiveMoments {
    pub fn var(&self, axis: usize) -> f64 {
        self.second[axis][axis] - self.mean[axis] * self.mean[axis]
    }

    /// ⟨Ly² + Lz²⟩.
    pub fn second_moment_perp(&self) -> f64 {
        self.second[1][1] + self.second[2][2]
    }
}

/// All moments of a real x-basis state vector, computed in O(d).
///
/// For a real vector ⟨Ly⟩ and the symmetrized cross moments with Ly vanish
/// identically, so everything stays in real arithmetic.
pub fn xbasis_moments(vector: &[f64], j: SpinLength) -> Result<CollectiveMoments, SpinError> {
    let d = j.dimension();
    if vector.len() != d {
        return Err(SpinError::DimensionMismatch {
            expected: d,
            got: vector.len(),
        });
    }
    let w: Vec<f64> = (0..d - 1).map(|i| j.ladder_element(i)).collect();

    let mut mean_x = 0.0;
    let mut x2 = 0.0;
    for (i, &vi) in vector.iter().enumerate() {
        let m = j.m(i);
        mean_x += m * vi * vi;
        x2 += m * m * vi * vi;
    }

    // Lz: real symmetric tridiagonal with entries w.
    let mut mean_z = 0.0;
    for i in 0..d - 1 {
        mean_z += 2.0 * w[i] * vector[i] * vector[i + 1];
    }
    let mut z2 = 0.0;
    let mut xz = 0.0;
    for i in 0..d {
        let mut tz = 0.0;
        if i > 0 {
            tz += w[i - 1] * vector[i - 1];
        }
        if i + 1 < d {
            tz += w[i] * vector[i + 1];
        }
        z2 += tz * tz;
        xz += j.m(i) * vector[i] * tz;
    }

    // Ly = i·K with K real antisymmetric, K_{m+1,m} = w; ⟨Ly²⟩ = ‖K v‖².
    let mut y2 = 0.0;
    for i in 0..d {
        let mut ky = 0.0;
        if i > 0 {
            ky += w[i - 1] * vector[i - 1];
        }
        if i + 1 < d {
            ky -= w[i] * vector[i + 1];
        }
        y2 += ky * ky;
    }

    Ok(CollectiveMoments {
        mean: [mean_x, 0.0, mean_z],
        second: [[x2, 0.0, xz], [0.0, y2, 0.0], [xz, 0.0, z2]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn commutator(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        a * b - b * a
    }

    fn max_abs(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn spin_length_basics() {
        assert!(SpinLength::from_two_j(0).is_err());
        let j = SpinLength::from_two_j(3).unwrap();
        assert_eq!(j.value(), 1.5);
        assert_eq!(j.dimension(), 4);
        assert!(!j.is_integer());
        assert_eq!(j.m(0), -1.5);
        assert_eq!(j.m(3), 1.5);
        assert_eq!(SpinLength::HALF.times(4).unwrap(), SpinLength::integer(2).unwrap());
    }

    #[test]
    fn half_spin_z_basis_is_pauli_over_two() {
        let s = build_spin_matrices(SpinLength::HALF, Basis::Z);
        // ascending m: diag(-1/2, +1/2)
        assert_abs_diff_eq!(s.lz[(0, 0)].re, -0.5);
        assert_abs_diff_eq!(s.lz[(1, 1)].re, 0.5);
        assert_abs_diff_eq!(s.lx[(0, 1)].re, 0.5);
        assert_abs_diff_eq!(s.lx[(1, 0)].re, 0.5);
        assert_abs_diff_eq!(s.ly[(1, 0)].im, -0.5);
    }

    #[test]
    fn spin_one_x_basis_lz_offdiagonals() {
        // ½√(J(J+1) − m(m+1)) at m = −1, 0 is 1/√2 for J = 1.
        let s = build_spin_matrices(SpinLength::ONE, Basis::X);
        let expect = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(s.lz[(1, 0)].re, expect, epsilon = 1e-15);
        assert_abs_diff_eq!(s.lz[(2, 1)].re, expect, epsilon = 1e-15);
        assert_abs_diff_eq!(s.lx[(0, 0)].re, -1.0);
        assert_abs_diff_eq!(s.lx[(2, 2)].re, 1.0);
    }

    #[test]
    fn algebra_and_casimir_hold_in_both_bases() {
        for two_j in [1u32, 2, 3, 4, 5, 7, 14, 19] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            for basis in [Basis::X, Basis::Z] {
                let s = build_spin_matrices(j, basis);
                let i = Complex64::new(0.0, 1.0);
                assert!(max_abs(&(commutator(&s.lx, &s.ly) - &s.lz * i)) < 1e-12);
                assert!(max_abs(&(commutator(&s.ly, &s.lz) - &s.lx * i)) < 1e-12);
                assert!(max_abs(&(commutator(&s.lz, &s.lx) - &s.ly * i)) < 1e-12);
                let casimir = &s.lx * &s.lx + &s.ly * &s.ly + &s.lz * &s.lz;
                let jj = j.value() * (j.value() + 1.0);
                let ident = DMatrix::<Complex64>::identity(j.dimension(), j.dimension())
                    .map(|c| c * Complex64::new(jj, 0.0));
                assert!(max_abs(&(casimir - ident)) < 1e-12);
            }
        }
    }

    #[test]
    fn component_spectrum_is_minus_j_to_j() {
        for two_j in [1u32, 2, 5, 8] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            let s = build_spin_matrices(j, Basis::X);
            for op in [&s.lx, &s.ly, &s.lz] {
                let eig = op.clone().symmetric_eigen();
                let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
                vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
                for (i, v) in vals.iter().enumerate() {
                    assert_abs_diff_eq!(*v, j.m(i), epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn hamiltonian_matrix_elements() {
        let h = squeezing_hamiltonian(SpinLength::ONE, 0.0, 0.0);
        assert_eq!(h.diag, vec![1.0, 0.0, 1.0]);
        assert_eq!(h.offdiag, vec![0.0, 0.0]);

        let h = squeezing_hamiltonian(SpinLength::ONE, 1.0, 0.0);
        let e = -std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(h.offdiag[0], e, epsilon = 1e-15);
        assert_abs_diff_eq!(h.offdiag[1], e, epsilon = 1e-15);

        let h = squeezing_hamiltonian(SpinLength::HALF, 1.0, 0.0);
        assert_eq!(h.diag, vec![0.25, 0.25]);
        assert_abs_diff_eq!(h.offdiag[0], -0.5, epsilon = 1e-15);

        // λ₂ enters only the diagonal: m² − λ₂m.
        let h = squeezing_hamiltonian(SpinLength::ONE, 0.0, 2.0);
        assert_eq!(h.diag, vec![3.0, 0.0, -1.0]);
    }

    #[test]
    fn moments_match_fast_path() {
        let s = build_spin_matrices(SpinLength::from_two_j(5).unwrap(), Basis::X);
        let g = squeezing_ground_state(s.j, 1.3, 0.4).unwrap();
        let slow = moments(&g, &s).unwrap();
        let fast = xbasis_moments(&g.vector, s.j).unwrap();
        assert_abs_diff_eq!(slow.mean_lx, fast.mean[0], epsilon = 1e-12);
        assert_abs_diff_eq!(slow.mean_ly, fast.mean[1], epsilon = 1e-12);
        assert_abs_diff_eq!(slow.mean_lz, fast.mean[2], epsilon = 1e-12);
        assert_abs_diff_eq!(slow.mean_lx2, fast.second[0][0], epsilon = 1e-12);
    }

    #[test]
    fn lambda_one_ground_state_lies_on_the_j1_boundary() {
        // (⟨Lz⟩, ⟨Lx²⟩) of the J = 1 ground state satisfies the closed
        // form ⟨Lx²⟩ = ½(1 − √(1 − ⟨Lz⟩²)).
        let s = build_spin_matrices(SpinLength::ONE, Basis::X);
        let g = squeezing_ground_state(SpinLength::ONE, 1.0, 0.0).unwrap();
        let m = moments(&g, &s).unwrap();
        let expected = 0.5 * (1.0 - (1.0 - m.mean_lz * m.mean_lz).sqrt());
        assert_abs_diff_eq!(m.mean_lx2, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(m.mean_lx, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.mean_ly, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn fully_x_polarized_vector_has_zero_x_variance() {
        let j = SpinLength::from_two_j(6).unwrap();
        let s = build_spin_matrices(j, Basis::X);
        // λ₂ → large drives the ground state to |m_x = J⟩
        let g = squeezing_ground_state(j, 0.0, 500.0).unwrap();
        let m = moments(&g, &s).unwrap();
        assert_abs_diff_eq!(m.var_lx, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(m.mean_lx, j.value(), epsilon = 1e-10);
    }

    #[test]
    fn moments_dimension_mismatch_is_rejected() {
        let s = build_spin_matrices(SpinLength::ONE, Basis::X);
        let g = squeezing_ground_state(SpinLength::HALF, 0.5, 0.0).unwrap();
        assert!(matches!(
            moments(&g, &s),
            Err(SpinError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn shared_types_are_send_and_sync() {
        // parallel λ sweeps share these read-only across workers
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SpinMatrices>();
        assert_send_sync::<TridiagonalSym>();
        assert_send_sync::<GroundState>();
        assert_send_sync::<crate::boundary::BoundaryCurve>();
        assert_send_sync::<crate::boundary::CurveCache>();
        assert_send_sync::<crate::criteria::MeasurementRecord>();
    }

    #[test]
    fn casimir_identity_for_xbasis_moments() {
        // ⟨Lx²+Ly²+Lz²⟩ = J(J+1) for any unit state.
        let j = SpinLength::from_two_j(8).unwrap();
        let g = squeezing_ground_state(j, 2.7, 0.0).unwrap();
        let m = xbasis_moments(&g.vector, j).unwrap();
        let total = m.second[0][0] + m.second[1][1] + m.second[2][2];
        assert_abs_diff_eq!(total, j.value() * (j.value() + 1.0), epsilon = 1e-10);
    }
}
