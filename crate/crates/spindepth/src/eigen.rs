//! Smallest eigenpair of a real symmetric tridiagonal matrix.
//!
//! Strategy: isolate the lowest eigenvalue by bisection on the Sturm
//! sequence (number of negative pivots of the shifted LDLᵀ factorization),
//! then recover the eigenvector by inverse iteration with a partially
//! pivoted tridiagonal solve. Deterministic, O(d) per step, no full
//! spectrum required.
//!
//! An unreduced symmetric tridiagonal matrix has simple eigenvalues, so a
//! degenerate ground space can only appear when some off-diagonal vanishes;
//! the all-zero case (λ = 0) is handled exactly as a diagonal matrix with a
//! deterministic tie-break towards larger m.

use crate::spin::{SpinError, TridiagonalSym};

/// Smallest eigenpair, plus a degeneracy flag.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub energy: f64,
    /// Unit-norm eigenvector; the largest-magnitude entry is made positive.
    pub vector: Vec<f64>,
    pub degenerate: bool,
}

/// Residual tolerance: ‖Hv − Ev‖ ≤ RESIDUAL_TOL · ‖H‖.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// Two eigenvalues closer than this (relative to ‖H‖) flag degeneracy.
const DEGENERACY_TOL: f64 = 1e-9;

const MAX_INVERSE_ITERATIONS: usize = 12;

/// Number of eigenvalues of `h` strictly below `x` (Sturm sequence count).
pub fn sturm_count_below(h: &TridiagonalSym, x: f64) -> usize {
    let n = h.diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0;
    let mut q = h.diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < 1e-300 {
            if q >= 0.0 { 1e-300 } else { -1e-300 }
        } else {
            q
        };
        let e = h.offdiag[i - 1];
        q = (h.diag[i] - x) - e * e / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Bisect the Gershgorin interval down to a tight bracket around the
/// smallest eigenvalue.
fn smallest_eigenvalue_bracket(h: &TridiagonalSym, scale: f64) -> (f64, f64) {
    let n = h.diag.len();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { h.offdiag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { h.offdiag[i].abs() } else { 0.0 };
        lo = lo.min(h.diag[i] - left - right);
        hi = hi.max(h.diag[i] + left + right);
    }
    lo -= 1e-8 * scale + 1e-300;
    let tol = (1e-15 * scale).max(1e-300);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count_below(h, mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Solve (H − σI)x = b with partial pivoting; overwrites `b` with x.
fn solve_shifted(h: &TridiagonalSym, sigma: f64, b: &mut [f64], scale: f64) {
    let n = h.diag.len();
    let tiny = (f64::EPSILON * scale).max(1e-300);
    let mut d: Vec<f64> = h.diag.iter().map(|&x| x - sigma).collect();
    let mut u: Vec<f64> = h.offdiag.clone();
    u.push(0.0);
    let mut fill = vec![0.0; n];
    for i in 0..n - 1 {
        let sub = h.offdiag[i];
        if d[i].abs() >= sub.abs() {
            let piv = if d[i].abs() < tiny {
                tiny.copysign(d[i])
            } else {
                d[i]
            };
            d[i] = piv;
            let m = sub / piv;
            d[i + 1] -= m * u[i];
            b[i + 1] -= m * b[i];
            // fill[i] stays zero
        } else {
            // swap rows i and i+1
            let m = d[i] / sub;
            let old_d_next = d[i + 1];
            let old_u_next = u[i + 1];
            d[i] = sub;
            let new_u = old_d_next;
            fill[i] = old_u_next;
            d[i + 1] = u[i] - m * old_d_next;
            u[i] = new_u;
            u[i + 1] = -m * old_u_next;
            b.swap(i, i + 1);
            b[i + 1] -= m * b[i];
        }
    }
    if d[n - 1].abs() < tiny {
        d[n - 1] = tiny.copysign(d[n - 1]);
    }
    b[n - 1] /= d[n - 1];
    if n >= 2 {
        b[n - 2] = (b[n - 2] - u[n - 2] * b[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - u[i] * b[i + 1] - fill[i] * b[i + 2]) / d[i];
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
    norm
}

/// Fix the overall sign: largest-magnitude entry positive.
fn canonical_sign(v: &mut [f64]) {
    let mut imax = 0;
    let mut best = 0.0;
    for (i, &x) in v.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            imax = i;
        }
    }
    if v[imax] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Exact path for a diagonal matrix (all off-diagonals zero): the ground
/// vector is a basis vector. Ties break towards larger index (larger m).
fn diagonal_ground(h: &TridiagonalSym, scale: f64) -> EigenPair {
    let n = h.diag.len();
    let mut imin = 0;
    for i in 1..n {
        if h.diag[i] <= h.diag[imin] {
            imin = i;
        }
    }
    let tol = DEGENERACY_TOL * scale.max(1.0);
    let degenerate = (0..n).any(|i| i != imin && (h.diag[i] - h.diag[imin]).abs() <= tol);
    let mut vector = vec![0.0; n];
    vector[imin] = 1.0;
    EigenPair {
        energy: h.diag[imin],
        vector,
        degenerate,
    }
}

/// Smallest eigenpair of a real symmetric tridiagonal matrix.
///
/// When the ground space is (numerically) degenerate the returned vector is
/// one valid choice and `degenerate` is set.
pub fn ground_state(h: &TridiagonalSym) -> Result<EigenPair, SpinError> {
    let n = h.diag.len();
    if n < 2 {
        return Err(SpinError::DimensionMismatch {
            expected: 2,
            got: n,
        });
    }
    debug_assert_eq!(h.offdiag.len(), n - 1);
    let scale = h.norm().max(1e-300);

    if h.offdiag.iter().all(|&e| e == 0.0) {
        return Ok(diagonal_ground(h, scale));
    }

    let (lo, hi) = smallest_eigenvalue_bracket(h, scale);
    let sigma = 0.5 * (lo + hi);

    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut energy = sigma;
    let mut residual = f64::MAX;
    let mut hv = vec![0.0; n];
    for iter in 0..MAX_INVERSE_ITERATIONS {
        solve_shifted(h, sigma, &mut v, scale);
        if normalize(&mut v) == 0.0 {
            // Solve collapsed; restart from a shifted deterministic vector.
            for (i, x) in v.iter_mut().enumerate() {
                *x = 1.0 + (i as f64) / (n as f64);
            }
            normalize(&mut v);
            continue;
        }
        h.apply(&v, &mut hv);
        energy = v.iter().zip(&hv).map(|(a, b)| a * b).sum();
        residual = hv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - energy * b) * (a - energy * b))
            .sum::<f64>()
            .sqrt();
        if residual <= 0.1 * RESIDUAL_TOL * scale {
            break;
        }
        if iter >= 2 && residual <= RESIDUAL_TOL * scale {
            break;
        }
    }
    if residual > RESIDUAL_TOL * scale {
        return Err(SpinError::ConvergenceFailure {
            residual,
            tolerance: RESIDUAL_TOL * scale,
        });
    }
    canonical_sign(&mut v);

    let gap = DEGENERACY_TOL * scale;
    let degenerate = sturm_count_below(h, energy + gap) >= 2;

    Ok(EigenPair {
        energy,
        vector: v,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{squeezing_hamiltonian, SpinLength};
    use approx::assert_abs_diff_eq;

    #[test]
    fn ground_energy_spin_one_lambda_one() {
        // Characteristic polynomial (1−E)(E² − E − λ²) = 0 at λ = 1 gives
        // E = (1 − √5)/2 for the lowest root.
        let h = squeezing_hamiltonian(SpinLength::ONE, 1.0, 0.0);
        let pair = ground_state(&h).unwrap();
        assert_abs_diff_eq!(pair.energy, (1.0 - 5.0_f64.sqrt()) / 2.0, epsilon = 1e-12);
        assert!(!pair.degenerate);
    }

    #[test]
    fn lambda_zero_integer_spin_ground_is_mx_zero() {
        let h = squeezing_hamiltonian(SpinLength::ONE, 0.0, 0.0);
        let pair = ground_state(&h).unwrap();
        assert_abs_diff_eq!(pair.energy, 0.0);
        assert_eq!(pair.vector, vec![0.0, 1.0, 0.0]);
        assert!(!pair.degenerate);
    }

    #[test]
    fn lambda_zero_half_integer_is_degenerate_with_positive_branch() {
        let h = squeezing_hamiltonian(SpinLength::HALF, 0.0, 0.0);
        let pair = ground_state(&h).unwrap();
        assert!(pair.degenerate);
        // tie-break: m_x = +1/2 branch
        assert_eq!(pair.vector, vec![0.0, 1.0]);

        let h = squeezing_hamiltonian(SpinLength::from_two_j(3).unwrap(), 0.0, 0.0);
        let pair = ground_state(&h).unwrap();
        assert!(pair.degenerate);
        assert_eq!(pair.vector, vec![0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn dominant_lambda2_polarizes_along_x() {
        for two_j in [2u32, 5, 9] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            let h = squeezing_hamiltonian(j, 0.0, 1000.0);
            let pair = ground_state(&h).unwrap();
            let d = j.dimension();
            assert!(pair.vector[d - 1] > 0.999);
        }
    }

    #[test]
    fn residual_meets_tolerance_on_a_parameter_grid() {
        for two_j in [1u32, 2, 7, 19, 40] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            for lambda in [0.0, 1e-3, 0.3, 2.0, 17.0, 300.0] {
                let h = squeezing_hamiltonian(j, lambda, 0.0);
                let pair = ground_state(&h).unwrap();
                let mut hv = vec![0.0; j.dimension()];
                h.apply(&pair.vector, &mut hv);
                let res: f64 = hv
                    .iter()
                    .zip(&pair.vector)
                    .map(|(a, b)| (a - pair.energy * b) * (a - pair.energy * b))
                    .sum::<f64>()
                    .sqrt();
                assert!(res <= RESIDUAL_TOL * h.norm(), "res={res} 2J={two_j} λ={lambda}");
                let norm: f64 = pair.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn matches_dense_solver_on_random_tridiagonals() {
        // Oracle: nalgebra dense symmetric eigendecomposition.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(2..30);
            let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let offdiag: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let h = TridiagonalSym { diag, offdiag };
            let mut dense = nalgebra::DMatrix::<f64>::zeros(n, n);
            for i in 0..n {
                dense[(i, i)] = h.diag[i];
                if i + 1 < n {
                    dense[(i + 1, i)] = h.offdiag[i];
                    dense[(i, i + 1)] = h.offdiag[i];
                }
            }
            let expected = dense
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .fold(f64::MAX, f64::min);
            let pair = ground_state(&h).unwrap();
            assert_abs_diff_eq!(pair.energy, expected, epsilon = 1e-9 * h.norm().max(1.0));
        }
    }

    #[test]
    fn ground_energy_nonincreasing_in_lambda2() {
        // E(λ₂) is a minimum of linear functions of λ₂, hence concave; with
        // ⟨Lx⟩ ≥ 0 at λ₂ ≥ 0 it is non-increasing there.
        for two_j in [2u32, 4, 7] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            for lambda in [0.0, 0.5, 2.0] {
                let mut last = f64::MAX;
                for lambda2 in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
                    let h = squeezing_hamiltonian(j, lambda, lambda2);
                    let e = ground_state(&h).unwrap().energy;
                    assert!(e <= last + 1e-10, "E must not increase with λ₂");
                    last = e;
                }
            }
        }
    }
}
