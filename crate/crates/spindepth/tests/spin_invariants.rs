//! Grid invariants of the ground-state solver.

use spindepth::{squeezing_ground_state, squeezing_hamiltonian, SpinLength};
use spindepth::spin::xbasis_moments;

/// For integer J the ground states of H_λ have ⟨Lx⟩ = 0 (the parity
/// symmetry m → −m survives for every λ), which is what lets the
/// one-parameter sweep trace the true variance boundary.
#[test]
fn integer_spin_ground_states_have_zero_mean_lx() {
    let lambdas = [0.0, 0.1, 0.37, 1.0, 2.5, 5.0, 10.0, 20.0, 35.0, 50.0];
    for n in 1..=19u32 {
        let j = SpinLength::integer(n).unwrap();
        for &lambda in &lambdas {
            let g = squeezing_ground_state(j, lambda, 0.0).unwrap();
            let m = xbasis_moments(&g.vector, j).unwrap();
            assert!(
                m.mean[0].abs() <= 1e-10,
                "⟨Lx⟩ = {} at J = {n}, λ = {lambda}",
                m.mean[0]
            );
        }
    }
}

#[test]
fn residuals_hold_across_the_sweep_range() {
    for two_j in [2u32, 19, 76, 399] {
        let j = SpinLength::from_two_j(two_j).unwrap();
        for lambda in [1e-3, 1.0, 40.0, 2000.0] {
            let h = squeezing_hamiltonian(j, lambda, 0.0);
            let g = squeezing_ground_state(j, lambda, 0.0).unwrap();
            let mut hv = vec![0.0; j.dimension()];
            h.apply(&g.vector, &mut hv);
            let res: f64 = hv
                .iter()
                .zip(&g.vector)
                .map(|(a, b)| (a - g.energy * b) * (a - g.energy * b))
                .sum::<f64>()
                .sqrt();
            assert!(
                res <= 1e-10 * h.norm(),
                "2J={two_j} λ={lambda}: residual {res:.3e}"
            );
        }
    }
}

/// Variational principle: at fixed λ the ground energy cannot increase
/// when λ₂ grows (tested on a grid; E is concave in λ₂ with slope −⟨Lx⟩).
#[test]
fn energy_monotone_under_lambda2_on_grid() {
    for two_j in [3u32, 8, 21] {
        let j = SpinLength::from_two_j(two_j).unwrap();
        for lambda in [0.0, 0.7, 4.0] {
            let mut prev = f64::INFINITY;
            for i in 0..30 {
                let lambda2 = 0.5 * i as f64;
                let e = squeezing_ground_state(j, lambda, lambda2).unwrap().energy;
                assert!(e <= prev + 1e-9, "2J={two_j} λ={lambda} λ₂={lambda2}");
                prev = e;
            }
        }
    }
}
