//! State generators cross-checked against explicit product-space and dense
//! matrix computations.

mod common;

use common::{DenseSpinZ, QubitSpace};
use spindepth::{
    decohere_particles, dicke_moments, random_producible_moments, squeezed_state_moments,
    squeezing_ground_state, SpinLength,
};

const ORACLE_TOL: f64 = 1e-10;

#[test]
fn dicke_moments_match_product_space() {
    for n in [2usize, 4, 6] {
        let space = QubitSpace::new(n);
        let rho = space.density(&space.dicke_state());
        let (mean, second) = space.moments(&rho);
        let rec = dicke_moments(n as u64, SpinLength::HALF);
        assert!((mean[0]).abs() < ORACLE_TOL);
        assert!((mean[2]).abs() < ORACLE_TOL);
        assert!((second[0] - rec.var_jx).abs() < ORACLE_TOL);
        assert!(
            (second[1] + second[2] - rec.second_moment_perp).abs() < ORACLE_TOL,
            "N={n}"
        );
    }
}

#[test]
fn symmetric_embedding_reproduces_tridiagonal_moments() {
    // The product-space embedding of an H_μ ground state must have exactly
    // the moments the symmetric-subspace solver reports.
    for (n, mu) in [(4u64, 0.7), (6, 1.3)] {
        let big_j = SpinLength::from_two_j(n as u32).unwrap();
        let ground = squeezing_ground_state(big_j, mu, 0.0).unwrap();
        let space = QubitSpace::new(n as usize);
        let psi = space.embed_symmetric(&ground.vector);
        let rho = space.density(&psi);
        let (mean, second) = space.moments(&rho);

        let s = squeezed_state_moments(n, mu).unwrap();
        for axis in 0..3 {
            assert!((mean[axis] - s.moments.mean[axis]).abs() < ORACLE_TOL, "N={n} axis={axis}");
            assert!(
                (second[axis] - s.moments.second[axis][axis]).abs() < ORACLE_TOL,
                "N={n} axis={axis}"
            );
        }
    }
}

#[test]
fn squeezed_moments_match_dense_eigensolve() {
    // 5×5 dense z-basis oracle for N = 4, μ = 1.
    let sys = DenseSpinZ::new(4);
    let v = sys.ground_vector(1.0, 0.0);
    let (x_norm, var_x) = sys.polar_and_xvar(&v);
    let s = squeezed_state_moments(4, 1.0).unwrap();
    assert!((x_norm * 2.0 - s.moments.mean[2]).abs() < 1e-9);
    assert!((var_x - s.moments.var(0)).abs() < 1e-9);
}

#[test]
fn decohere_matches_density_matrix_channel() {
    // N ≤ 6, every m: the correlation-space formula equals the explicit
    // depolarizing channel.
    for n in [2u64, 4, 6] {
        for mu in [0.0, 1.0, 5.0] {
            let big_j = SpinLength::from_two_j(n as u32).unwrap();
            let ground = squeezing_ground_state(big_j, mu, 0.0).unwrap();
            let space = QubitSpace::new(n as usize);
            let psi = space.embed_symmetric(&ground.vector);
            let mut rho = space.density(&psi);
            let s = squeezed_state_moments(n, mu).unwrap();

            for m in 0..=n {
                let rec = decohere_particles(&s, m).unwrap();
                let (mean, second) = space.moments(&rho);
                assert!((mean[2] - rec.mean_jz).abs() < ORACLE_TOL, "N={n} μ={mu} m={m}");
                assert!(
                    (second[0] - mean[0] * mean[0] - rec.var_jx).abs() < ORACLE_TOL,
                    "N={n} μ={mu} m={m}"
                );
                assert!(
                    (second[1] + second[2] - rec.second_moment_perp).abs() < ORACLE_TOL,
                    "N={n} μ={mu} m={m}"
                );
                if m < n {
                    rho = space.depolarize_site(&rho, m as usize);
                }
            }
        }
    }
}

#[test]
fn producible_singletons_match_single_qubit_moments() {
    // A product of single-qubit states has variance sum 3N/4 − N·|bloch|²/4
    // with |bloch| = 1, i.e. N/2, and second moments consistent with the
    // record constructor.
    for seed in 0..20u64 {
        let rec = random_producible_moments(5, SpinLength::HALF, &[1; 5], seed).unwrap();
        let var_sum = rec.var_jx + rec.var_jy.unwrap() + rec.var_jz.unwrap();
        assert!((var_sum - 2.5).abs() < 1e-9, "seed={seed}");
    }
}

#[test]
fn producible_records_satisfy_the_purity_chain_inequality() {
    // √(⟨Jy⟩²+⟨Jz⟩²)/Nj ≥ √([⟨Jy²+Jz²⟩ − Nj(kj+1)]/[N(N−k)j²]) for pure
    // k-producible states whenever the radicand is nonnegative.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1234);
    for trial in 0..200 {
        let j = if rng.gen_bool(0.5) { SpinLength::HALF } else { SpinLength::ONE };
        let n = rng.gen_range(3u64..=10);
        let k_max = rng.gen_range(1..=((n - 1).min(6)));
        let partition = common::random_partition(&mut rng, n, k_max);
        let k = *partition.iter().max().unwrap();
        let rec = random_producible_moments(n, j, &partition, trial).unwrap();

        let nj = rec.nj();
        let kj = k as f64 * rec.j.value();
        let radicand = (rec.second_moment_perp - nj * (kj + 1.0))
            / ((rec.n - k) as f64 * rec.j.value() * nj);
        if radicand >= 0.0 {
            let pol = rec.polarization_perp() / nj;
            assert!(
                pol + 1e-10 >= radicand.sqrt(),
                "trial={trial} partition={partition:?} pol={pol} rad={radicand}"
            );
        }
    }
}
