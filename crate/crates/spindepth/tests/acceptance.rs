//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the quantity it pinned down (run with `--nocapture` to
//! see them).

mod common;

use common::{brute_force_f_halfinteger, QubitSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spindepth::{
    compute_f_curve, compute_f_halfinteger, convexity_check, decohere_particles, detect_depth,
    dicke_moments, duan_criterion, fluctuating_nonlinear, fluctuating_sm, g_from_f,
    noisy_dicke_moments, nonlinear_criterion, qubit_tangent_criterion, random_producible_moments,
    sm_criterion, squeezed_state_moments, squeezing_ground_state, tangent_bound, tilde_g, xi2,
    xi2_fluctuating, xi2_sm, xi2_sm_fluctuating, w_expectation, CriterionError, CriterionId,
    CurveCache, CurveConfig, DepthOptions, MeasurementRecord, NBin, ShotEnsemble, SpinLength,
};
use std::time::Instant;

fn g1_closed(x: f64) -> f64 {
    0.5 * (1.0 - (1.0 - x).sqrt())
}

/// 1. The computed G_1 matches the closed form ½(1−√(1−X)) to 1e-8 over
///    X ∈ [0, 0.9999], in under a second.
#[test]
fn acceptance_01_closed_form_j1() {
    let start = Instant::now();
    let f = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();
    let g = g_from_f(&f);
    let mut max_err: f64 = 0.0;
    let mut checked = 0;
    for s in g.samples.iter().filter(|s| s.x <= 0.9999) {
        max_err = max_err.max((s.value - g1_closed(s.x)).abs());
        checked += 1;
    }
    assert!(g.max_sampled_x() >= 0.9999, "curve must cover X = 0.9999");
    assert!(checked > 100);
    assert!(max_err <= 1e-8, "max |G_1 − closed form| = {max_err:.3e}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "acceptance 01 PASS — G_1 closed form: max err {max_err:.2e} over {checked} samples in {elapsed:?}"
    );
}

/// 2. G'_J(0) from the two smallest-X samples equals 1/(2(J+1)) within 1%
///    for J = 1..19, and the perturbative relations X(λ) ≈ λ²(J+1)²,
///    G ≈ ½λ²(J+1) hold within 2% at λ = 1e-3.
#[test]
fn acceptance_02_tangent_slope_and_perturbative_regime() {
    let mut worst_slope = 0.0f64;
    let mut worst_pert = 0.0f64;
    for n in 1..=19u32 {
        let j = SpinLength::integer(n).unwrap();
        let f = compute_f_curve(j, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let (s0, s1) = (&g.samples[0], &g.samples[1]);
        let slope = (s1.value - s0.value) / (s1.x - s0.x);
        let expected = 1.0 / (2.0 * (j.value() + 1.0));
        let rel = (slope / expected - 1.0).abs();
        worst_slope = worst_slope.max(rel);
        assert!(rel <= 0.01, "J = {n}: slope off by {rel:.3e}");

        let lambda = 1e-3;
        let ground = squeezing_ground_state(j, lambda, 0.0).unwrap();
        let m = spindepth::spin::xbasis_moments(&ground.vector, j).unwrap();
        let jv = j.value();
        let x_g = (m.mean[2] / jv).powi(2);
        let g_val = m.second[0][0] / jv;
        let x_pred = lambda * lambda * (jv + 1.0) * (jv + 1.0);
        let g_pred = 0.5 * lambda * lambda * (jv + 1.0);
        let rel_x = (x_g / x_pred - 1.0).abs();
        let rel_g = (g_val / g_pred - 1.0).abs();
        worst_pert = worst_pert.max(rel_x.max(rel_g));
        assert!(rel_x <= 0.02, "J = {n}: X(λ) off by {rel_x:.3e}");
        assert!(rel_g <= 0.02, "J = {n}: G(λ) off by {rel_g:.3e}");
    }
    println!(
        "acceptance 02 PASS — tangent slopes within {worst_slope:.2e}, perturbative relations within {worst_pert:.2e}"
    );
}

/// 3. tilde-G and the tangent both lower-bound G_J at every sample for
///    J ∈ {1, 5, 10, 19}; tilde-G is tight at X = 1 within 1e-6; the
///    slope ratio at X → 0 is 2 within 2%.
#[test]
fn acceptance_03_sandwich() {
    for n in [1u32, 5, 10, 19] {
        let j = SpinLength::integer(n).unwrap();
        let f = compute_f_curve(j, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        for s in &g.samples {
            assert!(
                s.value + 1e-9 >= tilde_g(j, s.x),
                "J = {n}: tilde above G at X = {}",
                s.x
            );
            assert!(
                s.value + 1e-9 >= tangent_bound(j, s.x),
                "J = {n}: tangent above G at X = {}",
                s.x
            );
        }
        let endpoint_gap = (g.evaluate(1.0).unwrap() - tilde_g(j, 1.0)).abs();
        assert!(endpoint_gap <= 1e-6, "J = {n}: endpoint gap {endpoint_gap:.2e}");

        let s1 = &g.samples[1];
        let ratio = (s1.value / s1.x) / (tilde_g(j, s1.x) / s1.x);
        assert!(
            (ratio - 2.0).abs() <= 0.04,
            "J = {n}: small-X slope ratio {ratio}"
        );
    }
    println!("acceptance 03 PASS — sandwich bounds, X=1 tightness and factor-2 slope ratio hold");
}

/// 4. Dicke states are detected as N-entangled by the nonlinear criterion
///    for N ∈ {10, 100} and j ∈ {1/2, 1}; the warm-cache N = 100 searches
///    run in under 10 s.
#[test]
fn acceptance_04_dicke_detection() {
    let cache = CurveCache::new(CurveConfig::default());
    let opts = DepthOptions::default();
    for j in [SpinLength::HALF, SpinLength::ONE] {
        for n in [10u64, 100] {
            let rec = dicke_moments(n, j);
            let verdict = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap();
            assert_eq!(
                verdict.certified_depth,
                n,
                "Dicke N = {n}, 2j = {} must certify depth N",
                j.two_j()
            );
        }
    }
    // warm-cache timing at N = 100
    let start = Instant::now();
    for j in [SpinLength::HALF, SpinLength::ONE] {
        let rec = dicke_moments(100, j);
        let verdict = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap();
        assert_eq!(verdict.certified_depth, 100);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "warm run took {elapsed:?}");
    println!("acceptance 04 PASS — Dicke depth N certified; warm N=100 searches in {elapsed:?}");
}

fn dicke_noise_threshold(n: u64, j: SpinLength, k: u64) -> f64 {
    let nf = n as f64;
    let jv = j.value();
    let kj = k as f64 * jv;
    3.0 * (nf - k as f64) * jv
        / (2.0 * jv * (jv + 1.0) * (kj + 1.0) * (nf - k as f64) - 2.0 * (jv + 1.0)
            + 3.0 * (nf * jv + 1.0))
}

/// 5. The ξ² verdict on noisy Dicke states flips exactly at the analytic
///    threshold: p* = 1/28 ± 1e-9 for (N=100, j=1/2, k=50), and the
///    formula matches direct evaluation for 20 random (N, j, k) triples.
#[test]
fn acceptance_05_noisy_dicke_threshold() {
    let j = SpinLength::HALF;
    let p_star = dicke_noise_threshold(100, j, 50);
    assert!((p_star - 1.0 / 28.0).abs() < 1e-15);
    let at = |p: f64| xi2(&noisy_dicke_moments(100, j, p).unwrap(), 50).unwrap();
    assert!((at(p_star).lhs - 1.0).abs() <= 1e-9);
    assert!(at(p_star - 1e-9).violated);
    assert!(!at(p_star + 1e-9).violated);

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tested = 0;
    while tested < 20 {
        let two_j = rng.gen_range(1u32..=4);
        let j = SpinLength::from_two_j(two_j).unwrap();
        let n = rng.gen_range(6u64..=150);
        let k = rng.gen_range(1..n);
        if !j.times(k).unwrap().is_integer() {
            continue;
        }
        let p_star = dicke_noise_threshold(n, j, k);
        assert!(p_star > 0.0 && p_star < 1.0, "threshold outside (0,1)");
        let at = |p: f64| xi2(&noisy_dicke_moments(n, j, p).unwrap(), k).unwrap();
        assert!(
            (at(p_star).lhs - 1.0).abs() <= 1e-9,
            "ξ²(p*) ≠ 1 at N={n} 2j={two_j} k={k}"
        );
        assert!(at(p_star * (1.0 - 1e-6)).violated, "N={n} 2j={two_j} k={k}");
        assert!(!at(p_star * (1.0 + 1e-6)).violated, "N={n} 2j={two_j} k={k}");
        tested += 1;
    }
    println!("acceptance 05 PASS — ξ² flips at p* = 1/28 (±1e-9) and at 20 random thresholds");
}

/// 6. Spin-squeezed states of N = 1000 qubits with 10 particles decohered:
///    over a ≥30-point μ sweep the nonlinear depth is monotone
///    non-decreasing toward small μ, the Sørensen–Mølmer depth peaks and
///    then decreases, and the two agree within ±1 at the largest μ.
#[test]
fn acceptance_06_squeezing_sweep_crossover() {
    let start = Instant::now();
    let cache = CurveCache::new(CurveConfig::default());
    let opts = DepthOptions::default();
    let n = 1000u64;
    let points = 31;
    let (mu_min, mu_max) = (1e-2, 1e4);
    let ratio: f64 = mu_max / mu_min;
    let mut depths_nl = Vec::with_capacity(points);
    let mut depths_sm = Vec::with_capacity(points);
    for i in 0..points {
        let mu = mu_min * ratio.powf(i as f64 / (points as f64 - 1.0));
        let state = squeezed_state_moments(n, mu).unwrap();
        let rec = decohere_particles(&state, 10).unwrap();
        depths_nl
            .push(detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap().certified_depth);
        depths_sm.push(
            detect_depth(&rec, CriterionId::SorensenMolmer, &cache, &opts)
                .unwrap()
                .certified_depth,
        );
    }
    // μ ascending: nonlinear depth must never increase.
    for w in depths_nl.windows(2) {
        assert!(w[0] >= w[1], "nonlinear depth not monotone: {depths_nl:?}");
    }
    // SM depth peaks in the interior and decreases toward strong squeezing.
    let peak = *depths_sm.iter().max().unwrap();
    assert!(
        peak > depths_sm[0] && peak > *depths_sm.last().unwrap(),
        "SM depth must attain an interior maximum: {depths_sm:?}"
    );
    let last_gap = depths_nl.last().unwrap().abs_diff(*depths_sm.last().unwrap());
    assert!(last_gap <= 1, "criteria disagree at the largest μ: {last_gap}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "sweep took {elapsed:?}");
    println!(
        "acceptance 06 PASS — crossover reproduced (nl {}→{}, sm peak {peak}); {elapsed:?}",
        depths_nl[0],
        depths_nl.last().unwrap()
    );
}

/// 7. Convexity: the derivative of G_J is monotone (max decrease ≤ 1e-9)
///    for J ∈ {1, 10, 19}, and F_J(X^{1/α}) is convex for α ∈ {1.5, 2}
///    but not for α ∈ {2.5, 3, 4}.
#[test]
fn acceptance_07_convexity() {
    for n in [1u32, 10, 19] {
        let j = SpinLength::integer(n).unwrap();
        let f = compute_f_curve(j, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let report = convexity_check(&g, &[]);
        assert!(
            report.verdict && report.max_derivative_decrease <= 1e-9,
            "J = {n}: max derivative decrease {}",
            report.max_derivative_decrease
        );
        let probes = convexity_check(&f, &[1.5, 2.0, 2.5, 3.0, 4.0]);
        let outcomes: Vec<(f64, bool)> = probes
            .alpha_probes
            .iter()
            .map(|p| (p.alpha, p.convex))
            .collect();
        assert_eq!(
            outcomes,
            vec![(1.5, true), (2.0, true), (2.5, false), (3.0, false), (4.0, false)],
            "J = {n}"
        );
    }
    println!("acceptance 07 PASS — G derivative monotone; α-probe convex ≤ 2, non-convex > 2");
}

/// 8. Soundness: 10³ random pure k-producible records produce zero
///    level-k violations across all criteria and satisfy the pure-state
///    polarization inequality; Duan ⇒ qubit-tangent on 10³ records.
#[test]
fn acceptance_08_soundness() {
    let cache = CurveCache::new(CurveConfig::default());
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut produced = 0u64;
    while produced < 1000 {
        let j = if rng.gen_bool(0.5) { SpinLength::HALF } else { SpinLength::ONE };
        let n = rng.gen_range(3u64..=12);
        let cap = if j == SpinLength::ONE { 6 } else { 11 };
        let k_max = rng.gen_range(1..=(n - 1).min(cap));
        let partition = common::random_partition(&mut rng, n, k_max);
        let k = *partition.iter().max().unwrap();
        if k >= n {
            continue;
        }
        let rec = random_producible_moments(n, j, &partition, produced).unwrap();

        // the pure-state chain inequality behind the nonlinear criterion
        let nj = rec.nj();
        let kj = k as f64 * rec.j.value();
        let radicand =
            (rec.second_moment_perp - nj * (kj + 1.0)) / ((rec.n - k) as f64 * rec.j.value() * nj);
        if radicand >= 0.0 {
            assert!(
                rec.polarization_perp() / nj + 1e-10 >= radicand.sqrt(),
                "chain inequality fails on sample {produced}"
            );
        }

        let group = rec.j.times(k).unwrap();
        if group.is_integer() {
            let g = cache.get_g(group).unwrap();
            assert!(!nonlinear_criterion(&rec, k, &g).unwrap().violated);
            let f = cache.get_f(group).unwrap();
            assert!(!sm_criterion(&rec, k, &f).unwrap().violated);
            match xi2(&rec, k) {
                Ok(res) => assert!(!res.violated),
                Err(CriterionError::NotApplicable { .. }) => {}
                Err(e) => panic!("{e}"),
            }
            match xi2_sm(&rec, k) {
                Ok(res) => assert!(!res.violated),
                Err(CriterionError::NotApplicable { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        } else {
            assert!(!spindepth::nonlinear_tilde_criterion(&rec, k).unwrap().violated);
            assert!(!spindepth::sm_tilde_criterion(&rec, k).unwrap().violated);
        }
        if rec.j == SpinLength::HALF {
            assert!(!duan_criterion(&rec, k).unwrap().violated);
            assert!(!qubit_tangent_criterion(&rec, k).unwrap().violated);
        }
        produced += 1;
    }

    // Duan ⇒ qubit tangent on random physical records.
    let mut checked = 0u64;
    while checked < 1000 {
        let n = rng.gen_range(3u64..=80);
        let nj = n as f64 * 0.5;
        let smp = rng.gen_range(0.0..nj * (nj + 1.0));
        let my = rng.gen_range(-nj..nj);
        let mz = rng.gen_range(-nj..nj);
        if my * my + mz * mz > smp.min(nj * nj) {
            continue;
        }
        let rec = match MeasurementRecord::new(
            n,
            SpinLength::HALF,
            rng.gen_range(0.0..nj),
            my,
            mz,
            smp,
            None,
            None,
            None,
        ) {
            Ok(rec) => rec,
            Err(_) => continue,
        };
        let k = rng.gen_range(1..n);
        if duan_criterion(&rec, k).unwrap().violated {
            assert!(qubit_tangent_criterion(&rec, k).unwrap().violated);
        }
        checked += 1;
    }
    println!("acceptance 08 PASS — 1000 producible samples sound; Duan ⇒ tangent on 1000 records");
}

/// 9. Oracle equivalence: the generator moments match explicit
///    product-space density-matrix computations at N ≤ 6 to 1e-10, and the
///    half-integer F_{3/2}(0.5) matches a dense two-parameter brute force
///    to 1e-6.
#[test]
fn acceptance_09_oracle_equivalence() {
    for n in [2u64, 4, 6] {
        let space = QubitSpace::new(n as usize);
        let rho = space.density(&space.dicke_state());
        let (mean, second) = space.moments(&rho);
        let rec = dicke_moments(n, SpinLength::HALF);
        assert!(mean.iter().all(|m| m.abs() < 1e-10));
        assert!((second[0] - rec.var_jx).abs() < 1e-10);
        assert!((second[1] + second[2] - rec.second_moment_perp).abs() < 1e-10);

        for mu in [0.4, 2.0] {
            let big_j = SpinLength::from_two_j(n as u32).unwrap();
            let ground = squeezing_ground_state(big_j, mu, 0.0).unwrap();
            let mut rho = space.density(&space.embed_symmetric(&ground.vector));
            let s = squeezed_state_moments(n, mu).unwrap();
            for m in 0..=n {
                let rec = decohere_particles(&s, m).unwrap();
                let (mean, second) = space.moments(&rho);
                assert!((mean[2] - rec.mean_jz).abs() < 1e-10, "N={n} μ={mu} m={m}");
                assert!(
                    (second[0] - mean[0] * mean[0] - rec.var_jx).abs() < 1e-10,
                    "N={n} μ={mu} m={m}"
                );
                assert!(
                    (second[1] + second[2] - rec.second_moment_perp).abs() < 1e-10,
                    "N={n} μ={mu} m={m}"
                );
                if m < n {
                    rho = space.depolarize_site(&rho, m as usize);
                }
            }
        }
    }

    let (oracle, argmin) = brute_force_f_halfinteger(3, 0.5, 4.0, 4000);
    assert!(argmin > 0.05 && argmin < 3.9, "oracle minimum at the box edge");
    let lib = compute_f_halfinteger(SpinLength::from_two_j(3).unwrap(), 0.5).unwrap();
    assert!(
        (lib - oracle).abs() <= 1e-6,
        "F_3/2(0.5): library {lib} vs brute force {oracle}"
    );
    println!(
        "acceptance 09 PASS — density-matrix oracles to 1e-10; F_3/2(0.5) = {lib:.9} vs {oracle:.9}"
    );
}

/// 10. Fluctuating N: delta-distributed ensembles reproduce the fixed-N
///     verdicts bit-identically, and the two-bin Dicke ensemble has
///     criterion argument ⟨W⟩/(⟨N⟩j) = 1 within 1e-12.
#[test]
fn acceptance_10_fluctuating_reductions() {
    let j = SpinLength::HALF;
    let cache = CurveCache::new(CurveConfig::default());
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    while checked < 50 {
        let n = 2 * rng.gen_range(3u64..20);
        let nj = n as f64 * 0.5;
        let smp = rng.gen_range(0.0..nj * (nj + 1.0));
        let mz = rng.gen_range(-nj..nj);
        if mz * mz > smp.min(nj * nj) {
            continue;
        }
        let rec = match MeasurementRecord::new(
            n,
            j,
            rng.gen_range(0.0..nj),
            0.0,
            mz,
            smp,
            Some(rng.gen_range(-0.2..0.2)),
            None,
            None,
        ) {
            Ok(rec) => rec,
            Err(_) => continue,
        };
        let ens = ShotEnsemble::from_bins(
            j,
            vec![NBin {
                n,
                weight: rng.gen_range(0.5..4.0),
                var_jx: rec.var_jx,
                mean_jz: rec.mean_jz,
                second_moment_perp: rec.second_moment_perp,
                mean_jx: rec.mean_jx,
                mean_jy: Some(rec.mean_jy),
            }],
        )
        .unwrap();
        let k = 2 * rng.gen_range(1..n / 2);
        let group = j.times(k).unwrap();
        let g = cache.get_g(group).unwrap();
        let f = cache.get_f(group).unwrap();

        let fixed = nonlinear_criterion(&rec, k, &g).unwrap();
        let fluct = fluctuating_nonlinear(&ens, k, &g).unwrap();
        assert_eq!(fixed.applicable, fluct.applicable);
        assert_eq!(fixed.violated, fluct.violated);
        if fixed.applicable {
            assert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits());
            assert_eq!(fixed.rhs.to_bits(), fluct.rhs.to_bits());
            assert_eq!(fixed.margin.to_bits(), fluct.margin.to_bits());
        }

        let fixed = sm_criterion(&rec, k, &f).unwrap();
        let fluct = fluctuating_sm(&ens, k, &f).unwrap();
        assert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits());
        assert_eq!(fixed.rhs.to_bits(), fluct.rhs.to_bits());
        assert_eq!(fixed.violated, fluct.violated);

        match (xi2(&rec, k), xi2_fluctuating(&ens, k)) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a.lhs.to_bits(), b.lhs.to_bits());
                assert_eq!(a.violated, b.violated);
            }
            (Err(CriterionError::NotApplicable { .. }), Err(_)) => {}
            (a, b) => panic!("xi2 mismatch: {a:?} vs {b:?}"),
        }
        match (xi2_sm(&rec, k), xi2_sm_fluctuating(&ens, k)) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a.lhs.to_bits(), b.lhs.to_bits());
                assert_eq!(a.violated, b.violated);
            }
            (Err(CriterionError::NotApplicable { .. }), Err(_)) => {}
            (a, b) => panic!("xi2_sm mismatch: {a:?} vs {b:?}"),
        }
        checked += 1;
    }

    // two-bin Dicke ensemble: argument exactly 1
    let bins = vec![
        bin_from(&dicke_moments(100, j), 0.5),
        bin_from(&dicke_moments(120, j), 0.5),
    ];
    let ens = ShotEnsemble::from_bins(j, bins).unwrap();
    let w = w_expectation(&ens, 20).unwrap();
    let arg = w.mean_w / (ens.mean_n() * j.value());
    assert!((arg - 1.0).abs() <= 1e-12, "⟨W⟩/(⟨N⟩j) = {arg}");
    println!(
        "acceptance 10 PASS — 50 delta-N ensembles bit-identical; two-bin Dicke argument = {arg}"
    );
}

fn bin_from(rec: &MeasurementRecord, weight: f64) -> NBin {
    NBin {
        n: rec.n,
        weight,
        var_jx: rec.var_jx,
        mean_jz: rec.mean_jz,
        second_moment_perp: rec.second_moment_perp,
        mean_jx: rec.mean_jx,
        mean_jy: Some(rec.mean_jy),
    }
}
