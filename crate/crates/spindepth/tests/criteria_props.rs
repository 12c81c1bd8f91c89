//! Property tests for the criteria: soundness on producible states and the
//! dominance relations between the criteria families.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use spindepth::{
    duan_criterion, nonlinear_criterion, nonlinear_tilde_criterion, observation3_predicate,
    qubit_tangent_criterion, sm_criterion, sm_tilde_criterion, xi2, xi2_sm, CriterionError,
    CurveCache, CurveConfig, MeasurementRecord, SpinLength,
};

fn assert_no_violation_at_level(
    rec: &MeasurementRecord,
    k: u64,
    cache: &CurveCache,
    label: &str,
) {
    let group = rec.j.times(k).unwrap();
    if group.is_integer() {
        let g = cache.get_g(group).unwrap();
        let res = nonlinear_criterion(rec, k, &g).unwrap();
        assert!(!res.violated, "nonlinear violated on {label}");
        let f = cache.get_f(group).unwrap();
        let res = sm_criterion(rec, k, &f).unwrap();
        assert!(!res.violated, "sm violated on {label}");
        match xi2(rec, k) {
            Ok(res) => assert!(!res.violated, "xi2 violated on {label}"),
            Err(CriterionError::NotApplicable { .. }) => {}
            Err(e) => panic!("{e}"),
        }
        match xi2_sm(rec, k) {
            Ok(res) => assert!(!res.violated, "xi2_sm violated on {label}"),
            Err(CriterionError::NotApplicable { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    } else {
        let res = nonlinear_tilde_criterion(rec, k).unwrap();
        assert!(!res.violated, "nonlinear(tilde) violated on {label}");
        let res = sm_tilde_criterion(rec, k).unwrap();
        assert!(!res.violated, "sm(tilde) violated on {label}");
    }
    if rec.j == SpinLength::HALF && k < rec.n {
        let res = duan_criterion(rec, k).unwrap();
        assert!(!res.violated, "duan violated on {label}");
        let res = qubit_tangent_criterion(rec, k).unwrap();
        assert!(!res.violated, "qubit tangent violated on {label}");
    }
}

/// No criterion may ever report entanglement deeper than the partition that
/// generated the state.
#[test]
fn no_criterion_fires_on_producible_states() {
    let cache = CurveCache::new(CurveConfig::default());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for trial in 0..300u64 {
        let j = if rng.gen_bool(0.5) { SpinLength::HALF } else { SpinLength::ONE };
        let n = rng.gen_range(3u64..=12);
        let cap = if j == SpinLength::ONE { 6 } else { 11 };
        let k_max = rng.gen_range(1..=(n - 1).min(cap));
        let partition = common::random_partition(&mut rng, n, k_max);
        let k = *partition.iter().max().unwrap();
        if k >= n {
            continue;
        }
        let rec = spindepth::random_producible_moments(n, j, &partition, trial).unwrap();
        assert_no_violation_at_level(
            &rec,
            k,
            &cache,
            &format!("trial {trial}, 2j={}, partition {partition:?}", j.two_j()),
        );
    }
}

/// ξ² is the tangent of the nonlinear boundary: a ξ² violation implies a
/// nonlinear violation at the same level.
#[test]
fn xi2_violation_implies_nonlinear_violation() {
    let cache = CurveCache::new(CurveConfig::default());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut implications = 0;
    for _ in 0..3000 {
        let j = if rng.gen_bool(0.5) { SpinLength::HALF } else { SpinLength::ONE };
        let n = rng.gen_range(4u64..=30);
        let nj = n as f64 * j.value();
        let rec = match MeasurementRecord::new(
            n,
            j,
            rng.gen_range(0.0..nj / 2.0),
            0.0,
            rng.gen_range(-nj..nj),
            rng.gen_range(0.0..nj * (nj + 1.0)),
            None,
            None,
            None,
        ) {
            Ok(rec) => rec,
            Err(_) => continue,
        };
        let k = rng.gen_range(1..n);
        if !rec.j.times(k).unwrap().is_integer() {
            continue;
        }
        let violated_xi2 = match xi2(&rec, k) {
            Ok(res) => res.violated,
            Err(CriterionError::NotApplicable { .. }) => false,
            Err(e) => panic!("{e}"),
        };
        if violated_xi2 {
            let g = cache.get_g(rec.j.times(k).unwrap()).unwrap();
            let nl = nonlinear_criterion(&rec, k, &g).unwrap();
            assert!(
                nl.violated,
                "ξ² violated but nonlinear not (N={n}, 2j={}, k={k})",
                j.two_j()
            );
            implications += 1;
        }
    }
    assert!(implications > 100, "test exercised only {implications} violations");
}

/// When the stronger-comparison predicate holds, the nonlinear bound is at
/// least as high as the polarization bound (argument ordering under the
/// monotone boundary function).
#[test]
fn observation3_orders_the_two_bounds() {
    let cache = CurveCache::new(CurveConfig::default());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut exercised = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(4u64..=24);
        let j = SpinLength::HALF;
        let nj = n as f64 * 0.5;
        let smp = rng.gen_range(0.0..nj * (nj + 1.0));
        let my: f64 = rng.gen_range(-nj..nj);
        let mz: f64 = rng.gen_range(-nj..nj);
        let pol2 = my * my + mz * mz;
        if pol2 > smp.min(nj * nj) {
            continue;
        }
        // split the second moment into variances consistently
        let vy = (smp - pol2) * rng.gen_range(0.0..1.0);
        let vz = (smp - pol2) - vy;
        let rec = match MeasurementRecord::new(
            n,
            j,
            rng.gen_range(0.0..nj / 2.0),
            my,
            mz,
            smp,
            None,
            Some(vy),
            Some(vz),
        ) {
            Ok(rec) => rec,
            Err(_) => continue,
        };
        let k = 2 * rng.gen_range(1..=(n - 1) / 2);
        if k == 0 || k >= n {
            continue;
        }
        if !observation3_predicate(&rec, k).unwrap() {
            continue;
        }
        let group = rec.j.times(k).unwrap();
        let g = cache.get_g(group).unwrap();
        let f = cache.get_f(group).unwrap();
        let nl = nonlinear_criterion(&rec, k, &g).unwrap();
        let sm = sm_criterion(&rec, k, &f).unwrap();
        if !nl.applicable {
            continue;
        }
        assert!(
            nl.rhs + 1e-7 * rec.nj() >= sm.rhs,
            "predicate holds but bounds are out of order (N={n}, k={k}): nl {} < sm {}",
            nl.rhs,
            sm.rhs
        );
        if !nl.violated {
            assert!(
                !sm.violated || sm.margin <= 1e-7 * rec.nj(),
                "nonlinear clean but sm fires beyond noise (N={n}, k={k})"
            );
        }
        exercised += 1;
    }
    assert!(exercised > 200, "only {exercised} predicate-true samples");
}

proptest! {
    /// Records survive a JSON round trip bit-exactly.
    #[test]
    fn record_round_trips_through_json(
        n in 2u64..200,
        two_j in 1u32..5,
        var_frac in 0.0f64..1.0,
        smp_frac in 0.0f64..1.0,
        pol_frac in 0.0f64..1.0,
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let j = SpinLength::from_two_j(two_j).unwrap();
        let nj = n as f64 * j.value();
        let smp = smp_frac * nj * (nj + 1.0);
        let pol = pol_frac * smp.sqrt().min(nj);
        let rec = MeasurementRecord::new(
            n, j,
            var_frac * nj,
            pol * angle.cos(),
            pol * angle.sin(),
            smp,
            None, None, None,
        ).unwrap();
        let text = serde_json::to_string(&rec).unwrap();
        let back: MeasurementRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, rec);
    }

    /// The nonlinear argument X never exceeds 1 on physical records, so the
    /// criterion is always evaluable where applicable.
    #[test]
    fn nonlinear_argument_is_in_range(
        n in 2u64..100,
        two_j in 1u32..4,
        smp_frac in 0.0f64..1.0,
        k_frac in 0.0f64..1.0,
    ) {
        let j = SpinLength::from_two_j(two_j).unwrap();
        let nj = n as f64 * j.value();
        let rec = MeasurementRecord::new(
            n, j, 0.1, 0.0, 0.0, smp_frac * nj * (nj + 1.0), None, None, None,
        ).unwrap();
        let k = (1.0 + k_frac * (n - 1) as f64).floor() as u64;
        let k = k.clamp(1, n - 1);
        let x = spindepth::criteria::nonlinear_argument(&rec, k);
        prop_assert!(x <= 1.0 + 1e-9);
    }
}
