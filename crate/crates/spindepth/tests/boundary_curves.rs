//! Curve-level invariants on full sweeps.

mod common;

use spindepth::{
    compute_f_curve, compute_f_halfinteger, g_from_f, producibility_boundary, tangent_bound,
    tilde_g, CurveConfig, SpinLength,
};

fn curves_for(two_j: u32) -> (spindepth::BoundaryCurve, spindepth::BoundaryCurve) {
    let j = SpinLength::from_two_j(two_j).unwrap();
    let f = compute_f_curve(j, &CurveConfig::default()).unwrap();
    let g = g_from_f(&f);
    (f, g)
}

#[test]
fn curve_shape_invariants() {
    for two_j in [2u32, 10, 24] {
        let (f, g) = curves_for(two_j);
        for curve in [&f, &g] {
            assert_eq!(curve.samples[0].x, 0.0);
            assert_eq!(curve.samples[0].value, 0.0);
            assert!(curve.is_convex());
            for pair in curve.samples.windows(2) {
                assert!(pair[1].x > pair[0].x);
                assert!(pair[1].value + 1e-12 >= pair[0].value);
                assert!(pair[1].derivative + 1e-9 >= pair[0].derivative);
                // discrete convexity: chords bracket derivatives
                let chord = (pair[1].value - pair[0].value) / (pair[1].x - pair[0].x);
                assert!(chord + 1e-9 * (1.0 + chord.abs()) >= pair[0].derivative);
                assert!(pair[1].derivative + 1e-9 * (1.0 + pair[1].derivative.abs()) >= chord);
            }
        }
    }
}

#[test]
fn sandwich_holds_at_every_sample() {
    for two_j in [2u32, 10, 24] {
        let (_, g) = curves_for(two_j);
        let j = g.j;
        for s in &g.samples {
            assert!(s.value + 1e-9 >= tilde_g(j, s.x), "2J={two_j} x={}", s.x);
            assert!(s.value + 1e-9 >= tangent_bound(j, s.x), "2J={two_j} x={}", s.x);
        }
    }
}

/// The stored analytic derivatives agree with chord slopes through the
/// trapezoid identity: chord ≈ (d_i + d_{i+1})/2 away from the endpoints.
#[test]
fn analytic_derivative_matches_numerical_slope() {
    for two_j in [2u32, 10] {
        let (f, g) = curves_for(two_j);
        for curve in [&f, &g] {
            let mut checked = 0;
            for pair in curve.samples.windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                if a.x < 0.05 || b.x > 0.95 {
                    continue;
                }
                let chord = (b.value - a.value) / (b.x - a.x);
                let mid = 0.5 * (a.derivative + b.derivative);
                if mid.abs() < 1e-12 {
                    continue;
                }
                assert!(
                    (chord - mid).abs() <= 0.01 * mid.abs(),
                    "2J={two_j} kind={:?} x∈[{}, {}]: chord {chord} vs {mid}",
                    curve.kind,
                    a.x,
                    b.x
                );
                checked += 1;
            }
            assert!(checked > 50);
        }
    }
}

/// F and G are the same curve in different variables: evaluating G at X²
/// must agree with F at X.
#[test]
fn g_and_f_evaluations_are_consistent() {
    let (f, g) = curves_for(8);
    for i in 0..=40 {
        let x = 0.96 * i as f64 / 40.0;
        let vf = f.evaluate(x).unwrap();
        let vg = g.evaluate(x * x).unwrap();
        assert!(
            (vf - vg).abs() <= 2e-4 * (1.0 + vf.abs()),
            "x={x}: F {vf} vs G∘sq {vg}"
        );
    }
}

#[test]
fn producibility_boundaries_for_spin_one_ensembles() {
    // N = 20 spin-1 particles, k ∈ {1, 5, 9, 13, 17}: boundaries exist,
    // start at (Nj(kj+1), 0) and are ordered in the second moment.
    let j = SpinLength::ONE;
    for k in [1u64, 5, 9, 13, 17] {
        let group = j.times(k).unwrap();
        let f = compute_f_curve(group, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let b = producibility_boundary(20, j, k, &g).unwrap();
        let nj = 20.0;
        let c = nj * (k as f64 + 1.0);
        assert!((b.points[0].second_moment_perp - c).abs() < 1e-9);
        assert!(b.points[0].var_jx.abs() < 1e-9);
        for pair in b.points.windows(2) {
            assert!(pair[1].second_moment_perp >= pair[0].second_moment_perp);
            assert!(pair[1].var_jx + 1e-12 >= pair[0].var_jx);
        }
        // the Dicke point (Nj(Nj+1), 0) lies outside (below) the boundary
        let dicke_smp = nj * (nj + 1.0);
        if k < 20 - 1 {
            assert!(dicke_smp >= b.points.last().unwrap().second_moment_perp - 1e-9);
        }
    }
}

/// The evaluator must never exceed the true boundary: check the
/// default-resolution curve against the samples of a much finer sweep
/// (whose values are exact up to eigensolver precision).
#[test]
fn evaluate_never_exceeds_a_finer_reference_curve() {
    let coarse_cfg = CurveConfig::default();
    let fine_cfg = CurveConfig {
        resolution: 0.0004,
        seed_points_per_decade: 48,
        ..CurveConfig::default()
    };
    for two_j in [2u32, 12] {
        let j = SpinLength::from_two_j(two_j).unwrap();
        let coarse = g_from_f(&compute_f_curve(j, &coarse_cfg).unwrap());
        let fine = g_from_f(&compute_f_curve(j, &fine_cfg).unwrap());
        let mut max_slack: f64 = 0.0;
        for s in &fine.samples {
            let lower = coarse.evaluate(s.x).unwrap();
            assert!(
                lower <= s.value + 1e-10,
                "2J={two_j}: evaluate({}) = {lower} exceeds the curve value {}",
                s.x,
                s.value
            );
            max_slack = max_slack.max(s.value - lower);
        }
        // the bound is tight at the default resolution, not just valid
        assert!(max_slack < 2e-3, "2J={two_j}: slack {max_slack}");
    }
}

/// Dimensions in the thousands stay solvable within the residual budget.
#[test]
fn large_dimension_ground_states_converge() {
    let j = SpinLength::from_two_j(2000).unwrap(); // d = 2001
    for lambda in [1e-3, 1.0, 5e3] {
        let h = spindepth::squeezing_hamiltonian(j, lambda, 0.0);
        let g = spindepth::squeezing_ground_state(j, lambda, 0.0).unwrap();
        let mut hv = vec![0.0; j.dimension()];
        h.apply(&g.vector, &mut hv);
        let res: f64 = hv
            .iter()
            .zip(&g.vector)
            .map(|(a, b)| (a - g.energy * b) * (a - g.energy * b))
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-10 * h.norm(), "λ={lambda}: residual {res:.3e}");
        let m = spindepth::spin::xbasis_moments(&g.vector, j).unwrap();
        let x = m.mean[2] / j.value();
        assert!((0.0..=1.0 + 1e-12).contains(&x));
    }
}

/// Feeding a boundary point back through the criterion reproduces it:
/// lhs = rhs within tolerance, and boundary points are never flagged.
#[test]
fn boundary_points_sit_exactly_on_the_criterion() {
    use spindepth::{nonlinear_criterion, MeasurementRecord};
    let j = SpinLength::HALF;
    let (n, k) = (200u64, 20u64);
    let group = j.times(k).unwrap();
    let f = compute_f_curve(group, &CurveConfig::default()).unwrap();
    let g = g_from_f(&f);
    let boundary = producibility_boundary(n, j, k, &g).unwrap();
    let nj = n as f64 * 0.5;
    for p in boundary.points.iter().step_by(7) {
        let rec = MeasurementRecord::new(
            n,
            j,
            p.var_jx,
            0.0,
            0.0,
            p.second_moment_perp,
            None,
            None,
            None,
        )
        .unwrap();
        let res = nonlinear_criterion(&rec, k, &g).unwrap();
        assert!(res.applicable);
        assert!(
            (res.rhs - res.lhs).abs() <= 1e-8 * nj.max(1.0),
            "boundary point off the criterion: lhs {} rhs {}",
            res.lhs,
            res.rhs
        );
        assert!(!res.violated, "a boundary point must not be flagged");
    }
}

#[test]
fn half_integer_value_against_independent_brute_force() {
    // J = 3/2 at X = 0.5: dense-grid two-parameter sweep with dense
    // eigensolves, entirely outside the library's code path.
    let (oracle, argmin_l2) = common::brute_force_f_halfinteger(3, 0.5, 4.0, 4000);
    assert!(
        argmin_l2 > 0.05 && argmin_l2 < 3.9,
        "oracle minimum must be interior, got λ₂ = {argmin_l2}"
    );
    let lib = compute_f_halfinteger(SpinLength::from_two_j(3).unwrap(), 0.5).unwrap();
    assert!(
        (lib - oracle).abs() < 1e-6,
        "library {lib} vs brute force {oracle}"
    );
}
