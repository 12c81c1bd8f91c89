//! Boundary functions F_J(X) and G_J(X) and the producibility boundaries
//! built from them.
//!
//! F_J(X) is the minimal normalized variance (ΔLx)²/J over spin-J states
//! with fixed normalized polarization ⟨Lz⟩/J = X; G_J(X) = F_J(√X). For
//! integer J the minimizers are the ground states of H_λ = Lx² − λLz, so a
//! sweep over λ traces the curve, with the bonus that the derivative comes
//! for free: F_J'(X) = λ at X = ⟨Lz⟩/J. For half-integer J a second
//! multiplier λ₂Lx is needed and each point is a small constrained
//! optimization.
//!
//! Interpolation is deliberately one-sided. Entanglement claims compare
//! data against Nj·G_J(X), so the evaluator must never overestimate the
//! curve: it returns the supporting-tangent bound
//! value(Xᵢ) + derivative(Xᵢ)·(X − Xᵢ), which lies below a convex function
//! everywhere. If a sample set ever fails the convexity check, evaluation
//! falls back to the lower convex hull of the samples.

mod cache;

pub use cache::{curve_from_json, curve_to_json, CurveCache};

use crate::spin::{squeezing_ground_state, xbasis_moments, SpinError, SpinLength};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundaryError {
    #[error("operation requires integer spin, got 2J = {two_j}")]
    NonIntegerSpin { two_j: u32 },
    #[error("operation requires half-integer spin, got 2J = {two_j}")]
    NotHalfIntegerSpin { two_j: u32 },
    #[error("argument {x} outside the curve range [0, {max}]")]
    OutOfRange { x: f64, max: f64 },
    #[error("no (λ, λ₂) in the search box meets the constraint X = {x}")]
    ConstraintInfeasible { x: f64 },
    #[error("curve spin 2J = {curve} does not match group spin 2J = {expected}")]
    SpinMismatch { curve: u32, expected: u32 },
    #[error("group size k = {k} invalid for N = {n}")]
    InvalidGroupSize { k: u64, n: u64 },
    #[error("curve has too few samples: {got}")]
    TooFewSamples { got: usize },
    #[error(transparent)]
    Eigensolver(#[from] SpinError),
    #[error("curve cache I/O: {0}")]
    CacheIo(#[from] std::io::Error),
    #[error("curve cache format: {0}")]
    CacheFormat(#[from] serde_json::Error),
}

/// Which boundary function the curve samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    F,
    G,
}

impl std::fmt::Display for CurveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveKind::F => write!(f, "F"),
            CurveKind::G => write!(f, "G"),
        }
    }
}

/// How the curve was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveProvenance {
    IntegerSweep,
    HalfIntegerConstrained,
    Analytic,
}

/// One sampled point of a boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    /// Multiplier λ of the ground state that produced the point.
    pub lambda: f64,
    /// Curve argument: ⟨Lz⟩/J for F, (⟨Lz⟩/J)² for G.
    pub x: f64,
    /// Curve value ⟨Lx²⟩/J.
    pub value: f64,
    /// Analytic derivative: λ for F, λ/(2√X) for G.
    pub derivative: f64,
}

/// Sampled boundary function for one total spin J.
///
/// Every curve closes at the coherent endpoint (X, value) = (1, 1/2), which
/// holds exactly for all J; the evaluator uses it so that maximally
/// saturating records (e.g. Dicke data) stay in range.
#[derive(Debug, Clone)]
pub struct BoundaryCurve {
    pub j: SpinLength,
    pub kind: CurveKind,
    pub samples: Vec<CurveSample>,
    pub provenance: CurveProvenance,
    pub grid_hash: u64,
    /// Indices of the lower convex hull; equals 0..len when the samples are
    /// already convex (the expected case).
    hull: Vec<u32>,
    convex: bool,
}

/// Exact boundary value at full polarization, for every J and both kinds.
pub const COHERENT_ENDPOINT_VALUE: f64 = 0.5;

/// Tolerance on discrete convexity violations of sampled curves.
const CONVEXITY_TOL: f64 = 1e-9;

impl BoundaryCurve {
    /// Validate samples and prepare the evaluator.
    ///
    /// Samples must be sorted strictly increasing in X with X ∈ [0, 1],
    /// start at (0, 0) and be nondecreasing in value and derivative.
    pub fn new(
        j: SpinLength,
        kind: CurveKind,
        samples: Vec<CurveSample>,
        provenance: CurveProvenance,
        grid_hash: u64,
    ) -> Result<Self, BoundaryError> {
        if samples.len() < 2 {
            return Err(BoundaryError::TooFewSamples { got: samples.len() });
        }
        for s in &samples {
            if !(s.x.is_finite() && s.value.is_finite() && s.derivative.is_finite()) {
                return Err(BoundaryError::OutOfRange { x: s.x, max: 1.0 });
            }
        }
        let first = &samples[0];
        if first.x != 0.0 || first.value.abs() > 1e-10 {
            return Err(BoundaryError::OutOfRange {
                x: first.x,
                max: 0.0,
            });
        }
        for pair in samples.windows(2) {
            if pair[1].x <= pair[0].x || pair[1].x > 1.0 + 1e-12 {
                return Err(BoundaryError::OutOfRange {
                    x: pair[1].x,
                    max: 1.0,
                });
            }
        }
        // Tangent evaluation is sound only when the chord slopes bracket
        // the stored derivatives: dᵢ ≤ chord ≤ dᵢ₊₁ (mean value theorem on
        // a convex function). This also implies value and derivative
        // monotonicity.
        let convex = samples.windows(2).all(|p| {
            let chord = (p[1].value - p[0].value) / (p[1].x - p[0].x);
            let tol = CONVEXITY_TOL * (1.0 + p[1].derivative.abs().min(1e12));
            p[1].value + CONVEXITY_TOL >= p[0].value
                && p[1].derivative + tol >= p[0].derivative
                && chord + tol >= p[0].derivative
                && p[1].derivative + tol >= chord
        });
        let hull = if convex {
            (0..samples.len() as u32).collect()
        } else {
            lower_hull(&samples)
        };
        Ok(BoundaryCurve {
            j,
            kind,
            samples,
            provenance,
            grid_hash,
            hull,
            convex,
        })
    }

    /// Largest explicitly sampled X (the curve still evaluates up to 1).
    pub fn max_sampled_x(&self) -> f64 {
        self.samples.last().map(|s| s.x).unwrap_or(0.0)
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    /// Certified lower bound on the boundary function at `x` ∈ [0, 1].
    ///
    /// Inside the sampled range this is the supporting-tangent value from
    /// the bracketing samples (exact at the samples themselves); beyond the
    /// last sample the tangent is extended and at X = 1 the exact coherent
    /// endpoint 1/2 applies. Monotone nondecreasing in `x`.
    pub fn evaluate(&self, x: f64) -> Result<f64, BoundaryError> {
        let x = if x < 0.0 {
            if x < -1e-12 {
                return Err(BoundaryError::OutOfRange { x, max: 1.0 });
            }
            0.0
        } else if x > 1.0 {
            if x > 1.0 + 1e-9 {
                return Err(BoundaryError::OutOfRange { x, max: 1.0 });
            }
            1.0
        } else {
            x
        };

        if !self.convex {
            return Ok(self.evaluate_on_hull(x));
        }

        let samples = &self.samples;
        let last = samples.len() - 1;
        if x >= samples[last].x {
            let s = &samples[last];
            let mut bound = (s.value + s.derivative * (x - s.x)).max(s.value);
            if x == 1.0 {
                bound = bound.max(COHERENT_ENDPOINT_VALUE);
            }
            return Ok(bound.max(0.0));
        }
        let hi = samples.partition_point(|s| s.x <= x);
        let lo = hi - 1;
        let sl = &samples[lo];
        let sh = &samples[hi];
        let left = sl.value + sl.derivative * (x - sl.x);
        let right = sh.value + sh.derivative * (x - sh.x);
        Ok(left.max(right).max(sl.value).max(0.0))
    }

    /// Piecewise-linear value on the lower convex hull (fallback when the
    /// raw samples are not convex).
    fn evaluate_on_hull(&self, x: f64) -> f64 {
        let pts: Vec<&CurveSample> = self.hull.iter().map(|&i| &self.samples[i as usize]).collect();
        let last = pts.len() - 1;
        if x >= pts[last].x {
            let mut v = pts[last].value;
            if x == 1.0 {
                v = v.max(COHERENT_ENDPOINT_VALUE);
            }
            return v;
        }
        let hi = pts.partition_point(|s| s.x <= x);
        let lo = hi - 1;
        let (a, b) = (pts[lo], pts[hi]);
        let t = (x - a.x) / (b.x - a.x);
        (a.value + t * (b.value - a.value)).max(0.0)
    }
}

/// Indices of the lower convex hull of the sample points (monotone chain).
fn lower_hull(samples: &[CurveSample]) -> Vec<u32> {
    let mut hull: Vec<u32> = Vec::with_capacity(samples.len());
    for (i, s) in samples.iter().enumerate() {
        while hull.len() >= 2 {
            let a = &samples[hull[hull.len() - 2] as usize];
            let b = &samples[hull[hull.len() - 1] as usize];
            let cross = (b.x - a.x) * (s.value - a.value) - (s.x - a.x) * (b.value - a.value);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i as u32);
    }
    hull
}

/// Grid and refinement parameters for curve computation.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveConfig {
    /// Maximum gap between consecutive X samples of the F sweep.
    pub resolution: f64,
    /// Extend the λ sweep until the F-curve X reaches this.
    pub x_target: f64,
    /// Smallest positive seed λ.
    pub lambda_min: f64,
    /// Initial λ cap, as a multiple of max(J, 1).
    pub lambda_max_factor: f64,
    /// Geometric seed density.
    pub seed_points_per_decade: usize,
    /// Hard cap on the number of samples per curve.
    pub max_samples: usize,
}

impl Default for CurveConfig {
    fn default() -> Self {
        CurveConfig {
            resolution: 0.005,
            x_target: 0.999975,
            lambda_min: 1e-3,
            lambda_max_factor: 100.0,
            seed_points_per_decade: 16,
            max_samples: 100_000,
        }
    }
}

impl CurveConfig {
    /// Stable hash of the grid specification, used as the cache key.
    pub fn grid_hash(&self, two_j: u32, kind: CurveKind) -> u64 {
        let canon = format!(
            "v1|two_j={}|kind={}|res={:e}|xt={:e}|lmin={:e}|lfac={:e}|spd={}",
            two_j,
            kind,
            self.resolution,
            self.x_target,
            self.lambda_min,
            self.lambda_max_factor,
            self.seed_points_per_decade,
        );
        fnv1a(canon.as_bytes())
    }
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// One sampled ground state of H_λ, reduced to the curve coordinates.
fn sweep_point(j: SpinLength, lambda: f64) -> Result<(f64, f64), SpinError> {
    let g = squeezing_ground_state(j, lambda, 0.0)?;
    let m = xbasis_moments(&g.vector, j)?;
    let jv = j.value();
    Ok((m.mean[2] / jv, m.second[0][0] / jv))
}

/// Compute F_J for integer J by sweeping ground states of H_λ = Lx² − λLz.
///
/// The grid is seeded geometrically on [λ_min, factor·J], extended by
/// doubling until X reaches `x_target`, and bisected wherever consecutive
/// X gaps exceed `resolution`.
pub fn compute_f_curve(j: SpinLength, config: &CurveConfig) -> Result<BoundaryCurve, BoundaryError> {
    if !j.is_integer() {
        return Err(BoundaryError::NonIntegerSpin { two_j: j.two_j() });
    }

    // (λ, X, value), kept sorted by λ.
    let mut pts: Vec<(f64, f64, f64)> = Vec::new();
    let (x0, v0) = sweep_point(j, 0.0)?;
    pts.push((0.0, x0, v0));

    let lambda_cap = config.lambda_max_factor * j.value().max(1.0);
    let decades = (lambda_cap / config.lambda_min).log10().max(1.0);
    let n_seed = (decades * config.seed_points_per_decade as f64).ceil() as usize;
    let ratio = (lambda_cap / config.lambda_min).powf(1.0 / n_seed as f64);
    let mut lambda = config.lambda_min;
    for _ in 0..=n_seed {
        let (x, v) = sweep_point(j, lambda)?;
        pts.push((lambda, x, v));
        lambda *= ratio;
    }

    // Extend until the target polarization is reached.
    let mut lambda = lambda_cap;
    while pts.last().unwrap().1 < config.x_target && lambda < 1e9 * j.value().max(1.0) {
        lambda *= 2.0;
        let (x, v) = sweep_point(j, lambda)?;
        pts.push((lambda, x, v));
    }

    // Adaptive bisection on X gaps.
    loop {
        let mut inserts: Vec<f64> = Vec::new();
        for pair in pts.windows(2) {
            let (l0, x0, _) = pair[0];
            let (l1, x1, _) = pair[1];
            if x1 - x0 > config.resolution && x1 > config.resolution * 1e-6 {
                let mid = if l0 == 0.0 { l1 / 2.0 } else { (l0 * l1).sqrt() };
                if mid > l0 && mid < l1 {
                    inserts.push(mid);
                }
            }
        }
        if inserts.is_empty() || pts.len() + inserts.len() > config.max_samples {
            break;
        }
        for l in inserts {
            let (x, v) = sweep_point(j, l)?;
            pts.push((l, x, v));
        }
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }

    // Strictly increasing X; the map λ → X is monotone, so ties only occur
    // where the curve has saturated numerically.
    let mut samples: Vec<CurveSample> = Vec::with_capacity(pts.len());
    for (l, x, v) in pts {
        if let Some(prev) = samples.last() {
            if x <= prev.x + 1e-15 {
                continue;
            }
        }
        samples.push(CurveSample {
            lambda: l,
            x,
            value: v.max(0.0),
            derivative: l,
        });
    }

    BoundaryCurve::new(
        j,
        CurveKind::F,
        samples,
        CurveProvenance::IntegerSweep,
        config.grid_hash(j.two_j(), CurveKind::F),
    )
}

/// Transform an F curve into the G curve: X ↦ X², value unchanged,
/// derivative λ/(2X) with the analytic λ→0 limit 1/(2(J+1)) at X = 0.
pub fn g_from_f(curve: &BoundaryCurve) -> BoundaryCurve {
    assert_eq!(curve.kind, CurveKind::F, "g_from_f expects an F curve");
    let j = curve.j;
    let slope0 = 1.0 / (2.0 * (j.value() + 1.0));
    let samples: Vec<CurveSample> = curve
        .samples
        .iter()
        .map(|s| CurveSample {
            lambda: s.lambda,
            x: s.x * s.x,
            value: s.value,
            derivative: if s.x > 0.0 {
                s.derivative / (2.0 * s.x)
            } else {
                slope0
            },
        })
        .collect();
    BoundaryCurve::new(j, CurveKind::G, samples, curve.provenance, curve.grid_hash)
        .expect("G samples inherit validity from the F curve")
}

/// Analytic lower bound on G_J from angular-momentum uncertainty:
/// ½[(J+1) − JX − √((J+1−JX)² − X)].
///
/// Not tight for small J and small X (its slope at 0 is half of G'_J(0))
/// but tight for large J and X near 1; exact at X = 1 where it reaches 1/2.
pub fn tilde_g(j: SpinLength, x: f64) -> f64 {
    let jv = j.value();
    let a = jv + 1.0 - jv * x;
    let radicand = (a * a - x).max(0.0);
    0.5 * (a - radicand.sqrt())
}

/// Tangent to G_J at X = 0: G_J(X) ≥ X/(2(J+1)).
pub fn tangent_bound(j: SpinLength, x: f64) -> f64 {
    x / (2.0 * (j.value() + 1.0))
}

/// Result of the convexity diagnostics on a sampled curve.
#[derive(Debug, Clone, Serialize)]
pub struct ConvexityReport {
    pub two_j: u32,
    pub kind: CurveKind,
    /// Largest decrease between consecutive stored derivatives (0 for a
    /// perfectly collinear or convex sample set).
    pub max_derivative_decrease: f64,
    /// True iff the derivative sequence is monotone within tolerance.
    pub verdict: bool,
    pub alpha_probes: Vec<AlphaProbe>,
}

/// Convexity probe of F_J(X^{1/α}) by discrete chord slopes.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AlphaProbe {
    pub alpha: f64,
    pub convex: bool,
    /// Largest relative decrease between consecutive chord slopes.
    pub max_relative_slope_decrease: f64,
}

/// Relative tolerance for the α-probe slope comparisons.
const ALPHA_PROBE_TOL: f64 = 1e-8;

/// Verify derivative monotonicity of the curve and probe the convexity of
/// F_J(X^{1/α}) for each requested α.
pub fn convexity_check(curve: &BoundaryCurve, alphas: &[f64]) -> ConvexityReport {
    let mut max_dec: f64 = 0.0;
    for pair in curve.samples.windows(2) {
        max_dec = max_dec.max(pair[0].derivative - pair[1].derivative);
    }
    let verdict = max_dec <= CONVEXITY_TOL;

    let alpha_probes = alphas
        .iter()
        .map(|&alpha| {
            // Substituting Y = X^α into F (or Y = X^{α/2} into G = F∘√)
            // turns the probe into a convexity check of the sample set
            // (Y_i, value_i).
            let p = match curve.kind {
                CurveKind::F => alpha,
                CurveKind::G => alpha / 2.0,
            };
            let mut prev: Option<(f64, f64)> = None; // (slope, _)
            let mut max_rel_dec: f64 = 0.0;
            let mut last_point: Option<(f64, f64)> = None;
            for s in &curve.samples {
                let y = s.x.powf(p);
                if let Some((y0, v0)) = last_point {
                    let dy = y - y0;
                    if dy > 1e-13 {
                        let slope = (s.value - v0) / dy;
                        if let Some((s0, _)) = prev {
                            let denom = s0.abs().max(slope.abs()).max(1e-300);
                            max_rel_dec = max_rel_dec.max((s0 - slope) / denom);
                        }
                        prev = Some((slope, y));
                    }
                }
                last_point = Some((y, s.value));
            }
            AlphaProbe {
                alpha,
                convex: max_rel_dec <= ALPHA_PROBE_TOL,
                max_relative_slope_decrease: max_rel_dec,
            }
        })
        .collect();

    ConvexityReport {
        two_j: curve.j.two_j(),
        kind: curve.kind,
        max_derivative_decrease: max_dec,
        verdict,
        alpha_probes,
    }
}

/// One point of a k-producibility boundary in the measured plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub second_moment_perp: f64,
    pub var_jx: f64,
}

/// The k-producibility boundary of N spin-j particles in the
/// (⟨Jy²+Jz²⟩, (ΔJx)²) plane.
#[derive(Debug, Clone)]
pub struct ProducibilityBoundary {
    pub n: u64,
    pub j: SpinLength,
    pub k: u64,
    pub points: Vec<BoundaryPoint>,
}

/// Map a boundary curve for J = kj into the measured-quantity plane:
/// ⟨Jy²+Jz²⟩ = N(N−k)j²·X_G + Nj(kj+1) and (ΔJx)² = Nj·value.
pub fn producibility_boundary(
    n: u64,
    j: SpinLength,
    k: u64,
    curve: &BoundaryCurve,
) -> Result<ProducibilityBoundary, BoundaryError> {
    if k == 0 || k >= n {
        return Err(BoundaryError::InvalidGroupSize { k, n });
    }
    let group = j.times(k)?;
    if group != curve.j {
        return Err(BoundaryError::SpinMismatch {
            curve: curve.j.two_j(),
            expected: group.two_j(),
        });
    }
    let nf = n as f64;
    let jv = j.value();
    let nj = nf * jv;
    let offset = nj * (group.value() + 1.0);
    let scale = nf * (nf - k as f64) * jv * jv;
    let mut points: Vec<BoundaryPoint> = curve
        .samples
        .iter()
        .map(|s| {
            let x_g = match curve.kind {
                CurveKind::F => s.x * s.x,
                CurveKind::G => s.x,
            };
            BoundaryPoint {
                second_moment_perp: scale * x_g + offset,
                var_jx: nj * s.value,
            }
        })
        .collect();
    // Close with the coherent endpoint at full polarization.
    points.push(BoundaryPoint {
        second_moment_perp: scale + offset,
        var_jx: nj * COHERENT_ENDPOINT_VALUE,
    });
    points.dedup_by(|a, b| a.second_moment_perp == b.second_moment_perp);
    Ok(ProducibilityBoundary { n, j, k, points })
}

// ----------------------------------------------------------------------
// Half-integer J: two-parameter constrained minimization (H_{λ,λ₂}).
// ----------------------------------------------------------------------

const HALF_INT_CONSTRAINT_TOL: f64 = 1e-9;
const HALF_INT_LAMBDA2_SCAN: usize = 33;
const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// Inner solve: find λ so that the ground state of H_{λ,λ₂} has
/// ⟨Lz⟩/J = x. Returns the achieved (λ, X, (ΔLx)²) or None when the
/// constraint cannot be met for this λ₂.
fn constrained_point(
    j: SpinLength,
    lambda2: f64,
    x: f64,
) -> Result<Option<(f64, f64, f64)>, BoundaryError> {
    let var_at = |lambda: f64| -> Result<(f64, f64), BoundaryError> {
        let g = squeezing_ground_state(j, lambda, lambda2)?;
        let m = xbasis_moments(&g.vector, j)?;
        Ok((m.mean[2] / j.value(), m.var(0)))
    };
    let mut lo = 0.0;
    let (x_lo, _) = var_at(lo)?;
    if x_lo > x + HALF_INT_CONSTRAINT_TOL {
        return Ok(None);
    }
    let mut hi = j.value().max(1.0);
    let cap = 1e9 * j.value().max(1.0);
    let mut x_hi;
    loop {
        let (xh, _) = var_at(hi)?;
        x_hi = xh;
        if x_hi >= x || hi > cap {
            break;
        }
        hi *= 2.0;
    }
    if x_hi < x - HALF_INT_CONSTRAINT_TOL {
        return Ok(None);
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..120 {
        mid = 0.5 * (lo + hi);
        let (xm, _) = var_at(mid)?;
        if (xm - x).abs() <= HALF_INT_CONSTRAINT_TOL {
            break;
        }
        if xm < x {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi.max(1.0) {
            break;
        }
    }
    let (xm, var) = var_at(mid)?;
    if (xm - x).abs() > 100.0 * HALF_INT_CONSTRAINT_TOL {
        return Ok(None);
    }
    Ok(Some((mid, xm, var)))
}

/// F_J(X) for half-integer J: minimize (ΔLx)² over ground states of
/// H_{λ,λ₂} = Lx² − λLz − λ₂Lx subject to ⟨Lz⟩/J = X.
///
/// The outer search over λ₂ is a coarse geometric scan refined by
/// golden-section; the inner λ is solved by bisection on the constraint.
/// Returns the 1/J-normalized minimum.
pub fn compute_f_halfinteger(j: SpinLength, x: f64) -> Result<f64, BoundaryError> {
    if j.is_integer() {
        return Err(BoundaryError::NotHalfIntegerSpin { two_j: j.two_j() });
    }
    if !(0.0..1.0).contains(&x) {
        return Err(BoundaryError::OutOfRange { x, max: 1.0 });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let lambda2_max = 100.0 * j.value().max(1.0);
    let mut grid: Vec<f64> = vec![0.0];
    let lo = 1e-3;
    let ratio = (lambda2_max / lo).powf(1.0 / (HALF_INT_LAMBDA2_SCAN as f64 - 1.0));
    let mut l2 = lo;
    for _ in 0..HALF_INT_LAMBDA2_SCAN {
        grid.push(l2);
        l2 *= ratio;
    }

    let mut best: Option<(usize, f64)> = None;
    for (i, &l2) in grid.iter().enumerate() {
        let obj = match constrained_point(j, l2, x)? {
            Some((_, _, var)) => var,
            None => f64::INFINITY,
        };
        if best.is_none_or(|(_, b)| obj < b) {
            best = Some((i, obj));
        }
    }
    let (ibest, mut best_var) = best.ok_or(BoundaryError::ConstraintInfeasible { x })?;
    if !best_var.is_finite() {
        return Err(BoundaryError::ConstraintInfeasible { x });
    }

    // Golden-section refinement around the best scan point.
    let mut a = if ibest > 0 { grid[ibest - 1] } else { grid[0] };
    let mut b = if ibest + 1 < grid.len() {
        grid[ibest + 1]
    } else {
        grid[ibest]
    };
    if b > a {
        let eval = |l2: f64| -> Result<f64, BoundaryError> {
            Ok(match constrained_point(j, l2, x)? {
                Some((_, _, var)) => var,
                None => f64::INFINITY,
            })
        };
        let mut c = b - (b - a) / GOLDEN_RATIO;
        let mut d = a + (b - a) / GOLDEN_RATIO;
        let mut fc = eval(c)?;
        let mut fd = eval(d)?;
        for _ in 0..60 {
            if (b - a).abs() < 1e-10 * (1.0 + b.abs()) {
                break;
            }
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - (b - a) / GOLDEN_RATIO;
                fc = eval(c)?;
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + (b - a) / GOLDEN_RATIO;
                fd = eval(d)?;
            }
            best_var = best_var.min(fc.min(fd));
        }
    }

    Ok(best_var / j.value())
}

/// Sampled boundary curve for half-integer J from the two-parameter
/// minimization, on a uniform grid of the requested kind's argument.
///
/// Derivatives are backward-difference slopes, which underestimate the true
/// derivative of a convex function and so keep tangent evaluation sound.
fn compute_curve_halfinteger(
    j: SpinLength,
    kind: CurveKind,
    points: usize,
    x_max: f64,
) -> Result<BoundaryCurve, BoundaryError> {
    if j.is_integer() {
        return Err(BoundaryError::NotHalfIntegerSpin { two_j: j.two_j() });
    }
    let points = points.max(3);
    let mut samples = Vec::with_capacity(points);
    samples.push(CurveSample {
        lambda: 0.0,
        x: 0.0,
        value: 0.0,
        derivative: 0.0,
    });
    for i in 1..points {
        let x = x_max * (i as f64) / (points as f64 - 1.0);
        let x_f = match kind {
            CurveKind::F => x,
            CurveKind::G => x.sqrt(),
        };
        let value = compute_f_halfinteger(j, x_f)?;
        let prev = samples.last().unwrap();
        let slope = ((value - prev.value) / (x - prev.x)).max(prev.derivative);
        samples.push(CurveSample {
            lambda: f64::from(i as u32),
            x,
            value,
            derivative: slope,
        });
    }
    BoundaryCurve::new(
        j,
        kind,
        samples,
        CurveProvenance::HalfIntegerConstrained,
        fnv1a(format!("halfint|{}|{}|{}|{:e}", kind, j.two_j(), points, x_max).as_bytes()),
    )
}

/// Sampled G curve for half-integer J.
pub fn compute_g_curve_halfinteger(
    j: SpinLength,
    points: usize,
    x_max: f64,
) -> Result<BoundaryCurve, BoundaryError> {
    compute_curve_halfinteger(j, CurveKind::G, points, x_max)
}

/// Sampled F curve for half-integer J.
pub fn compute_f_curve_halfinteger(
    j: SpinLength,
    points: usize,
    x_max: f64,
) -> Result<BoundaryCurve, BoundaryError> {
    compute_curve_halfinteger(j, CurveKind::F, points, x_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn f1_closed(x: f64) -> f64 {
        0.5 * (1.0 - (1.0 - x * x).sqrt())
    }

    fn g1_closed(x: f64) -> f64 {
        0.5 * (1.0 - (1.0 - x).sqrt())
    }

    #[test]
    fn f1_matches_closed_form_at_samples() {
        let curve = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();
        assert_eq!(curve.samples[0].x, 0.0);
        assert_eq!(curve.samples[0].value, 0.0);
        for s in &curve.samples {
            assert_abs_diff_eq!(s.value, f1_closed(s.x), epsilon = 1e-9);
        }
        assert!(curve.max_sampled_x() >= 0.99997);
    }

    #[test]
    fn x_gaps_meet_resolution() {
        let cfg = CurveConfig::default();
        let curve = compute_f_curve(SpinLength::integer(3).unwrap(), &cfg).unwrap();
        for pair in curve.samples.windows(2) {
            assert!(pair[1].x - pair[0].x <= cfg.resolution + 1e-12);
        }
    }

    #[test]
    fn g_from_f_reproduces_g1_and_limit_slope() {
        let f = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        for s in &g.samples {
            assert_abs_diff_eq!(s.value, g1_closed(s.x), epsilon = 1e-9);
        }
        assert_abs_diff_eq!(g.samples[0].derivative, 0.25, epsilon = 1e-15);
        // derivative continuity: the first positive-λ sample is close to the limit
        assert_abs_diff_eq!(g.samples[1].derivative, 0.25, epsilon = 1e-3);
    }

    #[test]
    fn evaluate_is_a_lower_bound_near_quarter() {
        let f = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let v = g.evaluate(0.75).unwrap();
        let exact = g1_closed(0.75);
        assert!(v <= exact + 1e-12);
        assert_abs_diff_eq!(v, exact, epsilon = 1e-4);
        assert_eq!(g.evaluate(0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(g.evaluate(1.0).unwrap(), 0.5, epsilon = 1e-9);
        assert!(g.evaluate(1.1).is_err());
        assert!(g.evaluate(-0.1).is_err());
    }

    #[test]
    fn evaluate_monotone_and_sandwiched() {
        let f = compute_f_curve(SpinLength::integer(5).unwrap(), &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let mut prev = -1.0;
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            let v = g.evaluate(x).unwrap();
            assert!(v >= prev - 1e-12, "evaluate must be monotone");
            prev = v;
            assert!(v + 1e-9 >= tilde_g(g.j, x), "x={x}");
            assert!(v + 1e-9 >= tangent_bound(g.j, x), "x={x}");
        }
    }

    #[test]
    fn tilde_g_endpoints_and_slope() {
        for two_j in [2u32, 10, 19, 38] {
            let j = SpinLength::from_two_j(two_j).unwrap();
            assert_eq!(tilde_g(j, 0.0), 0.0);
            assert_abs_diff_eq!(tilde_g(j, 1.0), 0.5, epsilon = 1e-15);
            // small-X slope 1/(4(J+1))
            let h = 1e-9;
            let slope = tilde_g(j, h) / h;
            assert_abs_diff_eq!(slope, 1.0 / (4.0 * (j.value() + 1.0)), epsilon = 1e-5);
        }
    }

    #[test]
    fn tangent_bound_values() {
        assert_eq!(tangent_bound(SpinLength::ONE, 0.0), 0.0);
        assert_abs_diff_eq!(tangent_bound(SpinLength::ONE, 0.1), 0.025, epsilon = 1e-15);
    }

    #[test]
    fn collinear_curve_has_zero_derivative_decrease() {
        let samples = vec![
            CurveSample { lambda: 0.0, x: 0.0, value: 0.0, derivative: 0.1 },
            CurveSample { lambda: 1.0, x: 0.5, value: 0.05, derivative: 0.1 },
            CurveSample { lambda: 2.0, x: 1.0, value: 0.1, derivative: 0.1 },
        ];
        let curve = BoundaryCurve::new(
            SpinLength::ONE,
            CurveKind::G,
            samples,
            CurveProvenance::Analytic,
            0,
        )
        .unwrap();
        let report = convexity_check(&curve, &[]);
        assert_eq!(report.max_derivative_decrease, 0.0);
        assert!(report.verdict);
    }

    #[test]
    fn alpha_probe_flags_nonconvexity_above_two() {
        let f = compute_f_curve(SpinLength::integer(2).unwrap(), &CurveConfig::default()).unwrap();
        let report = convexity_check(&f, &[1.5, 2.0, 2.5, 3.0, 4.0]);
        assert!(report.verdict);
        let by_alpha: Vec<(f64, bool)> = report
            .alpha_probes
            .iter()
            .map(|p| (p.alpha, p.convex))
            .collect();
        assert_eq!(
            by_alpha,
            vec![(1.5, true), (2.0, true), (2.5, false), (3.0, false), (4.0, false)]
        );
    }

    #[test]
    fn nonconvex_samples_fall_back_to_hull() {
        let samples = vec![
            CurveSample { lambda: 0.0, x: 0.0, value: 0.0, derivative: 0.0 },
            CurveSample { lambda: 1.0, x: 0.5, value: 0.4, derivative: 0.0 },
            CurveSample { lambda: 2.0, x: 1.0, value: 0.5, derivative: 0.0 },
        ];
        let curve = BoundaryCurve::new(
            SpinLength::ONE,
            CurveKind::G,
            samples,
            CurveProvenance::Analytic,
            0,
        )
        .unwrap();
        assert!(!curve.is_convex());
        // hull skips the bulging middle point: chord from (0,0) to (1,0.5)
        assert_abs_diff_eq!(curve.evaluate(0.5).unwrap(), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn producibility_boundary_endpoints() {
        let j = SpinLength::HALF;
        let group = j.times(20).unwrap();
        let f = compute_f_curve(group, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let b = producibility_boundary(200, j, 20, &g).unwrap();
        // λ = 0 endpoint: (Nj(kj+1), 0)
        assert_abs_diff_eq!(b.points[0].second_moment_perp, 100.0 * 11.0, epsilon = 1e-9);
        assert_abs_diff_eq!(b.points[0].var_jx, 0.0, epsilon = 1e-9);
        // λ → ∞ endpoint: N(N−k)j² + Nj(kj+1) = 10100
        let last = b.points.last().unwrap();
        assert_abs_diff_eq!(last.second_moment_perp, 10100.0, epsilon = 1e-6);
        for pair in b.points.windows(2) {
            assert!(pair[1].second_moment_perp >= pair[0].second_moment_perp);
        }
        // spin mismatch is rejected
        assert!(producibility_boundary(200, j, 19, &g).is_err());
    }

    #[test]
    fn half_spin_f_is_x_squared_over_two() {
        // Bloch-sphere states give F_{1/2}(X) = X²/2 exactly.
        for x in [0.2, 0.5, 0.9] {
            let v = compute_f_halfinteger(SpinLength::HALF, x).unwrap();
            assert_abs_diff_eq!(v, x * x / 2.0, epsilon = 1e-7);
        }
        assert_eq!(compute_f_halfinteger(SpinLength::HALF, 0.0).unwrap(), 0.0);
        assert!(compute_f_halfinteger(SpinLength::ONE, 0.5).is_err());
        assert!(compute_f_halfinteger(SpinLength::HALF, 1.0).is_err());
    }
}
