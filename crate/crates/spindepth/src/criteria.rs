//! Entanglement-depth criteria on collective measurement records.
//!
//! A record holds the collective moments of an N-particle spin-j ensemble:
//! (ΔJx)², ⟨Jy⟩, ⟨Jz⟩ and ⟨Jy²+Jz²⟩. Each criterion compares the variance
//! against a bound parametrized by the group size k; a violation certifies
//! an entanglement depth of at least k+1.
//!
//! - `nonlinear_criterion`: (ΔJx)² ≥ Nj·G_J(X) with
//!   X = [⟨Jy²+Jz²⟩ − Nj(kj+1)] / [N(N−k)j²]; the workhorse for
//!   unpolarized states such as Dicke states.
//! - `sm_criterion`: (ΔJx)² ≥ Nj·F_J(|⟨J_⊥⟩|/Nj), the polarization-based
//!   bound; the y–z plane norm is used as the argument (rotation freedom
//!   about x).
//! - `xi2` / `xi2_sm`: linear spin-squeezing parameters, the tangents of
//!   the two bounds at their zero crossing; values below 1 violate.
//! - `duan_criterion` / `qubit_tangent_criterion`: qubit-only linear
//!   criteria; the latter is algebraically equivalent to ξ² at j = 1/2 and
//!   dominates the former.
//!
//! Verdicts carry a guard band of 1e-9 on the natural scale so that
//! interpolation noise can never masquerade as entanglement; equality at a
//! boundary therefore counts as *not* violated.

use crate::boundary::{tilde_g, CurveCache, BoundaryError, BoundaryCurve, CurveKind};
use crate::spin::{SpinError, SpinLength};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Verdict guard band, relative to the criterion's natural scale.
pub const VERDICT_GUARD: f64 = 1e-9;

/// Relative tolerance for record physicality checks.
const RECORD_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("particle number must be at least 1")]
    NonPositiveN,
    #[error("{which} is negative: {value}")]
    NegativeVariance { which: &'static str, value: f64 },
    #[error("second_moment_perp = {value} exceeds the physical maximum Nj(Nj+1) = {max}")]
    SecondMomentExceedsPhysical { value: f64, max: f64 },
    #[error("|<J>| = {value} exceeds the total spin Nj = {max}")]
    PolarizationExceedsSpin { value: f64, max: f64 },
    #[error("second_moment_perp = {smp} is below <Jy>² + <Jz>² = {pol2}")]
    SecondMomentBelowPolarization { smp: f64, pol2: f64 },
    #[error("var_Jy + var_Jz inconsistent with second_moment_perp (difference {diff})")]
    InconsistentVariances { diff: f64 },
    #[error(transparent)]
    Spin(#[from] SpinError),
}

/// Measured or simulated collective moments of an N-particle spin-j
/// ensemble, in dimensionless spin units.
///
/// `var_jy`/`var_jz` extend the record for the stronger-comparison
/// predicate; `mean_jx` refines pooled variances for fluctuating N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRecord", into = "RawRecord")]
pub struct MeasurementRecord {
    pub n: u64,
    pub j: SpinLength,
    pub var_jx: f64,
    pub mean_jy: f64,
    pub mean_jz: f64,
    pub second_moment_perp: f64,
    pub mean_jx: Option<f64>,
    pub var_jy: Option<f64>,
    pub var_jz: Option<f64>,
}

/// Wire format: JSON object or CSV row with the documented header names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub two_j: u32,
    #[serde(rename = "var_Jx")]
    pub var_jx: f64,
    #[serde(rename = "mean_Jx", default, skip_serializing_if = "Option::is_none")]
    pub mean_jx: Option<f64>,
    #[serde(rename = "mean_Jy")]
    pub mean_jy: f64,
    #[serde(rename = "mean_Jz")]
    pub mean_jz: f64,
    pub second_moment_perp: f64,
    #[serde(rename = "var_Jy", default, skip_serializing_if = "Option::is_none")]
    pub var_jy: Option<f64>,
    #[serde(rename = "var_Jz", default, skip_serializing_if = "Option::is_none")]
    pub var_jz: Option<f64>,
}

impl TryFrom<RawRecord> for MeasurementRecord {
    type Error = RecordError;

    fn try_from(raw: RawRecord) -> Result<Self, RecordError> {
        let j = SpinLength::from_two_j(raw.two_j)?;
        MeasurementRecord::new(
            raw.n,
            j,
            raw.var_jx,
            raw.mean_jy,
            raw.mean_jz,
            raw.second_moment_perp,
            raw.mean_jx,
            raw.var_jy,
            raw.var_jz,
        )
    }
}

impl From<MeasurementRecord> for RawRecord {
    fn from(rec: MeasurementRecord) -> RawRecord {
        RawRecord {
            n: rec.n,
            two_j: rec.j.two_j(),
            var_jx: rec.var_jx,
            mean_jx: rec.mean_jx,
            mean_jy: rec.mean_jy,
            mean_jz: rec.mean_jz,
            second_moment_perp: rec.second_moment_perp,
            var_jy: rec.var_jy,
            var_jz: rec.var_jz,
        }
    }
}

impl MeasurementRecord {
    /// Validate physicality and build a record.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: u64,
        j: SpinLength,
        var_jx: f64,
        mean_jy: f64,
        mean_jz: f64,
        second_moment_perp: f64,
        mean_jx: Option<f64>,
        var_jy: Option<f64>,
        var_jz: Option<f64>,
    ) -> Result<Self, RecordError> {
        if n == 0 {
            return Err(RecordError::NonPositiveN);
        }
        let nj = n as f64 * j.value();
        let scale = (nj * (nj + 1.0)).max(1.0);
        let tol = RECORD_TOL * scale;

        for (name, v) in [
            ("var_Jx", Some(var_jx)),
            ("var_Jy", var_jy),
            ("var_Jz", var_jz),
        ] {
            if let Some(v) = v {
                if v < -tol {
                    return Err(RecordError::NegativeVariance {
                        which: name,
                        value: v,
                    });
                }
            }
        }
        if second_moment_perp > nj * (nj + 1.0) + tol {
            return Err(RecordError::SecondMomentExceedsPhysical {
                value: second_moment_perp,
                max: nj * (nj + 1.0),
            });
        }
        let pol2 = mean_jy * mean_jy
            + mean_jz * mean_jz
            + mean_jx.map_or(0.0, |x| x * x);
        if pol2 > nj * nj + tol {
            return Err(RecordError::PolarizationExceedsSpin {
                value: pol2.sqrt(),
                max: nj,
            });
        }
        let pol2_perp = mean_jy * mean_jy + mean_jz * mean_jz;
        if second_moment_perp + tol < pol2_perp {
            return Err(RecordError::SecondMomentBelowPolarization {
                smp: second_moment_perp,
                pol2: pol2_perp,
            });
        }
        if let (Some(vy), Some(vz)) = (var_jy, var_jz) {
            let diff = (vy + vz + pol2_perp - second_moment_perp).abs();
            if diff > 1e-7 * scale {
                return Err(RecordError::InconsistentVariances { diff });
            }
        }
        Ok(MeasurementRecord {
            n,
            j,
            var_jx: var_jx.max(0.0),
            mean_jy,
            mean_jz,
            second_moment_perp: second_moment_perp.max(0.0),
            mean_jx,
            var_jy,
            var_jz,
        })
    }

    /// Total spin Nj.
    pub fn nj(&self) -> f64 {
        self.n as f64 * self.j.value()
    }

    /// Transverse polarization norm √(⟨Jy⟩² + ⟨Jz⟩²).
    pub fn polarization_perp(&self) -> f64 {
        polarization(self.mean_jy, self.mean_jz)
    }
}

pub(crate) fn polarization(mean_jy: f64, mean_jz: f64) -> f64 {
    (mean_jy * mean_jy + mean_jz * mean_jz).sqrt()
}

/// The fixed-N statistic W_N = [⟨Jy²+Jz²⟩ − Nj(kj+1)] / ((N−k)j); the
/// nonlinear-criterion argument is X = W_N/(Nj). Shared with the
/// fluctuating-N path so delta-distributed ensembles reduce bit-identically.
pub(crate) fn w_fixed(second_moment_perp: f64, n: u64, k: u64, j: SpinLength) -> f64 {
    let nf = n as f64;
    let jv = j.value();
    let kj = k as f64 * jv;
    (second_moment_perp - nf * jv * (kj + 1.0)) / ((nf - k as f64) * jv)
}

/// ξ² from a (possibly pooled) W statistic: (kj+1)·2·(ΔJx)²/W.
pub(crate) fn xi2_from_w(var_jx: f64, w: f64, kj: f64) -> f64 {
    (kj + 1.0) * 2.0 * var_jx / w
}

/// ξ²_SM = (kj+1)·2Nj·(ΔJx)²/(⟨Jy⟩²+⟨Jz⟩²), with N possibly ⟨N⟩.
pub(crate) fn xi2_sm_value(var_jx: f64, pol2: f64, n_f: f64, jv: f64, kj: f64) -> f64 {
    (kj + 1.0) * 2.0 * (n_f * jv) * var_jx / pol2
}

#[derive(Debug, Error)]
pub enum CriterionError {
    #[error("curve spin 2J = {curve} does not match k·j = {expected}/2")]
    SpinMismatch { curve: u32, expected: u32 },
    #[error("group size k = {k} out of range for N = {n}")]
    InvalidGroupSize { k: u64, n: u64 },
    #[error("kj = {two_kj}/2 is not an integer")]
    NonIntegerGroupSpin { two_kj: u64 },
    #[error("criterion not applicable: {reason}")]
    NotApplicable { reason: &'static str },
    #[error("criterion requires spin-1/2 particles, got 2j = {two_j}")]
    NotQubit { two_j: u32 },
    #[error("record lacks fields required by this criterion: {fields}")]
    MissingFields { fields: &'static str },
    #[error("criterion argument X = {x} exceeds the physical range")]
    OutOfRange { x: f64 },
    #[error("verdicts not monotone in k (violated at k = {k_high} but not k = {k_low})")]
    NonMonotoneVerdicts { k_low: u64, k_high: u64 },
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error(transparent)]
    Record(#[from] RecordError),
}

/// Identifier of a depth criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionId {
    Nonlinear,
    SorensenMolmer,
    Xi2,
    Xi2Sm,
    Duan,
    QubitTangent,
}

impl std::fmt::Display for CriterionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CriterionId::Nonlinear => "nonlinear",
            CriterionId::SorensenMolmer => "sorensen_molmer",
            CriterionId::Xi2 => "xi2",
            CriterionId::Xi2Sm => "xi2_sm",
            CriterionId::Duan => "duan",
            CriterionId::QubitTangent => "qubit_tangent",
        };
        write!(f, "{s}")
    }
}

/// Verdict of one criterion at one producibility level k.
///
/// For variance-form criteria `lhs`/`rhs` are the two sides of the variance
/// inequality and `margin` = rhs − lhs − guard; for parameter-form criteria
/// `lhs` is the squeezing parameter, `rhs` = 1 and `margin` = 1 − ξ² − guard.
/// `margin > 0 ⇔ violated` by construction.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub criterion: CriterionId,
    pub k: u64,
    pub applicable: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub violated: bool,
}

fn variance_result(
    criterion: CriterionId,
    k: u64,
    lhs: f64,
    rhs: f64,
    scale: f64,
) -> CriterionResult {
    let margin = rhs - lhs - VERDICT_GUARD * scale;
    CriterionResult {
        criterion,
        k,
        applicable: true,
        lhs,
        rhs,
        margin,
        violated: margin > 0.0,
    }
}

fn inapplicable_result(criterion: CriterionId, k: u64, lhs: f64) -> CriterionResult {
    CriterionResult {
        criterion,
        k,
        applicable: false,
        lhs,
        rhs: f64::NAN,
        margin: 0.0,
        violated: false,
    }
}

fn parameter_result(criterion: CriterionId, k: u64, xi2: f64) -> CriterionResult {
    let margin = 1.0 - xi2 - VERDICT_GUARD;
    CriterionResult {
        criterion,
        k,
        applicable: true,
        lhs: xi2,
        rhs: 1.0,
        margin,
        violated: margin > 0.0,
    }
}

fn check_k(rec: &MeasurementRecord, k: u64) -> Result<(), CriterionError> {
    if k == 0 || k >= rec.n {
        return Err(CriterionError::InvalidGroupSize { k, n: rec.n });
    }
    Ok(())
}

fn check_curve(
    rec: &MeasurementRecord,
    k: u64,
    curve: &BoundaryCurve,
    kind: CurveKind,
) -> Result<SpinLength, CriterionError> {
    let group = rec.j.times(k).map_err(RecordError::Spin)?;
    if curve.j != group || curve.kind != kind {
        return Err(CriterionError::SpinMismatch {
            curve: curve.j.two_j(),
            expected: group.two_j(),
        });
    }
    Ok(group)
}

/// The nonlinear argument X for level k, from the W-form.
pub fn nonlinear_argument(rec: &MeasurementRecord, k: u64) -> f64 {
    w_fixed(rec.second_moment_perp, rec.n, k, rec.j) / rec.nj()
}

/// Nonlinear criterion: (ΔJx)² ≥ Nj·G_J(X), applicable when
/// ⟨Jy²+Jz²⟩ ≥ Nj(kj+1); otherwise a k-producible state with zero variance
/// exists and the result is marked inapplicable.
pub fn nonlinear_criterion(
    rec: &MeasurementRecord,
    k: u64,
    curve: &BoundaryCurve,
) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    check_curve(rec, k, curve, CurveKind::G)?;
    let x = nonlinear_argument(rec, k);
    if x < 0.0 {
        return Ok(inapplicable_result(CriterionId::Nonlinear, k, rec.var_jx));
    }
    if x > 1.0 + 1e-9 {
        return Err(CriterionError::OutOfRange { x });
    }
    let rhs = rec.nj() * curve.evaluate(x.min(1.0))?;
    Ok(variance_result(
        CriterionId::Nonlinear,
        k,
        rec.var_jx,
        rhs,
        rec.nj(),
    ))
}

/// Nonlinear criterion with the analytic lower bound tilde-G in place of
/// the numeric curve. Valid for any J (integer or not), just weaker; used
/// for odd k at half-integer j where no integer-spin curve exists.
pub fn nonlinear_tilde_criterion(
    rec: &MeasurementRecord,
    k: u64,
) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    let group = rec.j.times(k).map_err(RecordError::Spin)?;
    let x = nonlinear_argument(rec, k);
    if x < 0.0 {
        return Ok(inapplicable_result(CriterionId::Nonlinear, k, rec.var_jx));
    }
    if x > 1.0 + 1e-9 {
        return Err(CriterionError::OutOfRange { x });
    }
    let rhs = rec.nj() * tilde_g(group, x.min(1.0));
    Ok(variance_result(
        CriterionId::Nonlinear,
        k,
        rec.var_jx,
        rhs,
        rec.nj(),
    ))
}

/// Sørensen–Mølmer criterion: (ΔJx)² ≥ Nj·F_J(|⟨J_⊥⟩|/Nj).
pub fn sm_criterion(
    rec: &MeasurementRecord,
    k: u64,
    curve: &BoundaryCurve,
) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    check_curve(rec, k, curve, CurveKind::F)?;
    let x = (rec.polarization_perp() / rec.nj()).min(1.0);
    let rhs = rec.nj() * curve.evaluate(x)?;
    Ok(variance_result(
        CriterionId::SorensenMolmer,
        k,
        rec.var_jx,
        rhs,
        rec.nj(),
    ))
}

/// Sørensen–Mølmer criterion with the analytic bound F_J(x) ≥ tilde-G_J(x²).
pub fn sm_tilde_criterion(
    rec: &MeasurementRecord,
    k: u64,
) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    let group = rec.j.times(k).map_err(RecordError::Spin)?;
    let x = (rec.polarization_perp() / rec.nj()).min(1.0);
    let rhs = rec.nj() * tilde_g(group, x * x);
    Ok(variance_result(
        CriterionId::SorensenMolmer,
        k,
        rec.var_jx,
        rhs,
        rec.nj(),
    ))
}

fn require_integer_kj(rec: &MeasurementRecord, k: u64) -> Result<f64, CriterionError> {
    let two_kj = k * u64::from(rec.j.two_j());
    if !two_kj.is_multiple_of(2) {
        return Err(CriterionError::NonIntegerGroupSpin { two_kj });
    }
    Ok(two_kj as f64 / 2.0)
}

/// Linear parameter ξ² = (kj+1)·2(N−k)j·(ΔJx)² / [⟨Jy²+Jz²⟩ − Nj(kj+1)];
/// requires integer kj and a positive denominator.
pub fn xi2(rec: &MeasurementRecord, k: u64) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    let kj = require_integer_kj(rec, k)?;
    let w = w_fixed(rec.second_moment_perp, rec.n, k, rec.j);
    if w <= 0.0 {
        return Err(CriterionError::NotApplicable {
            reason: "second moment does not exceed Nj(kj+1)",
        });
    }
    Ok(parameter_result(
        CriterionId::Xi2,
        k,
        xi2_from_w(rec.var_jx, w, kj),
    ))
}

/// Linear parameter ξ²_SM = (kj+1)·2Nj·(ΔJx)² / (⟨Jy⟩²+⟨Jz⟩²); requires
/// integer kj and nonzero transverse polarization.
pub fn xi2_sm(rec: &MeasurementRecord, k: u64) -> Result<CriterionResult, CriterionError> {
    check_k(rec, k)?;
    let kj = require_integer_kj(rec, k)?;
    let pol2 = rec.mean_jy * rec.mean_jy + rec.mean_jz * rec.mean_jz;
    if pol2 <= 0.0 {
        return Err(CriterionError::NotApplicable {
            reason: "zero transverse polarization",
        });
    }
    Ok(parameter_result(
        CriterionId::Xi2Sm,
        k,
        xi2_sm_value(rec.var_jx, pol2, rec.n as f64, rec.j.value(), kj),
    ))
}

/// Scale for the qubit linear criteria, whose sides live on the ⟨Jy²+Jz²⟩
/// scale. Shared by `duan_criterion` and `qubit_tangent_criterion` so the
/// dominance implication survives the guard band.
fn qubit_scale(rec: &MeasurementRecord) -> f64 {
    let nj = rec.nj();
    nj * (nj + 1.0)
}

fn require_qubit(rec: &MeasurementRecord) -> Result<(), CriterionError> {
    if rec.j != SpinLength::HALF {
        return Err(CriterionError::NotQubit {
            two_j: rec.j.two_j(),
        });
    }
    Ok(())
}

/// Duan's linear criterion for qubits:
/// N(k+2)·(ΔJx)² ≥ ⟨Jy²+Jz²⟩ − (N/4)(k+2).
pub fn duan_criterion(
    rec: &MeasurementRecord,
    k: u64,
) -> Result<CriterionResult, CriterionError> {
    require_qubit(rec)?;
    check_k(rec, k)?;
    let nf = rec.n as f64;
    let kf = k as f64;
    let lhs = nf * (kf + 2.0) * rec.var_jx;
    let rhs = rec.second_moment_perp - nf / 4.0 * (kf + 2.0);
    Ok(variance_result(
        CriterionId::Duan,
        k,
        lhs,
        rhs,
        qubit_scale(rec),
    ))
}

/// ξ² specialized to qubits, as a variance inequality:
/// [(N−k)/2](k+2)·(ΔJx)² ≥ ⟨Jy²+Jz²⟩ − (N/4)(k+2).
///
/// Dominates Duan's criterion: the left-hand side is smaller, so every
/// Duan violation is also a violation here.
pub fn qubit_tangent_criterion(
    rec: &MeasurementRecord,
    k: u64,
) -> Result<CriterionResult, CriterionError> {
    require_qubit(rec)?;
    check_k(rec, k)?;
    let nf = rec.n as f64;
    let kf = k as f64;
    let lhs = (nf - kf) / 2.0 * (kf + 2.0) * rec.var_jx;
    let rhs = rec.second_moment_perp - nf / 4.0 * (kf + 2.0);
    Ok(variance_result(
        CriterionId::QubitTangent,
        k,
        lhs,
        rhs,
        qubit_scale(rec),
    ))
}

/// Predicate of the stronger-comparison observation: when
/// [(ΔJy)²+(ΔJz)²]/Nj > kj(1 − (⟨Jy⟩²+⟨Jz⟩²)/N²j²) + 1 holds, the
/// nonlinear criterion is strictly stronger than the Sørensen–Mølmer one.
/// Needs the record extended with var_Jy and var_Jz.
pub fn observation3_predicate(
    rec: &MeasurementRecord,
    k: u64,
) -> Result<bool, CriterionError> {
    check_k(rec, k)?;
    let (vy, vz) = match (rec.var_jy, rec.var_jz) {
        (Some(vy), Some(vz)) => (vy, vz),
        _ => {
            return Err(CriterionError::MissingFields {
                fields: "var_Jy, var_Jz",
            })
        }
    };
    let nj = rec.nj();
    let kj = k as f64 * rec.j.value();
    let pol2 = rec.mean_jy * rec.mean_jy + rec.mean_jz * rec.mean_jz;
    let lhs = (vy + vz) / nj;
    let rhs = kj * (1.0 - pol2 / (nj * nj)) + 1.0;
    Ok(lhs > rhs)
}

/// Controls for the depth search.
#[derive(Debug, Clone, Default)]
pub struct DepthOptions {
    /// Evaluate odd k at half-integer j with numerically computed
    /// half-integer curves instead of the analytic tilde-G bound.
    pub half_integer_curves: bool,
    /// Evaluate every admissible k instead of bisecting; also enables the
    /// monotone-consistency assertion for the curve criteria.
    pub linear_scan: bool,
    /// Cap on the scanned k (defaults to N−1).
    pub max_k: Option<u64>,
}

/// Outcome of a depth search: the largest violated k and the certified
/// depth k+1 (1 when nothing is violated), with the per-k results that
/// were actually evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct DepthVerdict {
    pub max_k_violated: Option<u64>,
    pub certified_depth: u64,
    pub results: Vec<CriterionResult>,
}

/// Convenient alias: the curve provider used by the depth search.
pub type CurveProvider = CurveCache;

/// Generic depth scan over group sizes.
///
/// `eval_tight` is the trusted, monotone family (integer kj); it is
/// bisected unless `linear_scan` is set. `eval_loose` covers odd k at
/// half-integer j via a certified weaker bound; by curve nesting it can
/// only extend the depth by one past the last tight violation.
pub(crate) fn depth_scan(
    n: u64,
    two_j: u32,
    opts: &DepthOptions,
    bisect_tight: bool,
    mut eval_tight: impl FnMut(u64) -> Result<Option<CriterionResult>, CriterionError>,
    mut eval_loose: impl FnMut(u64) -> Result<Option<CriterionResult>, CriterionError>,
) -> Result<DepthVerdict, CriterionError> {
    let k_max = opts.max_k.unwrap_or(n.saturating_sub(1)).min(n.saturating_sub(1));
    let mut results: BTreeMap<u64, CriterionResult> = BTreeMap::new();
    let tight_ks: Vec<u64> = (1..=k_max)
        .filter(|k| (k * u64::from(two_j)).is_multiple_of(2))
        .collect();
    let has_loose = !two_j.is_multiple_of(2);

    let mut max_violated: Option<u64> = None;
    if !tight_ks.is_empty() {
        if opts.linear_scan || !bisect_tight {
            let mut first_not_violated: Option<u64> = None;
            for &k in &tight_ks {
                if let Some(res) = eval_tight(k)? {
                    let violated = res.violated;
                    results.insert(k, res);
                    if violated {
                        if bisect_tight {
                            if let Some(k_low) = first_not_violated {
                                return Err(CriterionError::NonMonotoneVerdicts {
                                    k_low,
                                    k_high: k,
                                });
                            }
                        }
                        max_violated = Some(k);
                    } else if first_not_violated.is_none() {
                        first_not_violated = Some(k);
                    }
                }
            }
        } else {
            // Prefix-true bisection: find the last violated k.
            let mut check = |k: u64, results: &mut BTreeMap<u64, CriterionResult>| -> Result<bool, CriterionError> {
                match eval_tight(k)? {
                    Some(res) => {
                        let violated = res.violated;
                        results.insert(k, res);
                        Ok(violated)
                    }
                    None => Ok(false),
                }
            };
            if check(tight_ks[0], &mut results)? {
                let (mut lo, mut hi) = (0usize, tight_ks.len() - 1);
                if check(tight_ks[hi], &mut results)? {
                    lo = hi;
                }
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    if check(tight_ks[mid], &mut results)? {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                max_violated = Some(tight_ks[lo]);
            }
        }
    }

    if has_loose {
        // The next odd k past the tight result is the only candidate that
        // can extend the depth (a loose violation at k implies a tight
        // violation at k−1).
        let candidate = match max_violated {
            Some(k) => k + 1,
            None => 1,
        };
        if candidate <= k_max && !(candidate * u64::from(two_j)).is_multiple_of(2) {
            if let Some(res) = eval_loose(candidate)? {
                let violated = res.violated;
                results.insert(candidate, res);
                if violated {
                    max_violated = Some(candidate);
                }
            }
        }
    }

    Ok(DepthVerdict {
        max_k_violated: max_violated,
        certified_depth: max_violated.map_or(1, |k| k + 1),
        results: results.into_values().collect(),
    })
}

/// Scan k for the largest violated level and certify depth = k+1.
///
/// Admissible k have integer kj; at half-integer j the remaining odd k are
/// screened with the analytic tilde-G bound (or, when
/// `half_integer_curves` is set, with numerically computed half-integer
/// curves). The curve-based criteria use monotone bisection; the linear
/// parameter criteria are scanned exhaustively since their formulas are
/// cheap and their verdicts need not be monotone in k.
pub fn detect_depth(
    rec: &MeasurementRecord,
    id: CriterionId,
    curves: &CurveProvider,
    opts: &DepthOptions,
) -> Result<DepthVerdict, CriterionError> {
    let n = rec.n;
    let two_j = rec.j.two_j();
    match id {
        CriterionId::Nonlinear => depth_scan(
            n,
            two_j,
            opts,
            true,
            |k| {
                let curve = curves.get_g(rec.j.times(k).map_err(RecordError::Spin)?)?;
                nonlinear_criterion(rec, k, &curve).map(Some)
            },
            |k| {
                if opts.half_integer_curves {
                    let curve =
                        curves.get_g_halfinteger(rec.j.times(k).map_err(RecordError::Spin)?)?;
                    nonlinear_criterion(rec, k, &curve).map(Some)
                } else {
                    nonlinear_tilde_criterion(rec, k).map(Some)
                }
            },
        ),
        CriterionId::SorensenMolmer => depth_scan(
            n,
            two_j,
            opts,
            true,
            |k| {
                let curve = curves.get_f(rec.j.times(k).map_err(RecordError::Spin)?)?;
                sm_criterion(rec, k, &curve).map(Some)
            },
            |k| {
                if opts.half_integer_curves {
                    let curve =
                        curves.get_f_halfinteger(rec.j.times(k).map_err(RecordError::Spin)?)?;
                    sm_criterion(rec, k, &curve).map(Some)
                } else {
                    sm_tilde_criterion(rec, k).map(Some)
                }
            },
        ),
        CriterionId::Xi2 => depth_scan(
            n,
            two_j,
            opts,
            false,
            |k| match xi2(rec, k) {
                Ok(res) => Ok(Some(res)),
                Err(CriterionError::NotApplicable { .. }) => {
                    Ok(Some(inapplicable_result(CriterionId::Xi2, k, f64::NAN)))
                }
                Err(e) => Err(e),
            },
            |_| Ok(None),
        ),
        CriterionId::Xi2Sm => depth_scan(
            n,
            two_j,
            opts,
            false,
            |k| match xi2_sm(rec, k) {
                Ok(res) => Ok(Some(res)),
                Err(CriterionError::NotApplicable { .. }) => {
                    Ok(Some(inapplicable_result(CriterionId::Xi2Sm, k, f64::NAN)))
                }
                Err(e) => Err(e),
            },
            |_| Ok(None),
        ),
        CriterionId::Duan | CriterionId::QubitTangent => {
            require_qubit(rec)?;
            // Qubit criteria are defined for every k; scan them all.
            let k_max = opts.max_k.unwrap_or(n - 1).min(n - 1);
            let mut results = Vec::new();
            let mut max_violated = None;
            for k in 1..=k_max {
                let res = match id {
                    CriterionId::Duan => duan_criterion(rec, k)?,
                    _ => qubit_tangent_criterion(rec, k)?,
                };
                if res.violated {
                    max_violated = Some(k);
                }
                results.push(res);
            }
            Ok(DepthVerdict {
                max_k_violated: max_violated,
                certified_depth: max_violated.map_or(1, |k| k + 1),
                results,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{compute_f_curve, g_from_f, CurveConfig};
    use approx::assert_abs_diff_eq;

    fn dicke(n: u64, j: SpinLength) -> MeasurementRecord {
        let nj = n as f64 * j.value();
        MeasurementRecord::new(
            n,
            j,
            0.0,
            0.0,
            0.0,
            nj * (nj + 1.0),
            Some(0.0),
            Some(nj * (nj + 1.0) / 2.0),
            Some(nj * (nj + 1.0) / 2.0),
        )
        .unwrap()
    }

    /// Fully z-polarized product state: var_Jx = Nj/2,
    /// ⟨Jy²+Jz²⟩ = Nj(Nj+1/2).
    fn coherent_z(n: u64, j: SpinLength) -> MeasurementRecord {
        let nj = n as f64 * j.value();
        MeasurementRecord::new(
            n,
            j,
            nj / 2.0,
            0.0,
            nj,
            nj * (nj + 0.5),
            Some(0.0),
            Some(nj / 2.0),
            Some(0.0),
        )
        .unwrap()
    }

    /// Mixture of the Dicke state with white noise, from the closed-form
    /// moments (kept local so these tests do not depend on the generators).
    fn noisy_dicke(n: u64, j: SpinLength, p: f64) -> MeasurementRecord {
        let nf = n as f64;
        let jv = j.value();
        let nj = nf * jv;
        let jx2 = p * nf * jv * (jv + 1.0) / 3.0;
        let smp = (1.0 - p) * nj * (nj + 1.0) + p * 2.0 * nf * jv * (jv + 1.0) / 3.0;
        MeasurementRecord::new(n, j, jx2, 0.0, 0.0, smp, Some(0.0), None, None).unwrap()
    }

    #[test]
    fn record_physicality_is_enforced() {
        let j = SpinLength::HALF;
        assert!(MeasurementRecord::new(0, j, 0.0, 0.0, 0.0, 0.0, None, None, None).is_err());
        // variance below zero
        assert!(
            MeasurementRecord::new(4, j, -0.5, 0.0, 0.0, 3.0, None, None, None).is_err()
        );
        // second moment above Nj(Nj+1)
        assert!(MeasurementRecord::new(4, j, 0.0, 0.0, 0.0, 7.0, None, None, None).is_err());
        // polarization above Nj
        assert!(MeasurementRecord::new(4, j, 0.1, 0.0, 3.0, 6.0, None, None, None).is_err());
        // second moment below polarization square
        assert!(MeasurementRecord::new(4, j, 0.1, 0.0, 1.9, 3.0, None, None, None).is_err());
    }

    #[test]
    fn record_json_round_trip() {
        let rec = dicke(6, SpinLength::HALF);
        let text = serde_json::to_string(&rec).unwrap();
        assert!(text.contains("\"N\":6"));
        assert!(text.contains("\"second_moment_perp\""));
        let back: MeasurementRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        // an unphysical payload fails to deserialize
        let bad = r#"{"N":4,"two_j":1,"var_Jx":0.0,"mean_Jy":0.0,"mean_Jz":0.0,"second_moment_perp":99.0}"#;
        assert!(serde_json::from_str::<MeasurementRecord>(bad).is_err());
    }

    #[test]
    fn nonlinear_detects_dicke_and_respects_boundary_endpoint() {
        let j = SpinLength::ONE;
        let n = 6u64;
        let f = compute_f_curve(j.times(5).unwrap(), &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let rec = dicke(n, j);
        let res = nonlinear_criterion(&rec, 5, &g).unwrap();
        assert!(res.applicable);
        assert!(res.violated);
        assert_abs_diff_eq!(res.rhs, rec.nj() * 0.5, epsilon = 1e-9);

        // record exactly at the applicability edge: X = 0, rhs = 0, no verdict
        let nj = rec.nj();
        let kj = 5.0 * j.value();
        let edge = MeasurementRecord::new(n, j, 0.0, 0.0, 0.0, nj * (kj + 1.0), None, None, None)
            .unwrap();
        let res = nonlinear_criterion(&edge, 5, &g).unwrap();
        assert!(res.applicable);
        assert_abs_diff_eq!(res.rhs, 0.0, epsilon = 1e-12);
        assert!(!res.violated);

        // below the edge: inapplicable
        let below =
            MeasurementRecord::new(n, j, 0.0, 0.0, 0.0, nj * (kj + 1.0) - 1.0, None, None, None)
                .unwrap();
        let res = nonlinear_criterion(&below, 5, &g).unwrap();
        assert!(!res.applicable);
        assert!(!res.violated);

        // curve for the wrong J is rejected
        assert!(matches!(
            nonlinear_criterion(&rec, 4, &g),
            Err(CriterionError::SpinMismatch { .. })
        ));
    }

    #[test]
    fn sm_criterion_on_polarized_and_unpolarized_records() {
        let j = SpinLength::HALF;
        let n = 10u64;
        let f = compute_f_curve(j.times(2).unwrap(), &CurveConfig::default()).unwrap();

        // coherent record sits exactly on the bound: X = 1, rhs = Nj/2
        let rec = coherent_z(n, j);
        let res = sm_criterion(&rec, 2, &f).unwrap();
        assert_abs_diff_eq!(res.rhs, rec.nj() / 2.0, epsilon = 1e-6);
        assert!(!res.violated);

        // unpolarized record: X = 0, rhs = 0, never violated
        let rec = dicke(n, j);
        let res = sm_criterion(&rec, 2, &f).unwrap();
        assert_eq!(res.rhs, 0.0);
        assert!(!res.violated);
    }

    #[test]
    fn xi2_dicke_is_maximally_violated() {
        let rec = dicke(100, SpinLength::HALF);
        for k in [2u64, 10, 50, 98] {
            let res = xi2(&rec, k).unwrap();
            assert_eq!(res.lhs, 0.0);
            assert!(res.violated);
        }
    }

    #[test]
    fn xi2_noisy_dicke_threshold_is_one_over_28() {
        // Threshold formula: p* = 3(N−k)j / [2j(j+1)(kj+1)(N−k) − 2(j+1) + 3(Nj+1)],
        // evaluated at (N=100, j=1/2, k=50) this is 75/2100 = 1/28.
        let j = SpinLength::HALF;
        let p_star = 1.0 / 28.0;
        let res = xi2(&noisy_dicke(100, j, p_star), 50).unwrap();
        assert_abs_diff_eq!(res.lhs, 1.0, epsilon = 1e-10);
        assert!(!res.violated);
        assert!(xi2(&noisy_dicke(100, j, p_star - 1e-9), 50).unwrap().violated);
        assert!(!xi2(&noisy_dicke(100, j, p_star + 1e-9), 50).unwrap().violated);
    }

    #[test]
    fn xi2_sm_values_on_reference_records() {
        // coherent: ξ²_SM = kj+1 ≥ 1
        let j = SpinLength::HALF;
        let rec = coherent_z(12, j);
        for k in [2u64, 4, 8] {
            let res = xi2_sm(&rec, k).unwrap();
            assert_abs_diff_eq!(res.lhs, k as f64 * j.value() + 1.0, epsilon = 1e-12);
            assert!(!res.violated);
        }
        // kj must be integer: k = 1 at j = 1/2 is rejected
        assert!(matches!(
            xi2_sm(&rec, 1),
            Err(CriterionError::NonIntegerGroupSpin { two_kj: 1 })
        ));
        // Dicke: zero polarization means not applicable
        assert!(matches!(
            xi2_sm(&dicke(12, j), 2),
            Err(CriterionError::NotApplicable { .. })
        ));
    }

    #[test]
    fn duan_dicke_violated_for_all_k() {
        let n = 20u64;
        let rec = dicke(n, SpinLength::HALF);
        for k in 1..n {
            let res = duan_criterion(&rec, k).unwrap();
            assert_eq!(res.lhs, 0.0);
            // rhs = (N/4)(N−k) > 0
            assert_abs_diff_eq!(res.rhs, n as f64 / 4.0 * (n - k) as f64, epsilon = 1e-9);
            assert!(res.violated);
        }
        assert!(matches!(
            duan_criterion(&dicke(4, SpinLength::ONE), 2),
            Err(CriterionError::NotQubit { .. })
        ));
    }

    #[test]
    fn qubit_tangent_matches_xi2_and_dominates_duan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let j = SpinLength::HALF;
        let mut checked = 0;
        while checked < 1000 {
            let n = rng.gen_range(3u64..60);
            let nj = n as f64 * 0.5;
            let smp = rng.gen_range(0.0..nj * (nj + 1.0));
            let my = rng.gen_range(-nj..nj);
            let mz = rng.gen_range(-nj..nj);
            if my * my + mz * mz > smp.min(nj * nj) {
                continue;
            }
            let var = rng.gen_range(0.0..nj);
            let rec = match MeasurementRecord::new(n, j, var, my, mz, smp, None, None, None) {
                Ok(rec) => rec,
                Err(_) => continue,
            };
            let k = rng.gen_range(1..n);
            let qt = qubit_tangent_criterion(&rec, k).unwrap();
            let duan = duan_criterion(&rec, k).unwrap();
            if duan.violated {
                assert!(qt.violated, "Duan violation must imply tangent violation");
            }
            if k % 2 == 0 {
                let xi = match xi2(&rec, k) {
                    Ok(res) => res.violated,
                    Err(CriterionError::NotApplicable { .. }) => false,
                    Err(e) => panic!("{e}"),
                };
                assert_eq!(
                    xi, qt.violated,
                    "ξ² and qubit tangent must agree (N={n} k={k})"
                );
            }
            checked += 1;
        }
    }

    #[test]
    fn tangent_detects_between_the_duan_and_tangent_thresholds() {
        // Both criteria share the right-hand side; the tangent's smaller
        // left-hand coefficient opens a variance window where only it
        // fires: rhs/(N(k+2)) ≤ var < rhs/[(N−k)(k+2)/2].
        let (n, k) = (20u64, 4u64);
        let rec = MeasurementRecord::new(
            n,
            SpinLength::HALF,
            0.4,
            0.0,
            0.0,
            60.0,
            None,
            None,
            None,
        )
        .unwrap();
        let duan = duan_criterion(&rec, k).unwrap();
        let qt = qubit_tangent_criterion(&rec, k).unwrap();
        assert!(!duan.violated, "margin {}", duan.margin);
        assert!(qt.violated, "margin {}", qt.margin);
        // and ξ² agrees with the tangent where kj is integer
        assert!(xi2(&rec, k).unwrap().violated);
    }

    #[test]
    fn observation3_predicate_on_reference_records() {
        let j = SpinLength::HALF;
        let n = 30u64;
        let rec = dicke(n, j);
        for k in 1..n {
            assert!(observation3_predicate(&rec, k).unwrap());
        }
        // coherent: lhs = 1, rhs >= 1, predicate false
        let nj = n as f64 * 0.5;
        let coherent = MeasurementRecord::new(
            n,
            j,
            nj / 2.0,
            0.0,
            nj,
            nj * (nj + 0.5),
            Some(0.0),
            Some(nj / 2.0),
            Some(0.0),
        )
        .unwrap();
        assert!(!observation3_predicate(&coherent, 3).unwrap());
        // out-of-range k and missing fields are rejected
        assert!(observation3_predicate(&rec, n).is_err());
        let bare = MeasurementRecord::new(n, j, 0.0, 0.0, 0.0, nj * (nj + 1.0), None, None, None)
            .unwrap();
        assert!(matches!(
            observation3_predicate(&bare, 2),
            Err(CriterionError::MissingFields { .. })
        ));
    }

    #[test]
    fn detect_depth_dicke_and_coherent() {
        let cache = CurveCache::new(CurveConfig::default());
        let opts = DepthOptions::default();

        // Dicke at j = 1/2: even k via curves, final odd step via tilde-G.
        let rec = dicke(10, SpinLength::HALF);
        let verdict = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap();
        assert_eq!(verdict.certified_depth, 10);
        assert_eq!(verdict.max_k_violated, Some(9));

        // Dicke at j = 1: every k has an integer-spin curve.
        let rec = dicke(8, SpinLength::ONE);
        let verdict = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap();
        assert_eq!(verdict.certified_depth, 8);

        // A separable coherent record certifies depth 1 on every criterion.
        let rec = coherent_z(10, SpinLength::HALF);
        for id in [
            CriterionId::Nonlinear,
            CriterionId::SorensenMolmer,
            CriterionId::Xi2,
            CriterionId::Xi2Sm,
            CriterionId::Duan,
            CriterionId::QubitTangent,
        ] {
            let verdict = detect_depth(&rec, id, &cache, &opts).unwrap();
            assert_eq!(verdict.certified_depth, 1, "criterion {id}");
        }
    }

    #[test]
    fn detect_depth_with_half_integer_curves() {
        // The opt-in path replaces the tilde screen at odd k with a
        // numerically computed half-integer curve; on a Dicke record both
        // end at the saturation point and certify full depth.
        let mut cache = CurveCache::new(CurveConfig::default());
        cache.half_integer_points = 21;
        let rec = dicke(4, SpinLength::HALF);
        let opts = DepthOptions {
            half_integer_curves: true,
            ..Default::default()
        };
        let verdict = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts).unwrap();
        assert_eq!(verdict.max_k_violated, Some(3));
        assert_eq!(verdict.certified_depth, 4);
    }

    #[test]
    fn detect_depth_bisection_agrees_with_linear_scan() {
        let cache = CurveCache::new(CurveConfig::default());
        let j = SpinLength::HALF;
        for p in [0.0, 0.02, 0.1, 0.4] {
            let rec = noisy_dicke(40, j, p);
            let fast = detect_depth(&rec, CriterionId::Nonlinear, &cache, &DepthOptions::default())
                .unwrap();
            let slow = detect_depth(
                &rec,
                CriterionId::Nonlinear,
                &cache,
                &DepthOptions {
                    linear_scan: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(fast.certified_depth, slow.certified_depth, "p = {p}");
        }
    }
}
