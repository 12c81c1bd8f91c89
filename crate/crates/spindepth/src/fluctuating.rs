//! Depth criteria for ensembles with a fluctuating particle number.
//!
//! The state is ρ = Σ_N Q_N ρ_N. Criteria pool the per-N statistics: the
//! second-moment criterion replaces its argument by the expectation of
//!
//!   W = Σ_N (Nj − kj)⁻¹ [J_{y,N}² + J_{z,N}² − Nj(kj+1)·1_N],
//!
//! and the polarization criterion substitutes N → ⟨N⟩. Both reduce
//! bit-identically to the fixed-N forms for a delta-distributed N because
//! they share the same arithmetic path.
//!
//! The pooled variance uses the total mixture variance of Jx when per-bin
//! means are available, and otherwise the concave lower-bound form
//! Σ Q_N (ΔJ_{x,N})²; the result records which one was used.

use crate::boundary::BoundaryCurve;
use crate::criteria::{
    depth_scan, polarization, w_fixed, xi2_from_w, xi2_sm_value, CriterionError, CriterionId,
    CriterionResult, CurveProvider, DepthOptions, DepthVerdict, VERDICT_GUARD,
};
use crate::spin::SpinLength;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FluctError {
    #[error("ensemble has no populated bins")]
    EmptyEnsemble,
    #[error("bin weights must be positive and finite (bin N = {n})")]
    BadWeight { n: u64 },
    #[error("bin with N = {n} ≤ k = {k}: the W operator is undefined there")]
    BinUnderflow { n: u64, k: u64 },
    #[error("criterion not applicable: {reason}")]
    NotApplicable { reason: &'static str },
    #[error(transparent)]
    Criterion(#[from] CriterionError),
}

/// Aggregated statistics of the shots with a given particle number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NBin {
    #[serde(rename = "N")]
    pub n: u64,
    /// Probability Q_N (normalized on construction).
    #[serde(rename = "Q")]
    pub weight: f64,
    pub var_jx: f64,
    pub mean_jz: f64,
    pub second_moment_perp: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_jx: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_jy: Option<f64>,
}

/// One joint measurement of the particle number and the collective spin.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct Shot {
    pub n: u64,
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
}

/// Per-N statistics of an ensemble with fluctuating particle number.
#[derive(Debug, Clone, PartialEq)]
pub struct ShotEnsemble {
    pub j: SpinLength,
    /// Bins sorted by N with weights summing to 1.
    pub bins: Vec<NBin>,
}

/// Which pooled (ΔJx)² entered a fluctuating verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PooledVariance {
    /// Per-bin means available: total mixture variance
    /// Σ Q var_N + Σ Q (mean_N − mean)².
    TotalMixture,
    /// Concave lower bound Σ Q var_N (no per-bin means).
    ConcaveLowerBound,
}

impl ShotEnsemble {
    /// Normalize weights and sort bins by N.
    pub fn from_bins(j: SpinLength, mut bins: Vec<NBin>) -> Result<Self, FluctError> {
        bins.retain(|b| b.weight != 0.0);
        if bins.is_empty() {
            return Err(FluctError::EmptyEnsemble);
        }
        let mut total = 0.0;
        for b in &bins {
            if !(b.weight > 0.0 && b.weight.is_finite()) || b.n == 0 {
                return Err(FluctError::BadWeight { n: b.n });
            }
            total += b.weight;
        }
        for b in &mut bins {
            b.weight /= total;
        }
        bins.sort_by_key(|b| b.n);
        Ok(ShotEnsemble { j, bins })
    }

    /// Aggregate raw per-shot outcomes into per-N bins (population moments).
    pub fn from_shots(j: SpinLength, shots: &[Shot]) -> Result<Self, FluctError> {
        use std::collections::BTreeMap;
        if shots.is_empty() {
            return Err(FluctError::EmptyEnsemble);
        }
        let mut groups: BTreeMap<u64, Vec<&Shot>> = BTreeMap::new();
        for s in shots {
            groups.entry(s.n).or_default().push(s);
        }
        let total = shots.len() as f64;
        let bins = groups
            .into_iter()
            .map(|(n, group)| {
                let count = group.len() as f64;
                let mean = |f: fn(&Shot) -> f64| group.iter().map(|s| f(s)).sum::<f64>() / count;
                let mean_jx = mean(|s| s.jx);
                let mean_jy = mean(|s| s.jy);
                let mean_jz = mean(|s| s.jz);
                let var_jx =
                    group.iter().map(|s| (s.jx - mean_jx).powi(2)).sum::<f64>() / count;
                let smp = group
                    .iter()
                    .map(|s| s.jy * s.jy + s.jz * s.jz)
                    .sum::<f64>()
                    / count;
                NBin {
                    n,
                    weight: count / total,
                    var_jx,
                    mean_jz,
                    second_moment_perp: smp,
                    mean_jx: Some(mean_jx),
                    mean_jy: Some(mean_jy),
                }
            })
            .collect();
        Self::from_bins(j, bins)
    }

    /// ⟨N⟩ = Σ Q_N N.
    pub fn mean_n(&self) -> f64 {
        self.bins.iter().map(|b| b.weight * b.n as f64).sum()
    }

    pub fn min_n(&self) -> u64 {
        self.bins.first().map(|b| b.n).unwrap_or(0)
    }

    /// Pooled (ΔJx)²: the mixture variance when every bin reports a mean,
    /// otherwise the concave lower bound.
    pub fn pooled_var_jx(&self) -> (f64, PooledVariance) {
        let within: f64 = self.bins.iter().map(|b| b.weight * b.var_jx).sum();
        if self.bins.iter().all(|b| b.mean_jx.is_some()) {
            let mean: f64 = self
                .bins
                .iter()
                .map(|b| b.weight * b.mean_jx.unwrap())
                .sum();
            let between: f64 = self
                .bins
                .iter()
                .map(|b| {
                    let d = b.mean_jx.unwrap() - mean;
                    b.weight * d * d
                })
                .sum();
            (within + between, PooledVariance::TotalMixture)
        } else {
            (within, PooledVariance::ConcaveLowerBound)
        }
    }

    /// Pooled transverse means (⟨Jy⟩, ⟨Jz⟩); a missing mean_Jy contributes
    /// zero.
    pub fn pooled_means_perp(&self) -> (f64, f64) {
        let mean_jz: f64 = self.bins.iter().map(|b| b.weight * b.mean_jz).sum();
        let mean_jy: f64 = self
            .bins
            .iter()
            .map(|b| b.weight * b.mean_jy.unwrap_or(0.0))
            .sum();
        (mean_jy, mean_jz)
    }

    /// Pooled transverse polarization √(⟨Jy⟩² + ⟨Jz⟩²).
    pub fn pooled_polarization(&self) -> f64 {
        let (mean_jy, mean_jz) = self.pooled_means_perp();
        polarization(mean_jy, mean_jz)
    }
}

/// The statistic ⟨W⟩ at level k, with the per-bin contributions.
#[derive(Debug, Clone, Serialize)]
pub struct WStatistic {
    pub k: u64,
    pub mean_w: f64,
    /// (N, Q_N · W_N) per populated bin.
    pub contributions: Vec<(u64, f64)>,
}

/// ⟨W⟩ = Σ_N Q_N [⟨Jy²+Jz²⟩_N − Nj(kj+1)] / ((N−k)j).
///
/// Every populated bin must have N > k; bins at or below k are a hard
/// error since silently dropping them would bias the statistic.
pub fn w_expectation(ens: &ShotEnsemble, k: u64) -> Result<WStatistic, FluctError> {
    if ens.bins.is_empty() {
        return Err(FluctError::EmptyEnsemble);
    }
    let mut contributions = Vec::with_capacity(ens.bins.len());
    let mut mean_w = 0.0;
    for b in &ens.bins {
        if b.n <= k {
            return Err(FluctError::BinUnderflow { n: b.n, k });
        }
        let w = b.weight * w_fixed(b.second_moment_perp, b.n, k, ens.j);
        contributions.push((b.n, w));
        mean_w += w;
    }
    Ok(WStatistic {
        k,
        mean_w,
        contributions,
    })
}

fn fluct_variance_result(
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

/// Nonlinear criterion for fluctuating N:
/// (ΔJx)² ≥ ⟨N⟩j·G_J(⟨W⟩/(⟨N⟩j)). Requires ⟨W⟩ ≥ 0; a negative ⟨W⟩
/// yields an inapplicable result.
pub fn fluctuating_nonlinear(
    ens: &ShotEnsemble,
    k: u64,
    curve: &BoundaryCurve,
) -> Result<CriterionResult, FluctError> {
    let group = ens.j.times(k).map_err(|e| {
        FluctError::Criterion(CriterionError::Record(e.into()))
    })?;
    if curve.j != group {
        return Err(CriterionError::SpinMismatch {
            curve: curve.j.two_j(),
            expected: group.two_j(),
        }
        .into());
    }
    let w = w_expectation(ens, k)?;
    let (pooled_var, _) = ens.pooled_var_jx();
    if w.mean_w < 0.0 {
        return Ok(CriterionResult {
            criterion: CriterionId::Nonlinear,
            k,
            applicable: false,
            lhs: pooled_var,
            rhs: f64::NAN,
            margin: 0.0,
            violated: false,
        });
    }
    let nj = ens.mean_n() * ens.j.value();
    let x = w.mean_w / nj;
    if x > 1.0 + 1e-9 {
        return Err(CriterionError::OutOfRange { x }.into());
    }
    let rhs = nj * curve.evaluate(x.min(1.0)).map_err(CriterionError::from)?;
    Ok(fluct_variance_result(
        CriterionId::Nonlinear,
        k,
        pooled_var,
        rhs,
        nj,
    ))
}

/// Sørensen–Mølmer criterion with N → ⟨N⟩:
/// (ΔJx)² ≥ ⟨N⟩j·F_J(|⟨J_⊥⟩|/⟨N⟩j).
pub fn fluctuating_sm(
    ens: &ShotEnsemble,
    k: u64,
    curve: &BoundaryCurve,
) -> Result<CriterionResult, FluctError> {
    let group = ens.j.times(k).map_err(|e| {
        FluctError::Criterion(CriterionError::Record(e.into()))
    })?;
    if curve.j != group {
        return Err(CriterionError::SpinMismatch {
            curve: curve.j.two_j(),
            expected: group.two_j(),
        }
        .into());
    }
    let nj = ens.mean_n() * ens.j.value();
    let x = (ens.pooled_polarization() / nj).min(1.0);
    let (pooled_var, _) = ens.pooled_var_jx();
    let rhs = nj * curve.evaluate(x).map_err(CriterionError::from)?;
    Ok(fluct_variance_result(
        CriterionId::SorensenMolmer,
        k,
        pooled_var,
        rhs,
        nj,
    ))
}

/// Fluctuating nonlinear criterion with the analytic tilde-G bound;
/// valid for any kj, used to screen odd k at half-integer j.
pub fn fluctuating_nonlinear_tilde(
    ens: &ShotEnsemble,
    k: u64,
) -> Result<CriterionResult, FluctError> {
    let group = ens
        .j
        .times(k)
        .map_err(|e| FluctError::Criterion(CriterionError::Record(e.into())))?;
    let w = w_expectation(ens, k)?;
    let (pooled_var, _) = ens.pooled_var_jx();
    if w.mean_w < 0.0 {
        return Ok(CriterionResult {
            criterion: CriterionId::Nonlinear,
            k,
            applicable: false,
            lhs: pooled_var,
            rhs: f64::NAN,
            margin: 0.0,
            violated: false,
        });
    }
    let nj = ens.mean_n() * ens.j.value();
    let x = (w.mean_w / nj).min(1.0);
    let rhs = nj * crate::boundary::tilde_g(group, x);
    Ok(fluct_variance_result(
        CriterionId::Nonlinear,
        k,
        pooled_var,
        rhs,
        nj,
    ))
}

/// Fluctuating Sørensen–Mølmer criterion with F_J(x) ≥ tilde-G_J(x²).
pub fn fluctuating_sm_tilde(ens: &ShotEnsemble, k: u64) -> Result<CriterionResult, FluctError> {
    let group = ens
        .j
        .times(k)
        .map_err(|e| FluctError::Criterion(CriterionError::Record(e.into())))?;
    let nj = ens.mean_n() * ens.j.value();
    let x = (ens.pooled_polarization() / nj).min(1.0);
    let (pooled_var, _) = ens.pooled_var_jx();
    let rhs = nj * crate::boundary::tilde_g(group, x * x);
    Ok(fluct_variance_result(
        CriterionId::SorensenMolmer,
        k,
        pooled_var,
        rhs,
        nj,
    ))
}

/// ξ² with the fixed-N denominator replaced by ⟨W⟩:
/// ξ²_fluct = (kj+1)·2·(ΔJx)²/⟨W⟩.
pub fn xi2_fluctuating(ens: &ShotEnsemble, k: u64) -> Result<CriterionResult, FluctError> {
    let two_kj = k * u64::from(ens.j.two_j());
    if !two_kj.is_multiple_of(2) {
        return Err(CriterionError::NonIntegerGroupSpin { two_kj }.into());
    }
    let w = w_expectation(ens, k)?;
    if w.mean_w <= 0.0 {
        return Err(FluctError::NotApplicable {
            reason: "⟨W⟩ must be positive",
        });
    }
    let (pooled_var, _) = ens.pooled_var_jx();
    let kj = two_kj as f64 / 2.0;
    let xi2 = xi2_from_w(pooled_var, w.mean_w, kj);
    let margin = 1.0 - xi2 - VERDICT_GUARD;
    Ok(CriterionResult {
        criterion: CriterionId::Xi2,
        k,
        applicable: true,
        lhs: xi2,
        rhs: 1.0,
        margin,
        violated: margin > 0.0,
    })
}

/// ξ²_SM with N → ⟨N⟩.
pub fn xi2_sm_fluctuating(ens: &ShotEnsemble, k: u64) -> Result<CriterionResult, FluctError> {
    let two_kj = k * u64::from(ens.j.two_j());
    if !two_kj.is_multiple_of(2) {
        return Err(CriterionError::NonIntegerGroupSpin { two_kj }.into());
    }
    let (mean_jy, mean_jz) = ens.pooled_means_perp();
    let pol2 = mean_jy * mean_jy + mean_jz * mean_jz;
    if pol2 <= 0.0 {
        return Err(FluctError::NotApplicable {
            reason: "zero pooled transverse polarization",
        });
    }
    let (pooled_var, _) = ens.pooled_var_jx();
    let kj = two_kj as f64 / 2.0;
    let xi2 = xi2_sm_value(pooled_var, pol2, ens.mean_n(), ens.j.value(), kj);
    let margin = 1.0 - xi2 - VERDICT_GUARD;
    Ok(CriterionResult {
        criterion: CriterionId::Xi2Sm,
        k,
        applicable: true,
        lhs: xi2,
        rhs: 1.0,
        margin,
        violated: margin > 0.0,
    })
}

/// Both fluctuating linear parameters at once, as (ξ²_fluct, ξ²_SM,fluct).
pub fn fluctuating_linear_parameters(
    ens: &ShotEnsemble,
    k: u64,
) -> (
    Result<CriterionResult, FluctError>,
    Result<CriterionResult, FluctError>,
) {
    (xi2_fluctuating(ens, k), xi2_sm_fluctuating(ens, k))
}

/// Depth search over k for a fluctuating ensemble; k is capped at
/// min_N − 1 since W is undefined beyond.
pub fn detect_depth_fluctuating(
    ens: &ShotEnsemble,
    id: CriterionId,
    curves: &CurveProvider,
    opts: &DepthOptions,
) -> Result<DepthVerdict, FluctError> {
    let k_cap = ens.min_n().saturating_sub(1);
    let scan_opts = DepthOptions {
        max_k: Some(opts.max_k.unwrap_or(k_cap).min(k_cap)),
        ..opts.clone()
    };
    let to_criterion = |e: FluctError| match e {
        FluctError::Criterion(c) => c,
        other => CriterionError::NotApplicable {
            reason: match other {
                FluctError::BinUnderflow { .. } => "bin with N ≤ k",
                _ => "fluctuating-ensemble error",
            },
        },
    };
    let n_for_scan = ens.bins.last().map(|b| b.n).unwrap_or(0);
    match id {
        CriterionId::Nonlinear => depth_scan(
            n_for_scan,
            ens.j.two_j(),
            &scan_opts,
            true,
            |k| {
                let curve = curves
                    .get_g(ens.j.times(k).map_err(|e| CriterionError::Record(e.into()))?)?;
                fluctuating_nonlinear(ens, k, &curve)
                    .map(Some)
                    .map_err(to_criterion)
            },
            |k| {
                fluctuating_nonlinear_tilde(ens, k)
                    .map(Some)
                    .map_err(to_criterion)
            },
        )
        .map_err(FluctError::Criterion),
        CriterionId::SorensenMolmer => depth_scan(
            n_for_scan,
            ens.j.two_j(),
            &scan_opts,
            true,
            |k| {
                let curve = curves
                    .get_f(ens.j.times(k).map_err(|e| CriterionError::Record(e.into()))?)?;
                fluctuating_sm(ens, k, &curve)
                    .map(Some)
                    .map_err(to_criterion)
            },
            |k| {
                fluctuating_sm_tilde(ens, k)
                    .map(Some)
                    .map_err(to_criterion)
            },
        )
        .map_err(FluctError::Criterion),
        CriterionId::Xi2 => depth_scan(
            n_for_scan,
            ens.j.two_j(),
            &scan_opts,
            false,
            |k| match xi2_fluctuating(ens, k) {
                Ok(res) => Ok(Some(res)),
                Err(FluctError::NotApplicable { .. }) => Ok(None),
                Err(e) => Err(to_criterion(e)),
            },
            |_| Ok(None),
        )
        .map_err(FluctError::Criterion),
        CriterionId::Xi2Sm => depth_scan(
            n_for_scan,
            ens.j.two_j(),
            &scan_opts,
            false,
            |k| match xi2_sm_fluctuating(ens, k) {
                Ok(res) => Ok(Some(res)),
                Err(FluctError::NotApplicable { .. }) => Ok(None),
                Err(e) => Err(to_criterion(e)),
            },
            |_| Ok(None),
        )
        .map_err(FluctError::Criterion),
        other => Err(FluctError::Criterion(CriterionError::NotApplicable {
            reason: match other {
                CriterionId::Duan | CriterionId::QubitTangent => {
                    "qubit linear criteria have no fluctuating-N form here"
                }
                _ => "unsupported criterion",
            },
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{compute_f_curve, g_from_f, CurveCache, CurveConfig};
    use crate::criteria::{nonlinear_criterion, sm_criterion, xi2, xi2_sm, MeasurementRecord};
    use crate::states::dicke_moments;
    use approx::assert_abs_diff_eq;

    fn record_to_bin(rec: &MeasurementRecord, weight: f64) -> NBin {
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

    #[test]
    fn delta_distribution_reproduces_fixed_n_bit_identically() {
        let j = SpinLength::HALF;
        let n = 24u64;
        let nj = n as f64 * 0.5;
        let rec = MeasurementRecord::new(
            n,
            j,
            0.31,
            1.7,
            6.3,
            0.6 * nj * (nj + 1.0),
            Some(0.11),
            None,
            None,
        )
        .unwrap();
        let ens = ShotEnsemble::from_bins(j, vec![record_to_bin(&rec, 3.0)]).unwrap();
        assert_eq!(ens.bins[0].weight, 1.0);

        let k = 6u64;
        let group = j.times(k).unwrap();
        let f = compute_f_curve(group, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);

        let fixed = nonlinear_criterion(&rec, k, &g).unwrap();
        let fluct = fluctuating_nonlinear(&ens, k, &g).unwrap();
        assert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits());
        assert_eq!(fixed.rhs.to_bits(), fluct.rhs.to_bits());
        assert_eq!(fixed.margin.to_bits(), fluct.margin.to_bits());
        assert_eq!(fixed.violated, fluct.violated);

        let fixed = sm_criterion(&rec, k, &f).unwrap();
        let fluct = fluctuating_sm(&ens, k, &f).unwrap();
        assert_eq!(fixed.rhs.to_bits(), fluct.rhs.to_bits());
        assert_eq!(fixed.margin.to_bits(), fluct.margin.to_bits());

        let fixed = xi2(&rec, k).unwrap();
        let fluct = xi2_fluctuating(&ens, k).unwrap();
        assert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits());

        let fixed = xi2_sm(&rec, k).unwrap();
        let fluct = xi2_sm_fluctuating(&ens, k).unwrap();
        assert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits());
    }

    #[test]
    fn all_dicke_bins_give_unit_argument() {
        // ⟨W⟩ = Σ Q_N Nj for Dicke bins, so ⟨W⟩/(⟨N⟩j) = 1.
        let j = SpinLength::HALF;
        let bins = vec![
            record_to_bin(&dicke_moments(100, j), 0.5),
            record_to_bin(&dicke_moments(120, j), 0.5),
        ];
        let ens = ShotEnsemble::from_bins(j, bins).unwrap();
        let w = w_expectation(&ens, 20).unwrap();
        assert_abs_diff_eq!(w.mean_w, ens.mean_n() * 0.5, epsilon = 1e-12);
        let x = w.mean_w / (ens.mean_n() * 0.5);
        assert_abs_diff_eq!(x, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn bin_underflow_is_a_hard_error() {
        let j = SpinLength::HALF;
        let bins = vec![
            record_to_bin(&dicke_moments(10, j), 0.5),
            record_to_bin(&dicke_moments(30, j), 0.5),
        ];
        let ens = ShotEnsemble::from_bins(j, bins).unwrap();
        assert!(matches!(
            w_expectation(&ens, 10),
            Err(FluctError::BinUnderflow { n: 10, k: 10 })
        ));
        assert!(w_expectation(&ens, 9).is_ok());
    }

    #[test]
    fn negative_mean_w_marks_inapplicable() {
        let j = SpinLength::HALF;
        // far-below-threshold second moments make W negative
        let n = 20u64;
        let rec = MeasurementRecord::new(n, j, 0.5, 0.0, 0.0, 1.0, Some(0.0), None, None).unwrap();
        let ens = ShotEnsemble::from_bins(j, vec![record_to_bin(&rec, 1.0)]).unwrap();
        let k = 4u64;
        let f = compute_f_curve(j.times(k).unwrap(), &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let res = fluctuating_nonlinear(&ens, k, &g).unwrap();
        assert!(!res.applicable);
        assert!(!res.violated);
        assert!(matches!(
            xi2_fluctuating(&ens, k),
            Err(FluctError::NotApplicable { .. })
        ));
    }

    #[test]
    fn mean_w_is_affine_in_bin_probabilities() {
        let j = SpinLength::HALF;
        let a = record_to_bin(&dicke_moments(12, j), 1.0);
        let mut b = record_to_bin(&dicke_moments(16, j), 1.0);
        b.second_moment_perp *= 0.8;
        let w_at = |qa: f64| {
            let mut bin_a = a.clone();
            let mut bin_b = b.clone();
            bin_a.weight = qa;
            bin_b.weight = 1.0 - qa;
            let ens = ShotEnsemble::from_bins(j, vec![bin_a, bin_b]).unwrap();
            w_expectation(&ens, 4).unwrap().mean_w
        };
        let w0 = w_at(0.2);
        let w1 = w_at(0.8);
        let mid = w_at(0.5);
        assert_abs_diff_eq!(mid, 0.5 * (w0 + w1), epsilon = 1e-12);
    }

    #[test]
    fn jensen_consistency_of_the_pooled_criterion() {
        // bins sitting on-or-above their fixed-N boundary never pool into a
        // violation.
        use rand::{Rng, SeedableRng};
        let j = SpinLength::HALF;
        let k = 4u64;
        let group = j.times(k).unwrap();
        let f = compute_f_curve(group, &CurveConfig::default()).unwrap();
        let g = g_from_f(&f);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mut bins = Vec::new();
            for _ in 0..rng.gen_range(2..5) {
                let n = rng.gen_range(6u64..40);
                let nf = n as f64;
                let nj = nf * 0.5;
                let kj = k as f64 * 0.5;
                let smp = rng.gen_range(nj * (kj + 1.0)..nj * (nj + 1.0));
                let x = w_fixed(smp, n, k, j) / nj;
                let rhs = nj * g.evaluate(x.min(1.0)).unwrap();
                let var = rhs * rng.gen_range(1.0..1.5) + 1e-6;
                bins.push(NBin {
                    n,
                    weight: rng.gen_range(0.1..1.0),
                    var_jx: var,
                    mean_jz: 0.0,
                    second_moment_perp: smp,
                    mean_jx: None,
                    mean_jy: None,
                });
            }
            let ens = ShotEnsemble::from_bins(j, bins).unwrap();
            let res = fluctuating_nonlinear(&ens, k, &g).unwrap();
            assert!(!res.violated, "pooled criterion must respect Jensen");
        }
    }

    #[test]
    fn shot_aggregation_matches_hand_computation() {
        let j = SpinLength::HALF;
        let shots = vec![
            Shot { n: 4, jx: 1.0, jy: 0.0, jz: 1.0 },
            Shot { n: 4, jx: -1.0, jy: 0.0, jz: 1.0 },
            Shot { n: 6, jx: 0.0, jy: 1.0, jz: 2.0 },
        ];
        let ens = ShotEnsemble::from_shots(j, &shots).unwrap();
        assert_eq!(ens.bins.len(), 2);
        let b4 = &ens.bins[0];
        assert_eq!(b4.n, 4);
        assert_abs_diff_eq!(b4.weight, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b4.var_jx, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b4.second_moment_perp, 1.0, epsilon = 1e-15);
        let b6 = &ens.bins[1];
        assert_abs_diff_eq!(b6.second_moment_perp, 5.0, epsilon = 1e-15);
        assert_eq!(b6.mean_jy, Some(1.0));
    }

    #[test]
    fn dicke_ensembles_and_coherent_ensembles_behave_as_expected() {
        let j = SpinLength::HALF;
        let cache = CurveCache::new(CurveConfig::default());

        // all-Dicke ensemble: ξ²_fluct = 0 (maximal violation), while the
        // polarization criterion sees nothing (F(0) = 0).
        let bins = vec![
            record_to_bin(&dicke_moments(40, j), 0.3),
            record_to_bin(&dicke_moments(60, j), 0.7),
        ];
        let ens = ShotEnsemble::from_bins(j, bins).unwrap();
        let k = 10u64;
        let res = xi2_fluctuating(&ens, k).unwrap();
        assert_eq!(res.lhs, 0.0);
        assert!(res.violated);
        let f = cache.get_f(j.times(k).unwrap()).unwrap();
        let res = fluctuating_sm(&ens, k, &f).unwrap();
        assert_eq!(res.rhs, 0.0);
        assert!(!res.violated);

        // Poisson-like spread of coherent bins: pooled moments stay on the
        // separable side of the polarization bound.
        let coherent = |n: u64, w: f64| {
            let nj = n as f64 * 0.5;
            NBin {
                n,
                weight: w,
                var_jx: nj / 2.0,
                mean_jz: nj,
                second_moment_perp: nj * (nj + 0.5),
                mean_jx: Some(0.0),
                mean_jy: Some(0.0),
            }
        };
        let ens = ShotEnsemble::from_bins(
            j,
            vec![
                coherent(16, 0.05),
                coherent(18, 0.2),
                coherent(20, 0.5),
                coherent(22, 0.2),
                coherent(24, 0.05),
            ],
        )
        .unwrap();
        let k = 4u64;
        let f = cache.get_f(j.times(k).unwrap()).unwrap();
        assert!(!fluctuating_sm(&ens, k, &f).unwrap().violated);
        let g = cache.get_g(j.times(k).unwrap()).unwrap();
        assert!(!fluctuating_nonlinear(&ens, k, &g).unwrap().violated);
    }

    #[test]
    fn mixed_noisy_dicke_threshold_brackets_the_per_bin_thresholds() {
        // per-bin thresholds p*_N bound the pooled one: below both the
        // ensemble is detected, above both it is not.
        let j = SpinLength::HALF;
        let k = 10u64;
        let p_star = |n: u64| {
            let nf = n as f64;
            let kj = k as f64 * 0.5;
            3.0 * (nf - k as f64) * 0.5
                / (2.0 * 0.5 * 1.5 * (kj + 1.0) * (nf - k as f64) - 2.0 * 1.5
                    + 3.0 * (nf * 0.5 + 1.0))
        };
        let (n1, n2) = (40u64, 80u64);
        let (p1, p2) = (p_star(n1), p_star(n2));
        let ens_at = |p: f64| {
            let bins = vec![
                record_to_bin(&crate::states::noisy_dicke_moments(n1, j, p).unwrap(), 0.5),
                record_to_bin(&crate::states::noisy_dicke_moments(n2, j, p).unwrap(), 0.5),
            ];
            ShotEnsemble::from_bins(j, bins).unwrap()
        };
        let below = xi2_fluctuating(&ens_at(0.9 * p1.min(p2)), k).unwrap();
        assert!(below.violated);
        let above = xi2_fluctuating(&ens_at(1.1 * p1.max(p2)), k).unwrap();
        assert!(!above.violated);
    }

    #[test]
    fn two_bin_dicke_depth_scan_is_deep() {
        let j = SpinLength::HALF;
        let bins = vec![
            record_to_bin(&dicke_moments(100, j), 0.5),
            record_to_bin(&dicke_moments(120, j), 0.5),
        ];
        let ens = ShotEnsemble::from_bins(j, bins).unwrap();
        let cache = CurveCache::new(CurveConfig::default());
        let verdict = detect_depth_fluctuating(
            &ens,
            CriterionId::Nonlinear,
            &cache,
            &DepthOptions::default(),
        )
        .unwrap();
        // violated at every k up to min N − 1 = 99 (odd 99 via tilde-G)
        assert_eq!(verdict.max_k_violated, Some(99));
        assert_eq!(verdict.certified_depth, 100);
    }
}
