//! Exact collective moments for reference states.
//!
//! These generators feed the criteria with ground truth: Dicke states and
//! their white-noise mixtures have closed-form moments, spin-squeezed
//! states come from ground states of H_μ = Jx² − μJz on the symmetric
//! subspace, partial decoherence is evaluated in correlation space (so it
//! scales to thousands of particles), and random pure producible states
//! give the soundness oracle for every criterion.

use crate::criteria::{MeasurementRecord, RecordError};
use crate::spin::{
    build_spin_matrices, squeezing_ground_state, xbasis_moments, Basis, CollectiveMoments,
    SpinError, SpinLength,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatesError {
    #[error("parameter out of range: {what}")]
    InvalidInput { what: String },
    #[error("moments inconsistent with a permutation-symmetric state: {what}")]
    NotSymmetric { what: String },
    #[error("group Hilbert space of dimension {dim} exceeds the limit {limit}")]
    SizeLimitExceeded { dim: usize, limit: usize },
    #[error(transparent)]
    Eigensolver(#[from] SpinError),
    #[error(transparent)]
    Record(#[from] RecordError),
}

/// Noise channels used by the simulators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum NoiseSpec {
    None,
    /// Mix with the maximally mixed state: (1−p)ρ + p·1/(2j+1)^N.
    WhiteNoise { p: f64 },
    /// Decohere m particles into the completely mixed state.
    DecohereParticles { m: u64 },
}

impl std::str::FromStr for NoiseSpec {
    type Err = String;

    /// Accepts "none", a bare probability "0.1" (white noise), "p:0.1",
    /// or "decohere:10".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("none") {
            return Ok(NoiseSpec::None);
        }
        if let Some(rest) = s.strip_prefix("decohere:") {
            let m: u64 = rest
                .parse()
                .map_err(|_| format!("invalid particle count in noise spec '{s}'"))?;
            return Ok(NoiseSpec::DecohereParticles { m });
        }
        let p_text = s.strip_prefix("p:").unwrap_or(s);
        let p: f64 = p_text
            .parse()
            .map_err(|_| format!("invalid noise spec '{s}'"))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("white-noise probability {p} outside [0, 1]"));
        }
        Ok(NoiseSpec::WhiteNoise { p })
    }
}

/// Where a set of symmetric-state moments came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum DerivationTag {
    Dicke,
    HmuGround { mu: f64 },
    ZPolarized,
    WhiteNoiseMixture { p: f64 },
}

/// First and second collective moments of a permutation-symmetric
/// N-particle state.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricStateMoments {
    pub n: u64,
    pub j: SpinLength,
    pub moments: CollectiveMoments,
    pub tag: DerivationTag,
}

impl SymmetricStateMoments {
    /// Collapse to a measurement record (variances from the stored moments).
    pub fn to_record(&self) -> Result<MeasurementRecord, RecordError> {
        let m = &self.moments;
        MeasurementRecord::new(
            self.n,
            self.j,
            m.var(0),
            m.mean[1],
            m.mean[2],
            m.second[1][1] + m.second[2][2],
            Some(m.mean[0]),
            Some(m.var(1)),
            Some(m.var(2)),
        )
    }

    /// Moments of the fully z-polarized product state of N qubits.
    pub fn z_polarized(n: u64) -> Self {
        let nf = n as f64;
        let mean = [0.0, 0.0, nf / 2.0];
        let second = [
            [nf / 4.0, 0.0, 0.0],
            [0.0, nf / 4.0, 0.0],
            [0.0, 0.0, nf * nf / 4.0],
        ];
        SymmetricStateMoments {
            n,
            j: SpinLength::HALF,
            moments: CollectiveMoments { mean, second },
            tag: DerivationTag::ZPolarized,
        }
    }
}

/// Moments of the unpolarized Dicke state |J = Nj, m_x = 0⟩:
/// (ΔJx)² = 0, all first moments zero, ⟨Jy²+Jz²⟩ = Nj(Nj+1).
pub fn dicke_moments(n: u64, j: SpinLength) -> MeasurementRecord {
    let nj = n as f64 * j.value();
    let smp = nj * (nj + 1.0);
    MeasurementRecord::new(
        n,
        j,
        0.0,
        0.0,
        0.0,
        smp,
        Some(0.0),
        Some(smp / 2.0),
        Some(smp / 2.0),
    )
    .expect("Dicke moments are physical")
}

/// Moments of ρ = (1−p)·ρ_Dicke + p·1/(2j+1)^N.
///
/// The maximally mixed state is isotropic with ⟨J_l²⟩ = Nj(j+1)/3, so the
/// mixture is affine in p: ⟨Jx²⟩ = p·Nj(j+1)/3 and
/// ⟨Jy²+Jz²⟩ = (1−p)·Nj(Nj+1) + p·2Nj(j+1)/3.
pub fn noisy_dicke_moments(
    n: u64,
    j: SpinLength,
    p: f64,
) -> Result<MeasurementRecord, StatesError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(StatesError::InvalidInput {
            what: format!("noise probability p = {p}"),
        });
    }
    let nf = n as f64;
    let jv = j.value();
    let nj = nf * jv;
    let white_second = nf * jv * (jv + 1.0) / 3.0;
    let jx2 = p * white_second;
    let smp = (1.0 - p) * nj * (nj + 1.0) + p * 2.0 * white_second;
    Ok(MeasurementRecord::new(
        n,
        j,
        jx2,
        0.0,
        0.0,
        smp,
        Some(0.0),
        Some(smp / 2.0),
        Some(smp / 2.0),
    )?)
}

/// Ground state of H_μ = Jx² − μJz for N spin-1/2 particles, solved on the
/// symmetric subspace (total spin J = N/2, dimension N+1).
///
/// μ = 0 is the Dicke state; μ → ∞ the fully z-polarized coherent state.
pub fn squeezed_state_moments(n: u64, mu: f64) -> Result<SymmetricStateMoments, StatesError> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(StatesError::InvalidInput {
            what: format!("particle number N = {n} must be even and positive"),
        });
    }
    if mu.is_nan() || mu < 0.0 {
        return Err(StatesError::InvalidInput {
            what: format!("μ = {mu} must be nonnegative"),
        });
    }
    let big_j = SpinLength::from_two_j(u32::try_from(n).map_err(|_| {
        StatesError::InvalidInput {
            what: format!("N = {n} too large"),
        }
    })?)?;
    let ground = squeezing_ground_state(big_j, mu, 0.0)?;
    let moments = xbasis_moments(&ground.vector, big_j)?;
    Ok(SymmetricStateMoments {
        n,
        j: SpinLength::HALF,
        moments,
        tag: DerivationTag::HmuGround { mu },
    })
}

/// Mix symmetric-state moments with white noise: means scale by (1−p) and
/// second moments relax towards the isotropic value Nj(j+1)/3.
pub fn apply_white_noise(
    s: &SymmetricStateMoments,
    p: f64,
) -> Result<SymmetricStateMoments, StatesError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(StatesError::InvalidInput {
            what: format!("noise probability p = {p}"),
        });
    }
    let jv = s.j.value();
    let white_second = s.n as f64 * jv * (jv + 1.0) / 3.0;
    let mut mean = s.moments.mean;
    for m in &mut mean {
        *m *= 1.0 - p;
    }
    let mut second = s.moments.second;
    for (a, row) in second.iter_mut().enumerate() {
        for (b, v) in row.iter_mut().enumerate() {
            *v *= 1.0 - p;
            if a == b {
                *v += p * white_second;
            }
        }
    }
    Ok(SymmetricStateMoments {
        n: s.n,
        j: s.j,
        moments: CollectiveMoments { mean, second },
        tag: DerivationTag::WhiteNoiseMixture { p },
    })
}

/// Decohere m of the N qubits into the completely mixed state, working in
/// correlation space.
///
/// Permutation symmetry gives the single-particle moments ⟨j_l⟩ = ⟨J_l⟩/N
/// and the pair correlations C_l = (⟨J_l²⟩ − N/4)/(N(N−1)); recombining
/// N−m intact particles with m maximally mixed ones (whose first moments
/// vanish) yields ⟨J_l⟩' = (N−m)⟨j_l⟩ and ⟨J_l²⟩' = N/4 + (N−m)(N−m−1)C_l.
pub fn decohere_particles(
    s: &SymmetricStateMoments,
    m: u64,
) -> Result<MeasurementRecord, StatesError> {
    if s.j != SpinLength::HALF {
        return Err(StatesError::InvalidInput {
            what: format!("decoherence model requires j = 1/2, got 2j = {}", s.j.two_j()),
        });
    }
    if m > s.n {
        return Err(StatesError::InvalidInput {
            what: format!("cannot decohere m = {m} of N = {} particles", s.n),
        });
    }
    let nf = s.n as f64;
    let keep = (s.n - m) as f64;

    let mut mean = [0.0; 3];
    let mut second = [0.0; 3];
    for axis in 0..3 {
        let single = s.moments.mean[axis] / nf;
        let corr = if s.n >= 2 {
            (s.moments.second[axis][axis] - nf / 4.0) / (nf * (nf - 1.0))
        } else {
            0.0
        };
        if corr.abs() > 0.25 + 1e-9 {
            return Err(StatesError::NotSymmetric {
                what: format!("pair correlation {corr} outside [-1/4, 1/4]"),
            });
        }
        mean[axis] = keep * single;
        second[axis] = nf / 4.0 + keep * (keep - 1.0) * corr;
    }

    Ok(MeasurementRecord::new(
        s.n,
        SpinLength::HALF,
        second[0] - mean[0] * mean[0],
        mean[1],
        mean[2],
        second[1] + second[2],
        Some(mean[0]),
        Some(second[1] - mean[1] * mean[1]),
        Some(second[2] - mean[2] * mean[2]),
    )?)
}

/// Largest tensor-product dimension accepted per group.
const GROUP_DIM_LIMIT: usize = 1 << 15;

/// Apply a single-site operator to `psi` at the given site of a
/// `sites`-fold product space with local dimension `d1`, accumulating into
/// `out`.
fn apply_site(
    op: &DMatrix<Complex64>,
    psi: &[Complex64],
    site: usize,
    d1: usize,
    out: &mut [Complex64],
) {
    let stride = d1.pow(site as u32);
    for (i, o) in out.iter_mut().enumerate() {
        let a = (i / stride) % d1;
        let base = i - a * stride;
        let mut acc = Complex64::new(0.0, 0.0);
        for b in 0..d1 {
            let el = op[(a, b)];
            if el != Complex64::new(0.0, 0.0) {
                acc += el * psi[base + b * stride];
            }
        }
        *o += acc;
    }
}

/// y = (Σ_sites op_site) ψ for a collective single-group operator.
fn apply_collective(
    op: &DMatrix<Complex64>,
    psi: &[Complex64],
    sites: usize,
    d1: usize,
) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for site in 0..sites {
        apply_site(op, psi, site, d1, &mut out);
    }
    out
}

fn haar_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for c in &mut v {
        *c /= norm;
    }
    v
}

/// Exact collective moments of a random pure producible state: one
/// Haar-random pure state per group, moments summed over groups using the
/// additivity of the variance for tensor products.
///
/// The partition entries are the group sizes (Σ k_l = N); the state is
/// k-producible for k = max k_l.
pub fn random_producible_moments(
    n: u64,
    j: SpinLength,
    partition: &[u64],
    seed: u64,
) -> Result<MeasurementRecord, StatesError> {
    if partition.is_empty() || partition.contains(&0) {
        return Err(StatesError::InvalidInput {
            what: "partition must be a nonempty list of positive group sizes".into(),
        });
    }
    if partition.iter().sum::<u64>() != n {
        return Err(StatesError::InvalidInput {
            what: format!("partition sums to {} but N = {n}", partition.iter().sum::<u64>()),
        });
    }
    let d1 = j.dimension();
    let single = build_spin_matrices(j, Basis::Z);
    let ops = [&single.lx, &single.ly, &single.lz];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mean_total = [0.0; 3];
    let mut var_total = [0.0; 3];
    for &k in partition {
        let sites = usize::try_from(k).unwrap();
        let dim = d1
            .checked_pow(u32::try_from(sites).unwrap_or(u32::MAX))
            .filter(|&d| d <= GROUP_DIM_LIMIT)
            .ok_or(StatesError::SizeLimitExceeded {
                dim: usize::MAX,
                limit: GROUP_DIM_LIMIT,
            })?;
        let psi = haar_vector(&mut rng, dim);
        for (axis, op) in ops.iter().enumerate() {
            let gpsi = apply_collective(op, &psi, sites, d1);
            let mean: f64 = psi
                .iter()
                .zip(&gpsi)
                .map(|(a, b)| (a.conj() * b).re)
                .sum();
            let second: f64 = gpsi.iter().map(|c| c.norm_sqr()).sum();
            mean_total[axis] += mean;
            var_total[axis] += second - mean * mean;
        }
    }

    let jy2 = var_total[1] + mean_total[1] * mean_total[1];
    let jz2 = var_total[2] + mean_total[2] * mean_total[2];
    Ok(MeasurementRecord::new(
        n,
        j,
        var_total[0],
        mean_total[1],
        mean_total[2],
        jy2 + jz2,
        Some(mean_total[0]),
        Some(var_total[1]),
        Some(var_total[2]),
    )?)
}

/// Tightness diagnostics: the neglected quantity 𝒳 = Σ_l ⟨(J_x^{(l)})²⟩
/// over the groups of the partition, for permutation-symmetric qubit
/// moments.
///
/// With pair correlation C_x this is N/4 + C_x·Σ_l k_l(k_l−1); squeezed
/// states have C_x ≤ 0, so 𝒳 ≤ Nj/2 = N/4 with equality for product
/// states.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TightnessReport {
    pub script_x: f64,
    pub second_moment_perp: f64,
    /// 𝒳 ≤ Nj/2 within tolerance.
    pub bound_satisfied: bool,
}

pub fn tightness_diagnostics(
    s: &SymmetricStateMoments,
    partition: &[u64],
) -> Result<TightnessReport, StatesError> {
    if s.j != SpinLength::HALF {
        return Err(StatesError::InvalidInput {
            what: format!("tightness diagnostics require j = 1/2, got 2j = {}", s.j.two_j()),
        });
    }
    if partition.iter().sum::<u64>() != s.n {
        return Err(StatesError::InvalidInput {
            what: "partition must sum to N".into(),
        });
    }
    let nf = s.n as f64;
    let corr = if s.n >= 2 {
        (s.moments.second[0][0] - nf / 4.0) / (nf * (nf - 1.0))
    } else {
        0.0
    };
    let pair_count: f64 = partition.iter().map(|&k| (k * (k - 1)) as f64).sum();
    let script_x = nf / 4.0 + corr * pair_count;
    let bound = nf / 4.0;
    Ok(TightnessReport {
        script_x,
        second_moment_perp: s.moments.second_moment_perp(),
        bound_satisfied: script_x <= bound + 1e-9 * nf.max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dicke_closed_form_moments() {
        let rec = dicke_moments(2, SpinLength::HALF);
        assert_eq!(rec.second_moment_perp, 2.0); // Nj(Nj+1) = 1·2
        assert_eq!(rec.var_jx, 0.0);
        assert_eq!(rec.mean_jz, 0.0);
        let rec = dicke_moments(5, SpinLength::ONE);
        assert_eq!(rec.second_moment_perp, 30.0);
    }

    #[test]
    fn noisy_dicke_limits_and_affinity() {
        let j = SpinLength::HALF;
        let clean = noisy_dicke_moments(20, j, 0.0).unwrap();
        assert_eq!(clean, dicke_moments(20, j));

        // p = 1 is pure white noise: ⟨J_l²⟩ = N/4 at j = 1/2.
        let white = noisy_dicke_moments(20, j, 1.0).unwrap();
        assert_abs_diff_eq!(white.var_jx, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(white.second_moment_perp, 10.0, epsilon = 1e-12);

        // moments of a mixture are affine in p
        let a = noisy_dicke_moments(20, j, 0.3).unwrap();
        let b = noisy_dicke_moments(20, j, 0.7).unwrap();
        let mid = noisy_dicke_moments(20, j, 0.5).unwrap();
        assert_abs_diff_eq!(
            mid.second_moment_perp,
            0.5 * (a.second_moment_perp + b.second_moment_perp),
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(mid.var_jx, 0.5 * (a.var_jx + b.var_jx), epsilon = 1e-9);

        assert!(noisy_dicke_moments(20, j, 1.5).is_err());
    }

    #[test]
    fn squeezed_state_limits() {
        // μ = 0 reproduces the Dicke moments.
        let s = squeezed_state_moments(12, 0.0).unwrap();
        let rec = s.to_record().unwrap();
        let dicke = dicke_moments(12, SpinLength::HALF);
        assert_abs_diff_eq!(rec.var_jx, dicke.var_jx, epsilon = 1e-10);
        assert_abs_diff_eq!(
            rec.second_moment_perp,
            dicke.second_moment_perp,
            epsilon = 1e-8
        );

        // large μ approaches the fully z-polarized coherent state
        let s = squeezed_state_moments(12, 1e6).unwrap();
        let rec = s.to_record().unwrap();
        assert_abs_diff_eq!(rec.mean_jz, 6.0, epsilon = 1e-3);
        assert_abs_diff_eq!(rec.var_jx, 3.0, epsilon = 1e-2);

        assert!(squeezed_state_moments(11, 1.0).is_err());
        assert!(squeezed_state_moments(12, -1.0).is_err());
    }

    #[test]
    fn hmu_ground_second_moment_window() {
        // Nj(Nj+1/2) ≤ ⟨Jy²+Jz²⟩ ≤ Nj(Nj+1), and the Casimir fixes the sum.
        let n = 30u64;
        let nj = n as f64 / 2.0;
        for mu in [0.0, 0.01, 0.3, 1.0, 10.0, 1e4] {
            let s = squeezed_state_moments(n, mu).unwrap();
            let smp = s.moments.second_moment_perp();
            assert!(smp <= nj * (nj + 1.0) + 1e-8, "μ={mu}");
            assert!(smp >= nj * (nj + 0.5) - 1e-8, "μ={mu}");
            let total = s.moments.second[0][0] + smp;
            assert_abs_diff_eq!(total, nj * (nj + 1.0), epsilon = 1e-8);
        }
    }

    #[test]
    fn decohere_identity_and_full_noise() {
        let s = squeezed_state_moments(16, 0.7).unwrap();
        let same = decohere_particles(&s, 0).unwrap();
        let direct = s.to_record().unwrap();
        assert_abs_diff_eq!(same.var_jx, direct.var_jx, epsilon = 1e-10);
        assert_abs_diff_eq!(
            same.second_moment_perp,
            direct.second_moment_perp,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(same.mean_jz, direct.mean_jz, epsilon = 1e-10);

        // m = N gives the white-noise record, matching noisy_dicke at p = 1.
        let white = decohere_particles(&s, 16).unwrap();
        let reference = noisy_dicke_moments(16, SpinLength::HALF, 1.0).unwrap();
        assert_abs_diff_eq!(white.var_jx, reference.var_jx, epsilon = 1e-10);
        assert_abs_diff_eq!(
            white.second_moment_perp,
            reference.second_moment_perp,
            epsilon = 1e-10
        );
        assert_abs_diff_eq!(white.mean_jz, 0.0, epsilon = 1e-12);

        assert!(decohere_particles(&s, 17).is_err());
    }

    #[test]
    fn white_noise_on_symmetric_moments_matches_noisy_dicke() {
        let s = squeezed_state_moments(10, 0.0).unwrap();
        let noisy = apply_white_noise(&s, 0.25).unwrap();
        let rec = noisy.to_record().unwrap();
        let reference = noisy_dicke_moments(10, SpinLength::HALF, 0.25).unwrap();
        assert_abs_diff_eq!(rec.var_jx, reference.var_jx, epsilon = 1e-9);
        assert_abs_diff_eq!(
            rec.second_moment_perp,
            reference.second_moment_perp,
            epsilon = 1e-8
        );
    }

    #[test]
    fn producible_moments_respect_partition_arithmetic() {
        // singleton partition of qubits: ⟨J_l²⟩ components sum of
        // single-spin terms, i.e. Σ var = N/4.
        let rec = random_producible_moments(6, SpinLength::HALF, &[1; 6], 11).unwrap();
        let var_sum = rec.var_jx + rec.var_jy.unwrap() + rec.var_jz.unwrap();
        assert_abs_diff_eq!(var_sum, 6.0 / 4.0 * 2.0, epsilon = 1e-9);

        assert!(random_producible_moments(6, SpinLength::HALF, &[1; 5], 0).is_err());
        assert!(random_producible_moments(40, SpinLength::HALF, &[40], 0).is_err());
    }

    #[test]
    fn tightness_diagnostics_reference_values() {
        // fully z-polarized: C_x = 0, 𝒳 = N/4 for any partition.
        let s = SymmetricStateMoments::z_polarized(8);
        let report = tightness_diagnostics(&s, &[1; 8]).unwrap();
        assert_abs_diff_eq!(report.script_x, 2.0, epsilon = 1e-12);
        assert!(report.bound_satisfied);
        assert_abs_diff_eq!(report.second_moment_perp, 18.0, epsilon = 1e-12); // Nj(Nj+1/2)

        // Dicke: C_x < 0, so grouped 𝒳 drops below N/4.
        let s = squeezed_state_moments(8, 0.0).unwrap();
        let report = tightness_diagnostics(&s, &[2; 4]).unwrap();
        assert!(report.script_x < 2.0);
        assert!(report.bound_satisfied);
        assert_abs_diff_eq!(report.second_moment_perp, 20.0, epsilon = 1e-8); // Nj(Nj+1)
    }
}
