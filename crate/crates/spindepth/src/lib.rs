//! Certify the entanglement depth of collective-spin measurement data.
//!
//! An ensemble of N spin-j particles is probed only through collective
//! observables: the variance (ΔJx)² together with either the polarization
//! ⟨Jy⟩² + ⟨Jz⟩² or the perpendicular second moment ⟨Jy² + Jz²⟩. The depth
//! criteria implemented here compare such data against boundary functions
//! F_J and G_J obtained from ground states of small tridiagonal
//! Hamiltonians H = Lx² − λLz (one group of k particles, total spin J = kj).
//! Data below a k-producibility boundary certifies that at least k+1
//! particles are mutually entangled.
//!
//! Module map:
//! - [`spin`]: collective spin operators, squeezing Hamiltonians, ground
//!   states of the tridiagonal form.
//! - [`boundary`]: boundary curves F_J/G_J, analytic bounds, convexity
//!   diagnostics, producibility boundaries, disk cache.
//! - [`criteria`]: measurement records, the nonlinear/linear/qubit depth
//!   criteria and the depth search.
//! - [`states`]: exact moments for reference states (Dicke, noisy Dicke,
//!   squeezed, decohered, random producible) used as oracles and simulators.
//! - [`fluctuating`]: criteria for ensembles with a fluctuating particle
//!   number.

pub mod boundary;
pub mod criteria;
mod eigen;
pub mod fluctuating;
pub mod io;
pub mod spin;
pub mod states;

mod book;

pub use boundary::{
    compute_f_curve, compute_f_curve_halfinteger, compute_f_halfinteger,
    compute_g_curve_halfinteger, convexity_check,
    g_from_f, producibility_boundary, tangent_bound, tilde_g, AlphaProbe, BoundaryCurve,
    BoundaryError, BoundaryPoint, ConvexityReport, CurveCache, CurveConfig, CurveKind,
    CurveProvenance, CurveSample, ProducibilityBoundary,
};
pub use criteria::{
    detect_depth, duan_criterion, nonlinear_criterion, nonlinear_tilde_criterion,
    observation3_predicate, qubit_tangent_criterion, sm_criterion, sm_tilde_criterion, xi2,
    xi2_sm, CriterionError, CriterionId, CriterionResult, DepthOptions, DepthVerdict,
    MeasurementRecord, RawRecord, RecordError,
};
pub use eigen::{ground_state, EigenPair};
pub use fluctuating::{
    detect_depth_fluctuating, fluctuating_linear_parameters, fluctuating_nonlinear,
    fluctuating_sm, w_expectation, xi2_fluctuating, xi2_sm_fluctuating, FluctError, NBin,
    PooledVariance, Shot, ShotEnsemble, WStatistic,
};
pub use spin::{
    build_spin_matrices, moments, squeezing_ground_state, squeezing_hamiltonian, Basis,
    CollectiveMoments, GroundState, SpinError, SpinLength, SpinMatrices, SpinMoments,
    TridiagonalSym,
};
pub use states::{
    apply_white_noise, decohere_particles, dicke_moments, noisy_dicke_moments,
    random_producible_moments, squeezed_state_moments, tightness_diagnostics, DerivationTag,
    NoiseSpec, StatesError, SymmetricStateMoments, TightnessReport,
};
