//! Coordinate groups from the worked examples, sampled condition checks,
//! finite-difference infinitesimal actions and embedded expected data.

mod builtin;
mod derive;
mod groups;
mod smooth;

pub use builtin::{
    builtin, e2_canonical_basis, e2_rotation_operator, e2_skew_basis, shear_semidirect_spec, Bundle,
    BundleFile, Expected, BUILTIN_NAMES,
};
pub use derive::{
    derive_infinitesimal_action, exact_action_in_basis, observed_convergence_order, target_algebra,
    ConvergenceOrder, DerivedAction, DEFAULT_CONVERGENCE_TOL, DEFAULT_STEP,
};
pub use groups::{wrap_angle, Euclidean, Euclidean2, Heisenberg, ParametricGroup};
pub use smooth::{
    heisenberg_center_kernel, heisenberg_conjugation_discrepancy, heisenberg_conjugation_formula,
    identity_kernel, sampled_condition_check, translations_kernel, ActionAxiomResiduals, KernelTest,
    SampledClause, SampledConditionReport, SampledWitness, SmoothAction,
};
