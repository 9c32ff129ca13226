//! Infinitesimal actions from smooth ones by central mixed differences.

use serde::{Deserialize, Serialize};

use super::smooth::SmoothAction;
use crate::error::{Error, Result};
use crate::lie_core::{BasisChange, LieAlgebra};
use crate::report::ValidationReport;
use crate::twisted_lie::{check_derivation_property, InfinitesimalAction, Operator};

pub const DEFAULT_STEP: f64 = 1e-4;
pub const DEFAULT_CONVERGENCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct DerivedAction {
    pub action: InfinitesimalAction,
    pub step: f64,
    /// Largest entry gap between the estimates at `step` and `step / 2`.
    pub richardson_residual: f64,
    /// `C` in `|error| ≈ C h²`, from the same two estimates.
    pub estimated_constant: f64,
    /// Derivation property of the estimate on the target algebra.
    pub derivation: ValidationReport,
}

/// `∂²/∂t∂s log(apply(exp(tY), exp(sX)))` at zero, in ambient algebra coordinates.
fn mixed_difference(action: &SmoothAction, y: &[f64], x: &[f64], h: f64) -> Vec<f64> {
    let (acting, target) = (&action.acting, &action.target);
    let f = |t: f64, s: f64| {
        let ht: Vec<f64> = y.iter().map(|c| c * t).collect();
        let gs: Vec<f64> = x.iter().map(|c| c * s).collect();
        target.log(&action.apply(&acting.exp(&ht), &target.exp(&gs)))
    };
    let (pp, pm, mp, mm) = (f(h, h), f(h, -h), f(-h, h), f(-h, -h));
    (0..pp.len())
        .map(|k| (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h * h))
        .collect()
}

/// One matrix per acting basis vector, entries in the target basis.
fn estimate(
    action: &SmoothAction,
    basis_acting: &[Vec<f64>],
    basis_target: &[Vec<f64>],
    change: &BasisChange,
    h: f64,
) -> Result<Vec<Vec<Vec<f64>>>> {
    basis_acting
        .iter()
        .map(|y| {
            basis_target
                .iter()
                .map(|x| change.to_basis(&mixed_difference(action, y, x, h)))
                .collect()
        })
        .collect()
}

fn max_gap(a: &[Vec<Vec<f64>>], b: &[Vec<Vec<f64>>]) -> f64 {
    a.iter()
        .flatten()
        .flatten()
        .zip(b.iter().flatten().flatten())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn check_basis(basis: &[Vec<f64>], dim: usize, context: &'static str) -> Result<()> {
    if basis.len() != dim {
        return Err(Error::DimensionMismatch {
            context,
            expected: dim,
            actual: basis.len(),
        });
    }
    Ok(())
}

/// Target algebra re-expressed in `basis_target`.
pub fn target_algebra(action: &SmoothAction, basis_target: &[Vec<f64>]) -> Result<LieAlgebra> {
    let target = action.target.clone();
    LieAlgebra::from_bracket_in_basis(basis_target, move |u, v| target.bracket(u, v))
}

/// Estimates `L(Y)(X)` for every pair of basis vectors. The estimate at
/// `step` is compared with the one at `step / 2`; a gap above
/// `convergence_tol` is reported as [`Error::NonConvergence`].
pub fn derive_infinitesimal_action(
    action: &SmoothAction,
    basis_acting: &[Vec<f64>],
    basis_target: &[Vec<f64>],
    step: f64,
    convergence_tol: f64,
) -> Result<DerivedAction> {
    if !(step > 0.0) {
        return Err(Error::InvalidAction(format!("step must be positive, got {step}")));
    }
    check_basis(basis_acting, action.acting.dim(), "acting basis")?;
    check_basis(basis_target, action.target.dim(), "target basis")?;
    let change = BasisChange::new(basis_target)?;
    let coarse = estimate(action, basis_acting, basis_target, &change, step)?;
    let fine = estimate(action, basis_acting, basis_target, &change, step / 2.0)?;
    let residual = max_gap(&coarse, &fine);
    if !(residual <= convergence_tol) {
        return Err(Error::NonConvergence {
            residual,
            tolerance: convergence_tol,
        });
    }
    let matrices = fine
        .iter()
        .map(|images| Operator::from_columns(images))
        .collect::<Result<Vec<_>>>()?;
    let derived = InfinitesimalAction::new(basis_acting.len(), basis_target.len(), matrices)?;
    let algebra = target_algebra(action, basis_target)?;
    // derivation defects inherit the O(h²) error of the estimate
    let derivation = check_derivation_property(&derived, &algebra, convergence_tol)?;
    Ok(DerivedAction {
        action: derived,
        step,
        richardson_residual: residual,
        estimated_constant: residual / (0.75 * step * step),
        derivation,
    })
}

/// Convergence of the estimate over steps `h`, `h/2`, `h/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceOrder {
    pub step: f64,
    pub gap_coarse: f64,
    pub gap_fine: f64,
    /// `log2(gap_coarse / gap_fine)`; `None` when both gaps are at roundoff
    /// level, i.e. the difference quotient is already exact.
    pub order: Option<f64>,
}

pub fn observed_convergence_order(
    action: &SmoothAction,
    basis_acting: &[Vec<f64>],
    basis_target: &[Vec<f64>],
    step: f64,
) -> Result<ConvergenceOrder> {
    let change = BasisChange::new(basis_target)?;
    let d: Vec<_> = [step, step / 2.0, step / 4.0]
        .iter()
        .map(|&h| estimate(action, basis_acting, basis_target, &change, h))
        .collect::<Result<_>>()?;
    let gap_coarse = max_gap(&d[0], &d[1]);
    let gap_fine = max_gap(&d[1], &d[2]);
    let floor = 1e3 * f64::EPSILON / (step * step / 16.0);
    let order = (gap_fine > floor.min(1e-10)).then(|| (gap_coarse / gap_fine).log2());
    Ok(ConvergenceOrder {
        step,
        gap_coarse,
        gap_fine,
        order,
    })
}

/// Builds an infinitesimal action from a closed form `f(Y, X) = L(Y)(X)`
/// given in ambient coordinates, re-expressed in the two bases.
pub fn exact_action_in_basis(
    basis_acting: &[Vec<f64>],
    basis_target: &[Vec<f64>],
    f: impl Fn(&[f64], &[f64]) -> Vec<f64>,
) -> Result<InfinitesimalAction> {
    let change = BasisChange::new(basis_target)?;
    let matrices = basis_acting
        .iter()
        .map(|y| {
            let images = basis_target
                .iter()
                .map(|x| change.to_basis(&f(y, x)))
                .collect::<Result<Vec<_>>>()?;
            Operator::from_columns(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    InfinitesimalAction::new(basis_acting.len(), basis_target.len(), matrices)
}
