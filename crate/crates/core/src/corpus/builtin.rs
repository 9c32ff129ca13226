//! Named worked examples with their expected curvature data.

use std::f64::consts::FRAC_1_SQRT_2 as S;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::derive::{derive_infinitesimal_action, exact_action_in_basis, DEFAULT_CONVERGENCE_TOL};
use super::groups::{Euclidean2, Heisenberg, ParametricGroup};
use super::smooth::SmoothAction;
use crate::error::{Error, Result};
use crate::io::{AlgebraFile, TwistSpecFile};
use crate::lie_core::{LieAlgebra, StructureTensor};
use crate::twisted_lie::{build_twisted_algebra, InfinitesimalAction, TwistSpec};

pub const BUILTIN_NAMES: [&str; 6] = [
    "heisenberg",
    "e2_canonical",
    "e2_skew",
    "gamma_star_gamma",
    "e2_star_e2_canonical",
    "e2_star_e2_skew",
];

/// Expected values, constants 1-based with `i < j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub sectional: Vec<Vec<f64>>,
    pub scalar: f64,
    pub constants: Vec<(usize, usize, usize, f64)>,
}

#[derive(Debug, Clone)]
pub struct Bundle {
    pub name: String,
    pub description: String,
    /// The factor algebra in the chosen orthonormal basis.
    pub base: LieAlgebra,
    /// Present for twisted products of `base` with itself.
    pub twist: Option<TwistSpec>,
    pub expected: Expected,
    /// The group action `L` and `M` come from, with the basis in ambient
    /// algebra coordinates.
    pub smooth_action: Option<SmoothAction>,
    pub basis: Vec<Vec<f64>>,
}

/// Serialized shape of a bundle, also the golden file layout.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleFile {
    pub name: String,
    pub description: String,
    pub base: AlgebraFile,
    pub twist: Option<TwistSpecFile>,
    pub expected: Expected,
}

impl Bundle {
    /// The algebra whose curvature is expected: the twisted product if any,
    /// otherwise the base.
    pub fn target(&self, tol: f64) -> Result<LieAlgebra> {
        match &self.twist {
            Some(spec) => Ok(build_twisted_algebra(spec, tol)?.algebra),
            None => Ok(self.base.clone()),
        }
    }

    /// The twist spec with `L` and `M` estimated by finite differences from
    /// the group action instead of the closed forms.
    pub fn derived_twist(&self, step: f64) -> Result<Option<TwistSpec>> {
        let (Some(_), Some(action)) = (&self.twist, &self.smooth_action) else {
            return Ok(None);
        };
        let d = derive_infinitesimal_action(action, &self.basis, &self.basis, step, DEFAULT_CONVERGENCE_TOL)?;
        TwistSpec::new(self.base.clone(), self.base.clone(), d.action.clone(), d.action).map(Some)
    }

    pub fn to_file(&self) -> BundleFile {
        BundleFile {
            name: self.name.clone(),
            description: self.description.clone(),
            base: AlgebraFile::from_algebra(&self.base),
            twist: self.twist.as_ref().map(TwistSpecFile::inline),
            expected: self.expected.clone(),
        }
    }

    /// Pretty JSON with a trailing newline; the golden rendering.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("bundle serializes");
        s.push('\n');
        s
    }
}

fn normalize(dim: usize, one_based: &[(usize, usize, usize, f64)]) -> Vec<(usize, usize, usize, f64)> {
    let zero: Vec<_> = one_based.iter().map(|&(i, j, k, v)| (i - 1, j - 1, k - 1, v)).collect();
    StructureTensor::from_constants(dim, &zero)
        .expect("embedded constants are consistent")
        .upper_constants()
        .into_iter()
        .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v))
        .collect()
}

fn matrix(rows: &[&[f64]]) -> Vec<Vec<f64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn zeros(n: usize) -> Vec<Vec<f64>> {
    vec![vec![0.0; n]; n]
}

fn standard_basis(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

/// Rotation generator with coefficient `-1/√2` and the two unit translations.
pub fn e2_canonical_basis() -> Vec<Vec<f64>> {
    vec![vec![-S, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]
}

/// Rotation generator `-1/2` plus translation `(1/2, 1/2)`, and the unit translations.
pub fn e2_skew_basis() -> Vec<Vec<f64>> {
    vec![vec![-0.5, 0.5, 0.5], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]
}

/// `L(Y)(X) = (0, ω_Y J v_X)`, the differential of the rotation-of-translations action.
pub fn e2_rotation_operator(y: &[f64], x: &[f64]) -> Vec<f64> {
    vec![0.0, -y[0] * x[2], y[0] * x[1]]
}

fn e2_algebra(basis: &[Vec<f64>]) -> LieAlgebra {
    LieAlgebra::from_bracket_in_basis(basis, |u, v| Euclidean2.bracket(u, v)).expect("invertible basis")
}

fn e2_twist(basis: &[Vec<f64>]) -> TwistSpec {
    let alg = e2_algebra(basis);
    let l = exact_action_in_basis(basis, basis, e2_rotation_operator).expect("invertible basis");
    TwistSpec::new(alg.clone(), alg, l.clone(), l).expect("dimensions agree")
}

/// `R²` extended by `R¹` through the shear, with the exact operator
/// `L(y)(x) = (0, y x1)`. Its twisted algebra is the Heisenberg algebra.
pub fn shear_semidirect_spec() -> TwistSpec {
    let l = exact_action_in_basis(&standard_basis(1), &standard_basis(2), |y, x| vec![0.0, y[0] * x[0]])
        .expect("standard basis");
    TwistSpec::new(
        LieAlgebra::abelian(2),
        LieAlgebra::abelian(1),
        l,
        InfinitesimalAction::zero(2, 1),
    )
    .expect("dimensions agree")
}

pub fn builtin(name: &str) -> Result<Bundle> {
    let heis_sectional = matrix(&[&[0.0, 0.25, -0.75], &[0.25, 0.0, 0.25], &[-0.75, 0.25, 0.0]]);
    let bundle = match name {
        "heisenberg" => Bundle {
            name: name.into(),
            description: "Heisenberg algebra, [e1, e3] = -e2".into(),
            base: LieAlgebra::heisenberg(),
            twist: None,
            expected: Expected {
                sectional: heis_sectional,
                scalar: -0.5,
                constants: normalize(3, &[(1, 3, 2, -1.0)]),
            },
            smooth_action: None,
            basis: standard_basis(3),
        },
        "e2_canonical" => Bundle {
            name: name.into(),
            description: "e(2) with rotation generator scaled by 1/sqrt(2)".into(),
            base: e2_algebra(&e2_canonical_basis()),
            twist: None,
            expected: Expected {
                sectional: zeros(3),
                scalar: 0.0,
                constants: normalize(3, &[(1, 2, 3, -S), (1, 3, 2, S)]),
            },
            smooth_action: None,
            basis: e2_canonical_basis(),
        },
        "e2_skew" => Bundle {
            name: name.into(),
            description: "e(2) with the skew basis e1 = (-1/2 rotation, (1/2, 1/2))".into(),
            base: e2_algebra(&e2_skew_basis()),
            twist: None,
            expected: Expected {
                sectional: zeros(3),
                scalar: 0.0,
                constants: normalize(3, &[(1, 2, 3, -0.5), (1, 3, 2, 0.5)]),
            },
            smooth_action: None,
            basis: e2_skew_basis(),
        },
        "gamma_star_gamma" => {
            let base = LieAlgebra::heisenberg();
            let l = exact_action_in_basis(&standard_basis(3), &standard_basis(3), |y, x| {
                Heisenberg.bracket(y, x)
            })?;
            Bundle {
                name: name.into(),
                description: "Heisenberg group twisted with itself by conjugation".into(),
                twist: Some(TwistSpec::new(base.clone(), base.clone(), l.clone(), l)?),
                base,
                expected: Expected {
                    sectional: matrix(&[
                        &[0.0, 0.5, -0.75, 0.0, 0.25, -1.5],
                        &[0.5, 0.0, 0.5, 0.25, 0.0, 0.25],
                        &[-0.75, 0.5, 0.0, -1.5, 0.25, 0.0],
                        &[0.0, 0.25, -1.5, 0.0, 0.5, -0.75],
                        &[0.25, 0.0, 0.25, 0.5, 0.0, 0.5],
                        &[-1.5, 0.25, 0.0, -0.75, 0.5, 0.0],
                    ]),
                    scalar: -3.0,
                    constants: normalize(
                        6,
                        &[
                            (1, 3, 2, -1.0),
                            (4, 3, 2, -1.0),
                            (4, 3, 5, -1.0),
                            (1, 6, 2, -1.0),
                            (1, 6, 5, -1.0),
                            (4, 6, 5, -1.0),
                            (3, 1, 2, 1.0),
                            (3, 4, 2, 1.0),
                            (3, 4, 5, 1.0),
                            (6, 1, 2, 1.0),
                            (6, 1, 5, 1.0),
                            (6, 4, 5, 1.0),
                        ],
                    ),
                },
                smooth_action: Some(SmoothAction::inner(Arc::new(Heisenberg))),
                basis: standard_basis(3),
            }
        }
        "e2_star_e2_canonical" => {
            let basis = e2_canonical_basis();
            Bundle {
                name: name.into(),
                description: "E(2) twisted with itself by rotation of translations, canonical basis".into(),
                base: e2_algebra(&basis),
                twist: Some(e2_twist(&basis)),
                expected: Expected {
                    sectional: zeros(6),
                    scalar: 0.0,
                    constants: normalize(
                        6,
                        &[
                            (1, 2, 3, -S),
                            (1, 3, 2, S),
                            (4, 5, 6, -S),
                            (4, 6, 5, S),
                            (1, 5, 6, -S),
                            (1, 6, 5, S),
                            (4, 2, 3, -S),
                            (4, 3, 2, S),
                        ],
                    ),
                },
                smooth_action: Some(SmoothAction::e2_rotation_of_translations()),
                basis,
            }
        }
        "e2_star_e2_skew" => {
            let basis = e2_skew_basis();
            let (a, b, c) = (1.0 / 64.0, -3.0 / 16.0, 0.0);
            Bundle {
                name: name.into(),
                description: "E(2) twisted with itself by rotation of translations, skew basis".into(),
                base: e2_algebra(&basis),
                twist: Some(e2_twist(&basis)),
                expected: Expected {
                    sectional: matrix(&[
                        &[c, a, a, b, a, a],
                        &[a, c, c, a, c, c],
                        &[a, c, c, a, c, c],
                        &[b, a, a, c, a, a],
                        &[a, c, c, a, c, c],
                        &[a, c, c, a, c, c],
                    ]),
                    scalar: -0.125,
                    constants: normalize(
                        6,
                        &[
                            (1, 2, 3, -0.5),
                            (1, 3, 2, 0.5),
                            (4, 5, 6, -0.5),
                            (4, 6, 5, 0.5),
                            (1, 4, 2, -0.25),
                            (1, 4, 3, 0.25),
                            (1, 4, 5, 0.25),
                            (1, 4, 6, -0.25),
                            (1, 5, 6, -0.5),
                            (1, 6, 5, 0.5),
                            (4, 2, 3, -0.5),
                            (4, 3, 2, 0.5),
                        ],
                    ),
                },
                smooth_action: Some(SmoothAction::e2_rotation_of_translations()),
                basis,
            }
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{scalar_curvature, sectional_curvatures};
    use crate::twisted_lie::build_inner_twist;

    fn max_matrix_gap(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    fn max_constant_gap(alg: &LieAlgebra, expected: &[(usize, usize, usize, f64)]) -> f64 {
        let zero: Vec<_> = expected.iter().map(|&(i, j, k, v)| (i - 1, j - 1, k - 1, v)).collect();
        let t = StructureTensor::from_constants(alg.dim(), &zero).unwrap();
        t.max_abs_diff(&alg.tensor)
    }

    #[test]
    fn every_builtin_matches_its_expected_values() {
        for name in BUILTIN_NAMES {
            let b = builtin(name).unwrap();
            let alg = b.target(1e-12).unwrap();
            assert!(max_matrix_gap(&sectional_curvatures(&alg), &b.expected.sectional) <= 1e-12, "{name}");
            assert!((scalar_curvature(&alg) - b.expected.scalar).abs() <= 1e-12, "{name}");
            assert!(max_constant_gap(&alg, &b.expected.constants) <= 1e-12, "{name}");
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(builtin("e3"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn derived_operators_reproduce_constants() {
        for name in ["gamma_star_gamma", "e2_star_e2_canonical", "e2_star_e2_skew"] {
            let b = builtin(name).unwrap();
            let spec = b.derived_twist(1e-4).unwrap().unwrap();
            let exact = b.twist.as_ref().unwrap();
            assert!(spec.l.max_abs_diff(&exact.l) < 1e-6, "{name}");
            let alg = build_twisted_algebra(&spec, 1e-6).unwrap().algebra;
            assert!(max_constant_gap(&alg, &b.expected.constants) < 1e-6, "{name}");
        }
    }

    #[test]
    fn skew_basis_operators() {
        let b = builtin("e2_star_e2_skew").unwrap();
        let spec = b.twist.unwrap();
        // L(E4)(E1) = E2/4 - E3/4 and [E1, E2] = -E3/2
        let m = &spec.l.matrices()[0];
        assert_eq!((m.get(0, 0), m.get(1, 0), m.get(2, 0)), (0.0, 0.25, -0.25));
        assert_eq!(b.base.tensor.get(0, 1, 2), -0.5);
    }

    #[test]
    fn inner_twist_agrees_with_gamma_bundle() {
        let b = builtin("gamma_star_gamma").unwrap();
        let inner = build_inner_twist(&b.base, 1e-12).algebra;
        assert_eq!(inner.tensor.max_abs_diff(&b.target(1e-12).unwrap().tensor), 0.0);
    }

    #[test]
    fn shear_semidirect_is_heisenberg() {
        let alg = build_twisted_algebra(&shear_semidirect_spec(), 1e-12).unwrap().algebra;
        // coordinates (x1, x2, y): [e1, e3] = -e2
        assert_eq!(alg.tensor, LieAlgebra::heisenberg().tensor);
    }
}
