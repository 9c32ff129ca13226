//! Left-invariant curvature from structure constants in an orthonormal basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_core::{bracket, is_two_step_nilpotent, LieAlgebra, StructureTensor, Vector};
use crate::twisted_lie::build_inner_twist;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureMethod {
    MilnorFull,
    MetabelianShortcut,
}

impl fmt::Display for CurvatureMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurvatureMethod::MilnorFull => "milnor_full",
            CurvatureMethod::MetabelianShortcut => "metabelian_shortcut",
        })
    }
}

/// `sectional[i][j]` is the curvature of the plane spanned by `e_i, e_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub sectional: Vec<Vec<f64>>,
    pub scalar: f64,
    pub method: CurvatureMethod,
}

/// Milnor's sectional curvature of the plane `(e_i, e_j)`:
///
/// ```text
/// k_ij = Σ_k [ ½ α_ij^k (−α_ij^k + α_jk^i + α_ki^j)
///            − ¼ (α_ij^k − α_jk^i + α_ki^j)(α_ij^k + α_jk^i − α_ki^j)
///            − α_ki^i α_kj^j ]
/// ```
///
/// The sum runs over ascending `k`, so each cell is bitwise reproducible.
pub fn sectional_curvature(t: &StructureTensor, i: usize, j: usize) -> f64 {
    let n = t.dim();
    let mut sum = 0.0;
    for k in 0..n {
        let a = t.get(i, j, k);
        let b = t.get(j, k, i);
        let c = t.get(k, i, j);
        sum += 0.5 * a * (-a + b + c) - 0.25 * (a - b + c) * (a + b - c)
            - t.get(k, i, i) * t.get(k, j, j);
    }
    sum
}

/// Full matrix of basis-plane sectional curvatures.
pub fn sectional_curvatures(alg: &LieAlgebra) -> Vec<Vec<f64>> {
    let n = alg.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| sectional_curvature(&alg.tensor, i, j))
                .collect()
        })
        .collect()
}

fn off_diagonal_sum(sectional: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in sectional.iter().enumerate() {
        for (j, k) in row.iter().enumerate() {
            if i != j {
                s += k;
            }
        }
    }
    s
}

/// Scalar curvature as the sum of `k_ij` over ordered pairs `i != j`.
pub fn scalar_curvature(alg: &LieAlgebra) -> f64 {
    off_diagonal_sum(&sectional_curvatures(alg))
}

pub fn curvature_report(alg: &LieAlgebra) -> CurvatureReport {
    let sectional = sectional_curvatures(alg);
    let scalar = off_diagonal_sum(&sectional);
    CurvatureReport {
        sectional,
        scalar,
        method: CurvatureMethod::MilnorFull,
    }
}

/// `ρ = −¼ Σ_{i,k} ‖[e_i, e_k]‖²`, valid only for 2-step nilpotent algebras.
pub fn scalar_curvature_metabelian(alg: &LieAlgebra, tol: f64) -> Result<f64> {
    let check = is_two_step_nilpotent(alg, tol);
    if let Some(witness) = check.witness {
        return Err(Error::NotTwoStepNilpotent {
            witness,
            residual: check.residual,
        });
    }
    let n = alg.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for k in 0..n {
            let v = bracket(alg, &Vector::basis(n, i), &Vector::basis(n, k))?;
            sum += v.dot(&v);
        }
    }
    Ok(-0.25 * sum)
}

/// Both sides of `ρ' = 6ρ` for the inner twist of a 2-step nilpotent algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SixRhoReport {
    /// Scalar curvature of the input, summed sectional curvatures.
    pub rho: f64,
    /// Scalar curvature of the inner twist, summed sectional curvatures.
    pub rho_prime: f64,
    /// `rho_prime / rho`, `None` when `rho == 0`.
    pub ratio: Option<f64>,
    pub rho_shortcut: f64,
    pub rho_prime_shortcut: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Checks `|ρ' − 6ρ| ≤ tol · max(1, |ρ|)` and that both scalars agree with
/// the nilpotent shortcut within the same bound.
pub fn verify_six_rho(m_alg: &LieAlgebra, tol: f64) -> Result<SixRhoReport> {
    let rho_shortcut = scalar_curvature_metabelian(m_alg, tol)?;
    let twist = build_inner_twist(m_alg, tol).algebra;
    let rho_prime_shortcut = scalar_curvature_metabelian(&twist, tol)?;
    let rho = scalar_curvature(m_alg);
    let rho_prime = scalar_curvature(&twist);

    let bound = tol * rho.abs().max(1.0);
    let bound_prime = tol * rho_prime.abs().max(1.0);
    let pass = (rho_prime - 6.0 * rho).abs() <= bound
        && (rho - rho_shortcut).abs() <= bound
        && (rho_prime - rho_prime_shortcut).abs() <= bound_prime;
    Ok(SixRhoReport {
        rho,
        rho_prime,
        ratio: (rho != 0.0).then(|| rho_prime / rho),
        rho_shortcut,
        rho_prime_shortcut,
        tolerance: tol,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::StructureTensor;
    use std::f64::consts::FRAC_1_SQRT_2 as S;

    fn assert_matrix(actual: &[Vec<f64>], expected: &[&[f64]], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
            for (j, (x, y)) in a.iter().zip(e.iter()).enumerate() {
                assert!((x - y).abs() <= tol, "entry ({i}, {j}): {x} vs {y}");
            }
        }
    }

    #[test]
    fn heisenberg_sectional_matrix() {
        let k = sectional_curvatures(&LieAlgebra::heisenberg());
        assert_matrix(
            &k,
            &[&[0.0, 0.25, -0.75], &[0.25, 0.0, 0.25], &[-0.75, 0.25, 0.0]],
            1e-15,
        );
        assert!((scalar_curvature(&LieAlgebra::heisenberg()) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn gamma_star_gamma_sectional_matrix() {
        let alg = build_inner_twist(&LieAlgebra::heisenberg(), 1e-12).algebra;
        let k = sectional_curvatures(&alg);
        assert_matrix(
            &k,
            &[
                &[0.0, 0.5, -0.75, 0.0, 0.25, -1.5],
                &[0.5, 0.0, 0.5, 0.25, 0.0, 0.25],
                &[-0.75, 0.5, 0.0, -1.5, 0.25, 0.0],
                &[0.0, 0.25, -1.5, 0.0, 0.5, -0.75],
                &[0.25, 0.0, 0.25, 0.5, 0.0, 0.5],
                &[-1.5, 0.25, 0.0, -0.75, 0.5, 0.0],
            ],
            1e-15,
        );
        assert!((scalar_curvature(&alg) + 3.0).abs() < 1e-15);
    }

    #[test]
    fn abelian_is_flat() {
        let r = curvature_report(&LieAlgebra::abelian(4));
        assert!(r.sectional.iter().flatten().all(|k| *k == 0.0));
        assert_eq!(r.scalar, 0.0);
        assert_eq!(r.method, CurvatureMethod::MilnorFull);
        assert_eq!(scalar_curvature_metabelian(&LieAlgebra::abelian(4), 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn e2_is_flat() {
        let e2 = LieAlgebra::from_constants(3, &[(0, 1, 2, -S), (0, 2, 1, S)]).unwrap();
        let k = sectional_curvatures(&e2);
        assert!(k.iter().flatten().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn metabelian_shortcut() {
        let h = LieAlgebra::heisenberg();
        assert_eq!(scalar_curvature_metabelian(&h, 1e-9).unwrap(), -0.5);
        let twist = build_inner_twist(&h, 1e-9).algebra;
        assert_eq!(scalar_curvature_metabelian(&twist, 1e-9).unwrap(), -3.0);

        let e2 = LieAlgebra::from_constants(3, &[(0, 1, 2, -S), (0, 2, 1, S)]).unwrap();
        match scalar_curvature_metabelian(&e2, 1e-9) {
            Err(Error::NotTwoStepNilpotent { witness, .. }) => assert_eq!(witness, (0, 1, 0)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn six_rho_on_heisenberg_and_abelian() {
        let r = verify_six_rho(&LieAlgebra::heisenberg(), 1e-9).unwrap();
        assert!(r.pass);
        assert_eq!(r.rho, -0.5);
        assert_eq!(r.rho_prime, -3.0);
        assert_eq!(r.ratio, Some(6.0));

        let r = verify_six_rho(&LieAlgebra::abelian(3), 1e-9).unwrap();
        assert!(r.pass);
        assert_eq!(r.rho, 0.0);
        assert_eq!(r.ratio, None);
    }

    #[test]
    fn diagonal_vanishes_for_antisymmetric_tensors() {
        let t = StructureTensor::from_constants(
            4,
            &[(0, 1, 2, 0.3), (0, 3, 1, -1.7), (1, 2, 3, 2.2), (2, 3, 0, 0.9)],
        )
        .unwrap();
        let alg = LieAlgebra::with_default_labels(t);
        let k = sectional_curvatures(&alg);
        for i in 0..4 {
            assert_eq!(k[i][i], 0.0);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = curvature_report(&LieAlgebra::abelian(1));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"sectional":[[0.0]],"scalar":0.0,"method":"milnor_full"}"#
        );
    }
}
