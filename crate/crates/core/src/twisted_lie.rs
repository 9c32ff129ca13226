//! Lie algebra of a twisted product.
//!
//! Given algebras `g` (dim n) and `h` (dim m) and infinitesimal actions
//! `L: h -> Der(g)`, `M: g -> Der(h)`, the twisted bracket on `g ⊕ h` is
//!
//! ```text
//! [(X1, Y1), (X2, Y2)] = ([X1, X2] + L(Y1) X2 - L(Y2) X1,
//!                         [Y1, Y2] + M(X1) Y2 - M(X2) Y1)
//! ```
//!
//! [`twisted_bracket`] evaluates this directly on vectors, while
//! [`build_twisted_algebra`] assembles the structure constants block by
//! block; the two routes are cross-checked in the tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_core::{
    bracket, check_jacobi, default_labels, is_two_step_nilpotent, LieAlgebra, NilpotencyCheck,
    StructureTensor, Vector,
};
use crate::report::ValidationReport;

/// Square matrix acting on coordinate vectors, stored row-major.
/// Column `b` is the image of basis vector `b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct Operator {
    size: usize,
    data: Vec<f64>,
}

impl Operator {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            data: vec![0.0; size * size],
        }
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut op = Self::zeros(size);
        for r in 0..size {
            for c in 0..size {
                op.data[r * size + c] = f(r, c);
            }
        }
        op
    }

    /// Operator whose `b`-th column is `images[b]`.
    pub fn from_columns(images: &[Vec<f64>]) -> Result<Self> {
        let n = images.len();
        for col in images {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "operator column",
                    expected: n,
                    actual: col.len(),
                });
            }
        }
        Ok(Self::from_fn(n, |r, c| images[c][r]))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.size + col]
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        debug_assert_eq!(x.dim(), self.size);
        let n = self.size;
        Vector::new(
            (0..n)
                .map(|r| (0..n).map(|c| self.data[r * n + c] * x[c]).sum())
                .collect(),
        )
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.size.max(1)).map(<[f64]>::to_vec).take(self.size).collect()
    }

    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl TryFrom<Vec<Vec<f64>>> for Operator {
    type Error = String;

    fn try_from(rows: Vec<Vec<f64>>) -> std::result::Result<Self, String> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(format!("matrix row {r} has {} entries, expected {n}", row.len()));
            }
            data.extend(row);
        }
        Ok(Self { size: n, data })
    }
}

impl From<Operator> for Vec<Vec<f64>> {
    fn from(op: Operator) -> Self {
        op.rows()
    }
}

/// `L` (or `M`): one derivation matrix per basis vector of the acting algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ActionRepr", into = "ActionRepr")]
pub struct InfinitesimalAction {
    acting_dim: usize,
    target_dim: usize,
    matrices: Vec<Operator>,
}

#[derive(Serialize, Deserialize)]
struct ActionRepr {
    acting_dim: usize,
    target_dim: usize,
    matrices: Vec<Operator>,
}

impl TryFrom<ActionRepr> for InfinitesimalAction {
    type Error = Error;

    fn try_from(r: ActionRepr) -> Result<Self> {
        Self::new(r.acting_dim, r.target_dim, r.matrices)
    }
}

impl From<InfinitesimalAction> for ActionRepr {
    fn from(a: InfinitesimalAction) -> Self {
        Self {
            acting_dim: a.acting_dim,
            target_dim: a.target_dim,
            matrices: a.matrices,
        }
    }
}

impl InfinitesimalAction {
    pub fn new(acting_dim: usize, target_dim: usize, matrices: Vec<Operator>) -> Result<Self> {
        if matrices.len() != acting_dim {
            return Err(Error::DimensionMismatch {
                context: "number of action matrices",
                expected: acting_dim,
                actual: matrices.len(),
            });
        }
        if let Some(bad) = matrices.iter().find(|m| m.size() != target_dim) {
            return Err(Error::DimensionMismatch {
                context: "action matrix size",
                expected: target_dim,
                actual: bad.size(),
            });
        }
        Ok(Self {
            acting_dim,
            target_dim,
            matrices,
        })
    }

    pub fn zero(acting_dim: usize, target_dim: usize) -> Self {
        Self {
            acting_dim,
            target_dim,
            matrices: vec![Operator::zeros(target_dim); acting_dim],
        }
    }

    /// `ad`: the algebra acting on itself, `ad(e_i) e_j = [e_i, e_j]`.
    pub fn adjoint(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let matrices = (0..n)
            .map(|i| Operator::from_fn(n, |k, j| alg.tensor.get(i, j, k)))
            .collect();
        Self {
            acting_dim: n,
            target_dim: n,
            matrices,
        }
    }

    pub fn acting_dim(&self) -> usize {
        self.acting_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrices(&self) -> &[Operator] {
        &self.matrices
    }

    /// The operator `Σ y_a D_a` for an acting vector `y`.
    pub fn operator_for(&self, y: &Vector) -> Operator {
        let n = self.target_dim;
        Operator::from_fn(n, |r, c| {
            self.matrices
                .iter()
                .enumerate()
                .map(|(a, m)| y[a] * m.get(r, c))
                .sum()
        })
    }

    /// `L(y)(x)`.
    pub fn act(&self, y: &Vector, x: &Vector) -> Result<Vector> {
        if y.dim() != self.acting_dim {
            return Err(Error::DimensionMismatch {
                context: "acting vector",
                expected: self.acting_dim,
                actual: y.dim(),
            });
        }
        if x.dim() != self.target_dim {
            return Err(Error::DimensionMismatch {
                context: "target vector",
                expected: self.target_dim,
                actual: x.dim(),
            });
        }
        let mut out = Vector::zeros(self.target_dim);
        for (a, m) in self.matrices.iter().enumerate() {
            if y[a] != 0.0 {
                out = &out + &m.apply(x).scale(y[a]);
            }
        }
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &InfinitesimalAction) -> f64 {
        self.matrices
            .iter()
            .zip(&other.matrices)
            .fold(0.0, |m, (a, b)| m.max(a.max_abs_diff(b)))
    }
}

/// The data of a twisted product of Lie algebras.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistSpec {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    /// `L`: `h` acting on `g`.
    pub l: InfinitesimalAction,
    /// `M`: `g` acting on `h`.
    pub m: InfinitesimalAction,
}

impl TwistSpec {
    pub fn new(
        g: LieAlgebra,
        h: LieAlgebra,
        l: InfinitesimalAction,
        m: InfinitesimalAction,
    ) -> Result<Self> {
        let (n, k) = (g.dim(), h.dim());
        let checks = [
            ("L acting dimension", k, l.acting_dim()),
            ("L target dimension", n, l.target_dim()),
            ("M acting dimension", n, m.acting_dim()),
            ("M target dimension", k, m.target_dim()),
        ];
        for (context, expected, actual) in checks {
            if expected != actual {
                return Err(Error::DimensionMismatch {
                    context,
                    expected,
                    actual,
                });
            }
        }
        Ok(Self { g, h, l, m })
    }

    /// Direct sum: both actions zero.
    pub fn direct_sum(g: LieAlgebra, h: LieAlgebra) -> Self {
        let l = InfinitesimalAction::zero(h.dim(), g.dim());
        let m = InfinitesimalAction::zero(g.dim(), h.dim());
        Self { g, h, l, m }
    }

    /// An algebra twisted with itself through `ad` on both sides.
    pub fn inner(alg: &LieAlgebra) -> Self {
        let ad = InfinitesimalAction::adjoint(alg);
        Self {
            g: alg.clone(),
            h: alg.clone(),
            l: ad.clone(),
            m: ad,
        }
    }

    pub fn dim(&self) -> usize {
        self.g.dim() + self.h.dim()
    }

    /// Labels `E1 .. E(n+m)`.
    pub fn labels(&self) -> Vec<String> {
        default_labels("E", self.dim())
    }
}

/// Checks `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for every action
/// matrix `D` and basis pair; violations are indexed `(a, i, j)`.
pub fn check_derivation_property(
    action: &InfinitesimalAction,
    target: &LieAlgebra,
    tol: f64,
) -> Result<ValidationReport> {
    let n = target.dim();
    if action.target_dim() != n {
        return Err(Error::DimensionMismatch {
            context: "derivation target",
            expected: n,
            actual: action.target_dim(),
        });
    }
    let mut report = ValidationReport::new("derivation", tol);
    for (a, d) in action.matrices().iter().enumerate() {
        for i in 0..n {
            let ei = Vector::basis(n, i);
            let dei = d.apply(&ei);
            for j in 0..n {
                let ej = Vector::basis(n, j);
                let lhs = d.apply(&bracket(target, &ei, &ej)?);
                let rhs = &bracket(target, &dei, &ej)? + &bracket(target, &ei, &d.apply(&ej))?;
                let diff = &lhs - &rhs;
                if diff.max_abs() > tol {
                    report.push(vec![a, i, j], diff.norm());
                }
            }
        }
    }
    Ok(report)
}

/// Twisted bracket on `g ⊕ h` evaluated directly from the two brackets and
/// the actions.
pub fn twisted_bracket(spec: &TwistSpec, z1: &Vector, z2: &Vector) -> Result<Vector> {
    let dim = spec.dim();
    for z in [z1, z2] {
        if z.dim() != dim {
            return Err(Error::DimensionMismatch {
                context: "twisted algebra element",
                expected: dim,
                actual: z.dim(),
            });
        }
    }
    let n = spec.g.dim();
    let (x1, y1) = z1.split(n);
    let (x2, y2) = z2.split(n);

    let g_part = &(&bracket(&spec.g, &x1, &x2)? + &spec.l.act(&y1, &x2)?) - &spec.l.act(&y2, &x1)?;
    let h_part = &(&bracket(&spec.h, &y1, &y2)? + &spec.m.act(&x1, &y2)?) - &spec.m.act(&x2, &y1)?;
    Ok(g_part.concat(&h_part))
}

/// A twisted algebra together with its Jacobi report. The algebra is returned
/// even when Jacobi fails.
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    pub algebra: LieAlgebra,
    pub jacobi: ValidationReport,
}

/// Assembles the structure constants of the twisted algebra in the basis
/// `E_i = (e_i, 0)` for `i < n`, `E_i = (0, e_{i-n})` otherwise:
///
/// * both indices in `g`: constants of `g`, no `h` component;
/// * both in `h`: constants of `h`, no `g` component;
/// * `i` in `g`, `j` in `h`: `-<L(e_j) e_i, e_k>` on `g`, `<M(e_i) e_j, e_k>` on `h`;
/// * `i` in `h`, `j` in `g`: `<L(e_i) e_j, e_k>` on `g`, `-<M(e_j) e_i, e_k>` on `h`.
///
/// The last two blocks are computed independently and must be antisymmetric
/// mates within `tol`.
pub fn build_twisted_algebra(spec: &TwistSpec, tol: f64) -> Result<TwistedAlgebra> {
    let n = spec.g.dim();
    let m = spec.h.dim();
    let dim = n + m;
    let mut t = StructureTensor::zeros(dim);

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, spec.g.tensor.get(i, j, k));
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                t.set(n + i, n + j, n + k, spec.h.tensor.get(i, j, k));
            }
        }
    }
    // (g, h) block
    for i in 0..n {
        for j in 0..m {
            let l = &spec.l.matrices()[j];
            let mm = &spec.m.matrices()[i];
            for k in 0..n {
                t.set(i, n + j, k, -l.get(k, i));
            }
            for k in 0..m {
                t.set(i, n + j, n + k, mm.get(k, j));
            }
        }
    }
    // (h, g) block
    for i in 0..m {
        for j in 0..n {
            let l = &spec.l.matrices()[i];
            let mm = &spec.m.matrices()[j];
            for k in 0..n {
                t.set(n + i, j, k, l.get(k, j));
            }
            for k in 0..m {
                t.set(n + i, j, n + k, -mm.get(k, i));
            }
        }
    }
    for i in 0..n {
        for j in n..dim {
            for k in 0..dim {
                let forward = t.get(i, j, k);
                let backward = t.get(j, i, k);
                if !((forward + backward).abs() <= tol) {
                    return Err(Error::InconsistentTwist {
                        i,
                        j,
                        k,
                        forward,
                        backward,
                    });
                }
            }
        }
    }

    let algebra = LieAlgebra::new(t, spec.labels())?;
    let jacobi = check_jacobi(&algebra, tol);
    Ok(TwistedAlgebra { algebra, jacobi })
}

/// Inner twist of an algebra with itself, plus the nilpotency check of the
/// input. When the input is not 2-step nilpotent the tensor is still built,
/// but the corresponding group-level twist is not a group.
#[derive(Debug, Clone)]
pub struct InnerTwist {
    pub algebra: LieAlgebra,
    pub input_nilpotency: NilpotencyCheck,
}

impl InnerTwist {
    pub fn warning(&self) -> Option<String> {
        self.input_nilpotency.witness.map(|(i, j, k)| {
            format!(
                "input is not 2-step nilpotent ([[e{}, e{}], e{}] != 0); the inner twist of the group is not a group",
                i + 1,
                j + 1,
                k + 1
            )
        })
    }
}

/// Structure constants of the inner twist `M ∗ M` read straight off the
/// constants `α` of `M` (indices 0-based, `n = dim M`):
///
/// * `i, j < n`: `α_ij^k` for `k < n`, zero otherwise;
/// * `i, j ≥ n`: `α_{(i-n)(j-n)}^{k-n}` for `k ≥ n`, zero otherwise;
/// * `i < n ≤ j`: `α_{i(j-n)}^k` for `k < n` and `α_{i(j-n)}^{k-n}` for `k ≥ n`;
/// * `j < n ≤ i`: `α_{(i-n)j}^k` for `k < n` and `α_{(i-n)j}^{k-n}` for `k ≥ n`.
pub fn build_inner_twist(m_alg: &LieAlgebra, tol: f64) -> InnerTwist {
    let n = m_alg.dim();
    let a = &m_alg.tensor;
    let tensor = StructureTensor::from_fn(2 * n, |i, j, k| {
        let (gi, hi) = (i < n, j < n);
        let (ii, jj, kk) = (i % n, j % n, k % n);
        let k_in_g = k < n;
        match (gi, hi) {
            (true, true) if k_in_g => a.get(ii, jj, kk),
            (false, false) if !k_in_g => a.get(ii, jj, kk),
            (true, true) | (false, false) => 0.0,
            _ => a.get(ii, jj, kk),
        }
    });
    InnerTwist {
        algebra: LieAlgebra::new(tensor, default_labels("E", 2 * n)).expect("labels match"),
        input_nilpotency: is_two_step_nilpotent(m_alg, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::is_two_step_nilpotent;
    use std::f64::consts::FRAC_1_SQRT_2 as S;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i - 1)
    }

    fn e2() -> LieAlgebra {
        LieAlgebra::from_constants(3, &[(0, 1, 2, -S), (0, 2, 1, S)]).unwrap()
    }

    /// L(e1) sends e2 to -S e3 and e3 to S e2; the other generators act by zero.
    fn e2_action() -> InfinitesimalAction {
        let rot = Operator::from_columns(&[
            vec![0.0, 0.0, 0.0],
            vec![0.0, 0.0, -S],
            vec![0.0, S, 0.0],
        ])
        .unwrap();
        InfinitesimalAction::new(3, 3, vec![rot, Operator::zeros(3), Operator::zeros(3)]).unwrap()
    }

    fn e2_twist() -> TwistSpec {
        TwistSpec::new(e2(), e2(), e2_action(), e2_action()).unwrap()
    }

    #[test]
    fn derivations() {
        let h = LieAlgebra::heisenberg();
        let zero = InfinitesimalAction::zero(2, 3);
        assert!(check_derivation_property(&zero, &h, 1e-12).unwrap().passed());
        assert!(check_derivation_property(&e2_action(), &e2(), 1e-12).unwrap().passed());
        let ad = InfinitesimalAction::adjoint(&h);
        assert!(check_derivation_property(&ad, &h, 1e-12).unwrap().passed());

        // the identity map is not a derivation of the Heisenberg algebra
        let id = InfinitesimalAction::new(1, 3, vec![Operator::from_fn(3, |r, c| (r == c) as u8 as f64)]).unwrap();
        let report = check_derivation_property(&id, &h, 1e-12).unwrap();
        assert!(!report.passed());
        assert!(check_derivation_property(&zero, &e2(), 1e-12).is_ok());
        assert!(check_derivation_property(&InfinitesimalAction::zero(1, 2), &h, 1e-12).is_err());
    }

    #[test]
    fn inner_twist_bracket_e1_e6() {
        let spec = TwistSpec::inner(&LieAlgebra::heisenberg());
        let z = twisted_bracket(&spec, &e(6, 1), &e(6, 6)).unwrap();
        assert_eq!(z.coords, vec![0.0, -1.0, 0.0, 0.0, -1.0, 0.0]);
    }

    #[test]
    fn abelian_direct_sum_bracket_vanishes() {
        let spec = TwistSpec::direct_sum(LieAlgebra::abelian(2), LieAlgebra::abelian(3));
        let z1 = Vector::new(vec![1.0, -2.0, 0.5, 3.0, 4.0]);
        let z2 = Vector::new(vec![0.1, 0.2, 0.3, 0.4, 0.5]);
        assert_eq!(twisted_bracket(&spec, &z1, &z2).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn e2_twist_bracket_e1_e5() {
        let z = twisted_bracket(&e2_twist(), &e(6, 1), &e(6, 5)).unwrap();
        let expected = [0.0, 0.0, 0.0, 0.0, 0.0, -S];
        for (a, b) in z.coords.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn twisted_bracket_rejects_bad_dims() {
        assert!(twisted_bracket(&e2_twist(), &e(5, 1), &e(6, 5)).is_err());
    }

    #[test]
    fn twist_spec_dimension_checks() {
        let err = TwistSpec::new(e2(), LieAlgebra::abelian(2), e2_action(), e2_action()).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn e2_twisted_constants() {
        let built = build_twisted_algebra(&e2_twist(), 1e-12).unwrap();
        let t = &built.algebra.tensor;
        let expected = [
            ((1, 2, 3), -S),
            ((1, 3, 2), S),
            ((4, 5, 6), -S),
            ((4, 6, 5), S),
            ((1, 5, 6), -S),
            ((1, 6, 5), S),
            ((4, 2, 3), -S),
            ((4, 3, 2), S),
        ];
        let mut nonzero = 0;
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    let v = t.get(i, j, k);
                    let want = expected
                        .iter()
                        .find_map(|&((a, b, c), x)| {
                            if (a - 1, b - 1, c - 1) == (i, j, k) {
                                Some(x)
                            } else if (b - 1, a - 1, c - 1) == (i, j, k) {
                                Some(-x)
                            } else {
                                None
                            }
                        })
                        .unwrap_or(0.0);
                    assert!((v - want).abs() < 1e-15, "c_{}{}^{} = {v}", i + 1, j + 1, k + 1);
                    nonzero += (v != 0.0) as usize;
                }
            }
        }
        assert_eq!(nonzero, 16);
        assert!(built.jacobi.passed());
    }

    #[test]
    fn zero_actions_give_block_diagonal_tensor() {
        let spec = TwistSpec::direct_sum(LieAlgebra::heisenberg(), e2());
        let t = build_twisted_algebra(&spec, 1e-12).unwrap().algebra.tensor;
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    if (i < 3) != (j < 3) || (i < 3) != (k < 3) {
                        assert_eq!(t.get(i, j, k), 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn semidirect_example_reproduces_heisenberg() {
        // g = R^2 abelian, h = R abelian, L(y)(x1, x2) = (0, y x1), M = 0
        let l = InfinitesimalAction::new(
            1,
            2,
            vec![Operator::from_columns(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap()],
        )
        .unwrap();
        let spec = TwistSpec::new(
            LieAlgebra::abelian(2),
            LieAlgebra::abelian(1),
            l,
            InfinitesimalAction::zero(2, 1),
        )
        .unwrap();
        let built = build_twisted_algebra(&spec, 1e-12).unwrap();
        assert_eq!(built.algebra.tensor, LieAlgebra::heisenberg().tensor);
        assert!(built.jacobi.passed());
    }

    #[test]
    fn inconsistent_blocks_are_reported() {
        // non-finite entries cannot be matched with their antisymmetric mates
        let mut bad = e2_action();
        bad.matrices[0] = Operator::from_fn(3, |_, _| f64::NAN);
        let spec = TwistSpec::new(e2(), e2(), bad, e2_action()).unwrap();
        let err = build_twisted_algebra(&spec, 1e-12).unwrap_err();
        assert!(matches!(err, Error::InconsistentTwist { i: 0, j: 3, k: 0, .. }));
    }

    #[test]
    fn heisenberg_inner_twist_table() {
        let inner = build_inner_twist(&LieAlgebra::heisenberg(), 1e-12);
        assert!(inner.warning().is_none());
        let alg = &inner.algebra;
        let br = |i, j| bracket(alg, &e(6, i), &e(6, j)).unwrap().coords;
        let mut expected = std::collections::BTreeMap::new();
        expected.insert((1, 3), vec![0.0, -1.0, 0.0, 0.0, 0.0, 0.0]);
        expected.insert((1, 6), vec![0.0, -1.0, 0.0, 0.0, -1.0, 0.0]);
        expected.insert((4, 3), vec![0.0, -1.0, 0.0, 0.0, -1.0, 0.0]);
        expected.insert((4, 6), vec![0.0, 0.0, 0.0, 0.0, -1.0, 0.0]);
        for i in 1..=6 {
            for j in 1..=6 {
                let v = br(i, j);
                if let Some(w) = expected.get(&(i, j)) {
                    assert_eq!(&v, w);
                } else if let Some(w) = expected.get(&(j, i)) {
                    assert_eq!(v, w.iter().map(|x| -x).collect::<Vec<_>>());
                } else {
                    assert!(v.iter().all(|x| *x == 0.0), "[E{i}, E{j}] = {v:?}");
                }
            }
        }
        assert!(check_jacobi(alg, 1e-12).passed());
        assert!(is_two_step_nilpotent(alg, 1e-12).two_step_nilpotent);
    }

    #[test]
    fn inner_twist_of_abelian_is_abelian() {
        let inner = build_inner_twist(&LieAlgebra::abelian(4), 1e-12);
        assert_eq!(inner.algebra.dim(), 8);
        assert!(inner.algebra.tensor.entries().iter().all(|c| *c == 0.0));
    }

    #[test]
    fn inner_twist_warns_for_non_nilpotent_input() {
        let inner = build_inner_twist(&e2(), 1e-12);
        assert!(inner.warning().is_some());
        assert_eq!(inner.input_nilpotency.witness, Some((0, 1, 0)));
    }

    #[test]
    fn inner_twist_matches_general_construction() {
        for alg in [LieAlgebra::heisenberg(), e2()] {
            let direct = build_inner_twist(&alg, 1e-12).algebra;
            let general = build_twisted_algebra(&TwistSpec::inner(&alg), 1e-12).unwrap().algebra;
            assert!(direct.tensor.max_abs_diff(&general.tensor) <= 1e-12);
        }
    }

    #[test]
    fn action_json_shape() {
        let json = serde_json::to_string(&e2_action()).unwrap();
        assert!(json.starts_with("{\"acting_dim\":3,\"target_dim\":3,\"matrices\":[[[0.0,0.0,0.0],"));
        let back: InfinitesimalAction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e2_action());
        let bad = r#"{"acting_dim": 2, "target_dim": 2, "matrices": [[[0,0],[0,0]]]}"#;
        assert!(serde_json::from_str::<InfinitesimalAction>(bad).is_err());
    }
}
