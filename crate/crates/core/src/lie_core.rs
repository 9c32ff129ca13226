//! Real Lie algebras given by structure constants.
//!
//! A [`StructureTensor`] stores `c[i][j][k]`, the coefficient of `e_k` in
//! `[e_i, e_j]`. The basis is always treated as orthonormal for the
//! left-invariant metric of interest; a different metric is modelled by
//! re-expressing the bracket in a new basis (see [`LieAlgebra::from_bracket_in_basis`]).

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Coordinates of an algebra element in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector {
    pub coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
        }
    }

    /// The `i`-th basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coords.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn scale(&self, a: f64) -> Vector {
        Vector::new(self.coords.iter().map(|x| a * x).collect())
    }

    /// Concatenation `(self, other)`, the direct-sum embedding.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        Vector::new(coords)
    }

    /// Splits into the first `n` coordinates and the rest.
    pub fn split(&self, n: usize) -> (Vector, Vector) {
        (
            Vector::new(self.coords[..n].to_vec()),
            Vector::new(self.coords[n..].to_vec()),
        )
    }
}

impl From<Vec<f64>> for Vector {
    fn from(coords: Vec<f64>) -> Self {
        Self::new(coords)
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

impl Mul<&Vector> for f64 {
    type Output = Vector;

    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

/// Dense rank-3 array of bracket coefficients, `entries[(i*dim + j)*dim + k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor {
    dim: usize,
    entries: Vec<f64>,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0.0; dim * dim * dim],
        }
    }

    /// Takes a dense array as-is. No antisymmetry is imposed, so the result
    /// may fail [`check_antisymmetry`].
    pub fn from_dense(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "dense structure tensor length",
                expected: dim * dim * dim,
                actual: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Ingests constants `(i, j, k, value)` with 0-based indices and completes
    /// the tensor by antisymmetry. An entry may be given through either of its
    /// halves; giving both with values that are not negatives of each other is
    /// rejected, as is a nonzero diagonal entry.
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, f64)]) -> Result<Self> {
        let mut tensor = Self::zeros(dim);
        let mut seen = vec![false; dim * dim * dim];
        for &(i, j, k, value) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidConstants(format!(
                    "index ({}, {}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i == j {
                if value != 0.0 {
                    return Err(Error::InvalidConstants(format!(
                        "diagonal constant c_{}{}^{} = {value} must vanish",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, value) } else { (j, i, -value) };
            let idx = tensor.offset(a, b, k);
            if seen[idx] && tensor.entries[idx] != v {
                return Err(Error::InvalidConstants(format!(
                    "conflicting values for c_{}{}^{}: {} and {}",
                    a + 1,
                    b + 1,
                    k + 1,
                    tensor.entries[idx],
                    v
                )));
            }
            seen[idx] = true;
            tensor.set(a, b, k, v);
            tensor.set(b, a, k, -v);
        }
        Ok(tensor)
    }

    /// Builds `c[i][j][k] = f(i, j, k)` for every index triple.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut tensor = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    tensor.set(i, j, k, f(i, j, k));
                }
            }
        }
        tensor
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.entries[self.offset(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: f64) {
        let idx = self.offset(i, j, k);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Nonzero constants with `i < j`, 0-based, sorted by `(i, j, k)`.
    pub fn upper_constants(&self) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let v = self.get(i, j, k);
                    if v != 0.0 {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    /// All constants multiplied by `t`.
    pub fn scaled(&self, t: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|c| c * t).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// A finite-dimensional real Lie algebra in a declared-orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    pub tensor: StructureTensor,
    pub basis_labels: Vec<String>,
    pub metric_note: String,
}

pub const ORTHONORMAL_NOTE: &str = "basis is orthonormal for the left-invariant metric";

impl LieAlgebra {
    pub fn new(tensor: StructureTensor, basis_labels: Vec<String>) -> Result<Self> {
        if basis_labels.len() != tensor.dim() {
            return Err(Error::DimensionMismatch {
                context: "basis labels",
                expected: tensor.dim(),
                actual: basis_labels.len(),
            });
        }
        Ok(Self {
            tensor,
            basis_labels,
            metric_note: ORTHONORMAL_NOTE.to_string(),
        })
    }

    /// Labels `e1 .. en`.
    pub fn with_default_labels(tensor: StructureTensor) -> Self {
        let labels = default_labels("e", tensor.dim());
        Self {
            tensor,
            basis_labels: labels,
            metric_note: ORTHONORMAL_NOTE.to_string(),
        }
    }

    /// Ingests 0-based constants, see [`StructureTensor::from_constants`].
    pub fn from_constants(dim: usize, constants: &[(usize, usize, usize, f64)]) -> Result<Self> {
        Ok(Self::with_default_labels(StructureTensor::from_constants(
            dim, constants,
        )?))
    }

    pub fn abelian(dim: usize) -> Self {
        Self::with_default_labels(StructureTensor::zeros(dim))
    }

    /// Three-dimensional Heisenberg algebra with the single relation `[e1, e3] = -e2`.
    pub fn heisenberg() -> Self {
        Self::from_constants(3, &[(0, 2, 1, -1.0)]).expect("valid constants")
    }

    /// Re-expresses a bracket, given in some ambient coordinates, in a new
    /// basis. `basis[a]` holds the ambient coordinates of the `a`-th basis
    /// vector; the basis must be invertible. The new basis is declared
    /// orthonormal, which is how a change of left-invariant metric is modelled.
    pub fn from_bracket_in_basis(
        basis: &[Vec<f64>],
        bracket: impl Fn(&[f64], &[f64]) -> Vec<f64>,
    ) -> Result<Self> {
        let dim = basis.len();
        let change = BasisChange::new(basis)?;
        let mut tensor = StructureTensor::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let ambient = bracket(&basis[i], &basis[j]);
                let coords = change.to_basis(&ambient)?;
                for (k, c) in coords.into_iter().enumerate() {
                    tensor.set(i, j, k, c);
                }
            }
        }
        Ok(Self::with_default_labels(tensor))
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        bracket(self, x, y)
    }

    fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        Vector::new((0..n).map(|k| self.tensor.get(i, j, k)).collect())
    }
}

pub(crate) fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

/// Coordinates with respect to an arbitrary (invertible) basis.
#[derive(Debug, Clone)]
pub struct BasisChange {
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    dim: usize,
}

impl BasisChange {
    /// `basis[a]` is the ambient coordinate vector of the `a`-th basis vector.
    pub fn new(basis: &[Vec<f64>]) -> Result<Self> {
        let dim = basis.len();
        for b in basis {
            if b.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "basis vector",
                    expected: dim,
                    actual: b.len(),
                });
            }
        }
        // columns are basis vectors
        let m = DMatrix::from_fn(dim, dim, |r, c| basis[c][r]);
        let lu = m.lu();
        if !lu.is_invertible() {
            return Err(Error::InvalidConstants("basis is not invertible".into()));
        }
        Ok(Self { lu, dim })
    }

    pub fn to_basis(&self, ambient: &[f64]) -> Result<Vec<f64>> {
        if ambient.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "ambient vector",
                expected: self.dim,
                actual: ambient.len(),
            });
        }
        let rhs = DVector::from_column_slice(ambient);
        let sol = self
            .lu
            .solve(&rhs)
            .ok_or_else(|| Error::InvalidConstants("singular basis".into()))?;
        Ok(sol.iter().copied().collect())
    }
}

fn check_dim(alg: &LieAlgebra, v: &Vector) -> Result<()> {
    if v.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            context: "algebra element",
            expected: alg.dim(),
            actual: v.dim(),
        });
    }
    Ok(())
}

/// `[x, y] = Σ x_i y_j c_ijk e_k`.
pub fn bracket(alg: &LieAlgebra, x: &Vector, y: &Vector) -> Result<Vector> {
    check_dim(alg, x)?;
    check_dim(alg, y)?;
    let n = alg.dim();
    let mut out = vec![0.0; n];
    for i in 0..n {
        if x[i] == 0.0 {
            continue;
        }
        for j in 0..n {
            let w = x[i] * y[j];
            if w == 0.0 {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += w * alg.tensor.get(i, j, k);
            }
        }
    }
    Ok(Vector::new(out))
}

/// Lists every `(i, j, k)` with `|c_ijk + c_jik| > tol`, including the
/// diagonal `i == j` where this reads `|2 c_iik| > tol`.
pub fn check_antisymmetry(alg: &LieAlgebra, tol: f64) -> ValidationReport {
    let t = &alg.tensor;
    let n = t.dim();
    let mut report = ValidationReport::new("antisymmetry", tol);
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let r = (t.get(i, j, k) + t.get(j, i, k)).abs();
                if r > tol {
                    report.push(vec![i, j, k], r);
                }
            }
        }
    }
    report
}

/// Cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` on a basis triple.
pub fn jacobiator(alg: &LieAlgebra, i: usize, j: usize, k: usize) -> Vector {
    let n = alg.dim();
    let t = &alg.tensor;
    let mut out = vec![0.0; n];
    // [[e_a, e_b], e_c] = Σ_l c_ab^l c_lc^m e_m
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for l in 0..n {
            let ab = t.get(a, b, l);
            if ab == 0.0 {
                continue;
            }
            for (m, o) in out.iter_mut().enumerate() {
                *o += ab * t.get(l, c, m);
            }
        }
    }
    Vector::new(out)
}

/// Evaluates the Jacobi identity on every basis triple; a triple fails when
/// any component of its cyclic sum exceeds `tol`. Failures carry the residual
/// Euclidean norm.
pub fn check_jacobi(alg: &LieAlgebra, tol: f64) -> ValidationReport {
    let n = alg.dim();
    let mut report = ValidationReport::new("jacobi", tol);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = jacobiator(alg, i, j, k);
                if s.max_abs() > tol {
                    report.push(vec![i, j, k], s.norm());
                }
            }
        }
    }
    report
}

/// Result of the 2-step nilpotency test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NilpotencyCheck {
    pub two_step_nilpotent: bool,
    /// First basis triple `(i, j, k)` with `[[e_i, e_j], e_k] != 0`, 0-based.
    pub witness: Option<(usize, usize, usize)>,
    pub residual: f64,
}

/// `[[e_i, e_j], e_k] = 0` for all basis triples (the algebra-level form of
/// "every commutator is central"). The witness is the first violation in
/// lexicographic `(i, j, k)` order.
pub fn is_two_step_nilpotent(alg: &LieAlgebra, tol: f64) -> NilpotencyCheck {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = alg.basis_bracket(i, j);
            if ij.max_abs() == 0.0 {
                continue;
            }
            for k in 0..n {
                let v = bracket(alg, &ij, &Vector::basis(n, k)).expect("dims agree");
                if v.max_abs() > tol {
                    return NilpotencyCheck {
                        two_step_nilpotent: false,
                        witness: Some((i, j, k)),
                        residual: v.norm(),
                    };
                }
            }
        }
    }
    NilpotencyCheck {
        two_step_nilpotent: true,
        witness: None,
        residual: 0.0,
    }
}

/// Random 2-step nilpotent algebra of dimension `generators + center`:
/// `[e_i, e_j]` for `i < j < generators` is a random vector (entries uniform
/// in `[-1, 1]`) in the span of the last `center` basis vectors, every other
/// bracket vanishes. These satisfy Jacobi identically.
pub fn random_two_step_nilpotent<R: Rng + ?Sized>(
    rng: &mut R,
    generators: usize,
    center: usize,
) -> LieAlgebra {
    let dim = generators + center;
    let mut constants = Vec::new();
    for i in 0..generators {
        for j in i + 1..generators {
            for k in generators..dim {
                constants.push((i, j, k, rng.gen_range(-1.0..=1.0)));
            }
        }
    }
    LieAlgebra::from_constants(dim, &constants).expect("generated constants are valid")
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Lie algebra of dimension {}", self.dim())?;
        let n = self.dim();
        let mut any = false;
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<String> = (0..n)
                    .filter_map(|k| {
                        let c = self.tensor.get(i, j, k);
                        (c != 0.0).then(|| format!("{:+} {}", c, self.basis_labels[k]))
                    })
                    .collect();
                if !terms.is_empty() {
                    any = true;
                    writeln!(
                        f,
                        "  [{}, {}] = {}",
                        self.basis_labels[i],
                        self.basis_labels[j],
                        terms.join(" ")
                    )?;
                }
            }
        }
        if !any {
            writeln!(f, "  (abelian)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i - 1)
    }

    #[test]
    fn heisenberg_bracket_e1_e3() {
        let h = LieAlgebra::heisenberg();
        assert_eq!(bracket(&h, &e(3, 1), &e(3, 3)).unwrap().coords, vec![0.0, -1.0, 0.0]);
        assert_eq!(bracket(&h, &e(3, 3), &e(3, 1)).unwrap().coords, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn bracket_of_vector_with_itself_vanishes() {
        let h = LieAlgebra::heisenberg();
        let x = Vector::new(vec![0.3, -1.2, 2.5]);
        assert_eq!(bracket(&h, &x, &x).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn heisenberg_bilinear_expansion() {
        let h = LieAlgebra::heisenberg();
        let x = Vector::new(vec![2.0, 0.0, 1.0]);
        assert_eq!(bracket(&h, &x, &e(3, 3)).unwrap().coords, vec![0.0, -2.0, 0.0]);
    }

    #[test]
    fn bracket_rejects_wrong_dimension() {
        let h = LieAlgebra::heisenberg();
        let err = bracket(&h, &Vector::zeros(2), &e(3, 1)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 3, actual: 2, .. }));
    }

    #[test]
    fn ingestion_completes_antisymmetry() {
        let h = LieAlgebra::heisenberg();
        assert_eq!(h.tensor.get(2, 0, 1), 1.0);
        // giving the lower half is accepted when consistent
        let same = LieAlgebra::from_constants(3, &[(0, 2, 1, -1.0), (2, 0, 1, 1.0)]).unwrap();
        assert_eq!(same.tensor, h.tensor);
    }

    #[test]
    fn ingestion_rejects_inconsistent_halves() {
        let err = StructureTensor::from_constants(3, &[(0, 2, 1, -1.0), (2, 0, 1, -1.0)]);
        assert!(matches!(err, Err(Error::InvalidConstants(_))));
        let err = StructureTensor::from_constants(3, &[(1, 1, 0, 2.0)]);
        assert!(matches!(err, Err(Error::InvalidConstants(_))));
        let err = StructureTensor::from_constants(3, &[(0, 3, 1, 1.0)]);
        assert!(matches!(err, Err(Error::InvalidConstants(_))));
    }

    #[test]
    fn antisymmetry_checks() {
        assert!(check_antisymmetry(&LieAlgebra::heisenberg(), 1e-9).passed());
        assert!(check_antisymmetry(&LieAlgebra::abelian(4), 1e-9).passed());

        let mut t = StructureTensor::zeros(3);
        t.set(0, 1, 0, 1.0);
        t.set(1, 0, 0, 1.0);
        let report = check_antisymmetry(&LieAlgebra::with_default_labels(t), 1e-9);
        assert!(!report.passed());
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].indices, vec![0, 1, 0]);
        assert_eq!(report.violations[0].residual, 2.0);
    }

    fn e2_canonical() -> LieAlgebra {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        LieAlgebra::from_constants(3, &[(0, 1, 2, -s), (0, 2, 1, s)]).unwrap()
    }

    #[test]
    fn jacobi_passes_on_heisenberg_and_e2() {
        assert!(check_jacobi(&LieAlgebra::heisenberg(), 1e-9).passed());
        assert!(check_jacobi(&e2_canonical(), 1e-9).passed());
    }

    #[test]
    fn jacobi_fails_with_injected_constant() {
        // [e1, e3] = -e2 and [e1, e2] = e1; frozen from a brute-force
        // expansion of all 27 triples: six failing triples, each residual 1.
        let alg = LieAlgebra::from_constants(3, &[(0, 2, 1, -1.0), (0, 1, 0, 1.0)]).unwrap();
        let report = check_jacobi(&alg, 1e-9);
        assert!(!report.passed());
        assert_eq!(report.violations.len(), 6);
        assert_eq!(report.violations[0].indices, vec![0, 1, 2]);
        assert!((report.max_residual() - 1.0).abs() < 1e-15);
        let s = jacobiator(&alg, 0, 1, 2);
        assert_eq!(s.coords, vec![0.0, -1.0, 0.0]);
    }

    #[test]
    fn nilpotency() {
        let h = is_two_step_nilpotent(&LieAlgebra::heisenberg(), 1e-9);
        assert!(h.two_step_nilpotent);
        assert!(is_two_step_nilpotent(&LieAlgebra::abelian(5), 1e-9).two_step_nilpotent);

        let e2 = is_two_step_nilpotent(&e2_canonical(), 1e-9);
        assert!(!e2.two_step_nilpotent);
        assert_eq!(e2.witness, Some((0, 1, 0)));
        // [[e1, e2], e1] = 1/2 e2
        let v = bracket(
            &e2_canonical(),
            &bracket(&e2_canonical(), &e(3, 1), &e(3, 2)).unwrap(),
            &e(3, 1),
        )
        .unwrap();
        assert!((v[1] - 0.5).abs() < 1e-15 && v[0] == 0.0 && v[2] == 0.0);
        assert!((e2.residual - 0.5).abs() < 1e-15);
    }

    #[test]
    fn random_nilpotent_generator_is_lie_and_two_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in 0..5 {
            for q in 0..4 {
                let alg = random_two_step_nilpotent(&mut rng, p, q);
                assert_eq!(alg.dim(), p + q);
                assert!(check_jacobi(&alg, 1e-12).passed());
                assert!(is_two_step_nilpotent(&alg, 1e-12).two_step_nilpotent);
            }
        }
    }

    #[test]
    fn basis_change_reexpresses_bracket() {
        // canonical e(2) coordinates (w, v1, v2), bracket (0, w1 J v2 - w2 J v1)
        let br = |x: &[f64], y: &[f64]| {
            vec![
                0.0,
                -x[0] * y[2] + y[0] * x[2],
                x[0] * y[1] - y[0] * x[1],
            ]
        };
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let alg = LieAlgebra::from_bracket_in_basis(
            &[vec![-s, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]],
            br,
        )
        .unwrap();
        assert!(alg.tensor.max_abs_diff(&e2_canonical().tensor) < 1e-15);
        let singular = LieAlgebra::from_bracket_in_basis(&[vec![1.0, 0.0], vec![2.0, 0.0]], |_, _| {
            vec![0.0, 0.0]
        });
        assert!(singular.is_err());
    }
}
