//! Coordinate-form Lie groups used by the worked examples.

use std::f64::consts::PI;

use rand::{Rng, RngCore};

/// A Lie group in global coordinates, together with exponential and
/// logarithm maps to algebra coordinates and the bracket in those coordinates.
pub trait ParametricGroup: Send + Sync {
    fn name(&self) -> &str;
    fn dim(&self) -> usize;
    fn identity(&self) -> Vec<f64>;
    fn compose(&self, x: &[f64], y: &[f64]) -> Vec<f64>;
    fn invert(&self, x: &[f64]) -> Vec<f64>;
    /// Algebra coordinates to group coordinates along one-parameter subgroups.
    fn exp(&self, v: &[f64]) -> Vec<f64>;
    /// Inverse of [`ParametricGroup::exp`] near the identity.
    fn log(&self, x: &[f64]) -> Vec<f64>;
    /// Lie bracket in the algebra coordinates used by `exp`.
    fn bracket(&self, u: &[f64], v: &[f64]) -> Vec<f64>;
    fn sample(&self, rng: &mut dyn RngCore) -> Vec<f64>;

    /// Coordinate distance; angular coordinates are compared modulo 2π.
    fn distance(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter()
            .zip(y)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t - 2.0 * PI
    } else {
        t
    }
}

fn uniform(rng: &mut dyn RngCore, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// `(Rⁿ, +)`.
#[derive(Debug, Clone)]
pub struct Euclidean {
    dim: usize,
    name: String,
}

impl Euclidean {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            name: format!("R{dim}"),
        }
    }
}

impl ParametricGroup for Euclidean {
    fn name(&self) -> &str {
        &self.name
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn identity(&self) -> Vec<f64> {
        vec![0.0; self.dim]
    }

    fn compose(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn invert(&self, x: &[f64]) -> Vec<f64> {
        x.iter().map(|a| -a).collect()
    }

    fn exp(&self, v: &[f64]) -> Vec<f64> {
        v.to_vec()
    }

    fn log(&self, x: &[f64]) -> Vec<f64> {
        x.to_vec()
    }

    fn bracket(&self, _u: &[f64], _v: &[f64]) -> Vec<f64> {
        vec![0.0; self.dim]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Vec<f64> {
        (0..self.dim).map(|_| uniform(rng, -2.0, 2.0)).collect()
    }
}

/// Heisenberg group on `R³` with `(a1, b1, c1)(a2, b2, c2) = (a1 + a2, b1 + b2 + c1 a2, c1 + c2)`,
/// i.e. the unipotent matrix with `c` and `a` on the superdiagonal and `b` in the corner.
#[derive(Debug, Clone, Copy, Default)]
pub struct Heisenberg;

impl ParametricGroup for Heisenberg {
    fn name(&self) -> &str {
        "Heisenberg"
    }

    fn dim(&self) -> usize {
        3
    }

    fn identity(&self) -> Vec<f64> {
        vec![0.0; 3]
    }

    fn compose(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        vec![x[0] + y[0], x[1] + y[1] + x[2] * y[0], x[2] + y[2]]
    }

    fn invert(&self, x: &[f64]) -> Vec<f64> {
        vec![-x[0], -x[1] + x[0] * x[2], -x[2]]
    }

    fn exp(&self, v: &[f64]) -> Vec<f64> {
        vec![v[0], v[1] + 0.5 * v[0] * v[2], v[2]]
    }

    fn log(&self, x: &[f64]) -> Vec<f64> {
        vec![x[0], x[1] - 0.5 * x[0] * x[2], x[2]]
    }

    fn bracket(&self, u: &[f64], v: &[f64]) -> Vec<f64> {
        vec![0.0, u[2] * v[0] - v[2] * u[0], 0.0]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Vec<f64> {
        (0..3).map(|_| uniform(rng, -2.0, 2.0)).collect()
    }
}

/// Proper motions of the plane as `(θ, ξ1, ξ2)`:
/// `(θ1, ξ1)(θ2, ξ2) = (θ1 + θ2, ξ1 + R(θ1) ξ2)`.
///
/// Algebra coordinates `(ω, v1, v2)` stand for the matrix `[[ωJ, v], [0, 0]]`
/// with `J = [[0, -1], [1, 0]]`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean2;

pub(crate) fn rotate(theta: f64, v: [f64; 2]) -> [f64; 2] {
    let (s, c) = theta.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1]]
}

/// Coefficients `(a, b)` of `V(ω) = a I + b J`, the translation part of `exp`.
fn v_coefficients(omega: f64) -> (f64, f64) {
    if omega.abs() < 1e-4 {
        let w2 = omega * omega;
        (1.0 - w2 / 6.0 + w2 * w2 / 120.0, omega / 2.0 - omega * w2 / 24.0)
    } else {
        (omega.sin() / omega, (1.0 - omega.cos()) / omega)
    }
}

impl Euclidean2 {
    /// The 3×3 homogeneous matrix `[[R(θ), ξ], [0, 1]]`.
    pub fn render_matrix(x: &[f64]) -> [[f64; 3]; 3] {
        let (s, c) = x[0].sin_cos();
        [[c, -s, x[1]], [s, c, x[2]], [0.0, 0.0, 1.0]]
    }
}

impl ParametricGroup for Euclidean2 {
    fn name(&self) -> &str {
        "E(2)"
    }

    fn dim(&self) -> usize {
        3
    }

    fn identity(&self) -> Vec<f64> {
        vec![0.0; 3]
    }

    fn compose(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let r = rotate(x[0], [y[1], y[2]]);
        vec![wrap_angle(x[0] + y[0]), x[1] + r[0], x[2] + r[1]]
    }

    fn invert(&self, x: &[f64]) -> Vec<f64> {
        let r = rotate(-x[0], [x[1], x[2]]);
        vec![wrap_angle(-x[0]), -r[0], -r[1]]
    }

    fn exp(&self, v: &[f64]) -> Vec<f64> {
        let (a, b) = v_coefficients(v[0]);
        vec![
            wrap_angle(v[0]),
            a * v[1] - b * v[2],
            b * v[1] + a * v[2],
        ]
    }

    fn log(&self, x: &[f64]) -> Vec<f64> {
        let omega = wrap_angle(x[0]);
        let (a, b) = v_coefficients(omega);
        let d = a * a + b * b;
        vec![
            omega,
            (a * x[1] + b * x[2]) / d,
            (-b * x[1] + a * x[2]) / d,
        ]
    }

    fn bracket(&self, u: &[f64], v: &[f64]) -> Vec<f64> {
        // (0, ω_u J v_v − ω_v J v_u)
        vec![
            0.0,
            -u[0] * v[2] + v[0] * u[2],
            u[0] * v[1] - v[0] * u[1],
        ]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Vec<f64> {
        vec![
            uniform(rng, -PI, PI),
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
        ]
    }

    fn distance(&self, x: &[f64], y: &[f64]) -> f64 {
        wrap_angle(x[0] - y[0])
            .abs()
            .max((x[1] - y[1]).abs())
            .max((x[2] - y[2]).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_group_axioms(g: &dyn ParametricGroup) {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let e = g.identity();
        for _ in 0..200 {
            let (x, y, z) = (g.sample(&mut rng), g.sample(&mut rng), g.sample(&mut rng));
            assert!(g.distance(&g.compose(&e, &x), &x) < 1e-12);
            assert!(g.distance(&g.compose(&x, &e), &x) < 1e-12);
            assert!(g.distance(&g.compose(&x, &g.invert(&x)), &e) < 1e-12);
            assert!(g.distance(&g.compose(&g.invert(&x), &x), &e) < 1e-12);
            let l = g.compose(&g.compose(&x, &y), &z);
            let r = g.compose(&x, &g.compose(&y, &z));
            assert!(g.distance(&l, &r) < 1e-12, "{} not associative", g.name());
            // log inverts exp on small elements
            let v: Vec<f64> = x.iter().map(|c| c * 0.3).collect();
            assert!(g.distance(&g.log(&g.exp(&v)), &v) < 1e-12);
        }
    }

    #[test]
    fn group_axioms_hold_on_samples() {
        check_group_axioms(&Heisenberg);
        check_group_axioms(&Euclidean2);
        check_group_axioms(&Euclidean::new(2));
    }

    #[test]
    fn exp_is_a_one_parameter_subgroup() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in [&Heisenberg as &dyn ParametricGroup, &Euclidean2] {
            for _ in 0..50 {
                let v = g.sample(&mut rng);
                let (t, s) = (0.37, -0.81);
                let at = |t: f64| g.exp(&v.iter().map(|c| c * t).collect::<Vec<_>>());
                assert!(g.distance(&g.compose(&at(t), &at(s)), &at(t + s)) < 1e-12);
            }
        }
    }

    #[test]
    fn heisenberg_matches_matrix_product() {
        let m = |x: &[f64]| [[1.0, x[2], x[1]], [0.0, 1.0, x[0]], [0.0, 0.0, 1.0]];
        let mul = |a: [[f64; 3]; 3], b: [[f64; 3]; 3]| {
            let mut c = [[0.0; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
                }
            }
            c
        };
        let x = [0.5, -1.25, 2.0];
        let y = [1.5, 0.75, -3.0];
        assert_eq!(mul(m(&x), m(&y)), m(&Heisenberg.compose(&x, &y)));
    }

    #[test]
    fn e2_render_is_homogeneous() {
        let x = [0.4, 1.0, -2.0];
        let y = [-1.1, 0.3, 0.5];
        let (a, b) = (Euclidean2::render_matrix(&x), Euclidean2::render_matrix(&y));
        let c = Euclidean2::render_matrix(&Euclidean2.compose(&x, &y));
        for i in 0..3 {
            for j in 0..3 {
                let p: f64 = (0..3).map(|k| a[i][k] * b[k][j]).sum();
                assert!((p - c[i][j]).abs() < 1e-14);
            }
        }
    }
}
