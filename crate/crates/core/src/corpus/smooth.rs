//! Smooth actions between coordinate groups and the sampled group condition.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::groups::{rotate, wrap_angle, Euclidean, Euclidean2, Heisenberg, ParametricGroup};

pub type ApplyFn = dyn Fn(&[f64], &[f64]) -> Vec<f64> + Send + Sync;

/// Distance of a group element from a kernel, zero when it lies in it.
pub type KernelTest = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// `apply(h, g)`: the element `h` of `acting` moves the element `g` of `target`.
#[derive(Clone)]
pub struct SmoothAction {
    pub name: String,
    pub acting: Arc<dyn ParametricGroup>,
    pub target: Arc<dyn ParametricGroup>,
    apply: Arc<ApplyFn>,
}

impl fmt::Debug for SmoothAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothAction")
            .field("name", &self.name)
            .field("acting", &self.acting.name())
            .field("target", &self.target.name())
            .finish()
    }
}

/// Largest residual of each action axiom over the samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActionAxiomResiduals {
    pub identity_acts_trivially: f64,
    pub fixes_identity: f64,
    pub homomorphism: f64,
    pub automorphism: f64,
}

impl ActionAxiomResiduals {
    pub fn max(&self) -> f64 {
        self.identity_acts_trivially
            .max(self.fixes_identity)
            .max(self.homomorphism)
            .max(self.automorphism)
    }
}

impl SmoothAction {
    pub fn new(
        name: impl Into<String>,
        acting: Arc<dyn ParametricGroup>,
        target: Arc<dyn ParametricGroup>,
        apply: impl Fn(&[f64], &[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            acting,
            target,
            apply: Arc::new(apply),
        }
    }

    pub fn apply(&self, h: &[f64], g: &[f64]) -> Vec<f64> {
        (self.apply)(h, g)
    }

    pub fn trivial(acting: Arc<dyn ParametricGroup>, target: Arc<dyn ParametricGroup>) -> Self {
        Self::new("trivial", acting, target, |_, g| g.to_vec())
    }

    /// Conjugation `h g h⁻¹` of a group on itself.
    pub fn inner(group: Arc<dyn ParametricGroup>) -> Self {
        let g = group.clone();
        Self::new(format!("inner {}", group.name()), group.clone(), group, move |h, x| {
            g.compose(&g.compose(h, x), &g.invert(h))
        })
    }

    /// `(A, ξ)` acts on `(B, η)` by `(B, Aη)`: rotations turn translations
    /// and leave the rotation part alone.
    pub fn e2_rotation_of_translations() -> Self {
        Self::new(
            "E(2) rotation of translations",
            Arc::new(Euclidean2),
            Arc::new(Euclidean2),
            |h, g| {
                let r = rotate(h[0], [g[1], g[2]]);
                vec![g[0], r[0], r[1]]
            },
        )
    }

    /// Shear of `R²` by `R¹`: `h · (g1, g2) = (g1, g2 + h g1)`.
    pub fn shear() -> Self {
        Self::new(
            "shear of R2 by R1",
            Arc::new(Euclidean::new(1)),
            Arc::new(Euclidean::new(2)),
            |h, g| vec![g[0], g[1] + h[0] * g[0]],
        )
    }

    /// Sampled residuals of the action axioms.
    pub fn sampled_axioms(&self, samples: usize, seed: u64) -> ActionAxiomResiduals {
        let (a, t) = (&self.acting, &self.target);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut r = ActionAxiomResiduals {
            identity_acts_trivially: 0.0,
            fixes_identity: 0.0,
            homomorphism: 0.0,
            automorphism: 0.0,
        };
        for _ in 0..samples {
            let (h1, h2) = (a.sample(&mut rng), a.sample(&mut rng));
            let (x, y) = (t.sample(&mut rng), t.sample(&mut rng));
            r.identity_acts_trivially = r
                .identity_acts_trivially
                .max(t.distance(&self.apply(&a.identity(), &x), &x));
            r.fixes_identity = r
                .fixes_identity
                .max(t.distance(&self.apply(&h1, &t.identity()), &t.identity()));
            let lhs = self.apply(&a.compose(&h1, &h2), &x);
            let rhs = self.apply(&h1, &self.apply(&h2, &x));
            r.homomorphism = r.homomorphism.max(t.distance(&lhs, &rhs));
            let lhs = self.apply(&h1, &t.compose(&x, &y));
            let rhs = t.compose(&self.apply(&h1, &x), &self.apply(&h1, &y));
            r.automorphism = r.automorphism.max(t.distance(&lhs, &rhs));
        }
        r
    }
}

/// Kernel of the rotation-of-translations action: pure translations.
pub fn translations_kernel() -> Arc<KernelTest> {
    Arc::new(|x: &[f64]| wrap_angle(x[0]).abs())
}

/// Kernel of conjugation on the Heisenberg group: its centre `a = c = 0`.
pub fn heisenberg_center_kernel() -> Arc<KernelTest> {
    Arc::new(|x: &[f64]| x[0].abs().max(x[2].abs()))
}

/// The kernel `{identity}`.
pub fn identity_kernel(group: Arc<dyn ParametricGroup>) -> Arc<KernelTest> {
    Arc::new(move |x: &[f64]| group.distance(x, &group.identity()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampledClause {
    /// `μ(g)(h) h⁻¹` is not in `ker λ`.
    MuDefectOutsideKerLambda,
    /// `λ(h)(g) g⁻¹` is not in `ker μ`.
    LambdaDefectOutsideKerMu,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledWitness {
    pub g: Vec<f64>,
    pub h: Vec<f64>,
    pub clause: SampledClause,
    pub residual: f64,
}

/// Result of a sampled (statistical, not exhaustive) condition check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledConditionReport {
    /// Always `"statistical"`: passing means no counterexample was drawn.
    pub method: String,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_residual_mu_defect: f64,
    pub max_residual_lambda_defect: f64,
    pub max_residual: f64,
    pub failures: usize,
    pub first_failure: Option<SampledWitness>,
    pub pass: bool,
}

impl fmt::Display for SampledConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "sampled condition check ({}, {} samples, seed {}): {}",
            self.method,
            self.samples,
            self.seed,
            if self.pass { "pass" } else { "fail" }
        )?;
        writeln!(f, "  max residual: {:.3e} (tolerance {:.1e})", self.max_residual, self.tolerance)?;
        if let Some(w) = &self.first_failure {
            writeln!(
                f,
                "  first failure: g = {:?}, h = {:?}, {:?}, residual {:.3e}",
                w.g, w.h, w.clause, w.residual
            )?;
        }
        Ok(())
    }
}

/// Draws `samples` pairs `(g, h)` and checks both halves of the group
/// condition: `μ(g)(h)·h⁻¹ ∈ ker λ` and `λ(h)(g)·g⁻¹ ∈ ker μ`.
/// `lambda` acts by `H` on `G`, `mu` by `G` on `H`; the kernel tests measure
/// distance from `ker λ ⊂ H` and `ker μ ⊂ G`.
pub fn sampled_condition_check(
    lambda: &SmoothAction,
    mu: &SmoothAction,
    samples: usize,
    ker_lambda: &KernelTest,
    ker_mu: &KernelTest,
    seed: u64,
    tol: f64,
) -> SampledConditionReport {
    let (g_grp, h_grp) = (&lambda.target, &lambda.acting);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SampledConditionReport {
        method: "statistical".into(),
        samples,
        seed,
        tolerance: tol,
        max_residual_mu_defect: 0.0,
        max_residual_lambda_defect: 0.0,
        max_residual: 0.0,
        failures: 0,
        first_failure: None,
        pass: true,
    };
    for _ in 0..samples {
        let g = g_grp.sample(&mut rng);
        let h = h_grp.sample(&mut rng);
        let mu_defect = h_grp.compose(&mu.apply(&g, &h), &h_grp.invert(&h));
        let lambda_defect = g_grp.compose(&lambda.apply(&h, &g), &g_grp.invert(&g));
        let checks = [
            (ker_lambda(&mu_defect), SampledClause::MuDefectOutsideKerLambda),
            (ker_mu(&lambda_defect), SampledClause::LambdaDefectOutsideKerMu),
        ];
        report.max_residual_mu_defect = report.max_residual_mu_defect.max(checks[0].0);
        report.max_residual_lambda_defect = report.max_residual_lambda_defect.max(checks[1].0);
        let mut failed = false;
        for (residual, clause) in checks {
            if !(residual <= tol) {
                failed = true;
                if report.first_failure.is_none() {
                    report.first_failure = Some(SampledWitness {
                        g: g.clone(),
                        h: h.clone(),
                        clause,
                        residual,
                    });
                }
            }
        }
        report.failures += failed as usize;
    }
    report.max_residual = report.max_residual_mu_defect.max(report.max_residual_lambda_defect);
    report.pass = report.failures == 0;
    report
}

/// The coordinate formula printed for conjugation on the Heisenberg group:
/// `(A1, B1, C1)` sends `(A2, B2, C2)` to `(A2, B2 + C1 A2 − C2 A1, C2)`.
pub fn heisenberg_conjugation_formula(h: &[f64], g: &[f64]) -> Vec<f64> {
    vec![g[0], g[1] + h[2] * g[0] - g[2] * h[0], g[2]]
}

/// Largest sampled gap between the printed conjugation formula and
/// conjugation computed by composing in the group.
pub fn heisenberg_conjugation_discrepancy(samples: usize, seed: u64) -> f64 {
    let inner = SmoothAction::inner(Arc::new(Heisenberg));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let h = Heisenberg.sample(&mut rng);
        let g = Heisenberg.sample(&mut rng);
        let d = Heisenberg.distance(&inner.apply(&h, &g), &heisenberg_conjugation_formula(&h, &g));
        worst = worst.max(d);
    }
    worst
}
