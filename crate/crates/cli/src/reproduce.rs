use std::fmt::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use similar::TextDiff;

use twistprod::corpus::{
    builtin, derive_infinitesimal_action, e2_canonical_basis, e2_skew_basis, exact_action_in_basis,
    heisenberg_center_kernel, identity_kernel, observed_convergence_order, sampled_condition_check,
    translations_kernel, Bundle, Euclidean2, Heisenberg, ParametricGroup, SmoothAction, BUILTIN_NAMES,
    DEFAULT_CONVERGENCE_TOL, DEFAULT_STEP,
};
use twistprod::curvature::{curvature_report, verify_six_rho as six_rho};
use twistprod::io::{read_algebra, AlgebraFile};
use twistprod::lie_core::random_two_step_nilpotent;
use twistprod::twisted_lie::build_twisted_algebra;
use twistprod::{Error, LieAlgebra};

use crate::algebra::{curvature_text, describe};
use crate::render;
use crate::{load, CliError, CliResult, Global, Outcome};

const SAMPLES: usize = 1000;

#[derive(Args, Debug)]
pub struct DeriveArgs {
    /// shear, e2, e2_skew or heisenberg_inner.
    pub action: String,
    /// Finite-difference step.
    #[arg(long, default_value_t = DEFAULT_STEP)]
    pub step: f64,
    /// Largest step of the h, h/2, h/4 convergence study.
    #[arg(long, default_value_t = 1e-2)]
    pub order_step: f64,
}

#[derive(Args, Debug)]
pub struct SixRhoArgs {
    /// Algebra file; omit together with --random.
    pub algebra: Option<PathBuf>,
    /// Number of random 2-step nilpotent algebras to test.
    #[arg(long)]
    pub random: Option<usize>,
    /// Largest dimension of the random algebras.
    #[arg(long, default_value_t = 8)]
    pub max_dim: usize,
}

fn unit_basis(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

struct NamedAction {
    action: SmoothAction,
    acting: Vec<Vec<f64>>,
    target: Vec<Vec<f64>>,
}

fn named_action(name: &str) -> CliResult<NamedAction> {
    let (action, acting, target) = match name {
        "shear" => (SmoothAction::shear(), unit_basis(1), unit_basis(2)),
        "e2" => (
            SmoothAction::e2_rotation_of_translations(),
            e2_canonical_basis(),
            e2_canonical_basis(),
        ),
        "e2_skew" => (
            SmoothAction::e2_rotation_of_translations(),
            e2_skew_basis(),
            e2_skew_basis(),
        ),
        "heisenberg_inner" => (SmoothAction::inner(Arc::new(Heisenberg)), unit_basis(3), unit_basis(3)),
        other => {
            return Err(CliError::Input(format!(
                "unknown action `{other}`; expected shear, e2, e2_skew or heisenberg_inner"
            )))
        }
    };
    Ok(NamedAction { action, acting, target })
}

pub fn derive_action(_g: &Global, args: &DeriveArgs) -> CliResult<Outcome> {
    let n = named_action(&args.action)?;
    let derived = match derive_infinitesimal_action(&n.action, &n.acting, &n.target, args.step, DEFAULT_CONVERGENCE_TOL)
    {
        Ok(d) => d,
        Err(Error::NonConvergence { residual, tolerance }) => {
            return Ok(Outcome {
                pass: false,
                text: format!("finite differences did not converge: residual {residual:e} exceeds {tolerance:e}\n"),
                json: json!({"converged": false, "residual": residual, "tolerance": tolerance}),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let order = observed_convergence_order(&n.action, &n.acting, &n.target, args.order_step)?;
    let labels: Vec<String> = (1..=n.target.len()).map(|i| format!("e{i}")).collect();
    let mut text = format!("{} (step {:e})\n", n.action.name, args.step);
    for (a, m) in derived.action.matrices().iter().enumerate() {
        writeln!(text, "L(e{}):", a + 1).unwrap();
        text.push_str(&render::matrix(&labels, &m.rows()));
    }
    writeln!(
        text,
        "step vs step/2 residual: {:e}, estimated C: {:e}",
        derived.richardson_residual, derived.estimated_constant
    )
    .unwrap();
    match order.order {
        Some(p) => writeln!(text, "observed order from step {:e}: {p:.3}", order.step).unwrap(),
        None => text.push_str("observed order: exact to roundoff\n"),
    }
    writeln!(text, "{}", derived.derivation).unwrap();
    Ok(Outcome {
        pass: derived.derivation.passed(),
        json: json!({
            "converged": true,
            "action": derived.action,
            "step": derived.step,
            "richardson_residual": derived.richardson_residual,
            "estimated_constant": derived.estimated_constant,
            "convergence": order,
            "derivation": derived.derivation,
        }),
        text,
    })
}

struct Section {
    pass: bool,
    text: String,
    json: Value,
}

fn max_gap(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn summary_text(labels: &[String], sectional: &[Vec<f64>], scalar: f64, constants: &[(usize, usize, usize, f64)]) -> String {
    format!(
        "{}sectional curvature:\n{}scalar curvature: {}\n",
        render::brackets(labels, constants),
        render::matrix(labels, sectional),
        render::number(scalar)
    )
}

fn bundle_section(b: &Bundle, tol: f64) -> CliResult<Section> {
    let alg = b.target(tol)?;
    let report = curvature_report(&alg);
    let computed = AlgebraFile::from_algebra(&alg).constants;
    let expected_tensor = LieAlgebra::from_constants(
        alg.dim(),
        &b.expected
            .constants
            .iter()
            .map(|&(i, j, k, v)| (i - 1, j - 1, k - 1, v))
            .collect::<Vec<_>>(),
    )?;
    let sectional_gap = max_gap(&report.sectional, &b.expected.sectional);
    let scalar_gap = (report.scalar - b.expected.scalar).abs();
    let constant_gap = expected_tensor.tensor.max_abs_diff(&alg.tensor);
    let pass = sectional_gap <= tol && scalar_gap <= tol && constant_gap <= tol;

    let mut text = format!("== {}: {}\n", b.name, b.description);
    text.push_str(&describe(&alg));
    text.push_str(&curvature_text(&alg, &report));
    writeln!(
        text,
        "matches embedded values: {} (max deviation {:.1e}, tol {:e})",
        if pass { "yes" } else { "NO" },
        sectional_gap.max(scalar_gap).max(constant_gap),
        tol
    )
    .unwrap();
    if !pass {
        let want = summary_text(&alg.basis_labels, &b.expected.sectional, b.expected.scalar, &b.expected.constants);
        let got = summary_text(&alg.basis_labels, &report.sectional, report.scalar, &computed);
        let diff = TextDiff::from_lines(&want, &got);
        text.push_str(&diff.unified_diff().header("expected", "computed").to_string());
    }
    Ok(Section {
        pass,
        json: json!({
            "name": b.name,
            "pass": pass,
            "algebra": AlgebraFile::from_algebra(&alg),
            "curvature": report,
            "expected": b.expected,
            "max_deviation": {
                "sectional": sectional_gap,
                "scalar": scalar_gap,
                "constants": constant_gap,
            },
        }),
        text,
    })
}

fn example1(g: &Global) -> Section {
    let rot = SmoothAction::e2_rotation_of_translations();
    let k = translations_kernel();
    let r = sampled_condition_check(&rot, &rot, SAMPLES, &*k, &*k, g.seed, g.tol);
    let e2: Arc<dyn ParametricGroup> = Arc::new(Euclidean2);
    let inner = SmoothAction::inner(e2.clone());
    let trivial_kernel = identity_kernel(e2);
    let contrast = sampled_condition_check(&inner, &inner, SAMPLES, &*trivial_kernel, &*trivial_kernel, g.seed, g.tol);
    let heis = SmoothAction::inner(Arc::new(Heisenberg));
    let centre = heisenberg_center_kernel();
    let heis_r = sampled_condition_check(&heis, &heis, SAMPLES, &*centre, &*centre, g.seed, g.tol);
    let pass = r.pass && !contrast.pass && heis_r.pass;
    let text = format!(
        "== example1: E(2) twisted with itself by rotation of translations\n\
         rotation of translations, kernel = translations:\n{r}\
         conjugation on E(2), kernel = identity (expected to fail):\n{contrast}\
         conjugation on Heisenberg, kernel = centre:\n{heis_r}"
    );
    Section {
        pass,
        text,
        json: json!({
            "name": "example1",
            "pass": pass,
            "rotation_of_translations": r,
            "e2_inner": contrast,
            "heisenberg_inner": heis_r,
        }),
    }
}

fn example2(g: &Global) -> CliResult<Section> {
    let n = named_action("shear")?;
    let d = derive_infinitesimal_action(&n.action, &n.acting, &n.target, DEFAULT_STEP, DEFAULT_CONVERGENCE_TOL)?;
    let exact = exact_action_in_basis(&n.acting, &n.target, |y, x| vec![0.0, y[0] * x[0]])?;
    let operator_gap = d.action.max_abs_diff(&exact);
    let spec = twistprod::twisted_lie::TwistSpec::new(
        LieAlgebra::abelian(2),
        LieAlgebra::abelian(1),
        d.action.clone(),
        twistprod::twisted_lie::InfinitesimalAction::zero(2, 1),
    )?;
    let alg = build_twisted_algebra(&spec, g.tol.max(DEFAULT_CONVERGENCE_TOL))?.algebra;
    let bracket_gap = alg.tensor.max_abs_diff(&LieAlgebra::heisenberg().tensor);
    let pass = operator_gap <= DEFAULT_CONVERGENCE_TOL && bracket_gap <= DEFAULT_CONVERGENCE_TOL;
    let labels = vec!["x1".to_string(), "x2".to_string()];
    let mut text = String::from("== example2: Heisenberg algebra as R2 extended by R1 through the shear\n");
    text.push_str("L(y) from finite differences:\n");
    text.push_str(&render::matrix(&labels, &d.action.matrices()[0].rows()));
    writeln!(text, "deviation from L(y)(x) = (0, y x1): {operator_gap:.1e}").unwrap();
    text.push_str("resulting brackets in (x1, x2, y):\n");
    text.push_str(&describe(&alg));
    writeln!(
        text,
        "matches [(x1, x2, y), (x1', x2', y')] = (0, y x1' - y' x1, 0): {} (deviation {bracket_gap:.1e}, tol {DEFAULT_CONVERGENCE_TOL:e})",
        if pass { "yes" } else { "NO" }
    )
    .unwrap();
    Ok(Section {
        pass,
        json: json!({
            "name": "example2",
            "pass": pass,
            "derived": d.action,
            "operator_deviation": operator_gap,
            "algebra": AlgebraFile::from_algebra(&alg),
            "bracket_deviation": bracket_gap,
        }),
        text,
    })
}

fn bundles(names: &[&str], tol: f64) -> CliResult<Vec<Section>> {
    names.iter().map(|n| bundle_section(&builtin(n)?, tol)).collect()
}

fn six_rho_section(tol: f64) -> CliResult<Section> {
    let r = six_rho(&LieAlgebra::heisenberg(), tol)?;
    Ok(Section {
        pass: r.pass,
        text: format!(
            "scalar curvatures: rho = {}, rho' = {}, rho' = 6 rho: {}\n",
            render::number(r.rho),
            render::number(r.rho_prime),
            if r.pass { "yes" } else { "NO" }
        ),
        json: serde_json::to_value(r).expect("report serializes"),
    })
}

fn sections(g: &Global, target: &str) -> CliResult<Vec<Section>> {
    Ok(match target {
        "example1" => vec![example1(g)],
        "example2" => vec![example2(g)?],
        "example3" => {
            let mut s = bundles(&["heisenberg", "gamma_star_gamma"], g.tol)?;
            s.push(six_rho_section(g.tol)?);
            s
        }
        "example4" => bundles(&["e2_canonical", "e2_star_e2_canonical"], g.tol)?,
        "example5" => bundles(&["e2_skew", "e2_star_e2_skew"], g.tol)?,
        "all" => {
            let mut all = Vec::new();
            for t in ["example1", "example2", "example3", "example4", "example5"] {
                all.extend(sections(g, t)?);
            }
            all
        }
        name if BUILTIN_NAMES.contains(&name) => bundles(&[name], g.tol)?,
        other => {
            return Err(CliError::Input(format!(
                "unknown reproduce target `{other}`; expected example1..example5, all, or one of {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    })
}

pub fn reproduce(g: &Global, target: &str) -> CliResult<Outcome> {
    let parts = sections(g, target)?;
    let pass = parts.iter().all(|s| s.pass);
    let text = parts.iter().map(|s| s.text.as_str()).collect::<Vec<_>>().join("\n");
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "target": target,
            "pass": pass,
            "sections": parts.into_iter().map(|s| s.json).collect::<Vec<_>>(),
        }),
    })
}

pub fn verify_six_rho(g: &Global, args: &SixRhoArgs) -> CliResult<Outcome> {
    let mut algebras: Vec<(String, LieAlgebra)> = Vec::new();
    if let Some(path) = &args.algebra {
        algebras.push((path.display().to_string(), load(path, |p| read_algebra(p))?));
    }
    if let Some(count) = args.random {
        if args.max_dim < 3 {
            return Err(CliError::Input("--max-dim must be at least 3".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        for i in 0..count {
            let gens = rng.gen_range(2..args.max_dim);
            let center = rng.gen_range(1..=args.max_dim - gens);
            algebras.push((format!("random {i}"), random_two_step_nilpotent(&mut rng, gens, center)));
        }
    }
    if algebras.is_empty() {
        return Err(CliError::Input("give an algebra file or --random N".into()));
    }
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut pass = true;
    for (name, alg) in &algebras {
        let r = six_rho(alg, g.tol)?;
        pass &= r.pass;
        writeln!(
            text,
            "{name}: dim {}, rho = {}, rho' = {}, {}",
            alg.dim(),
            render::number(r.rho),
            render::number(r.rho_prime),
            if r.pass { "pass" } else { "FAIL" }
        )
        .unwrap();
        reports.push(json!({"name": name, "dim": alg.dim(), "report": r}));
    }
    writeln!(text, "rho' = 6 rho on {} algebra(s): {}", algebras.len(), if pass { "pass" } else { "FAIL" }).unwrap();
    Ok(Outcome {
        pass,
        text,
        json: json!({"pass": pass, "seed": g.seed, "results": reports}),
    })
}
