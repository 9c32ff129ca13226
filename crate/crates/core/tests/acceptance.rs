//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twistprod::corpus::{
    builtin, derive_infinitesimal_action, e2_canonical_basis, e2_rotation_operator, exact_action_in_basis,
    observed_convergence_order, shear_semidirect_spec, SmoothAction, DEFAULT_STEP,
};
use twistprod::curvature::{scalar_curvature, scalar_curvature_metabelian, sectional_curvatures, verify_six_rho};
use twistprod::finite_groups::catalog::corpus;
use twistprod::finite_groups::{
    inner_action, is_two_step_nilpotent_group, random_action_pair, twisted_product, CayleyGroup,
};
use twistprod::lie_core::{bracket, check_jacobi, is_two_step_nilpotent, random_two_step_nilpotent};
use twistprod::twisted_lie::{build_inner_twist, build_twisted_algebra, twisted_bracket, TwistSpec};
use twistprod::{LieAlgebra, Vector};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn max_gap(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn random_nilpotent(rng: &mut ChaCha8Rng, max_dim: usize) -> LieAlgebra {
    let gens = rng.gen_range(2..max_dim);
    let center = rng.gen_range(1..=max_dim - gens);
    random_two_step_nilpotent(rng, gens, center)
}

fn within(elapsed: Duration, limit_secs: f64) -> bool {
    elapsed.as_secs_f64() < limit_secs
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for name in ["heisenberg", "gamma_star_gamma"] {
        let b = builtin(name).unwrap();
        let alg = b.target(1e-12).unwrap();
        worst = worst.max(max_gap(&sectional_curvatures(&alg), &b.expected.sectional));
        worst = worst.max((scalar_curvature(&alg) - b.expected.scalar).abs());
    }
    let t = start.elapsed();
    outcome(
        worst <= 1e-12 && within(t, 1.0),
        format!("max deviation {worst:.1e} (tol 1e-12), {:.3} s (limit 1 s)", t.as_secs_f64()),
    )
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut algebras = vec![LieAlgebra::heisenberg()];
    algebras.extend((0..200).map(|_| random_nilpotent(&mut rng, 8)));
    let mut failures = 0;
    let mut worst_rel: f64 = 0.0;
    for alg in &algebras {
        let r = verify_six_rho(alg, 1e-9).unwrap();
        worst_rel = worst_rel.max((r.rho_prime - 6.0 * r.rho).abs() / r.rho.abs().max(1.0));
        failures += !r.pass as usize;
    }
    let heis = verify_six_rho(&LieAlgebra::heisenberg(), 1e-9).unwrap();
    let t = start.elapsed();
    outcome(
        failures == 0 && heis.rho_prime == -3.0 && heis.rho == -0.5 && within(t, 10.0),
        format!(
            "Heisenberg rho' = {} = 6 * ({}); {} instances, {failures} failures, worst relative gap {worst_rel:.1e} (tol 1e-9), {:.2} s (limit 10 s)",
            heis.rho_prime,
            heis.rho,
            algebras.len(),
            t.as_secs_f64()
        ),
    )
}

fn ac3() -> Outcome {
    let b = builtin("e2_star_e2_canonical").unwrap();
    let alg = b.target(1e-12).unwrap();
    let worst = sectional_curvatures(&alg).iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    let rho = scalar_curvature(&alg);
    outcome(
        worst <= 1e-12 && rho.abs() <= 1e-12,
        format!("max |k_ij| = {worst:.1e}, scalar {rho:.1e} (tol 1e-12)"),
    )
}

fn ac4() -> Outcome {
    let b = builtin("e2_star_e2_skew").unwrap();
    let alg = b.target(1e-12).unwrap();
    let gap = max_gap(&sectional_curvatures(&alg), &b.expected.sectional);
    let rho = scalar_curvature(&alg);
    outcome(
        gap <= 1e-12 && (rho + 0.125).abs() <= 1e-12,
        format!("max deviation {gap:.1e}, scalar {rho} vs -1/8 (tol 1e-12)"),
    )
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let groups = corpus();
    let mut instances = 0;
    let mut disagreements = Vec::new();
    for (name, g) in &groups {
        let inner = inner_action(g);
        let out = twisted_product(g, g, &inner, &inner).unwrap();
        instances += 1;
        if !out.agrees_with_condition() {
            disagreements.push(format!("{name} inner"));
        }
    }
    let small: Vec<&(String, CayleyGroup)> = groups.iter().filter(|(_, g)| g.order() <= 12).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut groups_formed = 0;
    for _ in 0..50 {
        let (gn, g) = small[rng.gen_range(0..small.len())];
        let (hn, h) = small[rng.gen_range(0..small.len())];
        let (lambda, mu) = random_action_pair(&mut rng, g, h);
        let out = twisted_product(g, h, &lambda, &mu).unwrap();
        instances += 1;
        groups_formed += out.is_group() as usize;
        if !out.agrees_with_condition() {
            disagreements.push(format!("{gn} * {hn}"));
        }
    }
    let t = start.elapsed();
    outcome(
        disagreements.is_empty() && within(t, 60.0),
        format!(
            "{instances} instances ({} corpus inner, 50 random, {groups_formed} random ones are groups), {} disagreements {:?}, {:.2} s (limit 60 s)",
            groups.len(),
            disagreements.len(),
            disagreements,
            t.as_secs_f64()
        ),
    )
}

fn ac6() -> Outcome {
    let mut exceptions = Vec::new();
    let mut count = 0;
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 16) {
        let inner = inner_action(&g);
        let is_group = twisted_product(&g, &g, &inner, &inner).unwrap().is_group();
        if is_group != is_two_step_nilpotent_group(&g).two_step_nilpotent {
            exceptions.push(name);
        }
        count += 1;
    }
    outcome(exceptions.is_empty(), format!("{count} groups, exceptions {exceptions:?}"))
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    for _ in 0..200 {
        let m = random_nilpotent(&mut rng, 8);
        let twist = build_inner_twist(&m, 1e-9).algebra;
        let ok = check_jacobi(&twist, 1e-9).passed() && is_two_step_nilpotent(&twist, 1e-9).two_step_nilpotent;
        failures += !ok as usize;
    }
    outcome(failures == 0, format!("200 instances, {failures} failures (tol 1e-9)"))
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut specs: Vec<(String, TwistSpec)> = Vec::new();
    for name in ["gamma_star_gamma", "e2_star_e2_canonical", "e2_star_e2_skew"] {
        specs.push((name.into(), builtin(name).unwrap().twist.unwrap()));
    }
    specs.push(("shear".into(), shear_semidirect_spec()));
    for i in 0..20 {
        specs.push((format!("random inner {i}"), TwistSpec::inner(&random_nilpotent(&mut rng, 6))));
    }
    let mut bracket_gap: f64 = 0.0;
    let mut nilpotent = Vec::new();
    for (_, spec) in &specs {
        let alg = build_twisted_algebra(spec, 1e-12).unwrap().algebra;
        let n = alg.dim();
        for _ in 0..1000 {
            let z1 = Vector::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let z2 = Vector::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let a = twisted_bracket(spec, &z1, &z2).unwrap();
            let b = bracket(&alg, &z1, &z2).unwrap();
            bracket_gap = bracket_gap.max((&a - &b).max_abs());
        }
        if is_two_step_nilpotent(&alg, 1e-12).two_step_nilpotent {
            nilpotent.push(alg.clone());
        }
        if is_two_step_nilpotent(&spec.g, 1e-12).two_step_nilpotent {
            nilpotent.push(spec.g.clone());
        }
    }
    let mut scalar_gap: f64 = 0.0;
    for alg in &nilpotent {
        let full = scalar_curvature(alg);
        let short = scalar_curvature_metabelian(alg, 1e-9).unwrap();
        scalar_gap = scalar_gap.max((full - short).abs());
    }
    outcome(
        bracket_gap <= 1e-9 && scalar_gap <= 1e-9,
        format!(
            "{} twist instances x 1000 pairs, max bracket gap {bracket_gap:.1e}; {} nilpotent algebras, max scalar gap {scalar_gap:.1e} (tol 1e-9)",
            specs.len(),
            nilpotent.len()
        ),
    )
}

fn ac9() -> Outcome {
    let unit = |n: usize| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    };
    let shear = SmoothAction::shear();
    let d = derive_infinitesimal_action(&shear, &unit(1), &unit(2), DEFAULT_STEP, 1e-6).unwrap();
    let exact_shear = exact_action_in_basis(&unit(1), &unit(2), |y, x| vec![0.0, y[0] * x[0]]).unwrap();
    let shear_gap = d.action.max_abs_diff(&exact_shear);

    let basis = e2_canonical_basis();
    let e2 = SmoothAction::e2_rotation_of_translations();
    let d2 = derive_infinitesimal_action(&e2, &basis, &basis, DEFAULT_STEP, 1e-6).unwrap();
    let exact_e2 = exact_action_in_basis(&basis, &basis, e2_rotation_operator).unwrap();
    let e2_gap = d2.action.max_abs_diff(&exact_e2);

    let order = observed_convergence_order(&e2, &basis, &basis, 1e-2).unwrap();
    let p = order.order.unwrap_or(f64::NAN);
    outcome(
        shear_gap <= 1e-6 && e2_gap <= 1e-6 && (p - 2.0).abs() < 0.1 && d2.derivation.passed(),
        format!(
            "shear gap {shear_gap:.1e}, E(2) operator gap {e2_gap:.1e} (tol 1e-6), observed order {p:.3}, C ~ {:.2e}",
            d2.estimated_constant
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("AC1", "Heisenberg and its inner twist: sectional matrices and scalars", ac1),
        ("AC2", "rho' = 6 rho on Heisenberg and 200 random 2-step nilpotent algebras", ac2),
        ("AC3", "E(2) * E(2), canonical basis: flat", ac3),
        ("AC4", "E(2) * E(2), skew basis: sectional matrix and scalar -1/8", ac4),
        ("AC5", "twisted table is a group iff the group condition holds", ac5),
        ("AC6", "inner twist is a group iff 2-step nilpotent", ac6),
        ("AC7", "inner twist of 2-step nilpotent algebras: Jacobi and nilpotency", ac7),
        ("AC8", "bracket vs tensor and shortcut vs summed scalar curvature", ac8),
        ("AC9", "finite-difference operators and second-order convergence", ac9),
    ];
    let mut all = true;
    for (id, title, run) in criteria {
        let o = run();
        all &= o.pass;
        println!("{id} {}: {title} | {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
