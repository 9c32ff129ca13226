use std::fmt::Write;
use std::path::Path;

use serde_json::json;

use twistprod::curvature::{curvature_report, scalar_curvature_metabelian, CurvatureMethod, CurvatureReport};
use twistprod::io::{read_algebra, read_twist_spec, AlgebraFile};
use twistprod::lie_core::is_two_step_nilpotent;
use twistprod::twisted_lie::{build_inner_twist, build_twisted_algebra};
use twistprod::LieAlgebra;

use crate::render;
use crate::{load, CliResult, Global, Outcome};

pub fn describe(alg: &LieAlgebra) -> String {
    let constants = AlgebraFile::from_algebra(alg).constants;
    format!(
        "dimension {}\n{}",
        alg.dim(),
        render::brackets(&alg.basis_labels, &constants)
    )
}

pub fn curvature_text(alg: &LieAlgebra, report: &CurvatureReport) -> String {
    format!(
        "sectional curvature:\n{}scalar curvature: {} ({})\n",
        render::matrix(&alg.basis_labels, &report.sectional),
        render::number(report.scalar),
        report.method
    )
}

pub fn twist_lie(g: &Global, spec: &Path) -> CliResult<Outcome> {
    let spec = load(spec, |p| read_twist_spec(p))?;
    let twisted = build_twisted_algebra(&spec, g.tol)?;
    let mut text = String::from("twisted algebra\n");
    text.push_str(&describe(&twisted.algebra));
    writeln!(text, "{}", twisted.jacobi).unwrap();
    Ok(Outcome {
        pass: twisted.jacobi.passed(),
        json: json!({
            "algebra": AlgebraFile::from_algebra(&twisted.algebra),
            "jacobi": twisted.jacobi,
        }),
        text,
    })
}

pub fn inner_twist(g: &Global, path: &Path) -> CliResult<Outcome> {
    let alg = load(path, |p| read_algebra(p))?;
    let twist = build_inner_twist(&alg, g.tol);
    let warning = twist.warning();
    let mut text = String::from("inner twist\n");
    text.push_str(&describe(&twist.algebra));
    if let Some(w) = &warning {
        eprintln!("warning: {w}");
        writeln!(text, "warning: {w}").unwrap();
    }
    Ok(Outcome {
        pass: true,
        json: json!({
            "algebra": AlgebraFile::from_algebra(&twist.algebra),
            "input_nilpotency": twist.input_nilpotency,
            "warning": warning,
        }),
        text,
    })
}

pub fn curvature(g: &Global, path: &Path, shortcut: bool) -> CliResult<Outcome> {
    let alg = load(path, |p| read_algebra(p))?;
    let mut report = curvature_report(&alg);
    if shortcut {
        report.scalar = scalar_curvature_metabelian(&alg, g.tol)?;
        report.method = CurvatureMethod::MetabelianShortcut;
    }
    Ok(Outcome {
        pass: true,
        text: curvature_text(&alg, &report),
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}

pub fn check_jacobi(g: &Global, path: &Path) -> CliResult<Outcome> {
    let alg = load(path, |p| read_algebra(p))?;
    let report = twistprod::lie_core::check_jacobi(&alg, g.tol);
    Ok(Outcome {
        pass: report.passed(),
        text: format!("{report}\n"),
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}

pub fn check_nilpotent(g: &Global, path: &Path) -> CliResult<Outcome> {
    let alg = load(path, |p| read_algebra(p))?;
    let check = is_two_step_nilpotent(&alg, g.tol);
    let text = match check.witness {
        None => "2-step nilpotent: yes\n".to_string(),
        Some((i, j, k)) => format!(
            "2-step nilpotent: no, [[{}, {}], {}] has norm {:e}\n",
            alg.basis_labels[i], alg.basis_labels[j], alg.basis_labels[k], check.residual
        ),
    };
    Ok(Outcome {
        pass: check.two_step_nilpotent,
        text,
        json: serde_json::to_value(check).expect("report serializes"),
    })
}
