use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::Args;
use serde_json::json;

use twistprod::finite_groups::catalog::by_name;
use twistprod::finite_groups::{
    check_twist_condition, inner_action, split_pair, twisted_product, CayleyGroup, ConditionCheck,
    ConditionClause, GroupAction, GroupViolation,
};
use twistprod::io::{read_group, read_group_action};

use crate::{load, CliError, CliResult, Global, Outcome};

#[derive(Args, Debug)]
pub struct FgArgs {
    /// Group file, or the name of a corpus group (Z1..Z8, Z2xZ2, Z2xZ4, S3, D4, Q8, D4xZ2, A4).
    #[arg(long)]
    pub g: String,
    /// Second factor; defaults to G.
    #[arg(long)]
    pub h: Option<String>,
    /// Action of H on G, `{"maps": [...]}`; trivial when omitted.
    #[arg(long, conflicts_with = "inner")]
    pub lambda: Option<PathBuf>,
    /// Action of G on H; trivial when omitted.
    #[arg(long, conflicts_with = "inner")]
    pub mu: Option<PathBuf>,
    /// Both actions by conjugation (requires H = G).
    #[arg(long)]
    pub inner: bool,
    /// Include the product table in JSON output.
    #[arg(long)]
    pub table: bool,
}

fn resolve_group(spec: &str) -> CliResult<CayleyGroup> {
    let path = Path::new(spec);
    if path.exists() {
        return load(path, |p| read_group(p));
    }
    by_name(spec).ok_or_else(|| CliError::Input(format!("`{spec}` is neither a file nor a corpus group")))
}

struct Setup {
    g: CayleyGroup,
    h: CayleyGroup,
    lambda: GroupAction,
    mu: GroupAction,
}

fn setup(args: &FgArgs) -> CliResult<Setup> {
    let g = resolve_group(&args.g)?;
    let h = match &args.h {
        Some(s) => resolve_group(s)?,
        None => g.clone(),
    };
    if args.inner {
        if g != h {
            return Err(CliError::Input("--inner needs H = G".into()));
        }
        let a = inner_action(&g);
        return Ok(Setup {
            lambda: a.clone(),
            mu: a,
            g,
            h,
        });
    }
    let lambda = match &args.lambda {
        Some(p) => load(p, |p| read_group_action(p, &h, &g))?,
        None => GroupAction::trivial(&h, &g),
    };
    let mu = match &args.mu {
        Some(p) => load(p, |p| read_group_action(p, &g, &h))?,
        None => GroupAction::trivial(&g, &h),
    };
    Ok(Setup { g, h, lambda, mu })
}

fn pair_label(s: &Setup, p: usize) -> String {
    let (a, b) = split_pair(p, s.h.order());
    format!("({}, {})", s.g.label(a), s.h.label(b))
}

fn violation_text(s: &Setup, v: &GroupViolation) -> String {
    match *v {
        GroupViolation::Associativity { a, b, c } => format!(
            "associativity fails: (xy)z != x(yz) for x = {}, y = {}, z = {}",
            pair_label(s, a),
            pair_label(s, b),
            pair_label(s, c)
        ),
        GroupViolation::Inverse { element } => {
            format!("{} has no two-sided inverse", pair_label(s, element))
        }
        GroupViolation::Identity { element } => {
            format!("the pair of identities does not fix {}", pair_label(s, element))
        }
        other => other.to_string(),
    }
}

fn condition_text(s: &Setup, c: &ConditionCheck) -> String {
    match c.witness {
        None => "group condition: holds\n".into(),
        Some((g, h, clause)) => {
            let what = match clause {
                ConditionClause::MuDefectOutsideKerLambda => "mu(g)(h) h^-1 is not in ker lambda",
                ConditionClause::LambdaDefectOutsideKerMu => "lambda(h)(g) g^-1 is not in ker mu",
            };
            format!(
                "group condition: fails at g = {}, h = {}: {what}\n",
                s.g.label(g),
                s.h.label(h)
            )
        }
    }
}

pub fn fg_twist(_g: &Global, args: &FgArgs) -> CliResult<Outcome> {
    let s = setup(args)?;
    let out = twisted_product(&s.g, &s.h, &s.lambda, &s.mu)?;
    let mut text = format!(
        "twisted product of orders {} and {}: {} elements\n",
        s.g.order(),
        s.h.order(),
        out.order()
    );
    match &out.failure_witness {
        None => text.push_str("is a group: yes\n"),
        Some(v) => writeln!(text, "is a group: no, {}", violation_text(&s, v)).unwrap(),
    }
    text.push_str(&condition_text(&s, &out.condition));
    let mut json = json!({
        "g_order": s.g.order(),
        "h_order": s.h.order(),
        "order": out.order(),
        "is_group": out.is_group(),
        "failure_witness": out.failure_witness,
        "condition": out.condition,
    });
    if args.table {
        json["table"] = json!(out.table);
    }
    Ok(Outcome {
        pass: out.is_group(),
        text,
        json,
    })
}

pub fn fg_condition(_g: &Global, args: &FgArgs) -> CliResult<Outcome> {
    let s = setup(args)?;
    let c = check_twist_condition(&s.g, &s.h, &s.lambda, &s.mu)?;
    Ok(Outcome {
        pass: c.holds,
        text: condition_text(&s, &c),
        json: serde_json::to_value(c).expect("report serializes"),
    })
}
