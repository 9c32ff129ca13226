//! Text rendering of numbers and matrices.

use std::f64::consts::SQRT_2;

const DENOMINATORS: [i64; 6] = [1, 2, 4, 8, 16, 64];
const MAX_NUMERATOR: i64 = 128;
const SNAP: f64 = 1e-9;

fn as_fraction(v: f64) -> Option<(i64, i64)> {
    DENOMINATORS.iter().find_map(|&q| {
        let p = (v * q as f64).round();
        let ok = p.abs() <= MAX_NUMERATOR as f64 && (v - p / q as f64).abs() <= SNAP;
        ok.then_some((p as i64, q))
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn fraction_text(p: i64, q: i64) -> String {
    let d = gcd(p, q).max(1);
    let (p, q) = (p / d, q / d);
    if q == 1 {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

/// `p/q` for small dyadic fractions, `p/√2` or `p/(q√2)` for their multiples
/// by `1/√2`, otherwise 12 significant digits.
pub fn number(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if let Some((p, q)) = as_fraction(v) {
        return fraction_text(p, q);
    }
    if let Some((p, q)) = as_fraction(v * SQRT_2) {
        let d = gcd(p, q).max(1);
        let (p, q) = (p / d, q / d);
        return if q == 1 {
            format!("{p}/√2")
        } else {
            format!("{p}/({q}√2)")
        };
    }
    significant(v, 12)
}

fn significant(v: f64, digits: usize) -> String {
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{v:.prec$e}", prec = digits - 1);
        match s.split_once('e') {
            Some((m, e)) if m.contains('.') => {
                format!("{}e{e}", m.trim_end_matches('0').trim_end_matches('.'))
            }
            _ => s,
        }
    }
}

/// Right-aligned columns, one row per line, with row and column labels.
pub fn matrix(labels: &[String], rows: &[Vec<f64>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|&x| number(x)).collect()).collect();
    let label_w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut width = vec![0; rows.first().map_or(0, Vec::len)];
    for (j, w) in width.iter_mut().enumerate() {
        *w = cells
            .iter()
            .map(|r| r[j].chars().count())
            .chain(labels.get(j).map(|l| l.chars().count()))
            .max()
            .unwrap_or(0);
    }
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut out = String::new();
    out.push_str(&" ".repeat(label_w));
    for (j, w) in width.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&pad(labels.get(j).map_or("", String::as_str), *w));
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        out.push_str(&pad(labels.get(i).map_or("", String::as_str), label_w));
        for (cell, w) in row.iter().zip(&width) {
            out.push_str("  ");
            out.push_str(&pad(cell, *w));
        }
        out.push('\n');
    }
    out
}

/// `[e1, e3] = -e2` style lines from 1-based constants with `i < j`.
pub fn brackets(labels: &[String], constants: &[(usize, usize, usize, f64)]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < constants.len() {
        let (a, b) = (constants[i].0, constants[i].1);
        let mut terms = String::new();
        while i < constants.len() && (constants[i].0, constants[i].1) == (a, b) {
            let (_, _, k, v) = constants[i];
            let coeff = number(v.abs());
            let sign = if v < 0.0 { "-" } else { "+" };
            let body = if coeff == "1" {
                labels[k - 1].clone()
            } else {
                format!("{coeff} {}", labels[k - 1])
            };
            if terms.is_empty() {
                terms = if v < 0.0 { format!("-{body}") } else { body };
            } else {
                terms.push_str(&format!(" {sign} {body}"));
            }
            i += 1;
        }
        out.push_str(&format!("[{}, {}] = {terms}\n", labels[a - 1], labels[b - 1]));
    }
    if out.is_empty() {
        out.push_str("(abelian: all brackets vanish)\n");
    }
    out
}
