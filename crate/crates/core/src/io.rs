//! JSON file formats.
//!
//! * Lie algebra: `{"dim": n, "labels": [...], "constants": [[i, j, k, value], ...]}`
//!   with 1-based indices and `i < j`.
//! * Infinitesimal action: `{"acting_dim": m, "target_dim": n, "matrices": [...]}`,
//!   one row-major matrix per acting basis vector.
//! * Twist spec: `{"g": ..., "h": ..., "L": ..., "M": ...}` where each entry
//!   is either an inline object or a path relative to the spec file.
//! * Group: `{"order": n, "labels": [...], "table": [[...], ...]}`, 0-based.
//! * Group action: `{"maps": [[permutation], ...]}`, 0-based.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_groups::{CayleyGroup, GroupAction};
use crate::lie_core::{default_labels, LieAlgebra, StructureTensor};
use crate::twisted_lie::{InfinitesimalAction, TwistSpec};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub constants: Vec<(usize, usize, usize, f64)>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let mut zero_based = Vec::with_capacity(self.constants.len());
        for (i, j, k, v) in self.constants {
            if i == 0 || j == 0 || k == 0 {
                return Err(Error::InvalidConstants(format!(
                    "indices are 1-based, got ({i}, {j}, {k})"
                )));
            }
            zero_based.push((i - 1, j - 1, k - 1, v));
        }
        let tensor = StructureTensor::from_constants(self.dim, &zero_based)?;
        let labels = if self.labels.is_empty() {
            default_labels("e", self.dim)
        } else {
            self.labels
        };
        LieAlgebra::new(tensor, labels)
    }

    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        Self {
            dim: alg.dim(),
            labels: alg.basis_labels.clone(),
            constants: alg
                .tensor
                .upper_constants()
                .into_iter()
                .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v))
                .collect(),
        }
    }
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<AlgebraFile>(text)?.into_algebra()
}

/// Canonical rendering: one constant per line, sorted by `(i, j, k)`,
/// values as shortest round-trip decimals.
pub fn algebra_to_json(alg: &LieAlgebra) -> String {
    let file = AlgebraFile::from_algebra(alg);
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"dim\": {},\n", file.dim));
    out.push_str(&format!(
        "  \"labels\": {},\n",
        serde_json::to_string(&file.labels).expect("strings serialize")
    ));
    out.push_str("  \"constants\": [");
    for (n, (i, j, k, v)) in file.constants.iter().enumerate() {
        out.push_str(if n == 0 { "\n" } else { ",\n" });
        out.push_str(&format!("    [{i}, {j}, {k}, {}]", json_number(*v)));
    }
    if !file.constants.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

/// Shortest decimal that parses back to the same `f64`.
pub fn json_number(v: f64) -> String {
    serde_json::to_string(&v).expect("finite numbers serialize")
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<LieAlgebra> {
    algebra_from_json(&fs::read_to_string(path)?)
}

pub fn read_action(path: impl AsRef<Path>) -> Result<InfinitesimalAction> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Inline<T> {
    Path(PathBuf),
    Value(T),
}

impl<T> Inline<T> {
    fn resolve(self, base: &Path, load: impl Fn(&Path) -> Result<T>) -> Result<T> {
        match self {
            Inline::Value(v) => Ok(v),
            Inline::Path(p) => load(&base.join(p)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwistSpecFile {
    pub g: Inline<AlgebraFile>,
    pub h: Inline<AlgebraFile>,
    #[serde(rename = "L")]
    pub l: Inline<InfinitesimalAction>,
    #[serde(rename = "M")]
    pub m: Inline<InfinitesimalAction>,
}

impl TwistSpecFile {
    /// Resolves path entries against `base`.
    pub fn resolve(self, base: &Path) -> Result<TwistSpec> {
        let load_alg = |p: &Path| read_algebra(p);
        let g = match self.g {
            Inline::Value(f) => f.into_algebra()?,
            Inline::Path(p) => load_alg(&base.join(p))?,
        };
        let h = match self.h {
            Inline::Value(f) => f.into_algebra()?,
            Inline::Path(p) => load_alg(&base.join(p))?,
        };
        let l = self.l.resolve(base, |p| read_action(p))?;
        let m = self.m.resolve(base, |p| read_action(p))?;
        TwistSpec::new(g, h, l, m)
    }

    pub fn inline(spec: &TwistSpec) -> Self {
        Self {
            g: Inline::Value(AlgebraFile::from_algebra(&spec.g)),
            h: Inline::Value(AlgebraFile::from_algebra(&spec.h)),
            l: Inline::Value(spec.l.clone()),
            m: Inline::Value(spec.m.clone()),
        }
    }
}

pub fn twist_spec_from_json(text: &str, base: &Path) -> Result<TwistSpec> {
    serde_json::from_str::<TwistSpecFile>(text)?.resolve(base)
}

pub fn read_twist_spec(path: impl AsRef<Path>) -> Result<TwistSpec> {
    let path = path.as_ref();
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    twist_spec_from_json(&fs::read_to_string(path)?, base)
}

pub fn read_group(path: impl AsRef<Path>) -> Result<CayleyGroup> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub maps: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn into_action(self, source: &CayleyGroup, target: &CayleyGroup) -> Result<GroupAction> {
        GroupAction::new(source, target, self.maps)
    }
}

pub fn read_group_action(
    path: impl AsRef<Path>,
    source: &CayleyGroup,
    target: &CayleyGroup,
) -> Result<GroupAction> {
    serde_json::from_str::<ActionFile>(&fs::read_to_string(path)?)?.into_action(source, target)
}
