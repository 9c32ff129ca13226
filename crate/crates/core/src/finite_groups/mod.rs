//! Finite groups as Cayley tables and twisted products of them.
//!
//! Elements are indices `0..order` with `0` the identity. A pair `(g, h)` of
//! a product `G × H` is flattened to `g * |H| + h`.

mod actions;
pub mod catalog;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use actions::{
    automorphisms, homomorphisms_to_aut, random_action_pair, search_twist_pairs, ActionSearchHit,
};

/// Largest product order accepted by the brute-force associativity scan.
pub const MAX_BRUTE_FORCE_ORDER: usize = 4096;

/// A group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct CayleyGroup {
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    inverses: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    #[serde(default)]
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl TryFrom<GroupRepr> for CayleyGroup {
    type Error = Error;

    fn try_from(r: GroupRepr) -> Result<Self> {
        if r.table.len() != r.order {
            return Err(Error::InvalidGroup(format!(
                "declared order {} but table has {} rows",
                r.order,
                r.table.len()
            )));
        }
        let labels = if r.labels.is_empty() { None } else { Some(r.labels) };
        CayleyGroup::new(r.table, labels)
    }
}

impl From<CayleyGroup> for GroupRepr {
    fn from(g: CayleyGroup) -> Self {
        Self {
            order: g.order(),
            labels: g.labels,
            table: g.table,
        }
    }
}

impl CayleyGroup {
    /// Validates the table and builds the group.
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let report = validate_group(&table)?;
        if let Some(v) = report {
            return Err(Error::InvalidGroup(v.to_string()));
        }
        let n = table.len();
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::InvalidGroup(format!(
                    "{} labels for a group of order {n}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let inverses = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == 0).expect("validated"))
            .collect();
        Ok(Self {
            table,
            labels,
            inverses,
        })
    }

    pub fn from_fn(order: usize, labels: Option<Vec<String>>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = (0..order)
            .map(|a| (0..order).map(|b| f(a, b)).collect())
            .collect();
        Self::new(table, labels)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Smallest subgroup containing `gens`, in ascending index order.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order()).filter(|&x| member[x]).collect()
    }

    /// Greedy generating set: repeatedly adds the smallest element outside
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = self.generated_subgroup(&gens);
        while sub.len() < self.order() {
            let next = (0..self.order()).find(|x| sub.binary_search(x).is_err()).expect("proper subgroup");
            gens.push(next);
            sub = self.generated_subgroup(&gens);
        }
        gens
    }

    /// Whether `perm` is an automorphism of this group.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        if perm.len() != n || !is_permutation(perm) {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])))
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn identity_permutation(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `(p ∘ q)(x) = p(q(x))`.
pub(crate) fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// First failed group axiom. Indices refer to table elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupViolation {
    EntryOutOfRange { row: usize, col: usize, value: usize },
    Identity { element: usize },
    Associativity { a: usize, b: usize, c: usize },
    Inverse { element: usize },
    NotLatinRow { row: usize },
    NotLatinColumn { col: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupViolation::EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is out of range")
            }
            GroupViolation::Identity { element } => {
                write!(f, "element 0 is not an identity for element {element}")
            }
            GroupViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails for ({a}, {b}, {c})")
            }
            GroupViolation::Inverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            GroupViolation::NotLatinRow { row } => write!(f, "row {row} is not a permutation"),
            GroupViolation::NotLatinColumn { col } => {
                write!(f, "column {col} is not a permutation")
            }
        }
    }
}

/// First associativity failure `(a, b, c)` in row-major order. The scan is
/// split across threads by `a`; `find_map_first` keeps the reported witness
/// the globally first one.
fn first_associativity_failure(table: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    let n = table.len();
    (0..n).into_par_iter().find_map_first(|a| {
        let row_a = &table[a];
        for b in 0..n {
            let ab = row_a[b];
            let row_ab = &table[ab];
            let row_b = &table[b];
            for c in 0..n {
                if row_ab[c] != row_a[row_b[c]] {
                    return Some((a, b, c));
                }
            }
        }
        None
    })
}

/// Brute-force check of the group axioms for a table with identity `0`.
/// Checks run in the order: range, identity, associativity, inverses,
/// Latin square; `Ok(None)` means the table is a group.
pub fn validate_group(table: &[Vec<usize>]) -> Result<Option<GroupViolation>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::InvalidGroup("empty table".into()));
    }
    if let Some((r, row)) = table.iter().enumerate().find(|(_, row)| row.len() != n) {
        return Err(Error::InvalidGroup(format!(
            "table is not square: row {r} has {} entries, expected {n}",
            row.len()
        )));
    }
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::OrderCap {
            order: n,
            cap: MAX_BRUTE_FORCE_ORDER,
        });
    }
    for (row, r) in table.iter().enumerate() {
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Ok(Some(GroupViolation::EntryOutOfRange { row, col, value }));
        }
    }
    if let Some(element) = (0..n).find(|&x| table[0][x] != x || table[x][0] != x) {
        return Ok(Some(GroupViolation::Identity { element }));
    }
    if let Some((a, b, c)) = first_associativity_failure(table) {
        return Ok(Some(GroupViolation::Associativity { a, b, c }));
    }
    for x in 0..n {
        if !(0..n).any(|y| table[x][y] == 0 && table[y][x] == 0) {
            return Ok(Some(GroupViolation::Inverse { element: x }));
        }
    }
    for i in 0..n {
        if !is_permutation(&table[i]) {
            return Ok(Some(GroupViolation::NotLatinRow { row: i }));
        }
        let col: Vec<usize> = table.iter().map(|r| r[i]).collect();
        if !is_permutation(&col) {
            return Ok(Some(GroupViolation::NotLatinColumn { col: i }));
        }
    }
    Ok(None)
}

/// A homomorphism from a source group into the automorphisms of a target
/// group, stored as one permutation of target elements per source element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Validates that every map is an automorphism of `target`, that the
    /// identity acts trivially and that `maps[h1 h2] = maps[h1] ∘ maps[h2]`.
    pub fn new(source: &CayleyGroup, target: &CayleyGroup, maps: Vec<Vec<usize>>) -> Result<Self> {
        if maps.len() != source.order() {
            return Err(Error::InvalidAction(format!(
                "{} maps for a source group of order {}",
                maps.len(),
                source.order()
            )));
        }
        for (h, p) in maps.iter().enumerate() {
            if !target.is_automorphism(p) {
                return Err(Error::InvalidAction(format!(
                    "map of source element {h} is not an automorphism of the target"
                )));
            }
        }
        if maps[0] != identity_permutation(target.order()) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        let n = source.order();
        for a in 0..n {
            for b in 0..n {
                if maps[source.mul(a, b)] != compose(&maps[a], &maps[b]) {
                    return Err(Error::InvalidAction(format!(
                        "not a homomorphism: maps[{a}·{b}] != maps[{a}] ∘ maps[{b}]"
                    )));
                }
            }
        }
        Ok(Self { maps })
    }

    /// Every source element acts as the identity.
    pub fn trivial(source: &CayleyGroup, target: &CayleyGroup) -> Self {
        Self {
            maps: vec![identity_permutation(target.order()); source.order()],
        }
    }

    pub(crate) fn from_maps_unchecked(maps: Vec<Vec<usize>>) -> Self {
        Self { maps }
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn source_order(&self) -> usize {
        self.maps.len()
    }

    pub fn target_order(&self) -> usize {
        self.maps.first().map_or(0, Vec::len)
    }

    /// `λ(h)(g)`.
    #[inline]
    pub fn apply(&self, h: usize, g: usize) -> usize {
        self.maps[h][g]
    }
}

/// Conjugation `maps[h] = (g ↦ h g h⁻¹)`.
pub fn inner_action(m: &CayleyGroup) -> GroupAction {
    let n = m.order();
    let maps = (0..n)
        .map(|h| (0..n).map(|g| m.mul(m.mul(h, g), m.inv(h))).collect())
        .collect();
    GroupAction::from_maps_unchecked(maps)
}

/// `{ h : maps[h] = id }`, ascending. This is a normal subgroup of the
/// source; that is asserted in debug builds.
pub fn action_kernel(action: &GroupAction, source: &CayleyGroup) -> Vec<usize> {
    let id = identity_permutation(action.target_order());
    let kernel: Vec<usize> = (0..action.source_order())
        .filter(|&h| action.maps[h] == id)
        .collect();
    debug_assert!(kernel.contains(&0));
    debug_assert!(is_normal_subgroup(source, &kernel));
    kernel
}

pub fn is_normal_subgroup(g: &CayleyGroup, subset: &[usize]) -> bool {
    let mut member = vec![false; g.order()];
    for &x in subset {
        member[x] = true;
    }
    if !member[0] {
        return false;
    }
    subset.iter().all(|&a| {
        subset.iter().all(|&b| member[g.mul(a, b)])
            && member[g.inv(a)]
            && (0..g.order()).all(|x| member[g.mul(g.mul(x, a), g.inv(x))])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionClause {
    /// `μ(g)(h) h⁻¹ ∉ ker λ`
    MuDefectOutsideKerLambda,
    /// `λ(h)(g) g⁻¹ ∉ ker μ`
    LambdaDefectOutsideKerMu,
}

/// Outcome of the necessary-and-sufficient group condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub holds: bool,
    /// First failing `(g, h)` in `g`-major order, with the clause that failed.
    pub witness: Option<(usize, usize, ConditionClause)>,
}

fn check_action_shapes(g: &CayleyGroup, h: &CayleyGroup, lambda: &GroupAction, mu: &GroupAction) -> Result<()> {
    let shapes = [
        ("lambda source (H)", h.order(), lambda.source_order()),
        ("lambda target (G)", g.order(), lambda.target_order()),
        ("mu source (G)", g.order(), mu.source_order()),
        ("mu target (H)", h.order(), mu.target_order()),
    ];
    for (context, expected, actual) in shapes {
        if expected != actual {
            return Err(Error::DimensionMismatch {
                context,
                expected,
                actual,
            });
        }
    }
    Ok(())
}

/// For all `g, h`: `μ(g)(h) h⁻¹ ∈ ker λ` and `λ(h)(g) g⁻¹ ∈ ker μ`.
pub fn check_twist_condition(
    g: &CayleyGroup,
    h: &CayleyGroup,
    lambda: &GroupAction,
    mu: &GroupAction,
) -> Result<ConditionCheck> {
    check_action_shapes(g, h, lambda, mu)?;
    let mut in_ker_lambda = vec![false; h.order()];
    for x in action_kernel(lambda, h) {
        in_ker_lambda[x] = true;
    }
    let mut in_ker_mu = vec![false; g.order()];
    for x in action_kernel(mu, g) {
        in_ker_mu[x] = true;
    }
    for gi in 0..g.order() {
        for hi in 0..h.order() {
            let mu_defect = h.mul(mu.apply(gi, hi), h.inv(hi));
            if !in_ker_lambda[mu_defect] {
                return Ok(ConditionCheck {
                    holds: false,
                    witness: Some((gi, hi, ConditionClause::MuDefectOutsideKerLambda)),
                });
            }
            let lambda_defect = g.mul(lambda.apply(hi, gi), g.inv(gi));
            if !in_ker_mu[lambda_defect] {
                return Ok(ConditionCheck {
                    holds: false,
                    witness: Some((gi, hi, ConditionClause::LambdaDefectOutsideKerMu)),
                });
            }
        }
    }
    Ok(ConditionCheck {
        holds: true,
        witness: None,
    })
}

/// Result of forming a twisted product table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistOutcome {
    /// Always `|G|·|H|` rows, whether or not the result is a group.
    pub table: Vec<Vec<usize>>,
    /// `Some` exactly when the table is a group.
    pub group: Option<CayleyGroup>,
    /// First failed axiom when the table is not a group.
    pub failure_witness: Option<GroupViolation>,
    /// The group condition evaluated independently of the table.
    pub condition: ConditionCheck,
}

impl TwistOutcome {
    pub fn is_group(&self) -> bool {
        self.group.is_some()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// Whether the axiom check on the table and the group condition agree.
    pub fn agrees_with_condition(&self) -> bool {
        self.is_group() == self.condition.holds
    }
}

/// Index of the pair `(g, h)` in a product with `|H| = h_order`.
#[inline]
pub fn pair_index(g: usize, h: usize, h_order: usize) -> usize {
    g * h_order + h
}

#[inline]
pub fn split_pair(index: usize, h_order: usize) -> (usize, usize) {
    (index / h_order, index % h_order)
}

/// `(g1, h1)(g2, h2) = (g1 λ(h1)(g2), h1 μ(g1)(h2))` on all pairs, followed
/// by the brute-force axiom check.
pub fn twisted_product(
    g: &CayleyGroup,
    h: &CayleyGroup,
    lambda: &GroupAction,
    mu: &GroupAction,
) -> Result<TwistOutcome> {
    check_action_shapes(g, h, lambda, mu)?;
    let (ng, nh) = (g.order(), h.order());
    let order = ng * nh;
    if order > MAX_BRUTE_FORCE_ORDER {
        return Err(Error::OrderCap {
            order,
            cap: MAX_BRUTE_FORCE_ORDER,
        });
    }
    let table: Vec<Vec<usize>> = (0..order)
        .map(|p| {
            let (g1, h1) = split_pair(p, nh);
            (0..order)
                .map(|q| {
                    let (g2, h2) = split_pair(q, nh);
                    let gp = g.mul(g1, lambda.apply(h1, g2));
                    let hp = h.mul(h1, mu.apply(g1, h2));
                    pair_index(gp, hp, nh)
                })
                .collect()
        })
        .collect();
    let condition = check_twist_condition(g, h, lambda, mu)?;
    let failure_witness = validate_group(&table)?;
    let group = match failure_witness {
        None => {
            let labels = (0..order)
                .map(|p| {
                    let (a, b) = split_pair(p, nh);
                    format!("({},{})", g.label(a), h.label(b))
                })
                .collect();
            Some(CayleyGroup::new(table.clone(), Some(labels))?)
        }
        Some(_) => None,
    };
    Ok(TwistOutcome {
        table,
        group,
        failure_witness,
        condition,
    })
}

/// `(g, h)⁻¹ = (λ(h⁻¹)(g⁻¹), μ(g⁻¹)(h⁻¹))`. Refuses when the group condition
/// fails, since the formula is then only a right inverse.
pub fn twisted_inverse(
    g: &CayleyGroup,
    h: &CayleyGroup,
    lambda: &GroupAction,
    mu: &GroupAction,
    pair: (usize, usize),
) -> Result<(usize, usize)> {
    let condition = check_twist_condition(g, h, lambda, mu)?;
    if let Some((gw, hw, _)) = condition.witness {
        return Err(Error::ConditionViolated { g: gw, h: hw });
    }
    Ok(twisted_right_inverse(g, h, lambda, mu, pair))
}

/// The inverse formula without checking the group condition.
pub fn twisted_right_inverse(
    g: &CayleyGroup,
    h: &CayleyGroup,
    lambda: &GroupAction,
    mu: &GroupAction,
    (g1, h1): (usize, usize),
) -> (usize, usize) {
    let (gi, hi) = (g.inv(g1), h.inv(h1));
    (lambda.apply(hi, gi), mu.apply(gi, hi))
}

/// Result of the commutator test `[[g, h], x] = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupNilpotency {
    pub two_step_nilpotent: bool,
    pub witness: Option<(usize, usize, usize)>,
}

/// Whether every commutator is central; the witness is the first `(g, h, x)`
/// with `[[g, h], x] != e` in row-major order.
pub fn is_two_step_nilpotent_group(m: &CayleyGroup) -> GroupNilpotency {
    let n = m.order();
    for g in 0..n {
        for h in 0..n {
            let c = m.commutator(g, h);
            if let Some(x) = (0..n).find(|&x| m.commutator(c, x) != 0) {
                return GroupNilpotency {
                    two_step_nilpotent: false,
                    witness: Some((g, h, x)),
                };
            }
        }
    }
    GroupNilpotency {
        two_step_nilpotent: true,
        witness: None,
    }
}

/// Direct product with pairs flattened as in [`pair_index`].
pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> CayleyGroup {
    let nh = h.order();
    let labels = (0..g.order() * nh)
        .map(|p| {
            let (a, b) = split_pair(p, nh);
            format!("({},{})", g.label(a), h.label(b))
        })
        .collect();
    CayleyGroup::from_fn(g.order() * nh, Some(labels), |p, q| {
        let (g1, h1) = split_pair(p, nh);
        let (g2, h2) = split_pair(q, nh);
        pair_index(g.mul(g1, g2), h.mul(h1, h2), nh)
    })
    .expect("direct product of groups is a group")
}

/// Semidirect product `G ⋊ H` built by composing the affine permutations
/// `x ↦ g λ(h)(x)` of `G`; the `G`-part of a product is read back as the
/// image of the identity. This is deliberately a different computation from
/// [`twisted_product`] with trivial `μ`, and is used to cross-check it.
pub fn semidirect_product(g: &CayleyGroup, h: &CayleyGroup, lambda: &GroupAction) -> Result<CayleyGroup> {
    let (ng, nh) = (g.order(), h.order());
    let affine = |gi: usize, hi: usize| -> Vec<usize> {
        (0..ng).map(|x| g.mul(gi, lambda.apply(hi, x))).collect()
    };
    CayleyGroup::from_fn(ng * nh, None, |p, q| {
        let (g1, h1) = split_pair(p, nh);
        let (g2, h2) = split_pair(q, nh);
        let composed = compose(&affine(g1, h1), &affine(g2, h2));
        pair_index(composed[0], h.mul(h1, h2), nh)
    })
}
