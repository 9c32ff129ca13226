//! Brute-force automorphisms and actions between small groups.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::catalog::element_order;
use super::{check_twist_condition, compose, identity_permutation, inner_action, CayleyGroup, GroupAction};

/// Extends an assignment of generator images to a map on the whole group by
/// breadth-first search over words `x·s`. `combine(image_of_x, image_of_s)`
/// gives the image of `x·s`; `None` if two words for one element disagree.
fn extend_from_generators<T: Clone + PartialEq>(
    g: &CayleyGroup,
    gens: &[usize],
    images: &[T],
    identity: T,
    combine: impl Fn(&T, &T) -> T,
) -> Option<Vec<T>> {
    let n = g.order();
    let mut map: Vec<Option<T>> = vec![None; n];
    map[0] = Some(identity);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let mx = map[x].clone().expect("visited");
        for (s, img) in gens.iter().zip(images) {
            let y = g.mul(x, *s);
            let my = combine(&mx, img);
            match &map[y] {
                Some(existing) if *existing != my => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(my);
                    queue.push_back(y);
                }
            }
        }
    }
    map.into_iter().collect()
}

/// Visits every tuple in `choices[0] × choices[1] × ...`.
fn for_each_tuple<T: Clone>(choices: &[Vec<T>], mut f: impl FnMut(&[T])) {
    let mut idx = vec![0usize; choices.len()];
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        let tuple: Vec<T> = idx.iter().zip(choices).map(|(&i, c)| c[i].clone()).collect();
        f(&tuple);
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// All automorphisms of `g` as permutations, in lexicographic order (the
/// identity first).
pub fn automorphisms(g: &CayleyGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = element_order(g, s);
            (0..g.order()).filter(|&x| element_order(g, x) == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    for_each_tuple(&choices, |images| {
        if let Some(map) = extend_from_generators(g, &gens, images, 0, |a, b| g.mul(*a, *b)) {
            if g.is_automorphism(&map) {
                out.push(map);
            }
        }
    });
    out.sort();
    out
}

/// Every action of `source` on `target` (homomorphism into `Aut(target)`).
/// The trivial action comes first.
pub fn homomorphisms_to_aut(source: &CayleyGroup, target: &CayleyGroup) -> Vec<GroupAction> {
    let auts = automorphisms(target);
    let gens = source.generators();
    let choices = vec![auts; gens.len()];
    let id = identity_permutation(target.order());
    let mut out = Vec::new();
    for_each_tuple(&choices, |images| {
        let Some(maps) = extend_from_generators(source, &gens, images, id.clone(), |a, b| compose(a, b)) else {
            return;
        };
        let n = source.order();
        let hom = (0..n).all(|a| (0..n).all(|b| maps[source.mul(a, b)] == compose(&maps[a], &maps[b])));
        if hom {
            out.push(GroupAction::from_maps_unchecked(maps));
        }
    });
    out.sort_by(|a, b| a.maps().cmp(b.maps()));
    out
}

/// Uniformly random `λ: H → Aut(G)` and `μ: G → Aut(H)`.
pub fn random_action_pair<R: Rng + ?Sized>(
    rng: &mut R,
    g: &CayleyGroup,
    h: &CayleyGroup,
) -> (GroupAction, GroupAction) {
    let lambdas = homomorphisms_to_aut(h, g);
    let mus = homomorphisms_to_aut(g, h);
    (
        lambdas.choose(rng).expect("trivial action exists").clone(),
        mus.choose(rng).expect("trivial action exists").clone(),
    )
}

/// An action pair satisfying the group condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSearchHit {
    pub lambda: GroupAction,
    pub mu: GroupAction,
    /// `λ` is conjugation (only meaningful when `G = H`).
    pub lambda_inner: bool,
    pub mu_inner: bool,
    pub lambda_trivial: bool,
    pub mu_trivial: bool,
}

/// Enumerates all pairs `(λ, μ)` of actions between `g` and `h` that satisfy
/// the group condition, up to `limit` hits. When `g == h` the hits are tagged
/// with whether each action is conjugation, which exhibits twists by
/// non-inner actions.
pub fn search_twist_pairs(g: &CayleyGroup, h: &CayleyGroup, limit: usize) -> Vec<ActionSearchHit> {
    let lambdas = homomorphisms_to_aut(h, g);
    let mus = homomorphisms_to_aut(g, h);
    let same = g == h;
    let inner = same.then(|| inner_action(g));
    let trivial_g = identity_permutation(g.order());
    let trivial_h = identity_permutation(h.order());
    let mut hits = Vec::new();
    for lambda in &lambdas {
        for mu in &mus {
            if hits.len() >= limit {
                return hits;
            }
            if check_twist_condition(g, h, lambda, mu).map(|c| c.holds).unwrap_or(false) {
                hits.push(ActionSearchHit {
                    lambda_inner: inner.as_ref() == Some(lambda),
                    mu_inner: inner.as_ref() == Some(mu),
                    lambda_trivial: lambda.maps().iter().all(|p| *p == trivial_g),
                    mu_trivial: mu.maps().iter().all(|p| *p == trivial_h),
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                });
            }
        }
    }
    hits
}
