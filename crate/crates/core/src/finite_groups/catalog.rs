//! Small groups used as a test corpus.

use std::collections::HashMap;

use super::{compose, direct_product, identity_permutation, CayleyGroup};

pub fn cyclic(n: usize) -> CayleyGroup {
    let labels = (0..n).map(|i| i.to_string()).collect();
    CayleyGroup::from_fn(n, Some(labels), |a, b| (a + b) % n).expect("cyclic group")
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Closure of a set of permutations of `0..degree`, elements numbered in
/// breadth-first discovery order starting from the identity.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> CayleyGroup {
    let mut elements = vec![identity_permutation(degree)];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut next = 0;
    while next < elements.len() {
        for g in gens {
            let p = compose(&elements[next], g);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        next += 1;
    }
    let labels = elements.iter().map(|p| cycle_notation(p)).collect();
    CayleyGroup::from_fn(elements.len(), Some(labels), |a, b| {
        index[&compose(&elements[a], &elements[b])]
    })
    .expect("permutation groups are groups")
}

pub fn symmetric3() -> CayleyGroup {
    from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]])
}

/// Symmetries of a square with vertices `0..4` in cyclic order.
pub fn dihedral4() -> CayleyGroup {
    from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

pub fn alternating4() -> CayleyGroup {
    from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// Quaternion group with labels `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> CayleyGroup {
    // unit u ∈ {1, i, j, k} as 0..4, element = 2*u + (sign bit)
    // products of units: (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    CayleyGroup::from_fn(8, Some(labels), |a, b| {
        let (neg, unit) = UNIT[a / 2][b / 2];
        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
        2 * unit + sign as usize
    })
    .expect("quaternion group")
}

pub fn element_order(g: &CayleyGroup, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// The embedded corpus: `Z1..Z8, Z2×Z2, Z2×Z4, S3, D4, Q8, D4×Z2, A4`.
pub fn corpus() -> Vec<(String, CayleyGroup)> {
    let mut out: Vec<(String, CayleyGroup)> =
        (1..=8).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    out.push(("Z2xZ2".into(), direct_product(&cyclic(2), &cyclic(2))));
    out.push(("Z2xZ4".into(), direct_product(&cyclic(2), &cyclic(4))));
    out.push(("S3".into(), symmetric3()));
    out.push(("D4".into(), dihedral4()));
    out.push(("Q8".into(), quaternion()));
    out.push(("D4xZ2".into(), direct_product(&dihedral4(), &cyclic(2))));
    out.push(("A4".into(), alternating4()));
    out
}

/// Looks up a corpus group by name (case-insensitive).
pub fn by_name(name: &str) -> Option<CayleyGroup> {
    corpus()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}
