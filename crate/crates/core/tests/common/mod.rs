#![allow(dead_code)]

use std::collections::BTreeSet;

use hc_lab_core::corpus::{element_by_label, standard_corpus, GroupSpec};
use hc_lab_core::{Caps, Group, Subgroup};

pub fn group(spec: &str) -> Group {
    GroupSpec::parse(spec)
        .unwrap()
        .realize(&Caps::default())
        .unwrap()
}

pub fn corpus() -> Vec<(String, Group)> {
    standard_corpus(&Caps::default())
        .unwrap()
        .into_iter()
        .map(|(s, g)| (s.canonical_name(), g))
        .collect()
}

pub fn el(g: &Group, label: &str) -> usize {
    element_by_label(g, label).unwrap_or_else(|| panic!("no element {label} in {}", g.name()))
}

pub fn gen(g: &Group, labels: &[&str]) -> Subgroup {
    let xs: Vec<usize> = labels.iter().map(|l| el(g, l)).collect();
    g.generated_subgroup(&xs)
}

/// Closure by repeated squaring of the member set: `S ← S ∪ SS` until stable.
pub fn naive_closure(g: &Group, seed: &[usize]) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = seed.iter().copied().collect();
    s.insert(0);
    loop {
        let next: BTreeSet<usize> = s
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .chain(s.iter().copied())
            .collect();
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Every subgroup: closures of all subsets of at most two elements, then
/// closed under pairwise joins until nothing new appears.
pub fn brute_subgroups(g: &Group) -> BTreeSet<BTreeSet<usize>> {
    let n = g.order();
    let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            all.insert(naive_closure(g, &[a, b]));
        }
    }
    loop {
        let list: Vec<_> = all.iter().cloned().collect();
        let mut grew = false;
        for (i, x) in list.iter().enumerate() {
            for y in &list[i + 1..] {
                let seed: Vec<usize> = x.union(y).copied().collect();
                if all.insert(naive_closure(g, &seed)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return all;
        }
    }
}

pub fn as_set(h: &Subgroup) -> BTreeSet<usize> {
    h.members().collect()
}

/// All `x` with `xH = Hx`, by scanning.
pub fn normalizer_scan(g: &Group, h: &Subgroup) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&x| h.members().all(|y| h.contains(g.mul(g.mul(g.inv(x), y), x))))
        .collect()
}

pub fn is_normal_scan(g: &Group, h: &Subgroup) -> bool {
    normalizer_scan(g, h).len() == g.order()
}
