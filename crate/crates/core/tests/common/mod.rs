//! Brute-force oracles shared by the integration suites. None of these go
//! through the level-by-level lattice or the minor formulas they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use matadj::catalog::{catalog, CatalogEntry};
use matadj::{adjoint_from_representation, AdjointMap, ElementSet, Matroid, MinorSpec};

pub fn set(n: usize, e: &[usize]) -> ElementSet {
    ElementSet::from_elements(n, e.iter().copied())
}

pub fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0..1u64 << n).map(move |b| ElementSet::from_bits(n, b))
}

/// Independence as "contained in some basis".
pub fn contained_in_basis(m: &Matroid, s: &ElementSet) -> bool {
    m.bases().iter().any(|b| s.is_subset(b))
}

/// Rank by greedy growth of an independent subset.
pub fn greedy_rank(m: &Matroid, s: &ElementSet) -> usize {
    let mut acc = m.empty_set();
    for e in s.iter() {
        if contained_in_basis(m, &acc.with(e)) {
            acc = acc.with(e);
        }
    }
    acc.len()
}

/// Closure from the greedy rank oracle.
pub fn brute_closure(m: &Matroid, s: &ElementSet) -> ElementSet {
    let r = greedy_rank(m, s);
    ElementSet::from_elements(m.n(), (0..m.n()).filter(|&e| greedy_rank(m, &s.with(e)) == r))
}

/// Every flat, found by closing all `2^n` subsets.
pub fn brute_flats(m: &Matroid) -> BTreeSet<ElementSet> {
    subsets(m.n()).map(|s| brute_closure(m, &s)).collect()
}

/// All disjoint `(C, D)` with `|C| + |D| <= max_total`.
pub fn minor_specs(n: usize, max_total: usize) -> Vec<MinorSpec> {
    let mut specs = Vec::new();
    for removed in subsets(n).filter(|s| s.len() <= max_total) {
        for c in subsets(n).filter(|c| c.is_subset(&removed)) {
            specs.push(MinorSpec::new(c, removed.difference(&c)).unwrap());
        }
    }
    specs
}

/// Catalog entries paired with their representation-built adjoints.
pub fn fixture_maps() -> Vec<(CatalogEntry, AdjointMap)> {
    catalog()
        .into_iter()
        .map(|e| {
            let rep = e.representation.clone().expect("catalog entries carry representations");
            let phi = adjoint_from_representation(&e.matroid, &rep).expect("representation adjoint");
            (e, phi)
        })
        .collect()
}

pub fn entry(name: &str) -> CatalogEntry {
    matadj::catalog::lookup(name).unwrap_or_else(|| panic!("no catalog entry {name}"))
}

/// Un-relabels a set on a minor back to parent labels.
pub fn lift(s: &ElementSet, kept: &[usize], n: usize) -> ElementSet {
    ElementSet::from_elements(n, s.iter().map(|e| kept[e]))
}
