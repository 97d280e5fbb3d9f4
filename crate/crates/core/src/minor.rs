//! Contraction, deletion, simplification, and the independent/coindependent
//! normal form of a minor.
//!
//! Minors live on a dense ground set: the surviving elements are renumbered
//! `0..n'` in increasing order of their parent labels, and the parent labels
//! are recorded in [`Provenance::Minor`].

use crate::error::MatroidError;
use crate::matroid::{Matroid, Provenance};
use crate::set::ElementSet;

/// The minor `M/contract\delete`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    pub contract: ElementSet,
    pub delete: ElementSet,
}

impl MinorSpec {
    pub fn new(contract: ElementSet, delete: ElementSet) -> Result<Self, MatroidError> {
        if contract.universe() != delete.universe() {
            return Err(MatroidError::UniverseMismatch { expected: contract.universe(), found: delete.universe() });
        }
        if !contract.is_disjoint(&delete) {
            return Err(MatroidError::OverlappingMinor { contract, delete });
        }
        Ok(MinorSpec { contract, delete })
    }

    pub fn identity(n: usize) -> Self {
        MinorSpec { contract: ElementSet::empty(n), delete: ElementSet::empty(n) }
    }

    /// Elements removed by the minor.
    pub fn removed(&self) -> ElementSet {
        self.contract.union(&self.delete)
    }

    /// Parent labels of the surviving elements, in order.
    pub fn kept(&self) -> Vec<usize> {
        self.removed().complement().to_vec()
    }

    pub fn check_for(&self, m: &Matroid) -> Result<(), MatroidError> {
        m.check_set(&self.contract)?;
        m.check_set(&self.delete)
    }
}

/// Order-preserving relabeling of the elements outside `removed`.
///
/// Returns `(kept, new_label)` where `kept[new] = old` and `new_label[old] = Some(new)`.
pub fn surviving_labels(removed: &ElementSet) -> (Vec<usize>, Vec<Option<usize>>) {
    let kept = removed.complement().to_vec();
    let mut new_label = vec![None; removed.universe()];
    for (i, &e) in kept.iter().enumerate() {
        new_label[e] = Some(i);
    }
    (kept, new_label)
}

impl Matroid {
    fn minor_from_bases(&self, contract: ElementSet, delete: ElementSet, bases: Vec<ElementSet>) -> Matroid {
        let removed = contract.union(&delete);
        let (kept, new_label) = surviving_labels(&removed);
        let n2 = kept.len();
        let mut relabeled: Vec<ElementSet> = bases.iter().map(|b| b.relabel(&new_label, n2)).collect();
        relabeled.sort();
        relabeled.dedup();
        Matroid::from_sorted_bases(n2, relabeled, Provenance::Minor { parent_n: self.n(), contract, delete, kept })
    }

    /// `M/C`. Contracting the empty set returns `M` unchanged.
    pub fn contract(&self, c: &ElementSet) -> Matroid {
        self.check_set(c).expect("contract set on wrong ground set");
        if c.is_empty() {
            return self.clone();
        }
        let basis_of_c = self.greedy_independent_subset(c);
        let bases =
            self.bases().iter().filter(|b| basis_of_c.is_subset(b)).map(|b| b.difference(&basis_of_c)).collect();
        self.minor_from_bases(*c, self.empty_set(), bases)
    }

    /// `M\D`. Deleting the empty set returns `M` unchanged.
    pub fn delete(&self, d: &ElementSet) -> Matroid {
        self.check_set(d).expect("delete set on wrong ground set");
        if d.is_empty() {
            return self.clone();
        }
        let target = self.rank_of(&d.complement());
        let bases = self.bases().iter().map(|b| b.difference(d)).filter(|b| b.len() == target).collect();
        self.minor_from_bases(self.empty_set(), *d, bases)
    }

    /// `M|S`, the deletion of everything outside `S`.
    pub fn restrict(&self, s: &ElementSet) -> Matroid {
        self.delete(&s.complement())
    }

    /// `M/C\D`, relabeled onto the survivors.
    pub fn minor(&self, spec: &MinorSpec) -> Matroid {
        let contracted = self.contract(&spec.contract);
        let (_, new_label) = surviving_labels(&spec.contract);
        let d = spec.delete.relabel(&new_label, contracted.n());
        let result = contracted.delete(&d);
        if spec.contract.is_empty() || spec.delete.is_empty() {
            return result;
        }
        let kept = spec.kept();
        result.with_provenance(Provenance::Minor {
            parent_n: self.n(),
            contract: spec.contract,
            delete: spec.delete,
            kept,
        })
    }

    /// Rewrites `M/C\D` as `M/C'\D'` with `C'` independent and `D'` coindependent.
    ///
    /// `C'` starts as a greedy maximal independent subset of `C`; the rest of
    /// `C` are loops of `M/C'` and move to the delete side. Of that delete side,
    /// a greedy maximal coindependent subset stays deleted; the remaining
    /// elements are coloops after that deletion and move back to `C'`.
    pub fn minor_normal_form(&self, spec: &MinorSpec) -> MinorSpec {
        spec.check_for(self).expect("minor spec on wrong ground set");
        let independent = self.greedy_independent_subset(&spec.contract);
        let deleted = spec.delete.union(&spec.contract.difference(&independent));
        // coindependence of a set disjoint from `independent` is the same in M and M/independent
        let coindependent = self.greedy_coindependent_subset(&deleted);
        let contract = independent.union(&deleted.difference(&coindependent));
        debug_assert!(self.is_independent(&contract));
        debug_assert!(self.is_coindependent(&coindependent));
        MinorSpec { contract, delete: coindependent }
    }

    /// Removes loops and keeps the least label of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let classes = self.parallel_classes();
        let mut class_of = vec![None; self.n()];
        let reps = ElementSet::from_elements(self.n(), classes.iter().map(|c| c.first().unwrap()));
        for (i, c) in classes.iter().enumerate() {
            for e in c.iter() {
                class_of[e] = Some(i);
            }
        }
        self.restrict(&reps).with_provenance(Provenance::Simplification { class_of })
    }
}
