//! Matroids backed by an explicit list of bases.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::MatroidError;
use crate::repr::Representation;
use crate::set::{k_subsets, ElementSet, MAX_UNIVERSE};

/// Default cap on the ground-set size accepted by constructors.
pub const DEFAULT_MAX_N: usize = 16;

/// Ground-set cap, read once from `MATADJ_MAX_N` (default [`DEFAULT_MAX_N`], at most 64).
pub fn ground_set_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MATADJ_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map_or(DEFAULT_MAX_N, |v| v.min(MAX_UNIVERSE))
    })
}

/// How a matroid was obtained.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    /// Given directly by its bases.
    Bases,
    /// Column matroid of a matrix.
    Matrix(Representation),
    /// `parent/contract\delete`; `kept[i]` is the parent label of element `i`.
    Minor { parent_n: usize, contract: ElementSet, delete: ElementSet, kept: Vec<usize> },
    /// Loops removed and parallel classes collapsed; `class_of[e]` is the new label of
    /// the class of parent element `e`, or `None` for loops.
    Simplification { class_of: Vec<Option<usize>> },
    /// Dual of a matroid on the same ground set.
    Dual,
}

/// A matroid on `{0, ..., n-1}`.
///
/// Equality is labeled equality: same ground set and same bases. Name and
/// provenance are not compared.
#[derive(Clone, Debug)]
pub struct Matroid {
    name: Option<String>,
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    provenance: Provenance,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

/// Checks the basis-exchange axiom, naming the first violating pair.
pub fn check_basis_exchange(bases: &[ElementSet]) -> Result<(), MatroidError> {
    let lookup: HashSet<u64> = bases.iter().map(|b| b.bits()).collect();
    for b1 in bases {
        for b2 in bases {
            if b1 == b2 {
                continue;
            }
            for e in b1.difference(b2).iter() {
                let without = b1.without(e);
                let ok = b2.difference(b1).iter().any(|f| lookup.contains(&without.with(f).bits()));
                if !ok {
                    return Err(MatroidError::ExchangeViolation { b1: *b1, b2: *b2, e });
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Validated construction from a bases list (any order, no duplicates).
    pub fn from_bases(n: usize, bases: Vec<ElementSet>) -> Result<Self, MatroidError> {
        let cap = ground_set_cap();
        if n > cap {
            return Err(MatroidError::TooLarge { n, cap });
        }
        let first = *bases.first().ok_or(MatroidError::NoBases)?;
        for b in &bases {
            if b.universe() != n {
                return Err(MatroidError::UniverseMismatch { expected: n, found: b.universe() });
            }
            if b.len() != first.len() {
                return Err(MatroidError::UnequalBases {
                    first,
                    first_len: first.len(),
                    other: *b,
                    other_len: b.len(),
                });
            }
        }
        let mut sorted = bases;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(MatroidError::DuplicateBasis(w[0]));
        }
        check_basis_exchange(&sorted)?;
        Ok(Self::from_sorted_bases(n, sorted, Provenance::Bases))
    }

    /// Construction from basis element lists.
    pub fn from_basis_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self, MatroidError> {
        if n > MAX_UNIVERSE {
            return Err(MatroidError::TooLarge { n, cap: ground_set_cap() });
        }
        let bases =
            lists.iter().map(|l| ElementSet::try_from_elements(n, l.iter().copied())).collect::<Result<Vec<_>, _>>()?;
        Self::from_bases(n, bases)
    }

    /// Column matroid of a matrix.
    pub fn from_representation(rep: Representation) -> Result<Self, MatroidError> {
        let n = rep.n();
        let cap = ground_set_cap();
        if n > cap {
            return Err(MatroidError::TooLarge { n, cap });
        }
        let r = rep.rank();
        let bases: Vec<ElementSet> = k_subsets(n, r).filter(|s| rep.rank_of(s) == r).collect();
        check_basis_exchange(&bases)?;
        Ok(Self::from_sorted_bases(n, bases, Provenance::Matrix(rep)))
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        if r > n {
            return Err(MatroidError::NoBases);
        }
        let cap = ground_set_cap();
        if n > cap {
            return Err(MatroidError::TooLarge { n, cap });
        }
        let bases: Vec<ElementSet> = k_subsets(n, r).collect();
        Ok(Self::from_sorted_bases(n, bases, Provenance::Bases).with_name(format!("U_{{{r},{n}}}")))
    }

    /// Trusted construction: `bases` must be sorted, distinct, and satisfy exchange.
    pub(crate) fn from_sorted_bases(n: usize, bases: Vec<ElementSet>, provenance: Provenance) -> Self {
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        let rank = bases[0].len();
        Matroid { name: None, n, rank, bases, provenance }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The matrix this matroid was read from, if any.
    pub fn representation(&self) -> Option<&Representation> {
        match &self.provenance {
            Provenance::Matrix(rep) => Some(rep),
            _ => None,
        }
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.n)
    }

    /// Builds an element set on this ground set, rejecting out-of-range labels.
    pub fn set<I: IntoIterator<Item = usize>>(&self, elements: I) -> Result<ElementSet, MatroidError> {
        ElementSet::try_from_elements(self.n, elements)
    }

    /// Checks that `s` lives on this ground set.
    pub fn check_set(&self, s: &ElementSet) -> Result<(), MatroidError> {
        if s.universe() != self.n {
            return Err(MatroidError::UniverseMismatch { expected: self.n, found: s.universe() });
        }
        Ok(())
    }

    fn assert_set(&self, s: &ElementSet) {
        assert_eq!(s.universe(), self.n, "set {s} does not live on a ground set of size {}", self.n);
    }

    /// `max |S ∩ B|` over the bases.
    pub fn rank_of(&self, s: &ElementSet) -> usize {
        self.assert_set(s);
        let mut best = 0;
        for b in &self.bases {
            best = best.max((s.bits() & b.bits()).count_ones() as usize);
            if best == self.rank || best == s.len() {
                break;
            }
        }
        best
    }

    pub fn closure(&self, s: &ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        let mut cl = *s;
        for e in s.complement().iter() {
            if self.rank_of(&s.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    pub fn is_flat(&self, s: &ElementSet) -> bool {
        self.closure(s) == *s
    }

    pub fn is_independent(&self, s: &ElementSet) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn is_coindependent(&self, s: &ElementSet) -> bool {
        self.rank_of(&s.complement()) == self.rank
    }

    pub fn is_basis(&self, s: &ElementSet) -> bool {
        self.bases.binary_search(s).is_ok()
    }

    pub fn is_spanning(&self, s: &ElementSet) -> bool {
        self.rank_of(s) == self.rank
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(&self.empty_set())
    }

    /// A maximal independent subset of `s`, grown greedily in label order.
    pub fn greedy_independent_subset(&self, s: &ElementSet) -> ElementSet {
        let mut acc = self.empty_set();
        for e in s.iter() {
            let next = acc.with(e);
            if self.is_independent(&next) {
                acc = next;
            }
        }
        acc
    }

    /// A maximal coindependent subset of `s`, grown greedily in label order.
    pub fn greedy_coindependent_subset(&self, s: &ElementSet) -> ElementSet {
        let mut acc = self.empty_set();
        for e in s.iter() {
            let next = acc.with(e);
            if self.is_coindependent(&next) {
                acc = next;
            }
        }
        acc
    }

    /// Parallel classes of the non-loop elements, each sorted, ordered by least member.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let loops = self.loops();
        let mut seen = loops;
        let mut classes = Vec::new();
        for e in loops.complement().iter() {
            if seen.contains(e) {
                continue;
            }
            let class = self.closure(&ElementSet::singleton(self.n, e)).difference(&loops);
            seen = seen.union(&class);
            classes.push(class);
        }
        classes
    }

    /// A loop or parallel pair witnessing non-simplicity, if any.
    pub fn simplicity_witness(&self) -> Option<ElementSet> {
        if let Some(l) = self.loops().first() {
            return Some(ElementSet::singleton(self.n, l));
        }
        self.parallel_classes()
            .into_iter()
            .find(|c| c.len() > 1)
            .map(|c| ElementSet::from_elements(self.n, c.iter().take(2)))
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity_witness().is_none()
    }

    /// Dual matroid: bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        let mut bases: Vec<ElementSet> = self.bases.iter().map(|b| b.complement()).collect();
        bases.sort();
        Self::from_sorted_bases(self.n, bases, Provenance::Dual)
    }
}
