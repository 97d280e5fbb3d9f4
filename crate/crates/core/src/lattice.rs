//! The lattice of flats, built rank by rank.

use std::collections::{BTreeSet, HashMap};

use crate::error::MatroidError;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// All flats of a matroid, grouped by rank, with the cover relation.
///
/// Flats are indexed globally in rank order and lexicographically within a rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLattice {
    n: usize,
    layers: Vec<Vec<ElementSet>>,
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
    index: HashMap<ElementSet, usize>,
    covers: Vec<Vec<usize>>,
}

impl FlatLattice {
    /// Level-by-level enumeration: the rank-(k+1) flats are the closures
    /// `cl(F + e)` over rank-k flats `F` and `e` outside `F`.
    pub fn new(m: &Matroid) -> Self {
        let mut layers: Vec<Vec<ElementSet>> = vec![vec![m.loops()]];
        let mut up_edges: Vec<Vec<(ElementSet, ElementSet)>> = Vec::new();
        for k in 0..m.rank() {
            let mut next = BTreeSet::new();
            let mut edges = Vec::new();
            for f in &layers[k] {
                let mut seen = *f;
                for e in f.complement().iter() {
                    if seen.contains(e) {
                        continue;
                    }
                    let g = m.closure(&f.with(e));
                    seen = seen.union(&g);
                    next.insert(g);
                    edges.push((*f, g));
                }
            }
            layers.push(next.into_iter().collect());
            up_edges.push(edges);
        }

        let flats: Vec<ElementSet> = layers.iter().flatten().copied().collect();
        let ranks: Vec<usize> = layers.iter().enumerate().flat_map(|(k, l)| std::iter::repeat_n(k, l.len())).collect();
        let index: HashMap<ElementSet, usize> = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut covers = vec![Vec::new(); flats.len()];
        for (lo, hi) in up_edges.into_iter().flatten() {
            covers[index[&lo]].push(index[&hi]);
        }
        for c in &mut covers {
            c.sort_unstable();
            c.dedup();
        }
        FlatLattice { n: m.n(), layers, flats, ranks, index, covers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the underlying matroid.
    pub fn rank(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Every flat, in global index order.
    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn layers(&self) -> &[Vec<ElementSet>] {
        &self.layers
    }

    /// The rank-`k` flats, sorted lexicographically.
    pub fn layer(&self, k: usize) -> &[ElementSet] {
        self.layers.get(k).map_or(&[], |l| l.as_slice())
    }

    pub fn counts_by_rank(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    pub fn index_of(&self, flat: &ElementSet) -> Option<usize> {
        self.index.get(flat).copied()
    }

    pub fn contains(&self, flat: &ElementSet) -> bool {
        self.index.contains_key(flat)
    }

    pub fn rank_of_index(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Indices of the flats covering flat `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn cover_count(&self) -> usize {
        self.covers.iter().map(Vec::len).sum()
    }

    pub fn bottom(&self) -> ElementSet {
        self.layers[0][0]
    }

    pub fn top(&self) -> ElementSet {
        self.layers[self.rank()][0]
    }

    /// Flats of rank `r - 1`. Errors on a rank-0 matroid.
    pub fn hyperplanes(&self) -> Result<&[ElementSet], MatroidError> {
        match self.rank() {
            0 => Err(MatroidError::NoHyperplanes),
            r => Ok(self.layer(r - 1)),
        }
    }

    /// Rank-1 flats.
    pub fn points(&self) -> &[ElementSet] {
        self.layer(1)
    }
}

impl Matroid {
    pub fn flats(&self) -> FlatLattice {
        FlatLattice::new(self)
    }

    /// Hyperplanes in lexicographic order. This order fixes the point labels of
    /// adjoints built from this matroid.
    pub fn hyperplanes(&self) -> Result<Vec<ElementSet>, MatroidError> {
        self.flats().hyperplanes().map(<[ElementSet]>::to_vec)
    }

    /// Hyperplanes whose intersection is the flat `x`, each strictly shrinking the
    /// running intersection. Greedy: each step takes the lexicographically least
    /// hyperplane containing `x` that shrinks the running intersection.
    /// Returns the empty list when `x` is the whole ground set.
    pub fn hyperplane_chain(&self, x: &ElementSet) -> Result<Vec<ElementSet>, MatroidError> {
        self.check_set(x)?;
        if !self.is_flat(x) {
            return Err(MatroidError::NotAFlat(*x));
        }
        let k = self.rank_of(x);
        if k == self.rank() {
            return Ok(Vec::new());
        }
        let containing: Vec<ElementSet> = self.hyperplanes()?.into_iter().filter(|h| x.is_subset(h)).collect();
        let mut running = self.ground_set();
        let mut chain = Vec::with_capacity(self.rank() - k);
        while running != *x {
            let h = containing
                .iter()
                .find(|h| !running.is_subset(h))
                .expect("a flat is the intersection of the hyperplanes containing it");
            running = running.intersection(h);
            chain.push(*h);
        }
        debug_assert_eq!(chain.len(), self.rank() - k);
        Ok(chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, e.iter().copied())
    }

    #[test]
    fn u23_lattice() {
        let l = Matroid::uniform(2, 3).unwrap().flats();
        assert_eq!(l.counts_by_rank(), vec![1, 3, 1]);
        assert_eq!(l.layer(1), &[set(3, &[0]), set(3, &[1]), set(3, &[2])]);
        assert_eq!(l.bottom(), set(3, &[]));
        assert_eq!(l.top(), set(3, &[0, 1, 2]));
        assert_eq!(l.cover_count(), 6);
    }

    #[test]
    fn parallel_pair_lattice() {
        let l = Matroid::uniform(1, 2).unwrap().flats();
        assert_eq!(l.flats(), &[set(2, &[]), set(2, &[0, 1])]);
        assert_eq!(l.hyperplanes().unwrap(), &[set(2, &[])]);
    }

    #[test]
    fn hyperplanes_of_u34() {
        let h = Matroid::uniform(3, 4).unwrap().hyperplanes().unwrap();
        assert_eq!(h.len(), 6);
        assert!(h.iter().all(|x| x.len() == 2));
    }

    #[test]
    fn rank_zero_has_no_hyperplanes() {
        let m = Matroid::from_basis_lists(2, &[vec![]]).unwrap();
        assert_eq!(m.hyperplanes(), Err(MatroidError::NoHyperplanes));
        assert_eq!(m.flats().len(), 1);
    }

    #[test]
    fn chain_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.hyperplane_chain(&set(3, &[0])).unwrap(), vec![set(3, &[0])]);
        assert_eq!(u23.hyperplane_chain(&u23.ground_set()).unwrap(), vec![]);
        assert_eq!(u23.hyperplane_chain(&set(3, &[0, 1])), Err(MatroidError::NotAFlat(set(3, &[0, 1]))));

        let u34 = Matroid::uniform(3, 4).unwrap();
        let chain = u34.hyperplane_chain(&set(4, &[])).unwrap();
        assert_eq!(chain, vec![set(4, &[0, 1]), set(4, &[0, 2]), set(4, &[1, 2])]);
    }
}
