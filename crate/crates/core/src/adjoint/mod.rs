//! Adjoint maps between lattices of flats.
//!
//! An adjoint map sends every flat of a source matroid `M` to a flat of a
//! simple target `M'` of the same rank. It is injective, reverses inclusion, and
//! restricts to a bijection from the hyperplanes of `M` onto the points of `M'`.

mod minors;
mod verify;

use std::collections::BTreeMap;

pub use minors::{
    contract_adjoint, delete_adjoint, minor_adjoint, vanishing_hyperplanes, vanishing_hyperplanes_by_codependence,
    vanishing_hyperplanes_by_rank,
};
pub use verify::{
    check_all_chains, check_chain_independence, check_modular_pairs, check_rank_complement, full_verification,
    verify_adjoint, Check, VerificationReport, Violation,
};

use crate::error::AdjointError;
use crate::lattice::FlatLattice;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// A total table from the flats of `source` to flats of `target`.
///
/// Construction checks structure only (every source flat has an entry and
/// every image is a flat of the target). Whether the table satisfies the
/// adjoint axioms is decided by [`verify_adjoint`].
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointMap {
    source: Matroid,
    target: Matroid,
    table: BTreeMap<ElementSet, ElementSet>,
    hyperplane_order: Vec<ElementSet>,
    source_labels: Vec<usize>,
    target_labels: Vec<usize>,
}

impl AdjointMap {
    pub fn new(
        source: Matroid,
        target: Matroid,
        table: BTreeMap<ElementSet, ElementSet>,
    ) -> Result<Self, AdjointError> {
        let source_labels = (0..source.n()).collect();
        let target_labels = (0..target.n()).collect();
        Self::with_lineage(source, target, table, source_labels, target_labels)
    }

    /// Like [`AdjointMap::new`], with relabeling bookkeeping: `source_labels[e]`
    /// and `target_labels[p]` are the labels that element `e` and point `p`
    /// carried in the map this one was derived from.
    pub fn with_lineage(
        source: Matroid,
        target: Matroid,
        table: BTreeMap<ElementSet, ElementSet>,
        source_labels: Vec<usize>,
        target_labels: Vec<usize>,
    ) -> Result<Self, AdjointError> {
        assert_eq!(source_labels.len(), source.n());
        assert_eq!(target_labels.len(), target.n());
        let lattice = source.flats();
        for f in lattice.flats() {
            if !table.contains_key(f) {
                return Err(AdjointError::MissingFlat(*f));
            }
        }
        for (f, img) in &table {
            source.check_set(f)?;
            if !lattice.contains(f) {
                return Err(AdjointError::KeyNotAFlat(*f));
            }
            target.check_set(img)?;
            if !target.is_flat(img) {
                return Err(AdjointError::ImageNotAFlat { flat: *f, image: *img });
            }
        }
        let hyperplane_order = lattice.hyperplanes().map(<[ElementSet]>::to_vec).unwrap_or_default();
        Ok(AdjointMap { source, target, table, hyperplane_order, source_labels, target_labels })
    }

    pub fn source(&self) -> &Matroid {
        &self.source
    }

    pub fn target(&self) -> &Matroid {
        &self.target
    }

    pub fn table(&self) -> &BTreeMap<ElementSet, ElementSet> {
        &self.table
    }

    /// Image of a flat of the source. Panics if `flat` is not a flat.
    pub fn image(&self, flat: &ElementSet) -> ElementSet {
        *self.table.get(flat).unwrap_or_else(|| panic!("{flat} is not a flat of the source"))
    }

    /// The source hyperplanes in lexicographic order (empty for rank 0).
    pub fn hyperplane_order(&self) -> &[ElementSet] {
        &self.hyperplane_order
    }

    pub fn source_labels(&self) -> &[usize] {
        &self.source_labels
    }

    pub fn target_labels(&self) -> &[usize] {
        &self.target_labels
    }

    /// Entries in lattice order (by rank, then lexicographically).
    pub fn entries(&self) -> Vec<(ElementSet, ElementSet)> {
        self.source.flats().flats().iter().map(|f| (*f, self.image(f))).collect()
    }

    pub(crate) fn source_lattice(&self) -> FlatLattice {
        self.source.flats()
    }
}

/// Candidate map sending each flat `F` to `cl'({bijection[i] : F ⊆ H_i})`,
/// where `H_i` is the i-th hyperplane of `source`.
///
/// The candidate must still be checked with [`verify_adjoint`].
pub fn induced_map(source: &Matroid, target: &Matroid, bijection: &[usize]) -> Result<AdjointMap, AdjointError> {
    if let Some(w) = target.simplicity_witness() {
        return Err(AdjointError::TargetNotSimple(format!("witness {w}")));
    }
    if source.rank() != target.rank() {
        return Err(AdjointError::RankMismatch { source_rank: source.rank(), target_rank: target.rank() });
    }
    let lattice = source.flats();
    let hyperplanes = lattice.hyperplanes().map(<[ElementSet]>::to_vec).unwrap_or_default();
    if bijection.len() != hyperplanes.len() || hyperplanes.len() != target.n() {
        return Err(AdjointError::NotABijection(format!(
            "{} hyperplanes, {} assigned labels, {} target points",
            hyperplanes.len(),
            bijection.len(),
            target.n()
        )));
    }
    let mut hit = vec![false; target.n()];
    for &p in bijection {
        if p >= target.n() || std::mem::replace(&mut hit[p], true) {
            return Err(AdjointError::NotABijection(format!("point {p} is out of range or assigned twice")));
        }
    }
    let table = lattice
        .flats()
        .iter()
        .map(|f| {
            let points = ElementSet::from_elements(
                target.n(),
                hyperplanes.iter().zip(bijection).filter(|(h, _)| f.is_subset(h)).map(|(_, &p)| p),
            );
            (*f, target.closure(&points))
        })
        .collect();
    AdjointMap::new(source.clone(), target.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, e.iter().copied())
    }

    #[test]
    fn structural_errors() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let mut table = BTreeMap::new();
        table.insert(set(3, &[]), set(3, &[0, 1, 2]));
        assert!(matches!(AdjointMap::new(u23.clone(), u23.clone(), table.clone()), Err(AdjointError::MissingFlat(_))));
        for i in 0..3 {
            table.insert(set(3, &[i]), set(3, &[i]));
        }
        table.insert(set(3, &[0, 1, 2]), set(3, &[]));
        assert!(AdjointMap::new(u23.clone(), u23.clone(), table.clone()).is_ok());

        let mut bad_image = table.clone();
        bad_image.insert(set(3, &[0]), set(3, &[0, 1]));
        assert!(matches!(
            AdjointMap::new(u23.clone(), u23.clone(), bad_image),
            Err(AdjointError::ImageNotAFlat { .. })
        ));

        let mut bad_key = table;
        bad_key.insert(set(3, &[1, 2]), set(3, &[]));
        assert!(matches!(AdjointMap::new(u23.clone(), u23, bad_key), Err(AdjointError::KeyNotAFlat(_))));
    }

    #[test]
    fn induced_map_input_errors() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(matches!(induced_map(&u23, &u12, &[0, 1, 2]), Err(AdjointError::TargetNotSimple(_))));
        let u33 = Matroid::uniform(3, 3).unwrap();
        assert!(matches!(induced_map(&u23, &u33, &[0, 1, 2]), Err(AdjointError::RankMismatch { .. })));
        assert!(matches!(induced_map(&u23, &u23, &[0, 0, 2]), Err(AdjointError::NotABijection(_))));
        assert!(matches!(induced_map(&u23, &u23, &[0, 1]), Err(AdjointError::NotABijection(_))));
    }

    #[test]
    fn induced_map_on_u23() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let phi = induced_map(&u23, &u23, &[0, 1, 2]).unwrap();
        assert_eq!(phi.image(&set(3, &[])), set(3, &[0, 1, 2]));
        assert_eq!(phi.image(&set(3, &[1])), set(3, &[1]));
        assert_eq!(phi.image(&set(3, &[0, 1, 2])), set(3, &[]));
        assert_eq!(phi.hyperplane_order(), &[set(3, &[0]), set(3, &[1]), set(3, &[2])]);
    }

    #[test]
    fn rank_zero_map() {
        let loops = Matroid::from_basis_lists(2, &[vec![]]).unwrap();
        let empty = Matroid::from_basis_lists(0, &[vec![]]).unwrap();
        let phi = induced_map(&loops, &empty, &[]).unwrap();
        assert_eq!(phi.table().len(), 1);
        assert!(verify_adjoint(&phi).valid);
    }
}
