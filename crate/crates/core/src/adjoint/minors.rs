//! Adjoints of minors built from an adjoint of the parent.
//!
//! Contraction by `C` keeps the interval above `cl(C)` and restricts the target
//! to `phi(cl(C))`. Deletion of a coindependent `D` deletes from the target the
//! points of the hyperplanes whose rank drops when `D` is removed.

use std::collections::BTreeMap;

use super::{check_rank_complement, verify_adjoint, AdjointMap};
use crate::error::AdjointError;
use crate::matroid::Matroid;
use crate::minor::{surviving_labels, MinorSpec};
use crate::set::ElementSet;

/// Hyperplanes `H` with `r(H - D) < r(H)`.
pub fn vanishing_hyperplanes_by_rank(m: &Matroid, d: &ElementSet) -> Vec<ElementSet> {
    m.check_set(d).expect("set on wrong ground set");
    if m.rank() == 0 {
        return Vec::new();
    }
    m.hyperplanes()
        .expect("rank is positive")
        .into_iter()
        .filter(|h| m.rank_of(&h.difference(d)) < m.rank_of(h))
        .collect()
}

/// Hyperplanes `H` for which `H ∩ D` is dependent in the dual of `M|H`.
pub fn vanishing_hyperplanes_by_codependence(m: &Matroid, d: &ElementSet) -> Vec<ElementSet> {
    m.check_set(d).expect("set on wrong ground set");
    if m.rank() == 0 {
        return Vec::new();
    }
    m.hyperplanes()
        .expect("rank is positive")
        .into_iter()
        .filter(|h| {
            let (_, new_label) = surviving_labels(&h.complement());
            let restriction = m.restrict(h);
            let inside = h.intersection(d).relabel(&new_label, restriction.n());
            !restriction.dual().is_independent(&inside)
        })
        .collect()
}

/// Hyperplanes of `m` that stop being flats of the same rank once `d` is deleted.
///
/// Computed by both characterizations, which must agree.
pub fn vanishing_hyperplanes(m: &Matroid, d: &ElementSet) -> Vec<ElementSet> {
    let by_rank = vanishing_hyperplanes_by_rank(m, d);
    let by_codependence = vanishing_hyperplanes_by_codependence(m, d);
    assert_eq!(by_rank, by_codependence, "vanishing hyperplane characterizations disagree for D={d}");
    by_rank
}

fn lift_labels(parent: &[usize], kept: &[usize]) -> Vec<usize> {
    kept.iter().map(|&e| parent[e]).collect()
}

pub(crate) fn contract_unchecked(phi: &AdjointMap, c: &ElementSet) -> Result<AdjointMap, AdjointError> {
    let source = phi.source();
    source.check_set(c)?;
    let minor = source.contract(c);
    let (kept, _) = surviving_labels(c);

    let support = phi.image(&source.closure(c));
    let target = phi.target().restrict(&support);
    let (target_kept, target_new) = surviving_labels(&support.complement());

    let mut table = BTreeMap::new();
    for f in minor.flats().flats() {
        let image = phi.image(&f.lift(&kept, source.n()).union(c));
        table.insert(*f, image.relabel(&target_new, target.n()));
    }
    AdjointMap::with_lineage(
        minor,
        target,
        table,
        lift_labels(phi.source_labels(), &kept),
        lift_labels(phi.target_labels(), &target_kept),
    )
}

pub(crate) fn delete_unchecked(phi: &AdjointMap, d: &ElementSet) -> Result<AdjointMap, AdjointError> {
    let source = phi.source();
    source.check_set(d)?;
    if !source.is_coindependent(d) {
        return Err(AdjointError::NotCoindependent(*d));
    }
    let removed =
        vanishing_hyperplanes(source, d).iter().fold(phi.target().empty_set(), |acc, h| acc.union(&phi.image(h)));
    let minor = source.delete(d);
    let (kept, _) = surviving_labels(d);
    let target = phi.target().delete(&removed);
    let (target_kept, target_new) = surviving_labels(&removed);

    let mut table = BTreeMap::new();
    for f in minor.flats().flats() {
        let image = phi.image(&source.closure(&f.lift(&kept, source.n()))).difference(&removed);
        table.insert(*f, image.relabel(&target_new, target.n()));
    }
    AdjointMap::with_lineage(
        minor,
        target,
        table,
        lift_labels(phi.source_labels(), &kept),
        lift_labels(phi.target_labels(), &target_kept),
    )
}

fn require_valid(phi: &AdjointMap) -> Result<(), AdjointError> {
    let report = verify_adjoint(phi);
    if report.valid {
        Ok(())
    } else {
        Err(AdjointError::InvalidInput(Box::new(report)))
    }
}

fn require_constructed(phi: AdjointMap) -> Result<AdjointMap, AdjointError> {
    let mut report = verify_adjoint(&phi);
    report.merge(check_rank_complement(&phi));
    if report.valid {
        Ok(phi)
    } else {
        Err(AdjointError::ConstructionFailed(Box::new(report)))
    }
}

/// The adjoint `F ↦ phi(F ∪ C)` from `M/C` to `M'|phi(cl(C))`.
///
/// The target is relabeled onto `0..` in increasing order of its points.
pub fn contract_adjoint(phi: &AdjointMap, c: &ElementSet) -> Result<AdjointMap, AdjointError> {
    require_valid(phi)?;
    require_constructed(contract_unchecked(phi, c)?)
}

/// The adjoint `F ↦ phi(cl(F)) - phi(H(M,D))` from `M\D` to `M'\phi(H(M,D))`.
///
/// `d` must be coindependent; general deletions go through [`minor_adjoint`].
/// The result is checked to send each rank-k flat to a flat of rank `r - k`.
pub fn delete_adjoint(phi: &AdjointMap, d: &ElementSet) -> Result<AdjointMap, AdjointError> {
    phi.source().check_set(d)?;
    if !phi.source().is_coindependent(d) {
        return Err(AdjointError::NotCoindependent(*d));
    }
    require_valid(phi)?;
    require_constructed(delete_unchecked(phi, d)?)
}

/// Adjoint of `M/C\D`: normalizes the spec so that `C` is independent and `D`
/// coindependent, contracts `C`, then deletes `D`.
pub fn minor_adjoint(phi: &AdjointMap, spec: &MinorSpec) -> Result<AdjointMap, AdjointError> {
    spec.check_for(phi.source())?;
    require_valid(phi)?;
    let normal = phi.source().minor_normal_form(spec);
    let contracted = contract_unchecked(phi, &normal.contract)?;
    let (_, new_label) = surviving_labels(&normal.contract);
    let d = normal.delete.relabel(&new_label, contracted.source().n());
    if !contracted.source().is_coindependent(&d) {
        return Err(AdjointError::NotCoindependent(d));
    }
    require_constructed(delete_unchecked(&contracted, &d)?)
}
