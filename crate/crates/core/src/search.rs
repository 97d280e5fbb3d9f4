//! Adjoint fixtures: construction from a matrix representation, and exhaustive
//! search over small simple matroids.

use std::collections::HashSet;
use std::time::Instant;

use itertools::Itertools;
use serde::Serialize;

use crate::adjoint::{induced_map, verify_adjoint, AdjointMap};
use crate::error::{AdjointError, MatroidError};
use crate::matroid::{check_basis_exchange, Matroid, Provenance};
use crate::repr::Representation;
use crate::set::{k_subsets, ElementSet};

/// Builds the adjoint whose point for hyperplane `H` is the canonical linear
/// functional vanishing on the columns of `H`.
///
/// Point `i` of the target corresponds to hyperplane `i` in lexicographic order.
pub fn adjoint_from_representation(m: &Matroid, rep: &Representation) -> Result<AdjointMap, AdjointError> {
    if rep.n() != m.n() {
        return Err(MatroidError::Representation(format!(
            "matrix has {} columns, matroid has {} elements",
            rep.n(),
            m.n()
        ))
        .into());
    }
    let column_matroid = Matroid::from_representation(rep.clone())?;
    if column_matroid != *m {
        return Err(MatroidError::Representation("column matroid differs from the given bases".into()).into());
    }
    let hyperplanes = m.hyperplanes()?;
    let covectors = rep.hyperplane_covectors(&hyperplanes)?;
    let mut target = Matroid::from_representation(covectors)?;
    if let Some(name) = m.name() {
        target = target.with_name(format!("adjoint of {name}"));
    }
    let identity: Vec<usize> = (0..hyperplanes.len()).collect();
    let phi = induced_map(m, &target, &identity)?;
    let report = verify_adjoint(&phi);
    if !report.valid {
        return Err(AdjointError::ConstructionFailed(Box::new(report)));
    }
    Ok(phi)
}

/// Limits for [`search_adjoint`]. Enumeration order is fixed and seed-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Refuse matroids with more hyperplanes than this.
    pub max_hyperplanes: usize,
    /// Stop after examining this many simple candidate matroids.
    pub max_candidates: u64,
    /// Examine one labeled representative per isomorphism class, trying every
    /// hyperplane bijection for it. Off by default.
    pub dedup_isomorphic: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_hyperplanes: 6, max_candidates: 1_000_000, dedup_isomorphic: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchLog {
    pub hyperplanes: usize,
    pub rank: usize,
    pub families_enumerated: u64,
    pub candidates_examined: u64,
    pub exhausted: bool,
    pub found: bool,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Option<AdjointMap>,
    /// True only when the whole candidate space was covered without a hit.
    pub exhausted: bool,
    pub log: SearchLog,
}

fn is_simple_family(bases: &[ElementSet], m: usize, r: usize) -> bool {
    match r {
        0 => m == 0,
        1 => m == 1,
        _ => {
            let covered = bases.iter().fold(0u64, |acc, b| acc | b.bits());
            if covered.count_ones() as usize != m {
                return false;
            }
            (0..m).tuple_combinations().all(|(i, j)| {
                let pair = (1u64 << i) | (1u64 << j);
                bases.iter().any(|b| b.bits() & pair == pair)
            })
        }
    }
}

fn canonical_form(bases: &[ElementSet], m: usize) -> Vec<u64> {
    (0..m)
        .permutations(m)
        .map(|perm| {
            let mut relabeled: Vec<u64> =
                bases.iter().map(|b| b.iter().fold(0u64, |acc, e| acc | (1 << perm[e]))).collect();
            relabeled.sort_unstable();
            relabeled
        })
        .min()
        .unwrap_or_default()
}

/// Looks for a simple matroid on the hyperplanes of `m` that is an adjoint.
///
/// Candidates are the labeled simple matroids of rank `r(m)` on `{0..h}`,
/// where `h` is the number of hyperplanes, ordered by number of bases
/// (descending) and then lexicographically by the omitted `r`-subsets.
/// Hyperplane `i` is sent to point `i`; enumerating every labeled candidate
/// covers every bijection. The first candidate that verifies is returned; when
/// several adjoints exist, which one that is carries no further meaning.
pub fn search_adjoint(m: &Matroid, budget: &SearchBudget) -> SearchOutcome {
    let start = Instant::now();
    let rank = m.rank();
    let hyperplanes = if rank == 0 { Vec::new() } else { m.hyperplanes().expect("rank is positive") };
    let points = hyperplanes.len();
    let mut log = SearchLog {
        hyperplanes: points,
        rank,
        families_enumerated: 0,
        candidates_examined: 0,
        exhausted: false,
        found: false,
        elapsed_ms: 0,
        diagnostic: None,
    };
    let finish = |mut log: SearchLog, found: Option<AdjointMap>, exhausted: bool| {
        log.exhausted = exhausted;
        log.found = found.is_some();
        log.elapsed_ms = start.elapsed().as_millis();
        SearchOutcome { found, exhausted, log }
    };

    if points > budget.max_hyperplanes {
        log.diagnostic = Some(format!(
            "{points} hyperplanes exceed the budget of {}; no conclusion about existence",
            budget.max_hyperplanes
        ));
        return finish(log, None, false);
    }

    let tuples: Vec<ElementSet> = k_subsets(points, rank).collect();
    let identity: Vec<usize> = (0..points).collect();
    let mut seen_classes: HashSet<Vec<u64>> = HashSet::new();

    for omitted in 0..tuples.len() {
        for skip in (0..tuples.len()).combinations(omitted) {
            log.families_enumerated += 1;
            let mut skip_iter = skip.iter().peekable();
            let bases: Vec<ElementSet> = tuples
                .iter()
                .enumerate()
                .filter(|(i, _)| {
                    if skip_iter.peek() == Some(&i) {
                        skip_iter.next();
                        false
                    } else {
                        true
                    }
                })
                .map(|(_, t)| *t)
                .collect();
            if !is_simple_family(&bases, points, rank) || check_basis_exchange(&bases).is_err() {
                continue;
            }
            if budget.dedup_isomorphic && !seen_classes.insert(canonical_form(&bases, points)) {
                continue;
            }
            if log.candidates_examined >= budget.max_candidates {
                log.diagnostic =
                    Some(format!("stopped after {} candidates; no conclusion about existence", budget.max_candidates));
                return finish(log, None, false);
            }
            log.candidates_examined += 1;
            let candidate = Matroid::from_sorted_bases(points, bases, Provenance::Bases);
            let bijections: Vec<Vec<usize>> = if budget.dedup_isomorphic {
                (0..points).permutations(points).collect()
            } else {
                vec![identity.clone()]
            };
            for bijection in bijections {
                let phi = induced_map(m, &candidate, &bijection).expect("candidate is simple of equal rank");
                if verify_adjoint(&phi).valid {
                    return finish(log, Some(phi), false);
                }
            }
        }
    }
    log.diagnostic = Some("candidate space exhausted without an adjoint".into());
    finish(log, None, true)
}
