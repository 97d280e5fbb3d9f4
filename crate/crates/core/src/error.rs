use thiserror::Error;

use crate::adjoint::VerificationReport;
use crate::set::ElementSet;

/// Input and domain errors raised by matroid construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("set over a universe of size {found} used with a matroid on {expected} elements")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("ground set of size {n} exceeds the cap of {cap} (set MATADJ_MAX_N to raise it)")]
    TooLarge { n: usize, cap: usize },
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("bases have different sizes: {first} has {first_len} elements, {other} has {other_len}")]
    UnequalBases { first: ElementSet, first_len: usize, other: ElementSet, other_len: usize },
    #[error("basis {0} is listed twice")]
    DuplicateBasis(ElementSet),
    #[error("basis exchange fails for B1={b1}, B2={b2}: no f in B2-B1 makes (B1-{e})+f a basis")]
    ExchangeViolation { b1: ElementSet, b2: ElementSet, e: usize },
    #[error("a rank-0 matroid has no hyperplanes")]
    NoHyperplanes,
    #[error("{0} is not a flat")]
    NotAFlat(ElementSet),
    #[error("contract set {contract} and delete set {delete} overlap")]
    OverlappingMinor { contract: ElementSet, delete: ElementSet },
    #[error("representation error: {0}")]
    Representation(String),
}

/// Errors raised by adjoint-map construction and the minor formulas.
///
/// Structural problems (a table that is not total, a value that is not a flat)
/// are errors. A well-formed map that fails the adjoint axioms is not an error:
/// it yields a [`VerificationReport`] with violations.
#[derive(Debug, Clone, Error)]
pub enum AdjointError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("table has no entry for the flat {0}")]
    MissingFlat(ElementSet),
    #[error("table key {0} is not a flat of the source")]
    KeyNotAFlat(ElementSet),
    #[error("table maps {flat} to {image}, which is not a flat of the target")]
    ImageNotAFlat { flat: ElementSet, image: ElementSet },
    #[error("hyperplane order does not match the source: {0}")]
    HyperplaneOrderDrift(String),
    #[error("target matroid is not simple: {0}")]
    TargetNotSimple(String),
    #[error("target has rank {target_rank} but the source has rank {source_rank}")]
    RankMismatch { source_rank: usize, target_rank: usize },
    #[error("hyperplane assignment is not a bijection onto the points: {0}")]
    NotABijection(String),
    #[error("precondition failed: {0} is not coindependent")]
    NotCoindependent(ElementSet),
    #[error("precondition failed: chain is not strictly decreasing at position {position}")]
    ChainNotStrict { position: usize },
    #[error("precondition failed: {0} is not a hyperplane of the source")]
    NotAHyperplane(ElementSet),
    #[error("input map is not a valid adjoint map ({} violations)", .0.violations.len())]
    InvalidInput(Box<VerificationReport>),
    #[error("internal error: constructed map failed verification ({} violations)", .0.violations.len())]
    ConstructionFailed(Box<VerificationReport>),
}
