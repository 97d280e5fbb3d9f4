//! Matroid adjoints.
//!
//! Matroids are stored by their bases on a dense ground set `{0..n}`. On top of
//! rank, closure, and the lattice of flats, the crate verifies adjoint maps,
//! builds adjoints of minors from an adjoint of the parent, and generates
//! adjoint fixtures from matrix representations or by exhaustive search.

pub mod adjoint;
pub mod catalog;
pub mod error;
pub mod field;
pub mod io;
pub mod lattice;
pub mod matroid;
pub mod minor;
pub mod repr;
pub mod search;
pub mod set;

pub use adjoint::{AdjointMap, Check, VerificationReport, Violation};
pub use error::{AdjointError, MatroidError};
pub use lattice::FlatLattice;
pub use matroid::{Matroid, Provenance};
pub use minor::MinorSpec;
pub use repr::Representation;
pub use search::{adjoint_from_representation, search_adjoint, SearchBudget, SearchOutcome};
pub use set::ElementSet;
