//! Three-qubit entanglement: negativities and global measures, the
//! generalized Schmidt decomposition, entanglement-subtype classification
//! and parametric state families with closed-form reference values.
//!
//! `no_std` with `alloc`. File formats, the command line and parallel sweeps
//! live in the `tripartite` crate.

#![no_std]
// `!(x <= tol)` is how NaN is made to fail a check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod classify;
pub mod families;
pub mod gsd;
pub mod linalg;
pub mod measures;
pub mod states;

pub use classify::{Claim, MixedVerdict, PureClassification, SubtypeLabel, DEFAULT_ZERO_TOL};
pub use families::{Family, FamilySpec, NamedState, OracleQuantity, OracleValues, SweepRow, Verdict};
pub use gsd::{GsdError, GsdForm, GsdPattern, PhaseMode};
pub use linalg::{ComplexMatrix, LinalgError};
pub use measures::{BaseMeasure, MeasureError, MeasureSet};
pub use states::{Bipartition, DensityMatrix, Pair, PureState, Qubit, State, StateError};
