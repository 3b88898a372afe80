//! Cyclic descent extensions on standard Young tableaux of skew shape.
//!
//! The crate computes the fibre sizes of cyclic descent maps, builds explicit
//! extensions, expands the symmetric functions involved in the Schur basis,
//! and checks the generating-function identities relating descents and
//! cyclic descents.

pub mod cyclic;
pub mod error;
pub mod exceptional;
pub mod gens;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use shapes::{
    ccomp_of_subset, comp_of_subset, Composition, CyclicComposition, Partition, ShapeClass, SkewShape, SubsetOfN,
};
