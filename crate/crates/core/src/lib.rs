//! Finite groups given by Cayley tables, the affine semilinear groups
//! `AΓL(1, q)`, automorphism groups, and checkers for stability of direct
//! products under taking automorphism groups.

pub mod automorphism;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod exec;
pub mod expr;
pub mod field;
pub mod group;
pub mod harness;
pub mod numtheory;
pub mod report;

pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{FieldElement, FiniteField};
pub use group::{Elem, FiniteGroup, Homomorphism, Subgroup};
