//! Finite groups, finite groupoids, and levelwise-finite simplicial groups
//! and groupoids, with builders for the standard test instances.

pub mod group;
pub mod groupoid;
pub mod xmod;

pub use group::FiniteGroup;
pub use groupoid::{GroupoidFunctorData, GroupoidLevel, SimplicialGroupoid};
pub use xmod::CrossedModule;
