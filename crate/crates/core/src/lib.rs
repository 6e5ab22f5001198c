//! Finite simplicial groups and groupoids, their `W̄` classifying spaces, and
//! their homotopy coherent nerves, materialized up to a truncation dimension.
//!
//! The crate builds both simplicial sets for a levelwise-finite simplicial
//! groupoid, constructs the comparison map `W̄𝒢 → N𝒢` from the
//! identity-on-objects morphism `C̃[Δ•] → Δ•_W̄`, and certifies that the map
//! is a homotopy equivalence on `π₀`, `π₁` and integral homology.

pub mod comparison;
pub mod error;
pub mod groups;
pub mod hc;
pub mod instance;
pub mod invariants;
pub mod pipeline;
pub mod simplicial;
pub mod wbar;

pub use error::{Error, Result};

/// Version tag written into every exported JSON document.
pub const SCHEMA_VERSION: u32 = 1;
