//! Homotopy invariants at desk scale: integral homology through Smith normal
//! form, path components, the fundamental group via horn fillers, and
//! certification that a map induces isomorphisms on all of them.

pub mod certify;
pub mod chains;
pub mod fundamental;
pub mod snf;

pub use certify::{certify_equivalence, CertifyReport, HomologyClause, Pi0Clause, Pi1Clause};
pub use chains::{chain_map, homology, mapping_cone, ChainComplex, HomologyGroup};
pub use fundamental::{pi0, pi1, Components, Pi1Table};
pub use snf::{smith_form, SmithForm, SparseMatrix};
