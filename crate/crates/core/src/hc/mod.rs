//! The homotopy coherent nerve and the two cosimplicial simplicial categories
//! it is compared through.

pub mod delta_wbar;
pub mod nerve;
pub mod poset;
pub mod representable;

pub use delta_wbar::{cosimplicial_identity_failures, WbarFunctor, WbarMorphism};
pub use nerve::{build_nerve, build_nerve_data, enumerate_hc_functors, ChainTable, HcFunctor, HcNerve, LevelStats, DEFAULT_BUDGET};
pub use poset::{alpha_push, CTildeCat, IntervalPoset, Subset};
pub use representable::{represented_simplices, wbar_via_representable, RepresentedSimplex};
