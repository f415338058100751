//! Duality testing for antichains in distributive lattices, together with
//! the formal-concept-analysis machinery around it: contexts, JSM-style
//! hypotheses, implications, and the reductions between these problems.

pub mod bitset;
pub mod cli;
pub mod context;
pub mod dualization;
pub mod error;
pub mod formats;
pub mod guard;
pub mod hypotheses;
pub mod implications;
pub mod poset;
pub mod reductions;

pub use bitset::BitSet;
pub use context::{Concept, FormalContext};
pub use dualization::{DualityInstance, DualityRun, DualityVerdict};
pub use error::{Error, Result};
pub use hypotheses::TrainingContext;
pub use implications::Implication;
pub use poset::Poset;
pub use reductions::{Assignment, Cnf, ExplicitLattice};
