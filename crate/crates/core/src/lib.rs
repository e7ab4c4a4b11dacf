//! Simultaneous (s,t)-core partitions.
//!
//! Partitions and beta-sets, their bijection and hook numbers, (s,t)-closure
//! and delta-sets, bead diagrams, the diagonal canonical form for triangular
//! regions, and exhaustive checkers for the maximal core theorem and its
//! generalizations. The [`tcore`] module extends the closure machinery to
//! more than two pairwise coprime parameters.
//!
//! ```
//! use stcore::{closure, BetaSet, CoreParams, PartitionOrder};
//!
//! let params = CoreParams::new(5, 6).unwrap();
//! let maximal = closure::maximal_beta(params);
//! assert_eq!(maximal.elements(), &[19, 14, 13, 9, 8, 7, 4, 3, 2, 1]);
//!
//! let b = BetaSet::new(vec![9, 4, 3]).unwrap();
//! assert!(closure::is_core(params, &b));
//! assert!(b.contained_in(&maximal));
//! ```

pub mod bead;
pub mod canonical;
pub mod closure;
mod error;
mod ideals;
pub mod partition;
pub mod tcore;
pub mod verify;

pub use closure::{CoreParams, DeltaSet};
pub use error::{Error, Result};
pub use ideals::OrderIdeals;
pub use partition::{BetaSet, HookRow, Partition, PartitionOrder, Shift};
