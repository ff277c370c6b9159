//! Finite permutation groups: stabilizer chains, subgroup lattices up to
//! conjugacy, the nilpotent / supersolvable / solvable predicate ladder,
//! and solvability criteria phrased as subgroup counts.
//!
//! Products of permutations apply the left factor first.

pub mod action;
pub mod analysis;
pub mod arith;
pub mod chain;
pub mod classify;
pub mod constructors;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod group;
pub mod lattice;
pub mod limits;
pub mod perm;
pub mod table;

pub use action::CosetAction;
pub use chain::StabilizerChain;
pub use constructors::{parse_spec, GroupSpec};
pub use error::{GroupError, Result};
pub use group::PermGroup;
pub use lattice::{subgroup_classes, LatticeReport, SubgroupClass};
pub use limits::Limits;
pub use perm::Permutation;
