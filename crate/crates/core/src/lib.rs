//! Decide whether a finite permutation group is rational by counting the
//! flags its elements fix in an incidence geometry, and cross-check the
//! verdict against the power-map criterion.
//!
//! The pieces, bottom up:
//!
//! * [`perm`] and [`group`]: permutations, generator closure, conjugacy
//!   classes, cosets, the power-map oracle.
//! * [`geometry`]: incidence geometries, flags, automorphism actions and
//!   fixed-flag counts.
//! * [`cosetgeom`]: the coset geometry of the cyclic subgroups generated by
//!   class representatives, acted on by left multiplication.
//! * [`separation`]: permutation characters and class separation.
//! * [`symgeom`]: the subset geometry of the symmetric group and fixed
//!   k-subset counts from cycle types.
//! * [`spec`] and [`report`]: group specifications and the command reports
//!   behind the `ratgeom` binary.

pub mod cosetgeom;
pub mod error;
pub mod geometry;
pub mod group;
pub mod perm;
pub mod report;
pub mod separation;
pub mod spec;
pub mod symgeom;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
pub use perm::{parse_cycles, Permutation};

/// Resource caps shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group enumerated by closure.
    pub max_order: usize,
    /// Largest number of flags enumerated for one `(geometry, J)`.
    pub max_flags: usize,
    /// Largest type set for which all type subsets are considered.
    pub max_types: usize,
    /// Largest `n` for the subset geometry of `{1..n}`.
    pub max_subset_degree: usize,
    /// Largest `|G| * |objects|` table stored for an action.
    pub max_action_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: group::DEFAULT_MAX_ORDER,
            max_flags: 5_000_000,
            max_types: 12,
            max_subset_degree: 12,
            max_action_cells: 1 << 26,
        }
    }
}
