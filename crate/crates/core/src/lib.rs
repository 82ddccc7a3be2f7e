//! Designs as codes in the Johnson graph `J(v,k)`.
//!
//! A design is a set of `k`-subsets of a `v`-point set. This crate builds the
//! classical examples (finite geometries, Witt designs, partition designs),
//! computes their distance partitions in `J(v,k)`, decides complete regularity
//! and complete transitivity relative to a permutation group, and screens
//! families of 2-transitive groups with exact arithmetic.

pub mod analysis;
pub mod constructions;
pub mod design;
pub mod error;
pub mod group;
pub mod johnson;
pub mod perm;
pub mod reproduce;
pub mod screening;

pub use analysis::{
    analyze, distance_partition, is_completely_regular, is_completely_transitive, min_distance,
    opposite, strength, AnalysisReport, DistancePartition, EquitabilityVerdict, MinDistance,
};
pub use design::Design;
pub use error::{Error, Result};
pub use group::{OrbitPartition, PermGroup};
pub use johnson::{complement_map, GroundSet, KSubset, SubsetRank};
pub use perm::Permutation;

/// Default refusal threshold for anything that allocates one slot per `k`-subset.
pub const DEFAULT_MAX_RANKS: u64 = 1 << 27;
