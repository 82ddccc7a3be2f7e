//! Designs and groups: finite fields and geometries, Witt designs, partition designs.

mod catalog;
mod field;
mod geometry;
mod golay;
mod groups;
mod partitions;
mod witt;

pub use catalog::{bundled_examples, construct, BundledExample, ConstructionParams, CONSTRUCTIONS};
pub use field::FiniteField;
pub use geometry::{
    affine_plane_group, ag_lines, biplane11, biplane11_group, inversive_plane4,
    inversive_plane4_group, pg_lines, projective_line_group, projective_plane_group,
};
pub use golay::GolayCode;
pub use groups::{symmetric, wreath, young, BundledGroup};
pub use partitions::{
    maximal_meet, partial_transversals, transversal_pairs, transversal_triples,
    transversals_of_pairs, unions_of_cells, within_two_cells, UniformPartition,
};
pub use witt::{m11_twelve_point_design, witt};
