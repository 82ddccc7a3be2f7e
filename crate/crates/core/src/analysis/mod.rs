//! Distance partitions and the verdicts read off them.

mod equitable;
mod params;
mod partition;
pub(crate) mod transitivity;
mod witness;

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

pub use equitable::{equitability, is_completely_regular, EquitabilityVerdict, Witness};
pub use params::{coverage, min_distance, strength, strength_capped, MinDistance};
pub use partition::{distance_partition, distance_partition_capped, DistancePartition};
pub use transitivity::{
    is_completely_transitive, is_completely_transitive_capped, CensusRow, TransitivityVerdict,
};
pub use witness::{
    cells_meet_fixed_set, intersection_profile, point_closure, profiles_constant_on_cells,
    trichotomy_verdict, PointClosure, TrichotomyCase, TrichotomyVerdict,
};

use crate::design::Design;
use crate::error::Result;
use crate::group::PermGroup;
use crate::johnson::KSubset;

pub(crate) fn serialize_big<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_u64() {
        Some(small) => s.serialize_u64(small),
        None => s.serialize_str(&n.to_string()),
    }
}

/// The farthest cell `C_r` as a design.
pub fn opposite(d: &Design) -> Result<Design> {
    opposite_capped(d, crate::DEFAULT_MAX_RANKS)
}

pub fn opposite_capped(d: &Design, max_ranks: u64) -> Result<Design> {
    let dp = distance_partition_capped(d, max_ranks)?;
    opposite_of(d, &dp)
}

pub(crate) fn opposite_of(d: &Design, dp: &DistancePartition) -> Result<Design> {
    let r = dp.covering_radius();
    Design::new(d.v(), d.k(), dp.cell_members(r).collect::<Vec<KSubset>>())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    #[serde(serialize_with = "serialize_big")]
    pub order: BigUint,
    pub orbit_sizes: Vec<u64>,
    pub completely_transitive: bool,
    pub census: Vec<CensusRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub v: usize,
    pub k: usize,
    pub blocks: usize,
    pub delta: MinDistance,
    pub r: usize,
    pub cell_sizes: Vec<u64>,
    pub strength: usize,
    pub completely_regular: EquitabilityVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupReport>,
}

pub fn analyze(d: &Design, g: Option<&PermGroup>) -> Result<AnalysisReport> {
    analyze_capped(d, g, crate::DEFAULT_MAX_RANKS)
}

pub fn analyze_capped(d: &Design, g: Option<&PermGroup>, max_ranks: u64) -> Result<AnalysisReport> {
    if let Some(g) = g {
        g.preserves(d)?;
    }
    let dp = distance_partition_capped(d, max_ranks)?;
    let completely_regular = equitability(&dp);
    let group = match g {
        Some(g) => {
            let orbits = g.orbits_on_ksubsets_capped(d.k(), max_ranks)?;
            let ct = transitivity::compare(&dp, &orbits, g);
            Some(GroupReport {
                order: ct.order.clone(),
                orbit_sizes: ct.orbit_sizes(),
                completely_transitive: ct.completely_transitive,
                census: ct.census,
            })
        }
        None => None,
    };
    Ok(AnalysisReport {
        v: d.v(),
        k: d.k(),
        blocks: d.len(),
        delta: min_distance(d),
        r: dp.covering_radius(),
        cell_sizes: dp.cell_sizes(),
        strength: strength_capped(d, max_ranks)?,
        completely_regular,
        group,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "v {} k {} blocks {}", self.v, self.k, self.blocks);
        let _ = writeln!(out, "delta {}", self.delta);
        let _ = writeln!(out, "covering radius {}", self.r);
        let _ = writeln!(out, "cell sizes {}", join(&self.cell_sizes));
        let _ = writeln!(out, "strength {}", self.strength);
        match &self.completely_regular {
            EquitabilityVerdict::Equitable {
                intersection_numbers,
                trivial,
            } => {
                let note = if *trivial { " (trivial)" } else { "" };
                let _ = writeln!(out, "completely regular yes{note}");
                for row in intersection_numbers {
                    let _ = writeln!(out, "  {}", join(row));
                }
            }
            EquitabilityVerdict::NotEquitable(w) => {
                let _ = writeln!(out, "completely regular no");
                let _ = writeln!(
                    out,
                    "  {:?} in C{} has {} neighbours in C{}; {:?} has {}",
                    w.vertex, w.cell, w.count, w.target_cell, w.reference_vertex, w.reference_count
                );
            }
        }
        if let Some(g) = &self.group {
            let _ = writeln!(out, "group order {}", g.order);
            let _ = writeln!(
                out,
                "completely transitive {}",
                if g.completely_transitive { "yes" } else { "no" }
            );
            let _ = writeln!(out, "orbit  size  distance  stabiliser  representative");
            for (i, row) in g.census.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{:<6} {:<5} {:<9} {:<11} {:?}",
                    i,
                    row.size,
                    join(&row.distances),
                    row.stabilizer_order,
                    row.representative
                );
            }
        }
        out
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
