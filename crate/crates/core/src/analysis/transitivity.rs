use num_bigint::BigUint;
use serde::Serialize;

use super::partition::{distance_partition_capped, DistancePartition};
use crate::design::Design;
use crate::error::Result;
use crate::group::{OrbitPartition, PermGroup};
use crate::johnson::SubsetRank;

/// One orbit of the group on `k`-subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub size: u64,
    /// Distances from the design met by this orbit; a single entry when the orbit lies in one cell.
    pub distances: Vec<usize>,
    #[serde(serialize_with = "crate::analysis::serialize_big")]
    pub stabilizer_order: BigUint,
    pub representative: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityVerdict {
    pub completely_transitive: bool,
    #[serde(serialize_with = "crate::analysis::serialize_big")]
    pub order: BigUint,
    pub census: Vec<CensusRow>,
}

impl TransitivityVerdict {
    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.census.iter().map(|r| r.size).collect()
    }
}

pub fn is_completely_transitive(d: &Design, g: &PermGroup) -> Result<TransitivityVerdict> {
    is_completely_transitive_capped(d, g, crate::DEFAULT_MAX_RANKS)
}

pub fn is_completely_transitive_capped(
    d: &Design,
    g: &PermGroup,
    max_ranks: u64,
) -> Result<TransitivityVerdict> {
    g.preserves(d)?;
    let dp = distance_partition_capped(d, max_ranks)?;
    let orbits = g.orbits_on_ksubsets_capped(d.k(), max_ranks)?;
    Ok(compare(&dp, &orbits, g))
}

/// Census of `orbits` against the cells of `dp`, sorted by distance.
pub(crate) fn compare(
    dp: &DistancePartition,
    orbits: &OrbitPartition,
    g: &PermGroup,
) -> TransitivityVerdict {
    let order = g.order();
    let mut census: Vec<(u64, CensusRow)> = orbits
        .cells()
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            let mut distances: Vec<usize> = cell
                .iter()
                .map(|&r| dp.distance_of_rank(SubsetRank(r)))
                .collect();
            distances.sort_unstable();
            distances.dedup();
            let row = CensusRow {
                size: cell.len() as u64,
                distances,
                stabilizer_order: &order / BigUint::from(cell.len()),
                representative: orbits.representative(i).points(),
            };
            (cell[0], row)
        })
        .collect();
    census.sort_by(|a, b| (&a.1.distances, a.0).cmp(&(&b.1.distances, b.0)));
    let census: Vec<CensusRow> = census.into_iter().map(|(_, row)| row).collect();
    let completely_transitive = census.len() == dp.cells().len()
        && census.iter().all(|row| row.distances.len() == 1);
    TransitivityVerdict {
        completely_transitive,
        order,
        census,
    }
}
