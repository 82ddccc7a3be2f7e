use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::partition::{distance_partition_capped, DistancePartition};
use crate::design::Design;
use crate::error::Result;
use crate::johnson::{full_mask, rank_bits, unrank_bits, Combinations};

/// A vertex whose neighbour count in some cell differs from another vertex of its cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: Vec<usize>,
    pub cell: usize,
    pub target_cell: usize,
    pub count: u64,
    pub reference_vertex: Vec<usize>,
    pub reference_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquitabilityVerdict {
    /// `intersection_numbers[i][j]` neighbours in `C_j` for every vertex of `C_i`.
    /// `trivial` marks a design covering all of `J(v,k)`.
    Equitable {
        intersection_numbers: Vec<Vec<u64>>,
        trivial: bool,
    },
    NotEquitable(Witness),
}

impl EquitabilityVerdict {
    pub fn is_equitable(&self) -> bool {
        matches!(self, EquitabilityVerdict::Equitable { .. })
    }

    pub fn intersection_numbers(&self) -> Option<&[Vec<u64>]> {
        match self {
            EquitabilityVerdict::Equitable {
                intersection_numbers,
                ..
            } => Some(intersection_numbers),
            EquitabilityVerdict::NotEquitable(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            EquitabilityVerdict::NotEquitable(w) => Some(w),
            EquitabilityVerdict::Equitable { .. } => None,
        }
    }
}

impl Serialize for EquitabilityVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EquitabilityVerdict::Equitable {
                intersection_numbers,
                trivial,
            } => {
                let mut st = s.serialize_struct("EquitabilityVerdict", 3)?;
                st.serialize_field("verdict", &true)?;
                st.serialize_field("trivial", trivial)?;
                st.serialize_field("intersection_numbers", intersection_numbers)?;
                st.end()
            }
            EquitabilityVerdict::NotEquitable(w) => {
                let mut st = s.serialize_struct("EquitabilityVerdict", 2)?;
                st.serialize_field("verdict", &false)?;
                st.serialize_field("witness", w)?;
                st.end()
            }
        }
    }
}

pub fn is_completely_regular(d: &Design) -> Result<EquitabilityVerdict> {
    let dp = distance_partition_capped(d, crate::DEFAULT_MAX_RANKS)?;
    Ok(equitability(&dp))
}

/// Visits every vertex once; stops at the first vertex whose row of
/// neighbour counts disagrees with the first vertex seen in its cell.
pub fn equitability(dp: &DistancePartition) -> EquitabilityVerdict {
    let (v, k) = (dp.v(), dp.k());
    let cells = dp.cells().len();
    let dist = dp.distances();
    let all = full_mask(v);
    let mut rows: Vec<Option<(u64, Vec<u64>)>> = vec![None; cells];
    let mut counts = vec![0u64; cells];
    for (r, s) in Combinations::new(v, k).enumerate() {
        let bits = s.bits();
        counts.iter_mut().for_each(|c| *c = 0);
        let out = !bits & all;
        let mut inside = bits;
        while inside != 0 {
            let x = inside & inside.wrapping_neg();
            inside ^= x;
            let mut o = out;
            while o != 0 {
                let y = o & o.wrapping_neg();
                o ^= y;
                counts[dist[rank_bits(bits ^ x ^ y) as usize] as usize] += 1;
            }
        }
        let i = dist[r] as usize;
        match &rows[i] {
            None => rows[i] = Some((r as u64, counts.clone())),
            Some((reference, row)) => {
                if let Some(j) = (0..cells).find(|&j| row[j] != counts[j]) {
                    return EquitabilityVerdict::NotEquitable(Witness {
                        vertex: s.points(),
                        cell: i,
                        target_cell: j,
                        count: counts[j],
                        reference_vertex: crate::johnson::KSubset::from_bits(unrank_bits(
                            *reference, k,
                        ))
                        .points(),
                        reference_count: row[j],
                    });
                }
            }
        }
    }
    let intersection_numbers = rows
        .into_iter()
        .map(|row| row.map(|(_, r)| r).unwrap_or_default())
        .collect();
    EquitabilityVerdict::Equitable {
        intersection_numbers,
        trivial: cells == 1,
    }
}
