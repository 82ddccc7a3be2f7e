use crate::design::Design;
use crate::error::{Error, Result};
use crate::johnson::{binomial, full_mask, rank_bits, unrank_bits, KSubset, SubsetRank};

/// Cells `C_0..C_r` of `J(v,k)` by distance from a design.
#[derive(Debug, Clone)]
pub struct DistancePartition {
    v: usize,
    k: usize,
    dist: Vec<u8>,
    cells: Vec<Vec<u64>>,
}

impl DistancePartition {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Covering radius `r`.
    pub fn covering_radius(&self) -> usize {
        self.cells.len() - 1
    }

    /// Ranks in each cell, ascending.
    pub fn cells(&self) -> &[Vec<u64>] {
        &self.cells
    }

    pub fn cell_sizes(&self) -> Vec<u64> {
        self.cells.iter().map(|c| c.len() as u64).collect()
    }

    /// Distance of every rank from the design.
    pub fn distances(&self) -> &[u8] {
        &self.dist
    }

    #[inline]
    pub fn distance_of_rank(&self, r: SubsetRank) -> usize {
        self.dist[r.0 as usize] as usize
    }

    #[inline]
    pub fn distance_of(&self, s: KSubset) -> usize {
        self.dist[rank_bits(s.bits()) as usize] as usize
    }

    pub fn cell_members(&self, i: usize) -> impl Iterator<Item = KSubset> + '_ {
        let k = self.k;
        self.cells[i]
            .iter()
            .map(move |&r| KSubset::from_bits(unrank_bits(r, k)))
    }
}

pub(crate) fn check_cap(v: usize, k: usize, max_ranks: u64) -> Result<u64> {
    let count = binomial(v, k);
    if count > max_ranks {
        Err(Error::MemoryCap {
            v,
            k,
            count,
            cap: max_ranks,
        })
    } else {
        Ok(count)
    }
}

pub fn distance_partition(d: &Design) -> Result<DistancePartition> {
    distance_partition_capped(d, crate::DEFAULT_MAX_RANKS)
}

/// Multi-source breadth-first search from the blocks, one byte per rank.
pub fn distance_partition_capped(d: &Design, max_ranks: u64) -> Result<DistancePartition> {
    let (v, k) = (d.v(), d.k());
    let n = check_cap(v, k, max_ranks)? as usize;
    let all = full_mask(v);
    let mut dist = vec![u8::MAX; n];
    let mut frontier: Vec<u64> = Vec::with_capacity(d.len());
    for b in d.blocks() {
        dist[rank_bits(b.bits()) as usize] = 0;
        frontier.push(b.bits());
    }
    let mut level = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &bits in &frontier {
            let out = !bits & all;
            let mut inside = bits;
            while inside != 0 {
                let x = inside & inside.wrapping_neg();
                inside ^= x;
                let mut o = out;
                while o != 0 {
                    let y = o & o.wrapping_neg();
                    o ^= y;
                    let nb = bits ^ x ^ y;
                    let r = rank_bits(nb) as usize;
                    if dist[r] == u8::MAX {
                        dist[r] = level + 1;
                        next.push(nb);
                    }
                }
            }
        }
        frontier = next;
        level += 1;
    }
    let r = dist.iter().copied().max().unwrap_or(0) as usize;
    let mut cells = vec![Vec::new(); r + 1];
    for (rank, &dd) in dist.iter().enumerate() {
        cells[dd as usize].push(rank as u64);
    }
    Ok(DistancePartition {
        v,
        k,
        dist,
        cells,
    })
}
