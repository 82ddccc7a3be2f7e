use std::fmt;

use serde::{Serialize, Serializer};

use super::partition::check_cap;
use crate::design::Design;
use crate::error::Result;
use crate::johnson::{binomial, full_mask, rank_bits, subsets_of, KSubset};

/// Minimum distance; `Infinite` for a single-block design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MinDistance {
    Finite(usize),
    Infinite,
}

impl MinDistance {
    pub fn finite(self) -> Option<usize> {
        match self {
            MinDistance::Finite(d) => Some(d),
            MinDistance::Infinite => None,
        }
    }

    pub fn at_least(self, n: usize) -> bool {
        match self {
            MinDistance::Finite(d) => d >= n,
            MinDistance::Infinite => true,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Finite(d) => write!(f, "{d}"),
            MinDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MinDistance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinDistance::Finite(d) => s.serialize_u64(*d as u64),
            MinDistance::Infinite => s.serialize_str("inf"),
        }
    }
}

const PAIRWISE_LIMIT: usize = 1 << 26;

pub fn min_distance(d: &Design) -> MinDistance {
    let blocks = d.blocks();
    if blocks.len() < 2 {
        return MinDistance::Infinite;
    }
    let k = d.k();
    if blocks.len() * (blocks.len() - 1) / 2 > PAIRWISE_LIMIT && has_adjacent_blocks(d) {
        return MinDistance::Finite(1);
    }
    let mut best = usize::MAX;
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            best = best.min(k - a.meet(*b));
            if best == 1 {
                return MinDistance::Finite(1);
            }
        }
    }
    MinDistance::Finite(best)
}

fn has_adjacent_blocks(d: &Design) -> bool {
    let all = full_mask(d.v());
    d.blocks().iter().any(|b| {
        let bits = b.bits();
        let outside = KSubset::from_bits(!bits & all);
        b.iter().any(|x| {
            outside
                .iter()
                .any(|y| d.contains(KSubset::from_bits(bits ^ (1 << x) ^ (1 << y))))
        })
    })
}

/// Number of blocks containing each `t`-subset, indexed by colex rank.
pub fn coverage(d: &Design, t: usize) -> Vec<u32> {
    let mut counts = vec![0u32; binomial(d.v(), t) as usize];
    for b in d.blocks() {
        for s in subsets_of(*b, t) {
            counts[rank_bits(s.bits()) as usize] += 1;
        }
    }
    counts
}

pub fn strength(d: &Design) -> Result<usize> {
    strength_capped(d, crate::DEFAULT_MAX_RANKS)
}

/// Descending trial from `t = k`; the first constant coverage wins.
pub fn strength_capped(d: &Design, max_ranks: u64) -> Result<usize> {
    for t in (1..=d.k()).rev() {
        check_cap(d.v(), t, max_ranks)?;
        let counts = coverage(d, t);
        if counts.windows(2).all(|w| w[0] == w[1]) {
            return Ok(t);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Design {
        let lines = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        let lists: Vec<Vec<usize>> = lines.iter().map(|l| l.to_vec()).collect();
        Design::from_point_lists(7, 3, &lists).unwrap()
    }

    #[test]
    fn fano_parameters() {
        let d = fano();
        assert_eq!(min_distance(&d), MinDistance::Finite(2));
        assert_eq!(strength(&d).unwrap(), 2);
    }

    #[test]
    fn single_block() {
        let d = Design::from_point_lists(6, 3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(min_distance(&d), MinDistance::Infinite);
        assert_eq!(strength(&d).unwrap(), 0);
        assert_eq!(serde_json::to_string(&MinDistance::Infinite).unwrap(), "\"inf\"");
    }

    #[test]
    fn disjoint_pair() {
        let d = Design::from_point_lists(8, 4, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap();
        assert_eq!(min_distance(&d), MinDistance::Finite(4));
        assert_eq!(strength(&d).unwrap(), 1);
    }
}
