use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use super::PermGroup;
use crate::error::{Error, Result};
use crate::johnson::{binomial, rank_bits, unrank_bits, Combinations, KSubset, SubsetRank};
use crate::perm::SubsetMapper;

/// Orbits of a group on all `k`-subsets, in rank space.
///
/// Cells are ordered by their smallest rank and each cell is sorted.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    v: usize,
    k: usize,
    orbit_of: Vec<u32>,
    cells: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<u64>] {
        &self.cells
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn orbit_index(&self, r: SubsetRank) -> usize {
        self.orbit_of[r.0 as usize] as usize
    }

    pub fn representative(&self, i: usize) -> KSubset {
        KSubset::from_bits(unrank_bits(self.cells[i][0], self.k))
    }

    /// `m[i][j]` is the least Johnson distance from a member of orbit `i` to one of orbit `j`.
    ///
    /// Distances are group-invariant, so one representative per row suffices.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.cells.len();
        let mut m = vec![vec![usize::MAX; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            let rep = self.representative(i).bits();
            for (s, &j) in Combinations::new(self.v, self.k).zip(&self.orbit_of) {
                let d = self.k - (rep & s.bits()).count_ones() as usize;
                let slot = &mut row[j as usize];
                *slot = (*slot).min(d);
            }
        }
        m
    }

    pub fn members(&self, i: usize) -> impl Iterator<Item = KSubset> + '_ {
        let k = self.k;
        self.cells[i]
            .iter()
            .map(move |&r| KSubset::from_bits(unrank_bits(r, k)))
    }
}

impl PermGroup {
    /// Orbits on points, each sorted, ordered by smallest point.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in self.generators() {
                    let y = g.image(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() == 1
    }

    /// Number of orbits on ordered pairs of distinct points.
    pub fn pair_orbit_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n * n];
        let mut count = 0;
        for x in 0..n {
            for y in 0..n {
                if x == y || seen[x * n + y] {
                    continue;
                }
                count += 1;
                seen[x * n + y] = true;
                let mut queue = vec![(x, y)];
                while let Some((a, b)) = queue.pop() {
                    for g in self.generators() {
                        let (c, d) = (g.image(a), g.image(b));
                        if !seen[c * n + d] {
                            seen[c * n + d] = true;
                            queue.push((c, d));
                        }
                    }
                }
            }
        }
        count
    }

    pub fn orbits_on_ksubsets(&self, k: usize) -> Result<OrbitPartition> {
        self.orbits_on_ksubsets_capped(k, crate::DEFAULT_MAX_RANKS)
    }

    /// Seeded breadth-first search over ranks, one `u32` orbit label per rank.
    pub fn orbits_on_ksubsets_capped(&self, k: usize, max_ranks: u64) -> Result<OrbitPartition> {
        let v = self.degree();
        if k == 0 || k > v {
            return Err(Error::Precondition(format!("k = {k} must satisfy 1 <= k <= v = {v}")));
        }
        let count = binomial(v, k);
        if count > max_ranks {
            return Err(Error::MemoryCap {
                v,
                k,
                count,
                cap: max_ranks,
            });
        }
        let mappers: Vec<SubsetMapper> = self.generators().iter().map(SubsetMapper::new).collect();
        let n = count as usize;
        let mut orbit_of = vec![u32::MAX; n];
        let mut cells: Vec<Vec<u64>> = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if orbit_of[start] != u32::MAX {
                continue;
            }
            let id = cells.len() as u32;
            let mut cell = vec![start as u64];
            orbit_of[start] = id;
            queue.push_back(unrank_bits(start as u64, k));
            while let Some(bits) = queue.pop_front() {
                for m in &mappers {
                    let img = m.map(bits);
                    let r = rank_bits(img) as usize;
                    if orbit_of[r] == u32::MAX {
                        orbit_of[r] = id;
                        cell.push(r as u64);
                        queue.push_back(img);
                    }
                }
            }
            cell.sort_unstable();
            cells.push(cell);
        }
        Ok(OrbitPartition {
            v,
            k,
            orbit_of,
            cells,
        })
    }

    /// `|G| / orbit length`, the order of a set stabiliser in that orbit.
    pub fn stabilizer_order(&self, orbit_len: usize) -> BigUint {
        self.order() / BigUint::from(orbit_len)
    }
}

/// The orbit of a single subset, sorted in rank order.
pub fn orbit_of_subset(g: &PermGroup, s: KSubset) -> Vec<KSubset> {
    let mappers: Vec<SubsetMapper> = g.generators().iter().map(SubsetMapper::new).collect();
    let mut seen = HashSet::new();
    seen.insert(s.bits());
    let mut queue = vec![s.bits()];
    while let Some(bits) = queue.pop() {
        for m in &mappers {
            let img = m.map(bits);
            if seen.insert(img) {
                queue.push(img);
            }
        }
    }
    let mut out: Vec<KSubset> = seen.into_iter().map(KSubset::from_bits).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn sym(n: usize) -> PermGroup {
        let t = Permutation::parse_cycles(n, "(0 1)").unwrap();
        let c = Permutation::new((1..n).chain([0]).collect()).unwrap();
        PermGroup::new(n, vec![t, c]).unwrap()
    }

    #[test]
    fn symmetric_group_is_homogeneous() {
        let orbits = sym(5).orbits_on_ksubsets(2).unwrap();
        assert_eq!(orbits.sizes(), vec![10]);
    }

    #[test]
    fn cyclic_group_orbits_on_pairs() {
        let c = PermGroup::new(6, vec![Permutation::new(vec![1, 2, 3, 4, 5, 0]).unwrap()]).unwrap();
        let o = c.orbits_on_ksubsets(2).unwrap();
        // differences 1, 2 give orbits of 6, difference 3 gives 3
        let mut sizes = o.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6, 6]);
        for (i, cell) in o.cells().iter().enumerate() {
            for &r in cell {
                assert_eq!(o.orbit_index(SubsetRank(r)), i);
            }
        }
    }

    #[test]
    fn memory_cap_refuses() {
        let err = sym(30).orbits_on_ksubsets_capped(15, 1000).unwrap_err();
        assert!(matches!(err, Error::MemoryCap { .. }));
    }

    #[test]
    fn pair_orbits_of_cycle() {
        let c = PermGroup::new(5, vec![Permutation::new(vec![1, 2, 3, 4, 0]).unwrap()]).unwrap();
        assert_eq!(c.pair_orbit_count(), 4);
        assert_eq!(sym(5).pair_orbit_count(), 1);
    }

    #[test]
    fn single_orbit() {
        let g = sym(6);
        let o = orbit_of_subset(&g, KSubset::from_points(&[0, 1]).unwrap());
        assert_eq!(o.len(), 15);
    }
}
