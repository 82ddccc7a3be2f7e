use crate::design::Design;
use crate::error::{Error, Result};
use crate::johnson::{full_mask, subsets_of, Combinations, GroundSet, KSubset};

/// A partition of `{0..v-1}` into `b` cells of size `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformPartition {
    v: usize,
    a: usize,
    cells: Vec<KSubset>,
}

impl UniformPartition {
    pub fn new(v: usize, cells: &[Vec<usize>]) -> Result<Self> {
        GroundSet::new(v)?;
        let mut seen = 0u64;
        let mut out = Vec::with_capacity(cells.len());
        let a = cells.first().map_or(0, Vec::len);
        if a == 0 {
            return Err(Error::Mismatch("partition cells must be nonempty".into()));
        }
        for cell in cells {
            let s = KSubset::from_points(cell)?;
            if cell.len() != a {
                return Err(Error::Mismatch(format!("cell {cell:?} does not have size {a}")));
            }
            if s.bits() & seen != 0 {
                return Err(Error::Mismatch(format!("cell {cell:?} overlaps an earlier cell")));
            }
            seen |= s.bits();
            out.push(s);
        }
        if seen != full_mask(v) {
            return Err(Error::Mismatch(format!("cells do not cover {{0..{}}}", v - 1)));
        }
        Ok(UniformPartition { v, a, cells: out })
    }

    /// Cells `Y_i = {i·a, …, i·a + a − 1}`.
    pub fn standard(a: usize, b: usize) -> Result<Self> {
        let cells: Vec<Vec<usize>> = (0..b).map(|i| (i * a..(i + 1) * a).collect()).collect();
        UniformPartition::new(a * b, &cells)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Cell size.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of cells.
    pub fn b(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[KSubset] {
        &self.cells
    }

    pub fn cell_points(&self) -> Vec<Vec<usize>> {
        self.cells.iter().map(|c| c.points()).collect()
    }
}

/// The `k`-sets whose meet with `y` is as large as possible: every `k`-set
/// containing `y` when `k ≥ |y|`, otherwise every `k`-subset of `y`.
pub fn maximal_meet(v: usize, k: usize, y: &[usize]) -> Result<Design> {
    let g = GroundSet::new(v)?;
    let ys = KSubset::from_points(y)?;
    if ys.bits() == 0 || ys.bits() & !g.mask() != 0 || ys.bits() == g.mask() {
        return Err(Error::Degenerate(format!("{y:?} must be a proper nonempty subset of the points")));
    }
    if k > v {
        return Err(Error::Mismatch(format!("k = {k} exceeds v = {v}")));
    }
    let m = ys.k();
    let blocks: Vec<KSubset> = if k >= m {
        subsets_of(ys.complement(g), k - m)
            .map(|s| KSubset::from_bits(s.bits() | ys.bits()))
            .collect()
    } else {
        subsets_of(ys, k).collect()
    };
    Design::new(v, k, blocks)
}

/// All `k`-subsets of either half of a `2a`-set split into two cells of size `a`.
pub fn within_two_cells(a: usize, k: usize) -> Result<Design> {
    if k == 0 || k > a {
        return Err(Error::Mismatch(format!("need 1 ≤ k ≤ a, got k = {k}, a = {a}")));
    }
    let p = UniformPartition::standard(a, 2)?;
    let blocks: Vec<KSubset> = p.cells().iter().flat_map(|&c| subsets_of(c, k)).collect();
    Design::new(2 * a, k, blocks)
}

/// All `k`-sets meeting every cell of `p` in at most one point.
pub fn partial_transversals(p: &UniformPartition, k: usize) -> Result<Design> {
    if k == 0 || k > p.b() {
        return Err(Error::Mismatch(format!("need 1 ≤ k ≤ b = {}, got {k}", p.b())));
    }
    let mut blocks = Vec::new();
    for chosen in Combinations::new(p.b(), k) {
        let cells: Vec<Vec<usize>> = chosen.iter().map(|i| p.cells()[i].points()).collect();
        let mut idx = vec![0usize; k];
        loop {
            let bits = cells.iter().zip(&idx).fold(0u64, |acc, (c, &j)| acc | 1 << c[j]);
            blocks.push(KSubset::from_bits(bits));
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] < p.a() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Design::new(p.v(), k, blocks)
}

/// Partial transversals of size `k` of `b` pairs (`v = 2b`).
pub fn transversals_of_pairs(b: usize, k: usize) -> Result<Design> {
    partial_transversals(&UniformPartition::standard(2, b)?, k)
}

/// Triples meeting each of `b` cells of size `a` in at most one point.
pub fn transversal_triples(a: usize, b: usize) -> Result<Design> {
    partial_transversals(&UniformPartition::standard(a, b)?, 3)
}

/// Pairs meeting each of `b` cells of size `a` in at most one point.
pub fn transversal_pairs(a: usize, b: usize) -> Result<Design> {
    partial_transversals(&UniformPartition::standard(a, b)?, 2)
}

/// Unions of `m` cells of `p`; with `a = 2` and `m = k/2` these are the
/// `k`-sets made of whole pairs.
pub fn unions_of_cells(p: &UniformPartition, m: usize) -> Result<Design> {
    if m == 0 || m > p.b() {
        return Err(Error::Mismatch(format!("need 1 ≤ m ≤ b = {}, got {m}", p.b())));
    }
    let blocks: Vec<KSubset> = Combinations::new(p.b(), m)
        .map(|chosen| KSubset::from_bits(chosen.iter().fold(0, |acc, i| acc | p.cells()[i].bits())))
        .collect();
    Design::new(p.v(), m * p.a(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::binomial;

    #[test]
    fn maximal_meet_counts() {
        let d = maximal_meet(6, 3, &[0, 1]).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.blocks().iter().all(|b| b.contains(0) && b.contains(1)));
        let d = maximal_meet(7, 2, &[0, 1, 2, 3]).unwrap();
        assert_eq!(d.len(), 6);
        assert!(maximal_meet(5, 2, &[]).is_err());
        assert!(maximal_meet(3, 2, &[0, 1, 2]).is_err());
    }

    #[test]
    fn two_cell_counts() {
        assert_eq!(within_two_cells(3, 2).unwrap().len(), 6);
        let d = within_two_cells(4, 4).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn transversal_counts() {
        assert_eq!(transversals_of_pairs(4, 2).unwrap().len(), 24);
        assert_eq!(transversals_of_pairs(3, 3).unwrap().len(), 8);
        assert_eq!(transversal_triples(3, 3).unwrap().len(), 27);
        assert_eq!(transversal_pairs(3, 2).unwrap().len(), 9);
        assert_eq!(
            transversal_triples(3, 4).unwrap().len() as u64,
            binomial(4, 3) * 27
        );
    }

    #[test]
    fn partition_validation() {
        assert!(UniformPartition::new(4, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(UniformPartition::new(4, &[vec![0, 1], vec![2]]).is_err());
        assert!(UniformPartition::new(5, &[vec![0, 1], vec![2, 3]]).is_err());
        let p = UniformPartition::standard(2, 3).unwrap();
        assert_eq!(p.cell_points(), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    }
}
