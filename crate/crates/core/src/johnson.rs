//! Vertex arithmetic of the Johnson graph `J(v,k)`: subsets as bit words,
//! colexicographic ranking, distance and adjacency.

use std::fmt;

use crate::design::Design;
use crate::error::{Error, Result};

/// Largest supported number of points; a subset is a single `u64`.
pub const MAX_POINTS: usize = 64;

const fn binomial_table() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n <= 64 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
}

static BINOMIAL: [[u64; 65]; 65] = binomial_table();

/// `C(n,k)` for `n <= 64`; zero when `k > n`.
#[inline]
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        BINOMIAL[n][k]
    }
}

/// The point set `{0, .., v-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet(usize);

impl GroundSet {
    pub fn new(v: usize) -> Result<Self> {
        if (1..=MAX_POINTS).contains(&v) {
            Ok(GroundSet(v))
        } else {
            Err(Error::GroundSetSize(v))
        }
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0
    }

    #[inline]
    pub fn mask(self) -> u64 {
        full_mask(self.0)
    }
}

#[inline]
pub(crate) fn full_mask(v: usize) -> u64 {
    if v >= 64 {
        u64::MAX
    } else {
        (1u64 << v) - 1
    }
}

/// A subset of points stored as a bit word; bit `x` set means point `x` belongs.
///
/// Ordering on the raw word is colexicographic order, the ranking order used
/// everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KSubset(u64);

impl KSubset {
    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        KSubset(bits)
    }

    pub fn from_points(points: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in points {
            if p >= MAX_POINTS {
                return Err(Error::GroundSetSize(p + 1));
            }
            if bits >> p & 1 == 1 {
                return Err(Error::Mismatch(format!("repeated point {p}")));
            }
            bits |= 1 << p;
        }
        Ok(KSubset(bits))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn k(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && (self.0 >> x) & 1 == 1
    }

    #[inline]
    pub const fn meet(self, other: KSubset) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    #[inline]
    pub fn is_subset_of(self, other: KSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{0..v-1}`.
    #[inline]
    pub fn complement(self, v: GroundSet) -> KSubset {
        KSubset(!self.0 & v.mask())
    }

    pub fn points(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Checks that this is a `k`-subset of `v`.
    pub fn check(self, v: GroundSet, k: usize) -> Result<()> {
        if self.k() != k || self.0 & !v.mask() != 0 {
            Err(Error::SubsetMismatch {
                bits: self.0,
                v: v.size(),
                k,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

/// Dense index of a `k`-subset in colexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetRank(pub u64);

/// Colex rank of a bit word, no validation.
#[inline]
pub fn rank_bits(mut bits: u64) -> u64 {
    let mut r = 0u64;
    let mut i = 1usize;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        r += BINOMIAL[c][i];
        i += 1;
        bits &= bits - 1;
    }
    r
}

/// Inverse of [`rank_bits`] for subsets of size `k`, no validation.
#[inline]
pub fn unrank_bits(mut r: u64, k: usize) -> u64 {
    let mut bits = 0u64;
    let mut c = 64usize;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= r
        c -= 1;
        while BINOMIAL[c][i] > r {
            c -= 1;
        }
        r -= BINOMIAL[c][i];
        bits |= 1 << c;
    }
    bits
}

pub fn rank(s: KSubset, v: GroundSet) -> Result<SubsetRank> {
    s.check(v, s.k())?;
    Ok(SubsetRank(rank_bits(s.bits())))
}

pub fn unrank(i: SubsetRank, v: GroundSet, k: usize) -> Result<KSubset> {
    let count = binomial(v.size(), k);
    if i.0 >= count {
        return Err(Error::RankOutOfRange {
            rank: i.0,
            v: v.size(),
            k,
            count,
        });
    }
    Ok(KSubset(unrank_bits(i.0, k)))
}

/// Graph distance in `J(v,k)`: `k - |a ∩ b|`.
pub fn distance(a: KSubset, b: KSubset) -> Result<usize> {
    if a.k() != b.k() {
        return Err(Error::Mismatch(format!(
            "subsets of sizes {} and {}",
            a.k(),
            b.k()
        )));
    }
    Ok(a.k() - a.meet(b))
}

/// All `k(v-k)` neighbours of `a` in `J(v,k)`.
pub fn neighbors(a: KSubset, v: GroundSet) -> Result<Vec<KSubset>> {
    a.check(v, a.k())?;
    let k = a.k();
    if k == 0 || k == v.size() {
        return Err(Error::Degenerate(format!(
            "J({}, {k}) has a single vertex",
            v.size()
        )));
    }
    let out = a.complement(v);
    let mut res = Vec::with_capacity(k * (v.size() - k));
    for x in a.iter() {
        for y in out.iter() {
            res.push(KSubset(a.0 ^ (1 << x) ^ (1 << y)));
        }
    }
    Ok(res)
}

/// Colexicographic successor of a nonzero word with the same popcount.
#[inline]
pub(crate) fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return 0;
    }
    (((r ^ x) >> 2) / c) | r
}

/// All `k`-subsets of `{0..v-1}` in rank order.
pub struct Combinations {
    next: u64,
    remaining: u64,
}

impl Combinations {
    pub fn new(v: usize, k: usize) -> Self {
        Combinations {
            next: full_mask(k),
            remaining: binomial(v, k),
        }
    }
}

impl Iterator for Combinations {
    type Item = KSubset;

    #[inline]
    fn next(&mut self) -> Option<KSubset> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cur = self.next;
        if self.remaining > 0 {
            self.next = next_combination(cur);
        }
        Some(KSubset(cur))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

/// Scatter the low bits of `compact` onto the set bits of `mask`.
#[inline]
pub(crate) fn deposit(mut compact: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while compact != 0 && m != 0 {
        let low = m & m.wrapping_neg();
        if compact & 1 == 1 {
            out |= low;
        }
        compact >>= 1;
        m &= m - 1;
    }
    out
}

/// All `k`-subsets of the points in `within`, in colex order.
pub fn subsets_of(within: KSubset, k: usize) -> impl Iterator<Item = KSubset> {
    let n = within.k();
    let mask = within.bits();
    Combinations::new(n, k).map(move |c| KSubset(deposit(c.bits(), mask)))
}

/// Replaces every block by its complement; the result lives in `J(v, v-k)`.
pub fn complement_map(d: &Design) -> Design {
    let v = d.ground_set();
    let blocks = d.blocks().iter().map(|b| b.complement(v)).collect();
    Design::new(v.size(), v.size() - d.k(), blocks).expect("complements of a valid design")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[usize]) -> KSubset {
        KSubset::from_points(points).unwrap()
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(24, 8), 735_471);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn rank_first_and_last() {
        let v = GroundSet::new(7).unwrap();
        assert_eq!(rank(set(&[0, 1, 2]), v).unwrap(), SubsetRank(0));
        assert_eq!(rank(set(&[4, 5, 6]), v).unwrap(), SubsetRank(34));
        assert_eq!(unrank(SubsetRank(0), v, 3).unwrap(), set(&[0, 1, 2]));
        assert_eq!(unrank(SubsetRank(34), v, 3).unwrap(), set(&[4, 5, 6]));
    }

    #[test]
    fn unrank_out_of_range() {
        let v = GroundSet::new(7).unwrap();
        assert!(matches!(
            unrank(SubsetRank(35), v, 3),
            Err(Error::RankOutOfRange { count: 35, .. })
        ));
    }

    #[test]
    fn rank_rejects_out_of_width() {
        let v = GroundSet::new(5).unwrap();
        assert!(rank(set(&[1, 7]), v).is_err());
    }

    #[test]
    fn ground_set_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(65).is_err());
        assert_eq!(GroundSet::new(64).unwrap().mask(), u64::MAX);
    }

    #[test]
    fn combinations_follow_rank_order() {
        for (i, s) in Combinations::new(9, 4).enumerate() {
            assert_eq!(rank_bits(s.bits()), i as u64);
        }
        assert_eq!(Combinations::new(64, 64).count(), 1);
        assert_eq!(Combinations::new(64, 1).count(), 64);
        assert_eq!(Combinations::new(6, 0).count(), 1);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(set(&[0, 1, 2]), set(&[0, 1, 2])).unwrap(), 0);
        assert_eq!(distance(set(&[0, 1, 2]), set(&[3, 4, 5])).unwrap(), 3);
        assert!(distance(set(&[0, 1]), set(&[0, 1, 2])).is_err());
    }

    #[test]
    fn neighbors_examples() {
        let v7 = GroundSet::new(7).unwrap();
        assert_eq!(neighbors(set(&[0, 1, 2]), v7).unwrap().len(), 12);
        let v2 = GroundSet::new(2).unwrap();
        assert_eq!(neighbors(set(&[0]), v2).unwrap(), vec![set(&[1])]);
        assert!(matches!(
            neighbors(set(&[0, 1]), v2),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn neighbors_of_13_4_are_adjacent_and_distinct() {
        let v = GroundSet::new(13).unwrap();
        for a in Combinations::new(13, 4) {
            let ns = neighbors(a, v).unwrap();
            assert_eq!(ns.len(), 36);
            let mut sorted = ns.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), 36);
            assert!(ns.iter().all(|&b| distance(a, b).unwrap() == 1));
        }
    }

    #[test]
    fn subsets_of_mask() {
        let within = set(&[1, 4, 6, 9]);
        let got: Vec<_> = subsets_of(within, 2).collect();
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|s| s.is_subset_of(within) && s.k() == 2));
    }
}
