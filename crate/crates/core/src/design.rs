//! Designs: duplicate-free sets of `k`-subsets, and their plain-text file format.
//!
//! File format: a header line `v k n`, then `n` lines of `k` sorted 0-based
//! points separated by spaces. Text after `#` is a comment; blank lines are
//! skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::johnson::{GroundSet, KSubset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: GroundSet,
    k: usize,
    blocks: Vec<KSubset>,
}

impl Design {
    /// Validates and stores the blocks in rank (colex) order.
    pub fn new(v: usize, k: usize, mut blocks: Vec<KSubset>) -> Result<Self> {
        let v = GroundSet::new(v)?;
        if k > v.size() {
            return Err(Error::InvalidDesign(format!("k = {k} exceeds v = {}", v.size())));
        }
        if blocks.is_empty() {
            return Err(Error::InvalidDesign("no blocks".into()));
        }
        for b in &blocks {
            b.check(v, k)?;
        }
        blocks.sort_unstable();
        if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDesign(format!("duplicate block {:?}", w[0])));
        }
        Ok(Design { v, k, blocks })
    }

    pub fn from_point_lists(v: usize, k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let blocks = lists
            .iter()
            .map(|l| KSubset::from_points(l))
            .collect::<Result<Vec<_>>>()?;
        Design::new(v, k, blocks)
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.v.size()
    }

    #[inline]
    pub fn ground_set(&self) -> GroundSet {
        self.v
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn blocks(&self) -> &[KSubset] {
        &self.blocks
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, s: KSubset) -> bool {
        self.blocks.binary_search(&s).is_ok()
    }

    /// Blocks through `point` with that point removed; points above it shift down by one.
    pub fn derive(&self, point: usize) -> Result<Design> {
        if point >= self.v() {
            return Err(Error::Precondition(format!(
                "derivation point {point} is not below v = {}",
                self.v()
            )));
        }
        if self.k == 0 || self.v() == 1 {
            return Err(Error::Degenerate("cannot derive a design with k = 0".into()));
        }
        let low = (1u64 << point) - 1;
        let blocks: Vec<KSubset> = self
            .blocks
            .iter()
            .filter(|b| b.contains(point))
            .map(|b| {
                let bits = b.bits();
                KSubset::from_bits((bits & low) | ((bits >> 1) & !low))
            })
            .collect();
        Design::new(self.v() - 1, self.k - 1, blocks)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.v(), self.k, self.blocks.len());
        for b in &self.blocks {
            let pts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", pts.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Design> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut lists = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(lineno, format!("not an integer: {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            match header {
                None => {
                    if nums.len() != 3 {
                        return Err(Error::parse(lineno, "header must be `v k n`"));
                    }
                    header = Some((nums[0], nums[1], nums[2]));
                }
                Some((v, k, _)) => {
                    if nums.len() != k {
                        return Err(Error::parse(
                            lineno,
                            format!("expected {k} points, found {}", nums.len()),
                        ));
                    }
                    if nums.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(Error::parse(lineno, "points must be strictly increasing"));
                    }
                    if let Some(&p) = nums.iter().find(|&&p| p >= v) {
                        return Err(Error::parse(lineno, format!("point {p} is not below v = {v}")));
                    }
                    lists.push(nums);
                }
            }
        }
        let (v, k, n) = header.ok_or_else(|| Error::parse(0, "missing header"))?;
        if lists.len() != n {
            return Err(Error::parse(
                0,
                format!("header announces {n} blocks, found {}", lists.len()),
            ));
        }
        Design::from_point_lists(v, k, &lists)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let d = Design::from_point_lists(6, 3, &[vec![3, 4, 5], vec![0, 1, 2]]).unwrap();
        let text = d.to_text();
        assert_eq!(text, "6 3 2\n0 1 2\n3 4 5\n");
        assert_eq!(Design::parse(&text).unwrap(), d);
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let d = Design::parse("# two lines\n\n4 2 2 # header\n0 1\n\n2 3\n").unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Design::parse("4 2 2\n0 1\n").is_err());
        assert!(Design::parse("4 2 1\n1 0\n").is_err());
        assert!(Design::parse("4 2 1\n0 4\n").is_err());
        assert!(Design::parse("4 2 2\n0 1\n0 1\n").is_err());
        assert!(Design::parse("").is_err());
        assert!(Design::new(4, 2, vec![]).is_err());
    }

    #[test]
    fn derive_relabels() {
        let d = Design::from_point_lists(5, 3, &[vec![0, 2, 4], vec![1, 2, 3], vec![0, 1, 4]])
            .unwrap();
        let e = d.derive(2).unwrap();
        assert_eq!(e.v(), 4);
        assert_eq!(e.k(), 2);
        let got: Vec<Vec<usize>> = e.blocks().iter().map(|b| b.points()).collect();
        assert_eq!(got, vec![vec![1, 2], vec![0, 3]]);
    }
}
