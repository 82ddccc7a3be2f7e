//! Point permutations of `{0..v-1}` acting on the right: `x^g = g.image(x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::johnson::{KSubset, MAX_POINTS};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_POINTS {
            return Err(Error::InvalidPermutation(format!("degree {n} outside 1..=64")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1, 2], [3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} is not below the degree {n}"
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} occurs twice in the cycle notation"
                    )));
                }
                touched[x] = true;
                images[x] = c[(i + 1) % c.len()];
            }
        }
        Permutation::new(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self` followed by `other`: `x^(self*other) = (x^self)^other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Smallest moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Image of a point set.
    pub fn apply(&self, s: KSubset) -> Result<KSubset> {
        if s.bits() >> 1 >> (self.degree() - 1) != 0 {
            return Err(Error::Mismatch(format!(
                "subset {s:?} is not inside the degree-{} domain",
                self.degree()
            )));
        }
        Ok(self.apply_unchecked(s))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, s: KSubset) -> KSubset {
        let mut out = 0u64;
        for x in s.iter() {
            out |= 1u64 << self.images[x];
        }
        KSubset::from_bits(out)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.image(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.image(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Byte-indexed lookup tables that map a subset word in eight table reads.
#[derive(Clone)]
pub(crate) struct SubsetMapper {
    tables: Vec<[u64; 256]>,
}

impl SubsetMapper {
    pub(crate) fn new(g: &Permutation) -> Self {
        let chunks = g.degree().div_ceil(8);
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for (byte, slot) in table.iter_mut().enumerate() {
                let mut out = 0u64;
                for bit in 0..8 {
                    let x = c * 8 + bit;
                    if byte >> bit & 1 == 1 && x < g.degree() {
                        out |= 1u64 << g.image(x);
                    }
                }
                *slot = out;
            }
        }
        SubsetMapper { tables }
    }

    #[inline]
    pub(crate) fn map(&self, bits: u64) -> u64 {
        let mut out = 0u64;
        for (c, t) in self.tables.iter().enumerate() {
            out |= t[((bits >> (8 * c)) & 0xff) as usize];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_on_subset() {
        let g = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let s = KSubset::from_points(&[0, 2]).unwrap();
        assert_eq!(g.apply(s).unwrap(), KSubset::from_points(&[1, 2]).unwrap());
        let id = Permutation::identity(3);
        assert_eq!(id.apply(s).unwrap(), s);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = Permutation::parse_cycles(6, "(0 1 2)(3 4)").unwrap();
        assert_eq!(g.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::parse_cycles(6, &g.to_string()).unwrap(), g);
        assert!(Permutation::parse_cycles(4, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(4, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(4, "(0 5)").is_err());
        assert!(Permutation::parse_cycles(4, "(0 1").is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        // 0 -> 1 -> 2
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn mapper_agrees_with_pointwise_image() {
        let g = Permutation::parse_cycles(20, "(0 19 3)(5 11)(7 8 9 10)").unwrap();
        let m = SubsetMapper::new(&g);
        for bits in [0u64, 1, 0b1011_0110, (1 << 19) | 1, 0xf_ffff] {
            let s = KSubset::from_bits(bits);
            assert_eq!(m.map(bits), g.apply_unchecked(s).bits());
        }
    }
}
