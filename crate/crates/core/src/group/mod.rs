//! Permutation groups given by generators, with a lazily built stabiliser chain.
//!
//! Group file format: first line `degree v`; every further line is one
//! generator in disjoint-cycle notation over 0-based points, e.g.
//! `(0 1 2)(3 4)`. Blank lines and `#` comments are ignored. The optional
//! comment lines `# order: N` and `# sha256: HEX` are checked on load: the
//! digest covers the generator lines, each terminated by a newline.

mod action;
mod chain;
mod flags;
mod orbits;

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::design::Design;
use crate::error::{Error, Result};
use crate::johnson::{KSubset, MAX_POINTS};
use crate::perm::Permutation;

pub use action::{minimal_block, ActionClass};
pub use chain::StabilizerChain;
pub use flags::{flag_orbit_check, flag_orbit_size};
pub use orbits::{orbit_of_subset, OrbitPartition};

#[derive(Debug)]
pub struct PermGroup {
    v: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            v: self.v,
            generators: self.generators.clone(),
            chain,
        }
    }
}

/// Metadata read from the comment header of a group file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupFileMeta {
    pub title: Option<String>,
    pub order: Option<BigUint>,
    pub sha256: Option<String>,
}

impl PermGroup {
    pub fn new(v: usize, generators: Vec<Permutation>) -> Result<Self> {
        if v == 0 || v > MAX_POINTS {
            return Err(Error::GroundSetSize(v));
        }
        if generators.is_empty() {
            return Err(Error::InvalidPermutation("a group needs at least one generator".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != v) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} instead of {v}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            v,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(v: usize) -> Result<Self> {
        PermGroup::new(v, vec![Permutation::identity(v)])
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.v, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Same group with extra generators appended (the chain is rebuilt).
    pub fn with_generators(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        PermGroup::new(self.v, gens)
    }

    /// Checks that every generator maps every block of `d` into `d`.
    pub fn preserves(&self, d: &Design) -> Result<()> {
        if d.v() != self.v {
            return Err(Error::Mismatch(format!(
                "design on {} points, group of degree {}",
                d.v(),
                self.v
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            for &b in d.blocks() {
                if !d.contains(g.apply_unchecked(b)) {
                    return Err(Error::NotPreserved {
                        generator: i,
                        block: b.points(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, g: usize, s: KSubset) -> KSubset {
        self.generators[g].apply_unchecked(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.v);
        for g in &self.generators {
            let _ = writeln!(s, "{g}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<PermGroup> {
        Self::parse_with_meta(text).map(|(g, _)| g)
    }

    /// Parses a group file and checks its recorded digest and order, when present.
    pub fn parse_with_meta(text: &str) -> Result<(PermGroup, GroupFileMeta)> {
        let mut meta = GroupFileMeta::default();
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        let mut digest_input = String::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            if let Some(comment) = raw.trim_start().strip_prefix('#') {
                let c = comment.trim();
                if let Some(o) = c.strip_prefix("order:") {
                    let o = o.trim();
                    meta.order = Some(
                        o.parse::<BigUint>()
                            .map_err(|_| Error::parse(lineno, format!("bad order {o:?}")))?,
                    );
                } else if let Some(h) = c.strip_prefix("sha256:") {
                    meta.sha256 = Some(h.trim().to_ascii_lowercase());
                } else if meta.title.is_none() && !c.contains(':') {
                    meta.title = Some(c.to_string());
                }
                continue;
            }
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match degree {
                None => {
                    let v = line
                        .strip_prefix("degree")
                        .map(str::trim)
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(lineno, "first line must be `degree v`"))?;
                    degree = Some(v);
                }
                Some(v) => {
                    let g = Permutation::parse_cycles(v, line)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                    digest_input.push_str(line);
                    digest_input.push('\n');
                    gens.push(g);
                }
            }
        }
        let v = degree.ok_or_else(|| Error::parse(0, "missing `degree v` line"))?;
        if let Some(expected) = &meta.sha256 {
            let got = hex_digest(&digest_input);
            if &got != expected {
                return Err(Error::Integrity(format!(
                    "generator digest {got} does not match recorded {expected}"
                )));
            }
        }
        let group = PermGroup::new(v, gens)?;
        if let Some(expected) = &meta.order {
            let got = group.order();
            if &got != expected {
                return Err(Error::Integrity(format!(
                    "stabiliser chain gives order {got}, file records {expected}"
                )));
            }
        }
        Ok((group, meta))
    }
}

pub(crate) fn hex_digest(s: &str) -> String {
    let d = Sha256::digest(s.as_bytes());
    d.iter().fold(String::with_capacity(64), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let t = Permutation::parse_cycles(n, "(0 1)").unwrap();
        let c = Permutation::new((1..n).chain([0]).collect()).unwrap();
        PermGroup::new(n, vec![t, c]).unwrap()
    }

    #[test]
    fn order_of_sym4() {
        assert_eq!(sym(4).order(), BigUint::from(24u32));
    }

    #[test]
    fn redundant_generators_do_not_change_order() {
        let g = sym(6);
        let a = &g.generators()[0];
        let b = &g.generators()[1];
        let h = g.with_generators(&[a.then(b), b.then(b).then(a)]).unwrap();
        assert_eq!(h.order(), g.order());
    }

    #[test]
    fn file_round_trip() {
        let g = sym(5);
        let parsed = PermGroup::parse(&g.to_text()).unwrap();
        assert_eq!(parsed.generators(), g.generators());
    }

    #[test]
    fn file_metadata_checked() {
        let body = "(0 1)\n(0 1 2 3)\n";
        let digest = hex_digest(body);
        let good = format!("# Sym(4)\n# order: 24\n# sha256: {digest}\ndegree 4\n{body}");
        let (g, meta) = PermGroup::parse_with_meta(&good).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert_eq!(meta.title.as_deref(), Some("Sym(4)"));
        let bad_order = good.replace("order: 24", "order: 12");
        assert!(matches!(PermGroup::parse(&bad_order), Err(Error::Integrity(_))));
        let bad_digest = good.replace("(0 1 2 3)", "(0 2 1 3)");
        assert!(matches!(PermGroup::parse(&bad_digest), Err(Error::Integrity(_))));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(PermGroup::parse("(0 1)\n").is_err());
        assert!(PermGroup::parse("degree 3\n(0 1 5)\n").is_err());
        assert!(PermGroup::parse("degree 3\n").is_err());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let g = Permutation::identity(3);
        assert!(PermGroup::new(4, vec![g]).is_err());
    }
}
