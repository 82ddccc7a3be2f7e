use std::collections::HashSet;

use super::PermGroup;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::johnson::{rank_bits, KSubset};
use crate::perm::SubsetMapper;

/// Size of the orbit of `(x, y)` under the set stabiliser `G_a`, for the first
/// point `x` of `a` and the first point `y` outside it.
///
/// The stabiliser is never formed: the `G`-orbit of the flag `(a, x, y)` is
/// enumerated and restricted to flags whose subset is `a`.
pub fn flag_orbit_size(g: &PermGroup, a: KSubset) -> Result<usize> {
    let v = g.degree();
    a.check(crate::johnson::GroundSet::new(v)?, a.k())?;
    let outside = a.complement(crate::johnson::GroundSet::new(v)?);
    let (Some(x), Some(y)) = (a.iter().next(), outside.iter().next()) else {
        return Err(Error::Degenerate("flags need a point inside and a point outside".into()));
    };
    let mappers: Vec<SubsetMapper> = g.generators().iter().map(SubsetMapper::new).collect();
    let n = v as u64;
    let encode = |bits: u64, x: usize, y: usize| (rank_bits(bits) * n + x as u64) * n + y as u64;
    let mut seen = HashSet::new();
    seen.insert(encode(a.bits(), x, y));
    let mut stack = vec![(a.bits(), x, y)];
    let mut restricted = 1usize;
    while let Some((bits, x, y)) = stack.pop() {
        for (gen, m) in g.generators().iter().zip(&mappers) {
            let img = m.map(bits);
            let (x2, y2) = (gen.image(x), gen.image(y));
            if seen.insert(encode(img, x2, y2)) {
                if img == a.bits() {
                    restricted += 1;
                }
                stack.push((img, x2, y2));
            }
        }
    }
    Ok(restricted)
}

/// True iff the stabiliser of block `a` is transitive on `a × (X \ a)`.
pub fn flag_orbit_check(g: &PermGroup, d: &Design, a: KSubset) -> Result<bool> {
    if !d.contains(a) {
        return Err(Error::NotABlock(a.points()));
    }
    let size = flag_orbit_size(g, a)?;
    Ok(size == d.k() * (d.v() - d.k()))
}
