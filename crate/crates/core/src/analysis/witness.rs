use serde::Serialize;

use super::partition::DistancePartition;
use super::transitivity::TransitivityVerdict;
use super::params::MinDistance;
use crate::constructions::UniformPartition;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::group::{flag_orbit_check, ActionClass, PermGroup};
use crate::johnson::{full_mask, KSubset};

/// Intersection of all blocks through a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointClosure {
    pub set: KSubset,
    /// False when no block contains the point; `set` is then the whole ground set.
    pub covered: bool,
}

pub fn point_closure(d: &Design, x: usize) -> PointClosure {
    let mut set = full_mask(d.v());
    let mut covered = false;
    for b in d.blocks().iter().filter(|b| b.contains(x)) {
        set &= b.bits();
        covered = true;
    }
    PointClosure {
        set: KSubset::from_bits(set),
        covered,
    }
}

/// Multiset `{|s ∩ Y_i|}` over the cells of `p`, sorted descending.
pub fn intersection_profile(s: KSubset, p: &UniformPartition) -> Result<Vec<usize>> {
    if s.bits() & !full_mask(p.v()) != 0 {
        return Err(Error::Mismatch(format!(
            "subset {:?} is not inside a {}-set",
            s.points(),
            p.v()
        )));
    }
    let mut profile: Vec<usize> = p.cells().iter().map(|c| c.meet(s)).collect();
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

/// True when every subset in cell `i` meets `y` in exactly `|y| - i` points.
pub fn cells_meet_fixed_set(dp: &DistancePartition, y: KSubset) -> bool {
    let m = y.k();
    (0..dp.cells().len()).all(|i| dp.cell_members(i).all(|s| s.meet(y) + i == m))
}

/// True when all subsets in a cell share one intersection profile with `p`.
pub fn profiles_constant_on_cells(dp: &DistancePartition, p: &UniformPartition) -> Result<bool> {
    for i in 0..dp.cells().len() {
        let mut members = dp.cell_members(i);
        let Some(first) = members.next() else {
            continue;
        };
        let expected = intersection_profile(first, p)?;
        for s in members {
            if intersection_profile(s, p)? != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which shape a completely transitive design with `δ ≥ 3` takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrichotomyCase {
    /// `v = 2k ≥ 6` and two disjoint blocks.
    TwoDisjointBlocks,
    /// `k = 3` and `v/3` pairwise disjoint triples.
    DisjointTriples,
    /// The group is 2-transitive on points.
    TwoTransitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrichotomyVerdict {
    pub case: TrichotomyCase,
    pub flag_transitive: bool,
    pub action: ActionClass,
}

/// Checks flag transitivity on the first block and names the case that holds.
///
/// `delta` and `ct` must come from the same design and group.
pub fn trichotomy_verdict(
    d: &Design,
    g: &PermGroup,
    delta: MinDistance,
    ct: &TransitivityVerdict,
) -> Result<TrichotomyVerdict> {
    if d.len() < 2 {
        return Err(Error::Precondition("need at least two blocks".into()));
    }
    if !delta.at_least(3) {
        return Err(Error::Precondition(format!("minimum distance {delta} is below 3")));
    }
    if !ct.completely_transitive {
        return Err(Error::Precondition("design is not completely transitive".into()));
    }
    let (v, k) = (d.v(), d.k());
    let flag_transitive = flag_orbit_check(g, d, d.blocks()[0])?;
    if !flag_transitive {
        return Err(Error::Contradiction(
            "block stabiliser is not transitive on flags".into(),
        ));
    }
    let disjoint = d
        .blocks()
        .iter()
        .enumerate()
        .all(|(i, a)| d.blocks()[i + 1..].iter().all(|b| a.meet(*b) == 0));
    let action = g.classify_action();
    let case = if v == 2 * k && v >= 6 && d.len() == 2 && disjoint {
        TrichotomyCase::TwoDisjointBlocks
    } else if k == 3 && v == 3 * d.len() && disjoint {
        TrichotomyCase::DisjointTriples
    } else if action.is_two_transitive() {
        TrichotomyCase::TwoTransitive
    } else {
        return Err(Error::Contradiction(format!(
            "none of the three cases holds (action: {})",
            action.label()
        )));
    };
    Ok(TrichotomyVerdict {
        case,
        flag_transitive,
        action,
    })
}
