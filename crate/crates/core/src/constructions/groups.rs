use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Generator files shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BundledGroup {
    M24,
    M23,
    M22,
    M12,
    M11,
    /// `M11` in its 3-transitive action on 12 points.
    M11On12,
    /// `PSL(2,11)` on 11 points, preserving the quadratic-residue biplane.
    L2_11,
}

impl BundledGroup {
    pub const ALL: [BundledGroup; 7] = [
        BundledGroup::M24,
        BundledGroup::M23,
        BundledGroup::M22,
        BundledGroup::M12,
        BundledGroup::M11,
        BundledGroup::M11On12,
        BundledGroup::L2_11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BundledGroup::M24 => "m24",
            BundledGroup::M23 => "m23",
            BundledGroup::M22 => "m22",
            BundledGroup::M12 => "m12",
            BundledGroup::M11 => "m11",
            BundledGroup::M11On12 => "m11-12",
            BundledGroup::L2_11 => "l2-11",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == name)
    }

    pub fn text(self) -> &'static str {
        match self {
            BundledGroup::M24 => include_str!("../../data/groups/m24.grp"),
            BundledGroup::M23 => include_str!("../../data/groups/m23.grp"),
            BundledGroup::M22 => include_str!("../../data/groups/m22.grp"),
            BundledGroup::M12 => include_str!("../../data/groups/m12.grp"),
            BundledGroup::M11 => include_str!("../../data/groups/m11.grp"),
            BundledGroup::M11On12 => include_str!("../../data/groups/m11_12.grp"),
            BundledGroup::L2_11 => include_str!("../../data/groups/l2_11.grp"),
        }
    }

    /// Loads the generators, checking the recorded digest and order.
    pub fn load(self) -> Result<PermGroup> {
        let (g, meta) = PermGroup::parse_with_meta(self.text())?;
        if meta.order.is_none() || meta.sha256.is_none() {
            return Err(Error::Integrity(format!(
                "bundled group {} lacks a recorded order or digest",
                self.name()
            )));
        }
        Ok(g)
    }
}

/// The full symmetric group on `points`, acting on `{0..v-1}`.
fn symmetric_generators(v: usize, points: &[usize]) -> Result<Vec<Permutation>> {
    if points.len() < 2 {
        return Ok(Vec::new());
    }
    let mut gens = vec![Permutation::from_cycles(v, &[points[..2].to_vec()])?];
    if points.len() > 2 {
        gens.push(Permutation::from_cycles(v, &[points.to_vec()])?);
    }
    Ok(gens)
}

fn with_identity(v: usize, mut gens: Vec<Permutation>) -> Result<PermGroup> {
    if gens.is_empty() {
        gens.push(Permutation::identity(v));
    }
    PermGroup::new(v, gens)
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    let points: Vec<usize> = (0..n).collect();
    with_identity(n, symmetric_generators(n, &points)?)
}

/// `Sym(Y_1) × … × Sym(Y_m)` for disjoint parts covering `{0..v-1}`.
pub fn young(v: usize, parts: &[Vec<usize>]) -> Result<PermGroup> {
    let mut seen = vec![false; v];
    let mut gens = Vec::new();
    for part in parts {
        for &x in part {
            if x >= v || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Mismatch(format!("parts are not a partition of {{0..{}}}", v - 1)));
            }
        }
        gens.extend(symmetric_generators(v, part)?);
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Mismatch(format!("parts do not cover {{0..{}}}", v - 1)));
    }
    with_identity(v, gens)
}

/// `Sym(a) ≀ Sym(b)` on `ab` points, preserving the cells `{i·a, …, i·a + a − 1}`.
pub fn wreath(a: usize, b: usize) -> Result<PermGroup> {
    let v = a * b;
    let base: Vec<usize> = (0..a).collect();
    let mut gens = symmetric_generators(v, &base)?;
    if b >= 2 {
        let swap: Vec<usize> = (0..v)
            .map(|x| match x / a {
                0 => x + a,
                1 => x - a,
                _ => x,
            })
            .collect();
        gens.push(Permutation::new(swap)?);
    }
    if b >= 3 {
        let shift: Vec<usize> = (0..v).map(|x| (x + a) % v).collect();
        gens.push(Permutation::new(shift)?);
    }
    with_identity(v, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn constructed_orders() {
        assert_eq!(symmetric(4).unwrap().order(), BigUint::from(24u32));
        assert_eq!(symmetric(1).unwrap().order(), BigUint::from(1u32));
        assert_eq!(
            young(7, &[vec![0, 1, 2], vec![3, 4, 5, 6]]).unwrap().order(),
            BigUint::from(144u32)
        );
        assert_eq!(wreath(2, 3).unwrap().order(), BigUint::from(48u32));
        assert_eq!(wreath(3, 3).unwrap().order(), BigUint::from(1296u32));
        assert_eq!(wreath(4, 2).unwrap().order(), BigUint::from(1152u32));
    }

    #[test]
    fn bundled_groups_load_with_recorded_orders() {
        let orders: [(BundledGroup, u64); 7] = [
            (BundledGroup::M24, 244_823_040),
            (BundledGroup::M23, 10_200_960),
            (BundledGroup::M22, 443_520),
            (BundledGroup::M12, 95_040),
            (BundledGroup::M11, 7_920),
            (BundledGroup::M11On12, 7_920),
            (BundledGroup::L2_11, 660),
        ];
        for (g, n) in orders {
            assert_eq!(g.load().unwrap().order(), BigUint::from(n), "{}", g.name());
            assert_eq!(BundledGroup::from_name(g.name()), Some(g));
        }
    }

    #[test]
    fn tampered_file_is_rejected() {
        let text = BundledGroup::M11.text().replacen("(0", "(1", 1);
        assert!(PermGroup::parse_with_meta(&text).is_err());
    }
}
