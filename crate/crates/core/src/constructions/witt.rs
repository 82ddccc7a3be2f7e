use super::golay::GolayCode;
use super::groups::BundledGroup;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::group::{orbit_of_subset, OrbitPartition};
use crate::johnson::KSubset;

/// A hexad of the Steiner system on 12 points in the labelling of the bundled `M12`.
const HEXAD: [usize; 6] = [0, 1, 2, 3, 4, 6];

/// The Witt designs: `S(5,6,12)`, `S(3,6,22)`, `S(4,7,23)`, `S(5,8,24)`.
///
/// `witt(24)` takes the octads of the Golay code; `witt(23)` and `witt(22)`
/// derive at the last point each time; `witt(12)` is the orbit of a hexad under `M12`.
pub fn witt(n: usize) -> Result<Design> {
    match n {
        24 => {
            let octads: Vec<KSubset> = GolayCode::bundled()?
                .words_of_weight(8)
                .into_iter()
                .map(|w| KSubset::from_bits(u64::from(w)))
                .collect();
            Design::new(24, 8, octads)
        }
        23 => witt(24)?.derive(23),
        22 => witt(23)?.derive(22),
        12 => {
            let m12 = BundledGroup::M12.load()?;
            let base = KSubset::from_points(&HEXAD)?;
            let d = Design::new(12, 6, orbit_of_subset(&m12, base))?;
            if d.len() != 132 {
                return Err(Error::Integrity(format!(
                    "hexad orbit has {} blocks instead of 132",
                    d.len()
                )));
            }
            Ok(d)
        }
        _ => Err(Error::Unsupported(format!("no Witt design on {n} points"))),
    }
}

/// The 22-block orbit of `M11` on 6-subsets of 12 points, a 3-(12,6,2) design.
pub fn m11_twelve_point_design() -> Result<Design> {
    let g = BundledGroup::M11On12.load()?;
    let orbits: OrbitPartition = g.orbits_on_ksubsets(6)?;
    let i = orbits
        .sizes()
        .iter()
        .position(|&s| s == 22)
        .ok_or_else(|| Error::Integrity("M11 on 12 points has no orbit of 22 hexads".into()))?;
    Design::new(12, 6, orbits.members(i).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::coverage;

    fn is_steiner(d: &Design, t: usize) -> bool {
        coverage(d, t).iter().all(|&c| c == 1)
    }

    #[test]
    fn witt_block_counts_and_steiner_property() {
        for (n, blocks, t) in [(24, 759, 5), (23, 253, 4), (22, 77, 3), (12, 132, 5)] {
            let d = witt(n).unwrap();
            assert_eq!(d.len(), blocks, "witt({n})");
            assert!(is_steiner(&d, t), "witt({n}) is not S({t},k,{n})");
        }
        assert!(witt(11).is_err());
    }

    #[test]
    fn m11_hexads_form_a_three_design() {
        let d = m11_twelve_point_design().unwrap();
        assert_eq!(d.len(), 22);
        assert!(coverage(&d, 3).iter().all(|&c| c == 2));
    }
}
