use std::collections::BTreeSet;

use ctdesign::constructions::{affine_plane_group, projective_line_group, projective_plane_group, symmetric};
use ctdesign::screening::{
    audit_counts, audit_manifest, binomial, family_screen, orbit_bound_ok, reduction_exempt,
    AuditStatus, ClaimValue, Family, GroupFamilySpec,
};
use num_bigint::BigUint;

fn open_keys(family: Family, q_max: u64) -> BTreeSet<(Option<u64>, Option<u64>, Option<u64>)> {
    family_screen(&GroupFamilySpec::new(family).with_q_max(q_max))
        .open_rows()
        .map(|r| (r.q, r.d, r.k))
        .collect()
}

#[test]
fn order_formulas_match_constructed_groups() {
    let l2 = GroupFamilySpec::new(Family::Linear2);
    for q in [4u64, 8, 9, 16] {
        assert_eq!(l2.max_order(q, 2).unwrap(), projective_line_group(q as usize, true).unwrap().order());
    }
    let proj = GroupFamilySpec::new(Family::Projective);
    for q in [2u64, 3, 4] {
        assert_eq!(proj.max_order(q, 3).unwrap(), projective_plane_group(q as usize, true).unwrap().order());
        assert_eq!(proj.degree(q, 3), Some(q * q + q + 1));
    }
    let aff = GroupFamilySpec::new(Family::Affine);
    for q in [2u64, 3, 4] {
        assert_eq!(aff.max_order(q, 2).unwrap(), affine_plane_group(q as usize, true).unwrap().order());
    }
}

#[test]
fn screening_is_deterministic() {
    for f in Family::ALL {
        let spec = GroupFamilySpec::new(f);
        assert_eq!(family_screen(&spec).to_csv(), family_screen(&spec).to_csv());
    }
}

#[test]
fn widening_the_range_only_adds_rows() {
    for f in [Family::Linear2, Family::Projective, Family::Affine, Family::Unitary] {
        let small = open_keys(f, 16);
        let large = open_keys(f, 64);
        assert!(small.is_subset(&large), "{}", f.name());
    }
}

#[test]
fn suzuki_family_is_eliminated() {
    assert_eq!(family_screen(&GroupFamilySpec::new(Family::Suzuki)).open_rows().count(), 0);
    let sz8 = family_screen(&GroupFamilySpec::new(Family::Suzuki).with_q_max(8));
    assert!(sz8.rows.iter().any(|r| r.v == 65 && !r.is_open()));
}

#[test]
fn unitary_survivors_of_the_septic_bound() {
    let t = family_screen(&GroupFamilySpec::new(Family::Unitary));
    let septic: BTreeSet<u64> = t.passing("septic").filter_map(|r| r.q).collect();
    assert_eq!(septic, BTreeSet::from([2, 3]));
}

#[test]
fn orbit_bound_examples() {
    assert!(reduction_exempt(12, 6));
    assert!(!reduction_exempt(24, 8));
    let s24: BigUint = symmetric(24).unwrap().order();
    assert!(orbit_bound_ok(24, 8, &s24));
    assert!(!orbit_bound_ok(24, 8, &BigUint::from(1000u32)));
    assert_eq!(binomial(24, 8), BigUint::from(735_471u32));
}

#[test]
fn tables_serialise() {
    let t = family_screen(&GroupFamilySpec::new(Family::Linear2));
    let csv = t.to_csv();
    let header = csv.lines().next().unwrap();
    assert!(header.starts_with("family,group,q,d,v,k,order"));
    assert!(header.ends_with("verdict,eliminated_by"));
    assert_eq!(csv.lines().count(), t.rows.len() + 1);
    let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), t.rows.len());
    assert!(t.to_text().contains("open:"));
}

#[test]
fn audit_rows() {
    assert_eq!(audit_counts("ag24-c2", ClaimValue::Count(840)).unwrap().status, AuditStatus::Pass);
    let row = audit_counts("inversive-c2", ClaimValue::Count(2040)).unwrap();
    assert_eq!(row.status, AuditStatus::Mismatch);
    assert_eq!((row.claimed.as_str(), row.recomputed.as_str()), ("8228", "2040"));
    let orbits = ClaimValue::Multiset(vec![55, 330, 11, 66]);
    assert_eq!(audit_counts("biplane-orbits", orbits).unwrap().status, AuditStatus::Pass);
    assert!(audit_counts("no-such-claim", ClaimValue::Count(0)).is_err());
    assert!(audit_manifest().iter().all(|c| !c.printed.is_empty()));
}
