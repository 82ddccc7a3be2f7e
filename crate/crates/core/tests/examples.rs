//! Worked examples for the public operations.

use ctdesign::analysis::{
    intersection_profile, min_distance, opposite, point_closure, strength, trichotomy_verdict,
    TrichotomyCase,
};
use ctdesign::constructions::{
    ag_lines, biplane11, biplane11_group, maximal_meet, pg_lines, projective_plane_group,
    symmetric, transversal_pairs, transversal_triples, transversals_of_pairs, unions_of_cells,
    within_two_cells, wreath, young, BundledGroup, UniformPartition,
};
use ctdesign::group::{flag_orbit_check, flag_orbit_size, ActionClass};
use ctdesign::johnson::{binomial, distance, neighbors, rank, unrank};
use ctdesign::{
    analyze, complement_map, distance_partition, is_completely_regular,
    is_completely_transitive, Design, GroundSet, KSubset, MinDistance, Permutation, SubsetRank,
};

fn ks(points: &[usize]) -> KSubset {
    KSubset::from_points(points).unwrap()
}

#[test]
fn ranks_of_extreme_subsets() {
    let g = GroundSet::new(7).unwrap();
    assert_eq!(rank(ks(&[0, 1, 2]), g).unwrap(), SubsetRank(0));
    assert_eq!(rank(ks(&[4, 5, 6]), g).unwrap(), SubsetRank(34));
    assert_eq!(unrank(SubsetRank(34), g, 3).unwrap(), ks(&[4, 5, 6]));
    assert!(unrank(SubsetRank(35), g, 3).is_err());
}

#[test]
fn neighbourhoods() {
    let g = GroundSet::new(7).unwrap();
    assert_eq!(neighbors(ks(&[0, 2, 5]), g).unwrap().len(), 12);
    assert_eq!(neighbors(ks(&[0]), GroundSet::new(2).unwrap()).unwrap(), vec![ks(&[1])]);
    let g13 = GroundSet::new(13).unwrap();
    let a = ks(&[1, 4, 7, 12]);
    for b in neighbors(a, g13).unwrap() {
        assert_eq!(distance(a, b).unwrap(), 1);
    }
    assert_eq!(distance(ks(&[0, 1, 2]), ks(&[3, 4, 5])).unwrap(), 3);
}

#[test]
fn complements() {
    let single = Design::from_point_lists(6, 3, &[vec![0, 1, 2]]).unwrap();
    assert_eq!(complement_map(&single).blocks(), &[ks(&[3, 4, 5])]);
    let fano = pg_lines(2).unwrap();
    let c = complement_map(&fano);
    assert_eq!((c.v(), c.k(), c.len()), (7, 4, 7));
    assert_eq!(min_distance(&c), min_distance(&fano));
    assert_eq!(
        distance_partition(&c).unwrap().covering_radius(),
        distance_partition(&fano).unwrap().covering_radius()
    );
}

#[test]
fn permutation_action() {
    let p = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
    assert_eq!(p.apply(ks(&[0, 2])).unwrap(), ks(&[1, 2]));
    assert_eq!(Permutation::identity(5).apply(ks(&[1, 3])).unwrap(), ks(&[1, 3]));
}

#[test]
fn group_orders() {
    assert_eq!(symmetric(4).unwrap().order(), 24u32.into());
    assert_eq!(BundledGroup::M11.load().unwrap().order(), (11u32 * 10 * 9 * 8).into());
    assert_eq!(projective_plane_group(2, false).unwrap().order(), 168u32.into());
}

#[test]
fn action_classes() {
    let y = young(7, &[vec![0, 1, 2], vec![3, 4, 5, 6]]).unwrap();
    assert_eq!(
        y.classify_action(),
        ActionClass::Intransitive {
            orbits: vec![vec![0, 1, 2], vec![3, 4, 5, 6]]
        }
    );
    match wreath(2, 3).unwrap().classify_action() {
        ActionClass::TransitiveImprimitive { blocks } => assert!(blocks.iter().all(|b| b.len() == 2)),
        other => panic!("{other:?}"),
    }
    assert!(biplane11_group().unwrap().classify_action().is_two_transitive());
}

#[test]
fn flag_orbits() {
    let s = symmetric(7).unwrap();
    let single = Design::from_point_lists(7, 3, &[vec![0, 1, 2]]).unwrap();
    assert!(flag_orbit_check(&s, &single, ks(&[0, 1, 2])).unwrap());
    let g = biplane11_group().unwrap();
    let d = biplane11().unwrap();
    assert_eq!(flag_orbit_size(&g, d.blocks()[0]).unwrap(), 30);
    assert!(flag_orbit_check(&g, &d, d.blocks()[0]).unwrap());
}

#[test]
fn cell_sizes() {
    let dp = distance_partition(&pg_lines(2).unwrap()).unwrap();
    assert_eq!(dp.cell_sizes(), vec![7, 28]);
    let single = Design::from_point_lists(10, 4, &[vec![0, 3, 5, 9]]).unwrap();
    let sizes = distance_partition(&single).unwrap().cell_sizes();
    let sphere: Vec<u64> = (0..=4).map(|i| binomial(4, i) * binomial(6, i)).collect();
    assert_eq!(sizes, sphere);
}

#[test]
fn minimum_distances() {
    assert_eq!(min_distance(&within_two_cells(5, 5).unwrap()), MinDistance::Finite(5));
    assert_eq!(min_distance(&biplane11().unwrap()), MinDistance::Finite(3));
    assert_eq!(min_distance(&pg_lines(3).unwrap()), MinDistance::Finite(3));
    assert_eq!(min_distance(&ag_lines(4).unwrap()), MinDistance::Finite(3));
    let single = Design::from_point_lists(6, 2, &[vec![0, 1]]).unwrap();
    assert_eq!(min_distance(&single), MinDistance::Infinite);
    assert_eq!(serde_json::to_string(&MinDistance::Infinite).unwrap(), "\"inf\"");
}

#[test]
fn strengths() {
    let single = Design::from_point_lists(6, 2, &[vec![0, 1]]).unwrap();
    assert_eq!(strength(&single).unwrap(), 0);
    assert_eq!(strength(&pg_lines(2).unwrap()).unwrap(), 2);
    assert_eq!(strength(&biplane11().unwrap()).unwrap(), 2);
}

#[test]
fn regularity_and_transitivity_verdicts() {
    assert!(is_completely_regular(&pg_lines(2).unwrap()).unwrap().is_equitable());
    for (v, k, y) in [(6, 3, vec![0, 1]), (8, 4, vec![0, 1, 2]), (7, 2, vec![0, 1, 2, 3])] {
        let d = maximal_meet(v, k, &y).unwrap();
        assert!(is_completely_regular(&d).unwrap().is_equitable());
        let rest: Vec<usize> = (0..v).filter(|x| !y.contains(x)).collect();
        let g = young(v, &[y, rest]).unwrap();
        assert!(is_completely_transitive(&d, &g).unwrap().completely_transitive);
    }
    let single = Design::from_point_lists(7, 3, &[vec![0, 1, 2]]).unwrap();
    assert!(is_completely_transitive(&single, &young(7, &[vec![0, 1, 2], vec![3, 4, 5, 6]]).unwrap())
        .unwrap()
        .completely_transitive);
    let pg3 = pg_lines(3).unwrap();
    assert!(is_completely_transitive(&pg3, &projective_plane_group(3, false).unwrap())
        .unwrap()
        .completely_transitive);
    let report = analyze(&biplane11().unwrap(), Some(&biplane11_group().unwrap())).unwrap();
    let g = report.group.unwrap();
    assert!(!g.completely_transitive);
    let mut sizes = g.orbit_sizes;
    sizes.sort_unstable();
    assert_eq!(sizes, vec![11, 55, 66, 330]);
}

#[test]
fn transitivity_requires_an_automorphism_group() {
    let d = pg_lines(2).unwrap();
    let g = wreath(2, 3).unwrap();
    assert!(is_completely_transitive(&d, &symmetric(7).unwrap()).is_err());
    assert!(is_completely_transitive(&Design::from_point_lists(6, 2, &[vec![0, 1]]).unwrap(), &g).is_err());
}

#[test]
fn opposites() {
    let y = [0, 1];
    let d = maximal_meet(7, 3, &y).unwrap();
    let opp = opposite(&d).unwrap();
    let yset = ks(&y);
    assert!(opp.blocks().iter().all(|b| b.meet(yset) == 0));
    assert_eq!(opp.len() as u64, binomial(5, 3));

    let d = within_two_cells(4, 3).unwrap();
    let opp = opposite(&d).unwrap();
    let half = ks(&[0, 1, 2, 3]);
    assert!(opp.blocks().iter().all(|b| [1, 2].contains(&b.meet(half))));
    assert_eq!(opp.len() as u64, 2 * binomial(4, 1) * binomial(4, 2));

    let matching = opposite(&transversals_of_pairs(4, 4).unwrap()).unwrap();
    assert_eq!(min_distance(&matching), MinDistance::Finite(2));
}

#[test]
fn point_closures() {
    let single = Design::from_point_lists(7, 3, &[vec![0, 1, 2]]).unwrap();
    assert_eq!(point_closure(&single, 1).set, ks(&[0, 1, 2]));
    assert!(!point_closure(&single, 5).covered);
    let d = maximal_meet(8, 4, &[0, 1]).unwrap();
    assert_eq!(point_closure(&d, 0).set, ks(&[0, 1]));
    let pg3 = pg_lines(3).unwrap();
    for x in 0..13 {
        assert_eq!(point_closure(&pg3, x).set, ks(&[x]));
    }
}

#[test]
fn intersection_profiles() {
    let p = UniformPartition::new(6, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
    assert_eq!(intersection_profile(ks(&[0, 1, 2]), &p).unwrap(), vec![2, 1, 0]);
    let singletons = UniformPartition::standard(1, 6).unwrap();
    assert_eq!(intersection_profile(ks(&[1, 4]), &singletons).unwrap(), vec![1, 1, 0, 0, 0, 0]);
    assert!(UniformPartition::new(6, &[vec![0, 1], vec![1, 2], vec![4, 5]]).is_err());
}

#[test]
fn trichotomy_cases() {
    let cases = [
        (within_two_cells(4, 4).unwrap(), wreath(4, 2).unwrap(), TrichotomyCase::TwoDisjointBlocks),
        (
            unions_of_cells(&UniformPartition::standard(3, 3).unwrap(), 1).unwrap(),
            wreath(3, 3).unwrap(),
            TrichotomyCase::DisjointTriples,
        ),
        (pg_lines(3).unwrap(), projective_plane_group(3, false).unwrap(), TrichotomyCase::TwoTransitive),
    ];
    for (d, g, want) in cases {
        let ct = is_completely_transitive(&d, &g).unwrap();
        let t = trichotomy_verdict(&d, &g, min_distance(&d), &ct).unwrap();
        assert_eq!(t.case, want);
        assert!(t.flag_transitive);
    }
    let fano = pg_lines(2).unwrap();
    let g = projective_plane_group(2, false).unwrap();
    let ct = is_completely_transitive(&fano, &g).unwrap();
    assert!(trichotomy_verdict(&fano, &g, min_distance(&fano), &ct).is_err());
}

#[test]
fn partition_design_counts() {
    assert_eq!(maximal_meet(6, 3, &[0, 1]).unwrap().len(), 4);
    assert_eq!(maximal_meet(7, 2, &[0, 1, 2, 3]).unwrap().len(), 6);
    assert_eq!(within_two_cells(3, 2).unwrap().len(), 6);
    assert_eq!(within_two_cells(4, 4).unwrap().len(), 2);
    assert_eq!(transversals_of_pairs(5, 5).unwrap().len(), 32);
    assert_eq!(transversals_of_pairs(4, 2).unwrap().len(), 24);
    assert_eq!(transversal_triples(3, 3).unwrap().len(), 27);
    assert_eq!(transversal_pairs(3, 2).unwrap().len(), 9);
    for (d, g) in [
        (transversal_triples(3, 3).unwrap(), wreath(3, 3).unwrap()),
        (transversal_pairs(3, 2).unwrap(), wreath(3, 2).unwrap()),
    ] {
        assert!(is_completely_transitive(&d, &g).unwrap().completely_transitive);
    }
}

#[test]
fn design_file_round_trip() {
    for d in [pg_lines(3).unwrap(), biplane11().unwrap(), transversal_pairs(3, 2).unwrap()] {
        assert_eq!(Design::parse(&d.to_text()).unwrap(), d);
    }
    assert!(Design::parse("7 3 1\n0 1 9\n").is_err());
    assert!(Design::parse("7 3 2\n0 1 2\n").is_err());
}

#[test]
fn memory_cap_is_refused() {
    let d = Design::from_point_lists(40, 10, &[(0..10).collect()]).unwrap();
    assert!(matches!(
        ctdesign::analysis::distance_partition_capped(&d, 1 << 20),
        Err(ctdesign::Error::MemoryCap { .. })
    ));
}
