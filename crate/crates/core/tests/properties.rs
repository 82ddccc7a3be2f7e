use ctdesign::constructions::symmetric;
use ctdesign::johnson::{binomial, distance, rank, unrank, Combinations};
use ctdesign::{complement_map, Design, GroundSet, KSubset, PermGroup, Permutation, SubsetRank};
use num_bigint::BigUint;
use proptest::prelude::*;

fn subset(v: usize, k: usize) -> impl Strategy<Value = KSubset> {
    proptest::sample::subsequence((0..v).collect::<Vec<_>>(), k)
        .prop_map(|pts| KSubset::from_points(&pts).unwrap())
}

fn vk() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=64).prop_flat_map(|v| (Just(v), 0..=v.min(12)))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

proptest! {
    #[test]
    fn rank_unrank_round_trip(((v, k), seed) in vk().prop_flat_map(|(v, k)| (Just((v, k)), subset(v, k)))) {
        let g = GroundSet::new(v).unwrap();
        let r = rank(seed, g).unwrap();
        prop_assert!(r.0 < binomial(v, k));
        prop_assert_eq!(unrank(r, g, k).unwrap(), seed);
    }

    #[test]
    fn unrank_rank_round_trip(v in 2usize..=40, k in 1usize..=6, x in any::<u64>()) {
        prop_assume!(k <= v);
        let g = GroundSet::new(v).unwrap();
        let r = SubsetRank(x % binomial(v, k));
        let s = unrank(r, g, k).unwrap();
        prop_assert_eq!(s.k(), k);
        prop_assert_eq!(rank(s, g).unwrap(), r);
    }

    #[test]
    fn distance_is_a_metric(
        (a, b, c) in (4usize..=20).prop_flat_map(|v| (1..v).prop_flat_map(move |k| (subset(v, k), subset(v, k), subset(v, k))))
    ) {
        let (ab, bc, ac) = (distance(a, b).unwrap(), distance(b, c).unwrap(), distance(a, c).unwrap());
        prop_assert_eq!(ab, distance(b, a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(ac <= ab + bc);
    }

    #[test]
    fn complement_preserves_distance(
        (v, a, b) in (2usize..=30).prop_flat_map(|v| (1..v).prop_flat_map(move |k| (Just(v), subset(v, k), subset(v, k))))
    ) {
        let g = GroundSet::new(v).unwrap();
        prop_assert_eq!(distance(a, b).unwrap(), distance(a.complement(g), b.complement(g)).unwrap());
    }

    #[test]
    fn complement_map_is_an_involution(
        (v, k, blocks) in (3usize..=16).prop_flat_map(|v| (1..v).prop_flat_map(move |k| (Just(v), Just(k), proptest::collection::vec(subset(v, k), 1..8))))
    ) {
        let mut blocks = blocks;
        blocks.sort_unstable_by_key(|b| b.bits());
        blocks.dedup();
        let d = Design::new(v, k, blocks).unwrap();
        let c = complement_map(&d);
        prop_assert_eq!(c.k(), v - k);
        prop_assert_eq!(complement_map(&c), d);
    }

    #[test]
    fn apply_then_inverse_is_identity(
        (p, s) in (2usize..=24).prop_flat_map(|n| (permutation(n), (0..=n).prop_flat_map(move |k| subset(n, k))))
    ) {
        let t = p.apply(s).unwrap();
        prop_assert_eq!(t.k(), s.k());
        prop_assert_eq!(p.inverse().apply(t).unwrap(), s);
        prop_assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn permutations_are_distance_isometries(
        (p, (a, b)) in (3usize..=20).prop_flat_map(|n| (permutation(n), (1..n).prop_flat_map(move |k| (subset(n, k), subset(n, k)))))
    ) {
        prop_assert_eq!(distance(p.apply(a).unwrap(), p.apply(b).unwrap()).unwrap(), distance(a, b).unwrap());
    }

    #[test]
    fn orbits_partition_the_subsets(
        (n, k, gens) in (3usize..=9).prop_flat_map(|n| (Just(n), 1..n, proptest::collection::vec(permutation(n), 1..3)))
    ) {
        let g = PermGroup::new(n, gens).unwrap();
        let orbits = g.orbits_on_ksubsets(k).unwrap();
        let sizes = orbits.sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>() as u64, binomial(n, k));
        let order = g.order();
        for (i, &size) in sizes.iter().enumerate() {
            prop_assert_eq!(&order % BigUint::from(size), BigUint::from(0u32));
            let members: Vec<KSubset> = orbits.members(i).collect();
            for x in g.generators() {
                for &s in &members {
                    let r = rank(x.apply(s).unwrap(), GroundSet::new(n).unwrap()).unwrap();
                    prop_assert_eq!(orbits.orbit_index(r), i);
                }
            }
        }
    }
}

#[test]
fn symmetric_group_has_one_orbit() {
    for (n, k) in [(7, 3), (8, 4), (6, 1)] {
        assert_eq!(symmetric(n).unwrap().orbits_on_ksubsets(k).unwrap().len(), 1);
    }
}

#[test]
fn combinations_are_in_rank_order() {
    let g = GroundSet::new(9).unwrap();
    for (i, s) in Combinations::new(9, 4).enumerate() {
        assert_eq!(rank(s, g).unwrap(), SubsetRank(i as u64));
    }
}
