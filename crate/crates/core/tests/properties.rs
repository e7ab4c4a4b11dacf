mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use stcore::closure::{self, closure, is_closed, is_core};
use stcore::partition::{
    beta_of_partition, bump_element, hook_multiset, partition_of_beta,
};
use stcore::verify::shift_union_predicate;
use stcore::{BetaSet, CoreParams, Partition, PartitionOrder, Shift};

fn partitions(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn beta_sets(max: u32, max_len: usize) -> impl Strategy<Value = BetaSet> {
    prop::collection::btree_set(1..=max, 0..=max_len)
        .prop_map(|set| BetaSet::from_unsorted(set).unwrap())
}

fn five_seven() -> CoreParams {
    CoreParams::new(5, 7).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn partition_round_trip(p in partitions(8, 6)) {
        prop_assume!(p.size() <= 30);
        prop_assert_eq!(partition_of_beta(&beta_of_partition(&p)), p);
    }

    #[test]
    fn beta_round_trip(b in beta_sets(20, 12)) {
        prop_assert_eq!(beta_of_partition(&partition_of_beta(&b)), b.clone());
        let expected = common::partition_of(b.elements());
        prop_assert_eq!(partition_of_beta(&b).parts().to_vec(), expected);
    }

    #[test]
    fn hooks_match_ferrers_count(p in partitions(8, 12)) {
        prop_assert_eq!(hook_multiset(&p), common::ferrers_hooks(p.parts()));
        let b = beta_of_partition(&p);
        prop_assert_eq!(b.elements().to_vec(), common::first_column_hooks(p.parts()));
    }

    #[test]
    fn containment_matches_partition_comparison(a in beta_sets(14, 7), b in beta_sets(14, 7)) {
        prop_assert_eq!(a.contained_in(&b), common::beta_precedes(a.elements(), b.elements()));
        prop_assert_eq!(a.to_partition().contained_in(&b.to_partition()), a.contained_in(&b));
    }

    #[test]
    fn containment_splits(a in beta_sets(14, 7), b in beta_sets(14, 7)) {
        let (n, m) = (a.len(), b.len());
        let both_halves = n <= m && (1..=n).all(|i| {
            let head = |x: &BetaSet, len: usize| {
                BetaSet::new(x.elements()[..i].to_vec()).unwrap().subtract((len - i) as u32)
            };
            let tail = |x: &BetaSet| BetaSet::new(x.elements()[i..].to_vec()).unwrap();
            head(&a, n).contained_in(&head(&b, m)) && tail(&a).contained_in(&tail(&b))
        });
        prop_assert_eq!(a.contained_in(&b), both_halves);
    }

    #[test]
    fn containment_is_a_partial_order(a in beta_sets(9, 5), b in beta_sets(9, 5), c in beta_sets(9, 5)) {
        prop_assert!(a.contained_in(&a));
        if a.contained_in(&b) && b.contained_in(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.contained_in(&b) && b.contained_in(&c) {
            prop_assert!(a.contained_in(&c));
        }
    }

    #[test]
    fn bumping_moves_up(b in beta_sets(20, 8), j in any::<prop::sample::Index>(), a in 1u32..=10) {
        prop_assume!(!b.is_empty());
        let j = j.index(b.len()) + 1;
        let base = b.elements()[j - 1];
        let a = (a..).find(|&a| !b.contains(base + a)).unwrap();
        let bumped = bump_element(&b, j, a).unwrap();
        prop_assert!(b.contained_in(&bumped));
        prop_assert!(bumped.contains(base + a));
        prop_assert_eq!(bumped.len(), b.len());
    }

    #[test]
    fn closure_is_idempotent_and_matches_fixed_point(b in beta_sets(40, 6)) {
        let p = five_seven();
        let once = closure(p, &b);
        prop_assert_eq!(closure(p, &once), once.clone());
        prop_assert_eq!(once.elements().to_vec(), common::fixed_point_closure(b.elements(), &[5, 7]));
        prop_assert!(is_closed(p, &once));
        prop_assert!(b.is_subset_of(&once));
    }

    #[test]
    fn core_iff_no_hook_divisible(b in beta_sets(30, 8)) {
        let hooks = common::ferrers_hooks(&common::partition_of(b.elements()));
        let oracle = hooks.iter().all(|h| h % 5 != 0 && h % 7 != 0);
        prop_assert_eq!(is_core(five_seven(), &b), oracle);
    }

    #[test]
    fn closed_iff_gaps_propagate_up(b in beta_sets(30, 10)) {
        let top = b.largest().unwrap_or(0);
        let gaps_ok = (1..=top)
            .filter(|&y| !b.contains(y))
            .all(|y| !b.contains(y + 5) && !b.contains(y + 7));
        prop_assert_eq!(is_closed(five_seven(), &b), gaps_ok);
    }

    #[test]
    fn representability_matches_double_loop(x in 0u32..2000, pair in prop::sample::select(vec![(5u32, 7u32), (4, 9), (3, 8), (7, 11), (1, 4)])) {
        let p = CoreParams::new(pair.0, pair.1).unwrap();
        prop_assert_eq!(p.is_representable(x), common::representable(x, pair.0, pair.1));
    }

    #[test]
    fn shifted_unions_keep_containment(
        upper in partitions(8, 6),
        other in partitions(8, 6),
        k in 1u32..=6,
        a_mask in 0u32..64,
        b_mask in 0u32..64,
    ) {
        // The componentwise minimum of two partitions is a partition below both.
        let lower: Vec<u32> = other.parts().iter().zip(upper.parts()).map(|(x, y)| *x.min(y)).collect();
        let g = beta_of_partition(&upper);
        let b = beta_of_partition(&Partition::new(lower).unwrap());
        prop_assert!(b.contained_in(&g));
        let room = g.len() - b.len();
        let subset = |mask: u32, cap: usize| {
            BetaSet::from_unsorted((1..=k).filter(|i| mask & (1 << (i - 1)) != 0).take(cap)).unwrap()
        };
        let a_set = subset(a_mask, room);
        let b_set = subset(b_mask, a_set.len());
        let left: BTreeSet<u32> = b.iter().map(|x| x + k).chain(a_set.iter()).collect();
        prop_assert!(g.len() >= left.len());
        prop_assert_eq!(shift_union_predicate(&b, &g, k, &a_set, &b_set), Ok(true));
    }

    #[test]
    fn delta_elements_are_generator_minus_representables(g in 0u32..300) {
        let p = five_seven();
        let d = closure::delta(p, g);
        let expected: Vec<u32> = (0..g).filter(|&r| common::representable(r, 5, 7)).map(|r| g - r).collect();
        prop_assert_eq!(d.elements().elements().to_vec(), expected);
    }
}
