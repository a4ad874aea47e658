mod common;

use common::{arb_graph, arb_graph_on};
use proptest::prelude::*;
use stl_core::generators::*;
use stl_core::{blow_up, canonical_key, disjoint_union, edit_distance_labeled, family, join, FamilyTag, Graph};

proptest! {
    #[test]
    fn join_edge_count(g in arb_graph(12), h in arb_graph(12)) {
        let j = join(&g, &h).unwrap();
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
    }

    #[test]
    fn blow_up_edge_count(g in arb_graph(10), t in 1usize..=4) {
        let b = blow_up(&g, t).unwrap();
        prop_assert_eq!(b.order(), t * g.order());
        prop_assert_eq!(b.edge_count(), t * t * g.edge_count());
        for v in 0..g.order() {
            let class: Vec<usize> = (0..t).map(|i| v * t + i).collect();
            prop_assert_eq!(b.induced(&class).edge_count(), 0);
        }
    }

    #[test]
    fn edit_distance_is_a_metric(
        a in arb_graph_on(9),
        b in arb_graph_on(9),
        c in arb_graph_on(9),
    ) {
        prop_assert_eq!(edit_distance_labeled(&a, &a), 0);
        prop_assert_eq!(edit_distance_labeled(&a, &b), edit_distance_labeled(&b, &a));
        prop_assert_eq!(edit_distance_labeled(&a, &b) == 0, a == b);
        prop_assert!(
            edit_distance_labeled(&a, &c) <= edit_distance_labeled(&a, &b) + edit_distance_labeled(&b, &c)
        );
    }

    #[test]
    fn degree_sum(g in arb_graph(40)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.edges().len(), g.edge_count());
    }

    #[test]
    fn key_survives_relabeling(g in arb_graph(12), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabeled(&perm);
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn key_separates_non_isomorphic(g in arb_graph_on(6), h in arb_graph_on(6)) {
        let same = canonical_key(&g).unwrap() == canonical_key(&h).unwrap();
        prop_assert_eq!(same, common::brute_isomorphic(&g, &h));
    }

    #[test]
    fn complement_involution(g in arb_graph(20)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn union_components(g in arb_graph(10), h in arb_graph(10)) {
        let u = disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(u.components().len(), g.components().len() + h.components().len());
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
    }
}

#[test]
fn every_family_has_consistent_degree_sum() {
    let small: &[(FamilyTag, &[usize])] = &[
        (FamilyTag::Split, &[3, 20]),
        (FamilyTag::Turan, &[11, 4]),
        (FamilyTag::Multipartite, &[1, 2, 3]),
        (FamilyTag::Book, &[3, 4]),
        (FamilyTag::WheelEven, &[3]),
        (FamilyTag::KstPlus, &[3, 4]),
        (FamilyTag::Cycle, &[9]),
        (FamilyTag::CyclePlus, &[5]),
        (FamilyTag::Theta, &[1, 3, 5]),
        (FamilyTag::ThetaMulti, &[4, 3]),
        (FamilyTag::Hypercube, &[4]),
        (FamilyTag::Grid, &[4]),
        (FamilyTag::Prism, &[5]),
        (FamilyTag::CycleDiagonals, &[4]),
        (FamilyTag::Subdivision, &[5]),
        (FamilyTag::Path, &[8]),
        (FamilyTag::Matching, &[10]),
        (FamilyTag::Blowup, &[3, 3]),
        (FamilyTag::BlowupPlus, &[3, 2]),
        (FamilyTag::Complete, &[7]),
        (FamilyTag::CompleteBipartite, &[3, 5]),
        (FamilyTag::Star, &[6]),
    ];
    for (tag, p) in small {
        let g = family(*tag, p).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count(), "{tag}");
    }
    assert_eq!(small.len() + 1, FamilyTag::ALL.len());
}

#[test]
fn closed_form_counts() {
    for d in 1..=10 {
        let q = hypercube(d).unwrap();
        assert_eq!((q.order(), q.edge_count()), (1 << d, d << (d - 1)));
    }
    for t in 2..=6 {
        let g = grid(t).unwrap();
        assert_eq!((g.order(), g.edge_count()), (t * t, 2 * t * (t - 1)));
    }
    for l in 2..=8 {
        assert_eq!(prism(l).unwrap().edge_count(), 6 * l);
        assert_eq!(cycle_diagonals(l).unwrap().edge_count(), 3 * l);
    }
    for (r, k) in [(2, 1), (2, 5), (3, 3), (4, 2)] {
        let b = book(r, k).unwrap();
        assert_eq!(b.order(), r + k);
        assert_eq!(b.edge_count(), r * (r - 1) / 2 + k * r);
    }
    let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(subdivide(&g).unwrap().edge_count(), 4);
}
