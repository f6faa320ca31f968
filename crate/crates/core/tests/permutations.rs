use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use gforest::oracle::{decorate_grassmannian, enumerate_forests, enumerate_trees};
use gforest::permutations::{
    enumerate_grass_tree_permutations, enumerate_separable, forest_permutation_closure,
    trip_permutation, DecoratedPermutation, FixedColor,
};

fn decorated(n: usize) -> impl Strategy<Value = DecoratedPermutation> {
    (
        Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(images, whites)| {
            let colors: BTreeMap<usize, FixedColor> = (1..=images.len())
                .filter(|&i| images[i - 1] == i)
                .map(|i| {
                    (
                        i,
                        if whites[i - 1] {
                            FixedColor::White
                        } else {
                            FixedColor::Black
                        },
                    )
                })
                .collect();
            DecoratedPermutation::new(images, colors).unwrap()
        })
}

fn any_decorated() -> impl Strategy<Value = DecoratedPermutation> {
    (1usize..=9).prop_flat_map(decorated)
}

proptest! {
    #[test]
    fn rotation_has_order_n(w in any_decorated()) {
        let mut r = w.clone();
        for _ in 0..w.len() {
            prop_assert_eq!(r.antiexcedances(), w.antiexcedances());
            r = r.cyclic_rotation();
        }
        prop_assert_eq!(r, w);
    }

    #[test]
    fn direct_sum_adds_antiexcedances(a in any_decorated(), b in any_decorated()) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.len(), a.len() + b.len());
        prop_assert_eq!(s.antiexcedances(), a.antiexcedances() + b.antiexcedances());
        for i in 1..=a.len() {
            prop_assert_eq!(s.apply(i), a.apply(i));
        }
    }

    #[test]
    fn inverse_round_trips(w in any_decorated()) {
        let inv = w.inverse_images();
        for i in 1..=w.len() {
            prop_assert_eq!(inv[w.apply(i) - 1], i);
        }
    }
}

/// Brute-force separability: no occurrence of 2413 or 3142.
fn avoids_separable_patterns(w: &[usize]) -> bool {
    let n = w.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let (p, q, r, s) = (w[a], w[b], w[c], w[d]);
                    if (r < p && p < s && s < q) || (q < s && s < p && p < r) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn separable_generator_matches_pattern_check() {
    for m in 1..=8 {
        let mut expected: BTreeMap<usize, u64> = BTreeMap::new();
        for w in all_permutations(m) {
            if avoids_separable_patterns(&w) {
                *expected
                    .entry(w.windows(2).filter(|p| p[0] > p[1]).count())
                    .or_default() += 1;
            }
        }
        assert_eq!(
            enumerate_separable(m, true, u64::MAX).unwrap(),
            expected,
            "{m} letters"
        );
    }
}

#[test]
fn separable_budget() {
    assert!(enumerate_separable(9, true, 1000).is_err());
}

#[test]
fn trips_survive_every_contraction() {
    for n in 1..=6 {
        for shape in enumerate_forests(n, true) {
            for g in decorate_grassmannian(&shape, false, false) {
                let w = trip_permutation(&g);
                for (u, v) in g.contractible_edges() {
                    assert_eq!(trip_permutation(&g.contract_move(u, v).unwrap()), w);
                }
            }
        }
    }
}

#[test]
fn tree_amalgamation_adds_helicity() {
    let perms = enumerate_grass_tree_permutations(4, u64::MAX).unwrap();
    for a in &perms {
        for b in &perms {
            let glued = a.perm.amalgamation(&b.perm).unwrap();
            assert_eq!(glued.len(), 6);
            assert_eq!(
                glued.antiexcedances() + 1,
                a.perm.antiexcedances() + b.perm.antiexcedances()
            );
        }
    }
    assert!(DecoratedPermutation::singleton(FixedColor::White)
        .amalgamation(&DecoratedPermutation::pi(1, 3).unwrap())
        .is_err());
}

#[test]
fn tree_permutations_are_tree_trips() {
    for n in 2..=6 {
        let closure: BTreeSet<_> = enumerate_grass_tree_permutations(n, u64::MAX)
            .unwrap()
            .into_iter()
            .map(|p| p.perm)
            .collect();
        let trips: BTreeSet<_> = enumerate_trees(n)
            .iter()
            .flat_map(|t| decorate_grassmannian(t, true, false))
            .map(|g| trip_permutation(&g))
            .collect();
        assert_eq!(closure, trips, "n = {n}");
    }
}

#[test]
fn forest_closure_is_forest_trips() {
    for n in 1..=6 {
        let trips: BTreeSet<_> = enumerate_forests(n, true)
            .iter()
            .flat_map(|f| decorate_grassmannian(f, true, false))
            .map(|g| trip_permutation(&g))
            .collect();
        assert_eq!(
            forest_permutation_closure(n, u64::MAX).unwrap(),
            trips,
            "n = {n}"
        );
    }
}

#[test]
fn star_trips_are_shifts() {
    for d in 3..=7 {
        let star = enumerate_trees(d)
            .into_iter()
            .find(|t| t.vertex_count() == d + 1)
            .unwrap();
        for g in decorate_grassmannian(&star, true, false) {
            let h = g.helicity() as usize;
            let w = trip_permutation(&g);
            let expected = DecoratedPermutation::pi(h, d).unwrap();
            assert!(
                w == expected || w == DecoratedPermutation::pi(d - h, d).unwrap(),
                "{w}"
            );
            assert_eq!(w.antiexcedances(), h);
        }
    }
}
