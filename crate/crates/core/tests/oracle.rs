use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gforest::genfun::{self, GFKind, GfTables};
use gforest::oracle::{
    count_by_statistics, decorate_grassmannian, enumerate_dissections, enumerate_forests,
    enumerate_trees, GrassForest, OracleConfig,
};
use gforest::ring::rat;

fn tables() -> GfTables {
    GfTables::build(12).unwrap()
}

#[test]
fn oracle_matches_series_at_nine() {
    let tables = tables();
    let config = OracleConfig::default();
    for kind in GFKind::ALL {
        let oracle = count_by_statistics(9, kind, true, &config).unwrap();
        let series = genfun::coefficient_counts(tables.get(kind), 9).unwrap();
        assert_eq!(oracle, series, "{kind}");
    }
}

/// Contracting every decoration of every shape lands exactly on the
/// contracted decorations, and the result does not depend on move order.
#[test]
fn refinement_classes_have_contracted_representatives() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=6 {
        for plabic in [false, true] {
            let shapes = enumerate_forests(n, true);
            let contracted: BTreeSet<String> = shapes
                .iter()
                .flat_map(|s| decorate_grassmannian(s, true, plabic))
                .map(|g| g.canonical_key())
                .collect();
            let mut reached = BTreeSet::new();
            for shape in &shapes {
                for g in decorate_grassmannian(shape, false, plabic) {
                    let fully = g.contract_fully();
                    assert!(fully.is_contracted());
                    assert_eq!(fully.helicity(), g.helicity());
                    assert_eq!(fully.mom_dimension(), g.mom_dimension());
                    let key = fully.canonical_key();
                    if !g.is_contracted() && rng.random_bool(0.2) {
                        assert_eq!(contract_randomly(&g, &mut rng).canonical_key(), key);
                    }
                    reached.insert(key);
                }
            }
            assert_eq!(reached, contracted, "n = {n}, plabic = {plabic}");
        }
    }
}

fn contract_randomly(g: &GrassForest, rng: &mut StdRng) -> GrassForest {
    let mut g = g.clone();
    loop {
        let edges = g.contractible_edges();
        if edges.is_empty() {
            return g;
        }
        let (u, v) = edges[rng.random_range(0..edges.len())];
        g = g.contract_move(u, v).unwrap();
    }
}

#[test]
fn contracted_histogram_counts_classes() {
    let config = OracleConfig::default();
    for n in 1..=6 {
        let mut classes: BTreeMap<(u32, u32), BTreeSet<String>> = BTreeMap::new();
        for shape in enumerate_forests(n, true) {
            for g in decorate_grassmannian(&shape, false, false) {
                let c = g.contract_fully();
                classes
                    .entry((c.helicity(), c.mom_dimension()))
                    .or_default()
                    .insert(c.canonical_key());
            }
        }
        let hist: BTreeMap<(u32, u32), BigUint> = classes
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v.len())))
            .collect();
        assert_eq!(
            hist,
            count_by_statistics(n, GFKind::GrassForest, true, &config).unwrap()
        );
    }
}

#[test]
fn helicity_symmetry() {
    let tables = tables();
    for kind in GFKind::ALL {
        for n in 1..=12 {
            let counts = genfun::coefficient_counts(tables.get(kind), n).unwrap();
            for (&(k, r), c) in &counts {
                assert_eq!(
                    counts.get(&(n as u32 - k, r)),
                    Some(c),
                    "{kind} ({n},{k},{r})"
                );
            }
        }
    }
}

#[test]
fn top_dimension_is_unique() {
    let tables = tables();
    for n in 4..=12 {
        for k in 2..=n as u32 - 2 {
            let poly = genfun::q_polynomial(&tables.grass_forest, n, k).unwrap();
            let top = 2 * n as u32 - 4;
            assert_eq!(poly.degree_q(), Some(top));
            assert_eq!(poly.coeff(0, top), rat(1));
        }
    }
}

#[test]
fn plabic_trees_refine_large_schroeder() {
    // large Schroeder: (m+1) S(m) = 3(2m-1) S(m-1) - (m-2) S(m-2), S(0) = 1, S(1) = 2
    let mut big = vec![1i64, 2];
    for m in 2..10i64 {
        big.push((3 * (2 * m - 1) * big[m as usize - 1] - (m - 2) * big[m as usize - 2]) / (m + 1));
    }
    let tables = tables();
    let at_one = tables.plabic_tree.eval_q(&rat(1)).eval_y(&rat(1));
    let config = OracleConfig::default();
    for n in 2..=9 {
        let oracle =
            genfun::total(&count_by_statistics(n, GFKind::PlabicTree, true, &config).unwrap());
        assert_eq!(oracle.to_i64(), Some(big[n - 2]), "n = {n}");
        assert_eq!(at_one.coeff(n).constant_term(), rat(big[n - 2]));
    }
}

#[test]
fn shape_counts() {
    // series-reduced planar trees with n leaves are little Schroeder numbers,
    // and dissections of the n-gon are in bijection with them
    let little = [1usize, 1, 1, 3, 11, 45, 197, 903];
    for n in 2..=8 {
        assert_eq!(enumerate_trees(n).len(), little[n - 1]);
        assert_eq!(enumerate_dissections(n).len(), little[n - 1], "n = {n}");
    }
}

#[test]
fn budget_is_enforced() {
    let config = OracleConfig {
        budget: 100,
        ..OracleConfig::default()
    };
    assert!(count_by_statistics(7, GFKind::GrassForest, true, &config).is_err());
}
