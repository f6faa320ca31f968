//! Cross-checks between the generating functions, the brute-force oracle
//! and the permutation calculus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::genfun::{self, GFKind, GfTables};
use crate::oracle::{
    count_by_statistics, decorate_grassmannian, enumerate_forests, enumerate_trees, Histogram,
    OracleConfig,
};
use crate::permutations::{
    enumerate_grass_tree_permutations, enumerate_separable, forest_permutation_closure,
    histogram_by_statistics, trip_permutation,
};
use crate::relations;
use crate::ring::{rat, BivarPoly};
use crate::series::TruncSeries;
use crate::table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &'static str, failure: Option<String>, ok: String) -> Self {
        match failure {
            None => CheckReport {
                name,
                passed: true,
                detail: ok,
            },
            Some(detail) => CheckReport {
                name,
                passed: false,
                detail,
            },
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}

/// First `(k, r)` at which two histograms differ, with both counts.
pub fn first_difference(a: &Histogram, b: &Histogram) -> Option<((u32, u32), BigUint, BigUint)> {
    let keys: BTreeSet<&(u32, u32)> = a.keys().chain(b.keys()).collect();
    keys.into_iter().find_map(|key| {
        let x = a.get(key).cloned().unwrap_or_default();
        let y = b.get(key).cloned().unwrap_or_default();
        (x != y).then_some((*key, x, y))
    })
}

/// The golden table against the Grassmannian forest series.
pub fn golden_table(tables: &GfTables) -> Result<CheckReport> {
    let rows = table::table_rows(&tables.grass_forest, 4, 12)?;
    let diffs = table::diff_against_fixture(&rows);
    let fixture_rows = table::golden_table().len();
    Ok(CheckReport::new(
        "golden table",
        (!diffs.is_empty() || rows.len() != fixture_rows).then(|| diffs.join("; ")),
        format!("{} rows identical", rows.len()),
    ))
}

/// Oracle histograms against `[x^n]` of every series for `1 <= n <= max_n`.
pub fn oracle_equivalence(
    tables: &GfTables,
    max_n: usize,
    config: &OracleConfig,
) -> Result<CheckReport> {
    let mut failure = None;
    'outer: for n in 1..=max_n {
        for kind in GFKind::ALL {
            let oracle = count_by_statistics(n, kind, true, config)?;
            let series = genfun::coefficient_counts(tables.get(kind), n)?;
            if let Some(((k, r), o, s)) = first_difference(&oracle, &series) {
                failure = Some(format!(
                    "{kind} at (n,k,r) = ({n},{k},{r}): oracle {o}, series {s}"
                ));
                break 'outer;
            }
        }
    }
    Ok(CheckReport::new(
        "oracle equivalence",
        failure,
        format!("all four families agree for n <= {max_n}"),
    ))
}

/// Second reversion against the binomial-power route for every `n <= order`.
pub fn dual_path(tables: &GfTables) -> Result<CheckReport> {
    let mut failure = None;
    for (tree, forest) in [
        (&tables.plabic_tree, &tables.plabic_forest),
        (&tables.grass_tree, &tables.grass_forest),
    ] {
        for n in 1..=tables.order {
            let lagrange = genfun::forest_coefficient_from_tree(tree, n)?;
            if &lagrange != forest.coeff(n) {
                failure.get_or_insert(format!("x^{n}: {lagrange} vs {}", forest.coeff(n)));
            }
        }
    }
    Ok(CheckReport::new(
        "dual path",
        failure,
        format!(
            "reversion and Lagrange routes agree through x^{}",
            tables.order
        ),
    ))
}

/// Every shipped algebraic relation against the series at `order`.
pub fn algebraic_relations(tables: &GfTables, order: usize) -> CheckReport {
    let order = order.min(tables.order);
    let mut failure = None;
    for kind in GFKind::ALL {
        let report = relations::check_series(kind, &tables.get(kind).truncate(order));
        if !report.holds() {
            failure.get_or_insert(report.to_string());
        }
    }
    CheckReport::new(
        "relations",
        failure,
        format!("all four relations hold through x^{order}"),
    )
}

/// `[x^n y^k]` of the forest series at `q = -1` is 1 for `2 <= k <= n - 2`,
/// and the whole specialisation is `1 / ((1 - x)(1 - xy))`.
pub fn euler(tables: &GfTables, max_n: usize) -> Result<CheckReport> {
    let max_n = max_n.min(tables.order);
    let mut failure = None;
    for n in 4..=max_n {
        for k in 2..=(n - 2) as u32 {
            let chi = genfun::euler_from_forest(&tables.grass_forest, n, k)?;
            if chi != rat(1) {
                failure.get_or_insert(format!("({n},{k}) -> {chi}"));
            }
        }
    }
    let at_minus_one = tables.grass_forest.eval_q(&rat(-1));
    let order = tables.order;
    let closed = TruncSeries::from_fn(order, |n| {
        BivarPoly::from_terms((0..=n as u32).map(|k| (rat(1), k, 0)))
    });
    if at_minus_one != closed {
        failure.get_or_insert("q = -1 specialisation differs from 1/((1-x)(1-xy))".into());
    }
    Ok(CheckReport::new(
        "euler",
        failure,
        format!("chi = 1 for n <= {max_n} and closed form through x^{order}"),
    ))
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// `[x^n y^k q^0]` of the forest series is `C(n, k)` for `2 <= k <= n - 2`.
pub fn zero_dimensional(tables: &GfTables, max_n: usize) -> Result<CheckReport> {
    let max_n = max_n.min(tables.order);
    let mut failure = None;
    for n in 4..=max_n {
        let counts = genfun::coefficient_counts(&tables.grass_forest, n)?;
        for k in 2..=n - 2 {
            let c = counts
                .get(&(k as u32, 0))
                .cloned()
                .unwrap_or_else(BigUint::zero);
            if c != binomial(n, k) {
                failure.get_or_insert(format!("({n},{k}): {c}"));
            }
        }
    }
    Ok(CheckReport::new(
        "zero-dimensional strata",
        failure,
        format!("binomial counts for n <= {max_n}"),
    ))
}

/// Antiexcedances of the trip permutation equal helicity on every contracted
/// Grassmannian forest with `n <= max_n` boundary vertices.
pub fn helicity_bridge(max_n: usize) -> CheckReport {
    let mut failure = None;
    let mut total = 0usize;
    for n in 1..=max_n {
        for shape in enumerate_forests(n, true) {
            for g in decorate_grassmannian(&shape, true, false) {
                total += 1;
                let w = trip_permutation(&g);
                if w.antiexcedances() != g.helicity() as usize {
                    failure.get_or_insert(format!("{} -> {w}", g.canonical_key()));
                }
            }
        }
    }
    CheckReport::new(
        "antiexcedances = helicity",
        failure,
        format!("{total} forests with n <= {max_n}"),
    )
}

/// Separable permutations of `[n - 1]` by descents against the plabic tree
/// series at `y`-degree `descents + 1`, `q = 1`.
pub fn separable_bridge(tables: &GfTables, max_letters: usize, budget: u64) -> Result<CheckReport> {
    let max_letters = max_letters.min(tables.order.saturating_sub(1));
    let at_one = tables.plabic_tree.eval_q(&rat(1));
    let mut failure = None;
    for m in 1..=max_letters {
        let hist = enumerate_separable(m, true, budget)?;
        let coeff = at_one.coeff(m + 1);
        for k in 0..=m as u32 + 1 {
            let series = coeff.coeff(k, 0);
            let perms = if k == 0 {
                0
            } else {
                hist.get(&(k as usize - 1)).copied().unwrap_or(0)
            };
            if series != rat(perms as i64) {
                failure.get_or_insert(format!(
                    "{m} letters, {} descents: {perms} vs {series}",
                    k as i64 - 1
                ));
            }
        }
    }
    Ok(CheckReport::new(
        "separable permutations",
        failure,
        format!("descent histograms for up to {max_letters} letters"),
    ))
}

/// Tree permutations by (antiexcedances, mom-dimension) against the
/// Grassmannian tree series, and as sets against trips of oracle trees.
pub fn tree_permutations(tables: &GfTables, max_n: usize, budget: u64) -> Result<CheckReport> {
    let mut failure = None;
    for n in 1..=max_n.min(tables.order) {
        let perms = enumerate_grass_tree_permutations(n, budget)?;
        let hist = to_histogram(&histogram_by_statistics(&perms));
        let series = genfun::coefficient_counts(&tables.grass_tree, n)?;
        if let Some(((k, r), a, b)) = first_difference(&hist, &series) {
            failure.get_or_insert(format!(
                "n = {n}, (k,r) = ({k},{r}): {a} permutations vs {b}"
            ));
        }
        let closure: BTreeSet<_> = perms.into_iter().map(|p| p.perm).collect();
        let trips: BTreeSet<_> = enumerate_trees(n)
            .iter()
            .flat_map(|t| decorate_grassmannian(t, true, false))
            .map(|g| trip_permutation(&g))
            .collect();
        if closure != trips {
            failure.get_or_insert(format!("n = {n}: closure and trip permutations differ"));
        }
    }
    Ok(CheckReport::new(
        "tree permutations",
        failure,
        format!("closure matches trees for n <= {max_n}"),
    ))
}

/// Direct-sum and rotation closure of tree permutations against trip
/// permutations of oracle forests.
pub fn forest_permutations(max_n: usize, budget: u64) -> Result<CheckReport> {
    let mut failure = None;
    for n in 1..=max_n {
        let closure = forest_permutation_closure(n, budget)?;
        let trips: BTreeSet<_> = enumerate_forests(n, true)
            .iter()
            .flat_map(|f| decorate_grassmannian(f, true, false))
            .map(|g| trip_permutation(&g))
            .collect();
        if closure != trips {
            let missing = trips.difference(&closure).next().map(|p| p.to_string());
            let extra = closure.difference(&trips).next().map(|p| p.to_string());
            failure.get_or_insert(format!("n = {n}: missing {missing:?}, extra {extra:?}"));
        }
    }
    Ok(CheckReport::new(
        "forest permutations",
        failure,
        format!("closure matches forests for n <= {max_n}"),
    ))
}

#[derive(Clone, Debug)]
pub struct CheckSettings {
    pub oracle_max_n: usize,
    pub oracle: OracleConfig,
}

/// All checks in a fixed order.
pub fn run_all(tables: &GfTables, settings: &CheckSettings) -> Result<Vec<CheckReport>> {
    let budget = settings.oracle.budget;
    let perm_n = settings.oracle_max_n.min(7);
    Ok(vec![
        golden_table(tables)?,
        oracle_equivalence(tables, settings.oracle_max_n, &settings.oracle)?,
        dual_path(tables)?,
        algebraic_relations(tables, 12),
        euler(tables, 12)?,
        zero_dimensional(tables, 12)?,
        helicity_bridge(settings.oracle_max_n.min(8)),
        separable_bridge(tables, 9, budget)?,
        tree_permutations(tables, perm_n, budget)?,
        forest_permutations(settings.oracle_max_n.min(6), budget)?,
    ])
}

/// Histogram keyed by `(k, r)` from a map with `usize` keys.
pub fn to_histogram(map: &BTreeMap<(usize, usize), u64>) -> Histogram {
    map.iter()
        .map(|(&(k, r), &c)| ((k as u32, r as u32), BigUint::from(c)))
        .collect()
}
