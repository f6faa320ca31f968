//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed. Set `GFOREST_ACCEPTANCE_EXTENDED=1` to push the oracle to n = 9.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gforest::genfun::{self, Family, GFKind, GfTables};
use gforest::oracle::{
    count_by_statistics, decorate_grassmannian, enumerate_forests, enumerate_nc_partitions,
    enumerate_trees, GrassForest, OracleConfig, PlanarForest,
};
use gforest::permutations::{
    enumerate_grass_tree_permutations, enumerate_separable, histogram_by_statistics,
    trip_permutation,
};
use gforest::relations;
use gforest::ring::{rat, BivarPoly};
use gforest::series::TruncSeries;
use gforest::transforms::{speicher_transform, tree_transform, WeightFunction};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const ORDER: usize = 14;
const SEED: u64 = 0x6f72_6573_7466;

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn counts_to_u64(map: &BTreeMap<(u32, u32), BigUint>) -> BTreeMap<(u32, u32), u64> {
    map.iter().map(|(k, v)| (*k, v.to_u64().unwrap())).collect()
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gforest").chain(args.iter().copied());
    let status = gforest::cli::run(argv, &mut out, &mut err);
    (status, String::from_utf8(out).expect("utf-8 output"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (status, latex) = run_cli(&[
        "table",
        "--n-min",
        "4",
        "--n-max",
        "12",
        "--format",
        "latex-table",
    ]);
    let elapsed = start.elapsed();
    let fixture = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/golden_table.tex"
    ))
    .map_err(|e| format!("cannot read fixture: {e}"))?;
    if status != 0 {
        return Err(format!("table command exited with {status}"));
    }
    if latex != fixture {
        let first = latex
            .lines()
            .zip(fixture.lines())
            .find(|(a, b)| a != b)
            .map(|(a, b)| format!("got `{a}`, expected `{b}`"))
            .unwrap_or_else(|| "row counts differ".into());
        return Err(first);
    }
    let (_, text) = run_cli(&["table", "--n-min", "4", "--n-max", "12", "--format", "text"]);
    for (t, f) in text.lines().zip(fixture.lines()) {
        let poly = t.split_once('\t').map(|(_, p)| p).unwrap_or("");
        if !f.contains(&format!("${poly}$")) {
            return Err(format!("text row `{t}` differs from `{f}`"));
        }
    }
    let rows = fixture.lines().count();
    if elapsed.as_secs() >= 30 {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{rows} rows byte-identical in {:.2?}", elapsed))
}

fn criterion_2(tables: &GfTables) -> Outcome {
    let max_n = if std::env::var_os("GFOREST_ACCEPTANCE_EXTENDED").is_some() {
        9
    } else {
        8
    };
    let config = OracleConfig::default();
    let mut objects = BigUint::zero();
    for n in 1..=max_n {
        for kind in GFKind::ALL {
            let oracle = count_by_statistics(n, kind, true, &config).map_err(|e| e.to_string())?;
            let series =
                genfun::coefficient_counts(tables.get(kind), n).map_err(|e| e.to_string())?;
            if oracle != series {
                let key = oracle
                    .keys()
                    .chain(series.keys())
                    .find(|k| oracle.get(k) != series.get(k))
                    .copied()
                    .unwrap();
                return Err(format!(
                    "{kind} at (n,k,r) = ({n},{},{}): oracle {:?}, series {:?}",
                    key.0,
                    key.1,
                    oracle.get(&key),
                    series.get(&key)
                ));
            }
            objects += genfun::total(&oracle);
        }
    }
    Ok(format!(
        "four families agree for n <= {max_n} ({objects} contracted objects)"
    ))
}

fn criterion_3(tables: &GfTables) -> Outcome {
    for n in 4..=12 {
        for k in 2..=n as u32 - 2 {
            let chi =
                genfun::euler_from_forest(&tables.grass_forest, n, k).map_err(|e| e.to_string())?;
            if chi != rat(1) {
                return Err(format!("chi({n},{k}) = {chi}"));
            }
        }
    }
    // 1 / ((1 - x)(1 - xy)) by exact series division
    let denom = TruncSeries::polynomial(
        ORDER,
        [
            (0, BivarPoly::one()),
            (1, BivarPoly::from_int(-1) - BivarPoly::y()),
            (2, BivarPoly::y()),
        ],
    );
    let closed = TruncSeries::one(ORDER)
        .div(&denom)
        .map_err(|e| e.to_string())?;
    let specialised = tables.grass_forest.eval_q(&rat(-1));
    for n in 0..=ORDER {
        if specialised.coeff(n) != closed.coeff(n) {
            return Err(format!(
                "x^{n}: {} vs {}",
                specialised.coeff(n),
                closed.coeff(n)
            ));
        }
    }
    Ok(format!(
        "chi = 1 for n <= 12, closed form through x^{ORDER}"
    ))
}

fn criterion_4(tables: &GfTables) -> Outcome {
    for n in 4..=12usize {
        let counts =
            genfun::coefficient_counts(&tables.grass_forest, n).map_err(|e| e.to_string())?;
        for k in 2..=n - 2 {
            let got = counts.get(&(k as u32, 0)).cloned().unwrap_or_default();
            if got != binomial(n as u64, k as u64) {
                return Err(format!("({n},{k}): {got}"));
            }
        }
    }
    Ok("[x^n y^k q^0] = C(n,k) for n <= 12".into())
}

fn criterion_5(tables: &GfTables) -> Outcome {
    let mut degrees = Vec::new();
    for kind in [GFKind::GrassTree, GFKind::GrassForest] {
        let relation = relations::Relation::for_kind(kind);
        let residual = relation.evaluate(&tables.get(kind).truncate(12));
        if let Some(n) = (0..=12).find(|&n| !residual.coeff(n).is_zero()) {
            return Err(format!(
                "{kind}: residual at x^{n} is {}",
                residual.coeff(n)
            ));
        }
        degrees.push(relation.degree());
    }
    if degrees != [5, 6] {
        return Err(format!("relation degrees {degrees:?}"));
    }
    Ok("degree-5 tree and degree-6 forest relations vanish through x^12".into())
}

fn criterion_6(tables: &GfTables) -> Outcome {
    for family in [Family::Plabic, Family::Grassmannian] {
        let (tree, forest) = match family {
            Family::Plabic => (&tables.plabic_tree, &tables.plabic_forest),
            Family::Grassmannian => (&tables.grass_tree, &tables.grass_forest),
        };
        for n in 1..=ORDER {
            let lagrange =
                genfun::forest_coefficient_from_tree(tree, n).map_err(|e| e.to_string())?;
            if &lagrange != forest.coeff(n) {
                return Err(format!(
                    "{family:?} x^{n}: {lagrange} vs {}",
                    forest.coeff(n)
                ));
            }
        }
    }
    Ok(format!(
        "reversion = Lagrange for n <= {ORDER}, both families"
    ))
}

fn criterion_7() -> Outcome {
    let order = 12;
    let ones = WeightFunction::from_fn(1, order, |_| BivarPoly::one());
    let nc = speicher_transform(&ones.to_block_series(order)).map_err(|e| e.to_string())?;
    for n in 1..=10 {
        let catalan = binomial(2 * n as u64, n as u64) / BigUint::from(n as u64 + 1);
        let partitions = enumerate_nc_partitions(n).len();
        if nc.coeff(n) != &BivarPoly::constant(rat(catalan.to_i64().unwrap()))
            || BigUint::from(partitions) != catalan
        {
            return Err(format!("Catalan x^{n}: {}", nc.coeff(n)));
        }
    }

    let trees =
        tree_transform(&WeightFunction::from_fn(3, order, |_| BivarPoly::one()).to_series(order))
            .map_err(|e| e.to_string())?;
    // little Schroeder: (m+1) s(m+1) = 3(2m-1) s(m) - (m-2) s(m-1), s(1) = s(2) = 1
    let mut s = vec![0i64, 1, 1];
    for m in 2..12i64 {
        let next = (3 * (2 * m - 1) * s[m as usize] - (m - 2) * s[m as usize - 1]) / (m + 1);
        s.push(next);
    }
    for n in 2..=10 {
        if trees.coeff(n) != &BivarPoly::from_int(s[n - 1]) {
            return Err(format!(
                "little Schroeder x^{n}: {} vs {}",
                trees.coeff(n),
                s[n - 1]
            ));
        }
        if n <= 8 && enumerate_trees(n).len() as i64 != s[n - 1] {
            return Err(format!(
                "{} planar trees with {n} leaves",
                enumerate_trees(n).len()
            ));
        }
    }

    let signed = WeightFunction::from_fn(3, order, |d| {
        BivarPoly::from_int(if d % 2 == 1 { 1 } else { -1 })
    });
    let ones_out = tree_transform(&signed.to_series(order)).map_err(|e| e.to_string())?;
    for n in 2..=12 {
        if !ones_out.coeff(n).is_one() {
            return Err(format!(
                "signed tree transform x^{n}: {}",
                ones_out.coeff(n)
            ));
        }
    }
    Ok("Catalan and little Schroeder through x^10, all ones through x^12".into())
}

fn criterion_8(tables: &GfTables) -> Outcome {
    let mut forests = 0usize;
    for n in 1..=8 {
        for shape in enumerate_forests(n, true) {
            for g in decorate_grassmannian(&shape, true, false) {
                let w = trip_permutation(&g);
                if w.antiexcedances() != g.helicity() as usize {
                    return Err(format!(
                        "{} has trip {w} with {} antiexcedances",
                        g.canonical_key(),
                        w.antiexcedances()
                    ));
                }
                forests += 1;
            }
        }
    }

    let at_one = tables.plabic_tree.eval_q(&rat(1));
    for letters in 1..=9 {
        let hist = enumerate_separable(letters, true, u64::MAX).map_err(|e| e.to_string())?;
        let coeff = at_one.coeff(letters + 1);
        let from_series: BTreeMap<usize, u64> = (1..=letters as u32 + 1)
            .filter_map(|k| {
                let c = coeff.coeff(k, 0);
                (!c.is_zero()).then(|| (k as usize - 1, c.to_integer().to_u64().unwrap()))
            })
            .collect();
        if hist != from_series {
            return Err(format!("{letters} letters: {hist:?} vs {from_series:?}"));
        }
    }

    for n in 1..=7 {
        let perms = enumerate_grass_tree_permutations(n, u64::MAX).map_err(|e| e.to_string())?;
        let hist: BTreeMap<(u32, u32), u64> = histogram_by_statistics(&perms)
            .into_iter()
            .map(|((k, r), c)| ((k as u32, r as u32), c))
            .collect();
        let series = counts_to_u64(
            &genfun::coefficient_counts(&tables.grass_tree, n).map_err(|e| e.to_string())?,
        );
        if hist != series {
            return Err(format!("tree permutations n = {n}: {hist:?} vs {series:?}"));
        }
    }
    Ok(format!(
        "{forests} forests (n <= 8), separable up to 9 letters, tree permutations n <= 7"
    ))
}

fn random_decoration(shape: &PlanarForest, rng: &mut StdRng) -> GrassForest {
    let helicity = shape
        .internal_vertices()
        .map(|v| {
            let d = shape.degree(v) as u32;
            if d == 1 {
                rng.random_range(0..=1)
            } else if rng.random_bool(0.85) {
                if rng.random_bool(0.5) {
                    1
                } else {
                    d - 1
                }
            } else {
                rng.random_range(1..d)
            }
        })
        .collect();
    GrassForest::new(shape.clone(), helicity).expect("helicities are in range")
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let shapes: Vec<PlanarForest> = (5..=9)
        .flat_map(|n| enumerate_forests(n, true))
        .filter(|f| f.internal_vertices().filter(|&v| f.degree(v) >= 3).count() >= 3)
        .collect();
    let mut moves = 0usize;
    let mut starts = 0usize;
    while moves < 2000 {
        let shape = &shapes[rng.random_range(0..shapes.len())];
        let mut g = random_decoration(shape, &mut rng);
        if g.is_contracted() {
            continue;
        }
        starts += 1;
        let (h, dim, trip) = (g.helicity(), g.mom_dimension(), trip_permutation(&g));
        loop {
            let edges = g.contractible_edges();
            if edges.is_empty() {
                break;
            }
            let (u, v) = edges[rng.random_range(0..edges.len())];
            let (a, b) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
            let next = g.contract_move(a, b).map_err(|e| e.to_string())?;
            moves += 1;
            if next.helicity() != h
                || next.mom_dimension() != dim
                || trip_permutation(&next) != trip
            {
                return Err(format!(
                    "move {a}-{b} on {} changed statistics: h {} -> {}, dim {} -> {}, trip {trip} -> {}",
                    g.canonical_key(),
                    h,
                    next.helicity(),
                    dim,
                    next.mom_dimension(),
                    trip_permutation(&next)
                ));
            }
            g = next;
        }
        if !g.is_contracted() {
            return Err(format!(
                "{} still has contractible edges",
                g.canonical_key()
            ));
        }
    }
    Ok(format!(
        "{moves} random moves from {starts} decorated forests (seed {SEED:#x})"
    ))
}

fn main() -> ExitCode {
    let tables = match GfTables::build(ORDER) {
        Ok(t) => t,
        Err(e) => {
            println!("[FAIL] could not build the series: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<Criterion> = vec![
        ("1 golden table", Box::new(criterion_1)),
        ("2 oracle equivalence", Box::new(|| criterion_2(&tables))),
        ("3 Euler characteristic", Box::new(|| criterion_3(&tables))),
        (
            "4 zero-dimensional strata",
            Box::new(|| criterion_4(&tables)),
        ),
        ("5 algebraic relations", Box::new(|| criterion_5(&tables))),
        ("6 dual path", Box::new(|| criterion_6(&tables))),
        ("7 transform ladder", Box::new(criterion_7)),
        ("8 permutation bridge", Box::new(|| criterion_8(&tables))),
        ("9 contraction invariance", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.2?})", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
