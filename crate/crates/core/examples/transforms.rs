//! The noncrossing-partition and planar-tree transforms on a few classical
//! weights.

use gforest::ring::BivarPoly;
use gforest::transforms::{forest_transform, speicher_transform, tree_transform, WeightFunction};
use gforest::{Result, TruncSeries};

fn show(label: &str, s: &TruncSeries) {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    println!("{label:<28} {}", coeffs.join(", "));
}

fn main() -> Result<()> {
    let order = 10;

    let ones = WeightFunction::from_fn(1, order, |_| BivarPoly::one());
    show(
        "Catalan",
        &speicher_transform(&ones.to_block_series(order))?,
    );

    let pairs = WeightFunction::from_fn(2, order, |d| {
        if d == 2 {
            BivarPoly::one()
        } else {
            BivarPoly::zero()
        }
    });
    show(
        "noncrossing matchings",
        &speicher_transform(&pairs.to_block_series(order))?,
    );

    let all_trees = WeightFunction::from_fn(3, order, |_| BivarPoly::one()).to_series(order);
    show("little Schroeder", &tree_transform(&all_trees)?);

    let signed = WeightFunction::from_fn(3, order, |d| {
        BivarPoly::from_int(if d % 2 == 1 { 1 } else { -1 })
    });
    show("signed trees", &tree_transform(&signed.to_series(order))?);

    let by_vertices = WeightFunction::from_fn(3, order, |_| BivarPoly::y()).to_series(order);
    show(
        "forests, y per vertex",
        &forest_transform(&by_vertices, &BivarPoly::one())?,
    );
    Ok(())
}
