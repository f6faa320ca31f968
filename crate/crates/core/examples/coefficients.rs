//! Single coefficients of all four series, and their (k, r) histograms.

use gforest::genfun::{self, GFKind};
use gforest::{GfTables, Result};

fn main() -> Result<()> {
    let tables = GfTables::build(10)?;
    for kind in GFKind::ALL {
        let poly = genfun::q_polynomial(tables.get(kind), 6, 3)?;
        println!("{kind:>14}  [x^6 y^3] = {poly}");
    }

    let counts = genfun::coefficient_counts(&tables.grass_forest, 5)?;
    println!("\nGrassmannian forests on 5 boundary vertices:");
    for ((k, r), c) in &counts {
        println!("  helicity {k}, dimension {r}: {c}");
    }
    println!("  total {}", genfun::total(&counts));
    Ok(())
}
