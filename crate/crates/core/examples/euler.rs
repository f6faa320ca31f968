//! The `q = -1` specialisation: Euler characteristics and the zero-dimensional
//! strata.

use gforest::genfun::{self, GFKind};
use gforest::ring::rat;
use gforest::Result;

fn main() -> Result<()> {
    let forest = genfun::build(GFKind::GrassForest, 12)?;
    for n in 4..=12 {
        let chis: Vec<String> = (2..=n as u32 - 2)
            .map(|k| genfun::euler_from_forest(&forest, n, k).map(|c| c.to_string()))
            .collect::<Result<_>>()?;
        let points: Vec<String> = (2..=n as u32 - 2)
            .map(|k| genfun::q_polynomial(&forest, n, k).map(|p| p.coeff(0, 0).to_string()))
            .collect::<Result<_>>()?;
        println!(
            "n={n:>2}  chi: {}   points: {}",
            chis.join(" "),
            points.join(" ")
        );
    }
    let at_minus_one = forest.eval_q(&rat(-1));
    println!("\nG_forest(x, y, -1), which should be 1 / ((1 - x)(1 - xy)):");
    for n in 0..=5 {
        println!("  [x^{n}] = {}", at_minus_one.coeff(n));
    }
    Ok(())
}
