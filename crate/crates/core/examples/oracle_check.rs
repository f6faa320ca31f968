//! Brute-force enumeration of contracted trees and forests, compared with
//! the generating functions coefficient by coefficient.

use std::time::Instant;

use gforest::genfun::{self, GFKind};
use gforest::oracle::{count_by_statistics, OracleConfig};
use gforest::{GfTables, Result};

fn main() -> Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let tables = GfTables::build(max_n.max(4))?;
    let config = OracleConfig::default();
    for kind in GFKind::ALL {
        for n in 1..=max_n {
            let start = Instant::now();
            let oracle = count_by_statistics(n, kind, true, &config)?;
            let series = genfun::coefficient_counts(tables.get(kind), n)?;
            let verdict = if oracle == series { "agree" } else { "DIFFER" };
            println!(
                "{kind:>14} n={n}: {:>8} objects, {verdict} ({:.1?})",
                genfun::total(&oracle),
                start.elapsed()
            );
        }
    }
    Ok(())
}
