//! Prints `[x^n y^k]` of the Grassmannian forest series for `4 <= n <= 12`
//! as polynomials in `q`, and checks them against the bundled golden table.

use gforest::table::{self, TableFormat};
use gforest::{GFKind, Result};

fn main() -> Result<()> {
    let forest = gforest::genfun::build(GFKind::GrassForest, 14)?;
    let rows = table::table_rows(&forest, 4, 12)?;
    print!("{}", table::render(&rows, TableFormat::Text)?);

    let diffs = table::diff_against_fixture(&rows);
    if diffs.is_empty() {
        println!("all {} rows agree with the golden table", rows.len());
    } else {
        for d in diffs {
            println!("mismatch {d}");
        }
    }
    Ok(())
}
