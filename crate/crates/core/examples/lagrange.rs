//! Forest coefficients two ways: by reverting `x / (1 + G_tree)` and by the
//! binomial-power formula.

use gforest::genfun::{self, Family};
use gforest::Result;

fn main() -> Result<()> {
    let order = 12;
    let tree = genfun::build_tree_gf(Family::Grassmannian, order)?;
    let forest = genfun::forest_from_tree(&tree)?;
    for n in 1..=order {
        let lagrange = genfun::forest_coefficient_from_tree(&tree, n)?;
        let same = &lagrange == forest.coeff(n);
        println!("x^{n:<2} {} terms, routes agree: {same}", lagrange.len());
    }
    let via_transform = genfun::build_tree_gf_via_transform(Family::Grassmannian, order)?;
    println!(
        "tree series via the vertex-weight transform agrees: {}",
        via_transform == tree
    );
    Ok(())
}
