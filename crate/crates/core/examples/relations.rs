//! Substitutes the computed series into the shipped polynomial relations and
//! shows that a perturbed series is caught.

use gforest::genfun::GFKind;
use gforest::relations::{self, Relation};
use gforest::Result;

fn main() -> Result<()> {
    for kind in GFKind::ALL {
        let report = relations::verify_algebraic_relation(kind, 12)?;
        println!("{report}");
    }
    let relation = Relation::for_kind(GFKind::GrassForest);
    let residual = relation.evaluate(&relations::perturbed(GFKind::GrassForest, 10)?);
    let first = (0..=10).find(|&n| !residual.coeff(n).is_zero());
    println!("perturbed grass-forest series: first nonzero residual at x^{first:?}");
    Ok(())
}
