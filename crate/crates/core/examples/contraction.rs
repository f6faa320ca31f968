//! Contracting same-coloured edges of a decorated forest: helicity,
//! dimension and the trip permutation stay put.

use gforest::oracle::{enumerate_trees, GrassForest};
use gforest::permutations::trip_permutation;
use gforest::Result;

fn main() -> Result<()> {
    let shape = enumerate_trees(6)
        .into_iter()
        .max_by_key(|t| t.vertex_count())
        .expect("trees with six leaves exist");
    let all_white = vec![1; shape.vertex_count() - shape.n()];
    let mut g = GrassForest::new(shape, all_white)?;
    println!(
        "start: {}  h={} dim={} trip={}",
        g.canonical_key(),
        g.helicity(),
        g.mom_dimension(),
        trip_permutation(&g)
    );
    while let Some(&(u, v)) = g.contractible_edges().first() {
        g = g.contract_move(u, v)?;
        println!(
            "contract {u}-{v}: {}  h={} dim={} trip={}",
            g.canonical_key(),
            g.helicity(),
            g.mom_dimension(),
            trip_permutation(&g)
        );
    }
    println!("contracted: {}", g.is_contracted());
    println!("{}", g.to_json_line());
    Ok(())
}
