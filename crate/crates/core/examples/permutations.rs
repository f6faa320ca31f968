//! Trip permutations of decorated trees, amalgamation, cyclic rotation and
//! separable permutations.

use gforest::oracle::{decorate_grassmannian, enumerate_trees};
use gforest::permutations::{
    enumerate_grass_tree_permutations, enumerate_separable, trip_permutation, DecoratedPermutation,
};
use gforest::Result;

fn main() -> Result<()> {
    let shape = &enumerate_trees(5)[1];
    for g in decorate_grassmannian(shape, true, false).iter().take(6) {
        let w = trip_permutation(g);
        println!(
            "{}  ->  {w}  (helicity {}, antiexcedances {})",
            g.canonical_key(),
            g.helicity(),
            w.antiexcedances()
        );
    }

    let a = DecoratedPermutation::pi(1, 3)?;
    let b = DecoratedPermutation::pi(2, 4)?;
    let glued = a.amalgamation(&b)?;
    println!(
        "\n{a} * {b} = {glued}, rotated: {}",
        glued.cyclic_rotation()
    );
    println!("{a} + {b} = {}", a.direct_sum(&b));
    println!("json: {}", glued.to_json());

    let perms = enumerate_grass_tree_permutations(5, u64::MAX)?;
    println!(
        "\n{} Grassmannian tree permutations on 5 letters",
        perms.len()
    );

    for m in 1..=7 {
        let by_descents = enumerate_separable(m, true, u64::MAX)?;
        let row: Vec<String> = by_descents.values().map(u64::to_string).collect();
        println!("separable, {m} letters, by descents: {}", row.join(" "));
    }
    Ok(())
}
