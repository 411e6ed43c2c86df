// Canonical forms and automorphism groups: the 144-vertex cover of K6.
use symcover::canon;
use symcover::constructions::{self, CoversnRecipe};
use symcover::cosetgraph;
use symcover::graph::Graph;
use symcover::Permutation;

fn main() -> symcover::Result<()> {
    let spec = constructions::build_faithful_cover(&CoversnRecipe::preset("cyclic", 6)?)?;
    let cg = cosetgraph::materialize(&spec)?;
    let gamma = &cg.graph;
    let aut = canon::automorphism_group(gamma)?;
    println!("{} vertices, valency {}, |Aut| = {}", gamma.vertex_count(), gamma.valency()?, aut.order());
    let s6 = cg.table.induced_action();
    println!("S6 normal in Aut: {}", canon::is_normal_subgroup_of_aut(gamma, &s6)?);

    // relabel at random-ish and recover the same canonical form
    let n = gamma.vertex_count();
    let shuffle = Permutation::from_images((0..n).map(|v| (v * 7 + 3) % n).collect())?;
    let other = gamma.relabel(&shuffle)?;
    let (a, b) = (canon::canonical_form(gamma)?, canon::canonical_form(&other)?);
    println!("digests {} {} equal {}", a.digest(), b.digest(), a.graph() == b.graph());

    let petersen = Graph::from_edges(
        10,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )?;
    println!("Petersen: |Aut| = {}", canon::automorphism_group(&petersen)?.order());
    Ok(())
}
