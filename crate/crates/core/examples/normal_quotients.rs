// Normal quotients and the factorization of a non-faithful cover.
use symcover::canon;
use symcover::constructions::{self, CoversnRecipe};
use symcover::cosetgraph;
use symcover::quotient::{self, BlockSystem};

fn main() -> symcover::Result<()> {
    // Aut of the cube acts on the 4 antipodal pairs with kernel of order 2
    let cube = cosetgraph::build_coset_graph(&constructions::build_faithful_cover(&CoversnRecipe::preset("cyclic", 4)?)?)?;
    let aut = canon::automorphism_group(&cube)?;
    // antipodal: not adjacent and no common neighbor
    let antipodal: Vec<usize> = (0..8)
        .map(|v| {
            let u = (0..8)
                .find(|&u| u != v && !cube.has_edge(u, v) && cube.neighbors(v).iter().all(|&w| !cube.has_edge(u, w)))
                .unwrap();
            v.min(u)
        })
        .collect();
    let blocks = BlockSystem::from_labels(&antipodal);
    println!("cube blocks {:?}", blocks.blocks());
    let f = quotient::faithful_factorization(&cube, &aut, &blocks)?;
    println!(
        "kernel order {}, Γ_N has {} vertices, normal cover {}, quotient faithful {}, quotient cover {}",
        f.kernel.order(),
        f.normal_quotient.graph.vertex_count(),
        f.gamma_normal_cover,
        f.quotient_faithful,
        f.quotient_cover
    );

    // the 30-vertex cover of K5 with Aut of order 720 is a normal cover
    let spec = constructions::build_faithful_cover(&CoversnRecipe::preset("z2sq", 5)?)?;
    let gamma = cosetgraph::build_coset_graph(&spec)?;
    match quotient::is_normal_cover_search(&gamma, 5, 20_000)? {
        quotient::NormalCoverSearch::Found { normal, blocks } => {
            println!("normal subgroup of order {} with {} orbits", normal.order(), blocks.block_count())
        }
        other => println!("{other:?}"),
    }
    Ok(())
}
