// The cube as Cos(S4, <(2,3,4)>, (1,2)), exported in all three formats.
use symcover::cosetgraph::{self, CosetGraphSpec};
use symcover::io::{self, GraphFormat};
use symcover::{PermGroup, Permutation};

fn main() -> symcover::Result<()> {
    let g = PermGroup::symmetric(4);
    let l = PermGroup::from_cycle_strings(4, &["(2,3,4)"])?;
    let spec = CosetGraphSpec::new(g, l, Permutation::parse_cycles("(1,2)", 4)?)?;
    println!("index |G:L| = {}", spec.index());
    println!("valency via |L : L ∩ L^g| = {}", spec.valency_by_intersection(1000)?);

    let cg = cosetgraph::materialize(&spec)?;
    let cube = &cg.graph;
    println!(
        "{} vertices, {} edges, bipartite {}, diameter {:?}",
        cube.vertex_count(),
        cube.edge_count(),
        cube.is_bipartite(),
        cube.diameter()
    );
    for (k, rep) in cg.table.reps().iter().enumerate() {
        println!("  coset {}: L{rep} -> {:?}", k + 1, cube.neighbors(k).iter().map(|v| v + 1).collect::<Vec<_>>());
    }
    let action = cg.table.induced_action();
    println!("S4 on cosets: order {}, arc orbits {}", action.order(), cube.arc_orbit_count(action.generators()));

    for fmt in [GraphFormat::Graph6, GraphFormat::EdgeList, GraphFormat::Dot] {
        let bytes = io::export(cube, fmt)?;
        let back = io::import(&bytes, fmt)?;
        assert_eq!(&back, cube);
        println!("--- {fmt:?}\n{}", String::from_utf8_lossy(&bytes).lines().take(4).collect::<Vec<_>>().join("\n"));
    }
    Ok(())
}
