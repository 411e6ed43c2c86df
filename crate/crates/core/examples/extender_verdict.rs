// Cover versus pseudocover: the three readings of the verdict on two K5 examples.
use symcover::cosetgraph::CosetGraphSpec;
use symcover::quotient;
use symcover::{PermGroup, Permutation};

fn show(name: &str, spec: &CosetGraphSpec) -> symcover::Result<()> {
    let h = spec.group().point_stabilizer(0)?;
    let check = quotient::cross_check_extender(spec, &h)?;
    println!("{name}");
    println!("  verdict   {}", check.verdict);
    println!("  matching  {:?}", check.matching);
    println!("  stabilizers pairwise distinct: {}", check.stabilizers_distinct);
    println!("  readings agree: {}", check.consistent());
    Ok(())
}

fn main() -> symcover::Result<()> {
    let s5 = PermGroup::symmetric(5);
    let cover = CosetGraphSpec::new(
        s5.clone(),
        PermGroup::from_cycle_strings(5, &["(2,3,4,5)"])?,
        Permutation::parse_cycles("(1,2)", 5)?,
    )?;
    show("L = <(2,3,4,5)>, g = (1,2)", &cover)?;

    let pseudo = CosetGraphSpec::new(
        s5,
        PermGroup::from_cycle_strings(5, &["(2,4)(3,5)", "(3,5)"])?,
        Permutation::parse_cycles("(1,2)(3,4)", 5)?,
    )?;
    show("L = <(2,4)(3,5), (3,5)>, g = (1,2)(3,4)", &pseudo)?;
    Ok(())
}
