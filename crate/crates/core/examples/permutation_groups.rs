// Schreier-Sims on a few classic groups: orders, membership, orbits.
use symcover::{PermGroup, Permutation};

fn main() -> symcover::Result<()> {
    let p = Permutation::parse_cycles("(1,2,3)(4,5)", 6)?;
    let q = Permutation::parse_cycles("(2,6)", 6)?;
    println!("p = {p}, order {}, parity {:?}", p.order(), p.parity());
    println!("p then q = {}", p.compose(&q)?);
    println!("[p,q] = {}", p.commutator(&q)?);

    // the Frobenius group of order 20 and PGL(2,5) on 6 points
    let f20 = PermGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(2,3,5,4)"])?;
    println!("F20: order {}, 2-transitive {}", f20.order(), f20.is_2_transitive()?);
    let pgl = PermGroup::from_cycle_strings(6, &["(1,2,3,4,5)", "(2,3,5,4)", "(1,6)(2,5)"])?;
    println!("PGL(2,5) on 6 points: order {}, giant {}", pgl.order(), pgl.classify_giant());

    let s12 = PermGroup::symmetric(12);
    println!("|S12| = {}", s12.order());
    let stab = s12.pointwise_stabilizer(&[0, 1, 2])?;
    println!("pointwise stabilizer of 1,2,3 has order {}", stab.order());

    let m = PermGroup::from_cycle_strings(7, &["(1,2,3,4,5,6,7)", "(3,7)(5,6)"])?;
    println!("<(1..7), (3,7)(5,6)> has order {} (Fano plane)", m.order());
    println!("contains (1,2)? {}", m.contains(&Permutation::parse_cycles("(1,2)", 7)?)?);
    Ok(())
}
