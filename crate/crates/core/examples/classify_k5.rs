// Every arc-transitive cover and pseudocover of K4 and K5, up to isomorphism.
use symcover::classify::{self, ClassifyOptions};

fn main() -> symcover::Result<()> {
    let opts = ClassifyOptions::default();
    for (n, name) in [(4, "S4"), (4, "A4"), (5, "S5"), (5, "A5"), (5, "F5")] {
        let g = classify::ambient_group(name, n)?;
        print!("{}", classify::enumerate_covers(n, name, &g, &opts)?);
        print!("{}", classify::enumerate_pseudocovers(n, name, &g, &opts)?);
    }
    print!("{}", classify::verify_table_k5(&opts)?);
    Ok(())
}
