// The dihedral and abelian pseudocover families, checked group-theoretically.
use symcover::constructions::{self, K2mRecipe, KabRecipe};

fn main() -> symcover::Result<()> {
    for m in 2..=8 {
        let r = K2mRecipe::new(m)?;
        let spec = constructions::build_dihedral_pseudocover(&r)?;
        let report = constructions::verify_k2m(m)?;
        println!(
            "k2m m={m}: n={} |G|={} predicted {} -> {}",
            r.n(),
            spec.group().order(),
            constructions::predicted_group_k2m(m),
            if report.all_passed() { "ok" } else { "FAILED" }
        );
    }
    for a in 2..=5 {
        for b in a..=5 {
            let report = constructions::verify_kab(a, b)?;
            println!(
                "kab a={a} b={b}: n={} predicted {} -> {} ({} checks)",
                KabRecipe::new(a, b)?.n(),
                constructions::predicted_group_kab(a, b),
                if report.all_passed() { "ok" } else { "FAILED" },
                report.checks.len()
            );
        }
    }
    let r = KabRecipe::new(2, 3)?;
    for k in 0..r.a {
        println!("z_{k} = {} (closed form {})", r.z(k), r.z_closed_form(k));
    }
    Ok(())
}
