// Recipe files: parse, build, write back.
use symcover::constructions::Recipe;
use symcover::quotient;

const TEXT: &str = "\
# a cover of K5 from the Klein four-group
kind = coversn
n = 5
L = (2,3)(4,5)
L = (2,4)(3,5)
";

fn main() -> symcover::Result<()> {
    for text in [TEXT, "kind = k2m\nm = 3\n", "kind = kab\na = 2\nb = 3\n"] {
        let recipe: Recipe = text.parse()?;
        let spec = recipe.build()?;
        let h = spec.group().point_stabilizer(recipe.omega())?;
        let verdict = quotient::classify_extender(&spec, &h)?;
        println!("{} n={} -> {verdict}", recipe.kind(), recipe.n());
        print!("{}", recipe.to_text());
        assert_eq!(recipe.to_text().parse::<Recipe>()?, recipe);
    }
    Ok(())
}
