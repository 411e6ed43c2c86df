use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use symcover::canon;
use symcover::classify::{self, ClassifyOptions, Existence};
use symcover::constructions::{self, CoversnRecipe, K2mRecipe, KabRecipe};
use symcover::cosetgraph::{self, CosetGraphSpec};
use symcover::group::factorial;
use symcover::quotient::{self, BlockSystem, ExtenderKind};
use symcover::{PermGroup, Permutation};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: symcover::Error) -> String {
    e.to_string()
}

fn opts() -> ClassifyOptions {
    ClassifyOptions::default()
}

fn c1_table_k5() -> Outcome {
    let r = classify::enumerate_covers(5, "S5", &PermGroup::symmetric(5), &opts()).map_err(err)?;
    let mut vertices: Vec<usize> = r.entries.iter().map(|e| e.vertex_count).collect();
    let mut aut: Vec<BigUint> = r.entries.iter().map(|e| e.aut_order.clone()).collect();
    let mut normal: Vec<Option<bool>> = r.entries.iter().map(|e| e.normal_cover).collect();
    vertices.sort();
    aut.sort();
    normal.sort();
    ensure(r.class_count() == 5, || format!("{} classes", r.class_count()))?;
    ensure(vertices == [10, 15, 30, 30, 30], || format!("vertex counts {vertices:?}"))?;
    let want: Vec<BigUint> = [120u32, 240, 240, 240, 720].map(BigUint::from).into();
    ensure(aut == want, || format!("aut orders {aut:?}"))?;
    let want = [Some(false), Some(false), Some(false), Some(true), Some(true)];
    ensure(normal == want, || format!("normal flags {normal:?}"))?;
    // pairing of the three columns per row
    let mut rows: Vec<(usize, BigUint, Option<bool>)> = r
        .entries
        .iter()
        .map(|e| (e.vertex_count, e.aut_order.clone(), e.normal_cover))
        .collect();
    rows.sort();
    let want: Vec<(usize, BigUint, Option<bool>)> = classify::TABLE_K5
        .iter()
        .map(|&(v, a, f)| (v, BigUint::from(a), Some(f)))
        .collect();
    ensure(rows == want, || format!("rows {rows:?}"))?;
    Ok("5 classes: |V| {30,30,30,15,10}, |Aut| {720,240,240,120,240}, normal {T,F,F,F,T}".into())
}

fn c2_a5_cover() -> Outcome {
    let a5 = classify::enumerate_covers(5, "A5", &PermGroup::alternating(5), &opts()).map_err(err)?;
    ensure(a5.class_count() == 1, || format!("{} classes", a5.class_count()))?;
    let s5 = classify::enumerate_covers(5, "S5", &PermGroup::symmetric(5), &opts()).map_err(err)?;
    let fifteen = s5.entries.iter().find(|e| e.vertex_count == 15).ok_or("no 15-vertex S5 class")?;
    let a = cosetgraph::build_coset_graph(&a5.entries[0].spec(&a5.ambient).map_err(err)?).map_err(err)?;
    let b = cosetgraph::build_coset_graph(&fifteen.spec(&s5.ambient).map_err(err)?).map_err(err)?;
    ensure(canon::is_isomorphic(&a, &b).map_err(err)?, || "not isomorphic".into())?;
    Ok(format!("1 class, isomorphic to the 15-vertex S5 class ({})", fifteen.digest))
}

fn c3_k4() -> Outcome {
    let s4 = PermGroup::symmetric(4);
    let covers = classify::enumerate_covers(4, "S4", &s4, &opts()).map_err(err)?;
    ensure(covers.class_count() == 1, || format!("{} cover classes", covers.class_count()))?;
    let e = &covers.entries[0];
    let cube = cosetgraph::build_coset_graph(&e.spec(&s4).map_err(err)?).map_err(err)?;
    ensure(e.vertex_count == 8 && cube.valency() == Ok(3) && cube.is_bipartite(), || "not the cube".into())?;
    ensure(e.aut_order == BigUint::from(48u32), || format!("|Aut| = {}", e.aut_order))?;
    for name in ["S4", "A4"] {
        let g = classify::ambient_group(name, 4).map_err(err)?;
        let p = classify::enumerate_pseudocovers(4, name, &g, &opts()).map_err(err)?;
        ensure(p.class_count() == 0, || format!("{} pseudocover classes over {name}", p.class_count()))?;
    }
    Ok("1 cover (cube, |Aut| = 48), 0 pseudocovers over S4 and A4".into())
}

fn c4_k5_pseudocover() -> Outcome {
    let mut parts = Vec::new();
    for (name, expected) in [("S5", 1), ("A5", 0), ("F5", 0)] {
        let g = classify::ambient_group(name, 5).map_err(err)?;
        let p = classify::enumerate_pseudocovers(5, name, &g, &opts()).map_err(err)?;
        ensure(p.class_count() == expected, || format!("{} classes over {name}", p.class_count()))?;
        ensure(p.entries.iter().all(|e| e.vertex_count == 30), || "wrong vertex count".into())?;
        parts.push(format!("{name}: {}", p.class_count()));
    }
    Ok(parts.join(", "))
}

fn c5_k6() -> Outcome {
    let s6 = PermGroup::symmetric(6);
    let l = PermGroup::from_cycle_strings(6, &["(2,3,4,5,6)"]).map_err(err)?;
    let g = Permutation::parse_cycles("(1,2)", 6).map_err(err)?;
    let spec = CosetGraphSpec::new(s6, l, g).map_err(err)?;
    let cg = cosetgraph::materialize(&spec).map_err(err)?;
    let gamma = &cg.graph;
    ensure(gamma.vertex_count() == 144, || format!("{} vertices", gamma.vertex_count()))?;
    ensure(gamma.valency() == Ok(5), || "valency".into())?;
    ensure(gamma.is_connected(), || "disconnected".into())?;
    let h = spec.group().point_stabilizer(0).map_err(err)?;
    let v = quotient::classify_extender(&spec, &h).map_err(err)?;
    ensure(v.kind == ExtenderKind::Cover, || format!("verdict {v}"))?;
    let aut = canon::automorphism_group(gamma).map_err(err)?;
    ensure(aut.order() == BigUint::from(5760u32), || format!("|Aut| = {}", aut.order()))?;
    let x = cg.table.induced_action();
    ensure(!x.is_normal_in(&aut), || "S6 is normal in Aut".into())?;
    Ok("144 vertices, valency 5, cover, |Aut| = 5760, S6 not normal".into())
}

fn c6_k2m() -> Outcome {
    let f = factorial;
    let expected = [f(5), BigUint::from(168u32), f(9), f(11) / 2u32, f(13), f(15) / 2u32, f(17)];
    for (m, order) in (2..=8).zip(expected) {
        let r = K2mRecipe::new(m).map_err(err)?;
        let spec = constructions::build_dihedral_pseudocover(&r).map_err(err)?;
        let g = spec.group();
        ensure(g.order() == order, || format!("m={m}: |G| = {}", g.order()))?;
        let l = spec.subgroup();
        let meet = l.intersect_small(&l.conjugate(spec.g()).map_err(err)?, 1000).map_err(err)?;
        ensure(meet.is_trivial(), || format!("m={m}: L ∩ L^g nontrivial"))?;
        ensure(g.is_2_transitive().map_err(err)?, || format!("m={m}: not 2-transitive"))?;
        let report = constructions::verify_k2m(m).map_err(err)?;
        ensure(report.all_passed(), || report.to_string())?;
        if m >= 4 {
            let c = r.a().compose(&r.a()).and_then(|a2| a2.compose(&r.b())).map_err(err)?;
            let y = c.commutator(&r.g()).map_err(err)?;
            let text = format!("(1,{},2)(3,4)({},{})", 2 * m, 2 * m - 1, 2 * m - 2);
            let want = Permutation::parse_cycles(&text, r.n()).map_err(err)?;
            ensure(y == want, || format!("m={m}: y = {y}"))?;
        }
    }
    Ok("S5, GL(3,2), S9, A11, S13, A15, S17; L ∩ L^g = 1; commutator for m = 4..8".into())
}

fn c7_kab() -> Outcome {
    let mut count = 0;
    for a in 2..=5 {
        for b in a..=5 {
            let r = KabRecipe::new(a, b).map_err(err)?;
            let n = r.n();
            let g = r.g();
            ensure(g.compose(&g).map_err(err)?.is_identity(), || format!("({a},{b}): g^2 != 1"))?;
            let spec = constructions::build_abelian_pseudocover(&r).map_err(err)?;
            let l = spec.subgroup();
            ensure(l.order() == BigUint::from(a * b), || format!("({a},{b}): |L| = {}", l.order()))?;
            let meet = l.intersect_small(&l.conjugate(&g).map_err(err)?, 1000).map_err(err)?;
            ensure(meet.is_trivial(), || format!("({a},{b}): L ∩ L^g nontrivial"))?;
            let grp = spec.group();
            ensure(grp.is_2_transitive().map_err(err)?, || format!("({a},{b}): not 2-transitive"))?;
            let alternating = a % 2 == 1 && b % 2 == 0;
            let want = if alternating { factorial(n) / 2u32 } else { factorial(n) };
            ensure(grp.order() == want, || format!("({a},{b}): |G| = {}", grp.order()))?;
            for k in 0..a {
                ensure(r.z(k) == r.z_closed_form(k), || format!("({a},{b}): z_{k} = {}", r.z(k)))?;
            }
            let report = constructions::verify_kab(a, b).map_err(err)?;
            ensure(report.all_passed(), || report.to_string())?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs: g^2 = 1, |L| = ab, L ∩ L^g = 1, 2-transitive, |G| as predicted, z_k closed form"))
}

fn c8_existence() -> Outcome {
    let mut parts = Vec::new();
    for n in [5, 7, 9, 10, 13] {
        match classify::check_pseudocover_existence(n, 6, &opts()).map_err(err)? {
            Existence::Exists { a, b, verdict } => {
                ensure(verdict.kind == ExtenderKind::Pseudocover && verdict.connected, || verdict.to_string())?;
                ensure(verdict.valency_gamma == n - 1, || verdict.to_string())?;
                parts.push(format!("K{n}: kab({a},{b})"));
            }
            other => return Err(format!("K{n}: {other:?}")),
        }
    }
    // materialize the smaller witnesses and read the verdict off the graph too
    for (a, b) in [(2, 2), (2, 3)] {
        let spec = constructions::build_abelian_pseudocover(&KabRecipe::new(a, b).map_err(err)?).map_err(err)?;
        let h = spec.group().point_stabilizer(a * b).map_err(err)?;
        let check = quotient::cross_check_extender(&spec, &h).map_err(err)?;
        ensure(check.consistent() && !check.matching, || format!("kab({a},{b}) cross-check"))?;
    }
    for n in [4, 6] {
        match classify::check_pseudocover_existence(n, 6, &opts()) {
            Ok(Existence::NoneProven { groups_searched }) => parts.push(format!("K{n}: none ({groups_searched} groups)")),
            Err(e) if e.is_cap_exceeded() => parts.push(format!("K{n}: skipped, {e}")),
            other => return Err(format!("K{n}: {other:?}")),
        }
    }
    Ok(parts.join(", "))
}

fn c9_series() -> Outcome {
    let rows = classify::arc_regular_cover_series(6, cosetgraph::DEFAULT_VERTEX_CAP).map_err(err)?;
    for row in &rows {
        let n = row.n;
        let vertices = factorial(n - 2) * BigUint::from(n);
        ensure(row.vertex_count == vertices, || format!("n={n}: |V| = {}", row.vertex_count))?;
        ensure(row.group_order == &vertices * BigUint::from(n - 1), || format!("n={n}: |G| = {}", row.group_order))?;
        ensure(row.materialized == Some(true), || format!("n={n}: not arc-regular as built"))?;
    }
    let v: Vec<String> = rows.iter().map(|r| r.vertex_count.to_string()).collect();
    Ok(format!("|V| = {} for n = 4, 5, 6, arc-regular", v.join(", ")))
}

fn cross_check(spec: &CosetGraphSpec, omega: usize) -> Result<(), String> {
    let h = spec.group().point_stabilizer(omega).map_err(err)?;
    let c = quotient::cross_check_extender(spec, &h).map_err(err)?;
    ensure(c.consistent(), || format!("inconsistent: {} {:?} {}", c.verdict, c.matching, c.stabilizers_distinct))
}

fn random_spec(rng: &mut StdRng) -> Option<CosetGraphSpec> {
    let n = *[4usize, 5, 6].choose(rng)?;
    let mut random_perm = || {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation::from_images(images).unwrap()
    };
    let g = PermGroup::new(n, vec![random_perm(), random_perm()]).ok()?;
    let elems = g.elements(1000).ok()?;
    let l = PermGroup::new(n, vec![elems.choose(rng)?.clone()]).ok()?;
    let candidates: Vec<&Permutation> = elems
        .iter()
        .filter(|x| !l.contains(x).unwrap() && l.contains(&x.compose(x).unwrap()).unwrap())
        .collect();
    CosetGraphSpec::new(g.clone(), l, (*candidates.choose(rng)?).clone()).ok()
}

fn c10_properties() -> Outcome {
    // the three readings of the verdict agree on every materialized instance
    let mut instances = 0;
    for (n, name) in [(4, "S4"), (4, "A4"), (5, "S5"), (5, "A5"), (5, "F5")] {
        let g = classify::ambient_group(name, n).map_err(err)?;
        for report in [
            classify::enumerate_covers(n, name, &g, &opts()).map_err(err)?,
            classify::enumerate_pseudocovers(n, name, &g, &opts()).map_err(err)?,
        ] {
            for e in &report.entries {
                cross_check(&e.spec(&g).map_err(err)?, 0)?;
                instances += 1;
            }
        }
    }
    for m in 2..=3 {
        cross_check(&constructions::build_dihedral_pseudocover(&K2mRecipe::new(m).map_err(err)?).map_err(err)?, 0)?;
        instances += 1;
    }
    for (a, b) in [(2, 2), (2, 3)] {
        cross_check(&constructions::build_abelian_pseudocover(&KabRecipe::new(a, b).map_err(err)?).map_err(err)?, a * b)?;
        instances += 1;
    }
    for n in 4..=6 {
        let r = CoversnRecipe::preset("cyclic", n).map_err(err)?;
        cross_check(&constructions::build_faithful_cover(&r).map_err(err)?, 0)?;
        instances += 1;
    }
    for preset in constructions::COVERSN_PRESETS {
        let r = CoversnRecipe::preset(preset, 5).map_err(err)?;
        cross_check(&constructions::build_faithful_cover(&r).map_err(err)?, 0)?;
        instances += 1;
    }

    // valency identity on 100 random specs
    let mut rng = StdRng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 100 {
        let Some(spec) = random_spec(&mut rng) else { continue };
        let l = spec.subgroup().elements(1000).map_err(err)?;
        let meet = l
            .iter()
            .filter(|x| spec.subgroup().contains(&x.conjugate(spec.g()).unwrap()).unwrap())
            .count();
        let graph = cosetgraph::build_coset_graph(&spec).map_err(err)?;
        let valency = graph.valency().map_err(err)?;
        ensure(valency == l.len() / meet, || format!("valency {valency} vs {}", l.len() / meet))?;
        ensure(spec.valency_by_intersection(1000) == Ok(valency), || "intersection valency".into())?;
        checked += 1;
    }

    // factorization of a non-faithful cover through a normal cover
    let r = CoversnRecipe::preset("z2sq", 5).map_err(err)?;
    let gamma = cosetgraph::build_coset_graph(&constructions::build_faithful_cover(&r).map_err(err)?).map_err(err)?;
    let x_s5 = cosetgraph::induced_action_on_cosets(&constructions::build_faithful_cover(&r).map_err(err)?).map_err(err)?;
    let aut = canon::automorphism_group(&gamma).map_err(err)?;
    let normals = aut.normal_subgroups_small(1000).map_err(err)?;
    let n3 = normals.iter().find(|n| n.order() == BigUint::from(3u32)).ok_or("no normal subgroup of order 3")?;
    let n6 = normals.iter().find(|n| n.order() == BigUint::from(6u32)).ok_or("no normal subgroup of order 6")?;
    let x = n3.join(&x_s5).map_err(err)?;
    let blocks = BlockSystem::from_blocks(gamma.vertex_count(), n6.orbits()).map_err(err)?;
    ensure(!quotient::is_faithful_on_blocks(&x, &blocks).map_err(err)?, || "X faithful on blocks".into())?;
    let f = quotient::faithful_factorization(&gamma, &x, &blocks).map_err(err)?;
    ensure(f.kernel.order() == BigUint::from(3u32), || format!("kernel order {}", f.kernel.order()))?;
    ensure(f.normal_quotient.graph.vertex_count() == 10, || "Γ_N size".into())?;
    ensure(f.gamma_normal_cover && f.quotient_faithful && f.quotient_cover, || format!("{f:?}"))?;
    ensure(quotient::quotient_graph(&gamma, &blocks).is_complete(), || "Σ not complete".into())?;

    Ok(format!(
        "{instances} instances agree; valency identity on {checked} random specs; |X| = {} factors through a 10-vertex normal quotient",
        x.order()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("1 K5 cover table", 30, c1_table_k5),
        ("2 A5 cover", 10, c2_a5_cover),
        ("3 K4 covers and pseudocovers", 5, c3_k4),
        ("4 K5 pseudocover uniqueness", 30, c4_k5_pseudocover),
        ("5 K6 cover example", 60, c5_k6),
        ("6 dihedral family sweep", 30, c6_k2m),
        ("7 abelian family sweep", 60, c7_kab),
        ("8 pseudocover existence", 300, c8_existence),
        ("9 arc-regular cover series", 30, c9_series),
        ("10 property suites", 120, c10_properties),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}; took {elapsed:.1?}, limit {limit}s")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
