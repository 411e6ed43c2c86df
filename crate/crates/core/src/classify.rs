//! Exhaustive classification of connected arc-transitive covers and
//! pseudocovers of `K_n` for small `n`.
//!
//! With `ω = 1` and `ω' = 2`, candidates are pairs `(L, g)` with `L < G_ω`
//! taken up to `G_ω`-conjugacy. Each candidate coset graph is built and
//! canonically labeled; isomorphic graphs are reported once.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::canon;
use crate::constructions::{build_abelian_pseudocover, KabRecipe, Report};
use crate::cosetgraph::{self, CosetGraphSpec};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::{self, ExtenderKind, NormalCoverSearch};

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    /// Largest ambient group order enumerated element by element.
    pub group_cap: usize,
    pub vertex_cap: usize,
    /// Largest automorphism group order for the normal-cover search.
    pub aut_cap: usize,
    /// Worker threads; `None` uses rayon's default pool.
    pub jobs: Option<usize>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            group_cap: 10_000,
            vertex_cap: cosetgraph::DEFAULT_VERTEX_CAP,
            aut_cap: 20_000,
            jobs: None,
        }
    }
}

/// `S<n>`, `A<n>` or `F5` (the Frobenius group `⟨(1,2,3,4,5), (2,3,5,4)⟩`).
pub fn ambient_group(name: &str, n: usize) -> Result<PermGroup> {
    let upper = name.to_ascii_uppercase();
    if upper == "F5" || upper == "F20" {
        if n != 5 {
            return Err(Error::InvalidParameter("F5 acts on 5 points".into()));
        }
        return PermGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(2,3,5,4)"]);
    }
    let (kind, digits) = upper.split_at(1.min(upper.len()));
    let degree: usize = digits
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("unknown group {name:?}")))?;
    if degree != n {
        return Err(Error::InvalidParameter(format!(
            "group {name} has degree {degree}, expected n = {n}"
        )));
    }
    match kind {
        "S" => Ok(PermGroup::symmetric(n)),
        "A" => Ok(PermGroup::alternating(n)),
        _ => Err(Error::InvalidParameter(format!("unknown group {name:?}"))),
    }
}

/// Elements of a small group with index lookup.
struct ElementTable {
    elems: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl ElementTable {
    fn new(group: &PermGroup, cap: usize) -> Result<Self> {
        let mut elems = group.elements(cap)?;
        elems.sort();
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(ElementTable { elems, index })
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn words(&self) -> usize {
        self.len().div_ceil(64)
    }

    /// Element set of the subgroup generated by the given elements.
    fn closure(&self, gens: &[usize]) -> Vec<u64> {
        let mut bits = vec![0u64; self.words()];
        let id = self.index[&Permutation::identity(self.elems[0].degree())];
        bits[id / 64] |= 1 << (id % 64);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.index[&self.elems[x].then(&self.elems[s])];
                if bits[y / 64] >> (y % 64) & 1 == 0 {
                    bits[y / 64] |= 1 << (y % 64);
                    queue.push(y);
                }
            }
        }
        bits
    }

    fn conjugate_bits(&self, bits: &[u64], t: &Permutation) -> Vec<u64> {
        let mut out = vec![0u64; self.words()];
        for i in members(bits) {
            let j = self.index[&self.elems[i].conjugate_unchecked(t)];
            out[j / 64] |= 1 << (j % 64);
        }
        out
    }
}

fn members(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

fn contains(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// All subgroups of `group` up to conjugacy in `group`, by cyclic extension.
/// Each is returned with a generating set and sorted by order, then generators.
pub fn subgroups_up_to_conjugacy(group: &PermGroup, cap: usize) -> Result<Vec<PermGroup>> {
    let table = ElementTable::new(group, cap)?;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut found: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
    let trivial = table.closure(&[]);
    seen.insert(trivial.clone());
    found.push((trivial, Vec::new()));
    let mut i = 0;
    while i < found.len() {
        let (bits, gens) = found[i].clone();
        for e in 0..table.len() {
            if contains(&bits, e) {
                continue;
            }
            let mut g2 = gens.clone();
            g2.push(e);
            let c = table.closure(&g2);
            if seen.insert(c.clone()) {
                found.push((c, g2));
            }
        }
        i += 1;
    }
    let conjugators = group.generators();
    let mut class_seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps = Vec::new();
    for (bits, gens) in found {
        // the conjugacy class of `bits`, as element sets
        let mut orbit = vec![bits.clone()];
        let mut in_orbit: HashSet<Vec<u64>> = HashSet::from([bits.clone()]);
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            head += 1;
            for t in conjugators {
                let c = table.conjugate_bits(&cur, t);
                if in_orbit.insert(c.clone()) {
                    orbit.push(c);
                }
            }
        }
        let key = orbit.iter().min().unwrap().clone();
        if class_seen.insert(key) {
            let perms = gens.iter().map(|&k| table.elems[k].clone()).collect();
            reps.push(PermGroup::new(group.degree(), perms)?);
        }
    }
    reps.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.generators().cmp(b.generators()))
    });
    Ok(reps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Covers,
    Pseudocovers,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Covers => "covers",
            Mode::Pseudocovers => "pseudocovers",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub l_generators: Vec<Permutation>,
    pub g: Permutation,
    pub vertex_count: usize,
    pub verdict: ExtenderKind,
    pub valency: usize,
    pub digest: String,
    pub aut_order: BigUint,
    /// `None` when the normal-cover search hit a cap.
    pub normal_cover: Option<bool>,
}

impl Entry {
    /// Rebuilds the coset graph spec inside `ambient`.
    pub fn spec(&self, ambient: &PermGroup) -> Result<CosetGraphSpec> {
        let l = PermGroup::new(ambient.degree(), self.l_generators.clone())?;
        CosetGraphSpec::new(ambient.clone(), l, self.g.clone())
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub n: usize,
    pub mode: Mode,
    pub ambient_name: String,
    pub ambient: PermGroup,
    pub entries: Vec<Entry>,
    /// Candidates that produced a valid graph, before isomorphism dedup.
    pub candidates: usize,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.entries.len()
    }
}

fn format_normal(flag: Option<bool>) -> &'static str {
    match flag {
        Some(true) => "true",
        Some(false) => "false",
        None => "?",
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# {} n={} group={} order={} candidates={} classes={}",
            self.mode,
            self.n,
            self.ambient_name,
            self.ambient.order(),
            self.candidates,
            self.entries.len()
        )?;
        writeln!(f, "# n ambient_order |V| verdict valency aut_order normal digest L g")?;
        let order = self.ambient.order();
        for e in &self.entries {
            let l: Vec<String> = e.l_generators.iter().map(|p| p.to_string()).collect();
            writeln!(
                f,
                "{} {} {} {} {} {} {} {} L=<{}> g={}",
                self.n,
                order,
                e.vertex_count,
                e.verdict,
                e.valency,
                e.aut_order,
                format_normal(e.normal_cover),
                e.digest,
                l.join(","),
                e.g
            )?;
        }
        Ok(())
    }
}

/// Least element of `LgL` in the permutation order.
fn double_coset_key(l_elems: &[Permutation], g: &Permutation) -> Permutation {
    let mut best: Option<Permutation> = None;
    for a in l_elems {
        let ag = a.then(g);
        for b in l_elems {
            let x = ag.then(b);
            if best.as_ref().is_none_or(|y| x < *y) {
                best = Some(x);
            }
        }
    }
    best.unwrap()
}

struct Candidate {
    l: PermGroup,
    g: Permutation,
}

fn evaluate(
    c: &Candidate,
    ambient: &PermGroup,
    h: &PermGroup,
    n: usize,
    opts: &ClassifyOptions,
) -> Result<Entry> {
    let spec = CosetGraphSpec::new(ambient.clone(), c.l.clone(), c.g.clone())?
        .with_vertex_cap(opts.vertex_cap);
    let verdict = quotient::classify_extender(&spec, h)?;
    let graph = cosetgraph::build_coset_graph(&spec)?;
    let form = canon::canonical_form_capped(&graph, opts.vertex_cap)?;
    let aut = canon::automorphism_group_capped(&graph, opts.vertex_cap)?;
    let normal_cover = match quotient::is_normal_cover_search(&graph, n, opts.aut_cap)? {
        NormalCoverSearch::Found { .. } => Some(true),
        NormalCoverSearch::NotFound => Some(false),
        NormalCoverSearch::Inconclusive(_) => None,
    };
    Ok(Entry {
        l_generators: c.l.generators().to_vec(),
        g: c.g.clone(),
        vertex_count: graph.vertex_count(),
        verdict: verdict.kind,
        valency: verdict.valency_gamma,
        digest: form.digest(),
        aut_order: aut.order(),
        normal_cover,
    })
}

fn run_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn classify(n: usize, ambient_name: &str, ambient: &PermGroup, mode: Mode, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    if ambient.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: ambient.degree(),
        });
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 3")));
    }
    let order = ambient.order();
    if order > BigUint::from(opts.group_cap) {
        return Err(Error::cap("group order", order, opts.group_cap));
    }
    if !ambient.is_2_transitive()? {
        return Err(Error::InvalidParameter(format!(
            "{ambient_name} is not 2-transitive, so it is not arc-transitive on K{n}"
        )));
    }
    let (omega, omega_prime) = (0, 1);
    let h = ambient.point_stabilizer(omega)?;
    let g_elems = ambient.elements(opts.group_cap)?;
    let n_minus_1 = BigUint::from(n - 1);
    let mut candidates = Vec::new();
    for l in subgroups_up_to_conjugacy(&h, opts.group_cap)? {
        if l.order() == h.order() {
            continue;
        }
        let transitive = l.orbit(omega_prime)?.len() == n - 1;
        let l_elems = l.elements(opts.group_cap)?;
        let mut keys = HashSet::new();
        match mode {
            Mode::Covers => {
                if !transitive {
                    continue;
                }
                let l_w2 = l.point_stabilizer(omega_prime)?;
                for g in &g_elems {
                    if g.image(omega) != omega_prime || g.image(omega_prime) != omega {
                        continue;
                    }
                    if !l.has(&g.then(g)) || !l_w2.is_normalized_by(g) {
                        continue;
                    }
                    if keys.insert(double_coset_key(&l_elems, g)) {
                        candidates.push(Candidate { l: l.clone(), g: g.clone() });
                    }
                }
            }
            Mode::Pseudocovers => {
                if transitive || &l.order() % &n_minus_1 != BigUint::ZERO {
                    continue;
                }
                for g in &g_elems {
                    if l.has(g) || !l.has(&g.then(g)) {
                        continue;
                    }
                    let meet = l_elems.iter().filter(|x| l.has(&x.conjugate_unchecked(g))).count();
                    if l_elems.len() / meet != n - 1 {
                        continue;
                    }
                    if keys.insert(double_coset_key(&l_elems, g)) {
                        candidates.push(Candidate { l: l.clone(), g: g.clone() });
                    }
                }
            }
        }
    }
    // connectivity: <L, g> = G
    candidates.retain(|c| {
        let mut gens = c.l.generators().to_vec();
        gens.push(c.g.clone());
        PermGroup::new(n, gens).map(|s| s.order() == order).unwrap_or(false)
    });
    let results: Vec<Result<Entry>> = run_pool(opts.jobs, || {
        candidates
            .par_iter()
            .map(|c| evaluate(c, ambient, &h, n, opts))
            .collect()
    })?;
    let wanted = match mode {
        Mode::Covers => ExtenderKind::Cover,
        Mode::Pseudocovers => ExtenderKind::Pseudocover,
    };
    let mut entries: Vec<Entry> = Vec::new();
    let mut digests = HashSet::new();
    let mut valid = 0;
    for r in results {
        let e = r?;
        if e.verdict != wanted {
            continue;
        }
        valid += 1;
        if digests.insert(e.digest.clone()) {
            entries.push(e);
        }
    }
    entries.sort_by(|a, b| (a.vertex_count, &a.digest).cmp(&(b.vertex_count, &b.digest)));
    Ok(ClassificationReport {
        n,
        mode,
        ambient_name: ambient_name.to_string(),
        ambient: ambient.clone(),
        entries,
        candidates: valid,
    })
}

/// Connected `G`-arc-transitive covers of `K_n`, one per isomorphism class.
pub fn enumerate_covers(n: usize, ambient_name: &str, ambient: &PermGroup, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    classify(n, ambient_name, ambient, Mode::Covers, opts)
}

/// Connected `G`-arc-transitive pseudocovers of `K_n`, one per isomorphism class.
pub fn enumerate_pseudocovers(n: usize, ambient_name: &str, ambient: &PermGroup, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    classify(n, ambient_name, ambient, Mode::Pseudocovers, opts)
}

/// 2-transitive subgroups of `S_n` up to conjugacy.
///
/// A 2-transitive `G` is generated by its point stabilizer `T = G_1`, which is
/// transitive on `{2..n}`, and any element moving 1; it suffices to try
/// elements mapping 1 to 2 and keep those `⟨T, t⟩` with `|G| = n |T|`.
pub fn two_transitive_groups(n: usize, cap: usize) -> Result<Vec<PermGroup>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 3")));
    }
    let sym = PermGroup::symmetric(n);
    let table = ElementTable::new(&sym, cap)?;
    let stab = sym.point_stabilizer(0)?;
    let transitive_t: Vec<PermGroup> = subgroups_up_to_conjugacy(&stab, cap)?
        .into_iter()
        .filter(|t| t.orbit(1).map(|o| o.len() == n - 1).unwrap_or(false))
        .collect();
    let movers: Vec<&Permutation> = table.elems.iter().filter(|e| e.image(0) == 1).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for t in &transitive_t {
        for &m in &movers {
            let mut gens = t.generators().to_vec();
            gens.push(m.clone());
            let g = PermGroup::new(n, gens)?;
            if g.order() != t.order() * BigUint::from(n) || !g.is_2_transitive()? {
                continue;
            }
            let gen_idx: Vec<usize> = g.generators().iter().map(|p| table.index[p]).collect();
            let bits = table.closure(&gen_idx);
            if seen.contains(&bits) {
                continue;
            }
            // record the whole conjugacy class
            for c in &table.elems {
                seen.insert(table.conjugate_bits(&bits, c));
            }
            out.push(g);
        }
    }
    out.sort_by_key(|g| g.order());
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum Existence {
    /// A pseudocover from the abelian family with `ab = n-1`, checked group-theoretically.
    Exists { a: usize, b: usize, verdict: quotient::ExtenderVerdict },
    /// Exhaustive search over every 2-transitive subgroup of `S_n` found nothing.
    NoneProven { groups_searched: usize },
    /// `n-1` is prime and `n` is beyond the exhaustive range.
    Inconclusive(String),
}

/// Whether `K_n` has a connected arc-transitive pseudocover.
pub fn check_pseudocover_existence(n: usize, exhaustive_max_n: usize, opts: &ClassifyOptions) -> Result<Existence> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 3")));
    }
    let m = n - 1;
    if let Some(a) = (2..=m).take_while(|a| a * a <= m).find(|a| m.is_multiple_of(*a)) {
        let r = KabRecipe::new(a, m / a)?;
        let spec = build_abelian_pseudocover(&r)?;
        let h = spec.group().point_stabilizer(n - 1)?;
        let verdict = quotient::classify_extender(&spec, &h)?;
        if verdict.kind != ExtenderKind::Pseudocover || !verdict.connected || !spec.group().is_2_transitive()? {
            return Err(Error::InvalidSpec(format!("kab({a},{}) failed to give a pseudocover: {verdict}", m / a)));
        }
        return Ok(Existence::Exists { a, b: m / a, verdict });
    }
    if n > exhaustive_max_n {
        return Ok(Existence::Inconclusive(format!(
            "n - 1 = {m} is prime and n exceeds the exhaustive range {exhaustive_max_n}"
        )));
    }
    let groups = two_transitive_groups(n, opts.group_cap)?;
    for g in &groups {
        let name = format!("order{}", g.order());
        let report = enumerate_pseudocovers(n, &name, g, opts)?;
        if let Some(e) = report.entries.first() {
            return Err(Error::InvalidSpec(format!(
                "unexpected pseudocover over {name}: L = {:?}, g = {}",
                e.l_generators, e.g
            )));
        }
    }
    Ok(Existence::NoneProven {
        groups_searched: groups.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRow {
    pub n: usize,
    pub vertex_count: BigUint,
    pub group_order: BigUint,
    /// `(n-2)! n` vertices.
    pub vertex_formula: bool,
    /// `|G|` equals the number of arcs.
    pub arc_regular: bool,
    /// Materialized and checked to be arc-transitive, when within the vertex cap.
    pub materialized: Option<bool>,
}

/// The covers of `K_n` from the regular cyclic `L = ⟨(2,3,…,n)⟩` with `g = (1,2)`.
pub fn arc_regular_cover_series(n_max: usize, vertex_cap: usize) -> Result<Vec<SeriesRow>> {
    use crate::constructions::{build_faithful_cover, CoversnRecipe};
    use crate::group::factorial;
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let spec = build_faithful_cover(&CoversnRecipe::preset("cyclic", n)?)?.with_vertex_cap(vertex_cap);
        let vertices = spec.index();
        let order = spec.group().order();
        let arcs = &vertices * BigUint::from(n - 1);
        let materialized = match vertices.to_usize() {
            Some(v) if v <= vertex_cap => {
                let cg = cosetgraph::materialize(&spec)?;
                let x = cg.table.induced_action();
                Some(
                    cg.graph.valency()? == n - 1
                        && cg.graph.is_connected()
                        && quotient::is_arc_regular(&cg.graph, &x),
                )
            }
            _ => None,
        };
        rows.push(SeriesRow {
            n,
            vertex_formula: vertices == factorial(n - 2) * BigUint::from(n),
            arc_regular: order == arcs,
            vertex_count: vertices,
            group_order: order,
            materialized,
        });
    }
    Ok(rows)
}

/// Reference rows for the covers of `K_5` over `S_5`: `(|V|, |Aut|, normal cover)`.
pub const TABLE_K5: [(usize, u32, bool); 5] = [
    (10, 240, true),
    (15, 120, false),
    (30, 240, false),
    (30, 240, false),
    (30, 720, true),
];

/// Reproduces the `K_5` cover table and the small-case counts around it.
pub fn verify_table_k5(opts: &ClassifyOptions) -> Result<Report> {
    let mut report = Report::default();
    let s5 = PermGroup::symmetric(5);
    let covers = enumerate_covers(5, "S5", &s5, opts)?;
    let mut rows: Vec<(usize, u32, Option<bool>)> = covers
        .entries
        .iter()
        .map(|e| (e.vertex_count, e.aut_order.to_u32().unwrap_or(u32::MAX), e.normal_cover))
        .collect();
    rows.sort();
    let expected: Vec<(usize, u32, Option<bool>)> =
        TABLE_K5.iter().map(|&(v, a, f)| (v, a, Some(f))).collect();
    report.check("S5 cover classes", covers.class_count() == 5, format!("{} classes", covers.class_count()));
    report.check("S5 cover rows", rows == expected, format!("{rows:?}"));

    let a5 = enumerate_covers(5, "A5", &PermGroup::alternating(5), opts)?;
    report.check("A5 cover classes", a5.class_count() == 1, format!("{} classes", a5.class_count()));
    let fifteen = covers.entries.iter().find(|e| e.vertex_count == 15);
    let same = match (a5.entries.first(), fifteen) {
        (Some(a), Some(b)) => a.digest == b.digest,
        _ => false,
    };
    report.check("A5 cover is the 15-vertex S5 class", same, a5.entries.first().map(|e| e.digest.clone()).unwrap_or_default());

    for (name, expected) in [("S5", 1), ("A5", 0), ("F5", 0)] {
        let g = ambient_group(name, 5)?;
        let p = enumerate_pseudocovers(5, name, &g, opts)?;
        let ok = p.class_count() == expected && p.entries.iter().all(|e| e.vertex_count == 30);
        report.check(format!("{name} pseudocover classes"), ok, format!("{} classes", p.class_count()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        // S4 has 11 conjugacy classes of subgroups, S3 has 4, A4 has 5
        let s4 = PermGroup::symmetric(4);
        assert_eq!(subgroups_up_to_conjugacy(&s4, 100).unwrap().len(), 11);
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::symmetric(3), 100).unwrap().len(), 4);
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::alternating(4), 100).unwrap().len(), 5);
    }

    #[test]
    fn k4_covers() {
        let s4 = PermGroup::symmetric(4);
        let r = enumerate_covers(4, "S4", &s4, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.class_count(), 1);
        assert_eq!(r.entries[0].vertex_count, 8);
        assert_eq!(r.entries[0].aut_order, BigUint::from(48u32));
        let p = enumerate_pseudocovers(4, "S4", &s4, &ClassifyOptions::default()).unwrap();
        assert_eq!(p.class_count(), 0);
    }

    #[test]
    fn ambient_names() {
        assert_eq!(ambient_group("F5", 5).unwrap().order(), BigUint::from(20u32));
        assert_eq!(ambient_group("a5", 5).unwrap().order(), BigUint::from(60u32));
        assert!(ambient_group("S5", 4).is_err());
        assert!(ambient_group("Q8", 8).is_err());
    }

    #[test]
    fn two_transitive_small() {
        let orders = |n| -> Vec<BigUint> {
            two_transitive_groups(n, 10_000).unwrap().iter().map(|g| g.order()).collect()
        };
        assert_eq!(orders(4), vec![BigUint::from(12u32), BigUint::from(24u32)]);
        let o5: Vec<u32> = orders(5).iter().map(|o| o.to_u32().unwrap()).collect();
        assert_eq!(o5, vec![20, 60, 120]);
    }

    #[test]
    fn series() {
        let rows = arc_regular_cover_series(6, 1000).unwrap();
        let v: Vec<u32> = rows.iter().map(|r| r.vertex_count.to_u32().unwrap()).collect();
        assert_eq!(v, vec![8, 30, 144]);
        assert!(rows.iter().all(|r| r.vertex_formula && r.arc_regular && r.materialized == Some(true)));
    }

    #[test]
    fn k5_table() {
        let opts = ClassifyOptions::default();
        let s5 = PermGroup::symmetric(5);
        let r = enumerate_covers(5, "S5", &s5, &opts).unwrap();
        let mut rows: Vec<(usize, u32, Option<bool>)> = r
            .entries
            .iter()
            .map(|e| (e.vertex_count, e.aut_order.to_u32().unwrap(), e.normal_cover))
            .collect();
        rows.sort();
        println!("{r}");
        assert_eq!(
            rows,
            vec![
                (10, 240, Some(true)),
                (15, 120, Some(false)),
                (30, 240, Some(false)),
                (30, 240, Some(false)),
                (30, 720, Some(true)),
            ]
        );
        let a5 = enumerate_covers(5, "A5", &PermGroup::alternating(5), &opts).unwrap();
        assert_eq!(a5.class_count(), 1);
        assert_eq!(a5.entries[0].vertex_count, 15);
        let p = enumerate_pseudocovers(5, "S5", &s5, &opts).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.entries[0].vertex_count, 30);
        for name in ["A5", "F5"] {
            let g = ambient_group(name, 5).unwrap();
            assert_eq!(enumerate_pseudocovers(5, name, &g, &opts).unwrap().class_count(), 0);
        }
    }

    #[test]
    fn pseudocover_existence() {
        let opts = ClassifyOptions::default();
        assert!(matches!(check_pseudocover_existence(4, 6, &opts).unwrap(), Existence::NoneProven { groups_searched: 2 }));
        assert!(matches!(check_pseudocover_existence(5, 6, &opts).unwrap(), Existence::Exists { a: 2, b: 2, .. }));
        let six = check_pseudocover_existence(6, 6, &opts).unwrap();
        println!("{six:?}");
        assert!(matches!(six, Existence::NoneProven { .. }));
        assert!(matches!(check_pseudocover_existence(8, 6, &opts).unwrap(), Existence::Inconclusive(_)));
        assert!(matches!(check_pseudocover_existence(10, 6, &opts).unwrap(), Existence::Exists { a: 3, b: 3, .. }));
    }
}
