//! Block systems, quotient graphs, and the cover / pseudocover distinction.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::canon;
use crate::cosetgraph::{self, CosetGraphSpec, CosetTable};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Element cap used when intersecting small subgroups.
pub const ELEMENT_CAP: usize = 1_000_000;

/// A partition of the vertex set into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Builds a block system from disjoint vertex sets covering `0..n`.
    /// Blocks are renumbered by their least vertex.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::PointOutOfRange { point: v, degree: n });
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidParameter(format!("vertex {} in two blocks", v + 1)));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidParameter(format!("vertex {} in no block", v + 1)));
        }
        Ok(Self::from_labels(&block_of))
    }

    /// Builds a block system from a vertex labelling; equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for (v, &l) in labels.iter().enumerate() {
            let b = *renumber.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
            block_of.push(b);
        }
        BlockSystem { block_of, blocks }
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    /// The common block size, if all blocks have the same size.
    pub fn block_size(&self) -> Option<usize> {
        let s = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == s).then_some(s)
    }

    /// Singleton blocks or a single block.
    pub fn is_trivial(&self) -> bool {
        self.block_count() <= 1 || self.block_count() == self.vertex_count()
    }

    /// Image of block `b` under `x`, or `None` if `x` splits it.
    fn block_image(&self, x: &Permutation, b: usize) -> Option<usize> {
        let mut it = self.blocks[b].iter().map(|&v| self.block_of[x.image(v)]);
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    pub fn is_invariant_under(&self, generators: &[Permutation]) -> bool {
        generators.iter().all(|x| {
            x.degree() == self.vertex_count()
                && (0..self.block_count()).all(|b| self.block_image(x, b).is_some())
        })
    }

    /// The permutation induced on blocks by `x`.
    pub fn induced_permutation(&self, x: &Permutation) -> Result<Permutation> {
        let images = (0..self.block_count())
            .map(|b| {
                self.block_image(x, b)
                    .ok_or_else(|| Error::InvalidParameter(format!("{x} does not preserve the blocks")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// The group induced on blocks.
    pub fn induced_group(&self, x: &PermGroup) -> Result<PermGroup> {
        let gens = x
            .generators()
            .iter()
            .map(|g| self.induced_permutation(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.block_count(), gens)
    }

    /// `x` acting on vertices and blocks at once: vertex `v` is point `v`,
    /// block `b` is point `vertex_count + b`.
    fn combined_permutation(&self, x: &Permutation) -> Result<Permutation> {
        let n = self.vertex_count();
        let on_blocks = self.induced_permutation(x)?;
        let images = (0..n)
            .map(|v| x.image(v))
            .chain((0..self.block_count()).map(|b| n + on_blocks.image(b)))
            .collect();
        Ok(Permutation::from_images_unchecked(images))
    }

    fn combined_group(&self, x: &PermGroup) -> Result<PermGroup> {
        let gens = x
            .generators()
            .iter()
            .map(|g| self.combined_permutation(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.vertex_count() + self.block_count(), gens)
    }
}

fn restrict(g: &Permutation, n: usize) -> Permutation {
    Permutation::from_images_unchecked(g.images()[..n].to_vec())
}

/// Blocks `{Lx : Lx ⊆ Hx}` for `L ≤ H ≤ G`, i.e. the fibers of `Lx ↦ Hx`.
pub fn blocks_from_overgroup(spec: &CosetGraphSpec, h: &PermGroup) -> Result<BlockSystem> {
    if !spec.subgroup().is_subgroup_of(h) {
        return Err(Error::NotSubgroup("L is not contained in H".into()));
    }
    if !h.is_subgroup_of(spec.group()) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    let table = cosetgraph::enumerate_cosets(spec.group(), spec.subgroup(), spec.vertex_cap())?;
    let over = cosetgraph::enumerate_cosets(spec.group(), h, spec.vertex_cap())?;
    let labels: Vec<usize> = table
        .reps()
        .iter()
        .map(|x| over.index_of(x).expect("x lies in G"))
        .collect();
    Ok(BlockSystem::from_labels(&labels))
}

/// Orbits of `n`, checked to be normal in `x ≤ Aut(gamma)`.
pub fn blocks_from_normal_orbits(gamma: &Graph, x: &PermGroup, n: &PermGroup) -> Result<BlockSystem> {
    let deg = gamma.vertex_count();
    for grp in [x, n] {
        if grp.degree() != deg {
            return Err(Error::DegreeMismatch {
                left: deg,
                right: grp.degree(),
            });
        }
    }
    if let Some(bad) = x.generators().iter().find(|s| !gamma.is_automorphism(s)) {
        return Err(Error::NotSubgroup(format!("{bad} is not an automorphism")));
    }
    if !n.is_subgroup_of(x) {
        return Err(Error::NotSubgroup("N is not contained in X".into()));
    }
    if !n.is_normal_in(x) {
        return Err(Error::NotNormal("N is not normal in X".into()));
    }
    let blocks = BlockSystem::from_blocks(deg, n.orbits())?;
    assert!(blocks.is_invariant_under(x.generators()), "orbits of a normal subgroup form blocks");
    Ok(blocks)
}

/// Blocks are adjacent when some edge joins them; edges inside a block are ignored.
pub fn quotient_graph(gamma: &Graph, blocks: &BlockSystem) -> Graph {
    let mut edges = Vec::new();
    for (u, v) in gamma.edges() {
        let (a, b) = (blocks.block_of(u), blocks.block_of(v));
        if a != b {
            edges.push((a, b));
        }
    }
    Graph::from_edges(blocks.block_count(), &edges).expect("endpoints are valid blocks")
}

/// Outcome of [`matching_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matching {
    Perfect,
    /// Vertex `vertex` has `count` neighbors in the adjacent block `block`.
    NotPerfect { vertex: usize, block: usize, count: usize },
    UnequalBlocks,
}

impl Matching {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Matching::Perfect)
    }
}

/// Whether every pair of adjacent blocks induces a perfect matching.
pub fn matching_check(gamma: &Graph, blocks: &BlockSystem) -> Matching {
    if blocks.block_size().is_none() {
        return Matching::UnequalBlocks;
    }
    let quotient = quotient_graph(gamma, blocks);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for v in 0..gamma.vertex_count() {
        counts.clear();
        for &u in gamma.neighbors(v) {
            *counts.entry(blocks.block_of(u)).or_default() += 1;
        }
        let own = blocks.block_of(v);
        for &c in quotient.neighbors(own) {
            let count = counts.get(&c).copied().unwrap_or(0);
            if count != 1 {
                return Matching::NotPerfect {
                    vertex: v,
                    block: c,
                    count,
                };
            }
        }
    }
    Matching::Perfect
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtenderKind {
    Cover,
    Pseudocover,
    ProperMulticover,
    ValencyMismatch,
}

impl fmt::Display for ExtenderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtenderKind::Cover => "cover",
            ExtenderKind::Pseudocover => "pseudocover",
            ExtenderKind::ProperMulticover => "proper_multicover",
            ExtenderKind::ValencyMismatch => "valency_mismatch",
        })
    }
}

/// Orbits of `L` on the neighborhood of the base vertex of the quotient.
/// When `H` is a point stabilizer the neighbors are reported as points,
/// otherwise as coset indices of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub fixed_point: Option<usize>,
    pub orbits: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtenderVerdict {
    pub kind: ExtenderKind,
    pub valency_gamma: usize,
    pub valency_sigma: usize,
    pub block_count: BigUint,
    pub block_size: BigUint,
    pub connected: bool,
    pub witness: Witness,
}

impl ExtenderVerdict {
    /// `L` acts transitively on the quotient neighborhood.
    pub fn locally_transitive(&self) -> bool {
        self.witness.orbits.len() == 1
    }
}

impl fmt::Display for ExtenderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.kind, self.valency_gamma, self.valency_sigma, self.block_count, self.block_size
        )?;
        if !self.connected {
            write!(f, " disconnected")?;
        }
        for orbit in &self.witness.orbits {
            let items: Vec<String> = orbit.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, " {{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// A point fixed by `h` whose `g`-orbit has size `|G : H|`, so that `H = G_ω`.
pub fn stabilized_point(g: &PermGroup, h: &PermGroup) -> Option<usize> {
    let index = g.order() / h.order();
    (0..g.degree()).find(|&p| {
        h.generators().iter().all(|s| s.image(p) == p)
            && BigUint::from(g.orbit(p).map(|o| o.len()).unwrap_or(0)) == index
    })
}

/// Orbit of coset `start` under right multiplication by `gens`.
fn coset_orbit(table: &CosetTable, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut orbit = vec![start];
    let mut seen = vec![false; table.len()];
    seen[start] = true;
    let mut head = 0;
    while head < orbit.len() {
        let j = orbit[head];
        head += 1;
        for s in gens {
            let k = table.index_of(&table.reps()[j].then(s)).expect("coset of G");
            if !seen[k] {
                seen[k] = true;
                orbit.push(k);
            }
        }
    }
    orbit
}

/// Splits `points` into orbits of the coset action of `gens`.
fn coset_orbits_within(table: &CosetTable, gens: &[Permutation], points: &[usize]) -> Vec<Vec<usize>> {
    let mut done = vec![false; table.len()];
    let mut out = Vec::new();
    for &p in points {
        if done[p] {
            continue;
        }
        let orbit = coset_orbit(table, gens, p);
        for &q in &orbit {
            done[q] = true;
        }
        out.push(orbit);
    }
    out
}

/// `|L : L ∩ L^g|`.
pub fn valency_of(spec: &CosetGraphSpec) -> Result<usize> {
    match spec.valency_by_intersection(ELEMENT_CAP) {
        Err(e) if e.is_cap_exceeded() => {
            let table = cosetgraph::enumerate_cosets(spec.group(), spec.subgroup(), spec.vertex_cap())?;
            let start = table.index_of(spec.g()).expect("g lies in G");
            Ok(coset_orbit(&table, spec.subgroup().generators(), start).len())
        }
        other => other,
    }
}

/// Decides cover / pseudocover for `Cos(G, L, LgL)` over `Cos(G, H, HgH)` from
/// orbit data alone: with `α = L` and `A = H`, the graph is a cover when the
/// valencies agree and `G_α = L` is transitive on the quotient neighborhood of `A`.
pub fn classify_extender(spec: &CosetGraphSpec, h: &PermGroup) -> Result<ExtenderVerdict> {
    let g_grp = spec.group();
    let l = spec.subgroup();
    if !l.is_subgroup_of(h) {
        return Err(Error::NotSubgroup("L is not contained in H".into()));
    }
    if !h.is_subgroup_of(g_grp) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    if l.order() == h.order() {
        return Err(Error::InvalidSpec("L must be a proper subgroup of H".into()));
    }
    if h.has(spec.g()) {
        return Err(Error::InvalidSpec("g lies in H, so the quotient has no edges".into()));
    }
    let over = cosetgraph::enumerate_cosets(g_grp, h, spec.vertex_cap())?;
    let start = over.index_of(spec.g()).expect("g lies in G");
    let nbhd = coset_orbit(&over, h.generators(), start);
    let valency_sigma = nbhd.len();
    let valency_gamma = valency_of(spec)?;
    let mut orbits = coset_orbits_within(&over, l.generators(), &nbhd);
    let fixed_point = stabilized_point(g_grp, h);
    if let Some(w) = fixed_point {
        for orbit in &mut orbits {
            for c in orbit.iter_mut() {
                *c = over.reps()[*c].image(w);
            }
        }
    }
    for orbit in &mut orbits {
        orbit.sort_unstable();
    }
    orbits.sort();
    let transitive = orbits.len() == 1;
    let kind = match (valency_gamma == valency_sigma, transitive) {
        (true, true) => ExtenderKind::Cover,
        (true, false) => ExtenderKind::Pseudocover,
        (false, true) => ExtenderKind::ProperMulticover,
        (false, false) => ExtenderKind::ValencyMismatch,
    };
    Ok(ExtenderVerdict {
        kind,
        valency_gamma,
        valency_sigma,
        block_count: g_grp.order() / h.order(),
        block_size: h.order() / l.order(),
        connected: cosetgraph::is_connected_cosetgraph(spec),
        witness: Witness { fixed_point, orbits },
    })
}

/// The stabilizers `(X_{αB}, X_{Aβ}, X_{αβ})` of an arc `(α, β)` with
/// `α ∈ A` and `β ∈ B`, computed from chains on the action of `x` on
/// vertices and blocks together.
pub fn arc_block_stabilizers(
    gamma: &Graph,
    blocks: &BlockSystem,
    x: &PermGroup,
    alpha: usize,
    beta: usize,
) -> Result<[PermGroup; 3]> {
    if !gamma.has_edge(alpha, beta) {
        return Err(Error::InvalidParameter(format!(
            "({}, {}) is not an arc",
            alpha + 1,
            beta + 1
        )));
    }
    let n = gamma.vertex_count();
    let combined = blocks.combined_group(x)?;
    let block_a = n + blocks.block_of(alpha);
    let block_b = n + blocks.block_of(beta);
    let stab = |points: &[usize]| -> Result<PermGroup> {
        let s = combined.pointwise_stabilizer(points)?;
        let gens = s.generators().iter().map(|g| restrict(g, n)).collect();
        PermGroup::new(n, gens)
    };
    Ok([stab(&[alpha, block_b])?, stab(&[block_a, beta])?, stab(&[alpha, beta])?])
}

pub fn pairwise_distinct(groups: &[PermGroup; 3]) -> bool {
    !groups[0].same_group(&groups[1])
        && !groups[0].same_group(&groups[2])
        && !groups[1].same_group(&groups[2])
}

/// Three independent readings of one materialized instance.
#[derive(Debug, Clone)]
pub struct VerdictCrossCheck {
    pub verdict: ExtenderVerdict,
    /// Every adjacent block pair induces a perfect matching.
    pub matching: bool,
    /// `G_{αB}`, `G_{Aβ}`, `G_{αβ}` are pairwise different.
    pub stabilizers_distinct: bool,
}

impl VerdictCrossCheck {
    /// With equal valencies the three readings must agree.
    pub fn consistent(&self) -> bool {
        match self.verdict.kind {
            ExtenderKind::Cover => self.matching && !self.stabilizers_distinct,
            ExtenderKind::Pseudocover => !self.matching && self.stabilizers_distinct,
            _ => true,
        }
    }
}

pub fn cross_check_extender(spec: &CosetGraphSpec, h: &PermGroup) -> Result<VerdictCrossCheck> {
    let verdict = classify_extender(spec, h)?;
    let cg = cosetgraph::materialize(spec)?;
    let blocks = blocks_from_overgroup(spec, h)?;
    let matching = matching_check(&cg.graph, &blocks).is_perfect();
    let x = cg.table.induced_action();
    let beta = cg.graph.neighbors(0)[0];
    let stabs = arc_block_stabilizers(&cg.graph, &blocks, &x, 0, beta)?;
    Ok(VerdictCrossCheck {
        verdict,
        matching,
        stabilizers_distinct: pairwise_distinct(&stabs),
    })
}

/// Kernel of the action of `x` on the blocks, as a group on vertices.
pub fn block_kernel(x: &PermGroup, blocks: &BlockSystem) -> Result<PermGroup> {
    let n = blocks.vertex_count();
    let combined = blocks.combined_group(x)?;
    let block_points: Vec<usize> = (n..n + blocks.block_count()).collect();
    let k = combined.pointwise_stabilizer(&block_points)?;
    let gens = k.generators().iter().map(|g| restrict(g, n)).collect();
    PermGroup::new(n, gens)
}

pub fn is_faithful_on_blocks(x: &PermGroup, blocks: &BlockSystem) -> Result<bool> {
    Ok(blocks.induced_group(x)?.order() == x.order())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalQuotientVerdict {
    pub valency_gamma: usize,
    pub valency_quotient: usize,
    /// Equal valencies: a normal cover.
    pub cover: bool,
    pub divides: bool,
}

#[derive(Debug, Clone)]
pub struct NormalQuotient {
    pub blocks: BlockSystem,
    pub graph: Graph,
    pub verdict: NormalQuotientVerdict,
}

pub fn normal_quotient(gamma: &Graph, x: &PermGroup, n: &PermGroup) -> Result<NormalQuotient> {
    let blocks = blocks_from_normal_orbits(gamma, x, n)?;
    let graph = quotient_graph(gamma, &blocks);
    let valency_gamma = gamma.valency()?;
    let valency_quotient = graph.valency()?;
    let verdict = NormalQuotientVerdict {
        valency_gamma,
        valency_quotient,
        cover: valency_gamma == valency_quotient,
        divides: valency_quotient != 0 && valency_gamma % valency_quotient == 0,
    };
    Ok(NormalQuotient {
        blocks,
        graph,
        verdict,
    })
}

#[derive(Debug, Clone)]
pub enum NormalCoverSearch {
    Found { normal: PermGroup, blocks: BlockSystem },
    NotFound,
    Inconclusive(String),
}

impl NormalCoverSearch {
    pub fn found(&self) -> Option<bool> {
        match self {
            NormalCoverSearch::Found { .. } => Some(true),
            NormalCoverSearch::NotFound => Some(false),
            NormalCoverSearch::Inconclusive(_) => None,
        }
    }
}

/// Looks for a nontrivial normal subgroup of `Aut(gamma)` whose orbits give a
/// complete quotient on `target` vertices that `gamma` covers.
pub fn is_normal_cover_search(gamma: &Graph, target: usize, group_cap: usize) -> Result<NormalCoverSearch> {
    let aut = canon::automorphism_group(gamma)?;
    if aut.order() > BigUint::from(group_cap) {
        return Ok(NormalCoverSearch::Inconclusive(format!(
            "automorphism group of order {} exceeds the cap {group_cap}",
            aut.order()
        )));
    }
    let normals = match aut.normal_subgroups_small(group_cap) {
        Ok(ns) => ns,
        Err(e) if e.is_cap_exceeded() => return Ok(NormalCoverSearch::Inconclusive(e.to_string())),
        Err(e) => return Err(e),
    };
    let valency = gamma.valency()?;
    for normal in normals {
        if normal.is_trivial() || normal.orbits().len() != target {
            continue;
        }
        let q = normal_quotient(gamma, &aut, &normal)?;
        if q.graph.is_complete() && q.verdict.cover && q.graph.valency()? == valency
            && matching_check(gamma, &q.blocks).is_perfect() {
                return Ok(NormalCoverSearch::Found {
                    normal,
                    blocks: q.blocks,
                });
            }
    }
    Ok(NormalCoverSearch::NotFound)
}

/// The factorization `Γ → Γ_N → Σ` through the kernel `N` of `X` on the blocks of `Σ`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub kernel: PermGroup,
    pub normal_quotient: NormalQuotient,
    /// The blocks of `Σ`, pushed down to the vertices of `Γ_N`.
    pub induced_blocks: BlockSystem,
    /// `X/N` acting on `Γ_N`.
    pub quotient_group: PermGroup,
    pub gamma_normal_cover: bool,
    pub quotient_faithful: bool,
    pub quotient_cover: bool,
}

pub fn faithful_factorization(gamma: &Graph, x: &PermGroup, blocks: &BlockSystem) -> Result<Factorization> {
    if !blocks.is_invariant_under(x.generators()) {
        return Err(Error::InvalidParameter("blocks are not invariant".into()));
    }
    let kernel = block_kernel(x, blocks)?;
    let nq = normal_quotient(gamma, x, &kernel)?;
    let labels: Vec<usize> = nq
        .blocks
        .blocks()
        .iter()
        .map(|orbit| blocks.block_of(orbit[0]))
        .collect();
    if nq
        .blocks
        .blocks()
        .iter()
        .any(|orbit| orbit.iter().any(|&v| blocks.block_of(v) != blocks.block_of(orbit[0])))
    {
        return Err(Error::InvalidParameter("kernel orbits cross blocks".into()));
    }
    let induced_blocks = BlockSystem::from_labels(&labels);
    let quotient_group = nq.blocks.induced_group(x)?;
    let quotient_faithful = is_faithful_on_blocks(&quotient_group, &induced_blocks)?;
    let quotient_cover = matching_check(&nq.graph, &induced_blocks).is_perfect()
        && quotient_graph(&nq.graph, &induced_blocks).valency()? == nq.graph.valency()?;
    Ok(Factorization {
        gamma_normal_cover: nq.verdict.cover && matching_check(gamma, &nq.blocks).is_perfect(),
        kernel,
        normal_quotient: nq,
        induced_blocks,
        quotient_group,
        quotient_faithful,
        quotient_cover,
    })
}

/// `|X|` divided by the number of arcs, when `X` is arc-transitive.
pub fn arc_stabilizer_order(gamma: &Graph, x: &PermGroup) -> Option<BigUint> {
    let arcs = BigUint::from(2 * gamma.edge_count());
    if arcs == BigUint::ZERO || gamma.arc_orbit_count(x.generators()) != 1 {
        return None;
    }
    let order = x.order();
    (&order % &arcs == BigUint::ZERO).then(|| order / arcs)
}

/// Whether `x` acts regularly on the arcs of `gamma`.
pub fn is_arc_regular(gamma: &Graph, x: &PermGroup) -> bool {
    arc_stabilizer_order(gamma, x).is_some_and(|s| s.is_one())
}
