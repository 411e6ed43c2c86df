//! Coset enumeration and coset graphs `Cos(G, L, LgL)`.
//!
//! Vertices are the right cosets `Lx`; `Lx ~ Ly` when `y x⁻¹ ∈ LgL`.
//! Cosets are numbered in order of first discovery by a breadth-first search
//! from `L` under right multiplication by the generators of `G`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_VERTEX_CAP: usize = 100_000;

/// The data `(G, L, g)` of a coset graph, validated.
#[derive(Debug, Clone)]
pub struct CosetGraphSpec {
    group: PermGroup,
    subgroup: PermGroup,
    g: Permutation,
    vertex_cap: usize,
}

impl CosetGraphSpec {
    /// Checks that `L ≤ G`, `g ∈ G \ L` and `g² ∈ L`.
    pub fn new(group: PermGroup, subgroup: PermGroup, g: Permutation) -> Result<Self> {
        if subgroup.degree() != group.degree() {
            return Err(Error::DegreeMismatch {
                left: group.degree(),
                right: subgroup.degree(),
            });
        }
        if g.degree() != group.degree() {
            return Err(Error::DegreeMismatch {
                left: group.degree(),
                right: g.degree(),
            });
        }
        if let Some(bad) = subgroup.generators().iter().find(|s| !group.has(s)) {
            return Err(Error::NotSubgroup(format!("{bad} is not in G")));
        }
        if !group.has(&g) {
            return Err(Error::InvalidSpec(format!("g = {g} is not in G")));
        }
        if subgroup.has(&g) {
            return Err(Error::InvalidSpec(format!("g = {g} lies in L")));
        }
        if !subgroup.has(&g.then(&g)) {
            return Err(Error::InvalidSpec(format!(
                "g² = {} is not in L, so LgL is not self-paired",
                g.then(&g)
            )));
        }
        Ok(CosetGraphSpec {
            group,
            subgroup,
            g,
            vertex_cap: DEFAULT_VERTEX_CAP,
        })
    }

    pub fn with_vertex_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap;
        self
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn g(&self) -> &Permutation {
        &self.g
    }

    pub fn vertex_cap(&self) -> usize {
        self.vertex_cap
    }

    /// `|G : L|`, the number of vertices.
    pub fn index(&self) -> BigUint {
        self.group.order() / self.subgroup.order()
    }

    /// `|L : L ∩ L^g|`, computed from an explicit intersection of `L` with its conjugate.
    pub fn valency_by_intersection(&self, cap: usize) -> Result<usize> {
        let conj = self.subgroup.conjugate(&self.g)?;
        let meet = self.subgroup.intersect_small(&conj, cap)?;
        (self.subgroup.order() / meet.order())
            .to_usize()
            .ok_or_else(|| Error::InvalidParameter("valency does not fit in usize".into()))
    }
}

/// Right cosets of `L` in `G` with the permutation action of `G`'s generators.
#[derive(Debug, Clone)]
pub struct CosetTable {
    reps: Vec<Permutation>,
    action: Vec<Vec<usize>>,
    /// `(parent coset, generator)` through which each coset was first reached.
    parent: Vec<Option<(usize, usize)>>,
    chain: StabilizerChain,
    lookup: HashMap<Vec<usize>, usize>,
}

/// The least element of `Lx` in the order given by the images of `L`'s base.
fn canonical_coset_element(chain: &StabilizerChain, x: &Permutation) -> Permutation {
    let mut y = x.clone();
    for level in chain.levels() {
        let &beta = level
            .orbit()
            .iter()
            .min_by_key(|&&b| y.image(b))
            .expect("orbit contains the base point");
        if beta != level.base_point() {
            y = level.representative(beta).unwrap().then(&y);
        }
    }
    y
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Representative of each coset; `reps()[0]` is the identity.
    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// Point map on coset indices induced by generator `k` of `G`.
    pub fn action(&self, k: usize) -> &[usize] {
        &self.action[k]
    }

    /// Index of the coset `Lx`, or `None` if `x` is outside `G`.
    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        if x.degree() != self.chain.degree() {
            return None;
        }
        let key = canonical_coset_element(&self.chain, x);
        self.lookup.get(key.images()).copied()
    }

    /// Images of the generators of `G` acting on cosets, as a permutation group.
    pub fn induced_action(&self) -> PermGroup {
        let gens = self
            .action
            .iter()
            .map(|a| Permutation::from_images_unchecked(a.clone()))
            .collect();
        PermGroup::new(self.len(), gens).expect("coset action is a permutation")
    }
}

/// Enumerates `[G : L]`, refusing when the index exceeds `cap`.
pub fn enumerate_cosets(group: &PermGroup, subgroup: &PermGroup, cap: usize) -> Result<CosetTable> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotSubgroup("L is not contained in G".into()));
    }
    let index = group.order() / subgroup.order();
    let count = match index.to_usize() {
        Some(c) if c <= cap => c,
        _ => return Err(Error::cap("cosets", index, cap)),
    };
    let chain = subgroup.chain().clone();
    let gens = group.generators();
    let id = Permutation::identity(group.degree());
    let mut table = CosetTable {
        reps: Vec::with_capacity(count),
        action: vec![vec![usize::MAX; count]; gens.len()],
        parent: Vec::with_capacity(count),
        chain,
        lookup: HashMap::with_capacity(count),
    };
    let key = canonical_coset_element(&table.chain, &id);
    table.lookup.insert(key.images().to_vec(), 0);
    table.reps.push(id);
    table.parent.push(None);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, s) in gens.iter().enumerate() {
            let x = table.reps[i].then(s);
            let key = canonical_coset_element(&table.chain, &x);
            let j = match table.lookup.get(key.images()) {
                Some(&j) => j,
                None => {
                    let j = table.reps.len();
                    table.lookup.insert(key.images().to_vec(), j);
                    table.reps.push(x);
                    table.parent.push(Some((i, k)));
                    queue.push_back(j);
                    j
                }
            };
            table.action[k][i] = j;
        }
    }
    debug_assert_eq!(table.len(), count);
    Ok(table)
}

/// A materialized coset graph together with its coset table.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub table: CosetTable,
    pub graph: Graph,
}

/// Builds the table and the graph. The neighbors of `L` are the cosets `Lgl`,
/// found as the orbit of `Lg` under `L`; every other neighborhood is the
/// image of its BFS parent's neighborhood under the generator that reached it.
pub fn materialize(spec: &CosetGraphSpec) -> Result<CosetGraph> {
    let table = enumerate_cosets(&spec.group, &spec.subgroup, spec.vertex_cap)?;
    let n = table.len();
    let start = table
        .index_of(&spec.g)
        .expect("g lies in G, so Lg is a coset");
    let mut base = vec![start];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut head = 0;
    while head < base.len() {
        let j = base[head];
        head += 1;
        for l in spec.subgroup.generators() {
            let k = table.index_of(&table.reps[j].then(l)).unwrap();
            if !seen[k] {
                seen[k] = true;
                base.push(k);
            }
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    adj[0] = base;
    for i in 1..n {
        let (p, k) = table.parent[i].unwrap();
        let act = &table.action[k];
        adj[i] = adj[p].iter().map(|&v| act[v]).collect();
    }
    let graph = Graph::from_adjacency(adj)?;
    Ok(CosetGraph { table, graph })
}

pub fn build_coset_graph(spec: &CosetGraphSpec) -> Result<Graph> {
    materialize(spec).map(|cg| cg.graph)
}

/// `Cos(G, L, LgL)` is connected iff `⟨L, g⟩ = G`.
pub fn is_connected_cosetgraph(spec: &CosetGraphSpec) -> bool {
    let mut gens = spec.subgroup.generators().to_vec();
    gens.push(spec.g.clone());
    let sub = PermGroup::new(spec.group.degree(), gens).expect("same degree");
    sub.order() == spec.group.order()
}

pub fn induced_action_on_cosets(spec: &CosetGraphSpec) -> Result<PermGroup> {
    enumerate_cosets(&spec.group, &spec.subgroup, spec.vertex_cap).map(|t| t.induced_action())
}
