//! Canonical labeling and automorphism groups by individualization–refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first smallest non-singleton cell, individualize each
//! of its vertices in turn. Leaves (discrete partitions) are ordered by their
//! trace of node invariants and then by the relabeled edge list; the least leaf
//! gives the canonical form. Equal leaves yield automorphisms, which prune the
//! rest of the search by orbits and by jumping back to the common ancestor.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const DEFAULT_VERTEX_CAP: usize = 2000;

/// A canonical relabeling together with the relabeled edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Maps each input vertex to its canonical label.
    pub relabeling: Permutation,
    /// Sorted `(u, v)` pairs with `u < v` after relabeling.
    pub canonical_edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.relabeling.degree()
    }

    /// The canonical graph itself.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.vertex_count(), &self.canonical_edges).expect("valid edges")
    }

    /// 64-bit FNV-1a digest of the canonical graph, as 16 hex digits.
    pub fn digest(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        feed(self.vertex_count() as u64);
        for &(u, v) in &self.canonical_edges {
            feed(u as u64);
            feed(v as u64);
        }
        format!("{h:016x}")
    }
}

#[derive(Clone)]
struct Partition {
    /// Vertices in cell order.
    lab: Vec<usize>,
    /// Start position of the cell containing each vertex.
    cell_of: Vec<usize>,
    /// Cell length at each cell start, zero elsewhere.
    len_at: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut len_at = vec![0; n];
        if n > 0 {
            len_at[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            cell_of: vec![0; n],
            len_at,
        }
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut start = 0;
        std::iter::from_fn(move || {
            if start >= self.lab.len() {
                return None;
            }
            let len = self.len_at[start];
            let cell = (start, len);
            start += len;
            Some(cell)
        })
    }

    fn target_cell(&self) -> Option<(usize, usize)> {
        self.cells()
            .filter(|&(_, len)| len > 1)
            .min_by_key(|&(start, len)| (len, start))
    }

    fn individualize(&mut self, v: usize) {
        let start = self.cell_of[v];
        let len = self.len_at[start];
        let at = self.lab[start..start + len].iter().position(|&x| x == v).unwrap();
        self.lab[start..start + len].swap(0, at);
        self.len_at[start] = 1;
        self.len_at[start + 1] = len - 1;
        for &x in &self.lab[start + 1..start + len] {
            self.cell_of[x] = start + 1;
        }
    }

    fn signature(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut sig: Vec<usize> = g.neighbors(v).iter().map(|&u| self.cell_of[u]).collect();
        sig.sort_unstable();
        sig
    }

    /// Refines to the coarsest equitable refinement.
    fn refine(&mut self, g: &Graph) {
        loop {
            let cells: Vec<(usize, usize)> = self.cells().filter(|&(_, l)| l > 1).collect();
            let mut splits: Vec<(usize, Vec<(Vec<usize>, usize)>)> = Vec::new();
            for (start, len) in cells {
                let mut keyed: Vec<(Vec<usize>, usize)> = self.lab[start..start + len]
                    .iter()
                    .map(|&v| (self.signature(g, v), v))
                    .collect();
                keyed.sort();
                if keyed.first().unwrap().0 != keyed.last().unwrap().0 {
                    splits.push((start, keyed));
                }
            }
            if splits.is_empty() {
                return;
            }
            for (start, keyed) in splits {
                let mut cell_start = start;
                for (k, (sig, v)) in keyed.iter().enumerate() {
                    let pos = start + k;
                    if k > 0 && *sig != keyed[k - 1].0 {
                        self.len_at[cell_start] = pos - cell_start;
                        cell_start = pos;
                    }
                    self.lab[pos] = *v;
                    self.cell_of[*v] = cell_start;
                }
                self.len_at[cell_start] = start + keyed.len() - cell_start;
                for pos in cell_start + 1..start + keyed.len() {
                    self.len_at[pos] = 0;
                }
            }
        }
    }

    /// Label-independent invariant of an equitable partition: its quotient matrix.
    fn invariant(&self, g: &Graph) -> u64 {
        let mut h: u64 = 0x9e37_79b9_7f4a_7c15;
        for (start, len) in self.cells() {
            h = mix(h, start as u64);
            h = mix(h, len as u64);
            for c in self.signature(g, self.lab[start]) {
                h = mix(h, c as u64);
            }
        }
        h
    }
}

fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finalizer over the running state
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone)]
struct Leaf {
    path: Vec<usize>,
    trace: Vec<u64>,
    lab: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

struct Search<'a> {
    graph: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Permutation>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph) -> Self {
        Search {
            graph,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut root = Partition::unit(self.graph.vertex_count());
        root.refine(self.graph);
        let mut trace = vec![root.invariant(self.graph)];
        let mut path = Vec::new();
        self.visit(&root, &mut path, &mut trace);
    }

    /// Orbit representative of every vertex under the automorphisms fixing `path`.
    fn orbit_reps(&self, path: &[usize]) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in &self.automorphisms {
            if path.iter().any(|&p| a.image(p) != p) {
                continue;
            }
            for v in 0..n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a.image(v)));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn prefix_vs_best(&self, trace: &[u64]) -> Ordering {
        match &self.best {
            None => Ordering::Equal,
            Some(b) => {
                for (k, x) in trace.iter().enumerate() {
                    match b.trace.get(k) {
                        None => return Ordering::Greater,
                        Some(y) if x != y => return x.cmp(y),
                        _ => {}
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn prefix_eq_first(&self, trace: &[u64]) -> bool {
        match &self.first {
            None => true,
            Some(f) => f.trace.len() >= trace.len() && f.trace[..trace.len()] == *trace,
        }
    }

    fn visit(&mut self, part: &Partition, path: &mut Vec<usize>, trace: &mut Vec<u64>) -> Option<usize> {
        let Some((start, len)) = part.target_cell() else {
            return self.leaf(part, path, trace);
        };
        let depth = path.len();
        let mut children: Vec<usize> = part.lab[start..start + len].to_vec();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut reps_cache: Option<(usize, Vec<usize>)> = None;
        for v in children {
            if !explored.is_empty() {
                let stale = reps_cache
                    .as_ref()
                    .is_none_or(|(count, _)| *count != self.automorphisms.len());
                if stale {
                    reps_cache = Some((self.automorphisms.len(), self.orbit_reps(path)));
                }
                let reps = &reps_cache.as_ref().unwrap().1;
                if explored.iter().any(|&w| reps[w] == reps[v]) {
                    continue;
                }
            }
            let mut child = part.clone();
            child.individualize(v);
            child.refine(self.graph);
            trace.push(child.invariant(self.graph));
            // a subtree whose trace differs from the first leaf holds no automorphic
            // image of it, and one whose trace exceeds the best cannot hold the minimum
            if !self.prefix_eq_first(trace) && self.prefix_vs_best(trace) == Ordering::Greater {
                trace.pop();
                continue;
            }
            path.push(v);
            let jump = self.visit(&child, path, trace);
            path.pop();
            trace.pop();
            explored.push(v);
            if let Some(target) = jump {
                if target < depth {
                    return Some(target);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, path: &[usize], trace: &[u64]) -> Option<usize> {
        let g = self.graph;
        let pos = &part.cell_of;
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let leaf = Leaf {
            path: path.to_vec(),
            trace: trace.to_vec(),
            lab: part.lab.clone(),
            edges,
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if first.trace == leaf.trace && leaf.edges == first.edges {
            let gamma = Permutation::from_images_unchecked(
                (0..g.vertex_count()).map(|v| first.lab[pos[v]]).collect(),
            );
            let jump = common_prefix(path, &first.path);
            self.record(gamma);
            return Some(jump);
        }
        let best = self.best.as_ref().unwrap();
        let ord = leaf
            .trace
            .cmp(&best.trace)
            .then_with(|| leaf.edges.cmp(&best.edges));
        match ord {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let gamma = Permutation::from_images_unchecked(
                    (0..g.vertex_count()).map(|v| best.lab[pos[v]]).collect(),
                );
                let jump = common_prefix(path, &best.path);
                self.record(gamma);
                Some(jump)
            }
            Ordering::Greater => None,
        }
    }

    fn record(&mut self, gamma: Permutation) {
        debug_assert!(self.graph.is_automorphism(&gamma));
        if !gamma.is_identity() && !self.automorphisms.contains(&gamma) {
            self.automorphisms.push(gamma);
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        return Err(Error::cap("graph vertices", g.vertex_count(), cap));
    }
    Ok(())
}

/// Canonical form with an explicit vertex cap.
pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(CanonicalForm {
            relabeling: Permutation::identity(0),
            canonical_edges: Vec::new(),
        });
    }
    let mut search = Search::new(g);
    search.run();
    let best = search.best.expect("search reaches a leaf");
    let mut images = vec![0; n];
    for (position, &v) in best.lab.iter().enumerate() {
        images[v] = position;
    }
    Ok(CanonicalForm {
        relabeling: Permutation::from_images_unchecked(images),
        canonical_edges: best.edges,
    })
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_capped(g, DEFAULT_VERTEX_CAP)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        check_cap(a, DEFAULT_VERTEX_CAP)?;
        check_cap(b, DEFAULT_VERTEX_CAP)?;
        return Ok(false);
    }
    Ok(canonical_form(a)?.canonical_edges == canonical_form(b)?.canonical_edges)
}

/// Automorphism group generators found by the canonical search.
pub fn automorphism_generators(g: &Graph, cap: usize) -> Result<Vec<Permutation>> {
    check_cap(g, cap)?;
    if g.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search::new(g);
    search.run();
    Ok(search.automorphisms)
}

pub fn automorphism_group_capped(g: &Graph, cap: usize) -> Result<PermGroup> {
    let gens = automorphism_generators(g, cap)?;
    PermGroup::new(g.vertex_count().max(1), gens)
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_capped(g, DEFAULT_VERTEX_CAP)
}

/// Whether `x` is a normal subgroup of the full automorphism group of `g`.
///
/// Errors when `x` does not act by automorphisms of `g`.
pub fn is_normal_subgroup_of_aut(g: &Graph, x: &PermGroup) -> Result<bool> {
    if x.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: g.vertex_count(),
            right: x.degree(),
        });
    }
    if let Some(bad) = x.generators().iter().find(|p| !g.is_automorphism(p)) {
        return Err(Error::NotSubgroup(format!(
            "{bad} is not an automorphism of the graph"
        )));
    }
    let aut = automorphism_group(g)?;
    Ok(x.is_normal_in(&aut))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let u = v ^ (1 << b);
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn k4_canonical_edges_are_all_pairs() {
        let cf = canonical_form(&Graph::complete(4)).unwrap();
        assert_eq!(
            cf.canonical_edges,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn known_automorphism_orders() {
        assert_eq!(automorphism_group(&cube()).unwrap().order(), BigUint::from(48u32));
        assert_eq!(automorphism_group(&petersen()).unwrap().order(), BigUint::from(120u32));
        assert_eq!(automorphism_group(&Graph::complete(6)).unwrap().order(), BigUint::from(720u32));
        assert_eq!(automorphism_group(&Graph::cycle(9)).unwrap().order(), BigUint::from(18u32));
        assert_eq!(automorphism_group(&Graph::empty(5)).unwrap().order(), BigUint::from(120u32));
        let two_k4 = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(automorphism_group(&two_k4).unwrap().order(), BigUint::from(1152u32));
    }

    #[test]
    fn relabeled_cube_is_isomorphic() {
        let c = cube();
        let shuffle = Permutation::parse_cycles("(1,5,2,8)(3,6)", 8).unwrap();
        assert!(is_isomorphic(&c, &c.relabel(&shuffle).unwrap()).unwrap());
        assert!(!is_isomorphic(&c, &Graph::complete(4).disjoint_union(&Graph::complete(4))).unwrap());
    }

    #[test]
    fn relabeling_maps_graph_onto_canonical_graph() {
        let p = petersen();
        let cf = canonical_form(&p).unwrap();
        assert_eq!(p.relabel(&cf.relabeling).unwrap(), cf.graph());
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let err = canonical_form_capped(&Graph::cycle(10), 5).unwrap_err();
        assert!(err.is_cap_exceeded());
    }
}
