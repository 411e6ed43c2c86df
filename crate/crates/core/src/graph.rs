//! Simple undirected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A simple undirected graph on `0..vertex_count` with sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::PointOutOfRange {
                    point: u.max(v),
                    degree: n,
                });
            }
            if u == v {
                return Err(Error::Format(format!("loop at vertex {}", u + 1)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighbor lists, checking symmetry and irreflexivity.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.binary_search(&v).is_ok() {
                return Err(Error::Format(format!("loop at vertex {}", v + 1)));
            }
            if let Some(&bad) = list.iter().find(|&&u| u >= n) {
                return Err(Error::PointOutOfRange { point: bad, degree: n });
            }
        }
        for v in 0..n {
            for &u in &adj[v] {
                if adj[u].binary_search(&v).is_err() {
                    return Err(Error::Format(format!(
                        "adjacency not symmetric: {} -> {}",
                        v + 1,
                        u + 1
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&u| u + off).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The common degree, or the sorted degree multiset if the graph is irregular.
    pub fn valency(&self) -> Result<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        match (degrees.first(), degrees.last()) {
            (Some(a), Some(b)) if a == b => Ok(*a),
            (None, None) => Ok(0),
            _ => Err(Error::Irregular(degrees)),
        }
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.vertex_count()];
        for s in 0..self.vertex_count() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Largest distance between two vertices; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.bfs_distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// The image graph under `perm` (vertex `v` becomes `perm(v)`).
    pub fn relabel(&self, perm: &Permutation) -> Result<Graph> {
        if perm.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch {
                left: self.vertex_count(),
                right: perm.degree(),
            });
        }
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm.image(v)] = list.iter().map(|&u| perm.image(u)).collect();
            adj[perm.image(v)].sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Number of orbits of the group generated by `generators` on arcs (ordered edges).
    pub fn arc_orbit_count(&self, generators: &[Permutation]) -> usize {
        let mut offset = Vec::with_capacity(self.vertex_count() + 1);
        offset.push(0);
        for list in &self.adj {
            offset.push(offset.last().unwrap() + list.len());
        }
        let arc = |u: usize, v: usize| offset[u] + self.adj[u].binary_search(&v).unwrap();
        let total = *offset.last().unwrap();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in generators {
            for (u, list) in self.adj.iter().enumerate() {
                for &v in list {
                    let a = find(&mut parent, arc(u, v));
                    let b = find(&mut parent, arc(s.image(u), s.image(v)));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        (0..total).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Whether `perm` maps edges to edges.
    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.degree() == self.vertex_count()
            && self.adj.iter().enumerate().all(|(v, list)| {
                let pv = perm.image(v);
                self.adj[pv].len() == list.len()
                    && list.iter().all(|&u| self.has_edge(pv, perm.image(u)))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Graph {
        // vertices are 3-bit strings, adjacent when they differ in one bit
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

    #[test]
    fn complete_graph_queries() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.valency().unwrap(), 4);
        assert!(k5.is_connected());
        assert!(k5.is_complete());
    }

    #[test]
    fn cube_queries() {
        let c = cube();
        assert_eq!(c.valency().unwrap(), 3);
        assert!(c.is_connected());
        assert!(!c.is_complete());
        assert!(c.is_bipartite());
        assert_eq!(c.diameter(), Some(3));
    }

    #[test]
    fn disjoint_k4s() {
        let g = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(g.valency().unwrap(), 3);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
    }

    #[test]
    fn irregular_valency_reports_degrees() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.valency().unwrap_err(), Error::Irregular(vec![1, 1, 2]));
    }

    #[test]
    fn construction_errors() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 5)]).is_err());
        assert!(Graph::from_adjacency(vec![vec![1], vec![]]).is_err());
    }
}
