//! Immutable undirected simple graphs with bitset adjacency.
//!
//! Every game in the crate is played on a [`Graph`]. Vertices are the ids
//! `0..n`; adjacency is kept twice, as a [`VertexSet`] per vertex for O(1)
//! membership tests and as a sorted neighbor list for iteration.

mod bitset;
mod distance;
mod json;

pub use bitset::VertexSet;
pub use distance::{DistanceMatrix, UNREACHABLE};
pub use json::GraphJson;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    neighbors: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adjacency = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let neighbors = adjacency.iter().map(VertexSet::to_vec).collect();
        Ok(Graph {
            adjacency,
            neighbors,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn adjacency(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    /// `u == v` or `uv` is an edge.
    #[inline]
    pub fn adjacent_or_equal(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self, vertices: impl IntoIterator<Item = Vertex>) -> Result<VertexSet> {
        let mut s = VertexSet::new(self.n());
        for v in vertices {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::domain(format!("vertex {v} outside 0..{}", self.n())))
        }
    }

    /// `N[v]` as a set.
    pub fn closed_neighborhood_of(&self, v: Vertex) -> VertexSet {
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        s
    }

    /// `N[S]`: the members of `S` together with all their neighbors.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        if set.universe() != self.n() {
            return Err(Error::domain(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n()
            )));
        }
        let mut out = set.clone();
        for v in set.iter() {
            out.union_with(&self.adjacency[v]);
        }
        Ok(out)
    }

    /// `N(S) = N[S] \ S`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        let mut out = self.closed_neighborhood(set)?;
        out.difference_with(set);
        Ok(out)
    }

    /// Hop distances from `source`; `UNREACHABLE` for other components.
    pub fn bfs(&self, source: Vertex) -> Vec<u32> {
        self.bfs_within(source, None)
    }

    /// BFS restricted to `allowed` (the source is always admitted).
    pub fn bfs_within(&self, source: Vertex, allowed: Option<&VertexSet>) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if dist[w] == UNREACHABLE && allowed.is_none_or(|a| a.contains(w)) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        DistanceMatrix::from_rows((0..self.n()).map(|v| self.bfs(v)).collect())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(UNREACHABLE);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] as usize + 1 >= b) {
                    break;
                }
                for &w in &self.neighbors[u] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = (dist[u] + dist[w] + 1) as usize;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Subgraph induced by `vertices`, renumbered in the given order: the
    /// i-th listed vertex becomes vertex `i`. Also returns the old-to-new map.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Option<Vertex>>)> {
        let mut map = vec![None; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if map[v].replace(i).is_some() {
                return Err(Error::domain(format!("vertex {v} listed twice")));
            }
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.neighbors[v] {
                if let Some(j) = map[w] {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let mut sub = Graph::from_edges(vertices.len(), edges)?;
        if let Some(labels) = &self.labels {
            sub.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((sub, map))
    }

    /// Vertex classes of the connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&VertexSet::full(self.n()))
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<Vertex>> {
        let mut seen = VertexSet::new(self.n());
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.neighbors[u] {
                    if within.contains(w) && seen.insert(w) {
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::contract("graph must be connected and non-empty"))
        }
    }
}
