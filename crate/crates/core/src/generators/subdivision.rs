use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// What a vertex of `G^(d)` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// An original vertex of `G` (same id).
    Branching,
    /// Interior vertex of the edge-path of `edge`, `offset` steps from its
    /// smaller endpoint (`1..d`).
    Subdividing { edge: usize, offset: usize },
}

/// `G^(d)`: every edge of `G` replaced by a path of length `d`.
///
/// Branching vertices keep their ids `0..n`; the `d - 1` interior vertices of
/// edge `e` (in `G::edges` order) are `n + e*(d-1) .. n + (e+1)*(d-1)`, listed
/// from the smaller endpoint.
#[derive(Clone, Debug)]
pub struct Subdivision {
    graph: Graph,
    base_n: usize,
    d: usize,
    edges: Vec<(Vertex, Vertex)>,
    edge_index: Vec<Option<usize>>,
    roles: Vec<VertexRole>,
}

pub fn subdivide(g: &Graph, d: usize) -> Result<Subdivision> {
    if d < 1 {
        return Err(Error::domain("subdivision length d must be at least 1"));
    }
    g.require_connected()?;
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let total = n + edges.len() * (d - 1);
    let mut roles = vec![VertexRole::Branching; n];
    let mut new_edges = Vec::new();
    let mut edge_index = vec![None; n * n];
    for (e, &(x, y)) in edges.iter().enumerate() {
        edge_index[x * n + y] = Some(e);
        edge_index[y * n + x] = Some(e);
        let mut prev = x;
        for offset in 1..d {
            let w = n + e * (d - 1) + offset - 1;
            roles.push(VertexRole::Subdividing { edge: e, offset });
            new_edges.push((prev, w));
            prev = w;
        }
        new_edges.push((prev, y));
    }
    Ok(Subdivision {
        graph: Graph::from_edges(total, new_edges)?,
        base_n: n,
        d,
        edges,
        edge_index,
        roles,
    })
}

impl Subdivision {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn role(&self, v: Vertex) -> VertexRole {
        self.roles[v]
    }

    pub fn is_branching(&self, v: Vertex) -> bool {
        v < self.base_n
    }

    /// Index of the base edge `uv`, if any.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.base_n || v >= self.base_n {
            return None;
        }
        self.edge_index[u * self.base_n + v]
    }

    /// The edge-path `P_e` from its smaller endpoint to its larger one.
    pub fn edge_path(&self, e: usize) -> Vec<Vertex> {
        let (x, y) = self.edges[e];
        let first = self.base_n + e * (self.d - 1);
        std::iter::once(x)
            .chain(first..first + self.d - 1)
            .chain(std::iter::once(y))
            .collect()
    }

    /// The vertex `offset` steps from `from` on the edge-path of `from -- to`.
    pub fn point_on(&self, from: Vertex, to: Vertex, offset: usize) -> Option<Vertex> {
        if from == to {
            return (from < self.base_n).then_some(from);
        }
        let e = self.edge_between(from, to)?;
        if offset > self.d {
            return None;
        }
        let p = self.edge_path(e);
        Some(if from < to { p[offset] } else { p[self.d - offset] })
    }

    /// Offset of `v` measured from `from` along the edge-path of `from -- to`.
    pub fn offset_on(&self, from: Vertex, to: Vertex, v: Vertex) -> Option<usize> {
        let e = self.edge_between(from, to)?;
        let i = self.edge_path(e).iter().position(|&w| w == v)?;
        Some(if from < to { i } else { self.d - i })
    }

    /// Endpoints of the edge-path through a subdividing vertex.
    pub fn carrier(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        match self.roles[v] {
            VertexRole::Branching => None,
            VertexRole::Subdividing { edge, .. } => Some(self.edges[edge]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{canonical_code, complete, cycle, petersen};

    #[test]
    fn identity_and_triangle() {
        let k3 = complete(3).unwrap();
        let s1 = subdivide(&k3, 1).unwrap();
        assert_eq!(s1.graph(), &k3);
        let s2 = subdivide(&k3, 2).unwrap();
        assert_eq!(canonical_code(s2.graph()), canonical_code(&cycle(6).unwrap()));
        assert!(subdivide(&k3, 0).is_err());
        assert!(subdivide(&Graph::empty(2), 2).is_err());
    }

    #[test]
    fn petersen_three_fold() {
        let s = subdivide(&petersen(), 3).unwrap();
        assert_eq!(s.graph().n(), 40);
        assert_eq!(s.graph().girth(), Some(15));
    }

    #[test]
    fn edge_paths_have_length_d() {
        let g = petersen();
        for d in 1..5 {
            let s = subdivide(&g, d).unwrap();
            let dm = s.graph().all_pairs_distances();
            for (e, &(x, y)) in s.edges().iter().enumerate() {
                let p = s.edge_path(e);
                assert_eq!(p.len(), d + 1);
                assert_eq!(dm.get(x, y) as usize, d);
                for (i, &w) in p.iter().enumerate().skip(1).take(d - 1) {
                    assert_eq!(s.role(w), VertexRole::Subdividing { edge: e, offset: i });
                }
                for o in 0..=d {
                    let fwd = s.point_on(x, y, o).unwrap();
                    assert_eq!(s.point_on(y, x, d - o).unwrap(), fwd);
                    assert_eq!(s.offset_on(y, x, fwd), Some(d - o));
                }
            }
        }
    }
}
