//! Graph families used as witnesses and reduction sources.
//!
//! Randomized constructors draw from `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)`, so every sample is reproducible from its seed.

mod corpus;
mod subdivision;

pub use corpus::{canonical_code, connected_graphs, connected_graphs_up_to};
pub use subdivision::{subdivide, Subdivision, VertexRole};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Retry budget for rejection-sampled connected graphs.
pub const RANDOM_RETRIES: usize = 10_000;

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Grid { rows: usize, cols: usize },
    ToroidalGrid { rows: usize, cols: usize },
    Petersen,
    ProjectiveIncidence { q: usize },
    RandomGnp { n: usize, p: f64, seed: u64 },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::Grid { rows, cols } => grid(rows, cols),
        FamilySpec::ToroidalGrid { rows, cols } => toroidal_grid(rows, cols),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::ProjectiveIncidence { q } => projective_incidence(q),
        FamilySpec::RandomGnp { n, p, seed } => random_connected(n, p, seed),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("complete graph needs at least one vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::domain("grid dimensions must be positive"));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// `C_rows □ C_cols`; vertex `r * cols + c`.
pub fn toroidal_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 3 || cols < 3 {
        return Err(Error::domain(format!(
            "toroidal grid needs rows >= 3 and cols >= 3, got {rows}x{cols}"
        )));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            edges.push((id(r, c), id(r, (c + 1) % cols)));
            edges.push((id(r, c), id((r + 1) % rows, c)));
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen is valid")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Point-line incidence graph of PG(2, q) for prime `q`. Points are
/// vertices `0..m`, lines `m..2m`, with `m = q^2 + q + 1`.
pub fn projective_incidence(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::domain(format!(
            "projective-incidence needs a prime order, got {q}"
        )));
    }
    // Normalized homogeneous coordinates: first nonzero coordinate is 1.
    let mut points: Vec<[usize; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            points.push([1, a, b]);
        }
    }
    for b in 0..q {
        points.push([0, 1, b]);
    }
    points.push([0, 0, 1]);
    let m = points.len();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                edges.push((i, m + j));
            }
        }
    }
    let g = Graph::from_edges(2 * m, edges)?;
    assert!(
        (0..2 * m).all(|v| g.degree(v) == q + 1),
        "PG(2,{q}) incidence must be (q+1)-regular"
    );
    assert_eq!(g.girth(), Some(6), "PG(2,{q}) incidence must have girth 6");
    Ok(g)
}

/// `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("random graph needs at least one vertex"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain(format!("edge probability must be in (0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no connected G({n}, {p}) sample within {RANDOM_RETRIES} draws (seed {seed})"
    )))
}

/// Line graph `L(G)` with the edge behind each of its vertices.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(Vertex, Vertex)>)> {
    let edges: Vec<_> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::domain("line graph of an edgeless graph"));
    }
    let mut adj = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                adj.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(edges.len(), adj)?, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        let t = toroidal_grid(3, 5).unwrap();
        assert_eq!((t.n(), t.edge_count()), (15, 30));
        assert!((0..15).all(|v| t.degree(v) == 4));
        assert!(toroidal_grid(2, 5).is_err());
        let p = petersen();
        assert_eq!((p.n(), p.edge_count(), p.min_degree(), p.max_degree()), (10, 15, 3, 3));
    }

    /// Fano-plane oracle: the seven lines of PG(2,2) enumerated by hand.
    #[test]
    fn heawood_matches_fano_enumeration() {
        let g = projective_incidence(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (14, 21));
        assert_eq!(g.girth(), Some(6));
        // Every pair of points lies on exactly one common line.
        for a in 0..7 {
            for b in a + 1..7 {
                let common = (7..14).filter(|&l| g.has_edge(a, l) && g.has_edge(b, l)).count();
                assert_eq!(common, 1);
            }
        }
        // Bipartite: no point-point or line-line edges.
        assert!(g.edges().all(|(u, v)| u < 7 && v >= 7));
    }

    #[test]
    fn projective_larger_orders() {
        for q in [3, 5] {
            let g = projective_incidence(q).unwrap();
            assert_eq!(g.n(), 2 * (q * q + q + 1));
        }
        assert!(projective_incidence(4).is_err());
        assert!(projective_incidence(1).is_err());
    }

    #[test]
    fn random_connected_is_deterministic() {
        let a = random_connected(8, 0.4, 7).unwrap();
        let b = random_connected(8, 0.4, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(random_connected(1, 0.3, 0).unwrap().n(), 1);
        assert_eq!(random_connected(5, 1.0, 3).unwrap(), complete(5).unwrap());
        assert!(random_connected(5, 0.0, 3).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let (l, _) = line_graph(&path(3).unwrap()).unwrap();
        assert_eq!((l.n(), l.edge_count()), (2, 1));
        let (l, _) = line_graph(&cycle(6).unwrap()).unwrap();
        assert_eq!(canonical_code(&l), canonical_code(&cycle(6).unwrap()));
        let (l, _) = line_graph(&complete(4).unwrap()).unwrap();
        assert_eq!((l.n(), l.edge_count(), l.min_degree(), l.max_degree()), (6, 12, 4, 4));
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn line_graph_degree_identity_exhaustive() {
        for g in connected_graphs_up_to(5) {
            if g.edge_count() == 0 {
                continue;
            }
            let (l, edges) = line_graph(&g).unwrap();
            for (i, &(u, v)) in edges.iter().enumerate() {
                assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
            }
        }
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = FamilySpec::ToroidalGrid { rows: 3, cols: 5 };
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"{"family":"toroidal-grid","rows":3,"cols":5}"#);
        let back: FamilySpec = serde_json::from_str(&s).unwrap();
        assert_eq!(generate(&back).unwrap().n(), 15);
    }
}
