//! Interval filament representations.
//!
//! A filament is an x-monotone polyline, zero at both ends and positive in
//! between. Two filaments are adjacent iff they cross. Non-adjacent pairs
//! are either interval-disjoint or *nested* (one lies under the other).

mod envelope;
mod geometry;
mod random;
mod strategy;

pub use envelope::{classify_region, top_sequence, Region, TopEntry, TopSequence};
pub use geometry::{orient, segment_contact, Coord, Point, SegmentContact};
pub use random::random_rep;
pub use strategy::{two_cop_policy, FilamentMemory, HuntMode, TwoCopPolicy};

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filament {
    pub vertex: Vertex,
    pub points: Vec<Point>,
}

impl Filament {
    pub fn new(vertex: Vertex, points: Vec<Point>) -> Self {
        Filament { vertex, points }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(vertex: Vertex, pts: &[(i64, i64)]) -> Self {
        Filament::new(vertex, pts.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn left(&self) -> &Coord {
        &self.points[0].x
    }

    pub fn right(&self) -> &Coord {
        &self.points[self.points.len() - 1].x
    }

    /// Height at `x`, or `None` outside the open interval.
    pub fn height_at(&self, x: &Coord) -> Option<Coord> {
        if x <= self.left() || x >= self.right() {
            return None;
        }
        let i = self.points.partition_point(|p| &p.x <= x);
        let (a, b) = (&self.points[i - 1], &self.points[i]);
        let t = (&x.0 - &a.x.0) / (&b.x.0 - &a.x.0);
        Some(Coord(&a.y.0 + t * (&b.y.0 - &a.y.0)))
    }

    fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        self.points.windows(2).map(|w| (&w[0], &w[1]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilamentRep {
    pub filaments: Vec<Filament>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    VertexIds { message: String },
    TooFewPoints { vertex: Vertex },
    NotMonotone { vertex: Vertex, at: (f64, f64) },
    EndpointOffAxis { vertex: Vertex, at: (f64, f64) },
    NonPositive { vertex: Vertex, at: (f64, f64) },
    DuplicateEndpoint { vertices: (Vertex, Vertex), x: f64 },
    NonTransversal { vertices: (Vertex, Vertex), at: (f64, f64) },
    TriplePoint { vertices: Vec<Vertex>, at: (f64, f64) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexIds { message } => write!(f, "vertex ids: {message}"),
            Violation::TooFewPoints { vertex } => write!(f, "filament {vertex} has fewer than 3 points"),
            Violation::NotMonotone { vertex, at } => write!(f, "filament {vertex} not x-monotone at {at:?}"),
            Violation::EndpointOffAxis { vertex, at } => {
                write!(f, "filament {vertex} endpoint {at:?} not on the x-axis")
            }
            Violation::NonPositive { vertex, at } => {
                write!(f, "filament {vertex} interior point {at:?} not above the axis")
            }
            Violation::DuplicateEndpoint { vertices, x } => {
                write!(f, "filaments {} and {} share endpoint x = {x}", vertices.0, vertices.1)
            }
            Violation::NonTransversal { vertices, at } => {
                write!(
                    f,
                    "filaments {} and {} touch without crossing at {at:?}",
                    vertices.0, vertices.1
                )
            }
            Violation::TriplePoint { vertices, at } => write!(f, "filaments {vertices:?} meet at {at:?}"),
        }
    }
}

/// Crossing points between each pair, or the first degenerate contact.
type Crossings = HashMap<(Vertex, Vertex), Vec<Point>>;

impl FilamentRep {
    pub fn new(mut filaments: Vec<Filament>) -> Self {
        filaments.sort_by_key(|f| f.vertex);
        FilamentRep { filaments }
    }

    pub fn n(&self) -> usize {
        self.filaments.len()
    }

    pub fn filament(&self, v: Vertex) -> &Filament {
        &self.filaments[v]
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let rep: FilamentRep = serde_json::from_str(s)?;
        Ok(FilamentRep::new(rep.filaments))
    }

    pub fn read_json(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("rep serializes")
    }

    fn shape_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, f) in self.filaments.iter().enumerate() {
            if f.vertex != i {
                out.push(Violation::VertexIds {
                    message: format!("expected vertex {i}, found {}", f.vertex),
                });
                return out;
            }
            if f.points.len() < 3 {
                out.push(Violation::TooFewPoints { vertex: i });
                continue;
            }
            for w in f.points.windows(2) {
                if w[1].x <= w[0].x {
                    out.push(Violation::NotMonotone {
                        vertex: i,
                        at: w[1].to_f64(),
                    });
                }
            }
            let m = f.points.len() - 1;
            for p in [&f.points[0], &f.points[m]] {
                if !p.y.is_zero() {
                    out.push(Violation::EndpointOffAxis {
                        vertex: i,
                        at: p.to_f64(),
                    });
                }
            }
            for p in &f.points[1..m] {
                if !p.y.is_positive() {
                    out.push(Violation::NonPositive {
                        vertex: i,
                        at: p.to_f64(),
                    });
                }
            }
        }
        let mut ends: Vec<(&Coord, Vertex)> = self
            .filaments
            .iter()
            .filter(|f| !f.points.is_empty())
            .flat_map(|f| [(f.left(), f.vertex), (f.right(), f.vertex)])
            .collect();
        ends.sort();
        for w in ends.windows(2) {
            if w[0].0 == w[1].0 {
                out.push(Violation::DuplicateEndpoint {
                    vertices: (w[0].1, w[1].1),
                    x: w[0].0.to_f64(),
                });
            }
        }
        out
    }

    /// Proper crossings of every pair, plus contact violations.
    fn crossings(&self) -> (Crossings, Vec<Violation>) {
        let mut cross: Crossings = HashMap::new();
        let mut bad = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let (fu, fv) = (&self.filaments[u], &self.filaments[v]);
                if fu.right() <= fv.left() || fv.right() <= fu.left() {
                    continue;
                }
                for (a, b) in fu.segments() {
                    for (c, d) in fv.segments() {
                        if b.x < c.x || d.x < a.x {
                            continue;
                        }
                        match segment_contact(a, b, c, d) {
                            SegmentContact::None => {}
                            SegmentContact::Proper(p) => cross.entry((u, v)).or_default().push(p),
                            SegmentContact::Degenerate(p) => bad.push(Violation::NonTransversal {
                                vertices: (u, v),
                                at: p.to_f64(),
                            }),
                        }
                    }
                }
            }
        }
        bad.dedup();
        (cross, bad)
    }

    /// All violations of the representation invariants; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let shape = self.shape_violations();
        if !shape.is_empty() {
            return shape;
        }
        let (cross, mut bad) = self.crossings();
        let mut at: HashMap<&Point, Vec<Vertex>> = HashMap::new();
        for (&(u, v), pts) in &cross {
            for p in pts {
                let e = at.entry(p).or_default();
                e.extend([u, v]);
            }
        }
        let mut triples: Vec<_> = at
            .into_iter()
            .filter_map(|(p, mut vs)| {
                vs.sort_unstable();
                vs.dedup();
                (vs.len() >= 3).then(|| Violation::TriplePoint {
                    vertices: vs,
                    at: p.to_f64(),
                })
            })
            .collect();
        triples.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        bad.extend(triples);
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Adjacency by proper crossings. Fails on invalid shapes or contacts.
    pub fn intersection_graph(&self) -> Result<Graph> {
        if let Some(v) = self.shape_violations().first() {
            return Err(Error::Geometry(v.to_string()));
        }
        let (cross, bad) = self.crossings();
        if let Some(v) = bad.first() {
            return Err(Error::Geometry(v.to_string()));
        }
        Graph::from_edges(self.n(), cross.keys().copied())
    }

    /// `u ≺ v`: u's interval strictly inside v's and no crossing.
    pub fn nested_in(&self, g: &Graph, u: Vertex, v: Vertex) -> bool {
        let (fu, fv) = (&self.filaments[u], &self.filaments[v]);
        u != v && fv.left() < fu.left() && fu.right() < fv.right() && !g.has_edge(u, v)
    }

    /// The nesting order as `below[v]` = set of filaments nested in `v`.
    pub fn nesting(&self, g: &Graph) -> Vec<VertexSet> {
        (0..self.n())
            .map(|v| VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&u| self.nested_in(g, u, v))))
            .collect()
    }

    /// Vertex with the left-most endpoint.
    pub fn leftmost(&self) -> Option<Vertex> {
        self.filaments
            .iter()
            .min_by(|a, b| a.left().cmp(b.left()))
            .map(|f| f.vertex)
    }
}

#[cfg(test)]
mod tests;
