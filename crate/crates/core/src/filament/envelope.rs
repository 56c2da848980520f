//! Upper envelope (top filament sequence) and region classification.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{Coord, FilamentRep};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One maximal x-interval on which `vertex` is the highest filament.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopEntry {
    pub vertex: Vertex,
    pub from: Coord,
    pub to: Coord,
}

impl TopEntry {
    /// A point strictly inside the top part.
    pub fn x_star(&self) -> Coord {
        midpoint(&self.from, &self.to)
    }
}

pub type TopSequence = Vec<TopEntry>;

fn midpoint(a: &Coord, b: &Coord) -> Coord {
    Coord((&a.0 + &b.0) / BigRational::from_integer(BigInt::from(2)))
}

/// Upper envelope of the filaments in `set`, left to right. Between two
/// consecutive breakpoints (filament vertices or pairwise crossings) the
/// order of filaments is fixed, so the maximum at the midpoint decides the
/// whole piece. Gaps where no filament of `set` is defined are skipped.
pub fn top_sequence(rep: &FilamentRep, set: &[Vertex]) -> Result<TopSequence> {
    if set.is_empty() {
        return Err(Error::domain("top sequence of an empty set"));
    }
    let mut xs: Vec<Coord> = Vec::new();
    for &v in set {
        if v >= rep.n() {
            return Err(Error::domain(format!("vertex {v} out of range")));
        }
        xs.extend(rep.filaments[v].points.iter().map(|p| p.x.clone()));
    }
    let (cross, _) = rep.crossings();
    for (&(u, v), pts) in &cross {
        if set.contains(&u) && set.contains(&v) {
            xs.extend(pts.iter().map(|p| p.x.clone()));
        }
    }
    xs.sort();
    xs.dedup();
    let mut out: TopSequence = Vec::new();
    for w in xs.windows(2) {
        let m = midpoint(&w[0], &w[1]);
        let top = set
            .iter()
            .filter_map(|&v| rep.filaments[v].height_at(&m).map(|h| (h, v)))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, v)) = top else { continue };
        match out.last_mut() {
            Some(e) if e.vertex == v && e.to == w[0] => e.to = w[1].clone(),
            _ => out.push(TopEntry {
                vertex: v,
                from: w[0].clone(),
                to: w[1].clone(),
            }),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Left,
    Bottom,
    Right,
}

/// Region of filament `u` relative to the top filament `t` and the upward ray
/// at `x_star`. `u` must not cross `t`.
pub fn classify_region(rep: &FilamentRep, g: &Graph, t: Vertex, x_star: &Coord, u: Vertex) -> Result<Region> {
    if u == t || g.has_edge(u, t) {
        return Err(Error::contract(format!("filament {u} meets {t}; no region")));
    }
    if rep.nested_in(g, u, t) {
        return Ok(Region::Bottom);
    }
    let f = &rep.filaments[u];
    if f.right() < x_star {
        Ok(Region::Left)
    } else if f.left() > x_star {
        Ok(Region::Right)
    } else {
        Err(Error::contract(format!("filament {t} is not on top at x = {x_star}")))
    }
}
