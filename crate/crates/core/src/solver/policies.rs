//! Optimal strategies read off a completed analysis.

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::policy::{CopPolicy, RobberPolicy};

use super::{GameAnalysis, GamePosition, Side};

/// Cops that move to a successor of least value (ties: smallest canonical
/// multiset). From a robber-winning position they stand still.
#[derive(Clone, Copy, Debug)]
pub struct OptimalCops<'a> {
    analysis: &'a GameAnalysis,
}

/// The optimal evader: stays in the robber-winning region if possible,
/// otherwise delays capture as long as possible (ties: smallest vertex).
#[derive(Clone, Copy, Debug)]
pub struct OptimalRobber<'a> {
    analysis: &'a GameAnalysis,
}

pub fn optimal_policies(a: &GameAnalysis) -> (OptimalCops<'_>, OptimalRobber<'_>) {
    (OptimalCops { analysis: a }, OptimalRobber { analysis: a })
}

impl<'a> OptimalCops<'a> {
    pub fn new(analysis: &'a GameAnalysis) -> Self {
        OptimalCops { analysis }
    }

    /// Best cop multiset from a cops-to-move position, or `None` if the
    /// position is lost for the cops.
    pub fn best_target(&self, cops_sorted: &[Vertex], robber: Vertex) -> Option<Vec<Vertex>> {
        let a = self.analysis;
        let n = a.graph().n();
        let idx = a.arena().index();
        let here = super::state_id(n, idx.rank(cops_sorted), robber, Side::Cops);
        if a.ply[here] == super::UNLABELED {
            return None;
        }
        // Successor ranks are sorted and rank order is lexicographic order.
        let mut best: Option<(u32, u32)> = None;
        for &s in a.cop_successor_ranks(idx.rank(cops_sorted)) {
            let p = a.ply[super::state_id(n, s as usize, robber, Side::Robber)];
            if p == super::UNLABELED {
                continue;
            }
            let v = super::ply_to_value(p, Side::Robber);
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, s));
            }
        }
        best.map(|(_, s)| idx.unrank(s as usize))
    }
}

impl CopPolicy for OptimalCops<'_> {
    type Memory = ();

    fn cop_count(&self) -> usize {
        self.analysis.config().cops
    }

    fn place(&self) -> Result<(Vec<Vertex>, ())> {
        let cops = match self.analysis.witness() {
            Some((w, _)) => w.to_vec(),
            None => vec![0; self.cop_count()],
        };
        Ok((cops, ()))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, _mem: &()) -> Result<(Vec<Vertex>, ())> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        match self.best_target(&sorted, robber) {
            None => Ok((cops.to_vec(), ())),
            Some(t) => {
                let ordered = self
                    .analysis
                    .arena()
                    .assign(cops, &t)
                    .ok_or_else(|| Error::contract("optimal target not reachable by ordered cops"))?;
                Ok((ordered, ()))
            }
        }
    }
}

impl<'a> OptimalRobber<'a> {
    pub fn new(analysis: &'a GameAnalysis) -> Self {
        OptimalRobber { analysis }
    }

    /// `(robber wins, value)` ordering key; larger is better for the robber.
    fn key(&self, cops: &[Vertex], r: Vertex) -> (bool, u32) {
        let pos = GamePosition::new(cops.to_vec(), r, Side::Cops);
        match self.analysis.value(&pos) {
            None => (true, 0),
            Some(v) => (false, v),
        }
    }

    fn choose(&self, cops: &[Vertex], candidates: &[Vertex]) -> Option<Vertex> {
        let mut best: Option<((bool, u32), Vertex)> = None;
        for &r in candidates {
            let k = self.key(cops, r);
            if best.is_none_or(|(bk, _)| k > bk) {
                best = Some((k, r));
            }
        }
        best.map(|(_, r)| r)
    }
}

impl RobberPolicy for OptimalRobber<'_> {
    type Memory = ();

    fn place(&self, cops: &[Vertex]) -> Result<(Vertex, ())> {
        let free: Vec<Vertex> = (0..self.analysis.graph().n()).filter(|v| !cops.contains(v)).collect();
        Ok((self.choose(cops, &free).unwrap_or(0), ()))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, _mem: &()) -> Result<(Vertex, ())> {
        let mut moves = Vec::new();
        self.analysis.arena().robber_moves(cops, robber, &mut moves);
        Ok((self.choose(cops, &moves).unwrap_or(robber), ()))
    }
}
