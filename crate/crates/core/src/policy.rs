//! Deterministic strategies with finite memory.
//!
//! A policy is a pure function of the observed position and its own memory.
//! Cops are tracked as an *ordered* vector so that policies can give
//! individual cops roles (guard, hunter, sheriff, ...). Memory types must be
//! hashable so the verifiers can explore (position, memory) product states.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub trait CopPolicy {
    type Memory: Clone + Eq + Hash + Debug + Send + Sync;

    fn cop_count(&self) -> usize;

    /// Initial placement, chosen before the robber places.
    fn place(&self) -> Result<(Vec<Vertex>, Self::Memory)>;

    /// One cops' move given the ordered cop vector and the robber's vertex.
    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vec<Vertex>, Self::Memory)>;

    /// Human-readable annotations for traces.
    fn describe(&self, _mem: &Self::Memory) -> Vec<(String, String)> {
        Vec::new()
    }
}

pub trait RobberPolicy {
    type Memory: Clone + Eq + Hash + Debug + Send + Sync;

    fn place(&self, cops: &[Vertex]) -> Result<(Vertex, Self::Memory)>;

    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vertex, Self::Memory)>;
}

impl<P: CopPolicy + ?Sized> CopPolicy for &P {
    type Memory = P::Memory;
    fn cop_count(&self) -> usize {
        (**self).cop_count()
    }
    fn place(&self) -> Result<(Vec<Vertex>, Self::Memory)> {
        (**self).place()
    }
    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vec<Vertex>, Self::Memory)> {
        (**self).step(cops, robber, mem)
    }
    fn describe(&self, mem: &Self::Memory) -> Vec<(String, String)> {
        (**self).describe(mem)
    }
}

impl<P: RobberPolicy + ?Sized> RobberPolicy for &P {
    type Memory = P::Memory;
    fn place(&self, cops: &[Vertex]) -> Result<(Vertex, Self::Memory)> {
        (**self).place(cops)
    }
    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vertex, Self::Memory)> {
        (**self).step(cops, robber, mem)
    }
}

/// Robber that sits on a fixed vertex (or the first free one).
#[derive(Clone, Debug)]
pub struct StationaryRobber {
    pub start: Option<Vertex>,
    pub n: usize,
}

impl RobberPolicy for StationaryRobber {
    type Memory = ();

    fn place(&self, cops: &[Vertex]) -> Result<(Vertex, ())> {
        if let Some(v) = self.start {
            return Ok((v, ()));
        }
        let v = (0..self.n)
            .find(|v| !cops.contains(v))
            .ok_or_else(|| Error::contract("no free vertex to place the robber"))?;
        Ok((v, ()))
    }

    fn step(&self, _cops: &[Vertex], robber: Vertex, _mem: &()) -> Result<(Vertex, ())> {
        Ok((robber, ()))
    }
}

/// Greedy evader: maximizes the distance to the nearest cop, ties to the
/// smallest vertex. Moves one step per turn.
#[derive(Clone, Debug)]
pub struct GreedyRobber {
    graph: Graph,
    dist: crate::graph::DistanceMatrix,
}

impl GreedyRobber {
    pub fn new(g: &Graph) -> Self {
        GreedyRobber {
            graph: g.clone(),
            dist: g.all_pairs_distances(),
        }
    }

    fn score(&self, cops: &[Vertex], v: Vertex) -> u32 {
        cops.iter().map(|&c| self.dist.get(c, v)).min().unwrap_or(u32::MAX)
    }

    fn best<I: Iterator<Item = Vertex>>(&self, cops: &[Vertex], candidates: I) -> Option<Vertex> {
        // max score, then smallest vertex
        candidates
            .filter(|v| !cops.contains(v))
            .map(|v| (std::cmp::Reverse(self.score(cops, v)), v))
            .min()
            .map(|(_, v)| v)
    }
}

impl RobberPolicy for GreedyRobber {
    type Memory = ();

    fn place(&self, cops: &[Vertex]) -> Result<(Vertex, ())> {
        let v = self.best(cops, 0..self.graph.n()).unwrap_or(0);
        Ok((v, ()))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, _mem: &()) -> Result<(Vertex, ())> {
        let around = std::iter::once(robber).chain(self.graph.neighbors(robber).iter().copied());
        Ok((self.best(cops, around).unwrap_or(robber), ()))
    }
}
