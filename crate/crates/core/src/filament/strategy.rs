//! Two cops on an interval filament graph: a guard and a hunter.
//!
//! Every phase starts with both cops on a filament u (initially an imaginary
//! filament above everything). The robber is confined to a component C of
//! the filaments nested in u. The hunter walks to the first top filament of
//! C and sweeps right along the top sequence, always jumping to the adjacent
//! top filament of largest index. The robber can never be left of the
//! hunter; once he is nested under the hunter's filament v, the guard walks
//! over to v and the next phase starts below v.

use serde::Serialize;

use super::{classify_region, top_sequence, Coord, FilamentRep, Region};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex, VertexSet};
use crate::policy::CopPolicy;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum HuntMode {
    /// Hunter walking to the first top filament of component `comp`.
    Transit { comp: usize },
    /// Hunter on the `i`-th top filament of `comp`.
    Hunting { comp: usize, i: usize },
    /// Hunter holds `to`; the guard walks there.
    Transfer { to: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FilamentMemory {
    /// `None` while the guard plays the imaginary top filament.
    pub guard_on: Option<Vertex>,
    pub mode: HuntMode,
}

#[derive(Clone, Debug)]
struct Phase {
    comp_of: Vec<Option<usize>>,
    tops: Vec<Vec<(Vertex, Coord)>>,
}

/// Cop 0 is the guard, cop 1 the hunter.
#[derive(Clone, Debug)]
pub struct TwoCopPolicy {
    rep: FilamentRep,
    graph: Graph,
    dist: DistanceMatrix,
    start: Vertex,
    /// Index 0: imaginary filament; `v + 1`: filament `v`.
    phases: Vec<Phase>,
}

pub fn two_cop_policy(rep: &FilamentRep) -> Result<TwoCopPolicy> {
    if let Some(v) = rep.validate().first() {
        return Err(Error::Geometry(v.to_string()));
    }
    let graph = rep.intersection_graph()?;
    graph.require_connected()?;
    let n = graph.n();
    let below = rep.nesting(&graph);
    let mut phases = Vec::with_capacity(n + 1);
    for u in std::iter::once(None).chain((0..n).map(Some)) {
        let set = match u {
            None => VertexSet::full(n),
            Some(u) => below[u].clone(),
        };
        let mut comp_of = vec![None; n];
        let mut tops = Vec::new();
        for (ci, comp) in graph.components_within(&set).into_iter().enumerate() {
            for &v in &comp {
                comp_of[v] = Some(ci);
            }
            let seq = top_sequence(rep, &comp)?;
            tops.push(seq.iter().map(|e| (e.vertex, e.x_star())).collect());
        }
        phases.push(Phase { comp_of, tops });
    }
    Ok(TwoCopPolicy {
        start: rep.leftmost().expect("connected graph is non-empty"),
        rep: rep.clone(),
        dist: graph.all_pairs_distances(),
        graph,
        phases,
    })
}

impl TwoCopPolicy {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn phase(&self, guard_on: Option<Vertex>) -> &Phase {
        &self.phases[guard_on.map_or(0, |u| u + 1)]
    }

    fn hop(&self, from: Vertex, to: Vertex) -> Vertex {
        self.dist.next_hop(&self.graph, from, to).unwrap_or(from)
    }

    /// Guard moves toward `to`; on arrival the next phase begins below `to`.
    fn transfer(
        &self,
        guard_on: Option<Vertex>,
        (guard, hunter): (Vertex, Vertex),
        robber: Vertex,
        to: Vertex,
    ) -> Result<(Vec<Vertex>, FilamentMemory)> {
        let g2 = self.hop(guard, to);
        let mem = if g2 == to {
            let comp = self.phase(Some(to)).comp_of[robber]
                .ok_or_else(|| Error::contract(format!("robber at {robber} not nested in {to}")))?;
            FilamentMemory {
                guard_on: Some(to),
                mode: HuntMode::Transit { comp },
            }
        } else {
            FilamentMemory {
                guard_on,
                mode: HuntMode::Transfer { to },
            }
        };
        Ok((vec![g2, hunter], mem))
    }
}

impl CopPolicy for TwoCopPolicy {
    type Memory = FilamentMemory;

    fn cop_count(&self) -> usize {
        2
    }

    fn place(&self) -> Result<(Vec<Vertex>, FilamentMemory)> {
        Ok((
            vec![self.start, self.start],
            FilamentMemory {
                guard_on: None,
                mode: HuntMode::Transit { comp: 0 },
            },
        ))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &FilamentMemory) -> Result<(Vec<Vertex>, FilamentMemory)> {
        let (guard, hunter) = (cops[0], cops[1]);
        if self.graph.adjacent_or_equal(guard, robber) {
            return Ok((vec![robber, hunter], mem.clone()));
        }
        if self.graph.adjacent_or_equal(hunter, robber) {
            return Ok((vec![guard, robber], mem.clone()));
        }
        let phase = self.phase(mem.guard_on);
        let (comp, mut i) = match mem.mode {
            HuntMode::Transfer { to } => {
                if !self.rep.nested_in(&self.graph, robber, to) {
                    return Err(Error::contract(format!("robber at {robber} escaped from under {to}")));
                }
                return self.transfer(mem.guard_on, (guard, hunter), robber, to);
            }
            HuntMode::Transit { comp } => (comp, None),
            HuntMode::Hunting { comp, i } => (comp, Some(i)),
        };
        if phase.comp_of[robber] != Some(comp) {
            return Err(Error::contract(format!(
                "robber at {robber} left component {comp} below {:?}",
                mem.guard_on
            )));
        }
        let tops = &phase.tops[comp];
        if i.is_none() {
            let t1 = tops[0].0;
            if hunter != t1 {
                let h2 = self.hop(hunter, t1);
                let mode = if h2 == t1 {
                    HuntMode::Hunting { comp, i: 0 }
                } else {
                    HuntMode::Transit { comp }
                };
                return Ok((
                    vec![guard, h2],
                    FilamentMemory {
                        guard_on: mem.guard_on,
                        mode,
                    },
                ));
            }
            i = Some(0);
        }
        let i = i.unwrap();
        let (t, x_star) = &tops[i];
        if hunter != *t {
            return Err(Error::contract(format!(
                "hunter at {hunter}, expected top filament {t}"
            )));
        }
        match classify_region(&self.rep, &self.graph, *t, x_star, robber)? {
            Region::Bottom => self.transfer(mem.guard_on, (guard, hunter), robber, *t),
            Region::Right => {
                let j = (i + 1..tops.len())
                    .rev()
                    .find(|&j| self.graph.adjacent_or_equal(tops[j].0, *t))
                    .ok_or_else(|| Error::contract(format!("robber right of the last top filament {t}")))?;
                Ok((
                    vec![guard, tops[j].0],
                    FilamentMemory {
                        guard_on: mem.guard_on,
                        mode: HuntMode::Hunting { comp, i: j },
                    },
                ))
            }
            Region::Left => Err(Error::contract(format!(
                "robber at {robber} slipped left of top filament {t}"
            ))),
        }
    }

    fn describe(&self, mem: &FilamentMemory) -> Vec<(String, String)> {
        let mut d = vec![(
            "guard_on".to_string(),
            mem.guard_on.map_or("imaginary".to_string(), |u| u.to_string()),
        )];
        match &mem.mode {
            HuntMode::Transit { comp } => d.push(("mode".into(), format!("transit to component {comp}"))),
            HuntMode::Hunting { comp, i } => d.push(("mode".into(), format!("hunting component {comp} at top {i}"))),
            HuntMode::Transfer { to } => d.push(("mode".into(), format!("guard moving to {to}"))),
        }
        d
    }
}
