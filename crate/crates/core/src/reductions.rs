//! Subdivisions, line graphs and cop-number bounds.
//!
//! The centerpiece is [`SubdivisionPolicy`]: on `G^(d)`, `k` regular cops
//! imitate a winning k-cop strategy for `G`, walking each base move along
//! the edge-paths in lockstep with the robber, while one extra cop, the
//! *tracker*, follows the robber's (loop-erased) trail. Hesitant robber
//! moves (staying or retracing) stall the base game but bring the tracker
//! strictly closer.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{line_graph, subdivide, Subdivision};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::policy::CopPolicy;
use crate::solver::{cop_number, CopNumber, SolverOptions};

/// `lhs <= mid <= rhs` for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub instance: String,
    pub lhs: usize,
    /// When `mid_is_lower_bound`, the middle value exceeded the search and
    /// only `mid > rhs` is known.
    pub mid: usize,
    pub mid_is_lower_bound: bool,
    pub rhs: usize,
    pub holds: bool,
    /// Game states allocated by the solver calls behind this report.
    pub states: u64,
}

impl InequalityReport {
    fn new(instance: String, lhs: usize, mid: CopNumber, rhs: usize, states: u64) -> Self {
        let (mid, lb) = match mid {
            CopNumber::Exactly(k) => (k, false),
            CopNumber::Exceeds(k) => (k + 1, true),
        };
        InequalityReport {
            instance,
            lhs,
            mid,
            mid_is_lower_bound: lb,
            rhs,
            holds: !lb && lhs <= mid && mid <= rhs,
            states,
        }
    }
}

fn states_for(n: usize, k: usize) -> u64 {
    (1..=k)
        .map(|j| crate::solver::state_count(n, j).unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add)
}

/// Exact cop number; `n` cops always suffice on a connected graph.
fn exact_cn(g: &Graph, opts: &SolverOptions) -> Result<usize> {
    match cop_number(g, g.n(), 1, 1, opts)? {
        CopNumber::Exactly(k) => Ok(k),
        CopNumber::Exceeds(k) => Err(Error::contract(format!("{k} cops lose on a connected graph"))),
    }
}

/// `cn(G) <= cn(G^(d)) <= cn(G) + 1`.
pub fn check_subdivision_inequality(g: &Graph, d: usize, opts: &SolverOptions) -> Result<InequalityReport> {
    let s = subdivide(g, d)?;
    let cn = exact_cn(g, opts)?;
    let mid = cop_number(s.graph(), cn + 1, 1, 1, opts)?;
    let states = states_for(g.n(), cn) + states_for(s.graph().n(), cn + 1);
    Ok(InequalityReport::new(
        format!("subdivision d={d} of graph on {} vertices", g.n()),
        cn,
        mid,
        cn + 1,
        states,
    ))
}

/// `ceil(cn(G)/2) <= cn(L(G)) <= cn(G) + 1`.
pub fn check_line_graph_inequality(g: &Graph, opts: &SolverOptions) -> Result<InequalityReport> {
    g.require_connected()?;
    let (l, _) = line_graph(g)?;
    let cn = exact_cn(g, opts)?;
    let mid = cop_number(&l, cn + 1, 1, 1, opts)?;
    let states = states_for(g.n(), cn) + states_for(l.n(), cn + 1);
    Ok(InequalityReport::new(
        format!("line graph of graph on {} vertices, {} edges", g.n(), g.edge_count()),
        cn.div_ceil(2),
        mid,
        cn + 1,
        states,
    ))
}

/// `1 <= cn_(d,d)(H) <= cn(H)`.
pub fn check_speed_inclusion(h: &Graph, d: usize, opts: &SolverOptions) -> Result<InequalityReport> {
    if d == 0 {
        return Err(Error::domain("speed must be at least 1"));
    }
    let cn = exact_cn(h, opts)?;
    let mid = cop_number(h, cn, d, d, opts)?;
    Ok(InequalityReport::new(
        format!("({d},{d})-game on graph with {} vertices", h.n()),
        1,
        mid,
        cn,
        2 * states_for(h.n(), cn),
    ))
}

/// `δ(G)` when the girth is at least 5, else the vacuous bound 1.
///
/// With girth ≥ 5 no cop's closed neighborhood covers two neighbors of the
/// robber, so fewer than δ cops always leave him a safe neighbor.
pub fn girth_mindeg_lower_bound(g: &Graph) -> usize {
    match g.girth() {
        Some(girth) if girth < 5 => 1,
        _ => g.min_degree().max(1),
    }
}

pub const STRING_COP_BOUND: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum StringVerdict {
    /// Cop number above 15, so the graph is not a string graph.
    NotString {
        reason: String,
    },
    Inconclusive {
        note: String,
    },
}

/// Tries to certify `cn(G) > 15`. The degree/girth bound is the practical
/// route; exact solving is only attempted up to `min(k_budget, 15)` cops and
/// is conclusive only if all 15 are tried.
pub fn refute_string(g: &Graph, k_budget: usize, opts: &SolverOptions) -> Result<StringVerdict> {
    let bound = girth_mindeg_lower_bound(g);
    if bound > STRING_COP_BOUND {
        return Ok(StringVerdict::NotString {
            reason: format!("girth >= 5 and minimum degree {bound}, so cn >= {bound} > {STRING_COP_BOUND}"),
        });
    }
    let k = k_budget.min(STRING_COP_BOUND);
    if k == 0 {
        return Ok(StringVerdict::Inconclusive {
            note: format!("lower bound {bound}; no exact search requested"),
        });
    }
    match cop_number(g, k, 1, 1, opts) {
        Ok(CopNumber::Exactly(c)) => Ok(StringVerdict::Inconclusive {
            note: format!("cn = {c} <= {STRING_COP_BOUND}"),
        }),
        Ok(CopNumber::Exceeds(_)) if k == STRING_COP_BOUND => Ok(StringVerdict::NotString {
            reason: format!("no placement of {STRING_COP_BOUND} cops wins"),
        }),
        Ok(CopNumber::Exceeds(k)) => Ok(StringVerdict::Inconclusive {
            note: format!("cn > {k}; lower bound {bound}; exact search capped at {k}"),
        }),
        Err(e) if e.is_resource() => Ok(StringVerdict::Inconclusive {
            note: format!("lower bound {bound}; exact search stopped: {e}"),
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubdivisionMemory<M> {
    /// Committed base strategy memory and cop positions (branching vertices).
    pub base: M,
    pub base_cops: Vec<Vertex>,
    /// Last branching vertex the robber reached.
    pub anchor: Option<Vertex>,
    /// Base reply to the robber's current departure: target, cops, memory.
    pub pending: Option<(Vertex, Vec<Vertex>, M)>,
    /// Loop-erased robber trail; in follow mode it starts at the tracker.
    pub trail: Vec<Vertex>,
    pub following: bool,
}

/// `k` regular cops imitating `base` on `G^(d)`, plus the tracker (last cop).
#[derive(Clone, Debug)]
pub struct SubdivisionPolicy<P> {
    sub: Subdivision,
    base_graph: Graph,
    dist: DistanceMatrix,
    base: P,
}

pub fn subdivision_policy<P: CopPolicy>(g: &Graph, d: usize, base: P) -> Result<SubdivisionPolicy<P>> {
    let sub = subdivide(g, d)?;
    Ok(SubdivisionPolicy {
        dist: sub.graph().all_pairs_distances(),
        base_graph: g.clone(),
        sub,
        base,
    })
}

impl<P: CopPolicy> SubdivisionPolicy<P> {
    pub fn subdivision(&self) -> &Subdivision {
        &self.sub
    }

    pub fn graph(&self) -> &Graph {
        self.sub.graph()
    }

    /// The tracker's potential: steps it still needs along its route to the
    /// robber. Never increases; drops on every hesitant robber move.
    pub fn tracker_measure(&self, mem: &SubdivisionMemory<P::Memory>, tracker: Vertex) -> usize {
        if mem.trail.is_empty() {
            return 0;
        }
        let along = mem.trail.len() - 1;
        if mem.following {
            along
        } else {
            self.dist.get(tracker, mem.trail[0]) as usize + along
        }
    }

    fn base_reply(&self, x: &[Vertex], v: Vertex, m: &P::Memory) -> Result<(Vec<Vertex>, P::Memory)> {
        if x.contains(&v) {
            return Ok((x.to_vec(), m.clone()));
        }
        let (y, m2) = self.base.step(x, v, m)?;
        if y.len() != x.len()
            || x.iter()
                .zip(&y)
                .any(|(&a, &b)| b >= self.base_graph.n() || !self.base_graph.adjacent_or_equal(a, b))
        {
            return Err(Error::contract(format!(
                "base strategy made an illegal move {x:?} -> {y:?}"
            )));
        }
        Ok((y, m2))
    }

    fn regular_targets(&self, mem: &mut SubdivisionMemory<P::Memory>, robber: Vertex) -> Result<Vec<Vertex>> {
        let s = &self.sub;
        if s.is_branching(robber) {
            match (&mem.anchor, mem.pending.take()) {
                (None, _) => mem.anchor = Some(robber),
                (Some(_), Some((v, y, m))) if v == robber => {
                    mem.base_cops = y;
                    mem.base = m;
                    mem.anchor = Some(v);
                }
                (Some(u), None) if *u != robber && s.d() == 1 => {
                    let (y, m) = self.base_reply(&mem.base_cops, robber, &mem.base)?;
                    mem.base_cops = y;
                    mem.base = m;
                    mem.anchor = Some(robber);
                }
                (Some(u), _) if *u == robber => {}
                (Some(u), p) => {
                    return Err(Error::contract(format!(
                        "robber jumped from branching vertex {u} to {robber} (pending {:?})",
                        p.map(|p| p.0)
                    )))
                }
            }
            return Ok(mem.base_cops.clone());
        }
        let Some(u) = mem.anchor else {
            return Ok(mem.base_cops.clone());
        };
        let (a, b) = s.carrier(robber).expect("subdividing vertex");
        let v = if a == u {
            b
        } else if b == u {
            a
        } else {
            return Err(Error::contract(format!("robber at {robber} is off the edges at {u}")));
        };
        let o = s.offset_on(u, v, robber).expect("robber on edge-path");
        let y = match &mem.pending {
            Some((pv, y, _)) if *pv == v => y.clone(),
            Some((pv, ..)) => return Err(Error::contract(format!("pending move to {pv}, robber heads to {v}"))),
            None => {
                let (y, m) = self.base_reply(&mem.base_cops, v, &mem.base)?;
                mem.pending = Some((v, y.clone(), m));
                y
            }
        };
        Ok(mem
            .base_cops
            .iter()
            .zip(&y)
            .map(|(&x, &y)| s.point_on(x, y, o).expect("base move along an edge"))
            .collect())
    }

    fn tracker_move(&self, mem: &mut SubdivisionMemory<P::Memory>, tracker: Vertex) -> Vertex {
        if !mem.following {
            if let Some(i) = mem.trail.iter().position(|&w| w == tracker) {
                mem.trail.drain(..i);
                mem.following = true;
            }
        }
        if mem.following {
            if mem.trail.len() >= 2 {
                mem.trail.remove(0);
            }
            mem.trail[0]
        } else {
            let to = mem.trail[0];
            let next = self.dist.next_hop(self.graph(), tracker, to).unwrap_or(tracker);
            if next == to {
                mem.following = true;
            }
            next
        }
    }
}

impl<P: CopPolicy> CopPolicy for SubdivisionPolicy<P> {
    type Memory = SubdivisionMemory<P::Memory>;

    fn cop_count(&self) -> usize {
        self.base.cop_count() + 1
    }

    fn place(&self) -> Result<(Vec<Vertex>, Self::Memory)> {
        let (x, m) = self.base.place()?;
        let mut cops = x.clone();
        cops.push(0);
        Ok((
            cops,
            SubdivisionMemory {
                base: m,
                base_cops: x,
                anchor: None,
                pending: None,
                trail: Vec::new(),
                following: false,
            },
        ))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vec<Vertex>, Self::Memory)> {
        let k = self.base.cop_count();
        let mut mem = mem.clone();
        // Chronological loop erasure.
        match mem.trail.iter().position(|&w| w == robber) {
            Some(i) => mem.trail.truncate(i + 1),
            None => mem.trail.push(robber),
        }
        let mut next = self.regular_targets(&mut mem, robber)?;
        for (c, (&from, &to)) in cops[..k].iter().zip(&next).enumerate() {
            if !self.graph().adjacent_or_equal(from, to) {
                return Err(Error::contract(format!("regular cop {c} cannot follow {from} -> {to}")));
            }
        }
        next.push(self.tracker_move(&mut mem, cops[k]));
        if let Some(i) = cops.iter().position(|&c| self.graph().adjacent_or_equal(c, robber)) {
            next[i] = robber;
        }
        Ok((next, mem))
    }

    fn describe(&self, mem: &Self::Memory) -> Vec<(String, String)> {
        vec![
            ("anchor".into(), format!("{:?}", mem.anchor)),
            ("pending".into(), format!("{:?}", mem.pending.as_ref().map(|p| p.0))),
            (
                "tracker".into(),
                if mem.following { "following" } else { "approaching" }.into(),
            ),
            ("trail".into(), format!("{:?}", mem.trail)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::generators::{complete, cycle, path, petersen, projective_incidence};
    use crate::simulator::verify_capture;
    use crate::solver::{analyze, optimal_policies, GameConfig, OptimalCops};
    use rand::{Rng, SeedableRng};

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn bounds() {
        assert_eq!(girth_mindeg_lower_bound(&petersen()), 3);
        assert_eq!(girth_mindeg_lower_bound(&cycle(4).unwrap()), 1);
        assert_eq!(girth_mindeg_lower_bound(&projective_incidence(2).unwrap()), 3);
        assert_eq!(girth_mindeg_lower_bound(&path(4).unwrap()), 1);
    }

    #[test]
    fn string_refutation() {
        assert!(matches!(
            refute_string(&path(5).unwrap(), 4, &opts()).unwrap(),
            StringVerdict::Inconclusive { .. }
        ));
        assert!(matches!(
            refute_string(&petersen(), 4, &opts()).unwrap(),
            StringVerdict::Inconclusive { .. }
        ));
        let big = projective_incidence(17).unwrap();
        assert_eq!(girth_mindeg_lower_bound(&big), 18);
        assert!(matches!(
            refute_string(&big, 4, &opts()).unwrap(),
            StringVerdict::NotString { .. }
        ));
    }

    #[test]
    fn inequality_examples() {
        let r = check_line_graph_inequality(&path(3).unwrap(), &opts()).unwrap();
        assert_eq!((r.lhs, r.mid, r.rhs, r.holds), (1, 1, 2, true));
        let r = check_line_graph_inequality(&cycle(5).unwrap(), &opts()).unwrap();
        assert_eq!((r.lhs, r.mid, r.rhs, r.holds), (1, 2, 3, true));
        let r = check_line_graph_inequality(&complete(4).unwrap(), &opts()).unwrap();
        assert!(r.holds);
        let r = check_subdivision_inequality(&cycle(5).unwrap(), 3, &opts()).unwrap();
        assert_eq!((r.lhs, r.mid, r.rhs, r.holds), (2, 2, 3, true));
        let r = check_subdivision_inequality(&path(4).unwrap(), 3, &opts()).unwrap();
        assert_eq!((r.mid, r.holds), (1, true));
        let r = check_speed_inclusion(&cycle(6).unwrap(), 2, &opts()).unwrap();
        assert!(r.holds && r.mid <= 2);
    }

    #[test]
    fn petersen_subdivision_with_budget_note() {
        let r = check_subdivision_inequality(&petersen(), 2, &opts()).unwrap();
        assert_eq!(r.lhs, 3);
        assert!(r.holds && (3..=4).contains(&r.mid));
        assert!(r.states > 0);
    }

    fn base_for(g: &Graph) -> (crate::solver::GameAnalysis, usize) {
        let k = exact_cn(g, &opts()).unwrap();
        (analyze(g, GameConfig::standard(k), &opts()).unwrap(), k)
    }

    #[test]
    fn tracker_policy_captures() {
        let graphs = [
            path(2).unwrap(),
            path(4).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            complete(3).unwrap(),
            complete(4).unwrap(),
        ];
        for (g, d) in graphs.iter().flat_map(|g| [(g.clone(), 2), (g.clone(), 3)]) {
            let (a, k) = base_for(&g);
            let p = subdivision_policy(&g, d, OptimalCops::new(&a)).unwrap();
            let n = p.graph().n();
            let v = verify_capture(
                p.graph(),
                GameConfig::standard(k + 1),
                &p,
                4 * n * n,
                &Budget::default(),
            )
            .unwrap();
            assert!(v.is_valid(), "n={} d={d}: {v:?}", g.n());
        }
    }

    #[test]
    fn hesitant_moves_shrink_tracker_measure() {
        let g = cycle(5).unwrap();
        let (a, k) = base_for(&g);
        let p = subdivision_policy(&g, 3, OptimalCops::new(&a)).unwrap();
        let h = p.graph().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut hesitant_seen = 0;
        for _ in 0..50 {
            let (mut cops, mut mem) = p.place().unwrap();
            let mut r = (0..h.n()).rev().find(|v| !cops.contains(v)).unwrap();
            let mut before: Option<(usize, bool)> = None;
            for _ in 0..300 {
                let (c2, m2) = p.step(&cops, r, &mem).unwrap();
                if c2.contains(&r) {
                    break;
                }
                let m = p.tracker_measure(&m2, c2[k]);
                if let Some((m0, hesitant)) = before {
                    assert!(m <= m0, "measure grew {m0} -> {m}");
                    if hesitant {
                        assert!(m < m0, "hesitant move kept measure at {m}");
                        hesitant_seen += 1;
                    }
                }
                (cops, mem) = (c2, m2);
                let choices: Vec<Vertex> = std::iter::once(r)
                    .chain(h.neighbors(r).iter().copied())
                    .filter(|v| !cops.contains(v))
                    .collect();
                let r2 = choices[rng.gen_range(0..choices.len())];
                before = Some((m, mem.trail.contains(&r2)));
                r = r2;
            }
        }
        assert!(hesitant_seen > 0);
    }

    #[test]
    fn tracker_beats_optimal_evader() {
        let g = cycle(5).unwrap();
        let (a, k) = base_for(&g);
        let p = subdivision_policy(&g, 3, OptimalCops::new(&a)).unwrap();
        let h = p.graph();
        let h_an = analyze(h, GameConfig::standard(k + 1), &opts()).unwrap();
        let (_, evader) = optimal_policies(&h_an);
        let t = crate::simulator::play(h, GameConfig::standard(k + 1), &p, &evader, 500).unwrap();
        assert!(t.captured());
    }
}
