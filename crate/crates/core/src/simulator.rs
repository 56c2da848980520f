//! Referee and exhaustive verifiers.
//!
//! [`play`] runs one game between two policies. [`verify_capture`] and
//! [`verify_guarding`] quantify over *every* robber behavior by exploring
//! the product of positions and cop-policy memory.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::copwin::GuardAssignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson, Vertex};
use crate::policy::{CopPolicy, RobberPolicy};
use crate::solver::{Arena, GameConfig};

pub const TRACE_VERSION: u32 = 1;

/// One cops' move and the robber's reply (absent after capture or at the horizon).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Turn {
    pub cops: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub robber: Option<Vertex>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub annotations: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Outcome {
    /// Caught after `turn` cops' moves (0: the robber placed on a cop).
    Captured { turn: usize },
    /// Still free after `turns` cops' moves.
    Survived { turns: usize },
}

/// A recorded game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub version: u32,
    pub graph: GraphJson,
    pub config: GameConfig,
    pub cop_placement: Vec<Vertex>,
    pub robber_placement: Vertex,
    pub turns: Vec<Turn>,
    pub outcome: Outcome,
}

impl Trace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(s: &str) -> Result<Trace> {
        let t: Trace = serde_json::from_str(s)?;
        if t.version != TRACE_VERSION {
            return Err(Error::Parse(format!("unsupported trace version {}", t.version)));
        }
        Ok(t)
    }

    /// Robber positions from placement on.
    pub fn robber_path(&self) -> Vec<Vertex> {
        std::iter::once(self.robber_placement)
            .chain(self.turns.iter().filter_map(|t| t.robber))
            .collect()
    }

    pub fn captured(&self) -> bool {
        matches!(self.outcome, Outcome::Captured { .. })
    }
}

fn annotate<P: CopPolicy>(p: &P, m: &P::Memory) -> BTreeMap<String, String> {
    p.describe(m).into_iter().collect()
}

fn check_cops(arena: &Arena, from: &[Vertex], to: &[Vertex], turn: usize) -> Result<()> {
    if arena.cop_move_is_legal(from, to) {
        Ok(())
    } else {
        Err(Error::PolicyFault {
            turn,
            message: format!("illegal cops' move {from:?} -> {to:?}"),
        })
    }
}

/// Plays placement and then up to `horizon` rounds, cops first.
pub fn play<C: CopPolicy, R: RobberPolicy>(
    g: &Graph,
    cfg: GameConfig,
    cops: &C,
    robber: &R,
    horizon: usize,
) -> Result<Trace> {
    cfg.validate()?;
    if horizon == 0 {
        return Err(Error::domain("horizon must be at least 1"));
    }
    if cops.cop_count() != cfg.cops {
        return Err(Error::domain(format!(
            "policy controls {} cops, configuration has {}",
            cops.cop_count(),
            cfg.cops
        )));
    }
    let arena = Arena::new(g, cfg);
    let fault = |turn, e: Error| match e {
        Error::PolicyFault { .. } => e,
        e => Error::PolicyFault {
            turn,
            message: e.to_string(),
        },
    };
    let (mut c, mut cm) = cops.place().map_err(|e| fault(0, e))?;
    if c.len() != cfg.cops || c.iter().any(|&v| v >= g.n()) {
        return Err(Error::PolicyFault {
            turn: 0,
            message: format!("bad cop placement {c:?}"),
        });
    }
    let (mut r, mut rm) = robber.place(&c).map_err(|e| fault(0, e))?;
    if r >= g.n() {
        return Err(Error::PolicyFault {
            turn: 0,
            message: format!("bad robber placement {r}"),
        });
    }
    let mut trace = Trace {
        version: TRACE_VERSION,
        graph: g.into(),
        config: cfg,
        cop_placement: c.clone(),
        robber_placement: r,
        turns: Vec::new(),
        outcome: Outcome::Survived { turns: horizon },
    };
    if c.contains(&r) {
        trace.outcome = Outcome::Captured { turn: 0 };
        return Ok(trace);
    }
    for t in 1..=horizon {
        let (c2, cm2) = cops.step(&c, r, &cm).map_err(|e| fault(t, e))?;
        check_cops(&arena, &c, &c2, t)?;
        let annotations = annotate(cops, &cm2);
        (c, cm) = (c2, cm2);
        if c.contains(&r) {
            trace.turns.push(Turn {
                cops: c,
                robber: None,
                annotations,
            });
            trace.outcome = Outcome::Captured { turn: t };
            return Ok(trace);
        }
        if t == horizon {
            trace.turns.push(Turn {
                cops: c.clone(),
                robber: None,
                annotations,
            });
            break;
        }
        let (r2, rm2) = robber.step(&c, r, &rm).map_err(|e| fault(t, e))?;
        if !arena.robber_move_is_legal(&c, r, r2) {
            return Err(Error::PolicyFault {
                turn: t,
                message: format!("illegal robber move {r} -> {r2}"),
            });
        }
        (r, rm) = (r2, rm2);
        trace.turns.push(Turn {
            cops: c.clone(),
            robber: Some(r),
            annotations,
        });
    }
    Ok(trace)
}

/// Re-checks every move of a trace and its outcome.
pub fn replay(trace: &Trace) -> Result<()> {
    let g = Graph::try_from(trace.graph.clone())?;
    let arena = Arena::new(&g, trace.config);
    let mut c = trace.cop_placement.clone();
    let mut r = trace.robber_placement;
    if c.len() != trace.config.cops || c.iter().chain([&r]).any(|&v| v >= g.n()) {
        return Err(Error::contract("bad placement in trace"));
    }
    if c.contains(&r) {
        return match trace.outcome {
            Outcome::Captured { turn: 0 } if trace.turns.is_empty() => Ok(()),
            _ => Err(Error::contract("outcome inconsistent with placement")),
        };
    }
    for (i, turn) in trace.turns.iter().enumerate() {
        let t = i + 1;
        check_cops(&arena, &c, &turn.cops, t)?;
        c = turn.cops.clone();
        let last = t == trace.turns.len();
        if c.contains(&r) {
            return match (last, trace.outcome) {
                (true, Outcome::Captured { turn }) if turn == t => Ok(()),
                _ => Err(Error::contract(format!("capture at turn {t} not recorded"))),
            };
        }
        match turn.robber {
            Some(r2) => {
                if !arena.robber_move_is_legal(&c, r, r2) {
                    return Err(Error::PolicyFault {
                        turn: t,
                        message: format!("illegal robber move {r} -> {r2}"),
                    });
                }
                r = r2;
            }
            None if last => {}
            None => return Err(Error::contract(format!("missing robber move at turn {t}"))),
        }
    }
    match trace.outcome {
        Outcome::Survived { turns } if turns == trace.turns.len() => Ok(()),
        _ => Err(Error::contract("outcome inconsistent with moves")),
    }
}

/// Cops' reply with its annotations.
type Annotations = BTreeMap<String, String>;
type Reply = (Vec<Vertex>, BTreeMap<String, String>);

/// Builds a trace from a chain of cops-to-move states and the cops' replies.
fn chain_trace(
    g: &Graph,
    cfg: GameConfig,
    placement: Vec<Vertex>,
    robber0: Vertex,
    replies: Vec<(Vec<Vertex>, Option<Vertex>, Annotations)>,
    captured: bool,
) -> Trace {
    let n_turns = replies.len();
    Trace {
        version: TRACE_VERSION,
        graph: g.into(),
        config: cfg,
        cop_placement: placement,
        robber_placement: robber0,
        turns: replies
            .into_iter()
            .map(|(cops, robber, annotations)| Turn {
                cops,
                robber,
                annotations,
            })
            .collect(),
        outcome: if captured {
            Outcome::Captured { turn: n_turns }
        } else {
            Outcome::Survived { turns: n_turns }
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EscapeKind {
    /// The robber can force the play into a cycle of states.
    Cycle,
    /// Capture is forced, but not within the bound.
    TurnBound,
    /// The policy failed or moved illegally.
    PolicyFault(String),
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CaptureVerdict {
    /// Every robber behavior is caught within `worst_turns` cops' moves;
    /// `trace` realizes the worst case.
    Captures {
        worst_turns: usize,
        states: usize,
        trace: Trace,
    },
    Escapes {
        kind: EscapeKind,
        trace: Trace,
    },
}

impl CaptureVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, CaptureVerdict::Captures { .. })
    }
}

type Key<M> = (Vec<Vertex>, Vertex, M);

struct Node<M> {
    key: Key<M>,
    reply: Vec<Vertex>,
    annotations: BTreeMap<String, String>,
    depth: usize,
    best: Option<usize>,
    done: bool,
}

/// Exhaustive longest-play search for the cop policy `p`, over all robber
/// placements and moves. Valid iff every play ends in capture within
/// `turn_bound` cops' moves.
pub fn verify_capture<P: CopPolicy>(
    g: &Graph,
    cfg: GameConfig,
    p: &P,
    turn_bound: usize,
    budget: &Budget,
) -> Result<CaptureVerdict> {
    cfg.validate()?;
    if p.cop_count() != cfg.cops {
        return Err(Error::domain("policy and configuration disagree on the number of cops"));
    }
    let arena = Arena::new(g, cfg);
    let deadline = budget.deadline();
    let (placement, m0) = p.place()?;
    if placement.len() != cfg.cops || placement.iter().any(|&v| v >= g.n()) {
        return Err(Error::PolicyFault {
            turn: 0,
            message: format!("bad cop placement {placement:?}"),
        });
    }

    let mut nodes: Vec<Node<P::Memory>> = Vec::new();
    let mut index: HashMap<Key<P::Memory>, usize> = HashMap::new();
    let mut moves = Vec::new();

    // Returns Err(verdict) on an escape, Ok(id) otherwise.
    let mut worst_root: Option<usize> = None;
    for r0 in (0..g.n()).filter(|r| !placement.contains(r)) {
        let key = (placement.clone(), r0, m0.clone());
        let root = match index.get(&key) {
            Some(&id) => id,
            None => {
                let id = nodes.len();
                index.insert(key.clone(), id);
                nodes.push(Node {
                    key,
                    reply: Vec::new(),
                    annotations: BTreeMap::new(),
                    depth: 0,
                    best: None,
                    done: false,
                });
                id
            }
        };
        // Iterative DFS; stack holds (node, children, next child).
        let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        if !nodes[root].done {
            stack.push((root, Vec::new(), usize::MAX));
        }
        while let Some(top) = stack.last_mut() {
            let id = top.0;
            if top.2 == usize::MAX {
                // First visit: compute the cops' reply and the robber's options.
                deadline.check("capture verification")?;
                if nodes.len() as u64 > budget.max_product_states {
                    return Err(Error::Resource {
                        what: "product states",
                        required: nodes.len() as u64,
                        budget: budget.max_product_states,
                    });
                }
                let (cops, r, m) = nodes[id].key.clone();
                let reply = p.step(&cops, r, &m).and_then(|(c2, m2)| {
                    if arena.cop_move_is_legal(&cops, &c2) {
                        Ok((c2, m2))
                    } else {
                        Err(Error::contract(format!("illegal cops' move {cops:?} -> {c2:?}")))
                    }
                });
                let (c2, m2) = match reply {
                    Ok(x) => x,
                    Err(e) => {
                        let path: Vec<usize> = stack.iter().map(|f| f.0).collect();
                        let trace = stack_trace(g, cfg, &nodes, &path, None);
                        return Ok(CaptureVerdict::Escapes {
                            kind: EscapeKind::PolicyFault(e.to_string()),
                            trace,
                        });
                    }
                };
                nodes[id].annotations = annotate(p, &m2);
                nodes[id].reply = c2.clone();
                if c2.contains(&r) {
                    nodes[id].depth = 1;
                    nodes[id].done = true;
                    stack.pop();
                    continue;
                }
                arena.robber_moves(&c2, r, &mut moves);
                let mut children = Vec::with_capacity(moves.len());
                for &r2 in &moves {
                    let key = (c2.clone(), r2, m2.clone());
                    let cid = match index.get(&key) {
                        Some(&cid) => cid,
                        None => {
                            let cid = nodes.len();
                            index.insert(key.clone(), cid);
                            nodes.push(Node {
                                key,
                                reply: Vec::new(),
                                annotations: BTreeMap::new(),
                                depth: 0,
                                best: None,
                                done: false,
                            });
                            cid
                        }
                    };
                    children.push(cid);
                }
                let top = stack.last_mut().unwrap();
                top.1 = children;
                top.2 = 0;
                continue;
            }
            if top.2 < top.1.len() {
                let child = top.1[top.2];
                top.2 += 1;
                if nodes[child].done {
                    let d = nodes[child].depth + 1;
                    if d > nodes[id].depth {
                        nodes[id].depth = d;
                        nodes[id].best = Some(child);
                    }
                } else if let Some(pos) = stack.iter().position(|f| f.0 == child) {
                    let path: Vec<usize> = stack.iter().map(|f| f.0).collect();
                    let trace = stack_trace(g, cfg, &nodes, &path, Some(pos));
                    return Ok(CaptureVerdict::Escapes {
                        kind: EscapeKind::Cycle,
                        trace,
                    });
                } else {
                    stack.push((child, Vec::new(), usize::MAX));
                }
                continue;
            }
            // All children finished.
            nodes[id].done = true;
            stack.pop();
            if let Some(parent) = stack.last() {
                let (pid, d) = (parent.0, nodes[id].depth + 1);
                if d > nodes[pid].depth {
                    nodes[pid].depth = d;
                    nodes[pid].best = Some(id);
                }
            }
        }
        if worst_root.is_none_or(|w| nodes[root].depth > nodes[w].depth) {
            worst_root = Some(root);
        }
    }

    let Some(root) = worst_root else {
        // No free vertex: the robber must place on a cop.
        let trace = chain_trace(g, cfg, placement.clone(), placement[0], Vec::new(), true);
        return Ok(CaptureVerdict::Captures {
            worst_turns: 0,
            states: 0,
            trace,
        });
    };
    let mut path = vec![root];
    while let Some(b) = nodes[*path.last().unwrap()].best {
        path.push(b);
    }
    let trace = stack_trace(g, cfg, &nodes, &path, None);
    let worst = nodes[root].depth;
    if worst > turn_bound {
        return Ok(CaptureVerdict::Escapes {
            kind: EscapeKind::TurnBound,
            trace,
        });
    }
    Ok(CaptureVerdict::Captures {
        worst_turns: worst,
        states: nodes.len(),
        trace,
    })
}

/// Trace along a chain of node ids. With `cycle_to`, the last robber move
/// returns to the node at that position (which is not repeated).
fn stack_trace<M: Clone + Eq + Hash>(
    g: &Graph,
    cfg: GameConfig,
    nodes: &[Node<M>],
    path: &[usize],
    cycle_to: Option<usize>,
) -> Trace {
    let first = &nodes[path[0]].key;
    let mut replies = Vec::new();
    let mut captured = false;
    for (i, &id) in path.iter().enumerate() {
        let node = &nodes[id];
        if node.reply.is_empty() {
            break; // not expanded (policy fault at this node)
        }
        let next_r = match path.get(i + 1) {
            Some(&nid) => Some(nodes[nid].key.1),
            None => cycle_to.map(|p| nodes[path[p]].key.1),
        };
        if node.reply.contains(&node.key.1) {
            captured = true;
            replies.push((node.reply.clone(), None, node.annotations.clone()));
            break;
        }
        replies.push((node.reply.clone(), next_r, node.annotations.clone()));
    }
    chain_trace(g, cfg, first.0.clone(), first.1, replies, captured)
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GuardVerdict {
    Valid {
        states: usize,
    },
    /// The robber stands in the target after the setup phase and the cops do
    /// not capture him.
    Violated {
        reason: String,
        robber_path: Vec<Vertex>,
        trace: Trace,
    },
}

impl GuardVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, GuardVerdict::Valid { .. })
    }
}

/// Explores every robber behavior confined to `D ∪ target`, starting
/// anywhere in `D`, against the assignment's policy (standard speeds).
pub fn verify_guarding<P: CopPolicy>(
    g: &Graph,
    assignment: &GuardAssignment<P>,
    d: &crate::graph::VertexSet,
    budget: &Budget,
) -> Result<GuardVerdict> {
    let p = &assignment.policy;
    let target = &assignment.target;
    let setup = assignment.setup_bound;
    let cfg = GameConfig::standard(p.cop_count());
    let arena = Arena::new(g, cfg);
    let deadline = budget.deadline();
    if target.is_empty() {
        return Ok(GuardVerdict::Valid { states: 0 });
    }
    let mut allowed = d.clone();
    allowed.union_with(target);

    let (placement, m0) = p.place()?;
    type GKey<M> = (Vec<Vertex>, Vertex, M, usize);
    let mut index: HashMap<GKey<P::Memory>, usize> = HashMap::new();
    // (key, parent, cops' reply and annotations once expanded)
    let mut nodes: Vec<(GKey<P::Memory>, Option<usize>)> = Vec::new();
    let mut replies: Vec<Option<Reply>> = Vec::new();
    let mut queue = VecDeque::new();
    for r0 in d.iter().filter(|r| !placement.contains(r)) {
        let key = (placement.clone(), r0, m0.clone(), 0);
        if index.contains_key(&key) {
            continue;
        }
        index.insert(key.clone(), nodes.len());
        queue.push_back(nodes.len());
        nodes.push((key, None));
        replies.push(None);
    }

    let violation =
        |nodes: &Vec<(GKey<P::Memory>, Option<usize>)>, replies: &[Option<Reply>], id: usize, reason: String| {
            let mut chain = vec![id];
            while let Some(pa) = nodes[*chain.last().unwrap()].1 {
                chain.push(pa);
            }
            chain.reverse();
            let first = &nodes[chain[0]].0;
            let mut rep = Vec::new();
            for (i, &cid) in chain.iter().enumerate() {
                if let Some((c, ann)) = &replies[cid] {
                    let next_r = chain.get(i + 1).map(|&n| nodes[n].0 .1);
                    rep.push((c.clone(), next_r, ann.clone()));
                }
            }
            let trace = chain_trace(g, cfg, first.0.clone(), first.1, rep, false);
            GuardVerdict::Violated {
                reason,
                robber_path: trace.robber_path(),
                trace,
            }
        };

    let mut moves = Vec::new();
    while let Some(id) = queue.pop_front() {
        deadline.check("guard verification")?;
        if nodes.len() as u64 > budget.max_product_states {
            return Err(Error::Resource {
                what: "product states",
                required: nodes.len() as u64,
                budget: budget.max_product_states,
            });
        }
        let (cops, r, m, t) = nodes[id].0.clone();
        let (c2, m2) = match p.step(&cops, r, &m) {
            Ok(x) if arena.cop_move_is_legal(&cops, &x.0) => x,
            Ok(x) => {
                let reason = format!("illegal cops' move {cops:?} -> {:?}", x.0);
                return Ok(violation(&nodes, &replies, id, reason));
            }
            Err(e) => return Ok(violation(&nodes, &replies, id, e.to_string())),
        };
        replies[id] = Some((c2.clone(), annotate(p, &m2)));
        if c2.contains(&r) {
            continue;
        }
        if t >= setup && target.contains(r) {
            let reason = format!("robber on target vertex {r} after setup and not captured");
            return Ok(violation(&nodes, &replies, id, reason));
        }
        arena.robber_moves(&c2, r, &mut moves);
        let t2 = (t + 1).min(setup);
        for &r2 in moves.iter().filter(|&&v| allowed.contains(v)) {
            let key = (c2.clone(), r2, m2.clone(), t2);
            if index.contains_key(&key) {
                continue;
            }
            index.insert(key.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push((key, Some(id)));
            replies.push(None);
        }
    }
    Ok(GuardVerdict::Valid { states: nodes.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, toroidal_grid};
    use crate::policy::{GreedyRobber, StationaryRobber};
    use crate::solver::{analyze, optimal_policies, SolverOptions};

    #[test]
    fn k2_optimal_play_captures_at_once() {
        let g = path(2).unwrap();
        let a = analyze(&g, GameConfig::standard(1), &SolverOptions::default()).unwrap();
        let (c, r) = optimal_policies(&a);
        let t = play(&g, GameConfig::standard(1), &c, &r, 10).unwrap();
        assert_eq!(t.outcome, Outcome::Captured { turn: 1 });
        replay(&t).unwrap();
    }

    #[test]
    fn c4_evader_survives_one_cop() {
        let g = cycle(4).unwrap();
        let a = analyze(&g, GameConfig::standard(1), &SolverOptions::default()).unwrap();
        let (c, r) = optimal_policies(&a);
        let t = play(&g, GameConfig::standard(1), &c, &r, 100).unwrap();
        assert_eq!(t.outcome, Outcome::Survived { turns: 100 });
        replay(&t).unwrap();
        let back = Trace::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn torus_three_cops_within_value() {
        let g = toroidal_grid(3, 5).unwrap();
        let a = analyze(&g, GameConfig::standard(3), &SolverOptions::default()).unwrap();
        let (c, r) = optimal_policies(&a);
        let t = play(&g, GameConfig::standard(3), &c, &r, 200).unwrap();
        let v = a.witness().unwrap().1 as usize;
        assert_eq!(t.outcome, Outcome::Captured { turn: v });
        replay(&t).unwrap();
        // Same inputs, same bytes.
        assert_eq!(
            play(&g, GameConfig::standard(3), &c, &r, 200).unwrap().to_json(),
            t.to_json()
        );
    }

    #[test]
    fn optimal_cops_verify_within_max_value() {
        let g = cycle(6).unwrap();
        let a = analyze(&g, GameConfig::standard(2), &SolverOptions::default()).unwrap();
        let (c, _) = optimal_policies(&a);
        let w = a.witness().unwrap().1 as usize;
        match verify_capture(&g, GameConfig::standard(2), &c, w, &Budget::default()).unwrap() {
            CaptureVerdict::Captures { worst_turns, .. } => assert_eq!(worst_turns, w),
            v => panic!("{v:?}"),
        }
        let a1 = analyze(&g, GameConfig::standard(1), &SolverOptions::default()).unwrap();
        let v = verify_capture(
            &g,
            GameConfig::standard(1),
            &optimal_policies(&a1).0,
            100,
            &Budget::default(),
        )
        .unwrap();
        assert!(matches!(
            v,
            CaptureVerdict::Escapes {
                kind: EscapeKind::Cycle,
                ..
            }
        ));
    }

    #[test]
    fn illegal_moves_are_faults() {
        struct Teleport;
        impl CopPolicy for Teleport {
            type Memory = ();
            fn cop_count(&self) -> usize {
                1
            }
            fn place(&self) -> Result<(Vec<Vertex>, ())> {
                Ok((vec![0], ()))
            }
            fn step(&self, _: &[Vertex], _: Vertex, _: &()) -> Result<(Vec<Vertex>, ())> {
                Ok((vec![3], ()))
            }
        }
        let g = path(5).unwrap();
        let err = play(
            &g,
            GameConfig::standard(1),
            &Teleport,
            &StationaryRobber { start: Some(4), n: 5 },
            5,
        );
        assert!(matches!(err, Err(Error::PolicyFault { turn: 1, .. })));
        let v = verify_capture(&g, GameConfig::standard(1), &Teleport, 5, &Budget::default()).unwrap();
        assert!(matches!(
            v,
            CaptureVerdict::Escapes {
                kind: EscapeKind::PolicyFault(_),
                ..
            }
        ));
    }

    #[test]
    fn tampered_trace_fails_replay() {
        let g = path(6).unwrap();
        let cop = crate::copwin::CopWinPolicy::new(&g).unwrap();
        let mut t = play(&g, GameConfig::standard(1), &cop, &GreedyRobber::new(&g), 50).unwrap();
        assert!(t.captured());
        replay(&t).unwrap();
        t.turns[0].cops = vec![5];
        assert!(replay(&t).is_err());
    }

    #[test]
    fn empty_target_is_trivially_guarded() {
        let g = cycle(5).unwrap();
        let a = GuardAssignment {
            target: crate::graph::VertexSet::new(5),
            policy: crate::copwin::CopWinPolicy::new(&path(1).unwrap()).unwrap(),
            setup_bound: 0,
        };
        let d = crate::graph::VertexSet::full(5);
        assert!(verify_guarding(&g, &a, &d, &Budget::default()).unwrap().is_valid());
    }
}
