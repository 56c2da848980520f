//! Exact analysis of the k-cop game by retrograde search.
//!
//! A state is a sorted cop multiset, a robber vertex and the side to move.
//! Terminal states (robber on a cop) are labeled first; the labeling then
//! proceeds backwards one ply at a time. A cops-to-move state is won as soon
//! as one successor is won; a robber-to-move state keeps a counter of
//! unlabeled successors and is won when it reaches zero. Processing whole
//! plies at once makes the labels independent of scheduling, so the frontier
//! may be expanded in parallel.

mod arena;
mod index;
mod policies;

pub use arena::Arena;
pub use index::MultisetIndex;
pub use policies::{optimal_policies, OptimalCops, OptimalRobber};

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU32, Ordering::Relaxed};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::par::Exec;

/// Number of cops and the move speed of each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub cops: usize,
    pub cop_speed: usize,
    pub robber_speed: usize,
}

impl GameConfig {
    /// The standard game with `k` cops.
    pub fn standard(k: usize) -> Self {
        GameConfig {
            cops: k,
            cop_speed: 1,
            robber_speed: 1,
        }
    }

    /// Both sides move up to `d` steps per turn.
    pub fn speeds(k: usize, d: usize) -> Self {
        GameConfig {
            cops: k,
            cop_speed: d,
            robber_speed: d,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cops == 0 {
            return Err(Error::domain("at least one cop is required"));
        }
        if self.cop_speed == 0 || self.robber_speed == 0 {
            return Err(Error::domain("speeds must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Cops,
    Robber,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Cops => Side::Robber,
            Side::Robber => Side::Cops,
        }
    }
}

/// Canonical game position: cops sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GamePosition {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    pub to_move: Side,
}

impl GamePosition {
    pub fn new(mut cops: Vec<Vertex>, robber: Vertex, to_move: Side) -> Self {
        cops.sort_unstable();
        GamePosition { cops, robber, to_move }
    }

    pub fn is_terminal(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// All successor positions of a non-terminal position, canonicalized and sorted.
pub fn legal_moves(g: &Graph, cfg: GameConfig, pos: &GamePosition) -> Result<Vec<GamePosition>> {
    cfg.validate()?;
    check_position(g, cfg, pos)?;
    if pos.is_terminal() {
        return Err(Error::contract("no moves from a terminal position"));
    }
    let arena = Arena::new(g, cfg);
    Ok(arena_moves(&arena, pos))
}

fn arena_moves(arena: &Arena, pos: &GamePosition) -> Vec<GamePosition> {
    match pos.to_move {
        Side::Cops => {
            let mut ranks = Vec::new();
            arena.cop_successor_ranks(&pos.cops, &mut ranks);
            let mut out: Vec<_> = ranks
                .iter()
                .map(|&r| GamePosition::new(arena.index().unrank(r as usize), pos.robber, Side::Robber))
                .collect();
            out.sort();
            out
        }
        Side::Robber => {
            let mut moves = Vec::new();
            arena.robber_moves(&pos.cops, pos.robber, &mut moves);
            moves
                .into_iter()
                .map(|r| GamePosition::new(pos.cops.clone(), r, Side::Cops))
                .collect()
        }
    }
}

fn check_position(g: &Graph, cfg: GameConfig, pos: &GamePosition) -> Result<()> {
    if pos.cops.len() != cfg.cops {
        return Err(Error::domain(format!(
            "position has {} cops, configuration {}",
            pos.cops.len(),
            cfg.cops
        )));
    }
    for &v in pos.cops.iter().chain(std::iter::once(&pos.robber)) {
        g.check_vertex(v)?;
    }
    Ok(())
}

/// Solver knobs.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolverOptions {
    pub budget: Budget,
    pub exec: Exec,
}

const UNLABELED: u32 = u32::MAX;

/// Complete labeling of the k-cop game on one graph.
#[derive(Clone, Debug)]
pub struct GameAnalysis {
    arena: Arena,
    /// Plies to capture under optimal play, `UNLABELED` where the robber escapes.
    ply: Vec<u32>,
    succ_offsets: Vec<usize>,
    succ_ranks: Vec<u32>,
    witness: Option<(Vec<Vertex>, u32)>,
}

/// Exported summary of an analysis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AnalysisSummary {
    pub cops: usize,
    pub cop_speed: usize,
    pub robber_speed: usize,
    pub cops_win: bool,
    pub witness: Option<Vec<Vertex>>,
    pub witness_value: Option<u32>,
    pub state_count: u64,
    pub max_value: Option<u32>,
}

#[inline]
fn state_id(n: usize, rank: usize, robber: Vertex, side: Side) -> usize {
    (rank * n + robber) * 2 + (side == Side::Robber) as usize
}

/// Number of states `C(n+k-1, k) * n * 2`, or `None` on overflow.
pub fn state_count(n: usize, k: usize) -> Option<u64> {
    MultisetIndex::new(n, k).count().checked_mul(n as u64)?.checked_mul(2)
}

/// Solves the game exhaustively.
pub fn analyze(g: &Graph, cfg: GameConfig, opts: &SolverOptions) -> Result<GameAnalysis> {
    cfg.validate()?;
    g.require_connected()?;
    let n = g.n();
    let total = state_count(n, cfg.cops).ok_or(Error::Resource {
        what: "game states",
        required: u64::MAX,
        budget: opts.budget.max_states,
    })?;
    opts.budget.check_states("game states", total)?;
    let deadline = opts.budget.deadline();
    let arena = Arena::new(g, cfg);
    let m = arena.index().count() as usize;
    let k = cfg.cops;
    let exec = opts.exec;

    // Cop-move successor table, one sorted rank list per multiset.
    let lists: Vec<Vec<u32>> = exec.map_range(0..m, |rank| {
        let cops = arena.index().unrank(rank);
        let mut out = Vec::new();
        arena.cop_successor_ranks(&cops, &mut out);
        out
    });
    let mut succ_offsets = Vec::with_capacity(m + 1);
    succ_offsets.push(0);
    for l in &lists {
        succ_offsets.push(succ_offsets.last().unwrap() + l.len());
    }
    let succ_ranks: Vec<u32> = lists.into_iter().flatten().collect();
    let succ = |rank: usize| &succ_ranks[succ_offsets[rank]..succ_offsets[rank + 1]];

    let ply: Vec<AtomicU32> = (0..total).map(|_| AtomicU32::new(UNLABELED)).collect();
    // Remaining unlabeled successors of each robber-to-move state, indexed rank*n + robber.
    let counters: Vec<AtomicU32> = exec
        .map_range(0..m, |rank| {
            let cops = arena.index().unrank(rank);
            let mut moves = Vec::new();
            (0..n)
                .map(|r| {
                    arena.robber_moves(&cops, r, &mut moves);
                    moves.len() as u32
                })
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .map(AtomicU32::new)
        .collect();

    let mut frontier: Vec<usize> = exec
        .map_range(0..m, |rank| {
            let cops = arena.index().unrank(rank);
            let mut ids = Vec::with_capacity(2 * k);
            let mut prev = usize::MAX;
            for &c in &cops {
                if c != prev {
                    ids.push(state_id(n, rank, c, Side::Cops));
                    ids.push(state_id(n, rank, c, Side::Robber));
                    prev = c;
                }
            }
            ids
        })
        .into_iter()
        .flatten()
        .collect();
    for &id in &frontier {
        ply[id].store(0, Relaxed);
    }

    let mut level: u32 = 0;
    while !frontier.is_empty() {
        deadline.check("retrograde analysis")?;
        let next_ply = level + 1;
        let mut next = exec.flat_map(&frontier, |&id, out| {
            let side_robber = id & 1 == 1;
            let cell = id >> 1;
            let (rank, r) = (cell / n, cell % n);
            let mut cops = vec![0; k];
            arena.index().unrank_into(rank, &mut cops);
            if side_robber {
                // Predecessors: cops-to-move states one cop move away, robber not caught yet.
                for &p in succ(rank) {
                    let p = p as usize;
                    let pred = state_id(n, p, r, Side::Cops);
                    if ply[pred].load(Relaxed) != UNLABELED {
                        continue;
                    }
                    let mut pc = vec![0; k];
                    arena.index().unrank_into(p, &mut pc);
                    if pc.contains(&r) {
                        continue;
                    }
                    if ply[pred]
                        .compare_exchange(UNLABELED, next_ply, Relaxed, Relaxed)
                        .is_ok()
                    {
                        out.push(pred);
                    }
                }
            } else if !cops.contains(&r) {
                // Predecessors: robber-to-move states one robber move away (moves are symmetric).
                let mut moves = Vec::new();
                arena.robber_moves(&cops, r, &mut moves);
                for &r0 in &moves {
                    let c = &counters[rank * n + r0];
                    if c.fetch_sub(1, Relaxed) == 1 {
                        let pred = state_id(n, rank, r0, Side::Robber);
                        ply[pred].store(next_ply, Relaxed);
                        out.push(pred);
                    }
                }
            }
        });
        next.sort_unstable();
        frontier = next;
        level = next_ply;
    }

    let ply: Vec<u32> = ply.into_iter().map(AtomicU32::into_inner).collect();
    let mut analysis = GameAnalysis {
        arena,
        ply,
        succ_offsets,
        succ_ranks,
        witness: None,
    };
    analysis.witness = analysis.compute_witness(exec);
    Ok(analysis)
}

impl GameAnalysis {
    pub fn config(&self) -> GameConfig {
        self.arena.config()
    }

    pub fn graph(&self) -> &Graph {
        self.arena.graph()
    }

    pub fn arena(&self) -> &Arena {
        &self.arena
    }

    pub fn state_count(&self) -> u64 {
        self.ply.len() as u64
    }

    fn id_of(&self, cops_sorted: &[Vertex], robber: Vertex, side: Side) -> usize {
        state_id(self.graph().n(), self.arena.index().rank(cops_sorted), robber, side)
    }

    fn ply_of(&self, pos: &GamePosition) -> u32 {
        let mut cops = pos.cops.clone();
        cops.sort_unstable();
        self.ply[self.id_of(&cops, pos.robber, pos.to_move)]
    }

    /// Whether the cops can force capture from `pos`.
    pub fn is_cop_win(&self, pos: &GamePosition) -> bool {
        self.ply_of(pos) != UNLABELED
    }

    /// Cop moves still needed to capture under optimal play; `None` when the
    /// robber can evade forever.
    pub fn value(&self, pos: &GamePosition) -> Option<u32> {
        let p = self.ply_of(pos);
        (p != UNLABELED).then(|| ply_to_value(p, pos.to_move))
    }

    /// Worst case over robber placements after the cops place on `cops`.
    pub fn placement_value(&self, cops: &[Vertex]) -> Option<u32> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let rank = self.arena.index().rank(&sorted);
        self.placement_value_rank(rank)
    }

    fn placement_value_rank(&self, rank: usize) -> Option<u32> {
        let n = self.graph().n();
        let mut worst = 0;
        for r in 0..n {
            let p = self.ply[state_id(n, rank, r, Side::Cops)];
            if p == UNLABELED {
                return None;
            }
            worst = worst.max(ply_to_value(p, Side::Cops));
        }
        Some(worst)
    }

    fn compute_witness(&self, exec: Exec) -> Option<(Vec<Vertex>, u32)> {
        let m = self.arena.index().count() as usize;
        let values = exec.map_range(0..m, |rank| self.placement_value_rank(rank));
        let mut best: Option<(Vec<Vertex>, u32)> = None;
        for (rank, v) in values.into_iter().enumerate() {
            let Some(v) = v else { continue };
            let cops = self.arena.index().unrank(rank);
            let better = match &best {
                None => true,
                Some((bc, bv)) => match v.cmp(bv) {
                    Ordering::Less => true,
                    Ordering::Equal => cops < *bc,
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some((cops, v));
            }
        }
        best
    }

    /// Whether some placement of the cops wins against every robber placement.
    pub fn cops_win(&self) -> bool {
        self.witness.is_some()
    }

    /// Best initial placement (smallest worst-case value, then lexicographic)
    /// and its value.
    pub fn witness(&self) -> Option<(&[Vertex], u32)> {
        self.witness.as_ref().map(|(c, v)| (c.as_slice(), *v))
    }

    /// Largest finite value over all states.
    pub fn max_value(&self) -> Option<u32> {
        let n = self.graph().n();
        self.ply
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != UNLABELED)
            .map(|(id, &p)| {
                let _ = n;
                ply_to_value(p, if id & 1 == 1 { Side::Robber } else { Side::Cops })
            })
            .max()
    }

    pub(crate) fn cop_successor_ranks(&self, rank: usize) -> &[u32] {
        &self.succ_ranks[self.succ_offsets[rank]..self.succ_offsets[rank + 1]]
    }

    /// Successor positions (as in [`legal_moves`]).
    pub fn successors(&self, pos: &GamePosition) -> Vec<GamePosition> {
        arena_moves(&self.arena, pos)
    }

    pub fn summary(&self) -> AnalysisSummary {
        let cfg = self.config();
        AnalysisSummary {
            cops: cfg.cops,
            cop_speed: cfg.cop_speed,
            robber_speed: cfg.robber_speed,
            cops_win: self.cops_win(),
            witness: self.witness.as_ref().map(|(c, _)| c.clone()),
            witness_value: self.witness.as_ref().map(|(_, v)| *v),
            state_count: self.state_count(),
            max_value: self.max_value(),
        }
    }

    /// Raw ply table, for cross-checking parallel and sequential runs.
    pub fn ply_table(&self) -> &[u32] {
        &self.ply
    }
}

/// Ply counts alternate sides; a cops-to-move state at ply `p` needs
/// `(p + 1) / 2` cop moves, a robber-to-move state `p / 2`.
fn ply_to_value(p: u32, side: Side) -> u32 {
    match side {
        Side::Cops => p.div_ceil(2),
        Side::Robber => p / 2,
    }
}

/// Result of a cop-number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CopNumber {
    Exactly(usize),
    /// No k up to the stated bound wins.
    Exceeds(usize),
}

impl CopNumber {
    pub fn exact(self) -> Option<usize> {
        match self {
            CopNumber::Exactly(k) => Some(k),
            CopNumber::Exceeds(_) => None,
        }
    }
}

impl std::fmt::Display for CopNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CopNumber::Exactly(k) => write!(f, "{k}"),
            CopNumber::Exceeds(k) => write!(f, "exceeds {k}"),
        }
    }
}

/// Least `k <= k_max` whose game is won by the cops, with its analysis.
pub fn cop_number_with_analysis(
    g: &Graph,
    k_max: usize,
    cop_speed: usize,
    robber_speed: usize,
    opts: &SolverOptions,
) -> Result<(CopNumber, Option<GameAnalysis>)> {
    if k_max == 0 {
        return Err(Error::domain("k_max must be at least 1"));
    }
    g.require_connected()?;
    for k in 1..=k_max {
        let cfg = GameConfig {
            cops: k,
            cop_speed,
            robber_speed,
        };
        let a = analyze(g, cfg, opts)?;
        if a.cops_win() {
            return Ok((CopNumber::Exactly(k), Some(a)));
        }
    }
    Ok((CopNumber::Exceeds(k_max), None))
}

/// Least `k <= k_max` whose game is won by the cops.
pub fn cop_number(
    g: &Graph,
    k_max: usize,
    cop_speed: usize,
    robber_speed: usize,
    opts: &SolverOptions,
) -> Result<CopNumber> {
    cop_number_with_analysis(g, k_max, cop_speed, robber_speed, opts).map(|(c, _)| c)
}

/// Standard-game cop number.
pub fn standard_cop_number(g: &Graph, k_max: usize, opts: &SolverOptions) -> Result<CopNumber> {
    cop_number(g, k_max, 1, 1, opts)
}
