//! Move generation shared by the solver, the policies and the referee.

use crate::graph::{DistanceMatrix, Graph, Vertex, UNREACHABLE};

use super::index::MultisetIndex;
use super::GameConfig;

/// Precomputed move tables for one graph and configuration.
#[derive(Clone, Debug)]
pub struct Arena {
    graph: Graph,
    config: GameConfig,
    index: MultisetIndex,
    distances: DistanceMatrix,
    cop_reach: Vec<Vec<Vertex>>,
}

impl Arena {
    pub fn new(graph: &Graph, config: GameConfig) -> Self {
        let distances = graph.all_pairs_distances();
        let cop_reach = (0..graph.n())
            .map(|v| distances.ball(v, config.cop_speed as u32))
            .collect();
        Arena {
            graph: graph.clone(),
            config,
            index: MultisetIndex::new(graph.n(), config.cops),
            distances,
            cop_reach,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> GameConfig {
        self.config
    }

    pub fn index(&self) -> &MultisetIndex {
        &self.index
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    /// Vertices a single cop at `v` may move to (staying included).
    pub fn cop_reach(&self, v: Vertex) -> &[Vertex] {
        &self.cop_reach[v]
    }

    /// Ranks of all cop multisets reachable in one cops' move, sorted.
    pub fn cop_successor_ranks(&self, cops: &[Vertex], out: &mut Vec<u32>) {
        out.clear();
        let k = cops.len();
        let mut choice = vec![0usize; k];
        let mut tuple = vec![0 as Vertex; k];
        loop {
            for i in 0..k {
                tuple[i] = self.cop_reach[cops[i]][choice[i]];
            }
            tuple.sort_unstable();
            out.push(self.index.rank(&tuple) as u32);
            // odometer
            let mut i = 0;
            loop {
                if i == k {
                    out.sort_unstable();
                    out.dedup();
                    return;
                }
                choice[i] += 1;
                if choice[i] < self.cop_reach[cops[i]].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    /// Robber destinations from `robber` along paths of length at most
    /// `robber_speed` that avoid every cop-occupied vertex. Sorted; includes
    /// staying. Empty when the robber already shares a vertex with a cop.
    pub fn robber_moves(&self, cops: &[Vertex], robber: Vertex, out: &mut Vec<Vertex>) {
        out.clear();
        if cops.contains(&robber) {
            return;
        }
        let speed = self.config.robber_speed;
        if speed == 1 {
            out.push(robber);
            out.extend(self.graph.neighbors(robber).iter().filter(|w| !cops.contains(w)));
            out.sort_unstable();
            return;
        }
        let n = self.graph.n();
        let mut depth = vec![UNREACHABLE; n];
        depth[robber] = 0;
        out.push(robber);
        let mut head = 0;
        while head < out.len() {
            let u = out[head];
            head += 1;
            if depth[u] as usize == speed {
                continue;
            }
            for &w in self.graph.neighbors(u) {
                if depth[w] == UNREACHABLE && !cops.contains(&w) {
                    depth[w] = depth[u] + 1;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
    }

    /// Whether an ordered cop move is legal.
    pub fn cop_move_is_legal(&self, from: &[Vertex], to: &[Vertex]) -> bool {
        from.len() == to.len()
            && from
                .iter()
                .zip(to)
                .all(|(&a, &b)| b < self.graph.n() && self.distances.get(a, b) as usize <= self.config.cop_speed)
    }

    pub fn robber_move_is_legal(&self, cops: &[Vertex], from: Vertex, to: Vertex) -> bool {
        let mut moves = Vec::new();
        self.robber_moves(cops, from, &mut moves);
        moves.binary_search(&to).is_ok()
    }

    /// Orders the multiset `target` so that cop `i` moves from `from[i]` to
    /// `result[i]` legally. Lexicographically smallest assignment.
    pub fn assign(&self, from: &[Vertex], target: &[Vertex]) -> Option<Vec<Vertex>> {
        fn go(arena: &Arena, from: &[Vertex], target: &[Vertex], used: &mut Vec<bool>, out: &mut Vec<Vertex>) -> bool {
            let i = out.len();
            if i == from.len() {
                return true;
            }
            let mut order: Vec<usize> = (0..target.len()).filter(|&j| !used[j]).collect();
            order.sort_by_key(|&j| target[j]);
            order.dedup_by_key(|j| target[*j]);
            for j in order {
                if arena.distances.get(from[i], target[j]) as usize <= arena.config.cop_speed {
                    used[j] = true;
                    out.push(target[j]);
                    if go(arena, from, target, used, out) {
                        return true;
                    }
                    out.pop();
                    used[j] = false;
                }
            }
            false
        }
        if from.len() != target.len() {
            return None;
        }
        let mut used = vec![false; target.len()];
        let mut out = Vec::with_capacity(from.len());
        go(self, from, target, &mut used, &mut out).then_some(out)
    }
}
