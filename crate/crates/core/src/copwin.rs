//! Strategies built from dismantlings and retracts.
//!
//! * [`CopWinPolicy`]: one cop on a dismantlable graph, chasing the robber's
//!   image under the fold maps of a dismantling.
//! * [`RetractGuard`]: cops play a winning strategy on a retract H against the
//!   robber's shadow f(r), then keep a cop on the shadow. This guards V(H).
//! * [`PathNeighborhoodGuard`]: a sheriff guarding a geodesic P through the
//!   path retraction, flanked by deputies two steps either way; guards N[P].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet, UNREACHABLE};
use crate::policy::CopPolicy;
use crate::simulator::{verify_capture, CaptureVerdict};

/// Reverse elimination order `v_1..v_n`, with `dominator[i]` the vertex
/// covering `v_i` when it was removed (`None` for `v_1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DismantlingOrder {
    pub order: Vec<Vertex>,
    pub dominator: Vec<Option<Vertex>>,
}

/// Greedy corner elimination, always removing the highest-id corner and
/// recording its smallest-id dominator.
pub fn dismantling_order(g: &Graph) -> Option<DismantlingOrder> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut alive = VertexSet::full(n);
    let mut removed = Vec::with_capacity(n);
    while alive.len() > 1 {
        let corner = alive.iter().collect::<Vec<_>>().into_iter().rev().find_map(|v| {
            let mut nv = g.closed_neighborhood_of(v);
            nv.intersect_with(&alive);
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| alive.contains(w))
                .find(|&w| nv.is_subset(&g.closed_neighborhood_of(w)))
                .map(|w| (v, w))
        })?;
        alive.remove(corner.0);
        removed.push(corner);
    }
    let root = alive.iter().next()?;
    let mut order = vec![root];
    let mut dominator = vec![None];
    for &(v, w) in removed.iter().rev() {
        order.push(v);
        dominator.push(Some(w));
    }
    Some(DismantlingOrder { order, dominator })
}

impl DismantlingOrder {
    /// Checks the corner condition for every prefix.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() != n || self.dominator.len() != n {
            return false;
        }
        let mut seen = VertexSet::new(n);
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
            if i == 0 {
                continue;
            }
            let Some(w) = self.dominator[i] else { return false };
            if w == v || !seen.contains(w) {
                return false;
            }
            let mut nv = g.closed_neighborhood_of(v);
            nv.intersect_with(&seen);
            let mut nw = g.closed_neighborhood_of(w);
            nw.intersect_with(&seen);
            if !nv.is_subset(&nw) {
                return false;
            }
        }
        true
    }
}

/// One cop on a dismantlable graph.
///
/// `fold[j][v]` is the image of `v` in `G[v_1..v_{j+1}]` after folding away
/// every later vertex onto its dominator. The memory is the current level;
/// after each move the cop stands on `fold[level][robber]`, and the level
/// grows by at least one per move, so the robber is caught within `n - 1`
/// moves.
#[derive(Clone, Debug)]
pub struct CopWinPolicy {
    graph: Graph,
    order: DismantlingOrder,
    fold: Vec<Vec<Vertex>>,
}

impl CopWinPolicy {
    pub fn new(g: &Graph) -> Result<Self> {
        let order = dismantling_order(g).ok_or_else(|| Error::contract("graph is not dismantlable"))?;
        Self::with_order(g, order)
    }

    pub fn with_order(g: &Graph, order: DismantlingOrder) -> Result<Self> {
        if !order.is_valid_for(g) {
            return Err(Error::contract("invalid dismantling order"));
        }
        let n = g.n();
        let mut fold = vec![Vec::new(); n];
        fold[n - 1] = (0..n).collect();
        for j in (1..n).rev() {
            let (v, w) = (order.order[j], order.dominator[j].unwrap());
            fold[j - 1] = fold[j].iter().map(|&x| if x == v { w } else { x }).collect();
        }
        Ok(CopWinPolicy {
            graph: g.clone(),
            order,
            fold,
        })
    }

    pub fn order(&self) -> &DismantlingOrder {
        &self.order
    }

    /// Image of `v` at `level` (0-based).
    pub fn fold(&self, level: usize, v: Vertex) -> Vertex {
        self.fold[level][v]
    }
}

impl CopPolicy for CopWinPolicy {
    type Memory = usize;

    fn cop_count(&self) -> usize {
        1
    }

    fn place(&self) -> Result<(Vec<Vertex>, usize)> {
        Ok((vec![self.order.order[0]], 0))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, level: &usize) -> Result<(Vec<Vertex>, usize)> {
        let n = self.graph.n();
        let c = cops[0];
        if self.graph.adjacent_or_equal(c, robber) {
            return Ok((vec![robber], n - 1));
        }
        let mut level = (*level + 1).min(n - 1);
        let target = self.fold[level][robber];
        if !self.graph.adjacent_or_equal(c, target) {
            return Err(Error::contract(format!(
                "fold image {target} of robber {robber} not reachable from {c}"
            )));
        }
        while level + 1 < n && self.fold[level + 1][robber] == target {
            level += 1;
        }
        Ok((vec![target], level))
    }

    fn describe(&self, level: &usize) -> Vec<(String, String)> {
        vec![("level".into(), level.to_string())]
    }
}

/// A retraction `f` of `G[domain]` onto the induced subgraph on `image`.
/// `f` is total on V(G); the retraction properties are only promised on
/// `domain`.
#[derive(Clone, Debug)]
pub struct Retraction {
    host: Graph,
    image: Vec<Vertex>,
    image_index: Vec<Option<usize>>,
    map: Vec<Vertex>,
    domain: VertexSet,
}

impl Retraction {
    pub fn new(host: &Graph, image: Vec<Vertex>, map: Vec<Vertex>, domain: VertexSet) -> Result<Self> {
        let n = host.n();
        if map.len() != n || domain.universe() != n {
            return Err(Error::domain("retraction map must cover every vertex"));
        }
        let mut image_index = vec![None; n];
        for (i, &v) in image.iter().enumerate() {
            host.check_vertex(v)?;
            if image_index[v].replace(i).is_some() {
                return Err(Error::domain(format!("vertex {v} repeated in image")));
            }
        }
        let r = Retraction {
            host: host.clone(),
            image,
            image_index,
            map,
            domain,
        };
        r.check()?;
        Ok(r)
    }

    /// Verifies `f|H = id` and that edges of `G[domain]` map to edges or points.
    pub fn check(&self) -> Result<()> {
        for &v in &self.image {
            if self.map[v] != v {
                return Err(Error::contract(format!(
                    "f({v}) = {} but {v} is in the image",
                    self.map[v]
                )));
            }
        }
        for (u, v) in self.host.edges() {
            if !(self.domain.contains(u) && self.domain.contains(v)) {
                continue;
            }
            let (a, b) = (self.map[u], self.map[v]);
            if self.image_index[a].is_none() || !self.host.adjacent_or_equal(a, b) {
                return Err(Error::contract(format!("edge {u}-{v} maps to non-edge {a}-{b}")));
            }
        }
        Ok(())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn domain(&self) -> &VertexSet {
        &self.domain
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    /// Position of an image vertex in `image()` (its id in H).
    pub fn index_in_image(&self, v: Vertex) -> Option<usize> {
        self.image_index[v]
    }

    /// The retract H, numbered in image order.
    pub fn retract_graph(&self) -> Graph {
        self.host
            .induced_subgraph(&self.image)
            .expect("image vertices checked")
            .0
    }
}

/// `f(w) = p_min(dist(p_0, w), k)` with distances in `G[P ∪ D]`. Requires P
/// to be a shortest `p_0`–`p_k` path there.
pub fn path_retraction(g: &Graph, path: &[Vertex], d: &VertexSet) -> Result<Retraction> {
    if path.is_empty() {
        return Err(Error::domain("path must be non-empty"));
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::domain(format!("{}-{} is not an edge", w[0], w[1])));
        }
    }
    let mut domain = d.clone();
    for &p in path {
        domain.insert(p);
    }
    let k = path.len() - 1;
    let dist = g.bfs_within(path[0], Some(&domain));
    if let Some(i) = (0..=k).find(|&i| (dist[path[i]] as usize) < i) {
        // Reconstruct the shortcut for the message.
        let dm = g.induced_subgraph(&domain.to_vec())?;
        let members = domain.to_vec();
        let sub_dist = dm.0.all_pairs_distances();
        let (a, b) = (dm.1[path[0]].unwrap(), dm.1[path[i]].unwrap());
        let shortcut: Vec<Vertex> = sub_dist
            .shortest_path(&dm.0, a, b)
            .unwrap_or_default()
            .into_iter()
            .map(|x| members[x])
            .collect();
        return Err(Error::contract(format!(
            "path is not shortest relative to D: {} reaches {} in {} steps via {:?}",
            path[0], path[i], dist[path[i]], shortcut
        )));
    }
    let map = (0..g.n())
        .map(|w| {
            let dw = dist[w];
            if dw == UNREACHABLE {
                path[k]
            } else {
                path[(dw as usize).min(k)]
            }
        })
        .collect();
    Retraction::new(g, path.to_vec(), map, domain)
}

/// A cop strategy together with the set it guards and the length of its
/// positioning phase.
#[derive(Clone, Debug)]
pub struct GuardAssignment<P> {
    pub target: VertexSet,
    pub policy: P,
    pub setup_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GuardMemory<M> {
    /// Inner strategy still chasing the shadow.
    Chasing(M),
    /// Cop `i` stands on the shadow and follows it.
    Shadowing(usize),
}

/// Plays `inner` (a strategy on the retract H) against the robber's shadow.
#[derive(Clone, Debug)]
pub struct RetractGuard<P> {
    retraction: Retraction,
    inner: P,
}

impl<P: CopPolicy> RetractGuard<P> {
    pub fn new(retraction: Retraction, inner: P) -> Self {
        RetractGuard { retraction, inner }
    }

    pub fn retraction(&self) -> &Retraction {
        &self.retraction
    }

    fn to_host(&self, h: &[Vertex]) -> Result<Vec<Vertex>> {
        h.iter()
            .map(|&x| {
                self.retraction
                    .image
                    .get(x)
                    .copied()
                    .ok_or_else(|| Error::contract(format!("inner policy left H at {x}")))
            })
            .collect()
    }

    fn to_h(&self, cops: &[Vertex]) -> Result<Vec<Vertex>> {
        cops.iter()
            .map(|&c| {
                self.retraction
                    .index_in_image(c)
                    .ok_or_else(|| Error::contract(format!("cop at {c} is outside the retract")))
            })
            .collect()
    }
}

impl<P: CopPolicy> CopPolicy for RetractGuard<P> {
    type Memory = GuardMemory<P::Memory>;

    fn cop_count(&self) -> usize {
        self.inner.cop_count()
    }

    fn place(&self) -> Result<(Vec<Vertex>, Self::Memory)> {
        let (h, m) = self.inner.place()?;
        Ok((self.to_host(&h)?, GuardMemory::Chasing(m)))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vec<Vertex>, Self::Memory)> {
        let shadow = self.retraction.apply(robber);
        let follow = |i: usize| -> Result<(Vec<Vertex>, Self::Memory)> {
            if !self.retraction.host.adjacent_or_equal(cops[i], shadow) {
                return Err(Error::contract(format!(
                    "shadow jumped from next to {} to {shadow}",
                    cops[i]
                )));
            }
            let mut next = cops.to_vec();
            next[i] = shadow;
            Ok((next, GuardMemory::Shadowing(i)))
        };
        match mem {
            GuardMemory::Shadowing(i) => follow(*i),
            GuardMemory::Chasing(m) => {
                if let Some(i) = cops.iter().position(|&c| c == shadow) {
                    return follow(i);
                }
                let h = self.to_h(cops)?;
                let s = self.retraction.index_in_image(shadow).expect("shadow lies in H");
                let (h2, m2) = self.inner.step(&h, s, m)?;
                let next = self.to_host(&h2)?;
                match next.iter().position(|&c| c == shadow) {
                    Some(i) => Ok((next, GuardMemory::Shadowing(i))),
                    None => Ok((next, GuardMemory::Chasing(m2))),
                }
            }
        }
    }

    fn describe(&self, mem: &Self::Memory) -> Vec<(String, String)> {
        match mem {
            GuardMemory::Chasing(m) => {
                let mut d = vec![("guard".to_string(), "chasing".to_string())];
                d.extend(self.inner.describe(m));
                d
            }
            GuardMemory::Shadowing(i) => vec![("guard".into(), format!("shadowing with cop {i}"))],
        }
    }
}

/// Wraps `inner` as a guard of the retract's image. `inner` must capture on H
/// within `inner_bound` moves; this is checked exhaustively.
pub fn retract_guard_policy<P: CopPolicy>(
    retraction: Retraction,
    inner: P,
    inner_bound: usize,
    budget: &crate::Budget,
) -> Result<GuardAssignment<RetractGuard<P>>> {
    let h = retraction.retract_graph();
    let verdict = verify_capture(
        &h,
        crate::solver::GameConfig::standard(inner.cop_count()),
        &inner,
        inner_bound,
        budget,
    )?;
    if let CaptureVerdict::Escapes { .. } = verdict {
        return Err(Error::contract("inner strategy does not win on the retract"));
    }
    let target = retraction.host.vertex_set(retraction.image.iter().copied())?;
    Ok(GuardAssignment {
        target,
        policy: RetractGuard::new(retraction, inner),
        setup_bound: inner_bound,
    })
}

/// One cop guarding a geodesic P via the path retraction and the cop-win
/// strategy on the path.
pub fn guard_path(g: &Graph, path: &[Vertex], d: &VertexSet) -> Result<GuardAssignment<RetractGuard<CopWinPolicy>>> {
    let r = path_retraction(g, path, d)?;
    let inner = CopWinPolicy::new(&r.retract_graph())?;
    retract_guard_policy(r, inner, path.len(), &crate::Budget::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NeighborhoodMemory<M> {
    /// Deputies walking to their posts; the sheriff waits on `p_0`.
    Forming(M),
    Guarding(M),
}

/// Sheriff plus deputies at fixed path offsets from the sheriff's index.
#[derive(Clone, Debug)]
pub struct PathNeighborhoodGuard {
    graph: Graph,
    path: Vec<Vertex>,
    sheriff: RetractGuard<CopWinPolicy>,
    offsets: Vec<isize>,
}

impl PathNeighborhoodGuard {
    fn index_on_path(&self, v: Vertex) -> Option<usize> {
        self.sheriff.retraction().index_in_image(v)
    }

    fn post(&self, i: usize, off: isize) -> usize {
        (i as isize + off).clamp(0, self.path.len() as isize - 1) as usize
    }

    pub fn offsets(&self) -> &[isize] {
        &self.offsets
    }

    pub fn path(&self) -> &[Vertex] {
        &self.path
    }
}

impl CopPolicy for PathNeighborhoodGuard {
    type Memory = NeighborhoodMemory<GuardMemory<usize>>;

    fn cop_count(&self) -> usize {
        1 + self.offsets.len()
    }

    fn place(&self) -> Result<(Vec<Vertex>, Self::Memory)> {
        let (s, m) = self.sheriff.place()?;
        debug_assert_eq!(s[0], self.path[0]);
        Ok((vec![self.path[0]; self.cop_count()], NeighborhoodMemory::Forming(m)))
    }

    fn step(&self, cops: &[Vertex], robber: Vertex, mem: &Self::Memory) -> Result<(Vec<Vertex>, Self::Memory)> {
        let idx = |c: Vertex| {
            self.index_on_path(c)
                .ok_or_else(|| Error::contract(format!("cop left the path at {c}")))
        };
        let (mut next, mem2) = match mem {
            NeighborhoodMemory::Forming(m) => {
                let si = idx(cops[0])?;
                let mut next = vec![cops[0]];
                let mut formed = true;
                for (j, &off) in self.offsets.iter().enumerate() {
                    let at = idx(cops[j + 1])?;
                    let want = self.post(si, off);
                    let step = match at.cmp(&want) {
                        std::cmp::Ordering::Less => at + 1,
                        std::cmp::Ordering::Greater => at - 1,
                        std::cmp::Ordering::Equal => at,
                    };
                    formed &= step == want;
                    next.push(self.path[step]);
                }
                let m2 = if formed {
                    NeighborhoodMemory::Guarding(m.clone())
                } else {
                    NeighborhoodMemory::Forming(m.clone())
                };
                (next, m2)
            }
            NeighborhoodMemory::Guarding(m) => {
                let (s, m2) = self.sheriff.step(&cops[..1], robber, m)?;
                let si = idx(s[0])?;
                let mut next = s;
                next.extend(self.offsets.iter().map(|&off| self.path[self.post(si, off)]));
                (next, NeighborhoodMemory::Guarding(m2))
            }
        };
        // Capture whenever possible.
        if let Some(i) = cops.iter().position(|&c| self.graph.adjacent_or_equal(c, robber)) {
            next[i] = robber;
        }
        Ok((next, mem2))
    }

    fn describe(&self, mem: &Self::Memory) -> Vec<(String, String)> {
        match mem {
            NeighborhoodMemory::Forming(_) => vec![("phase".into(), "forming".into())],
            NeighborhoodMemory::Guarding(m) => {
                let mut d = vec![("phase".to_string(), "guarding".to_string())];
                d.extend(self.sheriff.describe(m));
                d
            }
        }
    }
}

const FIVE_OFFSETS: [isize; 4] = [-2, -1, 1, 2];
const FOUR_OFFSETS: [isize; 3] = [-2, -1, 1];

fn neighborhood_guard(
    g: &Graph,
    path: &[Vertex],
    d: &VertexSet,
    offsets: &[isize],
) -> Result<GuardAssignment<PathNeighborhoodGuard>> {
    let r = path_retraction(g, path, d)?;
    let inner = CopWinPolicy::new(&r.retract_graph())?;
    let diameter = g
        .all_pairs_distances()
        .diameter()
        .ok_or_else(|| Error::domain("graph must be connected"))? as usize;
    let target = g.closed_neighborhood(&g.vertex_set(path.iter().copied())?)?;
    Ok(GuardAssignment {
        target,
        policy: PathNeighborhoodGuard {
            graph: g.clone(),
            path: path.to_vec(),
            sheriff: RetractGuard::new(r, inner),
            offsets: offsets.to_vec(),
        },
        setup_bound: 2 * diameter + path.len(),
    })
}

/// Five cops guarding N[P] for a geodesic P relative to D.
pub fn guard_path_neighborhood(
    g: &Graph,
    path: &[Vertex],
    d: &VertexSet,
) -> Result<GuardAssignment<PathNeighborhoodGuard>> {
    neighborhood_guard(g, path, d, &FIVE_OFFSETS)
}

/// The same formation without the deputy two steps ahead; not sufficient in
/// general (see [`five_necessary_gadget`]).
pub fn guard_path_neighborhood_four(
    g: &Graph,
    path: &[Vertex],
    d: &VertexSet,
) -> Result<GuardAssignment<PathNeighborhoodGuard>> {
    neighborhood_guard(g, path, d, &FOUR_OFFSETS)
}

/// A path `p_0..p_6` (ids 0..6) with a detour `p_0 - s - r - q - p_4`
/// (`q = 7`, `s = 8`, `r = 9`). From `r`, whose shadow is `p_2`, the robber
/// steps to `q`, which only touches `p_4` – two steps ahead of the sheriff.
pub fn five_necessary_gadget() -> (Graph, Vec<Vertex>, VertexSet) {
    let mut edges: Vec<(Vertex, Vertex)> = (0..6).map(|i| (i, i + 1)).collect();
    edges.extend([(7, 4), (7, 9), (8, 0), (8, 9)]);
    let g = Graph::from_edges(10, edges).expect("static gadget");
    let path: Vec<Vertex> = (0..7).collect();
    let d = VertexSet::from_vertices(10, [7, 8, 9]);
    (g, path, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, connected_graphs_up_to, cycle, path, petersen};
    use crate::simulator::{verify_guarding, GuardVerdict};
    use crate::solver::{standard_cop_number, CopNumber, SolverOptions};
    use proptest::prelude::*;

    #[test]
    fn dismantling_examples() {
        let p = path(5).unwrap();
        let o = dismantling_order(&p).unwrap();
        assert_eq!(o.order, vec![0, 1, 2, 3, 4]);
        assert!(o.is_valid_for(&p));
        assert!(dismantling_order(&cycle(4).unwrap()).is_none());
        assert!(dismantling_order(&complete(4).unwrap())
            .unwrap()
            .is_valid_for(&complete(4).unwrap()));
    }

    #[test]
    fn dismantlable_iff_one_cop_up_to_six() {
        let o = SolverOptions::default();
        for g in connected_graphs_up_to(6) {
            let one = standard_cop_number(&g, 1, &o).unwrap() == CopNumber::Exactly(1);
            assert_eq!(
                dismantling_order(&g).is_some(),
                one,
                "{:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn copwin_policy_captures_on_every_copwin_graph() {
        for g in connected_graphs_up_to(6) {
            if let Ok(p) = CopWinPolicy::new(&g) {
                let v = verify_capture(
                    &g,
                    crate::solver::GameConfig::standard(1),
                    &p,
                    g.n(),
                    &crate::Budget::default(),
                )
                .unwrap();
                assert!(v.is_valid(), "{:?}: {v:?}", g.edges().collect::<Vec<_>>());
            }
        }
        let k2 = path(2).unwrap();
        let p = CopWinPolicy::new(&k2).unwrap();
        assert_eq!(p.step(&[0], 1, &0).unwrap().0, vec![1]);
        let p5 = path(5).unwrap();
        let v = verify_capture(
            &p5,
            crate::solver::GameConfig::standard(1),
            &CopWinPolicy::new(&p5).unwrap(),
            25,
            &crate::Budget::default(),
        )
        .unwrap();
        assert!(matches!(v, CaptureVerdict::Captures { worst_turns, .. } if worst_turns <= 4));
    }

    #[test]
    fn c6_half_cycle_retraction() {
        let g = cycle(6).unwrap();
        let d = VertexSet::from_vertices(6, [4, 5]);
        let r = path_retraction(&g, &[0, 1, 2, 3], &d).unwrap();
        assert_eq!(r.apply(5), 1);
        assert_eq!(r.apply(4), 2);
        let a = guard_path(&g, &[0, 1, 2, 3], &d).unwrap();
        let v = verify_guarding(&g, &a, &d, &crate::Budget::default()).unwrap();
        assert!(v.is_valid(), "{v:?}");
    }

    #[test]
    fn non_geodesic_is_rejected_with_shortcut() {
        let g = cycle(6).unwrap();
        let d = VertexSet::from_vertices(6, [5]);
        let err = path_retraction(&g, &[0, 1, 2, 3, 4], &d).unwrap_err();
        assert!(
            matches!(err, Error::Contract(ref m) if m.contains("[0, 5, 4]")),
            "{err}"
        );
    }

    #[test]
    fn identity_when_path_is_everything() {
        let g = path(4).unwrap();
        let r = path_retraction(&g, &[0, 1, 2, 3], &VertexSet::new(4)).unwrap();
        assert!((0..4).all(|v| r.apply(v) == v));
    }

    #[test]
    fn single_vertex_retract_guard() {
        let g = petersen();
        let d = VertexSet::from_vertices(10, (0..10).filter(|&v| v != 3));
        let a = guard_path(&g, &[3], &d).unwrap();
        assert_eq!(a.policy.place().unwrap().0, vec![3]);
        assert!(verify_guarding(&g, &a, &d, &crate::Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn petersen_geodesic_guard() {
        let g = petersen();
        let path = vec![0, 1, 2];
        let d = VertexSet::from_vertices(10, 3..10);
        let a = guard_path(&g, &path, &d).unwrap();
        assert!(a.setup_bound <= g.n());
        assert!(verify_guarding(&g, &a, &d, &crate::Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn gadget_needs_five_cops() {
        let (g, p, d) = five_necessary_gadget();
        let b = crate::Budget::default();
        let five = guard_path_neighborhood(&g, &p, &d).unwrap();
        assert!(verify_guarding(&g, &five, &d, &b).unwrap().is_valid());
        let four = guard_path_neighborhood_four(&g, &p, &d).unwrap();
        match verify_guarding(&g, &four, &d, &b).unwrap() {
            GuardVerdict::Violated { robber_path, .. } => assert!(robber_path.contains(&7)),
            v => panic!("expected a violation, got {v:?}"),
        }
    }

    #[test]
    fn formation_holds_after_setup() {
        let (g, p, _) = five_necessary_gadget();
        let d = VertexSet::from_vertices(10, [7, 8, 9]);
        let a = guard_path_neighborhood(&g, &p, &d).unwrap();
        let (mut cops, mut m) = a.policy.place().unwrap();
        for _ in 0..a.setup_bound {
            let (c, m2) = a.policy.step(&cops, 9, &m).unwrap();
            cops = c;
            m = m2;
        }
        let i = cops[0];
        let mut want: Vec<_> = (-2isize..=2).map(|o| (i as isize + o).clamp(0, 6) as usize).collect();
        let mut got = cops.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn bfs_path_retraction_is_sound(n in 2usize..9, p in 0.25f64..0.8, seed in 0u64..10_000, target in 0usize..9) {
            let g = crate::generators::random_connected(n, p, seed).unwrap();
            let dm = g.all_pairs_distances();
            let path = dm.shortest_path(&g, 0, target % n).unwrap();
            let d = VertexSet::from_vertices(n, (0..n).filter(|v| !path.contains(v)));
            let r = path_retraction(&g, &path, &d).unwrap();
            prop_assert!(r.check().is_ok());
            for (u, v) in g.edges() {
                prop_assert!(dm.get(0, u).abs_diff(dm.get(0, v)) <= 1);
            }
        }
    }
}
