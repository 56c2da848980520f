use super::{Graph, Vertex};

/// Sentinel for "no path".
pub const UNREACHABLE: u32 = u32::MAX;

/// Dense all-pairs hop-count matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        let dist = rows.into_iter().flatten().collect();
        DistanceMatrix { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn finite(&self, u: Vertex, v: Vertex) -> Option<u32> {
        Some(self.get(u, v)).filter(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance, or `None` if some pair is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if self.dist.contains(&UNREACHABLE) {
            None
        } else {
            self.dist.iter().copied().max()
        }
    }

    /// Vertices within `radius` of `v`, ascending.
    pub fn ball(&self, v: Vertex, radius: u32) -> Vec<Vertex> {
        (0..self.n).filter(|&w| self.get(v, w) <= radius).collect()
    }

    /// Smallest-id neighbor of `from` one step closer to `to`; `None` when
    /// `from == to` or no path exists.
    pub fn next_hop(&self, g: &Graph, from: Vertex, to: Vertex) -> Option<Vertex> {
        let d = self.get(from, to);
        if d == 0 || d == UNREACHABLE {
            return None;
        }
        g.neighbors(from).iter().copied().find(|&w| self.get(w, to) == d - 1)
    }

    /// Lexicographically-greedy shortest path `from ..= to`.
    pub fn shortest_path(&self, g: &Graph, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        if self.get(from, to) == UNREACHABLE {
            return None;
        }
        let mut path = vec![from];
        let mut at = from;
        while let Some(next) = self.next_hop(g, at, to) {
            path.push(next);
            at = next;
        }
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, toroidal_grid};

    #[test]
    fn small_examples() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.all_pairs_distances().get(0, 2), 2);
        let two = Graph::empty(2);
        let d = two.all_pairs_distances();
        assert_eq!(d.get(0, 1), UNREACHABLE);
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn toroidal_diameter_matches_bfs_oracle() {
        let g = toroidal_grid(3, 5).unwrap();
        // Oracle: on C_3 x C_5 the distance is the sum of the cyclic distances.
        let cyc = |a: usize, b: usize, m: usize| {
            let d = a.abs_diff(b);
            d.min(m - d)
        };
        let dm = g.all_pairs_distances();
        for u in 0..15 {
            for v in 0..15 {
                let (ru, cu, rv, cv) = (u / 5, u % 5, v / 5, v % 5);
                assert_eq!(dm.get(u, v) as usize, cyc(ru, rv, 3) + cyc(cu, cv, 5));
            }
        }
        assert_eq!(dm.diameter(), Some(3));
    }

    #[test]
    fn shortest_path_is_geodesic() {
        let g = toroidal_grid(3, 5).unwrap();
        let dm = g.all_pairs_distances();
        let p = dm.shortest_path(&g, 0, 12).unwrap();
        assert_eq!(p.len() as u32 - 1, dm.get(0, 12));
        for w in p.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
    }
}
