//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! Graphs on `n` vertices are grown from graphs on `n - 1` vertices by adding
//! a vertex with a non-empty neighborhood; every connected graph has a
//! non-cut vertex, so the augmentation reaches all of them. Duplicates are
//! removed with a canonical code (maximum adjacency word over all vertex
//! orders that respect a degree-based refinement).

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Largest order handled; the canonical code packs the upper triangle in a u64.
pub const MAX_CORPUS_ORDER: usize = 11;

/// Canonical adjacency code: equal iff the graphs are isomorphic (n <= 11).
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= MAX_CORPUS_ORDER, "canonical code supports n <= {MAX_CORPUS_ORDER}");
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    (n, code_of(n, &adj))
}

fn code_of(n: usize, adj: &[u16]) -> u64 {
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut inv: Vec<(u32, Vec<u32>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd, v)
        })
        .collect();
    inv.sort();
    // cell[i] = index of the first position holding the same invariant as position i
    let mut cell_start = vec![0usize; n];
    for i in 1..n {
        cell_start[i] = if inv[i].0 == inv[i - 1].0 && inv[i].1 == inv[i - 1].1 {
            cell_start[i - 1]
        } else {
            i
        };
    }
    let mut cell_end = vec![n; n];
    for i in (0..n).rev() {
        cell_end[i] = if i + 1 < n && cell_start[i + 1] == cell_start[i] {
            cell_end[i + 1]
        } else {
            i + 1
        };
    }
    let mut order = vec![usize::MAX; n];
    let mut used = 0u16;
    let mut best = 0u64;
    search(
        0,
        n,
        adj,
        &inv,
        &cell_start,
        &cell_end,
        &mut order,
        &mut used,
        0,
        &mut best,
    );
    best
}

#[allow(clippy::too_many_arguments)]
fn search(
    pos: usize,
    n: usize,
    adj: &[u16],
    inv: &[(u32, Vec<u32>, usize)],
    cell_start: &[usize],
    cell_end: &[usize],
    order: &mut [usize],
    used: &mut u16,
    code: u64,
    best: &mut u64,
) {
    if pos == n {
        *best = (*best).max(code);
        return;
    }
    for &(_, _, v) in &inv[cell_start[pos]..cell_end[pos]] {
        if *used >> v & 1 == 1 {
            continue;
        }
        // Append the bits for pairs (i, pos), i < pos.
        let mut c = code;
        for &u in &order[..pos] {
            c = c << 1 | u64::from(adj[u] >> v & 1);
        }
        order[pos] = v;
        *used |= 1 << v;
        search(pos + 1, n, adj, inv, cell_start, cell_end, order, used, c, best);
        *used &= !(1 << v);
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in a deterministic order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CORPUS_ORDER);
    if n == 0 {
        return Vec::new();
    }
    let mut layer: BTreeMap<u64, Vec<u16>> = BTreeMap::new();
    layer.insert(0, vec![0]);
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for adj in layer.values() {
            for mask in 1u16..(1 << (m - 1)) {
                let mut grown = adj.clone();
                for (w, a) in grown.iter_mut().enumerate() {
                    if mask >> w & 1 == 1 {
                        *a |= 1 << (m - 1);
                    }
                }
                grown.push(mask);
                next.entry(code_of(m, &grown)).or_insert(grown);
            }
        }
        layer = next;
    }
    layer
        .values()
        .map(|adj| {
            let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
            Graph::from_edges(n, edges).expect("enumerated graph is valid")
        })
        .collect()
}

/// Concatenation of [`connected_graphs`] for `1..=max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}
