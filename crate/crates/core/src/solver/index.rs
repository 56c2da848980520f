//! Ranking of sorted cop multisets (combinatorial number system).
//!
//! A non-decreasing tuple `c_0 <= .. <= c_{k-1}` over `0..n` maps to the
//! strictly increasing `b_i = c_i + i` over `0..n+k-1`, ranked as
//! `sum C(b_i, i + 1)`. Ranks are dense in `0..C(n+k-1, k)`.

use crate::graph::Vertex;

#[derive(Clone, Debug)]
pub struct MultisetIndex {
    n: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
    count: u64,
}

impl MultisetIndex {
    pub fn new(n: usize, k: usize) -> Self {
        let top = n + k;
        let mut binom = vec![vec![0u64; k + 2]; top + 1];
        for row in binom.iter_mut() {
            row[0] = 1;
        }
        for a in 1..=top {
            for b in 1..=k + 1 {
                binom[a][b] = binom[a - 1][b - 1].saturating_add(binom[a - 1][b]);
            }
        }
        let count = if n == 0 { 0 } else { binom[n + k - 1][k] };
        MultisetIndex { n, k, binom, count }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of multisets of size `k` over `n` vertices.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Rank of a sorted tuple.
    #[inline]
    pub fn rank(&self, sorted: &[Vertex]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c + i][i + 1])
            .sum::<u64>() as usize
    }

    pub fn unrank(&self, rank: usize) -> Vec<Vertex> {
        let mut out = vec![0; self.k];
        self.unrank_into(rank, &mut out);
        out
    }

    pub fn unrank_into(&self, rank: usize, out: &mut [Vertex]) {
        let mut rem = rank as u64;
        let mut hi = self.n + self.k - 1;
        for i in (0..self.k).rev() {
            // largest b < hi with C(b, i+1) <= rem
            let mut b = hi;
            while b > 0 && self.binom[b - 1][i + 1] > rem {
                b -= 1;
            }
            let b = b - 1;
            rem -= self.binom[b][i + 1];
            out[i] = b - i;
            hi = b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ranks_are_dense_and_inverse() {
        for n in 1..7 {
            for k in 1..5 {
                let idx = MultisetIndex::new(n, k);
                let mut seen = vec![false; idx.count() as usize];
                // enumerate multisets directly
                let mut tuple = vec![0usize; k];
                loop {
                    let r = idx.rank(&tuple);
                    assert!(!seen[r]);
                    seen[r] = true;
                    assert_eq!(idx.unrank(r), tuple);
                    // next non-decreasing tuple
                    let mut i = k;
                    while i > 0 && tuple[i - 1] == n - 1 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    tuple[i - 1] += 1;
                    let v = tuple[i - 1];
                    for t in &mut tuple[i..] {
                        *t = v;
                    }
                }
                assert!(seen.iter().all(|&s| s));
            }
        }
    }

    proptest! {
        #[test]
        fn unrank_rank_round_trip(n in 1usize..40, k in 1usize..5, seed in any::<u64>()) {
            let idx = MultisetIndex::new(n, k);
            let r = (seed % idx.count()) as usize;
            prop_assert_eq!(idx.rank(&idx.unrank(r)), r);
        }
    }
}
