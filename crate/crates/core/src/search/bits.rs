//! Distance-balance test on `u64` adjacency rows (`n <= 64`).
//!
//! BFS layers are kept as bit masks. For an edge `xy`, a vertex at distance
//! `i` from `x` is at distance `i - 1`, `i` or `i + 1` from `y`, so
//! `|W_xy| = sum_i popcount(L_x[i] & L_y[i + 1])`.

pub(crate) struct BalanceChecker {
    n: usize,
    layers: Vec<u64>,
    /// Number of BFS layers per source; 0 means not yet computed.
    depth: Vec<usize>,
}

impl BalanceChecker {
    pub(crate) fn new(n: usize) -> Self {
        debug_assert!(n <= 64);
        Self { n, layers: vec![0; n * n], depth: vec![0; n] }
    }

    /// Whether the connected graph given by `adj` is distance-balanced.
    pub(crate) fn is_distance_balanced(&mut self, adj: &[u64]) -> bool {
        debug_assert_eq!(adj.len(), self.n);
        self.depth.iter_mut().for_each(|d| *d = 0);
        for x in 0..self.n {
            let mut higher = adj[x] & !((2u64 << x).wrapping_sub(1));
            if higher == 0 {
                continue;
            }
            self.ensure(adj, x);
            while higher != 0 {
                let y = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                self.ensure(adj, y);
                if self.closer(x, y) != self.closer(y, x) {
                    return false;
                }
            }
        }
        true
    }

    fn ensure(&mut self, adj: &[u64], s: usize) {
        if self.depth[s] != 0 {
            return;
        }
        let base = s * self.n;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            self.layers[base + d] = frontier;
            d += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        debug_assert_eq!(seen.count_ones() as usize, self.n, "graph must be connected");
        self.depth[s] = d;
    }

    #[inline]
    fn closer(&self, x: usize, y: usize) -> u32 {
        let lx = &self.layers[x * self.n..x * self.n + self.depth[x]];
        let ly = &self.layers[y * self.n + 1..y * self.n + self.depth[y]];
        lx.iter().zip(ly).map(|(a, b)| (a & b).count_ones()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::is_distance_balanced;
    use crate::graph::Graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_graphs() {
        let mut c = BalanceChecker::new(6);
        assert!(c.is_distance_balanced(&Graph::cycle(6).unwrap().to_bit_rows().unwrap()));
        assert!(c.is_distance_balanced(&Graph::complete(6).unwrap().to_bit_rows().unwrap()));
        assert!(!c.is_distance_balanced(&Graph::path(6).unwrap().to_bit_rows().unwrap()));
        let mut one = BalanceChecker::new(1);
        assert!(one.is_distance_balanced(&[0]));
    }

    #[test]
    fn agrees_with_distance_matrix_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 2000 {
            let n = rng.gen_range(2..=16);
            let p: f64 = rng.gen_range(0.15..0.9);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            let mut c = BalanceChecker::new(n);
            assert_eq!(
                c.is_distance_balanced(&g.to_bit_rows().unwrap()),
                is_distance_balanced(&g).unwrap(),
                "{g:?}"
            );
            checked += 1;
        }
    }

    #[test]
    fn full_width_rows() {
        let g = Graph::cycle(64).unwrap();
        let mut c = BalanceChecker::new(64);
        assert!(c.is_distance_balanced(&g.to_bit_rows().unwrap()));
        let mut p = g.clone();
        p.add_edge(0, 32).unwrap();
        assert_eq!(c.is_distance_balanced(&p.to_bit_rows().unwrap()), is_distance_balanced(&p).unwrap());
    }
}
