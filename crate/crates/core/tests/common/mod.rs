//! Test-only generators and brute-force oracles. Nothing here calls into the
//! distance code under test.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use dbclosure::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled graph on `n` vertices, one per subset of the `C(n,2)` pairs.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edge_list(
            n,
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}

pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Connected G(n, p) sample: a random spanning tree plus independent extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = gnp(rng, n, p);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).unwrap();
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random `r`-regular graph: a circulant graph scrambled by degree-preserving
/// double-edge swaps.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, r: usize) -> Graph {
    assert!(r < n && n * r % 2 == 0);
    let mut g = Graph::empty(n).unwrap();
    for i in 0..n {
        for s in 1..=r / 2 {
            g.add_edge(i, (i + s) % n).unwrap();
        }
        if r % 2 == 1 {
            g.add_edge(i, (i + n / 2) % n).unwrap();
        }
    }
    for _ in 0..20 * n * r {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let (c, d) = edges[rng.gen_range(0..edges.len())];
        let (c, d) = if rng.gen_bool(0.5) { (c, d) } else { (d, c) };
        if [a, b].contains(&c) || [a, b].contains(&d) || g.has_edge(a, c) || g.has_edge(b, d) {
            continue;
        }
        g.remove_edge(a, b).unwrap();
        g.remove_edge(c, d).unwrap();
        g.add_edge(a, c).unwrap();
        g.add_edge(b, d).unwrap();
    }
    g
}

/// Floyd–Warshall distances; `u32::MAX` marks unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Distance-balance decided from Floyd–Warshall distances.
pub fn oracle_distance_balanced(g: &Graph) -> bool {
    let d = floyd_warshall(g);
    g.edges().all(|(x, y)| {
        let cx = (0..g.n()).filter(|&u| d[u][x] < d[u][y]).count();
        let cy = (0..g.n()).filter(|&u| d[u][y] < d[u][x]).count();
        cx == cy
    })
}

pub fn oracle_diameter(g: &Graph) -> u32 {
    floyd_warshall(g).into_iter().flatten().max().unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Exhaustive isomorphism test; fine for `n <= 8`.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    permutations(a.n()).into_iter().any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_edge_list(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)))).unwrap()
}

/// Triangular prism `C_3 x K_2`.
pub fn prism() -> Graph {
    Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        .unwrap()
}

fn ahu(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> =
        t.neighbors(v).filter(|&u| Some(u) != parent).map(|u| ahu(t, u, Some(v))).collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical string of an unlabelled tree, rooted at its center(s).
pub fn tree_canonical_form(t: &Graph) -> String {
    let n = t.n();
    let mut degree = t.degrees();
    let mut removed = vec![false; n];
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        let mut next = Vec::new();
        for &l in &leaves {
            removed[l] = true;
            left -= 1;
            for u in t.neighbors(l) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    (0..n).filter(|&v| !removed[v]).map(|c| ahu(t, c, None)).min().unwrap()
}

/// One representative of every unlabelled tree on `n` vertices.
pub fn unlabeled_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let g = Graph::from_edge_list(size, t.edges().chain([(v, size - 1)])).unwrap();
                if seen.insert(tree_canonical_form(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

pub fn with_edges(g: &Graph, extra: &[(usize, usize)]) -> Graph {
    let mut h = g.clone();
    for &(u, v) in extra {
        h.add_edge(u, v).unwrap();
    }
    h
}
