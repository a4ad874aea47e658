#![allow(dead_code)]

use proptest::prelude::*;
use stl_core::Graph;

/// Random labelled graph on `0..=max_n` vertices with edge density `p`.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
    })
}

/// Random graph on exactly `n` vertices.
pub fn arb_graph_on(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| from_bits(n, &bits))
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Plain backtracking isomorphism test, independent of the canonical form.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if rec(g, h, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    rec(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// Isomorphism classes of isolated-vertex-free graphs with `m` edges, grown
/// edge by edge and deduplicated with [`brute_isomorphic`].
pub fn brute_classes(m: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for _ in 0..m {
        let mut next: Vec<Graph> = Vec::new();
        for g in &level {
            let n = g.order();
            let mut cands = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut c = g.clone();
                        c.add_edge(u, v);
                        cands.push(c);
                    }
                }
                let mut c = g.with_isolated(1).unwrap();
                c.add_edge(u, n);
                cands.push(c);
            }
            let mut c = g.with_isolated(2).unwrap();
            c.add_edge(n, n + 1);
            cands.push(c);
            for c in cands {
                if !next.iter().any(|h| brute_isomorphic(h, &c)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level
}

/// All graphs on exactly `n` vertices up to isomorphism, by brute force.
pub fn brute_by_order(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out: Vec<Graph> = Vec::new();
    for mask in 0u64..(1u64 << pairs) {
        let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
        let g = from_bits(n, &bits);
        if !out.iter().any(|h| brute_isomorphic(h, &g)) {
            out.push(g);
        }
    }
    out
}

/// Chromatic number by trying every colouring with `k = 1, 2, ..` colours.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut col = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| col[u] != col[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && col[i] == k - 1 {
                col[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            col[i] += 1;
        }
    }
    n
}

/// Smallest colour class over all proper 2-colourings, by subset enumeration.
pub fn brute_sigma(g: &Graph) -> Option<usize> {
    let n = g.order();
    let edges = g.edges();
    (0u32..1 << n)
        .filter(|&s| edges.iter().all(|&(u, v)| (s >> u & 1) != (s >> v & 1)))
        .map(|s| {
            let c = s.count_ones() as usize;
            c.min(n - c)
        })
        .min()
}

/// Independence number by subset enumeration.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    let edges = g.edges();
    (0u32..1 << n)
        .filter(|&s| edges.iter().all(|&(u, v)| !(s >> u & 1 == 1 && s >> v & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Rayleigh-quotient power iteration on `A + nI`, a slow reference for `λ₁`.
pub fn power_lambda(g: &Graph) -> f64 {
    let n = g.order();
    if g.edge_count() == 0 {
        return 0.0;
    }
    let shift = n as f64;
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..200_000 {
        let mut y: Vec<f64> = (0..n)
            .map(|v| shift * x[v] + g.neighbors(v).map(|u| x[u]).sum::<f64>())
            .collect();
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        y.iter_mut().for_each(|a| *a /= norm);
        let next: f64 = (0..n)
            .map(|v| y[v] * g.neighbors(v).map(|u| y[u]).sum::<f64>())
            .sum();
        let done = (next - lambda).abs() < 1e-15;
        lambda = next;
        x = y;
        if done {
            break;
        }
    }
    lambda
}
