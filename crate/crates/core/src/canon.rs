//! Canonical keys for isomorphism-free bookkeeping.
//!
//! A graph is split into connected components. Each non-trivial component is
//! canonically labelled by an individualisation-refinement search: colour
//! refinement to an equitable partition, then branching on the first
//! non-singleton cell. Branches that differ only by swapping twin vertices
//! (identical open or closed neighbourhoods) are skipped, since the swap is an
//! automorphism fixing the current partition. The best leaf certificate (the
//! packed upper triangle of the relabelled adjacency matrix, maximised) labels
//! the component. Components are then concatenated in descending certificate
//! order.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest connected component the exact canonical form accepts.
pub const EXACT_CANON_CAP: usize = 16;

/// Label-invariant identifier: equal keys iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// Canonical key together with the labelling that realises it.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub key: CanonicalKey,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl Canonical {
    /// The canonically relabelled graph.
    pub fn graph(&self, g: &Graph) -> Graph {
        g.relabeled(&self.labeling)
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_form(g).map(|c| c.key)
}

/// Canonical labelling of `g`.
///
/// Fails when a connected component has more than [`EXACT_CANON_CAP`]
/// vertices; such graphs must be compared with [`invariant_hash`] plus an
/// explicit [`are_isomorphic`] check.
pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let comps = g.components();
    let mut pieces: Vec<(usize, u128, Vec<usize>)> = Vec::with_capacity(comps.len());
    for comp in &comps {
        if comp.len() > EXACT_CANON_CAP {
            return Err(Error::OverCap {
                what: "component size for exact canonical form (use invariant_hash + are_isomorphic)",
                size: comp.len(),
                cap: EXACT_CANON_CAP,
            });
        }
        let (cert, order) = component_canon(g, comp);
        pieces.push((comp.len(), cert, order));
    }
    pieces.sort_by_key(|p| std::cmp::Reverse((p.0, p.1)));

    let mut labeling = vec![0; g.order()];
    let mut next = 0;
    let mut key = Vec::with_capacity(8 + pieces.len() * 17);
    key.extend_from_slice(&(g.order() as u32).to_be_bytes());
    key.extend_from_slice(&(g.edge_count() as u32).to_be_bytes());
    for (size, cert, order) in &pieces {
        for &v in order {
            labeling[v] = next;
            next += 1;
        }
        if *size > 1 {
            key.push(*size as u8);
            let nbytes = (size * (size - 1) / 2).div_ceil(8);
            key.extend_from_slice(&cert.to_be_bytes()[16 - nbytes..]);
        }
    }
    Ok(Canonical {
        key: CanonicalKey(key),
        labeling,
    })
}

/// Canonically labels one connected component. Returns the certificate and
/// the component's vertices in canonical order.
fn component_canon(g: &Graph, comp: &[usize]) -> (u128, Vec<usize>) {
    let k = comp.len();
    if k == 1 {
        return (0, comp.to_vec());
    }
    let mut adj = vec![0u32; k];
    for (i, &u) in comp.iter().enumerate() {
        for (j, &v) in comp.iter().enumerate() {
            if g.has_edge(u, v) {
                adj[i] |= 1 << j;
            }
        }
    }
    let twin: Vec<usize> = (0..k)
        .map(|v| {
            (0..k)
                .find(|&u| adj[u] == adj[v] || (adj[u] | 1 << u) == (adj[v] | 1 << v))
                .unwrap()
        })
        .collect();
    let mut search = Search {
        adj: &adj,
        twin: &twin,
        best: None,
    };
    search.descend(vec![0u8; k]);
    let (cert, lab) = search.best.unwrap();
    (cert, lab.into_iter().map(|i| comp[i]).collect())
}

struct Search<'a> {
    adj: &'a [u32],
    twin: &'a [usize],
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u8>) {
        let k = colors.len();
        let ncol = refine(self.adj, &mut colors);
        if ncol == k {
            let mut lab = vec![0; k];
            for (v, &c) in colors.iter().enumerate() {
                lab[c as usize] = v;
            }
            let cert = certificate(self.adj, &lab);
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert, lab));
            }
            return;
        }
        let mut sizes = vec![0usize; ncol];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u8;
        let mut tried: u32 = 0;
        for v in 0..k {
            if colors[v] != target || tried & (1 << self.twin[v]) != 0 {
                continue;
            }
            tried |= 1 << self.twin[v];
            let child = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > target || (c == target && u != v) { c + 1 } else { c })
                .collect();
            self.descend(child);
        }
    }
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
/// Colours stay dense and order-compatible with the input. Returns the number
/// of cells.
fn refine(adj: &[u32], colors: &mut [u8]) -> usize {
    let k = colors.len();
    let mut ncol = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    loop {
        let mut sigs: Vec<(u8, [u8; EXACT_CANON_CAP], usize)> = (0..k)
            .map(|v| {
                let mut counts = [0u8; EXACT_CANON_CAP];
                let mut row = adj[v];
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    row &= row - 1;
                    counts[colors[u] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0u8;
        for i in 0..k {
            if i > 0 && (sigs[i].0, sigs[i].1) != (sigs[i - 1].0, sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let new_ncol = next as usize + 1;
        if new_ncol == ncol {
            return ncol;
        }
        ncol = new_ncol;
    }
}

fn certificate(adj: &[u32], lab: &[usize]) -> u128 {
    let k = lab.len();
    let mut cert = 0u128;
    for i in 0..k {
        let row = adj[lab[i]];
        for &w in &lab[i + 1..] {
            cert = (cert << 1) | ((row >> w) & 1) as u128;
        }
    }
    cert
}

/// Isomorphism-invariant hash with no size cap (colour-refinement summary).
/// Equal graphs up to isomorphism always hash equal; collisions are possible.
pub fn invariant_hash(g: &Graph) -> u64 {
    let n = g.order();
    let mut colors: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
    for _ in 0..n.min(8) {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                let mut h = DefaultHasher::new();
                (colors[v], nb).hash(&mut h);
                h.finish()
            })
            .collect();
        colors = next;
    }
    colors.sort_unstable();
    let mut h = DefaultHasher::new();
    (n, g.edge_count(), colors).hash(&mut h);
    h.finish()
}

/// Exact isomorphism test with no size cap: backtracking bijection search
/// over degree-compatible candidates.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    if let (Ok(a), Ok(b)) = (canonical_key(g), canonical_key(h)) {
        return a == b;
    }
    // An injective homomorphism between graphs of equal order and size is an isomorphism.
    crate::forbidden::embed_unbounded(h, g).is_some()
}
