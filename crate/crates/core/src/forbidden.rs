//! Subgraph containment, colouring invariants and the `A_F` / `M_F` families.

use std::collections::HashMap;

use serde::{Serialize, Serializer};

use crate::bits;
use crate::canon::canonical_key;
use crate::error::{check_cap, invalid, Error, Result};
use crate::graph::Graph;
use crate::Ratio;

/// Largest pattern accepted by the containment and colouring routines.
pub const PATTERN_CAP: usize = 16;
/// Largest graph accepted by [`independence_number`].
pub const ALPHA_CAP: usize = 20;
/// Largest order searched exhaustively by [`m_f_maximizer`].
pub const MAXIMIZER_ORDER_CAP: usize = 8;

/// True iff `f` is a (not necessarily induced) subgraph of `g`.
/// Isolated pattern vertices still need distinct host vertices.
pub fn contains_subgraph(g: &Graph, f: &Graph) -> Result<bool> {
    Ok(find_embedding(g, f)?.is_some())
}

/// An injective edge-preserving map `V(f) -> V(g)`, if one exists.
pub fn find_embedding(g: &Graph, f: &Graph) -> Result<Option<Vec<usize>>> {
    check_cap("pattern vertex count", f.order(), PATTERN_CAP)?;
    Ok(embed_unbounded(f, g))
}

/// Embedding search without the pattern cap.
pub(crate) fn embed_unbounded(f: &Graph, g: &Graph) -> Option<Vec<usize>> {
    if f.order() > g.order() || f.edge_count() > g.edge_count() {
        return None;
    }
    let fdeg = f.degrees();
    let hdeg = g.degrees();
    let mut fd: Vec<usize> = fdeg.iter().copied().filter(|&d| d > 0).collect();
    let mut hd = hdeg.clone();
    fd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    if fd.iter().zip(&hd).any(|(a, b)| a > b) {
        return None;
    }

    let order = search_order(f, &fdeg);
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| f.neighbors(v).filter_map(|u| pos.get(&u).copied()).filter(|&j| j < i).collect())
        .collect();
    let (open_id, closed_id) = twin_classes(g);
    let stride = bits::words_for(g.order()).max(1);
    let mut e = Embedder {
        host: g,
        hdeg,
        open_id,
        closed_id,
        pdeg: order.iter().map(|&v| fdeg[v]).collect(),
        back,
        map: vec![0; order.len()],
        used: vec![0; stride],
        all: all_mask(g.order(), stride),
    };
    if !e.search(0) {
        return None;
    }
    let mut out = vec![usize::MAX; f.order()];
    for (i, &v) in order.iter().enumerate() {
        out[v] = e.map[i];
    }
    let mut free = bits::iter_ones(&e.used).collect::<Vec<_>>();
    free.sort_unstable();
    let mut spare = (0..g.order()).filter(|w| free.binary_search(w).is_err());
    for slot in out.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = spare.next().expect("order check guarantees room");
    }
    Some(out)
}

fn all_mask(n: usize, stride: usize) -> Vec<u64> {
    let mut m = vec![0u64; stride];
    for (i, w) in m.iter_mut().enumerate() {
        *w = bits::low_mask(n.saturating_sub(i * 64));
    }
    m
}

/// Non-isolated pattern vertices, each next vertex having the most
/// already-placed neighbours (ties: higher degree, then lower label).
fn search_order(f: &Graph, deg: &[usize]) -> Vec<usize> {
    let n = f.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::new();
    let total = deg.iter().filter(|&&d| d > 0).count();
    while order.len() < total {
        let v = (0..n)
            .filter(|&v| !placed[v] && deg[v] > 0)
            .max_by(|&a, &b| (links[a], deg[a], std::cmp::Reverse(a)).cmp(&(links[b], deg[b], std::cmp::Reverse(b))))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for u in f.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}

/// Open-twin and closed-twin class representatives. Swapping two unused twins
/// is an automorphism fixing every other vertex, so only one per class needs
/// to be tried at a search node.
fn twin_classes(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    if n > 2048 {
        return ((0..n).collect(), (0..n).collect());
    }
    let mut open: HashMap<&[u64], usize> = HashMap::new();
    let mut closed: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut open_id = Vec::with_capacity(n);
    let mut closed_id = Vec::with_capacity(n);
    for v in 0..n {
        open_id.push(*open.entry(g.row(v)).or_insert(v));
        let mut row = g.row(v).to_vec();
        bits::set(&mut row, v);
        closed_id.push(*closed.entry(row).or_insert(v));
    }
    (open_id, closed_id)
}

struct Embedder<'a> {
    host: &'a Graph,
    hdeg: Vec<usize>,
    open_id: Vec<usize>,
    closed_id: Vec<usize>,
    pdeg: Vec<usize>,
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<u64>,
    all: Vec<u64>,
}

impl Embedder<'_> {
    fn search(&mut self, i: usize) -> bool {
        if i == self.map.len() {
            return true;
        }
        let mut cand = self.all.clone();
        for &j in &self.back[i] {
            for (c, &r) in cand.iter_mut().zip(self.host.row(self.map[j])) {
                *c &= r;
            }
        }
        for (c, &u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let n = self.host.order();
        let mut tried: Vec<usize> = Vec::new();
        for w in bits::iter_ones(&cand).collect::<Vec<_>>() {
            if self.hdeg[w] < self.pdeg[i] {
                continue;
            }
            let (o, c) = (self.open_id[w], n + self.closed_id[w]);
            if tried.contains(&o) || tried.contains(&c) {
                continue;
            }
            tried.push(o);
            tried.push(c);
            self.map[i] = w;
            bits::set(&mut self.used, w);
            if self.search(i + 1) {
                return true;
            }
            bits::clear(&mut self.used, w);
        }
        false
    }
}

/// Adjacency rows as `u64` masks; callers guarantee `n <= 64`.
fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.row64(v)).collect()
}

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// k-colourability backtracking for every k in between.
pub fn chromatic_number(f: &Graph) -> Result<usize> {
    check_cap("vertex count for chromatic number", f.order(), PATTERN_CAP)?;
    Ok(chromatic_masks(&masks(f)))
}

fn chromatic_masks(adj: &[u64]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let lower = max_clique(adj, bits::low_mask(n));
    let upper = dsatur(adj);
    for k in lower..upper {
        if colorable(adj, k) {
            return k;
        }
    }
    upper
}

fn max_clique(adj: &[u64], within: u64) -> usize {
    fn grow(adj: &[u64], size: usize, mut p: u64, best: &mut usize) {
        if p == 0 {
            *best = (*best).max(size);
            return;
        }
        while p != 0 {
            if size + p.count_ones() as usize <= *best {
                return;
            }
            let v = p.trailing_zeros() as usize;
            p &= p - 1;
            grow(adj, size + 1, p & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, within, &mut best);
    best
}

fn dsatur(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let sat = |v: usize| {
            bits::ones64(adj[v])
                .filter(|&u| color[u] != usize::MAX)
                .fold(0u64, |m, u| m | 1 << color[u])
                .count_ones()
        };
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat(v), adj[v].count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let taken = bits::ones64(adj[v])
            .filter(|&u| color[u] != usize::MAX)
            .fold(0u64, |m, u| m | 1 << color[u]);
        let c = (!taken).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(adj: &[u64], k: usize) -> bool {
    let n = adj.len();
    if k == 0 {
        return n == 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut class = vec![0u64; k];
    fn go(adj: &[u64], order: &[usize], i: usize, class: &mut [u64], used: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(class.len());
        for c in 0..limit {
            if class[c] & adj[v] == 0 {
                class[c] |= 1 << v;
                if go(adj, order, i + 1, class, used.max(c + 1)) {
                    return true;
                }
                class[c] &= !(1 << v);
            }
        }
        false
    }
    go(adj, &order, 0, &mut class, 0)
}

/// True iff deleting some edge lowers the chromatic number.
pub fn is_color_critical(f: &Graph) -> Result<bool> {
    if f.edge_count() == 0 {
        return invalid("color-criticality needs at least one edge");
    }
    let chi = chromatic_number(f)?;
    let adj = masks(f);
    Ok(f.edges().into_iter().any(|(u, v)| {
        let mut a = adj.clone();
        a[u] &= !(1 << v);
        a[v] &= !(1 << u);
        chromatic_masks(&a) < chi
    }))
}

/// Bipartite, or bipartite after deleting one edge.
pub fn is_almost_bipartite(f: &Graph) -> Result<bool> {
    check_cap("vertex count", f.order(), PATTERN_CAP)?;
    if f.is_bipartite() {
        return Ok(true);
    }
    Ok(f.edges().into_iter().any(|(u, v)| {
        let mut h = f.clone();
        h.remove_edge(u, v);
        h.is_bipartite()
    }))
}

/// `K_{1,t}` for some `t >= 1`: connected, a tree, one vertex adjacent to all others.
pub fn is_star(f: &Graph) -> bool {
    let n = f.order();
    n >= 2 && f.edge_count() == n - 1 && f.max_degree() == n - 1
}

pub fn independence_number(f: &Graph) -> Result<usize> {
    check_cap("vertex count for independence number", f.order(), ALPHA_CAP)?;
    let comp = masks(&f.complement());
    Ok(max_clique(&comp, bits::low_mask(f.order())))
}

/// Minimum colour-class size over proper 2-colourings: each component
/// contributes its smaller side, isolated vertices nothing.
pub fn color_surplus(f: &Graph) -> Result<usize> {
    if f.edge_count() == 0 {
        return invalid("color surplus needs at least one edge");
    }
    let coloring = f.two_coloring().ok_or(Error::NotBipartite("sigma undefined"))?;
    Ok(f.components()
        .iter()
        .map(|c| {
            let a = c.iter().filter(|&&v| coloring[v]).count();
            a.min(c.len() - a)
        })
        .sum())
}

/// All inclusion-maximal independent sets, each sorted, in lexicographic order.
pub fn maximal_independent_sets(f: &Graph) -> Result<Vec<Vec<usize>>> {
    check_cap("vertex count", f.order(), PATTERN_CAP)?;
    let n = f.order();
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let comp = masks(&f.complement());
    let mut out = Vec::new();
    bron_kerbosch(&comp, 0, bits::low_mask(n), 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out.into_iter().map(|m| bits::ones64(m).collect()).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits::ones64(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .unwrap();
    for v in bits::ones64(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// `A_F`: graphs induced by complements of maximal independent sets, up to
/// isomorphism, ordered by canonical key.
pub fn a_family(f: &Graph) -> Result<Vec<Graph>> {
    let n = f.order();
    let mut seen = std::collections::BTreeMap::new();
    for set in maximal_independent_sets(f)? {
        let rest: Vec<usize> = (0..n).filter(|v| set.binary_search(v).is_err()).collect();
        let h = f.induced(&rest);
        seen.entry(canonical_key(&h)?).or_insert(h);
    }
    Ok(seen.into_values().collect())
}

/// Membership oracle for `M_F`.
#[derive(Clone, Debug)]
pub struct MFamily {
    members: Vec<Graph>,
}

impl MFamily {
    pub fn of(f: &Graph) -> Result<MFamily> {
        Ok(MFamily { members: a_family(f)? })
    }

    /// The `A_F` members this oracle forbids.
    pub fn forbidden(&self) -> &[Graph] {
        &self.members
    }

    /// True iff `h` contains no member of `A_F`.
    pub fn contains(&self, h: &Graph) -> bool {
        self.members.iter().all(|a| embed_unbounded(a, h).is_none())
    }

    /// Every graph in `M_F` has fewer vertices than this.
    pub fn order_bound(&self, f: &Graph) -> usize {
        self.members
            .iter()
            .filter(|a| a.is_edgeless())
            .map(Graph::order)
            .fold(f.order(), usize::min)
    }
}

pub fn in_m_family(h: &Graph, f: &Graph) -> Result<bool> {
    Ok(MFamily::of(f)?.contains(h))
}

/// Graphs in `M_F` maximising `e(M)/v(M)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Maximizer {
    pub graphs: Vec<Graph>,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: Ratio,
}

pub fn ser_ratio<S: Serializer>(r: &Ratio, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}

/// `p/q` in lowest terms.
pub fn format_ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Requires `f` almost-bipartite and not a star.
pub fn check_theorem_scope(f: &Graph) -> Result<()> {
    if f.edge_count() == 0 {
        return Err(Error::OutOfScope("forbidden graph has no edges".into()));
    }
    if is_star(f) {
        return Err(Error::OutOfScope("forbidden graph is a star".into()));
    }
    if !is_almost_bipartite(f)? {
        return Err(Error::OutOfScope("forbidden graph is not almost-bipartite".into()));
    }
    Ok(())
}

/// Exhaustive `max e(M)/v(M)` over non-empty `M ∈ M_F`. Members of `M_F`
/// have fewer than `|F|` vertices, and fewer than `s` when `sK_1 ∈ A_F`;
/// that order bound must not exceed [`MAXIMIZER_ORDER_CAP`].
/// Returns `None` when every member of `M_F` is edgeless.
pub fn m_f_maximizer(f: &Graph) -> Result<Option<Maximizer>> {
    check_theorem_scope(f)?;
    let fam = MFamily::of(f)?;
    let bound = fam.order_bound(f);
    check_cap("order searched for the M_F maximizer", bound.saturating_sub(1), MAXIMIZER_ORDER_CAP)?;
    let mut best: Option<Maximizer> = None;
    for n in 2..bound {
        for h in crate::search::enumerate_by_order(n, 1)? {
            if h.edge_count() == 0 || !fam.contains(&h) {
                continue;
            }
            let r = Ratio::new(h.edge_count() as u64, n as u64);
            match &mut best {
                Some(b) if r < b.ratio => {}
                Some(b) if r == b.ratio => b.graphs.push(h),
                _ => {
                    best = Some(Maximizer {
                        graphs: vec![h],
                        ratio: r,
                    })
                }
            }
        }
    }
    if let Some(b) = &mut best {
        b.graphs.sort_by_cached_key(|g| canonical_key(g).expect("small graph"));
    }
    Ok(best)
}

/// Summary of a forbidden graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ForbiddenProfile {
    pub chromatic: usize,
    pub color_critical: bool,
    pub almost_bipartite: bool,
    pub alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<usize>,
    pub a_family: Vec<Graph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_maximizer: Option<Maximizer>,
}

/// Computes every profile field; the maximizer only when `f` is in scope
/// and small enough for the exhaustive search.
pub fn profile(f: &Graph) -> Result<ForbiddenProfile> {
    let chromatic = chromatic_number(f)?;
    let color_critical = f.edge_count() > 0 && is_color_critical(f)?;
    let almost_bipartite = is_almost_bipartite(f)?;
    let sigma = if f.edge_count() > 0 && chromatic <= 2 {
        Some(color_surplus(f)?)
    } else {
        None
    };
    let m_maximizer = match m_f_maximizer(f) {
        Ok(m) => m,
        Err(Error::OutOfScope(_)) | Err(Error::OverCap { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ForbiddenProfile {
        chromatic,
        color_critical,
        almost_bipartite,
        alpha: independence_number(f)?,
        sigma,
        a_family: a_family(f)?,
        m_maximizer,
    })
}
