//! Isomorph-free enumeration and exhaustive spectral extremal search.
//!
//! Enumeration uses canonical augmentation. A child `C` of a parent `P` is
//! kept only when deleting the canonically chosen edge (or vertex) of `C`
//! gives back a graph isomorphic to `P`; children of one parent are then
//! deduplicated by canonical key. Each isomorphism class is thereby produced
//! by exactly one parent, so memory stays proportional to one level.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::error::{check_cap, invalid, Error, Result};
use crate::forbidden::{
    check_theorem_scope, color_surplus, contains_subgraph, independence_number, m_f_maximizer,
    MFamily,
};
use crate::generators::{complete, complete_multipartite, family, split_graph, FamilyTag};
use crate::graph::Graph;
use crate::spectral::{Adjacency, SparseGraph, SpectralResult, SpectralSolver};
use crate::Ratio;

/// Largest edge count accepted by [`enumerate_graphs`].
pub const ENUM_EDGE_CAP: usize = 12;
/// Largest vertex count accepted by [`enumerate_by_order`].
pub const ENUM_ORDER_CAP: usize = 9;
/// A graph is a maximizer iff `λ >= maxLambda - EQ_TOL`.
pub const EQ_TOL: f64 = 1e-8;

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return invalid("workers must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// One representative per isomorphism class of graphs with `m` edges and no
/// isolated vertices, ordered by canonical key.
pub fn enumerate_graphs(m: usize, workers: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(m, workers)?.pop().unwrap())
}

/// Levels `0..=m_max` of [`enumerate_graphs`].
pub fn enumerate_up_to(m_max: usize, workers: usize) -> Result<Vec<Vec<Graph>>> {
    check_cap("edge count for enumeration", m_max, ENUM_EDGE_CAP)?;
    let pool = pool(workers)?;
    let mut level: Vec<(CanonicalKey, Graph)> = vec![(canonical_key(&Graph::empty(0))?, Graph::empty(0))];
    let mut out = vec![vec![Graph::empty(0)]];
    for _ in 1..=m_max {
        let mut next: Vec<(CanonicalKey, Graph)> = pool.install(|| {
            level
                .par_iter()
                .flat_map_iter(|(key, p)| edge_children(key, p))
                .collect()
        });
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        out.push(next.iter().map(|(_, g)| g.clone()).collect());
        level = next;
    }
    Ok(out)
}

fn edge_invariant(g: &Graph, u: usize, v: usize) -> (usize, usize) {
    let (a, b) = (g.degree(u), g.degree(v));
    (a.min(b), a.max(b))
}

/// Accepted children of `p` by one-edge augmentation.
fn edge_children(pkey: &CanonicalKey, p: &Graph) -> Vec<(CanonicalKey, Graph)> {
    let n = p.order();
    let mut cands: Vec<(Graph, (usize, usize))> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !p.has_edge(u, v) {
                let mut c = p.clone();
                c.add_edge(u, v);
                cands.push((c, (u, v)));
            }
        }
    }
    for u in 0..n {
        let mut c = p.with_isolated(1).expect("small graph");
        c.add_edge(u, n);
        cands.push((c, (u, n)));
    }
    let mut c = p.with_isolated(2).expect("small graph");
    c.add_edge(n, n + 1);
    cands.push((c, (n, n + 1)));

    let mut kept: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    for (c, (a, b)) in cands {
        let edges = c.edges();
        let best = edges.iter().map(|&(x, y)| edge_invariant(&c, x, y)).max().unwrap();
        if edge_invariant(&c, a, b) != best {
            continue;
        }
        let form = canonical_form(&c).expect("enumeration stays within canonical cap");
        if kept.contains_key(&form.key) {
            continue;
        }
        let lab = &form.labeling;
        let (x, y) = edges
            .iter()
            .copied()
            .filter(|&(x, y)| edge_invariant(&c, x, y) == best)
            .max_by_key(|&(x, y)| (lab[x].max(lab[y]), lab[x].min(lab[y])))
            .unwrap();
        let accept = if (x, y) == (a, b) {
            true
        } else {
            let mut d = c.clone();
            d.remove_edge(x, y);
            canonical_key(&d.without_isolated()).expect("small graph") == *pkey
        };
        if accept {
            kept.insert(form.key, c);
        }
    }
    kept.into_iter().collect()
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (isolated vertices allowed), ordered by canonical key.
pub fn enumerate_by_order(n: usize, workers: usize) -> Result<Vec<Graph>> {
    check_cap("vertex count for enumeration", n, ENUM_ORDER_CAP)?;
    let pool = pool(workers)?;
    let mut level = vec![(canonical_key(&Graph::empty(0))?, Graph::empty(0))];
    for _ in 0..n {
        let mut next: Vec<(CanonicalKey, Graph)> = pool.install(|| {
            level
                .par_iter()
                .flat_map_iter(|(key, p)| vertex_children(key, p))
                .collect()
        });
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

fn vertex_children(pkey: &CanonicalKey, p: &Graph) -> Vec<(CanonicalKey, Graph)> {
    let n = p.order();
    let mut kept: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let mut c = p.with_isolated(1).expect("small graph");
        for u in 0..n {
            if mask >> u & 1 == 1 {
                c.add_edge(u, n);
            }
        }
        let degs = c.degrees();
        let low = *degs.iter().min().unwrap();
        if degs[n] != low {
            continue;
        }
        let form = canonical_form(&c).expect("small graph");
        if kept.contains_key(&form.key) {
            continue;
        }
        let star = (0..=n)
            .filter(|&v| degs[v] == low)
            .max_by_key(|&v| form.labeling[v])
            .unwrap();
        let accept = star == n || {
            let rest: Vec<usize> = (0..=n).filter(|&v| v != star).collect();
            canonical_key(&c.induced(&rest)).expect("small graph") == *pkey
        };
        if accept {
            kept.insert(form.key, c);
        }
    }
    kept.into_iter().collect()
}

/// Search configuration shared by the exhaustive probes.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            tol: crate::spectral::DEFAULT_TOL,
        }
    }
}

fn spectra(graphs: &[Graph], opts: &SearchOptions) -> Result<Vec<SpectralResult<f64>>> {
    let solver = SpectralSolver::<f64>::new().with_tol(opts.tol);
    pool(opts.workers)?.install(|| graphs.par_iter().map(|g| solver.solve(g)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    BoundHolds,
    BoundViolated,
    NoBound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::BoundHolds => "bound-holds",
            Verdict::BoundViolated => "bound-violated",
            Verdict::NoBound => "no-bound",
        }
    }
}

/// A graph attaining (within [`EQ_TOL`]) the extremal value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Extremal {
    pub key: String,
    #[serde(rename = "edgeList")]
    pub graph: Graph,
    pub lambda: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchRecord {
    /// Identifier of the forbidden graph (graph6 unless set by the caller).
    pub forbidden: String,
    pub m: usize,
    /// `None` when no `m`-edge graph is `F`-free.
    pub max_lambda: Option<f64>,
    pub bound: Option<f64>,
    pub verdict: Verdict,
    pub maximizers: Vec<Extremal>,
    /// Number of `F`-free graphs among the enumerated ones.
    pub free_count: usize,
    pub total_count: usize,
}

impl SearchRecord {
    /// Attaches a theoretical upper bound and sets the verdict.
    pub fn with_bound(mut self, bound: f64) -> SearchRecord {
        self.bound = Some(bound);
        self.verdict = match self.max_lambda {
            Some(l) if l > bound + EQ_TOL => Verdict::BoundViolated,
            _ => Verdict::BoundHolds,
        };
        self
    }

    pub fn slack(&self) -> Option<f64> {
        Some(self.bound? - self.max_lambda?)
    }

    pub fn csv_header() -> &'static str {
        "forbidden,m,maxLambda,bound,slack,verdict"
    }
}

fn extremals(graphs: &[Graph], lambdas: &[f64], best: f64) -> Vec<Extremal> {
    graphs
        .iter()
        .zip(lambdas)
        .filter(|(_, &l)| l >= best - EQ_TOL)
        .map(|(g, &l)| Extremal {
            key: canonical_key(g).expect("small graph").to_hex(),
            graph: g.clone(),
            lambda: l,
        })
        .collect()
}

/// Maximum `λ₁` over `F`-free graphs with `m` edges, with every maximizer.
pub fn spectral_extremal(f: &Graph, m: usize, opts: &SearchOptions) -> Result<SearchRecord> {
    let all = enumerate_graphs(m, opts.workers)?;
    spectral_extremal_in(f, m, &all, opts)
}

fn spectral_extremal_in(f: &Graph, m: usize, all: &[Graph], opts: &SearchOptions) -> Result<SearchRecord> {
    let free = free_of(all, f, opts)?;
    let lambdas: Vec<f64> = spectra(&free, opts)?.into_iter().map(|r| r.lambda1).collect();
    let best = lambdas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let max_lambda = (!free.is_empty()).then_some(best);
    Ok(SearchRecord {
        forbidden: crate::io::to_graph6(f),
        m,
        max_lambda,
        bound: None,
        verdict: Verdict::NoBound,
        maximizers: if free.is_empty() { vec![] } else { extremals(&free, &lambdas, best) },
        free_count: free.len(),
        total_count: all.len(),
    })
}

fn free_of(all: &[Graph], f: &Graph, opts: &SearchOptions) -> Result<Vec<Graph>> {
    let flags: Vec<bool> = pool(opts.workers)?.install(|| {
        all.par_iter()
            .map(|g| contains_subgraph(g, f).map(|c| !c))
            .collect::<Result<Vec<bool>>>()
    })?;
    Ok(all.iter().zip(flags).filter(|(_, k)| *k).map(|(g, _)| g.clone()).collect())
}

/// `C_4`-free search at `m` with bound `√m`; `unique_star` reports whether
/// `K_{1,m}` is the only maximizer.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct C4Report {
    pub record: SearchRecord,
    pub unique_star: bool,
}

pub fn verify_c4(m: usize, opts: &SearchOptions) -> Result<C4Report> {
    let rec = spectral_extremal(&crate::generators::cycle(4)?, m, opts)?.with_bound((m as f64).sqrt());
    let star = canonical_key(&crate::generators::star(m))?.to_hex();
    let unique_star = rec.maximizers.len() == 1 && rec.maximizers[0].key == star;
    Ok(C4Report { record: rec, unique_star })
}

/// One row of the `K_{r+1}`-free bound check `λ² <= (1 - 1/r) 2m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NikiforovRow {
    pub m: usize,
    pub max_lambda_sq: f64,
    pub bound: f64,
    pub slack: f64,
    pub violations: usize,
    pub equality: Vec<Extremal>,
    /// Equality set equals the predicted complete (regular) `r`-partite graphs.
    pub equality_as_predicted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NikiforovReport {
    pub r: usize,
    pub rows: Vec<NikiforovRow>,
    pub holds: bool,
}

/// Predicted equality graphs with `m` edges: `K_{a,b}` with `ab = m` for
/// `r = 2`; the regular complete `r`-partite graph for `r >= 3`.
pub fn nikiforov_equality_graphs(r: usize, m: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if r == 2 {
        for a in 1..=m {
            if a * a > m {
                break;
            }
            if m.is_multiple_of(a) {
                out.push(crate::generators::complete_bipartite(a, m / a));
            }
        }
    } else {
        let pairs = r * (r - 1) / 2;
        let mut t = 1;
        while pairs * t * t <= m {
            if pairs * t * t == m {
                out.push(complete_multipartite(&vec![t; r]).expect("positive sizes"));
            }
            t += 1;
        }
    }
    out
}

pub fn verify_nikiforov(r: usize, m_lo: usize, m_hi: usize, opts: &SearchOptions) -> Result<NikiforovReport> {
    if r < 2 {
        return invalid("r must be at least 2");
    }
    if m_lo == 0 || m_lo > m_hi {
        return invalid("need 1 <= m_lo <= m_hi");
    }
    let levels = enumerate_up_to(m_hi, opts.workers)?;
    let kr1 = complete(r + 1);
    let mut rows = Vec::new();
    for (m, level) in levels.iter().enumerate().take(m_hi + 1).skip(m_lo) {
        let free = free_of(level, &kr1, opts)?;
        let lambdas: Vec<f64> = spectra(&free, opts)?.into_iter().map(|x| x.lambda1).collect();
        let bound = (1.0 - 1.0 / r as f64) * 2.0 * m as f64;
        let sq: Vec<f64> = lambdas.iter().map(|l| l * l).collect();
        let max_sq = sq.iter().copied().fold(0.0, f64::max);
        let violations = sq.iter().filter(|&&s| s > bound + EQ_TOL).count();
        let equality: Vec<Extremal> = free
            .iter()
            .zip(&lambdas)
            .filter(|(_, &l)| (l * l - bound).abs() <= EQ_TOL)
            .map(|(g, &l)| Extremal {
                key: canonical_key(g).expect("small graph").to_hex(),
                graph: g.clone(),
                lambda: l,
            })
            .collect();
        let mut got: Vec<String> = equality.iter().map(|e| e.key.clone()).collect();
        let mut want: Vec<String> = nikiforov_equality_graphs(r, m)
            .iter()
            .map(|g| canonical_key(g).expect("small graph").to_hex())
            .collect();
        got.sort();
        want.sort();
        rows.push(NikiforovRow {
            m,
            max_lambda_sq: max_sq,
            bound,
            slack: bound - max_sq,
            violations,
            equality,
            equality_as_predicted: got == want,
        });
    }
    let holds = rows.iter().all(|r| r.violations == 0 && r.equality_as_predicted);
    Ok(NikiforovReport { r, rows, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum Shape {
    /// Shape (a).
    CompleteBipartite,
    /// Shape (b): `A` as listed, `C` the rest.
    Split { a: Vec<usize> },
    Neither,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureCase {
    pub key: String,
    pub edge_list: Graph,
    pub lambda: f64,
    pub shape: Shape,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub m: usize,
    pub max_lambda: Option<f64>,
    pub cases: Vec<StructureCase>,
    /// Informational: the structure statement is asymptotic in `m`.
    pub all_conform: bool,
}

/// Classifies a graph without isolated vertices as shape (a), (b) or neither.
pub fn classify_shape(g: &Graph, f: &Graph, fam: &MFamily) -> Shape {
    if let Some(parts) = g.complete_multipartite_parts() {
        if parts.len() == 2 {
            return Shape::CompleteBipartite;
        }
    }
    let n = g.order();
    let limit = f.order().saturating_sub(1).min(n);
    for size in 1..=limit {
        let mut found = None;
        for_each_subset(n, size, &mut |a: &[usize]| {
            if found.is_some() {
                return;
            }
            let in_a: Vec<bool> = (0..n).map(|v| a.contains(&v)).collect();
            let c: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
            if c.iter().any(|&u| c.iter().any(|&w| g.has_edge(u, w))) {
                return;
            }
            let ga = g.induced(a);
            if ga.edge_count() == 0 || !fam.contains(&ga) {
                return;
            }
            let partial = c.iter().filter(|&&u| !a.iter().all(|&v| g.has_edge(u, v))).count();
            if partial <= 1 {
                found = Some(a.to_vec());
            }
        });
        if let Some(a) = found {
            return Shape::Split { a };
        }
    }
    Shape::Neither
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), f);
}

pub fn verify_structure(f: &Graph, m: usize, opts: &SearchOptions) -> Result<StructureReport> {
    check_theorem_scope(f)?;
    let fam = MFamily::of(f)?;
    let rec = spectral_extremal(f, m, opts)?;
    let cases: Vec<StructureCase> = rec
        .maximizers
        .into_iter()
        .map(|e| StructureCase {
            shape: classify_shape(&e.graph, f, &fam),
            key: e.key,
            edge_list: e.graph,
            lambda: e.lambda,
        })
        .collect();
    let all_conform = cases.iter().all(|c| c.shape != Shape::Neither);
    Ok(StructureReport {
        m,
        max_lambda: rec.max_lambda,
        cases,
        all_conform,
    })
}

/// Edge list of the predicted extremal shape: `M` on `0..a`, then `t`
/// vertices complete to `M`, then one vertex adjacent to the first `r`
/// vertices of `M`, where `m = e(M) + a*t + r`, `0 <= r < a`.
pub fn predicted_extremal(mg: &Graph, m: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    let a = mg.order();
    let e = mg.edge_count();
    if a == 0 || m < e {
        return invalid("m must be at least e(M)");
    }
    let (t, r) = ((m - e) / a, (m - e) % a);
    let n = a + t + usize::from(r > 0);
    let mut edges = mg.edges();
    edges.reserve(m - e);
    for i in 0..t {
        for v in 0..a {
            edges.push((v, a + i));
        }
    }
    for v in 0..r {
        edges.push((v, a + t));
    }
    Ok((n, edges))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AsymptoticRow {
    pub m: usize,
    pub lambda: f64,
    pub predicted: f64,
    pub deviation: f64,
    /// `|λ - √m - ratio| * √m`.
    pub scaled: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AsymptoticReport {
    /// `"split"` when `M_F` has a non-empty member, else `"complete-bipartite"` (`λ = √m`).
    pub regime: &'static str,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub ratio: Option<Ratio>,
    pub maximizer: Option<Graph>,
    pub rows: Vec<AsymptoticRow>,
    pub max_scaled: f64,
    pub constant: f64,
    pub bounded: bool,
}

fn ser_opt_ratio<S: serde::Serializer>(r: &Option<Ratio>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => crate::forbidden::ser_ratio(r, s),
        None => s.serialize_none(),
    }
}

/// Builds the predicted extremal graph for each `m` and reports
/// `|λ - √m - e(M)/v(M)| * √m`, asserting it stays below `constant`.
pub fn verify_asymptotic(f: &Graph, ms: &[usize], constant: f64, tol: f64) -> Result<AsymptoticReport> {
    let maxi = m_f_maximizer(f)?;
    let solver = SpectralSolver::<f64>::new().with_tol(tol).with_lambda2(false);
    let mut rows = Vec::new();
    let (regime, ratio, mg) = match &maxi {
        Some(mx) => ("split", Some(mx.ratio), Some(mx.graphs[0].clone())),
        None => ("complete-bipartite", None, None),
    };
    for &m in ms {
        if m == 0 {
            return invalid("m must be positive");
        }
        let sq = (m as f64).sqrt();
        let (n, edges) = match &mg {
            Some(g) => predicted_extremal(g, m)?,
            None => (m + 1, (1..=m).map(|v| (0, v)).collect()),
        };
        let g = SparseGraph::from_edges(n, &edges)?;
        debug_assert_eq!(g.edge_count(), m);
        let sol = solver.solve(&g)?;
        let lambda = sol.lambda1;
        let rv = ratio.map_or(0.0, |r| *r.numer() as f64 / *r.denom() as f64);
        let predicted = sq + rv;
        let deviation = lambda - predicted;
        rows.push(AsymptoticRow {
            m,
            lambda,
            predicted,
            deviation,
            scaled: deviation.abs() * sq,
            residual: sol.residual,
        });
    }
    let max_scaled = rows.iter().map(|r| r.scaled).fold(0.0, f64::max);
    Ok(AsymptoticReport {
        regime,
        ratio,
        maximizer: mg,
        rows,
        max_scaled,
        constant,
        bounded: max_scaled <= constant,
    })
}

/// The `k` index of the split graph listed for a family instance, if the
/// instance belongs to one of the tabulated rows.
pub fn table1_expected_k(tag: FamilyTag, p: &[usize]) -> Option<usize> {
    use FamilyTag::*;
    match (tag, p) {
        (CompleteBipartite, &[a, b]) if a.min(b) >= 2 => Some(a.min(b) - 1),
        (Cycle, &[n]) if n >= 4 && n % 2 == 0 => Some(n / 2 - 1),
        (Matching, &[n]) if n >= 6 && n % 2 == 0 => Some(n / 2 - 1),
        (Path, &[n]) if n >= 6 => Some((n - 2) / 2),
        (Subdivision, &[n]) if n >= 3 => Some(n - 1),
        (Subdivision, &[a, b]) if a >= 2 && b >= 2 => Some(a + b - 1),
        (ThetaMulti, &[t, l]) if t >= 2 && l >= 3 && l % 2 == 1 => Some(t * (l - 1) / 2),
        (ThetaMulti, &[t, l]) if t >= 2 && l >= 2 && l % 2 == 0 => Some(t * (l - 2) / 2 + 1),
        (Hypercube, &[d]) if d >= 2 => Some((1 << (d - 1)) - 1),
        (Grid, &[t]) if t >= 2 => Some(t * t / 2 - 1),
        (Prism, &[l]) if l >= 2 => Some(2 * l - 1),
        (CycleDiagonals, &[l]) if l >= 3 && l % 2 == 1 => Some(l - 1),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Table1Report {
    pub family: String,
    pub params: Vec<usize>,
    pub order: usize,
    pub alpha: usize,
    pub sigma: usize,
    pub expected_k: Option<usize>,
    /// `σ = |F| - α`.
    pub sigma_identity: bool,
    pub k_matches: Option<bool>,
    pub sample_m: usize,
    /// `S_{σ-1, sample_m}` is `F`-free.
    pub split_free: bool,
    pub pass: bool,
}

pub const TABLE1_SAMPLE_M: usize = 100;

pub fn table1_check(tag: FamilyTag, params: &[usize]) -> Result<Table1Report> {
    let f = family(tag, params)?;
    check_cap("forbidden graph order for table check", f.order(), 20)?;
    if !f.is_bipartite() {
        return Err(Error::NotBipartite("table rows are bipartite families"));
    }
    let sigma = color_surplus(&f)?;
    let alpha = independence_number(&f)?;
    let expected_k = table1_expected_k(tag, params);
    let k_matches = expected_k.map(|k| sigma >= 1 && sigma - 1 == k);
    let split_free = sigma >= 2 && !contains_subgraph(&split_graph(sigma - 1, TABLE1_SAMPLE_M)?, &f)?;
    let sigma_identity = sigma == f.order() - alpha;
    Ok(Table1Report {
        family: tag.as_str().to_string(),
        params: params.to_vec(),
        order: f.order(),
        alpha,
        sigma,
        expected_k,
        sigma_identity,
        k_matches,
        sample_m: TABLE1_SAMPLE_M,
        split_free,
        pass: sigma_identity && k_matches != Some(false) && split_free,
    })
}

/// The two smallest instances of each tabulated family, as used by the
/// table check suite.
pub fn table1_instances() -> Vec<(FamilyTag, Vec<usize>)> {
    use FamilyTag::*;
    vec![
        (CompleteBipartite, vec![2, 2]),
        (CompleteBipartite, vec![2, 3]),
        (Cycle, vec![4]),
        (Cycle, vec![6]),
        (Matching, vec![6]),
        (Matching, vec![8]),
        (Path, vec![6]),
        (Path, vec![7]),
        (Path, vec![8]),
        (Path, vec![9]),
        (Subdivision, vec![3]),
        (Subdivision, vec![4]),
        (Subdivision, vec![2, 2]),
        (Subdivision, vec![2, 3]),
        (ThetaMulti, vec![2, 3]),
        (ThetaMulti, vec![3, 3]),
        (ThetaMulti, vec![2, 2]),
        (ThetaMulti, vec![3, 2]),
        (Hypercube, vec![2]),
        (Hypercube, vec![3]),
        (Grid, vec![2]),
        (Grid, vec![3]),
        (Prism, vec![2]),
        (Prism, vec![3]),
        (CycleDiagonals, vec![3]),
        (CycleDiagonals, vec![5]),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BnRow {
    pub m: usize,
    pub count: usize,
    /// `max λ₁² + λ₂² − (1 − 1/r)2m`; `None` if no graph qualifies.
    pub max_slack: Option<f64>,
    pub argmax: Option<Extremal>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BnReport {
    pub r: usize,
    pub rows: Vec<BnRow>,
    /// Every slack is at most [`EQ_TOL`].
    pub holds: bool,
}

/// `λ₁² + λ₂²` against `(1 − 1/r)2m` over `K_{r+1}`-free graphs with `m`
/// edges, no isolated vertices and at least `r + 1` vertices.
pub fn conjecture_bn_probe(r: usize, m_lo: usize, m_hi: usize, opts: &SearchOptions) -> Result<BnReport> {
    if r < 2 {
        return invalid("r must be at least 2");
    }
    if m_lo == 0 || m_lo > m_hi {
        return invalid("need 1 <= m_lo <= m_hi");
    }
    let levels = enumerate_up_to(m_hi, opts.workers)?;
    let kr1 = complete(r + 1);
    let mut rows = Vec::new();
    for (m, level) in levels.iter().enumerate().take(m_hi + 1).skip(m_lo) {
        let pool: Vec<Graph> = level.iter().filter(|g| g.order() > r).cloned().collect();
        let free = free_of(&pool, &kr1, opts)?;
        let specs = spectra(&free, opts)?;
        let bound = (1.0 - 1.0 / r as f64) * 2.0 * m as f64;
        let mut best: Option<(f64, usize)> = None;
        for (i, s) in specs.iter().enumerate() {
            let slack = s.lambda1 * s.lambda1 + s.lambda2 * s.lambda2 - bound;
            if best.is_none_or(|(b, _)| slack > b) {
                best = Some((slack, i));
            }
        }
        rows.push(BnRow {
            m,
            count: free.len(),
            max_slack: best.map(|b| b.0),
            argmax: best.map(|(_, i)| Extremal {
                key: canonical_key(&free[i]).expect("small graph").to_hex(),
                graph: free[i].clone(),
                lambda: specs[i].lambda1,
            }),
        });
    }
    let holds = rows.iter().all(|r| r.max_slack.is_none_or(|s| s <= EQ_TOL));
    Ok(BnReport { r, rows, holds })
}
