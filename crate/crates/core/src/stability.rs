//! Perron-vector stability, random blow-up sampling and Turán edge bounds.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::forbidden::contains_subgraph;
use crate::generators::{complete, complete_bipartite, turan};
use crate::graph::{blow_up, edit_distance_labeled, Graph};
use crate::spectral::SpectralSolver;

/// Spectral gaps below this make the stability bounds vacuous.
pub const GAP_THRESHOLD: f64 = 1e-8;

/// Deterministic generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityReport {
    pub edit_count: usize,
    pub gap: f64,
    /// `Σ (x_v − y_v)²`.
    pub lhs1: f64,
    /// `8√e / gap`.
    pub rhs1: f64,
    /// `Σ |x_v² − y_v²|`.
    pub lhs2: f64,
    /// `8 e^{1/4} / √gap`.
    pub rhs2: f64,
    pub pass1: bool,
    pub pass2: bool,
}

/// Compares the Perron vectors `x` of `g` and `y` of `h` on a shared vertex
/// set (the smaller graph is padded with isolated vertices).
pub fn verify_pf_stability(g: &Graph, h: &Graph, tol: f64) -> Result<StabilityReport> {
    let n = g.order().max(h.order());
    let g = g.with_isolated(n - g.order())?;
    let h = h.with_isolated(n - h.order())?;
    let solver = SpectralSolver::<f64>::new();
    let sh = solver.solve(&h)?;
    let gap = sh.lambda1 - sh.lambda2;
    if gap < GAP_THRESHOLD {
        return Err(Error::VacuousGap(gap));
    }
    let sg = solver.solve(&g)?;
    let (x, y) = (&sg.perron, &sh.perron);
    let e = edit_distance_labeled(&g, &h);
    let lhs1 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
    let lhs2 = x.iter().zip(y).map(|(a, b)| (a * a - b * b).abs()).sum();
    let ef = e as f64;
    let rhs1 = 8.0 * ef.sqrt() / gap;
    let rhs2 = 8.0 * ef.powf(0.25) / gap.sqrt();
    Ok(StabilityReport {
        edit_count: e,
        gap,
        lhs1,
        rhs1,
        lhs2,
        rhs2,
        pass1: lhs1 <= rhs1 + tol,
        pass2: lhs2 <= rhs2 + tol,
    })
}

/// One seeded pair: `H = K_{a,b}` with `3 <= a, b <= 8`, and `G` obtained by
/// toggling `k` distinct random vertex pairs, `0 <= k <= e(H)/4`.
pub fn random_stability_pair(seed: u64, trial: u64) -> (Graph, Graph) {
    let mut rng = trial_rng(seed, trial);
    let a = rng.random_range(3..=8);
    let b = rng.random_range(3..=8);
    let h = complete_bipartite(a, b);
    let n = a + b;
    let k = rng.random_range(0..=h.edge_count() / 4);
    let mut g = h.clone();
    for idx in sample(&mut rng, n * (n - 1) / 2, k) {
        let (u, v) = pair_from_index(idx, n);
        g.toggle_edge(u, v);
    }
    (g, h)
}

fn pair_from_index(mut idx: usize, n: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - 1 - u;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair index out of range")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityBatch {
    pub seed: u64,
    pub trials: usize,
    pub failures1: usize,
    pub failures2: usize,
    pub max_ratio1: f64,
    pub max_ratio2: f64,
    pub reports: Vec<StabilityReport>,
}

/// Runs [`verify_pf_stability`] on `trials` pairs from [`random_stability_pair`].
pub fn stability_batch(seed: u64, trials: usize, tol: f64, workers: usize) -> Result<StabilityBatch> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let reports: Vec<StabilityReport> = pool.install(|| {
        (0..trials as u64)
            .into_par_iter()
            .map(|i| {
                let (g, h) = random_stability_pair(seed, i);
                verify_pf_stability(&g, &h, tol)
            })
            .collect::<Result<_>>()
    })?;
    let ratio = |l: f64, r: f64| if r > 0.0 { l / r } else if l > tol { f64::INFINITY } else { 0.0 };
    Ok(StabilityBatch {
        seed,
        trials,
        failures1: reports.iter().filter(|r| !r.pass1).count(),
        failures2: reports.iter().filter(|r| !r.pass2).count(),
        max_ratio1: reports.iter().map(|r| ratio(r.lhs1, r.rhs1)).fold(0.0, f64::max),
        max_ratio2: reports.iter().map(|r| ratio(r.lhs2, r.rhs2)).fold(0.0, f64::max),
        reports,
    })
}

fn check_parts(n: usize, parts: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= n {
                return invalid(format!("vertex {v} outside 0..{n}"));
            }
            if owner[v] != usize::MAX {
                return invalid(format!("vertex {v} lies in two parts"));
            }
            owner[v] = i;
        }
    }
    Ok(owner)
}

/// `e(K_{V_1..V_r}) − e(G[V_1, .., V_r])`: missing cross edges.
pub fn multipartite_defect(g: &Graph, parts: &[Vec<usize>]) -> Result<usize> {
    check_parts(g.order(), parts)?;
    let mut missing = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for &u in &parts[i] {
                missing += parts[j].iter().filter(|&&v| !g.has_edge(u, v)).count();
            }
        }
    }
    Ok(missing)
}

/// A sampled complete `r`-partite copy: `sets[i] ⊆ V_i`, `|sets[i]| = t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupSample {
    pub trial: u64,
    pub sets: Vec<Vec<usize>>,
}

fn check_blowup_pre(g: &Graph, parts: &[Vec<usize>], t: usize) -> Result<()> {
    check_parts(g.order(), parts)?;
    if parts.len() < 2 || t == 0 {
        return invalid("blow-up sampling needs r >= 2 parts and t >= 1");
    }
    if let Some(p) = parts.iter().find(|p| p.len() < t) {
        return invalid(format!("part of size {} is smaller than t = {t}", p.len()));
    }
    if parts.len() >= 3 && parts.iter().any(|p| p.len() != parts[0].len()) {
        return invalid("parts must have equal sizes when r >= 3");
    }
    Ok(())
}

/// One uniform draw of a `t`-subset from each part; `Some` iff all cross
/// pairs are edges.
fn draw(g: &Graph, parts: &[Vec<usize>], t: usize, seed: u64, trial: u64) -> Option<BlowupSample> {
    let mut rng = trial_rng(seed, trial);
    let sets: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut s: Vec<usize> = sample(&mut rng, p.len(), t).into_iter().map(|i| p[i]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().any(|&u| sets[j].iter().any(|&v| !g.has_edge(u, v))) {
                return None;
            }
        }
    }
    Some(BlowupSample { trial, sets })
}

/// Repeats independent samplings until one spans a complete `r`-partite
/// `K_r[t]` or `max_trials` is reached.
pub fn sample_blowup(
    g: &Graph,
    parts: &[Vec<usize>],
    t: usize,
    seed: u64,
    max_trials: u64,
) -> Result<Option<BlowupSample>> {
    check_blowup_pre(g, parts, t)?;
    Ok((0..max_trials).find_map(|i| draw(g, parts, t, seed, i)))
}

/// Independent check that the sampled sets span a copy of `K_r[t]`.
pub fn validate_blowup(g: &Graph, s: &BlowupSample) -> Result<bool> {
    let verts: Vec<usize> = s.sets.iter().flatten().copied().collect();
    let r = s.sets.len();
    let t = s.sets.first().map_or(0, Vec::len);
    contains_subgraph(&g.induced(&verts), &blow_up(&complete(r), t)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlowupStats {
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
    /// Successes whose sets failed independent validation.
    pub invalid_successes: u64,
    pub defect: usize,
    pub first: Option<BlowupSample>,
}

/// Success frequency of single draws over `trials` seeded trials, with every
/// success validated by [`validate_blowup`].
pub fn blowup_success_rate(
    g: &Graph,
    parts: &[Vec<usize>],
    t: usize,
    seed: u64,
    trials: u64,
    workers: usize,
) -> Result<BlowupStats> {
    check_blowup_pre(g, parts, t)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let hits: Vec<(BlowupSample, bool)> = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .filter_map(|i| draw(g, parts, t, seed, i))
            .map(|s| {
                let ok = validate_blowup(g, &s).unwrap_or(false);
                (s, ok)
            })
            .collect()
    });
    Ok(BlowupStats {
        seed,
        trials,
        successes: hits.len() as u64,
        rate: hits.len() as f64 / trials.max(1) as f64,
        invalid_successes: hits.iter().filter(|(_, ok)| !ok).count() as u64,
        defect: multipartite_defect(g, parts)?,
        first: hits.into_iter().next().map(|(s, _)| s),
    })
}

/// `K_r[size]` with `removed` distinct random cross edges deleted, plus its parts.
pub fn damaged_blowup(r: usize, size: usize, removed: usize, seed: u64) -> Result<(Graph, Vec<Vec<usize>>)> {
    let mut g = blow_up(&complete(r), size)?;
    let edges = g.edges();
    if removed > edges.len() {
        return invalid("cannot remove more edges than exist");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in sample(&mut rng, edges.len(), removed) {
        let (u, v) = edges[i];
        g.remove_edge(u, v);
    }
    let parts = (0..r).map(|i| (i * size..(i + 1) * size).collect()).collect();
    Ok((g, parts))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TuranBoundsReport {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub edges: usize,
    pub lower: f64,
    pub upper: f64,
    pub identity_holds: bool,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl TuranBoundsReport {
    pub fn pass(&self) -> bool {
        self.identity_holds && self.lower_holds && self.upper_holds
    }
}

/// Edge count of `T_{n,r}` against `(1 − 1/r)n²/2 − r/8 <= e <= (1 − 1/r)n²/2`
/// and the exact identity `e = (1 − 1/r)n²/2 − s(r − s)/(2r)`, `s = n mod r`.
/// All comparisons are done in integers scaled by `8r`.
pub fn turan_edge_bounds(n: usize, r: usize) -> Result<TuranBoundsReport> {
    if r == 0 || n < r {
        return invalid("turan bounds need n >= r >= 1");
    }
    let e = turan(n, r)?.edge_count();
    let (ni, ri, ei) = (n as i128, r as i128, e as i128);
    let s = ni % ri;
    let main = (ri - 1) * ni * ni; // 2r * (1 - 1/r) n^2 / 2
    Ok(TuranBoundsReport {
        n,
        r,
        s: s as usize,
        edges: e,
        lower: (4 * main - ri * ri) as f64 / (8 * ri) as f64,
        upper: main as f64 / (2 * ri) as f64,
        identity_holds: 2 * ri * ei == main - s * (ri - s),
        lower_holds: 8 * ri * ei >= 4 * main - ri * ri,
        upper_holds: 2 * ri * ei <= main,
    })
}
