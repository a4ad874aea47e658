//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the binary
//! exits non-zero if any criterion fails.

mod common;

use std::time::Instant;

use common::brute_isomorphic;
use stl_core::forbidden::{a_family, contains_subgraph, is_almost_bipartite, is_star, MFamily};
use stl_core::generators::*;
use stl_core::search::*;
use stl_core::stability::*;
use stl_core::{join, Graph, SpectralSolver64};

/// Tolerance used for eigenvalue equalities and inequalities.
const EQ: f64 = 1e-8;
const SEED: u64 = 20_240_917;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).min(8)
}

fn opts() -> SearchOptions {
    SearchOptions { workers: workers(), ..Default::default() }
}

fn ac01_nikiforov() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for r in [2, 3] {
        let rep = verify_nikiforov(r, 1, 9, &opts()).unwrap();
        let violations: usize = rep.rows.iter().map(|row| row.violations).sum();
        let bad_eq: Vec<usize> = rep.rows.iter().filter(|row| !row.equality_as_predicted).map(|row| row.m).collect();
        let min_slack = rep.rows.iter().map(|row| row.slack).fold(f64::INFINITY, f64::min);
        pass &= rep.holds && violations == 0 && bad_eq.is_empty();
        notes.push(format!("r={r}: violations={violations} equality-mismatch m={bad_eq:?} min slack={min_slack:.3e}"));
    }
    // K3 is the only equality case for r = 3 in range
    let k3 = verify_nikiforov(3, 3, 3, &opts()).unwrap();
    pass &= k3.rows[0].equality.len() == 1 && brute_isomorphic(&k3.rows[0].equality[0].graph, &complete(3));
    outcome(pass, notes.join("; "))
}

fn ac02_c4() -> Outcome {
    let rep = verify_c4(10, &opts()).unwrap();
    let l = rep.record.max_lambda.unwrap();
    let star_only = rep.record.maximizers.len() == 1 && brute_isomorphic(&rep.record.maximizers[0].graph, &star(10));
    outcome(
        (l - 10f64.sqrt()).abs() <= EQ && star_only && rep.unique_star,
        format!("max lambda={l:.12} (sqrt 10={:.12}), maximizers={}, star={star_only}", 10f64.sqrt(), rep.record.maximizers.len()),
    )
}

fn ac03_split() -> Outcome {
    let solver = SpectralSolver64::new().with_lambda2(false);
    let lam = |k: usize, m: usize| solver.solve(&split_graph(k, m).unwrap()).unwrap().lambda1;
    let (mut above, mut eq_wrong, mut checked) = (0, 0, 0);
    for k in 1..=6 {
        for m in k * (k - 1) / 2 + 1..=200 {
            let spec = SplitGraphSpec::new(k, m).unwrap();
            let bound = 0.5 * ((k - 1) as f64 + ((4 * m) as f64 - (k * k) as f64 + 1.0).sqrt());
            let l = lam(k, m);
            above += usize::from(l > bound + EQ);
            eq_wrong += usize::from(((l - bound).abs() <= EQ) != (spec.r == 0));
            checked += 1;
        }
    }
    let mut mono = 0;
    for m in 200..=400 {
        for k in 1..=5 {
            mono += usize::from(lam(k, m) > lam(k + 1, m) + EQ);
        }
    }
    outcome(
        above == 0 && eq_wrong == 0 && mono == 0,
        format!("{checked} (k,m) pairs: above bound={above}, equality iff r=0 mismatches={eq_wrong}, monotonicity failures={mono}"),
    )
}

fn ac04_asymptotic() -> Outcome {
    let f = kst_plus(3, 3).unwrap();
    let ms = [100, 1_000, 10_000, 100_000];
    let rep = verify_asymptotic(&f, &ms, 0.5, 1e-10).unwrap();
    let fmt = |r: &AsymptoticReport| {
        r.rows.iter().map(|row| format!("{}:{:.6}", row.m, row.scaled)).collect::<Vec<_>>().join(", ")
    };
    // informational: odd m, where the extra vertex is absent
    let odd = verify_asymptotic(&f, &ms.map(|m| m + 1), 0.5, 1e-10).unwrap();
    let ratio_ok = rep.ratio.is_some_and(|r| *r.numer() == 1 && *r.denom() == 2);
    outcome(
        rep.bounded && ratio_ok,
        format!(
            "ratio={}, |lambda - sqrt m - 1/2| sqrt m = [{}] against 0.5; odd m (info) = [{}]",
            rep.ratio.map_or("none".into(), |r| r.to_string()),
            fmt(&rep),
            fmt(&odd)
        ),
    )
}

fn same_family(got: &[Graph], want: &[Graph]) -> bool {
    got.len() == want.len()
        && want.iter().all(|w| got.iter().filter(|g| brute_isomorphic(g, w)).count() == 1)
}

fn ac05_a_family() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for s in 1..=4 {
        for t in s..=4 {
            let mut want = vec![Graph::empty(s)];
            if t != s {
                want.push(Graph::empty(t));
            }
            cases += 1;
            if !same_family(&a_family(&complete_bipartite(s, t)).unwrap(), &want) {
                bad.push(format!("K{s},{t}"));
            }
        }
    }
    for k in 1..=4 {
        let mut want = vec![complete(2)];
        if k > 1 {
            want.push(star(k));
        }
        cases += 1;
        if !same_family(&a_family(&book(2, k).unwrap()).unwrap(), &want) {
            bad.push(format!("B{k}"));
        }
    }
    for k in 1..=3 {
        for t in k..=3 {
            let want = [complete(2).with_isolated(k - 1).unwrap(), star(t + 1)];
            cases += 1;
            if !same_family(&a_family(&kst_plus(k + 1, t + 1).unwrap()).unwrap(), &want) {
                bad.push(format!("K{},{}+", k + 1, t + 1));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} families checked, mismatches={bad:?}"))
}

fn ac06_lemma_4_2() -> Outcome {
    let graphs = |lo: usize, hi: usize| -> Vec<Graph> {
        (lo..=hi).flat_map(|n| enumerate_by_order(n, workers()).unwrap()).collect()
    };
    let fs: Vec<Graph> = graphs(2, 6)
        .into_iter()
        .filter(|f| f.edge_count() > 0 && !is_star(f) && is_almost_bipartite(f).unwrap())
        .collect();
    let hs = graphs(1, 5);
    let (mut pairs, mut bad) = (0, 0);
    for f in &fs {
        let fam = MFamily::of(f).unwrap();
        let blank = Graph::empty(f.order() + 1);
        for h in &hs {
            let free = !contains_subgraph(&join(h, &blank).unwrap(), f).unwrap();
            bad += usize::from(free != fam.contains(h));
            pairs += 1;
        }
    }
    outcome(bad == 0, format!("{} forbidden graphs x {} hosts = {pairs} pairs, discrepancies={bad}", fs.len(), hs.len()))
}

fn ac07_table() -> Outcome {
    let mut bad = Vec::new();
    let instances = table1_instances();
    for (tag, p) in &instances {
        let rep = table1_check(*tag, p).unwrap();
        if !(rep.pass && rep.k_matches == Some(true)) {
            bad.push(format!("{tag}{p:?}: sigma={} alpha={} k={:?}", rep.sigma, rep.alpha, rep.expected_k));
        }
    }
    outcome(bad.is_empty(), format!("{} instances at m={TABLE1_SAMPLE_M}, mismatches={bad:?}", instances.len()))
}

fn ac08_stability() -> Outcome {
    let b = stability_batch(SEED, 500, 1e-9, workers()).unwrap();
    outcome(
        b.failures1 == 0 && b.failures2 == 0,
        format!(
            "seed={SEED} pairs=500 failures=({}, {}) max lhs/rhs=({:.4}, {:.4})",
            b.failures1, b.failures2, b.max_ratio1, b.max_ratio2
        ),
    )
}

fn ac09_sampling() -> Outcome {
    let (g, parts) = damaged_blowup(3, 30, 25, SEED).unwrap();
    let trials = 10_000u64;
    let stats = blowup_success_rate(&g, &parts, 2, SEED, trials, workers()).unwrap();
    let p = 2.0 / 3.0;
    let threshold = p - 5.0 * (p * (1.0 - p) / trials as f64).sqrt();
    outcome(
        stats.rate >= threshold && stats.invalid_successes == 0 && stats.defect == 25,
        format!(
            "seed={SEED} rate={:.4} threshold={threshold:.4} successes={} invalid={}",
            stats.rate, stats.successes, stats.invalid_successes
        ),
    )
}

fn ac10_turan() -> Outcome {
    let mut fails = 0;
    let mut checked = 0;
    for r in 1..=8 {
        for n in r..=60 {
            fails += usize::from(!turan_edge_bounds(n, r).unwrap().pass());
            checked += 1;
        }
    }
    outcome(fails == 0, format!("{checked} (n,r) pairs, failures={fails}"))
}

fn ac11_bn() -> Outcome {
    let rep = conjecture_bn_probe(2, 1, 8, &opts()).unwrap();
    let worst = rep.rows.iter().filter_map(|r| r.max_slack).fold(f64::NEG_INFINITY, f64::max);
    outcome(rep.holds && worst <= EQ, format!("max slack over m<=8 = {worst:.3e}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("AC-01 nosal-nikiforov exhaustive", ac01_nikiforov),
        ("AC-02 c4-free star", ac02_c4),
        ("AC-03 split-graph formula", ac03_split),
        ("AC-04 asymptotic K33+", ac04_asymptotic),
        ("AC-05 A_F families", ac05_a_family),
        ("AC-06 join oracle equivalence", ac06_lemma_4_2),
        ("AC-07 table arithmetic", ac07_table),
        ("AC-08 perron stability", ac08_stability),
        ("AC-09 blow-up sampling", ac09_sampling),
        ("AC-10 turan edge bounds", ac10_turan),
        ("AC-11 bollobas-nikiforov r=2", ac11_bn),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "{} {name}: {} ({:.2}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
