mod common;

use approx::assert_abs_diff_eq;
use common::arb_graph;
use proptest::prelude::*;
use stl_core::generators::*;
use stl_core::spectral::{rayleigh, residual, SparseGraph};
use stl_core::{Method, SpectralSolver64, SpectralSolver32};

const TOL: f64 = 1e-10;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lambda1_bounds(g in arb_graph(30)) {
        prop_assume!(g.edge_count() > 0);
        let m = g.edge_count() as f64;
        let n = g.order() as f64;
        let r = SpectralSolver64::new().solve(&g).unwrap();
        // uniform vector Rayleigh quotient is 2m/n
        prop_assert!(2.0 * m / n <= r.lambda1 + TOL);
        prop_assert!(r.lambda1 < (2.0 * m).sqrt());
        prop_assert!(r.residual <= TOL, "residual {}", r.residual);
        prop_assert!(r.perron.iter().all(|&x| x >= 0.0));
        let norm: f64 = r.perron.iter().map(|x| x * x).sum();
        prop_assert!((norm - 1.0).abs() < 1e-9);
        prop_assert!(r.lambda2 <= r.lambda1 + TOL);
    }

    #[test]
    fn perron_is_rayleigh_maximiser(g in arb_graph(20)) {
        prop_assume!(g.edge_count() > 0);
        let r = SpectralSolver64::new().solve(&g).unwrap();
        prop_assert!((rayleigh(&g, &r.perron).unwrap() - r.lambda1).abs() < 1e-9);
        prop_assert!(residual(&g, r.lambda1, &r.perron) <= TOL);
    }

    #[test]
    fn dense_and_iterative_agree(g in arb_graph(40)) {
        prop_assume!(g.edge_count() > 0);
        let d = SpectralSolver64::new().with_method(Method::DenseExact).solve(&g).unwrap();
        let it = SpectralSolver64::new().with_method(Method::Iterative).solve(&g).unwrap();
        prop_assert!((d.lambda1 - it.lambda1).abs() <= 10.0 * TOL, "{} vs {}", d.lambda1, it.lambda1);
    }

    #[test]
    fn matches_reference_power_iteration(g in arb_graph(14)) {
        prop_assume!(g.order() > 0);
        let r = SpectralSolver64::new().solve(&g).unwrap();
        prop_assert!((r.lambda1 - common::power_lambda(&g)).abs() < 1e-6);
    }

    #[test]
    fn complete_multipartite_lambda2(sizes in proptest::collection::vec(1usize..6, 2..5)) {
        let g = complete_multipartite(&sizes).unwrap();
        let r = SpectralSolver64::new().solve(&g).unwrap();
        prop_assert!(r.lambda2 <= TOL, "lambda2 = {}", r.lambda2);
    }

    #[test]
    fn sparse_input_agrees(g in arb_graph(25)) {
        prop_assume!(g.order() > 0);
        let s = SparseGraph::from(&g);
        let a = SpectralSolver64::new().solve(&g).unwrap();
        let b = SpectralSolver64::new().solve(&s).unwrap();
        prop_assert!((a.lambda1 - b.lambda1).abs() < 1e-12);
    }
}

#[test]
fn closed_forms() {
    for n in 2..=20 {
        assert_abs_diff_eq!(SpectralSolver64::new().solve(&complete(n)).unwrap().lambda1, (n - 1) as f64, epsilon = 1e-9);
    }
    for a in 1..=8 {
        for b in 1..=8 {
            let l = SpectralSolver64::new().solve(&complete_bipartite(a, b)).unwrap().lambda1;
            assert_abs_diff_eq!(l, ((a * b) as f64).sqrt(), epsilon = 1e-9);
        }
    }
    for n in 3..=200 {
        assert_abs_diff_eq!(SpectralSolver64::new().solve(&cycle(n).unwrap()).unwrap().lambda1, 2.0, epsilon = 1e-9);
    }
}

#[test]
fn large_cycle_takes_iterative_path() {
    let r = SpectralSolver64::new().solve(&cycle(300).unwrap()).unwrap();
    assert_eq!(r.method, Method::Iterative);
    assert_abs_diff_eq!(r.lambda1, 2.0, epsilon = 1e-9);
    let q = SpectralSolver64::new().solve(&hypercube(8).unwrap()).unwrap();
    assert_eq!(q.method, Method::Iterative);
    assert_abs_diff_eq!(q.lambda1, 8.0, epsilon = 1e-9);
    assert_abs_diff_eq!(q.lambda2, 6.0, epsilon = 1e-6);
}

#[test]
fn f32_solver() {
    let r = SpectralSolver32::new().solve(&complete_bipartite(3, 12)).unwrap();
    assert!((r.lambda1 - 6.0).abs() < 1e-4);
    assert!(r.converged);
}

#[test]
fn split_formula_small() {
    for k in 1..=6 {
        let lo = k * (k - 1) / 2 + 1;
        for m in lo..=lo + 40 {
            let l = SpectralSolver64::new().solve(&split_graph(k, m).unwrap()).unwrap().lambda1;
            let up: f64 = split_lambda_upper(k, m).unwrap();
            assert!(l <= up + 1e-8, "k={k} m={m}: {l} > {up}");
        }
    }
}
