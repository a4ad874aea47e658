//! Largest two adjacency eigenvalues and the Perron vector.
//!
//! Each connected component is solved on its own: dense cyclic Jacobi up to
//! [`DENSE_CAP`] vertices, shifted power iteration above. The component with
//! the largest `λ₁` (lowest index on ties) carries the Perron vector; `λ₂` is
//! the larger of that component's second eigenvalue and every other
//! component's `λ₁`.

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Largest component solved by the dense Jacobi path.
pub const DENSE_CAP: usize = 128;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;
/// Iterations without residual improvement before the power method gives up.
const STALL_WINDOW: usize = 2_000;

/// Read-only adjacency structure accepted by the solver.
pub trait Adjacency: Sync {
    fn order(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn for_each_neighbor(&self, v: usize, f: &mut dyn FnMut(usize));
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn edge_count(&self) -> usize {
        Graph::edge_count(self)
    }
    fn for_each_neighbor(&self, v: usize, f: &mut dyn FnMut(usize)) {
        for u in self.neighbors(v) {
            f(u);
        }
    }
}

/// Compressed sparse adjacency for graphs too large for bitset rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseGraph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl SparseGraph {
    /// Builds from an edge list; duplicate edges collapse, loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SparseGraph> {
        let mut pairs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();
        let mut offsets = vec![0; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        Ok(SparseGraph {
            offsets,
            targets: pairs.into_iter().map(|(_, v)| v).collect(),
        })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> SparseGraph {
        SparseGraph::from_edges(g.order(), &g.edges()).expect("graph edges are valid")
    }
}

impl Adjacency for SparseGraph {
    fn order(&self) -> usize {
        self.offsets.len() - 1
    }
    fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }
    fn for_each_neighbor(&self, v: usize, f: &mut dyn FnMut(usize)) {
        for &u in self.neighbors(v) {
            f(u);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DenseExact,
    Iterative,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DenseExact => "dense-exact",
            Method::Iterative => "iterative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult<T> {
    pub lambda1: T,
    pub lambda2: T,
    /// Unit, nonnegative, zero outside the component attaining `lambda1`.
    pub perron: Vec<T>,
    /// `max_v |λ₁ x_v − Σ_{u∈N(v)} x_u|`.
    pub residual: T,
    pub method: Method,
    /// Power-iteration steps spent (0 on the dense path).
    pub iterations: usize,
    /// False when the iteration cap was hit before `residual <= tol`.
    pub converged: bool,
}

/// Solver configuration. `tol` bounds the eigen-equation residual.
#[derive(Clone, Debug)]
pub struct SpectralSolver<T> {
    pub tol: T,
    pub max_iter: usize,
    pub dense_cap: usize,
    /// Overrides the size-based choice of method for every component.
    pub force: Option<Method>,
    /// When false, iterative components skip the λ₂ phase and report NaN.
    pub lambda2: bool,
}

impl<T: Scalar> Default for SpectralSolver<T> {
    fn default() -> Self {
        SpectralSolver {
            tol: T::of(DEFAULT_TOL).max(T::epsilon() * T::of(100.0)),
            max_iter: DEFAULT_MAX_ITER,
            dense_cap: DENSE_CAP,
            force: None,
            lambda2: true,
        }
    }
}

struct Local<T> {
    lambda1: T,
    lambda2: Option<T>,
    x: Vec<T>,
    iterations: usize,
    converged: bool,
    method: Method,
}

impl<T: Scalar> SpectralSolver<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tol(mut self, tol: T) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.force = Some(method);
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_lambda2(mut self, lambda2: bool) -> Self {
        self.lambda2 = lambda2;
        self
    }

    pub fn solve<G: Adjacency + ?Sized>(&self, g: &G) -> Result<SpectralResult<T>> {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.tol > T::zero()) {
            return invalid("tolerance must be positive");
        }
        let n = g.order();
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        if g.edge_count() == 0 {
            let u = T::one() / T::of_usize(n).sqrt();
            return Ok(SpectralResult {
                lambda1: T::zero(),
                lambda2: T::zero(),
                perron: vec![u; n],
                residual: T::zero(),
                method: self.force.unwrap_or(Method::DenseExact),
                iterations: 0,
                converged: true,
            });
        }

        let comps = components(g);
        let mut locals: Vec<(Vec<usize>, Local<T>)> = Vec::with_capacity(comps.len());
        for comp in comps {
            let local = if comp.len() == 1 {
                Local {
                    lambda1: T::zero(),
                    lambda2: None,
                    x: vec![T::one()],
                    iterations: 0,
                    converged: true,
                    method: Method::DenseExact,
                }
            } else {
                let csr = Csr::induced(g, &comp);
                let method = self.force.unwrap_or(if comp.len() <= self.dense_cap {
                    Method::DenseExact
                } else {
                    Method::Iterative
                });
                match method {
                    Method::DenseExact => dense_component(&csr),
                    Method::Iterative => self.iterative_component(&csr),
                }
            };
            locals.push((comp, local));
        }

        let best = locals
            .iter()
            .map(|(_, l)| l.lambda1)
            .fold(T::neg_infinity(), T::max);
        let win = locals
            .iter()
            .position(|(_, l)| l.lambda1 >= best - self.tol)
            .unwrap();
        let mut lambda2 = locals[win].1.lambda2.unwrap_or(T::neg_infinity());
        for (i, (_, l)) in locals.iter().enumerate() {
            if i != win {
                lambda2 = lambda2.max(l.lambda1);
            }
        }
        if lambda2 == T::neg_infinity() {
            lambda2 = locals[win].1.lambda1;
        }

        let (comp, w) = &locals[win];
        let mut perron = vec![T::zero(); n];
        for (&v, &xv) in comp.iter().zip(&w.x) {
            perron[v] = xv;
        }
        let lambda1 = w.lambda1;
        let residual = residual(g, lambda1, &perron);
        let method = if locals.iter().any(|(_, l)| l.method == Method::Iterative) {
            Method::Iterative
        } else {
            Method::DenseExact
        };
        if !self.lambda2 && method == Method::Iterative {
            lambda2 = T::nan();
        }
        Ok(SpectralResult {
            lambda1,
            lambda2,
            perron,
            residual,
            method,
            iterations: locals.iter().map(|(_, l)| l.iterations).sum(),
            converged: locals.iter().all(|(_, l)| l.converged),
        })
    }

    fn iterative_component(&self, a: &Csr) -> Local<T> {
        let k = a.len();
        // λ₁: power iteration on A + cI from the degree vector, c = μ/2.
        let mut x: Vec<T> = (0..k).map(|v| T::of_usize(a.degree(v))).collect();
        normalize(&mut x);
        let mut y = vec![T::zero(); k];
        let mut mu = T::zero();
        let mut iterations = 0;
        let mut converged = false;
        let mut stall = Stall::new();
        while iterations < self.max_iter {
            a.matvec(&x, &mut y);
            mu = dot(&x, &y);
            let res = x
                .iter()
                .zip(&y)
                .map(|(&xi, &yi)| (yi - mu * xi).abs())
                .fold(T::zero(), T::max);
            if res <= self.tol * T::of(0.5) {
                converged = true;
                break;
            }
            if stall.stuck(res) {
                break;
            }
            let c = mu * T::of(0.5);
            for (yi, &xi) in y.iter_mut().zip(&x) {
                *yi = *yi + c * xi;
            }
            normalize(&mut y);
            std::mem::swap(&mut x, &mut y);
            iterations += 1;
        }
        for xi in x.iter_mut() {
            *xi = xi.max(T::zero());
        }
        normalize(&mut x);
        let lambda1 = mu;
        if !self.lambda2 {
            return Local {
                lambda1,
                lambda2: None,
                x,
                iterations,
                converged,
                method: Method::Iterative,
            };
        }

        // λ₂: power iteration on A + λ₁I, deflated against x.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_1a2b);
        let mut z: Vec<T> = (0..k).map(|_| T::of(rng.random::<f64>() - 0.5)).collect();
        project_out(&mut z, &x);
        normalize(&mut z);
        let mut nu = T::zero();
        let mut steps = 0;
        let mut stall = Stall::new();
        let mut found = false;
        while steps < self.max_iter {
            a.matvec(&z, &mut y);
            nu = dot(&z, &y);
            let res = z
                .iter()
                .zip(&y)
                .map(|(&zi, &yi)| (yi - nu * zi).abs())
                .fold(T::zero(), T::max);
            if res <= self.tol {
                found = true;
                break;
            }
            if stall.stuck(res) {
                break;
            }
            for (yi, &zi) in y.iter_mut().zip(&z) {
                *yi = *yi + lambda1 * zi;
            }
            project_out(&mut y, &x);
            normalize(&mut y);
            std::mem::swap(&mut z, &mut y);
            steps += 1;
        }
        converged &= found;
        Local {
            lambda1,
            lambda2: Some(nu),
            x,
            iterations: iterations + steps,
            converged,
            method: Method::Iterative,
        }
    }
}

/// `λ₁`, `λ₂` and Perron vector of `g` in double precision.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult<f64>> {
    SpectralSolver::new().with_tol(tol).solve(g)
}

/// Convenience: `λ₁(g)` with default settings.
pub fn lambda1<G: Adjacency + ?Sized>(g: &G) -> Result<f64> {
    SpectralSolver::<f64>::new().solve(g).map(|r| r.lambda1)
}

/// `2 Σ_{uv∈E} x_u x_v` for a unit vector `x`.
pub fn rayleigh<T: Scalar, G: Adjacency + ?Sized>(g: &G, x: &[T]) -> Result<T> {
    if x.len() != g.order() {
        return invalid(format!("vector length {} != vertex count {}", x.len(), g.order()));
    }
    let norm = x.iter().map(|&v| v * v).sum::<T>().sqrt();
    let slack = T::of(1e-9).max(T::epsilon() * T::of(100.0));
    if (norm - T::one()).abs() > slack {
        return Err(Error::NonUnitVector(norm.as_f64()));
    }
    let mut s = T::zero();
    for v in 0..g.order() {
        let xv = x[v];
        g.for_each_neighbor(v, &mut |u| s = s + xv * x[u]);
    }
    Ok(s)
}

/// Unit vector equal to `1/sqrt(2|A|)` on `a`, `1/sqrt(2|C|)` on `c`, zero elsewhere.
pub fn two_level_vector<T: Scalar>(n: usize, a: &[usize], c: &[usize]) -> Result<Vec<T>> {
    if a.is_empty() || c.is_empty() {
        return invalid("two-level vector needs nonempty parts");
    }
    let mut x = vec![T::zero(); n];
    let mut seen = vec![false; n];
    for (part, val) in [
        (a, T::one() / T::of_usize(2 * a.len()).sqrt()),
        (c, T::one() / T::of_usize(2 * c.len()).sqrt()),
    ] {
        for &v in part {
            if v >= n {
                return invalid(format!("vertex {v} outside 0..{n}"));
            }
            if seen[v] {
                return invalid(format!("vertex {v} listed twice"));
            }
            seen[v] = true;
            x[v] = val;
        }
    }
    Ok(x)
}

/// `max_v |λ x_v − Σ_{u∈N(v)} x_u|`.
pub fn residual<T: Scalar, G: Adjacency + ?Sized>(g: &G, lambda: T, x: &[T]) -> T {
    let mut worst = T::zero();
    for v in 0..g.order() {
        let mut s = T::zero();
        g.for_each_neighbor(v, &mut |u| s = s + x[u]);
        worst = worst.max((lambda * x[v] - s).abs());
    }
    worst
}

fn components<G: Adjacency + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            g.for_each_neighbor(u, &mut |w| {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            });
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Component-local CSR.
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    fn induced<G: Adjacency + ?Sized>(g: &G, comp: &[usize]) -> Csr {
        let mut local = std::collections::HashMap::with_capacity(comp.len());
        for (i, &v) in comp.iter().enumerate() {
            local.insert(v, i);
        }
        let mut offsets = Vec::with_capacity(comp.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in comp {
            g.for_each_neighbor(v, &mut |u| targets.push(local[&u]));
            offsets.push(targets.len());
        }
        Csr { offsets, targets }
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    fn matvec<T: Scalar>(&self, x: &[T], y: &mut [T]) {
        for (v, yv) in y.iter_mut().enumerate() {
            let mut s = T::zero();
            for &u in &self.targets[self.offsets[v]..self.offsets[v + 1]] {
                s = s + x[u];
            }
            *yv = s;
        }
    }
}

fn dense_component<T: Scalar>(a: &Csr) -> Local<T> {
    let k = a.len();
    let mut m = vec![T::zero(); k * k];
    for v in 0..k {
        for &u in &a.targets[a.offsets[v]..a.offsets[v + 1]] {
            m[v * k + u] = T::one();
        }
    }
    let (vals, vecs) = jacobi_eigen(&mut m, k);
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());
    let top = order[0];
    let mut x: Vec<T> = (0..k).map(|r| vecs[r * k + top]).collect();
    if x.iter().copied().sum::<T>() < T::zero() {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    for xi in x.iter_mut() {
        *xi = xi.max(T::zero());
    }
    normalize(&mut x);
    Local {
        lambda1: vals[top],
        lambda2: order.get(1).map(|&i| vals[i]),
        x,
        iterations: 0,
        converged: true,
        method: Method::DenseExact,
    }
}

/// Cyclic Jacobi on a symmetric row-major `k x k` matrix (destroyed).
/// Returns eigenvalues and eigenvectors (column `j` of the row-major result).
pub fn jacobi_eigen<T: Scalar>(a: &mut [T], k: usize) -> (Vec<T>, Vec<T>) {
    let mut v = vec![T::zero(); k * k];
    for i in 0..k {
        v[i * k + i] = T::one();
    }
    let frob: T = a.iter().map(|&x| x * x).sum();
    let eps = T::epsilon();
    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..k {
            for q in p + 1..k {
                off = off + a[p * k + q] * a[p * k + q];
            }
        }
        if off <= eps * eps * frob {
            break;
        }
        for p in 0..k {
            for q in p + 1..k {
                let apq = a[p * k + q];
                if apq.abs() <= T::min_positive_value() {
                    continue;
                }
                let theta = (a[q * k + q] - a[p * k + p]) / (apq + apq);
                let sign = if theta < T::zero() { -T::one() } else { T::one() };
                let t = sign / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for r in 0..k {
                    let arp = a[r * k + p];
                    let arq = a[r * k + q];
                    a[r * k + p] = c * arp - s * arq;
                    a[r * k + q] = s * arp + c * arq;
                }
                for r in 0..k {
                    let apr = a[p * k + r];
                    let aqr = a[q * k + r];
                    a[p * k + r] = c * apr - s * aqr;
                    a[q * k + r] = s * apr + c * aqr;
                }
                a[p * k + q] = T::zero();
                a[q * k + p] = T::zero();
                for r in 0..k {
                    let vrp = v[r * k + p];
                    let vrq = v[r * k + q];
                    v[r * k + p] = c * vrp - s * vrq;
                    v[r * k + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    ((0..k).map(|i| a[i * k + i]).collect(), v)
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// Tracks the best residual seen; reports when it has not improved for
/// [`STALL_WINDOW`] iterations (rounding floor reached).
struct Stall<T> {
    best: T,
    since: usize,
}

impl<T: Scalar> Stall<T> {
    fn new() -> Self {
        Stall { best: T::infinity(), since: 0 }
    }

    fn stuck(&mut self, res: T) -> bool {
        if res < self.best * T::of(0.999) {
            self.best = res;
            self.since = 0;
        } else {
            self.since += 1;
        }
        self.since > STALL_WINDOW
    }
}

fn normalize<T: Scalar>(x: &mut [T]) {
    let n = dot(x, x).sqrt();
    if n > T::zero() {
        x.iter_mut().for_each(|v| *v = *v / n);
    }
}

fn project_out<T: Scalar>(z: &mut [T], x: &[T]) {
    let d = dot(z, x);
    for (zi, &xi) in z.iter_mut().zip(x) {
        *zi = *zi - d * xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, split_graph, star};
    use approx::assert_abs_diff_eq;

    fn lam(g: &Graph) -> SpectralResult<f64> {
        spectral_radius(g, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn examples() {
        assert_abs_diff_eq!(lam(&star(4)).lambda1, 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(lam(&cycle(5).unwrap()).lambda1, 2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(lam(&split_graph(2, 7).unwrap()).lambda1, 3.0, epsilon = 1e-10);
        let k33 = lam(&complete_bipartite(3, 3));
        assert_abs_diff_eq!(k33.lambda1, 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(k33.lambda2, 0.0, epsilon = 1e-10);
    }

    #[test]
    fn edgeless_and_empty() {
        let r = lam(&Graph::empty(4));
        assert_eq!((r.lambda1, r.lambda2), (0.0, 0.0));
        assert!(r.perron.iter().all(|&v| (v - 0.5).abs() < 1e-15));
        assert_eq!(spectral_radius(&Graph::empty(0), 1e-10), Err(Error::ZeroVertices));
    }

    #[test]
    fn disconnected_support_and_lambda2() {
        // K4 ⊔ K3 ⊔ K1: λ₁ = 3 on the K4 block, λ₂ = 2 from the triangle.
        let g = crate::graph::disjoint_union(
            &crate::graph::disjoint_union(&complete(4), &complete(3)).unwrap(),
            &Graph::empty(1),
        )
        .unwrap();
        let r = lam(&g);
        assert_abs_diff_eq!(r.lambda1, 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r.lambda2, 2.0, epsilon = 1e-10);
        assert!(r.perron[4..].iter().all(|&v| v == 0.0));
        // tie: two triangles, vector on the first
        let two = crate::graph::disjoint_union(&complete(3), &complete(3)).unwrap();
        let r = lam(&two);
        assert!(r.perron[3..].iter().all(|&v| v == 0.0));
        assert_abs_diff_eq!(r.lambda2, 2.0, epsilon = 1e-10);
    }

    #[test]
    fn rayleigh_examples() {
        let h = 0.5f64.sqrt();
        assert_abs_diff_eq!(rayleigh(&complete(2), &[h, h]).unwrap(), 1.0, epsilon = 1e-12);
        let g = complete_bipartite(2, 3);
        let x = two_level_vector::<f64>(5, &[0, 1], &[2, 3, 4]).unwrap();
        assert_abs_diff_eq!(rayleigh(&g, &x).unwrap(), 6f64.sqrt(), epsilon = 1e-12);
        let c = cycle(7).unwrap();
        let u = vec![1.0 / 7f64.sqrt(); 7];
        assert_abs_diff_eq!(rayleigh(&c, &u).unwrap(), 2.0, epsilon = 1e-12);
        assert!(matches!(rayleigh(&c, &[1.0; 7]), Err(Error::NonUnitVector(_))));
    }

    #[test]
    fn two_level_examples() {
        let x = two_level_vector::<f64>(4, &[0, 1], &[2, 3]).unwrap();
        assert!(x.iter().all(|&v| (v - 0.5).abs() < 1e-15));
        let x = two_level_vector::<f64>(2, &[0], &[1]).unwrap();
        assert_abs_diff_eq!(x[0], 0.5f64.sqrt(), epsilon = 1e-15);
        let x = two_level_vector::<f64>(10, &[0, 1], &[2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!((x[0], x[5]), (0.5, 0.25));
        assert!(two_level_vector::<f64>(3, &[], &[1]).is_err());
        assert!(two_level_vector::<f64>(3, &[0], &[0]).is_err());
    }

    #[test]
    fn iterative_matches_dense() {
        let g = split_graph(3, 40).unwrap();
        let d = lam(&g);
        let it = SpectralSolver::<f64>::new()
            .with_method(Method::Iterative)
            .solve(&g)
            .unwrap();
        assert!(it.converged);
        assert_abs_diff_eq!(d.lambda1, it.lambda1, epsilon = 1e-9);
        assert_abs_diff_eq!(d.lambda2, it.lambda2, epsilon = 1e-6);
        assert!(it.residual <= 1e-10);
    }

    #[test]
    fn single_precision() {
        let r = SpectralSolver::<f32>::new().solve(&complete(5)).unwrap();
        assert!((r.lambda1 - 4.0).abs() < 1e-5);
        assert!(r.residual <= SpectralSolver::<f32>::new().tol);
    }

    #[test]
    fn sparse_matches_dense_graph() {
        let g = crate::generators::hypercube(4).unwrap();
        let s = SparseGraph::from(&g);
        let a = SpectralSolver::<f64>::new().solve(&g).unwrap();
        let b = SpectralSolver::<f64>::new().solve(&s).unwrap();
        assert_abs_diff_eq!(a.lambda1, b.lambda1, epsilon = 1e-12);
        assert_abs_diff_eq!(a.lambda1, 4.0, epsilon = 1e-10);
    }
}
