//! Constructors for the named graph families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{blow_up, join, Graph, MAX_VERTICES};
use crate::scalar::Scalar;

/// Parameters of the split graph `S_{k,m}`: `m = C(k,2) + k*t + r`, `0 <= r < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitGraphSpec {
    pub k: usize,
    pub m: usize,
    pub t: usize,
    pub r: usize,
}

impl SplitGraphSpec {
    pub fn new(k: usize, m: usize) -> Result<SplitGraphSpec> {
        if k == 0 {
            return invalid("split graph needs k >= 1");
        }
        let ck2 = k * (k - 1) / 2;
        if m <= ck2 || m <= k.saturating_sub(1) {
            return invalid(format!("split graph needs m > C(k,2) = {ck2}, got m = {m}"));
        }
        let rest = m - ck2;
        Ok(SplitGraphSpec {
            k,
            m,
            t: rest / k,
            r: rest % k,
        })
    }

    /// `k + t`, plus one when the remainder vertex is present.
    pub fn order(&self) -> usize {
        self.k + self.t + usize::from(self.r > 0)
    }

    /// Edge list: clique `0..k`, independent vertices `k..k+t` joined to the
    /// clique, and (if `r > 0`) vertex `k+t` joined to clique vertices `0..r`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut e = Vec::with_capacity(self.m);
        for u in 0..k {
            for v in u + 1..k {
                e.push((u, v));
            }
        }
        for c in 0..k {
            for i in 0..self.t {
                e.push((c, k + i));
            }
        }
        for c in 0..self.r {
            e.push((c, k + self.t));
        }
        e
    }
}

/// `S_{k,m}`. With `r = 0` no extra vertex is added.
pub fn split_graph(k: usize, m: usize) -> Result<Graph> {
    let spec = SplitGraphSpec::new(k, m)?;
    Graph::from_edge_list(spec.order(), &spec.edges())
}

/// `(k - 1 + sqrt(4m - k^2 + 1)) / 2`, an upper bound on `lambda(S_{k,m})`.
pub fn split_lambda_upper<T: Scalar>(k: usize, m: usize) -> Result<T> {
    let rad = 4 * m as i128 - (k * k) as i128 + 1;
    if rad < 0 {
        return invalid(format!("4m - k^2 + 1 = {rad} is negative"));
    }
    let half = T::of(0.5);
    Ok(half * (T::of_usize(k) - T::one() + T::of(rad as f64).sqrt()))
}

/// Part sizes of `T_{n,r}`, larger parts first.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Turán graph `T_{n,r}`.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || n == 0 {
        return invalid("turan needs n >= 1 and r >= 1");
    }
    if n < r {
        return invalid(format!("turan({n}, {r}) would have empty parts"));
    }
    complete_multipartite(&turan_part_sizes(n, r))
}

/// Complete multipartite graph; part `i` occupies a consecutive label block.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return invalid("complete multipartite graph needs a nonempty list of positive sizes");
    }
    let n: usize = sizes.iter().sum();
    let mut g = Graph::try_empty(n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

/// `K_{1,k}` centred at 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid("cycle needs n >= 3");
    }
    let mut g = Graph::try_empty(n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("path needs at least one vertex");
    }
    let mut g = Graph::try_empty(n)?;
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

/// Perfect matching on `n` vertices (`n` even).
pub fn matching(n: usize) -> Result<Graph> {
    if n == 0 || n % 2 == 1 {
        return invalid("matching needs a positive even vertex count");
    }
    let mut g = Graph::try_empty(n)?;
    for i in 0..n / 2 {
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// Book `B_{r,k} = K_r ∨ kK_1`: `k` copies of `K_{r+1}` sharing a `K_r`.
pub fn book(r: usize, k: usize) -> Result<Graph> {
    if r == 0 || k == 0 {
        return invalid("book needs r >= 1 and k >= 1");
    }
    join(&complete(r), &Graph::empty(k))
}

/// `W_{2k+2} = K_1 ∨ C_{2k+1}`, hub at 0.
pub fn wheel_even(k: usize) -> Result<Graph> {
    if k == 0 {
        return invalid("wheel_even needs k >= 1");
    }
    join(&Graph::empty(1), &cycle(2 * k + 1)?)
}

/// `K_{s,t}^+`: `K_{s,t}` plus the edge `0-1` inside the part of size `s`.
pub fn kst_plus(s: usize, t: usize) -> Result<Graph> {
    if s < 2 || t == 0 {
        return invalid("kst_plus needs s >= 2 and t >= 1");
    }
    let mut g = complete_bipartite(s, t);
    g.add_edge(0, 1);
    Ok(g)
}

/// `C_k^+`: `C_k` plus the chord `0-2`.
pub fn cycle_plus(k: usize) -> Result<Graph> {
    if k < 4 {
        return invalid("cycle_plus needs k >= 4");
    }
    let mut g = cycle(k)?;
    g.add_edge(0, 2);
    Ok(g)
}

/// Graph of internally disjoint paths with the given lengths between
/// endpoints 0 and 1. Internal vertices are numbered path by path.
pub fn multi_theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.contains(&0) {
        return invalid("theta path lengths must be positive");
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return invalid("theta graph with two paths of length 1 would need a parallel edge");
    }
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::try_empty(n)?;
    let mut next = 2;
    for &l in lengths {
        let mut prev = 0;
        for _ in 1..l {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    Ok(g)
}

/// `θ_{r,p,q}`.
pub fn theta(r: usize, p: usize, q: usize) -> Result<Graph> {
    multi_theta(&[r, p, q])
}

/// `Θ_{t,ℓ}`: `t` paths of length `ℓ`.
pub fn theta_multi(t: usize, l: usize) -> Result<Graph> {
    if t == 0 {
        return invalid("theta_multi needs t >= 1");
    }
    multi_theta(&vec![l; t])
}

/// `Q_d` on `{0,1}^d`, vertex label = binary counter.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 14 {
        return invalid("hypercube needs 1 <= d <= 14");
    }
    let n = 1usize << d;
    let mut g = Graph::try_empty(n)?;
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// Grid `G_t` on `[t] x [t]`, vertex `(i, j)` labelled `i*t + j`.
pub fn grid(t: usize) -> Result<Graph> {
    if t == 0 {
        return invalid("grid needs t >= 1");
    }
    let mut g = Graph::try_empty(t.saturating_mul(t))?;
    for i in 0..t {
        for j in 0..t {
            if j + 1 < t {
                g.add_edge(i * t + j, i * t + j + 1);
            }
            if i + 1 < t {
                g.add_edge(i * t + j, (i + 1) * t + j);
            }
        }
    }
    Ok(g)
}

/// Prism `C_{2ℓ}^□`: outer cycle `0..2ℓ`, inner cycle `2ℓ..4ℓ`, spokes `i ~ 2ℓ+i`.
pub fn prism(l: usize) -> Result<Graph> {
    if l < 2 {
        return invalid("prism needs l >= 2");
    }
    let c = 2 * l;
    let mut g = Graph::try_empty(2 * c)?;
    for i in 0..c {
        g.add_edge(i, (i + 1) % c);
        g.add_edge(c + i, c + (i + 1) % c);
        g.add_edge(i, c + i);
    }
    Ok(g)
}

/// `C_{2ℓ}^dia`: `C_{2ℓ}` plus every chord `i ~ i+ℓ`.
pub fn cycle_diagonals(l: usize) -> Result<Graph> {
    if l < 2 {
        return invalid("cycle_diagonals needs l >= 2");
    }
    let mut g = cycle(2 * l)?;
    for i in 0..l {
        g.add_edge(i, i + l);
    }
    Ok(g)
}

/// 1-subdivision: edge `i` of `g.edges()` gets the new vertex `|g| + i`.
pub fn subdivide(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    let n = g.order();
    let mut out = Graph::try_empty(n + edges.len())?;
    for (i, (u, v)) in edges.into_iter().enumerate() {
        out.add_edge(u, n + i);
        out.add_edge(v, n + i);
    }
    Ok(out)
}

/// `K_r^+[t]`: `K_r[t]` plus the edge `0-1` inside the first part.
pub fn blowup_plus(r: usize, t: usize) -> Result<Graph> {
    if r == 0 || t < 2 {
        return invalid("blowup_plus needs r >= 1 and t >= 2");
    }
    let mut g = blow_up(&complete(r), t)?;
    g.add_edge(0, 1);
    Ok(g)
}

/// Four independent layers `I1, I2, I3, I4` of sizes `n+1-s, s, s, n+1-s`
/// with all edges between consecutive layers. Layers occupy consecutive labels.
pub fn layered(n: usize, s: usize) -> Result<Graph> {
    if s < 2 || n <= 2 * s {
        return invalid("layered needs s >= 2 and n > 2s");
    }
    let sizes = [n + 1 - s, s, s, n + 1 - s];
    let total: usize = sizes.iter().sum();
    let mut g = Graph::try_empty(total)?;
    let mut start = [0usize; 4];
    for i in 1..4 {
        start[i] = start[i - 1] + sizes[i - 1];
    }
    for i in 0..3 {
        for a in 0..sizes[i] {
            for b in 0..sizes[i + 1] {
                g.add_edge(start[i] + a, start[i + 1] + b);
            }
        }
    }
    Ok(g)
}

macro_rules! family_tags {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Named graph families accepted by [`family`].
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(rename_all = "snake_case")]
        pub enum FamilyTag { $($variant),* }

        impl FamilyTag {
            pub const ALL: &'static [FamilyTag] = &[$(FamilyTag::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(FamilyTag::$variant => $name),* }
            }
        }

        impl FromStr for FamilyTag {
            type Err = Error;
            fn from_str(s: &str) -> Result<FamilyTag> {
                match s {
                    $($name => Ok(FamilyTag::$variant),)*
                    _ => Err(Error::Parse(format!("unknown family tag '{s}'"))),
                }
            }
        }
    };
}

family_tags! {
    Split => "split",
    Turan => "turan",
    Multipartite => "multipartite",
    Book => "book",
    WheelEven => "wheel_even",
    KstPlus => "kst_plus",
    Cycle => "cycle",
    CyclePlus => "cycle_plus",
    Theta => "theta",
    ThetaMulti => "theta_multi",
    Hypercube => "hypercube",
    Grid => "grid",
    Prism => "prism",
    CycleDiagonals => "cycle_diagonals",
    Subdivision => "subdivision",
    Path => "path",
    Matching => "matching",
    Blowup => "blowup",
    BlowupPlus => "blowup_plus",
    Complete => "complete",
    CompleteBipartite => "complete_bipartite",
    Star => "star",
    Layered => "layered",
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn arity(tag: FamilyTag, params: &[usize], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        invalid(format!(
            "family '{tag}' takes {allowed:?} parameters, got {}",
            params.len()
        ))
    }
}

/// Builds a named family member.
///
/// | tag | params |
/// |---|---|
/// | `split` | `k, m` |
/// | `turan` | `n, r` |
/// | `multipartite` | part sizes |
/// | `book` | `k` for `B_{2,k}`, or `r, k` for `B_{r,k}` |
/// | `wheel_even` | `k` for `W_{2k+2}` |
/// | `kst_plus` | `s, t` |
/// | `cycle`, `path`, `complete` | `n` |
/// | `cycle_plus` | `k` |
/// | `theta` | `r, p, q` |
/// | `theta_multi` | `t, l` |
/// | `hypercube` | `d` |
/// | `grid` | `t` |
/// | `prism`, `cycle_diagonals` | `l` |
/// | `subdivision` | `n` for `sub(K_n)`, or `s, t` for `sub(K_{s,t})` |
/// | `matching` | vertex count |
/// | `blowup`, `blowup_plus` | `r, t` |
/// | `complete_bipartite` | `a, b` |
/// | `star` | `k` for `K_{1,k}` |
/// | `layered` | `n, s` |
pub fn family(tag: FamilyTag, params: &[usize]) -> Result<Graph> {
    use FamilyTag::*;
    let p = params;
    match tag {
        Split => {
            arity(tag, p, &[2])?;
            split_graph(p[0], p[1])
        }
        Turan => {
            arity(tag, p, &[2])?;
            turan(p[0], p[1])
        }
        Multipartite => complete_multipartite(p),
        Book => {
            arity(tag, p, &[1, 2])?;
            if p.len() == 1 {
                book(2, p[0])
            } else {
                book(p[0], p[1])
            }
        }
        WheelEven => {
            arity(tag, p, &[1])?;
            wheel_even(p[0])
        }
        KstPlus => {
            arity(tag, p, &[2])?;
            kst_plus(p[0], p[1])
        }
        Cycle => {
            arity(tag, p, &[1])?;
            cycle(p[0])
        }
        CyclePlus => {
            arity(tag, p, &[1])?;
            cycle_plus(p[0])
        }
        Theta => {
            arity(tag, p, &[3])?;
            theta(p[0], p[1], p[2])
        }
        ThetaMulti => {
            arity(tag, p, &[2])?;
            theta_multi(p[0], p[1])
        }
        Hypercube => {
            arity(tag, p, &[1])?;
            hypercube(p[0])
        }
        Grid => {
            arity(tag, p, &[1])?;
            grid(p[0])
        }
        Prism => {
            arity(tag, p, &[1])?;
            prism(p[0])
        }
        CycleDiagonals => {
            arity(tag, p, &[1])?;
            cycle_diagonals(p[0])
        }
        Subdivision => {
            arity(tag, p, &[1, 2])?;
            if p.len() == 1 {
                sized(p[0])?;
                subdivide(&complete(p[0]))
            } else {
                sized(p[0] + p[1])?;
                subdivide(&complete_bipartite(p[0], p[1]))
            }
        }
        Path => {
            arity(tag, p, &[1])?;
            path(p[0])
        }
        Matching => {
            arity(tag, p, &[1])?;
            matching(p[0])
        }
        Blowup => {
            arity(tag, p, &[2])?;
            if p[0] == 0 {
                return invalid("blowup needs r >= 1");
            }
            sized(p[0])?;
            blow_up(&complete(p[0]), p[1])
        }
        BlowupPlus => {
            arity(tag, p, &[2])?;
            sized(p[0])?;
            blowup_plus(p[0], p[1])
        }
        Complete => {
            arity(tag, p, &[1])?;
            sized(p[0])?;
            Ok(complete(p[0]))
        }
        CompleteBipartite => {
            arity(tag, p, &[2])?;
            sized(p[0] + p[1])?;
            Ok(complete_bipartite(p[0], p[1]))
        }
        Star => {
            arity(tag, p, &[1])?;
            sized(p[0] + 1)?;
            Ok(star(p[0]))
        }
        Layered => {
            arity(tag, p, &[2])?;
            layered(p[0], p[1])
        }
    }
}

fn sized(n: usize) -> Result<()> {
    crate::error::check_cap("vertex count", n, MAX_VERTICES)
}

/// Parses `tag:p1,p2,...` (as accepted by `--forbid`).
pub fn parse_family_spec(s: &str) -> Result<(FamilyTag, Vec<usize>)> {
    let (tag, params) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected 'family:params', got '{s}'")))?;
    Ok((tag.trim().parse()?, parse_params(params)?))
}

/// Parses a comma-separated list of nonnegative integers.
pub fn parse_params(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer parameter '{x}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    fn key(g: &Graph) -> crate::CanonicalKey {
        canonical_key(g).unwrap()
    }

    #[test]
    fn split_examples() {
        let s27 = split_graph(2, 7).unwrap();
        assert_eq!((s27.order(), s27.edge_count()), (5, 7));
        let s28 = split_graph(2, 8).unwrap();
        assert_eq!((s28.order(), s28.edge_count()), (6, 8));
        assert_eq!(s28.degree(5), 1);
        assert_eq!(key(&split_graph(1, 6).unwrap()), key(&star(6)));
        assert!(split_graph(3, 3).is_err());
        let spec = SplitGraphSpec::new(3, 9).unwrap();
        assert_eq!((spec.t, spec.r), (2, 0));
    }

    #[test]
    fn split_reconstructs_m() {
        for k in 1..8 {
            for m in k * (k - 1) / 2 + 1..60 {
                let Ok(s) = SplitGraphSpec::new(k, m) else { continue };
                assert_eq!(k * (k - 1) / 2 + k * s.t + s.r, m);
                assert!(s.r < k);
                assert_eq!(split_graph(k, m).unwrap().edge_count(), m);
            }
        }
    }

    #[test]
    fn split_upper_values() {
        assert_eq!(split_lambda_upper::<f64>(2, 7).unwrap(), 3.0);
        assert!((split_lambda_upper::<f64>(3, 9).unwrap() - (1.0 + 7f64.sqrt())).abs() < 1e-12);
        assert!((split_lambda_upper::<f64>(2, 8).unwrap() - 0.5 * (1.0 + 29f64.sqrt())).abs() < 1e-12);
        assert!(split_lambda_upper::<f64>(10, 2).is_err());
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan(5, 2).unwrap().edge_count(), 6);
        assert_eq!(turan(6, 3).unwrap().edge_count(), 12);
        assert_eq!(turan(4, 4).unwrap(), complete(4));
        assert!(turan(3, 4).is_err());
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&[3, 3]).unwrap(), complete_bipartite(3, 3));
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3));
        assert_eq!(
            key(&complete_multipartite(&[2, 2, 2]).unwrap()),
            key(&blow_up(&complete(3), 2).unwrap())
        );
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn family_examples() {
        let t32 = family(FamilyTag::ThetaMulti, &[3, 2]).unwrap();
        assert_eq!(key(&t32), key(&complete_bipartite(2, 3)));
        assert_eq!(key(&prism(2).unwrap()), key(&hypercube(3).unwrap()));
        assert_eq!(key(&family(FamilyTag::Subdivision, &[2, 2]).unwrap()), key(&cycle(8).unwrap()));
        let t122 = theta(1, 2, 2).unwrap();
        assert_eq!((t122.order(), t122.edge_count()), (4, 5));
        let mut k4e = complete(4);
        k4e.remove_edge(0, 1);
        assert_eq!(key(&t122), key(&k4e));
        assert!(theta(1, 1, 3).is_err());
        assert_eq!(key(&theta_multi(2, 5).unwrap()), key(&cycle(10).unwrap()));
    }

    #[test]
    fn closed_form_counts() {
        for (r, p, q) in [(1, 2, 2), (1, 3, 3), (2, 2, 3), (3, 4, 5)] {
            let g = theta(r, p, q).unwrap();
            assert_eq!((g.order(), g.edge_count()), (r + p + q - 1, r + p + q));
        }
        for r in 1..5 {
            for k in 1..5 {
                assert_eq!(book(r, k).unwrap().edge_count(), r * (r - 1) / 2 + r * k);
            }
        }
        for d in 1..8 {
            assert_eq!(hypercube(d).unwrap().edge_count(), d << (d - 1));
        }
        for t in 1..8 {
            assert_eq!(grid(t).unwrap().edge_count(), 2 * t * (t - 1));
        }
        for l in 2..8 {
            assert_eq!(prism(l).unwrap().edge_count(), 6 * l);
            assert_eq!(cycle_diagonals(l).unwrap().edge_count(), 3 * l);
        }
        for f in [complete(5), complete_bipartite(2, 4), cycle(7).unwrap()] {
            let s = subdivide(&f).unwrap();
            assert_eq!(s.order(), f.order() + f.edge_count());
            assert_eq!(s.edge_count(), 2 * f.edge_count());
        }
    }

    #[test]
    fn diagonals_bipartite_iff_odd() {
        for l in 2..=8 {
            assert_eq!(cycle_diagonals(l).unwrap().is_bipartite(), l % 2 == 1, "l = {l}");
        }
    }

    #[test]
    fn named_small_cases() {
        let w6 = wheel_even(2).unwrap();
        assert_eq!((w6.order(), w6.edge_count()), (6, 10));
        let k = kst_plus(3, 3).unwrap();
        assert_eq!(k.edge_count(), 10);
        assert!(k.has_edge(0, 1));
        let c = cycle_plus(5).unwrap();
        assert_eq!(c.edge_count(), 6);
        let bp = blowup_plus(3, 2).unwrap();
        assert_eq!(bp.edge_count(), 13);
        let l = layered(5, 2).unwrap();
        assert_eq!((l.order(), l.edge_count()), (12, 4 * 2 * 2 + 4));
        assert!(matching(5).is_err());
        assert_eq!(matching(6).unwrap().edge_count(), 3);
    }

    #[test]
    fn tags_round_trip() {
        for &t in FamilyTag::ALL {
            assert_eq!(t.as_str().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("nope".parse::<FamilyTag>().is_err());
        assert_eq!(
            parse_family_spec("theta:1,3,3").unwrap(),
            (FamilyTag::Theta, vec![1, 3, 3])
        );
        assert!(parse_params("1,-2").is_err());
    }

    #[test]
    fn turan_bounds_identity() {
        for n in 1..=60usize {
            for r in 1..=8usize.min(n) {
                let e = turan(n, r).unwrap().edge_count() as i64;
                let (n, r) = (n as i64, r as i64);
                let s = n % r;
                assert_eq!(2 * r * e, (r - 1) * n * n - s * (r - s));
            }
        }
    }
}
