//! `stl` command-line front end.
//!
//! Exit codes: 0 when every checked statement holds, 2 when a `verify`
//! subcommand finds a violation, 1 on usage or input errors.

mod output;

use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use stl_core::forbidden::{format_ratio, profile};
use stl_core::generators::{parse_family_spec, parse_params};
use stl_core::io::{parse_graph, to_edge_list, to_graph6};
use stl_core::search::{self, SearchOptions, SearchRecord, Shape, Verdict};
use stl_core::stability;
use stl_core::{canonical_form, family, FamilyTag, Graph, SpectralSolver64};

pub use output::{fmt_f, round_sig, SIG_DIGITS};
use output::{fmt_opt, json, object, Csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "stl", version, about = "Spectral Turán lab: generators, spectra and extremal checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format; the default depends on the subcommand.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Eigen-equation residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, env = "STL_WORKERS", default_value_t = 1)]
    pub workers: usize,
    /// Omit the elapsed-time field so output is byte-reproducible.
    #[arg(long, global = true)]
    pub stable_output: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    EdgeList,
    Graph6,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::EdgeList => "edge-list",
            Format::Graph6 => "graph6",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Edge-list or graph6 file, a graph6 string, or `-` for stdin.
    pub input: Option<String>,
    /// Build the graph from a family tag instead of reading it.
    #[arg(long)]
    pub family: Option<String>,
    /// Comma-separated family parameters.
    #[arg(long)]
    pub params: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from a family.
    Gen {
        family: String,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Spectral radius, second eigenvalue and Perron vector.
    Lambda(GraphInput),
    /// Chromatic data, colour surplus, A_F and the M_F maximizer.
    Profile(GraphInput),
    /// Exhaustive F-free spectral extremal search by edge count.
    Search {
        /// Forbidden graph: a file or `family:params`.
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Check a statement and exit 2 on violation.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Canonical key and canonical labelling.
    Canon(GraphInput),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Triangle-free graphs: λ² <= m.
    Nosal {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 9)]
        m_max: usize,
    },
    /// K_{r+1}-free graphs: λ² <= (1 - 1/r)2m.
    Nikiforov {
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 9)]
        m_max: usize,
    },
    /// C4-free graphs: λ <= √m, equality only for the star.
    C4 {
        #[arg(long, default_value_t = 10)]
        m: usize,
    },
    /// Shape of the F-free maximizers.
    Structure {
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        m: usize,
    },
    /// |λ − √m − e(M)/v(M)|·√m on the predicted extremal graphs.
    Asymptotic {
        #[arg(long)]
        forbid: String,
        /// Comma-separated edge counts.
        #[arg(long, default_value = "100,1000,10000,100000")]
        ms: String,
        #[arg(long, default_value_t = 0.5)]
        constant: f64,
    },
    /// σ(F) = |F| − α(F) and the split-graph index for tabulated families.
    Table1 {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        params: Option<String>,
    },
    /// Perron-vector stability on seeded K_{a,b} perturbations, or on a given pair.
    Stability {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Perturbed graph `G` (file or graph6); requires `--host`.
        #[arg(long, requires = "host")]
        graph: Option<String>,
        /// Reference graph `H` (file or graph6).
        #[arg(long, requires = "graph")]
        host: Option<String>,
    },
    /// Turán graph edge counts against the quadratic bounds.
    TuranBounds {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 60)]
        n_max: usize,
    },
    /// Random t-subset sampling of a complete r-partite copy in a damaged blow-up.
    BlowupSample {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 30)]
        part_size: usize,
        #[arg(long, default_value_t = 25)]
        removed: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// λ₁² + λ₂² <= (1 − 1/r)2m over K_{r+1}-free graphs of order > r.
    BnConjecture {
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(stl_core::Error),
    Io(std::io::Error),
}

impl From<stl_core::Error> for Failure {
    fn from(e: stl_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = match f {
                Failure::Usage(m) => writeln!(err, "error: {m}"),
                Failure::Core(e) => writeln!(err, "error: {e}"),
                Failure::Io(e) => writeln!(err, "error: {e}"),
            };
            EXIT_USAGE
        }
    }
}

struct Ctx<'a> {
    g: &'a Global,
    start: Instant,
}

impl Ctx<'_> {
    fn format(&self, default: Format, allowed: &[Format], cmd: &str) -> Result<Format, Failure> {
        let f = self.g.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            usage(format!("format '{}' is not available for {cmd}", f.name()))
        }
    }

    fn json<T: serde::Serialize>(&self, out: &mut dyn Write, v: &T) -> std::io::Result<()> {
        json(out, v, self.g.stable_output, self.start.elapsed().as_millis())
    }

    fn opts(&self) -> SearchOptions {
        SearchOptions { workers: self.g.workers, tol: self.g.tol }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let g = &cli.global;
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(g.tol > 0.0) {
        return usage("--tol must be positive");
    }
    if g.workers == 0 {
        return usage("--workers must be at least 1");
    }
    let ctx = Ctx { g, start: Instant::now() };
    match &cli.command {
        Command::Gen { family: tag, params, k, m, r } => gen(&ctx, out, tag, params.as_deref(), *k, *m, *r),
        Command::Lambda(input) => lambda(&ctx, out, input),
        Command::Profile(input) => profile_cmd(&ctx, out, input),
        Command::Search { forbid, m, m_max } => search_cmd(&ctx, out, forbid, *m, *m_max),
        Command::Verify { which } => verify(&ctx, out, which),
        Command::Canon(input) => canon(&ctx, out, input),
    }
}

fn read_source(src: &str) -> Result<Graph, Failure> {
    let text = if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(src).is_file() {
        std::fs::read_to_string(src)?
    } else {
        src.to_string()
    };
    Ok(parse_graph(&text)?)
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.input, &input.family) {
        (Some(_), Some(_)) => usage("give either a graph input or --family, not both"),
        (Some(src), None) => read_source(src),
        (None, Some(tag)) => {
            let tag: FamilyTag = tag.parse()?;
            let params = parse_params(input.params.as_deref().unwrap_or(""))?;
            Ok(family(tag, &params)?)
        }
        (None, None) => usage("missing graph: pass a file, a graph6 string, `-`, or --family"),
    }
}

/// `--forbid` accepts an existing file or a `family:params` spec.
fn load_forbid(spec: &str) -> Result<Graph, Failure> {
    if Path::new(spec).is_file() {
        return read_source(spec);
    }
    let (tag, params) = parse_family_spec(spec)?;
    Ok(family(tag, &params)?)
}

fn write_graph(ctx: &Ctx, out: &mut dyn Write, g: &Graph, fmt: Format, extra: Vec<(&str, Value)>) -> Outcome {
    match fmt {
        Format::EdgeList => write!(out, "{}", to_edge_list(g))?,
        Format::Graph6 => writeln!(out, "{}", to_graph6(g))?,
        Format::Csv => {
            let mut csv = Csv::new(out, "u,v")?;
            for (u, v) in g.edges() {
                csv.row(&[u.to_string(), v.to_string()])?;
            }
        }
        Format::Json => {
            let mut pairs = extra;
            pairs.push(("n", Value::from(g.order())));
            pairs.push(("m", Value::from(g.edge_count())));
            pairs.push(("graph6", Value::from(to_graph6(g))));
            pairs.push(("edges", serde_json::to_value(g.edges()).expect("plain data")));
            ctx.json(out, &object(pairs))?;
        }
    }
    Ok(EXIT_OK)
}

fn gen(
    ctx: &Ctx,
    out: &mut dyn Write,
    tag: &str,
    params: Option<&str>,
    k: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
) -> Outcome {
    let tag: FamilyTag = tag.parse()?;
    let params = match (params, tag) {
        (Some(p), _) => parse_params(p)?,
        (None, FamilyTag::Split) => match (k, m) {
            (Some(k), Some(m)) => vec![k, m],
            _ => return usage("split needs --k and --m (or --params k,m)"),
        },
        (None, FamilyTag::Book) => match (r, k) {
            (Some(r), Some(k)) => vec![r, k],
            _ => return usage("book needs --r and --k (or --params r,k)"),
        },
        (None, _) => return usage(format!("{tag} needs --params")),
    };
    let g = family(tag, &params)?;
    let fmt = ctx.format(Format::EdgeList, &[Format::EdgeList, Format::Graph6, Format::Json, Format::Csv], "gen")?;
    let extra = vec![("family", Value::from(tag.as_str())), ("params", Value::from(params))];
    write_graph(ctx, out, &g, fmt, extra)
}

fn lambda(ctx: &Ctx, out: &mut dyn Write, input: &GraphInput) -> Outcome {
    let g = load_graph(input)?;
    let r = SpectralSolver64::new().with_tol(ctx.g.tol).solve(&g)?;
    match ctx.format(Format::Json, &[Format::Json, Format::Csv], "lambda")? {
        Format::Csv => {
            let mut csv = Csv::new(out, "n,m,lambda1,lambda2,residual,method,iterations,converged")?;
            csv.row(&[
                g.order().to_string(),
                g.edge_count().to_string(),
                fmt_f(r.lambda1),
                fmt_f(r.lambda2),
                fmt_f(r.residual),
                r.method.as_str().to_string(),
                r.iterations.to_string(),
                r.converged.to_string(),
            ])?;
        }
        _ => {
            let mut v = serde_json::to_value(&r).expect("plain data");
            if let Value::Object(map) = &mut v {
                map.insert("n".into(), Value::from(g.order()));
                map.insert("m".into(), Value::from(g.edge_count()));
            }
            ctx.json(out, &v)?;
        }
    }
    Ok(EXIT_OK)
}

fn profile_cmd(ctx: &Ctx, out: &mut dyn Write, input: &GraphInput) -> Outcome {
    let f = load_graph(input)?;
    let p = profile(&f)?;
    match ctx.format(Format::Json, &[Format::Json, Format::Csv], "profile")? {
        Format::Csv => {
            let mut csv = Csv::new(out, "n,m,chromatic,colorCritical,almostBipartite,alpha,sigma,aFamilySize,mMaximizerRatio")?;
            csv.row(&[
                f.order().to_string(),
                f.edge_count().to_string(),
                p.chromatic.to_string(),
                p.color_critical.to_string(),
                p.almost_bipartite.to_string(),
                p.alpha.to_string(),
                p.sigma.map(|s| s.to_string()).unwrap_or_default(),
                p.a_family.len().to_string(),
                p.m_maximizer.as_ref().map(|m| format_ratio(&m.ratio)).unwrap_or_default(),
            ])?;
        }
        _ => ctx.json(out, &p)?,
    }
    Ok(EXIT_OK)
}

fn m_range(m: Option<usize>, m_max: Option<usize>) -> Result<(usize, usize), Failure> {
    match (m, m_max) {
        (Some(m), None) => Ok((m, m)),
        (None, Some(hi)) => Ok((1, hi)),
        (Some(lo), Some(hi)) if lo <= hi => Ok((lo, hi)),
        (Some(_), Some(_)) => usage("--m must not exceed --m-max"),
        (None, None) => usage("give --m or --m-max"),
    }
}

fn record_row(r: &SearchRecord) -> Vec<String> {
    vec![
        r.forbidden.clone(),
        r.m.to_string(),
        fmt_opt(r.max_lambda),
        fmt_opt(r.bound),
        fmt_opt(r.slack()),
        r.verdict.as_str().to_string(),
    ]
}

fn search_cmd(ctx: &Ctx, out: &mut dyn Write, forbid: &str, m: Option<usize>, m_max: Option<usize>) -> Outcome {
    let f = load_forbid(forbid)?;
    let (lo, hi) = m_range(m, m_max)?;
    let records = (lo..=hi)
        .map(|m| search::spectral_extremal(&f, m, &ctx.opts()))
        .collect::<stl_core::Result<Vec<_>>>()?;
    match ctx.format(Format::Csv, &[Format::Json, Format::Csv], "search")? {
        Format::Json => ctx.json(out, &object(vec![("records", serde_json::to_value(&records).expect("plain data"))]))?,
        _ => {
            let mut csv = Csv::new(out, &format!("{},freeCount,totalCount,maximizers", SearchRecord::csv_header()))?;
            for r in &records {
                let mut row = record_row(r);
                row.push(r.free_count.to_string());
                row.push(r.total_count.to_string());
                row.push(r.maximizers.iter().map(|e| e.key.as_str()).collect::<Vec<_>>().join(" "));
                csv.row(&row)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn verify(ctx: &Ctx, out: &mut dyn Write, which: &Verify) -> Outcome {
    let tabular = [Format::Csv, Format::Json];
    match which {
        Verify::Nosal { m, m_max } => nikiforov(ctx, out, 2, *m, *m_max, "verify nosal"),
        Verify::Nikiforov { r, m, m_max } => nikiforov(ctx, out, *r, *m, *m_max, "verify nikiforov"),
        Verify::C4 { m } => {
            let rep = search::verify_c4(*m, &ctx.opts())?;
            let ok = rep.record.verdict != Verdict::BoundViolated && rep.unique_star;
            match ctx.format(Format::Csv, &tabular, "verify c4")? {
                Format::Json => ctx.json(out, &rep)?,
                _ => {
                    let mut csv = Csv::new(out, &format!("{},maximizers,uniqueStar", SearchRecord::csv_header()))?;
                    let mut row = record_row(&rep.record);
                    row.push(rep.record.maximizers.len().to_string());
                    row.push(rep.unique_star.to_string());
                    csv.row(&row)?;
                }
            }
            Ok(verdict(ok))
        }
        Verify::Structure { forbid, m } => {
            let f = load_forbid(forbid)?;
            let rep = search::verify_structure(&f, *m, &ctx.opts())?;
            match ctx.format(Format::Json, &tabular, "verify structure")? {
                Format::Csv => {
                    let mut csv = Csv::new(out, "m,key,lambda,shape,a")?;
                    for c in &rep.cases {
                        let (shape, a) = match &c.shape {
                            Shape::CompleteBipartite => ("complete-bipartite", String::new()),
                            Shape::Split { a } => ("split", a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
                            Shape::Neither => ("neither", String::new()),
                        };
                        csv.row(&[rep.m.to_string(), c.key.clone(), fmt_f(c.lambda), shape.into(), a])?;
                    }
                }
                _ => ctx.json(out, &rep)?,
            }
            // small-m deviations are informational
            Ok(EXIT_OK)
        }
        Verify::Asymptotic { forbid, ms, constant } => {
            let f = load_forbid(forbid)?;
            let ms = parse_params(ms)?;
            let rep = search::verify_asymptotic(&f, &ms, *constant, ctx.g.tol)?;
            match ctx.format(Format::Csv, &tabular, "verify asymptotic")? {
                Format::Json => ctx.json(out, &rep)?,
                _ => {
                    let mut csv = Csv::new(out, "regime,ratio,m,lambda,predicted,deviation,scaled,residual,constant")?;
                    let ratio = rep.ratio.map(|r| format_ratio(&r)).unwrap_or_default();
                    for row in &rep.rows {
                        csv.row(&[
                            rep.regime.to_string(),
                            ratio.clone(),
                            row.m.to_string(),
                            fmt_f(row.lambda),
                            fmt_f(row.predicted),
                            fmt_f(row.deviation),
                            fmt_f(row.scaled),
                            fmt_f(row.residual),
                            fmt_f(rep.constant),
                        ])?;
                    }
                }
            }
            Ok(verdict(rep.bounded))
        }
        Verify::Table1 { family: tag, params } => {
            let instances = match tag {
                Some(t) => vec![(t.parse::<FamilyTag>()?, parse_params(params.as_deref().unwrap_or(""))?)],
                None if params.is_some() => return usage("--params needs --family"),
                None => search::table1_instances(),
            };
            let reports = instances
                .iter()
                .map(|(t, p)| search::table1_check(*t, p))
                .collect::<stl_core::Result<Vec<_>>>()?;
            let ok = reports.iter().all(|r| r.pass);
            match ctx.format(Format::Csv, &tabular, "verify table1")? {
                Format::Json => ctx.json(out, &object(vec![("rows", serde_json::to_value(&reports).expect("plain data")), ("pass", Value::from(ok))]))?,
                _ => {
                    let mut csv = Csv::new(out, "family,params,order,alpha,sigma,expectedK,sigmaIdentity,kMatches,sampleM,splitFree,pass")?;
                    for r in &reports {
                        csv.row(&[
                            r.family.clone(),
                            r.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                            r.order.to_string(),
                            r.alpha.to_string(),
                            r.sigma.to_string(),
                            r.expected_k.map(|k| k.to_string()).unwrap_or_default(),
                            r.sigma_identity.to_string(),
                            r.k_matches.map(|k| k.to_string()).unwrap_or_default(),
                            r.sample_m.to_string(),
                            r.split_free.to_string(),
                            r.pass.to_string(),
                        ])?;
                    }
                }
            }
            Ok(verdict(ok))
        }
        Verify::Stability { trials, graph, host } => {
            let reports = match (graph, host) {
                (Some(g), Some(h)) => vec![stability::verify_pf_stability(&read_source(g)?, &read_source(h)?, ctx.g.tol.max(1e-9))?],
                _ => stability::stability_batch(ctx.g.seed, *trials, ctx.g.tol.max(1e-9), ctx.g.workers)?.reports,
            };
            let ok = reports.iter().all(|r| r.pass1 && r.pass2);
            match ctx.format(Format::Csv, &tabular, "verify stability")? {
                Format::Json => ctx.json(
                    out,
                    &object(vec![
                        ("seed", Value::from(ctx.g.seed)),
                        ("trials", Value::from(reports.len())),
                        ("failures", Value::from(reports.iter().filter(|r| !(r.pass1 && r.pass2)).count())),
                        ("reports", serde_json::to_value(&reports).expect("plain data")),
                    ]),
                )?,
                _ => {
                    let mut csv = Csv::new(out, "seed,trial,editCount,gap,lhs1,rhs1,lhs2,rhs2,pass1,pass2")?;
                    for (i, r) in reports.iter().enumerate() {
                        csv.row(&[
                            ctx.g.seed.to_string(),
                            i.to_string(),
                            r.edit_count.to_string(),
                            fmt_f(r.gap),
                            fmt_f(r.lhs1),
                            fmt_f(r.rhs1),
                            fmt_f(r.lhs2),
                            fmt_f(r.rhs2),
                            r.pass1.to_string(),
                            r.pass2.to_string(),
                        ])?;
                    }
                }
            }
            Ok(verdict(ok))
        }
        Verify::TuranBounds { r, n_max } => {
            let rs: Vec<usize> = match r {
                Some(r) => vec![*r],
                None => (1..=8).collect(),
            };
            let mut rows = Vec::new();
            for &r in &rs {
                for n in r..=*n_max {
                    rows.push(stability::turan_edge_bounds(n, r)?);
                }
            }
            if rows.is_empty() {
                return usage("no (n, r) pairs with n >= r in range");
            }
            let ok = rows.iter().all(|r| r.pass());
            match ctx.format(Format::Csv, &tabular, "verify turan-bounds")? {
                Format::Json => ctx.json(out, &object(vec![("rows", serde_json::to_value(&rows).expect("plain data")), ("pass", Value::from(ok))]))?,
                _ => {
                    let mut csv = Csv::new(out, "n,r,s,edges,lower,upper,identity,lowerHolds,upperHolds")?;
                    for t in &rows {
                        csv.row(&[
                            t.n.to_string(),
                            t.r.to_string(),
                            t.s.to_string(),
                            t.edges.to_string(),
                            fmt_f(t.lower),
                            fmt_f(t.upper),
                            t.identity_holds.to_string(),
                            t.lower_holds.to_string(),
                            t.upper_holds.to_string(),
                        ])?;
                    }
                }
            }
            Ok(verdict(ok))
        }
        Verify::BlowupSample { r, part_size, removed, t, trials } => {
            let (g, parts) = stability::damaged_blowup(*r, *part_size, *removed, ctx.g.seed)?;
            let stats = stability::blowup_success_rate(&g, &parts, *t, ctx.g.seed, *trials, ctx.g.workers)?;
            // union bound over the C(r,2) t² cross pairs, 5σ binomial margin
            let pairs = (r * (r - 1) / 2 * t * t) as f64;
            let p = 1.0 - pairs * stats.defect as f64 / (part_size * part_size) as f64;
            let threshold = p - 5.0 * (p.clamp(0.0, 1.0) * (1.0 - p.clamp(0.0, 1.0)) / *trials as f64).sqrt();
            let ok = stats.invalid_successes == 0 && stats.rate >= threshold;
            match ctx.format(Format::Csv, &tabular, "verify blowup-sample")? {
                Format::Json => {
                    let mut v = serde_json::to_value(&stats).expect("plain data");
                    if let Value::Object(map) = &mut v {
                        map.insert("predictedRate".into(), Value::from(p));
                        map.insert("threshold".into(), Value::from(threshold));
                        map.insert("pass".into(), Value::from(ok));
                    }
                    ctx.json(out, &v)?;
                }
                _ => {
                    let mut csv = Csv::new(out, "seed,trials,successes,rate,predictedRate,threshold,invalidSuccesses,defect,pass")?;
                    csv.row(&[
                        stats.seed.to_string(),
                        stats.trials.to_string(),
                        stats.successes.to_string(),
                        fmt_f(stats.rate),
                        fmt_f(p),
                        fmt_f(threshold),
                        stats.invalid_successes.to_string(),
                        stats.defect.to_string(),
                        ok.to_string(),
                    ])?;
                }
            }
            Ok(verdict(ok))
        }
        Verify::BnConjecture { r, m, m_max } => {
            let (lo, hi) = m.map_or((1, *m_max), |m| (m, m));
            let rep = search::conjecture_bn_probe(*r, lo, hi, &ctx.opts())?;
            match ctx.format(Format::Csv, &tabular, "verify bn-conjecture")? {
                Format::Json => ctx.json(out, &rep)?,
                _ => {
                    let mut csv = Csv::new(out, "r,m,count,maxSlack,argmax")?;
                    for row in &rep.rows {
                        csv.row(&[
                            rep.r.to_string(),
                            row.m.to_string(),
                            row.count.to_string(),
                            fmt_opt(row.max_slack),
                            row.argmax.as_ref().map(|e| e.key.clone()).unwrap_or_default(),
                        ])?;
                    }
                }
            }
            Ok(verdict(rep.holds))
        }
    }
}

fn nikiforov(ctx: &Ctx, out: &mut dyn Write, r: usize, m: Option<usize>, m_max: usize, cmd: &str) -> Outcome {
    let (lo, hi) = m.map_or((1, m_max), |m| (m, m));
    let rep = search::verify_nikiforov(r, lo, hi, &ctx.opts())?;
    match ctx.format(Format::Csv, &[Format::Csv, Format::Json], cmd)? {
        Format::Json => ctx.json(out, &rep)?,
        _ => {
            let mut csv = Csv::new(out, "r,m,maxLambdaSq,bound,slack,violations,equalityCount,equalityAsPredicted")?;
            for row in &rep.rows {
                csv.row(&[
                    r.to_string(),
                    row.m.to_string(),
                    fmt_f(row.max_lambda_sq),
                    fmt_f(row.bound),
                    fmt_f(row.slack),
                    row.violations.to_string(),
                    row.equality.len().to_string(),
                    row.equality_as_predicted.to_string(),
                ])?;
            }
        }
    }
    Ok(verdict(rep.holds))
}

fn canon(ctx: &Ctx, out: &mut dyn Write, input: &GraphInput) -> Outcome {
    let g = load_graph(input)?;
    let c = canonical_form(&g)?;
    let h = c.graph(&g);
    let fmt = ctx.format(Format::Json, &[Format::Json, Format::Graph6, Format::EdgeList, Format::Csv], "canon")?;
    let extra = vec![
        ("key", Value::from(c.key.to_hex())),
        ("labeling", Value::from(c.labeling.clone())),
    ];
    write_graph(ctx, out, &h, fmt, extra)
}
