//! `indpoly`: compute, construct, classify, verify and search from the shell.
//!
//! Exit status is 0 on success, 1 when an identity or computation fails, and
//! 2 when the input is malformed.

use std::collections::HashMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use indpoly::constructions::fingerprint;
use indpoly::*;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "indpoly",
    version,
    about = "Independence polynomials of small graphs"
)]
struct Cli {
    /// Largest vertex count the recursive engine will accept.
    #[arg(long, global = true, value_name = "N")]
    budget_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the independence, matching or dependence polynomial of a graph.
    Compute {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        kind: PolyKind,
        #[arg(long)]
        json: bool,
    },
    /// Build a graph and print it as graph6 (or an adjacency list).
    Construct(ConstructArgs),
    /// Print the coefficient profile of a polynomial.
    Classify {
        /// Polynomial text such as "1 + 6x + 9x^2"; otherwise I(G) of the graph.
        #[arg(long, value_name = "TEXT")]
        poly: Option<String>,
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        json: bool,
    },
    /// Check an identity; exits 0 iff it holds.
    Verify(VerifyArgs),
    /// Filter graph6 lines from stdin by a predicate on I(G).
    Search(SearchArgs),
}

#[derive(Args, Default)]
struct GraphSource {
    #[arg(long, value_name = "TEXT")]
    graph6: Option<String>,
    /// Named family, e.g. `cycle` or `gutman_j`.
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    #[arg(long, value_delimiter = ',', value_name = "A,B,..")]
    params: Vec<usize>,
    /// File holding one graph6 line or an adjacency list `n; u-v, ...`.
    #[arg(long, value_name = "PATH")]
    fixture: Option<PathBuf>,
}

#[derive(Args, Default)]
struct SecondSource {
    #[arg(long, value_name = "TEXT")]
    second_graph6: Option<String>,
    #[arg(long, value_name = "NAME")]
    second_family: Option<String>,
    #[arg(long, value_delimiter = ',', value_name = "A,B,..")]
    second_params: Vec<usize>,
    #[arg(long, value_name = "PATH")]
    second_fixture: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").args(["indpoly", "matching", "dependence"])))]
struct PolyKind {
    /// Independence polynomial (default).
    #[arg(long)]
    indpoly: bool,
    #[arg(long)]
    matching: bool,
    #[arg(long)]
    dependence: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Rule1,
    Rule2,
    Rule3,
    Corona,
    Family,
    HFamily,
    SymmetricDivisor,
    Gutman,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum GraphFormat {
    #[default]
    Graph6,
    Adjlist,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    what: Construction,
    #[command(flatten)]
    graph: GraphSource,
    #[command(flatten)]
    second: SecondSource,
    #[command(flatten)]
    cover: CoverSource,
    /// Corona anchors (default: every vertex).
    #[arg(long, value_delimiter = ',')]
    anchors: Option<Vec<usize>>,
    /// Order of the path for `h-family`.
    #[arg(long)]
    m: Option<usize>,
    /// Exponent for `symmetric-divisor`.
    #[arg(long)]
    k: Option<usize>,
    /// Clique orders for `gutman`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pq: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

#[derive(Args, Default)]
struct CoverSource {
    /// Cover text: parts separated by `;`, vertices by `,`.
    #[arg(long, value_name = "TEXT")]
    cover: Option<String>,
    #[arg(long, value_name = "PATH")]
    cover_file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, or `symmetric_divisor` / `gutman_symmetric`.
    identity: String,
    #[command(flatten)]
    graph: GraphSource,
    #[command(flatten)]
    second: SecondSource,
    #[command(flatten)]
    cover: CoverSource,
    #[arg(long, value_delimiter = ',')]
    clique: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    cycle: Option<Vec<usize>>,
    #[arg(long)]
    vertex: Option<usize>,
    /// Order for `hn_recurrence` and `antiregular_formula`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pq: Vec<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Symmetric,
    AlmostSymmetric,
    ReciprocalPair,
    NonUnimodal,
}

#[derive(Args)]
#[command(group(ArgGroup::new("pred").required(true).args(
    ["predicate", "symmetric", "almost_symmetric", "reciprocal_pair", "non_unimodal"]
)))]
struct SearchArgs {
    #[arg(long, value_enum)]
    predicate: Option<Predicate>,
    #[arg(long)]
    symmetric: bool,
    #[arg(long)]
    almost_symmetric: bool,
    #[arg(long)]
    reciprocal_pair: bool,
    #[arg(long)]
    non_unimodal: bool,
    /// graph6 file whose polynomials are matched by `reciprocal-pair`.
    #[arg(long, value_name = "PATH")]
    catalog: Option<PathBuf>,
    /// Emit JSON lines instead of the matching graph6 lines.
    #[arg(long)]
    json: bool,
}

impl SearchArgs {
    fn chosen(&self) -> Predicate {
        match (
            self.predicate,
            self.symmetric,
            self.almost_symmetric,
            self.reciprocal_pair,
        ) {
            (Some(p), ..) => p,
            (None, true, ..) => Predicate::Symmetric,
            (None, _, true, _) => Predicate::AlmostSymmetric,
            (None, _, _, true) => Predicate::ReciprocalPair,
            _ => Predicate::NonUnimodal,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Malformed(String),
    Failed(String),
    /// Stdout went away, e.g. piped into `head`.
    Closed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Closed => 0,
            CliError::Failed(_) => 1,
            CliError::Malformed(_) => 2,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) => CliError::Malformed(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::BudgetExceeded { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Malformed(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Engine(e) => e.into(),
            ConstructionError::Poly(e) => e.into(),
            ConstructionError::IdentityFailed(_) => CliError::Failed(e.to_string()),
            _ => CliError::Malformed(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        match e.kind() {
            io::ErrorKind::BrokenPipe => CliError::Closed,
            _ => CliError::Failed(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

fn graph_from_text(text: &str) -> CliResult<Graph> {
    if text.contains(';') {
        return Ok(text.parse()?);
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Malformed("empty graph file".into()))?;
    Ok(parse_graph6(line.as_bytes())?)
}

fn resolve(
    graph6: &Option<String>,
    family: &Option<String>,
    params: &[usize],
    fixture: &Option<PathBuf>,
    label: &str,
) -> CliResult<Option<Graph>> {
    let given = [graph6.is_some(), family.is_some(), fixture.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if given > 1 {
        return Err(CliError::Malformed(format!(
            "give exactly one {label} source"
        )));
    }
    if let Some(s) = graph6 {
        return Ok(Some(parse_graph6(s.as_bytes())?));
    }
    if let Some(f) = family {
        return Ok(Some(named_graph(f, params)?));
    }
    if let Some(path) = fixture {
        return graph_from_text(&read_file(path)?).map(Some);
    }
    Ok(None)
}

impl GraphSource {
    fn get(&self) -> CliResult<Option<Graph>> {
        resolve(
            &self.graph6,
            &self.family,
            &self.params,
            &self.fixture,
            "graph",
        )
    }

    fn require(&self) -> CliResult<Graph> {
        self.get()?.ok_or_else(|| {
            CliError::Malformed("a graph is required (--graph6, --family or --fixture)".into())
        })
    }
}

impl SecondSource {
    fn require(&self) -> CliResult<Graph> {
        resolve(
            &self.second_graph6,
            &self.second_family,
            &self.second_params,
            &self.second_fixture,
            "second graph",
        )?
        .ok_or_else(|| CliError::Malformed("a second graph is required (--second-*)".into()))
    }
}

impl CoverSource {
    fn text(&self) -> CliResult<String> {
        match (&self.cover, &self.cover_file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(p)) => Ok(read_file(p)?.trim().to_string()),
            _ => Err(CliError::Malformed(
                "give exactly one of --cover or --cover-file".into(),
            )),
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Malformed(format!("{flag} is required")))
}

fn pair(v: &[usize]) -> CliResult<(usize, usize)> {
    match v {
        [p, q] => Ok((*p, *q)),
        _ => Err(CliError::Malformed(
            "--pq takes two values, e.g. 4,3".into(),
        )),
    }
}

fn write_graph(out: &mut impl Write, g: &Graph, format: GraphFormat) -> CliResult<()> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", write_graph6(g)?)?,
        GraphFormat::Adjlist => writeln!(out, "{g}")?,
    }
    Ok(())
}

fn compute(
    out: &mut impl Write,
    g: &Graph,
    kind: &PolyKind,
    json: bool,
    budget: &ComputeBudget,
) -> CliResult<()> {
    let (name, poly) = if kind.matching {
        ("matching", matching_polynomial(g, budget)?)
    } else if kind.dependence {
        ("dependence", dependence_polynomial(g, budget)?)
    } else {
        ("independence", independence_polynomial(g, budget)?)
    };
    if json {
        let v = json!({ "graph": fingerprint(g), "kind": name, "polynomial": poly });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "{poly}")?;
    }
    Ok(())
}

fn construct(out: &mut impl Write, a: &ConstructArgs, budget: &ComputeBudget) -> CliResult<()> {
    let g = match a.what {
        Construction::Rule1 => rule1(&a.graph.require()?),
        Construction::Rule2 => {
            let g = a.graph.require()?;
            rule2(&g, &CycleCover::parse(&g, &a.cover.text()?)?)?
        }
        Construction::Rule3 => {
            let g = a.graph.require()?;
            rule3(&g, &CliqueCover::parse(&g, &a.cover.text()?)?)?
        }
        Construction::Corona => {
            let g = a.graph.require()?;
            let h = a.second.require()?;
            let anchors = match &a.anchors {
                Some(v) => VertexSet::new(v.iter().copied()),
                None => VertexSet::all(g.n()),
            };
            g.corona(&anchors, &h)?
        }
        Construction::Family => a.graph.require()?,
        Construction::HFamily => h_n_family(need(a.m, "--m")?),
        Construction::SymmetricDivisor => {
            build_symmetric_divisor(&a.graph.require()?, need(a.k, "--k")?, budget)?.0
        }
        Construction::Gutman => {
            let (p, q) = pair(&a.pq)?;
            gutman_symmetric(p, q, budget)?.0
        }
    };
    write_graph(out, &g, a.format)
}

fn classify_cmd(
    out: &mut impl Write,
    poly: &Option<String>,
    graph: &GraphSource,
    json: bool,
    budget: &ComputeBudget,
) -> CliResult<()> {
    let p: Polynomial = match (poly, graph.get()?) {
        (Some(text), None) => text.parse()?,
        (None, Some(g)) => independence_polynomial(&g, budget)?,
        _ => {
            return Err(CliError::Malformed(
                "give either --poly or one graph source".into(),
            ))
        }
    };
    let profile = classify(&p)?;
    let roots = count_real_roots(&p)?;
    if json {
        let v = json!({ "polynomial": p, "profile": profile, "real_roots": roots.count });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "polynomial: {p}")?;
        writeln!(out, "degree: {}", profile.degree)?;
        writeln!(out, "symmetric: {}", profile.symmetric)?;
        writeln!(out, "almost_symmetric: {}", profile.almost_symmetric)?;
        writeln!(out, "unimodal: {}", profile.unimodal)?;
        writeln!(out, "log_concave: {}", profile.log_concave)?;
        writeln!(
            out,
            "real_rooted: {} ({} real roots)",
            profile.real_rooted, roots.count
        )?;
    }
    Ok(())
}

fn build_identity(a: &VerifyArgs, id: IdentityId) -> CliResult<Identity> {
    let vertices = |v: &Option<Vec<usize>>, flag| {
        v.clone()
            .ok_or_else(|| CliError::Malformed(format!("{flag} is required")))
    };
    Ok(match id {
        IdentityId::UnionProduct => Identity::UnionProduct {
            g1: a.graph.require()?,
            g2: a.second.require()?,
        },
        IdentityId::JoinSum => Identity::JoinSum {
            g1: a.graph.require()?,
            g2: a.second.require()?,
        },
        IdentityId::VertexRecurrence => Identity::VertexRecurrence {
            g: a.graph.require()?,
            v: need(a.vertex, "--vertex")?,
        },
        IdentityId::CliqueCoronaLemma => Identity::CliqueCoronaLemma {
            g: a.graph.require()?,
            clique: VertexSet::new(vertices(&a.clique, "--clique")?),
            h: a.second.require()?,
        },
        IdentityId::CliqueCorona2K1 => Identity::CliqueCorona2K1 {
            g: a.graph.require()?,
            clique: VertexSet::new(vertices(&a.clique, "--clique")?),
        },
        IdentityId::CliqueCoverThm => {
            let g = a.graph.require()?;
            let cover = CliqueCover::parse(&g, &a.cover.text()?)?;
            Identity::CliqueCoverThm { g, cover }
        }
        IdentityId::CycleCoronaLemma => Identity::CycleCoronaLemma {
            g: a.graph.require()?,
            cycle: vertices(&a.cycle, "--cycle")?,
            h: a.second.require()?,
        },
        IdentityId::CycleCoverThm => {
            let g = a.graph.require()?;
            let cover = CycleCover::parse(&g, &a.cover.text()?)?;
            Identity::CycleCoverThm { g, cover }
        }
        IdentityId::MatchingLineGraph => Identity::MatchingLineGraph {
            g: a.graph.require()?,
        },
        IdentityId::HnRecurrence => Identity::HnRecurrence {
            n: need(a.n, "--n")?,
        },
        IdentityId::AntiregularFormula => Identity::AntiregularFormula {
            n: need(a.n, "--n")?,
        },
    })
}

fn verify(out: &mut impl Write, a: &VerifyArgs, budget: &ComputeBudget) -> CliResult<()> {
    let report = match a.identity.as_str() {
        "symmetric_divisor" => {
            match build_symmetric_divisor(&a.graph.require()?, need(a.k, "--k")?, budget) {
                Ok((_, r)) => r,
                Err(ConstructionError::IdentityFailed(r)) => *r,
                Err(e) => return Err(e.into()),
            }
        }
        "gutman_symmetric" => {
            let (p, q) = pair(&a.pq)?;
            gutman_symmetric(p, q, budget)?.1
        }
        name => {
            let id: IdentityId = name.parse()?;
            verify_identity(&build_identity(a, id)?, budget)?
        }
    };
    if a.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        let verdict = if report.holds { "holds" } else { "FAILS" };
        writeln!(out, "{}: {verdict}", report.identity)?;
        writeln!(out, "lhs: {}", report.lhs)?;
        writeln!(out, "rhs: {}", report.rhs)?;
        if let Some(q) = &report.quotient {
            writeln!(out, "quotient: {q}")?;
        }
    }
    if report.holds {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} does not hold",
            report.identity
        )))
    }
}

fn load_catalog(path: &Path, budget: &ComputeBudget) -> CliResult<HashMap<Polynomial, String>> {
    let mut catalog = HashMap::new();
    for line in read_file(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
    {
        let g = parse_graph6(line.as_bytes())?;
        catalog
            .entry(independence_polynomial(&g, budget)?)
            .or_insert_with(|| line.to_string());
    }
    Ok(catalog)
}

fn search(
    input: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
    a: &SearchArgs,
    budget: &ComputeBudget,
) -> CliResult<()> {
    let predicate = a.chosen();
    let catalog = match (predicate, &a.catalog) {
        (Predicate::ReciprocalPair, Some(path)) => Some(load_catalog(path, budget)?),
        (Predicate::ReciprocalPair, None) => {
            return Err(CliError::Malformed(
                "reciprocal-pair needs --catalog".into(),
            ))
        }
        _ => None,
    };
    let mut worst: Option<CliError> = None;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let outcome = parse_graph6(line.as_bytes())
            .map_err(CliError::from)
            .and_then(|g| Ok(independence_polynomial(&g, budget)?))
            .and_then(|poly| {
                let partner = match &catalog {
                    Some(c) => c.get(&poly.reciprocal()?).cloned(),
                    None => None,
                };
                let profile = classify(&poly)?;
                let hit = match predicate {
                    Predicate::Symmetric => profile.symmetric,
                    Predicate::AlmostSymmetric => profile.almost_symmetric,
                    Predicate::NonUnimodal => !profile.unimodal,
                    Predicate::ReciprocalPair => partner.is_some(),
                };
                Ok((poly, hit, partner))
            });
        match outcome {
            Ok((poly, true, partner)) => {
                if a.json {
                    let v = json!({ "graph6": line, "polynomial": poly, "partner": partner });
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "{line}")?;
                }
                out.flush()?;
            }
            Ok(_) => {}
            Err(e) => {
                writeln!(err, "line {}: {}", i + 1, describe(&e))?;
                if worst.as_ref().is_none_or(|w| e.code() > w.code()) {
                    worst = Some(e);
                }
            }
        }
    }
    worst.map_or(Ok(()), Err)
}

fn describe(e: &CliError) -> &str {
    match e {
        CliError::Malformed(m) | CliError::Failed(m) => m,
        CliError::Closed => "output closed",
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let budget = match cli.budget_n {
        Some(0) => return Err(CliError::Malformed("--budget-n must be positive".into())),
        Some(n) => ComputeBudget::with_recursive_limit(n),
        None => ComputeBudget::default(),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Compute { graph, kind, json } => {
            compute(&mut out, &graph.require()?, kind, *json, &budget)
        }
        Command::Construct(a) => construct(&mut out, a, &budget),
        Command::Classify { poly, graph, json } => {
            classify_cmd(&mut out, poly, graph, *json, &budget)
        }
        Command::Verify(a) => verify(&mut out, a, &budget),
        Command::Search(a) => search(io::stdin().lock(), &mut out, &mut io::stderr(), a, &budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Closed) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("indpoly: {}", describe(&e));
            ExitCode::from(e.code())
        }
    }
}
