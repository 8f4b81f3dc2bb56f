//! `semforge`: construct, verify and search super edge-magic labelings.
//!
//! Exit codes: 0 success or witness, 1 negative answer, 2 usage or input
//! error, 3 resource limit.

mod dot;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use semforge::families::{self, CertifiedLabeledGraph, DeerSpec, FamilyError};
use semforge::graph::io::{self as edgelist, EdgeList};
use semforge::graph::{indegree_one_orientation, Digraph, Graph, GraphError};
use semforge::labeling::{
    adjacency_matrix, counterdiagonal_profile, rotate_pi, LabelingRecord, VertexLabeling,
};
use semforge::product::io::{load_family_dir, parse_assignment, write_family_dir};
use semforge::product::{self as prod, ArcAssignment, CoronaUnion, ProductError};
use semforge::search::{self, CertifyOptions, Mode, ReportRecord, SearchError, SearchLimits};

use crate::dot::export_dot;

#[derive(Parser)]
#[command(name = "semforge", version, about = "Super edge-magic labelings of graphs with loops")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a family member (with its labeling) or a primitive graph.
    Construct {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a labeling against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a graph for a SEM (or, with --edge-magic, an edge-magic) labeling.
    Search {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = ModeArg::First)]
        mode: ModeArg,
        #[arg(long)]
        edge_magic: bool,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively certify that a graph has no SEM labeling.
    Certify {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Form a product over a labeled family, or run a named product check.
    Product {
        /// Host digraph (an undirected graph is oriented indegree-1).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Family directory, or `corona-iso`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        assignment: Option<PathBuf>,
        /// Host labeling; requests the canonical product labeling.
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classes of equal order and size with SEM status, or `--family snk` members.
    Census {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        limits: LimitArgs,
        /// Output file, or the family directory for `--family snk`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complementary labeling `p + 1 - f`.
    Complement {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Labeled adjacency matrix and its counterdiagonal profile.
    Matrix {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search `(2s) LK_{1,n}`; emits the report only.
    Explore {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct ParamArgs {
    /// `k=v,...`
    #[arg(long)]
    params: Option<String>,
    /// Comma-separated leaf counts along a spine.
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long, env = "SEMFORGE_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 1_000_000_000)]
    node_budget: u64,
    /// Seconds; 0 disables the timeout.
    #[arg(long, default_value_t = 300)]
    timeout: u64,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: self.node_budget,
            timeout: (self.timeout > 0).then(|| Duration::from_secs(self.timeout)),
            threads: self.threads.max(1),
            max_order: None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    First,
    Canonical,
    All,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::First => Mode::First,
            ModeArg::Canonical => Mode::Canonical,
            ModeArg::All => Mode::All,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn usage(flag: &'static str, message: impl Into<String>) -> Self {
        CliError::Usage { flag, message: message.into() }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Limit(_) => 3,
            _ => 2,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::OrderTooLarge { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::ResourceLimit(_) | GraphError::OrderTooLarge { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ProductError> for CliError {
    fn from(e: ProductError) -> Self {
        match e {
            ProductError::Graph(g) => g.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Outcome = Result<u8, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_edge_list(path: &Path) -> Result<EdgeList, CliError> {
    edgelist::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads a graph; a digraph file is read as its underlying graph.
fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(match load_edge_list(path)? {
        EdgeList::Graph(g) => g,
        EdgeList::Digraph(d) => d.underlying(),
    })
}

fn load_labeling(path: &Path, g: &Graph) -> Result<VertexLabeling, CliError> {
    let f = LabelingRecord::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if f.order() != g.order() {
        return Err(CliError::Input(format!(
            "{}: labeling has {} labels but the graph has {} vertices",
            path.display(),
            f.order(),
            g.order()
        )));
    }
    Ok(f)
}

struct Params {
    values: BTreeMap<String, usize>,
}

impl Params {
    fn parse(raw: Option<&str>) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for part in raw.unwrap_or("").split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CliError::usage("--params", format!("expected key=value, got {part:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::usage("--params", format!("{k}: not a non-negative integer")))?;
            if values.insert(k.trim().to_owned(), v).is_some() {
                return Err(CliError::usage("--params", format!("{k} given twice")));
            }
        }
        Ok(Params { values })
    }

    /// Fetches the named keys and rejects any others.
    fn take<const N: usize>(&self, keys: [&str; N]) -> Result<[usize; N], CliError> {
        if let Some(extra) = self.values.keys().find(|k| !keys.contains(&k.as_str())) {
            return Err(CliError::usage("--params", format!("unknown key {extra}; expected {}", keys.join(", "))));
        }
        let mut out = [0; N];
        for (slot, key) in out.iter_mut().zip(keys) {
            *slot = *self
                .values
                .get(key)
                .ok_or_else(|| CliError::usage("--params", format!("missing key {key}")))?;
        }
        Ok(out)
    }
}

fn parse_spec(raw: Option<&str>) -> Result<Vec<usize>, CliError> {
    let raw = raw.ok_or_else(|| CliError::usage("--spec", "required for this family"))?;
    raw.split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::usage("--spec", format!("{s:?} is not a leaf count"))))
        .collect()
}

#[derive(Serialize)]
struct Constructed {
    family: String,
    p: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<usize>>,
    sem: bool,
    window: Option<[usize; 2]>,
    magic_sum: Option<usize>,
}

impl Constructed {
    fn new(family: String, g: &Graph, f: Option<&VertexLabeling>) -> Self {
        let rec = f.map(|f| LabelingRecord::describe(g, f));
        Constructed {
            family,
            p: g.order(),
            q: g.size(),
            edges: g.edges().collect(),
            labels: f.map(|f| f.as_slice().to_vec()),
            sem: rec.as_ref().is_some_and(|r| r.sem),
            window: rec.as_ref().and_then(|r| r.window),
            magic_sum: rec.and_then(|r| r.magic_sum),
        }
    }
}

fn render_graph(format: Format, family: String, g: &Graph, f: Option<&VertexLabeling>) -> String {
    match format {
        Format::Edgelist => edgelist::write_graph(g),
        Format::Dot => export_dot(g, f),
        Format::Json => serde_json::to_string(&Constructed::new(family, g, f)).expect("serialises"),
    }
}

fn certified_family(name: &str, params: &Params, spec: Option<&str>) -> Result<Option<CertifiedLabeledGraph>, CliError> {
    Ok(Some(match name {
        "2lk11-lk1n" => {
            let [n] = params.take(["n"])?;
            families::two_lk11_and_lk1n(n)?
        }
        "2lk1m-lk1n" => {
            let [m, n] = params.take(["m", "n"])?;
            families::two_lk1m_and_lk1n(m, n)?
        }
        "odd-lk1n" => {
            let [s, n] = params.take(["s", "n"])?;
            families::odd_copies_lk1n(s, n)?
        }
        "thm24" => {
            let [m, n, s] = params.take(["m", "n", "s"])?;
            families::mixed_stars(m, n, s)?
        }
        "deer" => {
            params.take([])?;
            families::deer(&DeerSpec::new(parse_spec(spec)?)?)?
        }
        "odd-cycle" => {
            let [k] = params.take(["k"])?;
            families::odd_cycle(k)?
        }
        _ => return Ok(None),
    }))
}

fn corona_variant(name: &str, params: &Params) -> Result<Option<CoronaUnion>, CliError> {
    Ok(Some(match name {
        "corona-union-i" => {
            let [k, n] = params.take(["k", "n"])?;
            CoronaUnion::I { k, n }
        }
        "corona-union-ii" => {
            let [k, m, n] = params.take(["k", "m", "n"])?;
            CoronaUnion::II { k, m, n }
        }
        "corona-union-iii" => {
            let [k, s, n] = params.take(["k", "s", "n"])?;
            CoronaUnion::III { k, s, n }
        }
        "corona-union-iv" => {
            let [k, m, n, s] = params.take(["k", "m", "n", "s"])?;
            CoronaUnion::IV { k, m, n, s }
        }
        _ => return Ok(None),
    }))
}

fn primitive(name: &str, params: &Params, spec: Option<&str>) -> Result<Option<Graph>, CliError> {
    Ok(Some(match name {
        "loop" => {
            params.take([])?;
            families::loop_graph()
        }
        "lk1n" => {
            let [n] = params.take(["n"])?;
            families::lk1n(n)
        }
        "cycle" => {
            let [k] = params.take(["k"])?;
            families::cycle(k)?
        }
        "caterpillar" => {
            params.take([])?;
            families::caterpillar(&parse_spec(spec)?)?
        }
        _ => return Ok(None),
    }))
}

const FAMILY_NAMES: &str = "2lk11-lk1n, 2lk1m-lk1n, odd-lk1n, thm24, deer, odd-cycle, \
    corona-union-i..iv, loop, lk1n, cycle, caterpillar";

fn construct(family: &str, params: &ParamArgs, output: &OutputArgs) -> Outcome {
    let p = Params::parse(params.params.as_deref())?;
    let spec = params.spec.as_deref();
    let text = if let Some(c) = certified_family(family, &p, spec)? {
        render_graph(output.format, c.provenance().to_string(), c.graph(), Some(c.labeling()))
    } else if let Some(v) = corona_variant(family, &p)? {
        let built = prod::corona_union(v)?;
        render_graph(output.format, family.to_owned(), &built.graph, built.labeling.as_ref())
    } else if let Some(g) = primitive(family, &p, spec)? {
        render_graph(output.format, family.to_owned(), &g, None)
    } else {
        return Err(CliError::usage("--family", format!("unknown family {family:?}; expected one of {FAMILY_NAMES}")));
    };
    emit(output.out.as_deref(), &text)?;
    Ok(0)
}

fn verify(graph: &Path, labeling: &Path, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let f = load_labeling(labeling, &g)?;
    let rec = LabelingRecord::describe(&g, &f);
    emit(out, &rec.to_json())?;
    Ok(if rec.sem { 0 } else { 1 })
}

fn search_verb(graph: &Path, mode: Mode, edge_magic: bool, limits: SearchLimits, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let (record, code) = if edge_magic {
        let r = search::find_edge_magic(&g, limits)?;
        (ReportRecord::from(&r), r.outcome.exit_code())
    } else {
        let r = search::find_sem(&g, mode, limits)?;
        (ReportRecord::from(&r), r.outcome.exit_code())
    };
    emit(out, &record.to_json())?;
    Ok(code)
}

fn certify(graph: &Path, limits: SearchLimits, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let opts = CertifyOptions {
        limits: SearchLimits { max_order: Some(12), ..limits },
        ..CertifyOptions::default()
    };
    let cert = search::certify_not_sem(&g, opts)?;
    emit(out, &ReportRecord::from(&cert).to_json())?;
    Ok(cert.report.outcome.exit_code())
}

#[derive(Serialize)]
struct IsoCheck {
    k: usize,
    n: usize,
    isomorphic: bool,
}

#[derive(Serialize)]
struct ProductJson {
    p: usize,
    arcs: Vec<(usize, usize)>,
    labels: Option<Vec<usize>>,
    window: Option<[usize; 2]>,
}

fn load_host(path: &Path) -> Result<Digraph, CliError> {
    Ok(match load_edge_list(path)? {
        EdgeList::Digraph(d) => d,
        EdgeList::Graph(g) => indegree_one_orientation(&g)?,
    })
}

fn product(
    graph: Option<&Path>,
    family: &str,
    assignment: Option<&Path>,
    labeling: Option<&Path>,
    params: &ParamArgs,
    output: &OutputArgs,
) -> Outcome {
    if family == "corona-iso" {
        let [k, n] = Params::parse(params.params.as_deref())?.take(["k", "n"])?;
        let isomorphic = prod::corona_iso_check(k, n)?;
        emit(output.out.as_deref(), &serde_json::to_string(&IsoCheck { k, n, isomorphic }).expect("serialises"))?;
        return Ok(if isomorphic { 0 } else { 1 });
    }
    let host_path = graph.ok_or_else(|| CliError::usage("--graph", "a host digraph is required"))?;
    let host = load_host(host_path)?;
    let fam = load_family_dir(Path::new(family)).map_err(|e| CliError::Input(e.to_string()))?;
    let h = match assignment {
        Some(path) => parse_assignment(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None if fam.len() == 1 => ArcAssignment::constant(&host, 0),
        None => return Err(CliError::usage("--assignment", "required when the family has more than one member")),
    };
    let (digraph, labeled) = match labeling {
        Some(path) => {
            let f = load_labeling(path, &host.underlying())?;
            let lp = prod::canonical_product_labeling(&host, &h, &f, &fam)?;
            (lp.digraph.clone(), Some(lp))
        }
        None => (prod::otimes_h(&host, &h, &fam)?, None),
    };
    let text = match output.format {
        Format::Edgelist => edgelist::write_digraph(&digraph),
        Format::Dot => export_dot(&digraph.underlying(), labeled.as_ref().map(|lp| &lp.labeling)),
        Format::Json => serde_json::to_string_pretty(&ProductJson {
            p: digraph.order(),
            arcs: digraph.arcs().collect(),
            labels: labeled.as_ref().map(|lp| lp.labeling.as_slice().to_vec()),
            window: labeled.as_ref().map(|lp| [lp.window.min, lp.window.max()]),
        })
        .expect("serialises"),
    };
    emit(output.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct CensusJson {
    edges: Vec<(usize, usize)>,
    outcome: &'static str,
    labels: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct SnkJson {
    n: usize,
    k: usize,
    members: Vec<Vec<(usize, usize)>>,
}

fn census(family: Option<&str>, params: &ParamArgs, limits: SearchLimits, out: Option<&Path>) -> Outcome {
    let p = Params::parse(params.params.as_deref())?;
    match family {
        None => {
            let [order] = p.take(["p"])?;
            let entries = search::census_equal_order_size(order, limits)?;
            let rows: Vec<CensusJson> = entries
                .iter()
                .map(|e| CensusJson {
                    edges: e.graph.edges().collect(),
                    outcome: e.outcome.name(),
                    labels: e.outcome.witness().map(|w| w.as_slice().to_vec()),
                })
                .collect();
            let sem = entries.iter().filter(|e| e.is_sem()).count();
            eprintln!("{} classes, {sem} SEM", entries.len());
            emit(out, &serde_json::to_string_pretty(&rows).expect("serialises"))?;
            let aborted = entries.iter().any(|e| e.outcome.exit_code() == 3);
            Ok(if aborted { 3 } else { 0 })
        }
        Some("snk") => {
            let [n, k] = p.take(["n", "k"])?;
            let fam = search::enumerate_snk(n, k)?;
            eprintln!("{} members", fam.len());
            match out {
                Some(dir) => write_family_dir(&fam, dir).map_err(|e| CliError::Input(e.to_string()))?,
                None => {
                    let json = SnkJson { n, k, members: fam.members().iter().map(|d| d.arcs().collect()).collect() };
                    emit(None, &serde_json::to_string(&json).expect("serialises"))?;
                }
            }
            Ok(0)
        }
        Some(other) => Err(CliError::usage("--family", format!("census supports only snk, got {other:?}"))),
    }
}

fn complement(graph: &Path, labeling: &Path, out: Option<&Path>) -> Outcome {
    let g = load_graph(graph)?;
    let f = load_labeling(labeling, &g)?;
    emit(out, &LabelingRecord::describe(&g, &f.complement()).to_json())?;
    Ok(0)
}

#[derive(Serialize)]
struct MatrixJson {
    rows: Vec<String>,
    /// Ones per index sum, starting at sum 2.
    counterdiagonals: Vec<usize>,
    compliant: bool,
    /// Whether rotating the matrix by a half turn gives the complement's matrix.
    rotation_matches_complement: Option<bool>,
}

fn matrix(graph: &Path, labeling: Option<&Path>, out: Option<&Path>) -> Outcome {
    let d = load_host(graph)?;
    let f = labeling.map(|path| load_labeling(path, &d.underlying())).transpose()?;
    let a = adjacency_matrix(&d, f.as_ref());
    let profile = counterdiagonal_profile(&a);
    let json = MatrixJson {
        rows: a.rows(),
        counterdiagonals: (2..=2 * a.dim()).map(|s| profile.count(s)).collect(),
        compliant: profile.is_compliant(),
        rotation_matches_complement: f.as_ref().map(|f| rotate_pi(&a) == adjacency_matrix(&d, Some(&f.complement()))),
    };
    emit(out, &serde_json::to_string_pretty(&json).expect("serialises"))?;
    Ok(if json.compliant { 0 } else { 1 })
}

fn explore(params: &ParamArgs, limits: SearchLimits, out: Option<&Path>) -> Outcome {
    let [s, n] = Params::parse(params.params.as_deref())?.take(["s", "n"])?;
    let r = search::explore_even_copies(s, n, limits)?;
    emit(out, &ReportRecord::from(&r).to_json())?;
    Ok(r.outcome.exit_code())
}

fn run(cli: Cli) -> Outcome {
    match cli.verb {
        Verb::Construct { family, params, output } => construct(&family, &params, &output),
        Verb::Verify { graph, labeling, out } => verify(&graph.graph, &labeling, out.as_deref()),
        Verb::Search { graph, mode, edge_magic, limits, out } => {
            search_verb(&graph.graph, mode.into(), edge_magic, limits.limits(), out.as_deref())
        }
        Verb::Certify { graph, limits, out } => certify(&graph.graph, limits.limits(), out.as_deref()),
        Verb::Product { graph, family, assignment, labeling, params, output } => product(
            graph.as_deref(),
            &family,
            assignment.as_deref(),
            labeling.as_deref(),
            &params,
            &output,
        ),
        Verb::Census { family, params, limits, out } => census(family.as_deref(), &params, limits.limits(), out.as_deref()),
        Verb::Complement { graph, labeling, out } => complement(&graph.graph, &labeling, out.as_deref()),
        Verb::Matrix { graph, labeling, out } => matrix(&graph.graph, labeling.as_deref(), out.as_deref()),
        Verb::Explore { params, limits, out } => explore(&params, limits.limits(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Usage { .. }) {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            ExitCode::from(e.code())
        }
    }
}
