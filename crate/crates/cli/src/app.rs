//! Command definitions and their execution. [`run`] never prints; it
//! returns the exit code with a text and a JSON rendering of the result.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use grouplabel_core::constructions::{
    construct_ant_path_with, ant_layout, construct_path_antimagic, construct_path_ek,
    decide_cycle_zk_cordial, decide_path_a_antimagic, decide_path_ek_cordial,
    decide_tree_2mod4_obstruction, sigma_max_formula, Construction,
};
use grouplabel_core::search::{
    explore_with, EdgeLabelSearch, RStarSearch, RainbowCycleSearch, VertexLabelSearch,
    SIGMA_MAX_CAP,
};
use grouplabel_core::search::compute_sigma_max;
use grouplabel_core::{Budget, GroupSpec, SearchStatus, SimpleGraph};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cert::{Certificate, GraphDoc, Property, SequenceCertificate};
use crate::error::{CliError, CliResult};
use crate::fixtures::load_figure;
use crate::parallel::run_parallel;

/// Search nodes per second assumed when a time allowance is given; well
/// below what the engines sustain, so the allowance is not overrun.
pub const NODES_PER_SECOND: f64 = 500_000.0;

#[derive(Debug, Parser)]
#[command(name = "grouplabel", version, about = "Cordial and antimagic labelings over finite Abelian groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Search nodes allowed per first-level branch.
    #[arg(long, global = true, env = "GROUPLABEL_BUDGET")]
    pub budget: Option<u64>,
    /// Wall-clock allowance in seconds, converted to a node budget.
    #[arg(long, global = true)]
    pub seconds: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

impl GlobalArgs {
    pub fn budget(&self) -> Budget {
        let mut nodes = self.budget.unwrap_or(Budget::DEFAULT_NODES);
        if let Some(s) = self.seconds {
            nodes = nodes.min((s.max(0.0) * NODES_PER_SECOND) as u64);
        }
        Budget::nodes(nodes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a verified labeling.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Re-verify a certificate file (`-` for standard input).
    Verify(VerifyArgs),
    /// Evaluate an existence criterion.
    #[command(subcommand)]
    Decide(DecideCmd),
    /// Run an exhaustive search.
    Search(SearchArgs),
    /// Maximum number of distinct consecutive sums over Hamiltonian cycles.
    SigmaMax(SigmaArgs),
    /// Tabulate antimagic labelings of all small trees.
    Explore(ExploreArgs),
    /// Print and re-verify a bundled figure.
    Demo(DemoArgs),
}

#[derive(Debug, Subcommand)]
pub enum ConstructCmd {
    /// A-antimagic labeling of the path on |A| vertices.
    AntimagicPath {
        #[arg(long)]
        group: GroupSpec,
    },
    /// E_{Z_k}-cordial labeling of P_n.
    PathEk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u64,
    },
    /// Block construction over Z_4m ⊕ H.
    AntPath {
        #[arg(long)]
        group: GroupSpec,
    },
}

#[derive(Debug, Subcommand)]
pub enum DecideCmd {
    /// Is P_n E_{Z_k}-cordial?
    PathEk {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Is C_n Z_k-cordial?
    CycleZk {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Is P_{|A|} A-antimagic?
    PathAntimagic {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Are both n and |A| congruent to 2 mod 4 (no E_A-cordial tree)?
    TreeObstruction {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        group: GroupSpec,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    /// Check this property instead of the recorded one.
    #[arg(long, value_enum)]
    pub property: Option<Property>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    EaCordial,
    ACordial,
    AAntimagic,
    AStarAntimagic,
    RainbowCycle,
    RStar,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(value_enum)]
    pub kind: SearchKind,
    #[arg(long)]
    pub group: GroupSpec,
    /// `path:N`, `cycle:N` or `star:N`; trees default to the path on |A|
    /// vertices.
    #[arg(long, conflicts_with = "edges")]
    pub graph: Option<String>,
    /// Edge list file: JSON `[[u,v],...]`, a graph document, or one `u v`
    /// pair per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SigmaMode {
    Formula,
    Search,
    Both,
}

#[derive(Debug, Args)]
pub struct SigmaArgs {
    #[arg(long)]
    pub group: GroupSpec,
    #[arg(long, value_enum, default_value_t = SigmaMode::Both)]
    pub mode: SigmaMode,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Include the certificates of every found labeling.
    #[arg(long)]
    pub certificates: bool,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
    pub figure: u8,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(code: u8, text: String, json: Value) -> Self {
        Report { code, text, json }
    }

    /// The document to print in `format`, newline-terminated.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    let budget = cli.global.budget();
    match &cli.command {
        Command::Construct(c) => construct(c, budget),
        Command::Verify(v) => verify(v),
        Command::Decide(d) => decide(d),
        Command::Search(s) => search(s, budget),
        Command::SigmaMax(s) => sigma_max(s, budget),
        Command::Explore(e) => explore(e, budget),
        Command::Demo(d) => demo(d.figure),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialize")
}

fn label_text(r: &[u64]) -> String {
    match r {
        [] => "0".into(),
        [x] => x.to_string(),
        _ => format!("({})", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
    }
}

fn labels_text(rows: &[Vec<u64>]) -> String {
    rows.iter().map(|r| label_text(r)).collect::<Vec<_>>().join(" ")
}

fn group_text(factors: &[u64]) -> String {
    GroupSpec::new(factors.to_vec()).map_or_else(|_| format!("{factors:?}"), |g| g.to_string())
}

fn graph_text(g: &GraphDoc) -> String {
    let pairs = |e: &[[usize; 2]]| e.iter().map(|[u, v]| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
    match g {
        GraphDoc::Path { n } => format!("path on {n} vertices"),
        GraphDoc::Cycle { n } => format!("cycle on {n} vertices"),
        GraphDoc::Tree { edges } => format!("tree {}", pairs(edges)),
        GraphDoc::General { n, edges } => format!("graph on {n} vertices: {}", pairs(edges)),
    }
}

fn certificate_text(cert: &Certificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "property: {}", cert.property.as_str());
    let _ = writeln!(s, "group: {}", group_text(&cert.group));
    let _ = writeln!(s, "graph: {}", graph_text(&cert.graph));
    if let Some(route) = &cert.route {
        let _ = writeln!(s, "route: {route}");
    }
    let _ = writeln!(s, "edge labels: {}", labels_text(&cert.edge_labels));
    let _ = writeln!(s, "vertex labels: {}", labels_text(&cert.vertex_labels));
    if let Some(v) = &cert.verdict {
        let _ = writeln!(s, "verdict: {}", v.violation.as_deref().unwrap_or("ok"));
    }
    s
}

/// Printed certificates must re-verify.
fn ensure_sound(cert: &Certificate) -> CliResult<()> {
    if cert.recheck()?.sound() {
        Ok(())
    } else {
        Err(grouplabel_core::Error::VerificationFailed("certificate does not re-verify".into()).into())
    }
}

fn construction_report(c: Construction, property: Property, graph: &SimpleGraph) -> CliResult<Report> {
    match c {
        Construction::Built { labeling, route } => {
            let cert = Certificate::from_edge_labeling(property, graph, &labeling)?.with_route(route.as_str());
            ensure_sound(&cert)?;
            Ok(Report::new(0, certificate_text(&cert), to_value(&cert)))
        }
        Construction::Impossible => Ok(Report::new(1, "impossible".into(), json!({"result": "impossible"}))),
        Construction::Unknown { route } => Ok(Report::new(
            3,
            format!("unknown: budget exhausted on route {route}"),
            json!({"result": "unknown", "route": route.as_str()}),
        )),
    }
}

fn construct(c: &ConstructCmd, budget: Budget) -> CliResult<Report> {
    match c {
        ConstructCmd::AntimagicPath { group } => {
            let built = construct_path_antimagic(group, budget)?;
            let path = SimpleGraph::path(group.order() as usize)?;
            construction_report(built, Property::AAntimagic, &path)
        }
        ConstructCmd::PathEk { n, k } => {
            let built = construct_path_ek(*n, *k, budget)?;
            construction_report(built, Property::EaCordial, &SimpleGraph::path(*n)?)
        }
        ConstructCmd::AntPath { group } => {
            let layout = ant_layout(group, budget)?;
            let f = construct_ant_path_with(&layout)?;
            let built = Construction::Built {
                labeling: f,
                route: grouplabel_core::constructions::Route::AntBlocks,
            };
            construction_report(built, Property::EaCordial, &SimpleGraph::path(group.order() as usize)?)
        }
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn verify(v: &VerifyArgs) -> CliResult<Report> {
    let text = read_input(&v.certificate)?;
    let value: Value = serde_json::from_str(&text)?;
    if value.get("sequence").is_some() {
        let cert: SequenceCertificate = serde_json::from_value(value)?;
        let ok = cert.recheck()?;
        let word = if ok { "valid" } else { "invalid" };
        return Ok(Report::new(u8::from(!ok), word.into(), json!({"valid": ok})));
    }
    let mut cert: Certificate = serde_json::from_value(value)?;
    if let Some(p) = v.property {
        if p != cert.property {
            cert.property = p;
            cert.verdict = None;
            if p.labels_vertices() {
                return Err(CliError::Usage("cannot reinterpret an edge labeling as a vertex labeling".into()));
            }
        }
    }
    let check = cert.recheck()?;
    let text = if check.sound() {
        format!("valid {}", cert.property.as_str())
    } else if !check.verdict.ok {
        format!("invalid: {}", check.verdict.violation.as_deref().unwrap_or("unknown"))
    } else {
        "invalid: recorded induced labels or verdict disagree with the labeling".into()
    };
    let json = json!({
        "valid": check.sound(),
        "property": cert.property.as_str(),
        "consistent": check.consistent,
        "verdict": to_value(&check.verdict),
    });
    Ok(Report::new(u8::from(!check.sound()), text, json))
}

fn answer(question: &str, yes: bool, words: (&str, &str), details: Value) -> Report {
    let word = if yes { words.0 } else { words.1 };
    let mut json = json!({"question": question, "answer": yes});
    if let (Value::Object(m), Value::Object(d)) = (&mut json, details) {
        m.extend(d);
    }
    Report::new(u8::from(!yes), word.into(), json)
}

fn decide(d: &DecideCmd) -> CliResult<Report> {
    const EXISTS: (&str, &str) = ("possible", "impossible");
    Ok(match d {
        DecideCmd::PathEk { n, k } => {
            answer("path-ek", decide_path_ek_cordial(*n, *k)?, EXISTS, json!({"n": n, "k": k}))
        }
        DecideCmd::CycleZk { n, k } => {
            answer("cycle-zk", decide_cycle_zk_cordial(*n, *k)?, EXISTS, json!({"n": n, "k": k}))
        }
        DecideCmd::PathAntimagic { group } => answer(
            "path-antimagic",
            decide_path_a_antimagic(group)?,
            EXISTS,
            json!({"group": group.factors()}),
        ),
        DecideCmd::TreeObstruction { n, group } => {
            let blocked = decide_tree_2mod4_obstruction(*n, group);
            let mut r = answer(
                "tree-obstruction",
                !blocked,
                ("unobstructed", "obstructed"),
                json!({"n": n, "group": group.factors()}),
            );
            r.json["answer"] = json!(blocked);
            r
        }
    })
}

/// `path:N`, `cycle:N` or `star:N`.
pub fn parse_graph(spec: &str) -> CliResult<SimpleGraph> {
    let bad = || CliError::Usage(format!("graph `{spec}` is not path:N, cycle:N or star:N"));
    let (kind, n) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    Ok(match kind.trim().to_ascii_lowercase().as_str() {
        "path" => SimpleGraph::path(n)?,
        "cycle" => SimpleGraph::cycle(n)?,
        "star" => SimpleGraph::star(n)?,
        _ => return Err(bad()),
    })
}

/// An edge list as JSON pairs, a graph document, or whitespace pairs.
pub fn parse_edges(text: &str) -> CliResult<SimpleGraph> {
    if let Ok(doc) = serde_json::from_str::<GraphDoc>(text) {
        return doc.to_graph();
    }
    let pairs: Vec<(usize, usize)> = match serde_json::from_str::<Vec<[usize; 2]>>(text) {
        Ok(p) => p.into_iter().map(|[u, v]| (u, v)).collect(),
        Err(_) => {
            let nums = text
                .split_whitespace()
                .map(|t| t.trim_matches(',').parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage("edge list must hold vertex index pairs".into()))?;
            if nums.len() % 2 == 1 {
                return Err(CliError::Usage("edge list has an odd number of endpoints".into()));
            }
            nums.chunks(2).map(|c| (c[0], c[1])).collect()
        }
    };
    let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
    if pairs.len() + 1 == n {
        if let Ok(t) = SimpleGraph::tree(n, pairs.clone()) {
            return Ok(t);
        }
    }
    Ok(SimpleGraph::general(n, pairs)?)
}

fn search_graph(s: &SearchArgs) -> CliResult<SimpleGraph> {
    if let Some(path) = &s.edges {
        return parse_edges(&read_input(path)?);
    }
    match (&s.graph, s.kind) {
        (Some(g), _) => parse_graph(g),
        (None, SearchKind::AAntimagic | SearchKind::AStarAntimagic) => {
            Ok(SimpleGraph::path(s.group.order() as usize)?)
        }
        (None, _) => Err(CliError::Usage("this search needs --graph or --edges".into())),
    }
}

fn status_code(status: SearchStatus) -> u8 {
    match status {
        SearchStatus::Found => 0,
        SearchStatus::NotExists => 1,
        SearchStatus::Unknown => 3,
    }
}

fn search_report(status: SearchStatus, nodes: u64, cert: Option<(String, Value)>) -> Report {
    let mut text = format!("{} ({nodes} nodes)", status.as_str());
    let mut json = json!({"status": status.as_str(), "nodes_explored": nodes});
    if let Some((t, v)) = cert {
        text.push('\n');
        text.push_str(&t);
        json["certificate"] = v;
    }
    Report::new(status_code(status), text, json)
}

fn search(s: &SearchArgs, budget: Budget) -> CliResult<Report> {
    let g = &s.group;
    let edge_search = |search: EdgeLabelSearch, property: Property| -> CliResult<Report> {
        let out = run_parallel(&search, budget);
        let cert = match &out.certificate {
            Some(f) => {
                let c = Certificate::from_edge_labeling(property, search.graph(), f)?;
                ensure_sound(&c)?;
                Some((certificate_text(&c), to_value(&c)))
            }
            None => None,
        };
        Ok(search_report(out.status, out.nodes_explored, cert))
    };
    match s.kind {
        SearchKind::EaCordial => edge_search(EdgeLabelSearch::ea_cordial(&search_graph(s)?, g)?, Property::EaCordial),
        SearchKind::AAntimagic => edge_search(EdgeLabelSearch::a_antimagic(&search_graph(s)?, g)?, Property::AAntimagic),
        SearchKind::AStarAntimagic => edge_search(
            EdgeLabelSearch::a_star_antimagic(&search_graph(s)?, g)?,
            Property::AStarAntimagic,
        ),
        SearchKind::ACordial => {
            let graph = search_graph(s)?;
            let out = run_parallel(&VertexLabelSearch::a_cordial(&graph, g)?, budget);
            let cert = match &out.certificate {
                Some(c) => {
                    let c = Certificate::from_vertex_labeling(&graph, c)?;
                    ensure_sound(&c)?;
                    Some((certificate_text(&c), to_value(&c)))
                }
                None => None,
            };
            Ok(search_report(out.status, out.nodes_explored, cert))
        }
        SearchKind::RainbowCycle => {
            let out = run_parallel(&RainbowCycleSearch::new(g)?, budget);
            let cert = out.certificate.as_ref().map(SequenceCertificate::from_cycle);
            Ok(search_report(out.status, out.nodes_explored, sequence_pair(cert)?))
        }
        SearchKind::RStar => {
            let out = run_parallel(&RStarSearch::new(g)?, budget);
            let cert = out.certificate.as_ref().map(SequenceCertificate::from_rstar);
            Ok(search_report(out.status, out.nodes_explored, sequence_pair(cert)?))
        }
    }
}

fn sequence_pair(cert: Option<SequenceCertificate>) -> CliResult<Option<(String, Value)>> {
    let Some(c) = cert else { return Ok(None) };
    if !c.recheck()? {
        return Err(grouplabel_core::Error::VerificationFailed("sequence does not re-verify".into()).into());
    }
    let text = format!("sequence: {}\ndistinct: {}", labels_text(&c.sequence), c.distinct_count);
    Ok(Some((text, to_value(&c))))
}

fn sigma_max(s: &SigmaArgs, budget: Budget) -> CliResult<Report> {
    let g = &s.group;
    let formula = matches!(s.mode, SigmaMode::Formula | SigmaMode::Both)
        .then(|| sigma_max_formula(g))
        .transpose()?;
    let mut json = json!({"group": g.factors(), "formula": formula});
    let mut text = String::new();
    if let Some(f) = formula {
        let _ = writeln!(text, "formula: {f}");
    }
    let mut code = 0;
    if matches!(s.mode, SigmaMode::Search | SigmaMode::Both) {
        if g.order() > SIGMA_MAX_CAP {
            return Err(CliError::Usage(format!("search is limited to |A| ≤ {SIGMA_MAX_CAP}")));
        }
        let out = compute_sigma_max(g, budget)?;
        json["status"] = json!(out.status.as_str());
        json["nodes_explored"] = json!(out.nodes_explored);
        match (&out.certificate, out.status) {
            (Some(hc), SearchStatus::Found) => {
                let found = hc.distinct_sum_count as u64;
                let _ = writeln!(text, "search: {found}");
                json["search"] = json!(found);
                json["cycle"] = to_value(&SequenceCertificate::from_cycle(hc));
                if let Some(f) = formula {
                    let agree = f == found;
                    let _ = writeln!(text, "agree: {agree}");
                    json["agree"] = json!(agree);
                    code = u8::from(!agree);
                }
            }
            _ => {
                let _ = writeln!(text, "search: {}", out.status.as_str());
                code = 3;
            }
        }
    }
    Ok(Report::new(code, text, json))
}

fn explore(e: &ExploreArgs, budget: Budget) -> CliResult<Report> {
    let report = explore_with(e.n_max, |s| run_parallel(s, budget))?;
    let mut rows = Vec::with_capacity(report.rows.len());
    let mut text = String::new();
    let _ = writeln!(text, "{:>3} {:>12} {:>6}  antimagic f/n/u  star f/n/u", "n", "group", "trees");
    let mut by_group: Vec<(usize, String, [usize; 6], usize)> = Vec::new();
    for r in &report.rows {
        let pattern = match r.matches_pattern() {
            Some(true) => "match",
            Some(false) => "counterexample",
            None => "unknown",
        };
        let tree: Vec<[usize; 2]> = r.tree.edges().iter().map(|&(u, v)| [u, v]).collect();
        let mut row = json!({
            "n": r.n,
            "group": r.group.factors(),
            "tree": tree,
            "antimagic": r.antimagic.status.as_str(),
            "star_antimagic": r.star_antimagic.status.as_str(),
            "pattern": pattern,
        });
        if e.certificates || r.matches_pattern() == Some(false) {
            for (key, out, prop) in [
                ("antimagic_certificate", &r.antimagic, Property::AAntimagic),
                ("star_certificate", &r.star_antimagic, Property::AStarAntimagic),
            ] {
                if let Some(f) = &out.certificate {
                    let c = Certificate::from_edge_labeling(prop, &r.tree, f)?;
                    ensure_sound(&c)?;
                    row[key] = to_value(&c);
                }
            }
        }
        rows.push(row);
        let name = r.group.to_string();
        if by_group.last().is_none_or(|(n, g, _, _)| *n != r.n || *g != name) {
            by_group.push((r.n, name, [0; 6], 0));
        }
        let entry = by_group.last_mut().expect("just pushed");
        entry.3 += 1;
        let slot = |s: SearchStatus| match s {
            SearchStatus::Found => 0,
            SearchStatus::NotExists => 1,
            SearchStatus::Unknown => 2,
        };
        entry.2[slot(r.antimagic.status)] += 1;
        entry.2[3 + slot(r.star_antimagic.status)] += 1;
    }
    for (n, g, c, trees) in &by_group {
        let _ = writeln!(
            text,
            "{n:>3} {g:>12} {trees:>6}  {:>5}/{}/{}  {:>7}/{}/{}",
            c[0], c[1], c[2], c[3], c[4], c[5]
        );
    }
    let counter = report.counterexamples().count();
    let unknown = report.unknown().count();
    let _ = writeln!(text, "counterexamples: {counter}, unknown: {unknown}");
    let code = if counter > 0 {
        1
    } else if unknown > 0 {
        3
    } else {
        0
    };
    let json = json!({"n_max": e.n_max, "rows": rows, "counterexamples": counter, "unknown": unknown});
    Ok(Report::new(code, text, json))
}

fn demo(number: u8) -> CliResult<Report> {
    let cert = load_figure(number)?;
    let mut text = format!("figure {number}\n{}", certificate_text(&cert));
    if number == 2 || number == 3 {
        text.push_str("regenerated by the block construction: identical\n");
    }
    Ok(Report::new(0, text, to_value(&cert)))
}
