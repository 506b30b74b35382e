use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fracramsey::clique::{self, DEFAULT_CLIQUE_BUDGET};
use fracramsey::cyclicity::{self, Certificate, EdgeColouring, RamseyVerdict};
use fracramsey::generators;
use fracramsey::graph::{Edge, Graph, Vertex};
use fracramsey::graph6::{decode_graph, encode_edge_list, encode_graph6};
use fracramsey::oracle::{self, DEFAULT_ORACLE_BUDGET};
use fracramsey::surgery;
use fracramsey::Error;

const BUDGET_ENV: &str = "FRACRAMSEY_BUDGET";

#[derive(Parser)]
#[command(name = "fracramsey", version, about = "Fractional Ramsey graphs for cyclicity and cliques")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Search budget in nodes for exhaustive searches.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u64>,

    /// Worker threads for batch commands.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership, with a certificate either way.
    Check {
        #[arg(long)]
        r: usize,
        /// Make minimality the verdict that sets the exit code.
        #[arg(long)]
        minimal: bool,
        file: PathBuf,
    },
    /// Print a good colouring, or the dense subgraph that rules one out.
    Colour {
        #[arg(long)]
        r: usize,
        file: PathBuf,
    },
    /// Look for a cycle using at most r colours.
    Verify {
        #[arg(long)]
        r: usize,
        file: PathBuf,
        colouring: PathBuf,
    },
    /// Shrink a member to a minimal subgraph.
    Minimize {
        #[arg(long)]
        r: usize,
        file: PathBuf,
    },
    #[command(subcommand)]
    Transform(Transform),
    #[command(subcommand)]
    Generate(Generate),
    /// Exact small values and bounds for clique numbers.
    Number {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        #[arg(long)]
        bounds: bool,
    },
    /// Decide whether every (r+1)-colouring of a graph has a K_n with at most r colours.
    Arrows {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// Cross-check the fast decision against the brute-force oracles.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_v: usize,
    },
}

#[derive(Subcommand)]
enum Transform {
    /// Subdivide an edge, or with --r the extension step for minimal graphs.
    Subdivide {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required_unless_present = "r")]
        edge: Option<Vec<Vertex>>,
        #[arg(long, conflicts_with = "edge")]
        r: Option<usize>,
    },
    /// Replace a vertex by a cycle of length r+1.
    Blowup {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, requires = "assign")]
        vertex: Option<Vertex>,
        /// Neighbor positions on the new cycle, as `u:p,u:p,...`.
        #[arg(long, requires = "vertex")]
        assign: Option<String>,
    },
    /// Contract a shortest cycle.
    Contract { file: PathBuf },
    /// Add k apex vertices.
    Cone {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Planar minimal graph on n vertices.
    Planar {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Odd cycle C_{2k+1} joined to both ends of an edge.
    Oddfam {
        #[arg(long)]
        k: usize,
    },
}

/// What a command produced: structured output, its text rendering, and
/// whether the verdict was positive.
struct Report {
    json: Value,
    text: String,
    positive: bool,
    /// Partial result: the search ran out of budget.
    partial: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Self { json, text, positive: true, partial: false }
    }

    fn verdict(mut self, positive: bool) -> Self {
        self.positive = positive;
        self
    }
}

enum Failure {
    Input(String),
    Budget(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => Failure::Budget(e.to_string()),
            Error::NonMember { .. } | Error::NotMinimal { .. } => Failure::Negative(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).unwrap()),
                Format::Text => print!("{}", report.text),
            }
            if report.partial {
                eprintln!("error: search budget exhausted; raise --budget or {BUDGET_ENV}");
                return ExitCode::from(3);
            }
            ExitCode::from(if report.positive { 0 } else { 1 })
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = cli.budget;
    match cli.command {
        Command::Check { r, minimal, file } => check(&read_graph(&file)?, r, minimal),
        Command::Colour { r, file } => colour(&read_graph(&file)?, r),
        Command::Verify { r, file, colouring } => verify(&read_graph(&file)?, r, &colouring),
        Command::Minimize { r, file } => {
            let g = read_graph(&file)?;
            let m = cyclicity::find_minimal_subgraph(&g, r)?;
            if !cyclicity::is_minimal_member(&m, r)? {
                return Err(Failure::Input("minimized graph failed the minimality re-check".into()));
            }
            Ok(Report::new(json!({ "r": r, "graph": graph_json(&m) }), graph_text(&m)))
        }
        Command::Transform(t) => transform(t),
        Command::Generate(g) => generate(g),
        Command::Number { r, n, exact, bounds } => number(r, n, exact || !bounds, budget),
        Command::Arrows { r, n, file } => arrows(&read_graph(&file)?, r, n, budget),
        Command::Selftest { max_v } => selftest(max_v, budget, cli.threads as usize),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    decode_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn graph_json(g: &Graph) -> Value {
    let mut v = serde_json::to_value(g).unwrap();
    v["graph6"] = json!(encode_graph6(g));
    v
}

fn graph_text(g: &Graph) -> String {
    format!("graph6 {}\n{}", encode_graph6(g), encode_edge_list(g))
}

fn verdict_text(g: &Graph, v: &RamseyVerdict) -> String {
    let mut out = format!("r = {}, v = {}, e = {}\nmember: {}\n", v.r, g.v(), g.e(), v.member);
    if let Some(m) = v.minimal {
        out += &format!("minimal: {m}\n");
    }
    if let Some(e) = v.redundant_edge {
        out += &format!("redundant edge: {e}\n");
    }
    match &v.certificate {
        Certificate::ViolatingSubgraph { subgraph } => {
            out += &format!(
                "violating subgraph ({} vertices, {} edges):\n{}",
                subgraph.v(),
                subgraph.e(),
                encode_edge_list(subgraph)
            );
        }
        Certificate::GoodColouring { colouring } => {
            out += "good colouring:\n";
            out += &colouring.to_lines();
        }
    }
    out
}

fn checked_verdict(g: &Graph, r: usize) -> Result<RamseyVerdict, Failure> {
    let v = cyclicity::is_minimal_cyclicity(g, r)?;
    if !v.verify(g) {
        return Err(Failure::Input("certificate failed re-verification".into()));
    }
    Ok(v)
}

fn check(g: &Graph, r: usize, minimal: bool) -> Outcome {
    let v = checked_verdict(g, r)?;
    let positive = if minimal { v.minimal == Some(true) } else { v.member };
    Ok(Report::new(serde_json::to_value(&v).unwrap(), verdict_text(g, &v)).verdict(positive))
}

fn colour(g: &Graph, r: usize) -> Outcome {
    let v = checked_verdict(g, r)?;
    let text = match &v.certificate {
        Certificate::GoodColouring { colouring } => colouring.to_lines(),
        Certificate::ViolatingSubgraph { .. } => verdict_text(g, &v),
    };
    Ok(Report::new(serde_json::to_value(&v.certificate).unwrap(), text).verdict(!v.member))
}

fn verify(g: &Graph, r: usize, path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let c = EdgeColouring::parse(&text, r)?;
    match cyclicity::verify_colouring(g, &c)? {
        Some(cycle) => {
            let line = cycle.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Report::new(json!({ "cycle": cycle.vertices }), format!("cycle {line}\n")))
        }
        None => Ok(Report::new(json!("none"), "none\n".into()).verdict(false)),
    }
}

fn parse_assignment(text: &str) -> Result<BTreeMap<Vertex, usize>, Failure> {
    let mut out = BTreeMap::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (u, p) = item
            .split_once(':')
            .ok_or_else(|| Failure::Input(format!("expected u:p, found {item:?}")))?;
        let u: Vertex = u.trim().parse().map_err(|_| Failure::Input(format!("bad vertex {u:?}")))?;
        let p: usize = p.trim().parse().map_err(|_| Failure::Input(format!("bad position {p:?}")))?;
        if out.insert(u, p).is_some() {
            return Err(Failure::Input(format!("vertex {u} assigned twice")));
        }
    }
    Ok(out)
}

fn transform(t: Transform) -> Outcome {
    let (g, json) = match t {
        Transform::Subdivide { file, edge, r } => {
            let g = read_graph(&file)?;
            match (edge, r) {
                (_, Some(r)) => {
                    let out = generators::extend_subdivision(&g, r)?;
                    let j = json!({ "graph": graph_json(&out) });
                    (out, j)
                }
                (Some(e), None) => {
                    let (out, w) = surgery::subdivide_edge(&g, Edge::new(e[0], e[1]))?;
                    let j = json!({ "graph": graph_json(&out), "new_vertex": w });
                    (out, j)
                }
                (None, None) => return Err(Failure::Input("give --edge U V or --r R".into())),
            }
        }
        Transform::Blowup { file, r, vertex, assign } => {
            let g = read_graph(&file)?;
            let b = match (vertex, assign) {
                (Some(v), Some(a)) => surgery::blow_up_vertex(&g, v, r, &parse_assignment(&a)?)?,
                _ => generators::extend_blow_up(&g, r)?,
            };
            let j = json!({
                "graph": graph_json(&b.graph),
                "cycle": b.cycle,
                "cycle_induced": b.cycle_induced,
                "two_connected": b.two_connected,
            });
            (b.graph, j)
        }
        Transform::Contract { file } => {
            let c = surgery::contract_shortest_cycle(&read_graph(&file)?)?;
            let j = json!({
                "graph": graph_json(&c.graph),
                "cycle": c.cycle.vertices,
                "merged": c.merged,
                "parallels_merged": c.parallels_merged,
                "loops_removed": c.loops_removed,
            });
            (c.graph, j)
        }
        Transform::Cone { file, k } => {
            let out = surgery::cone(&read_graph(&file)?, k)?;
            let j = json!({ "graph": graph_json(&out) });
            (out, j)
        }
    };
    Ok(Report::new(json, graph_text(&g)))
}

fn generate(gen: Generate) -> Outcome {
    match gen {
        Generate::Planar { r, n } => {
            let m = generators::gen_planar_family(r, n)?;
            if !m.embedding.is_planar_for(&m.graph) {
                return Err(Failure::Input("embedding failed re-verification".into()));
            }
            let json = json!({
                "r": r,
                "graph": graph_json(&m.graph),
                "embedding": m.embedding,
                "faces": m.embedding.face_count(),
            });
            Ok(Report::new(json, graph_text(&m.graph)))
        }
        Generate::Oddfam { k } => {
            let g = generators::gen_odd_cycle_family(k)?;
            Ok(Report::new(json!({ "k": k, "graph": graph_json(&g) }), graph_text(&g)))
        }
    }
}

fn number(r: usize, n: usize, exact: bool, budget: Option<u64>) -> Outcome {
    let mut json = json!({ "r": r, "n": n });
    let mut text = String::new();
    let mut closed = true;
    {
        let lower = clique::lower_bound_probabilistic(r, n)?;
        let upper = clique::upper_bound_diagonal(r, n)?;
        let closed_form = clique::upper_bound_closed_form(r, n)?;
        text += &format!(
            "lower (probabilistic) {:.6}\nupper (recursive) {upper}\nupper (closed form) {} ~ {:.6}\n",
            lower.threshold, closed_form.exact, closed_form.approx
        );
        json["lower"] = serde_json::to_value(&lower).unwrap();
        json["upper_recursive"] = json!(upper);
        json["upper_closed"] = serde_json::to_value(&closed_form).unwrap();
    }
    if exact {
        let res = clique::exact_number_small(r, n, budget.unwrap_or(DEFAULT_CLIQUE_BUDGET))?;
        if let Some(w) = &res.witness {
            let k = Graph::complete(res.lower as usize - 1);
            if clique::find_few_coloured_clique(&k, w, n)?.is_some() {
                return Err(Failure::Input("witness colouring failed re-verification".into()));
            }
        }
        match res.exact {
            Some(x) => text += &format!("exact {x}\n"),
            None => {
                closed = false;
                text += &format!("budget exhausted: {} <= R <= {}\n", res.lower, res.upper);
            }
        }
        json["exact"] = json!(res.exact);
        json["search"] = json!({ "lower": res.lower, "upper": res.upper });
        json["witnesses"] = json!(res.witness.iter().collect::<Vec<_>>());
    }
    let mut report = Report::new(json, text);
    report.partial = !closed;
    Ok(report)
}

fn arrows(g: &Graph, r: usize, n: usize, budget: Option<u64>) -> Outcome {
    let res = clique::arrows_clique(g, r, n, budget.unwrap_or(DEFAULT_CLIQUE_BUDGET))?;
    let mut text = format!("arrows: {} ({} nodes)\n", res.arrows, res.nodes);
    if let Some(c) = &res.colouring {
        if clique::find_few_coloured_clique(g, c, n)?.is_some() {
            return Err(Failure::Input("certificate failed re-verification".into()));
        }
        text += &c.to_lines();
    }
    let positive = res.arrows;
    Ok(Report::new(serde_json::to_value(&res).unwrap(), text).verdict(positive))
}

fn selftest(max_v: usize, budget: Option<u64>, threads: usize) -> Outcome {
    if max_v > oracle::ENUMERATION_CAP {
        return Err(Failure::Budget(format!(
            "--max-v {max_v} is above the census cap of {}",
            oracle::ENUMERATION_CAP
        )));
    }
    let budget = budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
    let mut graphs = Vec::new();
    for v in 1..=max_v {
        graphs.extend(oracle::connected_graphs(v)?.iter().cloned());
    }
    let chunk = graphs.len().div_ceil(threads).max(1);
    let results: Vec<Result<Vec<String>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| s.spawn(move || selftest_part(part, budget)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut disagreements = Vec::new();
    for r in results {
        disagreements.extend(r?);
    }
    let checked = graphs.len() * 2;
    let json = json!({
        "max_v": max_v,
        "checked": checked,
        "disagreements": disagreements,
    });
    let mut text = format!("{checked} (graph, r) pairs checked, {} disagreements\n", disagreements.len());
    for d in &disagreements {
        text += d;
        text += "\n";
    }
    let ok = disagreements.is_empty();
    Ok(Report::new(json, text).verdict(ok))
}

fn selftest_part(graphs: &[Graph], budget: u64) -> Result<Vec<String>, Error> {
    let mut bad = Vec::new();
    for g in graphs {
        for r in [2, 3] {
            let fast = cyclicity::is_ramsey_cyclicity(g, r)?;
            let slow = oracle::oracle_is_ramsey_cyclicity(g, r, budget)?;
            let dense = oracle::oracle_density_witness(g, r)?.is_some();
            if fast.member != slow || slow != dense || !fast.verify(g) {
                bad.push(format!("{} r={r}", encode_graph6(g)));
            }
        }
    }
    Ok(bad)
}
