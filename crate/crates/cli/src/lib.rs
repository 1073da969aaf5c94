//! The `brickyard` command: analyses, decompositions and bound checks over
//! graph files, reported as JSON lines.
//!
//! Exit status is 0 on success, 1 when a size cap is exceeded, 2 on
//! unreadable, malformed or empty input and 3 when a check finds a violation.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use brickyard::classify::classify;
use brickyard::corpus::CorpusReader;
use brickyard::format::{to_sparse6, Format};
use brickyard::matching::{count_perfect_matchings, is_matching_covered, removable_edges};
use brickyard::theorems::{extremal_check, verify_theorem1, verify_theorem2, LemmaSuite, RemovableFn, WitnessKind};
use brickyard::tightcuts::tight_cut_decomposition;
use brickyard::{
    DecompositionNode, Error, GraphClass, LeafKind, LemmaId, Limits, MultiGraph, TheoremVerdict,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CAP: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "brickyard", version, about = "Removable edges and tight cuts of matching covered graphs")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Largest order accepted by tight cut scans and everything built on them.
    #[arg(long, global = true, env = "BRICKYARD_MAX_N", default_value_t = Limits::DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Largest order accepted by perfect matching enumeration.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_N)]
    pub max_pm_enum: usize,
    /// Print one indented JSON array instead of JSON lines.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Input format (graph6, sparse6, edgelist); guessed from the file name or contents otherwise.
    #[arg(long, global = true)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classification, removable edges, brick count and decomposition of each graph.
    Analyze {
        /// Graph files; `-` reads standard input.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Tight cut decomposition tree of each matching covered graph.
    Decompose {
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Check the `Δ − 2` removable edge bound for bricks (1) or irreducible near-bricks (2).
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        /// Stop at the first violation.
        #[arg(long)]
        fail_fast: bool,
        /// Report every verdict, not only violations.
        #[arg(long)]
        all: bool,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Run the supporting lemma checks over the inputs.
    Lemmas {
        /// Restrict to these checks; all of them by default.
        #[arg(long = "lemma")]
        lemmas: Vec<LemmaId>,
        /// Path lengths used for bisubdivisions.
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 5])]
        lengths: Vec<usize>,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Report graphs attaining the bound and reducible near-bricks falling below it.
    Extremal {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

impl Options {
    fn limits(&self) -> Limits {
        Limits::new(self.max_n, self.max_pm_enum)
    }
}

enum Failure {
    Graph(Error),
    Input(String),
    Empty(PathBuf),
    Output(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Graph(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Output(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Output(e.into())
    }
}

/// Runs a parsed command line, writing reports to `out` and diagnostics to
/// `err`, and returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with(cli, out, err, removable_edges)
}

/// [`run`] with the removability routine used by `lemmas` replaced.
pub fn run_with(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write, removable: RemovableFn) -> i32 {
    let mut sink = Sink { out, pretty: cli.options.pretty, written: 0 };
    let result = dispatch(cli, &mut sink, removable).and_then(|code| {
        sink.finish()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = sink.finish();
            let (code, message) = match failure {
                Failure::Graph(e @ Error::TooLarge { .. }) => (EXIT_CAP, e.to_string()),
                Failure::Graph(e) => (EXIT_BAD_INPUT, e.to_string()),
                Failure::Input(message) => (EXIT_BAD_INPUT, message),
                Failure::Empty(path) => (EXIT_BAD_INPUT, format!("{}: no graphs in input", path.display())),
                Failure::Output(e) => (EXIT_BAD_INPUT, format!("cannot write output: {e}")),
            };
            let _ = writeln!(err, "brickyard: {message}");
            code
        }
    }
}

struct Sink<'w> {
    out: &'w mut dyn Write,
    pretty: bool,
    written: usize,
}

impl Sink<'_> {
    fn emit<T: Serialize>(&mut self, item: &T) -> Result<(), Failure> {
        if self.pretty {
            self.out.write_all(if self.written == 0 { b"[\n" } else { b",\n" })?;
            serde_json::to_writer_pretty(&mut *self.out, item)?;
        } else {
            serde_json::to_writer(&mut *self.out, item)?;
            self.out.write_all(b"\n")?;
        }
        self.written += 1;
        Ok(())
    }

    fn raw(&mut self, text: &str) -> Result<(), Failure> {
        Ok(self.out.write_all(text.as_bytes())?)
    }

    fn finish(&mut self) -> Result<(), Failure> {
        if self.pretty && self.written > 0 {
            self.out.write_all(b"\n]\n")?;
            self.written = 0;
        }
        Ok(self.out.flush()?)
    }
}

/// Feeds every graph of every input to `visit` with an identifier of the form
/// `path:line` (graph6, sparse6) or `path#k` (edge lists). `visit` returns
/// `false` to stop early.
fn for_each_graph(
    inputs: &[PathBuf],
    format: Option<Format>,
    mut visit: impl FnMut(&str, &MultiGraph) -> Result<bool, Failure>,
) -> Result<(), Failure> {
    for path in inputs {
        let mut reader = CorpusReader::open_as(path, format).map_err(|e| located(path, e))?;
        let mut seen = 0usize;
        while let Some(next) = reader.next() {
            let g = next.map_err(|e| located(path, e))?;
            seen += 1;
            let id = match reader.format() {
                Format::Edgelist => format!("{}#{seen}", path.display()),
                _ => format!("{}:{}", path.display(), reader.line()),
            };
            if !visit(&id, &g)? {
                return Ok(());
            }
        }
        if seen == 0 {
            return Err(Failure::Empty(path.clone()));
        }
    }
    Ok(())
}

fn located(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse(p) => Failure::Input(format!("{}: {p}", path.display())),
        other => Failure::Graph(other),
    }
}

fn dispatch(cli: &Cli, sink: &mut Sink<'_>, removable: RemovableFn) -> Result<i32, Failure> {
    let limits = cli.options.limits();
    let format = cli.options.format;
    match &cli.command {
        Command::Analyze { inputs } => {
            for_each_graph(inputs, format, |id, g| {
                sink.emit(&analyze(id, g, &limits)?)?;
                Ok(true)
            })?;
            Ok(EXIT_OK)
        }
        Command::Decompose { dot, inputs } => {
            for_each_graph(inputs, format, |id, g| {
                let tree = if is_matching_covered(g) { Some(tight_cut_decomposition(g, &limits)?) } else { None };
                if *dot {
                    sink.raw(&to_dot(id, g, tree.as_ref()))?;
                } else {
                    sink.emit(&DecompositionReport {
                        input_id: id.to_string(),
                        graph: to_sparse6(g),
                        matching_covered: tree.is_some(),
                        bricks: tree.as_ref().map(DecompositionNode::brick_count),
                        braces: tree.as_ref().map(DecompositionNode::brace_count),
                        tree: tree.as_ref().map(TreeReport::of),
                    })?;
                }
                Ok(true)
            })?;
            Ok(EXIT_OK)
        }
        Command::Verify { theorem, fail_fast, all, inputs } => {
            let mut summary = VerifySummary { theorem: *theorem, graphs: 0, in_hypothesis: 0, violations: 0 };
            for_each_graph(inputs, format, |id, g| {
                let verdict = match theorem {
                    1 => verify_theorem1(g)?,
                    _ => verify_theorem2(g, &limits)?,
                };
                summary.graphs += 1;
                summary.in_hypothesis += usize::from(verdict.hypothesis_holds);
                let violation = verdict.is_violation();
                summary.violations += usize::from(violation);
                if violation || *all {
                    sink.emit(&VerdictLine { input_id: id.to_string(), violation, verdict })?;
                }
                Ok(!(violation && *fail_fast))
            })?;
            sink.emit(&SummaryLine { summary })?;
            Ok(if summary.violations > 0 { EXIT_VIOLATION } else { EXIT_OK })
        }
        Command::Lemmas { lemmas, lengths, inputs } => {
            let mut suite = LemmaSuite::new(limits).with_removable(removable).with_lengths(lengths.clone());
            if !lemmas.is_empty() {
                suite = suite.with_lemmas(lemmas.iter().copied());
            }
            let mut run = suite.start();
            for_each_graph(inputs, format, |_, g| {
                run.check(g)?;
                Ok(true)
            })?;
            let reports = run.finish();
            for report in &reports {
                sink.emit(report)?;
            }
            Ok(if reports.iter().all(|r| r.is_clean()) { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Extremal { inputs } => {
            for_each_graph(inputs, format, |id, g| {
                if let Some(w) = extremal_check(g, &limits)? {
                    sink.emit(&WitnessLine { input_id: id.to_string(), kind: w.kind, verdict: w.verdict })?;
                }
                Ok(true)
            })?;
            Ok(EXIT_OK)
        }
    }
}

/// Everything `analyze` reports about one graph.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input_id: String,
    /// sparse6 encoding.
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub class: GraphClass,
    pub perfect_matchings: u64,
    /// Absent when the graph is not matching covered.
    pub removable_edges: Option<Vec<EdgeReport>>,
    pub b: Option<usize>,
    pub decomposition: Option<TreeReport>,
    pub theorem2: TheoremVerdict,
}

/// An edge named by its endpoints; `copy` tells parallel edges apart by
/// their order among the edges joining the same pair.
#[derive(Debug, Serialize)]
pub struct EdgeReport {
    pub ends: [usize; 2],
    pub copy: usize,
}

/// A decomposition tree node: leaves carry their kind, internal nodes the
/// shore they were split along.
#[derive(Debug, Serialize)]
pub struct TreeReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub kind: Option<LeafKind>,
    pub shore: Option<Vec<usize>>,
    pub children: Vec<TreeReport>,
}

impl TreeReport {
    fn of(node: &DecompositionNode) -> Self {
        TreeReport {
            graph: to_sparse6(&node.graph),
            n: node.graph.vertex_count(),
            m: node.graph.edge_count(),
            kind: node.leaf_kind,
            shore: node.split.as_ref().map(|c| c.shore().iter().collect()),
            children: node.children.iter().map(TreeReport::of).collect(),
        }
    }
}

#[derive(Serialize)]
struct DecompositionReport {
    input_id: String,
    graph: String,
    matching_covered: bool,
    bricks: Option<usize>,
    braces: Option<usize>,
    tree: Option<TreeReport>,
}

#[derive(Clone, Copy, Serialize)]
struct VerifySummary {
    theorem: u8,
    graphs: usize,
    in_hypothesis: usize,
    violations: usize,
}

#[derive(Serialize)]
struct SummaryLine {
    summary: VerifySummary,
}

#[derive(Serialize)]
struct VerdictLine {
    input_id: String,
    violation: bool,
    #[serde(flatten)]
    verdict: TheoremVerdict,
}

#[derive(Serialize)]
struct WitnessLine {
    input_id: String,
    kind: WitnessKind,
    #[serde(flatten)]
    verdict: TheoremVerdict,
}

pub fn analyze(input_id: &str, g: &MultiGraph, limits: &Limits) -> Result<AnalysisReport, Error> {
    let class = classify(g, limits)?;
    let perfect_matchings = count_perfect_matchings(g, limits)?;
    let (removable, tree) = if class.matching_covered {
        (Some(edge_reports(g, &removable_edges(g)?.iter().collect::<Vec<_>>())), Some(tight_cut_decomposition(g, limits)?))
    } else {
        (None, None)
    };
    Ok(AnalysisReport {
        input_id: input_id.to_string(),
        graph: to_sparse6(g),
        n: g.vertex_count(),
        m: g.edge_count(),
        delta: g.max_degree()?,
        class,
        perfect_matchings,
        removable_edges: removable,
        b: tree.as_ref().map(DecompositionNode::brick_count),
        decomposition: tree.as_ref().map(TreeReport::of),
        theorem2: verify_theorem2(g, limits)?,
    })
}

fn edge_reports(g: &MultiGraph, edges: &[brickyard::EdgeId]) -> Vec<EdgeReport> {
    let all: Vec<(usize, usize)> = g.edges().map(|(_, ends)| ends).collect();
    edges
        .iter()
        .map(|e| {
            let (u, v) = all[e.0];
            let copy = all[..e.0].iter().filter(|&&p| p == (u, v)).count();
            EdgeReport { ends: [u, v], copy }
        })
        .collect()
}

/// Graphviz rendering of a decomposition tree; nodes show order, size and
/// leaf kind, edges show the shore that was contracted.
pub fn to_dot(input_id: &str, g: &MultiGraph, tree: Option<&DecompositionNode>) -> String {
    let mut dot = format!("digraph {:?} {{\n  node [shape=box];\n", input_id);
    match tree {
        None => {
            let _ = writeln!(
                dot,
                "  n0 [label=\"n={} m={}\\nnot matching covered\"];",
                g.vertex_count(),
                g.edge_count()
            );
        }
        Some(root) => {
            let mut next = 0usize;
            dot_node(root, &mut next, &mut dot);
        }
    }
    dot.push_str("}\n");
    dot
}

fn dot_node(node: &DecompositionNode, next: &mut usize, dot: &mut String) -> usize {
    let id = *next;
    *next += 1;
    let kind = match node.leaf_kind {
        Some(LeafKind::Brick) => "\\nbrick",
        Some(LeafKind::Brace) => "\\nbrace",
        None => "",
    };
    let _ = writeln!(
        dot,
        "  n{id} [label=\"n={} m={}{kind}\"];",
        node.graph.vertex_count(),
        node.graph.edge_count()
    );
    if let Some(cut) = &node.split {
        let n = node.graph.vertex_count();
        for (child, shore) in node.children.iter().zip([cut.shore(), cut.opposite_shore(n)]) {
            let child_id = dot_node(child, next, dot);
            let members: Vec<String> = shore.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(dot, "  n{id} -> n{child_id} [label=\"shrink {{{}}}\"];", members.join(","));
        }
    }
    id
}
