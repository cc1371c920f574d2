//! The `twcert` command line: exact treewidth with certificates, theorem
//! checks over graph sources, and manifest-driven sweeps.

pub mod error;
pub mod source;
pub mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twcert::theorems::{check_union_witness, random_graph_smoke};
use twcert::treewidth::{DEFAULT_EXACT_CAP, MAX_EXACT_CAP};
use twcert::{
    decomposition_from_order, treewidth_exact_capped, verify_decomposition, width_upper_heuristic,
    EliminationOrder, Graph, Heuristic, Report, TreeDecomposition, Verdict,
};

pub use error::{CliError, EXIT_CAPABILITY, EXIT_INPUT, EXIT_PASS, EXIT_VIOLATION};
pub use source::{Corpus, Inputs};
pub use sweep::{CheckKind, Format, Summary, SweepManifest};

#[derive(Debug, Parser)]
#[command(
    name = "twcert",
    version,
    about = "Exact treewidth with certificates and Nordhaus-Gaddum checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Treewidth of each input graph with an elimination order and tree decomposition.
    Tw(TwArgs),
    /// Run one checker over the input graphs; one Report per input.
    Check(CheckArgs),
    /// Replay a sweep manifest (JSON).
    Sweep(SweepArgs),
    /// Build and check the tight union pair for given k and n.
    Witness(WitnessArgs),
    /// Distribution of tw(G) + tw(complement) over samples of G(n, 1/2).
    Smoke(SmokeArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Graph in graph6 (repeatable).
    #[arg(long = "graph6", value_name = "G6")]
    pub graph6: Vec<String>,
    /// Edge-list file with an `n m` header (repeatable).
    #[arg(long = "edges", value_name = "PATH")]
    pub edges: Vec<PathBuf>,
    /// File with one graph6 string per line (repeatable).
    #[arg(long = "graph6-file", value_name = "PATH")]
    pub graph6_file: Vec<PathBuf>,
    /// All labeled graphs on exactly N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    /// Random k-trees, e.g. `k=3,n=10,count=100,seed=5`.
    #[arg(long = "random-ktrees", value_name = "SPEC")]
    pub random_ktrees: Option<String>,
    /// Random G(n, p) graphs, e.g. `n=16,p=0.5,trials=20,seed=1`.
    #[arg(long, value_name = "SPEC")]
    pub gnp: Option<String>,
}

impl InputArgs {
    /// Corpus entries in flag order: graph6, edges, files, enumeration,
    /// random k-trees, G(n, p).
    pub fn corpus(&self) -> Result<Vec<Corpus>, CliError> {
        let mut out = Vec::new();
        if !self.graph6.is_empty() {
            out.push(Corpus::Graph6 {
                graphs: self.graph6.clone(),
            });
        }
        out.extend(
            self.edges
                .iter()
                .map(|p| Corpus::EdgeList { path: p.clone() }),
        );
        out.extend(
            self.graph6_file
                .iter()
                .map(|p| Corpus::Graph6File { path: p.clone() }),
        );
        if let Some(n) = self.enumerate {
            out.push(Corpus::Enumerate { n });
        }
        if let Some(spec) = &self.random_ktrees {
            out.push(Corpus::random_ktrees(spec)?);
        }
        if let Some(spec) = &self.gnp {
            out.push(Corpus::gnp(spec)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeuristicArg {
    MinFill,
    MinDegree,
}

impl From<HeuristicArg> for Heuristic {
    fn from(h: HeuristicArg) -> Self {
        match h {
            HeuristicArg::MinFill => Heuristic::MinFill,
            HeuristicArg::MinDegree => Heuristic::MinDegree,
        }
    }
}

#[derive(Debug, Args)]
pub struct TwArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Above the cap, fall back to a greedy upper bound instead of failing.
    #[arg(long, value_name = "STRATEGY", num_args = 0..=1, default_missing_value = "min-fill")]
    pub heuristic: Option<HeuristicArg>,
    /// Largest vertex count solved exactly.
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write results here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Largest vertex count solved exactly.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Report file (JSON lines); the summary then goes to standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Inapplicable or inconclusive inputs fail the run.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub check: CheckKind,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Clique parameter for lemma2 (default: clique number + 1 per graph).
    #[arg(long)]
    pub k: Option<usize>,
    /// Seed for random sources without an explicit `seed=`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Above the cap, report min-fill bounds instead of failing (check main).
    #[arg(long)]
    pub heuristic: bool,
    /// Save the equivalent sweep manifest.
    #[arg(long, value_name = "PATH")]
    pub save_manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub manifest: PathBuf,
    /// Override the manifest's worker count.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Override the manifest's Report file.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SmokeArgs {
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Runs a parsed command line and returns the process exit code. Diagnostics
/// go to standard error.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Tw(a) => cmd_tw(&a),
        Command::Check(a) => cmd_check(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Witness(a) => single(check_union_witness(a.k, a.n, a.cap), a.format),
        Command::Smoke(a) => single(random_graph_smoke(a.n, a.trials, a.seed, a.cap), a.format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn create(path: &Path) -> Result<Box<dyn Write>, CliError> {
    let f = File::create(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Box::new(BufWriter::new(f)))
}

fn stdout() -> Box<dyn Write> {
    Box::new(BufWriter::new(io::stdout().lock()))
}

fn verdict_code(v: Verdict) -> i32 {
    if v == Verdict::Fail {
        EXIT_VIOLATION
    } else {
        EXIT_PASS
    }
}

fn single(report: twcert::Result<Report>, format: Format) -> Result<i32, CliError> {
    let r = report?;
    let mut out = stdout();
    match format {
        Format::Json => writeln!(out, "{}", r.to_json_line())?,
        Format::Human => writeln!(out, "{r}")?,
    }
    out.flush()?;
    Ok(verdict_code(r.verdict))
}

/// Result of `tw` for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct TwResult {
    pub graph6: String,
    pub n: usize,
    pub width: usize,
    /// False when `width` is only a heuristic upper bound.
    pub exact: bool,
    pub order: EliminationOrder,
    pub decomposition: TreeDecomposition,
    pub decomposition_valid: bool,
}

impl std::fmt::Display for TwResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = if self.exact {
            "treewidth"
        } else {
            "upper bound"
        };
        writeln!(f, "{}: n {}, {kind} {}", self.graph6, self.n, self.width)?;
        let order: Vec<String> = self.order.order().iter().map(ToString::to_string).collect();
        writeln!(f, "  order: {}", order.join(" "))?;
        let bags: Vec<String> = self
            .decomposition
            .bags
            .iter()
            .map(ToString::to_string)
            .collect();
        writeln!(f, "  bags: {}", bags.join(" "))?;
        let edges: Vec<String> = self
            .decomposition
            .edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        writeln!(f, "  tree edges: {}", edges.join(" "))?;
        write!(f, "  decomposition valid: {}", self.decomposition_valid)
    }
}

/// Exact treewidth when `n <= cap`, otherwise the heuristic bound if one is
/// allowed.
pub fn tw_result(
    g: &Graph,
    cap: usize,
    heuristic: Option<Heuristic>,
) -> Result<TwResult, CliError> {
    let (width, order, exact) = match (g.n() > cap, heuristic) {
        (true, Some(h)) => {
            let (w, o) = width_upper_heuristic(g, h)?;
            (w, o, false)
        }
        _ => {
            let (w, o) = treewidth_exact_capped(g, cap)?;
            (w, o, true)
        }
    };
    let decomposition = decomposition_from_order(g, &order)?;
    let decomposition_valid =
        verify_decomposition(g, &decomposition).is_ok() && decomposition.width() == width;
    Ok(TwResult {
        graph6: twcert::emit_graph6(g),
        n: g.n(),
        width,
        exact,
        order,
        decomposition,
        decomposition_valid,
    })
}

fn cmd_tw(a: &TwArgs) -> Result<i32, CliError> {
    if a.cap > MAX_EXACT_CAP {
        return Err(CliError::Input(format!(
            "cap {} exceeds the maximum of {MAX_EXACT_CAP}",
            a.cap
        )));
    }
    let inputs = Inputs::load(&a.input.corpus()?, 0)?;
    let mut out = match &a.out {
        Some(p) => create(p)?,
        None => stdout(),
    };
    let mut code = EXIT_PASS;
    for i in 0..inputs.len() {
        let r = tw_result(&inputs.get(i).0, a.cap, a.heuristic.map(Into::into))?;
        if !r.decomposition_valid {
            code = EXIT_VIOLATION;
        }
        match a.format {
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(&r).expect("results serialize")
            )?,
            Format::Human => writeln!(out, "{r}")?,
        }
    }
    out.flush()?;
    Ok(code)
}

fn cmd_check(a: &CheckArgs) -> Result<i32, CliError> {
    let mut m = SweepManifest::new(a.check, a.input.corpus()?);
    m.seed = a.seed;
    m.jobs = a.run.jobs;
    m.out = a.run.out.clone();
    m.cap = a.run.cap.unwrap_or(DEFAULT_EXACT_CAP);
    m.k = a.k;
    m.heuristic = a.heuristic;
    m.strict = a.run.strict;
    if let Some(path) = &a.save_manifest {
        let mut f = create(path)?;
        writeln!(
            f,
            "{}",
            serde_json::to_string_pretty(&m).expect("manifests serialize")
        )?;
        f.flush()?;
    }
    execute(&m, a.run.format)
}

fn cmd_sweep(a: &SweepArgs) -> Result<i32, CliError> {
    let mut m = SweepManifest::from_path(&a.manifest)?;
    if a.jobs.is_some() {
        m.jobs = a.jobs;
    }
    if a.out.is_some() {
        m.out = a.out.clone();
    }
    execute(&m, a.format)
}

/// Reports go to `m.out` (always JSON lines) with the summary on standard
/// output, or to standard output with the summary on standard error.
fn execute(m: &SweepManifest, format: Format) -> Result<i32, CliError> {
    let summary = match &m.out {
        Some(path) => {
            let mut sink = create(path)?;
            let s = sweep::run(m, &mut sink, Format::Json)?;
            print_summary(&s, format, &mut io::stdout().lock())?;
            s
        }
        None => {
            let s = sweep::run(m, &mut stdout(), format)?;
            print_summary(&s, format, &mut io::stderr().lock())?;
            s
        }
    };
    Ok(if summary.ok() {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn print_summary(s: &Summary, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => writeln!(
            w,
            "{}",
            serde_json::to_string(s).expect("summaries serialize")
        ),
        Format::Human => writeln!(w, "{s}"),
    }
}
