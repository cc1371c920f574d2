//! Check plans, the parallel runner and the ordered aggregator.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use twcert::theorems::{
    check_coloring, check_lemma2, check_proposition_upper, check_theorem1, check_theorem4,
    check_theorem_girth,
};
use twcert::treewidth::{DEFAULT_EXACT_CAP, MAX_EXACT_CAP};
use twcert::{Graph, Report, Verdict};

use crate::error::CliError;
use crate::source::{Corpus, Inputs};

const CHUNK: usize = 8192;
const WITNESS_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// tw(G) + tw(complement) >= n - 2
    Main,
    /// no induced C4 and no k-clique imply tw(complement) >= n - k
    Lemma2,
    /// girth >= 5 implies tw(complement) >= n - 3
    Girth,
    /// k-tree sums: n - 1 on Q_n^k, n - 2 otherwise
    Ktree,
    /// clique number of a union is at most tw1 + tw2 + 2 (pairs)
    PropClique,
    /// greedy colouring of a union uses at most 4k colours (pairs)
    Coloring,
}

impl CheckKind {
    pub fn arity(self) -> usize {
        match self {
            CheckKind::PropClique | CheckKind::Coloring => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Main => "main",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::Girth => "girth",
            CheckKind::Ktree => "ktree",
            CheckKind::PropClique => "prop-clique",
            CheckKind::Coloring => "coloring",
        }
    }
}

fn default_cap() -> usize {
    DEFAULT_EXACT_CAP
}

/// A reproducible sweep: which check, over which graphs, with which
/// parameters. The same manifest always yields the same Report file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepManifest {
    pub check: CheckKind,
    pub corpus: Vec<Corpus>,
    /// Seed for random corpus entries that do not carry their own.
    #[serde(default)]
    pub seed: u64,
    /// Worker threads; absent or 0 means all available cores.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    /// Report file (JSON lines). Without it Reports go to standard output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default = "default_cap")]
    pub cap: usize,
    /// Clique parameter for `lemma2`; absent means `clique_number + 1` per
    /// graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Allow bound-only results above the cap (`main` only).
    #[serde(default)]
    pub heuristic: bool,
    /// Count inapplicable and inconclusive Reports as failures.
    #[serde(default)]
    pub strict: bool,
}

impl SweepManifest {
    pub fn new(check: CheckKind, corpus: Vec<Corpus>) -> Self {
        SweepManifest {
            check,
            corpus,
            seed: 0,
            jobs: None,
            out: None,
            cap: DEFAULT_EXACT_CAP,
            k: None,
            heuristic: false,
            strict: false,
        }
    }

    /// Reads a manifest; relative paths inside it are taken relative to the
    /// manifest's directory.
    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut m: SweepManifest =
            serde_json::from_str(&text).map_err(|source| CliError::Manifest {
                path: path.to_path_buf(),
                source,
            })?;
        let base = path.parent().unwrap_or(Path::new("."));
        for c in &mut m.corpus {
            c.rebase(base);
        }
        if let Some(out) = &mut m.out {
            if out.is_relative() {
                *out = base.join(&*out);
            }
        }
        Ok(m)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.cap > MAX_EXACT_CAP {
            return Err(CliError::Input(format!(
                "cap {} exceeds the maximum of {MAX_EXACT_CAP}",
                self.cap
            )));
        }
        if self.heuristic && self.check != CheckKind::Main {
            return Err(CliError::Input(format!(
                "--heuristic only applies to check main, not {}",
                self.check.name()
            )));
        }
        if self.k.is_some() && self.check != CheckKind::Lemma2 {
            return Err(CliError::Input("--k only applies to check lemma2".into()));
        }
        Ok(())
    }

    pub fn jobs(&self) -> usize {
        match self.jobs {
            Some(j) if j > 0 => j,
            _ => std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

fn evaluate(m: &SweepManifest, graphs: &[Graph], seed: Option<u64>) -> Result<Report, CliError> {
    let g = &graphs[0];
    if m.check == CheckKind::Main && g.n() > m.cap && !m.heuristic {
        return Err(twcert::Error::OverCap {
            n: g.n(),
            cap: m.cap,
        }
        .into());
    }
    let report = match m.check {
        CheckKind::Main => check_theorem1(g, m.cap),
        CheckKind::Lemma2 => {
            let k = match m.k {
                Some(k) => k,
                None if g.n() == 0 => 1,
                None => g.clique_number()?.0 + 1,
            };
            check_lemma2(g, k, m.cap)
        }
        CheckKind::Girth => check_theorem_girth(g, m.cap),
        CheckKind::Ktree => check_theorem4(g, m.cap),
        CheckKind::PropClique => check_proposition_upper(g, &graphs[1], m.cap),
        CheckKind::Coloring => check_coloring(g, &graphs[1], m.cap),
    };
    let context = format!("{} on {}: ", m.check.name(), twcert::emit_graph6(g));
    let report = report.map_err(|e| CliError::core(context, e))?;
    Ok(match seed {
        Some(s) => report.with_seed(s),
        None => report,
    })
}

/// Aggregate over a run, accumulated in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub check: String,
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub inconclusive: usize,
    pub min_slack: Option<i64>,
    /// Inputs attaining `min_slack`, first ones in input order.
    pub min_slack_witnesses: Vec<Vec<String>>,
    pub max_slack: Option<i64>,
    pub max_slack_witnesses: Vec<Vec<String>>,
    pub failures: Vec<Vec<String>>,
    pub strict: bool,
}

impl Summary {
    fn new(check: CheckKind, strict: bool) -> Self {
        Summary {
            check: check.name().to_string(),
            total: 0,
            pass: 0,
            fail: 0,
            inapplicable: 0,
            inconclusive: 0,
            min_slack: None,
            min_slack_witnesses: Vec::new(),
            max_slack: None,
            max_slack_witnesses: Vec::new(),
            failures: Vec::new(),
            strict,
        }
    }

    fn add(&mut self, r: &Report) {
        self.total += 1;
        match r.verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
        if r.verdict == Verdict::Fail && self.failures.len() < WITNESS_LIMIT {
            self.failures.push(r.graph6.clone());
        }
        if let Some(s) = r.slack() {
            extremum(
                &mut self.min_slack,
                &mut self.min_slack_witnesses,
                s,
                &r.graph6,
                |a, b| a < b,
            );
            extremum(
                &mut self.max_slack,
                &mut self.max_slack_witnesses,
                s,
                &r.graph6,
                |a, b| a > b,
            );
        }
    }

    /// True when the run found nothing that should fail it.
    pub fn ok(&self) -> bool {
        self.fail == 0 && (!self.strict || self.inapplicable + self.inconclusive == 0)
    }
}

fn extremum(
    best: &mut Option<i64>,
    witnesses: &mut Vec<Vec<String>>,
    s: i64,
    g6: &[String],
    better: fn(i64, i64) -> bool,
) {
    match *best {
        Some(b) if b == s => {
            if witnesses.len() < WITNESS_LIMIT {
                witnesses.push(g6.to_vec());
            }
        }
        Some(b) if !better(s, b) => {}
        _ => {
            *best = Some(s);
            witnesses.clear();
            witnesses.push(g6.to_vec());
        }
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check {}: {} inputs", self.check, self.total)?;
        writeln!(
            f,
            "  pass {}  fail {}  inapplicable {}  inconclusive {}",
            self.pass, self.fail, self.inapplicable, self.inconclusive
        )?;
        let join = |w: &[Vec<String>]| w.iter().map(|g| g.join("+")).collect::<Vec<_>>().join(" ");
        writeln!(
            f,
            "  min slack {}: {}",
            opt(self.min_slack),
            join(&self.min_slack_witnesses)
        )?;
        writeln!(
            f,
            "  max slack {}: {}",
            opt(self.max_slack),
            join(&self.max_slack_witnesses)
        )?;
        if !self.failures.is_empty() {
            writeln!(f, "  failures: {}", join(&self.failures))?;
        }
        write!(f, "  strict: {}", self.strict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Human,
}

/// Runs `m` on a thread pool of `m.jobs()` workers. Reports are written to
/// `sink` in input order, whatever the scheduling.
pub fn run(m: &SweepManifest, sink: &mut dyn Write, format: Format) -> Result<Summary, CliError> {
    m.validate()?;
    let inputs = Inputs::load(&m.corpus, m.seed)?;
    let arity = m.check.arity();
    if inputs.len() % arity != 0 {
        return Err(CliError::Input(format!(
            "check {} takes graphs in pairs; got {} graphs",
            m.check.name(),
            inputs.len()
        )));
    }
    let units = inputs.len() / arity;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(m.jobs())
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let mut summary = Summary::new(m.check, m.strict);
    for start in (0..units).step_by(CHUNK) {
        let end = (start + CHUNK).min(units);
        let reports: Vec<Result<Report, CliError>> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|u| {
                    let items: Vec<_> = (0..arity).map(|j| inputs.get(u * arity + j)).collect();
                    let seed = items[0].1;
                    let graphs: Vec<Graph> = items.into_iter().map(|(g, _)| g).collect();
                    evaluate(m, &graphs, seed)
                })
                .collect()
        });
        for r in reports {
            let r = r?;
            match format {
                Format::Json => writeln!(sink, "{}", r.to_json_line())?,
                Format::Human => writeln!(sink, "{r}")?,
            }
            summary.add(&r);
        }
    }
    sink.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manifest(check: CheckKind, corpus: Vec<Corpus>) -> SweepManifest {
        SweepManifest {
            jobs: Some(1),
            ..SweepManifest::new(check, corpus)
        }
    }

    #[test]
    fn enumerate_four_all_pass() {
        let m = manifest(CheckKind::Main, vec![Corpus::Enumerate { n: 4 }]);
        let mut out = Vec::new();
        let s = run(&m, &mut out, Format::Json).unwrap();
        assert_eq!((s.total, s.pass), (64, 64));
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 64);
        assert_eq!(s.min_slack, Some(0));
        assert!(s.ok());
    }

    #[test]
    fn pairs_must_be_even() {
        let m = manifest(CheckKind::Coloring, vec![Corpus::Enumerate { n: 1 }]);
        assert_eq!(
            run(&m, &mut Vec::new(), Format::Json)
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn over_cap_is_a_capability_error() {
        let m = SweepManifest {
            cap: 5,
            ..manifest(
                CheckKind::Main,
                vec![Corpus::Graph6 {
                    graphs: vec!["IheA@GUAo".into()],
                }],
            )
        };
        assert_eq!(
            run(&m, &mut Vec::new(), Format::Json)
                .unwrap_err()
                .exit_code(),
            3
        );
        let m = SweepManifest {
            heuristic: true,
            ..m
        };
        let s = run(&m, &mut Vec::new(), Format::Json).unwrap();
        assert_eq!(s.inconclusive, 1);
        assert!(s.ok());
    }

    #[test]
    fn strict_counts_inapplicable() {
        let c4 = Corpus::Graph6 {
            graphs: vec!["Cr".into()],
        };
        let mut s = run(
            &manifest(CheckKind::Girth, vec![c4]),
            &mut Vec::new(),
            Format::Json,
        )
        .unwrap();
        assert_eq!(s.inapplicable, 1);
        assert!(s.ok());
        s.strict = true;
        assert!(!s.ok());
    }

    #[test]
    fn manifest_defaults() {
        let m: SweepManifest =
            serde_json::from_str(r#"{"check":"main","corpus":[{"kind":"enumerate","n":3}]}"#)
                .unwrap();
        assert_eq!(
            m,
            SweepManifest::new(CheckKind::Main, vec![Corpus::Enumerate { n: 3 }])
        );
        assert!(serde_json::from_str::<SweepManifest>(
            r#"{"check":"main","corpus":[],"colour":1}"#
        )
        .is_err());
    }
}
