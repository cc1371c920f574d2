//! Graph sources shared by the command line and sweep manifests.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use twcert::enumerate::MAX_ENUMERATION_VERTICES;
use twcert::generators::{gen_gnp, gen_random_ktree};
use twcert::{
    labeled_graph, labeled_graph_count, parse_edge_list, parse_graph6, parse_graph6_lines, Graph,
};

use crate::error::CliError;

/// One entry of a corpus. Random families derive the seed of their `i`-th
/// graph as `seed + i`, so each graph is reproducible on its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Corpus {
    /// All labeled graphs on exactly `n` vertices, in graph6 order.
    Enumerate {
        n: usize,
    },
    Graph6 {
        graphs: Vec<String>,
    },
    Graph6File {
        path: PathBuf,
    },
    EdgeList {
        path: PathBuf,
    },
    RandomKtrees {
        k: usize,
        n: usize,
        count: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
    Gnp {
        n: usize,
        p: f64,
        trials: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl Corpus {
    /// Parses `k=3,n=10,count=100,seed=5`.
    pub fn random_ktrees(spec: &str) -> Result<Self, CliError> {
        let mut kv = KeyValues::parse("--random-ktrees", spec, &["k", "n", "count", "seed"])?;
        Ok(Corpus::RandomKtrees {
            k: kv.required("k")?,
            n: kv.required("n")?,
            count: kv.required("count")?,
            seed: kv.optional("seed")?,
        })
    }

    /// Parses `n=16,p=0.5,trials=20,seed=1`.
    pub fn gnp(spec: &str) -> Result<Self, CliError> {
        let mut kv = KeyValues::parse("--gnp", spec, &["n", "p", "trials", "seed"])?;
        Ok(Corpus::Gnp {
            n: kv.required("n")?,
            p: kv.required("p")?,
            trials: kv.required("trials")?,
            seed: kv.optional("seed")?,
        })
    }

    /// Resolves relative paths against `base`.
    pub fn rebase(&mut self, base: &Path) {
        if let Corpus::Graph6File { path } | Corpus::EdgeList { path } = self {
            if path.is_relative() {
                *path = base.join(&*path);
            }
        }
    }

    fn load(&self, default_seed: u64) -> Result<Loaded, CliError> {
        let graphs = match self {
            Corpus::Enumerate { n } => {
                if *n > MAX_ENUMERATION_VERTICES {
                    return Err(twcert::Error::EnumerationTooLarge(*n).into());
                }
                if *n == 0 {
                    return Err(CliError::Input("--enumerate needs n >= 1".into()));
                }
                return Ok(Loaded::Enumerate {
                    n: *n,
                    count: labeled_graph_count(*n) as usize,
                });
            }
            Corpus::Graph6 { graphs } => graphs
                .iter()
                .map(|s| {
                    parse_graph6(s)
                        .map(|g| (g, None))
                        .map_err(|e| CliError::core(format!("graph6 {s:?}: "), e))
                })
                .collect::<Result<_, _>>()?,
            Corpus::Graph6File { path } => {
                let text = read(path)?;
                parse_graph6_lines(&text)
                    .map_err(|e| CliError::core(format!("{}: ", path.display()), e))?
                    .into_iter()
                    .map(|g| (g, None))
                    .collect()
            }
            Corpus::EdgeList { path } => {
                let text = read(path)?;
                let g = parse_edge_list(&text)
                    .map_err(|e| CliError::core(format!("{}: ", path.display()), e))?;
                vec![(g, None)]
            }
            &Corpus::RandomKtrees { k, n, count, seed } => {
                let base = seed.unwrap_or(default_seed);
                (0..count)
                    .map(|i| {
                        let s = base.wrapping_add(i as u64);
                        gen_random_ktree(n, k, s).map(|(g, _)| (g, Some(s)))
                    })
                    .collect::<Result<_, _>>()?
            }
            &Corpus::Gnp { n, p, trials, seed } => {
                let base = seed.unwrap_or(default_seed);
                (0..trials)
                    .map(|i| {
                        let s = base.wrapping_add(i as u64);
                        gen_gnp(n, p, s).map(|g| (g, Some(s)))
                    })
                    .collect::<Result<_, _>>()?
            }
        };
        Ok(Loaded::Graphs(graphs))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

enum Loaded {
    Enumerate { n: usize, count: usize },
    Graphs(Vec<(Graph, Option<u64>)>),
}

impl Loaded {
    fn len(&self) -> usize {
        match self {
            Loaded::Enumerate { count, .. } => *count,
            Loaded::Graphs(v) => v.len(),
        }
    }

    fn get(&self, i: usize) -> (Graph, Option<u64>) {
        match self {
            Loaded::Enumerate { n, .. } => (labeled_graph(*n, i as u64), None),
            Loaded::Graphs(v) => v[i].clone(),
        }
    }
}

/// The concatenation of several corpora, indexable without materializing
/// enumerations.
pub struct Inputs {
    parts: Vec<Loaded>,
    len: usize,
}

impl Inputs {
    pub fn load(corpus: &[Corpus], default_seed: u64) -> Result<Self, CliError> {
        if corpus.is_empty() {
            return Err(CliError::Input("no input graphs given".into()));
        }
        let parts = corpus
            .iter()
            .map(|c| c.load(default_seed))
            .collect::<Result<Vec<_>, _>>()?;
        let len = parts.iter().map(Loaded::len).sum();
        Ok(Inputs { parts, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The `i`-th graph and the seed it was generated from, if any.
    pub fn get(&self, mut i: usize) -> (Graph, Option<u64>) {
        for part in &self.parts {
            if i < part.len() {
                return part.get(i);
            }
            i -= part.len();
        }
        panic!("input index out of range")
    }
}

struct KeyValues {
    flag: &'static str,
    values: BTreeMap<String, String>,
}

impl KeyValues {
    fn parse(flag: &'static str, spec: &str, allowed: &[&str]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| {
                CliError::Input(format!("{flag}: expected key=value, got {part:?}"))
            })?;
            let k = k.trim();
            if !allowed.contains(&k) {
                return Err(CliError::Input(format!(
                    "{flag}: unknown key {k:?} (expected {})",
                    allowed.join(", ")
                )));
            }
            if values.insert(k.to_string(), v.trim().to_string()).is_some() {
                return Err(CliError::Input(format!("{flag}: key {k:?} given twice")));
            }
        }
        Ok(KeyValues { flag, values })
    }

    fn optional<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>, CliError> {
        self.values
            .remove(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::Input(format!("{}: bad value {v:?} for {key}", self.flag))
                })
            })
            .transpose()
    }

    fn required<T: std::str::FromStr>(&mut self, key: &str) -> Result<T, CliError> {
        self.optional(key)?
            .ok_or_else(|| CliError::Input(format!("{}: missing {key}", self.flag)))
    }
}
