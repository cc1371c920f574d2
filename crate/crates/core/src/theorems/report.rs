use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::generators::RNG_NAME;
use crate::graph::Graph;
use crate::io::emit_graph6;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A hypothesis of the checked statement does not hold for this input.
    Inapplicable,
    /// Only bounds were available; nothing could be certified either way.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub value: u64,
    pub generator: String,
}

impl Seed {
    pub fn new(value: u64) -> Self {
        Seed {
            value,
            generator: RNG_NAME.to_string(),
        }
    }
}

/// Outcome of one check: inputs, computed quantities, certificates and the
/// verdict. Serializes to one JSON object per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub graph6: Vec<String>,
    pub n: usize,
    pub quantities: BTreeMap<String, Value>,
    pub certificates: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub seed: Option<Seed>,
    pub tool_version: String,
    pub schema_version: u32,
}

impl Report {
    pub(crate) fn new(check: &str, graphs: &[&Graph]) -> Self {
        Report {
            check: check.to_string(),
            graph6: graphs.iter().map(|g| emit_graph6(g)).collect(),
            n: graphs.first().map_or(0, |g| g.n()),
            quantities: BTreeMap::new(),
            certificates: BTreeMap::new(),
            verdict: Verdict::Inconclusive,
            seed: None,
            tool_version: TOOL_VERSION.to_string(),
            schema_version: SCHEMA_VERSION,
        }
    }

    pub(crate) fn set(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.quantities.insert(key.to_string(), to_value(value));
        self
    }

    pub(crate) fn certify(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.certificates.insert(key.to_string(), to_value(value));
        self
    }

    pub(crate) fn inapplicable(&mut self, hypothesis: &str) -> &mut Self {
        self.verdict = Verdict::Inapplicable;
        self.set("violated_hypothesis", hypothesis)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(Seed::new(seed));
        self
    }

    pub fn quantity(&self, key: &str) -> Option<&Value> {
        self.quantities.get(key)
    }

    pub fn quantity_i64(&self, key: &str) -> Option<i64> {
        self.quantities.get(key).and_then(Value::as_i64)
    }

    /// Margin by which the checked inequality holds (negative on failure),
    /// when the check has one.
    pub fn slack(&self) -> Option<i64> {
        self.quantity_i64("slack")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("certificate values serialize")
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check {}: {}", self.check, self.verdict)?;
        writeln!(f, "  graph6: {}", self.graph6.join(" "))?;
        writeln!(f, "  n: {}", self.n)?;
        for (k, v) in &self.quantities {
            writeln!(f, "  {k}: {}", compact(v))?;
        }
        for (k, v) in &self.certificates {
            writeln!(f, "  certificate {k}: {}", compact(v))?;
        }
        if let Some(seed) = &self.seed {
            writeln!(f, "  seed: {} ({})", seed.value, seed.generator)?;
        }
        write!(
            f,
            "  tool {} / schema {}",
            self.tool_version, self.schema_version
        )
    }
}
