//! Property suite: each structural statement about the q-dimension becomes
//! a named check run over a seeded corpus of quotient rings.
//!
//! The corpus is the named families plus `n_random` random monomial
//! quotients. Every (ring, property) pair produces exactly one [`Verdict`];
//! the report is sorted, so equal seeds give byte-identical output no matter
//! how the work was scheduled.

mod properties;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::PolyRing;
use crate::qring::{embedded_prime_family, QuotientRing};

pub use properties::content_draws;
pub use random::gen_random_monomial_ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropertyId {
    #[serde(rename = "P-QLEQ")]
    QLeq,
    #[serde(rename = "P-VNR")]
    Vnr,
    #[serde(rename = "P-NIL")]
    Nil,
    #[serde(rename = "P-MIN")]
    Min,
    #[serde(rename = "P-COR25")]
    Cor25,
    #[serde(rename = "P-REM28")]
    Rem28,
    #[serde(rename = "P-DM")]
    Dm,
    #[serde(rename = "P-CQL")]
    Cql,
    #[serde(rename = "P-MAXEXT")]
    MaxExt,
    #[serde(rename = "P-BOUNDS")]
    Bounds,
    #[serde(rename = "P-NOETH")]
    Noeth,
    #[serde(rename = "P-HTEXT")]
    HtExt,
    #[serde(rename = "P-CLOSURE")]
    Closure,
}

impl PropertyId {
    pub const ALL: [PropertyId; 13] = [
        PropertyId::QLeq,
        PropertyId::Vnr,
        PropertyId::Nil,
        PropertyId::Min,
        PropertyId::Cor25,
        PropertyId::Rem28,
        PropertyId::Dm,
        PropertyId::Cql,
        PropertyId::MaxExt,
        PropertyId::Bounds,
        PropertyId::Noeth,
        PropertyId::HtExt,
        PropertyId::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::QLeq => "P-QLEQ",
            PropertyId::Vnr => "P-VNR",
            PropertyId::Nil => "P-NIL",
            PropertyId::Min => "P-MIN",
            PropertyId::Cor25 => "P-COR25",
            PropertyId::Rem28 => "P-REM28",
            PropertyId::Dm => "P-DM",
            PropertyId::Cql => "P-CQL",
            PropertyId::MaxExt => "P-MAXEXT",
            PropertyId::Bounds => "P-BOUNDS",
            PropertyId::Noeth => "P-NOETH",
            PropertyId::HtExt => "P-HTEXT",
            PropertyId::Closure => "P-CLOSURE",
        }
    }

    /// The statement the property checks.
    pub fn statement(self) -> &'static str {
        match self {
            PropertyId::QLeq => "q-dim(R) <= dim(R)",
            PropertyId::Vnr => {
                "tau_q-vNr <=> reduced with q-dim(R) = 0 <=> reduced with every maximal associated prime minimal"
            }
            PropertyId::Nil => "q-dim(R) >= q-dim(R/Nil(R))",
            PropertyId::Min => "the minimal spectrum Min(R) is compact (finite here)",
            PropertyId::Cor25 => "q-dim(R) = sup of heights of the maximal q-ideals, which are associated primes",
            PropertyId::Rem28 => "R = k[x,y1..yn]/(x^2, x*y_i) has q-dim(R) = n and R/Nil(R) is tau_q-vNr",
            PropertyId::Dm => "c(g)^(k+1) c(f) = c(g)^k c(gf) for some k <= deg f",
            PropertyId::Cql => "c(gf)_q = c(f)_q when g is a non-zero-divisor of R[t]",
            PropertyId::MaxExt => "the maximal q-ideals of R[t] are the extensions p[t] of those of R",
            PropertyId::Bounds => "q-dim(R) <= q-dim(R[t]) <= 2 q-dim(R)",
            PropertyId::Noeth => "q-dim(R) = q-dim(R[t]) for Noetherian R",
            PropertyId::HtExt => "ht(p[t]) = ht(p) for maximal q-ideals p",
            PropertyId::Closure => "A <= A_q, (A_q)_q = A_q, A <= B => A_q <= B_q",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::structural(format!("unknown property `{s}`")))
    }
}

/// Named rings always available to the corpus.
pub const NAMED_FAMILIES: [&str; 7] =
    ["embedded-1", "embedded-2", "embedded-3", "embedded-4", "cross", "field-gf2", "field-gf5"];

/// Builds a named ring: `embedded-n` is `GF(2)[x,y1..yn]/(x^2, x*y_i)`,
/// `cross` is `GF(2)[x,y]/(xy)`, `field-gfP` is `GF(P)` with no variables.
pub fn named_ring(name: &str) -> Result<QuotientRing> {
    if let Some(n) = name.strip_prefix("embedded-") {
        let n: usize = n.parse().map_err(|_| Error::structural(format!("bad family index in `{name}`")))?;
        if n == 0 {
            return Err(Error::structural("the embedded family starts at n = 1"));
        }
        return embedded_prime_family(n);
    }
    if name == "cross" {
        let ring = Arc::new(PolyRing::grevlex(PrimeField::gf2(), &["x", "y"])?);
        return QuotientRing::parse(ring, "x*y");
    }
    if let Some(p) = name.strip_prefix("field-gf") {
        let p: u64 = p.parse().map_err(|_| Error::structural(format!("bad modulus in `{name}`")))?;
        let ring = Arc::new(PolyRing::grevlex(PrimeField::new(p)?, &[] as &[&str])?);
        return QuotientRing::new(ring, Vec::new());
    }
    Err(Error::structural(format!("unknown named ring `{name}`")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub n_random: usize,
    pub nvars: usize,
    pub max_deg: u32,
    pub max_gens: usize,
    pub named_families: Vec<String>,
    /// Content-lemma draws per named ring.
    pub dm_draws: usize,
    /// Content-lemma draws per random ring.
    pub dm_draws_random: usize,
    /// Properties to run; all of them when empty.
    pub suite: Vec<PropertyId>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 42,
            n_random: 100,
            nvars: 4,
            max_deg: 4,
            max_gens: 6,
            named_families: NAMED_FAMILIES.iter().map(|s| s.to_string()).collect(),
            dm_draws: 200,
            dm_draws_random: 200,
            suite: Vec::new(),
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.nvars > 4 || self.max_deg > 4 || self.max_gens > 6 {
            return Err(Error::structural("corpus caps: nvars <= 4, max_deg <= 4, max_gens <= 6"));
        }
        Ok(())
    }

    pub fn properties(&self) -> Vec<PropertyId> {
        if self.suite.is_empty() {
            PropertyId::ALL.to_vec()
        } else {
            let mut s = self.suite.clone();
            s.sort();
            s.dedup();
            s
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusRing {
    pub id: String,
    pub ring: QuotientRing,
    /// Position in the corpus; seeds the per-ring random streams.
    pub index: u64,
    pub named: bool,
}

/// The rings of a corpus, named families first.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusRing>> {
    spec.validate()?;
    let mut out = Vec::new();
    for name in &spec.named_families {
        out.push(CorpusRing { id: name.clone(), ring: named_ring(name)?, index: out.len() as u64, named: true });
    }
    for i in 0..spec.n_random {
        let index = out.len() as u64;
        out.push(CorpusRing {
            id: format!("rand-{i:04}"),
            ring: gen_random_monomial_ring(spec.seed, 1_000_000 + i as u64, spec)?,
            index,
            named: false,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: PropertyId,
    pub ring: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub payload: BTreeMap<String, Value>,
}

impl Verdict {
    fn new(property: PropertyId, ring: &str, status: Status) -> Self {
        Verdict { property, ring: ring.to_string(), status, reason: None, payload: BTreeMap::new() }
    }

    pub fn pass(property: PropertyId, ring: &str) -> Self {
        Verdict::new(property, ring, Status::Pass)
    }

    pub fn fail(property: PropertyId, ring: &str, reason: impl Into<String>) -> Self {
        Verdict { reason: Some(reason.into()), ..Verdict::new(property, ring, Status::Fail) }
    }

    pub fn skip(property: PropertyId, ring: &str, reason: impl Into<String>) -> Self {
        Verdict { reason: Some(reason.into()), ..Verdict::new(property, ring, Status::Skip) }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.payload.insert(key.to_string(), value.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingEntry {
    pub id: String,
    pub presentation: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub corpus: CorpusSpec,
    pub properties: BTreeMap<String, String>,
    pub rings: Vec<RingEntry>,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn verdicts_for(&self, property: PropertyId) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(move |v| v.property == property)
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    /// Fixed-width table, one verdict per line.
    pub fn render_table(&self) -> String {
        let mut out = format!("{:<10} {:<12} {:<5} detail\n", "property", "ring", "status");
        for v in &self.verdicts {
            let status = match v.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let detail = v
                .reason
                .clone()
                .unwrap_or_else(|| v.payload.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join(" "));
            out.push_str(&format!("{:<10} {:<12} {:<5} {}\n", v.property.name(), v.ring, status, detail));
        }
        out.push_str(&format!(
            "\n{} pass, {} fail, {} skip\n",
            self.summary.pass, self.summary.fail, self.summary.skip
        ));
        out
    }
}

/// Runs one property; internal errors become failures carrying the ring.
pub fn run_property(entry: &CorpusRing, id: PropertyId, spec: &CorpusSpec) -> Verdict {
    match properties::run(entry, id, spec) {
        Ok(v) => v,
        Err(e) => Verdict::fail(id, &entry.id, format!("internal error: {e}")).with("ring", entry.ring.presentation()),
    }
}

/// Evaluates the whole (ring × property) grid in parallel.
pub fn run_corpus(spec: &CorpusSpec) -> Result<Report> {
    let corpus = build_corpus(spec)?;
    let props = spec.properties();
    let tasks: Vec<(usize, PropertyId)> = (0..corpus.len()).flat_map(|i| props.iter().map(move |&p| (i, p))).collect();
    let mut verdicts: Vec<Verdict> = tasks.par_iter().map(|&(i, p)| run_property(&corpus[i], p, spec)).collect();
    verdicts.sort_by(|a, b| (&a.ring, a.property).cmp(&(&b.ring, b.property)));

    // coverage: exactly one verdict per pair
    for entry in &corpus {
        for &p in &props {
            let n = verdicts.iter().filter(|v| v.ring == entry.id && v.property == p).count();
            if n != 1 {
                verdicts.push(Verdict::fail(p, &entry.id, format!("coverage gap: {n} verdicts")));
            }
        }
    }

    let mut summary = Summary::default();
    for v in &verdicts {
        match v.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skip => summary.skip += 1,
        }
    }
    Ok(Report {
        corpus: spec.clone(),
        properties: props.iter().map(|p| (p.name().to_string(), p.statement().to_string())).collect(),
        rings: corpus.iter().map(|c| RingEntry { id: c.id.clone(), presentation: c.ring.presentation() }).collect(),
        verdicts,
        summary,
    })
}

/// Line diff of two serialized reports; empty when they agree.
pub fn diff_reports(expected: &str, actual: &str) -> Vec<String> {
    let e: Vec<&str> = expected.lines().collect();
    let a: Vec<&str> = actual.lines().collect();
    let mut out = Vec::new();
    for i in 0..e.len().max(a.len()) {
        match (e.get(i), a.get(i)) {
            (Some(x), Some(y)) if x == y => {}
            (x, y) => {
                if let Some(x) = x {
                    out.push(format!("{:>5} - {x}", i + 1));
                }
                if let Some(y) = y {
                    out.push(format!("{:>5} + {y}", i + 1));
                }
            }
        }
    }
    out
}
