//! Small-graph catalog, build/strip/reconstruct round trips, sweeps and
//! machine-readable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::to_graph6;
use crate::par::map_slice;
use crate::reconfig::{build, strip, ReconfigKind, TokenRule};
use crate::reconstruct::{
    reconstruct_kempe_detailed, reconstruct_kempe_fast, reconstruct_single_detailed, reconstruct_single_fast,
    reconstruct_tar0, reconstruct_tar1, reconstruct_tj2, reconstruct_token_trivial, Tj2Outcome,
};
use crate::{chromatic_number, is_isomorphic, Config, Error, Graph, Result};

/// Largest order the built-in catalog generates.
pub const CATALOG_MAX_N: usize = 6;

/// Canonical code: the minimum, over all vertex orders, of the upper-triangle
/// adjacency bits read in graph6 order. Brute force, so only for tiny graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical codes are brute force and limited to 8 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let code_of = |order: &[usize]| {
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = (code << 1) | ((adj[order[i]] >> order[j]) & 1) as u64;
            }
        }
        code
    };
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = code_of(&order);
    // Heap's algorithm over all orders.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            order.swap(j, i);
            best = best.min(code_of(&order));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if (code >> bit) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_valid_edges(n, edges)
}

/// One graph per isomorphism class on `0..=n_max` vertices, ordered by
/// vertex count, then edge count, then canonical code.
pub fn catalog(n_max: usize) -> Result<Vec<Graph>> {
    if n_max > CATALOG_MAX_N {
        return Err(Error::ResourceCap {
            what: "catalog order (larger catalogs must be read from graph6 files)",
            limit: CATALOG_MAX_N as u64,
        });
    }
    let mut out = vec![Graph::edgeless(0)];
    let mut level = vec![Graph::edgeless(0)];
    for n in 1..=n_max {
        let mut classes: BTreeMap<(usize, u64), ()> = BTreeMap::new();
        for g in &level {
            let base = Graph::disjoint_union(g, &Graph::edgeless(1));
            for mask in 0u32..1 << (n - 1) {
                let h = base
                    .with_edges((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)))
                    .expect("edges in range");
                classes.insert((h.m(), canonical_code(&h)), ());
            }
        }
        level = classes.keys().map(|&(_, code)| graph_from_code(n, code)).collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// How the number of colours is chosen for each catalog graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRule {
    ChiPlus1,
    ChiPlus2,
    /// `max(min{n, 2Δ} + 1, χ + 1)`, with the single-vertex fast reconstructor.
    Fast,
    /// `max(min{n, 2Δ} + 2, χ + 2)`, with the Kempe fast reconstructor.
    FastKempe,
    Fixed(usize),
}

impl KRule {
    pub fn k_for(self, g: &Graph, chi: usize) -> usize {
        let bound = g.n().min(2 * g.max_degree());
        match self {
            KRule::ChiPlus1 => chi + 1,
            KRule::ChiPlus2 => chi + 2,
            KRule::Fast => (bound + 1).max(chi + 1),
            KRule::FastKempe => (bound + 2).max(chi + 2),
            KRule::Fixed(k) => k,
        }
    }

    pub fn is_fast(self) -> bool {
        matches!(self, KRule::Fast | KRule::FastKempe)
    }
}

impl fmt::Display for KRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KRule::ChiPlus1 => f.write_str("chi+1"),
            KRule::ChiPlus2 => f.write_str("chi+2"),
            KRule::Fast => f.write_str("fast"),
            KRule::FastKempe => f.write_str("fast-kempe"),
            KRule::Fixed(k) => write!(f, "fixed:{k}"),
        }
    }
}

impl FromStr for KRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi+1" => Ok(KRule::ChiPlus1),
            "chi+2" => Ok(KRule::ChiPlus2),
            "fast" => Ok(KRule::Fast),
            "fast-kempe" => Ok(KRule::FastKempe),
            other => other
                .strip_prefix("fixed:")
                .unwrap_or(other)
                .parse()
                .map(KRule::Fixed)
                .map_err(|_| Error::parse(0, format!("unknown k rule `{other}`"))),
        }
    }
}

impl Serialize for KRule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which reconstructor to run on a stripped graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Single,
    SingleFast,
    Kempe,
    KempeFast,
    Tar0,
    Tar1,
    SlidingOne,
    Jumping2,
}

impl Algorithm {
    /// The reconstructor matching a kind and token count, if there is one.
    pub fn for_kind(kind: ReconfigKind, k: usize, fast: bool) -> Result<Algorithm> {
        Ok(match (kind, k) {
            (ReconfigKind::SingleVertex, _) if fast => Algorithm::SingleFast,
            (ReconfigKind::SingleVertex, _) => Algorithm::Single,
            (ReconfigKind::Kempe, _) if fast => Algorithm::KempeFast,
            (ReconfigKind::Kempe, _) => Algorithm::Kempe,
            (ReconfigKind::Token(TokenRule::AdditionRemoval), 0) => Algorithm::Tar0,
            (ReconfigKind::Token(TokenRule::AdditionRemoval), 1) => Algorithm::Tar1,
            (ReconfigKind::Token(TokenRule::Sliding), 1) => Algorithm::SlidingOne,
            (ReconfigKind::Token(TokenRule::Jumping), 2) => Algorithm::Jumping2,
            (ReconfigKind::Token(rule), k) => {
                return Err(Error::UnsupportedCase {
                    rule: rule.to_string(),
                    k,
                })
            }
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Single => "single",
            Algorithm::SingleFast => "single-fast",
            Algorithm::Kempe => "kempe",
            Algorithm::KempeFast => "kempe-fast",
            Algorithm::Tar0 => "tar0",
            Algorithm::Tar1 => "tar1",
            Algorithm::SlidingOne => "ts1",
            Algorithm::Jumping2 => "tj2",
        }
    }

    /// Whether the theory guarantees recovering `g` with `k` colours or tokens.
    pub fn guaranteed(self, g: &Graph, chi: usize, k: usize) -> bool {
        let bound = g.n().min(2 * g.max_degree());
        match self {
            Algorithm::Single => k > chi,
            Algorithm::SingleFast => k > chi && k > bound,
            Algorithm::Kempe => k > chi + 1,
            Algorithm::KempeFast => k > chi + 1 && k > bound + 1,
            Algorithm::Tar0 | Algorithm::SlidingOne => true,
            Algorithm::Tar1 => g.n() > 0,
            Algorithm::Jumping2 => {
                // Roots are unique for connected line graphs other than the triangle,
                // and vertices universal in g are isolated in the complement, so invisible.
                let (line, _) = g.complement().line_graph();
                line.is_connected() && g.universal_vertices().is_empty() && !(line.n() == 3 && line.m() == 3)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Algorithm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// What a reconstructor produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// The recovered graphs: one, or two for the ambiguous triangle.
    pub graphs: Vec<Graph>,
    pub chosen_vertex: Option<usize>,
    pub candidate_sizes: Option<Vec<(usize, usize)>>,
}

pub fn run_algorithm(r: &Graph, algorithm: Algorithm, cfg: &Config) -> Result<Outcome> {
    let single = |graph: Graph| Outcome {
        graphs: vec![graph],
        chosen_vertex: None,
        candidate_sizes: None,
    };
    Ok(match algorithm {
        Algorithm::Single | Algorithm::Kempe => {
            let rec = if algorithm == Algorithm::Single {
                reconstruct_single_detailed(r, cfg)?
            } else {
                reconstruct_kempe_detailed(r, cfg)?
            };
            Outcome {
                graphs: vec![rec.graph],
                chosen_vertex: Some(rec.chosen_vertex),
                candidate_sizes: Some(rec.candidate_sizes),
            }
        }
        Algorithm::SingleFast => Outcome {
            chosen_vertex: Some(0),
            ..single(reconstruct_single_fast(r)?)
        },
        Algorithm::KempeFast => Outcome {
            chosen_vertex: Some(0),
            ..single(reconstruct_kempe_fast(r)?)
        },
        Algorithm::Tar0 => single(reconstruct_tar0(r)?),
        Algorithm::Tar1 => single(reconstruct_tar1(r, cfg)?),
        Algorithm::SlidingOne => single(reconstruct_token_trivial(r, TokenRule::Sliding, 1, cfg)?),
        Algorithm::Jumping2 => match reconstruct_tj2(r, cfg)? {
            Tj2Outcome::UniqueGraph(g) => single(g),
            Tj2Outcome::AmbiguousK3 { from_triangle, from_claw } => Outcome {
                graphs: vec![from_triangle, from_claw],
                chosen_vertex: None,
                candidate_sizes: None,
            },
        },
    })
}

/// Hex SHA-256 of the graph6 encoding.
pub fn input_hash(g: &Graph) -> String {
    Sha256::digest(to_graph6(g).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub input_hash: String,
    pub algorithm: Algorithm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chosen_vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate_sizes: Option<Vec<(usize, usize)>>,
    /// Absent when the input has two non-isomorphic preimages.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_graph6: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic_to_expected: Option<bool>,
}

pub fn reconstruction_report(r: &Graph, algorithm: Algorithm, expected: Option<&Graph>, cfg: &Config) -> Result<ReconstructionReport> {
    let outcome = run_algorithm(r, algorithm, cfg)?;
    let (output_graph6, alternatives) = match outcome.graphs.as_slice() {
        [g] => (Some(to_graph6(g)), Vec::new()),
        many => (None, many.iter().map(to_graph6).collect()),
    };
    let isomorphic_to_expected =
        expected.map(|e| outcome.graphs.len() == 1 && is_isomorphic(&outcome.graphs[0], e).is_some());
    Ok(ReconstructionReport {
        input_hash: input_hash(r),
        algorithm,
        chosen_vertex: outcome.chosen_vertex,
        candidate_sizes: outcome.candidate_sizes,
        output_graph6,
        alternatives,
        isomorphic_to_expected,
    })
}

/// One build → strip → reconstruct → compare run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundtripRecord {
    pub graph6: String,
    pub n: usize,
    pub chi: usize,
    pub kind: ReconfigKind,
    pub k: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    /// Reconfiguration graph size.
    pub vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstructed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Whether the theory guarantees success for this instance.
    pub expected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RoundtripRecord {
    pub fn succeeded(&self) -> bool {
        self.reconstructed == Some(true)
    }

    /// A guaranteed instance that was not recovered.
    pub fn unexpected_failure(&self) -> bool {
        self.expected && !self.succeeded()
    }
}

/// Options shared by round trips and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    /// Use the radius-2 reconstructors for colouring kinds.
    pub fast: bool,
    /// Record wall-clock times (makes reports differ between runs).
    pub timings: bool,
}

pub fn roundtrip(g: &Graph, kind: ReconfigKind, k: usize, seed: u64, opts: RunOptions, cfg: &Config) -> RoundtripRecord {
    let start = Instant::now();
    let chi = chromatic_number(g, cfg);
    let algorithm = Algorithm::for_kind(kind, k, opts.fast);
    let mut record = RoundtripRecord {
        graph6: to_graph6(g),
        n: g.n(),
        chi: *chi.as_ref().unwrap_or(&0),
        kind,
        k,
        seed,
        algorithm: *algorithm.as_ref().unwrap_or(&Algorithm::Single),
        vertices: 0,
        reconstructed: None,
        error: None,
        expected: false,
        elapsed_ms: None,
    };
    let result = (|| -> Result<bool> {
        let chi = chi?;
        let algorithm = algorithm?;
        record.expected = algorithm.guaranteed(g, chi, k);
        let built = build(g, kind, k, cfg)?;
        record.vertices = built.n();
        let stripped = strip(&built, seed);
        let outcome = run_algorithm(&stripped, algorithm, cfg)?;
        Ok(outcome.graphs.len() == 1 && is_isomorphic(&outcome.graphs[0], g).is_some())
    })();
    match result {
        Ok(ok) => record.reconstructed = Some(ok),
        Err(e) => record.error = Some(e.to_string()),
    }
    if opts.timings {
        record.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    record
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Aggregate {
    pub total: usize,
    pub reconstructed: usize,
    pub not_reconstructed: usize,
    pub errors: usize,
    pub expected: usize,
    pub unexpected_failures: usize,
    pub unexpected_successes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub kind: ReconfigKind,
    pub k_rule: KRule,
    pub seeds: Vec<u64>,
    pub records: Vec<RoundtripRecord>,
    pub aggregate: Aggregate,
}

impl SweepReport {
    pub fn all_expected_ok(&self) -> bool {
        self.aggregate.unexpected_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }
}

/// Round trips for every graph and seed. Graphs are processed in parallel;
/// each pipeline runs sequentially and records stay in input order.
pub fn sweep(graphs: &[Graph], kind: ReconfigKind, k_rule: KRule, seeds: &[u64], opts: RunOptions, cfg: &Config) -> SweepReport {
    let inner = Config {
        parallel: false,
        ..cfg.clone()
    };
    let opts = RunOptions {
        fast: opts.fast || k_rule.is_fast(),
        ..opts
    };
    let per_graph = map_slice(graphs, cfg.parallel, |g| {
        let k = chromatic_number(g, &inner).map(|chi| k_rule.k_for(g, chi)).unwrap_or(0);
        seeds
            .iter()
            .map(|&seed| roundtrip(g, kind, k, seed, opts, &inner))
            .collect::<Vec<_>>()
    });
    let records: Vec<RoundtripRecord> = per_graph.into_iter().flatten().collect();
    let mut agg = Aggregate {
        total: records.len(),
        ..Aggregate::default()
    };
    for r in &records {
        match (r.reconstructed, &r.error) {
            (Some(true), _) => agg.reconstructed += 1,
            (Some(false), _) => agg.not_reconstructed += 1,
            _ => agg.errors += 1,
        }
        agg.expected += r.expected as usize;
        agg.unexpected_failures += r.unexpected_failure() as usize;
        agg.unexpected_successes += (!r.expected && r.succeeded()) as usize;
    }
    SweepReport {
        kind,
        k_rule,
        seeds: seeds.to_vec(),
        records,
        aggregate: agg,
    }
}
