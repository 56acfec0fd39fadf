//! Labelled reconfiguration graphs and label stripping.
//!
//! Vertices are always listed in label order (lexicographic for colourings,
//! size-then-lexicographic for token sets), so vertex `i` of a freshly built
//! graph is the `i`-th label. Only [`strip`] permutes vertices.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colouring::{enumerate_colourings, kempe_neighbours_raw, swap_chain_in_place};
use crate::indep::independent_sets;
use crate::par::map_range;
use crate::{Colouring, Config, Error, Graph, Result, TokenSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TokenRule {
    #[serde(rename = "tj")]
    Jumping,
    #[serde(rename = "ts")]
    Sliding,
    #[serde(rename = "tar")]
    AdditionRemoval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReconfigKind {
    #[serde(rename = "single")]
    SingleVertex,
    #[serde(rename = "kempe")]
    Kempe,
    #[serde(untagged)]
    Token(TokenRule),
}

impl ReconfigKind {
    pub const ALL: [ReconfigKind; 5] = [
        ReconfigKind::SingleVertex,
        ReconfigKind::Kempe,
        ReconfigKind::Token(TokenRule::Jumping),
        ReconfigKind::Token(TokenRule::Sliding),
        ReconfigKind::Token(TokenRule::AdditionRemoval),
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReconfigKind::SingleVertex => "single",
            ReconfigKind::Kempe => "kempe",
            ReconfigKind::Token(TokenRule::Jumping) => "tj",
            ReconfigKind::Token(TokenRule::Sliding) => "ts",
            ReconfigKind::Token(TokenRule::AdditionRemoval) => "tar",
        }
    }

    pub fn is_colouring(self) -> bool {
        matches!(self, ReconfigKind::SingleVertex | ReconfigKind::Kempe)
    }
}

impl fmt::Display for ReconfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for TokenRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(ReconfigKind::Token(*self).name())
    }
}

impl FromStr for ReconfigKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "single" | "single-vertex" | "recolouring" | "recoloring" => ReconfigKind::SingleVertex,
            "kempe" => ReconfigKind::Kempe,
            "tj" | "jumping" => ReconfigKind::Token(TokenRule::Jumping),
            "ts" | "sliding" => ReconfigKind::Token(TokenRule::Sliding),
            "tar" | "ar" | "addition-removal" => ReconfigKind::Token(TokenRule::AdditionRemoval),
            other => return Err(Error::parse(0, format!("unknown reconfiguration kind `{other}`"))),
        })
    }
}

/// Vertex labels of a reconfiguration graph, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Labels {
    Colourings(Vec<Colouring>),
    TokenSets(Vec<TokenSet>),
}

impl Labels {
    pub fn len(&self) -> usize {
        match self {
            Labels::Colourings(c) => c.len(),
            Labels::TokenSets(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Human-readable form of each label (`"1,2,1"` or `"{0,2}"`).
    pub fn display(&self) -> Vec<String> {
        match self {
            Labels::Colourings(c) => c.iter().map(Colouring::to_string).collect(),
            Labels::TokenSets(t) => t
                .iter()
                .map(|s| {
                    let inner: Vec<String> = s.vertices().iter().map(usize::to_string).collect();
                    format!("{{{}}}", inner.join(","))
                })
                .collect(),
        }
    }
}

/// A reconfiguration graph, with labels unless it has been stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigGraph {
    pub kind: ReconfigKind,
    /// Number of colours, or number of tokens (minimum number for TAR).
    pub k: usize,
    pub graph: Graph,
    pub labels: Option<Labels>,
}

/// `C_k(g)`: proper `k`-colourings joined when they differ at one vertex.
pub fn build_single(g: &Graph, k: usize, cfg: &Config) -> Result<ReconfigGraph> {
    let colourings = enumerate_colourings(g, k, cfg)?;
    let forward = map_range(colourings.len(), cfg.parallel, |i| {
        let base = colourings[i].colours();
        let mut buf = base.to_vec();
        let mut out = Vec::new();
        for v in 0..g.n() {
            // Only larger colours at v give lexicographically larger colourings.
            for j in base[v] + 1..=k as u8 {
                if g.neighbours(v).iter().all(|&w| base[w] != j) {
                    buf[v] = j;
                    out.push(find(&colourings, &buf));
                }
            }
            buf[v] = base[v];
        }
        out.sort_unstable();
        out
    });
    Ok(ReconfigGraph {
        kind: ReconfigKind::SingleVertex,
        k,
        graph: Graph::from_forward_lists(forward),
        labels: Some(Labels::Colourings(colourings)),
    })
}

/// `K_k(g)`: proper `k`-colourings joined when one Kempe swap turns one into the other.
pub fn build_kempe(g: &Graph, k: usize, cfg: &Config) -> Result<ReconfigGraph> {
    let colourings = enumerate_colourings(g, k, cfg)?;
    let forward = map_range(colourings.len(), cfg.parallel, |i| {
        let base = colourings[i].colours();
        let mut out: Vec<usize> = kempe_neighbours_raw(g, k, base)
            .into_iter()
            .filter(|c| c.as_slice() > base)
            .map(|c| find(&colourings, &c))
            .collect();
        out.sort_unstable();
        out
    });
    Ok(ReconfigGraph {
        kind: ReconfigKind::Kempe,
        k,
        graph: Graph::from_forward_lists(forward),
        labels: Some(Labels::Colourings(colourings)),
    })
}

fn find(colourings: &[Colouring], colours: &[u8]) -> usize {
    colourings
        .binary_search_by(|c| c.colours().cmp(colours))
        .expect("a proper colouring is among the enumerated ones")
}

/// The token graph of `g` with `k` tokens under `rule`.
///
/// Jumping and sliding use the independent sets of size exactly `k`;
/// addition/removal uses every independent set of size at least `k`.
pub fn build_token(g: &Graph, k: usize, rule: TokenRule, cfg: &Config) -> Result<ReconfigGraph> {
    let mut sets = independent_sets(g, k, cfg)?;
    if rule != TokenRule::AdditionRemoval {
        sets.retain(|s| s.len() == k);
    }
    // Sets are sorted by size, so all sets of one size form a contiguous block.
    let block_start: Vec<usize> = (0..=g.n() + 1)
        .map(|size| sets.partition_point(|s| s.len() < size))
        .collect();
    let forward = map_range(sets.len(), cfg.parallel, |i| {
        let s = &sets[i];
        let (lo, hi) = match rule {
            TokenRule::AdditionRemoval => (block_start[s.len() + 1], block_start[(s.len() + 2).min(g.n() + 1)]),
            _ => (i + 1, sets.len()),
        };
        (lo.max(i + 1)..hi)
            .filter(|&j| is_token_move(g, rule, s, &sets[j]))
            .collect()
    });
    Ok(ReconfigGraph {
        kind: ReconfigKind::Token(rule),
        k,
        graph: Graph::from_forward_lists(forward),
        labels: Some(Labels::TokenSets(sets)),
    })
}

/// Whether one move of `rule` turns `a` into `b` (both assumed independent).
pub fn is_token_move(g: &Graph, rule: TokenRule, a: &TokenSet, b: &TokenSet) -> bool {
    let diff = a.symmetric_difference(b);
    match rule {
        TokenRule::AdditionRemoval => diff.len() == 1,
        TokenRule::Jumping => a.len() == b.len() && diff.len() == 2,
        TokenRule::Sliding => a.len() == b.len() && diff.len() == 2 && g.has_edge(diff[0], diff[1]),
    }
}

/// Builds the reconfiguration graph of the given kind.
pub fn build(g: &Graph, kind: ReconfigKind, k: usize, cfg: &Config) -> Result<ReconfigGraph> {
    match kind {
        ReconfigKind::SingleVertex => build_single(g, k, cfg),
        ReconfigKind::Kempe => build_kempe(g, k, cfg),
        ReconfigKind::Token(rule) => build_token(g, k, rule, cfg),
    }
}

/// The seeded permutation used by [`strip`]: old vertex `v` becomes `perm[v]`.
pub fn strip_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

/// Erases labels and relabels vertices by a seeded pseudo-random permutation.
pub fn strip(r: &ReconfigGraph, seed: u64) -> Graph {
    r.graph.permute(&strip_permutation(r.graph.n(), seed))
}

impl ReconfigGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn stripped(&self, seed: u64) -> ReconfigGraph {
        ReconfigGraph {
            kind: self.kind,
            k: self.k,
            graph: strip(self, seed),
            labels: None,
        }
    }

    /// Checks the labels against `g`: every label valid and distinct, every
    /// edge a legal move, and every legal move between labels an edge.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        let Some(labels) = &self.labels else {
            return bad("reconfiguration graph carries no labels".into());
        };
        if labels.len() != self.graph.n() {
            return bad(format!("{} labels for {} vertices", labels.len(), self.graph.n()));
        }
        match labels {
            Labels::Colourings(cs) => {
                if !self.kind.is_colouring() {
                    return bad("colouring labels on a token graph".into());
                }
                if !cs.windows(2).all(|w| w[0] < w[1]) {
                    return bad("colourings are not distinct and sorted".into());
                }
                if let Some(i) = cs.iter().position(|c| c.k() != self.k || !c.is_proper(g)) {
                    return bad(format!("label {i} is not a proper {}-colouring", self.k));
                }
                let mut mark = vec![false; g.n()];
                let mut queue = VecDeque::new();
                let mut chain = Vec::new();
                for (i, a) in cs.iter().enumerate() {
                    for (j, b) in cs.iter().enumerate().skip(i + 1) {
                        let legal = match self.kind {
                            ReconfigKind::SingleVertex => a.difference(b).len() == 1,
                            _ => {
                                let diff = a.difference(b);
                                let v = diff[0];
                                let mut swapped = a.colours().to_vec();
                                swap_chain_in_place(g, &mut swapped, v, b.colours()[v], &mut queue, &mut chain, &mut mark);
                                swapped == b.colours()
                            }
                        };
                        if legal != self.graph.has_edge(i, j) {
                            return bad(format!("vertices {i} and {j}: move legal = {legal}, edge present = {}", !legal));
                        }
                    }
                }
            }
            Labels::TokenSets(ts) => {
                let ReconfigKind::Token(rule) = self.kind else {
                    return bad("token labels on a colouring graph".into());
                };
                if !ts.windows(2).all(|w| w[0] < w[1]) {
                    return bad("token sets are not distinct and sorted".into());
                }
                let size_ok = |s: &TokenSet| match rule {
                    TokenRule::AdditionRemoval => s.len() >= self.k,
                    _ => s.len() == self.k,
                };
                if let Some(i) = ts.iter().position(|s| !s.is_independent_in(g) || !size_ok(s)) {
                    return bad(format!("label {i} is not a valid token set"));
                }
                for i in 0..ts.len() {
                    for j in i + 1..ts.len() {
                        let legal = is_token_move(g, rule, &ts[i], &ts[j]);
                        if legal != self.graph.has_edge(i, j) {
                            return bad(format!("vertices {i} and {j}: move legal = {legal}, edge present = {}", !legal));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// JSON document `{kind, params, n, edges, labels?}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Params {
            k: usize,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            kind: ReconfigKind,
            params: Params,
            n: usize,
            edges: Vec<[usize; 2]>,
            #[serde(skip_serializing_if = "Option::is_none")]
            labels: Option<&'a Labels>,
        }
        let doc = Doc {
            kind: self.kind,
            params: Params { k: self.k },
            n: self.graph.n(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.as_ref(),
        };
        serde_json::to_string(&doc).expect("reconfiguration graphs always serialise")
    }

    /// Reads a document written by [`ReconfigGraph::to_json`].
    pub fn from_json(text: &str) -> Result<ReconfigGraph> {
        #[derive(Deserialize)]
        struct Params {
            k: usize,
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum RawLabels {
            Colourings(Vec<String>),
            TokenSets(Vec<Vec<usize>>),
        }
        #[derive(Deserialize)]
        struct Doc {
            kind: ReconfigKind,
            params: Params,
            n: usize,
            edges: Vec<[usize; 2]>,
            labels: Option<RawLabels>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| {
            // serde_json reports line/column; convert to a byte offset.
            let offset = text
                .split_inclusive('\n')
                .take(e.line().saturating_sub(1))
                .map(str::len)
                .sum::<usize>()
                + e.column().saturating_sub(1);
            Error::parse(offset, e.to_string())
        })?;
        let graph = Graph::from_edges(doc.n, doc.edges.iter().map(|&[u, v]| (u, v)))?;
        let labels = match doc.labels {
            None => None,
            // an empty list reads as colourings whatever the kind
            Some(RawLabels::Colourings(raw)) if raw.is_empty() && !doc.kind.is_colouring() => {
                Some(Labels::TokenSets(Vec::new()))
            }
            Some(RawLabels::Colourings(raw)) => Some(Labels::Colourings(
                raw.iter()
                    .map(|s| {
                        let colours = s
                            .split(',')
                            .filter(|t| !t.is_empty())
                            .map(|t| t.trim().parse::<u8>())
                            .collect::<std::result::Result<Vec<u8>, _>>()
                            .map_err(|_| Error::parse(0, format!("invalid colouring label `{s}`")))?;
                        Colouring::new(doc.params.k, colours)
                    })
                    .collect::<Result<Vec<_>>>()?,
            )),
            Some(RawLabels::TokenSets(raw)) => {
                Some(Labels::TokenSets(raw.into_iter().map(TokenSet::new).collect()))
            }
        };
        Ok(ReconfigGraph {
            kind: doc.kind,
            k: doc.params.k,
            graph,
            labels,
        })
    }
}
