//! Recovering a graph from an unlabelled reconfiguration graph.
//!
//! None of the reconstructors is told `k`: they see only the graph.

mod kempe;
mod single;
mod token;

pub use kempe::{candidate_kempe, candidate_kempe_fast, reconstruct_kempe, reconstruct_kempe_detailed, reconstruct_kempe_fast, tstar_fails};
pub use single::{
    candidate_single, candidate_single_fast, candidate_single_local, neighbourhood_cliques, reconstruct_single,
    reconstruct_single_detailed, reconstruct_single_fast, star_fails,
};
pub use token::{
    find_layering, reconstruct_tar0, reconstruct_tar1, reconstruct_tar1_checked, reconstruct_tj2,
    reconstruct_token_trivial, Layering, Tj2Outcome,
};

use serde::Serialize;

use crate::par::map_range;
use crate::{Config, Error, Graph, Result};

/// The graph read off the neighbourhood of one reconfiguration vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateGraph {
    pub graph: Graph,
    /// The reconfiguration vertex `c` the candidate was derived from.
    pub source_vertex: usize,
    /// The neighbourhood cliques behind the candidate's vertices, in order.
    pub cliques: Vec<Vec<usize>>,
    pub clique_sizes: Vec<usize>,
}

impl CandidateGraph {
    fn new(graph: Graph, source_vertex: usize, cliques: Vec<Vec<usize>>) -> Self {
        let clique_sizes = cliques.iter().map(Vec::len).collect();
        CandidateGraph {
            graph,
            source_vertex,
            cliques,
            clique_sizes,
        }
    }

    pub fn size(&self) -> (usize, usize) {
        (self.graph.n(), self.graph.m())
    }
}

/// Outcome of a max-candidate reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reconstruction {
    #[serde(skip)]
    pub graph: Graph,
    pub chosen_vertex: usize,
    /// `(|V|, |E|)` of the candidate at every reconfiguration vertex.
    pub candidate_sizes: Vec<(usize, usize)>,
}

/// Builds the candidate graph whose vertices are `cliques` and whose edges
/// are the pairs for which `joined` holds.
fn candidate_from_cliques<F>(c: usize, cliques: Vec<Vec<usize>>, joined: F) -> CandidateGraph
where
    F: Fn(&[usize], &[usize]) -> bool,
{
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if joined(&cliques[i], &cliques[j]) {
                edges.push((i, j));
            }
        }
    }
    CandidateGraph::new(Graph::from_valid_edges(cliques.len(), edges), c, cliques)
}

/// Evaluates `candidate` at every vertex and keeps the lexicographic maximum
/// of `(|V|, |E|)`, preferring the smallest vertex on ties.
fn reconstruct_max<F>(r: &Graph, cfg: &Config, candidate: F) -> Result<Reconstruction>
where
    F: Fn(&Graph, usize) -> Result<CandidateGraph> + Sync + Send,
{
    if r.is_empty() {
        return Err(Error::EmptyInput);
    }
    let candidate_sizes = map_range(r.n(), cfg.parallel, |c| candidate(r, c).map(|cg| cg.size()))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut chosen = 0;
    for (c, &size) in candidate_sizes.iter().enumerate() {
        if size > candidate_sizes[chosen] {
            chosen = c;
        }
    }
    Ok(Reconstruction {
        graph: candidate(r, chosen)?.graph,
        chosen_vertex: chosen,
        candidate_sizes,
    })
}

/// Vertices within distance two of `c`, sorted.
fn ball2(r: &Graph, c: usize) -> Vec<usize> {
    let mut seen = vec![false; r.n()];
    seen[c] = true;
    let mut out = vec![c];
    for &a in r.neighbours(c) {
        if !seen[a] {
            seen[a] = true;
            out.push(a);
        }
    }
    for i in 1..out.len() {
        for &x in r.neighbours(out[i]) {
            if !seen[x] {
                seen[x] = true;
                out.push(x);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Runs `candidate` on the radius-2 ball around `c` and maps the cliques back.
/// Also returns the number of vertices looked at.
fn local_candidate<F>(r: &Graph, c: usize, candidate: F) -> Result<(CandidateGraph, usize)>
where
    F: Fn(&Graph, usize) -> Result<CandidateGraph>,
{
    let ball = ball2(r, c);
    let local = r.induced(&ball);
    let local_c = ball.binary_search(&c).expect("centre lies in its ball");
    let mut cg = candidate(&local, local_c).map_err(|e| match e {
        Error::NotCliquePartition { .. } => Error::NotCliquePartition { vertex: c },
        other => other,
    })?;
    cg.source_vertex = c;
    for clique in &mut cg.cliques {
        for v in clique.iter_mut() {
            *v = ball[*v];
        }
    }
    Ok((cg, ball.len()))
}
