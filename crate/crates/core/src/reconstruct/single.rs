//! Reconstruction from the single-vertex recolouring graph.
//!
//! The neighbourhood of a colouring `c` splits into cliques, one per vertex of
//! `G` that can be recoloured. Two such cliques come from adjacent vertices of
//! `G` exactly when some pair drawn from them has no common neighbour besides `c`.

use super::{candidate_from_cliques, local_candidate, reconstruct_max, CandidateGraph, Reconstruction};
use crate::{Config, Error, Graph, Result};

/// Components of the subgraph induced by `N(c)`, each checked to be a clique.
pub fn neighbourhood_cliques(r: &Graph, c: usize) -> Result<Vec<Vec<usize>>> {
    let nbrs = r.neighbours(c);
    let induced = r.induced(nbrs);
    induced
        .connected_components()
        .into_iter()
        .map(|comp| {
            if comp.graph.m() * 2 != comp.vertices.len() * (comp.vertices.len() - 1) {
                return Err(Error::NotCliquePartition { vertex: c });
            }
            Ok(comp.vertices.iter().map(|&i| nbrs[i]).collect())
        })
        .collect()
}

/// True when some `a` in `a_side` and `b` in `b_side` have no common neighbour other than `c`.
pub fn star_fails(r: &Graph, c: usize, a_side: &[usize], b_side: &[usize]) -> bool {
    a_side
        .iter()
        .any(|&a| b_side.iter().any(|&b| !r.has_common_neighbour_except(a, b, c)))
}

pub fn candidate_single(r: &Graph, c: usize) -> Result<CandidateGraph> {
    let cliques = neighbourhood_cliques(r, c)?;
    Ok(candidate_from_cliques(c, cliques, |a, b| star_fails(r, c, a, b)))
}

/// [`candidate_single`] computed from the vertices within distance two of
/// `c` only; also returns how many vertices that was.
pub fn candidate_single_local(r: &Graph, c: usize) -> Result<(CandidateGraph, usize)> {
    local_candidate(r, c, candidate_single)
}

/// The candidate at `c`, reading only its radius-2 ball. When the hidden
/// graph has `k > min{n, 2Δ}` every candidate is already the answer.
pub fn candidate_single_fast(r: &Graph, c: usize) -> Result<Graph> {
    Ok(candidate_single_local(r, c)?.0.graph)
}

pub fn reconstruct_single(r: &Graph, cfg: &Config) -> Result<Graph> {
    Ok(reconstruct_single_detailed(r, cfg)?.graph)
}

pub fn reconstruct_single_detailed(r: &Graph, cfg: &Config) -> Result<Reconstruction> {
    reconstruct_max(r, cfg, candidate_single)
}

/// Reads the candidate at vertex 0 only.
pub fn reconstruct_single_fast(r: &Graph) -> Result<Graph> {
    if r.is_empty() {
        return Err(Error::EmptyInput);
    }
    candidate_single_fast(r, 0)
}
