//! Reconstruction from the Kempe recolouring graph.
//!
//! A single neighbour of `c` may be a non-trivial Kempe swap rather than a
//! recolouring of one vertex, so neighbourhood components of size one are
//! dropped. Cliques are joined when some pair drawn from them fails (⋆⋆⋆):
//! a common neighbour `x ≠ c` of `a` and `b` such that the edges `xa` and `xb`
//! each lie on a triangle. Such an `x` recolours both vertices by trivial
//! swaps, and the triangles show that each of those swaps had a second colour
//! available.

use super::{candidate_from_cliques, local_candidate, reconstruct_max, CandidateGraph, Reconstruction};
use crate::{Config, Error, Graph, Result};

/// True when no common neighbour `x ≠ c` of `a` and `b` realises (⋆⋆⋆),
/// i.e. when no such `x` has both edges `xa` and `xb` lying on triangles.
pub fn tstar_fails(r: &Graph, c: usize, a: usize, b: usize) -> bool {
    !r.neighbours(a).iter().any(|&x| {
        x != c
            && r.has_edge(x, b)
            && r.common_neighbour_count(x, a) > 0
            && r.common_neighbour_count(x, b) > 0
    })
}

pub fn candidate_kempe(r: &Graph, c: usize) -> Result<CandidateGraph> {
    let nbrs = r.neighbours(c);
    let mut cliques = Vec::new();
    for comp in r.induced(nbrs).connected_components() {
        let size = comp.vertices.len();
        if size < 2 {
            continue;
        }
        if comp.graph.m() * 2 != size * (size - 1) {
            return Err(Error::NotCliquePartition { vertex: c });
        }
        cliques.push(comp.vertices.iter().map(|&i| nbrs[i]).collect::<Vec<_>>());
    }
    Ok(candidate_from_cliques(c, cliques, |xs, ys| {
        xs.iter().any(|&a| ys.iter().any(|&b| tstar_fails(r, c, a, b)))
    }))
}

/// [`candidate_kempe`] computed from the radius-2 ball around `c`, with the
/// number of vertices read.
pub fn candidate_kempe_fast(r: &Graph, c: usize) -> Result<(CandidateGraph, usize)> {
    local_candidate(r, c, candidate_kempe)
}

pub fn reconstruct_kempe(r: &Graph, cfg: &Config) -> Result<Graph> {
    Ok(reconstruct_kempe_detailed(r, cfg)?.graph)
}

pub fn reconstruct_kempe_detailed(r: &Graph, cfg: &Config) -> Result<Reconstruction> {
    reconstruct_max(r, cfg, candidate_kempe)
}

/// Reads the candidate at vertex 0 only; sound when `k > min{n, 2Δ} + 1`.
pub fn reconstruct_kempe_fast(r: &Graph) -> Result<Graph> {
    if r.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(candidate_kempe_fast(r, 0)?.0.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::{build_kempe, strip, Labels};
    use crate::{is_isomorphic, Colouring};

    fn labelled(g: &Graph, k: usize) -> (Graph, Vec<Colouring>) {
        let r = build_kempe(g, k, &Config::default()).unwrap();
        let Some(Labels::Colourings(cs)) = r.labels else { unreachable!() };
        (r.graph, cs)
    }

    fn index_of(cs: &[Colouring], colours: &[u8]) -> usize {
        cs.iter().position(|c| c.colours() == colours).unwrap()
    }

    #[test]
    fn tstar_examples() {
        let (r, cs) = labelled(&Graph::path(3), 4);
        let c = index_of(&cs, &[1, 2, 1]);
        // recolour the adjacent vertices 0 and 1 to the unused colour 4
        let cu = index_of(&cs, &[4, 2, 1]);
        let cv = index_of(&cs, &[1, 4, 1]);
        assert!(tstar_fails(&r, c, cu, cv));
        // the endpoints 0 and 2 are not adjacent: no pair fails
        let ends: Vec<usize> = [[3, 2, 1], [4, 2, 1], [1, 2, 3], [1, 2, 4]]
            .iter()
            .map(|col| index_of(&cs, col))
            .collect();
        for &a in &ends[..2] {
            for &b in &ends[2..] {
                assert!(!tstar_fails(&r, c, a, b));
            }
        }
    }

    #[test]
    fn candidate_examples() {
        let (r, cs) = labelled(&Graph::path(3), 4);
        let c = index_of(&cs, &[1, 2, 1]);
        assert!(is_isomorphic(&candidate_kempe(&r, c).unwrap().graph, &Graph::path(3)).is_some());
        let (r, _) = labelled(&Graph::complete(3), 3);
        for c in 0..r.n() {
            assert!(candidate_kempe(&r, c).unwrap().graph.is_empty());
        }
    }

    #[test]
    fn reconstruct_examples() {
        for (g, k) in [(Graph::path(3), 4), (Graph::complete(3), 5), (Graph::cycle(5), 5)] {
            let r = strip(&build_kempe(&g, k, &Config::default()).unwrap(), 11);
            let out = reconstruct_kempe(&r, &Config::default()).unwrap();
            assert!(is_isomorphic(&out, &g).is_some(), "{g:?}");
        }
    }

    #[test]
    fn fast_matches_full() {
        let r = strip(&build_kempe(&Graph::path(3), 6, &Config::default()).unwrap(), 2);
        for c in 0..r.n() {
            assert_eq!(candidate_kempe_fast(&r, c).unwrap().0, candidate_kempe(&r, c).unwrap());
        }
        assert!(is_isomorphic(&reconstruct_kempe_fast(&r).unwrap(), &Graph::path(3)).is_some());
    }
}
