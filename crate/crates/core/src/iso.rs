//! Graph isomorphism by colour refinement followed by backtracking.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::Graph;

/// A bijection `g -> h` given as `mapping[v_g] = v_h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// Re-checks that the mapping is a bijection preserving edges and non-edges.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.n();
        if h.n() != n || self.mapping.len() != n || g.m() != h.m() {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in &self.mapping {
            if w >= n || hit[w] {
                return false;
            }
            hit[w] = true;
        }
        // Equal edge counts plus injectivity make edge preservation sufficient.
        g.edges()
            .all(|(u, v)| h.has_edge(self.mapping[u], self.mapping[v]))
    }
}

/// Stable colouring of the disjoint union `g + h` (g's vertices first).
/// Colour ids are shared between both sides.
fn refine_jointly(g: &Graph, h: &Graph) -> Vec<usize> {
    let n = g.n();
    let union = Graph::disjoint_union(g, h);
    let mut colour: Vec<usize> = (0..2 * n).map(|x| union.degree(x)).collect();
    let mut classes = colour.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|x| {
                let mut s: Vec<usize> = union.neighbours(x).iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[x], s)
            })
            .collect();
        // Ranking signatures in sorted order keeps ids independent of vertex order.
        let ranked: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranked[s]).collect();
        let count = ranked.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

/// Returns a witness iff `g` and `h` are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<IsoWitness> {
    let n = g.n();
    if h.n() != n || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    if n == 0 {
        return Some(IsoWitness { mapping: vec![] });
    }

    let colour = refine_jointly(g, h);
    let classes = colour.iter().max().map_or(0, |&c| c + 1);
    let mut count_g = vec![0usize; classes];
    let mut h_by_colour: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for v in 0..n {
        count_g[colour[v]] += 1;
        h_by_colour[colour[n + v]].push(v);
    }
    if (0..classes).any(|c| count_g[c] != h_by_colour[c].len()) {
        return None;
    }

    let order = matching_order(g, &colour[..n], &count_g);
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n);

    let compute = |depth: usize, mapping: &[usize], used: &[bool]| -> Vec<usize> {
        let v = order[depth];
        let mapped_nbrs: Vec<usize> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&u| position[u] < depth)
            .collect();
        let pool: &[usize] = match mapped_nbrs.first() {
            Some(&u) => h.neighbours(mapping[u]),
            None => &h_by_colour[colour[v]],
        };
        pool.iter()
            .copied()
            .filter(|&w| {
                !used[w]
                    && colour[n + w] == colour[v]
                    && mapped_nbrs.iter().all(|&u| h.has_edge(mapping[u], w))
                    && h.neighbours(w).iter().filter(|&&x| used[x]).count() == mapped_nbrs.len()
            })
            .collect()
    };

    candidates.push(compute(0, &mapping, &used));
    cursor.push(0);
    loop {
        let depth = candidates.len() - 1;
        let v = order[depth];
        if mapping[v] != usize::MAX {
            used[mapping[v]] = false;
            mapping[v] = usize::MAX;
        }
        if cursor[depth] >= candidates[depth].len() {
            candidates.pop();
            cursor.pop();
            if candidates.is_empty() {
                return None;
            }
            continue;
        }
        let w = candidates[depth][cursor[depth]];
        cursor[depth] += 1;
        mapping[v] = w;
        used[w] = true;
        if depth + 1 == n {
            let witness = IsoWitness { mapping };
            debug_assert!(witness.verify(g, h));
            return Some(witness);
        }
        candidates.push(compute(depth + 1, &mapping, &used));
        cursor.push(0);
    }
}

/// Order in which `g`'s vertices get matched: start from the rarest colour,
/// then always take the vertex with the most already-ordered neighbours.
fn matching_order(g: &Graph, colour: &[usize], class_size: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    links[v],
                    std::cmp::Reverse(class_size[colour[v]]),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbours(next) {
            links[w] += 1;
        }
    }
    order
}
