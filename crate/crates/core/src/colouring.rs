//! Proper colourings, single-vertex and Kempe moves, and the colour-pattern
//! predicates (frozen vertices, always-distinct pairs, unique colours).

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::{chromatic_number, Config, Error, Graph, Result};

/// A total assignment of colours `1..=k`, one byte per vertex.
///
/// Colourings of the same graph compare lexicographically by colour vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    k: usize,
    colours: Vec<u8>,
}

impl Colouring {
    pub fn new(k: usize, colours: Vec<u8>) -> Result<Self> {
        if k > u8::MAX as usize {
            return Err(Error::ImproperInput(format!("at most 255 colours are supported, got {k}")));
        }
        if let Some(v) = colours.iter().position(|&c| c == 0 || c as usize > k) {
            return Err(Error::ImproperInput(format!(
                "vertex {v} has colour {} outside 1..={k}",
                colours[v]
            )));
        }
        Ok(Colouring { k, colours })
    }

    pub(crate) fn from_raw(k: usize, colours: Vec<u8>) -> Self {
        Colouring { k, colours }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v] as usize
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n() && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }

    /// Number of distinct colours that actually appear.
    pub fn colours_used(&self) -> usize {
        let mut seen = [false; 256];
        self.colours.iter().filter(|&&c| !std::mem::replace(&mut seen[c as usize], true)).count()
    }

    /// Vertices on which the two colourings disagree.
    pub fn difference(&self, other: &Colouring) -> Vec<usize> {
        (0..self.colours.len())
            .filter(|&v| self.colours[v] != other.colours[v])
            .collect()
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colours.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Colouring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_proper(g: &Graph, c: &Colouring) -> Result<()> {
    if c.n() != g.n() {
        return Err(Error::ImproperInput(format!(
            "colouring has {} entries for a graph on {} vertices",
            c.n(),
            g.n()
        )));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| c.colours[u] == c.colours[v]) {
        return Err(Error::ImproperInput(format!("edge ({u}, {v}) is monochromatic")));
    }
    Ok(())
}

/// Visits every proper `k`-colouring in lexicographic order. The visitor can
/// stop early with `ControlFlow::Break`. Returns the number visited.
pub fn for_each_colouring<F>(g: &Graph, k: usize, cfg: &Config, mut visit: F) -> Result<u64>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    if k > u8::MAX as usize {
        return Err(Error::ImproperInput(format!("at most 255 colours are supported, got {k}")));
    }
    let n = g.n();
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbours(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    let mut colours = vec![0u8; n];
    let mut count = 0u64;
    if n == 0 {
        // the empty colouring, even with no colours
        let _ = visit(&colours);
        return Ok(1);
    }
    // Iterative odometer over vertices 0..n, colours ascending.
    let mut v = 0usize;
    loop {
        let mut next = colours[v] + 1;
        while (next as usize) <= k && earlier[v].iter().any(|&w| colours[w] == next) {
            next += 1;
        }
        if next as usize > k {
            colours[v] = 0;
            if v == 0 {
                return Ok(count);
            }
            v -= 1;
            continue;
        }
        colours[v] = next;
        if v + 1 < n {
            v += 1;
            continue;
        }
        count += 1;
        if count > cfg.max_colourings {
            return Err(Error::ResourceCap {
                what: "colourings",
                limit: cfg.max_colourings,
            });
        }
        if visit(&colours).is_break() {
            return Ok(count);
        }
    }
}

/// Every proper `k`-colouring of `g`, in lexicographic order.
pub fn enumerate_colourings(g: &Graph, k: usize, cfg: &Config) -> Result<Vec<Colouring>> {
    let mut out = Vec::new();
    for_each_colouring(g, k, cfg, |c| {
        out.push(Colouring::from_raw(k, c.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// A single-vertex recolouring of `vertex` to `colour`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub vertex: usize,
    pub colour: usize,
    pub result: Colouring,
}

/// All proper colourings at Hamming distance one from `c`, by vertex then colour.
pub fn single_vertex_moves(g: &Graph, c: &Colouring) -> Result<Vec<Move>> {
    check_proper(g, c)?;
    let mut out = Vec::new();
    for v in 0..g.n() {
        for j in 1..=c.k as u8 {
            if j != c.colours[v] && g.neighbours(v).iter().all(|&w| c.colours[w] != j) {
                let mut colours = c.colours.clone();
                colours[v] = j;
                out.push(Move {
                    vertex: v,
                    colour: j as usize,
                    result: Colouring::from_raw(c.k, colours),
                });
            }
        }
    }
    Ok(out)
}

/// Swaps colours `colours[v]` and `j` on the Kempe chain of `v`, in place.
/// `queue` and `mark` are scratch space (`mark` must be all false on entry
/// and is restored on exit).
pub(crate) fn swap_chain_in_place(
    g: &Graph,
    colours: &mut [u8],
    v: usize,
    j: u8,
    queue: &mut VecDeque<usize>,
    chain: &mut Vec<usize>,
    mark: &mut [bool],
) {
    let a = colours[v];
    if a == j {
        return;
    }
    chain.clear();
    queue.clear();
    queue.push_back(v);
    mark[v] = true;
    while let Some(x) = queue.pop_front() {
        chain.push(x);
        for &w in g.neighbours(x) {
            if !mark[w] && (colours[w] == a || colours[w] == j) {
                mark[w] = true;
                queue.push_back(w);
            }
        }
    }
    for &x in chain.iter() {
        colours[x] = if colours[x] == a { j } else { a };
        mark[x] = false;
    }
}

/// The Kempe swap of colours `c(v)` and `j` on the chain containing `v`.
pub fn kempe_swap(g: &Graph, c: &Colouring, v: usize, j: usize) -> Result<Colouring> {
    check_proper(g, c)?;
    if v >= g.n() {
        return Err(Error::ImproperInput(format!("vertex {v} out of range")));
    }
    if j == 0 || j > c.k {
        return Err(Error::ImproperInput(format!("colour {j} outside 1..={}", c.k)));
    }
    let mut colours = c.colours.clone();
    let mut mark = vec![false; g.n()];
    swap_chain_in_place(g, &mut colours, v, j as u8, &mut VecDeque::new(), &mut Vec::new(), &mut mark);
    Ok(Colouring::from_raw(c.k, colours))
}

/// The vertices of the Kempe chain through `v` for colours `c(v)` and `j`.
pub fn kempe_chain(g: &Graph, c: &Colouring, v: usize, j: usize) -> Vec<usize> {
    let a = c.colours[v];
    let j = j as u8;
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut stack = vec![v];
    let mut chain = Vec::new();
    while let Some(x) = stack.pop() {
        chain.push(x);
        for &w in g.neighbours(x) {
            if !seen[w] && (c.colours[w] == a || c.colours[w] == j) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    chain.sort_unstable();
    chain
}

/// Distinct colourings other than `c` reachable by one Kempe swap, sorted.
pub fn kempe_moves(g: &Graph, c: &Colouring) -> Result<Vec<Colouring>> {
    check_proper(g, c)?;
    Ok(kempe_neighbours_raw(g, c.k, &c.colours)
        .into_iter()
        .map(|colours| Colouring::from_raw(c.k, colours))
        .collect())
}

pub(crate) fn kempe_neighbours_raw(g: &Graph, k: usize, colours: &[u8]) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut out = Vec::with_capacity(n * k);
    let mut mark = vec![false; n];
    let mut queue = VecDeque::new();
    let mut chain = Vec::new();
    for v in 0..n {
        for j in 1..=k as u8 {
            if j == colours[v] {
                continue;
            }
            let mut next = colours.to_vec();
            swap_chain_in_place(g, &mut next, v, j, &mut queue, &mut chain, &mut mark);
            out.push(next);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Vertices whose closed neighbourhood sees all `k` colours in every proper
/// `k`-colouring.
pub fn frozen_vertices(g: &Graph, k: usize, cfg: &Config) -> Result<Vec<usize>> {
    let n = g.n();
    let mut movable = vec![false; n];
    let mut remaining = n;
    let mut seen = vec![0u64; k + 1];
    let mut stamp = 0u64;
    let count = for_each_colouring(g, k, cfg, |c| {
        for v in 0..n {
            if movable[v] {
                continue;
            }
            stamp += 1;
            seen[c[v] as usize] = stamp;
            let mut distinct = 1;
            for &w in g.neighbours(v) {
                let col = c[w] as usize;
                if seen[col] != stamp {
                    seen[col] = stamp;
                    distinct += 1;
                }
            }
            if distinct < k {
                movable[v] = true;
                remaining -= 1;
            }
        }
        if remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if count == 0 {
        return Err(Error::NoColourings { k });
    }
    Ok((0..n).filter(|&v| !movable[v]).collect())
}

/// Non-adjacent pairs `u < v` coloured differently by every proper `k`-colouring.
pub fn always_distinct_pairs(g: &Graph, k: usize, cfg: &Config) -> Result<Vec<(usize, usize)>> {
    let n = g.n();
    let mut open: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let count = for_each_colouring(g, k, cfg, |c| {
        open.retain(|&(u, v)| c[u] != c[v]);
        if open.is_empty() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if count == 0 {
        return Err(Error::NoColourings { k });
    }
    Ok(open)
}

/// Whether every vertex is the only vertex of its colour in some optimal colouring.
pub fn unique_colour_property(g: &Graph, cfg: &Config) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    let chi = chromatic_number(g, cfg)?;
    let mut witnessed = vec![false; n];
    let mut remaining = n;
    let mut class_size = vec![0usize; chi + 1];
    for_each_colouring(g, chi, cfg, |c| {
        class_size.iter_mut().for_each(|s| *s = 0);
        for &col in c {
            class_size[col as usize] += 1;
        }
        for v in 0..n {
            if !witnessed[v] && class_size[c[v] as usize] == 1 {
                witnessed[v] = true;
                remaining -= 1;
            }
        }
        if remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(remaining == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(k: usize, c: &[u8]) -> Colouring {
        Colouring::new(k, c.to_vec()).unwrap()
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_colourings(&Graph::path(3), 2, &cfg()).unwrap().len(), 2);
        assert_eq!(enumerate_colourings(&Graph::complete(3), 3, &cfg()).unwrap().len(), 6);
        assert_eq!(enumerate_colourings(&Graph::complete(3), 4, &cfg()).unwrap().len(), 24);
        assert!(enumerate_colourings(&Graph::complete(3), 2, &cfg()).unwrap().is_empty());
        let empty = enumerate_colourings(&Graph::edgeless(0), 3, &cfg()).unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_colourings(&Graph::path(3), 3, &cfg()).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].colours(), &[1, 2, 1]);
    }

    #[test]
    fn colouring_cap() {
        let small = Config {
            max_colourings: 10,
            ..cfg()
        };
        assert!(matches!(
            enumerate_colourings(&Graph::edgeless(4), 2, &small),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn single_moves_examples() {
        let p3 = Graph::path(3);
        assert!(single_vertex_moves(&p3, &col(2, &[1, 2, 1])).unwrap().is_empty());
        let moves = single_vertex_moves(&p3, &col(3, &[1, 2, 1])).unwrap();
        let got: Vec<(usize, usize)> = moves.iter().map(|m| (m.vertex, m.colour)).collect();
        assert_eq!(got, vec![(0, 3), (1, 3), (2, 3)]);
        let k3 = Graph::complete(3);
        let moves = single_vertex_moves(&k3, &col(4, &[1, 2, 3])).unwrap();
        assert_eq!(moves.len(), 3);
        assert!(moves.iter().all(|m| m.colour == 4));
        assert!(matches!(
            single_vertex_moves(&p3, &col(2, &[1, 1, 2])),
            Err(Error::ImproperInput(_))
        ));
    }

    #[test]
    fn kempe_swap_examples() {
        let p3 = Graph::path(3);
        assert_eq!(kempe_swap(&p3, &col(2, &[1, 2, 1]), 0, 2).unwrap().colours(), &[2, 1, 2]);
        assert_eq!(kempe_swap(&p3, &col(3, &[1, 2, 1]), 0, 3).unwrap().colours(), &[3, 2, 1]);
        assert_eq!(kempe_swap(&p3, &col(3, &[1, 2, 1]), 0, 1).unwrap().colours(), &[1, 2, 1]);
        let k3 = Graph::complete(3);
        assert_eq!(kempe_swap(&k3, &col(3, &[1, 2, 3]), 0, 2).unwrap().colours(), &[2, 1, 3]);
        assert_eq!(kempe_chain(&k3, &col(3, &[1, 2, 3]), 0, 2), vec![0, 1]);
    }

    #[test]
    fn kempe_moves_examples() {
        let k3 = Graph::complete(3);
        let moves = kempe_moves(&k3, &col(3, &[1, 2, 3])).unwrap();
        let got: Vec<&[u8]> = moves.iter().map(Colouring::colours).collect();
        assert_eq!(got, vec![&[1, 3, 2][..], &[2, 1, 3], &[3, 2, 1]]);
        let p3 = Graph::path(3);
        let moves = kempe_moves(&p3, &col(2, &[1, 2, 1])).unwrap();
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].colours(), &[2, 1, 2]);
        let k1 = Graph::edgeless(1);
        assert_eq!(kempe_moves(&k1, &col(2, &[1])).unwrap()[0].colours(), &[2]);
    }

    #[test]
    fn frozen_examples() {
        assert_eq!(frozen_vertices(&Graph::complete(3), 3, &cfg()).unwrap(), vec![0, 1, 2]);
        assert!(frozen_vertices(&Graph::cycle(5), 3, &cfg()).unwrap().is_empty());
        assert!(frozen_vertices(&Graph::complete(3), 4, &cfg()).unwrap().is_empty());
        assert_eq!(
            frozen_vertices(&Graph::complete(3), 2, &cfg()),
            Err(Error::NoColourings { k: 2 })
        );
    }

    #[test]
    fn always_distinct_examples() {
        assert!(always_distinct_pairs(&Graph::cycle(4), 2, &cfg()).unwrap().is_empty());
        assert!(always_distinct_pairs(&Graph::path(3), 2, &cfg()).unwrap().is_empty());
        // P3 plus an isolated vertex at k = 2: the isolated vertex can match anything
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert!(always_distinct_pairs(&g, 2, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn unique_colour_examples() {
        assert!(unique_colour_property(&Graph::cycle(5), &cfg()).unwrap());
        assert!(unique_colour_property(&Graph::complete(3), &cfg()).unwrap());
        assert!(!unique_colour_property(&Graph::edgeless(2), &cfg()).unwrap());
        assert!(unique_colour_property(&Graph::edgeless(1), &cfg()).unwrap());
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(col(3, &[1, 2, 1]).to_string(), "1,2,1");
        assert_eq!(serde_json::to_string(&col(3, &[1, 3])).unwrap(), "\"1,3\"");
        assert!(Colouring::new(2, vec![3]).is_err());
    }
}
