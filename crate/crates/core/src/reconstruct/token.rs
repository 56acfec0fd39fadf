//! Reconstruction from token (independent set) reconfiguration graphs.

use crate::line_root::{line_graph_root, LineRoot};
use crate::reconfig::{build_token, TokenRule};
use crate::{is_isomorphic, Config, Error, Graph, Result};

/// Addition/removal with no minimum size. The empty set is the unique vertex
/// of maximum degree `n`; two singletons come from non-adjacent vertices
/// exactly when they share a neighbour besides the empty set (their union).
pub fn reconstruct_tar0(r: &Graph) -> Result<Graph> {
    if r.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !r.is_connected() {
        return Err(Error::NotConnected);
    }
    let top = (0..r.n())
        .max_by_key(|&v| (r.degree(v), std::cmp::Reverse(v)))
        .expect("non-empty");
    let singles = r.neighbours(top);
    let mut edges = Vec::new();
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            if !r.has_common_neighbour_except(singles[i], singles[j], top) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_valid_edges(singles.len(), edges))
}

/// An ordered partition `V_1, …, V_p` of a component's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<usize>>,
}

impl Layering {
    fn from_assignment(layer: &[usize]) -> Self {
        let p = layer.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); p];
        for (v, &l) in layer.iter().enumerate() {
            layers[l - 1].push(v);
        }
        Layering { layers }
    }

    /// `layer_of()[v]` is the 1-based layer containing `v`.
    pub fn layer_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                out[v] = i + 1;
            }
        }
        out
    }

    /// Checks that this is a partition of `g`'s vertices satisfying the four
    /// layering conditions.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut count = vec![0usize; n];
        for layer in &self.layers {
            if layer.is_empty() {
                return false;
            }
            for &v in layer {
                if v >= n {
                    return false;
                }
                count[v] += 1;
            }
        }
        count.iter().all(|&c| c == 1) && satisfies_conditions(g, &self.layer_of(n))
    }
}

fn satisfies_conditions(g: &Graph, layer: &[usize]) -> bool {
    let n = g.n();
    for v in 0..n {
        let mut down = 0;
        for &w in g.neighbours(v) {
            // independent layers, edges only between consecutive layers
            if layer[w].abs_diff(layer[v]) != 1 {
                return false;
            }
            if layer[w] + 1 == layer[v] {
                down += 1;
            }
        }
        if layer[v] >= 2 && down != layer[v] {
            return false;
        }
    }
    // two vertices of one layer share at most one neighbour in each adjacent layer
    let mut shared = vec![0u32; n * n];
    for x in 0..n {
        let nb = g.neighbours(x);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if layer[a] == layer[b] {
                    let slot = if layer[x] < layer[a] { a * n + b } else { b * n + a };
                    shared[slot] += 1;
                    if shared[slot] > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct LayerSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    layer: Vec<usize>,
    found: Vec<Vec<usize>>,
    nodes: u64,
    limit: u64,
}

impl LayerSearch<'_> {
    fn cap(&self, v: usize) -> usize {
        self.g.degree(v).max(1)
    }

    /// Partial form of the down-degree condition for `v` and its assigned neighbours.
    fn locally_feasible(&self, v: usize) -> bool {
        let ok = |u: usize| {
            let l = self.layer[u];
            if l < 2 {
                return true;
            }
            let (mut down, mut open) = (0, 0);
            for &w in self.g.neighbours(u) {
                match self.layer[w] {
                    0 => open += 1,
                    x if x + 1 == l => down += 1,
                    _ => {}
                }
            }
            down <= l && down + open >= l
        };
        ok(v) && self.g.neighbours(v).iter().all(|&w| ok(w))
    }

    fn search(&mut self, pos: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceCap {
                what: "layering search nodes",
                limit: self.limit,
            });
        }
        if pos == self.order.len() {
            if satisfies_conditions(self.g, &self.layer) {
                self.found.push(self.layer.clone());
            }
            return Ok(());
        }
        let v = self.order[pos];
        let choices: Vec<usize> = if pos == 0 {
            (1..=self.cap(v)).collect()
        } else {
            let p = self.layer[self.parent[v]];
            [p.wrapping_sub(1), p + 1].into_iter().filter(|&l| l >= 1).collect()
        };
        for l in choices {
            if l > self.cap(v) {
                continue;
            }
            let consistent = self
                .g
                .neighbours(v)
                .iter()
                .all(|&w| self.layer[w] == 0 || self.layer[w].abs_diff(l) == 1);
            if !consistent {
                continue;
            }
            self.layer[v] = l;
            if self.locally_feasible(v) {
                self.search(pos + 1)?;
                if self.found.len() > 1 {
                    return Ok(());
                }
            }
            self.layer[v] = 0;
        }
        Ok(())
    }
}

/// The unique layering of a connected component, found by propagating layer
/// values along a BFS tree from a minimum-degree root.
pub fn find_layering(component: &Graph, cfg: &Config) -> Result<Layering> {
    if !component.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = component.n();
    let root = (0..n)
        .min_by_key(|&v| (component.degree(v), v))
        .expect("connected graphs are non-empty");
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in component.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut search = LayerSearch {
        g: component,
        order,
        parent,
        layer: vec![0; n],
        found: Vec::new(),
        nodes: 0,
        limit: cfg.max_search_nodes,
    };
    search.search(0)?;
    match search.found.len() {
        0 => Err(Error::NoLayering),
        1 => Ok(Layering::from_assignment(&search.found[0])),
        _ => Err(Error::AmbiguousLayering),
    }
}

/// The join factor behind one component of the addition/removal graph with
/// at least one token.
fn tar1_factor(component: &Graph, cfg: &Config) -> Result<Graph> {
    let n = component.n();
    if n == 1 {
        return Ok(Graph::edgeless(1));
    }
    if (0..n).all(|v| component.degree(v) == 2) {
        return match n {
            m if m % 2 == 1 => Err(Error::NoLayering),
            4 | 6 => Err(Error::InvalidComponent { len: n }),
            m => Ok(Graph::cycle(m / 2).complement()),
        };
    }
    let layering = find_layering(component, cfg)?;
    let singles = &layering.layers[0];
    let layer_of = layering.layer_of(n);
    let mut edges = Vec::new();
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            let (a, b) = (singles[i], singles[j]);
            let shares_pair = component
                .neighbours(a)
                .iter()
                .any(|&x| layer_of[x] == 2 && component.has_edge(x, b));
            if !shares_pair {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_valid_edges(singles.len(), edges))
}

/// Addition/removal with at least one token: each component yields one
/// factor and the graph is the complete join of the factors.
pub fn reconstruct_tar1(r: &Graph, cfg: &Config) -> Result<Graph> {
    tar1_factors(r, cfg, false)
}

/// [`reconstruct_tar1`], additionally rebuilding each factor's token graph
/// and comparing it with the component it came from.
pub fn reconstruct_tar1_checked(r: &Graph, cfg: &Config) -> Result<Graph> {
    tar1_factors(r, cfg, true)
}

fn tar1_factors(r: &Graph, cfg: &Config, check: bool) -> Result<Graph> {
    if r.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut out = Graph::edgeless(0);
    for comp in r.connected_components() {
        let factor = tar1_factor(&comp.graph, cfg)?;
        if check {
            let rebuilt = build_token(&factor, 1, TokenRule::AdditionRemoval, cfg)?;
            if is_isomorphic(&rebuilt.graph, &comp.graph).is_none() {
                return Err(Error::SelfCheckFailed);
            }
        }
        out = Graph::complete_join(&out, &factor);
    }
    Ok(out)
}

/// The cases where a token graph determines the graph outright.
pub fn reconstruct_token_trivial(r: &Graph, rule: TokenRule, k: usize, cfg: &Config) -> Result<Graph> {
    match (rule, k) {
        (TokenRule::Sliding, 1) => Ok(r.clone()),
        (TokenRule::AdditionRemoval, 0) => reconstruct_tar0(r),
        (TokenRule::AdditionRemoval, 1) => reconstruct_tar1(r, cfg),
        _ => Err(Error::UnsupportedCase {
            rule: rule.to_string(),
            k,
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tj2Outcome {
    UniqueGraph(Graph),
    /// The triangle input, produced by both `3K_1` and the complement of the claw.
    AmbiguousK3 { from_triangle: Graph, from_claw: Graph },
}

/// Jumping with two tokens: the token graph is the line graph of the
/// complement, so root it and complement the root.
pub fn reconstruct_tj2(r: &Graph, cfg: &Config) -> Result<Tj2Outcome> {
    match line_graph_root(r, cfg)? {
        LineRoot::Unique(root) => Ok(Tj2Outcome::UniqueGraph(root.complement())),
        LineRoot::Ambiguous { triangle, claw } => Ok(Tj2Outcome::AmbiguousK3 {
            from_triangle: triangle.complement(),
            from_claw: claw.complement(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::strip;

    fn cfg() -> Config {
        Config::default()
    }

    fn token(g: &Graph, k: usize, rule: TokenRule) -> Graph {
        strip(&build_token(g, k, rule, &cfg()).unwrap(), 3)
    }

    fn iso(a: &Graph, b: &Graph) -> bool {
        is_isomorphic(a, b).is_some()
    }

    #[test]
    fn tar0_examples() {
        let r = token(&Graph::edgeless(2), 0, TokenRule::AdditionRemoval);
        assert!(iso(&reconstruct_tar0(&r).unwrap(), &Graph::edgeless(2)));
        let r = token(&Graph::complete(2), 0, TokenRule::AdditionRemoval);
        assert!(iso(&reconstruct_tar0(&r).unwrap(), &Graph::complete(2)));
        let r = token(&Graph::edgeless(0), 0, TokenRule::AdditionRemoval);
        assert_eq!(reconstruct_tar0(&r).unwrap(), Graph::edgeless(0));
    }

    #[test]
    fn layering_examples() {
        let l = find_layering(&Graph::path(3), &cfg()).unwrap();
        assert_eq!(l.layers, vec![vec![0, 2], vec![1]]);
        assert!(l.is_valid_for(&Graph::path(3)));
        assert_eq!(find_layering(&Graph::cycle(8), &cfg()), Err(Error::AmbiguousLayering));
        assert_eq!(find_layering(&Graph::cycle(4), &cfg()), Err(Error::NoLayering));
        assert_eq!(find_layering(&Graph::complete(3), &cfg()), Err(Error::NoLayering));
    }

    #[test]
    fn tar1_examples() {
        assert!(iso(&reconstruct_tar1(&Graph::cycle(10), &cfg()).unwrap(), &Graph::cycle(5)));
        let r = token(&Graph::path(3), 1, TokenRule::AdditionRemoval);
        assert!(iso(&reconstruct_tar1(&r, &cfg()).unwrap(), &Graph::path(3)));
        assert!(iso(&reconstruct_tar1(&Graph::path(3), &cfg()).unwrap(), &Graph::edgeless(2)));
        assert_eq!(reconstruct_tar1(&Graph::cycle(6), &cfg()), Err(Error::InvalidComponent { len: 6 }));
        assert_eq!(reconstruct_tar1(&Graph::cycle(4), &cfg()), Err(Error::InvalidComponent { len: 4 }));
        assert_eq!(reconstruct_tar1(&Graph::cycle(7), &cfg()), Err(Error::NoLayering));
        let r = token(&Graph::cycle(5), 1, TokenRule::AdditionRemoval);
        assert!(iso(&reconstruct_tar1_checked(&r, &cfg()).unwrap(), &Graph::cycle(5)));
    }

    #[test]
    fn trivial_cases() {
        let c5 = Graph::cycle(5);
        assert_eq!(reconstruct_token_trivial(&c5, TokenRule::Sliding, 1, &cfg()).unwrap(), c5);
        assert!(matches!(
            reconstruct_token_trivial(&Graph::complete(4), TokenRule::Jumping, 1, &cfg()),
            Err(Error::UnsupportedCase { .. })
        ));
        assert!(matches!(
            reconstruct_token_trivial(&c5, TokenRule::Sliding, 2, &cfg()),
            Err(Error::UnsupportedCase { .. })
        ));
    }

    #[test]
    fn tj2_examples() {
        let r = token(&Graph::path(4), 2, TokenRule::Jumping);
        match reconstruct_tj2(&r, &cfg()).unwrap() {
            Tj2Outcome::UniqueGraph(g) => assert!(iso(&g, &Graph::path(4))),
            other => panic!("unexpected {other:?}"),
        }
        match reconstruct_tj2(&Graph::complete(3), &cfg()).unwrap() {
            Tj2Outcome::AmbiguousK3 { from_triangle, from_claw } => {
                assert!(iso(&from_triangle, &Graph::edgeless(3)));
                assert_eq!(from_claw.m(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(reconstruct_tj2(&Graph::edgeless(2), &cfg()), Err(Error::NotConnected));
    }
}
