//! Graph families whose recolouring graphs coincide, and the operations they
//! are built from.

use serde::Serialize;

use crate::colouring::frozen_vertices;
use crate::indep::independence_number;
use crate::par::try_map_range;
use crate::reconfig::{build, Labels, ReconfigGraph, ReconfigKind};
use crate::{chromatic_number, is_isomorphic, Config, Error, Graph, IsoWitness, Result};

/// `M(g)`: vertices `v_0..v_{n-1}`, then `u_0..u_{n-1}`, then `w`.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * g.m() + n);
    for (i, j) in g.edges() {
        edges.push((i, j));
        edges.push((n + i, j));
        edges.push((i, n + j));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_valid_edges(2 * n + 1, edges)
}

/// `M^times(g)`.
pub fn mycielskian_power(g: &Graph, times: usize) -> Graph {
    (0..times).fold(g.clone(), |h, _| mycielskian(&h))
}

/// A `(chi-1)`-tree on `n ≥ chi` vertices: `K_chi` followed by vertices
/// adjacent to the `chi - 1` vertices before them.
pub fn clique_tree(chi: usize, n: usize) -> Graph {
    assert!(chi >= 1 && n >= chi);
    let mut edges = Vec::new();
    for v in 1..n {
        let from = if v < chi { 0 } else { v + 1 - chi };
        edges.extend((from..v).map(|u| (u, v)));
    }
    Graph::from_valid_edges(n, edges)
}

/// `g` plus a non-adjacent twin (appended as vertex `n`) of its first frozen vertex.
pub fn frozen_twin(g: &Graph, k: usize, cfg: &Config) -> Result<Graph> {
    let frozen = frozen_vertices(g, k, cfg)?;
    let Some(&v) = frozen.first() else {
        return Err(Error::NoFrozenVertex { k });
    };
    let n = g.n();
    let mut out = Graph::disjoint_union(g, &Graph::edgeless(1));
    out = out.with_edges(g.neighbours(v).iter().map(|&w| (w, n)))?;
    Ok(out)
}

/// Parameters of one member of the first counterexample family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub chi: usize,
    pub p: usize,
    pub h0: Graph,
    pub h3: Graph,
    /// Extra edges `(a, b)` between vertex `a` of `h0` and vertex `b` of `h3`
    /// (indices local to each block).
    pub extra_edges: Vec<(usize, usize)>,
}

impl FamilySpec {
    /// The smallest instance: `chi = 6`, `p = 3`, `h0 = K_2`, `h3 = K_1`.
    pub fn smallest(extra_edges: Vec<(usize, usize)>) -> Self {
        FamilySpec {
            chi: 6,
            p: 3,
            h0: Graph::complete(2),
            h3: Graph::complete(1),
            extra_edges,
        }
    }
}

/// Index ranges of the four blocks `H_0..H_3` of a family member.
pub fn construction_one_blocks(spec: &FamilySpec) -> [std::ops::Range<usize>; 4] {
    let h1 = 5 * (1usize << (spec.p.saturating_sub(3))) + (1 << spec.p.saturating_sub(3)) - 1;
    let h2 = {
        let t = spec.chi.saturating_sub(spec.p + 3);
        5 * (1usize << t) + (1 << t) - 1
    };
    let sizes = [spec.h0.n(), h1, h2, spec.h3.n()];
    let mut start = 0;
    sizes.map(|s| {
        let r = start..start + s;
        start += s;
        r
    })
}

/// The member of the family selected by `spec.extra_edges`: blocks `H_0`,
/// `H_1 = M^{p-3}(C_5)`, `H_2 = M^{chi-p-3}(C_5)`, `H_3` in that order, with
/// consecutive blocks completely joined.
pub fn construction_one(spec: &FamilySpec, cfg: &Config) -> Result<Graph> {
    let FamilySpec { chi, p, h0, h3, extra_edges } = spec;
    let (chi, p) = (*chi, *p);
    if chi < 6 {
        return Err(Error::PreconditionViolated(format!("chi = {chi} must be at least 6")));
    }
    if p < 3 || p > chi - 3 {
        return Err(Error::PreconditionViolated(format!("p = {p} must lie in [3, {}]", chi - 3)));
    }
    let chi0 = chromatic_number(h0, cfg)?;
    if chi0 >= chi - p {
        return Err(Error::PreconditionViolated(format!(
            "chi(h0) = {chi0} must be below chi - p = {}",
            chi - p
        )));
    }
    let chi3 = chromatic_number(h3, cfg)?;
    if chi3 >= p {
        return Err(Error::PreconditionViolated(format!("chi(h3) = {chi3} must be below p = {p}")));
    }
    if let Some(&(a, b)) = extra_edges.iter().find(|&&(a, b)| a >= h0.n() || b >= h3.n()) {
        return Err(Error::PreconditionViolated(format!("extra edge ({a}, {b}) is not in h0 x h3")));
    }
    let c5 = Graph::cycle(5);
    let blocks = [
        h0.clone(),
        mycielskian_power(&c5, p - 3),
        mycielskian_power(&c5, chi - p - 3),
        h3.clone(),
    ];
    let mut g = Graph::edgeless(0);
    for b in &blocks {
        g = Graph::disjoint_union(&g, b);
    }
    let ranges = construction_one_blocks(spec);
    debug_assert_eq!(ranges[3].end, g.n());
    let mut edges = Vec::new();
    for i in 0..3 {
        for a in ranges[i].clone() {
            edges.extend(ranges[i + 1].clone().map(|b| (a, b)));
        }
    }
    edges.extend(extra_edges.iter().map(|&(a, b)| (ranges[0].start + a, ranges[3].start + b)));
    g.with_edges(edges)
}

/// `G_i` of the second family: `H = M^{chi-4}(C_5)` on `0..n`, then `u_0..u_{n-1}`
/// with `u_j` adjacent to every `v_l`, `l ≠ j`, then `i` vertices adjacent to all of `H`.
pub fn construction_two(chi: usize, i: usize) -> Result<Graph> {
    if chi < 4 {
        return Err(Error::PreconditionViolated(format!("chi = {chi} must be at least 4")));
    }
    let h = mycielskian_power(&Graph::cycle(5), chi - 4);
    let n = h.n();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for j in 0..n {
        edges.extend((0..n).filter(|&l| l != j).map(|l| (l, n + j)));
    }
    for extra in 0..i {
        edges.extend((0..n).map(|l| (l, 2 * n + extra)));
    }
    Ok(Graph::from_valid_edges(2 * n + i, edges))
}

/// `g ⋈ h` with `g`'s vertices first; requires `α(h) ≤ k - 1`, so no
/// independent set with `k` or more tokens can use a vertex of `h`.
pub fn join_padding(g: &Graph, k: usize, h: &Graph) -> Result<Graph> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("k = {k} must be at least 2")));
    }
    let alpha = independence_number(h);
    if alpha >= k {
        return Err(Error::PreconditionViolated(format!(
            "alpha(h) = {alpha} must be at most k - 1 = {}",
            k - 1
        )));
    }
    Ok(Graph::complete_join(g, h))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// Same labels in the same order and the same edges.
    LabelledEqual,
    /// One graph is the other plus extra vertices; dropping those vertices
    /// from each colouring is a bijection that preserves edges.
    Restriction { prefix: usize },
    Isomorphic { witness: IsoWitness },
    NotIsomorphic,
}

impl Verdict {
    pub fn same(&self) -> bool {
        !matches!(self, Verdict::NotIsomorphic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SameReconfigReport {
    pub kind: ReconfigKind,
    pub k: usize,
    /// `[|V|, |E|]` of the two reconfiguration graphs.
    pub sizes: [(usize, usize); 2],
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Builds the reconfiguration graphs of `g` and `h` and decides whether they
/// coincide, preferring the cheapest certificate that applies.
pub fn verify_same_reconfig(g: &Graph, h: &Graph, kind: ReconfigKind, k: usize, cfg: &Config) -> Result<SameReconfigReport> {
    let inputs = [g, h];
    let mut built = try_map_range(2, cfg.parallel, |i| build(inputs[i], kind, k, cfg))?;
    let b = built.pop().expect("two sides");
    let a = built.pop().expect("two sides");
    let sizes = [(a.n(), a.graph.m()), (b.n(), b.graph.m())];
    let verdict = if a.labels == b.labels && a.graph == b.graph {
        Verdict::LabelledEqual
    } else if let Some(prefix) = restriction(g, &a, h, &b) {
        Verdict::Restriction { prefix }
    } else {
        match is_isomorphic(&a.graph, &b.graph) {
            Some(witness) => Verdict::Isomorphic { witness },
            None => Verdict::NotIsomorphic,
        }
    };
    Ok(SameReconfigReport { kind, k, sizes, verdict })
}

/// Checks the restriction certificate in either direction.
fn restriction(g: &Graph, a: &ReconfigGraph, h: &Graph, b: &ReconfigGraph) -> Option<usize> {
    let (small_g, small, big_g, big) = if g.n() <= h.n() { (g, a, h, b) } else { (h, b, g, a) };
    let p = small_g.n();
    let prefix: Vec<usize> = (0..p).collect();
    if big_g.induced(&prefix) != *small_g || small.n() != big.n() {
        return None;
    }
    let (Some(Labels::Colourings(sc)), Some(Labels::Colourings(bc))) = (&small.labels, &big.labels) else {
        return None;
    };
    // Big colourings are sorted, so their prefixes are sorted too; a bijection
    // onto the (sorted, distinct) small colourings must then be the identity order.
    let matches = bc.iter().zip(sc).all(|(x, y)| &x.colours()[..p] == y.colours());
    (matches && small.graph == big.graph).then_some(p)
}
