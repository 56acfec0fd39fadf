//! Recovering a graph from its line graph.
//!
//! A connected graph is a line graph exactly when its edges can be split into
//! cliques with every vertex lying in at most two of them (Krausz). Each such
//! partition yields a root: one root vertex per clique, one extra pendant
//! vertex for every line-graph vertex lying in a single clique, and one root
//! edge per line-graph vertex. All partitions are enumerated so that an
//! unexpected second root is reported instead of silently picked.

use crate::{is_isomorphic, Config, Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineRoot {
    Unique(Graph),
    /// The triangle, whose roots are `K_3` and the claw `K_{1,3}`.
    Ambiguous { triangle: Graph, claw: Graph },
}

struct Partitioner<'a> {
    l: &'a Graph,
    covered: Vec<bool>,
    membership: Vec<u8>,
    cliques: Vec<Vec<usize>>,
    found: Vec<Vec<Vec<usize>>>,
    nodes: u64,
    limit: u64,
}

impl Partitioner<'_> {
    fn idx(&self, u: usize, v: usize) -> usize {
        u * self.l.n() + v
    }

    fn is_covered(&self, u: usize, v: usize) -> bool {
        self.covered[self.idx(u, v)]
    }

    fn set_covered(&mut self, clique: &[usize], value: bool) {
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                let (x, y) = (self.idx(a, b), self.idx(b, a));
                self.covered[x] = value;
                self.covered[y] = value;
            }
        }
    }

    fn first_uncovered(&self) -> Option<(usize, usize)> {
        self.l.edges().find(|&(u, v)| !self.is_covered(u, v))
    }

    fn search(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceCap {
                what: "line-graph root search nodes",
                limit: self.limit,
            });
        }
        let Some((u, v)) = self.first_uncovered() else {
            self.found.push(self.cliques.clone());
            return Ok(());
        };
        if self.membership[u] >= 2 || self.membership[v] >= 2 {
            return Ok(());
        }
        let pool: Vec<usize> = self
            .l
            .neighbours(u)
            .iter()
            .copied()
            .filter(|&w| {
                w != v
                    && self.l.has_edge(v, w)
                    && self.membership[w] < 2
                    && !self.is_covered(u, w)
                    && !self.is_covered(v, w)
            })
            .collect();
        let mut extensions = Vec::new();
        self.extensions(&pool, 0, &mut vec![u, v], &mut extensions);
        for clique in extensions {
            self.set_covered(&clique, true);
            for &x in &clique {
                self.membership[x] += 1;
            }
            self.cliques.push(clique);
            self.search()?;
            let clique = self.cliques.pop().expect("pushed above");
            for &x in &clique {
                self.membership[x] -= 1;
            }
            self.set_covered(&clique, false);
        }
        Ok(())
    }

    /// Every clique of uncovered edges containing `base`, drawn from `pool[from..]`.
    fn extensions(&self, pool: &[usize], from: usize, base: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(base.clone());
        for i in from..pool.len() {
            let w = pool[i];
            if base[2..]
                .iter()
                .all(|&x| self.l.has_edge(x, w) && !self.is_covered(x, w))
            {
                base.push(w);
                self.extensions(pool, i + 1, base, out);
                base.pop();
            }
        }
    }
}

fn root_from_partition(l: &Graph, cliques: &[Vec<usize>]) -> Graph {
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); l.n()];
    for (c, clique) in cliques.iter().enumerate() {
        for &x in clique {
            member[x].push(c);
        }
    }
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(l.n());
    for m in &member {
        let (a, b) = match m.as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                next += 1;
                (*a, next - 1)
            }
            [] => {
                next += 2;
                (next - 2, next - 1)
            }
            _ => unreachable!("membership is capped at two"),
        };
        edges.push((a, b));
    }
    Graph::from_valid_edges(next, edges)
}

/// All pairwise non-isomorphic roots of a connected graph.
pub fn all_roots(l: &Graph, cfg: &Config) -> Result<Vec<Graph>> {
    if !l.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = l.n();
    let mut p = Partitioner {
        l,
        covered: vec![false; n * n],
        membership: vec![0; n],
        cliques: Vec::new(),
        found: Vec::new(),
        nodes: 0,
        limit: cfg.max_search_nodes,
    };
    p.search()?;
    let mut roots: Vec<Graph> = Vec::new();
    for partition in &p.found {
        let root = root_from_partition(l, partition);
        debug_assert!(is_isomorphic(&root.line_graph().0, l).is_some());
        if roots.iter().all(|r| is_isomorphic(r, &root).is_none()) {
            roots.push(root);
        }
    }
    Ok(roots)
}

/// The root `H` with `L(H) ≅ l`, for connected `l`.
pub fn line_graph_root(l: &Graph, cfg: &Config) -> Result<LineRoot> {
    let mut roots = all_roots(l, cfg)?;
    match roots.len() {
        0 => Err(Error::NotLineGraph),
        1 => Ok(LineRoot::Unique(roots.pop().expect("one root"))),
        2 if is_isomorphic(l, &Graph::complete(3)).is_some() => Ok(LineRoot::Ambiguous {
            triangle: Graph::complete(3),
            claw: Graph::star(3),
        }),
        _ => Err(Error::AmbiguousRoot),
    }
}
