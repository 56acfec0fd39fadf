//! Brute-force reference implementations used to check the library.
//!
//! Everything here works from adjacency matrices and literal definitions and
//! deliberately shares no code with the crate beyond reading a graph's edges.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use reconf::Graph;

/// Dense adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Mat {
    pub fn of(g: &Graph) -> Mat {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Mat { n, adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Mat {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Mat { n, adj }
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edge_list()).unwrap()
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }
}

/// Calls `f` on every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn rec(p: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if p.len() == n {
            return f(p);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                p.push(v);
                if !rec(p, used, n, f) {
                    return false;
                }
                p.pop();
                used[v] = false;
            }
        }
        true
    }
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut f);
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let (a, b) = (Mat::of(g), Mat::of(h));
    if a.n != b.n || g.m() != h.m() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n, |p| {
        let ok = (0..a.n).all(|u| (0..a.n).all(|v| a.adj[u][v] == b.adj[p[u]][p[v]]));
        found |= ok;
        !ok
    });
    found
}

/// All proper colourings with colours `1..=k`, by counting through `k^n`.
pub fn brute_colourings(g: &Graph, k: usize) -> Vec<Vec<u8>> {
    let m = Mat::of(g);
    let mut out = Vec::new();
    let total = (k as u64).pow(m.n as u32);
    for mut code in 0..total {
        let mut c = vec![0u8; m.n];
        for v in (0..m.n).rev() {
            c[v] = (code % k as u64) as u8 + 1;
            code /= k as u64;
        }
        if m.edge_list().iter().all(|&(u, v)| c[u] != c[v]) {
            out.push(c);
        }
    }
    out
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| !brute_colourings(g, k).is_empty()).unwrap()
}

/// Chromatic polynomial at `k` by deletion and contraction.
pub fn chromatic_polynomial(n: usize, edges: &BTreeSet<(usize, usize)>, k: i128) -> i128 {
    let Some(&(u, v)) = edges.iter().next() else {
        return k.pow(n as u32);
    };
    let mut deleted = edges.clone();
    deleted.remove(&(u, v));
    // contract v into u, then shift vertices above v down by one
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let contracted: BTreeSet<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .filter(|&(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    chromatic_polynomial(n, &deleted, k) - chromatic_polynomial(n - 1, &contracted, k)
}

/// Independent sets as sorted vertex lists, all subsets checked.
pub fn brute_independent_sets(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    let m = Mat::of(g);
    let mut out = Vec::new();
    for mask in 0u32..1 << m.n {
        let set: Vec<usize> = (0..m.n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = set.iter().all(|&a| set.iter().all(|&b| !m.adj[a][b]));
        if independent && set.len() >= min_size {
            out.push(set);
        }
    }
    out
}

pub fn brute_line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = Mat::of(g).edge_list();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (edges[i], edges[j]);
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edges(edges.len(), pairs).unwrap()
}

/// Every labelled graph on exactly `n` vertices.
pub fn all_labelled(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << slots.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Roots of `l` among all graphs on at most `max_n` vertices without isolated
/// vertices, up to isomorphism.
pub fn brute_line_roots(l: &Graph, max_n: usize) -> Vec<Graph> {
    let mut roots: Vec<Graph> = Vec::new();
    for n in 0..=max_n {
        for h in all_labelled(n) {
            if (0..n).any(|v| h.degree(v) == 0) || h.m() != l.n() {
                continue;
            }
            if brute_isomorphic(&brute_line_graph(&h), l) && !roots.iter().any(|r| brute_isomorphic(r, &h)) {
                roots.push(h);
            }
        }
    }
    roots
}

/// The vertex set of the Kempe chain through `v` for colours `c[v]` and `j`,
/// grown to a fixpoint.
pub fn brute_kempe_swap(g: &Graph, c: &[u8], v: usize, j: u8) -> Vec<u8> {
    let m = Mat::of(g);
    let a = c[v];
    let mut chain = vec![false; m.n];
    chain[v] = true;
    loop {
        let mut grew = false;
        for w in 0..m.n {
            if !chain[w] && (c[w] == a || c[w] == j) && (0..m.n).any(|x| chain[x] && m.adj[x][w]) {
                chain[w] = true;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    (0..m.n)
        .map(|w| {
            if !chain[w] {
                c[w]
            } else if c[w] == a {
                j
            } else {
                a
            }
        })
        .collect()
}

pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Labelled recolouring graph as (labels, edge set) from all pairs.
pub fn brute_single_graph(g: &Graph, k: usize) -> (Vec<Vec<u8>>, BTreeSet<(usize, usize)>) {
    let cs = brute_colourings(g, k);
    let mut edges = BTreeSet::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if hamming(&cs[i], &cs[j]) == 1 {
                edges.insert((i, j));
            }
        }
    }
    (cs, edges)
}

/// Labelled Kempe graph as (labels, edge set): `a ~ b` when some `(v, j)` swap maps `a` to `b`.
pub fn brute_kempe_graph(g: &Graph, k: usize) -> (Vec<Vec<u8>>, BTreeSet<(usize, usize)>) {
    let cs = brute_colourings(g, k);
    let index: HashMap<&Vec<u8>, usize> = cs.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = BTreeSet::new();
    for (i, c) in cs.iter().enumerate() {
        for v in 0..g.n() {
            for j in 1..=k as u8 {
                let d = brute_kempe_swap(g, c, v, j);
                let t = index[&d];
                if t != i {
                    edges.insert((i.min(t), i.max(t)));
                }
            }
        }
    }
    (cs, edges)
}

/// Token graph from the literal move definitions over all vertex subsets.
pub fn brute_token_graph(g: &Graph, k: usize, rule: &str) -> (Vec<Vec<usize>>, BTreeSet<(usize, usize)>) {
    let m = Mat::of(g);
    let sets: Vec<Vec<usize>> = brute_independent_sets(g, k)
        .into_iter()
        .filter(|s| rule == "tar" || s.len() == k)
        .collect();
    let mut edges = BTreeSet::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (a, b) = (&sets[i], &sets[j]);
            let only_a: Vec<usize> = a.iter().copied().filter(|x| !b.contains(x)).collect();
            let only_b: Vec<usize> = b.iter().copied().filter(|x| !a.contains(x)).collect();
            let legal = match rule {
                "tar" => only_a.len() + only_b.len() == 1,
                "tj" => only_a.len() == 1 && only_b.len() == 1,
                "ts" => only_a.len() == 1 && only_b.len() == 1 && m.adj[only_a[0]][only_b[0]],
                _ => unreachable!(),
            };
            if legal {
                edges.insert((i, j));
            }
        }
    }
    (sets, edges)
}

/// Vertices seeing all `k` colours in their closed neighbourhood under every colouring.
pub fn brute_frozen(g: &Graph, k: usize) -> Vec<usize> {
    let m = Mat::of(g);
    let cs = brute_colourings(g, k);
    (0..m.n)
        .filter(|&v| {
            cs.iter().all(|c| {
                let seen: BTreeSet<u8> = (0..m.n).filter(|&w| w == v || m.adj[v][w]).map(|w| c[w]).collect();
                seen.len() == k
            })
        })
        .collect()
}

pub fn brute_always_distinct(g: &Graph, k: usize) -> Vec<(usize, usize)> {
    let m = Mat::of(g);
    let cs = brute_colourings(g, k);
    let mut out = Vec::new();
    for u in 0..m.n {
        for v in u + 1..m.n {
            if !m.adj[u][v] && cs.iter().all(|c| c[u] != c[v]) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn brute_unique_colour(g: &Graph) -> bool {
    let chi = brute_chromatic(g);
    let cs = brute_colourings(g, chi);
    (0..g.n()).all(|v| cs.iter().any(|c| (0..g.n()).all(|w| w == v || c[w] != c[v])))
}

/// Candidate graph at colouring `c`, read from the labels: vertices are the
/// recolourable vertices of `g`, and `u ~ v` when some recolourings of `u` and
/// of `v` have no common neighbouring colouring other than `c`.
/// Returned as (recolourable vertices, edges between them).
pub fn labelled_candidate_single(cs: &[Vec<u8>], c: usize) -> (Vec<usize>, BTreeSet<(usize, usize)>) {
    let n = cs[c].len();
    let class = |u: usize| -> Vec<usize> {
        (0..cs.len())
            .filter(|&i| hamming(&cs[i], &cs[c]) == 1 && cs[i][u] != cs[c][u])
            .collect()
    };
    let classes: BTreeMap<usize, Vec<usize>> = (0..n).map(|u| (u, class(u))).filter(|(_, v)| !v.is_empty()).collect();
    let mut edges = BTreeSet::new();
    for (&u, cu) in &classes {
        for (&v, cv) in classes.range(u + 1..) {
            let fails = cu.iter().any(|&a| {
                cv.iter().any(|&b| {
                    !(0..cs.len()).any(|x| x != c && hamming(&cs[x], &cs[a]) == 1 && hamming(&cs[x], &cs[b]) == 1)
                })
            });
            if fails {
                edges.insert((u, v));
            }
        }
    }
    (classes.keys().copied().collect(), edges)
}

/// Kempe candidate at `c` from the labels, using the characterisation
/// `|C_{c_u,v}| ≥ 2`, `|C_{c_v,u}| ≥ 2` and `C_{c_u,v} ∩ C_{c_v,u} ≠ ∅`.
pub fn labelled_candidate_kempe(cs: &[Vec<u8>], c: usize) -> (Vec<usize>, BTreeSet<(usize, usize)>) {
    let n = cs[c].len();
    // colourings differing from colouring `base` exactly at vertex `u`
    let recolour = |base: usize, u: usize| -> BTreeSet<usize> {
        (0..cs.len())
            .filter(|&i| hamming(&cs[i], &cs[base]) == 1 && cs[i][u] != cs[base][u])
            .collect()
    };
    let classes: BTreeMap<usize, BTreeSet<usize>> =
        (0..n).map(|u| (u, recolour(c, u))).filter(|(_, s)| s.len() >= 2).collect();
    let mut edges = BTreeSet::new();
    for (&u, cu) in &classes {
        for (&v, cv) in classes.range(u + 1..) {
            let fails = cu.iter().any(|&a| {
                cv.iter().any(|&b| {
                    let (x, y) = (recolour(a, v), recolour(b, u));
                    !(x.len() >= 2 && y.len() >= 2 && x.intersection(&y).next().is_some())
                })
            });
            if fails {
                edges.insert((u, v));
            }
        }
    }
    (classes.keys().copied().collect(), edges)
}

/// Layerings by exhaustive assignment of layers `1..=max(1, deg)`, pruned only
/// by "neighbours differ by exactly one". Stops after `cap` solutions.
pub fn brute_layerings(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    let m = Mat::of(g);
    let mut out = Vec::new();
    let mut layer = vec![0usize; m.n];
    fn rec(m: &Mat, v: usize, layer: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if v == m.n {
            if is_layering(m, layer) {
                out.push(layer.clone());
            }
            return;
        }
        for l in 1..=m.degree(v).max(1) {
            if (0..v).all(|w| !m.adj[v][w] || layer[w].abs_diff(l) == 1) {
                layer[v] = l;
                rec(m, v + 1, layer, out, cap);
            }
        }
        layer[v] = 0;
    }
    rec(&m, 0, &mut layer, &mut out, cap);
    out
}

/// The four layering conditions, checked literally.
pub fn is_layering(m: &Mat, layer: &[usize]) -> bool {
    let p = layer.iter().copied().max().unwrap_or(0);
    let members = |i: usize| -> Vec<usize> { (0..m.n).filter(|&v| layer[v] == i).collect() };
    for i in 1..=p {
        let li = members(i);
        if li.is_empty() {
            return false;
        }
        // 1: independent
        if li.iter().any(|&a| li.iter().any(|&b| m.adj[a][b])) {
            return false;
        }
        for &v in &li {
            // 2: neighbours only directly above or below
            if (0..m.n).any(|w| m.adj[v][w] && layer[w] != i + 1 && layer[w] + 1 != i) {
                return false;
            }
            // 3: exactly i neighbours one layer down
            if i >= 2 && (0..m.n).filter(|&w| m.adj[v][w] && layer[w] + 1 == i).count() != i {
                return false;
            }
        }
        // 4: at most one common neighbour per adjacent layer
        for (x, &a) in li.iter().enumerate() {
            for &b in &li[x + 1..] {
                for adj_layer in [i.wrapping_sub(1), i + 1] {
                    let common = (0..m.n)
                        .filter(|&w| layer[w] == adj_layer && m.adj[a][w] && m.adj[b][w])
                        .count();
                    if common > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Transposition graph of the symmetric group on `k` symbols.
pub fn transposition_graph(k: usize) -> Graph {
    let mut perms = Vec::new();
    for_each_permutation(k, |p| {
        perms.push(p.to_vec());
        true
    });
    let mut edges = Vec::new();
    for i in 0..perms.len() {
        for j in i + 1..perms.len() {
            let diff: Vec<usize> = (0..k).filter(|&x| perms[i][x] != perms[j][x]).collect();
            if diff.len() == 2 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(perms.len(), edges).unwrap()
}
