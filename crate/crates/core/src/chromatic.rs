//! Exact chromatic number by iterative deepening on the number of colours.

use crate::{Config, Error, Graph, Result};

/// A clique found greedily by descending degree; its size bounds `χ` from below.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    // seen[v * (k + 1) + c] = number of neighbours of v coloured c
    seen: Vec<u32>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> usize {
        let base = v * (self.k + 1);
        (1..=self.k).filter(|&c| self.seen[base + c] > 0).count()
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for &w in self.g.neighbours(v) {
            self.seen[w * (self.k + 1) + c] += 1;
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        for &w in self.g.neighbours(v) {
            self.seen[w * (self.k + 1) + c] -= 1;
        }
    }

    fn solve(&mut self, coloured: usize, max_used: usize) -> Result<bool> {
        let n = self.g.n();
        if coloured == n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceCap {
                what: "colourability search nodes",
                limit: self.limit,
            });
        }
        // DSATUR choice: most distinct neighbour colours, then most uncoloured neighbours.
        let v = (0..n)
            .filter(|&v| self.colour[v] == 0)
            .max_by_key(|&v| {
                let free_deg = self
                    .g
                    .neighbours(v)
                    .iter()
                    .filter(|&&w| self.colour[w] == 0)
                    .count();
                (self.saturation(v), free_deg, std::cmp::Reverse(v))
            })
            .expect("an uncoloured vertex remains");
        let base = v * (self.k + 1);
        for c in 1..=self.k.min(max_used + 1) {
            if self.seen[base + c] == 0 {
                self.set(v, c);
                if self.solve(coloured + 1, max_used.max(c))? {
                    return Ok(true);
                }
                self.unset(v);
            }
        }
        Ok(false)
    }
}

/// A proper colouring with colours `1..=k`, if one exists.
pub fn find_colouring(g: &Graph, k: usize, cfg: &Config) -> Result<Option<Vec<usize>>> {
    if g.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search {
        g,
        k,
        colour: vec![0; g.n()],
        seen: vec![0; g.n() * (k + 1)],
        nodes: 0,
        limit: cfg.max_search_nodes,
    };
    Ok(search.solve(0, 0)?.then_some(search.colour))
}

/// Smallest `k` admitting a proper `k`-colouring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph, cfg: &Config) -> Result<usize> {
    if g.is_empty() {
        return Ok(0);
    }
    let mut k = greedy_clique(g).len().max(1);
    loop {
        if find_colouring(g, k, cfg)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}
