//! Independent sets ("token sets") and their enumeration.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::{Config, Error, Graph, Result};

/// A set of token positions, kept sorted.
///
/// Sets are ordered by size first and then lexicographically, so the empty set
/// comes first and all singletons precede all pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TokenSet {
    vertices: Vec<usize>,
}

impl TokenSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        TokenSet { vertices }
    }

    pub fn empty() -> Self {
        TokenSet { vertices: vec![] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_independent_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n()) && g.is_independent(&self.vertices)
    }

    /// Elements in exactly one of the two sets, sorted.
    pub fn symmetric_difference(&self, other: &TokenSet) -> Vec<usize> {
        let (a, b) = (&self.vertices, &other.vertices);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        out
    }
}

impl Ord for TokenSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for TokenSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All independent sets of `g` with at least `min_size` vertices, in
/// size-then-lexicographic order.
pub fn independent_sets(g: &Graph, min_size: usize, cfg: &Config) -> Result<Vec<TokenSet>> {
    struct Walk<'a> {
        g: &'a Graph,
        min_size: usize,
        current: Vec<usize>,
        out: Vec<TokenSet>,
        cap: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, next: usize) -> Result<()> {
            let n = self.g.n();
            if self.current.len() + (n - next) < self.min_size {
                return Ok(());
            }
            if next == n {
                if self.out.len() as u64 >= self.cap {
                    return Err(Error::ResourceCap {
                        what: "independent sets",
                        limit: self.cap,
                    });
                }
                self.out.push(TokenSet {
                    vertices: self.current.clone(),
                });
                return Ok(());
            }
            self.go(next + 1)?;
            if self.current.iter().all(|&u| !self.g.has_edge(u, next)) {
                self.current.push(next);
                self.go(next + 1)?;
                self.current.pop();
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        g,
        min_size,
        current: Vec::new(),
        out: Vec::new(),
        cap: cfg.max_sets,
    };
    walk.go(0)?;
    let mut out = walk.out;
    out.sort_unstable();
    Ok(out)
}

/// Size of a largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    fn best(g: &Graph, candidates: Vec<usize>, size: usize, record: &mut usize) {
        if size + candidates.len() <= *record {
            return;
        }
        let Some((&v, rest)) = candidates.split_first() else {
            *record = size;
            return;
        };
        let without_nbrs: Vec<usize> = rest.iter().copied().filter(|&w| !g.has_edge(v, w)).collect();
        best(g, without_nbrs, size + 1, record);
        best(g, rest.to_vec(), size, record);
    }
    let mut record = 0;
    best(g, (0..g.n()).collect(), 0, &mut record);
    record
}
