//! Undirected simple graphs, generators, and the edge-list text format.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Immutable undirected simple graph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacent: Vec<bool>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `u < v` and sorting. Rejects
    /// self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("graph needs at least one node"));
        }
        let mut adjacent = vec![false; n * n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::precondition(format!("self-loop at node {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::precondition(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            let (u, v) = (u.min(v), u.max(v));
            if adjacent[u * n + v] {
                return Err(Error::precondition(format!("duplicate edge ({u}, {v})")));
            }
            adjacent[u * n + v] = true;
            adjacent[v * n + u] = true;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adjacent,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edges with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacent[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, s) in seen.iter_mut().enumerate() {
                if !*s && self.has_edge(u, v) {
                    *s = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Edge-list text: sorted `u v` lines with `u < v`. An `n <count>` header
    /// is written only when trailing isolated nodes would otherwise be lost.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let inferred = self.edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
        if inferred != self.n {
            writeln!(out, "n {}", self.n).unwrap();
        }
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Parses the edge-list format. Lines are `u v`; `#` starts a comment line;
/// an optional `n <count>` line fixes the node count.
pub fn load_graph(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::parse(format!("line {}: cannot parse {raw:?}", lineno + 1));
        match fields.as_slice() {
            ["n", count] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(Error::parse(format!(
                        "line {}: misplaced node-count header",
                        lineno + 1
                    )));
                }
                declared = Some(count.parse().map_err(|_| bad())?);
            }
            [u, v] => {
                let u: usize = u.parse().map_err(|_| bad())?;
                let v: usize = v.parse().map_err(|_| bad())?;
                edges.push((u, v));
            }
            _ => return Err(bad()),
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if inferred > n => {
            return Err(Error::parse(format!(
                "node index {} exceeds declared n = {n}",
                inferred - 1
            )))
        }
        Some(n) => n,
        None => inferred,
    };
    if n == 0 {
        return Err(Error::parse("edge list is empty"));
    }
    Graph::new(n, edges).map_err(|e| match e {
        Error::Precondition(msg) => Error::Parse(msg),
        other => other,
    })
}

/// Cycle on `2^k` nodes.
pub fn gen_ring(k: u32) -> Result<Graph> {
    if k < 2 {
        return Err(Error::precondition(format!("ring needs k ≥ 2, got {k}")));
    }
    if k > 24 {
        return Err(Error::precondition(format!("ring k = {k} is too large")));
    }
    gen_cycle(1 << k)
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition(format!("cycle needs n ≥ 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with center 0 and leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::precondition(format!("star needs n ≥ 3, got {n}")));
    }
    Graph::new(n, (1..n).map(|i| (0, i)))
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::precondition(format!("path needs n ≥ 2, got {n}")));
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    Graph::new(n, pairs(n))
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha8 stream; pairs are visited in
/// lexicographic order.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::precondition(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = pairs(n).filter(|_| rng.random_bool(p)).collect();
    Graph::new(n, edges)
}

/// All pairs `i < j` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Position of pair `(i, j)` in [`pairs`] order. Argument order is free.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}
