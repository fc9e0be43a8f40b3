//! LambdaPrime / LambdaCC scores and cost lines.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pairs, Graph};
use crate::rational::{choose2, int, Rational};

/// A partition of `0..n`, stored as one cluster id per node. Ids are
/// renumbered to first-appearance order, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clustering {
    assignment: Vec<usize>,
    count: usize,
}

impl Clustering {
    pub fn new(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::precondition("clustering of zero nodes"));
        }
        let mut remap = std::collections::HashMap::new();
        let assignment = labels
            .iter()
            .map(|&l| {
                let next = remap.len();
                *remap.entry(l).or_insert(next)
            })
            .collect();
        Ok(Clustering {
            assignment,
            count: remap.len(),
        })
    }

    /// Restricted-growth labels are already canonical.
    pub(crate) fn from_canonical(assignment: Vec<usize>) -> Self {
        let count = assignment.iter().max().map_or(0, |m| m + 1);
        Clustering { assignment, count }
    }

    pub fn single(n: usize) -> Self {
        Clustering::from_canonical(vec![0; n])
    }

    pub fn singletons(n: usize) -> Self {
        Clustering::from_canonical((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cluster_count(&self) -> usize {
        self.count
    }

    pub fn together(&self, i: usize, j: usize) -> bool {
        self.assignment[i] == self.assignment[j]
    }

    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::precondition(format!(
                "clustering covers {} nodes, graph has {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Objective of one fixed solution as the line `P + λ·N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostLine {
    pub p: Rational,
    pub n: Rational,
}

impl CostLine {
    pub fn new(p: Rational, n: Rational) -> Self {
        CostLine { p, n }
    }

    pub fn at(&self, lambda: &Rational) -> Rational {
        &self.p + lambda * &self.n
    }
}

/// Which score a sweep or audit measures. The two differ by `λ·m` and share
/// optimal solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    #[default]
    LamPrime,
    LamCC,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::LamPrime => "lamprime",
            Objective::LamCC => "lamcc",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "lamprime" => Ok(Objective::LamPrime),
            "lamcc" => Ok(Objective::LamCC),
            other => Err(Error::parse(format!("unknown objective {other:?}"))),
        }
    }

    /// Score of a LambdaPrime value `lamprime` under this objective.
    pub fn from_lamprime(self, lamprime: &Rational, lambda: &Rational, g: &Graph) -> Rational {
        match self {
            Objective::LamPrime => lamprime.clone(),
            Objective::LamCC => lamprime - lambda * int(g.m() as i64),
        }
    }
}

/// Positive node weights `π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeWeights(Vec<Rational>);

impl NodeWeights {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|w| *w <= Rational::zero()) {
            return Err(Error::precondition(format!(
                "node {v} has nonpositive weight"
            )));
        }
        Ok(NodeWeights(weights))
    }

    pub fn uniform(n: usize) -> Self {
        NodeWeights(vec![Rational::one(); n])
    }

    /// `π(v) = d_v`; fails on isolated nodes.
    pub fn degrees(g: &Graph) -> Result<Self> {
        NodeWeights::new(g.degrees().into_iter().map(|d| int(d as i64)).collect())
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.0[v]
    }
}

fn check_open_unit(lambda: &Rational) -> Result<()> {
    if *lambda <= Rational::zero() || *lambda >= Rational::one() {
        return Err(Error::precondition(format!("λ = {lambda} outside (0, 1)")));
    }
    Ok(())
}

/// `(P, N)` of a clustering: cut edges and intra-cluster pairs.
pub fn clustering_line(c: &Clustering, g: &Graph) -> Result<CostLine> {
    c.check(g)?;
    let cut = g
        .edges()
        .iter()
        .filter(|&&(u, v)| !c.together(u, v))
        .count();
    let mut sizes = vec![0usize; c.cluster_count()];
    for &l in c.assignment() {
        sizes[l] += 1;
    }
    let inside: Rational = sizes.into_iter().map(choose2).sum();
    Ok(CostLine::new(int(cut as i64), inside))
}

/// `(P, N)` of a fractional solution over all pairs in lexicographic order:
/// `P = Σ_E x_ij`, `N = Σ_{i<j} (1 − x_ij)`.
pub fn fractional_line(x: &[Rational], g: &Graph) -> Result<CostLine> {
    let n = g.n();
    if x.len() != n * (n - 1) / 2 {
        return Err(Error::precondition(format!(
            "fractional solution has {} entries, expected {}",
            x.len(),
            n * (n - 1) / 2
        )));
    }
    let mut p = Rational::zero();
    let mut neg = Rational::zero();
    for (x_ij, (i, j)) in x.iter().zip(pairs(n)) {
        if *x_ij < Rational::zero() || *x_ij > Rational::one() {
            return Err(Error::precondition(format!(
                "x[{i},{j}] = {x_ij} outside [0, 1]"
            )));
        }
        if g.has_edge(i, j) {
            p += x_ij;
        }
        neg += Rational::one() - x_ij;
    }
    Ok(CostLine::new(p, neg))
}

/// `Σ_S (½·cut(S) + λ·C(|S|, 2))`.
pub fn lamprime_score(c: &Clustering, g: &Graph, lambda: &Rational) -> Result<Rational> {
    check_open_unit(lambda)?;
    Ok(clustering_line(c, g)?.at(lambda))
}

/// LambdaCC score: `(1−λ)·cut + λ·(intra-cluster non-edges)`, which equals
/// the LambdaPrime score minus `λ·m`.
pub fn lamcc_score(c: &Clustering, g: &Graph, lambda: &Rational) -> Result<Rational> {
    check_open_unit(lambda)?;
    c.check(g)?;
    let mut positive = 0i64;
    let mut negative = 0i64;
    for (i, j) in pairs(g.n()) {
        match (g.has_edge(i, j), c.together(i, j)) {
            (true, false) => positive += 1,
            (false, true) => negative += 1,
            _ => {}
        }
    }
    Ok((Rational::one() - lambda) * int(positive) + lambda * int(negative))
}

/// Separated edges plus `λ·Σ π(i)π(j)` over co-clustered pairs.
pub fn weighted_lamprime_score(
    c: &Clustering,
    g: &Graph,
    w: &NodeWeights,
    lambda: &Rational,
) -> Result<Rational> {
    check_open_unit(lambda)?;
    c.check(g)?;
    if w.0.len() != g.n() {
        return Err(Error::precondition(format!(
            "{} node weights for {} nodes",
            w.0.len(),
            g.n()
        )));
    }
    let mut cut = 0i64;
    let mut mass = Rational::zero();
    for (i, j) in pairs(g.n()) {
        if c.together(i, j) {
            mass += w.get(i) * w.get(j);
        } else if g.has_edge(i, j) {
            cut += 1;
        }
    }
    Ok(int(cut) + lambda * mass)
}
