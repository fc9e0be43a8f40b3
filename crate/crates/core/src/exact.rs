//! Brute-force ground truth: every set partition of a small graph.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objectives::{Clustering, CostLine};
use crate::pwl::{envelope_of, PwlCurve};
use crate::rational::{format_rational, int, ratio, to_f64, Rational};

/// Default node cap for exhaustive enumeration (Bell(12) ≈ 4.2 million).
pub const PARTITION_CAP: usize = 12;

/// Default node cap for exhaustive bipartition search.
pub const BIPARTITION_CAP: usize = 24;

/// Restricted-growth strings of length `n` in lexicographic order, each a
/// canonical cluster labeling.
pub struct Partitions {
    labels: Vec<usize>,
    /// `max[i]` = largest label among `labels[..i]`, plus one.
    max: Vec<usize>,
    done: bool,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions {
            labels: vec![0; n],
            max: vec![1; n],
            done: n == 0,
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.labels.clone();
        let n = self.labels.len();
        // bump the rightmost position that can still grow, reset the tail
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] < self.max[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.max[j] = self.max[j - 1].max(self.labels[j - 1] + 1);
                }
                break;
            }
        }
        Some(out)
    }
}

/// Every partition of `0..g.n()` exactly once, in restricted-growth order.
pub fn enumerate_partitions(g: &Graph, cap: usize) -> Result<impl Iterator<Item = Clustering>> {
    if g.n() > cap {
        return Err(Error::precondition(format!(
            "{} nodes exceed the enumeration cap of {cap}",
            g.n()
        )));
    }
    Ok(Partitions::new(g.n()).map(Clustering::from_canonical))
}

#[derive(Debug, Clone)]
pub struct ExactCurve {
    /// `OPT(λ)` on `[0, 1]`.
    pub curve: PwlCurve,
    /// One clustering per piece of `curve`, in the same order.
    pub family: Vec<Clustering>,
}

impl ExactCurve {
    pub fn value_at(&self, lambda: &Rational) -> Rational {
        self.curve.value_at(lambda)
    }

    /// One `lambda_lo,lambda_hi,P,N` row per piece.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda_lo,lambda_hi,P,N\n");
        for p in &self.curve.pieces {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_rational(&p.lo),
                format_rational(&p.hi),
                format_rational(&p.line.p),
                format_rational(&p.line.n)
            ));
        }
        out
    }

    /// `lambda,value` at every piece endpoint plus `samples` evenly spaced
    /// interior points, in increasing λ.
    pub fn samples_csv(&self, samples: usize) -> String {
        let mut points: BTreeSet<Rational> = self
            .curve
            .pieces
            .iter()
            .flat_map(|p| [p.lo.clone(), p.hi.clone()])
            .collect();
        points.extend((1..=samples).map(|i| ratio(i as i64, samples as i64 + 1)));
        let mut out = String::from("lambda,value\n");
        for l in points {
            out.push_str(&format!("{},{}\n", to_f64(&l), to_f64(&self.value_at(&l))));
        }
        out
    }

    /// The family as a JSON list of cluster assignments, one per piece.
    pub fn family_json(&self) -> String {
        let all: Vec<&[usize]> = self.family.iter().map(Clustering::assignment).collect();
        serde_json::to_string(&all).expect("assignments serialize")
    }
}

/// Lower envelope of all partitions' cost lines, with one optimal
/// clustering per piece.
///
/// Only the minimum-`N` partition for each cut count `P` can ever sit on the
/// envelope, so the scan keeps at most `m + 1` candidate lines.
pub fn exact_opt_curve(g: &Graph) -> Result<ExactCurve> {
    exact_opt_curve_capped(g, PARTITION_CAP)
}

pub fn exact_opt_curve_capped(g: &Graph, cap: usize) -> Result<ExactCurve> {
    if g.n() > cap {
        return Err(Error::precondition(format!(
            "{} nodes exceed the enumeration cap of {cap}",
            g.n()
        )));
    }
    let n = g.n();
    let edges = g.edges();
    let mut best: Vec<Option<(u64, Vec<usize>)>> = vec![None; g.m() + 1];
    let mut sizes = vec![0u64; n];
    for labels in Partitions::new(n) {
        let cut = edges
            .iter()
            .filter(|&&(u, v)| labels[u] != labels[v])
            .count();
        sizes.iter_mut().for_each(|s| *s = 0);
        for &l in &labels {
            sizes[l] += 1;
        }
        let inside: u64 = sizes.iter().map(|&s| s * s.saturating_sub(1) / 2).sum();
        match &best[cut] {
            Some((held, _)) if *held <= inside => {}
            _ => best[cut] = Some((inside, labels)),
        }
    }
    let candidates: Vec<(CostLine, Vec<usize>)> = best
        .into_iter()
        .enumerate()
        .filter_map(|(p, slot)| {
            slot.map(|(inside, labels)| (CostLine::new(int(p as i64), int(inside as i64)), labels))
        })
        .collect();
    let lines: Vec<CostLine> = candidates.iter().map(|(l, _)| l.clone()).collect();
    let curve = envelope_of(&lines, &int(0), &int(1))?;
    let family = curve
        .pieces
        .iter()
        .map(|piece| Clustering::from_canonical(candidates[piece.source].1.clone()))
        .collect();
    Ok(ExactCurve { curve, family })
}

/// `min_S cut(S) / (|S|·|S̄|)` over all bipartitions, with the first minimizer
/// (node `n−1` always on the second side, masks in increasing order).
pub fn scaled_sparsest_cut(g: &Graph) -> Result<(Rational, Clustering)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::precondition("sparsest cut needs at least two nodes"));
    }
    if n > BIPARTITION_CAP {
        return Err(Error::precondition(format!(
            "{n} nodes exceed the bipartition cap of {BIPARTITION_CAP}"
        )));
    }
    let mut best: Option<(Rational, u64)> = None;
    for mask in 1u64..(1 << (n - 1)) {
        let side = |v: usize| v < n - 1 && mask >> v & 1 == 1;
        let cut = g
            .edges()
            .iter()
            .filter(|&&(u, v)| side(u) != side(v))
            .count();
        let s = mask.count_ones() as i64;
        let value = ratio(cut as i64, s * (n as i64 - s));
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, mask));
        }
    }
    let (lambda, mask) = best.expect("at least one bipartition");
    let labels: Vec<usize> = (0..n)
        .map(|v| usize::from(!(v < n - 1 && mask >> v & 1 == 1)))
        .collect();
    Ok((lambda, Clustering::new(&labels)?))
}
