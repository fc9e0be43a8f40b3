//! Deterministic region-growing rounding of metric LP solutions.
//!
//! Pivot on the lowest unclustered node and grow a ball in the LP metric.
//! Candidate radii are the distinct pivot distances below 1/2; the chosen
//! radius minimizes `cut / volume`, where `cut` counts edges leaving the
//! ball and
//!
//! ```text
//! volume = LP/n + Σ_{edges inside} x_uv + Σ_{edges u∈ball, v∉ball} (r − x_pu)
//! ```
//!
//! over the still-unclustered nodes. Ties go to the smaller radius.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_index, Graph};
use crate::lp::{build_lp, LpSolution};
use crate::objectives::{lamcc_score, lamprime_score, Clustering, Objective};
use crate::orlp::LambdaInterval;
use crate::rational::{int, serde_q, serde_q_opt, Rational};
use crate::sweeps::CoverFamily;

/// `num / den` ordered with `x/0 = ∞` for `x > 0` and `0/0` lowest.
fn cmp_ratio(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    match (a.1.is_zero(), b.1.is_zero()) {
        (false, false) => (&a.0 * &b.1).cmp(&(&b.0 * &a.1)),
        (true, true) => a.0.cmp(&b.0),
        (true, false) if a.0.is_zero() => Ordering::Less,
        (true, false) => Ordering::Greater,
        (false, true) if b.0.is_zero() => Ordering::Greater,
        (false, true) => Ordering::Less,
    }
}

pub fn round_region_growing(x: &LpSolution, g: &Graph) -> Result<Clustering> {
    let n = g.n();
    let p = build_lp(g, &x.lambda)?;
    if x.x.len() != p.num_vars() || !p.is_feasible(&x.x) {
        return Err(Error::precondition(
            "LP solution is not triangle-feasible for this graph",
        ));
    }
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::zero()
                    } else {
                        x.x[pair_index(n, i.min(j), i.max(j))].clone()
                    }
                })
                .collect()
        })
        .collect();
    let dist = |i: usize, j: usize| &matrix[i][j];
    let seed = &x.value / int(n.max(1) as i64);
    let half = Rational::one() / int(2);
    let mut labels = vec![usize::MAX; n];
    let mut next_label = 0;
    for pivot in 0..n {
        if labels[pivot] != usize::MAX {
            continue;
        }
        let open: Vec<usize> = (0..n).filter(|&v| labels[v] == usize::MAX).collect();
        let mut radii: Vec<&Rational> = open
            .iter()
            .map(|&v| dist(pivot, v))
            .filter(|d| **d < half)
            .collect();
        radii.sort();
        radii.dedup();
        let mut best: Option<(&Rational, (Rational, Rational))> = None;
        for r in radii {
            let inside = |v: usize| dist(pivot, v) <= r;
            let mut cut = Rational::zero();
            let mut volume = seed.clone();
            for &(u, v) in g.edges() {
                if labels[u] != usize::MAX || labels[v] != usize::MAX {
                    continue;
                }
                match (inside(u), inside(v)) {
                    (true, true) => volume += dist(u, v),
                    (true, false) => {
                        cut += Rational::one();
                        volume += r - dist(pivot, u);
                    }
                    (false, true) => {
                        cut += Rational::one();
                        volume += r - dist(pivot, v);
                    }
                    (false, false) => {}
                }
            }
            let score = (cut, volume);
            if best
                .as_ref()
                .is_none_or(|(_, b)| cmp_ratio(&score, b) == Ordering::Less)
            {
                best = Some((r, score));
            }
        }
        let (r, _) = best.expect("pivot is at distance 0 from itself");
        for &v in &open {
            if dist(pivot, v) <= r {
                labels[v] = next_label;
            }
        }
        next_label += 1;
    }
    Clustering::new(&labels)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundedMember {
    pub lambda_interval: LambdaInterval,
    pub assignment: Vec<usize>,
    /// Objective score of the clustering at the member's λ.
    #[serde(with = "serde_q")]
    pub score: Rational,
    #[serde(with = "serde_q")]
    pub lp_value: Rational,
    /// `score / lp_value`; `null` when the LP value is 0 and the score is not.
    #[serde(with = "serde_q_opt")]
    pub ratio: Option<Rational>,
}

/// Rounds every member of a cover, scoring each clustering at the λ its LP
/// was solved for.
pub fn build_clustering_family(cover: &CoverFamily, g: &Graph) -> Result<Vec<RoundedMember>> {
    cover
        .members
        .iter()
        .map(|m| {
            let sol = m
                .solution()
                .ok_or_else(|| Error::precondition("cover was saved without solution vectors"))?;
            let c = round_region_growing(&sol, g)?;
            let score = match cover.objective {
                Objective::LamPrime => lamprime_score(&c, g, &m.lambda)?,
                Objective::LamCC => lamcc_score(&c, g, &m.lambda)?,
            };
            let ratio = if m.value.is_zero() {
                score.is_zero().then(Rational::one)
            } else {
                Some(&score / &m.value)
            };
            Ok(RoundedMember {
                lambda_interval: m.interval.clone(),
                assignment: c.assignment().to_vec(),
                score,
                lp_value: m.value.clone(),
                ratio,
            })
        })
        .collect()
}
