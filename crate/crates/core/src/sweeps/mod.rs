//! ε-covers of the λ domain: the geometric schedule, frontier extension
//! (FE), backward elimination (FEBE), and cover certification.

mod certify;
mod frontier;
mod geometric;
mod schedule;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

pub use certify::{certify_cover, CoverReport};
pub use frontier::{greedy_cover, sweep_fe, sweep_febe};
pub use geometric::sweep_geometric;
pub use schedule::{default_floor, geometric_schedule, schedule_ceiling, transfer_interval};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::LpSolution;
use crate::objectives::{CostLine, Objective};
use crate::orlp::LambdaInterval;
use crate::pwl::{envelope_of, PwlCurve};
use crate::rational::{ceil_log, serde_q, serde_q_vec_opt, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Member {
    /// Where the LP was solved.
    #[serde(with = "serde_q")]
    pub lambda: Rational,
    #[serde(rename = "P", with = "serde_q")]
    pub p: Rational,
    #[serde(rename = "N", with = "serde_q")]
    pub n: Rational,
    /// Objective value at `lambda`.
    #[serde(with = "serde_q")]
    pub value: Rational,
    pub interval: LambdaInterval,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "serde_q_vec_opt"
    )]
    pub x: Option<Vec<Rational>>,
    #[serde(skip)]
    pub dual: Option<Vec<Rational>>,
}

impl Member {
    pub fn new(sol: LpSolution, interval: LambdaInterval, objective: Objective, g: &Graph) -> Self {
        Member {
            value: objective.from_lamprime(&sol.value, &sol.lambda, g),
            p: sol.line.p,
            n: sol.line.n,
            lambda: sol.lambda,
            interval,
            x: Some(sol.x),
            dual: sol.dual,
        }
    }

    pub fn line(&self) -> CostLine {
        CostLine::new(self.p.clone(), self.n.clone())
    }

    /// The stored solution, when vectors were kept.
    pub fn solution(&self) -> Option<LpSolution> {
        let x = self.x.clone()?;
        Some(LpSolution {
            value: self.line().at(&self.lambda),
            lambda: self.lambda.clone(),
            x,
            line: self.line(),
            dual: self.dual.clone(),
            certified: self.dual.is_some(),
        })
    }
}

fn is_default_objective(o: &Objective) -> bool {
    *o == Objective::LamPrime
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverFamily {
    #[serde(with = "serde_q")]
    pub epsilon: Rational,
    #[serde(default, skip_serializing_if = "is_default_objective")]
    pub objective: Objective,
    pub domain: LambdaInterval,
    /// Ordered by `interval.lo`.
    pub members: Vec<Member>,
    pub lp_solve_count: usize,
}

impl CoverFamily {
    pub fn lines(&self) -> Vec<CostLine> {
        self.members.iter().map(Member::line).collect()
    }

    /// Lower envelope of the members' LambdaPrime lines over the domain.
    pub fn envelope(&self) -> Result<PwlCurve> {
        envelope_of(&self.lines(), &self.domain.lo, &self.domain.hi)
    }

    /// Best member value at `λ` under the family's objective.
    pub fn value_at(&self, lambda: &Rational, g: &Graph) -> Rational {
        let best = self
            .members
            .iter()
            .map(|m| m.line().at(lambda))
            .min()
            .expect("family has members");
        self.objective.from_lamprime(&best, lambda, g)
    }

    pub fn without_vectors(mut self) -> Self {
        for m in &mut self.members {
            m.x = None;
            m.dual = None;
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cover family serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let family: CoverFamily = serde_json::from_str(text)?;
        if family.members.is_empty() {
            return Err(Error::parse("cover family has no members"));
        }
        Ok(family)
    }

    fn sort_members(&mut self) {
        self.members.sort_by(|a, b| {
            a.interval
                .lo
                .cmp(&b.interval.lo)
                .then(a.lambda.cmp(&b.lambda))
        });
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOptions {
    pub epsilon: Rational,
    pub objective: Objective,
    /// Lower end of the domain; `4/n²` when unset.
    pub floor: Option<Rational>,
}

impl SweepOptions {
    pub fn new(epsilon: Rational) -> Self {
        SweepOptions {
            epsilon,
            objective: Objective::LamPrime,
            floor: None,
        }
    }

    pub fn objective(mut self, objective: Objective) -> Self {
        self.objective = objective;
        self
    }

    pub fn floor(mut self, floor: Rational) -> Self {
        self.floor = Some(floor);
        self
    }

    fn check(&self) -> Result<()> {
        if !self.epsilon.is_positive() {
            return Err(Error::precondition(format!(
                "ε = {} must be positive",
                self.epsilon
            )));
        }
        if let Some(f) = &self.floor {
            if !f.is_positive() || *f >= Rational::one() {
                return Err(Error::precondition(format!("floor {f} outside (0, 1)")));
            }
        }
        Ok(())
    }

    fn domain(&self, g: &Graph) -> Result<LambdaInterval> {
        if g.n() < 2 {
            return Err(Error::precondition("sweeps need at least two nodes"));
        }
        let lo = self.floor.clone().unwrap_or_else(|| default_floor(g.n()));
        Ok(LambdaInterval::new(lo, Rational::one()))
    }
}

/// A named way of building an ε-cover.
pub trait CoverStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn build(&self, g: &Graph, opts: &SweepOptions) -> Result<CoverFamily>;
}

pub struct Geometric;
pub struct FrontierExtension;
pub struct BackwardElimination;

impl CoverStrategy for Geometric {
    fn name(&self) -> &'static str {
        "geometric"
    }

    fn build(&self, g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
        sweep_geometric(g, opts)
    }
}

impl CoverStrategy for FrontierExtension {
    fn name(&self) -> &'static str {
        "fe"
    }

    fn build(&self, g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
        sweep_fe(g, opts)
    }
}

impl CoverStrategy for BackwardElimination {
    fn name(&self) -> &'static str {
        "febe"
    }

    fn build(&self, g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
        sweep_febe(g, opts)
    }
}

pub fn strategies() -> Vec<Box<dyn CoverStrategy>> {
    vec![
        Box::new(Geometric),
        Box::new(FrontierExtension),
        Box::new(BackwardElimination),
    ]
}

pub fn strategy(name: &str) -> Result<Box<dyn CoverStrategy>> {
    strategies()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| {
            Error::parse(format!(
                "unknown sweep algorithm {name:?} (expected geometric, fe or febe)"
            ))
        })
}

/// Forward ratios `w_i = α_{i+1}/β_i` (and `1/β_last`) of a family of
/// ranges ordered left to right, with the forward factor
/// `p = max(0, max_i ⌈log_{1+ε} w_i⌉)`.
pub fn forward_factor(ranges: &[LambdaInterval], eps: &Rational) -> Result<(Vec<Rational>, i64)> {
    if ranges.is_empty() {
        return Err(Error::precondition("forward factor of an empty family"));
    }
    if !eps.is_positive() {
        return Err(Error::precondition(format!("ε = {eps} must be positive")));
    }
    let mut ratios = Vec::with_capacity(ranges.len());
    for (i, r) in ranges.iter().enumerate() {
        if !r.hi.is_positive() {
            return Err(Error::precondition(format!("range {i} ends at {}", r.hi)));
        }
        let next = ranges
            .get(i + 1)
            .map_or_else(Rational::one, |n| n.lo.clone());
        ratios.push(next / &r.hi);
    }
    let base = Rational::one() + eps;
    let p = ratios
        .iter()
        .filter(|w| w.is_positive())
        .map(|w| ceil_log(&base, w))
        .fold(0, i64::max);
    Ok((ratios, p))
}
