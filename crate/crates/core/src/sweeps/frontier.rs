use num_traits::One;

use super::{transfer_interval, CoverFamily, Member, SweepOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::LpSession;
use crate::objectives::Objective;
use crate::orlp::{eps_range, orlp, Direction, LambdaInterval};
use crate::rational::Rational;

/// Next frontier start: the point whose transfer interval begins at `reach`.
fn advance(reach: &Rational, eps: &Rational, objective: Objective) -> Rational {
    let growth = Rational::one() + eps;
    match objective {
        Objective::LamPrime => &growth * reach,
        Objective::LamCC => &growth * reach / (Rational::one() + eps * reach),
    }
}

/// Frontier extension: solve at the frontier, push it forward by the
/// largest ε-range step, jump past the new frontier by the transfer factor
/// and repeat until λ reaches 1. A frontier left short of 1 gets one more
/// solve, which covers the rest by transfer.
pub fn sweep_fe(g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
    opts.check()?;
    let domain = opts.domain(g)?;
    let eps = &opts.epsilon;
    let mut session = LpSession::new(g);
    let mut members = Vec::new();
    let mut lambda0 = domain.lo.clone();
    let mut reach = lambda0.clone();
    while lambda0 < Rational::one() {
        let sol = session.solve(&lambda0)?;
        let step = orlp(&sol, Direction::Forward, &lambda0, eps, g, opts.objective)?;
        reach = &lambda0 + &step.theta;
        let interval = LambdaInterval {
            lo: transfer_interval(&lambda0, eps, opts.objective).lo,
            hi: reach.clone(),
            lo_clamped: false,
            hi_clamped: step.clamped,
        };
        members.push(Member::new(sol, interval, opts.objective, g));
        lambda0 = advance(&reach, eps, opts.objective);
    }
    if reach < Rational::one() {
        let sol = session.solve(&reach)?;
        let interval = transfer_interval(&reach, eps, opts.objective);
        members.push(Member::new(sol, interval, opts.objective, g));
    }
    let mut family = CoverFamily {
        epsilon: eps.clone(),
        objective: opts.objective,
        domain,
        lp_solve_count: members.len(),
        members,
    };
    family.sort_members();
    Ok(family)
}

/// FE followed by backward elimination: every FE member gets its full
/// ε-range, then a greedy left-to-right interval cover keeps the fewest.
pub fn sweep_febe(g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
    let fe = sweep_fe(g, opts)?;
    let eps = &opts.epsilon;
    let mut ranged = Vec::with_capacity(fe.members.len());
    for m in &fe.members {
        let sol = m.solution().expect("fresh member keeps its vector");
        let range = eps_range(&sol, &m.lambda, eps, g, opts.objective)?;
        let mut m = m.clone();
        m.interval = range;
        ranged.push(m);
    }
    let intervals: Vec<LambdaInterval> = ranged.iter().map(|m| m.interval.clone()).collect();
    let chosen = greedy_cover(&intervals, &fe.domain)?;
    let mut family = CoverFamily {
        members: chosen.into_iter().map(|i| ranged[i].clone()).collect(),
        ..fe
    };
    family.sort_members();
    Ok(family)
}

/// Indices of a minimum set of closed intervals covering `domain`, picked
/// greedily: from the current point, take the interval containing it that
/// reaches furthest (earliest index on ties).
pub fn greedy_cover(intervals: &[LambdaInterval], domain: &LambdaInterval) -> Result<Vec<usize>> {
    let mut at = domain.lo.clone();
    let mut chosen = Vec::new();
    loop {
        let pick = intervals
            .iter()
            .enumerate()
            .filter(|(_, iv)| iv.contains(&at))
            .max_by(|(i, a), (j, b)| a.hi.cmp(&b.hi).then(j.cmp(i)));
        let Some((i, iv)) = pick else {
            return Err(Error::Verification(format!(
                "no interval contains λ = {at}"
            )));
        };
        chosen.push(i);
        if iv.hi >= domain.hi {
            return Ok(chosen);
        }
        if iv.hi == at {
            return Err(Error::Verification(format!("cover stalls at λ = {at}")));
        }
        at = iv.hi.clone();
    }
}
