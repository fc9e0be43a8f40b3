use num_traits::One;

use super::{schedule_ceiling, transfer_interval, CoverFamily, Member, SweepOptions};
use crate::error::Result;
use crate::graph::Graph;
use crate::lp::LpSession;
use crate::objectives::Objective;
use crate::oracles::{lamcc_odds, lamcc_schedule};
use crate::orlp::{orlp, Direction};
use crate::rational::Rational;
use crate::sweeps::geometric_schedule;

/// One LP per schedule point, each certified on its transfer interval.
///
/// LambdaPrime uses the `(1+ε)²` schedule from `4/n²`. LambdaCC uses the
/// odds schedule from `1/(n²+1)` and stretches its last member toward 1 with
/// a forward range step. Extra points are prepended while the family falls
/// short of the floor.
pub fn sweep_geometric(g: &Graph, opts: &SweepOptions) -> Result<CoverFamily> {
    opts.check()?;
    let domain = opts.domain(g)?;
    let eps = &opts.epsilon;
    let growth = Rational::one() + eps;
    let ceiling = schedule_ceiling();
    let schedule = match opts.objective {
        Objective::LamPrime => geometric_schedule(g.n(), eps)?,
        Objective::LamCC => lamcc_schedule(g.n(), eps)?,
    };
    let mut session = LpSession::new(g);
    let mut members = Vec::with_capacity(schedule.len());
    for lambda in schedule {
        let lambda = lambda.min(ceiling.clone());
        let sol = session.solve(&lambda)?;
        let interval = transfer_interval(&lambda, eps, opts.objective);
        members.push(Member::new(sol, interval, opts.objective, g));
    }

    if opts.objective == Objective::LamCC {
        let last = members.last_mut().expect("schedule is nonempty");
        let sol = last.solution().expect("fresh member keeps its vector");
        let step = orlp(
            &sol,
            Direction::Forward,
            &last.lambda,
            eps,
            g,
            Objective::LamCC,
        )?;
        let reach = &last.lambda + &step.theta;
        if reach > last.interval.hi {
            last.interval.hi = reach;
            last.interval.hi_clamped = step.clamped;
        }
    }

    loop {
        let first = members
            .iter()
            .min_by(|a, b| a.interval.lo.cmp(&b.interval.lo))
            .expect("schedule is nonempty");
        if first.interval.lo <= domain.lo {
            break;
        }
        let lambda = match opts.objective {
            Objective::LamPrime => &first.lambda / (&growth * &growth),
            Objective::LamCC => {
                let odds = lamcc_odds(&first.lambda) / (&growth * &growth);
                &odds / (Rational::one() + &odds)
            }
        };
        let sol = session.solve(&lambda)?;
        let interval = transfer_interval(&lambda, eps, opts.objective);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_ring, gen_star, Graph};
    use crate::rational::{int, ratio};
    use crate::sweeps::certify_cover;

    #[test]
    fn ring_cover_uses_schedule_length() {
        let g = gen_ring(3).unwrap();
        let fam = sweep_geometric(&g, &SweepOptions::new(int(1))).unwrap();
        assert_eq!(fam.lp_solve_count, 4);
        assert_eq!(fam.members.len(), 4);
        assert_eq!(fam.domain.lo, ratio(1, 16));
        let report = certify_cover(&fam, &g, 30).unwrap();
        assert!(report.passed, "{report:?}");
        assert!(fam
            .members
            .windows(2)
            .all(|w| w[0].interval.lo <= w[1].interval.lo));
    }

    #[test]
    fn two_nodes_get_covered() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let fam = sweep_geometric(&g, &SweepOptions::new(ratio(1, 10))).unwrap();
        assert!(certify_cover(&fam, &g, 10).unwrap().passed);
    }

    #[test]
    fn floor_prepends_points() {
        let g = gen_star(5).unwrap();
        let plain = sweep_geometric(&g, &SweepOptions::new(int(1))).unwrap();
        let wide = sweep_geometric(&g, &SweepOptions::new(int(1)).floor(ratio(1, 1000))).unwrap();
        assert!(wide.members.len() > plain.members.len());
        assert!(wide.members[0].interval.lo <= ratio(1, 1000));
    }

    #[test]
    fn lamcc_cover_passes_audit() {
        let g = gen_star(5).unwrap();
        let opts = SweepOptions::new(ratio(1, 2)).objective(Objective::LamCC);
        let fam = sweep_geometric(&g, &opts).unwrap();
        let report = certify_cover(&fam, &g, 30).unwrap();
        assert!(report.passed, "{report:?}");
    }
}
