use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::CoverFamily;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::LpSession;
use crate::rational::{format_rational, snap_f64, to_f64, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct CoverReport {
    /// The members' intervals jointly cover the domain.
    pub covered: bool,
    /// First uncovered stretch, if any.
    pub gap: Option<(Rational, Rational)>,
    /// Largest `cover value / LP value` seen on the grid. `None` when the LP
    /// is 0 somewhere the cover is not.
    pub worst_ratio: Option<Rational>,
    pub worst_lambda: Rational,
    pub points: usize,
    pub passed: bool,
}

impl CoverReport {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        match &self.gap {
            None => out.push_str("intervals: cover the domain\n"),
            Some((a, b)) => out.push_str(&format!(
                "intervals: gap ({}, {})\n",
                format_rational(a),
                format_rational(b)
            )),
        }
        let ratio = self
            .worst_ratio
            .as_ref()
            .map_or("unbounded".to_string(), format_rational);
        out.push_str(&format!(
            "grid: {} points, worst ratio {} at λ = {}\n",
            self.points,
            ratio,
            format_rational(&self.worst_lambda)
        ));
        out.push_str(if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

/// First stretch of `[lo, hi]` left uncovered by the closed intervals.
fn first_gap(family: &CoverFamily) -> Option<(Rational, Rational)> {
    let mut intervals: Vec<_> = family.members.iter().map(|m| &m.interval).collect();
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
    let domain = &family.domain;
    let mut reach = domain.lo.clone();
    for iv in intervals {
        if reach >= domain.hi {
            break;
        }
        if iv.lo > reach {
            return Some((reach, iv.lo.clone()));
        }
        reach = reach.max(iv.hi.clone());
    }
    (reach < domain.hi).then(|| (reach, domain.hi.clone()))
}

/// Audit points: `density` geometrically spaced λ from the domain floor
/// toward 1, the floor itself, every member's λ, and the breakpoints of the
/// members' envelope, all strictly below 1.
fn grid(family: &CoverFamily, density: usize) -> Result<BTreeSet<Rational>> {
    let lo = &family.domain.lo;
    let hi = &family.domain.hi;
    let inside = |l: &Rational| l >= lo && l < hi && *l < Rational::one();
    let mut points = BTreeSet::new();
    points.insert(lo.clone());
    let (flo, fhi) = (to_f64(lo).ln(), to_f64(hi).ln());
    for j in 0..density {
        let t = j as f64 / density as f64;
        if let Some(q) = snap_f64((flo + t * (fhi - flo)).exp(), 1 << 20) {
            if inside(&q) {
                points.insert(q);
            }
        }
    }
    points.extend(
        family
            .members
            .iter()
            .map(|m| m.lambda.clone())
            .filter(|l| inside(l)),
    );
    points.extend(
        family
            .envelope()?
            .breakpoints()
            .into_iter()
            .filter(|l| inside(l)),
    );
    Ok(points)
}

/// Checks that the members' intervals cover the domain exactly, then
/// compares the best member against a fresh LP optimum on a λ grid.
pub fn certify_cover(family: &CoverFamily, g: &Graph, density: usize) -> Result<CoverReport> {
    if family.members.is_empty() {
        return Err(Error::precondition("cannot certify an empty family"));
    }
    let gap = first_gap(family);
    let bound = Rational::one() + &family.epsilon;
    let points = grid(family, density)?;
    let mut session = LpSession::new(g);
    let mut worst: Option<Rational> = Some(Rational::zero());
    let mut worst_lambda = family.domain.lo.clone();
    for lambda in &points {
        let lp = family
            .objective
            .from_lamprime(&session.value(lambda)?, lambda, g);
        let best = family.value_at(lambda, g);
        let ratio = if lp.is_zero() {
            if best.is_zero() {
                Some(Rational::one())
            } else {
                None
            }
        } else {
            Some(best / lp)
        };
        let worse = match (&ratio, &worst) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(r), Some(w)) => r > w,
        };
        if worse {
            worst = ratio;
            worst_lambda = lambda.clone();
        }
    }
    let audit_ok = worst.as_ref().is_some_and(|w| *w <= bound);
    Ok(CoverReport {
        covered: gap.is_none(),
        passed: gap.is_none() && audit_ok,
        gap,
        worst_ratio: worst,
        worst_lambda,
        points: points.len(),
    })
}
