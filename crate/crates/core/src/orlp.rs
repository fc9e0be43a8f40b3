//! Optimal and ε-approximate λ-ranges of a fixed LP solution.
//!
//! For a solution `x*` optimal at `λ0`, the range LP looks for the largest
//! step `θ` in direction `s = ±1` such that some dual `y ≥ 0` stays feasible
//! at `λ0 + sθ` and proves `x*` within `1 + ε` of the optimum there:
//!
//! ```text
//! max θ   s.t.  Aᵀy + sθ·1 ≤ c(λ0)
//!               (1+ε)(bᵀy + (λ0+sθ)K) ≥ c(λ0)ᵀx* + sθ·dᵀx* + (λ0+sθ)K
//!               θ ≤ distance from λ0 to the domain edge,   y, θ ≥ 0
//! ```
//!
//! with `d = −1` over all pairs and `K` the objective's constant per unit λ.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{build_lp, dot, solve_lp, LpProblem, LpSolution};
use crate::objectives::Objective;
use crate::rational::{choose2, int, serde_q, Rational};
use crate::simplex::{Status, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    fn sign(self) -> Rational {
        match self {
            Direction::Forward => Rational::one(),
            Direction::Backward => -Rational::one(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaInterval {
    #[serde(with = "serde_q")]
    pub lo: Rational,
    #[serde(with = "serde_q")]
    pub hi: Rational,
    /// `lo` was cut off by the domain edge rather than by the ratio bound.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub lo_clamped: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub hi_clamped: bool,
}

impl LambdaInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        LambdaInterval {
            lo,
            hi,
            lo_clamped: false,
            hi_clamped: false,
        }
    }

    pub fn contains(&self, lambda: &Rational) -> bool {
        self.lo <= *lambda && *lambda <= self.hi
    }

    pub fn contains_interval(&self, other: &LambdaInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub theta: Rational,
    /// The step reached the domain edge (`λ = 0` or `λ = 1`).
    pub clamped: bool,
}

/// `K` with `LP value = cᵀx + λ·K`.
fn unit_constant(g: &Graph, objective: Objective) -> Rational {
    match objective {
        Objective::LamPrime => choose2(g.n()),
        Objective::LamCC => choose2(g.n()) - int(g.m() as i64),
    }
}

fn ensure_optimal(x: &LpSolution, p: &LpProblem, g: &Graph) -> Result<()> {
    if x.x.len() != p.num_vars() {
        return Err(Error::precondition("solution does not match the graph"));
    }
    if x.lambda == p.lambda {
        if let Some(y) = &x.dual {
            if p.is_feasible(&x.x) && p.certifies(&x.x, y) {
                return Ok(());
            }
        }
    }
    let best = solve_lp(p, g)?;
    if p.is_feasible(&x.x) && p.value(&x.x) == best.value {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "solution is not optimal at λ = {}",
            p.lambda
        )))
    }
}

/// Largest `θ` keeping `x*` a `(1+ε)`-approximation for `objective` on the
/// segment from `λ0` to `λ0 + sθ`.
pub fn orlp(
    x: &LpSolution,
    dir: Direction,
    lambda0: &Rational,
    eps: &Rational,
    g: &Graph,
    objective: Objective,
) -> Result<Step> {
    if eps.is_negative() {
        return Err(Error::precondition(format!("ε = {eps} is negative")));
    }
    let p = build_lp(g, lambda0)?;
    ensure_optimal(x, &p, g)?;

    let s = dir.sign();
    let rows = p.num_rows();
    let vars = p.num_vars();
    let theta = rows;
    let k = unit_constant(g, objective);
    let one_eps = Rational::one() + eps;
    let d_x: Rational = -x.x.iter().sum::<Rational>();
    let cap = match dir {
        Direction::Forward => Rational::one() - lambda0,
        Direction::Backward => lambda0.clone(),
    };

    let width = rows + 1;
    let mut a = vec![vec![Rational::zero(); width]; vars + 2];
    let mut rhs = Vec::with_capacity(vars + 2);
    for (r, row) in p.rows.iter().enumerate() {
        for &(v, coef) in row {
            a[v][r] = int(coef as i64);
        }
    }
    for (v, a_v) in a.iter_mut().take(vars).enumerate() {
        a_v[theta] = s.clone();
        rhs.push(p.c[v].clone());
    }
    let eps_row = &mut a[vars];
    for (r, b_r) in p.b.iter().enumerate() {
        if !b_r.is_zero() {
            eps_row[r] = -(&one_eps * b_r);
        }
    }
    eps_row[theta] = -(&s * (eps * &k - &d_x));
    rhs.push(eps * lambda0 * &k - dot(&p.c, &x.x));
    a[vars + 1][theta] = Rational::one();
    rhs.push(cap.clone());

    let mut objective_row = vec![Rational::zero(); width];
    objective_row[theta] = Rational::one();
    let mut t = Tableau::new(a, rhs, objective_row);
    match t.solve() {
        Status::Optimal => {}
        other => return Err(Error::internal(format!("range LP reported {other:?}"))),
    }
    let step = t.primal().swap_remove(theta);
    Ok(Step {
        clamped: step == cap,
        theta: step,
    })
}

/// `[λ0 − θ−, λ0 + θ+]`: the λ-range on which `x*` is a `(1+ε)`-approximation.
/// With `ε = 0` this is the optimal range.
pub fn eps_range(
    x: &LpSolution,
    lambda0: &Rational,
    eps: &Rational,
    g: &Graph,
    objective: Objective,
) -> Result<LambdaInterval> {
    let up = orlp(x, Direction::Forward, lambda0, eps, g, objective)?;
    let down = orlp(x, Direction::Backward, lambda0, eps, g, objective)?;
    Ok(LambdaInterval {
        lo: lambda0 - &down.theta,
        hi: lambda0 + &up.theta,
        lo_clamped: down.clamped,
        hi_clamped: up.clamped,
    })
}
