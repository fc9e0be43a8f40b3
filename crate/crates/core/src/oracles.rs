//! Closed forms for rings and stars, the LambdaCC schedule, and the
//! lower-bound calculator for ring covers.
//!
//! Quantities involving square roots are `f64`; everything else is exact.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::graph::pairs;
use crate::lp::LpSolution;
use crate::objectives::CostLine;
use crate::orlp::LambdaInterval;
use crate::rational::{ceil_log, choose2, int, ratio, Rational};

/// `M = 4√2/3`, the sandwich constant between `q` and the ring optimum.
pub const MAGNANTI_M: f64 = 4.0 * std::f64::consts::SQRT_2 / 3.0;

fn ring_n(k: u32) -> Result<i64> {
    if !(2..=30).contains(&k) {
        return Err(Error::precondition(format!(
            "ring exponent k = {k} outside 2..=30"
        )));
    }
    Ok(1i64 << k)
}

fn ring_n_closed_form(k: u32) -> Result<i64> {
    if k < 3 {
        return Err(Error::precondition(format!(
            "ring closed forms need k ≥ 3, got {k}"
        )));
    }
    ring_n(k)
}

fn check_ring_range(n: i64, lambda: &Rational) -> Result<()> {
    let lo = ratio(8, n * n);
    if *lambda < lo || *lambda > ratio(1, 2) {
        return Err(Error::precondition(format!(
            "λ = {lambda} outside [{lo}, 1/2]"
        )));
    }
    Ok(())
}

/// `LP(λ, 1/t) = (n/t)(1 + λ·C(t, 2))`: every ring edge at distance `1/t`.
pub fn ring_lp_at_t(n: i64, lambda: &Rational, t: i64) -> Rational {
    ratio(n, t) * (Rational::one() + lambda * choose2(t as usize))
}

/// Ring LP optimum `min_{t=1..n} (n/t)(1 + λ·C(t, 2))` and its smallest
/// minimizing `t`, for `λ ∈ [8/n², 1/2]`.
pub fn ring_lp(k: u32, lambda: &Rational) -> Result<(Rational, i64)> {
    let n = ring_n_closed_form(k)?;
    check_ring_range(n, lambda)?;
    Ok(ring_lp_unchecked(n, lambda))
}

pub(crate) fn ring_lp_unchecked(n: i64, lambda: &Rational) -> (Rational, i64) {
    let mut best = (ring_lp_at_t(n, lambda, 1), 1);
    for t in 2..=n {
        let v = ring_lp_at_t(n, lambda, t);
        if v < best.0 {
            best = (v, t);
        }
    }
    best
}

/// `g(λ) = n(√(2λ) − λ/2)` for `λ ∈ [0, 1]`.
pub fn ring_g(k: u32, lambda: f64) -> Result<f64> {
    let n = ring_n(k)? as f64;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::precondition(format!("λ = {lambda} outside [0, 1]")));
    }
    Ok(n * ((2.0 * lambda).sqrt() - lambda / 2.0))
}

/// `q(λ) = (3n/4)√(2λ)` for `λ ∈ [8/n², 1/2]`.
pub fn ring_q(k: u32, lambda: f64) -> Result<f64> {
    let n = ring_n(k)? as f64;
    let lo = 8.0 / (n * n);
    // the lower edge is a rational; allow its float image to round either way
    if lambda < lo * (1.0 - 1e-12) || lambda > 0.5 {
        return Err(Error::precondition(format!(
            "λ = {lambda} outside [{lo}, 1/2]"
        )));
    }
    Ok(0.75 * n * (2.0 * lambda).sqrt())
}

/// `λ_i = 2 / 2^{2(k−i)}` for `i = 1..k−1`.
pub fn special_lambda(k: u32, i: u32) -> Result<Rational> {
    ring_n_closed_form(k)?;
    if i == 0 || i >= k {
        return Err(Error::precondition(format!(
            "special index {i} outside 1..{}",
            k - 1
        )));
    }
    Ok(ratio(2, 1i64 << (2 * (k - i))))
}

/// `t_i = 2^{k−i}`, the cluster size optimal at `λ_i`.
pub fn special_t(k: u32, i: u32) -> Result<i64> {
    special_lambda(k, i)?;
    Ok(1i64 << (k - i))
}

/// Piecewise upper bound built from the special solutions: on
/// `[λ_i, 2λ_i)` it uses distance `1/t_i`, on `[2λ_i, λ_{i+1})` distance
/// `1/t_{i+1}`, and at `λ_{k−1}` distance `1/t_{k−1}`.
pub fn ring_f(k: u32, lambda: &Rational) -> Result<Rational> {
    let n = ring_n_closed_form(k)?;
    check_ring_range(n, lambda)?;
    let last = special_lambda(k, k - 1)?;
    if *lambda == last {
        return Ok(ring_lp_at_t(n, lambda, special_t(k, k - 1)?));
    }
    for i in 1..k - 1 {
        let lo = special_lambda(k, i)?;
        let hi = special_lambda(k, i + 1)?;
        if lo <= *lambda && *lambda < hi {
            let t = if *lambda < &lo * int(2) {
                special_t(k, i)?
            } else {
                special_t(k, i + 1)?
            };
            return Ok(ring_lp_at_t(n, lambda, t));
        }
    }
    unreachable!("λ inside [λ_1, λ_(k-1)] falls in some bracket")
}

/// `γ(x) = (2x² − 1 + 2x√(x² − 1))²` for `x ≥ 1`.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return Err(Error::precondition(format!("γ needs x ≥ 1, got {x}")));
    }
    let inner = 2.0 * x * x - 1.0 + 2.0 * x * (x * x - 1.0).sqrt();
    Ok(inner * inner)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RingLowerBound {
    pub b: u64,
    pub gamma: f64,
    pub m: f64,
}

/// Minimum number of LP solutions any `p`-approximate cover of the ring on
/// `2^k` nodes needs: `B = ⌈(2/3)·log_{γ(pM)}(n/4)⌉`.
pub fn ring_lower_bound(k: u32, p: &Rational) -> Result<RingLowerBound> {
    if *p <= Rational::one() {
        return Err(Error::precondition(format!(
            "approximation factor p = {p} must exceed 1"
        )));
    }
    let n = ring_n(k)? as f64;
    let pm = crate::rational::to_f64(p) * MAGNANTI_M;
    let g = gamma(pm)?;
    let raw = (2.0 / 3.0) * (n / 4.0).ln() / g.ln();
    // a raw value within float noise of an integer is that integer
    let nearest = raw.round();
    let b = if (raw - nearest).abs() < 1e-9 {
        nearest
    } else {
        raw.ceil()
    };
    Ok(RingLowerBound {
        b: b.max(0.0) as u64,
        gamma: g,
        m: MAGNANTI_M,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct StarHalfSolution {
    /// `x_{0i} = 1/2`, all leaf pairs at distance 1.
    pub x: Vec<Rational>,
    pub line: CostLine,
    /// Open interval `(1/(n−1), 1/2)` on which the solution is optimal.
    pub valid: LambdaInterval,
}

impl StarHalfSolution {
    pub fn at(&self, lambda: Rational) -> LpSolution {
        LpSolution {
            value: self.line.at(&lambda),
            lambda,
            x: self.x.clone(),
            line: self.line.clone(),
            dual: None,
            certified: false,
        }
    }
}

/// The half-integral star solution and its line `((n−1)/2, (n−1)/2)`.
pub fn star_lp_solution(n: usize) -> Result<StarHalfSolution> {
    if n < 3 {
        return Err(Error::precondition(format!("star needs n ≥ 3, got {n}")));
    }
    let half = ratio(1, 2);
    let x = pairs(n)
        .map(|(i, _)| {
            if i == 0 {
                half.clone()
            } else {
                Rational::one()
            }
        })
        .collect();
    let side = ratio(n as i64 - 1, 2);
    Ok(StarHalfSolution {
        x,
        line: CostLine::new(side.clone(), side),
        valid: LambdaInterval::new(ratio(1, n as i64 - 1), half),
    })
}

/// `λ_i = γ_i/(1+γ_i)` with `γ_1 = 1/n²`, `γ_{i+1} = (1+ε)γ_i`, for
/// `i = 1..q` where `q = ⌈log_{1+ε} n⁴⌉ + 1`.
pub fn lamcc_schedule(n: usize, eps: &Rational) -> Result<Vec<Rational>> {
    if !eps.is_positive() {
        return Err(Error::precondition(format!("ε = {eps} must be positive")));
    }
    if n < 2 {
        return Err(Error::precondition(format!(
            "schedule needs n ≥ 2, got {n}"
        )));
    }
    let n = n as i64;
    let growth = Rational::one() + eps;
    let q = ceil_log(&growth, &int(n * n * n * n)) + 1;
    let mut gamma = ratio(1, n * n);
    let mut out = Vec::with_capacity(q as usize);
    for _ in 0..q {
        out.push(&gamma / (Rational::one() + &gamma));
        gamma *= &growth;
    }
    Ok(out)
}

/// `δ = (λ'/λ)·((1−λ)/(1−λ'))`, the LambdaCC transfer factor between `λ ≤ λ'`.
pub fn lamcc_ratio(lambda: &Rational, next: &Rational) -> Result<Rational> {
    if !lambda.is_positive() || lambda > next || *next >= Rational::one() {
        return Err(Error::precondition(format!(
            "need 0 < {lambda} ≤ {next} < 1"
        )));
    }
    Ok((next / lambda) * ((Rational::one() - lambda) / (Rational::one() - next)))
}

/// `γ = λ/(1−λ)`, the LambdaCC odds of a parameter.
pub fn lamcc_odds(lambda: &Rational) -> Rational {
    lambda / (Rational::one() - lambda)
}

/// One grid point of the ring sandwich `q ≤ g ≤ LP ≤ √2·g ≤ M·q`.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichPoint {
    pub lambda: Rational,
    pub q: f64,
    pub g: f64,
    pub lp: f64,
    pub holds: bool,
}

/// Evaluates the sandwich at `points` evenly spaced λ over `[8/n², 1/2]`,
/// with relative tolerance `1e-9` on each link.
pub fn ring_sandwich(k: u32, points: usize) -> Result<Vec<SandwichPoint>> {
    let n = ring_n_closed_form(k)?;
    if points < 2 {
        return Err(Error::precondition(format!(
            "sandwich grid needs at least 2 points, got {points}"
        )));
    }
    let lo = ratio(8, n * n);
    let step = (ratio(1, 2) - &lo) / int(points as i64 - 1);
    let sqrt2 = std::f64::consts::SQRT_2;
    let le = |a: f64, b: f64| a <= b + 1e-9 * a.abs().max(b.abs());
    (0..points)
        .map(|j| {
            let lambda = &lo + &step * int(j as i64);
            let lf = crate::rational::to_f64(&lambda);
            let q = ring_q(k, lf)?;
            let g = ring_g(k, lf)?;
            let lp = crate::rational::to_f64(&ring_lp_unchecked(n, &lambda).0);
            let chain = [q, g, lp, sqrt2 * g, MAGNANTI_M * q];
            let holds = chain.windows(2).all(|w| le(w[0], w[1]));
            Ok(SandwichPoint {
                lambda,
                q,
                g,
                lp,
                holds,
            })
        })
        .collect()
}
