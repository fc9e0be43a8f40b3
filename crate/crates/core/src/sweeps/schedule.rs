use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::objectives::Objective;
use crate::orlp::LambdaInterval;
use crate::rational::{floor_log, int, ratio, Rational};

/// Largest λ a sweep solves at: `1 − 2⁻²⁰`.
pub fn schedule_ceiling() -> Rational {
    Rational::one() - ratio(1, 1 << 20)
}

/// `min(4/n², 1/2)`. Below `4/n²` a cover is not needed; the cap keeps the
/// domain nonempty for `n = 2`.
pub fn default_floor(n: usize) -> Rational {
    let n = n as i64;
    ratio(4, n * n).min(ratio(1, 2))
}

/// `λ_1 = 4/n²`, `λ_k = (1+ε)²λ_{k−1}` for `k ≤ q` with
/// `q = ⌊log_{(1+ε)²}(n²/4)⌋ + 1`, then `λ_{q+1} = 1/(1+ε)`. Values are
/// returned in that order and may reach 1.
pub fn geometric_schedule(n: usize, eps: &Rational) -> Result<Vec<Rational>> {
    if !eps.is_positive() {
        return Err(Error::precondition(format!("ε = {eps} must be positive")));
    }
    if n < 2 {
        return Err(Error::precondition(format!(
            "schedule needs n ≥ 2, got {n}"
        )));
    }
    let growth = Rational::one() + eps;
    let step = &growth * &growth;
    let n = n as i64;
    let q = floor_log(&step, &ratio(n * n, 4)) + 1;
    let mut out = Vec::with_capacity(q as usize + 1);
    let mut lambda = ratio(4, n * n);
    for _ in 0..q {
        out.push(lambda.clone());
        lambda *= &step;
    }
    out.push(growth.recip());
    Ok(out)
}

/// Range on which an LP optimum at `μ` stays a `(1+ε)`-approximation by
/// monotonicity and concavity of the LP curve alone: `[μ/(1+ε), μ(1+ε)]`
/// for LambdaPrime, the same in odds `λ/(1−λ)` for LambdaCC. Capped at 1.
pub fn transfer_interval(mu: &Rational, eps: &Rational, objective: Objective) -> LambdaInterval {
    let growth = Rational::one() + eps;
    match objective {
        Objective::LamPrime => {
            let hi = mu * &growth;
            let capped = hi >= Rational::one();
            LambdaInterval {
                lo: mu / &growth,
                hi: if capped { Rational::one() } else { hi },
                lo_clamped: false,
                hi_clamped: capped,
            }
        }
        Objective::LamCC => LambdaInterval::new(
            mu / (&growth - eps * mu),
            &growth * mu / (int(1) + eps * mu),
        ),
    }
}
