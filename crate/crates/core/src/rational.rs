//! Exact rational helpers: parsing, the `"num/den"` text form, float
//! snapping, and integer logarithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `C(k, 2)` as a rational.
pub fn choose2(k: usize) -> Rational {
    let k = k as i64;
    int(k * (k - 1) / 2)
}

/// Parses `"a/b"`, an integer, or a decimal literal (`"0.125"`, `"-1.5e-3"`)
/// into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse("empty rational"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad numerator in {text:?}")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(s).ok_or_else(|| Error::parse(format!("not a rational: {text:?}")))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all: String = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all.parse::<BigInt>().ok()?);
    let shift = exponent - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Some(if negative { -value } else { value })
}

/// Canonical text form, always `"num/den"` with `den ≥ 1`.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational with denominator at most `max_den` (best approximation
/// by continued fractions). Returns `None` for non-finite input.
pub fn snap_f64(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let exact = Rational::from_float(x)?;
    let negative = exact.is_negative();
    let target = exact.abs();
    let floor = target.floor();
    let mut frac = &target - &floor;
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::one(), floor.to_integer());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let max_den = BigInt::from(max_den);
    while !frac.is_zero() {
        let inv = frac.recip();
        let a = inv.floor().to_integer();
        let k_next = &a * &k + &k_prev;
        if k_next > max_den {
            break;
        }
        let h_next = &a * &h + &h_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        frac = &inv - inv.floor();
    }
    let q = Rational::new(h, k);
    Some(if negative { -q } else { q })
}

/// Smallest integer `k` with `base^k ≥ value`. Requires `base > 1`, `value > 0`.
pub fn ceil_log(base: &Rational, value: &Rational) -> i64 {
    assert!(*base > Rational::one() && value.is_positive());
    let mut k = 0i64;
    let mut power = Rational::one();
    if *value > power {
        while power < *value {
            power *= base;
            k += 1;
        }
    } else {
        // descend while base^(k-1) still reaches value
        loop {
            let lower = &power / base;
            if lower < *value {
                break;
            }
            power = lower;
            k -= 1;
        }
    }
    k
}

/// Largest integer `k` with `base^k ≤ value`. Requires `base > 1`, `value > 0`.
pub fn floor_log(base: &Rational, value: &Rational) -> i64 {
    let k = ceil_log(base, value);
    let power = if k >= 0 {
        num_traits::pow(base.clone(), k as usize)
    } else {
        num_traits::pow(base.clone(), (-k) as usize).recip()
    };
    if power == *value {
        k
    } else {
        k - 1
    }
}

/// `⌈q⌉` for a nonnegative rational, as an integer.
pub fn ceil_to_u64(q: &Rational) -> u64 {
    let (d, r) = q.numer().div_rem(q.denom());
    let base = d.to_u64().unwrap_or(u64::MAX);
    if r.is_zero() {
        base
    } else {
        base + 1
    }
}

/// Serde adapter storing a rational as its `"num/den"` string.
pub mod serde_q {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for an optional rational; `None` is `null`.
pub mod serde_q_opt {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Serde adapter for an optional vector of rationals.
pub mod serde_q_vec_opt {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_seq(v.iter().map(format_rational)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        let raw: Option<Vec<String>> = Option::deserialize(d)?;
        raw.map(|v| {
            v.iter()
                .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                .collect()
        })
        .transpose()
    }
}
