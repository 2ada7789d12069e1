//! Exact rational helpers on top of [`BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Exact rational number in canonical form (positive denominator, reduced).
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // very large numerator or denominator: scale down by bit length
            let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
            let shift = shift.max(0) as u64;
            let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift).to_f64().unwrap_or(0.0);
            if d == 0.0 {
                if n.is_sign_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            } else {
                n / d
            }
        }
    }
}

/// Exact conversion of a finite double into a rational.
pub fn rat_from_f64(v: f64) -> Option<Rat> {
    Rat::from_float(v)
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an integer, a decimal (`0.25`) or a fraction (`-3/4`) exactly.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rat(n)?;
        let d = parse_rat(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = Rat::new(numer, denom);
    Some(if neg { -r } else { r })
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`
/// (ties broken by smallest absolute numerator).
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rat::zero()
    }
}

// Stern-Brocot descent via continued fractions, 0 < lo <= hi.
fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() || (&fl + Rat::one()) <= *hi {
        return fl + Rat::one();
    }
    // same integer part; recurse on reciprocals of fractional parts
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    let inner = simplest_positive(&hi_f.recip(), &lo_f.recip());
    fl + inner.recip()
}

/// Integer part of `log2(|r|)`, rounded down; `None` for zero.
pub fn log2_floor(r: &Rat) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let n = r.numer().abs();
    let d = r.denom().clone();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // adjust so that 2^e <= n/d < 2^(e+1)
    let two = BigInt::from(2);
    let cmp = |e: i64| -> Ordering {
        if e >= 0 {
            n.cmp(&(&d * num_traits::pow(two.clone(), e as usize)))
        } else {
            (&n * num_traits::pow(two.clone(), (-e) as usize)).cmp(&d)
        }
    };
    while cmp(e) == Ordering::Less {
        e -= 1;
    }
    while cmp(e + 1) != Ordering::Less {
        e += 1;
    }
    Some(e)
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals_exactly() {
        assert_eq!(parse_rat("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse_rat("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("12"), Some(rat(12)));
        assert_eq!(parse_rat(".5"), Some(ratio(1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("abc"), None);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_between(&ratio(14, 10), &ratio(15, 10)), ratio(3, 2));
        assert_eq!(simplest_between(&ratio(-5, 3), &ratio(-4, 3)), ratio(-3, 2));
        assert_eq!(simplest_between(&ratio(-1, 3), &ratio(1, 3)), rat(0));
        assert_eq!(simplest_between(&ratio(7, 5), &ratio(7, 5)), ratio(7, 5));
        assert_eq!(simplest_between(&ratio(141, 100), &ratio(142, 100)), ratio(17, 12));
    }

    #[test]
    fn log2_bounds() {
        assert_eq!(log2_floor(&rat(8)), Some(3));
        assert_eq!(log2_floor(&ratio(1, 3)), Some(-2));
        assert_eq!(log2_floor(&rat(-5)), Some(2));
    }

    #[test]
    fn f64_conversion_handles_huge() {
        let big = Rat::new(num_traits::pow(BigInt::from(10), 400), num_traits::pow(BigInt::from(10), 399));
        assert!((rat_to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
