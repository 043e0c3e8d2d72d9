//! Exact rational scalars.
//!
//! Coefficients and interval endpoints are arbitrary-precision fractions,
//! kept canonical (reduced, positive denominator) by `num`'s `BigRational`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

pub type Rational = BigRational;

/// Rational from an integer pair; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "n", "n/d", or "-n/d" with arbitrary-precision parts.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Renders as "n" for integers and "n/d" otherwise.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponentiation by squaring for non-negative integer exponents.
pub fn pow_rational(base: &Rational, exp: u32) -> Rational {
    let mut result = Rational::one();
    let mut base = base.clone();
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rational("-3/4"), Some(rat(-3, 4)));
        assert_eq!(parse_rational("7"), Some(rat_int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(render_rational(&rat(6, 4)), "3/2");
        assert_eq!(render_rational(&rat(-8, 2)), "-4");
    }

    #[test]
    fn canonical_form() {
        let r = rat(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn powers() {
        assert_eq!(pow_rational(&rat(2, 3), 0), rat_int(1));
        assert_eq!(pow_rational(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(pow_rational(&rat(-1, 2), 2), rat(1, 4));
    }
}
