//! Interval arithmetic with exact rational endpoints.
//!
//! Every operation returns the smallest rational-endpoint interval containing
//! all pointwise results, so polynomial evaluation over a box encloses every
//! value the polynomial takes on it.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Term};
use crate::rational::{pow_rational, render_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Interval> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(value: Rational) -> Interval {
        Interval {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn zero() -> Interval {
        Interval::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, value: &Rational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_disjoint_from(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Division; the divisor must not contain zero.
    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::InvalidInterval);
        }
        let quotients = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        let lo = quotients.iter().min().unwrap().clone();
        let hi = quotients.iter().max().unwrap().clone();
        Ok(Interval { lo, hi })
    }

    /// Tight power: even powers of sign-crossing intervals clamp to zero.
    pub fn pow(&self, exp: u32) -> Interval {
        if exp == 0 {
            return Interval::point(Rational::one());
        }
        let a = pow_rational(&self.lo, exp);
        let b = pow_rational(&self.hi, exp);
        if exp % 2 == 0 && self.lo.is_negative() && self.hi.is_positive() {
            return Interval {
                lo: Rational::zero(),
                hi: a.max(b),
            };
        }
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn render(&self) -> String {
        format!(
            "[{}, {}]",
            render_rational(&self.lo),
            render_rational(&self.hi)
        )
    }
}

/// Per-variable product of intervals, components in ring declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBox {
    intervals: Vec<Interval>,
}

impl SolutionBox {
    pub fn new(intervals: Vec<Interval>) -> SolutionBox {
        SolutionBox { intervals }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn arity(&self) -> usize {
        self.intervals.len()
    }

    pub fn contains_point(&self, point: &[Rational]) -> bool {
        point.len() == self.intervals.len()
            && self
                .intervals
                .iter()
                .zip(point)
                .all(|(iv, value)| iv.contains(value))
    }

    pub fn is_subset_of(&self, other: &SolutionBox) -> bool {
        self.intervals.len() == other.intervals.len()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| a.is_subset_of(b))
    }

    pub fn is_disjoint_from(&self, other: &SolutionBox) -> bool {
        self.intervals
            .iter()
            .zip(&other.intervals)
            .any(|(a, b)| a.is_disjoint_from(b))
    }

    pub fn max_width(&self) -> Rational {
        self.intervals
            .iter()
            .map(|iv| iv.width())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Interval extension of a polynomial over a box, evaluated in factored
/// Horner form variable by variable for tight enclosures. The result
/// contains f(p) for every point p in the box.
pub fn eval_on_box(f: &Polynomial, b: &SolutionBox) -> Result<Interval> {
    if b.arity() != f.ring().arity() {
        return Err(Error::ArityMismatch {
            expected: f.ring().arity(),
            got: b.arity(),
        });
    }
    let term_refs: Vec<&Term> = f.terms().iter().collect();
    Ok(horner(&term_refs, 0, b))
}

fn horner(terms: &[&Term], var: usize, b: &SolutionBox) -> Interval {
    if terms.is_empty() {
        return Interval::zero();
    }
    if var == b.arity() {
        // distinct monomials agreeing on every variable are one term
        debug_assert!(terms.len() == 1);
        return Interval::point(terms[0].coeff.clone());
    }
    // group by the exponent of `var`, descending
    let mut groups: Vec<(u32, Vec<&Term>)> = Vec::new();
    let mut sorted: Vec<&Term> = terms.to_vec();
    sorted.sort_by(|a, b| b.mono.exps()[var].cmp(&a.mono.exps()[var]));
    for t in sorted {
        let e = t.mono.exps()[var];
        match groups.last_mut() {
            Some((exp, bucket)) if *exp == e => bucket.push(t),
            _ => groups.push((e, vec![t])),
        }
    }
    let x = &b.intervals()[var];
    let mut acc = Interval::zero();
    let mut prev_exp: Option<u32> = None;
    for (e, bucket) in &groups {
        let inner = horner(bucket, var + 1, b);
        acc = match prev_exp {
            None => inner,
            Some(pe) => acc.mul(&x.pow(pe - e)).add(&inner),
        };
        prev_exp = Some(*e);
    }
    if let Some(last) = prev_exp {
        if last > 0 {
            acc = acc.mul(&x.pow(last));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::rational::{rat, rat_int};
    use crate::repl::parse_polynomial;

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> Interval {
        Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    #[test]
    fn endpoint_addition() {
        let a = iv((1, 1), (2, 1));
        let b = iv((3, 1), (4, 1));
        assert_eq!(a.add(&b), iv((4, 1), (6, 1)));
    }

    #[test]
    fn product_scans_endpoint_products() {
        let a = iv((-1, 1), (2, 1));
        let b = iv((3, 1), (4, 1));
        assert_eq!(a.mul(&b), iv((-4, 1), (8, 1)));
    }

    #[test]
    fn even_power_of_sign_crossing_interval_clamps_at_zero() {
        let a = iv((-1, 1), (2, 1));
        assert_eq!(a.pow(2), iv((0, 1), (4, 1)));
        // odd powers are monotone
        assert_eq!(a.pow(3), iv((-1, 1), (8, 1)));
        // negative-only intervals flip under even powers
        assert_eq!(iv((-3, 1), (-2, 1)).pow(2), iv((4, 1), (9, 1)));
    }

    #[test]
    fn invalid_interval_is_rejected() {
        assert!(Interval::new(rat_int(1), rat_int(0)).is_err());
    }

    #[test]
    fn division_requires_nonzero_divisor() {
        let a = iv((1, 1), (2, 1));
        assert!(a.div(&iv((-1, 1), (1, 1))).is_err());
        assert_eq!(a.div(&iv((2, 1), (4, 1))).unwrap(), iv((1, 4), (1, 1)));
    }

    #[test]
    fn constant_evaluates_to_point_interval() {
        let ring = Ring::lex(&["y", "x"]).unwrap();
        let c = Polynomial::constant(&ring, rat(7, 2));
        let b = SolutionBox::new(vec![iv((-1, 1), (1, 1)), iv((-5, 1), (5, 1))]);
        assert_eq!(eval_on_box(&c, &b).unwrap(), iv((7, 2), (7, 2)));
    }

    #[test]
    fn projection_returns_the_component() {
        let ring = Ring::lex(&["y", "x"]).unwrap();
        let x = parse_polynomial(&ring, "x").unwrap();
        let b = SolutionBox::new(vec![iv((0, 1), (1, 1)), iv((-3, 2), (5, 2))]);
        assert_eq!(eval_on_box(&x, &b).unwrap(), iv((-3, 2), (5, 2)));
    }

    #[test]
    fn ellipse_enclosure_contains_zero_near_a_solution() {
        // box around the intersection point (x, y) = (1, 0)
        let ring = Ring::lex(&["y", "x"]).unwrap();
        let f = parse_polynomial(&ring, "2x2-xy+2y2-2").unwrap();
        let b = SolutionBox::new(vec![iv((-1, 10), (1, 10)), iv((9, 10), (11, 10))]);
        let enclosure = eval_on_box(&f, &b).unwrap();
        assert!(enclosure.contains_zero());
        // and the exact value at the solution is inside the enclosure
        let value = f.evaluate(&[rat_int(0), rat_int(1)]).unwrap();
        assert!(enclosure.contains(&value));
    }

    #[test]
    fn box_point_membership_and_nesting() {
        let outer = SolutionBox::new(vec![iv((-1, 1), (1, 1)), iv((0, 1), (4, 1))]);
        let inner = SolutionBox::new(vec![iv((-1, 2), (1, 2)), iv((1, 1), (2, 1))]);
        assert!(inner.is_subset_of(&outer));
        assert!(!outer.is_subset_of(&inner));
        assert!(outer.contains_point(&[rat_int(0), rat_int(2)]));
        assert!(!outer.contains_point(&[rat_int(2), rat_int(2)]));
    }
}
