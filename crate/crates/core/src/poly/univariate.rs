//! Univariate helpers: dense coefficient form, Euclidean division, GCD and
//! squarefree part. Inputs live in a (possibly multivariate) ring; these
//! operations require the combined support to touch at most one variable.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{Polynomial, RingRef};

/// The single support variable shared by the given polynomials, if any.
/// Constants impose no constraint; all-constant input yields `None`.
pub(crate) fn common_univariate_var(polys: &[&Polynomial]) -> Result<Option<usize>> {
    let mut var: Option<usize> = None;
    for p in polys {
        for v in p.support_vars() {
            match var {
                None => var = Some(v),
                Some(existing) if existing == v => {}
                Some(_) => return Err(Error::MultivariateInput),
            }
        }
    }
    Ok(var)
}

/// Ascending dense coefficients of `f` viewed in the variable `var`.
pub(crate) fn to_dense(f: &Polynomial, var: usize) -> Vec<Rational> {
    let deg = f.degree_in(var).unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for t in f.terms() {
        coeffs[t.mono.exps()[var] as usize] += &t.coeff;
    }
    trim(&mut coeffs);
    coeffs
}

pub(crate) fn from_dense(ring: &RingRef, var: usize, coeffs: &[Rational]) -> Polynomial {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            let mut exps = vec![0u32; ring.arity()];
            exps[var] = e as u32;
            (c.clone(), exps)
        })
        .collect();
    Polynomial::from_terms(ring, terms).expect("exponent vectors constructed with ring arity")
}

fn trim(coeffs: &mut Vec<Rational>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

pub(crate) fn dense_is_zero(coeffs: &[Rational]) -> bool {
    coeffs.is_empty()
}

/// Euclidean division of dense univariate polynomials: `(quotient, remainder)`
/// with `deg r < deg g`. Panics if `g` is zero.
pub(crate) fn dense_div_rem(f: &[Rational], g: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!dense_is_zero(g), "division by the zero polynomial");
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    if rem.len() < g.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dg];
    let lead = &g[dg];
    while rem.len() >= g.len() {
        let dr = rem.len() - 1;
        let factor = &rem[dr] / lead;
        let shift = dr - dg;
        for (i, gc) in g.iter().enumerate() {
            let delta = &factor * gc;
            rem[shift + i] -= delta;
        }
        quot[shift] = factor;
        // the top coefficient cancels exactly
        rem.pop();
        trim(&mut rem);
        if dense_is_zero(&rem) {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

fn dense_monic(coeffs: &mut [Rational]) {
    if let Some(lead) = coeffs.last().cloned() {
        for c in coeffs.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Monic greatest common divisor via the Euclidean algorithm.
///
/// Both inputs must involve at most one common variable. `gcd(f, 0)` is the
/// monic multiple of `f`; `gcd(0, 0)` is zero.
pub fn univariate_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !super::same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let var = common_univariate_var(&[f, g])?;
    let ring = f.ring();
    if f.is_zero() && g.is_zero() {
        return Ok(Polynomial::zero(ring));
    }
    let var = var.unwrap_or(0);
    let mut a = to_dense(f, var);
    let mut b = to_dense(g, var);
    while !dense_is_zero(&b) {
        let (_, r) = dense_div_rem(&a, &b);
        a = b;
        b = r;
    }
    dense_monic(&mut a);
    Ok(from_dense(ring, var, &a))
}

/// `f / gcd(f, f')`, made monic: the product of the distinct irreducible
/// factors of a univariate nonzero `f`.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = common_univariate_var(&[f])?.unwrap_or(0);
    let deriv = f.derivative(var)?;
    let gcd = univariate_gcd(f, &deriv)?;
    let mut quot = {
        let (q, r) = dense_div_rem(&to_dense(f, var), &to_dense(&gcd, var));
        debug_assert!(dense_is_zero(&r), "gcd must divide f exactly");
        q
    };
    dense_monic(&mut quot);
    Ok(from_dense(f.ring(), var, &quot))
}
