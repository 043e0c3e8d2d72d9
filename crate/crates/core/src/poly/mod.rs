//! Sparse multivariate polynomials over the rationals with lexicographic
//! term order.
//!
//! A [`Ring`] fixes the variable names; declaration order defines precedence,
//! so in a ring `(y, x)` every power of `y` dominates every power of `x`.
//! Term sequences are kept strictly descending at all times, which makes the
//! lead term O(1) and division deterministic.

mod display;
pub(crate) mod univariate;

pub use univariate::{squarefree_part, univariate_gcd};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{pow_rational, Rational};

/// Monomial order tag. Only lexicographic order is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Lex,
}

/// A polynomial ring over Q: an ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
    order: Order,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    /// Lex ring with the given variable names, first name largest.
    ///
    /// Names must be nonempty, pairwise distinct, and purely alphabetic so
    /// that the short-notation printer stays unambiguous.
    pub fn lex<S: AsRef<str>>(names: &[S]) -> Result<RingRef> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        let mut vars = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(Error::InvalidRing(format!(
                    "variable name '{name}' must be a nonempty alphabetic identifier"
                )));
            }
            if vars.iter().any(|v| v == name) {
                return Err(Error::InvalidRing(format!("duplicate variable '{name}'")));
            }
            vars.push(name.to_string());
        }
        Ok(Arc::new(Ring {
            vars,
            order: Order::Lex,
        }))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// Lexicographic comparison of two monomials of this ring's arity.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.check_arity(a)?;
        self.check_arity(b)?;
        Ok(a.cmp(b))
    }

    fn check_arity(&self, m: &Monomial) -> Result<()> {
        if m.exps.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: m.exps.len(),
            });
        }
        Ok(())
    }

    /// True when every variable name is a single letter, which is what the
    /// digit-suffix short notation requires.
    pub fn short_notation(&self) -> bool {
        self.vars.iter().all(|v| v.len() == 1)
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Dense exponent vector; `exps[i]` is the exponent of the ring's i-th
/// variable. Derived `Ord` is exactly the lex order because variables are
/// stored in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Monomial {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_arity(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_arity(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }

    /// Componentwise `<=`: does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_arity(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// `self / other`; errors unless `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self)? {
            return Err(Error::MonomialNotDivisible);
        }
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn check_same_arity(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::ArityMismatch {
                expected: self.exps.len(),
                got: other.exps.len(),
            });
        }
        Ok(())
    }
}

/// A nonzero coefficient attached to a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

/// Sparse polynomial: terms strictly descending under the ring order, no
/// zero coefficients, no duplicate monomials. The zero polynomial is the
/// empty term sequence.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, value: Rational) -> Polynomial {
        if value.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: value,
                mono: Monomial::one(ring.arity()),
            }],
        }
    }

    pub fn var(ring: &RingRef, index: usize) -> Result<Polynomial> {
        Self::var_pow(ring, index, 1)
    }

    pub fn var_pow(ring: &RingRef, index: usize, exp: u32) -> Result<Polynomial> {
        if index >= ring.arity() {
            return Err(Error::VariableIndex {
                index,
                arity: ring.arity(),
            });
        }
        let mut exps = vec![0; ring.arity()];
        exps[index] = exp;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: Rational::one(),
                mono: Monomial::new(exps),
            }],
        })
    }

    /// Canonicalizing constructor: sorts descending, merges duplicate
    /// monomials, drops zero coefficients.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Rational, Vec<u32>)>) -> Result<Polynomial> {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (coeff, exps) in terms {
            if exps.len() != ring.arity() {
                return Err(Error::ArityMismatch {
                    expected: ring.arity(),
                    got: exps.len(),
                });
            }
            let entry = map.entry(Monomial::new(exps)).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        Ok(Self::from_map(ring, map))
    }

    fn from_map(ring: &RingRef, map: BTreeMap<Monomial, Rational>) -> Polynomial {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    /// Maximal term under the ring order; errors on the zero polynomial.
    pub fn lead_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn lead_monomial(&self) -> Result<&Monomial> {
        Ok(&self.lead_term()?.mono)
    }

    pub fn lead_coeff(&self) -> Result<&Rational> {
        Ok(&self.lead_term()?.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.total_degree()).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.exps()[var]).max()
    }

    /// Indices of the variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let arity = self.ring.arity();
        (0..arity)
            .filter(|&i| self.terms.iter().any(|t| t.mono.exps()[i] > 0))
            .collect()
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    /// Merge of two descending term lists; `negate` subtracts `other`.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(ta), Some(tb)) => match ta.mono.cmp(&tb.mono) {
                    Ordering::Greater => {
                        terms.push((*a.next().unwrap()).clone());
                    }
                    Ordering::Less => {
                        let t = b.next().unwrap();
                        let coeff = if negate { -&t.coeff } else { t.coeff.clone() };
                        terms.push(Term {
                            coeff,
                            mono: t.mono.clone(),
                        });
                    }
                    Ordering::Equal => {
                        let ta = a.next().unwrap();
                        let tb = b.next().unwrap();
                        let coeff = if negate {
                            &ta.coeff - &tb.coeff
                        } else {
                            &ta.coeff + &tb.coeff
                        };
                        if !coeff.is_zero() {
                            terms.push(Term {
                                coeff,
                                mono: ta.mono.clone(),
                            });
                        }
                    }
                },
                (Some(_), None) => {
                    terms.push((*a.next().unwrap()).clone());
                }
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    let coeff = if negate { -&t.coeff } else { t.coeff.clone() };
                    terms.push(Term {
                        coeff,
                        mono: t.mono.clone(),
                    });
                }
                (None, None) => break,
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for ta in &self.terms {
            for tb in &other.terms {
                let mono = ta.mono.mul(&tb.mono)?;
                let prod = &ta.coeff * &tb.coeff;
                let entry = map.entry(mono).or_insert_with(Rational::zero);
                *entry += prod;
            }
        }
        Ok(Self::from_map(&self.ring, map))
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * factor,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiply by a single term. Order is preserved because monomial
    /// multiplication is strictly monotone under lex.
    pub fn mul_term(&self, coeff: &Rational, mono: &Monomial) -> Result<Polynomial> {
        if coeff.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: &t.coeff * coeff,
                mono: t.mono.mul(mono)?,
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Result<Polynomial> {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Exact value at a rational point, coordinates in declaration order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    v *= pow_rational(&point[i], e);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Scalar multiple with integer coefficients, content 1, and positive
    /// lead coefficient; this is the display normalization.
    pub fn integer_normalize(&self) -> Result<Polynomial> {
        use num::BigInt;
        use num::Integer;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut num_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coeff.numer() * (&den_lcm / t.coeff.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.terms[0].coeff.is_negative() {
            factor = -factor;
        }
        Ok(self.scale(&factor))
    }

    /// Divide by the lead coefficient; errors on zero.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.lead_coeff()?.clone();
        Ok(self.scale(&(Rational::one() / lc)))
    }

    /// Formal partial derivative with respect to the `var`-th variable.
    pub fn derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ring.arity() {
            return Err(Error::VariableIndex {
                index: var,
                arity: self.ring.arity(),
            });
        }
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.mono.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = t.mono.exps().to_vec();
            exps[var] = e - 1;
            terms.push(Term {
                coeff: &t.coeff * Rational::from_integer(e.into()),
                mono: Monomial::new(exps),
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }
}

#[cfg(test)]
mod tests;
