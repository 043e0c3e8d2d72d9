//! Sturm sequences and certified real-root isolation.
//!
//! The chain starts with the squarefree part of the input and its derivative;
//! each later element is the negated Euclidean remainder of its two
//! predecessors. Sign variations are counted with zero values dropped, which
//! makes the count exact on half-open intervals (lo, hi] even when an
//! endpoint is a root.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::univariate::{
    common_univariate_var, dense_div_rem, dense_is_zero, from_dense, to_dense,
};
use crate::poly::{squarefree_part, Polynomial};
use crate::rational::Rational;

/// Signed remainder sequence of a squarefree univariate polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    var: usize,
    chain: Vec<Polynomial>,
    // positively scaled dense copies for fast sign evaluation
    dense: Vec<Vec<Rational>>,
}

impl SturmChain {
    /// Builds the chain for the squarefree part of `p`; `p` must be nonzero
    /// and univariate.
    pub fn new(p: &Polynomial) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let var = common_univariate_var(&[p])?.unwrap_or(p.ring().arity() - 1);
        let head = squarefree_part(p)?;
        let ring = p.ring();
        let mut chain = vec![head.clone()];
        if !head.is_constant() {
            let mut prev = to_dense(&head, var);
            let mut curr = to_dense(&head.derivative(var)?, var);
            chain.push(from_dense(ring, var, &curr));
            while !dense_is_zero(&curr) {
                let (_, rem) = dense_div_rem(&prev, &curr);
                if dense_is_zero(&rem) {
                    break;
                }
                let negated: Vec<Rational> = rem.iter().map(|c| -c).collect();
                chain.push(from_dense(ring, var, &negated));
                prev = curr;
                curr = negated;
            }
        }
        let dense = chain
            .iter()
            .map(|p| positive_scale(to_dense(p, var)))
            .collect();
        Ok(SturmChain { var, chain, dense })
    }

    /// The squarefree head of the chain.
    pub fn head(&self) -> &Polynomial {
        &self.chain[0]
    }

    pub fn chain(&self) -> &[Polynomial] {
        &self.chain
    }

    pub fn var(&self) -> usize {
        self.var
    }

    fn head_vanishes_at(&self, x: &Rational) -> bool {
        eval_dense(&self.dense[0], x).is_zero()
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut prev_sign = 0i8;
        for coeffs in &self.dense {
            let v = eval_dense(coeffs, x);
            let sign = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                1i8
            } else {
                -1i8
            };
            if prev_sign != 0 && sign != prev_sign {
                count += 1;
            }
            prev_sign = sign;
        }
        count
    }

    /// Number of distinct real roots of the squarefree head in (lo, hi].
    pub fn count_roots(&self, iv: &Interval) -> usize {
        let at_lo = self.variations(iv.lo());
        let at_hi = self.variations(iv.hi());
        at_lo.saturating_sub(at_hi)
    }
}

fn eval_dense(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Scale by a positive rational to clear denominators and common factors;
/// signs are preserved so variation counts are unaffected.
fn positive_scale(coeffs: Vec<Rational>) -> Vec<Rational> {
    use num::BigInt;
    use num::Integer;
    if coeffs.iter().all(|c| c.is_zero()) {
        return coeffs;
    }
    let mut den_lcm = BigInt::one();
    for c in &coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in &coeffs {
        num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
    }
    let factor = Rational::new(den_lcm, num_gcd);
    coeffs.into_iter().map(|c| c * &factor).collect()
}

/// Cauchy root bound 1 + max|a_i / a_n|: every real root lies strictly
/// inside (-bound, bound).
pub fn cauchy_bound(p: &Polynomial) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = common_univariate_var(&[p])?.unwrap_or(p.ring().arity() - 1);
    let coeffs = to_dense(p, var);
    let lead = coeffs.last().expect("nonzero polynomial");
    let max_ratio = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max_ratio)
}

/// A split point strictly inside (lo, hi) at which the chain head does not
/// vanish: the midpoint when possible, otherwise the 1/3 point, 1/4 point,
/// and so on. Terminates because the head has finitely many roots.
fn split_point(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    for k in 2u32.. {
        let candidate = lo + &width / Rational::from_integer(k.into());
        if !chain.head_vanishes_at(&candidate) {
            return candidate;
        }
    }
    unreachable!("a polynomial has finitely many roots")
}

/// Isolates every real root of `p` into pairwise disjoint closed intervals
/// of width at most `width`, each certified to contain exactly one root.
/// The initial search range comes from the Cauchy bound.
pub fn isolate_roots(p: &Polynomial, width: &Rational) -> Result<Vec<Interval>> {
    if !width.is_positive() {
        return Err(Error::InvalidWidth);
    }
    let chain = SturmChain::new(p)?;
    if chain.head().is_constant() {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(chain.head())?;
    let full = Interval::new(-&bound, bound.clone())?;
    let total = chain.count_roots(&full);
    let mut work: Vec<(Rational, Rational, usize)> = vec![(-&bound, bound, total)];
    let mut found: Vec<Interval> = Vec::new();
    while let Some((lo, hi, count)) = work.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && &(&hi - &lo) <= width {
            found.push(Interval::new(lo, hi)?);
            continue;
        }
        let mid = split_point(&chain, &lo, &hi);
        let left = chain.count_roots(&Interval::new(lo.clone(), mid.clone())?);
        work.push((mid.clone(), hi, count - left));
        work.push((lo, mid, left));
    }
    found.sort_by(|a, b| a.lo().cmp(b.lo()));
    separate(&chain, &mut found)?;
    Ok(found)
}

/// Shrinks an isolating interval one bisection step, keeping its root.
fn shrink(chain: &SturmChain, iv: &Interval) -> Result<Interval> {
    let mid = split_point(chain, iv.lo(), iv.hi());
    let left = Interval::new(iv.lo().clone(), mid.clone())?;
    if chain.count_roots(&left) == 1 {
        Ok(left)
    } else {
        Interval::new(mid, iv.hi().clone())
    }
}

/// Split points are never roots, so adjacent isolating intervals can only
/// touch at a non-root endpoint; shrink until their closures are disjoint.
fn separate(chain: &SturmChain, intervals: &mut [Interval]) -> Result<()> {
    for i in 1..intervals.len() {
        while intervals[i - 1].hi() >= intervals[i].lo() {
            intervals[i - 1] = shrink(chain, &intervals[i - 1])?;
            if intervals[i - 1].hi() < intervals[i].lo() {
                break;
            }
            intervals[i] = shrink(chain, &intervals[i])?;
        }
    }
    Ok(())
}

/// Narrows an isolating interval by repeated bisection until its width is at
/// most `width`; the interval must contain exactly one root of the chain head.
pub fn refine_root(chain: &SturmChain, iv: &Interval, width: &Rational) -> Result<Interval> {
    if !width.is_positive() {
        return Err(Error::InvalidWidth);
    }
    if chain.count_roots(iv) != 1 {
        return Err(Error::NotIsolating);
    }
    let mut current = iv.clone();
    while &current.width() > width {
        current = shrink(chain, &current)?;
    }
    Ok(current)
}
