//! Buchberger's algorithm, multivariate division, reduced Groebner bases,
//! and lex elimination.
//!
//! Pair selection follows the normal strategy: among pending pairs pick the
//! one whose lead-monomial lcm is smallest under the ring order, ties broken
//! by the lexicographically smallest index pair. The product criterion
//! (coprime lead monomials) prunes pairs; divisions are fully tail-reduced.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, Polynomial, RingRef};
use crate::rational::Rational;

/// A finite generating set; zero generators are dropped at construction and
/// an all-zero set is rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }
}

/// Output of Buchberger's algorithm. `reduced` marks the unique reduced
/// monic form: autoreduced elements sorted ascending by lead monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Basis elements involving only the trailing `keep` variables of the
    /// declaration order: a generating set of the elimination ideal.
    pub fn eliminate<S: AsRef<str>>(&self, keep: &[S]) -> Result<Vec<Polynomial>> {
        if !self.reduced {
            return Err(Error::BasisNotReduced);
        }
        let vars = self.ring.vars();
        if keep.len() > vars.len() {
            return Err(Error::NotASuffix);
        }
        let offset = vars.len() - keep.len();
        for (k, name) in keep.iter().enumerate() {
            if vars[offset + k] != name.as_ref() {
                return Err(Error::NotASuffix);
            }
        }
        Ok(self
            .elements
            .iter()
            .filter(|e| e.support_vars().iter().all(|&v| v >= offset))
            .cloned()
            .collect())
    }

    /// Transcript form: one `_[k]=<poly>` line per element, elements printed
    /// with cleared denominators.
    pub fn transcript_lines(&self) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let shown = e.integer_normalize().expect("basis elements are nonzero");
                format!("_[{}]={}", k + 1, shown)
            })
            .collect()
    }
}

/// S-polynomial: scale both inputs so their lead terms meet at the lcm of the
/// lead monomials and cancel.
pub fn spoly(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let lt_f = f.lead_term()?;
    let lt_g = g.lead_term()?;
    let lcm = lt_f.mono.lcm(&lt_g.mono)?;
    let left = f.mul_term(&(Rational::one() / &lt_f.coeff), &lcm.quotient(&lt_f.mono)?)?;
    let right = g.mul_term(&(Rational::one() / &lt_g.coeff), &lcm.quotient(&lt_g.mono)?)?;
    left.sub(&right)
}

/// Result of multivariate division: `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Multivariate division with deterministic divisor selection (first divisor
/// in sequence order whose lead monomial divides). No monomial of the
/// remainder is divisible by any divisor's lead monomial.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Division> {
    if divisors.is_empty() {
        return Err(Error::EmptyDivisorSet);
    }
    for d in divisors {
        if !same_ring(d.ring(), f.ring()) {
            return Err(Error::RingMismatch);
        }
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let ring = f.ring();
    let lead_monos: Vec<&Monomial> = divisors
        .iter()
        .map(|d| d.lead_monomial().expect("divisors are nonzero"))
        .collect();
    let mut quotients = vec![Polynomial::zero(ring); divisors.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut pending = f.clone();
    while let Ok(lt) = pending.lead_term() {
        let lt_coeff = lt.coeff.clone();
        let lt_mono = lt.mono.clone();
        match lead_monos
            .iter()
            .position(|m| m.divides(&lt_mono).expect("same ring implies same arity"))
        {
            Some(i) => {
                let factor_mono = lt_mono.quotient(lead_monos[i])?;
                let factor_coeff = &lt_coeff / divisors[i].lead_coeff()?;
                let piece = Polynomial::from_terms(
                    ring,
                    vec![(factor_coeff.clone(), factor_mono.exps().to_vec())],
                )?;
                quotients[i] = quotients[i].add(&piece)?;
                pending = pending.sub(&divisors[i].mul_term(&factor_coeff, &factor_mono)?)?;
            }
            None => {
                let head = Polynomial::from_terms(
                    ring,
                    vec![(lt_coeff.clone(), lt_mono.exps().to_vec())],
                )?;
                remainder = remainder.add(&head)?;
                pending = pending.sub(&head)?;
            }
        }
    }
    Ok(Division {
        remainder,
        quotients,
    })
}

fn pair_lcm(basis: &[Polynomial], i: usize, j: usize) -> Monomial {
    basis[i]
        .lead_monomial()
        .expect("basis elements are nonzero")
        .lcm(basis[j].lead_monomial().expect("basis elements are nonzero"))
        .expect("shared ring")
}

fn coprime_leads(basis: &[Polynomial], i: usize, j: usize) -> bool {
    let a = basis[i].lead_monomial().expect("nonzero");
    let b = basis[j].lead_monomial().expect("nonzero");
    a.exps().iter().zip(b.exps()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Buchberger's completion: adjoin normal forms of S-polynomials until every
/// pair reduces to zero. The returned basis is not yet reduced.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.integer_normalize())
        .collect::<Result<_>>()?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm, then smallest index pair
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                pair_lcm(&basis, a.0, a.1)
                    .cmp(&pair_lcm(&basis, b.0, b.1))
                    .then(a.cmp(b))
            })
            .map(|(idx, _)| idx)
            .expect("pairs nonempty");
        let (i, j) = pairs.swap_remove(best);
        if coprime_leads(&basis, i, j) {
            continue;
        }
        let s = spoly(&basis[i], &basis[j])?;
        let reduced = normal_form(&s, &basis)?.remainder;
        if !reduced.is_zero() {
            let new_index = basis.len();
            basis.push(reduced.integer_normalize()?);
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
        }
    }
    Ok(GroebnerBasis {
        ring: ideal.ring().clone(),
        elements: basis,
        reduced: false,
    })
}

/// Checks the S-polynomial criterion on a candidate basis.
fn verify_groebner(elements: &[Polynomial]) -> Result<()> {
    for j in 1..elements.len() {
        for i in 0..j {
            if coprime_leads(elements, i, j) {
                continue;
            }
            let s = spoly(&elements[i], &elements[j])?;
            if s.is_zero() {
                continue;
            }
            if !normal_form(&s, elements)?.remainder.is_zero() {
                return Err(Error::NotGroebnerBasis { i, j });
            }
        }
    }
    Ok(())
}

/// Minimal autoreduced monic basis, sorted ascending by lead monomial; the
/// unique reduced basis of the ideal for the ring order. Errors if the input
/// does not satisfy the S-polynomial criterion.
pub fn reduce_basis(basis: &GroebnerBasis) -> Result<GroebnerBasis> {
    verify_groebner(&basis.elements)?;
    // drop elements whose lead monomial another element's lead divides
    let n = basis.elements.len();
    let mut alive = vec![true; n];
    for i in 0..n {
        let lm_i = basis.elements[i].lead_monomial()?;
        for j in 0..n {
            if i == j || !alive[j] {
                continue;
            }
            let lm_j = basis.elements[j].lead_monomial()?;
            if lm_j.divides(lm_i)? && (lm_j != lm_i || j < i) {
                alive[i] = false;
                break;
            }
        }
    }
    let mut elements: Vec<Polynomial> = basis
        .elements
        .iter()
        .zip(&alive)
        .filter(|(_, keep)| **keep)
        .map(|(e, _)| e.monic())
        .collect::<Result<_>>()?;
    // autoreduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..elements.len() {
            let others: Vec<Polynomial> = elements
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| e.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let r = normal_form(&elements[i], &others)?.remainder.monic()?;
            if r != elements[i] {
                elements[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    elements.sort_by(|a, b| {
        a.lead_monomial()
            .expect("nonzero")
            .cmp(b.lead_monomial().expect("nonzero"))
    });
    Ok(GroebnerBasis {
        ring: basis.ring.clone(),
        elements,
        reduced: true,
    })
}

/// Computes the reduced Groebner basis of an ideal.
pub fn groebner(ideal: &Ideal) -> Result<GroebnerBasis> {
    reduce_basis(&buchberger(ideal)?)
}

/// Ideal membership: the normal form against a Groebner basis vanishes.
pub fn ideal_contains(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let basis = buchberger(ideal)?;
    Ok(normal_form(f, basis.elements())?.remainder.is_zero())
}
