//! Certified isolation of the real solutions of a polynomial system into
//! boxes, one solution per box.
//!
//! The lex Groebner basis must be triangular: a univariate element in the
//! smallest variable and, for each further variable, an element linear in
//! that variable with coefficients in smaller variables. Roots of the
//! univariate member are isolated with Sturm counting; the remaining
//! coordinates follow by exact interval back-substitution through the linear
//! members.

use num::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{groebner, GroebnerBasis, Ideal};
use crate::interval::{eval_on_box, Interval, SolutionBox};
use crate::poly::{Polynomial, RingRef};
use crate::rational::{render_rational, Rational};
use crate::sturm::{isolate_roots, refine_root, SturmChain};

/// How many times a root interval may be halved while waiting for a linear
/// member's leading coefficient to exclude zero before the system is
/// declared non-zero-dimensional.
const REFINE_CAP: usize = 100;

/// Triangular shape extracted from a reduced lex basis: the univariate
/// member in the smallest variable plus, per remaining variable, the pair
/// (lead coefficient, constant part) of the element linear in it.
struct TriangularSystem {
    ring: RingRef,
    univariate: Polynomial,
    // for variable index i < arity-1: linears[i] = (c1, c0) with
    // element = c1 * v_i + c0, both in variables smaller than v_i
    linears: Vec<(Polynomial, Polynomial)>,
}

fn extract_triangular(basis: &GroebnerBasis) -> Result<TriangularSystem> {
    let ring = basis.ring().clone();
    let arity = ring.arity();
    let smallest = arity - 1;
    let mut univariate: Option<Polynomial> = None;
    let mut linears: Vec<Option<(Polynomial, Polynomial)>> = vec![None; smallest];
    for element in basis.elements() {
        let support = element.support_vars();
        let lead_var = match support.first() {
            Some(&v) => v,
            None => {
                return Err(Error::NonTriangular(
                    "basis contains a nonzero constant".into(),
                ))
            }
        };
        if lead_var == smallest {
            if univariate.replace(element.clone()).is_some() {
                return Err(Error::NonTriangular(format!(
                    "two basis elements are univariate in {}",
                    ring.vars()[smallest]
                )));
            }
            continue;
        }
        let name = &ring.vars()[lead_var];
        if element.degree_in(lead_var) != Some(1) {
            return Err(Error::NonTriangular(format!(
                "basis element {element} is not linear in {name}"
            )));
        }
        let (c1, c0) = split_linear(element, lead_var)?;
        if linears[lead_var].replace((c1, c0)).is_some() {
            return Err(Error::NonTriangular(format!(
                "two basis elements are led by {name}"
            )));
        }
    }
    let univariate = univariate.ok_or_else(|| {
        Error::NotZeroDimensional(format!(
            "no basis element is univariate in {}",
            ring.vars()[smallest]
        ))
    })?;
    let mut resolved = Vec::with_capacity(smallest);
    for (i, slot) in linears.into_iter().enumerate() {
        match slot {
            Some(pair) => resolved.push(pair),
            None => {
                return Err(Error::NotZeroDimensional(format!(
                    "no basis element determines {}",
                    ring.vars()[i]
                )))
            }
        }
    }
    Ok(TriangularSystem {
        ring,
        univariate,
        linears: resolved,
    })
}

/// Writes `element = c1 * v + c0` with `c1`, `c0` free of `v`.
fn split_linear(element: &Polynomial, var: usize) -> Result<(Polynomial, Polynomial)> {
    let ring = element.ring();
    let mut c1_terms = Vec::new();
    let mut c0_terms = Vec::new();
    for t in element.terms() {
        let mut exps = t.mono.exps().to_vec();
        match exps[var] {
            0 => c0_terms.push((t.coeff.clone(), exps)),
            1 => {
                exps[var] = 0;
                c1_terms.push((t.coeff.clone(), exps));
            }
            _ => {
                return Err(Error::NonTriangular(format!(
                    "element {element} has degree > 1 in {}",
                    ring.vars()[var]
                )))
            }
        }
    }
    Ok((
        Polynomial::from_terms(ring, c1_terms)?,
        Polynomial::from_terms(ring, c0_terms)?,
    ))
}

/// Back-substitutes one isolated root interval through the linear members,
/// bisecting the root interval whenever a leading-coefficient enclosure
/// still straddles zero or a derived coordinate is wider than `width`.
fn back_substitute(
    tri: &TriangularSystem,
    chain: &SturmChain,
    root: &Interval,
    width: &Rational,
) -> Result<SolutionBox> {
    let arity = tri.ring.arity();
    let mut root = root.clone();
    let mut refinements = 0usize;
    'attempt: loop {
        let mut intervals = vec![Interval::zero(); arity];
        intervals[arity - 1] = root.clone();
        // larger variables in ascending order of size: indices arity-2 .. 0
        for i in (0..arity - 1).rev() {
            let partial = SolutionBox::new(intervals.clone());
            let (c1, c0) = &tri.linears[i];
            let lead = eval_on_box(c1, &partial)?;
            if lead.contains_zero() {
                refinements += 1;
                if refinements > REFINE_CAP {
                    return Err(Error::NotZeroDimensional(format!(
                        "leading coefficient of the element for {} cannot be bounded away from zero",
                        tri.ring.vars()[i]
                    )));
                }
                root = refine_root(chain, &root, &(root.width() / two()))?;
                continue 'attempt;
            }
            let value = eval_on_box(c0, &partial)?.neg().div(&lead)?;
            if &value.width() > width {
                refinements += 1;
                if refinements > REFINE_CAP {
                    return Err(Error::NotZeroDimensional(format!(
                        "coordinate {} does not converge under refinement",
                        tri.ring.vars()[i]
                    )));
                }
                root = refine_root(chain, &root, &(root.width() / two()))?;
                continue 'attempt;
            }
            intervals[i] = value;
        }
        return Ok(SolutionBox::new(intervals));
    }
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// Isolates every real solution of the system into a box of component widths
/// at most `width`, exactly one solution per box. Boxes are ordered by the
/// position of the root of the univariate member, ascending.
pub fn solve_system(ideal: &Ideal, width: &Rational) -> Result<Vec<SolutionBox>> {
    if !width.is_positive() {
        return Err(Error::InvalidWidth);
    }
    let basis = groebner(ideal)?;
    if basis
        .elements()
        .iter()
        .any(|e| e.is_constant() && !e.is_zero())
    {
        // the ideal is the whole ring: no solutions
        return Ok(Vec::new());
    }
    let tri = extract_triangular(&basis)?;
    let chain = SturmChain::new(&tri.univariate)?;
    let roots = isolate_roots(&tri.univariate, width)?;
    let mut boxes = Vec::with_capacity(roots.len());
    for root in &roots {
        boxes.push(back_substitute(&tri, &chain, root, width)?);
    }
    Ok(boxes)
}

/// Shrinks a box produced by [`solve_system`] until every component width is
/// at most `width`; the result is a sub-box still containing the solution.
pub fn refine_box(ideal: &Ideal, b: &SolutionBox, width: &Rational) -> Result<SolutionBox> {
    if !width.is_positive() {
        return Err(Error::InvalidWidth);
    }
    if &b.max_width() <= width {
        return Ok(b.clone());
    }
    let basis = groebner(ideal)?;
    let tri = extract_triangular(&basis)?;
    let chain = SturmChain::new(&tri.univariate)?;
    let arity = tri.ring.arity();
    let root = refine_root(&chain, &b.intervals()[arity - 1], width)?;
    let refined = back_substitute(&tri, &chain, &root, width)?;
    debug_assert!(refined.is_subset_of(b), "refinement must nest");
    Ok(refined)
}

/// JSON form: an ordered list of objects mapping each variable name to
/// `[lo, hi]` rendered as exact "n/d" strings.
pub fn boxes_to_json(ring: &RingRef, boxes: &[SolutionBox]) -> Value {
    let list: Vec<Value> = boxes
        .iter()
        .map(|b| {
            let mut obj = serde_json::Map::new();
            for (name, iv) in ring.vars().iter().zip(b.intervals()) {
                obj.insert(
                    name.clone(),
                    json!([render_rational(iv.lo()), render_rational(iv.hi())]),
                );
            }
            Value::Object(obj)
        })
        .collect();
    Value::Array(list)
}

/// REPL table form, one numbered line per box.
pub fn boxes_to_table(ring: &RingRef, boxes: &[SolutionBox]) -> Vec<String> {
    boxes
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let parts: Vec<String> = ring
                .vars()
                .iter()
                .zip(b.intervals())
                .map(|(name, iv)| format!("{name} in {}", iv.render()))
                .collect();
            format!("box {}: {}", k + 1, parts.join(", "))
        })
        .collect()
}
