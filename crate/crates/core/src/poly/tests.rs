use std::cmp::Ordering;
use std::collections::HashMap;

use num::{One, Signed, Zero};
use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::rational::{rat, rat_int, Rational};
use crate::repl::parse_polynomial;

fn yx() -> RingRef {
    Ring::lex(&["y", "x"]).unwrap()
}

fn zyx() -> RingRef {
    Ring::lex(&["z", "y", "x"]).unwrap()
}

fn p(ring: &RingRef, text: &str) -> Polynomial {
    parse_polynomial(ring, text).unwrap()
}

fn mono(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

// ---------------------------------------------------------------------------
// independent oracle: polynomials as exponent-vector -> coefficient maps
// ---------------------------------------------------------------------------

type CoeffMap = HashMap<Vec<u32>, Rational>;

fn to_map(f: &Polynomial) -> CoeffMap {
    f.terms()
        .iter()
        .map(|t| (t.mono.exps().to_vec(), t.coeff.clone()))
        .collect()
}

fn map_add(a: &CoeffMap, b: &CoeffMap) -> CoeffMap {
    let mut out = a.clone();
    for (exps, coeff) in b {
        let entry = out.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn map_mul(a: &CoeffMap, b: &CoeffMap) -> CoeffMap {
    let mut out = CoeffMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(exps).or_insert_with(Rational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

// ---------------------------------------------------------------------------
// ring, order, and constructor basics
// ---------------------------------------------------------------------------

#[test]
fn ring_validation() {
    assert!(Ring::lex::<&str>(&[]).is_err());
    assert!(Ring::lex(&["x", "x"]).is_err());
    assert!(Ring::lex(&["x1"]).is_err());
    assert!(Ring::lex(&[""]).is_err());
    let ring = Ring::lex(&["y", "x"]).unwrap();
    assert_eq!(ring.arity(), 2);
    assert_eq!(ring.var_index("x"), Some(1));
}

#[test]
fn lex_ignores_total_degree() {
    // in ring (y,x): y > x^2 because y is the larger variable
    let ring = yx();
    let y = mono(&[1, 0]);
    let x2 = mono(&[0, 2]);
    assert_eq!(ring.cmp_monomials(&y, &x2).unwrap(), Ordering::Greater);
    assert_eq!(ring.cmp_monomials(&y, &y).unwrap(), Ordering::Equal);
    // (2,0) vs (1,3): first position decides
    let y2 = mono(&[2, 0]);
    let yx3 = mono(&[1, 3]);
    assert_eq!(ring.cmp_monomials(&y2, &yx3).unwrap(), Ordering::Greater);
    assert!(ring.cmp_monomials(&y, &mono(&[1])).is_err());
}

#[test]
fn canonical_construction_merges_and_drops() {
    let ring = yx();
    let f = Polynomial::from_terms(
        &ring,
        vec![
            (rat_int(2), vec![0, 2]),
            (rat_int(3), vec![1, 0]),
            (rat_int(-2), vec![0, 2]),
            (rat_int(0), vec![1, 1]),
        ],
    )
    .unwrap();
    assert_eq!(f, p(&ring, "3y"));
    assert!(Polynomial::from_terms(&ring, vec![(rat_int(1), vec![1])]).is_err());
}

// ---------------------------------------------------------------------------
// arithmetic against hand-computed and oracle-checked values
// ---------------------------------------------------------------------------

#[test]
fn addition_identities() {
    let ring = yx();
    let f = p(&ring, "2x2-xy+2y2-2");
    assert_eq!(f.add(&Polynomial::zero(&ring)).unwrap(), f);
    assert!(f.add(&f.neg()).unwrap().is_zero());
}

#[test]
fn term_merge_example() {
    let ring = yx();
    let left = p(&ring, "2x2-xy");
    let right = p(&ring, "xy-2");
    let sum = left.add(&right).unwrap();
    assert_eq!(sum, p(&ring, "2x2-2"));
    assert_eq!(to_map(&sum), map_add(&to_map(&left), &to_map(&right)));
}

#[test]
fn multiplication_identities() {
    let ring = yx();
    let f = p(&ring, "2x2-xy+2y2-2");
    assert_eq!(f.mul(&Polynomial::one(&ring)).unwrap(), f);
    assert!(f.mul(&Polynomial::zero(&ring)).unwrap().is_zero());
}

#[test]
fn product_of_linear_factors_is_the_session_quartic() {
    let ring = yx();
    let factors = ["2x-1", "2x+1", "x-1", "x+1"];
    let mut acc = Polynomial::one(&ring);
    let mut acc_map = to_map(&acc);
    for text in factors {
        let f = p(&ring, text);
        acc_map = map_mul(&acc_map, &to_map(&f));
        acc = acc.mul(&f).unwrap();
    }
    assert_eq!(acc, p(&ring, "4x4-5x2+1"));
    assert_eq!(to_map(&acc), acc_map);
}

#[test]
fn ring_mismatch_is_rejected() {
    let a = yx();
    let b = zyx();
    let f = p(&a, "x");
    let g = p(&b, "x");
    assert_eq!(f.add(&g).unwrap_err(), Error::RingMismatch);
    assert_eq!(f.mul(&g).unwrap_err(), Error::RingMismatch);
}

// ---------------------------------------------------------------------------
// lead terms and monomial operations
// ---------------------------------------------------------------------------

#[test]
fn lead_term_under_lex() {
    let ring = yx();
    // y dominates any power of x
    let f = p(&ring, "3y+8x3-8x");
    let lt = f.lead_term().unwrap();
    assert_eq!(lt.coeff, rat_int(3));
    assert_eq!(lt.mono, mono(&[1, 0]));
    // constants have the unit monomial
    let c = p(&ring, "5");
    assert_eq!(c.lead_term().unwrap().mono, Monomial::one(2));
    // scanning all terms of an ellipse equation
    let g = p(&ring, "2x2-xy+2y2-2");
    assert_eq!(g.lead_term().unwrap().coeff, rat_int(2));
    assert_eq!(g.lead_term().unwrap().mono, mono(&[2, 0]));
    assert_eq!(
        Polynomial::zero(&ring).lead_term().unwrap_err(),
        Error::ZeroPolynomial
    );
}

#[test]
fn monomial_lcm_divides_quotient() {
    let y2 = mono(&[2, 0]);
    let yx = mono(&[1, 1]);
    assert_eq!(y2.lcm(&yx).unwrap(), mono(&[2, 1]));
    let one = Monomial::one(2);
    assert!(one.divides(&y2).unwrap());
    assert!(!y2.divides(&yx).unwrap());
    let y2x3 = mono(&[2, 3]);
    assert_eq!(y2x3.quotient(&yx).unwrap(), mono(&[1, 2]));
    assert_eq!(yx.quotient(&y2).unwrap_err(), Error::MonomialNotDivisible);
    assert!(y2.lcm(&mono(&[1])).is_err());
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

#[test]
fn evaluate_at_intersection_points() {
    let ring = yx();
    let f = p(&ring, "2x2-xy+2y2-2");
    // (x, y) = (1, 0) solves the first ellipse: 2 - 0 + 0 - 2
    assert!(f
        .evaluate(&[rat_int(0), rat_int(1)])
        .unwrap()
        .is_zero());
    let g = p(&ring, "2x2-3xy+3y2-2");
    // (x, y) = (1/2, 1) solves the second one
    assert!(g.evaluate(&[rat_int(1), rat(1, 2)]).unwrap().is_zero());
    assert!(Polynomial::zero(&ring)
        .evaluate(&[rat_int(3), rat(-7, 2)])
        .unwrap()
        .is_zero());
    assert_eq!(
        f.evaluate(&[rat_int(1)]).unwrap_err(),
        Error::ArityMismatch { expected: 2, got: 1 }
    );
}

// ---------------------------------------------------------------------------
// normalization
// ---------------------------------------------------------------------------

#[test]
fn integer_normalize_matches_the_session_output() {
    let ring = yx();
    let monic_form = p(&ring, "y+8/3x3-8/3x");
    assert_eq!(monic_form.integer_normalize().unwrap(), p(&ring, "3y+8x3-8x"));
    assert_eq!(p(&ring, "-x").integer_normalize().unwrap(), p(&ring, "x"));
    assert_eq!(
        p(&ring, "6x2-4").integer_normalize().unwrap(),
        p(&ring, "3x2-2")
    );
    assert_eq!(
        Polynomial::zero(&ring).integer_normalize().unwrap_err(),
        Error::ZeroPolynomial
    );
}

#[test]
fn monic_divides_by_the_lead_coefficient() {
    let ring = yx();
    let f = p(&ring, "4x4-5x2+1");
    assert_eq!(f.monic().unwrap(), p(&ring, "x4-5/4x2+1/4"));
}

// ---------------------------------------------------------------------------
// derivatives, gcd, squarefree part
// ---------------------------------------------------------------------------

#[test]
fn derivative_power_rule() {
    let ring = yx();
    let f = p(&ring, "4x4-5x2+1");
    let x = ring.var_index("x").unwrap();
    assert_eq!(f.derivative(x).unwrap(), p(&ring, "16x3-10x"));
    let g = p(&ring, "2x2-xy+2y2-2");
    let y = ring.var_index("y").unwrap();
    assert_eq!(g.derivative(y).unwrap(), p(&ring, "4y-x"));
    assert!(f.derivative(5).is_err());
}

#[test]
fn gcd_with_zero_is_monic() {
    let ring = yx();
    let f = p(&ring, "2x2-2");
    let zero = Polynomial::zero(&ring);
    assert_eq!(univariate_gcd(&f, &zero).unwrap(), p(&ring, "x2-1"));
    assert_eq!(univariate_gcd(&zero, &f).unwrap(), p(&ring, "x2-1"));
    assert!(univariate_gcd(&zero, &zero).unwrap().is_zero());
}

#[test]
fn gcd_of_common_factor() {
    let ring = yx();
    let f = p(&ring, "(x-1)(x+1)");
    let g = p(&ring, "x-1");
    assert_eq!(univariate_gcd(&f, &g).unwrap(), p(&ring, "x-1"));
}

#[test]
fn the_session_eliminant_is_squarefree() {
    let ring = yx();
    let f = p(&ring, "4x4-5x2+1");
    let df = p(&ring, "16x3-10x");
    assert_eq!(univariate_gcd(&f, &df).unwrap(), Polynomial::one(&ring));
    assert_eq!(squarefree_part(&f).unwrap(), p(&ring, "x4-5/4x2+1/4"));
}

#[test]
fn squarefree_part_strips_multiplicity() {
    let ring = yx();
    let f = p(&ring, "(x-1)^2");
    assert_eq!(squarefree_part(&f).unwrap(), p(&ring, "x-1"));
    assert_eq!(
        squarefree_part(&Polynomial::zero(&ring)).unwrap_err(),
        Error::ZeroPolynomial
    );
}

#[test]
fn gcd_rejects_genuinely_multivariate_input() {
    let ring = yx();
    assert_eq!(
        univariate_gcd(&p(&ring, "xy"), &p(&ring, "x")).unwrap_err(),
        Error::MultivariateInput
    );
    assert_eq!(
        univariate_gcd(&p(&ring, "x"), &p(&ring, "y")).unwrap_err(),
        Error::MultivariateInput
    );
}

// ---------------------------------------------------------------------------
// property tests: ring axioms against the map oracle, order laws, and the
// structural invariants
// ---------------------------------------------------------------------------

fn arb_poly(ring: RingRef) -> impl Strategy<Value = Polynomial> {
    let arity = ring.arity();
    let term = (
        -5i64..=5,
        proptest::collection::vec(0u32..=3, arity),
    );
    proptest::collection::vec(term, 0..=5).prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(c, exps)| (rat_int(c), exps))
                .collect(),
        )
        .unwrap()
    })
}

fn arb_mono(arity: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=4, arity).prop_map(Monomial::new)
}

fn invariants_hold(f: &Polynomial) -> bool {
    f.terms().windows(2).all(|w| w[0].mono > w[1].mono)
        && f.terms().iter().all(|t| !t.coeff.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_commutes_and_matches_oracle(
        f in arb_poly(zyx()),
        g in arb_poly(zyx()),
    ) {
        let sum = f.add(&g).unwrap();
        prop_assert!(invariants_hold(&sum));
        prop_assert_eq!(&sum, &g.add(&f).unwrap());
        prop_assert_eq!(to_map(&sum), map_add(&to_map(&f), &to_map(&g)));
    }

    #[test]
    fn multiplication_matches_oracle_and_distributes(
        f in arb_poly(zyx()),
        g in arb_poly(zyx()),
        h in arb_poly(zyx()),
    ) {
        let prod = f.mul(&g).unwrap();
        prop_assert!(invariants_hold(&prod));
        prop_assert_eq!(to_map(&prod), map_mul(&to_map(&f), &to_map(&g)));
        prop_assert_eq!(&prod, &g.mul(&f).unwrap());
        let assoc_left = f.mul(&g).unwrap().mul(&h).unwrap();
        let assoc_right = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(assoc_left, assoc_right);
        let dist_left = f.mul(&g.add(&h).unwrap()).unwrap();
        let dist_right = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(dist_left, dist_right);
    }

    #[test]
    fn lex_is_a_multiplicative_total_order(
        a in arb_mono(3),
        b in arb_mono(3),
        t in arb_mono(3),
    ) {
        let ring = zyx();
        let ab = ring.cmp_monomials(&a, &b).unwrap();
        let ba = ring.cmp_monomials(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        // multiplicativity: a > b implies a*t > b*t
        let at = a.mul(&t).unwrap();
        let bt = b.mul(&t).unwrap();
        prop_assert_eq!(ring.cmp_monomials(&at, &bt).unwrap(), ab);
        // 1 is the minimum
        let one = Monomial::one(3);
        prop_assert_ne!(
            ring.cmp_monomials(&one, &a).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn lead_term_is_multiplicative(
        f in arb_poly(zyx()),
        g in arb_poly(zyx()),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = f.mul(&g).unwrap();
        let lt = prod.lead_term().unwrap();
        let lf = f.lead_term().unwrap();
        let lg = g.lead_term().unwrap();
        prop_assert_eq!(&lt.coeff, &(&lf.coeff * &lg.coeff));
        prop_assert_eq!(lt.mono.clone(), lf.mono.mul(&lg.mono).unwrap());
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        f in arb_poly(zyx()),
        g in arb_poly(zyx()),
        nums in proptest::collection::vec((-6i64..=6, 1i64..=4), 3),
    ) {
        let point: Vec<Rational> = nums.into_iter().map(|(n, d)| rat(n, d)).collect();
        let sum = f.add(&g).unwrap().evaluate(&point).unwrap();
        prop_assert_eq!(
            sum,
            f.evaluate(&point).unwrap() + g.evaluate(&point).unwrap()
        );
        let prod = f.mul(&g).unwrap().evaluate(&point).unwrap();
        prop_assert_eq!(
            prod,
            f.evaluate(&point).unwrap() * g.evaluate(&point).unwrap()
        );
    }

    #[test]
    fn gcd_divides_both_inputs_and_common_factors_divide_it(
        a_coeffs in proptest::collection::vec(-4i64..=4, 1..=3),
        b_coeffs in proptest::collection::vec(-4i64..=4, 1..=3),
        c_coeffs in proptest::collection::vec(-4i64..=4, 1..=3),
    ) {
        let ring = yx();
        let x = ring.var_index("x").unwrap();
        let build = |coeffs: &[i64]| {
            Polynomial::from_terms(
                &ring,
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(e, &c)| (rat_int(c), vec![0, e as u32]))
                    .collect(),
            )
            .unwrap()
        };
        // construct f = a*c and g = b*c so that c is a known common divisor
        let (a, b, c) = (build(&a_coeffs), build(&b_coeffs), build(&c_coeffs));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let f = a.mul(&c).unwrap();
        let g = b.mul(&c).unwrap();
        let gcd = univariate_gcd(&f, &g).unwrap();
        // the gcd divides both inputs exactly
        for input in [&f, &g] {
            let (_, rem) = univariate::dense_div_rem(
                &univariate::to_dense(input, x),
                &univariate::to_dense(&gcd, x),
            );
            prop_assert!(univariate::dense_is_zero(&rem));
        }
        // the known common divisor divides the gcd
        let (_, rem) = univariate::dense_div_rem(
            &univariate::to_dense(&gcd, x),
            &univariate::to_dense(&c, x),
        );
        prop_assert!(univariate::dense_is_zero(&rem));
    }

    #[test]
    fn integer_normalize_is_scale_invariant(
        f in arb_poly(zyx()),
        num in -9i64..=9,
        den in 1i64..=9,
    ) {
        prop_assume!(!f.is_zero() && num != 0);
        let scaled = f.scale(&rat(num, den));
        prop_assert_eq!(
            scaled.integer_normalize().unwrap(),
            f.integer_normalize().unwrap()
        );
        // idempotent, integer, content-free, positive lead
        let normalized = f.integer_normalize().unwrap();
        prop_assert_eq!(normalized.integer_normalize().unwrap(), normalized.clone());
        prop_assert!(normalized.lead_coeff().unwrap().is_positive());
        prop_assert!(normalized.terms().iter().all(|t| t.coeff.denom().is_one()));
    }
}
