//! Text rendering of polynomials.
//!
//! Rings whose variables are all single letters print in short notation:
//! descending terms, minus signs fused into coefficients, exponent digits
//! appended to the variable name, and unit coefficients suppressed, e.g.
//! `4x4-5x2+1` or `3y+8x3-8x`. Rings with longer names fall back to the
//! explicit `*`/`^` form so output always re-parses unambiguously.

use std::fmt;

use num::{One, Signed};

use crate::rational::{render_rational, Rational};

use super::{Monomial, Polynomial, Ring};

fn is_unit(c: &Rational) -> bool {
    c.numer().magnitude().is_one() && c.denom().is_one()
}

fn push_monomial(out: &mut String, ring: &Ring, mono: &Monomial, short: bool, mut sep: bool) {
    for (i, &e) in mono.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !short && sep {
            out.push('*');
        }
        out.push_str(&ring.vars()[i]);
        if e > 1 {
            if !short {
                out.push('^');
            }
            out.push_str(&e.to_string());
        }
        sep = true;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let short = self.ring.short_notation();
        let mut out = String::new();
        for (k, term) in self.terms.iter().enumerate() {
            let negative = term.coeff.is_negative();
            if negative {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let abs = term.coeff.abs();
            if term.mono.is_one() {
                out.push_str(&render_rational(&abs));
            } else {
                let coeff_printed = !is_unit(&term.coeff);
                if coeff_printed {
                    out.push_str(&render_rational(&abs));
                }
                push_monomial(&mut out, &self.ring, &term.mono, short, coeff_printed);
            }
        }
        f.write_str(&out)
    }
}
