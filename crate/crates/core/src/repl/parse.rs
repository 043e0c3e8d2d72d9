//! Statement parser for the two session sub-languages.
//!
//! Polynomial statements (`ring`, `ideal`, `groebner`, `solve`, expressions)
//! follow the Singular style; group statements (`Group`, `Size`, `Elements`,
//! `Orbit`, `:=`) follow the GAP style. Short-notation words such as `2x2`
//! or `xy` are resolved greedily against the declared variable list, longest
//! declared name first.

use num::BigInt;

use crate::poly::{Polynomial, Ring, RingRef};
use crate::rational::Rational;

use super::token::{ReplError, Spanned, Tok};

/// Exponents beyond this bound are rejected at parse time so fuzzed input
/// cannot force huge expansions.
pub const MAX_EXPONENT: u32 = 9999;

/// One generator of a `Group(...)` constructor: a product of cycles.
pub type CycleProduct = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// A bound name to look up.
    Name(String),
    /// A polynomial literal in the current ring.
    Poly(Polynomial),
    /// `groebner(I)`
    Groebner(String),
    /// `solve(I)`
    Solve(String),
    /// `Group((..), ..)`
    GroupCtor(Vec<CycleProduct>),
    /// `Size(G)`
    Size(String),
    /// `Elements(G)`
    Elements(String),
    /// `Orbit(G, p)`
    Orbit(String, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Empty,
    RingDecl { name: String, ring: RingRef },
    IdealDecl { name: String, gens: Vec<Polynomial> },
    Assign { name: String, expr: Expr },
    Expr(Expr),
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    ring: Option<&'a RingRef>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Spanned> {
        self.toks.get(self.pos)
    }

    fn peek2(&self) -> Option<&'a Spanned> {
        self.toks.get(self.pos + 1)
    }

    fn next(&mut self) -> Option<&'a Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => self
                .toks
                .last()
                .map(|t| (t.line, t.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ReplError> {
        let (line, col) = self.here();
        Err(ReplError::new(line, col, message))
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<&'a Spanned, ReplError> {
        match self.peek() {
            Some(t) if &t.tok == tok => Ok(self.next().unwrap()),
            Some(t) => {
                let found = t.tok.to_string();
                self.err(format!("expected {what}, found {found}"))
            }
            None => self.err(format!("expected {what}, found end of statement")),
        }
    }

    fn expect_word(&mut self, what: &str) -> Result<(String, usize, usize), ReplError> {
        match self.peek() {
            Some(Spanned {
                tok: Tok::Word(w),
                line,
                col,
            }) => {
                let out = (w.clone(), *line, *col);
                self.pos += 1;
                Ok(out)
            }
            Some(t) => {
                let found = t.tok.to_string();
                self.err(format!("expected {what}, found {found}"))
            }
            None => self.err(format!("expected {what}, found end of statement")),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(String, usize, usize), ReplError> {
        match self.peek() {
            Some(Spanned {
                tok: Tok::Int(d),
                line,
                col,
            }) => {
                let out = (d.clone(), *line, *col);
                self.pos += 1;
                Ok(out)
            }
            Some(t) => {
                let found = t.tok.to_string();
                self.err(format!("expected {what}, found {found}"))
            }
            None => self.err(format!("expected {what}, found end of statement")),
        }
    }

    fn ring_or_err(&self) -> Result<&'a RingRef, ReplError> {
        match self.ring {
            Some(r) => Ok(r),
            None => {
                let (line, col) = self.here();
                Err(ReplError::new(
                    line,
                    col,
                    "no ring declared: polynomial input needs a prior 'ring' statement",
                ))
            }
        }
    }

    // ----- statements ------------------------------------------------------

    fn statement(&mut self) -> Result<Statement, ReplError> {
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Semi)) {
            self.next();
            self.end_of_statement()?;
            return Ok(Statement::Empty);
        }
        let stmt = match self.peek().map(|t| &t.tok) {
            Some(Tok::Word(w)) if w == "ring" => self.ring_decl()?,
            Some(Tok::Word(w)) if w == "ideal" => self.ideal_decl()?,
            Some(Tok::Word(_))
                if matches!(
                    self.peek2().map(|t| &t.tok),
                    Some(Tok::Assign) | Some(Tok::ColonAssign)
                ) =>
            {
                let (name, _, _) = self.expect_word("a name")?;
                self.next(); // '=' or ':='
                let expr = self.expr()?;
                Statement::Assign { name, expr }
            }
            Some(_) => Statement::Expr(self.expr()?),
            None => return self.err("expected a statement"),
        };
        self.expect(&Tok::Semi, "';'")?;
        self.end_of_statement()?;
        Ok(stmt)
    }

    fn end_of_statement(&mut self) -> Result<(), ReplError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => {
                let found = t.tok.to_string();
                self.err(format!("unexpected {found} after ';'"))
            }
        }
    }

    fn ring_decl(&mut self) -> Result<Statement, ReplError> {
        self.next(); // 'ring'
        let (name, _, _) = self.expect_word("a ring name")?;
        self.expect(&Tok::Assign, "'='")?;
        let (characteristic, line, col) = self.expect_int("the characteristic")?;
        if characteristic != "0" {
            return Err(ReplError::new(
                line,
                col,
                format!(
                    "characteristic {characteristic} is not supported: \
                     only coefficient field Q (characteristic 0) is available"
                ),
            ));
        }
        self.expect(&Tok::Comma, "','")?;
        self.expect(&Tok::LParen, "'('")?;
        let mut vars = Vec::new();
        loop {
            let (var, _, _) = self.expect_word("a variable name")?;
            vars.push(var);
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Comma) => {
                    self.next();
                }
                _ => break,
            }
        }
        self.expect(&Tok::RParen, "')'")?;
        self.expect(&Tok::Comma, "','")?;
        let (order, line, col) = self.expect_word("a monomial order tag")?;
        if order != "lp" {
            return Err(ReplError::new(
                line,
                col,
                format!("unknown order tag '{order}': only 'lp' (lexicographic) is supported"),
            ));
        }
        let ring = Ring::lex(&vars).map_err(|e| {
            let (l, c) = self.here();
            ReplError::new(l, c, e.to_string())
        })?;
        Ok(Statement::RingDecl { name, ring })
    }

    fn ideal_decl(&mut self) -> Result<Statement, ReplError> {
        self.next(); // 'ideal'
        let (name, _, _) = self.expect_word("an ideal name")?;
        self.expect(&Tok::Assign, "'='")?;
        let mut gens = vec![self.poly_expr()?];
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Comma)) {
            self.next();
            gens.push(self.poly_expr()?);
        }
        Ok(Statement::IdealDecl { name, gens })
    }

    // ----- expressions -----------------------------------------------------

    fn expr(&mut self) -> Result<Expr, ReplError> {
        if let Some(Spanned { tok: Tok::Word(w), .. }) = self.peek() {
            let call = matches!(self.peek2().map(|t| &t.tok), Some(Tok::LParen));
            match w.as_str() {
                "groebner" if call => return self.name_call("groebner").map(Expr::Groebner),
                "solve" if call => return self.name_call("solve").map(Expr::Solve),
                "Size" if call => return self.name_call("Size").map(Expr::Size),
                "Elements" if call => return self.name_call("Elements").map(Expr::Elements),
                "Orbit" if call => return self.orbit_call(),
                "Group" if call => return self.group_ctor(),
                _ => {}
            }
            // a lone word that is not a variable of the current ring is a
            // binding reference
            if matches!(self.peek2().map(|t| &t.tok), Some(Tok::Semi) | None) {
                let is_poly_word = self
                    .ring
                    .map(|r| decompose_word(r, w).is_ok())
                    .unwrap_or(false);
                if !is_poly_word {
                    let (name, _, _) = self.expect_word("a name")?;
                    return Ok(Expr::Name(name));
                }
            }
        }
        Ok(Expr::Poly(self.poly_expr()?))
    }

    fn name_call(&mut self, what: &str) -> Result<String, ReplError> {
        self.next(); // keyword
        self.expect(&Tok::LParen, "'('")?;
        let (name, _, _) = self.expect_word(&format!("the argument of {what}"))?;
        self.expect(&Tok::RParen, "')'")?;
        Ok(name)
    }

    fn orbit_call(&mut self) -> Result<Expr, ReplError> {
        self.next(); // 'Orbit'
        self.expect(&Tok::LParen, "'('")?;
        let (name, _, _) = self.expect_word("a group name")?;
        self.expect(&Tok::Comma, "','")?;
        let (digits, line, col) = self.expect_int("a point")?;
        let point: usize = digits
            .parse()
            .map_err(|_| ReplError::new(line, col, format!("point '{digits}' is too large")))?;
        self.expect(&Tok::RParen, "')'")?;
        Ok(Expr::Orbit(name, point))
    }

    fn group_ctor(&mut self) -> Result<Expr, ReplError> {
        self.next(); // 'Group'
        self.expect(&Tok::LParen, "'('")?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::RParen)) {
            return self.err("a group needs at least one generator");
        }
        let mut generators = vec![self.cycle_product()?];
        loop {
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Comma) => {
                    self.next();
                    generators.push(self.cycle_product()?);
                }
                Some(Tok::RParen) => {
                    self.next();
                    break;
                }
                _ => return self.err("expected ',' or ')' in Group(...)"),
            }
        }
        Ok(Expr::GroupCtor(generators))
    }

    /// One generator: juxtaposed cycles such as `(1,2)(3,4)` or `()`.
    fn cycle_product(&mut self) -> Result<CycleProduct, ReplError> {
        let mut cycles = Vec::new();
        loop {
            self.expect(&Tok::LParen, "'(' starting a cycle")?;
            let mut cycle: Vec<usize> = Vec::new();
            if !matches!(self.peek().map(|t| &t.tok), Some(Tok::RParen)) {
                loop {
                    let (digits, line, col) = self.expect_int("a point")?;
                    let point: usize = digits.parse().map_err(|_| {
                        ReplError::new(line, col, format!("point '{digits}' is too large"))
                    })?;
                    if point == 0 {
                        return Err(ReplError::new(line, col, "points are 1-based"));
                    }
                    if cycle.contains(&point) {
                        return Err(ReplError::new(
                            line,
                            col,
                            format!("point {point} repeats within a cycle"),
                        ));
                    }
                    cycle.push(point);
                    match self.peek().map(|t| &t.tok) {
                        Some(Tok::Comma) => {
                            self.next();
                        }
                        _ => break,
                    }
                }
            }
            self.expect(&Tok::RParen, "')' closing a cycle")?;
            if cycle.len() == 1 {
                return self.err("a cycle must name at least two points or be empty");
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            if !matches!(self.peek().map(|t| &t.tok), Some(Tok::LParen)) {
                break;
            }
        }
        Ok(cycles)
    }

    // ----- polynomial grammar ----------------------------------------------

    fn poly_expr(&mut self) -> Result<Polynomial, ReplError> {
        let ring = self.ring_or_err()?;
        let mut acc = Polynomial::zero(ring);
        let mut negate = match self.peek().map(|t| &t.tok) {
            Some(Tok::Minus) => {
                self.next();
                true
            }
            Some(Tok::Plus) => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let term = self.poly_term()?;
            acc = if negate {
                acc.sub(&term)
            } else {
                acc.add(&term)
            }
            .expect("one ring per session");
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Plus) => {
                    self.next();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.next();
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn poly_term(&mut self) -> Result<Polynomial, ReplError> {
        let mut acc = self.poly_factor()?;
        loop {
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Star) => {
                    self.next();
                    let rhs = self.poly_factor()?;
                    acc = acc.mul(&rhs).expect("one ring per session");
                }
                // juxtaposition is multiplication: 2x2, xy, 3(x+1)
                Some(Tok::Int(_)) | Some(Tok::Word(_)) | Some(Tok::LParen) => {
                    let rhs = self.poly_factor()?;
                    acc = acc.mul(&rhs).expect("one ring per session");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn poly_factor(&mut self) -> Result<Polynomial, ReplError> {
        let base = self.poly_atom()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.next();
            let (digits, line, col) = self.expect_int("an exponent")?;
            let exp = parse_exponent(&digits)
                .ok_or_else(|| ReplError::new(line, col, exponent_message(&digits)))?;
            return Ok(base.pow(exp).expect("exponent bounded"));
        }
        Ok(base)
    }

    fn poly_atom(&mut self) -> Result<Polynomial, ReplError> {
        let ring = self.ring_or_err()?;
        match self.peek() {
            Some(Spanned {
                tok: Tok::Int(digits),
                ..
            }) => {
                let numer: BigInt = digits.parse().expect("digit runs parse as integers");
                self.next();
                // fraction literal: INT '/' INT
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.next();
                    let (den_digits, line, col) = self.expect_int("a denominator")?;
                    let denom: BigInt = den_digits.parse().expect("digit runs parse as integers");
                    if denom == BigInt::from(0) {
                        return Err(ReplError::new(line, col, "zero denominator"));
                    }
                    return Ok(Polynomial::constant(ring, Rational::new(numer, denom)));
                }
                Ok(Polynomial::constant(ring, Rational::from_integer(numer)))
            }
            Some(Spanned {
                tok: Tok::Word(word),
                line,
                col,
            }) => {
                let factors = decompose_word(ring, word)
                    .map_err(|msg| ReplError::new(*line, *col, msg))?;
                self.next();
                let mut acc = Polynomial::one(ring);
                for (var, exp) in factors {
                    let pow = Polynomial::var_pow(ring, var, exp).expect("validated index");
                    acc = acc.mul(&pow).expect("one ring per session");
                }
                Ok(acc)
            }
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                self.next();
                let inner = self.poly_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(t) => {
                let found = t.tok.to_string();
                self.err(format!("expected a polynomial factor, found {found}"))
            }
            None => self.err("expected a polynomial factor, found end of statement"),
        }
    }
}

fn parse_exponent(digits: &str) -> Option<u32> {
    let exp: u32 = digits.parse().ok()?;
    (exp <= MAX_EXPONENT).then_some(exp)
}

fn exponent_message(digits: &str) -> String {
    format!("exponent {digits} exceeds the limit of {MAX_EXPONENT}")
}

/// Splits a short-notation word like `x2`, `xy`, or `yx3` into variable
/// powers, matching the longest declared variable name first.
fn decompose_word(ring: &Ring, word: &str) -> Result<Vec<(usize, u32)>, String> {
    let mut rest = word;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let hit = ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len());
        let (var, name_len) = match hit {
            Some((i, v)) => (i, v.len()),
            None => {
                return Err(format!(
                    "unknown variable at '{rest}' in '{word}' \
                     (declared: {})",
                    ring.vars().join(", ")
                ))
            }
        };
        rest = &rest[name_len..];
        let digit_len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let exp = if digit_len == 0 {
            1
        } else {
            let digits = &rest[..digit_len];
            rest = &rest[digit_len..];
            parse_exponent(digits).ok_or_else(|| exponent_message(digits))?
        };
        out.push((var, exp));
    }
    Ok(out)
}

/// Parses one statement from its token sequence (trailing ';' included).
pub fn parse_statement(
    toks: &[Spanned],
    ring: Option<&RingRef>,
) -> Result<Statement, ReplError> {
    let mut parser = Parser { toks, pos: 0, ring };
    parser.statement()
}

/// Parses a standalone polynomial in the given ring; used by tests, the
/// bindings, and golden files.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial, ReplError> {
    let toks = super::token::tokenize(text)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        ring: Some(ring),
    };
    let poly = parser.poly_expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(t) => Err(ReplError::new(
            t.line,
            t.col,
            format!("unexpected {} after the polynomial", t.tok),
        )),
    }
}
