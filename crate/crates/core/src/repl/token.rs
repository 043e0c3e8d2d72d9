//! Tokenizer for the session language.
//!
//! Alphanumeric runs starting with a letter lex as one word; the polynomial
//! parser later splits words like `x2` or `xy` against the declared variable
//! list (Singular short notation). Every failure carries a line/column
//! position, counted from 1.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Word(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Assign,
    ColonAssign,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Int(d) => write!(f, "'{d}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Semi => f.write_str("';'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Assign => f.write_str("'='"),
            Tok::ColonAssign => f.write_str("':='"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// A positioned diagnostic from the tokenizer, parser, or evaluator.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, col {col}: {message}")]
pub struct ReplError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ReplError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> ReplError {
        ReplError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Tokenizes `text`; `first_line` sets the line number of its first line.
pub fn tokenize_from(text: &str, first_line: usize) -> Result<Vec<Spanned>, ReplError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let start_col = col;
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
                col += 1;
            }
            out.push(Spanned {
                tok: Tok::Int(digits),
                line,
                col: start_col,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while chars
                .peek()
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                word.push(chars.next().unwrap());
                col += 1;
            }
            out.push(Spanned {
                tok: Tok::Word(word),
                line,
                col: start_col,
            });
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '=' => Tok::Assign,
            ':' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    out.push(Spanned {
                        tok: Tok::ColonAssign,
                        line,
                        col: start_col,
                    });
                    continue;
                }
                return Err(ReplError::new(line, start_col, "expected '=' after ':'"));
            }
            other => {
                return Err(ReplError::new(
                    line,
                    start_col,
                    format!("illegal character '{other}'"),
                ));
            }
        };
        chars.next();
        col += 1;
        out.push(Spanned {
            tok,
            line,
            col: start_col,
        });
    }
    Ok(out)
}

pub fn tokenize(text: &str) -> Result<Vec<Spanned>, ReplError> {
    tokenize_from(text, 1)
}
