//! Session front end: statement evaluation, bindings, and the script runner
//! that reproduces transcripts verbatim.
//!
//! One session hosts both sub-languages. Statements that fail leave the
//! session state untouched; script errors carry the source position.

mod parse;
mod token;

pub use parse::{parse_polynomial, parse_statement, Expr, Statement, MAX_EXPONENT};
pub use token::{tokenize, tokenize_from, ReplError, Spanned, Tok};

use std::collections::HashMap;

use crate::groebner::{groebner, GroebnerBasis, Ideal};
use crate::interval::SolutionBox;
use crate::permgroup::{Group, Permutation};
use crate::poly::{Polynomial, RingRef};
use crate::rational::{rat, Rational};
use crate::solve::{boxes_to_json, boxes_to_table, solve_system};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// A value a session name can be bound to.
#[derive(Debug, Clone)]
pub enum Value {
    Poly(Polynomial),
    Ideal(Ideal),
    Basis(GroebnerBasis),
    Group(Group),
    Boxes(Vec<SolutionBox>),
    Count(u128),
    Perms(Vec<Permutation>),
    Points(Vec<usize>),
}

/// Session state: at most one ring, case-sensitive bindings, and the output
/// options that `solve` consults.
pub struct SessionState {
    ring: Option<RingRef>,
    bindings: HashMap<String, Value>,
    pub format: OutputFormat,
    pub width: Rational,
}

impl Default for SessionState {
    fn default() -> Self {
        Self::new()
    }
}

impl SessionState {
    pub fn new() -> SessionState {
        SessionState {
            ring: None,
            bindings: HashMap::new(),
            format: OutputFormat::Text,
            width: rat(1, 1024),
        }
    }

    pub fn ring(&self) -> Option<&RingRef> {
        self.ring.as_ref()
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    fn lookup_or_err(&self, name: &str) -> Result<&Value, String> {
        self.lookup(name).ok_or_else(|| format!("unbound name '{name}'"))
    }

    fn group_arg(&self, name: &str) -> Result<&Group, String> {
        match self.lookup_or_err(name)? {
            Value::Group(g) => Ok(g),
            _ => Err(format!("'{name}' is not a group")),
        }
    }

    fn ideal_arg(&self, name: &str) -> Result<&Ideal, String> {
        match self.lookup_or_err(name)? {
            Value::Ideal(i) => Ok(i),
            _ => Err(format!("'{name}' is not an ideal")),
        }
    }
}

fn eval_expr(state: &SessionState, expr: &Expr) -> Result<Value, String> {
    match expr {
        Expr::Name(name) => Ok(state.lookup_or_err(name)?.clone()),
        Expr::Poly(p) => Ok(Value::Poly(p.clone())),
        Expr::Groebner(name) => {
            let ideal = state.ideal_arg(name)?;
            let basis = groebner(ideal).map_err(|e| e.to_string())?;
            Ok(Value::Basis(basis))
        }
        Expr::Solve(name) => {
            let ideal = state.ideal_arg(name)?;
            let boxes = solve_system(ideal, &state.width).map_err(|e| e.to_string())?;
            Ok(Value::Boxes(boxes))
        }
        Expr::GroupCtor(generators) => {
            let degree = generators
                .iter()
                .flatten()
                .flatten()
                .copied()
                .max()
                .unwrap_or(1);
            let perms: Vec<Permutation> = generators
                .iter()
                .map(|cycles| Permutation::from_cycles(cycles, degree))
                .collect();
            Ok(Value::Group(Group::new(perms).map_err(|e| e.to_string())?))
        }
        Expr::Size(name) => Ok(Value::Count(state.group_arg(name)?.order())),
        Expr::Elements(name) => {
            let group = state.group_arg(name)?;
            let mut elements = group.elements().map_err(|e| e.to_string())?.to_vec();
            elements.sort_by(|a, b| a.images().cmp(b.images()));
            Ok(Value::Perms(elements))
        }
        Expr::Orbit(name, point) => {
            let group = state.group_arg(name)?;
            let orbit = group.orbit(*point).map_err(|e| e.to_string())?;
            Ok(Value::Points(orbit))
        }
    }
}

fn render_value(state: &SessionState, value: &Value) -> Vec<String> {
    match value {
        Value::Poly(p) => vec![p.to_string()],
        Value::Ideal(i) => i
            .generators()
            .iter()
            .enumerate()
            .map(|(k, g)| format!("_[{}]={}", k + 1, g))
            .collect(),
        Value::Basis(b) => b.transcript_lines(),
        Value::Group(g) => {
            let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
            vec![format!("Group([ {} ])", gens.join(", "))]
        }
        Value::Boxes(boxes) => {
            let ring = state.ring.as_ref().expect("boxes exist only with a ring");
            match state.format {
                OutputFormat::Text => boxes_to_table(ring, boxes),
                OutputFormat::Json => vec![boxes_to_json(ring, boxes).to_string()],
            }
        }
        Value::Count(n) => vec![n.to_string()],
        Value::Perms(perms) => {
            let parts: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
            vec![format!("[ {} ]", parts.join(", "))]
        }
        Value::Points(points) => {
            let parts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
            vec![format!("[ {} ]", parts.join(", "))]
        }
    }
}

/// Evaluates one statement. On success the state is updated and the output
/// lines are returned; on failure the state is unchanged.
pub fn eval_statement(state: &mut SessionState, stmt: &Statement) -> Result<Vec<String>, String> {
    match stmt {
        Statement::Empty => Ok(Vec::new()),
        Statement::RingDecl { ring, .. } => {
            if state.ring.is_some() {
                return Err(
                    "a ring is already declared: ring switching is not supported".to_string(),
                );
            }
            state.ring = Some(ring.clone());
            Ok(Vec::new())
        }
        Statement::IdealDecl { name, gens } => {
            let ring = state
                .ring
                .as_ref()
                .ok_or_else(|| "no ring declared".to_string())?;
            let ideal = Ideal::new(ring, gens.clone()).map_err(|e| e.to_string())?;
            state.bindings.insert(name.clone(), Value::Ideal(ideal));
            Ok(Vec::new())
        }
        Statement::Assign { name, expr } => {
            let value = eval_expr(state, expr)?;
            state.bindings.insert(name.clone(), value);
            Ok(Vec::new())
        }
        Statement::Expr(expr) => {
            let value = eval_expr(state, expr)?;
            Ok(render_value(state, &value))
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScriptOptions {
    /// Echo each input line, prefixed by the prompt, into the transcript.
    pub echo: bool,
    pub prompt: String,
    /// Batch mode stops at the first error; interactive sessions continue.
    pub stop_on_error: bool,
}

impl Default for ScriptOptions {
    fn default() -> Self {
        ScriptOptions {
            echo: true,
            prompt: "> ".to_string(),
            stop_on_error: true,
        }
    }
}

#[derive(Debug)]
pub struct ScriptOutcome {
    /// Echoed input and outputs interleaved, reproducible byte for byte.
    pub transcript: String,
    /// Output lines only, prompts and echoes stripped.
    pub outputs: Vec<String>,
    pub error: Option<ReplError>,
}

impl ScriptOutcome {
    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }
}

/// Incremental statement reader shared by the script runner and the
/// interactive prompt: lines go in, completed statements execute as soon as
/// their ';' arrives.
#[derive(Default)]
pub struct StatementBuffer {
    pending: Vec<Spanned>,
    next_line: usize,
}

impl StatementBuffer {
    pub fn new() -> StatementBuffer {
        StatementBuffer {
            pending: Vec::new(),
            next_line: 1,
        }
    }

    /// True while a statement is still waiting for its ';'.
    pub fn has_pending(&self) -> bool {
        !self.pending.is_empty()
    }

    /// Position of the unfinished statement, for end-of-input diagnostics.
    pub fn unterminated_error(&self) -> Option<ReplError> {
        self.pending.first().map(|t| {
            ReplError::new(t.line, t.col, "unterminated statement: missing ';'")
        })
    }

    /// Feeds one input line; executes every statement the line completes.
    /// On the first error the rest of the buffered input is discarded so the
    /// session can resynchronize on the next line.
    pub fn feed(
        &mut self,
        state: &mut SessionState,
        line: &str,
    ) -> (Vec<String>, Option<ReplError>) {
        let line_no = self.next_line;
        self.next_line += 1;
        let mut outputs = Vec::new();
        match tokenize_from(line, line_no) {
            Ok(mut toks) => self.pending.append(&mut toks),
            Err(e) => {
                self.pending.clear();
                return (outputs, Some(e));
            }
        }
        while let Some(split) = self.pending.iter().position(|t| t.tok == Tok::Semi) {
            let stmt_toks: Vec<Spanned> = self.pending.drain(..=split).collect();
            let start = (stmt_toks[0].line, stmt_toks[0].col);
            let result = parse_statement(&stmt_toks, state.ring.as_ref()).and_then(|stmt| {
                eval_statement(state, &stmt).map_err(|msg| ReplError::new(start.0, start.1, msg))
            });
            match result {
                Ok(lines) => outputs.extend(lines),
                Err(e) => {
                    self.pending.clear();
                    return (outputs, Some(e));
                }
            }
        }
        (outputs, None)
    }
}

/// Runs a script, statement by statement. Statements may span lines; a
/// statement executes once its ';' has been read, and its output lines
/// follow the echo of the line that completed it.
pub fn run_script(state: &mut SessionState, text: &str, opts: &ScriptOptions) -> ScriptOutcome {
    let mut transcript = String::new();
    let mut outputs = Vec::new();
    let mut error = None;
    let mut buffer = StatementBuffer::new();
    for line in text.lines() {
        if opts.echo {
            transcript.push_str(&opts.prompt);
            transcript.push_str(line);
            transcript.push('\n');
        }
        let (lines, err) = buffer.feed(state, line);
        for out in lines {
            transcript.push_str(&out);
            transcript.push('\n');
            outputs.push(out);
        }
        if let Some(e) = err {
            error = Some(e);
            if opts.stop_on_error {
                break;
            }
        }
    }
    if error.is_none() {
        error = buffer.unterminated_error();
    }
    ScriptOutcome {
        transcript,
        outputs,
        error,
    }
}
