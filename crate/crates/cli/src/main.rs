//! `workbench`: run session scripts or an interactive prompt.
//!
//! Exit codes: 0 on success, 1 on script or I/O errors, 2 on usage errors.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use workbench_core::rational::parse_rational;
use workbench_core::repl::{
    run_script, OutputFormat, ReplError, ScriptOptions, SessionState, StatementBuffer,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "workbench",
    about = "Polynomial systems (Singular-style) and permutation groups (GAP-style) in one session",
    after_help = "With no --script, statements are read from stdin; every statement ends in ';'."
)]
struct Args {
    /// Script file to execute in batch mode (stops at the first error)
    #[arg(long)]
    script: Option<PathBuf>,

    /// Output format for solve() results
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Box width for solve(), as an exact rational like 1/1024
    #[arg(long, default_value = "1/1024")]
    width: String,

    /// Suppress prompts and input echo; print outputs only
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let width = match parse_rational(&args.width) {
        Some(w) if w > workbench_core::Rational::from_integer(0.into()) => w,
        _ => {
            eprintln!(
                "error: --width must be a positive rational like 1/1024, got '{}'",
                args.width
            );
            return ExitCode::from(2);
        }
    };
    let mut state = SessionState::new();
    state.width = width;
    state.format = match args.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    match args.script {
        Some(path) => run_batch(&mut state, &path, args.quiet),
        None => run_interactive(&mut state, args.quiet),
    }
}

fn run_batch(state: &mut SessionState, path: &PathBuf, quiet: bool) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(1);
        }
    };
    let opts = ScriptOptions {
        echo: !quiet,
        stop_on_error: true,
        ..ScriptOptions::default()
    };
    let outcome = run_script(state, &text, &opts);
    if opts.echo {
        print!("{}", outcome.transcript);
    } else {
        for line in &outcome.outputs {
            println!("{line}");
        }
    }
    match outcome.error {
        Some(err) => {
            report(&err, path);
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}

fn report(err: &ReplError, path: &PathBuf) {
    eprintln!("error: {}: {err}", path.display());
}

fn run_interactive(state: &mut SessionState, quiet: bool) -> ExitCode {
    let stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut buffer = StatementBuffer::new();
    loop {
        if !quiet {
            let prompt = if buffer.has_pending() { ". " } else { "> " };
            let _ = write!(stdout, "{prompt}");
            let _ = stdout.flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => return ExitCode::SUCCESS,
            Ok(_) => {}
            Err(e) => {
                eprintln!("error: stdin: {e}");
                return ExitCode::from(1);
            }
        }
        let (outputs, error) = buffer.feed(state, line.trim_end_matches('\n'));
        for out in outputs {
            println!("{out}");
        }
        if let Some(err) = error {
            eprintln!("error: {err}");
        }
    }
}
