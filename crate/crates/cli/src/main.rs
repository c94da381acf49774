//! `dbclosure` command-line driver.
//!
//! Exit codes: 0 success (or balanced), 1 error (usage errors included),
//! 2 not balanced, 3 unsupported family, 4 search budget exhausted.

mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    // clap's default usage-error status (2) would collide with "not balanced".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    let (name, json, outcome) = match &cli.command {
        Command::Check(a) => ("check", a.json, commands::check(a)),
        Command::Szeged(a) => ("szeged", a.json, commands::szeged(a)),
        Command::Gen(a) => ("gen", false, commands::generate(a)),
        Command::Closure(a) => ("closure", a.json, commands::closure(a)),
        Command::Verify(a) => ("verify", a.json, commands::verify(a)),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    if let Some(note) = &outcome.note {
        eprintln!("{note}");
    }
    let mut stdout = std::io::stdout().lock();
    let written = if json {
        writeln!(stdout, "{}", report::render_json(name, &argv[1..], &outcome, start.elapsed()))
    } else {
        write!(stdout, "{}", outcome.text)
    };
    if let Err(e) = written.and_then(|_| stdout.flush()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.code)
}
