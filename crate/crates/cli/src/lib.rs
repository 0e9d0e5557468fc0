//! Command-line front end for `coresat`: graph export, metric and spectrum
//! reports, the clustering sweep over replicated satellites, and a
//! self-verification run against the oracles.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! with in-memory streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::Parser;

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod sweep;
pub mod verify;

use args::{Cli, Command};
pub use error::{CliError, CliResult};

pub struct Context<'a> {
    pub tol: f64,
    pub dense_limit: usize,
    pub out: Option<PathBuf>,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (program name first) and executes the command. Returns the
/// process exit code: 0 success, 1 failed comparison or runtime error, 2
/// usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context {
        tol: cli.tol,
        dense_limit: cli.dense_limit,
        out: cli.out.clone(),
        stdout,
        stderr,
    };
    let result = cli.validate().and_then(|()| match &cli.command {
        Command::Generate(a) => commands::generate(&mut ctx, a),
        Command::Metrics(a) => commands::metrics(&mut ctx, a),
        Command::Spectrum(a) => commands::spectrum(&mut ctx, a),
        Command::Sweep(a) => sweep::sweep(&mut ctx, a),
        Command::Verify(a) => verify::verify(&mut ctx, a),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            e.exit_code()
        }
    }
}
