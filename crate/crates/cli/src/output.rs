use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::CliResult;

/// Runs `body` against the file at `path`, or against `stdout` when no path
/// is given.
pub fn write_to<F>(path: Option<&Path>, stdout: &mut dyn Write, body: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> CliResult<()>,
{
    match path {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            body(&mut file)?;
            file.flush()?;
        }
        None => body(stdout)?,
    }
    Ok(())
}

/// Rounds to 12 significant digits so printed values do not depend on
/// last-bit noise.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x + 0.0;
    }
    format!("{x:.11e}")
        .parse::<f64>()
        .expect("formatted float parses")
        + 0.0
}

pub fn json_line<T: serde::Serialize>(value: &T, out: &mut dyn Write) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
