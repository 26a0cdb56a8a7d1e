//! Text format for permutation files.
//!
//! ```text
//! n
//! t[1] t[2] ... t[n]
//! ```
//!
//! Values are 1-based and separated by single spaces on output; any
//! whitespace is accepted on input. The trailing newline is optional.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Parses the file contents. Values are only checked to be integers; use
/// [`is_permutation`](crate::is_permutation) to validate them.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>> {
    let mut lines = text.lines();
    let header = lines
        .by_ref()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad length line {:?}", header.trim())))?;
    let values = lines
        .flat_map(str::split_whitespace)
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad value {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} values, found {}",
            values.len()
        )));
    }
    Ok(values)
}

pub fn format_permutation(values: &[usize]) -> String {
    let mut out = values.len().to_string();
    out.push('\n');
    let body: Vec<String> = values.iter().map(usize::to_string).collect();
    out.push_str(&body.join(" "));
    out.push('\n');
    out
}

pub fn read_permutation_file(path: &Path) -> Result<Vec<usize>> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_permutation(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_permutation_file(path: &Path, values: &[usize]) -> Result<()> {
    fs::write(path, format_permutation(values)).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}
