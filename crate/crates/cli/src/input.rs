//! Weight lists, level specs and integer lists as accepted on the command line.

use std::fs;
use std::io::Read;
use std::path::Path;

use prefixdp_core::{Level, LevelSpec};

use crate::error::CliError;

/// Weights from a JSON array, or integers separated by whitespace, commas or tabs.
pub fn parse_weights(text: &str) -> Result<Vec<u64>, CliError> {
    let text = text.trim();
    let weights: Vec<u64> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("weights: {e}")))?
    } else {
        parse_list(text, "weight")?
    };
    if weights.is_empty() {
        return Err(CliError::usage("no weights given"));
    }
    Ok(weights)
}

/// Reads a weights file; `-` is stdin.
pub fn read_weights_file(path: &str) -> Result<Vec<u64>, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))?
    };
    parse_weights(&text)
}

/// Non-negative integers separated by whitespace or commas.
pub fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| CliError::usage(format!("bad {what} {s:?}: {e}"))))
        .collect()
}

/// A level spec: `binary` (arity 2, unit edges, `levels` levels), a file, or
/// inline text. Text is a JSON array of `[arity, edge]` pairs, or one
/// `arity edge` (or `arity:edge`) pair per line or comma-separated item.
pub fn parse_level_spec(arg: &str, levels: usize) -> Result<LevelSpec, CliError> {
    if arg == "binary" {
        return Ok(LevelSpec::uniform(2, 1, levels)?);
    }
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| CliError::usage(format!("{arg}: {e}")))?
    } else {
        arg.to_owned()
    };
    let text = text.trim();
    let pairs: Vec<(usize, u64)> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("spec: {e}")))?
    } else {
        text.split(['\n', ',', ';'])
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_pair)
            .collect::<Result<_, _>>()?
    };
    if pairs.is_empty() {
        return Err(CliError::usage("spec has no levels"));
    }
    Ok(LevelSpec::new(pairs.into_iter().map(|(r, c)| Level::new(r, c)).collect())?)
}

fn parse_pair(line: &str) -> Result<(usize, u64), CliError> {
    let parts: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ':').filter(|s| !s.is_empty()).collect();
    let [r, c] = parts[..] else {
        return Err(CliError::usage(format!("spec level {line:?}: expected `arity edge`")));
    };
    let bad = |e: std::num::ParseIntError| CliError::usage(format!("spec level {line:?}: {e}"));
    Ok((r.parse().map_err(bad)?, c.parse().map_err(bad)?))
}
