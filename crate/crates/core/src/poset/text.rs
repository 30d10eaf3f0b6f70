//! Plain-text poset format.
//!
//! ```text
//! # comment
//! elements: e a b ab
//! e < a
//! e < b
//! a < ab
//! b < ab
//! ```

use std::fmt::Write;

use super::Poset;
use crate::error::{Error, Result};

pub fn parse_poset(input: &str) -> Result<Poset> {
    let mut labels: Option<Vec<String>> = None;
    let mut covers: Vec<(String, String, usize)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("elements:") {
            if labels.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "duplicate `elements:` line".into(),
                });
            }
            labels = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [a, "<", b] => {
                if labels.is_none() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "relation before `elements:` line".into(),
                    });
                }
                covers.push((a.to_string(), b.to_string(), line_no));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `a < b`, found `{line}`"),
                })
            }
        }
    }
    let labels = labels.ok_or(Error::Parse {
        line: input.lines().count().max(1),
        message: "missing `elements:` line".into(),
    })?;
    // Attribute unknown labels to the offending line.
    for (a, b, line) in &covers {
        for l in [a, b] {
            if !labels.contains(l) {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("unknown element `{l}`"),
                });
            }
        }
    }
    let pairs: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b, _)| (a.as_str(), b.as_str()))
        .collect();
    Poset::from_cover_relations(&labels, &pairs)
}

/// Hasse diagram in the text format, elements in poset order.
pub fn write_poset(p: &Poset) -> String {
    let mut out = String::new();
    out.push_str("elements:");
    for l in p.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (a, b) in p.covers() {
        let _ = writeln!(out, "{} < {}", p.label(a), p.label(b));
    }
    out
}
