//! Plain-text instance format.
//!
//! One string per line, either UTF-8 (symbols are code points) or, after an
//! `#alphabet N` header, whitespace-separated integers. A `#non-repetitive`
//! header flags and validates every string. Empty lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::text::{Symbol, Text, UNICODE_ALPHABET};
use crate::error::{Error, Result};

const ALPHABET_HEADER: &str = "#alphabet";
const NON_REPETITIVE_HEADER: &str = "#non-repetitive";

pub fn parse_texts(input: &str) -> Result<Vec<Text>> {
    let mut alphabet: Option<u64> = None;
    let mut non_repetitive = false;
    let mut in_header = true;
    let mut texts = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() {
            continue;
        }
        if in_header {
            if let Some(rest) = line.strip_prefix(ALPHABET_HEADER) {
                let n = rest.trim().parse::<u64>().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad alphabet size: {e}"),
                })?;
                alphabet = Some(n);
                continue;
            }
            if line.trim_end() == NON_REPETITIVE_HEADER {
                non_repetitive = true;
                continue;
            }
        }
        in_header = false;
        let text = match alphabet {
            Some(size) => {
                let chars = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<Symbol>().map_err(|e| Error::Parse {
                            line: line_no,
                            message: format!("bad symbol {tok:?}: {e}"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Text::new(chars, size)
            }
            None => Text::from_utf8(line),
        };
        let text = text.and_then(|t| {
            if non_repetitive {
                t.into_non_repetitive()
            } else {
                Ok(t)
            }
        });
        texts.push(text.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?);
    }
    Ok(texts)
}

pub fn read_texts(path: impl AsRef<Path>) -> Result<Vec<Text>> {
    parse_texts(&std::fs::read_to_string(path)?)
}

/// Serializes texts, choosing UTF-8 lines when that round-trips exactly.
pub fn format_texts(texts: &[Text]) -> String {
    let mut out = String::new();
    let flagged = !texts.is_empty() && texts.iter().all(Text::is_non_repetitive);
    let utf8: Option<Vec<String>> = texts
        .iter()
        .map(|t| {
            let s = t.to_utf8()?;
            let plain = t.alphabet_size() == UNICODE_ALPHABET
                && !s.starts_with('#')
                && !s.contains(['\n', '\r']);
            plain.then_some(s)
        })
        .collect();
    if flagged {
        out.push_str(NON_REPETITIVE_HEADER);
        out.push('\n');
    }
    match utf8 {
        Some(lines) => {
            for l in lines {
                out.push_str(&l);
                out.push('\n');
            }
        }
        None => {
            let size = texts.iter().map(Text::alphabet_size).max().unwrap_or(1);
            let _ = writeln!(out, "{ALPHABET_HEADER} {size}");
            for t in texts {
                let line: Vec<String> = t.symbols().iter().map(u32::to_string).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

pub fn write_texts(path: impl AsRef<Path>, texts: &[Text]) -> Result<()> {
    std::fs::write(path, format_texts(texts))?;
    Ok(())
}
