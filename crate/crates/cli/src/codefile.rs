//! The text format for codes.
//!
//! ```text
//! # comment lines start with '#'
//! 3 2 4
//! 0 0 0
//! 0 1 1
//! 1 0 1
//! 1 1 0
//! ```
//!
//! The header holds `n q m` separated by single spaces. Each of the `m` word
//! lines holds `n` symbols in `0..q` separated by whitespace. Files are ASCII
//! with `\n` line endings and must end with a newline.

use std::collections::HashMap;
use std::fmt::Write as _;

use wfp_core::codes::Code;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in bytes.
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split([' ', '\t'])
        .scan(1, |col, tok| {
            let at = *col;
            *col += tok.len() + 1;
            Some((at, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

fn number(line: usize, column: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    if let Some(off) = tok.find(|c: char| !c.is_ascii_digit()) {
        return fail(line, column + off, format!("{what} must be a base-10 integer, found {tok:?}"));
    }
    tok.parse().or_else(|_| fail(line, column, format!("{what} {tok} is too large")))
}

pub fn parse(text: &str) -> Result<Code, ParseError> {
    for (i, line) in text.split('\n').enumerate() {
        if let Some(off) = line.find(|c: char| !c.is_ascii() || (c.is_ascii_control() && c != '\t')) {
            let what = if line[off..].starts_with('\r') { "carriage return (use \\n line endings)" } else { "non-ASCII or control character" };
            return fail(i + 1, off + 1, what);
        }
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.split('\n').count();
        let column = text.rsplit('\n').next().map_or(0, str::len) + 1;
        return fail(line, column, "missing trailing newline");
    };
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.starts_with('#'));

    let Some((hl, header)) = lines.next() else {
        return fail(1, 1, "missing header line \"n q m\"");
    };
    let parts: Vec<&str> = header.split(' ').collect();
    if parts.len() != 3 || parts.iter().any(|p| p.is_empty()) {
        return fail(hl, 1, "header must be three integers \"n q m\" separated by single spaces");
    }
    let cols = [1, parts[0].len() + 2, parts[0].len() + parts[1].len() + 3];
    let n = number(hl, cols[0], parts[0], "n")?;
    let q = number(hl, cols[1], parts[1], "q")?;
    let m = number(hl, cols[2], parts[2], "m")?;
    if !(1..=64).contains(&n) {
        return fail(hl, cols[0], format!("n = {n} outside 1..=64"));
    }
    if !(2..=256).contains(&q) {
        return fail(hl, cols[1], format!("q = {q} outside 2..=256"));
    }

    let mut words: Vec<Vec<u8>> = Vec::new();
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    for (ln, line) in lines {
        if words.len() == m {
            return fail(ln, 1, format!("more than m = {m} words"));
        }
        if line.trim().is_empty() {
            return fail(ln, 1, "empty line");
        }
        let mut word = Vec::with_capacity(n);
        for (k, (col, tok)) in tokens(line).enumerate() {
            if k == n {
                return fail(ln, col, format!("expected {n} symbols, found more"));
            }
            let s = number(ln, col, tok, "symbol")?;
            if s >= q {
                return fail(ln, col, format!("symbol {s} out of range for q = {q}"));
            }
            word.push(s as u8);
        }
        if word.len() < n {
            return fail(ln, line.len() + 1, format!("expected {n} symbols, found {}", word.len()));
        }
        if let Some(first) = seen.insert(word.clone(), ln) {
            return fail(ln, 1, format!("word repeats line {first}"));
        }
        words.push(word);
    }
    if words.len() < m {
        let last = body.split('\n').count();
        return fail(last + 1, 1, format!("expected {m} words, found {}", words.len()));
    }
    Code::new(n, q, words).or_else(|e| fail(hl, 1, e.to_string()))
}

pub fn render(code: &Code) -> String {
    let mut out = format!("{} {} {}\n", code.n(), code.q(), code.len());
    for w in code.words() {
        for (p, s) in w.iter().enumerate() {
            if p > 0 {
                out.push(' ');
            }
            write!(out, "{s}").unwrap();
        }
        out.push('\n');
    }
    out
}
