//! The `.appr` text format.
//!
//! ```text
//! pav 2 7 2      # optional instance line: rule k d_num d_den
//! 3 3            # m n
//! 0 1
//! 1 2
//! 0
//! ```
//!
//! Each of the `n` lines after the header is one vote; an empty line is an
//! empty vote. Lines starting with `#` are ignored.

use std::path::Path;

use crate::election::{Election, Instance, Rule};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Contents of an `.appr` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApprFile {
    pub election: Election,
    pub header: Option<(Rule, usize, Rational)>,
}

impl ApprFile {
    pub fn into_instance(self) -> Result<Instance> {
        let (rule, k, d) = self.header.ok_or_else(|| Error::Parse { line: 0, msg: "missing instance line".into() })?;
        Instance::new(self.election, rule, k, d)
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn int<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| perr(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse(text: &str) -> Result<ApprFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.starts_with('#'));
    let mut header = None;
    let (mut m, mut n) = (None, 0usize);
    for (ln, raw) in lines.by_ref() {
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks[0].chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
            if header.is_some() {
                return Err(perr(ln, "duplicate instance line"));
            }
            if toks.len() != 4 {
                return Err(perr(ln, "instance line must be `rule k d_num d_den`"));
            }
            let rule: Rule = toks[0].parse().map_err(|e: String| perr(ln, e))?;
            let k: usize = int(ln, toks[1])?;
            let num: i128 = toks[2].parse().map_err(|_| perr(ln, format!("bad numerator {:?}", toks[2])))?;
            let den: i128 = int(ln, toks[3])?;
            if den == 0 {
                return Err(perr(ln, "zero denominator"));
            }
            header = Some((rule, k, Rational::new(num, den)));
            continue;
        }
        if toks.len() != 2 {
            return Err(perr(ln, "expected `m n`"));
        }
        m = Some(int::<usize>(ln, toks[0])?);
        n = int(ln, toks[1])?;
        break;
    }
    let m = m.ok_or_else(|| perr(0, "missing `m n` line"))?;
    let mut votes = Vec::with_capacity(n);
    let mut last = 0;
    for (ln, raw) in lines.by_ref().take(n) {
        let vote = raw.split_whitespace().map(|t| int::<usize>(ln, t)).collect::<Result<Vec<usize>>>()?;
        if let Some(&c) = vote.iter().find(|&&c| c >= m) {
            return Err(perr(ln, format!("candidate {c} out of range for m = {m}")));
        }
        votes.push(vote);
        last = ln;
    }
    if votes.len() < n {
        return Err(perr(last, format!("expected {n} votes, found {}", votes.len())));
    }
    for (ln, raw) in lines {
        if !raw.trim().is_empty() {
            return Err(perr(ln, "unexpected content after the last vote"));
        }
    }
    let election = Election::new(m, votes)?;
    if let Some((_, k, _)) = header {
        if k > m {
            return Err(perr(0, format!("committee size {k} exceeds m = {m}")));
        }
    }
    Ok(ApprFile { election, header })
}

pub fn parse_election(text: &str) -> Result<Election> {
    parse(text).map(|f| f.election)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse(text)?.into_instance()
}

pub fn write_election(e: &Election) -> String {
    let mut out = format!("{} {}\n", e.m(), e.n());
    for v in e.votes() {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_instance(inst: &Instance) -> String {
    format!("{} {} {} {}\n{}", inst.rule, inst.k, inst.d.numer(), inst.d.denom(), write_election(&inst.election))
}

pub fn read_file(path: &Path) -> Result<ApprFile> {
    parse(&std::fs::read_to_string(path)?)
}
