//! ```text
//! trace v1 outcome=reached-standard
//! step 0 strands=4 word=2 move=isotopy(op=identity)
//! step 1 strands=2 word= move=destabilize()
//! ```
//!
//! Words are comma separated. A `crossing-cap=<c>` token may follow the
//! outcome.

use std::fmt::Write;

use thiserror::Error;

use crate::plat::{MoveRecord, Plat};

use super::{Outcome, SimplificationTrace, TraceStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: bad token `{token}`: {reason}")]
pub struct TraceParseError {
    pub line: usize,
    pub token: String,
    pub reason: String,
}

fn err(line: usize, token: &str, reason: impl Into<String>) -> TraceParseError {
    TraceParseError {
        line,
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn field<'a>(line: usize, tok: Option<&&'a str>, key: &str) -> Result<&'a str, TraceParseError> {
    let tok = tok.copied().unwrap_or("");
    tok.strip_prefix(key)
        .ok_or_else(|| err(line, tok, format!("expected {key}…")))
}

impl SimplificationTrace {
    pub fn to_text(&self) -> String {
        let mut out = format!("trace v1 outcome={}", self.outcome);
        if let Some(cap) = self.crossing_cap {
            write!(out, " crossing-cap={cap}").unwrap();
        }
        out.push('\n');
        for (i, s) in self.steps.iter().enumerate() {
            let word: Vec<String> = s.plat.letters().iter().map(i32::to_string).collect();
            writeln!(
                out,
                "step {i} strands={} word={} move={}",
                s.plat.strands(),
                word.join(","),
                s.record
            )
            .unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TraceParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines
            .next()
            .ok_or_else(|| err(1, "", "missing `trace v1` header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.get(..2) != Some(&["trace", "v1"][..]) {
            return Err(err(no, header, "expected `trace v1 outcome=<...>`"));
        }
        let outcome = match field(no, toks.get(2), "outcome=")? {
            "reached-standard" => Outcome::ReachedStandard,
            "budget-exhausted" => Outcome::BudgetExhausted,
            other => return Err(err(no, other, "expected reached-standard|budget-exhausted")),
        };
        let crossing_cap = match toks.get(3) {
            None => None,
            Some(_) => {
                let v = field(no, toks.get(3), "crossing-cap=")?;
                Some(
                    v.parse()
                        .map_err(|_| err(no, v, "cap must be a nonnegative integer"))?,
                )
            }
        };
        if let Some(extra) = toks.get(4) {
            return Err(err(no, extra, "unexpected token"));
        }
        let mut steps = Vec::new();
        for (no, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.first() != Some(&"step") {
                return Err(err(no, toks.first().unwrap_or(&""), "expected `step`"));
            }
            let idx = toks.get(1).copied().unwrap_or("");
            if idx.parse::<usize>().ok() != Some(steps.len()) {
                return Err(err(
                    no,
                    idx,
                    format!("expected step number {}", steps.len()),
                ));
            }
            let strands_tok = field(no, toks.get(2), "strands=")?;
            let strands: usize = strands_tok
                .parse()
                .map_err(|_| err(no, strands_tok, "strand count must be an integer"))?;
            if strands < 2 || strands % 2 == 1 {
                return Err(err(
                    no,
                    strands_tok,
                    "strand count must be even and at least 2",
                ));
            }
            let word_tok = field(no, toks.get(3), "word=")?;
            let mut letters = Vec::new();
            for g in word_tok.split(',').filter(|g| !g.is_empty()) {
                letters.push(
                    g.parse::<i32>()
                        .map_err(|_| err(no, g, "letter must be an integer"))?,
                );
            }
            let plat =
                Plat::new(strands / 2, letters).map_err(|e| err(no, word_tok, e.to_string()))?;
            let move_tok = field(no, toks.get(4), "move=")?;
            let (mv, reduced) =
                crate::plat::Move::parse_step(move_tok).map_err(|e| err(no, &e.token, e.reason))?;
            if let Some(extra) = toks.get(5) {
                return Err(err(no, extra, "unexpected token"));
            }
            let record = MoveRecord::describe(mv, reduced, &plat);
            steps.push(TraceStep { plat, record });
        }
        Ok(Self {
            steps,
            outcome,
            crossing_cap,
        })
    }
}
