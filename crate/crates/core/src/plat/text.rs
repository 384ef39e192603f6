//! The three-line plat record:
//!
//! ```text
//! plat v1
//! strands=4
//! word=2 -1 3
//! ```

use thiserror::Error;

use super::Plat;
use crate::braid::write_letters;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlatParseError {
    #[error("line {line}: expected `{expected}`, found `{found}`")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line 2: bad strand count `{token}`: {reason}")]
    BadStrands { token: String, reason: &'static str },
    #[error("line 3: bad letter `{token}`: {reason}")]
    BadLetter { token: String, reason: String },
    #[error("unexpected trailing line `{0}`")]
    Trailing(String),
}

pub(super) fn render(p: &Plat) -> String {
    let mut out = format!("plat v1\nstrands={}\nword=", p.strands());
    write_letters(&mut out, p.letters()).expect("writing to a String");
    out
}

impl Plat {
    pub fn to_text(&self) -> String {
        format!("{}\n", render(self))
    }

    pub fn parse(text: &str) -> Result<Self, PlatParseError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let malformed = |line, expected, found: Option<&str>| PlatParseError::Malformed {
            line,
            expected,
            found: found.unwrap_or("end of input").to_string(),
        };
        match lines.next() {
            Some("plat v1") => {}
            other => return Err(malformed(1, "plat v1", other)),
        }
        let line = lines.next();
        let token = line
            .and_then(|l| l.strip_prefix("strands="))
            .ok_or_else(|| malformed(2, "strands=<2n>", line))?
            .trim();
        let strands: usize = token.parse().map_err(|_| PlatParseError::BadStrands {
            token: token.to_string(),
            reason: "not an integer",
        })?;
        if strands < 2 || strands % 2 == 1 {
            return Err(PlatParseError::BadStrands {
                token: token.to_string(),
                reason: "must be even and at least 2",
            });
        }
        let line = lines.next();
        let body = line
            .and_then(|l| l.strip_prefix("word="))
            .ok_or_else(|| malformed(3, "word=<letters>", line))?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let g: i32 = tok.parse().map_err(|_| PlatParseError::BadLetter {
                token: tok.to_string(),
                reason: "not an integer".into(),
            })?;
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(PlatParseError::BadLetter {
                    token: tok.to_string(),
                    reason: format!("generators on {strands} strands are ±1..±{}", strands - 1),
                });
            }
            letters.push(g);
        }
        if let Some(extra) = lines.next() {
            return Err(PlatParseError::Trailing(extra.to_string()));
        }
        Ok(Plat::new(strands / 2, letters).expect("letters validated above"))
    }
}
