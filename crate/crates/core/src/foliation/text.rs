//! ```text
//! tiling v1 n=1
//! tile 0 T110 max h=1
//! tile 1 T110 min h=-1/2
//! edge 0:0 1:0 arc
//! ```

use std::fmt::Write;

use num_rational::Rational64;
use thiserror::Error;

use super::{Extremum, Gluing, Label, Polarity, SlotRef, Tile, TileKind, TilingTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: bad token `{token}`: {reason}")]
pub struct TilingParseError {
    pub line: usize,
    pub token: String,
    pub reason: &'static str,
}

fn err(line: usize, token: &str, reason: &'static str) -> TilingParseError {
    TilingParseError {
        line,
        token: token.to_string(),
        reason,
    }
}

fn polarity_str(p: Polarity) -> &'static str {
    match p {
        Polarity::Up => "up",
        Polarity::Down => "down",
    }
}

fn extremum_str(e: Extremum) -> &'static str {
    match e {
        Extremum::Min => "min",
        Extremum::Max => "max",
    }
}

impl TilingTree {
    pub fn to_text(&self) -> String {
        let mut out = format!("tiling v1 n={}\n", self.bridge_index);
        for t in &self.tiles {
            let tag = match t.kind {
                TileKind::T440 => String::new(),
                TileKind::T221(p) | TileKind::T003(p) => format!(" {}", polarity_str(p)),
                TileKind::T001(e) | TileKind::T110(e) => format!(" {}", extremum_str(e)),
            };
            writeln!(out, "tile {} {}{} h={}", t.id, t.kind.name(), tag, t.height).unwrap();
        }
        for e in &self.edges {
            let label = match e.label {
                Label::Arc => "arc",
                Label::Circle => "circle",
            };
            write!(out, "edge {} {} {}", e.a, e.b, label).unwrap();
            if let Some(x) = e.inside {
                write!(out, " inside={x}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TilingParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines
            .next()
            .ok_or_else(|| err(1, "", "missing `tiling v1 n=<n>` header"))?;
        let bridge_index = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["tiling", "v1", n] => {
                let v = n
                    .strip_prefix("n=")
                    .ok_or_else(|| err(no, n, "expected n=<bridge index>"))?;
                v.parse()
                    .map_err(|_| err(no, v, "bridge index must be a nonnegative integer"))?
            }
            _ => return Err(err(no, header, "expected `tiling v1 n=<n>`")),
        };
        let mut tiles = Vec::new();
        let mut edges = Vec::new();
        for (no, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.first().copied() {
                Some("tile") => tiles.push(parse_tile(no, &toks[1..])?),
                Some("edge") => edges.push(parse_edge(no, &toks[1..])?),
                _ => {
                    return Err(err(
                        no,
                        toks.first().unwrap_or(&""),
                        "expected `tile` or `edge`",
                    ))
                }
            }
        }
        Ok(Self {
            bridge_index,
            tiles,
            edges,
        })
    }
}

fn parse_tile(no: usize, toks: &[&str]) -> Result<Tile, TilingParseError> {
    let id_tok = toks.first().ok_or_else(|| err(no, "", "missing tile id"))?;
    let id = id_tok
        .parse()
        .map_err(|_| err(no, id_tok, "tile id must be a nonnegative integer"))?;
    let kind_tok = *toks
        .get(1)
        .ok_or_else(|| err(no, "", "missing tile kind"))?;
    let mut rest = &toks[2..];
    let mut tag = || -> Result<&str, TilingParseError> {
        let (&t, tail) = rest
            .split_first()
            .ok_or_else(|| err(no, kind_tok, "missing up|down|min|max"))?;
        rest = tail;
        Ok(t)
    };
    let polarity = |t: &str| match t {
        "up" => Ok(Polarity::Up),
        "down" => Ok(Polarity::Down),
        _ => Err(err(no, t, "expected up|down")),
    };
    let extremum = |t: &str| match t {
        "min" => Ok(Extremum::Min),
        "max" => Ok(Extremum::Max),
        _ => Err(err(no, t, "expected min|max")),
    };
    let kind = match kind_tok {
        "T440" => TileKind::T440,
        "T221" => TileKind::T221(polarity(tag()?)?),
        "T003" => TileKind::T003(polarity(tag()?)?),
        "T001" => TileKind::T001(extremum(tag()?)?),
        "T110" => TileKind::T110(extremum(tag()?)?),
        other => return Err(err(no, other, "unknown tile kind")),
    };
    let h_tok = match rest {
        [h] => *h,
        [] => return Err(err(no, kind_tok, "missing h=<rational>")),
        [_, extra, ..] => return Err(err(no, extra, "unexpected token")),
    };
    let value = h_tok
        .strip_prefix("h=")
        .ok_or_else(|| err(no, h_tok, "expected h=<rational>"))?;
    let height: Rational64 = value
        .parse()
        .map_err(|_| err(no, value, "height must be a rational p/q"))?;
    Ok(Tile { id, kind, height })
}

fn parse_slot(no: usize, tok: &str) -> Result<SlotRef, TilingParseError> {
    let (t, s) = tok
        .split_once(':')
        .ok_or_else(|| err(no, tok, "expected <tile>:<slot>"))?;
    Ok(SlotRef {
        tile: t
            .parse()
            .map_err(|_| err(no, t, "tile id must be a nonnegative integer"))?,
        slot: s
            .parse()
            .map_err(|_| err(no, s, "slot must be a nonnegative integer"))?,
    })
}

fn parse_edge(no: usize, toks: &[&str]) -> Result<Gluing, TilingParseError> {
    let (a, b, label, rest) = match toks {
        [a, b, l, rest @ ..] => (*a, *b, *l, rest),
        _ => {
            return Err(err(
                no,
                toks.last().unwrap_or(&""),
                "expected <t>:<s> <t>:<s> arc|circle",
            ))
        }
    };
    let label = match label {
        "arc" => Label::Arc,
        "circle" => Label::Circle,
        other => return Err(err(no, other, "expected arc|circle")),
    };
    let inside = match rest {
        [] => None,
        [x] => {
            let v = x
                .strip_prefix("inside=")
                .ok_or_else(|| err(no, x, "expected inside=<edge>"))?;
            Some(
                v.parse()
                    .map_err(|_| err(no, v, "edge index must be a nonnegative integer"))?,
            )
        }
        [_, extra, ..] => return Err(err(no, extra, "unexpected token")),
    };
    Ok(Gluing {
        a: parse_slot(no, a)?,
        b: parse_slot(no, b)?,
        label,
        inside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::random_valid_tiling;

    #[test]
    fn round_trip() {
        for seed in 0..20 {
            let t = random_valid_tiling(seed, 3, 10);
            assert_eq!(TilingTree::parse(&t.to_text()).unwrap(), t);
        }
    }

    #[test]
    fn diagnostics_name_tokens() {
        let e = TilingTree::parse("tiling v1 n=1\ntile 0 T111 h=0\n").unwrap_err();
        assert_eq!((e.line, e.token.as_str()), (2, "T111"));
        let e = TilingTree::parse("tiling v1 n=1\ntile 0 T221 sideways h=0\n").unwrap_err();
        assert_eq!(e.token, "sideways");
        let e = TilingTree::parse("tiling v1 n=1\ntile 0 T440 h=x\n").unwrap_err();
        assert_eq!(e.token, "x");
        let e = TilingTree::parse("tiling v1 n=1\nedge 0:0 1:q arc\n").unwrap_err();
        assert_eq!(e.token, "q");
        assert!(TilingTree::parse("tiling v2\n").is_err());
    }
}
