use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Plat, PlatError};
use crate::braid::{BraidWord, Direction, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
}

/// Flip into the plane of the diagram or out of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipDirection {
    In,
    Out,
}

impl FlipDirection {
    pub fn opposite(self) -> Self {
        match self {
            FlipDirection::In => FlipDirection::Out,
            FlipDirection::Out => FlipDirection::In,
        }
    }
}

/// One double coset move: multiply by a Hilden generator on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetStep {
    pub side: Side,
    pub gen: usize,
    pub inverted: bool,
}

impl CosetStep {
    pub fn inverse(self) -> Self {
        Self {
            inverted: !self.inverted,
            ..self
        }
    }
}

/// Braid isotopies: rewrites that keep the braid element fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsotopyOp {
    Identity,
    FreeReduce,
    Rewrite {
        pos: usize,
        relation: Relation,
        direction: Direction,
    },
    /// Cancels letters `i < j` with `w[j] = −w[i]` when everything between
    /// them commutes with `w[i]`.
    Cancel {
        i: usize,
        j: usize,
    },
    /// Deletes letters `start..end` when they spell the trivial braid.
    DeleteTrivial {
        start: usize,
        end: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Isotopy(IsotopyOp),
    Stabilize,
    Destabilize,
    DoubleCoset(CosetStep),
    Flip {
        split: usize,
        k: usize,
        direction: FlipDirection,
    },
    Microflip {
        start: usize,
        block: usize,
        gap: usize,
        split: usize,
        direction: FlipDirection,
    },
    Pocket(Vec<CosetStep>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Isotopy,
    Stabilize,
    Destabilize,
    DoubleCoset,
    Flip,
    Microflip,
    Pocket,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Isotopy => "isotopy",
            MoveKind::Stabilize => "stabilize",
            MoveKind::Destabilize => "destabilize",
            MoveKind::DoubleCoset => "double_coset",
            MoveKind::Flip => "flip",
            MoveKind::Microflip => "microflip",
            MoveKind::Pocket => "pocket",
        }
    }

    /// Change in bridge index.
    pub fn index_change(self) -> i32 {
        match self {
            MoveKind::Stabilize => 1,
            MoveKind::Destabilize => -1,
            _ => 0,
        }
    }
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::Isotopy(_) => MoveKind::Isotopy,
            Move::Stabilize => MoveKind::Stabilize,
            Move::Destabilize => MoveKind::Destabilize,
            Move::DoubleCoset(_) => MoveKind::DoubleCoset,
            Move::Flip { .. } => MoveKind::Flip,
            Move::Microflip { .. } => MoveKind::Microflip,
            Move::Pocket(_) => MoveKind::Pocket,
        }
    }

    pub fn apply(&self, p: &Plat) -> Result<Plat, PlatError> {
        match self {
            Move::Isotopy(op) => apply_isotopy(p, *op),
            Move::Stabilize => Ok(p.stabilize()),
            Move::Destabilize => p.destabilize(),
            Move::DoubleCoset(s) => p.double_coset_move(s.side, s.gen, s.inverted),
            Move::Flip {
                split,
                k,
                direction,
            } => p.flip(*split, *k, *direction),
            Move::Microflip {
                start,
                block,
                gap,
                split,
                direction,
            } => p.microflip(*start, *block, *gap, *split, *direction),
            Move::Pocket(script) => p.pocket_move(script),
        }
    }
}

fn apply_isotopy(p: &Plat, op: IsotopyOp) -> Result<Plat, PlatError> {
    let letters = p.letters();
    match op {
        IsotopyOp::Identity => Ok(p.clone()),
        IsotopyOp::FreeReduce => Ok(p.free_reduce()),
        IsotopyOp::Rewrite {
            pos,
            relation,
            direction,
        } => Plat::from_word(p.word().apply_relation(pos, relation, direction)?),
        IsotopyOp::Cancel { i, j } => {
            let ok = i < j
                && j < letters.len()
                && letters[j] == -letters[i]
                && letters[i + 1..j]
                    .iter()
                    .all(|g| (g.abs() - letters[i].abs()).abs() >= 2);
            if !ok {
                return Err(PlatError::NotCancellable { i, j });
            }
            let rest = letters
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != i && x != j)
                .map(|(_, &g)| g)
                .collect();
            p.with_letters(rest)
        }
        IsotopyOp::DeleteTrivial { start, end } => {
            let bad = PlatError::NotTrivial { start, end };
            if start >= end || end > letters.len() {
                return Err(bad);
            }
            let window = BraidWord::new(p.strands(), letters[start..end].to_vec())?;
            if !window.is_trivial() {
                return Err(bad);
            }
            let mut rest = letters[..start].to_vec();
            rest.extend_from_slice(&letters[end..]);
            p.with_letters(rest)
        }
    }
}

/// One audited step: the move, whether the result was then passed through
/// [`Plat::reduce_cancellations`], and the resulting counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveRecord {
    pub mv: Move,
    pub reduced: bool,
    pub crossing_count_after: usize,
    pub bridge_index_after: usize,
}

impl MoveRecord {
    pub fn kind(&self) -> MoveKind {
        self.mv.kind()
    }

    /// Applies the move (and the trailing cancellation pass, if any).
    pub fn replay(mv: &Move, reduced: bool, p: &Plat) -> Result<Plat, PlatError> {
        let out = mv.apply(p)?;
        Ok(if reduced {
            out.reduce_cancellations()
        } else {
            out
        })
    }

    pub fn describe(mv: Move, reduced: bool, after: &Plat) -> Self {
        Self {
            mv,
            reduced,
            crossing_count_after: after.crossing_count(),
            bridge_index_after: after.bridge_index(),
        }
    }
}

/// `{σ₁, σ₂σ₁²σ₂, σ_{2i}σ_{2i−1}σ_{2i+1}σ_{2i} : 1 ≤ i ≤ n−1}` in `B_{2n}`.
pub fn hilden_generators(bridge_index: usize) -> Vec<BraidWord> {
    let m = 2 * bridge_index;
    let mut gens = vec![vec![1]];
    if bridge_index >= 2 {
        gens.push(vec![2, 1, 1, 2]);
    }
    for i in 1..bridge_index as i32 {
        gens.push(vec![2 * i, 2 * i - 1, 2 * i + 1, 2 * i]);
    }
    gens.into_iter()
        .map(|letters| BraidWord::new(m, letters).expect("Hilden generators fit"))
        .collect()
}

/// The word inserted by a flip across the gap between strands `k` and
/// `k+1` of a block `width` strands wide, with every subscript shifted by
/// `shift`.
///
/// `In`:  `(σ₁…σ_{k−1})^k · (σ_{w−1}⁻¹…σ_{k+1}⁻¹)^{w−k}`
/// `Out`: `(σ_{k−1}⁻¹…σ₁⁻¹)^k · (σ_{k+1}…σ_{w−1})^{w−k}`
pub fn flip_word(k: usize, direction: FlipDirection, width: usize, shift: usize) -> Vec<i32> {
    let (k, w, s) = (k as i32, width as i32, shift as i32);
    let left: Vec<i32> = match direction {
        FlipDirection::In => (1..k).map(|i| i + s).collect(),
        FlipDirection::Out => (1..k).rev().map(|i| -(i + s)).collect(),
    };
    let right: Vec<i32> = match direction {
        FlipDirection::In => (k + 1..w).rev().map(|i| -(i + s)).collect(),
        FlipDirection::Out => (k + 1..w).map(|i| i + s).collect(),
    };
    let mut out = left.repeat(k as usize);
    out.extend(right.repeat((w - k) as usize));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad move `{token}`: {reason}")]
pub struct MoveParseError {
    pub token: String,
    pub reason: String,
}

fn perr(token: &str, reason: impl Into<String>) -> MoveParseError {
    MoveParseError {
        token: token.to_string(),
        reason: reason.into(),
    }
}

struct Params<'a> {
    pairs: Vec<(&'a str, &'a str)>,
    used: Vec<bool>,
}

impl<'a> Params<'a> {
    fn parse(body: &'a str) -> Result<Self, MoveParseError> {
        let mut pairs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| perr(item, "expected key=value"))?;
            pairs.push((k.trim(), v.trim()));
        }
        let used = vec![false; pairs.len()];
        Ok(Self { pairs, used })
    }

    fn get(&mut self, key: &str) -> Option<&'a str> {
        let idx = self.pairs.iter().position(|(k, _)| *k == key)?;
        self.used[idx] = true;
        Some(self.pairs[idx].1)
    }

    fn req(&mut self, key: &str) -> Result<&'a str, MoveParseError> {
        self.get(key).ok_or_else(|| perr(key, "missing parameter"))
    }

    fn num(&mut self, key: &str) -> Result<usize, MoveParseError> {
        let v = self.req(key)?;
        v.parse()
            .map_err(|_| perr(v, format!("`{key}` must be a nonnegative integer")))
    }

    fn finish(self) -> Result<(), MoveParseError> {
        match self.used.iter().position(|u| !u) {
            Some(i) => Err(perr(self.pairs[i].0, "unknown parameter")),
            None => Ok(()),
        }
    }
}

fn parse_dir(v: &str) -> Result<FlipDirection, MoveParseError> {
    match v {
        "in" => Ok(FlipDirection::In),
        "out" => Ok(FlipDirection::Out),
        _ => Err(perr(v, "direction must be in|out")),
    }
}

fn parse_side(v: &str) -> Result<Side, MoveParseError> {
    match v {
        "top" => Ok(Side::Top),
        "bottom" => Ok(Side::Bottom),
        _ => Err(perr(v, "side must be top|bottom")),
    }
}

fn parse_flag(v: &str) -> Result<bool, MoveParseError> {
    match v {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(perr(v, "flag must be 0|1")),
    }
}

fn parse_script(v: &str) -> Result<Vec<CosetStep>, MoveParseError> {
    v.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let parts: Vec<&str> = item.split(':').collect();
            match parts.as_slice() {
                [side, gen, inv] => Ok(CosetStep {
                    side: parse_side(side)?,
                    gen: gen
                        .parse()
                        .map_err(|_| perr(gen, "generator index must be an integer"))?,
                    inverted: parse_flag(inv)?,
                }),
                _ => Err(perr(item, "pocket steps are side:gen:inv")),
            }
        })
        .collect()
}

impl Move {
    /// Parses either the trace spelling (`double_coset(side=top,gen=1,inv=0)`)
    /// or the short command spelling (`dc(...)`, `stab`, `destab`, `rw(...)`,
    /// `reduce`). A trailing `+reduce` marks the cancellation pass folded
    /// into the step.
    pub fn parse_step(text: &str) -> Result<(Move, bool), MoveParseError> {
        let text = text.trim();
        let (body, reduced) = match text.strip_suffix("+reduce") {
            Some(b) => (b.trim_end(), true),
            None => (text, false),
        };
        Ok((body.parse()?, reduced))
    }
}

impl FromStr for Move {
    type Err = MoveParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let (name, body) = match text.find('(') {
            Some(open) => {
                let close = text
                    .strip_suffix(')')
                    .ok_or_else(|| perr(text, "missing closing parenthesis"))?;
                (&text[..open], &close[open + 1..])
            }
            None => (text, ""),
        };
        let mut ps = Params::parse(body)?;
        let mv = match name.trim() {
            "stab" | "stabilize" => Move::Stabilize,
            "destab" | "destabilize" => Move::Destabilize,
            "reduce" => Move::Isotopy(IsotopyOp::FreeReduce),
            "dc" | "double_coset" => Move::DoubleCoset(CosetStep {
                side: parse_side(ps.req("side")?)?,
                gen: ps.num("gen")?,
                inverted: parse_flag(ps.req("inv")?)?,
            }),
            "flip" => Move::Flip {
                split: ps.num("split")?,
                k: ps.num("k")?,
                direction: parse_dir(ps.req("dir")?)?,
            },
            "microflip" => {
                let block = ps.num("k")?;
                let gap = match ps.get("gap") {
                    Some(v) => v.parse().map_err(|_| perr(v, "`gap` must be an integer"))?,
                    None => block / 2,
                };
                Move::Microflip {
                    start: ps.num("start")?,
                    block,
                    gap,
                    split: ps.num("split")?,
                    direction: parse_dir(ps.req("dir")?)?,
                }
            }
            "pocket" => Move::Pocket(parse_script(ps.get("script").unwrap_or(""))?),
            "rw" => parse_rewrite(&mut ps)?,
            "isotopy" => {
                let op = ps.req("op")?;
                match op {
                    "identity" => Move::Isotopy(IsotopyOp::Identity),
                    "reduce" => Move::Isotopy(IsotopyOp::FreeReduce),
                    "rw" => parse_rewrite(&mut ps)?,
                    "cancel" => Move::Isotopy(IsotopyOp::Cancel {
                        i: ps.num("i")?,
                        j: ps.num("j")?,
                    }),
                    "delete" => Move::Isotopy(IsotopyOp::DeleteTrivial {
                        start: ps.num("start")?,
                        end: ps.num("end")?,
                    }),
                    other => return Err(perr(other, "unknown isotopy op")),
                }
            }
            other => return Err(perr(other, "unknown move")),
        };
        ps.finish()?;
        Ok(mv)
    }
}

fn parse_rewrite(ps: &mut Params<'_>) -> Result<Move, MoveParseError> {
    let pos = ps.num("pos")?;
    let relation = match ps.req("rel")? {
        "comm" => Relation::FarCommutation,
        "braid" => Relation::BraidRelation,
        other => return Err(perr(other, "relation must be comm|braid")),
    };
    let direction = match ps.req("dir")? {
        "fwd" => Direction::Forward,
        "rev" => Direction::Reverse,
        other => return Err(perr(other, "direction must be fwd|rev")),
    };
    Ok(Move::Isotopy(IsotopyOp::Rewrite {
        pos,
        relation,
        direction,
    }))
}

fn dir_str(d: FlipDirection) -> &'static str {
    match d {
        FlipDirection::In => "in",
        FlipDirection::Out => "out",
    }
}

fn side_str(s: Side) -> &'static str {
    match s {
        Side::Top => "top",
        Side::Bottom => "bottom",
    }
}

impl fmt::Display for CosetStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            side_str(self.side),
            self.gen,
            self.inverted as u8
        )
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.kind().name();
        match self {
            Move::Isotopy(op) => match op {
                IsotopyOp::Identity => write!(f, "{name}(op=identity)"),
                IsotopyOp::FreeReduce => write!(f, "{name}(op=reduce)"),
                IsotopyOp::Rewrite {
                    pos,
                    relation,
                    direction,
                } => {
                    let rel = match relation {
                        Relation::FarCommutation => "comm",
                        Relation::BraidRelation => "braid",
                    };
                    let dir = match direction {
                        Direction::Forward => "fwd",
                        Direction::Reverse => "rev",
                    };
                    write!(f, "{name}(op=rw,pos={pos},rel={rel},dir={dir})")
                }
                IsotopyOp::Cancel { i, j } => write!(f, "{name}(op=cancel,i={i},j={j})"),
                IsotopyOp::DeleteTrivial { start, end } => {
                    write!(f, "{name}(op=delete,start={start},end={end})")
                }
            },
            Move::Stabilize | Move::Destabilize => write!(f, "{name}()"),
            Move::DoubleCoset(s) => write!(
                f,
                "{name}(side={},gen={},inv={})",
                side_str(s.side),
                s.gen,
                s.inverted as u8
            ),
            Move::Flip {
                split,
                k,
                direction,
            } => {
                write!(f, "{name}(split={split},k={k},dir={})", dir_str(*direction))
            }
            Move::Microflip {
                start,
                block,
                gap,
                split,
                direction,
            } => write!(
                f,
                "{name}(start={start},k={block},gap={gap},split={split},dir={})",
                dir_str(*direction)
            ),
            Move::Pocket(script) => {
                write!(f, "{name}(script=")?;
                for (i, s) in script.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mv)?;
        if self.reduced {
            f.write_str("+reduce")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_words_match_closed_forms() {
        // k = 1, in: ((σ_{2n−1})⁻¹…(σ₂)⁻¹)^{2n−1}
        assert_eq!(
            flip_word(1, FlipDirection::In, 4, 0),
            vec![-3, -2, -3, -2, -3, -2]
        );
        // k = 1, out: (σ₂…σ_{2n−1})^{2n−1}
        assert_eq!(
            flip_word(1, FlipDirection::Out, 4, 0),
            vec![2, 3, 2, 3, 2, 3]
        );
        // k = 2n−1, in: (σ₁…σ_{2n−2})^{2n−1}
        assert_eq!(
            flip_word(3, FlipDirection::In, 4, 0),
            vec![1, 2, 1, 2, 1, 2]
        );
        // k = 2n−1, out: ((σ_{2n−2})⁻¹…(σ₁)⁻¹)^{2n−1}
        assert_eq!(
            flip_word(3, FlipDirection::Out, 4, 0),
            vec![-2, -1, -2, -1, -2, -1]
        );
        assert_eq!(flip_word(2, FlipDirection::In, 4, 0), vec![1, 1, -3, -3]);
        assert_eq!(flip_word(2, FlipDirection::Out, 4, 0), vec![-1, -1, 3, 3]);
        assert!(flip_word(1, FlipDirection::In, 2, 0).is_empty());
        assert_eq!(flip_word(2, FlipDirection::In, 4, 2), vec![3, 3, -5, -5]);
    }

    #[test]
    fn flip_directions_are_inverse_braids() {
        for width in [2usize, 4, 6] {
            for k in 1..width {
                let a = BraidWord::new(width, flip_word(k, FlipDirection::In, width, 0)).unwrap();
                let b = BraidWord::new(width, flip_word(k, FlipDirection::Out, width, 0)).unwrap();
                assert!(a.concat(&b).unwrap().is_trivial(), "width {width} k {k}");
            }
        }
    }

    #[test]
    fn move_text_round_trips() {
        let samples = [
            "isotopy(op=identity)",
            "isotopy(op=reduce)",
            "isotopy(op=rw,pos=2,rel=braid,dir=rev)",
            "isotopy(op=cancel,i=1,j=4)",
            "isotopy(op=delete,start=0,end=6)",
            "stabilize()",
            "destabilize()",
            "double_coset(side=bottom,gen=2,inv=1)",
            "flip(split=3,k=1,dir=in)",
            "microflip(start=3,k=4,gap=2,split=0,dir=out)",
            "pocket(script=top:1:0;bottom:0:1)",
            "pocket(script=)",
        ];
        for s in samples {
            let m: Move = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
    }

    #[test]
    fn command_spellings() {
        assert_eq!("stab".parse::<Move>().unwrap(), Move::Stabilize);
        assert_eq!("destab".parse::<Move>().unwrap(), Move::Destabilize);
        let m: Move = "dc(side=top,gen=0,inv=1)".parse().unwrap();
        assert_eq!(
            m,
            Move::DoubleCoset(CosetStep {
                side: Side::Top,
                gen: 0,
                inverted: true
            })
        );
        let m: Move = "rw(pos=0,rel=comm,dir=fwd)".parse().unwrap();
        assert!(matches!(
            m,
            Move::Isotopy(IsotopyOp::Rewrite { pos: 0, .. })
        ));
        let m: Move = "microflip(start=1,k=4,split=0,dir=in)".parse().unwrap();
        assert!(matches!(m, Move::Microflip { gap: 2, .. }));
        let (m, reduced) = Move::parse_step("flip(split=0,k=1,dir=in)+reduce").unwrap();
        assert!(reduced && m.kind() == MoveKind::Flip);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let e = "flip(split=0,k=1,dir=sideways)"
            .parse::<Move>()
            .unwrap_err();
        assert_eq!(e.token, "sideways");
        let e = "flip(split=0,k=1)".parse::<Move>().unwrap_err();
        assert_eq!(e.token, "dir");
        let e = "flip(split=0,k=1,dir=in,color=red)"
            .parse::<Move>()
            .unwrap_err();
        assert_eq!(e.token, "color");
        let e = "twist".parse::<Move>().unwrap_err();
        assert_eq!(e.token, "twist");
        let e = "dc(side=top,gen=x,inv=0)".parse::<Move>().unwrap_err();
        assert_eq!(e.token, "x");
    }

    #[test]
    fn isotopy_ops() {
        let p = Plat::new(3, vec![1, 3, 5, -1, 2]).unwrap();
        let q = Move::Isotopy(IsotopyOp::Cancel { i: 0, j: 3 })
            .apply(&p)
            .unwrap();
        assert_eq!(q.letters(), &[3, 5, 2]);
        assert!(Move::Isotopy(IsotopyOp::Cancel { i: 1, j: 3 })
            .apply(&p)
            .is_err());
        let p = Plat::new(2, vec![2, 1, 2, -1, -2, -1, 3]).unwrap();
        let q = Move::Isotopy(IsotopyOp::DeleteTrivial { start: 0, end: 6 })
            .apply(&p)
            .unwrap();
        assert_eq!(q.letters(), &[3]);
        assert!(Move::Isotopy(IsotopyOp::DeleteTrivial { start: 0, end: 5 })
            .apply(&p)
            .is_err());
    }
}
