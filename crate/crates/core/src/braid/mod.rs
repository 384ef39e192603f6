//! Braid words in the Artin generators and the braid-group relations as
//! explicit, position-addressed rewrites.
//!
//! Letters are signed 1-indexed generators: `g > 0` is `σ_g`, `g < 0` is
//! `σ_|g|⁻¹`. Words are read left to right, which is top to bottom in every
//! picture this crate draws.

mod garside;
mod perm;

use std::fmt;

use thiserror::Error;

pub use garside::NormalForm;
pub use perm::StrandPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("{relation} does not apply at position {position}")]
    PatternMismatch { position: usize, relation: Relation },
    #[error("a braid group needs at least {min} strands, got {got}")]
    TooFewStrands { min: usize, got: usize },
    #[error("cannot parse braid letter `{token}`")]
    BadToken { token: String },
}

/// A defining relation of the braid group, usable as a rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `σ_i σ_j = σ_j σ_i` for `|i − j| ≥ 2`, any signs.
    FarCommutation,
    /// `σ_i σ_j σ_i = σ_j σ_i σ_j` for `|i − j| = 1`, with the mixed-sign
    /// variants such as `σ_i σ_j σ_i⁻¹ = σ_j⁻¹ σ_i σ_j`.
    BraidRelation,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::FarCommutation => f.write_str("far commutation"),
            Relation::BraidRelation => f.write_str("braid relation"),
        }
    }
}

/// Which side of a relation is being matched.
///
/// `Forward` matches patterns whose first letter has the smaller generator
/// index (`σ₁σ₃ → σ₃σ₁`, `σ₁σ₂σ₁ → σ₂σ₁σ₂`); `Reverse` matches the other
/// side. The two directions undo each other at the same position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::TooFewStrands { min: 1, got: 0 });
        }
        if let Some(&letter) = letters.iter().find(|&&g| !letter_fits(g, strands)) {
            return Err(BraidError::LetterOutOfRange { letter, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "braid groups need at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses the whitespace-separated text form, e.g. `1 -2 3`.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>().map_err(|_| BraidError::BadToken {
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters viewed in a braid group with more strands.
    pub fn widened(&self, strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, self.letters.clone())
    }

    fn check_same(&self, other: &Self) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate(&self, by: &Self) -> Result<Self, BraidError> {
        by.concat(self)?.concat(&by.inverse())
    }

    /// Inserts `other` so that it starts at letter index `at`.
    pub fn spliced(&self, at: usize, other: &[i32]) -> Result<Self, BraidError> {
        let at = at.min(self.letters.len());
        let mut letters = Vec::with_capacity(self.letters.len() + other.len());
        letters.extend_from_slice(&self.letters[..at]);
        letters.extend_from_slice(other);
        letters.extend_from_slice(&self.letters[at..]);
        Self::new(self.strands, letters)
    }

    /// Cancels adjacent `g, −g` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// Rewrites the pattern starting at `position` with one side of `relation`.
    pub fn apply_relation(
        &self,
        position: usize,
        relation: Relation,
        direction: Direction,
    ) -> Result<Self, BraidError> {
        let mismatch = BraidError::PatternMismatch { position, relation };
        let mut letters = self.letters.clone();
        match relation {
            Relation::FarCommutation => {
                let (a, b) = match self.letters.get(position..position + 2) {
                    Some(&[a, b]) => (a, b),
                    _ => return Err(mismatch),
                };
                let (ia, ib) = (a.abs(), b.abs());
                let oriented = match direction {
                    Direction::Forward => ia < ib,
                    Direction::Reverse => ia > ib,
                };
                if (ia - ib).abs() < 2 || !oriented {
                    return Err(mismatch);
                }
                letters.swap(position, position + 1);
            }
            Relation::BraidRelation => {
                let (a, b, c) = match self.letters.get(position..position + 3) {
                    Some(&[a, b, c]) => (a, b, c),
                    _ => return Err(mismatch),
                };
                let (i, j) = (a.abs(), b.abs());
                let oriented = match direction {
                    Direction::Forward => i < j,
                    Direction::Reverse => i > j,
                };
                // σ_i^s σ_j^t σ_i^u with |i−j| = 1 is rewritable unless the
                // outer signs agree and differ from the middle one.
                let (s, t, u) = (a.signum(), b.signum(), c.signum());
                if (i - j).abs() != 1 || c.abs() != i || !oriented || (s == u && s != t) {
                    return Err(mismatch);
                }
                letters[position] = u * j;
                letters[position + 1] = t * i;
                letters[position + 2] = s * j;
            }
        }
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Image in the symmetric group, `σ_i ↦ (i i+1)`, composed so that the
    /// map is a homomorphism: `perm(uv) = perm(u) ∘ perm(v)`.
    pub fn permutation(&self) -> StrandPermutation {
        let mut p = StrandPermutation::identity(self.strands);
        for &g in &self.letters {
            p.right_multiply_transposition(g.unsigned_abs() as usize);
        }
        p
    }

    /// `(σ₁σ₂…σ_{m−1})^m`, the generator of the centre of `B_m`.
    pub fn full_twist(strands: usize) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands {
                min: 2,
                got: strands,
            });
        }
        let row: Vec<i32> = (1..strands as i32).collect();
        Ok(Self {
            strands,
            letters: row.repeat(strands),
        })
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// Exact word problem: do both words represent the same braid?
    pub fn equals(&self, other: &Self) -> Result<bool, BraidError> {
        self.check_same(other)?;
        if self.letters == other.letters {
            return Ok(true);
        }
        // different permutations can never agree
        if self.permutation() != other.permutation() {
            return Ok(false);
        }
        Ok(self.normal_form() == other.normal_form())
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty() || self.normal_form().is_identity()
    }
}

fn letter_fits(g: i32, strands: usize) -> bool {
    g != 0 && (g.unsigned_abs() as usize) < strands
}

/// Free function form of [`BraidWord::equals`].
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
    u.equals(v)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[i32]) -> fmt::Result {
    for (i, g) in letters.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(m, letters.to_vec()).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        assert!(w(2, &[]).free_reduce().is_empty());
        assert_eq!(w(4, &[2, 1, -1, -2, 3]).free_reduce().letters(), &[3]);
    }

    #[test]
    fn relation_examples() {
        let out = w(4, &[1, 3]).apply_relation(0, Relation::FarCommutation, Direction::Forward);
        assert_eq!(out.unwrap().letters(), &[3, 1]);
        let out = w(3, &[1, 2, 1]).apply_relation(0, Relation::BraidRelation, Direction::Forward);
        assert_eq!(out.unwrap().letters(), &[2, 1, 2]);
        let err = w(3, &[1, 2]).apply_relation(0, Relation::BraidRelation, Direction::Forward);
        assert!(matches!(
            err,
            Err(BraidError::PatternMismatch { position: 0, .. })
        ));
    }

    #[test]
    fn relation_direction_and_mixed_signs() {
        let base = w(3, &[1, 2, -1]);
        let out = base
            .apply_relation(0, Relation::BraidRelation, Direction::Forward)
            .unwrap();
        assert_eq!(out.letters(), &[-2, 1, 2]);
        let back = out
            .apply_relation(0, Relation::BraidRelation, Direction::Reverse)
            .unwrap();
        assert_eq!(back, base);
        assert!(base
            .apply_relation(0, Relation::BraidRelation, Direction::Reverse)
            .is_err());
        // σ₁σ₂⁻¹σ₁ has no length-preserving rewrite
        assert!(w(3, &[1, -2, 1])
            .apply_relation(0, Relation::BraidRelation, Direction::Forward)
            .is_err());
        assert!(w(3, &[1, 2])
            .apply_relation(0, Relation::FarCommutation, Direction::Forward)
            .is_err());
        assert!(w(5, &[3, 1])
            .apply_relation(0, Relation::FarCommutation, Direction::Forward)
            .is_err());
        assert!(w(5, &[3, 1])
            .apply_relation(0, Relation::FarCommutation, Direction::Reverse)
            .is_ok());
    }

    #[test]
    fn permutation_examples() {
        assert!(BraidWord::identity(4).permutation().is_identity());
        let p = w(4, &[2]).permutation();
        assert_eq!(p.images(), vec![1, 3, 2, 4]);
        let p = w(3, &[1, 2]).permutation();
        assert_eq!((p.image(1), p.image(2), p.image(3)), (2, 3, 1));
    }

    #[test]
    fn full_twist_examples() {
        assert_eq!(BraidWord::full_twist(2).unwrap().letters(), &[1, 1]);
        assert_eq!(
            BraidWord::full_twist(3).unwrap().letters(),
            &[1, 2, 1, 2, 1, 2]
        );
        assert!(BraidWord::full_twist(1).is_err());
        assert!(BraidWord::full_twist(5)
            .unwrap()
            .permutation()
            .is_identity());
    }

    #[test]
    fn word_equality_examples() {
        assert!(w(3, &[1, 2, 1]).equals(&w(3, &[2, 1, 2])).unwrap());
        assert!(!w(3, &[1]).equals(&w(3, &[2])).unwrap());
        assert!(w(3, &[1]).equals(&w(4, &[1])).is_err());
        // σ₁² and the identity share a permutation but differ
        assert!(!w(3, &[1, 1]).equals(&w(3, &[])).unwrap());
    }

    #[test]
    fn group_operations() {
        assert_eq!(w(3, &[1, -2]).inverse().letters(), &[2, -1]);
        let x = w(3, &[1, 2, -1]);
        assert_eq!(BraidWord::identity(3).concat(&x).unwrap(), x);
        let c = x.conjugate(&w(3, &[2])).unwrap();
        assert_eq!(c.letters(), &[2, 1, 2, -1, -2]);
        let cycle_type = |p: &StrandPermutation| p.cycle_type();
        assert_eq!(cycle_type(&c.permutation()), cycle_type(&x.permutation()));
    }

    #[test]
    fn rejects_bad_letters() {
        assert_eq!(
            BraidWord::new(3, vec![1, 3]),
            Err(BraidError::LetterOutOfRange {
                letter: 3,
                strands: 3
            })
        );
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(matches!(
            BraidWord::parse(3, "1 x"),
            Err(BraidError::BadToken { .. })
        ));
        assert_eq!(
            BraidWord::parse(4, " 1  -2 3 ").unwrap().to_string(),
            "1 -2 3"
        );
    }
}
