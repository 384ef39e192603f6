//! Plats: braids on `2n` strands closed off by `n` standard caps at the top
//! and `n` at the bottom, joining strands `(2i−1, 2i)`.

mod moves;
mod text;

use std::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord, StrandPermutation};

pub use moves::{
    flip_word, hilden_generators, CosetStep, FlipDirection, IsotopyOp, Move, MoveKind, MoveRecord,
    Side,
};
pub use text::PlatParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlatError {
    #[error("a plat needs bridge index at least 1")]
    ZeroBridges,
    #[error("plats need an even strand count, got {0}")]
    OddStrands(usize),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("{0} is not applicable")]
    NotApplicable(&'static str),
    #[error("Hilden generator {gen} out of range (bridge index {bridges} has {available})")]
    GeneratorOutOfRange {
        gen: usize,
        bridges: usize,
        available: usize,
    },
    #[error("gap {k} out of range 1..={max}")]
    GapOutOfRange { k: usize, max: usize },
    #[error("split {split} out of range 0..={len}")]
    SplitOutOfRange { split: usize, len: usize },
    #[error("microflip block size {0} must be even")]
    OddBlock(usize),
    #[error("microflip block must start on an odd strand, got {0}")]
    MisalignedBlock(usize),
    #[error("neither side of split {split} stays inside strands {start}..{end}")]
    BlockNotIsolated {
        split: usize,
        start: usize,
        end: usize,
    },
    #[error("microflip block {start}..{end} exceeds {strands} strands")]
    BlockOutOfRange {
        start: usize,
        end: usize,
        strands: usize,
    },
    #[error("letter pair ({i}, {j}) cannot be cancelled")]
    NotCancellable { i: usize, j: usize },
    #[error("letters {start}..{end} do not form a trivial braid")]
    NotTrivial { start: usize, end: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plat {
    word: BraidWord,
}

impl Plat {
    pub fn new(bridge_index: usize, letters: Vec<i32>) -> Result<Self, PlatError> {
        if bridge_index == 0 {
            return Err(PlatError::ZeroBridges);
        }
        Ok(Self {
            word: BraidWord::new(2 * bridge_index, letters)?,
        })
    }

    pub fn from_word(word: BraidWord) -> Result<Self, PlatError> {
        if word.strands() % 2 == 1 {
            return Err(PlatError::OddStrands(word.strands()));
        }
        Ok(Self { word })
    }

    /// The standard `n`-bridge, zero-crossing plat: the `n`-component unlink.
    pub fn trivial(bridge_index: usize) -> Self {
        assert!(bridge_index > 0, "bridge index must be positive");
        Self {
            word: BraidWord::identity(2 * bridge_index),
        }
    }

    pub fn bridge_index(&self) -> usize {
        self.word.strands() / 2
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn letters(&self) -> &[i32] {
        self.word.letters()
    }

    pub fn crossing_count(&self) -> usize {
        self.word.len()
    }

    pub fn is_standard(&self) -> bool {
        self.word.is_empty()
    }

    pub(crate) fn with_letters(&self, letters: Vec<i32>) -> Result<Self, PlatError> {
        Ok(Self {
            word: BraidWord::new(self.strands(), letters)?,
        })
    }

    /// Components of the closure, from the strand permutation and the caps.
    pub fn component_count(&self) -> usize {
        closure_components(&self.word.permutation())
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            word: self.word.free_reduce(),
        }
    }

    /// Free reduction, then repeatedly cancels the first pair `σ_i^{±1} … σ_i^{∓1}`
    /// whose letters in between all commute with `σ_i`.
    pub fn reduce_cancellations(&self) -> Self {
        let mut w = self.word.free_reduce().into_letters();
        'scan: loop {
            for i in 0..w.len() {
                let g = w[i];
                for j in i + 1..w.len() {
                    if w[j] == -g {
                        w.remove(j);
                        w.remove(i);
                        continue 'scan;
                    }
                    if (w[j].abs() - g.abs()).abs() < 2 {
                        break;
                    }
                }
            }
            break;
        }
        Self {
            word: BraidWord::new(self.strands(), w).expect("same strands"),
        }
    }

    /// `B ↦ B σ_{2n}` on `2n + 2` strands.
    pub fn stabilize(&self) -> Self {
        let n = self.bridge_index();
        let mut letters = self.letters().to_vec();
        letters.push(2 * n as i32);
        Self {
            word: BraidWord::new(2 * n + 2, letters).expect("stabilized letters fit"),
        }
    }

    /// Drops the last bridge when it is a kink: no `±(2n−1)` letter and
    /// exactly one `±(2n−2)` letter.
    pub fn destabilize(&self) -> Result<Self, PlatError> {
        let n = self.bridge_index();
        if n < 2 {
            return Err(PlatError::NotApplicable("destabilization"));
        }
        let (last, kink) = (2 * n as i32 - 1, 2 * n as i32 - 2);
        let letters = self.letters();
        if letters.iter().any(|g| g.abs() == last) {
            return Err(PlatError::NotApplicable("destabilization"));
        }
        let mut hits = letters.iter().enumerate().filter(|(_, g)| g.abs() == kink);
        let pos = match (hits.next(), hits.next()) {
            (Some((pos, _)), None) => pos,
            _ => return Err(PlatError::NotApplicable("destabilization")),
        };
        let mut rest = letters.to_vec();
        rest.remove(pos);
        Ok(Self {
            word: BraidWord::new(2 * n - 2, rest)?,
        })
    }

    pub fn double_coset_move(
        &self,
        side: Side,
        gen: usize,
        inverted: bool,
    ) -> Result<Self, PlatError> {
        let n = self.bridge_index();
        let gens = hilden_generators(n);
        let g = gens.get(gen).ok_or(PlatError::GeneratorOutOfRange {
            gen,
            bridges: n,
            available: gens.len(),
        })?;
        let g = if inverted { g.inverse() } else { g.clone() };
        let word = match side {
            Side::Top => g.concat(&self.word)?,
            Side::Bottom => self.word.concat(&g)?,
        };
        Ok(Self { word })
    }

    /// Folds a script of double coset moves; the whole script is one pocket move.
    pub fn pocket_move(&self, script: &[CosetStep]) -> Result<Self, PlatError> {
        script.iter().try_fold(self.clone(), |p, s| {
            p.double_coset_move(s.side, s.gen, s.inverted)
        })
    }

    /// Inserts the flip word for gap `k` at letter index `split`.
    pub fn flip(
        &self,
        split: usize,
        k: usize,
        direction: FlipDirection,
    ) -> Result<Self, PlatError> {
        let strands = self.strands();
        self.check_split(split)?;
        if k == 0 || k >= strands {
            return Err(PlatError::GapOutOfRange {
                k,
                max: strands - 1,
            });
        }
        let w = flip_word(k, direction, strands, 0);
        Ok(Self {
            word: self.word.spliced(split, &w)?,
        })
    }

    /// Flip restricted to the block of `block` strands starting at `first_strand`.
    /// The block must sit under whole caps, so `first_strand` is odd, and the
    /// part being flipped (the letters after `split`, or those before it) must
    /// braid only strands of the block.
    pub fn microflip(
        &self,
        first_strand: usize,
        block: usize,
        gap: usize,
        split: usize,
        direction: FlipDirection,
    ) -> Result<Self, PlatError> {
        if block % 2 == 1 || block == 0 {
            return Err(PlatError::OddBlock(block));
        }
        let end = first_strand + block - 1;
        if first_strand == 0 || end > self.strands() {
            return Err(PlatError::BlockOutOfRange {
                start: first_strand,
                end,
                strands: self.strands(),
            });
        }
        if first_strand % 2 == 0 {
            return Err(PlatError::MisalignedBlock(first_strand));
        }
        self.check_split(split)?;
        if gap == 0 || gap >= block {
            return Err(PlatError::GapOutOfRange {
                k: gap,
                max: block - 1,
            });
        }
        let inside = |g: &i32| (first_strand..end).contains(&(g.unsigned_abs() as usize));
        let letters = self.letters();
        if !letters[split..].iter().all(inside) && !letters[..split].iter().all(inside) {
            return Err(PlatError::BlockNotIsolated {
                split,
                start: first_strand,
                end,
            });
        }
        let w = flip_word(gap, direction, block, first_strand - 1);
        Ok(Self {
            word: self.word.spliced(split, &w)?,
        })
    }

    fn check_split(&self, split: usize) -> Result<(), PlatError> {
        if split > self.crossing_count() {
            return Err(PlatError::SplitOutOfRange {
                split,
                len: self.crossing_count(),
            });
        }
        Ok(())
    }
}

/// Counts the loops formed by braid strands and the standard caps.
///
/// `perm` maps bottom positions to top positions (either direction gives the
/// same count, since the caps are symmetric).
pub(crate) fn closure_components(perm: &StrandPermutation) -> usize {
    let m = perm.size();
    // nodes 0..m are top endpoints, m..2m bottom endpoints
    let mut parent: Vec<usize> = (0..2 * m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut join = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    for i in (0..m).step_by(2) {
        join(i, i + 1);
        join(m + i, m + i + 1);
    }
    for bottom in 1..=m {
        join(m + bottom - 1, perm.image(bottom) - 1);
    }
    (0..2 * m).filter(|&x| find(&mut parent, x) == x).count()
}

impl fmt::Display for Plat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plat(n: usize, letters: &[i32]) -> Plat {
        Plat::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn component_counts() {
        assert_eq!(Plat::trivial(3).component_count(), 3);
        assert_eq!(plat(2, &[2]).component_count(), 1);
        assert_eq!(Plat::trivial(1).component_count(), 1);
        assert_eq!(plat(2, &[1, 1, 1]).component_count(), 2);
        assert_eq!(plat(2, &[2, 2]).component_count(), 2);
        assert_eq!(plat(2, &[2, 2, 2]).component_count(), 1);
    }

    #[test]
    fn stabilization_round_trip() {
        let s = Plat::trivial(1).stabilize();
        assert_eq!((s.bridge_index(), s.letters()), (2, &[2][..]));
        let ss = s.stabilize();
        assert_eq!((ss.bridge_index(), ss.letters()), (3, &[2, 4][..]));
        assert_eq!(s.destabilize().unwrap(), Plat::trivial(1));
        assert_eq!(plat(2, &[-2]).destabilize().unwrap(), Plat::trivial(1));
        assert!(matches!(
            plat(2, &[1]).destabilize(),
            Err(PlatError::NotApplicable(_))
        ));
        assert!(plat(2, &[2, 3]).destabilize().is_err());
        assert!(plat(2, &[2, -2]).destabilize().is_err());
        assert!(Plat::trivial(1).destabilize().is_err());
        assert_eq!(plat(3, &[1, 3, -2]).stabilize().crossing_count(), 4);
    }

    #[test]
    fn hilden_generator_lists() {
        let g: Vec<Vec<i32>> = hilden_generators(2)
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(g, vec![vec![1], vec![2, 1, 1, 2], vec![2, 1, 3, 2]]);
        let g: Vec<Vec<i32>> = hilden_generators(1)
            .iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(g, vec![vec![1]]);
        let g3 = hilden_generators(3);
        assert_eq!(g3.len(), 4);
        assert_eq!(g3[3].letters(), &[4, 3, 5, 4]);
        assert!(g3.iter().all(|w| w.strands() == 6));
    }

    #[test]
    fn double_coset_examples() {
        let p = Plat::trivial(2)
            .double_coset_move(Side::Bottom, 0, false)
            .unwrap();
        assert_eq!(p.letters(), &[1]);
        let p = plat(2, &[3]).double_coset_move(Side::Top, 2, true).unwrap();
        assert_eq!(p.letters(), &[-2, -3, -1, -2, 3]);
        let back = p
            .double_coset_move(Side::Top, 2, false)
            .unwrap()
            .free_reduce();
        assert_eq!(back, plat(2, &[3]));
        assert!(matches!(
            Plat::trivial(2).double_coset_move(Side::Top, 3, false),
            Err(PlatError::GeneratorOutOfRange { gen: 3, .. })
        ));
    }

    #[test]
    fn flip_examples() {
        let p = Plat::trivial(1).flip(0, 1, FlipDirection::Out).unwrap();
        assert!(p.is_standard());
        let a = plat(2, &[2, -1]);
        let p = a.flip(1, 2, FlipDirection::In).unwrap();
        assert_eq!(p.letters(), &[2, 1, 1, -3, -3, -1]);
        let p = Plat::trivial(2).flip(0, 1, FlipDirection::In).unwrap();
        assert_eq!(p.letters(), &[-3, -2, -3, -2, -3, -2]);
        assert!(matches!(
            Plat::trivial(2).flip(0, 4, FlipDirection::In),
            Err(PlatError::GapOutOfRange { .. })
        ));
        assert!(matches!(
            Plat::trivial(2).flip(1, 1, FlipDirection::In),
            Err(PlatError::SplitOutOfRange { .. })
        ));
    }

    #[test]
    fn microflip_examples() {
        let base = plat(2, &[2, 1, -3]);
        for dir in [FlipDirection::In, FlipDirection::Out] {
            for gap in 1..4 {
                assert_eq!(
                    base.microflip(1, 4, gap, 2, dir).unwrap(),
                    base.flip(2, gap, dir).unwrap()
                );
            }
        }
        for start in [1, 3, 5] {
            let p = Plat::trivial(3)
                .microflip(start, 2, 1, 0, FlipDirection::Out)
                .unwrap();
            assert!(p.is_standard());
        }
        let p = Plat::trivial(3)
            .microflip(1, 4, 2, 0, FlipDirection::In)
            .unwrap();
        assert_eq!(p.letters(), &[1, 1, -3, -3]);
        let p = Plat::trivial(3)
            .microflip(3, 4, 2, 0, FlipDirection::In)
            .unwrap();
        assert_eq!(p.letters(), &[3, 3, -5, -5]);
        assert!(matches!(
            Plat::trivial(3).microflip(1, 3, 1, 0, FlipDirection::In),
            Err(PlatError::OddBlock(3))
        ));
        assert!(matches!(
            Plat::trivial(3).microflip(5, 4, 1, 0, FlipDirection::In),
            Err(PlatError::BlockOutOfRange { .. })
        ));
        assert!(matches!(
            Plat::trivial(3).microflip(2, 4, 1, 0, FlipDirection::In),
            Err(PlatError::MisalignedBlock(2))
        ));
    }

    #[test]
    fn pocket_examples() {
        let p = plat(2, &[2, 1]);
        assert_eq!(p.pocket_move(&[]).unwrap(), p);
        let one = CosetStep {
            side: Side::Bottom,
            gen: 1,
            inverted: true,
        };
        assert_eq!(
            p.pocket_move(&[one]).unwrap(),
            p.double_coset_move(Side::Bottom, 1, true).unwrap()
        );
        let bad = CosetStep {
            side: Side::Top,
            gen: 9,
            inverted: false,
        };
        assert!(p.pocket_move(&[one, bad]).is_err());
    }

    #[test]
    fn cancellation_reduction() {
        assert_eq!(
            plat(3, &[1, 3, 5, -1, 2]).reduce_cancellations().letters(),
            &[3, 5, 2]
        );
        assert_eq!(
            plat(2, &[1, 2, -1]).reduce_cancellations().letters(),
            &[1, 2, -1]
        );
        assert_eq!(
            plat(2, &[1, 3, 2, -2, -3, -1])
                .reduce_cancellations()
                .letters(),
            &[] as &[i32]
        );
        assert_eq!(
            plat(2, &[1, 1, 3, -1, -1]).reduce_cancellations().letters(),
            &[3]
        );
        let w = Plat::trivial(2).flip(0, 2, FlipDirection::In).unwrap();
        let back = w.flip(w.crossing_count(), 2, FlipDirection::Out).unwrap();
        assert!(back.reduce_cancellations().is_standard());
    }

    #[test]
    fn crossing_counts() {
        assert_eq!(Plat::trivial(1).crossing_count(), 0);
        assert_eq!(plat(2, &[1, -2, 1]).crossing_count(), 3);
    }

    #[test]
    fn rejects_odd_strands() {
        assert_eq!(
            Plat::from_word(BraidWord::identity(3)),
            Err(PlatError::OddStrands(3))
        );
        assert!(Plat::new(0, vec![]).is_err());
    }
}
