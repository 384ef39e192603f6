//! Garside left normal form.
//!
//! A positive permutation braid is stored as the permutation it induces,
//! `track[top] = bottom`, which determines it uniquely. Negative letters are
//! cleared with the central full twist: `σ_j⁻¹ = Δ⁻² · Δ · (Δσ_j⁻¹)`, and both
//! `Δ` and `Δσ_j⁻¹` are permutation braids.

use super::BraidWord;

type Simple = Vec<u8>;

/// `Δ^infimum · factors[0] · factors[1] ⋯`, left-weighted, with no `Δ` or
/// identity among the factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> Self {
        let m = word.strands();
        let delta: Simple = (0..m as u8).rev().collect();
        let mut factors: Vec<Simple> = Vec::with_capacity(word.len() * 2);
        let mut infimum = 0i64;
        for &g in word.letters() {
            let j = g.unsigned_abs() as usize - 1;
            if g > 0 {
                let mut t: Simple = (0..m as u8).collect();
                t.swap(j, j + 1);
                factors.push(t);
            } else {
                // Δ followed by σ_j⁻¹: the strand ending at bottom j swaps with j+1
                let mut a = delta.clone();
                for b in a.iter_mut() {
                    if *b as usize == j {
                        *b += 1;
                    } else if *b as usize == j + 1 {
                        *b -= 1;
                    }
                }
                factors.push(delta.clone());
                factors.push(a);
                infimum -= 2;
            }
        }
        left_weight(&mut factors);
        let leading = factors.iter().take_while(|f| **f == delta).count();
        factors.drain(..leading);
        while factors.last().is_some_and(|f| is_identity(f)) {
            factors.pop();
        }
        Self {
            strands: m,
            infimum: infimum + leading as i64,
            factors,
        }
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// Number of non-Δ simple factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }
}

fn is_identity(s: &[u8]) -> bool {
    s.iter().enumerate().all(|(i, &x)| i == x as usize)
}

/// `j` with `σ_j ≼ s`: strands entering at `j, j+1` cross.
fn starts_with(s: &[u8], j: usize) -> bool {
    s[j] > s[j + 1]
}

/// `j` with `s ≽ σ_j`: strands leaving at `j, j+1` cross.
fn ends_with(s: &[u8], j: usize) -> bool {
    let (mut top_j, mut top_j1) = (0, 0);
    for (top, &bottom) in s.iter().enumerate() {
        if bottom as usize == j {
            top_j = top;
        } else if bottom as usize == j + 1 {
            top_j1 = top;
        }
    }
    top_j > top_j1
}

/// Moves letters leftwards across adjacent factors until every pair is
/// left-weighted. Each transfer lowers `Σ index·length`, so this terminates.
fn left_weight(factors: &mut [Simple]) {
    if factors.is_empty() {
        return;
    }
    let m = factors[0].len();
    loop {
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(i + 1);
            let (a, b) = (&mut left[i], &mut right[0]);
            'transfer: loop {
                for j in 0..m - 1 {
                    if starts_with(b, j) && !ends_with(a, j) {
                        // a ← a·σ_j
                        for x in a.iter_mut() {
                            if *x as usize == j {
                                *x += 1;
                            } else if *x as usize == j + 1 {
                                *x -= 1;
                            }
                        }
                        // b ← σ_j⁻¹·b
                        b.swap(j, j + 1);
                        changed = true;
                        continue 'transfer;
                    }
                }
                break;
            }
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(m: usize, letters: &[i32]) -> NormalForm {
        BraidWord::new(m, letters.to_vec()).unwrap().normal_form()
    }

    #[test]
    fn identity_forms() {
        assert!(nf(3, &[]).is_identity());
        assert!(nf(3, &[1, -1]).is_identity());
        assert!(nf(4, &[-3, 1, 3, -1]).is_identity());
    }

    #[test]
    fn half_twist_is_delta() {
        let f = nf(3, &[1, 2, 1]);
        assert_eq!(f.infimum(), 1);
        assert_eq!(f.canonical_length(), 0);
        let f = nf(4, &[1, 2, 3, 1, 2, 1]);
        assert_eq!((f.infimum(), f.canonical_length()), (1, 0));
    }

    #[test]
    fn inverse_letter_has_infimum_minus_one() {
        let f = nf(3, &[-1]);
        assert_eq!((f.infimum(), f.canonical_length()), (-1, 1));
    }

    #[test]
    fn full_twist_is_delta_squared() {
        let f = BraidWord::full_twist(4).unwrap().normal_form();
        assert_eq!((f.infimum(), f.canonical_length()), (2, 0));
    }
}
