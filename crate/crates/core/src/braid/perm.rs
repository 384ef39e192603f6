use std::fmt;

/// A bijection on `{1..m}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(size: usize) -> Self {
        Self {
            image: (0..size).collect(),
        }
    }

    /// Builds from 1-based images; `None` unless they form a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut image = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
            image.push(x - 1);
        }
        Some(Self { image })
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Self {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.size()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Self { image }
    }

    /// `self ← self ∘ (j j+1)` for 1-based `j`.
    pub(crate) fn right_multiply_transposition(&mut self, j: usize) {
        self.image.swap(j - 1, j);
    }

    /// Sorted cycle lengths, a complete conjugacy invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut lengths = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }
}

impl fmt::Display for StrandPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", i + 1, x + 1)?;
        }
        Ok(())
    }
}
