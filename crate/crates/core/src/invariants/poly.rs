use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Integer Laurent polynomial in one variable `A`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, exponent: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coefficient, exponent);
        p
    }

    /// The loop value `−A² − A⁻²`.
    pub fn loop_value() -> Self {
        Self::monomial(-1, 2) + Self::monomial(-1, -2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coefficient: i64, exponent: i32) {
        if coefficient == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i32) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, exponents ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(0) == 1
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(−A³)^k` for any integer `k`.
    pub fn kink_factor(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, (3 * k) as i32)
    }

    /// Multiplies by `A^shift`.
    pub fn shifted(&self, shift: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }

    /// Substitutes `A ↦ A⁻¹` (the bracket of the mirror image).
    pub fn mirrored(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (&top_e, &top_c) = divisor.terms.iter().next_back()?;
        let low_e = *divisor.terms.keys().next()?;
        let floor = match self.terms.keys().next() {
            Some(&e) => e - low_e,
            None => return Some(Self::zero()),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, &c)) = rem.terms.iter().next_back() {
            if e - top_e < floor || c % top_c != 0 {
                return None;
            }
            let q = Self::monomial(c / top_c, e - top_e);
            rem = &rem - &(&q * divisor);
            quot.add_term(c / top_c, e - top_e);
        }
        Some(quot)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        &self * &rhs
    }
}

/// `-A^4 - A^-4`, `3*A^2 + 1`, `0`; exponents descending.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => {}
                (_, m) => write!(f, "{m}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("A")?,
                e => write!(f, "A^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial term `{0}`")]
pub struct PolyParseError(pub String);

impl FromStr for LaurentPolynomial {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(PolyParseError(s.to_string()));
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            // a term ends at the next sign not directly after `^`
            let bytes = body.as_bytes();
            let end = (1..bytes.len())
                .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^')
                .unwrap_or(bytes.len());
            let term = &body[..end];
            rest = &body[end..];
            let bad = || PolyParseError(term.to_string());
            let (coef, var) = match term.split_once('*') {
                Some((c, v)) => (c.parse::<i64>().map_err(|_| bad())?, Some(v)),
                None if term.starts_with('A') => (1, Some(term)),
                None => (term.parse::<i64>().map_err(|_| bad())?, None),
            };
            let exp = match var {
                None => 0,
                Some("A") => 1,
                Some(v) => v
                    .strip_prefix("A^")
                    .and_then(|e| e.parse::<i32>().ok())
                    .ok_or_else(bad)?,
            };
            out.add_term(sign * coef, exp);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        let hopf = LaurentPolynomial::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(hopf.to_string(), "-A^4 - A^-4");
        let p = LaurentPolynomial::from_terms([(2, 3), (0, 1), (1, -2), (-3, 5)]);
        assert_eq!(p.to_string(), "3*A^2 - 2*A + 1 + 5*A^-3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::monomial(-1, 0).to_string(), "-1");
        for q in [
            hopf,
            p,
            LaurentPolynomial::zero(),
            LaurentPolynomial::monomial(7, -1),
        ] {
            assert_eq!(q.to_string().parse::<LaurentPolynomial>().unwrap(), q);
        }
        assert!("A^x".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let d = LaurentPolynomial::loop_value();
        let d2 = &d * &d;
        assert_eq!(d2.to_string(), "A^4 + 2 + A^-4");
        assert_eq!(d2.div_exact(&d).unwrap(), d);
        assert!(LaurentPolynomial::one().div_exact(&d).is_none());
        assert_eq!(LaurentPolynomial::kink_factor(1).to_string(), "-A^3");
        assert_eq!(LaurentPolynomial::kink_factor(-2).to_string(), "A^-6");
        assert!((&d - &d).is_zero());
    }
}
