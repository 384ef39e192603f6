//! Link invariants of plat closures: the Kauffman bracket, writhe, and an
//! orientation-free normalized bracket used to check that moves preserve the
//! link type.

mod bracket;
mod diagram;
mod poly;

use std::fmt;

use thiserror::Error;

use crate::plat::Plat;

pub use diagram::{plat_to_diagram, Crossing, DiagramError, LinkDiagram, Over};
pub use poly::{LaurentPolynomial, PolyParseError};

pub const DEFAULT_BUDGET: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{crossings} crossings exceed the bracket budget of {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
}

pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_with_budget(d, DEFAULT_BUDGET)
}

pub fn kauffman_bracket_with_budget(
    d: &LinkDiagram,
    budget: usize,
) -> Result<LaurentPolynomial, InvariantError> {
    if d.crossing_count() > budget {
        return Err(InvariantError::BudgetExceeded {
            crossings: d.crossing_count(),
            budget,
        });
    }
    Ok(bracket::bracket(d))
}

/// Sum of crossing signs. `reversed[i]` flips component `i` against the
/// base orientation from the diagram traversal; its length must be the
/// diagram's component count.
pub fn writhe(d: &LinkDiagram, reversed: &[bool]) -> i64 {
    let t = d.traverse();
    assert_eq!(
        reversed.len(),
        t.components,
        "orientation must cover every component"
    );
    d.crossings()
        .iter()
        .enumerate()
        .map(|(c, x)| {
            let (so, su) = match x.over {
                Over::Even => (0, 1),
                Over::Odd => (1, 0),
            };
            let oriented = |s: usize| {
                let e = t.entry[c][s];
                if reversed[t.strand_component[c][s]] {
                    (e + 2) % 4
                } else {
                    e
                }
            };
            let (o, u) = (oriented(so), oriented(su));
            if u == (o + 1) % 4 {
                -1
            } else {
                1
            }
        })
        .sum()
}

/// Component count and the sorted normalized brackets `(−A³)^{−w}⟨D⟩` over
/// all orientations up to global reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OracleValue {
    pub components: usize,
    pub normalized: Vec<LaurentPolynomial>,
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "components={} normalized={{", self.components)?;
        for (i, p) in self.normalized.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

pub fn diagram_oracle_value(d: &LinkDiagram, budget: usize) -> Result<OracleValue, InvariantError> {
    let bracket = kauffman_bracket_with_budget(d, budget)?;
    let k = d.component_count();
    let mut normalized: Vec<LaurentPolynomial> = (0..1usize << k.saturating_sub(1))
        .map(|mask| {
            let reversed: Vec<bool> = (0..k).map(|i| i > 0 && mask >> (i - 1) & 1 == 1).collect();
            &LaurentPolynomial::kink_factor(-writhe(d, &reversed)) * &bracket
        })
        .collect();
    normalized.sort();
    Ok(OracleValue {
        components: k,
        normalized,
    })
}

pub fn oracle_value(p: &Plat) -> Result<OracleValue, InvariantError> {
    oracle_value_with_budget(p, DEFAULT_BUDGET)
}

pub fn oracle_value_with_budget(p: &Plat, budget: usize) -> Result<OracleValue, InvariantError> {
    diagram_oracle_value(&plat_to_diagram(p), budget)
}

/// One component and trivial normalized bracket. Necessary, not sufficient.
pub fn unknot_evidence(p: &Plat) -> Result<bool, InvariantError> {
    unknot_evidence_with_budget(p, DEFAULT_BUDGET)
}

pub fn unknot_evidence_with_budget(p: &Plat, budget: usize) -> Result<bool, InvariantError> {
    if p.component_count() != 1 {
        return Ok(false);
    }
    let v = oracle_value_with_budget(p, budget)?;
    Ok(v.normalized.iter().all(LaurentPolynomial::is_one))
}

/// The oracle value of the `k`-component unlink.
pub fn unlink_value(k: usize) -> OracleValue {
    diagram_oracle_value(&LinkDiagram::unlink(k), 0).expect("no crossings")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kink() -> LinkDiagram {
        // one crossing whose NE and SE ends are joined
        LinkDiagram::new(
            vec![Crossing {
                ends: [0, 1, 1, 0],
                over: Over::Odd,
            }],
            0,
        )
        .unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert!(kauffman_bracket(&LinkDiagram::unlink(1)).unwrap().is_one());
        let k = kink();
        let b = kauffman_bracket(&k).unwrap();
        let w = writhe(&k, &[false]);
        assert_eq!(b.to_string(), if w == 1 { "-A^3" } else { "-A^-3" });
        assert_eq!(kauffman_bracket(&k.mirror()).unwrap(), b.mirrored());
        let hopf = plat_to_diagram(&Plat::new(2, vec![2, 2]).unwrap());
        assert_eq!(kauffman_bracket(&hopf).unwrap().to_string(), "-A^4 - A^-4");
    }

    #[test]
    fn positive_kink_has_writhe_one() {
        // the kink whose bracket is −A³
        let k = [kink(), kink().mirror()]
            .into_iter()
            .find(|d| kauffman_bracket(d).unwrap().to_string() == "-A^3")
            .unwrap();
        assert_eq!(writhe(&k, &[false]), 1);
        assert_eq!(writhe(&k, &[true]), 1);
        assert_eq!(writhe(&k.mirror(), &[false]), -1);
        assert_eq!(writhe(&LinkDiagram::unlink(2), &[false, true]), 0);
    }

    #[test]
    fn extra_circles_multiply_by_loop_value() {
        let d = plat_to_diagram(&Plat::new(2, vec![1, 2, -1, 3]).unwrap());
        let b = kauffman_bracket(&d).unwrap();
        let more = d.disjoint_union(&LinkDiagram::unlink(1));
        assert_eq!(
            kauffman_bracket(&more).unwrap(),
            &b * &LaurentPolynomial::loop_value()
        );
    }

    #[test]
    fn oracle_examples() {
        let v = oracle_value(&Plat::new(2, vec![2]).unwrap()).unwrap();
        assert_eq!(
            v,
            OracleValue {
                components: 1,
                normalized: vec![LaurentPolynomial::one()]
            }
        );
        assert_eq!(oracle_value(&Plat::trivial(3)).unwrap(), unlink_value(3));
        assert_eq!(
            unlink_value(2).normalized,
            vec![LaurentPolynomial::loop_value(); 2]
        );
        assert!(unknot_evidence(&Plat::trivial(1)).unwrap());
        assert!(unknot_evidence(&Plat::new(2, vec![2]).unwrap()).unwrap());
        assert!(!unknot_evidence(&Plat::new(2, vec![1, 1, 1]).unwrap()).unwrap());
        assert!(!unknot_evidence(&Plat::trivial(2)).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let p = Plat::new(2, vec![2; 25]).unwrap();
        assert_eq!(
            oracle_value(&p),
            Err(InvariantError::BudgetExceeded {
                crossings: 25,
                budget: 24
            })
        );
        assert!(oracle_value_with_budget(&p, 40).is_ok());
    }
}
