//! Monotone simplification of plats by beam search over the non-stabilizing
//! move menu, with replayable, certifiable traces.

mod scramble;
mod search;
mod text;

use std::fmt;

use thiserror::Error;

use crate::invariants::{oracle_value_with_budget, OracleValue};
use crate::plat::{IsotopyOp, Move, MoveKind, MoveRecord, Plat, PlatError};

pub use scramble::scramble;
pub use search::{move_menu, simplify, successors};
pub use text::TraceParseError;

/// Crossing budget used when certifying traces. States above it skip the
/// oracle comparison.
pub const CERTIFY_BUDGET: usize = 160;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub beam_width: usize,
    /// Total number of states expanded before giving up.
    pub node_budget: usize,
    pub crossing_cap: Option<usize>,
    /// Longest double-coset script tried as a single pocket step.
    pub pocket_len: usize,
    /// `0` breaks ties by smallest word; other values break them by a
    /// seeded hash of the word.
    pub seed: u64,
    /// Move kinds left out of the menu.
    pub excluded: Vec<MoveKind>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            beam_width: 48,
            node_budget: 20_000,
            crossing_cap: None,
            pocket_len: 2,
            seed: 0,
            excluded: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    ReachedStandard,
    BudgetExhausted,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::ReachedStandard => "reached-standard",
            Outcome::BudgetExhausted => "budget-exhausted",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// The plat after the move.
    pub plat: Plat,
    pub record: MoveRecord,
}

/// Step 0 holds the input under `isotopy(op=identity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplificationTrace {
    pub steps: Vec<TraceStep>,
    pub outcome: Outcome,
    pub crossing_cap: Option<usize>,
}

impl SimplificationTrace {
    pub fn start(p: &Plat) -> TraceStep {
        let mv = Move::Isotopy(IsotopyOp::Identity);
        TraceStep {
            plat: p.clone(),
            record: MoveRecord::describe(mv, false, p),
        }
    }

    pub fn initial(&self) -> Option<&Plat> {
        self.steps.first().map(|s| &s.plat)
    }

    pub fn last(&self) -> Option<&Plat> {
        self.steps.last().map(|s| &s.plat)
    }

    /// Moves after step 0.
    pub fn move_count(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn uses(&self, kind: MoveKind) -> bool {
        self.steps.iter().skip(1).any(|s| s.record.kind() == kind)
    }

    pub fn bridge_indices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.plat.bridge_index()).collect()
    }

    pub fn max_crossings(&self) -> usize {
        self.steps
            .iter()
            .map(|s| s.plat.crossing_count())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("trace is empty")]
    Empty,
    #[error("step 0 must be isotopy(op=identity)")]
    BadStart,
    #[error("step {step}: replay failed: {source}")]
    Replay { step: usize, source: PlatError },
    #[error("step {step}: replay gives a different plat")]
    Mismatch { step: usize },
    #[error("step {step}: recorded counts disagree with the plat")]
    RecordMismatch { step: usize },
    #[error("step {step}: bridge index increases")]
    BridgeIncrease { step: usize },
    #[error("step {step}: stabilization is not allowed")]
    Stabilize { step: usize },
    #[error("step {step}: oracle value changed from {expected} to {found}")]
    OracleChanged {
        step: usize,
        expected: OracleValue,
        found: OracleValue,
    },
    #[error("step {step}: {crossings} crossings exceed the cap {cap}")]
    CapExceeded {
        step: usize,
        crossings: usize,
        cap: usize,
    },
    #[error("outcome reached-standard but the last plat is not standard")]
    NotStandard,
}

/// Replays every step and checks the monotonicity, oracle and cap
/// guarantees. Returns the first violation.
pub fn certify_trace(t: &SimplificationTrace) -> Result<(), CertifyError> {
    let first = t.steps.first().ok_or(CertifyError::Empty)?;
    if first.record.mv != Move::Isotopy(IsotopyOp::Identity) || first.record.reduced {
        return Err(CertifyError::BadStart);
    }
    let mut reference: Option<OracleValue> = None;
    for (i, step) in t.steps.iter().enumerate() {
        let p = &step.plat;
        if step.record.crossing_count_after != p.crossing_count()
            || step.record.bridge_index_after != p.bridge_index()
        {
            return Err(CertifyError::RecordMismatch { step: i });
        }
        if step.record.kind() == MoveKind::Stabilize {
            return Err(CertifyError::Stabilize { step: i });
        }
        if let Some(cap) = t.crossing_cap {
            if p.crossing_count() > cap {
                return Err(CertifyError::CapExceeded {
                    step: i,
                    crossings: p.crossing_count(),
                    cap,
                });
            }
        }
        if i > 0 {
            let prev = &t.steps[i - 1].plat;
            let replayed = MoveRecord::replay(&step.record.mv, step.record.reduced, prev)
                .map_err(|source| CertifyError::Replay { step: i, source })?;
            if &replayed != p {
                return Err(CertifyError::Mismatch { step: i });
            }
            if p.bridge_index() > prev.bridge_index() {
                return Err(CertifyError::BridgeIncrease { step: i });
            }
        }
        if let Ok(v) = oracle_value_with_budget(p, CERTIFY_BUDGET) {
            match &reference {
                None => reference = Some(v),
                Some(r) if *r != v => {
                    return Err(CertifyError::OracleChanged {
                        step: i,
                        expected: r.clone(),
                        found: v,
                    })
                }
                Some(_) => {}
            }
        }
    }
    if t.outcome == Outcome::ReachedStandard && !t.last().is_some_and(Plat::is_standard) {
        return Err(CertifyError::NotStandard);
    }
    Ok(())
}

pub fn is_certified(t: &SimplificationTrace) -> bool {
    certify_trace(t).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plat(n: usize, w: &[i32]) -> Plat {
        Plat::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn trivial_plat_is_a_single_step() {
        let t = simplify(&Plat::trivial(2), &SearchConfig::default());
        assert_eq!(t.outcome, Outcome::ReachedStandard);
        assert_eq!(t.steps.len(), 1);
        assert!(is_certified(&t));
    }

    #[test]
    fn one_crossing_destabilizes() {
        let t = simplify(&plat(2, &[2]), &SearchConfig::default());
        assert_eq!(t.outcome, Outcome::ReachedStandard);
        assert_eq!(t.last().unwrap(), &Plat::trivial(1));
        assert_eq!(t.steps[1].record.kind(), MoveKind::Destabilize);
        assert!(is_certified(&t));
    }

    #[test]
    fn injected_stabilize_is_rejected() {
        let p = Plat::trivial(1);
        let mut t = simplify(&p, &SearchConfig::default());
        let q = p.stabilize();
        t.steps.push(TraceStep {
            record: MoveRecord::describe(Move::Stabilize, false, &q),
            plat: q,
        });
        assert_eq!(certify_trace(&t), Err(CertifyError::Stabilize { step: 1 }));
    }

    #[test]
    fn tampered_steps_are_located() {
        let mut t = simplify(&plat(2, &[2, 1, -2]), &SearchConfig::default());
        assert!(is_certified(&t));
        t.steps[1].plat = plat(2, &[3]);
        t.steps[1].record =
            MoveRecord::describe(t.steps[1].record.mv.clone(), false, &t.steps[1].plat);
        assert!(matches!(
            certify_trace(&t),
            Err(CertifyError::Mismatch { step: 1 } | CertifyError::Replay { step: 1, .. })
        ));
    }

    #[test]
    fn cap_is_enforced_by_certification() {
        let mut t = simplify(&plat(2, &[2, 1, -2]), &SearchConfig::default());
        t.crossing_cap = Some(1);
        assert!(matches!(
            certify_trace(&t),
            Err(CertifyError::CapExceeded { step: 0, .. })
        ));
    }

    #[test]
    fn hopf_link_is_not_simplified() {
        let cfg = SearchConfig {
            node_budget: 200,
            ..SearchConfig::default()
        };
        let t = simplify(&plat(2, &[2, 2]), &cfg);
        assert_eq!(t.outcome, Outcome::BudgetExhausted);
        assert!(is_certified(&t));
    }
}
