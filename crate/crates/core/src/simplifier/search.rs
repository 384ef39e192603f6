use std::cmp::Ordering;
use std::collections::HashSet;

use rayon::prelude::*;

use crate::braid::{Direction, Relation};
use crate::plat::{
    hilden_generators, CosetStep, FlipDirection, IsotopyOp, Move, MoveKind, MoveRecord, Plat, Side,
};

use super::{Outcome, SearchConfig, SimplificationTrace, TraceStep};

const DIRECTIONS: [FlipDirection; 2] = [FlipDirection::In, FlipDirection::Out];

fn coset_steps(bridge_index: usize) -> Vec<CosetStep> {
    let gens = hilden_generators(bridge_index).len();
    let mut out = Vec::new();
    for side in [Side::Top, Side::Bottom] {
        for gen in 0..gens {
            for inverted in [false, true] {
                out.push(CosetStep {
                    side,
                    gen,
                    inverted,
                });
            }
        }
    }
    out
}

/// Every candidate move at `p`, in a fixed order.
pub fn move_menu(p: &Plat, pocket_len: usize) -> Vec<Move> {
    let len = p.crossing_count();
    let m = p.strands();
    let mut out = vec![Move::Destabilize, Move::Isotopy(IsotopyOp::FreeReduce)];
    for pos in 0..len {
        for relation in [Relation::FarCommutation, Relation::BraidRelation] {
            for direction in [Direction::Forward, Direction::Reverse] {
                out.push(Move::Isotopy(IsotopyOp::Rewrite {
                    pos,
                    relation,
                    direction,
                }));
            }
        }
    }
    let steps = coset_steps(p.bridge_index());
    out.extend(steps.iter().map(|&s| Move::DoubleCoset(s)));
    for split in 0..=len {
        for k in 1..m {
            for direction in DIRECTIONS {
                out.push(Move::Flip {
                    split,
                    k,
                    direction,
                });
            }
        }
    }
    for start in (1..m).step_by(2) {
        for block in (2..=m + 1 - start).step_by(2) {
            if block == m {
                continue;
            }
            for gap in 1..block {
                for split in 0..=len {
                    for direction in DIRECTIONS {
                        out.push(Move::Microflip {
                            start,
                            block,
                            gap,
                            split,
                            direction,
                        });
                    }
                }
            }
        }
    }
    let mut scripts: Vec<Vec<CosetStep>> = steps.iter().map(|&s| vec![s]).collect();
    for _ in 2..=pocket_len {
        scripts = scripts
            .iter()
            .flat_map(|script| {
                let last = *script.last().expect("nonempty");
                steps
                    .iter()
                    .filter(move |&&s| s != last.inverse())
                    .map(move |&s| {
                        let mut next = script.clone();
                        next.push(s);
                        next
                    })
            })
            .collect();
        out.extend(scripts.iter().cloned().map(Move::Pocket));
    }
    out
}

/// Applicable menu moves at `p`, each followed by the cancellation pass.
/// The flag records whether that pass changed anything.
pub fn successors(p: &Plat, pocket_len: usize, excluded: &[MoveKind]) -> Vec<(Move, bool, Plat)> {
    move_menu(p, pocket_len)
        .into_iter()
        .filter(|mv| !excluded.contains(&mv.kind()))
        .filter_map(|mv| {
            let raw = mv.apply(p).ok()?;
            let reduced = raw.reduce_cancellations();
            let changed = reduced != raw;
            Some((mv, changed, reduced))
        })
        .filter(|(_, _, q)| q != p)
        .collect()
}

struct Node {
    plat: Plat,
    parent: Option<usize>,
    mv: Move,
    reduced: bool,
}

struct Candidate {
    parent: usize,
    order: usize,
    mv: Move,
    reduced: bool,
    plat: Plat,
    salt: u64,
}

fn objective(p: &Plat) -> (usize, usize) {
    (p.bridge_index(), p.crossing_count())
}

fn salt(seed: u64, p: &Plat) -> u64 {
    if seed == 0 {
        return 0;
    }
    // splitmix64 over the letters
    let mut h = seed ^ p.strands() as u64;
    for &g in p.letters() {
        h = h.wrapping_add(0x9e37_79b9_7f4a_7c15 ^ g as u64);
        h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        h ^= h >> 31;
    }
    h
}

fn rank(a: &Candidate, b: &Candidate) -> Ordering {
    objective(&a.plat)
        .cmp(&objective(&b.plat))
        .then(a.salt.cmp(&b.salt))
        .then_with(|| a.plat.letters().cmp(b.plat.letters()))
        .then(a.parent.cmp(&b.parent))
        .then(a.order.cmp(&b.order))
}

fn trace_to(
    arena: &[Node],
    end: usize,
    outcome: Outcome,
    cap: Option<usize>,
) -> SimplificationTrace {
    let mut path = vec![end];
    while let Some(parent) = arena[*path.last().expect("nonempty")].parent {
        path.push(parent);
    }
    path.reverse();
    let steps = path
        .into_iter()
        .map(|i| {
            let node = &arena[i];
            TraceStep {
                plat: node.plat.clone(),
                record: MoveRecord::describe(node.mv.clone(), node.reduced, &node.plat),
            }
        })
        .collect();
    SimplificationTrace {
        steps,
        outcome,
        crossing_cap: cap,
    }
}

/// Beam search on `(bridge_index, crossing_count)`. Never stabilizes, so the
/// bridge index is non-increasing along the returned trace. On budget
/// exhaustion the trace ends at the best state seen.
pub fn simplify(p: &Plat, cfg: &SearchConfig) -> SimplificationTrace {
    let start = SimplificationTrace::start(p);
    let mut arena = vec![Node {
        plat: p.clone(),
        parent: None,
        mv: start.record.mv,
        reduced: false,
    }];
    if p.is_standard() {
        return trace_to(&arena, 0, Outcome::ReachedStandard, cfg.crossing_cap);
    }
    let mut visited: HashSet<Plat> = HashSet::from([p.clone()]);
    let mut frontier = vec![0usize];
    let mut best = 0usize;
    let mut expanded = 0usize;
    let width = cfg.beam_width.max(1);
    while !frontier.is_empty() && expanded < cfg.node_budget {
        let take = frontier.len().min(cfg.node_budget - expanded);
        frontier.truncate(take);
        expanded += take;
        let arena_ref = &arena;
        let mut candidates: Vec<Candidate> = frontier
            .par_iter()
            .flat_map_iter(|&id| {
                successors(&arena_ref[id].plat, cfg.pocket_len, &cfg.excluded)
                    .into_iter()
                    .enumerate()
                    .map(move |(order, (mv, reduced, plat))| Candidate {
                        parent: id,
                        order,
                        salt: salt(cfg.seed, &plat),
                        mv,
                        reduced,
                        plat,
                    })
            })
            .filter(|c| {
                cfg.crossing_cap
                    .map_or(true, |cap| c.plat.crossing_count() <= cap)
            })
            .collect();
        candidates.par_sort_unstable_by(rank);
        frontier.clear();
        for c in candidates {
            if frontier.len() == width {
                break;
            }
            if !visited.insert(c.plat.clone()) {
                continue;
            }
            let id = arena.len();
            let done = c.plat.is_standard();
            arena.push(Node {
                plat: c.plat,
                parent: Some(c.parent),
                mv: c.mv,
                reduced: c.reduced,
            });
            if done {
                return trace_to(&arena, id, Outcome::ReachedStandard, cfg.crossing_cap);
            }
            if objective(&arena[id].plat) < objective(&arena[best].plat) {
                best = id;
            }
            frontier.push(id);
        }
    }
    trace_to(&arena, best, Outcome::BudgetExhausted, cfg.crossing_cap)
}
