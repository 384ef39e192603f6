use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{Direction, Relation};
use crate::plat::{hilden_generators, CosetStep, FlipDirection, IsotopyOp, Move, Plat, Side};

fn random_move(rng: &mut ChaCha8Rng, p: &Plat) -> Move {
    let m = p.strands();
    let len = p.crossing_count();
    let dir = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            FlipDirection::In
        } else {
            FlipDirection::Out
        }
    };
    match rng.gen_range(0..10) {
        0 | 1 => Move::Stabilize,
        2..=4 => Move::DoubleCoset(CosetStep {
            side: if rng.gen_bool(0.5) {
                Side::Top
            } else {
                Side::Bottom
            },
            gen: rng.gen_range(0..hilden_generators(p.bridge_index()).len()),
            inverted: rng.gen_bool(0.5),
        }),
        5 => Move::Flip {
            split: rng.gen_range(0..=len),
            k: rng.gen_range(1..m),
            direction: dir(rng),
        },
        6 => {
            let start = 2 * rng.gen_range(0..m / 2) + 1;
            let block = 2 * rng.gen_range(1..=(m + 1 - start) / 2);
            Move::Microflip {
                start,
                block,
                gap: rng.gen_range(1..block),
                split: rng.gen_range(0..=len),
                direction: dir(rng),
            }
        }
        _ => {
            let relation = if rng.gen_bool(0.5) {
                Relation::FarCommutation
            } else {
                Relation::BraidRelation
            };
            let direction = if rng.gen_bool(0.5) {
                Direction::Forward
            } else {
                Direction::Reverse
            };
            Move::Isotopy(IsotopyOp::Rewrite {
                pos: rng.gen_range(0..len.max(1)),
                relation,
                direction,
            })
        }
    }
}

/// Applies `budget` random link-preserving moves, free-reducing after each.
/// Draws that do not apply, or that leave the plat unchanged, are redrawn.
pub fn scramble(p: &Plat, seed: u64, budget: usize) -> Plat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = p.clone();
    let mut applied = 0;
    let mut draws = 0;
    while applied < budget && draws < 1000 * (budget + 1) {
        draws += 1;
        let mv = random_move(&mut rng, &cur);
        if let Ok(next) = mv.apply(&cur) {
            let next = next.free_reduce();
            if next != cur {
                cur = next;
                applied += 1;
            }
        }
    }
    cur
}
