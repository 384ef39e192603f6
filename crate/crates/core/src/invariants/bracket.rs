//! Bracket state sum as a sweep over the crossings.
//!
//! After each crossing the partial states are grouped by how the open edges
//! are paired up through the smoothings chosen so far; states with the same
//! pairing are summed. Plats are swept top to bottom, so only about `2n`
//! edges are ever open.

use std::collections::HashMap;

use super::diagram::{LinkDiagram, Over};
use super::LaurentPolynomial;

type Pairing = Vec<(usize, usize)>;

/// Unnormalized-by-writhe bracket with `⟨O⟩ = 1`.
pub(crate) fn bracket(d: &LinkDiagram) -> LaurentPolynomial {
    let loop_value = LaurentPolynomial::loop_value();
    let c = d.crossing_count();
    if c == 0 {
        return loop_value.pow(d.free_loops().saturating_sub(1) as u32);
    }
    let span = 5 * c + 2;
    let width = 2 * span + 1;
    let mut states: HashMap<Pairing, Vec<i64>> = HashMap::new();
    let mut unit = vec![0i64; width];
    unit[span] = 1;
    states.insert(Vec::new(), unit);
    for x in d.crossings() {
        let [e0, e1, e2, e3] = x.ends;
        let (a_arcs, b_arcs) = match x.over {
            Over::Even => ([(e0, e1), (e2, e3)], [(e0, e3), (e1, e2)]),
            Over::Odd => ([(e1, e2), (e3, e0)], [(e0, e1), (e2, e3)]),
        };
        let mut next: HashMap<Pairing, Vec<i64>> = HashMap::with_capacity(states.len() * 2);
        for (pairing, poly) in &states {
            for (arcs, shift) in [(a_arcs, 1isize), (b_arcs, -1)] {
                let mut p = pairing.clone();
                let mut loops = 0;
                for (u, v) in arcs {
                    join(&mut p, u, v, &mut loops);
                }
                for pair in p.iter_mut() {
                    if pair.0 > pair.1 {
                        *pair = (pair.1, pair.0);
                    }
                }
                p.sort_unstable();
                let mut out = shift_dense(poly, shift);
                for _ in 0..loops {
                    out = times_loop(&out);
                }
                let slot = next.entry(p).or_insert_with(|| vec![0; width]);
                for (acc, v) in slot.iter_mut().zip(out) {
                    *acc += v;
                }
            }
        }
        states = next;
    }
    debug_assert!(states.len() == 1 && states.contains_key(&Vec::new()));
    let dense = states.remove(&Vec::new()).unwrap_or_default();
    let total = LaurentPolynomial::from_terms(
        dense
            .iter()
            .enumerate()
            .map(|(i, &coef)| (i as i32 - span as i32, coef)),
    );
    // every state closes at least one loop, and the first loop counts as 1
    let total = &total * &loop_value.pow(d.free_loops() as u32);
    total
        .div_exact(&loop_value)
        .expect("every smoothing state has a loop")
}

/// Follows the smoothing arc `u`–`v` through the pairing of open edges.
fn join(p: &mut Pairing, u: usize, v: usize, loops: &mut usize) {
    if u == v {
        *loops += 1;
        return;
    }
    if let Some(i) = p
        .iter()
        .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    {
        p.swap_remove(i);
        *loops += 1;
        return;
    }
    let far_u = take_partner(p, u).unwrap_or(u);
    let far_v = take_partner(p, v).unwrap_or(v);
    p.push((far_u, far_v));
}

fn take_partner(p: &mut Pairing, x: usize) -> Option<usize> {
    let i = p.iter().position(|&(a, b)| a == x || b == x)?;
    let (a, b) = p.swap_remove(i);
    Some(if a == x { b } else { a })
}

fn shift_dense(poly: &[i64], shift: isize) -> Vec<i64> {
    let n = poly.len();
    let mut out = vec![0; n];
    for (i, &c) in poly.iter().enumerate() {
        if c != 0 {
            out[(i as isize + shift) as usize] = c;
        }
    }
    debug_assert!(n > 0);
    out
}

fn times_loop(poly: &[i64]) -> Vec<i64> {
    let n = poly.len();
    let mut out = vec![0; n];
    for (i, &c) in poly.iter().enumerate() {
        if c != 0 {
            out[i + 2] -= c;
            out[i - 2] -= c;
        }
    }
    out
}
