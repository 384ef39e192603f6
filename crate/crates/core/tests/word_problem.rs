use std::collections::HashMap;

use platcalc_core::braid::{BraidWord, Direction, Relation};
use proptest::prelude::*;

mod common;
use common::{all_words, closure as oracle};

fn b3(w: &[i8]) -> BraidWord {
    BraidWord::new(3, w.iter().map(|&g| g as i32).collect()).unwrap()
}

#[test]
fn normal_form_agrees_with_rewrite_closure_on_b3_up_to_length_4() {
    let mut closure = oracle::Closure::build(8);
    let words = all_words(4);
    let forms: Vec<_> = words.iter().map(|w| b3(w).normal_form()).collect();
    let mut disagreements = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate().skip(i) {
            let by_oracle = closure.same(u, v);
            let by_garside = forms[i] == forms[j];
            if by_oracle != by_garside {
                disagreements.push((u.clone(), v.clone(), by_oracle));
            }
        }
    }
    assert!(
        disagreements.is_empty(),
        "{} disagreements, e.g. {:?}",
        disagreements.len(),
        &disagreements[..disagreements.len().min(5)]
    );
}

#[test]
fn class_count_is_stable_under_larger_closures() {
    // distinct elements of B₃ among words of length ≤ 4
    let words = all_words(4);
    let mut classes: HashMap<_, ()> = HashMap::new();
    for w in &words {
        classes.insert(b3(w).normal_form(), ());
    }
    let mut closure = oracle::Closure::build(8);
    let mut reps: Vec<Vec<i8>> = Vec::new();
    for w in &words {
        if !reps.iter().any(|r| closure.same(r, w)) {
            reps.push(w.clone());
        }
    }
    assert_eq!(reps.len(), classes.len());
}

fn word_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |m| {
        let letter = (1..m as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(m, letters).unwrap())
    })
}

fn pair_strategy(
    max_strands: usize,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |m| {
        let letter = (1..m as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        let word = prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(m, letters).unwrap());
        (word.clone(), word)
    })
}

proptest! {
    #[test]
    fn rewriting_is_sound(w in word_strategy(5, 10), steps in prop::collection::vec((0usize..12, 0u8..4), 0..12)) {
        let mut cur = w.clone();
        for (pos, op) in steps {
            let next = match op {
                0 => cur.apply_relation(pos, Relation::FarCommutation, Direction::Forward),
                1 => cur.apply_relation(pos, Relation::FarCommutation, Direction::Reverse),
                2 => cur.apply_relation(pos, Relation::BraidRelation, Direction::Forward),
                _ => cur.apply_relation(pos, Relation::BraidRelation, Direction::Reverse),
            };
            if let Ok(next) = next {
                prop_assert_eq!(next.len(), cur.len());
                cur = next;
            }
            cur = cur.free_reduce();
        }
        prop_assert!(w.equals(&cur).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism((u, v) in pair_strategy(6, 10)) {
        let lhs = u.concat(&v).unwrap().permutation();
        let rhs = u.permutation().compose(&v.permutation());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn full_twist_is_central(w in word_strategy(4, 5)) {
        let delta = BraidWord::full_twist(w.strands()).unwrap();
        let left = delta.concat(&w).unwrap();
        let right = w.concat(&delta).unwrap();
        prop_assert!(left.equals(&right).unwrap());
    }

    #[test]
    fn equality_is_an_equivalence((u, v) in pair_strategy(4, 6), conj in word_strategy(4, 4)) {
        prop_assert!(u.equals(&u).unwrap());
        prop_assert_eq!(u.equals(&v).unwrap(), v.equals(&u).unwrap());
        // u = u', and u' = u'' built by inserting a trivial conjugate
        let m = u.strands();
        let c = BraidWord::new(m, conj.letters().iter().copied().filter(|g| (g.unsigned_abs() as usize) < m).collect()).unwrap();
        let u1 = c.concat(&c.inverse()).unwrap().concat(&u).unwrap();
        let u2 = u.concat(&c.inverse()).unwrap().concat(&c).unwrap();
        prop_assert!(u1.equals(&u).unwrap() && u2.equals(&u).unwrap() && u1.equals(&u2).unwrap());
        prop_assert!(u.concat(&v.inverse()).unwrap().is_trivial() == u.equals(&v).unwrap());
    }
}
