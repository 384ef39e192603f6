//! Independent oracles shared by the test targets.
#![allow(dead_code)]

use platcalc_core::invariants::{LaurentPolynomial, LinkDiagram, Over};

/// Sum over all 2^c smoothings, loops counted by union–find.
pub fn brute_force_bracket(d: &LinkDiagram) -> LaurentPolynomial {
    let c = d.crossing_count();
    let edges = d
        .crossings()
        .iter()
        .flat_map(|x| x.ends)
        .max()
        .map_or(0, |m| m + 1);
    let delta = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPolynomial::zero();
    for state in 0u64..1 << c {
        let mut parent: Vec<usize> = (0..edges).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let mut a_count = 0i32;
        for (i, x) in d.crossings().iter().enumerate() {
            let [e0, e1, e2, e3] = x.ends;
            let a_choice = state >> i & 1 == 0;
            // A joins the corners swept when turning the over strand anticlockwise
            let arcs = match (x.over, a_choice) {
                (Over::Even, true) | (Over::Odd, false) => [(e0, e1), (e2, e3)],
                (Over::Even, false) | (Over::Odd, true) => [(e0, e3), (e1, e2)],
            };
            if a_choice {
                a_count += 1;
            }
            for (u, v) in arcs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let loops = (0..edges).filter(|&e| find(&mut parent, e) == e).count() + d.free_loops();
        let term =
            &LaurentPolynomial::monomial(1, 2 * a_count - c as i32) * &delta.pow(loops as u32 - 1);
        total = &total + &term;
    }
    total
}

pub mod closure {
    //! Equivalence classes of short B₃ words under the defining relators,
    //! computed by closing the bounded rewrite graph with union–find.
    use std::collections::HashMap;

    const ALPHABET: [i8; 4] = [1, -1, 2, -2];

    /// Every length-3 relator pair of B₃, written out by hand.
    const RELATIONS: [([i8; 3], [i8; 3]); 6] = [
        ([1, 2, 1], [2, 1, 2]),
        ([-1, -2, -1], [-2, -1, -2]),
        ([1, 2, -1], [-2, 1, 2]),
        ([1, -2, -1], [-2, -1, 2]),
        ([2, 1, -2], [-1, 2, 1]),
        ([2, -1, -2], [-1, -2, 1]),
    ];

    pub struct Closure {
        index: HashMap<Vec<i8>, usize>,
        parent: Vec<usize>,
    }

    impl Closure {
        pub fn build(max_len: usize) -> Self {
            let mut words: Vec<Vec<i8>> = vec![vec![]];
            let mut frontier = vec![vec![]];
            for _ in 0..max_len {
                let mut next = Vec::new();
                for w in &frontier {
                    for &g in &ALPHABET {
                        let mut x: Vec<i8> = w.clone();
                        x.push(g);
                        next.push(x);
                    }
                }
                words.extend(next.iter().cloned());
                frontier = next;
            }
            let index: HashMap<Vec<i8>, usize> = words
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect();
            let mut closure = Self {
                parent: (0..words.len()).collect(),
                index,
            };
            for w in &words {
                let here = closure.index[w];
                if w.len() + 2 <= max_len {
                    for pos in 0..=w.len() {
                        for &g in &ALPHABET {
                            let mut x = w.clone();
                            x.splice(pos..pos, [g, -g]);
                            let there = closure.index[&x];
                            closure.union(here, there);
                        }
                    }
                }
                for pos in 0..w.len().saturating_sub(2) {
                    for (lhs, rhs) in RELATIONS {
                        for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                            if w[pos..pos + 3] == from {
                                let mut x = w.clone();
                                x[pos..pos + 3].copy_from_slice(&to);
                                let there = closure.index[&x];
                                closure.union(here, there);
                            }
                        }
                    }
                }
            }
            closure
        }

        fn find(&mut self, mut x: usize) -> usize {
            while self.parent[x] != x {
                self.parent[x] = self.parent[self.parent[x]];
                x = self.parent[x];
            }
            x
        }

        fn union(&mut self, a: usize, b: usize) {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra != rb {
                self.parent[ra.max(rb)] = ra.min(rb);
            }
        }

        pub fn same(&mut self, u: &[i8], v: &[i8]) -> bool {
            let (a, b) = (self.index[u], self.index[v]);
            self.find(a) == self.find(b)
        }
    }
}

pub fn all_words(max_len: usize) -> Vec<Vec<i8>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<i8>> = vec![vec![]];
    for _ in 0..max_len {
        let next: Vec<Vec<i8>> = frontier
            .iter()
            .flat_map(|w| {
                [1i8, -1, 2, -2].into_iter().map(move |g| {
                    let mut x = w.clone();
                    x.push(g);
                    x
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
