use std::collections::HashSet;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Extremum, Gluing, Label, Polarity, SlotRef, Tile, TileKind, TilingTree};

fn r(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

fn slot(tile: usize, slot: usize) -> SlotRef {
    SlotRef { tile, slot }
}

/// The disc of the standard `n`-bridge plat: a chain of `n−1` T440 tiles,
/// joined slot 3 to slot 0, with T110 caps on the free slots (maxima on even
/// slots, minima on odd ones).
pub fn trivial_tiling(n: usize) -> TilingTree {
    assert!(n >= 1, "bridge index must be positive");
    let cap = |id, e, h| Tile {
        id,
        kind: TileKind::T110(e),
        height: h,
    };
    if n == 1 {
        return TilingTree {
            bridge_index: 1,
            tiles: vec![
                cap(0, Extremum::Max, r(1, 2)),
                cap(1, Extremum::Min, r(-1, 2)),
            ],
            edges: vec![Gluing {
                a: slot(0, 0),
                b: slot(1, 0),
                label: Label::Arc,
                inside: None,
            }],
        };
    }
    let saddles = n - 1;
    let mut tiles: Vec<Tile> = (0..saddles)
        .map(|i| Tile {
            id: i,
            kind: TileKind::T440,
            height: Rational64::from_integer(i as i64),
        })
        .collect();
    let mut edges = Vec::new();
    let mut next = saddles;
    for i in 0..saddles {
        for s in 0..4 {
            if (s == 0 && i > 0) || (s == 3 && i + 1 < saddles) {
                continue;
            }
            let base = Rational64::from_integer(i as i64);
            let (e, h) = if s % 2 == 0 {
                (Extremum::Max, base + r(1, s as i64 + 2))
            } else {
                (Extremum::Min, base - r(1, s as i64 + 2))
            };
            tiles.push(cap(next, e, h));
            edges.push(Gluing {
                a: slot(i, s),
                b: slot(next, 0),
                label: Label::Arc,
                inside: None,
            });
            next += 1;
        }
        if i + 1 < saddles {
            edges.push(Gluing {
                a: slot(i, 3),
                b: slot(i + 1, 0),
                label: Label::Arc,
                inside: None,
            });
        }
    }
    TilingTree {
        bridge_index: n,
        tiles,
        edges,
    }
}

struct Builder {
    t: TilingTree,
    heights: HashSet<Rational64>,
    next_id: usize,
    rng: ChaCha8Rng,
}

impl Builder {
    /// A height on the `1/65536` grid just above (`sign = 1`) or below `near`.
    fn fresh_height(&mut self, near: Rational64, sign: i64) -> Rational64 {
        const GRID: i64 = 1 << 16;
        let base = (near * GRID).floor().to_integer();
        loop {
            let h = r(base + sign * self.rng.gen_range(1..GRID / 4), GRID);
            if self.heights.insert(h) {
                return h;
            }
        }
    }

    fn height(&self, id: usize) -> Rational64 {
        self.t.tile(id).expect("tile exists").height
    }

    fn add_tile(&mut self, kind: TileKind, height: Rational64) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.t.tiles.push(Tile { id, kind, height });
        id
    }

    fn nesting_target(&mut self) -> Option<usize> {
        if !self.rng.gen_bool(0.3) {
            return None;
        }
        let discs: Vec<usize> = (0..self.t.edges.len())
            .filter(|&i| {
                let e = &self.t.edges[i];
                e.label == Label::Circle
                    && [e.a.tile, e.b.tile]
                        .iter()
                        .any(|&x| matches!(self.t.kind(x), TileKind::T001(_)))
            })
            .collect();
        if discs.is_empty() {
            None
        } else {
            Some(discs[self.rng.gen_range(0..discs.len())])
        }
    }

    /// Splits an arc with a saddle whose circle slot is capped by a disc.
    fn insert_t221(&mut self) {
        let arcs: Vec<usize> = (0..self.t.edges.len())
            .filter(|&i| self.t.edges[i].label == Label::Arc)
            .collect();
        let e = arcs[self.rng.gen_range(0..arcs.len())];
        let Gluing { a, b, .. } = self.t.edges[e];
        let (ext, pol, sign) = if self.rng.gen_bool(0.5) {
            (Extremum::Min, Polarity::Down, -1)
        } else {
            (Extremum::Max, Polarity::Up, 1)
        };
        let mid = (self.height(a.tile) + self.height(b.tile)) / 2;
        let side = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let hn = self.fresh_height(mid, side);
        let n = self.add_tile(TileKind::T221(pol), hn);
        let hv = self.fresh_height(hn, sign);
        let v = self.add_tile(TileKind::T001(ext), hv);
        let inside = self.nesting_target();
        self.t.edges[e] = Gluing {
            a,
            b: slot(n, 0),
            label: Label::Arc,
            inside: None,
        };
        self.t.edges.push(Gluing {
            a: slot(n, 1),
            b,
            label: Label::Arc,
            inside: None,
        });
        self.t.edges.push(Gluing {
            a: slot(n, 2),
            b: slot(v, 0),
            label: Label::Circle,
            inside,
        });
    }

    /// Splits a circle with a pair of pants whose third circle is capped.
    /// The pants take the polarity of the saddle they sit against.
    fn insert_t003(&mut self, e: usize) {
        let Gluing { a, b, inside, .. } = self.t.edges[e];
        let (saddle, disc) = if self.t.kind(a.tile).is_saddle() {
            (a, b)
        } else {
            (b, a)
        };
        let pol = match self.t.kind(saddle.tile) {
            TileKind::T221(p) | TileKind::T003(p) => p,
            _ => unreachable!("circle gluings in generated tilings touch a saddle"),
        };
        let (ext, sign) = match pol {
            Polarity::Down => (Extremum::Min, -1),
            Polarity::Up => (Extremum::Max, 1),
        };
        let mid = (self.height(a.tile) + self.height(b.tile)) / 2;
        let hm = self.fresh_height(mid, sign);
        let m = self.add_tile(TileKind::T003(pol), hm);
        let hw = self.fresh_height(hm, sign);
        let w = self.add_tile(TileKind::T001(ext), hw);
        let nested = self.nesting_target();
        // the half toward `disc` keeps this edge's index, so curves nested in it stay nested
        self.t.edges[e] = Gluing {
            a: slot(m, 1),
            b: disc,
            label: Label::Circle,
            inside,
        };
        self.t.edges.push(Gluing {
            a: saddle,
            b: slot(m, 0),
            label: Label::Circle,
            inside: None,
        });
        self.t.edges.push(Gluing {
            a: slot(m, 2),
            b: slot(w, 0),
            label: Label::Circle,
            inside: nested,
        });
    }
}

/// Starts from the trivial tiling and inserts up to `max_extra_tiles / 2`
/// saddle/disc pairs. Deterministic per seed.
pub fn random_valid_tiling(seed: u64, n: usize, max_extra_tiles: usize) -> TilingTree {
    let t = trivial_tiling(n);
    let heights = t.tiles.iter().map(|x| x.height).collect();
    let next_id = t.tiles.iter().map(|x| x.id).max().map_or(0, |m| m + 1);
    let mut b = Builder {
        t,
        heights,
        next_id,
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    let pairs = b.rng.gen_range(0..=max_extra_tiles / 2);
    for _ in 0..pairs {
        let circles: Vec<usize> = (0..b.t.edges.len())
            .filter(|&i| b.t.edges[i].label == Label::Circle)
            .collect();
        if !circles.is_empty() && b.rng.gen_bool(0.4) {
            let e = circles[b.rng.gen_range(0..circles.len())];
            b.insert_t003(e);
        } else {
            b.insert_t221();
        }
    }
    b.t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_census() {
        for n in 1..=6 {
            let t = trivial_tiling(n);
            assert!(t.is_valid(), "{:?}", t.validate());
            let c = t.census();
            assert_eq!((c.t110, c.t440), (2 * n, n - 1));
            assert_eq!(t.euler_characteristic().unwrap(), 1);
            assert_eq!(
                t.complexity().unwrap(),
                crate::foliation::Complexity {
                    t440: n - 1,
                    t001: 0
                }
            );
        }
    }

    #[test]
    fn no_extra_tiles_is_trivial() {
        assert_eq!(random_valid_tiling(42, 3, 0), trivial_tiling(3));
        assert_eq!(random_valid_tiling(42, 3, 1), trivial_tiling(3));
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_valid_tiling(5, 4, 12), random_valid_tiling(5, 4, 12));
    }

    #[test]
    fn one_pair_appended() {
        let base = trivial_tiling(2);
        let mut b = Builder {
            heights: base.tiles.iter().map(|x| x.height).collect(),
            next_id: 10,
            t: base,
            rng: ChaCha8Rng::seed_from_u64(1),
        };
        b.insert_t221();
        let t = b.t;
        assert!(t.is_valid());
        let c = t.census();
        assert_eq!((c.t221, c.t001), (1, 1));
        assert!(t.check_counting_identity());
        assert_eq!(t.complexity().unwrap().t001, 1);
    }
}
