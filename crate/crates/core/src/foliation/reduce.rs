use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{Extremum, Gluing, Label, Polarity, SlotRef, TileKind, TilingError, TilingTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// A min disc on a down saddle, not enclosing its neighbours' curves.
    A,
    /// A max disc on an up saddle, likewise.
    B,
    /// A T440 whose boundary reads min cap, itself, max cap (either order).
    C,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Reducible {
    pub tile: usize,
    pub condition: Condition,
}

impl fmt::Display for Reducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tile {} ({})", self.tile, self.condition)
    }
}

impl TilingTree {
    /// The knot edges in boundary order, as `(tile, knot edge)` pairs.
    ///
    /// Each tile's boundary alternates knot edges and interior arcs,
    /// `k0 a0 k1 a1 …`; leaving through arc `a_i` into slot `a'_j` of the
    /// neighbour continues along its knot edge `k'_{j+1}`.
    pub fn knot_traversal(&self) -> Vec<(usize, usize)> {
        let Some(start) = self.tiles.iter().find(|t| t.kind.knot_edges() > 0) else {
            return Vec::new();
        };
        let index = self.slot_index();
        let mut out = Vec::new();
        let (mut t, mut k) = (start.id, 0);
        let total: usize = self.tiles.iter().map(|t| t.kind.knot_edges()).sum();
        while out.len() <= total {
            out.push((t, k));
            let Some(&e) = index.get(&SlotRef { tile: t, slot: k }) else {
                break;
            };
            let g = &self.edges[e];
            let there = if g.a == (SlotRef { tile: t, slot: k }) {
                g.b
            } else {
                g.a
            };
            t = there.tile;
            k = (there.slot + 1) % self.kind(t).knot_edges().max(1);
            if (t, k) == (start.id, 0) {
                break;
            }
        }
        out
    }

    fn neighbour_at(
        &self,
        index: &HashMap<SlotRef, usize>,
        tile: usize,
        slot: usize,
    ) -> Option<(usize, SlotRef)> {
        let e = *index.get(&SlotRef { tile, slot })?;
        let g = &self.edges[e];
        let there = if g.a == (SlotRef { tile, slot }) {
            g.b
        } else {
            g.a
        };
        Some((e, there))
    }

    fn disc_condition(&self, index: &HashMap<SlotRef, usize>, v: usize) -> Option<Condition> {
        let TileKind::T001(ext) = self.kind(v) else {
            return None;
        };
        let (circle, at) = self.neighbour_at(index, v, 0)?;
        let n = at.tile;
        let cond = match (ext, self.kind(n)) {
            (Extremum::Min, TileKind::T221(Polarity::Down) | TileKind::T003(Polarity::Down)) => {
                Condition::A
            }
            (Extremum::Max, TileKind::T221(Polarity::Up) | TileKind::T003(Polarity::Up)) => {
                Condition::B
            }
            _ => return None,
        };
        let others: HashSet<usize> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, g)| i != circle && g.touches(n))
            .map(|(_, g)| g.other(n))
            .collect();
        let blocked = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, g)| others.iter().any(|&x| g.touches(x)))
            .any(|(i, _)| self.ancestors(i).contains(&circle));
        (!blocked).then_some(cond)
    }

    /// For a T440 `v`, the arc slot `j` such that the boundary reads
    /// `M₁ v M₂` with `M₁` on slot `j` and `M₂` on slot `j+1`.
    fn cap_pair(&self, v: usize) -> Option<usize> {
        if self.kind(v) != TileKind::T440 {
            return None;
        }
        let walk = self.knot_traversal();
        let len = walk.len();
        if len < 3 {
            return None;
        }
        let cap = |t: usize| match self.kind(t) {
            TileKind::T110(e) => Some(e),
            _ => None,
        };
        (0..len).find_map(|i| {
            let (m1, (mid, k), m2) = (walk[i].0, walk[(i + 1) % len], walk[(i + 2) % len].0);
            match (mid == v, cap(m1), cap(m2)) {
                (true, Some(e1), Some(e2)) if e1 != e2 => Some((k + 3) % 4),
                _ => None,
            }
        })
    }

    fn check(&self, tile: usize, condition: Condition) -> bool {
        if self.tile(tile).is_none() {
            return false;
        }
        match condition {
            Condition::A | Condition::B => {
                self.disc_condition(&self.slot_index(), tile) == Some(condition)
            }
            Condition::C => self.cap_pair(tile).is_some(),
        }
    }
}

/// A tile meeting condition (a), (b) or (c), preferring disc tiles.
pub fn find_reducible_vertex(t: &TilingTree) -> Result<Option<Reducible>, TilingError> {
    t.require_valid()?;
    let index = t.slot_index();
    let disc = t.tiles.iter().find_map(|x| {
        t.disc_condition(&index, x.id).map(|condition| Reducible {
            tile: x.id,
            condition,
        })
    });
    if disc.is_some() {
        return Ok(disc);
    }
    Ok(t.tiles
        .iter()
        .find(|x| t.cap_pair(x.id).is_some())
        .map(|x| Reducible {
            tile: x.id,
            condition: Condition::C,
        }))
}

/// Removes the reducible tile together with its saddle (cases a, b) or its
/// two caps (case c), regluing what they separated.
pub fn reduce(t: &TilingTree, r: Reducible) -> Result<TilingTree, TilingError> {
    t.require_valid()?;
    if !t.check(r.tile, r.condition) {
        return Err(TilingError::NotReducible {
            tile: r.tile,
            condition: r.condition,
        });
    }
    let index = t.slot_index();
    let v = r.tile;
    match r.condition {
        Condition::A | Condition::B => {
            let (circle, at) = t.neighbour_at(&index, v, 0).expect("discs are glued");
            let n = at.tile;
            let rest: Vec<(usize, SlotRef)> = (0..t.kind(n).valence())
                .filter(|&s| s != at.slot)
                .map(|s| {
                    t.neighbour_at(&index, n, s)
                        .expect("saddles are fully glued")
                })
                .collect();
            let [(e1, x), (e2, y)] = rest[..] else {
                unreachable!("saddles have valence three")
            };
            let (g1, g2) = (&t.edges[e1], &t.edges[e2]);
            let joined = Gluing {
                a: x,
                b: y,
                label: g1.label,
                inside: g1.inside.or(g2.inside),
            };
            let redirect = HashMap::from([(e1, 0), (e2, 0)]);
            Ok(t.rebuilt(
                &HashSet::from([v, n]),
                &HashSet::from([circle, e1, e2]),
                vec![joined],
                &redirect,
            ))
        }
        Condition::C => {
            let j = t.cap_pair(v).expect("checked above");
            let around: Vec<(usize, SlotRef)> = (0..4)
                .map(|s| {
                    t.neighbour_at(&index, v, (j + s) % 4)
                        .expect("T440 is fully glued")
                })
                .collect();
            let joined = Gluing {
                a: around[2].1,
                b: around[3].1,
                label: Label::Arc,
                inside: None,
            };
            let drop_tiles = HashSet::from([v, around[0].1.tile, around[1].1.tile]);
            let drop_edges: HashSet<usize> = around.iter().map(|&(e, _)| e).collect();
            let mut out = t.rebuilt(&drop_tiles, &drop_edges, vec![joined], &HashMap::new());
            out.bridge_index -= 1;
            Ok(out)
        }
    }
}

/// Whenever a T001 or T440 tile remains, some tile is reducible.
pub fn reducible_vertex_exists(t: &TilingTree) -> Result<bool, TilingError> {
    let c = t.census();
    let found = find_reducible_vertex(t)?;
    Ok(!(c.t001 > 0 || c.t440 > 0) || found.is_some())
}
