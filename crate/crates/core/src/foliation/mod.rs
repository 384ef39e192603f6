//! Tilings of a spanning disc by the singular leaves of its foliation.
//!
//! A tiling is a tree of tiles glued along interior arcs and boundary
//! circles. Circle gluings may carry a nesting annotation (`inside`) saying
//! the level curve lies inside another circle-glued curve.

mod generate;
mod reduce;
mod text;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

pub use generate::{random_valid_tiling, trivial_tiling};
pub use reduce::{find_reducible_vertex, reduce, reducible_vertex_exists, Condition, Reducible};
pub use text::TilingParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    /// Two level curves merge into one going down.
    Up,
    /// One level curve splits in two going down.
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extremum {
    Min,
    Max,
}

/// `T(a,b,c)`: `a` knot edges, `b` interior arcs, `c` boundary circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    T440,
    T221(Polarity),
    T003(Polarity),
    T001(Extremum),
    T110(Extremum),
}

impl TileKind {
    /// Interior arc slots, then circle slots.
    pub fn slots(self) -> (usize, usize) {
        match self {
            TileKind::T440 => (4, 0),
            TileKind::T221(_) => (2, 1),
            TileKind::T003(_) => (0, 3),
            TileKind::T001(_) => (0, 1),
            TileKind::T110(_) => (1, 0),
        }
    }

    pub fn valence(self) -> usize {
        let (b, c) = self.slots();
        b + c
    }

    pub fn knot_edges(self) -> usize {
        match self {
            TileKind::T440 => 4,
            TileKind::T221(_) => 2,
            TileKind::T110(_) => 1,
            TileKind::T003(_) | TileKind::T001(_) => 0,
        }
    }

    pub fn euler_characteristic(self) -> i64 {
        match self {
            TileKind::T440 | TileKind::T001(_) | TileKind::T110(_) => 1,
            TileKind::T221(_) => 0,
            TileKind::T003(_) => -1,
        }
    }

    pub fn label_of(self, slot: usize) -> Option<Label> {
        let (b, c) = self.slots();
        if slot < b {
            Some(Label::Arc)
        } else if slot < b + c {
            Some(Label::Circle)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TileKind::T440 => "T440",
            TileKind::T221(_) => "T221",
            TileKind::T003(_) => "T003",
            TileKind::T001(_) => "T001",
            TileKind::T110(_) => "T110",
        }
    }

    pub fn is_saddle(self) -> bool {
        matches!(self, TileKind::T221(_) | TileKind::T003(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Arc,
    Circle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub id: usize,
    pub kind: TileKind,
    pub height: Rational64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub tile: usize,
    pub slot: usize,
}

impl fmt::Display for SlotRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.tile, self.slot)
    }
}

/// An edge of the dual tree. Edges are identified by their position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub a: SlotRef,
    pub b: SlotRef,
    pub label: Label,
    pub inside: Option<usize>,
}

impl Gluing {
    pub fn other(&self, tile: usize) -> usize {
        if self.a.tile == tile {
            self.b.tile
        } else {
            self.a.tile
        }
    }

    pub fn touches(&self, tile: usize) -> bool {
        self.a.tile == tile || self.b.tile == tile
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TilingTree {
    pub bridge_index: usize,
    pub tiles: Vec<Tile>,
    pub edges: Vec<Gluing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    DuplicateTile(usize),
    UnknownTile {
        edge: usize,
        tile: usize,
    },
    SlotOutOfRange {
        edge: usize,
        slot: SlotRef,
    },
    LabelMismatch {
        edge: usize,
        slot: SlotRef,
    },
    SlotReused(SlotRef),
    Valence {
        tile: usize,
        expected: usize,
        got: usize,
    },
    Cycle,
    Disconnected,
    DuplicateHeight(Rational64),
    NestingTarget {
        edge: usize,
        target: usize,
    },
    NestingCycle(usize),
    T110Count {
        expected: usize,
        got: usize,
    },
    T440Count {
        expected: usize,
        got: usize,
    },
}

impl Violation {
    /// Census violations concern tile counts only; everything else breaks
    /// the shape of the tiling itself.
    pub fn is_structural(&self) -> bool {
        !matches!(
            self,
            Violation::T110Count { .. } | Violation::T440Count { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateTile(id) => write!(f, "tile id {id} is used twice"),
            Violation::UnknownTile { edge, tile } => {
                write!(f, "edge {edge} names unknown tile {tile}")
            }
            Violation::SlotOutOfRange { edge, slot } => {
                write!(f, "edge {edge}: slot {slot} does not exist")
            }
            Violation::LabelMismatch { edge, slot } => {
                write!(f, "edge {edge}: slot {slot} has the other gluing type")
            }
            Violation::SlotReused(s) => write!(f, "slot {s} is glued more than once"),
            Violation::Valence {
                tile,
                expected,
                got,
            } => {
                write!(f, "tile {tile} has valence {got}, expected {expected}")
            }
            Violation::Cycle => f.write_str("the dual graph has a cycle"),
            Violation::Disconnected => f.write_str("the dual graph is disconnected"),
            Violation::DuplicateHeight(h) => write!(f, "two tiles share height {h}"),
            Violation::NestingTarget { edge, target } => {
                write!(
                    f,
                    "edge {edge} is nested inside {target}, which is not a circle gluing"
                )
            }
            Violation::NestingCycle(e) => write!(f, "nesting through edge {e} is cyclic"),
            Violation::T110Count { expected, got } => {
                write!(f, "{got} T110 tiles, expected {expected}")
            }
            Violation::T440Count { expected, got } => {
                write!(f, "{got} T440 tiles, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("invalid tiling: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("tile {tile} does not satisfy condition {condition}")]
    NotReducible { tile: usize, condition: Condition },
}

/// `(|T440|, |T001|)`, compared lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complexity {
    pub t440: usize,
    pub t001: usize,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t440, self.t001)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Census {
    pub t440: usize,
    pub t221: usize,
    pub t003: usize,
    pub t001: usize,
    pub t110: usize,
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T440={} T221={} T003={} T001={} T110={}",
            self.t440, self.t221, self.t003, self.t001, self.t110
        )
    }
}

impl TilingTree {
    pub fn census(&self) -> Census {
        let mut c = Census::default();
        for t in &self.tiles {
            match t.kind {
                TileKind::T440 => c.t440 += 1,
                TileKind::T221(_) => c.t221 += 1,
                TileKind::T003(_) => c.t003 += 1,
                TileKind::T001(_) => c.t001 += 1,
                TileKind::T110(_) => c.t110 += 1,
            }
        }
        c
    }

    pub fn tile(&self, id: usize) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.id == id)
    }

    pub(crate) fn kind(&self, id: usize) -> TileKind {
        self.tile(id).expect("tile exists").kind
    }

    /// Edge index glued at each `(tile, slot)`.
    pub(crate) fn slot_index(&self) -> HashMap<SlotRef, usize> {
        let mut m = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            m.insert(e.a, i);
            m.insert(e.b, i);
        }
        m
    }

    /// Nesting ancestors of edge `e` (not including `e`), stopping at cycles.
    pub(crate) fn ancestors(&self, e: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut seen = HashSet::from([e]);
        let mut cur = self.edges.get(e).and_then(|g| g.inside);
        while let Some(x) = cur {
            if !seen.insert(x) {
                break;
            }
            out.push(x);
            cur = self.edges.get(x).and_then(|g| g.inside);
        }
        out
    }

    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut ids = HashSet::new();
        for t in &self.tiles {
            if !ids.insert(t.id) {
                out.push(Violation::DuplicateTile(t.id));
            }
        }
        let kinds: HashMap<usize, TileKind> = self.tiles.iter().map(|t| (t.id, t.kind)).collect();
        let mut used: HashMap<SlotRef, usize> = HashMap::new();
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for s in [e.a, e.b] {
                let Some(&kind) = kinds.get(&s.tile) else {
                    out.push(Violation::UnknownTile {
                        edge: i,
                        tile: s.tile,
                    });
                    continue;
                };
                match kind.label_of(s.slot) {
                    None => out.push(Violation::SlotOutOfRange { edge: i, slot: s }),
                    Some(l) if l != e.label => {
                        out.push(Violation::LabelMismatch { edge: i, slot: s })
                    }
                    Some(_) => {}
                }
                *used.entry(s).or_insert(0) += 1;
                *degree.entry(s.tile).or_insert(0) += 1;
            }
        }
        let mut reused: Vec<SlotRef> = used
            .iter()
            .filter(|(_, &n)| n > 1)
            .map(|(&s, _)| s)
            .collect();
        reused.sort();
        out.extend(reused.into_iter().map(Violation::SlotReused));
        for t in &self.tiles {
            let got = degree.get(&t.id).copied().unwrap_or(0);
            if got != t.kind.valence() {
                out.push(Violation::Valence {
                    tile: t.id,
                    expected: t.kind.valence(),
                    got,
                });
            }
        }
        out.extend(self.tree_violations(&kinds));
        let mut heights: Vec<Rational64> = self.tiles.iter().map(|t| t.height).collect();
        heights.sort();
        for w in heights.windows(2) {
            if w[0] == w[1] && !out.contains(&Violation::DuplicateHeight(w[0])) {
                out.push(Violation::DuplicateHeight(w[0]));
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(target) = e.inside {
                if self
                    .edges
                    .get(target)
                    .is_none_or(|g| g.label != Label::Circle)
                    || e.label != Label::Circle
                {
                    out.push(Violation::NestingTarget { edge: i, target });
                } else if self.nesting_is_cyclic(i) {
                    out.push(Violation::NestingCycle(i));
                }
            }
        }
        let c = self.census();
        if c.t110 != 2 * self.bridge_index {
            out.push(Violation::T110Count {
                expected: 2 * self.bridge_index,
                got: c.t110,
            });
        }
        let expected = self.bridge_index.saturating_sub(1);
        if c.t440 != expected || self.bridge_index == 0 {
            out.push(Violation::T440Count {
                expected,
                got: c.t440,
            });
        }
        out
    }

    fn nesting_is_cyclic(&self, e: usize) -> bool {
        let mut seen = HashSet::from([e]);
        let mut cur = self.edges[e].inside;
        while let Some(x) = cur {
            if !seen.insert(x) {
                return true;
            }
            cur = self.edges.get(x).and_then(|g| g.inside);
        }
        false
    }

    fn tree_violations(&self, kinds: &HashMap<usize, TileKind>) -> Vec<Violation> {
        let mut parent: HashMap<usize, usize> = kinds.keys().map(|&k| (k, k)).collect();
        fn find(p: &mut HashMap<usize, usize>, mut x: usize) -> usize {
            while p[&x] != x {
                x = p[&x];
            }
            x
        }
        let mut out = Vec::new();
        let mut cyclic = false;
        for e in &self.edges {
            if !kinds.contains_key(&e.a.tile) || !kinds.contains_key(&e.b.tile) {
                continue;
            }
            let (ra, rb) = (find(&mut parent, e.a.tile), find(&mut parent, e.b.tile));
            if ra == rb {
                cyclic = true;
            } else {
                parent.insert(ra, rb);
            }
        }
        if cyclic {
            out.push(Violation::Cycle);
        }
        let ids: Vec<usize> = kinds.keys().copied().collect();
        let roots: HashSet<usize> = ids.into_iter().map(|x| find(&mut parent, x)).collect();
        if roots.len() > 1 {
            out.push(Violation::Disconnected);
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        self.violations()
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    fn require_structure(&self) -> Result<(), TilingError> {
        let bad: Vec<Violation> = self
            .violations()
            .into_iter()
            .filter(Violation::is_structural)
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(TilingError::Invalid(bad))
        }
    }

    pub(crate) fn require_valid(&self) -> Result<(), TilingError> {
        let bad = self.violations();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(TilingError::Invalid(bad))
        }
    }

    /// `Σ χ(tile) − ½ Σ e(tile)`, with `e` counting arc gluings only.
    pub fn euler_characteristic(&self) -> Result<i64, TilingError> {
        self.require_structure()?;
        let tiles: i64 = self
            .tiles
            .iter()
            .map(|t| t.kind.euler_characteristic())
            .sum();
        let arcs = self.edges.iter().filter(|e| e.label == Label::Arc).count() as i64;
        Ok(tiles - arcs)
    }

    /// `|T001| = |T221| + |T003|`, read off the census alone.
    pub fn check_counting_identity(&self) -> bool {
        let c = self.census();
        c.t001 == c.t221 + c.t003
    }

    pub fn complexity(&self) -> Result<Complexity, TilingError> {
        self.require_valid()?;
        let c = self.census();
        Ok(Complexity {
            t440: c.t440,
            t001: c.t001,
        })
    }

    /// Only T440 and T110 tiles: the tiling of the standard plat's disc.
    pub fn is_trivial(&self) -> bool {
        self.is_valid()
            && self
                .tiles
                .iter()
                .all(|t| matches!(t.kind, TileKind::T440 | TileKind::T110(_)))
    }

    /// Drops tiles and edges, appends `extra`, and renumbers. Nesting
    /// references to a dropped edge follow `redirect` (old edge to an index
    /// into `extra`) or else climb to the dropped edge's own parent.
    pub(crate) fn rebuilt(
        &self,
        drop_tiles: &HashSet<usize>,
        drop_edges: &HashSet<usize>,
        extra: Vec<Gluing>,
        redirect: &HashMap<usize, usize>,
    ) -> Self {
        let mut map = HashMap::new();
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if !drop_edges.contains(&i) {
                map.insert(i, edges.len());
                edges.push(e.clone());
            }
        }
        let kept = edges.len();
        let resolve = |mut x: Option<usize>| -> Option<usize> {
            for _ in 0..=self.edges.len() {
                let e = x?;
                if let Some(&new) = map.get(&e) {
                    return Some(new);
                }
                if let Some(&k) = redirect.get(&e) {
                    return Some(kept + k);
                }
                x = self.edges[e].inside;
            }
            None
        };
        edges.extend(extra);
        for (i, e) in edges.iter_mut().enumerate() {
            e.inside = resolve(e.inside).filter(|&x| x != i);
        }
        let tiles = self
            .tiles
            .iter()
            .filter(|t| !drop_tiles.contains(&t.id))
            .cloned()
            .collect();
        Self {
            bridge_index: self.bridge_index,
            tiles,
            edges,
        }
    }
}

impl fmt::Display for TilingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
