use std::fmt;

use thiserror::Error;

use crate::plat::Plat;

/// Which strand through a crossing passes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Over {
    /// Ends 0 and 2.
    Even,
    /// Ends 1 and 3.
    Odd,
}

/// A 4-valent vertex. `ends` lists edge labels clockwise; ends 0–2 form one
/// strand and 1–3 the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub ends: [usize; 4],
    pub over: Over,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("edge {edge} is used by {uses} crossing ends, expected 2")]
    DanglingEdge { edge: usize, uses: usize },
    #[error("line {line}: cannot parse `{text}`")]
    Syntax { line: usize, text: String },
}

/// A link projection: crossings glued along labelled edges, plus crossingless
/// loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Where each strand through each crossing goes, for one orientation.
#[derive(Debug, Clone)]
pub(crate) struct Traversal {
    /// component of strand `s` at crossing `c` is `strand_component[c][s]`
    pub strand_component: Vec<[usize; 2]>,
    /// end through which strand `s` enters crossing `c`
    pub entry: Vec<[usize; 2]>,
    pub components: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let max = crossings
            .iter()
            .flat_map(|c| c.ends)
            .max()
            .map_or(0, |m| m + 1);
        let mut uses = vec![0usize; max];
        for c in &crossings {
            for e in c.ends {
                uses[e] += 1;
            }
        }
        if let Some((edge, &n)) = uses.iter().enumerate().find(|(_, &n)| n != 0 && n != 2) {
            return Err(DiagramError::DanglingEdge { edge, uses: n });
        }
        Ok(Self {
            crossings,
            free_loops,
        })
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: k,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.traverse().components
    }

    /// Disjoint union with another diagram, relabelling its edges.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self
            .crossings
            .iter()
            .flat_map(|c| c.ends)
            .max()
            .map_or(0, |m| m + 1);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            ends: c.ends.map(|e| e + shift),
            over: c.over,
        }));
        Self {
            crossings,
            free_loops: self.free_loops + other.free_loops,
        }
    }

    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                ends: c.ends,
                over: match c.over {
                    Over::Even => Over::Odd,
                    Over::Odd => Over::Even,
                },
            })
            .collect();
        Self {
            crossings,
            free_loops: self.free_loops,
        }
    }

    /// Walks every component once, fixing a base orientation. Components
    /// meeting crossings come first (numbered by first crossing visited),
    /// then the free loops.
    pub(crate) fn traverse(&self) -> Traversal {
        let n = self.crossings.len();
        let max = self
            .crossings
            .iter()
            .flat_map(|c| c.ends)
            .max()
            .map_or(0, |m| m + 1);
        // the two (crossing, end) slots of every edge
        let mut slots = vec![Vec::with_capacity(2); max];
        for (ci, c) in self.crossings.iter().enumerate() {
            for (k, &e) in c.ends.iter().enumerate() {
                slots[e].push((ci, k));
            }
        }
        let unset = usize::MAX;
        let mut strand_component = vec![[unset; 2]; n];
        let mut entry = vec![[unset; 2]; n];
        let mut components = 0;
        for start in 0..n {
            for s in 0..2 {
                if strand_component[start][s] != unset {
                    continue;
                }
                let (mut c, mut k) = (start, s);
                loop {
                    let strand = k % 2;
                    if strand_component[c][strand] != unset {
                        break;
                    }
                    strand_component[c][strand] = components;
                    entry[c][strand] = k;
                    let out = (k + 2) % 4;
                    let e = self.crossings[c].ends[out];
                    let next = slots[e]
                        .iter()
                        .copied()
                        .find(|&slot| slot != (c, out))
                        .expect("edge has two ends");
                    (c, k) = next;
                }
                components += 1;
            }
        }
        Traversal {
            strand_component,
            entry,
            components: components + self.free_loops,
        }
    }

    /// One `X a b c d sign` line per crossing (`+1` when `a`–`c` is over)
    /// and a final `loops k` line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let sign = if c.over == Over::Even { "+1" } else { "-1" };
            let [a, b, cc, d] = c.ends;
            out.push_str(&format!("X {a} {b} {cc} {d} {sign}\n"));
        }
        out.push_str(&format!("loops {}\n", self.free_loops));
        out
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || DiagramError::Syntax {
                line: i + 1,
                text: line.to_string(),
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["X", a, b, c, d, sign] => {
                    let mut ends = [0usize; 4];
                    for (slot, t) in ends.iter_mut().zip([a, b, c, d]) {
                        *slot = t.parse().map_err(|_| bad())?;
                    }
                    let over = match *sign {
                        "+1" | "1" => Over::Even,
                        "-1" => Over::Odd,
                        _ => return Err(bad()),
                    };
                    crossings.push(Crossing { ends, over });
                }
                ["loops", k] => free_loops = k.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Self::new(crossings, free_loops)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Closes the plat with standard caps. Letter `±j` becomes a crossing
/// between positions `j` and `j+1` with ends `NW, NE, SE, SW`; `σ_j` puts
/// the strand from `NE` to `SW` on top.
pub fn plat_to_diagram(p: &Plat) -> LinkDiagram {
    let m = p.strands();
    let mut next = 0usize;
    let mut cur: Vec<usize> = (0..m).map(|pos| pos / 2).collect();
    next += m / 2;
    let mut raw = Vec::with_capacity(p.crossing_count());
    for &g in p.letters() {
        let j = g.unsigned_abs() as usize - 1;
        let (sw, se) = (next, next + 1);
        next += 2;
        let over = if g > 0 { Over::Odd } else { Over::Even };
        raw.push(Crossing {
            ends: [cur[j], cur[j + 1], se, sw],
            over,
        });
        cur[j] = sw;
        cur[j + 1] = se;
    }
    // bottom caps glue the two dangling edges at positions 2i−1, 2i
    let mut parent: Vec<usize> = (0..next).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for pair in cur.chunks(2) {
        let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
        parent[a] = b;
    }
    let mut label = vec![usize::MAX; next];
    let mut used = vec![false; next];
    let mut count = 0;
    for c in &raw {
        for &e in &c.ends {
            let r = find(&mut parent, e);
            used[r] = true;
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
        }
    }
    let mut roots = vec![false; next];
    for e in 0..next {
        let r = find(&mut parent, e);
        roots[r] = true;
    }
    let free_loops = (0..next).filter(|&r| roots[r] && !used[r]).count();
    let crossings: Vec<Crossing> = raw
        .into_iter()
        .map(|c| Crossing {
            ends: c.ends.map(|e| label[find(&mut parent, e)]),
            over: c.over,
        })
        .collect();
    LinkDiagram::new(crossings, free_loops).expect("plat closures are closed diagrams")
}
