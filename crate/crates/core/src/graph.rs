//! Dynamic simple graph with an explicit partial edge coloring.
//!
//! Colors are 1-based integers in `1..=palette()`; `0` marks an uncolored
//! edge. Every vertex keeps a color-indexed neighbour table (`neighbour_via`)
//! and a set of currently unused colors (`available`), so recoloring engines
//! can expand shift paths in O(1) per touched edge.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Color = usize;

/// Sentinel color of an uncolored edge.
pub const UNCOLORED: Color = 0;

/// Normalizes an undirected edge to `(min, max)` for use as a map key.
pub fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("loop edge ({0}, {0}) rejected")]
    LoopEdge(Vertex),
    #[error("parallel edge ({0}, {1}) rejected")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(Vertex, Vertex),
    #[error("degree cap {cap} reached at vertex {v}")]
    DegreeCap { v: Vertex, cap: usize },
    #[error("color {0} outside palette 1..={1}")]
    ColorOutOfPalette(Color, usize),
    #[error("color {color} already in use at vertex {v}")]
    ColorConflict { v: Vertex, color: Color },
    #[error("edge ({0}, {1}) already colored")]
    EdgeAlreadyColored(Vertex, Vertex),
    #[error("edge ({0}, {1}) is uncolored")]
    EdgeUncolored(Vertex, Vertex),
    #[error("shift path is not a chain at step {0}")]
    BrokenChain(usize),
    #[error("shift path must start at an uncolored edge")]
    ShiftStart,
    #[error("shift step {step} would put color {color} twice at vertex {v}; aborted without mutation")]
    ShiftConflict { step: usize, v: Vertex, color: Color },
    #[error("shift path has an uncolored interior edge at step {0}")]
    ShiftUncoloredInterior(usize),
}

/// Set of palette colors backed by a fixed-width bitmap.
///
/// Iteration is always in ascending color order, which the shift-tree build
/// relies on for deterministic child enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    words: Vec<u64>,
    palette: usize,
}

impl ColorSet {
    pub fn empty(palette: usize) -> Self {
        ColorSet {
            words: vec![0; palette / 64 + 1],
            palette,
        }
    }

    /// Full set `{1, ..., palette}`.
    pub fn full(palette: usize) -> Self {
        let mut s = Self::empty(palette);
        for c in 1..=palette {
            s.insert(c);
        }
        s
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn insert(&mut self, c: Color) {
        debug_assert!(c >= 1 && c <= self.palette);
        self.words[c / 64] |= 1u64 << (c % 64);
    }

    pub fn remove(&mut self, c: Color) {
        debug_assert!(c >= 1 && c <= self.palette);
        self.words[c / 64] &= !(1u64 << (c % 64));
    }

    pub fn contains(&self, c: Color) -> bool {
        if c < 1 || c > self.palette {
            return false;
        }
        self.words[c / 64] & (1u64 << (c % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Smallest color in the set.
    pub fn min(&self) -> Option<Color> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn intersect(&self, other: &ColorSet) -> ColorSet {
        debug_assert_eq!(self.palette, other.palette);
        ColorSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            palette: self.palette,
        }
    }

    /// Drops every color above `cap`.
    pub fn retain_at_most(&mut self, cap: Color) {
        for c in (cap + 1)..=self.palette {
            self.remove(c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        let words = &self.words;
        (0..words.len()).flat_map(move |i| {
            let mut w = words[i];
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// A sequence of graph edges over which colors are shifted: each edge takes
/// the color of its successor and the last edge ends up uncolored. The first
/// edge must be uncolored; the last edge may coincide with the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPath {
    pub edges: Vec<(Vertex, Vertex)>,
    /// Color assigned to the last edge after the shift; `0` defers the choice.
    pub terminal_color: Color,
}

impl ShiftPath {
    pub fn new(edges: Vec<(Vertex, Vertex)>, terminal_color: Color) -> Self {
        ShiftPath {
            edges,
            terminal_color,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when the last edge revisits the first one.
    pub fn repeats_first_edge(&self) -> bool {
        self.edges.len() >= 2
            && edge_key(self.edges[0].0, self.edges[0].1)
                == edge_key(
                    self.edges[self.edges.len() - 1].0,
                    self.edges[self.edges.len() - 1].1,
                )
    }
}

/// One discrepancy found by [`ColoredGraph::verify_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    AdjacentSameColor {
        v: Vertex,
        color: Color,
        first: (Vertex, Vertex),
        second: (Vertex, Vertex),
    },
    ColorIndexMismatch {
        v: Vertex,
        color: Color,
    },
    AvailableMismatch {
        v: Vertex,
        color: Color,
    },
    DegreeExceeded {
        v: Vertex,
        degree: usize,
        cap: usize,
    },
    ColorOutOfRange {
        u: Vertex,
        v: Vertex,
        color: Color,
    },
    AsymmetricAdjacency {
        u: Vertex,
        v: Vertex,
    },
    TooManyUncolored {
        found: usize,
        allowed: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentSameColor {
                v,
                color,
                first,
                second,
            } => write!(
                f,
                "vertex {v}: color {color} on both {first:?} and {second:?}"
            ),
            Violation::ColorIndexMismatch { v, color } => {
                write!(f, "vertex {v}: color index wrong for color {color}")
            }
            Violation::AvailableMismatch { v, color } => {
                write!(f, "vertex {v}: available set wrong for color {color}")
            }
            Violation::DegreeExceeded { v, degree, cap } => {
                write!(f, "vertex {v}: degree {degree} exceeds cap {cap}")
            }
            Violation::ColorOutOfRange { u, v, color } => {
                write!(f, "edge ({u}, {v}): color {color} outside palette")
            }
            Violation::AsymmetricAdjacency { u, v } => {
                write!(f, "edge ({u}, {v}): adjacency lists disagree")
            }
            Violation::TooManyUncolored { found, allowed } => {
                write!(f, "{found} uncolored edges, only {allowed} allowed")
            }
        }
    }
}

/// Dynamic simple graph on `n` fixed vertices with a partial proper
/// (delta + extra)-edge-coloring.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    n: usize,
    delta: usize,
    extra: usize,
    /// Per-vertex `(neighbour, color)` records; color 0 means uncolored.
    adj: Vec<Vec<(Vertex, Color)>>,
    /// `color_index[v][c]` is the neighbour joined to `v` by color `c`.
    color_index: Vec<Vec<Option<Vertex>>>,
    available: Vec<ColorSet>,
    m: usize,
    uncolored: usize,
}

impl ColoredGraph {
    pub fn new(n: usize, delta: usize, extra: usize) -> Self {
        assert!(n > 0, "graph needs at least one vertex");
        assert!(delta > 0, "degree bound must be positive");
        let palette = delta + extra;
        ColoredGraph {
            n,
            delta,
            extra,
            adj: vec![Vec::new(); n],
            color_index: vec![vec![None; palette + 1]; n],
            available: vec![ColorSet::full(palette); n],
            m: 0,
            uncolored: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn max_degree_bound(&self) -> usize {
        self.delta
    }

    pub fn extra_colors(&self) -> usize {
        self.extra
    }

    pub fn palette(&self) -> usize {
        self.delta + self.extra
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, Color)] {
        &self.adj[v]
    }

    /// Set A(v) of colors unused at `v`.
    pub fn available_colors(&self, v: Vertex) -> &ColorSet {
        &self.available[v]
    }

    /// Neighbour reached from `v` by the edge of color `c`, if any.
    pub fn neighbour_via(&self, v: Vertex, c: Color) -> Option<Vertex> {
        self.color_index[v][c]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    /// `None` if the edge is absent; `Some(0)` if present but uncolored.
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, c)| c)
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex, Color)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &(v, c) in &self.adj[u] {
                if u < v {
                    out.push((u, v, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn uncolored_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &(v, c) in &self.adj[u] {
                if u < v && c == UNCOLORED {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    /// Inserts `(u, v)` uncolored. Rejects loops, parallel edges and
    /// insertions that would push either endpoint past the degree cap.
    pub fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        if self.degree(u) >= self.delta {
            return Err(GraphError::DegreeCap {
                v: u,
                cap: self.delta,
            });
        }
        if self.degree(v) >= self.delta {
            return Err(GraphError::DegreeCap {
                v,
                cap: self.delta,
            });
        }
        self.adj[u].push((v, UNCOLORED));
        self.adj[v].push((u, UNCOLORED));
        self.m += 1;
        self.uncolored += 1;
        Ok(())
    }

    /// Removes `(u, v)`, returning the color it carried (0 if uncolored).
    pub fn delete_edge(&mut self, u: Vertex, v: Vertex) -> Result<Color, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let c = self
            .color_of(u, v)
            .ok_or(GraphError::MissingEdge(u, v))?;
        if c == UNCOLORED {
            self.uncolored -= 1;
        } else {
            self.color_index[u][c] = None;
            self.color_index[v][c] = None;
            self.available[u].insert(c);
            self.available[v].insert(c);
        }
        self.adj[u].retain(|&(w, _)| w != v);
        self.adj[v].retain(|&(w, _)| w != u);
        self.m -= 1;
        Ok(c)
    }

    /// Colors the uncolored edge `(u, v)` with `c`, which must be free at
    /// both endpoints.
    pub fn assign_color(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if c < 1 || c > self.palette() {
            return Err(GraphError::ColorOutOfPalette(c, self.palette()));
        }
        let cur = self
            .color_of(u, v)
            .ok_or(GraphError::MissingEdge(u, v))?;
        if cur != UNCOLORED {
            return Err(GraphError::EdgeAlreadyColored(u, v));
        }
        if !self.available[u].contains(c) {
            return Err(GraphError::ColorConflict { v: u, color: c });
        }
        if !self.available[v].contains(c) {
            return Err(GraphError::ColorConflict { v, color: c });
        }
        self.set_color_unchecked(u, v, c);
        Ok(())
    }

    /// Strips the color from edge `(u, v)`, returning it.
    pub fn uncolor_edge(&mut self, u: Vertex, v: Vertex) -> Result<Color, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let c = self
            .color_of(u, v)
            .ok_or(GraphError::MissingEdge(u, v))?;
        if c == UNCOLORED {
            return Err(GraphError::EdgeUncolored(u, v));
        }
        self.color_index[u][c] = None;
        self.color_index[v][c] = None;
        self.available[u].insert(c);
        self.available[v].insert(c);
        self.write_adj_color(u, v, UNCOLORED);
        self.uncolored += 1;
        Ok(c)
    }

    fn write_adj_color(&mut self, u: Vertex, v: Vertex, c: Color) {
        for e in self.adj[u].iter_mut() {
            if e.0 == v {
                e.1 = c;
            }
        }
        for e in self.adj[v].iter_mut() {
            if e.0 == u {
                e.1 = c;
            }
        }
    }

    fn set_color_unchecked(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.write_adj_color(u, v, c);
        self.color_index[u][c] = Some(v);
        self.color_index[v][c] = Some(u);
        self.available[u].remove(c);
        self.available[v].remove(c);
        self.uncolored -= 1;
    }

    /// Shifts colors along `path`: edge `i` takes the current color of edge
    /// `i + 1` and the last edge ends uncolored; if `terminal_color` is set
    /// it is then assigned to the last edge. The whole path is validated
    /// before any mutation, so a bad path leaves the graph untouched.
    ///
    /// Returns the number of edge-color changes, which is `len - 1` for any
    /// path of two or more edges (the repeated-edge case counts the first
    /// edge's transient color once) and 0 for a single-edge path.
    pub fn shift_along_path(&mut self, path: &ShiftPath) -> Result<usize, GraphError> {
        let edges = &path.edges;
        if edges.is_empty() {
            return Err(GraphError::ShiftStart);
        }
        for (u, v) in edges {
            if !self.has_edge(*u, *v) {
                return Err(GraphError::MissingEdge(*u, *v));
            }
        }
        for i in 0..edges.len() - 1 {
            let a = edge_key(edges[i].0, edges[i].1);
            let b = edge_key(edges[i + 1].0, edges[i + 1].1);
            if a == b {
                return Err(GraphError::BrokenChain(i));
            }
            let shares = edges[i].0 == edges[i + 1].0
                || edges[i].0 == edges[i + 1].1
                || edges[i].1 == edges[i + 1].0
                || edges[i].1 == edges[i + 1].1;
            if !shares {
                return Err(GraphError::BrokenChain(i));
            }
        }
        if self.color_of(edges[0].0, edges[0].1) != Some(UNCOLORED) {
            return Err(GraphError::ShiftStart);
        }

        // Validation pass: sequential hole movement on an overlay.
        let mut sim = ShiftSim::new(self, edge_key(edges[0].0, edges[0].1));
        let mut moves = Vec::with_capacity(edges.len().saturating_sub(1));
        for (i, e) in edges.iter().enumerate().skip(1) {
            let step = sim.step(edge_key(e.0, e.1)).map_err(|err| match err {
                ShiftSimError::UncoloredNext => GraphError::ShiftUncoloredInterior(i),
                ShiftSimError::Conflict { v, color } => GraphError::ShiftConflict {
                    step: i,
                    v,
                    color,
                },
                ShiftSimError::NotAdjacent => GraphError::BrokenChain(i - 1),
            })?;
            moves.push(step);
        }
        if path.terminal_color != UNCOLORED {
            let free = sim.hole_free_colors();
            if !free.contains(path.terminal_color) {
                let (a, b) = sim.hole();
                let v = if sim.free_colors_at(a).contains(path.terminal_color) {
                    b
                } else {
                    a
                };
                return Err(GraphError::ShiftConflict {
                    step: edges.len(),
                    v,
                    color: path.terminal_color,
                });
            }
        }

        // Commit pass.
        let mut changed = 0;
        for (i, mv) in moves.iter().enumerate() {
            let hole = if i == 0 {
                edge_key(edges[0].0, edges[0].1)
            } else {
                edge_key(edges[i].0, edges[i].1)
            };
            let next = edge_key(edges[i + 1].0, edges[i + 1].1);
            self.uncolor_edge(next.0, next.1).expect("validated");
            self.set_color_unchecked(hole.0, hole.1, mv.color);
            changed += 1;
        }
        if path.terminal_color != UNCOLORED {
            let last = edge_key(
                edges[edges.len() - 1].0,
                edges[edges.len() - 1].1,
            );
            self.assign_color(last.0, last.1, path.terminal_color)
                .expect("validated");
        }
        Ok(changed)
    }

    /// Recomputes everything from the adjacency lists and reports all
    /// discrepancies: improper color pairs, stale indexes, degree breaches
    /// and more uncolored edges than `allow_uncolored` permits.
    pub fn verify_proper(&self, allow_uncolored: usize) -> Vec<Violation> {
        let mut out = Vec::new();
        let palette = self.palette();
        let mut uncolored_seen = 0;
        for v in 0..self.n {
            if self.adj[v].len() > self.delta {
                out.push(Violation::DegreeExceeded {
                    v,
                    degree: self.adj[v].len(),
                    cap: self.delta,
                });
            }
            let mut holder: Vec<Option<Vertex>> = vec![None; palette + 1];
            for &(w, c) in &self.adj[v] {
                match self.color_of(w, v) {
                    Some(back) if back == c => {}
                    _ => out.push(Violation::AsymmetricAdjacency { u: v, v: w }),
                }
                if c == UNCOLORED {
                    if v < w {
                        uncolored_seen += 1;
                    }
                    continue;
                }
                if c > palette {
                    out.push(Violation::ColorOutOfRange { u: v, v: w, color: c });
                    continue;
                }
                if let Some(prev) = holder[c] {
                    out.push(Violation::AdjacentSameColor {
                        v,
                        color: c,
                        first: (v, prev),
                        second: (v, w),
                    });
                } else {
                    holder[c] = Some(w);
                }
            }
            for c in 1..=palette {
                if self.color_index[v][c] != holder[c] {
                    out.push(Violation::ColorIndexMismatch { v, color: c });
                }
                if self.available[v].contains(c) != holder[c].is_none() {
                    out.push(Violation::AvailableMismatch { v, color: c });
                }
            }
        }
        if uncolored_seen > allow_uncolored {
            out.push(Violation::TooManyUncolored {
                found: uncolored_seen,
                allowed: allow_uncolored,
            });
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct ShiftMove {
    pub color: Color,
}

#[derive(Debug)]
pub(crate) enum ShiftSimError {
    UncoloredNext,
    NotAdjacent,
    Conflict { v: Vertex, color: Color },
}

/// Overlay simulation of sequential color shifting: the "hole" (uncolored
/// edge) moves from edge to edge while only a small patch of edge colors
/// differs from the underlying graph. Used to validate shift paths and to
/// evaluate availability mid-shift without mutating the graph.
#[derive(Debug, Clone)]
pub(crate) struct ShiftSim<'g> {
    g: &'g ColoredGraph,
    patch: BTreeMap<(Vertex, Vertex), Color>,
    hole: (Vertex, Vertex),
}

impl<'g> ShiftSim<'g> {
    pub fn new(g: &'g ColoredGraph, hole: (Vertex, Vertex)) -> Self {
        debug_assert_eq!(g.color_of(hole.0, hole.1), Some(UNCOLORED));
        let mut sim = ShiftSim {
            g,
            patch: BTreeMap::new(),
            hole,
        };
        sim.set_patch(hole, UNCOLORED);
        sim
    }

    /// Records an overlay color, keeping the patch canonical: entries whose
    /// color equals the underlying graph color are dropped, so states that
    /// restore an edge compare equal to states that never touched it.
    fn set_patch(&mut self, e: (Vertex, Vertex), c: Color) {
        if self.g.color_of(e.0, e.1) == Some(c) {
            self.patch.remove(&e);
        } else {
            self.patch.insert(e, c);
        }
    }

    pub fn hole(&self) -> (Vertex, Vertex) {
        self.hole
    }

    pub fn patch(&self) -> &BTreeMap<(Vertex, Vertex), Color> {
        &self.patch
    }

    pub fn current_color(&self, e: (Vertex, Vertex)) -> Option<Color> {
        let key = edge_key(e.0, e.1);
        match self.patch.get(&key) {
            Some(&c) => Some(c),
            None => self.g.color_of(key.0, key.1),
        }
    }

    /// Edge currently carrying color `c` at vertex `w`, if any.
    pub fn holder_incident(&self, w: Vertex, c: Color) -> Option<(Vertex, Vertex)> {
        for (&e, &col) in &self.patch {
            if col == c && (e.0 == w || e.1 == w) {
                return Some(e);
            }
        }
        if let Some(t) = self.g.neighbour_via(w, c) {
            let e = edge_key(w, t);
            if !self.patch.contains_key(&e) {
                return Some(e);
            }
        }
        None
    }

    /// Moves the hole onto `next`, shifting `next`'s current color onto the
    /// present hole. Fails if the move breaks propriety; on failure the
    /// simulation state is unchanged.
    pub fn step(&mut self, next: (Vertex, Vertex)) -> Result<ShiftMove, ShiftSimError> {
        let next = edge_key(next.0, next.1);
        let hole = self.hole;
        let adjacent = next.0 == hole.0 || next.0 == hole.1 || next.1 == hole.0 || next.1 == hole.1;
        if !adjacent || next == hole {
            return Err(ShiftSimError::NotAdjacent);
        }
        let c = self.current_color(next).ok_or(ShiftSimError::NotAdjacent)?;
        if c == UNCOLORED {
            return Err(ShiftSimError::UncoloredNext);
        }
        for w in [hole.0, hole.1] {
            if let Some(f) = self.holder_incident(w, c) {
                if f != next {
                    return Err(ShiftSimError::Conflict { v: w, color: c });
                }
            }
        }
        self.set_patch(hole, c);
        self.set_patch(next, UNCOLORED);
        self.hole = next;
        Ok(ShiftMove { color: c })
    }

    /// Colors free at `w` under the overlay.
    pub fn free_colors_at(&self, w: Vertex) -> ColorSet {
        let mut set = self.g.available_colors(w).clone();
        for &e in self.patch.keys() {
            if e.0 == w || e.1 == w {
                if let Some(orig) = self.g.color_of(e.0, e.1) {
                    if orig != UNCOLORED {
                        set.insert(orig);
                    }
                }
            }
        }
        for (&e, &cur) in &self.patch {
            if (e.0 == w || e.1 == w) && cur != UNCOLORED {
                set.remove(cur);
            }
        }
        set
    }

    /// Colors usable on the hole edge (free at both endpoints).
    pub fn hole_free_colors(&self) -> ColorSet {
        self.free_colors_at(self.hole.0)
            .intersect(&self.free_colors_at(self.hole.1))
    }

    /// Number of initially-colored edges whose overlay color differs from
    /// their original color.
    pub fn changed_count(&self) -> usize {
        self.patch
            .iter()
            .filter(|(&e, &cur)| {
                let orig = self.g.color_of(e.0, e.1).unwrap_or(UNCOLORED);
                orig != UNCOLORED && cur != orig
            })
            .count()
    }
}
