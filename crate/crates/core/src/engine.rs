//! Recoloring engines: extend the coloring on insertion by building a shift
//! tree and, when the build stops on repeated leaf copies, dispatching to a
//! leaves handler. Also hosts the palette feasibility formulas and the
//! degree-adaptive deletion repair.

use thiserror::Error;

use crate::graph::{
    edge_key, Color, ColorSet, ColoredGraph, GraphError, ShiftPath, ShiftSim, Vertex, UNCOLORED,
};
use crate::shift_tree::{
    build_shift_tree, depth_budget, expand_skeleton, skeleton, BuildConfig, BuildOutcome,
    ExpandOutcome, ShiftTree, ShiftTreeError, Skeleton,
};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("infeasible configuration: {0}")]
    Infeasible(String),
    #[error("shift tree exhausted without a useful path; the instance breaks the engine's promise")]
    Exhausted,
    #[error("engine invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    ShiftTree(#[from] ShiftTreeError),
}

/// Which leaves handler (if any) backs the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineKind {
    /// Generic handler; needs `b(C-1) + 2 > Δ(Δ-C+1)` with `2 <= b <= C`.
    LargePalette { b: Option<usize> },
    /// Tail-and-cycle handler for `C = Δ-2`, `Δ >= 4`, fixed `b = 2`.
    DeltaMinus2,
    /// No handler: only the useful-path stop. Sound on its own for low
    /// arboricity or large girth.
    NoHandler,
    /// Wraps a base kind with the local-palette child restriction, keeping
    /// `color(e) <= max(deg(u), deg(v)) + C`, and repairs deletions.
    AdaptiveLocalPalette { base: Box<EngineKind> },
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub kind: EngineKind,
    pub delta: usize,
    pub extra: usize,
    /// Arboricity bound promised by the workload (NoHandler guarantee).
    pub alpha: Option<usize>,
    /// Slack in `C >= (2 + eps) * alpha - 1`.
    pub epsilon: Option<f64>,
}

impl EngineConfig {
    pub fn large_palette(delta: usize, extra: usize, b: Option<usize>) -> Self {
        EngineConfig {
            kind: EngineKind::LargePalette { b },
            delta,
            extra,
            alpha: None,
            epsilon: None,
        }
    }

    pub fn delta_minus_2(delta: usize) -> Self {
        EngineConfig {
            kind: EngineKind::DeltaMinus2,
            delta,
            extra: delta.saturating_sub(2),
            alpha: None,
            epsilon: None,
        }
    }

    pub fn no_handler(delta: usize, extra: usize) -> Self {
        EngineConfig {
            kind: EngineKind::NoHandler,
            delta,
            extra,
            alpha: None,
            epsilon: None,
        }
    }

    pub fn adaptive(base: EngineConfig) -> Self {
        EngineConfig {
            kind: EngineKind::AdaptiveLocalPalette {
                base: Box::new(base.kind.clone()),
            },
            ..base
        }
    }
}

/// Which stop condition produced the recoloring path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopKind {
    UsefulPath,
    GenericHandler,
    DeltaMinus2Handler,
    /// Plain deletion; nothing recolored.
    Deletion,
}

/// Per-update recoloring account.
#[derive(Debug, Clone, Copy)]
pub struct RecourseReport {
    /// Previously-colored edges whose color changed.
    pub recolored: usize,
    /// Same, plus one for the newly colored edge.
    pub recolored_with_new: usize,
    /// Edges on the shift path (including the uncolored one).
    pub path_len: usize,
    pub tree_depth: usize,
    pub handler: StopKind,
}

impl RecourseReport {
    fn deletion() -> Self {
        RecourseReport {
            recolored: 0,
            recolored_with_new: 0,
            path_len: 0,
            tree_depth: 0,
            handler: StopKind::Deletion,
        }
    }
}

/// A validated engine. Stateless beyond its configuration: one engine value
/// may serve many graphs, but a single graph takes one operation at a time.
#[derive(Debug, Clone)]
pub struct Engine {
    cfg: EngineConfig,
    /// Resolved leaf multiplicity for handler engines.
    b: Option<usize>,
    local_palette: bool,
    base: EngineKind,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Result<Self, EngineError> {
        let (base, local_palette) = match &cfg.kind {
            EngineKind::AdaptiveLocalPalette { base } => {
                if matches!(**base, EngineKind::AdaptiveLocalPalette { .. }) {
                    return Err(EngineError::Infeasible(
                        "adaptive engine cannot wrap another adaptive engine".into(),
                    ));
                }
                ((**base).clone(), true)
            }
            k => (k.clone(), false),
        };
        let (delta, c) = (cfg.delta, cfg.extra);
        let b = match &base {
            EngineKind::LargePalette { b } => {
                let b = match b {
                    Some(b) => *b,
                    None => choose_b(delta, c).ok_or_else(|| {
                        EngineError::Infeasible(format!(
                            "no feasible leaf multiplicity for delta = {delta}, c = {c}"
                        ))
                    })?,
                };
                if b < 2 || b > c {
                    return Err(EngineError::Infeasible(format!(
                        "multiplicity {b} outside [2, {c}]"
                    )));
                }
                if !feasibility_holds(delta, c, b) {
                    return Err(EngineError::Infeasible(format!(
                        "b(C-1)+2 > delta(delta-C+1) fails for delta = {delta}, c = {c}, b = {b}"
                    )));
                }
                Some(b)
            }
            EngineKind::DeltaMinus2 => {
                if delta < 4 || c != delta - 2 {
                    return Err(EngineError::Infeasible(format!(
                        "tail-and-cycle handler needs C = delta - 2 and delta >= 4, got delta = {delta}, c = {c}"
                    )));
                }
                Some(2)
            }
            EngineKind::NoHandler => {
                if let (Some(alpha), Some(eps)) = (cfg.alpha, cfg.epsilon) {
                    if (c as f64) < (2.0 + eps) * alpha as f64 - 1.0 {
                        return Err(EngineError::Infeasible(format!(
                            "arboricity guarantee needs C >= (2+eps)*alpha - 1; c = {c}, alpha = {alpha}, eps = {eps}"
                        )));
                    }
                }
                None
            }
            EngineKind::AdaptiveLocalPalette { .. } => unreachable!(),
        };
        Ok(Engine {
            cfg,
            b,
            local_palette,
            base,
        })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    pub fn multiplicity(&self) -> Option<usize> {
        self.b
    }

    pub fn is_adaptive(&self) -> bool {
        self.local_palette
    }

    /// Inserts `(u, v)` and extends the coloring to it.
    pub fn insert_edge(
        &self,
        g: &mut ColoredGraph,
        u: Vertex,
        v: Vertex,
    ) -> Result<RecourseReport, EngineError> {
        g.insert_edge(u, v)?;
        self.extend_coloring(g, (u, v))
    }

    /// Extends the coloring to the already-present uncolored edge `e`.
    pub fn extend_coloring(
        &self,
        g: &mut ColoredGraph,
        e: (Vertex, Vertex),
    ) -> Result<RecourseReport, EngineError> {
        let depth_cap = match self.b {
            Some(b) if b >= 2 && b <= g.extra_colors() => {
                Some(depth_budget(g.vertex_count(), g.extra_colors(), b)?)
            }
            _ => None,
        };
        let build_cfg = BuildConfig {
            multiplicity: self.b,
            local_palette: self.local_palette,
            depth_budget: depth_cap,
        };
        match build_shift_tree(g, e, &build_cfg)? {
            BuildOutcome::Useful { path, tree } => {
                self.apply(g, path, tree.depth(), StopKind::UsefulPath)
            }
            BuildOutcome::BCopies { vertex, tree } => {
                let skel = skeleton(&tree, vertex)?;
                let (path, stop) = match &self.base {
                    EngineKind::LargePalette { .. } => (
                        self.generic_handler(g, &tree, &skel)?,
                        StopKind::GenericHandler,
                    ),
                    EngineKind::DeltaMinus2 => (
                        self.dm2_handler(g, &tree, &skel)?,
                        StopKind::DeltaMinus2Handler,
                    ),
                    _ => {
                        return Err(EngineError::InvariantViolation(
                            "leaf-copies stop without a handler".into(),
                        ))
                    }
                };
                self.apply(g, path, tree.depth(), stop)
            }
            BuildOutcome::Exhausted { .. } => Err(EngineError::Exhausted),
        }
    }

    /// Deletes `(u, v)`. Non-adaptive engines never recolor on deletion.
    /// The adaptive engine uncolors and re-extends any edge whose color now
    /// exceeds its endpoints' degree allowance (at most two exist).
    pub fn delete_edge(
        &self,
        g: &mut ColoredGraph,
        u: Vertex,
        v: Vertex,
    ) -> Result<RecourseReport, EngineError> {
        g.delete_edge(u, v)?;
        if !self.local_palette {
            return Ok(RecourseReport::deletion());
        }
        let c = g.extra_colors();
        let mut violating = Vec::new();
        for end in [u, v] {
            for &(w, color) in g.neighbours(end) {
                if color != UNCOLORED && color > g.degree(end).max(g.degree(w)) + c {
                    violating.push(edge_key(end, w));
                }
            }
        }
        violating.sort_unstable();
        violating.dedup();
        debug_assert!(violating.len() <= 2);
        let mut report = RecourseReport::deletion();
        for (a, b) in violating {
            g.uncolor_edge(a, b)?;
            let r = self.extend_coloring(g, (a, b))?;
            // The repaired edge itself changes color, plus whatever the
            // extension shifted.
            report.recolored += 1 + r.recolored;
            report.recolored_with_new += 1 + r.recolored;
            report.path_len = report.path_len.max(r.path_len);
            report.tree_depth = report.tree_depth.max(r.tree_depth);
        }
        Ok(report)
    }

    fn terminal_allowance(&self, g: &ColoredGraph, e: (Vertex, Vertex)) -> Option<Color> {
        if self.local_palette {
            Some(g.degree(e.0).max(g.degree(e.1)) + g.extra_colors())
        } else {
            None
        }
    }

    fn apply(
        &self,
        g: &mut ColoredGraph,
        mut path: ShiftPath,
        tree_depth: usize,
        handler: StopKind,
    ) -> Result<RecourseReport, EngineError> {
        let k = path.edges.len();
        let last = path.edges[k - 1];
        let repeat = path.repeats_first_edge();
        if let Some(cap) = self.terminal_allowance(g, last) {
            if path.terminal_color != UNCOLORED && path.terminal_color > cap {
                return Err(EngineError::InvariantViolation(format!(
                    "terminal color {} exceeds local palette cap {}",
                    path.terminal_color, cap
                )));
            }
        }
        g.shift_along_path(&path).map_err(|e| {
            EngineError::InvariantViolation(format!("handler path failed to shift: {e}"))
        })?;
        if path.terminal_color == UNCOLORED {
            // Deferred terminal: smallest color now free at both endpoints,
            // restricted by the local palette in adaptive mode.
            let mut free = g
                .available_colors(last.0)
                .intersect(g.available_colors(last.1));
            if let Some(cap) = self.terminal_allowance(g, last) {
                free.retain_at_most(cap);
            }
            let c = free.min().ok_or_else(|| {
                EngineError::InvariantViolation("no terminal color after shift".into())
            })?;
            g.assign_color(last.0, last.1, c)?;
            path.terminal_color = c;
        }
        let recolored = match k {
            1 => 0,
            _ if repeat => k - 2,
            _ => k - 1,
        };
        let report = RecourseReport {
            recolored,
            recolored_with_new: recolored + 1,
            path_len: k,
            tree_depth,
            handler,
        };
        debug_assert!(report.recolored <= report.path_len);
        debug_assert!(report.path_len <= 2 * report.tree_depth + 2);
        Ok(report)
    }

    /// Leaves handler for the generic large-palette engine: expand the
    /// skeleton one step, pick the neighbour `y` of the repeated vertex that
    /// maximizes leaves-of-`y` minus grandchildren-of-`y`, then scan `y`'s
    /// leaf copies for a path whose final edge keeps a free color.
    fn generic_handler(
        &self,
        g: &ColoredGraph,
        tree: &ShiftTree,
        skel: &Skeleton,
    ) -> Result<ShiftPath, EngineError> {
        let x = skel.target;
        let expansions = match expand_skeleton(g, tree, skel, self.local_palette) {
            ExpandOutcome::Useful(path) => return Ok(path),
            ExpandOutcome::Expanded(children) => children,
        };

        // Effectiveness of each neighbour y of x: leaf copies gained in the
        // expansion minus grandchildren of y's expanded node (counting the
        // root's virtual parent as a node whose grandchildren are the root's
        // skeleton children).
        let u = tree.outside_vertex();
        let mut neighbours: Vec<Vertex> = g.neighbours(x).iter().map(|&(w, _)| w).collect();
        neighbours.sort_unstable();
        let mut best: Option<(i64, Vertex)> = None;
        for &y in &neighbours {
            let leaves: i64 = expansions
                .iter()
                .map(|(_, ch)| ch.iter().filter(|(w, _)| *w == y).count() as i64)
                .sum();
            let mut grand: i64 = 0;
            if let Some(a) = tree.active_node_of(y) {
                if skel.is_member(a) {
                    grand += skel.grandchildren_of(a) as i64;
                }
            }
            if y == u {
                grand += skel.children_of(0).len() as i64;
            }
            let eff = leaves - grand;
            if best.is_none_or(|(b_eff, b_y)| eff > b_eff || (eff == b_eff && y < b_y)) {
                best = Some((eff, y));
            }
        }
        let (_, y) = best.ok_or_else(|| {
            EngineError::InvariantViolation("repeated vertex has no neighbours".into())
        })?;

        for (leaf, children) in &expansions {
            for &(w, _) in children {
                if w != y {
                    continue;
                }
                let mut edges = tree.path_edges(*leaf);
                edges.push((x, y));
                // Replay the full shift; keep this copy only if the final
                // edge ends with a usable free color.
                let mut sim = ShiftSim::new(g, edge_key(edges[0].0, edges[0].1));
                for &step in &edges[1..] {
                    sim.step(step).map_err(|_| {
                        EngineError::InvariantViolation(
                            "expanded skeleton path failed to shift".into(),
                        )
                    })?;
                }
                let mut free = sim.hole_free_colors();
                if let Some(cap) = self.terminal_allowance(g, (x, y)) {
                    free.retain_at_most(cap);
                }
                if let Some(c) = free.min() {
                    return Ok(ShiftPath::new(edges, c));
                }
            }
        }
        Err(EngineError::InvariantViolation(
            "no leaf copy of the chosen neighbour ends a useful path".into(),
        ))
    }

    /// Leaves handler for `C = Δ-2`: shift down to the branch point of the
    /// two leaf copies, then rotate colors around the cycle through the
    /// repeated vertex, stopping at the first edge that frees a color.
    /// Both rotation directions are scanned, shortest prefix first.
    fn dm2_handler(
        &self,
        g: &ColoredGraph,
        tree: &ShiftTree,
        skel: &Skeleton,
    ) -> Result<ShiftPath, EngineError> {
        let x = skel.target;
        if skel.leaves.len() < 2 {
            return Err(EngineError::InvariantViolation(
                "tail-and-cycle handler needs two leaf copies".into(),
            ));
        }
        let mut x1 = skel.leaves[0];
        let mut x2 = skel.leaves[1];
        // If the expanded copy of x sits above exactly one of the leaves,
        // aim for it instead; the detour below it only lengthens the cycle.
        if let Some(a) = tree.active_node_of(x) {
            if !tree.node(a).children.is_empty() && a != x1 && a != x2 {
                let anc1 = tree.is_ancestor(a, x1);
                let anc2 = tree.is_ancestor(a, x2);
                if anc1 && !anc2 {
                    x1 = a;
                } else if anc2 && !anc1 {
                    x2 = a;
                }
            }
        }
        let p1 = tree.path_edges(x1);
        let p2 = tree.path_edges(x2);
        let common = p1.iter().zip(&p2).take_while(|(a, b)| a == b).count();
        let seq12: Vec<(Vertex, Vertex)> = p1
            .iter()
            .copied()
            .chain(p2[common..].iter().rev().copied())
            .collect();
        let seq21: Vec<(Vertex, Vertex)> = p2
            .iter()
            .copied()
            .chain(p1[common..].iter().rev().copied())
            .collect();

        let mut dirs = [PrefixScan::new(g, &seq12), PrefixScan::new(g, &seq21)];
        let longest = seq12.len().max(seq21.len());
        for len in 1..=longest {
            for scan in dirs.iter_mut() {
                if let Some(mut free) = scan.advance_to(len) {
                    if let Some(cap) = self.terminal_allowance(g, scan.seq[len - 1]) {
                        free.retain_at_most(cap);
                    }
                    if let Some(c) = free.min() {
                        return Ok(ShiftPath::new(scan.seq[..len].to_vec(), c));
                    }
                }
            }
        }
        Err(EngineError::InvariantViolation(
            "no prefix of either cycle direction frees a color".into(),
        ))
    }
}

/// Incremental prefix scanner over one shift direction.
struct PrefixScan<'g> {
    seq: Vec<(Vertex, Vertex)>,
    sim: ShiftSim<'g>,
    done: usize,
    alive: bool,
}

impl<'g> PrefixScan<'g> {
    fn new(g: &'g ColoredGraph, seq: &[(Vertex, Vertex)]) -> Self {
        PrefixScan {
            seq: seq.to_vec(),
            sim: ShiftSim::new(g, edge_key(seq[0].0, seq[0].1)),
            done: 1,
            alive: true,
        }
    }

    /// Advances the hole so that the prefix of `len` edges has been shifted;
    /// returns the hole's free-color set, or `None` once the direction is
    /// exhausted or a shift step would break propriety.
    fn advance_to(&mut self, len: usize) -> Option<ColorSet> {
        if !self.alive || len > self.seq.len() {
            return None;
        }
        while self.done < len {
            if self.sim.step(self.seq[self.done]).is_err() {
                self.alive = false;
                return None;
            }
            self.done += 1;
        }
        Some(self.sim.hole_free_colors())
    }
}

/// Integer form of the generic-handler feasibility inequality
/// `(b(C-1) + 2) / Δ > Δ - C + 1`.
pub fn feasibility_holds(delta: usize, c: usize, b: usize) -> bool {
    let lhs = (b as i128) * (c as i128 - 1) + 2;
    let rhs = (delta as i128) * (delta as i128 - c as i128 + 1);
    lhs > rhs
}

/// Leaf multiplicity for a feasible `(Δ, C)` pair: `5(Δ-C)` for `C >= 0.9Δ`,
/// otherwise the smallest integer satisfying the feasibility inequality,
/// with a downward scan fallback when integer effects push the closed form
/// outside `[2, C]`.
pub fn choose_b(delta: usize, c: usize) -> Option<usize> {
    if c < 2 || !feasibility_holds(delta, c, c) {
        return None;
    }
    let closed_form = if 10 * c >= 9 * delta {
        5 * delta.saturating_sub(c)
    } else {
        1 + ((delta - c + 1) * delta - 2) / (c - 1)
    };
    if (2..=c).contains(&closed_form) && feasibility_holds(delta, c, closed_form) {
        return Some(closed_form);
    }
    (2..=c).rev().find(|&b| feasibility_holds(delta, c, b))
}

/// Real threshold `C*(Δ) = (sqrt(5Δ² + 2Δ - 7) - (Δ - 1)) / 2`.
pub fn c_star(delta: usize) -> f64 {
    let d = delta as f64;
    ((5.0 * d * d + 2.0 * d - 7.0).sqrt() - (d - 1.0)) / 2.0
}

/// Gap between the threshold and `Δ/φ`; stays within (0.462, 0.724) for all
/// `Δ >= 3`.
pub fn threshold_gap(delta: usize) -> f64 {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    c_star(delta) - delta as f64 / phi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibleC {
    pub c: usize,
    /// Set when even the smallest feasible C lands in the trivial regime
    /// `C > Δ - 2`.
    pub trivial_palette: bool,
}

/// Smallest C for which the generic handler works at this Δ, decided by the
/// exact integer inequality with `b = C`.
pub fn min_feasible_c(delta: usize) -> FeasibleC {
    let mut c = (c_star(delta).floor() as usize).saturating_sub(2).max(1);
    while !(c >= 2 && feasibility_holds(delta, c, c)) {
        c += 1;
    }
    FeasibleC {
        c,
        trivial_palette: c + 2 > delta,
    }
}

/// Recourse ceiling for the no-handler engine on girth-`g` graphs:
/// `log_{C+1}(n / (Δ + C²)) + 2`.
pub fn girth_recourse_bound(n: usize, delta: usize, c: usize) -> f64 {
    ((n as f64) / (delta as f64 + (c * c) as f64)).ln() / ((c + 1) as f64).ln() + 2.0
}

/// Path-length ceiling for the no-handler engine on arboricity-`alpha`
/// graphs: `log_B n + 2` with `B = C / (2*alpha - 1)`.
pub fn arboricity_path_bound(n: usize, c: usize, alpha: usize) -> f64 {
    let b = c as f64 / (2 * alpha - 1) as f64;
    (n as f64).ln() / b.ln() + 2.0
}

/// Good/bad classification of a neighbour edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighbourClass {
    Good,
    Bad,
}

/// Classifies `other` as a neighbour of `e`: shift `e`'s color onto `other`
/// (ignoring conflicts at `other`'s far endpoint) and report Good when some
/// color then completes `e` with no further changes.
pub fn classify_neighbour(
    g: &ColoredGraph,
    e: (Vertex, Vertex),
    other: (Vertex, Vertex),
) -> Result<NeighbourClass, EngineError> {
    let (u, v) = e;
    let shared = if other.0 == u || other.1 == u {
        u
    } else if other.0 == v || other.1 == v {
        v
    } else {
        return Err(EngineError::InvariantViolation(format!(
            "{other:?} is not adjacent to {e:?}"
        )));
    };
    let far_of_e = if shared == u { v } else { u };
    let c_e = g.color_of(u, v).ok_or(GraphError::MissingEdge(u, v))?;
    let c_other = g
        .color_of(other.0, other.1)
        .ok_or(GraphError::MissingEdge(other.0, other.1))?;
    if c_other == UNCOLORED {
        return Err(EngineError::InvariantViolation(
            "neighbour classification needs a colored neighbour".into(),
        ));
    }
    // At the shared endpoint `other`'s color is vacated (it now carries
    // c_e); at the far endpoint e's own color frees up.
    let mut at_shared = g.available_colors(shared).clone();
    at_shared.insert(c_other);
    if c_e != UNCOLORED {
        at_shared.remove(c_e);
    }
    let mut at_far = g.available_colors(far_of_e).clone();
    if c_e != UNCOLORED {
        at_far.insert(c_e);
    }
    if at_shared.intersect(&at_far).is_empty() {
        Ok(NeighbourClass::Bad)
    } else {
        Ok(NeighbourClass::Good)
    }
}

/// True when some neighbour of `e` is bad.
pub fn is_dangerous(g: &ColoredGraph, e: (Vertex, Vertex)) -> Result<bool, EngineError> {
    let key = edge_key(e.0, e.1);
    for end in [e.0, e.1] {
        for &(w, c) in g.neighbours(end) {
            if edge_key(end, w) == key || c == UNCOLORED {
                continue;
            }
            if classify_neighbour(g, e, (end, w))? == NeighbourClass::Bad {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
