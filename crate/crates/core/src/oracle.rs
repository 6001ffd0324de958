//! Exact small-instance baselines.
//!
//! `min_recourse` searches over final proper colorings directly with
//! iterative deepening on the number of changed edges: pick a color for the
//! uncolored edge, uncolor the conflicting holders, repeat. Minimal
//! solutions always decompose this way, because in a minimal solution every
//! changed edge conflicts with some other changed edge's final color.
//!
//! `min_shift_recourse` walks the reachable states of single-chain shifting
//! (the hole wandering across adjacent edges, fans and repeats included),
//! deduplicating states by (hole, color patch) and reading off the cheapest
//! completion.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use crate::graph::{edge_key, Color, ColoredGraph, ShiftSim, Vertex, UNCOLORED};

#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Search horizon on the recourse (and on shift-chain moves).
    pub max_recourse: usize,
    /// Cap on visited search states.
    pub max_states: usize,
    pub timeout: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_recourse: 12,
            max_states: 5_000_000,
            timeout: Duration::from_secs(60),
        }
    }
}

impl OracleBudget {
    pub fn with_max_recourse(max_recourse: usize) -> Self {
        OracleBudget {
            max_recourse,
            ..Default::default()
        }
    }
}

/// Either the exact minimum or a certified lower bound (never a wrong
/// number): `AtLeast(k)` promises the true minimum is `>= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleResult {
    Exact(usize),
    AtLeast(usize),
}

impl OracleResult {
    pub fn lower_bound(&self) -> usize {
        match self {
            OracleResult::Exact(k) | OracleResult::AtLeast(k) => *k,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match self {
            OracleResult::Exact(k) => Some(*k),
            OracleResult::AtLeast(_) => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Assigned(Color),
    Holed,
}

struct RepairSearch<'g> {
    g: &'g ColoredGraph,
    state: BTreeMap<(Vertex, Vertex), EdgeState>,
    /// Edges waiting for a final color.
    queue: Vec<(Vertex, Vertex)>,
    /// Initially-colored edges that have been uncolored; each will end up
    /// changed.
    changed: usize,
    nodes: usize,
    deadline: Instant,
    max_states: usize,
    truncated: bool,
}

impl<'g> RepairSearch<'g> {
    /// Edges at `w` whose current color is `c`, split into fixed (already
    /// assigned in this branch) and movable holders.
    fn holders(&self, w: Vertex, c: Color) -> (bool, Vec<(Vertex, Vertex)>) {
        let mut fixed = false;
        let mut movable = Vec::new();
        for &(t, _) in self.g.neighbours(w) {
            let key = edge_key(w, t);
            match self.state.get(&key) {
                Some(EdgeState::Assigned(cc)) if *cc == c => fixed = true,
                Some(_) => {}
                None => {
                    if self.g.color_of(key.0, key.1) == Some(c) {
                        movable.push(key);
                    }
                }
            }
        }
        (fixed, movable)
    }

    fn dfs(&mut self, limit: usize) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 && Instant::now() > self.deadline {
            self.truncated = true;
            return false;
        }
        if self.nodes > self.max_states {
            self.truncated = true;
            return false;
        }
        let edge = match self.queue.pop() {
            None => return true,
            Some(e) => e,
        };
        for c in 1..=self.g.palette() {
            let (fixed_a, movable_a) = self.holders(edge.0, c);
            if fixed_a {
                continue;
            }
            let (fixed_b, movable_b) = self.holders(edge.1, c);
            if fixed_b {
                continue;
            }
            let mut movers = movable_a;
            movers.extend(movable_b);
            movers.sort_unstable();
            movers.dedup();
            if self.changed + movers.len() > limit {
                continue;
            }
            self.state.insert(edge, EdgeState::Assigned(c));
            for &m in &movers {
                self.state.insert(m, EdgeState::Holed);
                self.queue.push(m);
            }
            self.changed += movers.len();
            if self.dfs(limit) {
                return true;
            }
            self.changed -= movers.len();
            for &m in &movers {
                self.state.remove(&m);
                self.queue.pop();
            }
            self.state.insert(edge, EdgeState::Holed);
        }
        self.state.remove(&edge);
        self.queue.push(edge);
        false
    }
}

fn sole_uncolored(g: &ColoredGraph) -> (Vertex, Vertex) {
    let uncolored = g.uncolored_edges();
    assert_eq!(
        uncolored.len(),
        1,
        "oracle expects exactly one uncolored edge"
    );
    uncolored[0]
}

/// Minimum number of recolored edges over all proper palette colorings that
/// extend the instance's coloring to its uncolored edge.
pub fn min_recourse(g: &ColoredGraph, budget: &OracleBudget) -> OracleResult {
    let e = sole_uncolored(g);
    let deadline = Instant::now() + budget.timeout;
    for limit in 0..=budget.max_recourse {
        let mut search = RepairSearch {
            g,
            state: BTreeMap::from([(edge_key(e.0, e.1), EdgeState::Holed)]),
            queue: vec![edge_key(e.0, e.1)],
            changed: 0,
            nodes: 0,
            deadline,
            max_states: budget.max_states,
            truncated: false,
        };
        if search.dfs(limit) {
            return OracleResult::Exact(limit);
        }
        if search.truncated {
            // Limits below `limit` were searched to completion.
            return OracleResult::AtLeast(limit);
        }
    }
    OracleResult::AtLeast(budget.max_recourse + 1)
}

type StateKey = ((Vertex, Vertex), Vec<((Vertex, Vertex), Color)>);

fn state_key(sim: &ShiftSim) -> StateKey {
    (
        sim.hole(),
        sim.patch().iter().map(|(&e, &c)| (e, c)).collect(),
    )
}

/// Cheapest completion available at this state, if the hole has a free
/// color: changed edges so far, plus one if the hole edge was initially
/// colored and cannot take its original color back.
fn completion_cost(g: &ColoredGraph, sim: &ShiftSim) -> Option<usize> {
    let free = sim.hole_free_colors();
    if free.is_empty() {
        return None;
    }
    let hole = sim.hole();
    let orig = g.color_of(hole.0, hole.1).unwrap_or(UNCOLORED);
    let mut cost = sim.changed_count();
    if orig != UNCOLORED {
        // The hole edge is counted as changed while uncolored; recoloring it
        // back to its original color cancels that.
        cost -= 1;
        if !free.contains(orig) {
            cost += 1;
        }
    }
    Some(cost)
}

/// Minimum recourse over completions that shift colors along a single
/// useful chain (consecutive edges sharing a vertex; stagnation and a
/// repeated final edge allowed) and then color the final edge.
///
/// Chain length is capped by `budget.max_recourse` moves. The result is
/// exact when the reachable state space closes within the caps; otherwise a
/// certified lower bound is returned.
pub fn min_shift_recourse(g: &ColoredGraph, budget: &OracleBudget) -> OracleResult {
    let e = sole_uncolored(g);
    let deadline = Instant::now() + budget.timeout;
    let start = ShiftSim::new(g, edge_key(e.0, e.1));
    let mut visited: HashSet<StateKey> = HashSet::new();
    visited.insert(state_key(&start));
    let mut best: Option<usize> = None;
    let mut frontier = vec![start];
    let mut truncated = false;
    let mut states = 1usize;

    let mut moves = 0usize;
    while !frontier.is_empty() {
        if let Some(c) = frontier.iter().filter_map(|s| completion_cost(g, s)).min() {
            best = Some(best.map_or(c, |b: usize| b.min(c)));
        }
        if moves == budget.max_recourse {
            if frontier.iter().any(|s| {
                let hole = s.hole();
                neighbour_edges(g, s, hole).next().is_some()
            }) {
                truncated = true;
            }
            break;
        }
        let mut next = Vec::new();
        for sim in &frontier {
            let hole = sim.hole();
            for cand in neighbour_edges(g, sim, hole) {
                let mut step = sim.clone();
                if step.step(cand).is_err() {
                    continue;
                }
                let key = state_key(&step);
                if visited.insert(key) {
                    states += 1;
                    if states > budget.max_states || Instant::now() > deadline {
                        truncated = true;
                        next.clear();
                        break;
                    }
                    next.push(step);
                }
            }
            if truncated {
                break;
            }
        }
        if truncated {
            break;
        }
        frontier = next;
        moves += 1;
    }

    match (best, truncated) {
        (Some(b), false) => OracleResult::Exact(b),
        (None, false) => OracleResult::AtLeast(budget.max_recourse + 1),
        (Some(_), true) => OracleResult::AtLeast(0),
        (None, true) => OracleResult::AtLeast(0),
    }
}

/// Colored edges adjacent to the hole, in deterministic order.
fn neighbour_edges<'a>(
    g: &'a ColoredGraph,
    sim: &'a ShiftSim,
    hole: (Vertex, Vertex),
) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
    [hole.0, hole.1].into_iter().flat_map(move |w| {
        g.neighbours(w)
            .iter()
            .map(move |&(t, _)| edge_key(w, t))
            .filter(move |&e| {
                e != hole && sim.current_color(e).unwrap_or(UNCOLORED) != UNCOLORED
            })
    })
}
