//! Hard-instance generators with verifiable certificates.
//!
//! The layered generator grows two mirrored towers of complete bipartite
//! cliques joined by one uncolored edge. Rising and falling edges of each
//! tower alternate between two disjoint palettes, with the towers in
//! opposite parity so every palette color appears next to the uncolored
//! edge; completing the coloring then forces a recoloring in every third
//! layer. The separation generator wraps reserved monochromatic matchings
//! around such a tower (or a bicolored path), which keeps general recoloring
//! cheap while pinning shift-based recoloring to the embedded hard graph.

use thiserror::Error;

use crate::graph::{Color, ColoredGraph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum AdversaryError {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Two mirrored layered towers joined by one uncolored edge.
#[derive(Debug, Clone)]
pub struct LayeredInstance {
    pub graph: ColoredGraph,
    pub uncolored_edge: (Vertex, Vertex),
    pub delta: usize,
    pub extra: usize,
    pub alpha: usize,
    /// Falling fan-out of even layers (palette A size), `Δ - α`.
    pub b0: usize,
    /// Falling fan-out of odd layers (palette B size), `C + α`.
    pub b1: usize,
    /// Index of the deepest complete layer.
    pub layers: usize,
    /// Vertices per layer, both towers combined.
    pub layer_sizes: Vec<usize>,
    /// Colored edges in construction order, for replay workloads.
    pub insertion_order: Vec<(Vertex, Vertex)>,
    /// Every complete bipartite clique as (group, children).
    pub cliques: Vec<(Vec<Vertex>, Vec<Vertex>)>,
    /// Layer growth base `(Δ - α)(C + α) / α²`.
    pub growth: f64,
}

impl LayeredInstance {
    /// Certified worst-case recourse floor `floor(L / 3)`.
    pub fn recourse_floor(&self) -> usize {
        self.layers / 3
    }

    /// Covers all edges by `alpha` edge-disjoint forests: each non-root
    /// vertex contributes its i-th rising edge to forest i, and the bridge
    /// goes into the first forest.
    pub fn forest_cover(&self) -> Vec<Vec<(Vertex, Vertex)>> {
        let mut forests = vec![Vec::new(); self.alpha];
        for (group, children) in &self.cliques {
            for &child in children {
                for (i, &parent) in group.iter().enumerate() {
                    forests[i].push((parent, child));
                }
            }
        }
        forests[0].push(self.uncolored_edge);
        forests
    }
}

/// Palette A is `1..=b0`, palette B is `b0+1..=b0+b1`.
fn palette_color(b0: usize, which: usize, index: usize) -> Color {
    if which == 0 {
        1 + index
    } else {
        b0 + 1 + index
    }
}

struct TowerPlan {
    /// Per layer: vertices (filled during materialization).
    layers: Vec<Vec<Vertex>>,
    /// Leftover pool feeding the grouping two layers down.
    carry: Vec<Vec<Vertex>>,
}

/// Simulates the per-layer sizes of one tower without materializing it.
/// Returns vertices per layer for layers `0..=l`.
fn tower_sizes(l: usize, alpha: usize, b_first: usize, b_second: usize) -> Vec<usize> {
    let mut sizes = vec![0usize; l + 1];
    let mut carry = vec![0usize; l + 3];
    sizes[0] = 1;
    for i in 0..l {
        let children_per_group = if i % 2 == 0 { b_first } else { b_second };
        let new = if i == 0 {
            b_first
        } else {
            let pool = carry[i] + sizes[i];
            let groups = pool / alpha;
            carry[i + 2] += pool % alpha;
            groups * children_per_group
        };
        sizes[i + 1] = new;
    }
    sizes
}

/// Builds the layered instance. `delta >= 2` is accepted here so the
/// separation wrapper can embed the degenerate bicolored path; the public
/// generator restricts to `delta >= 3`.
fn build_layered(
    n: usize,
    delta: usize,
    extra: usize,
    alpha: usize,
) -> Result<LayeredInstance, AdversaryError> {
    if delta < 2 {
        return Err(AdversaryError::BadParameter(format!(
            "degree bound {delta} too small"
        )));
    }
    if extra + 2 > delta {
        return Err(AdversaryError::BadParameter(format!(
            "extra colors must satisfy C <= delta - 2, got C = {extra}, delta = {delta}"
        )));
    }
    if alpha < 1 || 2 * alpha > delta - extra {
        return Err(AdversaryError::BadParameter(format!(
            "alpha must lie in [1, (delta - C) / 2], got {alpha}"
        )));
    }
    let b0 = delta - alpha;
    let b1 = extra + alpha;
    debug_assert_eq!(b0 + b1, delta + extra);

    // Deepest complete layer affordable within n vertices. The u-tower
    // starts with palette A (fan-out b0), the v-tower with palette B.
    let mut l = 0usize;
    loop {
        let next = l + 1;
        let total: usize = tower_sizes(next, alpha, b0, b1).iter().sum::<usize>()
            + tower_sizes(next, alpha, b1, b0).iter().sum::<usize>();
        if total <= n {
            l = next;
        } else {
            break;
        }
    }
    if l == 0 {
        return Err(AdversaryError::BadParameter(format!(
            "n = {n} cannot fit even one complete layer (needs {})",
            2 + delta + extra
        )));
    }

    let mut g = ColoredGraph::new(n, delta, extra);
    let mut next_vertex = 2usize;
    let mut order = Vec::new();
    let mut cliques = Vec::new();
    let mut towers = [
        TowerPlan {
            layers: vec![vec![0]],
            carry: vec![Vec::new(); l + 3],
        },
        TowerPlan {
            layers: vec![vec![1]],
            carry: vec![Vec::new(); l + 3],
        },
    ];

    for i in 0..l {
        for (t, tower) in towers.iter_mut().enumerate() {
            // Tower 0 keeps palette order (A, B), tower 1 swaps it.
            let which = (i + t) % 2;
            let fanout = if which == 0 { b0 } else { b1 };
            let mut new_layer = Vec::new();
            let mut grow = |group: &[Vertex],
                            g: &mut ColoredGraph,
                            order: &mut Vec<(Vertex, Vertex)>|
             -> Result<Vec<Vertex>, AdversaryError> {
                let children: Vec<Vertex> = (0..fanout).map(|k| next_vertex + k).collect();
                next_vertex += fanout;
                for (j, &parent) in group.iter().enumerate() {
                    for (k, &child) in children.iter().enumerate() {
                        g.insert_edge(parent, child)?;
                        g.assign_color(parent, child, palette_color(b0, which, (j + k) % fanout))?;
                        order.push((parent, child));
                    }
                }
                cliques.push((group.to_vec(), children.clone()));
                Ok(children)
            };
            if i == 0 {
                let root = [tower.layers[0][0]];
                new_layer.extend(grow(&root, &mut g, &mut order)?);
            } else {
                // Leftovers from two layers up are grouped first.
                let mut pool = std::mem::take(&mut tower.carry[i]);
                pool.extend(&tower.layers[i]);
                let mut chunk = Vec::with_capacity(alpha);
                for v in pool {
                    chunk.push(v);
                    if chunk.len() == alpha {
                        new_layer.extend(grow(&chunk, &mut g, &mut order)?);
                        chunk.clear();
                    }
                }
                tower.carry[i + 2] = chunk;
            }
            tower.layers.push(new_layer);
        }
    }

    g.insert_edge(0, 1)?;
    let layer_sizes = (0..=l)
        .map(|i| towers[0].layers[i].len() + towers[1].layers[i].len())
        .collect();
    Ok(LayeredInstance {
        graph: g,
        uncolored_edge: (0, 1),
        delta,
        extra,
        alpha,
        b0,
        b1,
        layers: l,
        layer_sizes,
        insertion_order: order,
        cliques,
        growth: (b0 * b1) as f64 / (alpha * alpha) as f64,
    })
}

/// Layered lower-bound instance on `n` vertices: completing the one missing
/// edge of the result costs at least `floor(L / 3)` recolorings.
pub fn gen_layered_instance(
    n: usize,
    delta: usize,
    extra: usize,
    alpha: usize,
) -> Result<LayeredInstance, AdversaryError> {
    if delta < 3 {
        return Err(AdversaryError::BadParameter(format!(
            "degree bound must be at least 3, got {delta}"
        )));
    }
    build_layered(n, delta, extra, alpha)
}

/// Reserved matchings wrapped around an embedded hard instance.
#[derive(Debug, Clone)]
pub struct SeparationInstance {
    pub graph: ColoredGraph,
    pub uncolored_edge: (Vertex, Vertex),
    pub delta: usize,
    pub extra: usize,
    pub q: usize,
    /// Vertices per part; part 0 hosts the embedded instance.
    pub k: usize,
    /// The q dedicated matching colors (top of the palette).
    pub matching_colors: Vec<Color>,
    /// Depth of the embedded layered instance.
    pub embedded_layers: usize,
    pub embedded_alpha: usize,
    /// Colored edges in construction order, for replay workloads.
    pub insertion_order: Vec<(Vertex, Vertex)>,
}

impl SeparationInstance {
    /// Floor on single-chain shift recourse: the side length of the
    /// bicolored path for C = 0, otherwise the embedded layered floor.
    pub fn shift_floor(&self) -> usize {
        if self.extra == 0 {
            self.embedded_layers
        } else {
            self.embedded_layers / 3
        }
    }
}

/// Splits the vertices into `q + 1` parts, colors `q` perfect matchings from
/// part 0 with dedicated top colors, and embeds a layered instance (or the
/// bicolored path when `delta - q = 2`) on part 0 with the remaining colors.
pub fn gen_separation_instance(
    n: usize,
    delta: usize,
    extra: usize,
    q: usize,
) -> Result<SeparationInstance, AdversaryError> {
    if delta < 3 {
        return Err(AdversaryError::BadParameter(format!(
            "degree bound must be at least 3, got {delta}"
        )));
    }
    if extra + 3 > delta {
        return Err(AdversaryError::BadParameter(format!(
            "separation needs C <= delta - 3, got C = {extra}"
        )));
    }
    if q < 1 || q + extra + 2 > delta {
        return Err(AdversaryError::BadParameter(format!(
            "q must lie in [1, delta - C - 2], got {q}"
        )));
    }
    let k = n / (q + 1);
    let inner_delta = delta - q;
    let inner_alpha = (inner_delta - extra) / 2;
    let inner = build_layered(k, inner_delta, extra, inner_alpha)?;

    let mut g = ColoredGraph::new(n, delta, extra);
    let mut order = Vec::new();
    // Matchings first: (v_j, u^i_j) in color inner_palette + i.
    let inner_palette = inner_delta + extra;
    let matching_colors: Vec<Color> = (1..=q).map(|i| inner_palette + i).collect();
    for i in 1..=q {
        for j in 0..k {
            let u = j;
            let v = i * k + j;
            g.insert_edge(u, v)?;
            g.assign_color(u, v, matching_colors[i - 1])?;
            order.push((u, v));
        }
    }
    // Embedded hard instance on part 0; its colors already avoid the
    // matching colors.
    for &(u, v) in &inner.insertion_order {
        let c = inner.graph.color_of(u, v).expect("edge exists");
        g.insert_edge(u, v)?;
        g.assign_color(u, v, c)?;
        order.push((u, v));
    }
    g.insert_edge(inner.uncolored_edge.0, inner.uncolored_edge.1)?;

    Ok(SeparationInstance {
        graph: g,
        uncolored_edge: inner.uncolored_edge,
        delta,
        extra,
        q,
        k,
        matching_colors,
        embedded_layers: inner.layers,
        embedded_alpha: inner_alpha,
        insertion_order: order,
    })
}

/// Side-car metadata comments for the instance file format.
pub fn layered_metadata(inst: &LayeredInstance) -> Vec<String> {
    vec![
        format!("L={}", inst.layers),
        format!("b0={}", inst.b0),
        format!("b1={}", inst.b1),
        format!("alpha={}", inst.alpha),
        format!("floor={}", inst.recourse_floor()),
    ]
}

pub fn separation_metadata(inst: &SeparationInstance) -> Vec<String> {
    vec![
        format!("q={}", inst.q),
        format!("k={}", inst.k),
        format!("L={}", inst.embedded_layers),
        format!("floor={}", inst.shift_floor()),
    ]
}
