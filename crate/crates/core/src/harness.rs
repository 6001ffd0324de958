//! Workload generation, engine runs with metric capture, and CSV/JSON
//! emission. Workloads are deterministic in the seed; replay models emit a
//! generated hard instance's edges in construction order with the uncolored
//! bridge last.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::adversary::{gen_layered_instance, gen_separation_instance, AdversaryError};
use crate::engine::{Engine, EngineError};
use crate::graph::{edge_key, ColoredGraph, Vertex};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unsatisfiable workload: {0}")]
    Unsatisfiable(String),
    #[error("op {index} ({kind} {u} {v}): {source}")]
    Engine {
        index: usize,
        kind: OpKind,
        u: Vertex,
        v: Vertex,
        source: EngineError,
    },
    #[error("op {index}: verification found {count} violations; first: {first}")]
    Verification {
        index: usize,
        count: usize,
        first: String,
    },
    #[error("op {index}: reported recourse {reported} but {observed} colors changed")]
    RecourseMismatch {
        index: usize,
        reported: usize,
        observed: usize,
    },
    #[error(transparent)]
    Adversary(#[from] AdversaryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Insert,
    Delete,
}

impl std::fmt::Display for OpKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OpKind::Insert => write!(f, "insert"),
            OpKind::Delete => write!(f, "delete"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkloadOp {
    pub kind: OpKind,
    pub u: Vertex,
    pub v: Vertex,
}

#[derive(Debug, Clone)]
pub enum WorkloadModel {
    /// Uniform inserts/deletes subject to the degree cap.
    RandomCap { delete_ratio: f64 },
    /// Inserts keep the graph acyclic (checked with union-find); deletions
    /// sampled uniformly from present edges.
    Forest { delete_ratio: f64 },
    /// Edges of a layered lower-bound instance in construction order.
    LowerBoundReplay { extra: usize, alpha: usize },
    /// Edges of a separation instance in construction order.
    SeparationReplay { extra: usize, q: usize },
}

#[derive(Debug, Clone)]
pub struct WorkloadSpec {
    pub n: usize,
    pub delta: usize,
    pub ops: usize,
    pub model: WorkloadModel,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Deterministic op stream for `spec` under `seed`.
pub fn gen_workload(spec: &WorkloadSpec, seed: u64) -> Result<Vec<WorkloadOp>, HarnessError> {
    match &spec.model {
        WorkloadModel::RandomCap { delete_ratio } => {
            gen_dynamic(spec, seed, *delete_ratio, false)
        }
        WorkloadModel::Forest { delete_ratio } => gen_dynamic(spec, seed, *delete_ratio, true),
        WorkloadModel::LowerBoundReplay { extra, alpha } => {
            let inst = gen_layered_instance(spec.n, spec.delta, *extra, *alpha)?;
            let mut ops: Vec<WorkloadOp> = inst
                .insertion_order
                .iter()
                .map(|&(u, v)| WorkloadOp {
                    kind: OpKind::Insert,
                    u,
                    v,
                })
                .collect();
            ops.push(WorkloadOp {
                kind: OpKind::Insert,
                u: inst.uncolored_edge.0,
                v: inst.uncolored_edge.1,
            });
            Ok(ops)
        }
        WorkloadModel::SeparationReplay { extra, q } => {
            let inst = gen_separation_instance(spec.n, spec.delta, *extra, *q)?;
            let mut ops: Vec<WorkloadOp> = inst
                .insertion_order
                .iter()
                .map(|&(u, v)| WorkloadOp {
                    kind: OpKind::Insert,
                    u,
                    v,
                })
                .collect();
            ops.push(WorkloadOp {
                kind: OpKind::Insert,
                u: inst.uncolored_edge.0,
                v: inst.uncolored_edge.1,
            });
            Ok(ops)
        }
    }
}

fn gen_dynamic(
    spec: &WorkloadSpec,
    seed: u64,
    delete_ratio: f64,
    forest: bool,
) -> Result<Vec<WorkloadOp>, HarnessError> {
    let n = spec.n;
    if n < 2 {
        return Err(HarnessError::Unsatisfiable("need at least 2 vertices".into()));
    }
    if !(0.0..=1.0).contains(&delete_ratio) {
        return Err(HarnessError::Unsatisfiable(format!(
            "delete ratio {delete_ratio} outside [0, 1]"
        )));
    }
    let max_edges = if forest { n - 1 } else { n * spec.delta / 2 };
    if delete_ratio == 0.0 && spec.ops > max_edges {
        return Err(HarnessError::Unsatisfiable(format!(
            "{} inserts cannot fit into {} possible edges",
            spec.ops, max_edges
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut present: std::collections::HashSet<(Vertex, Vertex)> = std::collections::HashSet::new();
    let mut uf = UnionFind::new(n);
    let mut ops = Vec::with_capacity(spec.ops);

    let rebuild_uf = |edges: &[(Vertex, Vertex)]| {
        let mut uf = UnionFind::new(n);
        for &(u, v) in edges {
            uf.union(u, v);
        }
        uf
    };

    for _ in 0..spec.ops {
        let want_delete = !edges.is_empty() && rng.gen_bool(delete_ratio);
        if want_delete {
            let idx = rng.gen_range(0..edges.len());
            let (u, v) = edges.swap_remove(idx);
            present.remove(&(u, v));
            degree[u] -= 1;
            degree[v] -= 1;
            if forest {
                uf = rebuild_uf(&edges);
            }
            ops.push(WorkloadOp {
                kind: OpKind::Delete,
                u,
                v,
            });
            continue;
        }
        // Rejection-sample an insertable pair.
        let mut found = None;
        for _ in 0..64 * n.max(32) {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let key = edge_key(u, v);
            if present.contains(&key)
                || degree[key.0] >= spec.delta
                || degree[key.1] >= spec.delta
            {
                continue;
            }
            if forest && uf.find(key.0) == uf.find(key.1) {
                continue;
            }
            found = Some(key);
            break;
        }
        match found {
            Some((u, v)) => {
                present.insert((u, v));
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
                if forest {
                    uf.union(u, v);
                }
                ops.push(WorkloadOp {
                    kind: OpKind::Insert,
                    u,
                    v,
                });
            }
            None => {
                if edges.is_empty() {
                    return Err(HarnessError::Unsatisfiable(
                        "no insertable pair found in an empty graph".into(),
                    ));
                }
                // Saturated: fall back to a deletion to keep the stream going.
                let idx = rng.gen_range(0..edges.len());
                let (u, v) = edges.swap_remove(idx);
                present.remove(&(u, v));
                degree[u] -= 1;
                degree[v] -= 1;
                if forest {
                    uf = rebuild_uf(&edges);
                }
                ops.push(WorkloadOp {
                    kind: OpKind::Delete,
                    u,
                    v,
                });
            }
        }
    }
    Ok(ops)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OpRecord {
    pub index: usize,
    pub kind: OpKind,
    pub u: Vertex,
    pub v: Vertex,
    pub recolored: usize,
    pub path_len: usize,
    pub tree_depth: usize,
    pub nanos: u128,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Aggregates {
    pub ops: usize,
    pub max_recolored: usize,
    pub mean_recolored: f64,
    pub total_recolored: usize,
    pub max_path_len: usize,
    pub max_tree_depth: usize,
    /// Propriety violations observed during the run; must be zero.
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metrics {
    pub records: Vec<OpRecord>,
    pub aggregates: Aggregates,
}

impl Metrics {
    pub fn recompute_aggregates(records: &[OpRecord], violations: usize) -> Aggregates {
        let total: usize = records.iter().map(|r| r.recolored).sum();
        Aggregates {
            ops: records.len(),
            max_recolored: records.iter().map(|r| r.recolored).max().unwrap_or(0),
            mean_recolored: if records.is_empty() {
                0.0
            } else {
                total as f64 / records.len() as f64
            },
            total_recolored: total,
            max_path_len: records.iter().map(|r| r.path_len).max().unwrap_or(0),
            max_tree_depth: records.iter().map(|r| r.tree_depth).max().unwrap_or(0),
            violations,
        }
    }
}

/// Replays `ops` through `engine` on a fresh graph. Every `verify_every`
/// ops (when nonzero) the coloring is re-verified from scratch and the
/// reported recourse is cross-checked against an independent color diff.
pub fn run_workload(
    engine: &Engine,
    n: usize,
    ops: &[WorkloadOp],
    verify_every: usize,
) -> Result<Metrics, HarnessError> {
    let cfg = engine.config();
    let mut g = ColoredGraph::new(n, cfg.delta, cfg.extra);
    let mut records = Vec::with_capacity(ops.len());
    for (index, op) in ops.iter().enumerate() {
        let audit = verify_every != 0 && index % verify_every == 0;
        let before = if audit { Some(g.edges()) } else { None };
        let start = Instant::now();
        let report = match op.kind {
            OpKind::Insert => engine.insert_edge(&mut g, op.u, op.v),
            OpKind::Delete => engine.delete_edge(&mut g, op.u, op.v),
        }
        .map_err(|source| HarnessError::Engine {
            index,
            kind: op.kind,
            u: op.u,
            v: op.v,
            source,
        })?;
        let nanos = start.elapsed().as_nanos();
        if let Some(before) = before {
            let violations = g.verify_proper(0);
            if !violations.is_empty() {
                return Err(HarnessError::Verification {
                    index,
                    count: violations.len(),
                    first: violations[0].to_string(),
                });
            }
            let observed = color_diff(&before, &g.edges(), (op.u, op.v));
            if observed != report.recolored {
                return Err(HarnessError::RecourseMismatch {
                    index,
                    reported: report.recolored,
                    observed,
                });
            }
        }
        records.push(OpRecord {
            index,
            kind: op.kind,
            u: op.u,
            v: op.v,
            recolored: report.recolored,
            path_len: report.path_len,
            tree_depth: report.tree_depth,
            nanos,
        });
    }
    let aggregates = Metrics::recompute_aggregates(&records, 0);
    Ok(Metrics {
        records,
        aggregates,
    })
}

/// Edges present in both snapshots whose colors differ, excluding the edge
/// the operation itself touched.
fn color_diff(
    before: &[(Vertex, Vertex, usize)],
    after: &[(Vertex, Vertex, usize)],
    touched: (Vertex, Vertex),
) -> usize {
    let touched = edge_key(touched.0, touched.1);
    let prior: std::collections::HashMap<(Vertex, Vertex), usize> = before
        .iter()
        .map(|&(u, v, c)| ((u, v), c))
        .collect();
    after
        .iter()
        .filter(|&&(u, v, c)| {
            (u, v) != touched
                && matches!(prior.get(&(u, v)), Some(&old) if old != c && old != 0)
        })
        .count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricsFormat {
    Csv,
    Json,
}

/// Serializes metrics. CSV carries one row per op plus a commented trailer
/// with the aggregates; JSON mirrors the full structure.
pub fn emit_metrics(metrics: &Metrics, format: MetricsFormat) -> String {
    match format {
        MetricsFormat::Csv => {
            let mut out = String::from("index,kind,u,v,recolored,path_len,tree_depth,nanos\n");
            for r in &metrics.records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.index, r.kind, r.u, r.v, r.recolored, r.path_len, r.tree_depth, r.nanos
                ));
            }
            out.push_str(&format!(
                "# aggregates {}\n",
                serde_json::to_string(&metrics.aggregates).expect("aggregates serialize")
            ));
            out
        }
        MetricsFormat::Json => serde_json::to_string_pretty(metrics).expect("metrics serialize"),
    }
}

/// Parses a CSV produced by [`emit_metrics`].
pub fn parse_metrics_csv(text: &str) -> Result<Metrics, HarnessError> {
    let mut records = Vec::new();
    let mut aggregates = None;
    for (i, line) in text.lines().enumerate() {
        if i == 0 || line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# aggregates ") {
            aggregates = serde_json::from_str(rest).ok();
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(HarnessError::Unsatisfiable(format!(
                "metrics line {i} has {} fields",
                fields.len()
            )));
        }
        let kind = match fields[1] {
            "insert" => OpKind::Insert,
            "delete" => OpKind::Delete,
            other => {
                return Err(HarnessError::Unsatisfiable(format!(
                    "unknown op kind `{other}`"
                )))
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| HarnessError::Unsatisfiable(format!("bad metric field: {e}")))
        };
        records.push(OpRecord {
            index: parse(fields[0])?,
            kind,
            u: parse(fields[2])?,
            v: parse(fields[3])?,
            recolored: parse(fields[4])?,
            path_len: parse(fields[5])?,
            tree_depth: parse(fields[6])?,
            nanos: fields[7]
                .parse::<u128>()
                .map_err(|e| HarnessError::Unsatisfiable(format!("bad nanos: {e}")))?,
        });
    }
    let aggregates =
        aggregates.unwrap_or_else(|| Metrics::recompute_aggregates(&records, 0));
    Ok(Metrics {
        records,
        aggregates,
    })
}

/// Plain text form for saved workloads: one `insert u v` / `delete u v`
/// line per op.
pub fn write_workload(ops: &[WorkloadOp]) -> String {
    let mut out = String::new();
    for op in ops {
        out.push_str(&format!("{} {} {}\n", op.kind, op.u, op.v));
    }
    out
}

pub fn read_workload(text: &str) -> Result<Vec<WorkloadOp>, HarnessError> {
    let mut ops = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(HarnessError::Unsatisfiable(format!(
                "workload line {}: expected `kind u v`",
                i + 1
            )));
        }
        let kind = match parts[0] {
            "insert" => OpKind::Insert,
            "delete" => OpKind::Delete,
            other => {
                return Err(HarnessError::Unsatisfiable(format!(
                    "workload line {}: unknown op `{other}`",
                    i + 1
                )))
            }
        };
        let u = parts[1]
            .parse()
            .map_err(|e| HarnessError::Unsatisfiable(format!("line {}: {e}", i + 1)))?;
        let v = parts[2]
            .parse()
            .map_err(|e| HarnessError::Unsatisfiable(format!("line {}: {e}", i + 1)))?;
        ops.push(WorkloadOp { kind, u, v });
    }
    Ok(ops)
}
