//! Shared setup helpers for the criterion benchmarks.

use shiftcolor::harness::{gen_workload, WorkloadModel, WorkloadSpec, WorkloadOp};

/// Deterministic random-cap workload used across benches.
pub fn capped_workload(n: usize, delta: usize, ops: usize, seed: u64) -> Vec<WorkloadOp> {
    gen_workload(
        &WorkloadSpec {
            n,
            delta,
            ops,
            model: WorkloadModel::RandomCap { delete_ratio: 0.25 },
        },
        seed,
    )
    .expect("benchmark workload")
}

/// Deterministic spanning-forest workload.
pub fn forest_workload(n: usize, delta: usize, ops: usize, seed: u64) -> Vec<WorkloadOp> {
    gen_workload(
        &WorkloadSpec {
            n,
            delta,
            ops,
            model: WorkloadModel::Forest { delete_ratio: 0.0 },
        },
        seed,
    )
    .expect("benchmark workload")
}
