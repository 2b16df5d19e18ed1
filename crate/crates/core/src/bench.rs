//! Wall-clock measurement of the streaming engine, shared by the CLI and
//! the acceptance suite.
//!
//! One run generates a seeded instance, then times every push through the
//! stream; generation is not part of the measured step times. The doubling
//! experiment over the reported means settles the per-step quadratic
//! claim.

use std::time::Instant;

use crate::engine::SmartStream;
use crate::generators::random_pseudo_transitive;

pub const CSV_HEADER: &str = "n,step_mean_us,step_max_us,total_ms";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub step_mean_us: f64,
    pub step_max_us: f64,
    pub total_ms: f64,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!("{},{:.3},{:.3},{:.3}", self.n, self.step_mean_us, self.step_max_us, self.total_ms)
    }
}

/// Streams one seeded instance and reports per-step and total wall times.
pub fn bench_stream(n: usize, density: f64, flips: f64, seed: u64) -> BenchRow {
    let g = random_pseudo_transitive(n, density, flips, seed);
    let mut stream = SmartStream::new();
    let mut total_us = 0.0;
    let mut max_us: f64 = 0.0;
    for k in 0..g.n() {
        let delta = g.delta_at(k);
        let start = Instant::now();
        stream.push(&delta).expect("generated streams are valid");
        let us = start.elapsed().as_secs_f64() * 1e6;
        total_us += us;
        max_us = max_us.max(us);
    }
    let steps = g.n().max(1) as f64;
    BenchRow { n, step_mean_us: total_us / steps, step_max_us: max_us, total_ms: total_us / 1e3 }
}

/// Runs [`bench_stream`] `reps` times and reports the per-field median.
pub fn bench_median(n: usize, density: f64, flips: f64, seed: u64, reps: usize) -> BenchRow {
    let rows: Vec<BenchRow> = (0..reps.max(1)).map(|_| bench_stream(n, density, flips, seed)).collect();
    let median = |pick: fn(&BenchRow) -> f64| {
        let mut vals: Vec<f64> = rows.iter().map(pick).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals[vals.len() / 2]
    };
    BenchRow {
        n,
        step_mean_us: median(|r| r.step_mean_us),
        step_max_us: median(|r| r.step_max_us),
        total_ms: median(|r| r.total_ms),
    }
}
