//! Wall-clock timing of the adjusted solver over a ladder of sizes, with a
//! least-squares fit of the growth exponent on a log-log scale.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use twolevel_core::{optimize_beta, solve_adjusted, SteinerSubroutine};

use crate::generate::{generate_instance, Distribution};

pub const DEFAULT_LADDER: [usize; 8] = [1_000, 2_000, 4_000, 8_000, 16_000, 32_000, 64_000, 100_000];

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub ladder: Vec<usize>,
    pub group_size: usize,
    pub distribution: Distribution,
    pub extent: u32,
    pub seed: u64,
    pub sub: SteinerSubroutine,
    /// Runs per size; the fastest counts.
    pub repeats: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            ladder: DEFAULT_LADDER.to_vec(),
            group_size: 100,
            distribution: Distribution::Uniform,
            extent: 1_000_000,
            seed: 1,
            sub: SteinerSubroutine::rmst(),
            repeats: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub seconds: f64,
    pub length: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub subroutine: String,
    pub rows: Vec<BenchRow>,
    /// Slope of `ln t` against `ln n`; `None` with fewer than two sizes.
    pub exponent: Option<f64>,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>8} {:>6} {:>12} {:>14}", "n", "k", "seconds", "length")?;
        for r in &self.rows {
            writeln!(f, "{:>8} {:>6} {:>12.6} {:>14}", r.n, r.k, r.seconds, r.length)?;
        }
        match self.exponent {
            Some(e) => write!(f, "fitted exponent: {e:.3}"),
            None => write!(f, "fitted exponent: n/a"),
        }
    }
}

/// Least-squares slope through `(ln x, ln y)`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-9).ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn run_bench(cfg: &BenchConfig) -> twolevel_core::Result<BenchReport> {
    let (beta, _) = optimize_beta(&cfg.sub.alpha())?;
    let mut rows = Vec::with_capacity(cfg.ladder.len());
    for (step, &n) in cfg.ladder.iter().enumerate() {
        let per_group = cfg.group_size.clamp(1, n.max(1));
        let k = (n / per_group).max(1);
        let instance =
            generate_instance(cfg.seed.wrapping_add(step as u64), k, per_group, cfg.distribution, cfg.extent);
        let mut best = Duration::MAX;
        let mut length = String::new();
        for _ in 0..cfg.repeats.max(1) {
            let start = Instant::now();
            let t = solve_adjusted(&instance, &beta, &cfg.sub)?;
            best = best.min(start.elapsed());
            length = t.total_length().to_decimal(6);
        }
        log::info!("n = {n}: {:.3} s", best.as_secs_f64());
        rows.push(BenchRow { n: k * per_group, k, seconds: best.as_secs_f64(), length });
    }
    let exponent = fit_exponent(&rows.iter().map(|r| (r.n as f64, r.seconds)).collect::<Vec<_>>());
    Ok(BenchReport { subroutine: cfg.sub.name().to_string(), rows, exponent })
}
