//! Weight generators, cell-count benchmarks and log-log slope fits.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prefixdp_core::{Algorithm, Result, SolveOptions, WeightSeq};

use crate::problem::{self, ProblemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Distribution {
    /// Integers drawn uniformly from [1, 10^6].
    Uniform,
    /// `max(1, 2^(40 - i))`: ratio 1/2 from 2^40.
    Geometric,
    /// `round(10^6 / i)`: Zipf with exponent 1.
    Zipf,
}

impl Distribution {
    pub fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Geometric => "geometric",
            Distribution::Zipf => "zipf",
        }
    }
}

/// `n` weights; only the uniform draw depends on `seed`.
pub fn generate(dist: Distribution, n: usize, seed: u64) -> Vec<u64> {
    match dist {
        Distribution::Uniform => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| rng.gen_range(1..=1_000_000)).collect()
        }
        Distribution::Geometric => (0..n).map(|i| if i < 40 { 1u64 << (40 - i) } else { 1 }).collect(),
        Distribution::Zipf => (1..=n).map(|i| (1_000_000f64 / i as f64).round() as u64).collect(),
    }
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct `x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 1e-12).then(|| sxy / sxx)
}

/// One measured solve.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub algorithm: Algorithm,
    pub n: usize,
    pub cells_updated: u64,
    /// Median seconds over the repetitions.
    pub wall_time: f64,
}

pub fn algorithm_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Naive => "naive",
        Algorithm::Batched => "batched",
    }
}

/// Builds the instance for size `n` (the problem may depend on `n`, e.g. a
/// binary GMR spec with `n` levels).
pub type InstanceFn<'a> = dyn Fn(usize) -> Result<ProblemSpec> + 'a;

/// Solves in cost-only mode for every size and algorithm.
pub fn measure(
    instance: &InstanceFn<'_>,
    sizes: &[usize],
    algorithms: &[Algorithm],
    dist: Distribution,
    seed: u64,
    reps: usize,
) -> Result<Vec<Sample>> {
    let mut out = Vec::new();
    for &n in sizes {
        let spec = instance(n)?;
        let w = WeightSeq::new(&generate(dist, n, seed))?;
        for &algorithm in algorithms {
            let mut times = Vec::with_capacity(reps.max(1));
            let mut cells = 0;
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let o = problem::solve(&spec, &w, SolveOptions::cost_only(algorithm))?;
                times.push(start.elapsed().as_secs_f64());
                cells = o.cells_updated;
            }
            times.sort_by(f64::total_cmp);
            out.push(Sample { algorithm, n, cells_updated: cells, wall_time: times[times.len() / 2] });
        }
    }
    Ok(out)
}

/// Slope of `cells_updated` against `n` for one algorithm.
pub fn cells_slope(samples: &[Sample], algorithm: Algorithm) -> Option<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|s| s.algorithm == algorithm)
        .map(|s| (s.n as f64, s.cells_updated as f64))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    fit_slope(&pts)
}

pub const CSV_HEADER: &str = "problem,algorithm,n,cells_updated,wall_time,distribution,seed";

pub fn csv(problem: &str, samples: &[Sample], dist: Distribution, seed: u64) -> String {
    let mut s = String::new();
    s.push_str(CSV_HEADER);
    s.push('\n');
    for x in samples {
        let _ = writeln!(
            s,
            "{problem},{},{},{},{:.6},{},{seed}",
            algorithm_name(x.algorithm),
            x.n,
            x.cells_updated,
            x.wall_time,
            dist.name()
        );
    }
    s
}
