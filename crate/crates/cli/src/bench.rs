//! Wall-clock comparison of the oracle and published paths.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use vogan::closed::xi_published_report;
use vogan::oracle::check_cap;
use vogan::{xi_oracle, ClosedOptions, Error, Family, VoganDiagram};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Below this median the slower path is too close to timer resolution for
/// the ratio to mean much.
const NOISE_FLOOR: Duration = Duration::from_micros(10);
const MIN_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Timing {
    pub median_ns: u128,
    pub p95_ns: u128,
}

impl Timing {
    fn from_samples(mut samples: Vec<Duration>) -> Self {
        samples.sort_unstable();
        let at = |q: f64| {
            let idx = ((samples.len() as f64 - 1.0) * q).round() as usize;
            samples[idx].as_nanos()
        };
        Timing { median_ns: at(0.5), p95_ns: at(0.95) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub family: Family,
    pub rank: usize,
    pub samples: usize,
    pub mean_painted: f64,
    pub published: Timing,
    /// `Err` carries the reason the oracle was skipped.
    pub oracle: Result<Timing, String>,
    /// Oracle median over published median.
    pub speedup: Option<f64>,
    pub noise_dominated: bool,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let us = |ns: u128| ns as f64 / 1000.0;
        writeln!(f, "bench {}{} samples={} mean|S|={:.1}", self.family, self.rank, self.samples, self.mean_painted)?;
        writeln!(
            f,
            "published  median {:>12.3} us  p95 {:>12.3} us",
            us(self.published.median_ns),
            us(self.published.p95_ns)
        )?;
        match &self.oracle {
            Ok(t) => writeln!(f, "oracle     median {:>12.3} us  p95 {:>12.3} us", us(t.median_ns), us(t.p95_ns))?,
            Err(reason) => writeln!(f, "oracle     skipped: {reason}")?,
        }
        if let Some(s) = self.speedup {
            write!(f, "speedup    {s:.1}x")?;
            if self.noise_dominated {
                write!(f, " (noise-dominated)")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A uniformly random non-empty painted set.
pub fn sample_diagram(family: Family, rank: usize, rng: &mut impl Rng) -> VoganDiagram {
    loop {
        let painted: Vec<usize> = (1..=rank).filter(|_| rng.gen::<bool>()).collect();
        if !painted.is_empty() {
            return VoganDiagram::new(family, rank, painted).expect("sampled set is valid");
        }
    }
}

fn time<T>(f: impl FnOnce() -> T) -> Duration {
    let start = Instant::now();
    std::hint::black_box(f());
    start.elapsed()
}

pub fn run_bench(
    family: Family,
    rank: usize,
    samples: usize,
    oracle_cap: usize,
    seed: u64,
) -> vogan::Result<BenchReport> {
    family.check_rank(rank)?;
    if samples == 0 {
        return Err(Error::EmptyInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let diagrams: Vec<VoganDiagram> = (0..samples).map(|_| sample_diagram(family, rank, &mut rng)).collect();
    let options = ClosedOptions::default();
    let published_once = |d: &VoganDiagram| xi_published_report::<i64>(d, &options);

    published_once(&diagrams[0])?;
    let mut published = Vec::with_capacity(samples);
    for d in &diagrams {
        published.push(time(|| published_once(d)));
    }
    let published = Timing::from_samples(published);

    let oracle = match check_cap(rank, oracle_cap) {
        Err(e) => Err(e.to_string()),
        Ok(()) => {
            xi_oracle::<i64>(&diagrams[0])?;
            let mut times = Vec::with_capacity(samples);
            for d in &diagrams {
                times.push(time(|| xi_oracle::<i64>(d)));
            }
            Ok(Timing::from_samples(times))
        }
    };

    let speedup = oracle
        .as_ref()
        .ok()
        .map(|o| o.median_ns as f64 / published.median_ns.max(1) as f64);
    let slow = oracle.as_ref().map_or(published.median_ns, |o| o.median_ns.max(published.median_ns));
    Ok(BenchReport {
        family,
        rank,
        samples,
        mean_painted: diagrams.iter().map(|d| d.m() as f64).sum::<f64>() / samples as f64,
        published,
        oracle,
        speedup,
        noise_dominated: samples < MIN_SAMPLES || slow < NOISE_FLOOR.as_nanos(),
    })
}
