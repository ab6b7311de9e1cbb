//! Seeded Monte Carlo harness.
//!
//! A run draws `samples` independent samples of one statistic, each from
//! its own RNG stream `(seed, sample_index)`, so the per-sample values are
//! identical no matter how many workers participate. Per-sample values are
//! exact (integers or rationals); floating point enters only in the
//! summary. An optional band turns the run into a pass/fail check.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{whole, ExactRatio};
use crate::patterns::{z_clique, Pattern};
use crate::persecute::y_stat;
use crate::randgen::{random_dyck, random_r_matching, random_word, SeedSpec};
use crate::sockproc::sockuence;
use crate::word::Word;

/// What to measure on each sample.
#[derive(Debug, Clone)]
pub enum Statistic {
    /// Average floor count of a random r-matching (exact rational).
    SockAverage,
    /// Maximum floor count of a random r-matching.
    SockMax,
    /// Height of a uniform random Dyck sequence of semilength n.
    DyckHeight,
    /// Largest clique of the allowed patterns in a random r-matching.
    Clique { allowed: Vec<Pattern> },
    /// `y` statistic of persecuting `family` on an i.i.d.-uniform random
    /// word of length n over `alphabet` letters.
    Persecute { family: Vec<Word>, alphabet: usize },
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::SockAverage => "avg",
            Statistic::SockMax => "max",
            Statistic::DyckHeight => "dyck-height",
            Statistic::Clique { .. } => "clique",
            Statistic::Persecute { .. } => "persecute",
        }
    }
}

/// Unit in which a band is expressed; the factor multiplies both the
/// center and the half-width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandScale {
    /// Multiples of n.
    N,
    /// Multiples of sqrt(n).
    SqrtN,
    /// Multiples of sqrt(n ln n), the shape of the concentration bounds.
    SqrtNLogN,
    /// Raw values.
    Absolute,
}

impl BandScale {
    pub fn factor(&self, n: usize) -> f64 {
        let nf = n as f64;
        match self {
            BandScale::N => nf,
            BandScale::SqrtN => nf.sqrt(),
            BandScale::SqrtNLogN => (nf * nf.max(2.0).ln()).sqrt(),
            BandScale::Absolute => 1.0,
        }
    }
}

/// Acceptance band for the sample mean.
#[derive(Debug, Clone, Copy)]
pub struct BandSpec {
    pub center: f64,
    pub half_width: f64,
    pub scale: BandScale,
}

/// One Monte Carlo experiment.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub n: usize,
    pub r: usize,
    pub samples: usize,
    pub seed: u64,
    pub statistic: Statistic,
    pub band: Option<BandSpec>,
}

/// Results of a run: exact per-sample values plus float summaries.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub n: usize,
    pub r: usize,
    pub samples: usize,
    pub seed: u64,
    pub statistic: String,
    pub values: Vec<ExactRatio>,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub center: Option<f64>,
    pub half_width: Option<f64>,
    pub pass: Option<bool>,
}

fn sample_value(spec: &ExperimentSpec, index: usize) -> Result<ExactRatio> {
    let seed = SeedSpec::new(spec.seed, index as u64);
    match &spec.statistic {
        Statistic::SockAverage => Ok(sockuence(&random_r_matching(spec.n, spec.r, seed)).avg),
        Statistic::SockMax => Ok(whole(crate::sockproc::sock_number(&random_r_matching(
            spec.n, spec.r, seed,
        )) as u64)),
        Statistic::DyckHeight => Ok(whole(random_dyck(spec.n, seed).height() as u64)),
        Statistic::Clique { allowed } => {
            let m = random_r_matching(spec.n, spec.r, seed);
            Ok(whole(z_clique(&m, allowed)? as u64))
        }
        Statistic::Persecute { family, alphabet } => {
            let w = random_word(spec.n, *alphabet, seed);
            Ok(whole(y_stat(&w, family)? as u64))
        }
    }
}

/// Execute a spec. Samples are distributed over the current rayon pool;
/// results are bit-identical for any worker count.
pub fn run(spec: &ExperimentSpec) -> Result<RunSummary> {
    if spec.samples < 1 {
        return Err(Error::OutOfRange("samples must be at least 1".into()));
    }
    match &spec.statistic {
        Statistic::SockAverage | Statistic::SockMax | Statistic::Clique { .. } => {
            if spec.r < 2 {
                return Err(Error::OutOfRange("r must be at least 2".into()));
            }
            if spec.n < 1 {
                return Err(Error::OutOfRange("n must be at least 1".into()));
            }
        }
        Statistic::Persecute { alphabet, .. } => {
            if *alphabet < 1 {
                return Err(Error::OutOfRange("alphabet must be nonempty".into()));
            }
        }
        Statistic::DyckHeight => {}
    }

    let values: Vec<ExactRatio> = (0..spec.samples)
        .into_par_iter()
        .map(|i| sample_value(spec, i))
        .collect::<Result<Vec<_>>>()?;

    let exact_sum: ExactRatio = values.iter().cloned().sum();
    let mean = (exact_sum / whole(spec.samples as u64))
        .to_f64()
        .expect("finite mean");
    let floats: Vec<f64> = values.iter().map(|v| v.to_f64().expect("finite")).collect();
    let min = floats.iter().copied().fold(f64::INFINITY, f64::min);
    let max = floats.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let std = if spec.samples < 2 {
        0.0
    } else {
        let ss: f64 = floats.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (spec.samples as f64 - 1.0)).sqrt()
    };

    let (center, half_width, pass) = match spec.band {
        None => (None, None, None),
        Some(band) => {
            let f = band.scale.factor(spec.n);
            let center = band.center * f;
            let half_width = band.half_width * f;
            (
                Some(center),
                Some(half_width),
                Some((mean - center).abs() <= half_width),
            )
        }
    };

    Ok(RunSummary {
        n: spec.n,
        r: spec.r,
        samples: spec.samples,
        seed: spec.seed,
        statistic: spec.statistic.name().to_string(),
        values,
        mean,
        std,
        min,
        max,
        center,
        half_width,
        pass,
    })
}

/// Run the same experiment across a grid of sizes. Bands scale with n
/// through their [`BandScale`].
pub fn sweep(template: &ExperimentSpec, grid: &[usize]) -> Result<Vec<RunSummary>> {
    if grid.is_empty() {
        return Err(Error::OutOfRange("sweep grid must be nonempty".into()));
    }
    grid.iter()
        .map(|&n| {
            let mut spec = template.clone();
            spec.n = n;
            run(&spec)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn avg_spec(n: usize, samples: usize) -> ExperimentSpec {
        ExperimentSpec {
            n,
            r: 2,
            samples,
            seed: 42,
            statistic: Statistic::SockAverage,
            band: None,
        }
    }

    #[test]
    fn deterministic_across_pool_sizes() {
        let spec = avg_spec(50, 64);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run(&spec).unwrap());
        let many = rayon::ThreadPoolBuilder::new()
            .num_threads(8)
            .build()
            .unwrap()
            .install(|| run(&spec).unwrap());
        assert_eq!(single.values, many.values);
        assert_eq!(single.mean, many.mean);
    }

    #[test]
    fn mean_is_unbiased_at_small_sizes() {
        // exact E[avg] at n = 20 is 41/6
        let summary = run(&avg_spec(20, 100_000)).unwrap();
        let expect = ratio(41, 6).to_f64().unwrap();
        let se = summary.std / (summary.samples as f64).sqrt();
        assert!(
            (summary.mean - expect).abs() <= 4.0 * se,
            "mean {} vs {} (se {})",
            summary.mean,
            expect,
            se
        );
        // crude sub-Gaussian sanity bound on the spread
        let r = 2.0f64;
        assert!(summary.std <= 4.0 * (r - 1.0) * (r * 20.0).sqrt());
    }

    #[test]
    fn bands_pass_and_fail() {
        let mut spec = avg_spec(100, 50);
        spec.band = Some(BandSpec {
            center: 1.0 / 3.0,
            half_width: 0.05,
            scale: BandScale::N,
        });
        let summary = run(&spec).unwrap();
        assert_eq!(summary.pass, Some(true));

        spec.band = Some(BandSpec {
            center: 0.9,
            half_width: 0.001,
            scale: BandScale::N,
        });
        assert_eq!(run(&spec).unwrap().pass, Some(false));
    }

    #[test]
    fn sweep_produces_one_summary_per_size() {
        let summaries = sweep(&avg_spec(10, 20), &[10, 20, 40]).unwrap();
        assert_eq!(summaries.len(), 3);
        assert_eq!(summaries[2].n, 40);
        assert!(sweep(&avg_spec(10, 20), &[]).is_err());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(run(&avg_spec(0, 10)).is_err());
        assert!(run(&avg_spec(10, 0)).is_err());
        let bad = ExperimentSpec {
            n: 10,
            r: 2,
            samples: 5,
            seed: 1,
            statistic: Statistic::Persecute {
                family: vec![Word::new(vec![0, 0])],
                alphabet: 0,
            },
            band: None,
        };
        assert!(run(&bad).is_err());
    }

    #[test]
    fn persecute_statistic_runs() {
        let spec = ExperimentSpec {
            n: 60,
            r: 2,
            samples: 16,
            seed: 9,
            statistic: Statistic::Persecute {
                family: vec![Word::new(vec![0, 0])],
                alphabet: 5,
            },
            band: None,
        };
        let summary = run(&spec).unwrap();
        assert_eq!(summary.values.len(), 16);
        assert!(summary.min >= 0.0);
    }
}
