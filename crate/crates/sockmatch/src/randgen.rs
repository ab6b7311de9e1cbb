//! Seeded, reproducible sampling of matchings, Dyck sequences, and words.
//!
//! Reproducibility contract: every sample is drawn from a ChaCha8 generator
//! whose 256-bit key is expanded from `master_seed` by `seed_from_u64` (a
//! SplitMix64 expansion fixed by the `rand` crate) and whose ChaCha stream
//! counter is set to `stream_index`. Distinct stream indices give
//! statistically independent streams, so sample `i` of an experiment is the
//! same no matter how samples are distributed over threads.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matching::OrderedMatching;
use crate::trace::DyckTrace;
use crate::word::Word;

/// A `(master_seed, stream_index)` pair naming one RNG stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl SeedSpec {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        SeedSpec {
            master_seed,
            stream_index,
        }
    }

    /// The generator this spec names. The mapping is pure: the same spec
    /// always yields the same generator state.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_index);
        rng
    }
}

fn fisher_yates(items: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// Uniform ordered r-matching of `[rn]`: shuffle `1..=rn`, chop into
/// consecutive r-blocks, and canonicalize. Every matching arises from
/// exactly `r!^n n!` permutations, so the result is uniform.
pub fn random_r_matching(n: usize, r: usize, seed: SeedSpec) -> OrderedMatching {
    assert!(r >= 2, "matchings need block size r >= 2");
    let rn = r * n;
    let mut points: Vec<usize> = (1..=rn).collect();
    let mut rng = seed.rng();
    fisher_yates(&mut points, &mut rng);
    for block in points.chunks_exact_mut(r) {
        block.sort_unstable();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&b| points[b * r]);
    let mut flat = Vec::with_capacity(rn);
    for b in order {
        flat.extend_from_slice(&points[b * r..(b + 1) * r]);
    }
    OrderedMatching::from_flat_unchecked(r, flat)
}

/// Uniform Dyck sequence of semilength `n` by the cycle lemma: shuffle
/// `n` up-steps and `n + 1` down-steps; exactly one rotation keeps every
/// proper prefix sum nonnegative, and dropping its final step (the extra
/// down-step) leaves a Dyck sequence. Each Dyck sequence corresponds to
/// exactly `2n + 1` shuffles, so the output is uniform without rejection.
pub fn random_dyck(n: usize, seed: SeedSpec) -> DyckTrace {
    if n == 0 {
        return DyckTrace::from_steps_unchecked(Vec::new());
    }
    let m = 2 * n + 1;
    let mut steps: Vec<i8> = Vec::with_capacity(m);
    steps.extend(std::iter::repeat_n(1i8, n));
    steps.extend(std::iter::repeat_n(-1i8, n + 1));
    let mut rng = seed.rng();
    for i in (1..m).rev() {
        let j = rng.random_range(0..=i);
        steps.swap(i, j);
    }
    // First position of the minimal prefix sum; the good rotation starts
    // right after it.
    let mut sum = 0i64;
    let mut min = i64::MAX;
    let mut argmin = 0usize;
    for (i, &s) in steps.iter().enumerate() {
        sum += s as i64;
        if sum < min {
            min = sum;
            argmin = i;
        }
    }
    let mut rotated = Vec::with_capacity(2 * n);
    rotated.extend_from_slice(&steps[argmin + 1..]);
    rotated.extend_from_slice(&steps[..argmin]);
    DyckTrace::from_steps_unchecked(rotated)
}

/// Word of length `n` with letters drawn i.i.d. uniformly from an alphabet
/// of size `k`.
pub fn random_word(n: usize, k: usize, seed: SeedSpec) -> Word {
    assert!(k >= 1, "alphabet must be nonempty");
    let mut rng = seed.rng();
    Word::new((0..n).map(|_| rng.random_range(0..k) as u32).collect())
}

/// Which of the two canonical matchings to build over a given trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceVariant {
    /// Pair each down-step with the most recent open up-step (stack
    /// discipline); edges nest, never cross.
    CrossingFree,
    /// Pair each down-step with the oldest open up-step (queue
    /// discipline); edges cross, never nest.
    NestingFree,
}

/// The unique crossing-free or nesting-free pair matching with trace `t`.
pub fn matching_with_trace(t: &DyckTrace, variant: TraceVariant) -> OrderedMatching {
    let mut open: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(t.n());
    for (i, &s) in t.steps().iter().enumerate() {
        let pos = i + 1;
        if s == 1 {
            open.push_back(pos);
        } else {
            let left = match variant {
                TraceVariant::CrossingFree => open.pop_back().expect("valid trace"),
                TraceVariant::NestingFree => open.pop_front().expect("valid trace"),
            };
            pairs.push((left, pos));
        }
    }
    pairs.sort_unstable();
    let flat = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
    OrderedMatching::from_flat_unchecked(2, flat)
}
