//! Exact closed forms for the sock process on a uniform random r-matching,
//! height-bounded Dyck counting, trace multiplicities, and the explicitly
//! known sock-number counts.
//!
//! Everything here is exact arithmetic except the two asymptotic helpers,
//! whose values are irrational for r > 2.

use num_traits::{One, Zero};

use crate::enumerate::SockTable;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, falling_factorial, ratio, whole, ExactInt, ExactRatio};
use crate::trace::DyckTrace;

/// Expected floor count after `k` pulls from a uniform random r-matching
/// of `[rn]`:
///
/// `E[X_k] = k - r * C(k, r) / C(rn - 1, r - 1)`.
///
/// Exact for every `1 <= k <= rn`; the value at `k = rn` is 0.
pub fn expected_xk(n: usize, r: usize, k: usize) -> Result<ExactRatio> {
    check_nr(n, r)?;
    let rn = r * n;
    if k < 1 || k > rn {
        return Err(Error::OutOfRange(format!("k = {k} not in 1..={rn}")));
    }
    let num = ExactInt::from(r as u64) * binomial(k as u64, r as u64);
    let den = binomial((rn - 1) as u64, (r - 1) as u64);
    Ok(whole(k as u64) - ExactRatio::new(num, den))
}

/// Expected average floor count `E[X-bar] = (r-1)(rn+1) / (2(r+1))`.
pub fn expected_avg(n: usize, r: usize) -> Result<ExactRatio> {
    check_nr(n, r)?;
    Ok(ratio(
        (r as u64 - 1) * (r as u64 * n as u64 + 1),
        2 * (r as u64 + 1),
    ))
}

/// Expected average edge length `E[L-bar] = r * E[X-bar]`.
pub fn expected_avg_length(n: usize, r: usize) -> Result<ExactRatio> {
    Ok(expected_avg(n, r)? * whole(r as u64))
}

/// The constant `R = (r - 1) / r^(1/(r-1))`, the slope of the asymptotic
/// maximum floor count.
pub fn asymptotic_constant(r: usize) -> f64 {
    let rf = r as f64;
    (rf - 1.0) / rf.powf(1.0 / (rf - 1.0))
}

/// Cut at which the expected floor count peaks, `ceil(r^((r-2)/(r-1)) n)`.
/// The true discrete argmax can differ by one in either direction.
pub fn argmax_cut(n: usize, r: usize) -> usize {
    let rf = r as f64;
    let x0 = rf.powf((rf - 2.0) / (rf - 1.0)) * n as f64;
    x0.ceil() as usize
}

/// First-order approximation of the maximum floor count, `R * n`. For
/// pairs this is `n / 2`.
pub fn asymptotic_max(n: usize, r: usize) -> f64 {
    asymptotic_constant(r) * n as f64
}

/// All per-cut expectations for one matching size, with the peak location.
#[derive(Debug, Clone)]
pub struct ExpectationProfile {
    pub n: usize,
    pub r: usize,
    /// `E[X_k]` for `k = 1..=rn-1`.
    pub per_cut: Vec<ExactRatio>,
    /// Analytic peak cut, clamped to `1..=rn-1`.
    pub argmax_cut: usize,
    /// The slope constant `R`.
    pub asymptotic_constant: f64,
}

pub fn expectation_profile(n: usize, r: usize) -> Result<ExpectationProfile> {
    check_nr(n, r)?;
    let rn = r * n;
    let per_cut = (1..rn)
        .map(|k| expected_xk(n, r, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExpectationProfile {
        n,
        r,
        per_cut,
        argmax_cut: argmax_cut(n, r).clamp(1, rn - 1),
        asymptotic_constant: asymptotic_constant(r),
    })
}

/// Number of Dyck sequences of semilength `n` with height at most `j`,
/// by the lattice-path recurrence: walk 2n steps, never leave the strip
/// `0..=j`.
pub fn dyck_count_height_leq(n: usize, j: usize) -> ExactInt {
    if n == 0 {
        return ExactInt::one();
    }
    let cap = j.min(n);
    let mut level = vec![ExactInt::zero(); cap + 1];
    level[0] = ExactInt::one();
    let mut next = vec![ExactInt::zero(); cap + 1];
    for _ in 0..2 * n {
        for h in 0..=cap {
            let mut v = ExactInt::zero();
            if h > 0 {
                v += &level[h - 1];
            }
            if h < cap {
                v += &level[h + 1];
            }
            next[h] = v;
        }
        std::mem::swap(&mut level, &mut next);
    }
    std::mem::take(&mut level[0])
}

/// Number of matchings sharing the trace `t`: with run lengths
/// `l_1, r_1, l_2, r_2, ...` the count is the product of falling
/// factorials `(l_1)_{r_1} (l_1 + l_2 - r_1)_{r_2} ...`, one factor per
/// down-run, taken over the currently open up-steps.
pub fn trace_multiplicity(t: &DyckTrace) -> ExactInt {
    let mut open = 0u64;
    let mut product = ExactInt::one();
    for (i, run) in t.runs().into_iter().enumerate() {
        if i % 2 == 0 {
            open += run as u64;
        } else {
            product *= falling_factorial(open, run as u64);
            open -= run as u64;
        }
    }
    product
}

/// The sock-number counts known in closed form for pair matchings:
/// `s_1 = 1`, `s_2 = 3^(n-1) - 1`, `s_(n-1) = (n-1)^2 (n-1)!`, and
/// `s_n = n!`. For `n <= 4` this determines the whole table.
pub fn closed_sock_counts(n: usize) -> Result<SockTable> {
    if n < 1 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let mut counts = std::collections::BTreeMap::new();
    counts.insert(1, ExactInt::one());
    if n >= 2 {
        counts.insert(2, ExactInt::from(3u32).pow(n as u32 - 1) - 1);
        let nm1 = (n - 1) as u64;
        counts.insert(n - 1, ExactInt::from(nm1 * nm1) * factorial(nm1));
        counts.insert(n, factorial(n as u64));
    }
    Ok(SockTable { n, r: 2, counts })
}

fn check_nr(n: usize, r: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if r < 2 {
        return Err(Error::OutOfRange("r must be at least 2".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{for_each_dyck, for_each_matching};
    use crate::exact::{catalan, odd_double_factorial};

    #[test]
    fn expected_xk_examples() {
        assert_eq!(expected_xk(1, 2, 1).unwrap(), whole(1));
        assert_eq!(expected_xk(2, 2, 2).unwrap(), ratio(4, 3));
        for (n, r) in [(1, 2), (3, 2), (2, 3), (2, 5)] {
            assert_eq!(expected_xk(n, r, r * n).unwrap(), whole(0));
        }
        assert!(expected_xk(2, 2, 0).is_err());
        assert!(expected_xk(2, 2, 5).is_err());
    }

    #[test]
    fn expected_avg_examples() {
        assert_eq!(expected_avg(1, 2).unwrap(), ratio(1, 2));
        assert_eq!(expected_avg(3, 2).unwrap(), ratio(7, 6));
        for n in 1..=6usize {
            // r = 3 specializes to (3n + 1) / 4
            assert_eq!(expected_avg(n, 3).unwrap(), ratio(3 * n as u64 + 1, 4));
        }
    }

    #[test]
    fn expected_avg_length_examples() {
        assert_eq!(expected_avg_length(1, 2).unwrap(), whole(1));
        assert_eq!(expected_avg_length(3, 2).unwrap(), ratio(7, 3));
        // r * (rn + 1)(r - 1) / (2(r + 1)) at n = 2, r = 3
        assert_eq!(expected_avg_length(2, 3).unwrap(), ratio(21, 4));
    }

    #[test]
    fn per_cut_sums_match_average() {
        for r in 2..=5usize {
            for n in 1..=50usize {
                let rn = r * n;
                let mut sum = whole(0);
                for k in 1..=rn {
                    sum += expected_xk(n, r, k).unwrap();
                }
                assert_eq!(
                    sum,
                    expected_avg(n, r).unwrap() * whole(rn as u64),
                    "n = {n}, r = {r}"
                );
            }
        }
    }

    #[test]
    fn argmax_examples() {
        for n in [1usize, 10, 100] {
            assert_eq!(argmax_cut(n, 2), n);
            assert!((asymptotic_max(n, 2) - n as f64 / 2.0).abs() < 1e-12);
        }
        assert!((asymptotic_constant(3) - 2.0 * 3f64.sqrt() / 3.0).abs() < 1e-12);

        // analytic peak is within one cut of the discrete argmax
        let profile = expectation_profile(100, 2).unwrap();
        let (best_k, _) = profile
            .per_cut
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1))
            .unwrap();
        let diff = (best_k as i64 + 1 - profile.argmax_cut as i64).abs();
        assert!(
            diff <= 1,
            "discrete argmax {} vs k0 {}",
            best_k + 1,
            profile.argmax_cut
        );
    }

    #[test]
    fn height_counting_examples() {
        assert_eq!(dyck_count_height_leq(3, 3), catalan(3));
        assert_eq!(dyck_count_height_leq(3, 7), catalan(3));
        assert_eq!(dyck_count_height_leq(3, 2), ExactInt::from(4));
        for n in 1..=9usize {
            assert_eq!(dyck_count_height_leq(n, 1), ExactInt::one());
            assert_eq!(
                dyck_count_height_leq(n, 2),
                ExactInt::from(2u32).pow(n as u32 - 1)
            );
        }
        assert_eq!(dyck_count_height_leq(0, 0), ExactInt::one());
        assert_eq!(dyck_count_height_leq(2, 0), ExactInt::zero());
    }

    #[test]
    fn height_counting_matches_brute_force() {
        for n in 0..=12usize {
            let mut by_height = vec![0u64; n + 1];
            for_each_dyck(n, |t| by_height[t.height()] += 1);
            for j in 0..=n {
                let brute: u64 = by_height[..=j].iter().sum();
                assert_eq!(
                    dyck_count_height_leq(n, j),
                    ExactInt::from(brute),
                    "n = {n}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let t = DyckTrace::new(vec![1, 1, 1, -1, 1, -1, -1, -1]).unwrap();
        assert_eq!(trace_multiplicity(&t), ExactInt::from(18));

        let sawtooth = DyckTrace::new(vec![1, -1, 1, -1, 1, -1]).unwrap();
        assert_eq!(trace_multiplicity(&sawtooth), ExactInt::one());

        for n in 0..=7usize {
            let mut sum = ExactInt::zero();
            for_each_dyck(n, |t| sum += trace_multiplicity(t));
            assert_eq!(sum, odd_double_factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn multiplicity_counts_matchings_with_that_trace() {
        for n in 1..=5usize {
            let mut census: std::collections::HashMap<DyckTrace, u64> =
                std::collections::HashMap::new();
            for_each_matching(n, 2, |m| {
                *census.entry(m.dyck_trace().unwrap()).or_insert(0) += 1;
            })
            .unwrap();
            for (t, count) in census {
                assert_eq!(trace_multiplicity(&t), ExactInt::from(count));
            }
        }
    }

    #[test]
    fn closed_counts_examples() {
        let t = closed_sock_counts(3).unwrap();
        assert_eq!(
            t.counts,
            [(1, 1), (2, 8), (3, 6)]
                .map(|(j, c)| (j, ExactInt::from(c)))
                .into()
        );
        assert_eq!(t.total(), ExactInt::from(15));

        let t = closed_sock_counts(4).unwrap();
        assert_eq!(
            t.counts,
            [(1, 1), (2, 26), (3, 54), (4, 24)]
                .map(|(j, c)| (j, ExactInt::from(c)))
                .into()
        );
        assert_eq!(t.total(), ExactInt::from(105));

        let t = closed_sock_counts(1).unwrap();
        assert_eq!(t.counts, [(1, ExactInt::one())].into());

        assert!(closed_sock_counts(0).is_err());
    }
}
