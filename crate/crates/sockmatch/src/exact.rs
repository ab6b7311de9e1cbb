//! Arbitrary-precision integers and rationals plus the handful of counting
//! primitives everything else is built on.
//!
//! All counts and expectations in this crate are exact; floating point only
//! appears in Monte Carlo summaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision integer, stored exactly.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (guaranteed by the underlying representation).
pub type ExactRatio = BigRational;

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Falling factorial `(base)_count = base (base-1) ... (base-count+1)`.
///
/// Returns 1 for `count = 0` and 0 whenever `count > base`.
pub fn falling_factorial(base: u64, count: u64) -> ExactInt {
    if count > base {
        return ExactInt::zero();
    }
    let mut acc = ExactInt::one();
    for i in 0..count {
        acc *= base - i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` computed multiplicatively in exact
/// integers; every intermediate quotient is itself a binomial, so the
/// divisions are exact.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// The odd double factorial `(2n-1)!! = 1 * 3 * ... * (2n-1)`, which counts
/// perfect matchings of `[2n]`.
pub fn odd_double_factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 1..=n {
        acc *= 2 * i - 1;
    }
    acc
}

/// The n-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactInt {
    binomial(2 * n, n) / (n + 1)
}

/// Number of ordered r-matchings of `[rn]`, i.e. `(rn)! / (r!^n n!)`.
///
/// Computed as a product of binomials: the smallest uncovered point picks
/// its `r - 1` partners among the remaining points, block by block.
pub fn matching_count(n: u64, r: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for m in 1..=n {
        acc *= binomial(m * r - 1, r - 1);
    }
    acc
}

/// Exact rational `num / den`.
pub fn ratio(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRatio {
    ExactRatio::new(num.into(), den.into())
}

/// Exact rational with value `n`.
pub fn whole(n: impl Into<ExactInt>) -> ExactRatio {
    ExactRatio::from_integer(n.into())
}
