//! The sock process.
//!
//! Pull the points of `[rn]` in order. Each pull puts one sock on the
//! floor; completing a block bundles its `r` socks away. The sockuence
//! records the floor count after every pull: `x_k` is the number of points
//! of `[k]` lying in blocks that straddle the cut `k`, weighted by how many
//! of their points are already in `[k]`. Equivalently
//! `x_k = k - r * #{blocks contained in [k]}`, so consecutive values differ
//! by `+1` or `1 - r`.

use crate::error::{Error, Result};
use crate::exact::{ratio, whole, ExactRatio};
use crate::matching::OrderedMatching;

/// The sockuence of a matching together with its two summary statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sockuence {
    /// `x_1, ..., x_rn`; the last entry is always 0.
    pub xs: Vec<usize>,
    /// The sock number `y = max_k x_k`.
    pub y: usize,
    /// The exact average `(x_1 + ... + x_rn) / (rn)`, zero for the empty
    /// matching.
    pub avg: ExactRatio,
}

/// Edge lengths `l(e) = (i_r - i_1) + ... + (i_r - i_{r-1})` for each block
/// `e = {i_1 < ... < i_r}`, plus their total and average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSummary {
    pub lengths: Vec<u64>,
    /// Equals the sum of the sockuence by double counting.
    pub total: u64,
    /// `total / n`, zero for the empty matching.
    pub avg: ExactRatio,
}

/// Compute the sockuence in one pass over the positions.
pub fn sockuence(m: &OrderedMatching) -> Sockuence {
    let rn = m.ground_size();
    let r = m.r();
    let owner = m.block_of_position();
    let mut remaining = vec![r; m.n()];
    let mut xs = Vec::with_capacity(rn);
    let mut x = 0usize;
    let mut y = 0usize;
    let mut sum = 0u64;
    #[allow(clippy::needless_range_loop)]
    for k in 1..=rn {
        let b = owner[k];
        x += 1;
        remaining[b] -= 1;
        if remaining[b] == 0 {
            x -= r;
        }
        if x > y {
            y = x;
        }
        sum += x as u64;
        xs.push(x);
    }
    let avg = if rn == 0 {
        whole(0)
    } else {
        ratio(sum, rn as u64)
    };
    Sockuence { xs, y, avg }
}

/// The sock number `y(M) = max_k x_k(M)`. For pair matchings this equals
/// the height of the Dyck trace and the size of the largest bipartite
/// sub-matching.
pub fn sock_number(m: &OrderedMatching) -> usize {
    let rn = m.ground_size();
    let r = m.r();
    let owner = m.block_of_position();
    let mut remaining = vec![r; m.n()];
    let mut x = 0usize;
    let mut y = 0usize;
    #[allow(clippy::needless_range_loop)]
    for k in 1..=rn {
        let b = owner[k];
        x += 1;
        remaining[b] -= 1;
        if remaining[b] == 0 {
            x -= r;
        }
        if x > y {
            y = x;
        }
    }
    y
}

/// Size of the largest sub-matching of a pair matching whose left ends all
/// precede its right ends, computed as the maximum number of edges
/// straddling a single cut.
pub fn largest_bipartite_submatching(m: &OrderedMatching) -> Result<usize> {
    if m.r() != 2 {
        return Err(Error::UnsupportedMultiplicity(m.r()));
    }
    // Edges straddling cut k: opened at or before k, not yet closed at k.
    let rn = m.ground_size();
    let mut delta = vec![0i64; rn + 2];
    for block in m.blocks() {
        delta[block[0]] += 1;
        delta[block[1]] -= 1;
    }
    let mut straddling = 0i64;
    let mut best = 0i64;
    #[allow(clippy::needless_range_loop)]
    for k in 1..=rn {
        straddling += delta[k];
        best = best.max(straddling);
    }
    Ok(best as usize)
}

/// Per-edge lengths, their total, and the average length.
pub fn edge_lengths(m: &OrderedMatching) -> LengthSummary {
    let r = m.r();
    let lengths: Vec<u64> = m
        .blocks()
        .map(|b| {
            let last = b[r - 1] as u64;
            b[..r - 1].iter().map(|&p| last - p as u64).sum()
        })
        .collect();
    let total: u64 = lengths.iter().sum();
    let avg = if lengths.is_empty() {
        whole(0)
    } else {
        ratio(total, lengths.len() as u64)
    };
    LengthSummary {
        lengths,
        total,
        avg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::word::GaussWord;

    fn matching(text: &str) -> OrderedMatching {
        GaussWord::parse(text).unwrap().to_matching()
    }

    #[test]
    fn worked_pair_examples() {
        let s = sockuence(&matching("ABBCAC"));
        assert_eq!(s.xs, vec![1, 2, 1, 2, 1, 0]);
        assert_eq!(s.y, 2);
        assert_eq!(s.avg, ratio(7, 6));

        let s = sockuence(&matching("ABCBAC"));
        assert_eq!(s.xs, vec![1, 2, 3, 2, 1, 0]);
        assert_eq!(s.y, 3);
        assert_eq!(s.avg, ratio(3, 2));
    }

    #[test]
    fn worked_triple_example() {
        let s = sockuence(&matching("AABCDDDCBCBA"));
        assert_eq!(s.xs, vec![1, 2, 3, 4, 5, 6, 4, 5, 6, 4, 2, 0]);
        assert_eq!(s.y, 6);
        assert_eq!(s.avg, ratio(7, 2));
    }

    #[test]
    fn sock_number_examples() {
        assert_eq!(sock_number(&matching("ABCCDBDA")), 3);
        // the unique sock number 1 matching
        assert_eq!(sock_number(&matching("AABBCCDD")), 1);
        // bipartite matchings reach n
        assert_eq!(sock_number(&matching("ABCDBADC")), 4);
        assert_eq!(sock_number(&OrderedMatching::empty(2)), 0);
    }

    #[test]
    fn bipartite_submatching_examples() {
        assert_eq!(largest_bipartite_submatching(&matching("ABAB")).unwrap(), 2);
        assert_eq!(largest_bipartite_submatching(&matching("AABB")).unwrap(), 1);
        assert_eq!(
            largest_bipartite_submatching(&matching("ABBCAC")).unwrap(),
            2
        );
        assert!(largest_bipartite_submatching(&matching("AAA")).is_err());
    }

    #[test]
    fn edge_length_examples() {
        let ls = edge_lengths(&matching("ABBCAC"));
        assert_eq!(ls.lengths, vec![4, 1, 2]);
        assert_eq!(ls.total, 7);
        assert_eq!(ls.avg, ratio(7, 3));

        assert_eq!(edge_lengths(&matching("AA")).total, 1);

        // consecutive triple {5,6,7} inside the r = 3 example
        let ls = edge_lengths(&matching("AABCDDDCBCBA"));
        assert_eq!(ls.lengths[3], 3);
    }

    #[test]
    fn totals_match_sockuence_sum() {
        for text in ["ABBCAC", "ABCBAC", "AABCDDDCBCBA", "ABCCDBDA"] {
            let m = matching(text);
            let s = sockuence(&m);
            let l = edge_lengths(&m);
            let xsum: u64 = s.xs.iter().map(|&x| x as u64).sum();
            assert_eq!(xsum, l.total, "double counting identity for {text}");
        }
    }

    #[test]
    fn step_rule() {
        let m = matching("AABCDDDCBCBA");
        let s = sockuence(&m);
        let r = m.r() as i64;
        let mut prev = 0i64;
        for &x in &s.xs {
            let d = x as i64 - prev;
            assert!(d == 1 || d == 1 - r, "step {d}");
            prev = x as i64;
        }
        assert_eq!(prev, 0);
    }
}
