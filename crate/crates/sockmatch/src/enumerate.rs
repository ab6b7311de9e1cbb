//! Exhaustive iteration over all ordered r-matchings of `[rn]`, sock-number
//! distributions, and a brute-force oracle for pairwise sub-matching
//! maxima.
//!
//! Enumeration is streaming: the visitor sees one matching at a time in a
//! reused buffer, so even millions of matchings need constant memory. A
//! budget guards against accidental combinatorial explosions.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{matching_count, ExactInt};
use crate::matching::OrderedMatching;
use crate::trace::DyckTrace;

/// Default enumeration budget, in matchings.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Cap on the number of edges accepted by [`brute_max_subset`].
pub const BRUTE_SUBSET_CAP: usize = 20;

/// Counts of matchings by sock number: `counts[j] = s_j(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SockTable {
    pub n: usize,
    pub r: usize,
    pub counts: BTreeMap<usize, ExactInt>,
}

impl SockTable {
    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }

    /// Number of matchings with sock number at most `j`.
    pub fn cumulative(&self, j: usize) -> ExactInt {
        self.counts
            .iter()
            .filter(|(&k, _)| k <= j)
            .map(|(_, v)| v)
            .sum()
    }
}

struct Enumerator<'a, F: FnMut(&OrderedMatching)> {
    rn: usize,
    r: usize,
    used: Vec<bool>,
    m: OrderedMatching,
    visited: u64,
    visit: &'a mut F,
}

impl<F: FnMut(&OrderedMatching)> Enumerator<'_, F> {
    /// Open the next block at the smallest free position at or after
    /// `scan_from`; positions below it are always already used.
    fn next_block(&mut self, scan_from: usize) {
        match (scan_from..=self.rn).find(|&p| !self.used[p]) {
            None => {
                self.visited += 1;
                (self.visit)(&self.m);
            }
            Some(p) => {
                self.used[p] = true;
                self.m.blocks.push(p);
                self.extend_block(p, p + 1, self.r - 1);
                self.m.blocks.pop();
                self.used[p] = false;
            }
        }
    }

    fn extend_block(&mut self, leader: usize, start: usize, remaining: usize) {
        if remaining == 0 {
            self.next_block(leader + 1);
            return;
        }
        for q in start..=self.rn {
            if self.used[q] {
                continue;
            }
            self.used[q] = true;
            self.m.blocks.push(q);
            self.extend_block(leader, q + 1, remaining - 1);
            self.m.blocks.pop();
            self.used[q] = false;
        }
    }
}

/// Visit every ordered r-matching of `[rn]` exactly once, in canonical
/// order, within the given budget. Returns the number of matchings
/// visited. The closure borrows a buffer that is reused between visits;
/// clone the matching if it must outlive the call.
pub fn for_each_matching_with_budget<F: FnMut(&OrderedMatching)>(
    n: usize,
    r: usize,
    budget: u64,
    mut visit: F,
) -> Result<u64> {
    if r < 2 {
        return Err(Error::InvalidMatching(format!(
            "block size must be at least 2, got {r}"
        )));
    }
    let needed = matching_count(n as u64, r as u64);
    if needed.to_u64().is_none_or(|c| c > budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let rn = r * n;
    let mut e = Enumerator {
        rn,
        r,
        used: vec![false; rn + 1],
        m: OrderedMatching::from_flat_unchecked(r, Vec::with_capacity(rn)),
        visited: 0,
        visit: &mut visit,
    };
    e.next_block(1);
    Ok(e.visited)
}

/// [`for_each_matching_with_budget`] with the default budget.
pub fn for_each_matching<F: FnMut(&OrderedMatching)>(n: usize, r: usize, visit: F) -> Result<u64> {
    for_each_matching_with_budget(n, r, DEFAULT_BUDGET, visit)
}

/// Visit every Dyck sequence of semilength `n` exactly once, in
/// lexicographic order with up-steps first.
pub fn for_each_dyck<F: FnMut(&DyckTrace)>(n: usize, mut visit: F) {
    fn rec<F: FnMut(&DyckTrace)>(
        t: &mut DyckTrace,
        ups: usize,
        height: usize,
        n: usize,
        f: &mut F,
    ) {
        if t.steps.len() == 2 * n {
            f(t);
            return;
        }
        if ups < n {
            t.steps.push(1);
            rec(t, ups + 1, height + 1, n, f);
            t.steps.pop();
        }
        if height > 0 {
            t.steps.push(-1);
            rec(t, ups, height - 1, n, f);
            t.steps.pop();
        }
    }
    let mut t = DyckTrace {
        steps: Vec::with_capacity(2 * n),
    };
    rec(&mut t, 0, 0, n, &mut visit);
}

/// Exact sock-number distribution by exhaustive enumeration.
pub fn sock_distribution_with_budget(n: usize, r: usize, budget: u64) -> Result<SockTable> {
    let rn = r * n;
    // Sock numbers cannot exceed (r-1) * n.
    let mut tally = vec![0u64; (r - 1) * n + 1];
    let mut owner = vec![0usize; rn + 1];
    let mut remaining = vec![0usize; n];
    for_each_matching_with_budget(n, r, budget, |m| {
        for (i, block) in m.blocks().enumerate() {
            for &p in block {
                owner[p] = i;
            }
            remaining[i] = r;
        }
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
        tally[y] += 1;
    })?;
    let counts = tally
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(j, c)| (j, ExactInt::from(c)))
        .collect();
    Ok(SockTable { n, r, counts })
}

/// [`sock_distribution_with_budget`] with the default budget.
pub fn sock_distribution(n: usize, r: usize) -> Result<SockTable> {
    sock_distribution_with_budget(n, r, DEFAULT_BUDGET)
}

/// Exact maximum size of a sub-matching whose blocks pairwise satisfy
/// `compatible`. Branch-and-bound over the compatibility graph; intended
/// as an independent oracle for the specialized clique routines, so
/// clarity beats speed. Limited to [`BRUTE_SUBSET_CAP`] edges.
pub fn brute_max_subset<P>(m: &OrderedMatching, compatible: P) -> Result<usize>
where
    P: Fn(&[usize], &[usize]) -> bool,
{
    let n = m.n();
    if n > BRUTE_SUBSET_CAP {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: BRUTE_SUBSET_CAP,
        });
    }
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if compatible(m.block(i), m.block(j)) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut best = 0usize;
    // Candidates are always above the last chosen vertex, so each subset
    // is explored once.
    fn grow(adj: &[u32], cand: u32, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, rest & adj[v], size + 1, best);
        }
    }
    let all = ((1u64 << n) - 1) as u32;
    grow(&adj, all, 0, &mut best);
    Ok(best)
}
