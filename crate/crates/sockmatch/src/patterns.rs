//! Two-edge patterns of r-matchings and clique-style extremal searches.
//!
//! Two disjoint r-blocks interleave in one of `C(2r, r) / 2` ways, each
//! recorded as a canonical two-letter word of length `2r` starting with A.
//! For pairs the three patterns are the alignment AABB, the nesting ABBA,
//! and the crossing ABAB.

use std::fmt;

use crate::error::{Error, Result};
use crate::matching::OrderedMatching;
use crate::word::GaussWord;

/// Cap on the number of edges accepted by the generic branch-and-bound
/// clique search.
pub const CLIQUE_EDGE_CAP: usize = 200;

/// Cap on the number of edges accepted by [`ex_free`].
pub const EX_FREE_CAP: usize = 20;

/// Node budget for [`collectable_probe`].
pub const PROBE_NODE_BUDGET: u64 = 5_000_000;

/// The interleaving type of two disjoint r-blocks: a word over {A, B} of
/// length `2r` with `r` of each letter, starting with A.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    r: usize,
    /// 0 for A, 1 for B.
    word: Vec<u8>,
}

impl Pattern {
    /// Parse a two-letter word and canonicalize so the first letter reads
    /// as A.
    pub fn parse(text: &str) -> Result<Self> {
        let g = GaussWord::parse(text)?;
        if g.n() != 2 {
            return Err(Error::InvalidPattern(format!(
                "expected exactly 2 letters, got {}",
                g.n()
            )));
        }
        // canonical Gauss words already start with letter 0
        Ok(Pattern {
            r: g.r(),
            word: g.letters().iter().map(|&l| l as u8).collect(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The alignment AA..BB.
    pub fn alignment(r: usize) -> Self {
        let mut word = vec![0u8; r];
        word.extend(vec![1u8; r]);
        Pattern { r, word }
    }

    /// The fully nested pattern AB..BA..A, one edge strictly inside the
    /// other. For pairs this is ABBA.
    pub fn nesting(r: usize) -> Self {
        let mut word = Vec::with_capacity(2 * r);
        word.push(0u8);
        word.extend(std::iter::repeat_n(1u8, r));
        word.extend(std::iter::repeat_n(0u8, r - 1));
        Pattern { r, word }
    }

    /// The crossing ABAB..AB.
    pub fn crossing(r: usize) -> Self {
        let word = (0..2 * r).map(|i| (i % 2) as u8).collect();
        Pattern { r, word }
    }

    /// Whether the pattern splits into `r` consecutive intervals, each
    /// containing one letter of each edge. Such intervals necessarily have
    /// size two, so this checks that every aligned pair of positions holds
    /// one A and one B.
    pub fn is_r_partite(&self) -> bool {
        self.word.chunks_exact(2).all(|c| c[0] != c[1])
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.word {
            write!(f, "{}", if l == 0 { 'A' } else { 'B' })?;
        }
        Ok(())
    }
}

/// Canonical pattern of two disjoint sorted r-tuples.
pub fn classify_pair(e1: &[usize], e2: &[usize]) -> Result<Pattern> {
    if e1.len() != e2.len() || e1.len() < 2 {
        return Err(Error::InvalidPattern(format!(
            "edges must share a size of at least 2, got {} and {}",
            e1.len(),
            e2.len()
        )));
    }
    let r = e1.len();
    for w in [e1, e2] {
        if !w.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidPattern(format!("edge {w:?} is not sorted")));
        }
    }
    let mut word = Vec::with_capacity(2 * r);
    let (mut i, mut j) = (0usize, 0usize);
    while i < r || j < r {
        if j == r || (i < r && e1[i] < e2[j]) {
            word.push(0u8);
            i += 1;
        } else if i == r || e2[j] < e1[i] {
            word.push(1u8);
            j += 1;
        } else {
            return Err(Error::InvalidPattern(format!(
                "edges overlap at position {}",
                e1[i]
            )));
        }
    }
    if word[0] == 1 {
        for l in &mut word {
            *l = 1 - *l;
        }
    }
    Ok(Pattern { r, word })
}

/// All `C(2r, r) / 2` r-patterns, in lexicographic order.
pub fn all_patterns(r: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    let mut word = vec![0u8];
    fn rec(word: &mut Vec<u8>, a: usize, b: usize, r: usize, out: &mut Vec<Pattern>) {
        if word.len() == 2 * r {
            out.push(Pattern {
                r,
                word: word.clone(),
            });
            return;
        }
        if a < r {
            word.push(0);
            rec(word, a + 1, b, r, out);
            word.pop();
        }
        if b < r {
            word.push(1);
            rec(word, a, b + 1, r, out);
            word.pop();
        }
    }
    rec(&mut word, 1, 0, r, &mut out);
    out
}

/// The `2^(r-1)` r-partite r-patterns.
pub fn r_partite_patterns(r: usize) -> Vec<Pattern> {
    all_patterns(r)
        .into_iter()
        .filter(Pattern::is_r_partite)
        .collect()
}

/// Maximum number of edges in a sub-matching whose edge pairs all realize
/// patterns from `allowed`. Pair matchings with a single allowed pattern
/// use dedicated chain algorithms; everything else goes through exact
/// branch-and-bound on the compatibility graph, capped at
/// [`CLIQUE_EDGE_CAP`] edges.
pub fn z_clique(m: &OrderedMatching, allowed: &[Pattern]) -> Result<usize> {
    z_clique_with_cap(m, allowed, CLIQUE_EDGE_CAP)
}

pub fn z_clique_with_cap(m: &OrderedMatching, allowed: &[Pattern], cap: usize) -> Result<usize> {
    for p in allowed {
        if p.r() != m.r() {
            return Err(Error::InvalidPattern(format!(
                "pattern {p} has multiplicity {}, matching has {}",
                p.r(),
                m.r()
            )));
        }
    }
    let n = m.n();
    if n == 0 {
        return Ok(0);
    }
    if m.r() == 2 && allowed.len() == 1 {
        let p = &allowed[0];
        if *p == Pattern::alignment(2) {
            return Ok(alignment_chain(m));
        }
        if *p == Pattern::nesting(2) {
            return Ok(nesting_chain(m));
        }
        if *p == Pattern::crossing(2) {
            return Ok(crossing_clique(m));
        }
    }
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    let mut solver = CliqueSolver::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let p = classify_pair(m.block(i), m.block(j))?;
            if allowed.contains(&p) {
                solver.connect(i, j);
            }
        }
    }
    Ok(solver.solve())
}

/// Longest chain of pairwise aligned edges: sort by right end, greedily
/// take every edge starting after the last taken end.
fn alignment_chain(m: &OrderedMatching) -> usize {
    let mut edges: Vec<(usize, usize)> = m.blocks().map(|b| (b[1], b[0])).collect();
    edges.sort_unstable();
    let mut count = 0usize;
    let mut last_end = 0usize;
    for (right, left) in edges {
        if left > last_end {
            count += 1;
            last_end = right;
        }
    }
    count
}

/// Longest chain of pairwise nested edges: with edges sorted by left end,
/// this is the longest strictly decreasing run of right ends.
fn nesting_chain(m: &OrderedMatching) -> usize {
    // blocks are already sorted by left end
    let mut rights: Vec<usize> = m.blocks().map(|b| b[1]).collect();
    rights.reverse();
    longest_strictly_increasing(&rights)
}

/// Largest pairwise crossing family: all members straddle a common cut
/// with right ends increasing in left-end order, so scan every cut and
/// take the best increasing subsequence of straddling right ends.
fn crossing_clique(m: &OrderedMatching) -> usize {
    let rn = m.ground_size();
    let mut best = 0usize;
    let edges: Vec<(usize, usize)> = m.blocks().map(|b| (b[0], b[1])).collect();
    for cut in 1..rn {
        let straddling: Vec<usize> = edges
            .iter()
            .filter(|&&(l, r)| l <= cut && cut < r)
            .map(|&(_, r)| r)
            .collect();
        best = best.max(longest_strictly_increasing(&straddling));
    }
    best
}

fn longest_strictly_increasing(seq: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &x in seq {
        let idx = tails.partition_point(|&t| t < x);
        if idx == tails.len() {
            tails.push(x);
        } else {
            tails[idx] = x;
        }
    }
    tails.len()
}

/// Exact maximum clique on an explicit graph, after Cliquer: process
/// vertices from the back, remembering for each `i` the best clique inside
/// the tail `{i, ..., n-1}`, and stop a level as soon as it improves.
struct CliqueSolver {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    tail_best: Vec<usize>,
    best: usize,
    improved: bool,
}

impl CliqueSolver {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        CliqueSolver {
            n,
            words,
            adj: vec![0u64; n * words],
            tail_best: vec![0usize; n],
            best: 0,
            improved: false,
        }
    }

    fn connect(&mut self, i: usize, j: usize) {
        self.adj[i * self.words + j / 64] |= 1 << (j % 64);
        self.adj[j * self.words + i / 64] |= 1 << (i % 64);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn solve(&mut self) -> usize {
        let mut cand = vec![0u64; self.words];
        for i in (0..self.n).rev() {
            self.improved = false;
            // candidates: neighbors of i above i
            cand.copy_from_slice(self.row(i));
            for (w, word) in cand.iter_mut().enumerate() {
                if w < i / 64 {
                    *word = 0;
                } else if w == i / 64 {
                    *word &= !((1u64 << (i % 64)) - 1) & !(1u64 << (i % 64));
                }
            }
            self.expand(&cand, 1);
            self.tail_best[i] = self.best;
        }
        self.best
    }

    fn expand(&mut self, cand: &[u64], size: usize) {
        if size > self.best {
            self.best = size;
            self.improved = true;
        }
        let mut cand = cand.to_vec();
        loop {
            let remaining: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
            if remaining == 0 || size + remaining <= self.best {
                return;
            }
            // lowest candidate vertex
            let (w, word) = cand
                .iter()
                .enumerate()
                .find(|(_, &word)| word != 0)
                .map(|(w, word)| (w, *word))
                .unwrap();
            let v = w * 64 + word.trailing_zeros() as usize;
            if size + self.tail_best[v] <= self.best {
                return;
            }
            cand[w] &= !(1u64 << (v % 64));
            let mut next: Vec<u64> = cand.clone();
            for (nw, word) in next.iter_mut().enumerate() {
                *word &= self.row(v)[nw];
            }
            self.expand(&next, size + 1);
            if self.improved {
                return;
            }
        }
    }
}

/// Maximum size of a sub-matching containing no sub-matching order-
/// isomorphic to any member of `forbidden`. Exhaustive search with a
/// best-so-far bound, capped at [`EX_FREE_CAP`] edges.
pub fn ex_free(m: &OrderedMatching, forbidden: &[OrderedMatching]) -> Result<usize> {
    let n = m.n();
    if n > EX_FREE_CAP {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: EX_FREE_CAP,
        });
    }
    for f in forbidden {
        if f.r() != m.r() {
            return Err(Error::InvalidMatching(format!(
                "forbidden matching has block size {}, expected {}",
                f.r(),
                m.r()
            )));
        }
        if f.n() == 0 {
            return Err(Error::OutOfRange(
                "forbidden matchings must have at least one edge".into(),
            ));
        }
    }
    let forbidden_words: Vec<(usize, GaussWord)> =
        forbidden.iter().map(|f| (f.n(), f.to_word())).collect();

    // Does adding `last` to `chosen` complete a copy of some forbidden
    // matching? Only subsets through `last` need checking.
    fn completes_copy(
        m: &OrderedMatching,
        forbidden: &[(usize, GaussWord)],
        chosen: &[usize],
        last: usize,
    ) -> bool {
        for (f_edges, f_word) in forbidden {
            if *f_edges > chosen.len() + 1 {
                continue;
            }
            let mut subset = Vec::with_capacity(*f_edges);
            if pick_and_test(m, f_word, *f_edges - 1, chosen, 0, &mut subset, last) {
                return true;
            }
        }
        false
    }

    fn pick_and_test(
        m: &OrderedMatching,
        f_word: &GaussWord,
        need: usize,
        chosen: &[usize],
        from: usize,
        subset: &mut Vec<usize>,
        last: usize,
    ) -> bool {
        if need == 0 {
            let mut indices = subset.clone();
            indices.push(last);
            return m.induced(&indices).to_word() == *f_word;
        }
        for i in from..chosen.len() {
            subset.push(chosen[i]);
            if pick_and_test(m, f_word, need - 1, chosen, i + 1, subset, last) {
                subset.pop();
                return true;
            }
            subset.pop();
        }
        false
    }

    fn search(
        m: &OrderedMatching,
        forbidden: &[(usize, GaussWord)],
        chosen: &mut Vec<usize>,
        next: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if next == m.n() || chosen.len() + (m.n() - next) <= *best {
            return;
        }
        if !completes_copy(m, forbidden, chosen, next) {
            chosen.push(next);
            search(m, forbidden, chosen, next + 1, best);
            chosen.pop();
        }
        search(m, forbidden, chosen, next + 1, best);
    }

    let mut best = 0usize;
    search(m, &forbidden_words, &mut Vec::new(), 0, &mut best);
    Ok(best)
}

/// Search for a k-edge matching whose edge pairs all realize `p`. Finds a
/// witness or proves there is none for this `k`; it says nothing about
/// larger cliques. The word of the witness is grown letter by letter,
/// pruning any placement under which some pair of blocks stops being a
/// prefix of `p`.
pub fn collectable_probe(p: &Pattern, k: usize) -> Result<Option<OrderedMatching>> {
    if k == 0 {
        return Err(Error::OutOfRange("clique size k must be at least 1".into()));
    }
    let r = p.r();
    struct Probe<'a> {
        p: &'a [u8],
        r: usize,
        k: usize,
        occ: Vec<usize>,
        opened: usize,
        pair_len: Vec<usize>,
        word: Vec<usize>,
        nodes: u64,
    }
    impl Probe<'_> {
        fn pair_idx(&self, lo: usize, hi: usize) -> usize {
            lo * self.k + hi
        }

        /// Try to append a letter of block `b`; on success the pair states
        /// are updated and true is returned.
        fn place(&mut self, b: usize) -> bool {
            for other in 0..self.k {
                if other == b {
                    continue;
                }
                let (lo, hi) = (b.min(other), b.max(other));
                let len = self.pair_len[self.pair_idx(lo, hi)];
                let ch = if b == lo { 0 } else { 1 };
                if len == 2 * self.r || self.p[len] != ch {
                    // roll back the pairs already advanced
                    for prev in 0..other {
                        if prev == b {
                            continue;
                        }
                        let (lo, hi) = (b.min(prev), b.max(prev));
                        let idx = self.pair_idx(lo, hi);
                        self.pair_len[idx] -= 1;
                    }
                    return false;
                }
                let idx = self.pair_idx(lo, hi);
                self.pair_len[idx] += 1;
            }
            self.occ[b] += 1;
            if b == self.opened {
                self.opened += 1;
            }
            self.word.push(b);
            true
        }

        fn unplace(&mut self, b: usize) {
            self.word.pop();
            if self.occ[b] == 1 && b + 1 == self.opened {
                self.opened -= 1;
            }
            self.occ[b] -= 1;
            for other in 0..self.k {
                if other == b {
                    continue;
                }
                let (lo, hi) = (b.min(other), b.max(other));
                let idx = self.pair_idx(lo, hi);
                self.pair_len[idx] -= 1;
            }
        }

        fn dfs(&mut self) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > PROBE_NODE_BUDGET {
                return Err(Error::SearchBudgetExceeded(self.nodes));
            }
            if self.word.len() == self.k * self.r {
                return Ok(true);
            }
            let limit = (self.opened + 1).min(self.k);
            for b in 0..limit {
                if self.occ[b] == self.r {
                    continue;
                }
                if self.place(b) {
                    if self.dfs()? {
                        return Ok(true);
                    }
                    self.unplace(b);
                }
            }
            Ok(false)
        }
    }
    let mut probe = Probe {
        p: p.word(),
        r,
        k,
        occ: vec![0; k],
        opened: 0,
        pair_len: vec![0; k * k],
        word: Vec::with_capacity(k * r),
        nodes: 0,
    };
    if probe.dfs()? {
        let mut blocks = vec![Vec::with_capacity(r); k];
        for (pos, &b) in probe.word.iter().enumerate() {
            blocks[b].push(pos + 1);
        }
        Ok(Some(
            OrderedMatching::new(r, blocks).expect("witness is a valid matching"),
        ))
    } else {
        Ok(None)
    }
}
