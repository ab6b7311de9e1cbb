//! Ordered r-matchings of the ground set `[rn] = {1, ..., rn}`.
//!
//! An ordered r-matching is a partition of `[rn]` into `n` blocks of size
//! `r`. Positions are 1-based. The canonical form stores each block in
//! ascending order and lists blocks by their smallest element, which makes
//! the matching interchangeable with its canonical Gauss word.

use std::fmt;

use crate::error::{Error, Result};
use crate::trace::DyckTrace;
use crate::word::GaussWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedMatching {
    r: usize,
    /// Concatenated blocks, each sorted ascending, ordered by smallest
    /// element. Length is `r * n`.
    pub(crate) blocks: Vec<usize>,
}

impl OrderedMatching {
    /// Build a matching from its blocks, canonicalizing their internal and
    /// relative order. Every position in `1..=r*blocks.len()` must be
    /// covered exactly once.
    pub fn new(r: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidMatching(format!(
                "block size must be at least 2, got {r}"
            )));
        }
        let n = blocks.len();
        let rn = r * n;
        let mut seen = vec![false; rn + 1];
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(n);
        for block in blocks {
            if block.len() != r {
                return Err(Error::InvalidMatching(format!(
                    "block {block:?} has {} elements, expected {r}",
                    block.len()
                )));
            }
            let mut b = block;
            b.sort_unstable();
            for &p in &b {
                if p == 0 || p > rn {
                    return Err(Error::InvalidMatching(format!(
                        "position {p} outside 1..={rn}"
                    )));
                }
                if seen[p] {
                    return Err(Error::InvalidMatching(format!("position {p} repeated")));
                }
                seen[p] = true;
            }
            canonical.push(b);
        }
        canonical.sort_unstable_by_key(|b| b[0]);
        Ok(OrderedMatching {
            r,
            blocks: canonical.into_iter().flatten().collect(),
        })
    }

    /// The unique matching with zero blocks.
    pub fn empty(r: usize) -> Self {
        OrderedMatching {
            r,
            blocks: Vec::new(),
        }
    }

    pub(crate) fn from_flat_unchecked(r: usize, blocks: Vec<usize>) -> Self {
        OrderedMatching { r, blocks }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of blocks.
    pub fn n(&self) -> usize {
        self.blocks.len().checked_div(self.r).unwrap_or(0)
    }

    /// Size of the ground set, `r * n`.
    pub fn ground_size(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i * self.r..(i + 1) * self.r]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.blocks.chunks_exact(self.r)
    }

    /// Map from position (1-based) to the index of its block.
    pub fn block_of_position(&self) -> Vec<usize> {
        let mut owner = vec![0usize; self.ground_size() + 1];
        for (i, block) in self.blocks().enumerate() {
            for &p in block {
                owner[p] = i;
            }
        }
        owner
    }

    /// The canonical Gauss word: position `p` maps to the letter of the
    /// block containing `p`.
    pub fn to_word(&self) -> GaussWord {
        let owner = self.block_of_position();
        let letters = (1..=self.ground_size()).map(|p| owner[p] as u32).collect();
        GaussWord::from_parts_unchecked(self.r, letters)
    }

    /// Inverse of [`OrderedMatching::to_word`].
    pub fn from_word(w: &GaussWord) -> Self {
        let r = w.r();
        let n = w.n();
        let mut blocks = vec![Vec::with_capacity(r); n];
        for (i, &l) in w.letters().iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        // Letters are named by first occurrence, so blocks are already
        // ordered by smallest element and internally ascending.
        OrderedMatching {
            r,
            blocks: blocks.into_iter().flatten().collect(),
        }
    }

    /// The ±1 step sequence with +1 at left ends and -1 at right ends.
    /// Defined for pair matchings only.
    pub fn dyck_trace(&self) -> Result<DyckTrace> {
        if self.r != 2 {
            return Err(Error::UnsupportedMultiplicity(self.r));
        }
        let mut steps = vec![1i8; self.ground_size()];
        for block in self.blocks() {
            steps[block[1] - 1] = -1;
        }
        Ok(DyckTrace::from_steps_unchecked(steps))
    }

    /// The sub-matching induced by a set of block indices, with positions
    /// renumbered 1..r*k preserving order.
    pub fn induced(&self, block_indices: &[usize]) -> OrderedMatching {
        let mut positions: Vec<(usize, usize)> = Vec::new();
        for (rank, &bi) in block_indices.iter().enumerate() {
            for &p in self.block(bi) {
                positions.push((p, rank));
            }
        }
        positions.sort_unstable();
        let mut blocks = vec![Vec::with_capacity(self.r); block_indices.len()];
        for (new_pos, &(_, rank)) in positions.iter().enumerate() {
            blocks[rank].push(new_pos + 1);
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        OrderedMatching {
            r: self.r,
            blocks: blocks.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Display for OrderedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .blocks()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}
