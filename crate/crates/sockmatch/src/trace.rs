//! Dyck sequences: ±1 step sequences whose prefix sums stay nonnegative and
//! end at zero.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckTrace {
    pub(crate) steps: Vec<i8>,
}

impl DyckTrace {
    /// Validate the Dyck property: steps are ±1, every prefix sum is
    /// nonnegative, and the total is zero.
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        let mut height = 0i64;
        for (i, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidTrace(format!(
                    "step {s} at position {} is not +1 or -1",
                    i + 1
                )));
            }
            height += s as i64;
            if height < 0 {
                return Err(Error::InvalidTrace(format!(
                    "prefix sum drops below zero at position {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidTrace(format!(
                "steps sum to {height}, expected 0"
            )));
        }
        Ok(DyckTrace { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<i8>) -> Self {
        debug_assert!(DyckTrace::new(steps.clone()).is_ok());
        DyckTrace { steps }
    }

    /// Parse either `U`/`D` letters (`"UUDD"`) or whitespace-separated
    /// signed integers (`"1 1 -1 -1"`).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(DyckTrace { steps: Vec::new() });
        }
        let steps: Vec<i8> = if trimmed.chars().all(|c| matches!(c, 'U' | 'D' | 'u' | 'd')) {
            trimmed
                .chars()
                .map(|c| if c.eq_ignore_ascii_case(&'U') { 1 } else { -1 })
                .collect()
        } else {
            let mut v = Vec::new();
            for token in trimmed.split_whitespace() {
                match token.parse::<i8>() {
                    Ok(s) => v.push(s),
                    Err(_) => {
                        return Err(Error::InvalidTrace(format!("bad step token {token:?}")));
                    }
                }
            }
            v
        };
        DyckTrace::new(steps)
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    /// Semilength: number of up-steps.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Maximum prefix sum.
    pub fn height(&self) -> usize {
        let mut h = 0i64;
        let mut max = 0i64;
        for &s in &self.steps {
            h += s as i64;
            max = max.max(h);
        }
        max as usize
    }

    /// Lengths of the maximal runs of equal steps, alternating up-run,
    /// down-run, up-run, ... (a nonempty trace starts with an up-run).
    pub fn runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut iter = self.steps.iter();
        let Some(&first) = iter.next() else {
            return runs;
        };
        let mut current = first;
        let mut len = 1usize;
        for &s in iter {
            if s == current {
                len += 1;
            } else {
                runs.push(len);
                current = s;
                len = 1;
            }
        }
        runs.push(len);
        runs
    }
}

impl fmt::Display for DyckTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", if s == 1 { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DyckTrace::new(vec![1, -1]).is_ok());
        assert!(DyckTrace::new(vec![-1, 1]).is_err());
        assert!(DyckTrace::new(vec![1, 1]).is_err());
        assert!(DyckTrace::new(vec![1, 0]).is_err());
        assert!(DyckTrace::new(vec![]).is_ok());
    }

    #[test]
    fn height_and_runs() {
        let t = DyckTrace::new(vec![1, 1, 1, -1, 1, -1, -1, -1]).unwrap();
        assert_eq!(t.height(), 3);
        assert_eq!(t.runs(), vec![3, 1, 1, 3]);
        assert_eq!(t.to_string(), "UUUDUDDD");
    }

    #[test]
    fn parsing_both_notations() {
        let a = DyckTrace::parse("UUDD").unwrap();
        let b = DyckTrace::parse("1 1 -1 -1").unwrap();
        assert_eq!(a, b);
        assert!(DyckTrace::parse("UDX").is_err());
        assert!(DyckTrace::parse("DU").is_err());
    }
}
