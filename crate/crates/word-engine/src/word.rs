//! Ultimately periodic words `u.v^ω` represented as the pair `(u, v)`.

use ltl_core::Letter;

use crate::WordError;

/// A pair `(u, v)` of finite letter sequences with `v` nonempty,
/// denoting the infinite word `u.v^ω`. The pair itself is the counted
/// object: `(u, v)` and `(u.v, v)` induce the same infinite word but are
/// distinct word-models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UltimatelyPeriodicWord {
    prefix: Vec<Letter>,
    period: Vec<Letter>,
}

impl UltimatelyPeriodicWord {
    pub fn new(
        prefix: Vec<Letter>,
        period: Vec<Letter>,
    ) -> Result<UltimatelyPeriodicWord, WordError> {
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        Ok(UltimatelyPeriodicWord { prefix, period })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Total length `k = |u| + |v|`.
    pub fn total_len(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// Index where the period starts (= `|u|`).
    pub fn loop_start(&self) -> usize {
        self.prefix.len()
    }

    /// Letter at position `j < k` of the finite representation.
    pub fn letter(&self, j: usize) -> Letter {
        if j < self.prefix.len() {
            self.prefix[j]
        } else {
            self.period[j - self.prefix.len()]
        }
    }

    /// Letter at any position of the infinite word `u.v^ω`.
    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.total_len() {
            self.letter(i)
        } else {
            let off = (i - self.prefix.len()) % self.period.len();
            self.period[off]
        }
    }

    /// Successor position in the lasso: `j+1`, wrapping the last position
    /// back to the loop start.
    pub fn succ(&self, j: usize) -> usize {
        if j + 1 < self.total_len() {
            j + 1
        } else {
            self.loop_start()
        }
    }

    /// The same infinite word split as `(u.v, v)`. Used to test split
    /// invariance of the semantics.
    pub fn unrolled_once(&self) -> UltimatelyPeriodicWord {
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&self.period);
        UltimatelyPeriodicWord {
            prefix,
            period: self.period.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_period() {
        assert!(UltimatelyPeriodicWord::new(vec![], vec![]).is_err());
    }

    #[test]
    fn indexing_wraps_into_period() {
        let a = Letter::from_mask(1);
        let b = Letter::from_mask(2);
        let c = Letter::from_mask(3);
        let w = UltimatelyPeriodicWord::new(vec![a], vec![b, c]).unwrap();
        assert_eq!(w.total_len(), 3);
        assert_eq!(w.letter_at(0), a);
        assert_eq!(w.letter_at(4), c);
        assert_eq!(w.letter_at(5), b);
        assert_eq!(w.succ(2), 1);
        assert_eq!(w.unrolled_once().total_len(), 5);
    }
}
