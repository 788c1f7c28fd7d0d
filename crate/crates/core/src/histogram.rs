use alloc::vec::Vec;

/// Counts of a non-negative integer statistic (gate count, BFS distance).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
}

impl Histogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    pub fn add(&mut self, value: usize) {
        if value >= self.counts.len() {
            self.counts.resize(value + 1, 0);
        }
        self.counts[value] += 1;
    }

    pub fn merge(&mut self, other: &Histogram) {
        if other.counts.len() > self.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (slot, &c) in self.counts.iter_mut().zip(&other.counts) {
            *slot += c;
        }
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts.get(value).copied().unwrap_or(0)
    }

    /// Indexed by value; trailing entries are non-zero.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `(value, count)` pairs with non-zero count, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().copied().enumerate().filter(|&(_, c)| c > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Largest value observed.
    pub fn max(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    pub fn mean(&self) -> f64 {
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        let sum: u64 = self.iter().map(|(v, c)| v as u64 * c).sum();
        sum as f64 / total as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn add_merge_and_stats() {
        let mut h = Histogram::new();
        assert_eq!(h.max(), None);
        assert_eq!(h.mean(), 0.0);
        h.add(2);
        h.add(0);
        h.add(2);
        let mut other = Histogram::from_counts(vec![0, 1, 0, 0, 1, 0]);
        assert_eq!(other.counts(), &[0, 1, 0, 0, 1]);
        other.merge(&h);
        assert_eq!(other.counts(), &[1, 1, 2, 0, 1]);
        assert_eq!(other.total(), 5);
        assert_eq!(other.max(), Some(4));
        assert_eq!(other.mean(), 9.0 / 5.0);
        assert_eq!(other.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 1), (2, 2), (4, 1)]);
    }
}
