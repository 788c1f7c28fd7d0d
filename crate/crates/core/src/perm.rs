//! Truth vectors: permutations of `{0, .., 2^n - 1}`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest line count a [`TruthVector`] may have.
pub const MAX_LINES: u32 = 24;

/// Largest line count whose Lehmer rank fits in a `u128` (`32! < 2^128`).
pub const MAX_RANK_LINES: u32 = 5;

/// A reversible function on `n` lines, stored as `f(0), .., f(2^n - 1)`.
///
/// Always a bijection. Bit `k` of a value is line `k`, so line 0 is the least
/// significant bit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthVector {
    lines: u32,
    entries: Vec<u32>,
}

fn check_lines(lines: u32) -> Result<()> {
    if (1..=MAX_LINES).contains(&lines) {
        Ok(())
    } else {
        Err(Error::LineCount { lines, min: 1, max: MAX_LINES })
    }
}

impl TruthVector {
    pub fn identity(lines: u32) -> Result<Self> {
        check_lines(lines)?;
        Ok(Self { lines, entries: (0..1u32 << lines).collect() })
    }

    /// The reverse permutation `i -> 2^n - 1 - i`.
    pub fn reverse(lines: u32) -> Result<Self> {
        check_lines(lines)?;
        let top = (1u32 << lines) - 1;
        Ok(Self { lines, entries: (0..=top).rev().collect() })
    }

    /// Builds a truth vector, inferring the line count from the length.
    pub fn from_entries(entries: Vec<u32>) -> Result<Self> {
        let len = entries.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Length(len));
        }
        let lines = len.trailing_zeros();
        check_lines(lines)?;
        let mut seen = vec![false; len];
        for &v in &entries {
            let slot = seen.get_mut(v as usize).ok_or(Error::ValueOutOfRange {
                value: v,
                bound: len as u32,
            })?;
            if *slot {
                return Err(Error::Duplicate { value: v });
            }
            *slot = true;
        }
        Ok(Self { lines, entries })
    }

    /// Caller guarantees `entries` is a bijection on `0..2^lines`.
    pub(crate) fn from_raw(lines: u32, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), 1usize << lines);
        Self { lines, entries }
    }

    pub fn lines(&self) -> u32 {
        self.lines
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Option<u32> {
        self.entries.get(i).copied()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Function composition: `(self . inner)(i) = self(inner(i))`.
    pub fn compose(&self, inner: &TruthVector) -> Result<TruthVector> {
        self.same_lines(inner)?;
        let entries = inner.entries.iter().map(|&v| self.entries[v as usize]).collect();
        Ok(Self::from_raw(self.lines, entries))
    }

    pub fn inverse(&self) -> TruthVector {
        let mut entries = vec![0; self.entries.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[v as usize] = i as u32;
        }
        Self::from_raw(self.lines, entries)
    }

    /// Number of differing bits between the `n * 2^n`-bit binary forms.
    pub fn hamming(&self, other: &TruthVector) -> Result<u32> {
        self.same_lines(other)?;
        Ok(self.entries.iter().zip(&other.entries).map(|(&a, &b)| bit_distance(a, b)).sum())
    }

    /// Hamming distance to the identity.
    pub fn hamming_to_identity(&self) -> u32 {
        self.entries.iter().enumerate().map(|(i, &v)| bit_distance(i as u32, v)).sum()
    }

    /// `true` for odd permutations.
    pub fn is_odd(&self) -> bool {
        let mut visited = vec![false; self.entries.len()];
        let mut transpositions = 0usize;
        for start in 0..self.entries.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.entries[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 1
    }

    /// Lexicographic Lehmer rank in `0..(2^n)!`.
    pub fn rank(&self) -> Result<u128> {
        if self.lines > MAX_RANK_LINES {
            return Err(Error::RankOverflow { lines: self.lines });
        }
        Ok(lehmer_rank(&self.entries))
    }

    pub fn unrank(rank: u128, lines: u32) -> Result<TruthVector> {
        check_lines(lines)?;
        if lines > MAX_RANK_LINES {
            return Err(Error::RankOverflow { lines });
        }
        let len = 1usize << lines;
        if rank >= factorial(len as u32) {
            return Err(Error::RankOutOfRange);
        }
        let mut entries = Vec::with_capacity(len);
        lehmer_unrank(rank, len, &mut entries);
        Ok(Self::from_raw(lines, entries))
    }

    /// Binary form of entry `i`, most significant bit first.
    pub fn binary(&self, i: usize) -> String {
        binary_string(self.entries[i], self.lines)
    }

    fn same_lines(&self, other: &TruthVector) -> Result<()> {
        if self.lines == other.lines {
            Ok(())
        } else {
            Err(Error::LineMismatch { expected: self.lines, found: other.lines })
        }
    }
}

impl fmt::Debug for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Hamming distance between two values.
pub fn bit_distance(a: u32, b: u32) -> u32 {
    (a ^ b).count_ones()
}

/// `width` low bits of `value`, most significant first.
pub fn binary_string(value: u32, width: u32) -> String {
    (0..width).rev().map(|b| if value >> b & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Lehmer rank of a permutation of `0..p.len()`.
pub(crate) fn lehmer_rank(p: &[u32]) -> u128 {
    let len = p.len();
    let mut rank = 0u128;
    for i in 0..len {
        let smaller = p[i + 1..].iter().filter(|&&v| v < p[i]).count() as u128;
        rank = rank * (len - i) as u128 + smaller;
    }
    rank
}

/// Writes the permutation of `0..len` with the given rank into `out`.
pub(crate) fn lehmer_unrank(mut rank: u128, len: usize, out: &mut Vec<u32>) {
    let mut digits = vec![0usize; len];
    for i in (0..len).rev() {
        let base = (len - i) as u128;
        digits[i] = (rank % base) as usize;
        rank /= base;
    }
    let mut pool: Vec<u32> = (0..len as u32).collect();
    out.clear();
    for d in digits {
        out.push(pool.remove(d));
    }
}

/// Rank of a small permutation (`len <= 12`), for BFS vertex indexing.
pub(crate) fn small_rank(p: &[u32]) -> u32 {
    debug_assert!(p.len() <= 12);
    let mut rank = 0u32;
    let mut used = 0u32;
    let len = p.len() as u32;
    for (i, &v) in p.iter().enumerate() {
        let smaller_unused = v - (used & ((1 << v) - 1)).count_ones();
        rank = rank * (len - i as u32) + smaller_unused;
        used |= 1 << v;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn tv(v: &[u32]) -> TruthVector {
        TruthVector::from_entries(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_reverse() {
        assert_eq!(TruthVector::identity(1).unwrap().entries(), &[0, 1]);
        assert_eq!(TruthVector::identity(2).unwrap().entries(), &[0, 1, 2, 3]);
        assert_eq!(TruthVector::identity(3).unwrap().entries(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(TruthVector::reverse(3).unwrap().entries(), &[7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(TruthVector::reverse(1).unwrap().entries(), &[1, 0]);
        assert!(TruthVector::identity(0).is_err());
        assert!(TruthVector::reverse(0).is_err());
        assert!(TruthVector::identity(25).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(TruthVector::from_entries(vec![0]), Err(Error::Length(1)));
        assert_eq!(TruthVector::from_entries(vec![0, 1, 2]), Err(Error::Length(3)));
        assert_eq!(TruthVector::from_entries(vec![0, 1, 1, 3]), Err(Error::Duplicate { value: 1 }));
        assert_eq!(
            TruthVector::from_entries(vec![0, 4, 1, 3]),
            Err(Error::ValueOutOfRange { value: 4, bound: 4 })
        );
    }

    #[test]
    fn compose_examples() {
        let pi = tv(&[1, 3, 2, 0]);
        let id = TruthVector::identity(2).unwrap();
        assert_eq!(id.compose(&pi).unwrap(), pi);
        assert_eq!(tv(&[0, 1, 3, 2]).compose(&tv(&[2, 3, 0, 1])).unwrap(), tv(&[3, 2, 0, 1]));
        assert!(pi.compose(&pi.inverse()).unwrap().is_identity());
        assert!(pi.compose(&TruthVector::identity(3).unwrap()).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(tv(&[1, 0, 3, 2]).inverse(), tv(&[1, 0, 3, 2]));
        assert!(TruthVector::identity(3).unwrap().inverse().is_identity());
        assert_eq!(tv(&[1, 3, 2, 0]).inverse(), tv(&[3, 0, 2, 1]));
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(bit_distance(0b011, 0b111), 1);
        let rho = TruthVector::reverse(3).unwrap();
        let id = TruthVector::identity(3).unwrap();
        assert_eq!(rho.hamming(&id).unwrap(), 24);
        assert_eq!(rho.hamming_to_identity(), 24);
        assert_eq!(rho.hamming(&rho).unwrap(), 0);
        assert!(rho.hamming(&TruthVector::identity(2).unwrap()).is_err());
    }

    /// All permutations of `0..len` in lexicographic order, by repeated
    /// next-permutation steps.
    fn lexicographic(len: usize) -> Vec<Vec<u32>> {
        let mut p: Vec<u32> = (0..len as u32).collect();
        let mut all = vec![p.clone()];
        loop {
            let Some(i) = (0..len.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                return all;
            };
            let j = (i + 1..len).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            all.push(p.clone());
        }
    }

    #[test]
    fn rank_matches_lexicographic_position() {
        for (expected, p) in lexicographic(8).into_iter().enumerate() {
            let t = tv(&p);
            assert_eq!(t.rank().unwrap(), expected as u128);
            assert_eq!(small_rank(&p), expected as u32);
        }
        assert_eq!(TruthVector::identity(3).unwrap().rank().unwrap(), 0);
        assert_eq!(TruthVector::reverse(2).unwrap().rank().unwrap(), 23);
    }

    #[test]
    fn rank_round_trip() {
        for r in 0..24u128 {
            assert_eq!(TruthVector::unrank(r, 2).unwrap().rank().unwrap(), r);
        }
        let p = tv(&[1, 0, 3, 2]);
        assert_eq!(TruthVector::unrank(p.rank().unwrap(), 2).unwrap(), p);
        assert_eq!(TruthVector::unrank(24, 2), Err(Error::RankOutOfRange));
        assert!(TruthVector::identity(6).unwrap().rank().is_err());

        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut v: Vec<u32> = (0..8).collect();
        for _ in 0..100_000 {
            v.shuffle(&mut rng);
            let t = tv(&v);
            assert_eq!(TruthVector::unrank(t.rank().unwrap(), 3).unwrap(), t);
        }
        let mut v: Vec<u32> = (0..32).collect();
        for _ in 0..1000 {
            v.shuffle(&mut rng);
            let t = tv(&v);
            assert_eq!(TruthVector::unrank(t.rank().unwrap(), 5).unwrap(), t);
        }
        let last = TruthVector::reverse(5).unwrap();
        assert_eq!(last.rank().unwrap(), factorial(32) - 1);
    }

    #[test]
    fn parity() {
        assert!(!TruthVector::identity(3).unwrap().is_odd());
        assert!(tv(&[1, 0, 2, 3]).is_odd());
        assert!(!tv(&[1, 2, 0, 3]).is_odd());
        // 8 elements reversed: four disjoint transpositions.
        assert!(!TruthVector::reverse(3).unwrap().is_odd());
    }

    #[test]
    fn binary_is_msb_first() {
        let t = tv(&[1, 3, 2, 0, 4, 5, 6, 7]);
        assert_eq!(t.binary(0), "001");
        assert_eq!(binary_string(6, 3), "110");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(lines: u32) -> impl Strategy<Value = TruthVector> {
            Just((0..1u32 << lines).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| TruthVector::from_entries(v).unwrap())
        }

        proptest! {
            #[test]
            fn compose_is_associative(a in perm(3), b in perm(3), c in perm(3)) {
                let left = a.compose(&b).unwrap().compose(&c).unwrap();
                let right = a.compose(&b.compose(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
                let id = TruthVector::identity(3).unwrap();
                prop_assert_eq!(&id.compose(&a).unwrap(), &a);
                prop_assert_eq!(&a.compose(&id).unwrap(), &a);
            }

            #[test]
            fn hamming_is_a_metric(a in perm(4), b in perm(4), c in perm(4)) {
                let ab = a.hamming(&b).unwrap();
                prop_assert_eq!(ab, b.hamming(&a).unwrap());
                prop_assert_eq!(ab == 0, a == b);
                prop_assert!(ab <= a.hamming(&c).unwrap() + c.hamming(&b).unwrap());
            }

            #[test]
            fn inverse_composes_to_identity(a in perm(4)) {
                prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
                prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            }
        }
    }
}
