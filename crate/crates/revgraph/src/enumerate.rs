//! Gate-count histograms over every permutation of `2^n` values.

use rayon::prelude::*;
use revgraph_core::perm::factorial;
use revgraph_core::{Algorithm, Histogram, TruthVector};

use crate::Result;

/// Largest line count enumerated exhaustively.
pub const MAX_ENUMERATE_LINES: u32 = 3;

const CHUNK: u64 = 2048;

fn check(lines: u32) -> Result<u64> {
    if !(1..=MAX_ENUMERATE_LINES).contains(&lines) {
        return Err(revgraph_core::Error::LineCount { lines, min: 1, max: MAX_ENUMERATE_LINES }.into());
    }
    Ok(factorial(1 << lines) as u64)
}

/// Lexicographic successor in place; `false` after the last permutation.
pub fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&v| v > p[i]).expect("a larger element exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn count_range(lines: u32, algo: Algorithm, start: u64, len: u64) -> Histogram {
    let first = TruthVector::unrank(start as u128, lines).expect("rank below (2^n)!");
    let mut p = first.into_entries();
    let mut h = Histogram::new();
    for k in 0..len {
        let tv = TruthVector::from_entries(p.clone()).expect("permutation");
        h.add(algo.gate_count(&tv));
        if k + 1 < len {
            next_permutation(&mut p);
        }
    }
    h
}

/// Reference path: one thread, rank order.
pub fn histogram_sequential(lines: u32, algo: Algorithm) -> Result<Histogram> {
    let total = check(lines)?;
    Ok(count_range(lines, algo, 0, total))
}

/// Splits the rank range into chunks and merges the per-chunk histograms.
pub fn histogram(lines: u32, algo: Algorithm) -> Result<Histogram> {
    let total = check(lines)?;
    let chunks = total.div_ceil(CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            count_range(lines, algo, start, CHUNK.min(total - start))
        })
        .reduce(Histogram::new, |mut a, b| {
            a.merge(&b);
            a
        }))
}
