//! Hypercube synthesis with full-control mixed-polarity Toffoli gates.
//!
//! Rows are scanned one at a time. For the scanned row `i` holding value `v`,
//! every bit where `v` and `i` differ is corrected from least to most
//! significant. Each correction is the single full-control gate whose
//! polarities copy the current `v`, which swaps `v` with `v ^ (1 << bit)`
//! wherever that partner sits.
//!
//! Right order scans `i = 2^n - 1` down to 1, so every row above `i` already
//! holds its own index. Left order scans `i = 0` up to `2^n - 2` and keeps
//! every row below `i` fixed; it is the right order conjugated by bitwise
//! complement.

use alloc::vec::Vec;

use crate::gate::{Circuit, Gate};
use crate::perm::TruthVector;
use crate::synth::Trace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanOrder {
    /// Last row first.
    Right,
    /// First row first.
    Left,
}

fn positions(len: usize, order: ScanOrder) -> Vec<usize> {
    match order {
        ScanOrder::Right => (1..len).rev().collect(),
        ScanOrder::Left => (0..len - 1).collect(),
    }
}

/// Runs the scan, calling `emit(row, target, value)` for every correction
/// before it is applied; `value` is the row's value at that moment.
fn run(entries: &[u32], order: ScanOrder, mut emit: impl FnMut(usize, u32, u32, &[u32])) {
    let lines = entries.len().trailing_zeros();
    let mut spec = entries.to_vec();
    let mut where_is = alloc::vec![0usize; spec.len()];
    for (i, &v) in spec.iter().enumerate() {
        where_is[v as usize] = i;
    }
    for i in positions(spec.len(), order) {
        for bit in 0..lines {
            let current = spec[i];
            if (current ^ i as u32) >> bit & 1 == 0 {
                continue;
            }
            let partner = current ^ (1 << bit);
            let other = where_is[partner as usize];
            spec.swap(i, other);
            where_is[current as usize] = other;
            where_is[partner as usize] = i;
            emit(i, bit, current, &spec);
        }
    }
    assert!(
        spec.iter().enumerate().all(|(i, &v)| v as usize == i),
        "hypercube cascade must end at the identity"
    );
}

/// Cascade of full-control gates mapping `f` to the identity.
pub fn synthesize(f: &TruthVector, order: ScanOrder) -> Circuit {
    let lines = f.lines();
    let mut circuit = Circuit::new(lines);
    run(f.entries(), order, |_, bit, value, _| {
        let gate = Gate::matching(lines, bit, value).expect("bit below line count");
        circuit.push(gate).expect("line count matches");
    });
    circuit
}

pub fn trace(f: &TruthVector, order: ScanOrder) -> Trace {
    let lines = f.lines();
    let mut trace = Trace::new(f);
    run(f.entries(), order, |row, bit, value, spec| {
        let gate = Gate::matching(lines, bit, value).expect("bit below line count");
        trace.record(row, gate, spec);
    });
    trace
}

/// Gate count of [`synthesize`] without building the circuit.
pub fn gate_count(entries: &[u32], order: ScanOrder) -> usize {
    let mut count = 0;
    run(entries, order, |_, _, _, _| count += 1);
    count
}

/// The shorter of the right- and left-order cascades; right wins ties.
pub fn bidirectional(f: &TruthVector) -> Circuit {
    let right = synthesize(f, ScanOrder::Right);
    let left = synthesize(f, ScanOrder::Left);
    if left.len() < right.len() {
        left
    } else {
        right
    }
}
