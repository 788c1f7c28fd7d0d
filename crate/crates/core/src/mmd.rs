//! Transformation-based synthesis with generalized Toffoli gates.
//!
//! Gates are assigned at the output end of the cascade. Row 0 is fixed with
//! NOT gates, then each row `i` in ascending order is rewritten from its
//! current value `v` to `i`:
//!
//! * bits set in `i` but clear in `v` are added one at a time, ascending,
//!   each gate controlled by the 1-bits of `v` as it was when the row was
//!   reached;
//! * bits set in `v` but clear in `i` are then removed, ascending, each gate
//!   controlled by the 1-bits of `i`.
//!
//! A row `j < i` holds `j`, and matching either control set would force
//! `j >= i`, so fixed rows never move again.

use alloc::vec::Vec;

use crate::gate::{Circuit, Gate};
use crate::perm::TruthVector;
use crate::synth::Trace;

fn ones(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |b| mask >> b & 1 == 1)
}

fn run(f: &TruthVector, mut emit: impl FnMut(usize, Gate, &[u32])) {
    let lines = f.lines();
    let mut spec: Vec<u32> = f.entries().to_vec();

    let mut step = |position: usize, gate: Gate, spec: &mut Vec<u32>| {
        gate.apply_in_place(spec);
        emit(position, gate, spec);
    };

    for bit in ones(spec[0]) {
        step(0, Gate::not(lines, bit).expect("bit below line count"), &mut spec);
    }

    for i in 1..spec.len() {
        let want = i as u32;
        if spec[i] == want {
            continue;
        }
        let start = spec[i];
        for j in ones(want & !start) {
            let gate = Gate::from_masks(lines, j, start, start).expect("target bit is clear");
            step(i, gate, &mut spec);
        }
        for k in ones(spec[i] & !want) {
            let gate = Gate::from_masks(lines, k, want, want).expect("target bit is clear");
            step(i, gate, &mut spec);
        }
        debug_assert!(spec[..=i].iter().enumerate().all(|(j, &v)| v as usize == j));
    }
}

/// Cascade mapping `f` to the identity. Its inverse realizes `f`.
pub fn synthesize(f: &TruthVector) -> Circuit {
    let mut circuit = Circuit::new(f.lines());
    run(f, |_, gate, _| circuit.push(gate).expect("line count matches"));
    circuit
}

/// Like [`synthesize`], recording the specification after every gate.
pub fn trace(f: &TruthVector) -> Trace {
    let mut trace = Trace::new(f);
    run(f, |position, gate, spec| trace.record(position, gate, spec));
    trace
}
