//! Reversible circuit synthesis over Toffoli-family gate libraries.
//!
//! Truth vectors (permutations of `{0, .., 2^n - 1}`) are synthesized into
//! cascades of generalized Toffoli gates ([`mmd`]) or full-control
//! mixed-polarity Toffoli gates ([`hypercube`]). Circuits are priced with the
//! [`cost`] model, expanded into Toffoli-sized networks by [`decompose`], and
//! the Cayley graphs spanned by the two gate families are searched exactly by
//! [`cayley`] for small line counts.
//!
//! Line 0 is always the least significant bit of a value.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cayley;
pub mod cost;
pub mod decompose;
mod error;
pub mod gate;
pub mod histogram;
pub mod hypercube;
pub mod mmd;
pub mod perm;
pub mod synth;
pub mod unitary;

pub use cayley::{Bipartiteness, BfsResult, DistanceHistogram};
pub use cost::{CircuitCost, GarbagePolicy, GraphKind};
pub use decompose::{AncillaCircuit, AncillaMode, Strategy, Verification};
pub use error::Error;
pub use gate::{Circuit, Gate, GeneratorKind, GeneratorSet, Polarity};
pub use histogram::Histogram;
pub use hypercube::ScanOrder;
pub use perm::TruthVector;
pub use synth::{Algorithm, Trace, TraceStep};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// `(n - 1) * 2^n + 1`: the worst-case gate count of both synthesis algorithms.
pub const fn synthesis_gate_bound(lines: u32) -> u64 {
    ((lines as u64).saturating_sub(1) << lines) + 1
}
