use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::gate::{Circuit, Gate};
use crate::hypercube::{self, ScanOrder};
use crate::mmd;
use crate::perm::TruthVector;

/// The synthesis algorithms exposed by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Transformation-based synthesis with generalized Toffoli gates.
    Mmd,
    HcRight,
    HcLeft,
    /// Cheaper of the right- and left-order hypercube cascades.
    HcBidirectional,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] =
        [Algorithm::Mmd, Algorithm::HcRight, Algorithm::HcLeft, Algorithm::HcBidirectional];

    /// Returns a cascade that maps `f` to the identity when applied in order.
    pub fn synthesize(&self, f: &TruthVector) -> Circuit {
        match self {
            Algorithm::Mmd => mmd::synthesize(f),
            Algorithm::HcRight => hypercube::synthesize(f, ScanOrder::Right),
            Algorithm::HcLeft => hypercube::synthesize(f, ScanOrder::Left),
            Algorithm::HcBidirectional => hypercube::bidirectional(f),
        }
    }

    pub fn gate_count(&self, f: &TruthVector) -> usize {
        match self {
            Algorithm::Mmd => mmd::synthesize(f).len(),
            Algorithm::HcRight => hypercube::gate_count(f.entries(), ScanOrder::Right),
            Algorithm::HcLeft => hypercube::gate_count(f.entries(), ScanOrder::Left),
            Algorithm::HcBidirectional => {
                let right = hypercube::gate_count(f.entries(), ScanOrder::Right);
                let left = hypercube::gate_count(f.entries(), ScanOrder::Left);
                right.min(left)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Mmd => "mmd",
            Algorithm::HcRight => "hc-right",
            Algorithm::HcLeft => "hc-left",
            Algorithm::HcBidirectional => "hc-bi",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or("expected one of mmd, hc-right, hc-left, hc-bi")
    }
}

/// One emitted gate and the specification right after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Table row being fixed when the gate was emitted; 0 for the initial NOTs.
    pub position: usize,
    pub gate: Gate,
    pub after: TruthVector,
}

/// Full evolution of a specification during synthesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub start: TruthVector,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub(crate) fn new(start: &TruthVector) -> Self {
        Self { start: start.clone(), steps: Vec::new() }
    }

    pub(crate) fn record(&mut self, position: usize, gate: Gate, spec: &[u32]) {
        let after = TruthVector::from_raw(self.start.lines(), spec.to_vec());
        self.steps.push(TraceStep { position, gate, after });
    }

    pub fn circuit(&self) -> Circuit {
        let gates = self.steps.iter().map(|s| s.gate).collect();
        Circuit::from_gates(self.start.lines(), gates).expect("trace gates share the line count")
    }

    /// Specification after the last gate.
    pub fn result(&self) -> &TruthVector {
        self.steps.last().map_or(&self.start, |s| &s.after)
    }
}
