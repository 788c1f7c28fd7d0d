//! Gate counts and quantum costs.
//!
//! Gates of size 1 to 3 use their fixed elementary counts under every
//! garbage policy. Larger gates use the size formulas of the chosen policy;
//! the one-line and `n-3`-line policies start at size 5.

use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use crate::gate::{Circuit, Gate};
use crate::{synthesis_gate_bound, Error, Result};

/// Ancilla lines available when a large gate is decomposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GarbagePolicy {
    Zero,
    One,
    NMinusThree,
}

impl GarbagePolicy {
    pub const ALL: [GarbagePolicy; 3] = [GarbagePolicy::Zero, GarbagePolicy::One, GarbagePolicy::NMinusThree];

    pub fn name(&self) -> &'static str {
        match self {
            GarbagePolicy::Zero => "0",
            GarbagePolicy::One => "1",
            GarbagePolicy::NMinusThree => "n-3",
        }
    }
}

impl fmt::Display for GarbagePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GarbagePolicy {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        GarbagePolicy::ALL.into_iter().find(|p| p.name() == s).ok_or("expected one of 0, 1, n-3")
    }
}

/// Which Cayley graph (gate family) a bound refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Generalized Toffoli gates.
    I,
    /// Full-control Toffoli gates.
    H,
}

/// Quantum cost of a gate with `size` lines, `negatives` of them negative controls.
pub fn cost_for(size: u32, negatives: u32, policy: GarbagePolicy) -> Result<u64> {
    if size == 0 || size > 32 {
        return Err(Error::GateSize { size, min: 1 });
    }
    if negatives >= size {
        return Err(Error::NegativeCount { negatives, lines: size });
    }
    let s = size as u64;
    let m = negatives as u64;
    let cost = match (size, negatives) {
        (1, _) => 1,
        (2, 0) => 1,
        // NOT-conjugated CNOT; not one of the base rows.
        (2, _) => 2,
        (3, 0) | (3, 1) => 5,
        (3, _) => 7,
        _ => match policy {
            GarbagePolicy::Zero => (1u64 << s) - 3 + 2 * m,
            _ if size < 5 => return Err(Error::Policy { size, policy }),
            GarbagePolicy::One if m == 0 => 24 * s - 88,
            GarbagePolicy::One => 24 * s - 86,
            GarbagePolicy::NMinusThree if m == 0 => 10 * s - 25,
            GarbagePolicy::NMinusThree => 10 * s - 23,
        },
    };
    Ok(cost)
}

/// `true` when the cost comes from an extension rather than a base row.
pub fn is_extension(size: u32, negatives: u32) -> bool {
    size == 2 && negatives == 1
}

pub fn gate_cost(gate: &Gate, policy: GarbagePolicy) -> Result<u64> {
    cost_for(gate.size(), gate.negatives(), policy)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CircuitCost {
    pub gate_count: u64,
    pub quantum_cost: u64,
}

impl Add for CircuitCost {
    type Output = CircuitCost;

    fn add(self, rhs: CircuitCost) -> CircuitCost {
        CircuitCost {
            gate_count: self.gate_count + rhs.gate_count,
            quantum_cost: self.quantum_cost + rhs.quantum_cost,
        }
    }
}

pub fn circuit_cost(circuit: &Circuit, policy: GarbagePolicy) -> Result<CircuitCost> {
    let mut total = CircuitCost::default();
    for g in circuit.gates() {
        total.gate_count += 1;
        total.quantum_cost += gate_cost(g, policy)?;
    }
    Ok(total)
}

/// Most expensive gate that fits on `lines` lines under `policy`.
pub fn max_gate_cost(lines: u32, policy: GarbagePolicy) -> u64 {
    (1..=lines.min(32))
        .flat_map(|s| (0..s).map(move |m| (s, m)))
        .filter_map(|(s, m)| cost_for(s, m, policy).ok())
        .max()
        .unwrap_or(0)
}

/// Per-gate factor of the worst-case synthesis cost for an `n`-line gate.
pub fn worst_case_gate_factor(lines: u32, graph: GraphKind, policy: GarbagePolicy, negatives: u32) -> Result<u64> {
    if !(2..=32).contains(&lines) {
        return Err(Error::LineCount { lines, min: 2, max: 32 });
    }
    if policy != GarbagePolicy::Zero && lines < 5 {
        return Err(Error::Policy { size: lines, policy });
    }
    let n = lines as u64;
    let factor = match (graph, policy) {
        (GraphKind::I, GarbagePolicy::Zero) => (1u64 << n) - 3,
        (GraphKind::I, GarbagePolicy::One) => 24 * n - 88,
        (GraphKind::I, GarbagePolicy::NMinusThree) => 10 * n - 25,
        (GraphKind::H, GarbagePolicy::Zero) => {
            if negatives >= lines {
                return Err(Error::NegativeCount { negatives, lines });
            }
            (1u64 << n) - 3 + 2 * negatives as u64
        }
        (GraphKind::H, GarbagePolicy::One) => 24 * n - 86,
        (GraphKind::H, GarbagePolicy::NMinusThree) => 10 * n - 23,
    };
    Ok(factor)
}

/// Worst-case gate count times the per-gate factor. `negatives` is only read
/// for the H graph without garbage.
pub fn worst_case_qc(lines: u32, graph: GraphKind, policy: GarbagePolicy, negatives: u32) -> Result<u128> {
    let factor = worst_case_gate_factor(lines, graph, policy, negatives)?;
    Ok(synthesis_gate_bound(lines) as u128 * factor as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::Polarity::{Negative as N, Positive as P};
    use alloc::vec;
    use GarbagePolicy::*;

    #[test]
    fn small_gate_rows() {
        for policy in GarbagePolicy::ALL {
            assert_eq!(cost_for(1, 0, policy), Ok(1));
            assert_eq!(cost_for(2, 0, policy), Ok(1));
            assert_eq!(cost_for(2, 1, policy), Ok(2));
            assert_eq!(cost_for(3, 0, policy), Ok(5));
            assert_eq!(cost_for(3, 1, policy), Ok(5));
            assert_eq!(cost_for(3, 2, policy), Ok(7));
        }
        assert!(is_extension(2, 1));
        assert!(!is_extension(3, 1));
    }

    #[test]
    fn formula_rows() {
        assert_eq!(cost_for(9, 0, Zero), Ok(509));
        assert_eq!(cost_for(6, 4, Zero), Ok(69));
        assert_eq!(cost_for(4, 0, Zero), Ok(13));
        assert_eq!(cost_for(6, 0, One), Ok(56));
        assert_eq!(cost_for(6, 2, One), Ok(58));
        assert_eq!(cost_for(6, 0, NMinusThree), Ok(35));
        assert_eq!(cost_for(6, 1, NMinusThree), Ok(37));
    }

    #[test]
    fn invalid_combinations() {
        assert_eq!(cost_for(4, 0, One), Err(Error::Policy { size: 4, policy: One }));
        assert_eq!(cost_for(4, 1, NMinusThree), Err(Error::Policy { size: 4, policy: NMinusThree }));
        assert!(cost_for(3, 3, Zero).is_err());
        assert!(cost_for(0, 0, Zero).is_err());
    }

    #[test]
    fn reordering_controls_keeps_cost() {
        let g1 = Gate::new(5, &[(0, P), (1, N), (3, N)], 4).unwrap();
        let g2 = Gate::new(5, &[(3, N), (0, P), (1, N)], 4).unwrap();
        assert_eq!(gate_cost(&g1, Zero), gate_cost(&g2, Zero));
        assert_eq!(gate_cost(&g1, Zero), Ok(17));
    }

    #[test]
    fn circuit_costs() {
        assert_eq!(circuit_cost(&Circuit::new(3), Zero), Ok(CircuitCost::default()));
        let c = Circuit::from_gates(
            3,
            vec![
                Gate::not(3, 0).unwrap(),
                Gate::toffoli(3, &[1, 2], 0).unwrap(),
                Gate::toffoli(3, &[0, 2], 1).unwrap(),
                Gate::toffoli(3, &[1, 2], 0).unwrap(),
            ],
        )
        .unwrap();
        let cost = circuit_cost(&c, Zero).unwrap();
        assert_eq!(cost, CircuitCost { gate_count: 4, quantum_cost: 16 });
        let mut twice = c.clone();
        twice.extend(&c).unwrap();
        assert_eq!(circuit_cost(&twice, Zero).unwrap(), cost + cost);
    }

    #[test]
    fn worst_case_tables() {
        assert_eq!(worst_case_qc(3, GraphKind::I, Zero, 0), Ok(85));
        assert_eq!(worst_case_qc(6, GraphKind::H, NMinusThree, 0), Ok(11877));
        assert_eq!(worst_case_qc(6, GraphKind::I, One, 0), Ok(17976));
        assert!(worst_case_qc(4, GraphKind::I, One, 0).is_err());
        assert!(worst_case_qc(3, GraphKind::H, Zero, 3).is_err());
        assert_eq!(worst_case_qc(3, GraphKind::H, Zero, 2), Ok(17 * 9));
    }

    #[test]
    fn max_gate_cost_bounds() {
        assert_eq!(max_gate_cost(3, Zero), 7);
        assert_eq!(max_gate_cost(4, Zero), 19);
        assert_eq!(max_gate_cost(1, Zero), 1);
    }
}
