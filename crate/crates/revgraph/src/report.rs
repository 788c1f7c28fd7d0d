//! Cost report for a circuit under one garbage policy.

use std::fmt::Write as _;

use revgraph_core::cost::{gate_cost, is_extension, max_gate_cost};
use revgraph_core::{synthesis_gate_bound, Circuit, GarbagePolicy};
use serde::Serialize;

use crate::tfc::write_gate;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateRow {
    pub index: usize,
    pub gate: String,
    pub size: u32,
    /// Negative controls.
    pub m: u32,
    pub cost: u64,
    /// Cost comes from the NOT-conjugated CNOT row, not the base table.
    pub extension: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `(n - 1) 2^n + 1`.
    pub gate_count: u64,
    /// Most expensive single gate on `n` lines.
    pub max_gate_cost: u64,
    /// `gate_count * max_gate_cost`.
    pub quantum_cost: u128,
    pub within: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub lines: u32,
    pub policy: String,
    pub gates: Vec<GateRow>,
    pub gate_count: u64,
    pub quantum_cost: u64,
    pub bounds: Bounds,
}

impl CostReport {
    pub fn new(circuit: &Circuit, policy: GarbagePolicy) -> Result<Self> {
        let mut gates = Vec::with_capacity(circuit.len());
        let mut quantum_cost = 0;
        for (index, g) in circuit.gates().iter().enumerate() {
            let cost = gate_cost(g, policy)?;
            quantum_cost += cost;
            gates.push(GateRow {
                index,
                gate: write_gate(g),
                size: g.size(),
                m: g.negatives(),
                cost,
                extension: is_extension(g.size(), g.negatives()),
            });
        }
        let n = circuit.lines();
        let gate_bound = synthesis_gate_bound(n);
        let max_cost = max_gate_cost(n, policy);
        let qc_bound = gate_bound as u128 * max_cost as u128;
        let gate_count = gates.len() as u64;
        Ok(Self {
            lines: n,
            policy: policy.to_string(),
            gates,
            gate_count,
            quantum_cost,
            bounds: Bounds {
                gate_count: gate_bound,
                max_gate_cost: max_cost,
                quantum_cost: qc_bound,
                within: gate_count <= gate_bound && quantum_cost as u128 <= qc_bound,
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Aligned columns; extension rows are marked with `*`.
    pub fn to_text(&self) -> String {
        let width = self.gates.iter().map(|r| r.gate.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        writeln!(out, "lines {}  garbage {}", self.lines, self.policy).unwrap();
        writeln!(out, "{:>5}  {:<width$}  {:>4}  {:>3}  {:>6}", "#", "gate", "size", "m", "cost").unwrap();
        for r in &self.gates {
            let mark = if r.extension { " *" } else { "" };
            writeln!(out, "{:>5}  {:<width$}  {:>4}  {:>3}  {:>6}{mark}", r.index, r.gate, r.size, r.m, r.cost).unwrap();
        }
        writeln!(out, "gate count    {}", self.gate_count).unwrap();
        writeln!(out, "quantum cost  {}", self.quantum_cost).unwrap();
        writeln!(
            out,
            "bounds        gc <= {}, qc <= {} ({})",
            self.bounds.gate_count,
            self.bounds.quantum_cost,
            if self.bounds.within { "within" } else { "exceeded" }
        )
        .unwrap();
        if self.gates.iter().any(|r| r.extension) {
            writeln!(out, "* negative-control CNOT priced as NOT + CNOT + NOT").unwrap();
        }
        out
    }
}
