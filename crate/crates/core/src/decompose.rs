//! Expansion of large Toffoli gates into networks of gates with at most two
//! controls, and exhaustive simulation checks for those networks.
//!
//! Controls keep their polarity wherever a principal line drives a gate;
//! controls taken from ancilla lines are always positive. Ancilla lines are
//! appended after the principal lines.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::gate::{Circuit, Gate, Polarity};
use crate::{Error, Result};

/// Largest total line count [`verify_equivalence`] will simulate.
pub const MAX_VERIFY_LINES: u32 = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AncillaMode {
    /// Ancilla must start at 0; they are returned to 0.
    ZeroedRestored,
    /// Ancilla may hold anything; they are returned to their initial value.
    BorrowedRestored,
}

impl AncillaMode {
    pub fn name(&self) -> &'static str {
        match self {
            AncillaMode::ZeroedRestored => "zeroed",
            AncillaMode::BorrowedRestored => "borrowed",
        }
    }
}

/// A network over `principal + ancilla` lines implementing a gate on the
/// first `principal` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AncillaCircuit {
    pub principal: u32,
    pub ancilla: u32,
    pub mode: AncillaMode,
    pub circuit: Circuit,
}

impl AncillaCircuit {
    pub fn total_lines(&self) -> u32 {
        self.principal + self.ancilla
    }

    pub fn len(&self) -> usize {
        self.circuit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuit.is_empty()
    }

    /// Largest gate size in the network.
    pub fn max_gate_size(&self) -> u32 {
        self.circuit.gates().iter().map(Gate::size).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Zeroed,
    Borrowed,
    OneGarbage,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Zeroed, Strategy::Borrowed, Strategy::OneGarbage];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Zeroed => "zeroed",
            Strategy::Borrowed => "borrowed",
            Strategy::OneGarbage => "one-garbage",
        }
    }

    /// Smallest gate size the strategy expands.
    pub fn min_size(&self) -> u32 {
        match self {
            Strategy::Zeroed => 4,
            Strategy::Borrowed | Strategy::OneGarbage => 5,
        }
    }

    pub fn mode(&self) -> AncillaMode {
        match self {
            Strategy::Zeroed => AncillaMode::ZeroedRestored,
            Strategy::Borrowed | Strategy::OneGarbage => AncillaMode::BorrowedRestored,
        }
    }

    pub fn expand(&self, gate: &Gate) -> Result<AncillaCircuit> {
        match self {
            Strategy::Zeroed => ladder_zeroed(gate),
            Strategy::Borrowed => ladder_borrowed(gate),
            Strategy::OneGarbage => expand_one_garbage(gate),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or("expected one of zeroed, borrowed, one-garbage")
    }
}

type Control = (u32, Polarity);

const ANC: Polarity = Polarity::Positive;

fn toffoli(lines: u32, x: Control, y: Control, target: u32) -> Gate {
    Gate::new(lines, &[x, y], target).expect("ladder operands are distinct and in range")
}

fn check_size(gate: &Gate, min: u32) -> Result<()> {
    if gate.size() < min {
        Err(Error::GateSize { size: gate.size(), min })
    } else {
        Ok(())
    }
}

fn widened_lines(gate: &Gate, ancilla: u32) -> Result<u32> {
    let lines = gate.lines() + ancilla;
    if lines > crate::gate::MAX_LINES {
        return Err(Error::LineBudget { lines, max: crate::gate::MAX_LINES });
    }
    Ok(lines)
}

/// Compute / apply / uncompute ladder with `s - 3` zeroed ancilla and
/// `2s - 5` Toffoli gates.
pub fn ladder_zeroed(gate: &Gate) -> Result<AncillaCircuit> {
    check_size(gate, 4)?;
    let x: Vec<Control> = gate.controls().collect();
    let k = x.len();
    let m = (k - 2) as u32;
    let lines = widened_lines(gate, m)?;
    let anc = |j: usize| gate.lines() + j as u32;

    let mut up = Vec::with_capacity(k - 2);
    up.push(toffoli(lines, x[0], x[1], anc(0)));
    for j in 1..k - 2 {
        up.push(toffoli(lines, x[j + 1], (anc(j - 1), ANC), anc(j)));
    }
    let mut gates = up.clone();
    gates.push(toffoli(lines, x[k - 1], (anc(k - 3), ANC), gate.target()));
    gates.extend(up.into_iter().rev());

    Ok(AncillaCircuit {
        principal: gate.lines(),
        ancilla: m,
        mode: AncillaMode::ZeroedRestored,
        circuit: Circuit::from_gates(lines, gates)?,
    })
}

/// Borrowed-ancilla ladder: toggles `target` by the AND of `x` using
/// `x.len() - 2` borrowed lines from `spare`, whatever they hold.
/// `4 (x.len() - 2)` gates; needs at least three controls.
fn borrowed_chain(lines: u32, x: &[Control], target: u32, spare: &[u32]) -> Vec<Gate> {
    let k = x.len();
    debug_assert!(k >= 3 && spare.len() >= k - 2);
    let m = k - 2;
    let y = |j: usize| (spare[j], ANC);
    // Link j toggles y[j] by x[j + 1] & y[j - 1], for j in 1..m.
    let link = |j: usize| toffoli(lines, x[j + 1], y(j - 1), spare[j]);
    let top = toffoli(lines, x[k - 1], y(m - 1), target);
    let base = toffoli(lines, x[0], x[1], spare[0]);

    let mut gates = Vec::with_capacity(4 * m);
    gates.push(top);
    gates.extend((1..m).rev().map(link));
    gates.push(base);
    gates.extend((1..m).map(link));
    gates.push(top);
    gates.extend((1..m).rev().map(link));
    gates.push(base);
    gates.extend((1..m).map(link));
    gates
}

/// Ladder with `s - 3` borrowed ancilla of arbitrary initial value and
/// `4 (s - 3)` Toffoli gates.
pub fn ladder_borrowed(gate: &Gate) -> Result<AncillaCircuit> {
    check_size(gate, 5)?;
    let x: Vec<Control> = gate.controls().collect();
    let m = (x.len() - 2) as u32;
    let lines = widened_lines(gate, m)?;
    let spare: Vec<u32> = (gate.lines()..lines).collect();
    let gates = borrowed_chain(lines, &x, gate.target(), &spare);
    Ok(AncillaCircuit {
        principal: gate.lines(),
        ancilla: m,
        mode: AncillaMode::BorrowedRestored,
        circuit: Circuit::from_gates(lines, gates)?,
    })
}

/// Controls, the borrowed line, and the line count of a one-garbage split.
struct Split {
    lines: u32,
    ancilla: u32,
    borrowed: u32,
    first: Vec<Control>,
    second: Vec<Control>,
}

fn split(gate: &Gate) -> Result<Split> {
    check_size(gate, 5)?;
    let used = gate.control_mask() | 1 << gate.target();
    let free = (0..gate.lines()).rev().find(|l| used >> l & 1 == 0);
    let (lines, ancilla, borrowed) = match free {
        Some(line) => (gate.lines(), 0, line),
        None => (widened_lines(gate, 1)?, 1, gate.lines()),
    };
    let x: Vec<Control> = gate.controls().collect();
    let k1 = x.len().div_ceil(2) + 1;
    Ok(Split { lines, ancilla, borrowed, first: x[..k1].to_vec(), second: x[k1..].to_vec() })
}

/// Four-gate alternation `G1 G2 G1 G2`: `G1` copies the AND of the first
/// control group onto a borrowed line, `G2` fires on the second group plus
/// that line. The borrowed line is a free principal line if the gate has
/// one, otherwise one appended ancilla.
pub fn split_one_borrowed(gate: &Gate) -> Result<AncillaCircuit> {
    let s = split(gate)?;
    let g1 = Gate::new(s.lines, &s.first, s.borrowed)?;
    let mut second = s.second.clone();
    second.push((s.borrowed, ANC));
    let g2 = Gate::new(s.lines, &second, gate.target())?;
    Ok(AncillaCircuit {
        principal: gate.lines(),
        ancilla: s.ancilla,
        mode: AncillaMode::BorrowedRestored,
        circuit: Circuit::from_gates(s.lines, alloc::vec![g1, g2, g1, g2])?,
    })
}

/// [`split_one_borrowed`] with both halves expanded into Toffoli gates,
/// each half borrowing the lines of the other.
pub fn expand_one_garbage(gate: &Gate) -> Result<AncillaCircuit> {
    let s = split(gate)?;
    let mut second = s.second.clone();
    second.push((s.borrowed, ANC));

    let mut first_spare: Vec<u32> = s.second.iter().map(|&(l, _)| l).collect();
    first_spare.push(gate.target());
    first_spare.sort_unstable();
    let half_one = half(s.lines, &s.first, s.borrowed, &first_spare);

    let second_spare: Vec<u32> = s.first.iter().rev().map(|&(l, _)| l).collect();
    let half_two = half(s.lines, &second, gate.target(), &second_spare);

    let mut gates = Vec::with_capacity(2 * (half_one.len() + half_two.len()));
    for _ in 0..2 {
        gates.extend_from_slice(&half_one);
        gates.extend_from_slice(&half_two);
    }
    Ok(AncillaCircuit {
        principal: gate.lines(),
        ancilla: s.ancilla,
        mode: AncillaMode::BorrowedRestored,
        circuit: Circuit::from_gates(s.lines, gates)?,
    })
}

fn half(lines: u32, x: &[Control], target: u32, spare: &[u32]) -> Vec<Gate> {
    if x.len() <= 2 {
        alloc::vec![Gate::new(lines, x, target).expect("valid operands")]
    } else {
        borrowed_chain(lines, x, target, spare)
    }
}

/// Expands every gate of at least `strategy.min_size()` in a circuit; all
/// expansions share the same ancilla lines.
pub fn expand_circuit(circuit: &Circuit, strategy: Strategy) -> Result<AncillaCircuit> {
    let principal = circuit.lines();
    let mut parts = Vec::with_capacity(circuit.len());
    let mut ancilla = 0;
    for g in circuit.gates() {
        if g.size() < strategy.min_size() {
            parts.push(None);
        } else {
            let part = strategy.expand(g)?;
            ancilla = ancilla.max(part.ancilla);
            parts.push(Some(part));
        }
    }
    let lines = principal + ancilla;
    if lines > crate::gate::MAX_LINES {
        return Err(Error::LineBudget { lines, max: crate::gate::MAX_LINES });
    }
    let mut out = Circuit::new(lines);
    for (g, part) in circuit.gates().iter().zip(parts) {
        match part {
            None => out.push(g.widen(lines)?)?,
            Some(p) => {
                for sub in p.circuit.gates() {
                    out.push(sub.widen(lines)?)?;
                }
            }
        }
    }
    Ok(AncillaCircuit { principal, ancilla, mode: strategy.mode(), circuit: out })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Full register value: principal bits low, ancilla bits above.
    pub input: u32,
    pub expected: u32,
    pub actual: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub inputs: u64,
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustively checks that `imp` acts like `spec` on the principal lines and
/// restores every ancilla. Zeroed networks are only driven with ancilla 0.
pub fn verify_equivalence(spec: &Gate, imp: &AncillaCircuit) -> Result<Verification> {
    let c = Circuit::from_gates(spec.lines(), alloc::vec![*spec])?;
    verify_circuit(&c, imp)
}

pub fn verify_circuit(spec: &Circuit, imp: &AncillaCircuit) -> Result<Verification> {
    if spec.lines() != imp.principal {
        return Err(Error::LineMismatch { expected: spec.lines(), found: imp.principal });
    }
    let total = imp.total_lines();
    if total > MAX_VERIFY_LINES {
        return Err(Error::LineBudget { lines: total, max: MAX_VERIFY_LINES });
    }
    let ancilla_inits: u32 = match imp.mode {
        AncillaMode::ZeroedRestored => 1,
        AncillaMode::BorrowedRestored => 1 << imp.ancilla,
    };
    let shift = imp.principal;
    let mut inputs = 0u64;
    for anc in 0..ancilla_inits {
        for x in 0..1u32 << imp.principal {
            let input = x | anc << shift;
            let expected = spec.simulate(x) | anc << shift;
            let actual = imp.circuit.simulate(input);
            inputs += 1;
            if actual != expected {
                let counterexample = Some(Counterexample { input, expected, actual });
                return Ok(Verification { inputs, counterexample });
            }
        }
    }
    Ok(Verification { inputs, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{circuit_cost, GarbagePolicy};
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use Polarity::{Negative as N, Positive as P};

    fn fig5_gate() -> Gate {
        // a, b', c', d', e' controlling f on six lines.
        Gate::new(6, &[(0, P), (1, N), (2, N), (3, N), (4, N)], 5).unwrap()
    }

    fn random_gate(rng: &mut impl Rng, size: u32) -> Gate {
        // Full-control gate on `size` lines with a random target and polarity.
        let target = rng.gen_range(0..size);
        Gate::matching(size, target, rng.gen::<u32>()).unwrap()
    }

    #[test]
    fn zeroed_ladder_matches_reference_layout() {
        let out = ladder_zeroed(&fig5_gate()).unwrap();
        assert_eq!(out.ancilla, 3);
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let (x, y, z) = (6, 7, 8);
        let t = |p: Control, q: Control, r: u32| Gate::new(9, &[p, q], r).unwrap();
        let expected = vec![
            t((a, P), (b, N), x),
            t((c, N), (x, P), y),
            t((d, N), (y, P), z),
            t((e, N), (z, P), f),
            t((d, N), (y, P), z),
            t((c, N), (x, P), y),
            t((a, P), (b, N), x),
        ];
        assert_eq!(out.circuit.gates(), expected.as_slice());
        assert!(verify_equivalence(&fig5_gate(), &out).unwrap().is_ok());
    }

    #[test]
    fn zeroed_ladder_cost_for_positive_gate() {
        let g = Gate::toffoli(6, &[0, 1, 2, 3, 4], 5).unwrap();
        let out = ladder_zeroed(&g).unwrap();
        assert_eq!(out.len(), 7);
        let cost = circuit_cost(&out.circuit, GarbagePolicy::Zero).unwrap();
        assert_eq!(cost.quantum_cost, 35);
        assert_eq!(ladder_zeroed(&Gate::toffoli(8, &[0, 1, 2, 3, 4, 5, 6], 7).unwrap()).unwrap().len(), 11);
    }

    #[test]
    fn borrowed_ladder_matches_reference_layout() {
        let out = ladder_borrowed(&fig5_gate()).unwrap();
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let (x, y, z) = (6, 7, 8);
        let t = |p: Control, q: Control, r: u32| Gate::new(9, &[p, q], r).unwrap();
        let expected = vec![
            t((e, N), (z, P), f),
            t((d, N), (y, P), z),
            t((c, N), (x, P), y),
            t((a, P), (b, N), x),
            t((c, N), (x, P), y),
            t((d, N), (y, P), z),
            t((e, N), (z, P), f),
            t((d, N), (y, P), z),
            t((c, N), (x, P), y),
            t((a, P), (b, N), x),
            t((c, N), (x, P), y),
            t((d, N), (y, P), z),
        ];
        assert_eq!(out.circuit.gates(), expected.as_slice());
        let v = verify_equivalence(&fig5_gate(), &out).unwrap();
        assert!(v.is_ok());
        assert_eq!(v.inputs, 512);
    }

    fn fig7_gate() -> Gate {
        // a, b'..g' controlling i on nine lines; h is free.
        Gate::new(9, &[(0, P), (1, N), (2, N), (3, N), (4, N), (5, N), (6, N)], 8).unwrap()
    }

    #[test]
    fn split_matches_reference_layout() {
        let out = split_one_borrowed(&fig7_gate()).unwrap();
        assert_eq!(out.ancilla, 0);
        let g1 = Gate::new(9, &[(0, P), (1, N), (2, N), (3, N), (4, N)], 7).unwrap();
        let g2 = Gate::new(9, &[(5, N), (6, N), (7, P)], 8).unwrap();
        assert_eq!(out.circuit.gates(), &[g1, g2, g1, g2]);
        let v = verify_equivalence(&fig7_gate(), &out).unwrap();
        assert!(v.is_ok());
        assert_eq!(v.inputs, 512);
    }

    #[test]
    fn one_garbage_expansion_of_seven_control_gate() {
        let out = expand_one_garbage(&fig7_gate()).unwrap();
        assert!(out.max_gate_size() <= 3);
        assert_eq!(out.len(), 32);
        assert!(verify_equivalence(&fig7_gate(), &out).unwrap().is_ok());
        // The first half borrows f, g and i, in that order, as drawn.
        let first = Gate::new(9, &[(4, N), (8, P)], 7).unwrap();
        assert_eq!(out.circuit.gates()[0], first);
    }

    #[test]
    fn non_matching_inputs_leave_principal_lines_alone() {
        let g = fig7_gate();
        let out = expand_one_garbage(&g).unwrap();
        for x in 0..1u32 << 9 {
            if !g.fires(x) {
                assert_eq!(out.circuit.simulate(x), x);
            }
        }
    }

    #[test]
    fn size_preconditions() {
        let toffoli = Gate::toffoli(3, &[0, 1], 2).unwrap();
        assert_eq!(ladder_zeroed(&toffoli), Err(Error::GateSize { size: 3, min: 4 }));
        let four = Gate::toffoli(4, &[0, 1, 2], 3).unwrap();
        assert!(ladder_zeroed(&four).is_ok());
        assert_eq!(ladder_borrowed(&four), Err(Error::GateSize { size: 4, min: 5 }));
        assert!(split_one_borrowed(&four).is_err());
        assert!(expand_one_garbage(&four).is_err());
    }

    #[test]
    fn mutation_is_caught() {
        let g = fig5_gate();
        let mut out = ladder_borrowed(&g).unwrap();
        let mut gates = out.circuit.gates().to_vec();
        gates.remove(5);
        out.circuit = Circuit::from_gates(out.total_lines(), gates).unwrap();
        let v = verify_equivalence(&g, &out).unwrap();
        let cx = v.counterexample.expect("deleted gate must be detected");
        assert_ne!(cx.expected, cx.actual);
        assert_eq!(out.circuit.simulate(cx.input), cx.actual);
    }

    #[test]
    fn trivial_verification() {
        let not = Gate::not(1, 0).unwrap();
        let imp = AncillaCircuit {
            principal: 1,
            ancilla: 0,
            mode: AncillaMode::ZeroedRestored,
            circuit: Circuit::from_gates(1, vec![not]).unwrap(),
        };
        assert_eq!(verify_equivalence(&not, &imp).unwrap(), Verification { inputs: 2, counterexample: None });
    }

    #[test]
    fn line_budget() {
        let g = Gate::toffoli(13, &(0..12).collect::<Vec<_>>(), 12).unwrap();
        let out = ladder_zeroed(&g).unwrap();
        assert!(matches!(verify_equivalence(&g, &out), Err(Error::LineBudget { .. })));
    }

    #[test]
    fn random_polarities_small_sizes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(41);
        for size in 4..=7u32 {
            for _ in 0..10 {
                let g = random_gate(&mut rng, size);
                let z = ladder_zeroed(&g).unwrap();
                assert_eq!(z.len() as u32, 2 * size - 5);
                assert!(verify_equivalence(&g, &z).unwrap().is_ok());
                if size >= 5 {
                    for out in [ladder_borrowed(&g).unwrap(), split_one_borrowed(&g).unwrap(), expand_one_garbage(&g).unwrap()] {
                        assert!(verify_equivalence(&g, &out).unwrap().is_ok(), "{g}");
                    }
                    assert_eq!(ladder_borrowed(&g).unwrap().len() as u32, 4 * (size - 3));
                }
            }
        }
    }

    #[test]
    fn circuit_expansion_shares_ancilla() {
        let gates = vec![
            Gate::not(6, 0).unwrap(),
            fig5_gate(),
            Gate::toffoli(6, &[0, 1, 2], 3).unwrap(),
            Gate::toffoli(6, &[1, 2], 3).unwrap(),
        ];
        let c = Circuit::from_gates(6, gates).unwrap();
        for strategy in Strategy::ALL {
            let out = expand_circuit(&c, strategy).unwrap();
            assert!(verify_circuit(&c, &out).unwrap().is_ok(), "{strategy}");
        }
        let z = expand_circuit(&c, Strategy::Zeroed).unwrap();
        assert_eq!(z.ancilla, 3);
        assert!(z.max_gate_size() <= 3);
    }
}
