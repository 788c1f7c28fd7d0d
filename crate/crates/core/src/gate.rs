//! Toffoli-family gates, circuits, and the two generating sets.
//!
//! A [`Gate`] flips its target line when every control carries its polarity
//! value (1 for positive, 0 for negative). This covers NOT, CNOT, Toffoli,
//! generalized Toffoli (all-positive, any control set) and full-control
//! mixed-polarity Toffoli gates.
//!
//! Gates act on the output side of a truth vector: applying `g` to `f` gives
//! `gate_perm(g) . f`, so each entry `f(i)` is mapped through the gate.
//!
//! On two lines, the CNOT with control line 0 (`a`) and target line 1 (`b`)
//! realizes `[0 3 2 1]`; control `b` with target `a` realizes `[0 1 3 2]`.

use alloc::vec::Vec;
use core::fmt;

use crate::perm::TruthVector;
use crate::{Error, Result};

/// Largest line count a gate or circuit may span.
pub const MAX_LINES: u32 = 32;

/// Largest line count for which generating sets are enumerated.
pub const MAX_GENERATOR_LINES: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Fires on 1.
    Positive,
    /// Fires on 0.
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gate {
    lines: u32,
    target: u32,
    controls: u32,
    /// Subset of `controls` with positive polarity.
    positive: u32,
}

fn line_mask(lines: u32) -> u32 {
    if lines >= 32 {
        u32::MAX
    } else {
        (1u32 << lines) - 1
    }
}

impl Gate {
    /// Builds a gate from bit masks over the lines.
    pub fn from_masks(lines: u32, target: u32, controls: u32, positive: u32) -> Result<Self> {
        if !(1..=MAX_LINES).contains(&lines) {
            return Err(Error::LineCount { lines, min: 1, max: MAX_LINES });
        }
        if target >= lines {
            return Err(Error::InvalidGate("target line out of range"));
        }
        if controls & !line_mask(lines) != 0 {
            return Err(Error::InvalidGate("control line out of range"));
        }
        if controls >> target & 1 == 1 {
            return Err(Error::InvalidGate("target is also a control"));
        }
        if positive & !controls != 0 {
            return Err(Error::InvalidGate("polarity given for a non-control line"));
        }
        Ok(Self { lines, target, controls, positive })
    }

    pub fn new(lines: u32, controls: &[(u32, Polarity)], target: u32) -> Result<Self> {
        let mut mask = 0u32;
        let mut positive = 0u32;
        for &(line, polarity) in controls {
            if line >= lines.min(MAX_LINES) {
                return Err(Error::InvalidGate("control line out of range"));
            }
            if mask >> line & 1 == 1 {
                return Err(Error::InvalidGate("duplicate control line"));
            }
            mask |= 1 << line;
            if polarity == Polarity::Positive {
                positive |= 1 << line;
            }
        }
        Self::from_masks(lines, target, mask, positive)
    }

    pub fn not(lines: u32, target: u32) -> Result<Self> {
        Self::from_masks(lines, target, 0, 0)
    }

    /// Generalized Toffoli gate: all controls positive.
    pub fn toffoli(lines: u32, controls: &[u32], target: u32) -> Result<Self> {
        let mut mask = 0u32;
        for &c in controls {
            if c >= lines.min(MAX_LINES) {
                return Err(Error::InvalidGate("control line out of range"));
            }
            if mask >> c & 1 == 1 {
                return Err(Error::InvalidGate("duplicate control line"));
            }
            mask |= 1 << c;
        }
        Self::from_masks(lines, target, mask, mask)
    }

    /// Full-control gate whose control polarities copy the bits of `value`,
    /// so it swaps `value` with `value ^ (1 << target)` and nothing else.
    pub fn matching(lines: u32, target: u32, value: u32) -> Result<Self> {
        let controls = line_mask(lines) & !(1 << target);
        Self::from_masks(lines, target, controls, value & controls)
    }

    pub fn lines(&self) -> u32 {
        self.lines
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    pub fn control_mask(&self) -> u32 {
        self.controls
    }

    pub fn positive_mask(&self) -> u32 {
        self.positive
    }

    /// Controls in ascending line order.
    pub fn controls(&self) -> impl Iterator<Item = (u32, Polarity)> + '_ {
        (0..self.lines).filter(move |l| self.controls >> l & 1 == 1).map(move |l| {
            let p = if self.positive >> l & 1 == 1 { Polarity::Positive } else { Polarity::Negative };
            (l, p)
        })
    }

    /// Number of lines the gate touches: controls plus target.
    pub fn size(&self) -> u32 {
        self.controls.count_ones() + 1
    }

    /// Number of negative controls.
    pub fn negatives(&self) -> u32 {
        (self.controls & !self.positive).count_ones()
    }

    pub fn is_all_positive(&self) -> bool {
        self.controls == self.positive
    }

    /// Every non-target line is a control.
    pub fn is_full_control(&self) -> bool {
        self.controls == line_mask(self.lines) & !(1 << self.target)
    }

    pub fn fires(&self, value: u32) -> bool {
        (value ^ self.positive) & self.controls == 0
    }

    pub fn apply_value(&self, value: u32) -> u32 {
        if self.fires(value) {
            value ^ (1 << self.target)
        } else {
            value
        }
    }

    pub(crate) fn apply_in_place(&self, entries: &mut [u32]) {
        for v in entries {
            *v = self.apply_value(*v);
        }
    }

    /// Applies the gate to every entry of `tv`.
    pub fn apply(&self, tv: &TruthVector) -> Result<TruthVector> {
        if tv.lines() != self.lines {
            return Err(Error::LineMismatch { expected: self.lines, found: tv.lines() });
        }
        let mut entries = tv.entries().to_vec();
        self.apply_in_place(&mut entries);
        Ok(TruthVector::from_raw(self.lines, entries))
    }

    /// The permutation realized by the gate.
    pub fn perm(&self) -> Result<TruthVector> {
        self.apply(&TruthVector::identity(self.lines)?)
    }

    /// Same gate placed on a wider register.
    pub fn widen(&self, lines: u32) -> Result<Self> {
        if lines < self.lines {
            return Err(Error::LineMismatch { expected: self.lines, found: lines });
        }
        Self::from_masks(lines, self.target, self.controls, self.positive)
    }
}

/// Line name used by the text formats: `a` for line 0, `b` for line 1, ...
pub fn line_name(line: u32) -> char {
    debug_assert!(line < 26);
    (b'a' + line as u8) as char
}

impl fmt::Debug for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `C3(a,c';b)` style: controls in line order, then the target.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |l: u32| -> alloc::string::String {
            if l < 26 {
                alloc::string::String::from(line_name(l))
            } else {
                alloc::format!("l{l}")
            }
        };
        write!(f, "C{}(", self.size())?;
        for (line, pol) in self.controls() {
            f.write_str(&name(line))?;
            if pol == Polarity::Negative {
                f.write_str("'")?;
            }
            f.write_str(",")?;
        }
        if self.controls != 0 {
            f.write_str(" ")?;
        }
        write!(f, "{})", name(self.target))
    }
}

/// An ordered gate cascade over a fixed number of lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Circuit {
    lines: u32,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(lines: u32) -> Self {
        Self { lines, gates: Vec::new() }
    }

    pub fn from_gates(lines: u32, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::new(lines);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        if gate.lines != self.lines {
            return Err(Error::LineMismatch { expected: self.lines, found: gate.lines });
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.lines != self.lines {
            return Err(Error::LineMismatch { expected: self.lines, found: other.lines });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn lines(&self) -> u32 {
        self.lines
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Runs one input value through the cascade.
    pub fn simulate(&self, value: u32) -> u32 {
        self.gates.iter().fold(value, |v, g| g.apply_value(v))
    }

    /// Applies the gates in order to every entry of `tv`.
    pub fn apply(&self, tv: &TruthVector) -> Result<TruthVector> {
        if tv.lines() != self.lines {
            return Err(Error::LineMismatch { expected: self.lines, found: tv.lines() });
        }
        let mut entries = tv.entries().to_vec();
        for v in &mut entries {
            *v = self.simulate(*v);
        }
        Ok(TruthVector::from_raw(self.lines, entries))
    }

    /// The permutation realized by the whole cascade.
    pub fn perm(&self) -> Result<TruthVector> {
        self.apply(&TruthVector::identity(self.lines)?)
    }

    /// Reverses the gate order. Every gate is self-inverse, so this is the
    /// inverse cascade.
    pub fn inverse(&self) -> Circuit {
        let mut gates = self.gates.clone();
        gates.reverse();
        Self { lines: self.lines, gates }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// Generalized Toffoli gates: any positive control set.
    Generalized,
    /// Full-control Toffoli gates with every polarity pattern.
    MultipleControl,
}

impl GeneratorKind {
    pub fn label(&self) -> char {
        match self {
            GeneratorKind::Generalized => 'I',
            GeneratorKind::MultipleControl => 'H',
        }
    }
}

/// One gate family on `n` lines together with the permutations it realizes.
///
/// Members are ordered by target line, then by control pattern read as an
/// integer over the line positions.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    kind: GeneratorKind,
    lines: u32,
    members: Vec<(Gate, TruthVector)>,
}

impl GeneratorSet {
    pub fn generalized(lines: u32) -> Result<Self> {
        Self::enumerate(GeneratorKind::Generalized, lines)
    }

    pub fn multiple_control(lines: u32) -> Result<Self> {
        Self::enumerate(GeneratorKind::MultipleControl, lines)
    }

    pub fn enumerate(kind: GeneratorKind, lines: u32) -> Result<Self> {
        if !(1..=MAX_GENERATOR_LINES).contains(&lines) {
            return Err(Error::LineCount { lines, min: 1, max: MAX_GENERATOR_LINES });
        }
        let all = line_mask(lines);
        let mut members = Vec::with_capacity((lines as usize) << (lines - 1));
        for target in 0..lines {
            for pattern in 0..=all {
                if pattern >> target & 1 == 1 {
                    continue;
                }
                let gate = match kind {
                    GeneratorKind::Generalized => Gate::from_masks(lines, target, pattern, pattern)?,
                    GeneratorKind::MultipleControl => {
                        Gate::from_masks(lines, target, all & !(1 << target), pattern)?
                    }
                };
                members.push((gate, gate.perm()?));
            }
        }
        Ok(Self { kind, lines, members })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn lines(&self) -> u32 {
        self.lines
    }

    pub fn members(&self) -> &[(Gate, TruthVector)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.members.iter().map(|(g, _)| g)
    }

    pub fn contains(&self, gate: &Gate) -> bool {
        self.gates().any(|g| g == gate)
    }
}
