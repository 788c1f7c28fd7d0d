//! Dense unitaries for small networks of controlled single-qubit gates, used
//! to check elementary realizations of Toffoli gates.
//!
//! Basis state `|x>` has index `x` with line 0 as the least significant bit.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;
use core::ops::Mul;

use num_complex::Complex64 as C;

use crate::{Error, Result};

/// Largest line count [`build_unitary`] accepts.
pub const MAX_UNITARY_LINES: u32 = 4;

pub type Mat2 = [[C; 2]; 2];

const ZERO: C = C::new(0.0, 0.0);
const ONE: C = C::new(1.0, 0.0);

pub fn identity2() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

pub fn pauli_x() -> Mat2 {
    [[ZERO, ONE], [ONE, ZERO]]
}

/// Square root of NOT: `V^2 = X`.
pub fn v() -> Mat2 {
    let p = C::new(0.5, 0.5);
    let m = C::new(0.5, -0.5);
    [[p, m], [m, p]]
}

pub fn v_dagger() -> Mat2 {
    adjoint2(&v())
}

/// Square root of [`v`], built on the eigenbasis of X.
pub fn sqrt_v() -> Mat2 {
    let w = C::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    let plus = (ONE + w) * 0.5;
    let minus = (ONE - w) * 0.5;
    [[plus, minus], [minus, plus]]
}

pub fn adjoint2(m: &Mat2) -> Mat2 {
    [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]]
}

pub fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

pub fn distance2(a: &Mat2, b: &Mat2) -> f64 {
    a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `u` on `target`, applied when every control line matches its polarity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantumGate {
    pub controls: u32,
    /// Subset of `controls` that fire on 1; the rest fire on 0.
    pub positive: u32,
    pub target: u32,
    pub u: Mat2,
}

impl QuantumGate {
    pub fn single(target: u32, u: Mat2) -> Self {
        Self { controls: 0, positive: 0, target, u }
    }

    pub fn controlled(control: u32, target: u32, u: Mat2) -> Self {
        Self { controls: 1 << control, positive: 1 << control, target, u }
    }

    pub fn cnot(control: u32, target: u32) -> Self {
        Self::controlled(control, target, pauli_x())
    }

    fn fires(&self, basis: usize) -> bool {
        let b = basis as u32;
        (b ^ !self.positive) & self.controls == self.controls
    }
}

/// Square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<C>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = ONE;
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C {
        self.data[row * self.dim + col]
    }

    pub fn adjoint(&self) -> Matrix {
        let d = self.dim;
        let mut data = vec![ZERO; d * d];
        for r in 0..d {
            for c in 0..d {
                data[c * d + r] = self.data[r * d + c].conj();
            }
        }
        Matrix { dim: d, data }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn distance(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Distance of `self^dagger self` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        (&self.adjoint() * self).distance(&Matrix::identity(self.dim))
    }

    /// Full matrix of one gate on `lines` lines.
    pub fn of_gate(lines: u32, gate: &QuantumGate) -> Result<Matrix> {
        check_lines(lines)?;
        let span = (1u32 << lines) - 1;
        if gate.target >= lines || gate.controls & !span != 0 {
            return Err(Error::QuantumGate("line out of range"));
        }
        if gate.controls >> gate.target & 1 == 1 {
            return Err(Error::QuantumGate("target is also a control"));
        }
        if gate.positive & !gate.controls != 0 {
            return Err(Error::QuantumGate("polarity given for a non-control line"));
        }
        let dim = 1usize << lines;
        let bit = 1usize << gate.target;
        let mut m = Matrix::identity(dim);
        for col in 0..dim {
            if !gate.fires(col) {
                continue;
            }
            let cb = (col & bit != 0) as usize;
            for rb in 0..2 {
                let row = if rb == 1 { col | bit } else { col & !bit };
                m.data[row * dim + col] = gate.u[rb][cb];
            }
        }
        Ok(m)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut data = vec![ZERO; d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r * d + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..d {
                    data[r * d + c] += a * rhs.data[k * d + c];
                }
            }
        }
        Matrix { dim: d, data }
    }
}

fn check_lines(lines: u32) -> Result<()> {
    if !(1..=MAX_UNITARY_LINES).contains(&lines) {
        return Err(Error::LineCount { lines, min: 1, max: MAX_UNITARY_LINES });
    }
    Ok(())
}

/// Unitary of a gate sequence, first gate applied first.
pub fn build_unitary(lines: u32, gates: &[QuantumGate]) -> Result<Matrix> {
    check_lines(lines)?;
    let mut total = Matrix::identity(1 << lines);
    for g in gates {
        total = &Matrix::of_gate(lines, g)? * &total;
    }
    Ok(total)
}

/// Three-line network with controls on lines 0 and 1 and target line 2
/// realizing a doubly controlled `w^2`.
pub fn double_control_network(w: Mat2) -> [QuantumGate; 5] {
    let wd = adjoint2(&w);
    [
        QuantumGate::controlled(1, 2, w),
        QuantumGate::cnot(0, 1),
        QuantumGate::controlled(1, 2, wd),
        QuantumGate::cnot(0, 1),
        QuantumGate::controlled(0, 2, w),
    ]
}

/// Three-line network applying `r^-2` to line 2 exactly when line 0 is 1
/// and line 1 is 0.
pub fn mixed_polarity_network(r: Mat2) -> [QuantumGate; 5] {
    let rd = adjoint2(&r);
    [
        QuantumGate::controlled(1, 2, r),
        QuantumGate::controlled(0, 2, rd),
        QuantumGate::cnot(0, 1),
        QuantumGate::controlled(1, 2, rd),
        QuantumGate::cnot(0, 1),
    ]
}

/// One line of [`verify_elementary`].
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryCheck {
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
}

impl ElementaryCheck {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

pub const NETWORK_TOLERANCE: f64 = 1e-10;
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Residuals of the elementary identities and of each three-line network
/// against its target gate.
pub fn verify_elementary() -> Vec<ElementaryCheck> {
    let target = |positive: u32, u: Mat2| {
        let g = QuantumGate { controls: 0b11, positive, target: 2, u };
        Matrix::of_gate(3, &g).expect("three-line gate")
    };
    let network = |gates: &[QuantumGate]| build_unitary(3, gates).expect("three-line network");
    let v2 = mul2(&v(), &v());
    let mut checks = vec![
        ElementaryCheck { name: "V*V = X", residual: distance2(&v2, &pauli_x()), tolerance: IDENTITY_TOLERANCE },
        ElementaryCheck {
            name: "V*V^dagger = I",
            residual: distance2(&mul2(&v(), &v_dagger()), &identity2()),
            tolerance: IDENTITY_TOLERANCE,
        },
        ElementaryCheck {
            name: "sqrtV*sqrtV = V",
            residual: distance2(&mul2(&sqrt_v(), &sqrt_v()), &v()),
            tolerance: IDENTITY_TOLERANCE,
        },
    ];
    let cases: [(&'static str, Matrix, Matrix); 5] = [
        ("toffoli(a, b; c)", network(&double_control_network(v())), target(0b11, pauli_x())),
        ("cc-V(a, b; c)", network(&double_control_network(sqrt_v())), target(0b11, v())),
        ("identity from W = X", network(&double_control_network(pauli_x())), Matrix::identity(8)),
        ("toffoli(a, b'; c)", network(&mixed_polarity_network(v())), target(0b01, pauli_x())),
        (
            "cc-V(a, b'; c)",
            network(&mixed_polarity_network(adjoint2(&sqrt_v()))),
            target(0b01, v()),
        ),
    ];
    for (name, got, want) in cases {
        let unitary = got.unitarity_residual();
        checks.push(ElementaryCheck { name, residual: got.distance(&want).max(unitary), tolerance: NETWORK_TOLERANCE });
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_identities() {
        assert!(distance2(&mul2(&v(), &v()), &pauli_x()) <= 1e-12);
        assert!(distance2(&mul2(&sqrt_v(), &sqrt_v()), &v()) <= 1e-12);
        assert!(distance2(&mul2(&v_dagger(), &v()), &identity2()) <= 1e-12);
    }

    #[test]
    fn every_check_passes() {
        let checks = verify_elementary();
        assert_eq!(checks.len(), 8);
        for c in &checks {
            assert!(c.passed(), "{} residual {}", c.name, c.residual);
        }
    }

    #[test]
    fn cnot_matrix_matches_gate_model() {
        // Control line 0, target line 1 maps basis 1 to 3 and 3 to 1.
        let m = Matrix::of_gate(2, &QuantumGate::cnot(0, 1)).unwrap();
        for (col, row) in [(0, 0), (1, 3), (2, 2), (3, 1)] {
            assert_eq!(m.get(row, col), ONE);
        }
    }

    #[test]
    fn literal_v_in_mixed_network_gives_x() {
        // Putting V itself in the mixed-polarity network yields V^-2 = X, not V.
        let got = build_unitary(3, &mixed_polarity_network(v())).unwrap();
        let g = QuantumGate { controls: 0b11, positive: 0b01, target: 2, u: v() };
        assert!(got.distance(&Matrix::of_gate(3, &g).unwrap()) > 0.5);
    }

    #[test]
    fn perturbed_network_fails() {
        let mut gates = double_control_network(v());
        gates[2] = QuantumGate::controlled(1, 2, v());
        let got = build_unitary(3, &gates).unwrap();
        let g = QuantumGate { controls: 0b11, positive: 0b11, target: 2, u: pauli_x() };
        assert!(got.distance(&Matrix::of_gate(3, &g).unwrap()) > 0.1);
    }

    #[test]
    fn size_limits() {
        assert!(build_unitary(4, &[QuantumGate::cnot(0, 3)]).is_ok());
        assert!(matches!(build_unitary(5, &[]), Err(Error::LineCount { .. })));
        assert!(Matrix::of_gate(2, &QuantumGate::cnot(1, 1)).is_err());
        assert!(Matrix::of_gate(2, &QuantumGate::cnot(0, 2)).is_err());
        let id = build_unitary(4, &[]).unwrap();
        assert_eq!(id.unitarity_residual(), 0.0);
    }
}
