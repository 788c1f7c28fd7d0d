//! Circuit text format.
//!
//! ```text
//! # comment
//! .n 3
//! t3 b,c,a
//! t2 a',b
//! t1 c
//! ```
//!
//! `.n` gives the line count. Each gate line is `t<k>` followed by `k`
//! comma-separated operands, controls first and target last. Lines are named
//! `a`, `b`, ... with `a` the least significant bit; a trailing `'` marks a
//! negative control.

use revgraph_core::gate::line_name;
use revgraph_core::{Circuit, Gate, Polarity};

use crate::{Error, Result};

/// Lines nameable with single letters.
pub const MAX_TFC_LINES: u32 = 26;

fn parse_operand(token: &str, lines: u32, line_no: usize) -> Result<(u32, Polarity)> {
    let (name, polarity) = match token.strip_suffix('\'') {
        Some(rest) => (rest, Polarity::Negative),
        None => (token, Polarity::Positive),
    };
    let mut chars = name.chars();
    let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(Error::parse(line_no, format!("bad operand `{token}`")));
    };
    if !c.is_ascii_lowercase() || (c as u32 - 'a' as u32) >= lines {
        return Err(Error::parse(line_no, format!("unknown line `{name}` for {lines} lines")));
    }
    Ok((c as u32 - 'a' as u32, polarity))
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut circuit: Option<Circuit> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix(".n") {
            if circuit.is_some() {
                return Err(Error::parse(line_no, "repeated .n header"));
            }
            let n: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad line count `{}`", rest.trim())))?;
            if !(1..=MAX_TFC_LINES).contains(&n) {
                return Err(Error::parse(line_no, format!("line count {n} outside 1..={MAX_TFC_LINES}")));
            }
            circuit = Some(Circuit::new(n));
            continue;
        }
        let Some(c) = circuit.as_mut() else {
            return Err(Error::parse(line_no, "gate before .n header"));
        };
        let (head, ops) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let k: usize = head
            .strip_prefix('t')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(line_no, format!("unknown directive `{head}`")))?;
        let tokens: Vec<&str> = ops.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
        if tokens.len() != k {
            return Err(Error::parse(line_no, format!("t{k} needs {k} operands, found {}", tokens.len())));
        }
        let lines = c.lines();
        let mut operands = Vec::with_capacity(k);
        for t in &tokens {
            operands.push(parse_operand(t, lines, line_no)?);
        }
        let (target, polarity) = operands.pop().expect("k >= 1 operands");
        if polarity == Polarity::Negative {
            return Err(Error::parse(line_no, "target cannot be negated"));
        }
        let mut seen = 1u32 << target;
        for &(l, _) in &operands {
            if seen >> l & 1 == 1 {
                return Err(Error::parse(line_no, format!("duplicate operand `{}`", line_name(l))));
            }
            seen |= 1 << l;
        }
        let gate = Gate::new(lines, &operands, target).map_err(|e| Error::parse(line_no, e.to_string()))?;
        c.push(gate)?;
    }
    circuit.ok_or_else(|| Error::Format("missing .n header".into()))
}

pub fn write_gate(gate: &Gate) -> String {
    let mut ops: Vec<String> = gate
        .controls()
        .map(|(l, p)| match p {
            Polarity::Positive => line_name(l).to_string(),
            Polarity::Negative => format!("{}'", line_name(l)),
        })
        .collect();
    ops.push(line_name(gate.target()).to_string());
    format!("t{} {}", gate.size(), ops.join(","))
}

pub fn write_circuit(circuit: &Circuit) -> Result<String> {
    if circuit.lines() > MAX_TFC_LINES {
        return Err(Error::Format(format!(
            "{} lines cannot be named with single letters (max {MAX_TFC_LINES})",
            circuit.lines()
        )));
    }
    let mut out = format!(".n {}\n", circuit.lines());
    for g in circuit.gates() {
        out.push_str(&write_gate(g));
        out.push('\n');
    }
    Ok(out)
}
