//! Command-line front end. Exit status: 0 on success, 1 on a domain error,
//! 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use revgraph_core::cayley::{bipartite_check, bfs as bfs_sequential};
use revgraph_core::decompose::{expand_circuit, verify_circuit};
use revgraph_core::gate::line_name;
use revgraph_core::unitary::verify_elementary;
use revgraph_core::{
    Algorithm, Bipartiteness, Circuit, GarbagePolicy, GeneratorKind, GeneratorSet, Histogram, Strategy, TruthVector,
};
use serde::Serialize;

use crate::dump::{encode_distances, histogram_csv};
use crate::report::CostReport;
use crate::tfc::{parse_circuit, write_circuit};
use crate::tv::{parse_truth_vector, write_truth_vector};
use crate::{bfs::bfs_parallel, enumerate, Error, Result};

const FORMATS: &str = "\
FILE FORMATS

Truth vector (.tv):
  Optional comment lines starting with '#', then 2^n decimal integers
  separated by spaces or newlines: f(0) f(1) ... f(2^n - 1). n is inferred
  from the count, which must be a power of two >= 2. The values must be a
  permutation of 0..2^n - 1.

    # example
    1 0 3 2 5 7 4 6

Circuit (.tfc):
  Comment lines start with '#'. The header '.n N' gives the line count
  (1..=26). Each gate line is 't<k>' followed by k comma-separated
  operands: the controls first, the target last. Lines are named a, b, c,
  ... with a the least significant bit of a value. A trailing apostrophe
  marks a negative control (fires on 0); the target cannot carry one.
  Duplicate operands and unknown line names are rejected.

    # comment
    .n 3
    t3 b,c,a
    t2 a',b
    t1 c

EXIT STATUS
  0 success, 1 domain error (bad permutation, policy/size mismatch,
  failed verification), 2 usage error.";

#[derive(Debug, Parser)]
#[command(name = "revgraph", version, about = "Reversible circuit synthesis, costing and Cayley graph search")]
#[command(after_long_help = FORMATS)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a circuit for a truth vector.
    Synth(SynthArgs),
    /// Run a truth vector through a circuit.
    Apply(ApplyArgs),
    /// Gate count and quantum cost of a circuit.
    Cost(CostArgs),
    /// Gate-count histogram over all permutations on n lines.
    Enumerate(EnumerateArgs),
    /// Exact distance histogram of a Cayley graph.
    Bfs(BfsArgs),
    /// Expand large gates into Toffoli networks with ancilla lines.
    Decompose(DecomposeArgs),
    /// Check the elementary-gate realizations of two-control gates.
    VerifyElementary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Mmd,
    HcRight,
    HcLeft,
    HcBi,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Mmd => Algorithm::Mmd,
            AlgoArg::HcRight => Algorithm::HcRight,
            AlgoArg::HcLeft => Algorithm::HcLeft,
            AlgoArg::HcBi => Algorithm::HcBidirectional,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Gates in emission order, mapping the input to the identity.
    ToIdentity,
    /// Reversed cascade, mapping the identity to the input.
    FromIdentity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GarbageArg {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
    #[value(name = "n-3")]
    NMinusThree,
}

impl From<GarbageArg> for GarbagePolicy {
    fn from(g: GarbageArg) -> Self {
        match g {
            GarbageArg::Zero => GarbagePolicy::Zero,
            GarbageArg::One => GarbagePolicy::One,
            GarbageArg::NMinusThree => GarbagePolicy::NMinusThree,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetArg {
    /// Generalized Toffoli gates.
    #[value(name = "I", alias = "i")]
    I,
    /// Full-control mixed-polarity Toffoli gates.
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Zeroed,
    Borrowed,
    OneGarbage,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Zeroed => Strategy::Zeroed,
            StrategyArg::Borrowed => Strategy::Borrowed,
            StrategyArg::OneGarbage => Strategy::OneGarbage,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    /// Truth vector file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Circuit file; standard output when omitted.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "to-identity")]
    pub direction: Direction,
    /// Print the specification after every gate as comment lines.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[arg(long, value_name = "FILE")]
    pub circuit: PathBuf,
    /// Truth vector file; the identity when omitted.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    #[arg(long, value_name = "FILE")]
    pub circuit: PathBuf,
    #[arg(long, value_enum, default_value = "0")]
    pub garbage: GarbageArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    /// Also write the histogram as CSV.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Single-threaded reference path.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct BfsArgs {
    #[arg(long, value_enum)]
    pub set: SetArg,
    #[arg(long)]
    pub n: u32,
    /// Write the binary distance table.
    #[arg(long, value_name = "FILE")]
    pub dump: Option<PathBuf>,
    /// Also write the histogram as CSV.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Reserved. Four or more lines stay out of reach either way.
    #[arg(long)]
    pub force: bool,
    /// Single-threaded reference path.
    #[arg(long)]
    pub sequential: bool,
    /// Report whether the graph is bipartite, with an odd closed walk if not.
    #[arg(long)]
    pub bipartite: bool,
    /// Print the distance of the truth vector in this file.
    #[arg(long, value_name = "FILE")]
    pub query: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, value_name = "FILE")]
    pub circuit: PathBuf,
    #[arg(long, value_enum)]
    pub strategy: StrategyArg,
    /// Simulate every input and stamp the result.
    #[arg(long)]
    pub verify: bool,
    /// Circuit file; standard output when omitted.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Synth(a) => synth(a, out),
        Command::Apply(a) => apply(a, out),
        Command::Cost(a) => cost(a, out),
        Command::Enumerate(a) => enumerate_cmd(a, out),
        Command::Bfs(a) => bfs_cmd(a, out),
        Command::Decompose(a) => decompose(a, out),
        Command::VerifyElementary => elementary(out),
    }
}

fn synth(a: &SynthArgs, out: &mut dyn Write) -> Result<()> {
    let f = parse_truth_vector(&read(&a.input)?)?;
    let algo = Algorithm::from(a.algo);
    let circuit = algo.synthesize(&f);
    if !circuit.apply(&f)?.is_identity() {
        return Err(Error::Verification(format!("{algo} cascade does not map the input to the identity")));
    }
    let (circuit, direction) = match a.direction {
        Direction::ToIdentity => (circuit, "to-identity"),
        Direction::FromIdentity => {
            let reversed = circuit.inverse();
            if reversed.perm()? != f {
                return Err(Error::Verification("reversed cascade does not realize the input".into()));
            }
            (reversed, "from-identity")
        }
    };
    if a.trace {
        let trace = match algo {
            Algorithm::Mmd => revgraph_core::mmd::trace(&f),
            Algorithm::HcRight => revgraph_core::hypercube::trace(&f, revgraph_core::ScanOrder::Right),
            Algorithm::HcLeft => revgraph_core::hypercube::trace(&f, revgraph_core::ScanOrder::Left),
            Algorithm::HcBidirectional => {
                let right = revgraph_core::hypercube::trace(&f, revgraph_core::ScanOrder::Right);
                if right.steps.len() == circuit.len() {
                    right
                } else {
                    revgraph_core::hypercube::trace(&f, revgraph_core::ScanOrder::Left)
                }
            }
        };
        let mut text = format!("# start {}\n", trace.start);
        for s in &trace.steps {
            writeln!(text, "# row {} {} -> {}", s.position, crate::tfc::write_gate(&s.gate), s.after).unwrap();
        }
        emit(out, &text)?;
    }
    let mut text = format!("# {algo}, {direction}, {} gates\n", circuit.len());
    text.push_str(&write_circuit(&circuit)?);
    match &a.out {
        Some(path) => write_file(path, text.as_bytes()),
        None => emit(out, &text),
    }
}

fn apply(a: &ApplyArgs, out: &mut dyn Write) -> Result<()> {
    let circuit = parse_circuit(&read(&a.circuit)?)?;
    let input = match &a.input {
        Some(path) => parse_truth_vector(&read(path)?)?,
        None => TruthVector::identity(circuit.lines())?,
    };
    emit(out, &write_truth_vector(&circuit.apply(&input)?))
}

fn cost(a: &CostArgs, out: &mut dyn Write) -> Result<()> {
    let circuit = parse_circuit(&read(&a.circuit)?)?;
    let report = CostReport::new(&circuit, a.garbage.into())?;
    match a.format {
        Format::Json => emit(out, &(report.to_json() + "\n")),
        Format::Text | Format::Csv => emit(out, &report.to_text()),
    }
}

#[derive(Serialize)]
struct HistogramJson<'a> {
    kind: &'a str,
    name: String,
    lines: u32,
    total: u64,
    max: usize,
    average: f64,
    /// `[value, count]` pairs, ascending.
    counts: Vec<(usize, u64)>,
}

fn histogram_text(title: String, column: &str, h: &Histogram, max_name: &str) -> String {
    let mut text = title;
    writeln!(text, "{column} count").unwrap();
    for (v, c) in h.iter() {
        writeln!(text, "{v} {c}").unwrap();
    }
    writeln!(text, "{max_name} {}", h.max().unwrap_or(0)).unwrap();
    writeln!(text, "average {:.2}", h.mean()).unwrap();
    text
}

fn render_histogram(format: Format, column: &str, json: HistogramJson, title: String, h: &Histogram, max_name: &str) -> String {
    match format {
        Format::Text => histogram_text(title, column, h, max_name),
        Format::Csv => histogram_csv(column, h),
        Format::Json => serde_json::to_string_pretty(&json).expect("plain data serializes") + "\n",
    }
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write) -> Result<()> {
    let algo = Algorithm::from(a.algo);
    let h = if a.sequential {
        enumerate::histogram_sequential(a.n, algo)?
    } else {
        enumerate::histogram(a.n, algo)?
    };
    if let Some(path) = &a.csv {
        write_file(path, histogram_csv("gates", &h).as_bytes())?;
    }
    let json = HistogramJson {
        kind: "gate-count",
        name: algo.to_string(),
        lines: a.n,
        total: h.total(),
        max: h.max().unwrap_or(0),
        average: h.mean(),
        counts: h.iter().collect(),
    };
    let title = format!("algo {algo}  n {}  permutations {}\n", a.n, h.total());
    emit(out, &render_histogram(a.format, "gates", json, title, &h, "max"))
}

fn describe_walk(vertices: &[TruthVector], gates: &[revgraph_core::Gate]) -> String {
    let mut text = format!("bipartite no (odd closed walk of length {})\n", gates.len());
    for (v, g) in vertices.iter().zip(gates) {
        writeln!(text, "  {v} --{}-->", crate::tfc::write_gate(g)).unwrap();
    }
    writeln!(text, "  {}", vertices.last().expect("walk is non-empty")).unwrap();
    text
}

fn bfs_cmd(a: &BfsArgs, out: &mut dyn Write) -> Result<()> {
    let kind = match a.set {
        SetArg::I => GeneratorKind::Generalized,
        SetArg::H => GeneratorKind::MultipleControl,
    };
    revgraph_core::cayley::vertex_count(a.n)?;
    let set = GeneratorSet::enumerate(kind, a.n)?;
    let result = if a.sequential { bfs_sequential(&set)? } else { bfs_parallel(&set)? };
    let h = &result.histogram.histogram;
    if let Some(path) = &a.dump {
        write_file(path, &encode_distances(kind, a.n, &result.distances)?)?;
    }
    if let Some(path) = &a.csv {
        write_file(path, histogram_csv("distance", h).as_bytes())?;
    }
    let json = HistogramJson {
        kind: "distance",
        name: kind.label().to_string(),
        lines: a.n,
        total: h.total(),
        max: result.histogram.diameter(),
        average: result.histogram.average(),
        counts: h.iter().collect(),
    };
    let title = format!("set {}  n {}  vertices {}\n", kind.label(), a.n, h.total());
    let mut text = render_histogram(a.format, "distance", json, title, h, "diameter");
    if let Some(path) = &a.query {
        let p = parse_truth_vector(&read(path)?)?;
        writeln!(text, "distance {} {}", p, result.distance(&p)?).unwrap();
    }
    if a.bipartite {
        match bipartite_check(&set)? {
            Bipartiteness::Bipartite => text.push_str("bipartite yes\n"),
            Bipartiteness::OddWalk { vertices, generators } => text.push_str(&describe_walk(&vertices, &generators)),
        }
    }
    emit(out, &text)
}

fn decompose(a: &DecomposeArgs, out: &mut dyn Write) -> Result<()> {
    let circuit: Circuit = parse_circuit(&read(&a.circuit)?)?;
    let strategy = Strategy::from(a.strategy);
    let expanded = expand_circuit(&circuit, strategy)?;
    let mut text = String::new();
    if a.verify {
        let v = verify_circuit(&circuit, &expanded)?;
        if let Some(cx) = v.counterexample {
            return Err(Error::Verification(format!(
                "input {} gives {} instead of {}",
                cx.input, cx.actual, cx.expected
            )));
        }
        writeln!(text, "# verified: {} inputs, ancilla={}", v.inputs, expanded.mode.name()).unwrap();
    }
    let ancilla = match expanded.ancilla {
        0 => "none".to_string(),
        m => format!("{}..{}", line_name(expanded.principal), line_name(expanded.principal + m - 1)),
    };
    writeln!(
        text,
        "# {strategy}: {} gates, principal lines {}, ancilla {ancilla} ({})",
        expanded.len(),
        expanded.principal,
        expanded.mode.name()
    )
    .unwrap();
    text.push_str(&write_circuit(&expanded.circuit)?);
    match &a.out {
        Some(path) => write_file(path, text.as_bytes()),
        None => emit(out, &text),
    }
}

fn elementary(out: &mut dyn Write) -> Result<()> {
    let checks = verify_elementary();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in &checks {
        let status = if c.passed() { "ok" } else { "FAIL" };
        writeln!(text, "{:<width$}  residual {:.3e}  tolerance {:.0e}  {status}", c.name, c.residual, c.tolerance).unwrap();
    }
    emit(out, &text)?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::Verification(failed.join(", ")))
    }
}
