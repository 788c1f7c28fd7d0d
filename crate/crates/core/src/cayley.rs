//! Exact breadth-first search over the Cayley graph of `S_(2^n)` generated by
//! a [`GeneratorSet`], starting at the identity.
//!
//! Vertices are indexed by Lehmer rank and distances kept in one byte each.
//! A vertex `p` is joined to `g . p` for every generator `g`. Since every
//! generator is an involution the graph is undirected, and the distance of
//! `p` equals the smallest circuit over the set that realizes `p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gate::{Gate, GeneratorKind, GeneratorSet};
use crate::histogram::Histogram;
use crate::perm::{factorial, lehmer_unrank, small_rank, TruthVector};
use crate::{Error, Result};

/// Largest line count searched exhaustively.
pub const MAX_BFS_LINES: u32 = 3;

/// Distance marker for a vertex not reached yet.
pub const UNVISITED: u8 = u8::MAX;

/// Vertex count `(2^n)!` for a searchable line count.
pub fn vertex_count(lines: u32) -> Result<usize> {
    if lines == 0 {
        return Err(Error::LineCount { lines, min: 1, max: MAX_BFS_LINES });
    }
    if lines > MAX_BFS_LINES {
        let vertices = (1..=1u128.checked_shl(lines).unwrap_or(u128::MAX).min(200))
            .try_fold(1u128, |acc, k| acc.checked_mul(k))
            .unwrap_or(u128::MAX);
        return Err(Error::GraphTooLarge { lines, vertices });
    }
    Ok(factorial(1 << lines) as usize)
}

pub fn rank_vertex(entries: &[u32]) -> usize {
    small_rank(entries) as usize
}

pub fn unrank_vertex(rank: usize, lines: u32) -> TruthVector {
    let mut entries = Vec::with_capacity(1 << lines);
    lehmer_unrank(rank as u128, 1 << lines, &mut entries);
    TruthVector::from_raw(lines, entries)
}

/// Generator truth vectors as plain tables, in set order.
pub fn generator_tables(set: &GeneratorSet) -> Vec<Vec<u32>> {
    set.members().iter().map(|(_, p)| p.entries().to_vec()).collect()
}

/// Distance counts for one generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceHistogram {
    pub kind: GeneratorKind,
    pub lines: u32,
    pub histogram: Histogram,
}

impl DistanceHistogram {
    pub fn from_distances(kind: GeneratorKind, lines: u32, distances: &[u8]) -> Self {
        let mut histogram = Histogram::new();
        for &d in distances.iter().filter(|&&d| d != UNVISITED) {
            histogram.add(d as usize);
        }
        Self { kind, lines, histogram }
    }

    pub fn label(&self) -> char {
        self.kind.label()
    }

    pub fn diameter(&self) -> usize {
        self.histogram.max().unwrap_or(0)
    }

    pub fn average(&self) -> f64 {
        self.histogram.mean()
    }

    pub fn total(&self) -> u64 {
        self.histogram.total()
    }

    pub fn count(&self, distance: usize) -> u64 {
        self.histogram.count(distance)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsResult {
    pub histogram: DistanceHistogram,
    /// Distance of every vertex, indexed by rank.
    pub distances: Vec<u8>,
}

impl BfsResult {
    pub fn distance(&self, p: &TruthVector) -> Result<u32> {
        if p.lines() != self.histogram.lines {
            return Err(Error::LineMismatch { expected: self.histogram.lines, found: p.lines() });
        }
        Ok(self.distances[rank_vertex(p.entries())] as u32)
    }
}

struct Search {
    distances: Vec<u8>,
    parent: Vec<u32>,
    via: Vec<u16>,
    /// First edge found inside one BFS level, as (vertex, generator index).
    same_level: Option<(u32, u16)>,
}

fn search(set: &GeneratorSet) -> Result<Search> {
    let lines = set.lines();
    let count = vertex_count(lines)?;
    let tables = generator_tables(set);
    let mut distances = vec![UNVISITED; count];
    let mut parent = vec![u32::MAX; count];
    let mut via = vec![u16::MAX; count];
    let mut same_level = None;

    let start: Vec<u32> = (0..1u32 << lines).collect();
    let root = rank_vertex(&start);
    distances[root] = 0;
    let mut frontier = vec![start];
    let mut level = 0u8;
    let mut next_p: Vec<u32> = Vec::with_capacity(1 << lines);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let r = rank_vertex(p);
            for (k, t) in tables.iter().enumerate() {
                next_p.clear();
                next_p.extend(p.iter().map(|&v| t[v as usize]));
                let q = rank_vertex(&next_p);
                match distances[q] {
                    UNVISITED => {
                        distances[q] = level + 1;
                        parent[q] = r as u32;
                        via[q] = k as u16;
                        next.push(next_p.clone());
                    }
                    d if d == level && same_level.is_none() => same_level = Some((r as u32, k as u16)),
                    _ => {}
                }
            }
        }
        frontier = next;
        level += 1;
    }
    Ok(Search { distances, parent, via, same_level })
}

/// Single-threaded exact search.
pub fn bfs(set: &GeneratorSet) -> Result<BfsResult> {
    let s = search(set)?;
    let histogram = DistanceHistogram::from_distances(set.kind(), set.lines(), &s.distances);
    Ok(BfsResult { histogram, distances: s.distances })
}

pub fn bfs_histogram(set: &GeneratorSet) -> Result<DistanceHistogram> {
    Ok(bfs(set)?.histogram)
}

pub fn distance(p: &TruthVector, set: &GeneratorSet) -> Result<u32> {
    if p.lines() != set.lines() {
        return Err(Error::LineMismatch { expected: set.lines(), found: p.lines() });
    }
    bfs(set)?.distance(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite,
    /// Closed walk of odd length from the identity: `vertices[k + 1]` is
    /// `generators[k]` applied to `vertices[k]`, and the last vertex is the first.
    OddWalk { vertices: Vec<TruthVector>, generators: Vec<Gate> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite)
    }
}

pub fn bipartite_check(set: &GeneratorSet) -> Result<Bipartiteness> {
    let s = search(set)?;
    let Some((u, k)) = s.same_level else {
        return Ok(Bipartiteness::Bipartite);
    };
    let lines = set.lines();
    let gates: Vec<Gate> = set.gates().copied().collect();

    // Path root -> u, recovered backwards through parent pointers.
    let path_to = |mut r: u32| {
        let mut ranks = vec![r];
        let mut steps = Vec::new();
        while s.parent[r as usize] != u32::MAX {
            steps.push(gates[s.via[r as usize] as usize]);
            r = s.parent[r as usize];
            ranks.push(r);
        }
        (ranks, steps)
    };
    let (mut up_ranks, mut up_steps) = path_to(u);
    up_ranks.reverse();
    up_steps.reverse();

    let mut vertices: Vec<TruthVector> = up_ranks.iter().map(|&r| unrank_vertex(r as usize, lines)).collect();
    let mut generators = up_steps;
    let w = gates[k as usize].apply(vertices.last().expect("path has a root"))?;
    generators.push(gates[k as usize]);
    let (down_ranks, down_steps) = path_to(rank_vertex(w.entries()) as u32);
    vertices.extend(down_ranks.iter().map(|&r| unrank_vertex(r as usize, lines)));
    generators.extend(down_steps);
    Ok(Bipartiteness::OddWalk { vertices, generators })
}

/// Hamming-distance bounds `h / 2 <= d < h` checked against exact distances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HammingSweep {
    /// Non-identity vertices checked.
    pub vertices: u64,
    pub violations: u64,
    /// Smallest and largest `2d - h`.
    pub lower_slack: (i64, i64),
    /// Smallest and largest `h - d`.
    pub upper_slack: (i64, i64),
    /// Vertices whose distance parity differs from their permutation parity.
    pub parity_mismatches: u64,
}

impl HammingSweep {
    pub fn holds(&self) -> bool {
        self.violations == 0 && self.parity_mismatches == 0
    }
}

pub fn hamming_sweep(result: &BfsResult) -> HammingSweep {
    let lines = result.histogram.lines;
    let mut sweep = HammingSweep {
        lower_slack: (i64::MAX, i64::MIN),
        upper_slack: (i64::MAX, i64::MIN),
        ..HammingSweep::default()
    };
    for (rank, &d) in result.distances.iter().enumerate() {
        let p = unrank_vertex(rank, lines);
        if p.is_odd() != (d % 2 == 1) {
            sweep.parity_mismatches += 1;
        }
        if d == 0 {
            continue;
        }
        let (d, h) = (d as i64, p.hamming_to_identity() as i64);
        sweep.vertices += 1;
        let lower = 2 * d - h;
        let upper = h - d;
        if lower < 0 || upper <= 0 {
            sweep.violations += 1;
        }
        sweep.lower_slack = (sweep.lower_slack.0.min(lower), sweep.lower_slack.1.max(lower));
        sweep.upper_slack = (sweep.upper_slack.0.min(upper), sweep.upper_slack.1.max(upper));
    }
    sweep
}
