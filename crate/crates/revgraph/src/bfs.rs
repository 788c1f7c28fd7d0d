//! Level-synchronous breadth-first search with a parallel frontier.
//!
//! Each level is expanded in parallel against a read-only snapshot of the
//! distance table; newly found vertices are then claimed sequentially, so
//! the result does not depend on scheduling.

use rayon::prelude::*;
use revgraph_core::cayley::{generator_tables, rank_vertex, unrank_vertex, vertex_count, DistanceHistogram, UNVISITED};
use revgraph_core::{BfsResult, GeneratorSet};

use crate::Result;

pub fn bfs_parallel(set: &GeneratorSet) -> Result<BfsResult> {
    let lines = set.lines();
    let count = vertex_count(lines)?;
    let tables = generator_tables(set);
    let mut distances = vec![UNVISITED; count];
    let identity: Vec<u32> = (0..1u32 << lines).collect();
    let root = rank_vertex(&identity) as u32;
    distances[root as usize] = 0;
    let mut frontier = vec![root];
    let mut level = 0u8;
    while !frontier.is_empty() {
        let seen = &distances;
        let mut found: Vec<u32> = frontier
            .par_iter()
            .flat_map_iter(|&r| {
                let p = unrank_vertex(r as usize, lines).into_entries();
                tables
                    .iter()
                    .map(move |t| rank_vertex(&p.iter().map(|&v| t[v as usize]).collect::<Vec<_>>()) as u32)
                    .filter(|&q| seen[q as usize] == UNVISITED)
                    .collect::<Vec<_>>()
            })
            .collect();
        found.par_sort_unstable();
        found.dedup();
        level += 1;
        for &q in &found {
            distances[q as usize] = level;
        }
        frontier = found;
    }
    let histogram = DistanceHistogram::from_distances(set.kind(), lines, &distances);
    Ok(BfsResult { histogram, distances })
}

#[cfg(test)]
mod tests {
    use super::*;
    use revgraph_core::cayley::bfs;

    #[test]
    fn matches_reference_on_small_graphs() {
        for lines in 1..=2 {
            for set in [GeneratorSet::generalized(lines).unwrap(), GeneratorSet::multiple_control(lines).unwrap()] {
                assert_eq!(bfs_parallel(&set).unwrap(), bfs(&set).unwrap());
            }
        }
        assert!(bfs_parallel(&GeneratorSet::generalized(4).unwrap()).is_err());
    }
}
