use revgraph::bfs::bfs_parallel;
use revgraph::enumerate::{histogram, histogram_sequential};
use revgraph_core::cayley::bfs;
use revgraph_core::{Algorithm, GeneratorSet};

#[test]
fn parallel_search_matches_reference() {
    for set in [GeneratorSet::generalized(3).unwrap(), GeneratorSet::multiple_control(3).unwrap()] {
        assert_eq!(bfs_parallel(&set).unwrap(), bfs(&set).unwrap());
    }
}

#[test]
fn parallel_enumeration_matches_reference() {
    for algo in Algorithm::ALL {
        assert_eq!(histogram(3, algo).unwrap(), histogram_sequential(3, algo).unwrap());
    }
}
