use proptest::prelude::*;
use revgraph::dump::{decode_distances, encode_distances, histogram_csv, parse_histogram_csv};
use revgraph::tfc::{parse_circuit, write_circuit};
use revgraph::tv::{parse_truth_vector, write_truth_vector};
use revgraph_core::cayley::bfs;
use revgraph_core::{Circuit, Gate, GeneratorSet, TruthVector};

fn circuit() -> impl Strategy<Value = Circuit> {
    (1..=8u32).prop_flat_map(|n| {
        let gate = (0..n, any::<u32>(), any::<u32>()).prop_map(move |(t, c, p)| {
            let c = c & ((1 << n) - 1) & !(1 << t);
            Gate::from_masks(n, t, c, p & c).unwrap()
        });
        prop::collection::vec(gate, 0..20).prop_map(move |gates| Circuit::from_gates(n, gates).unwrap())
    })
}

proptest! {
    #[test]
    fn circuit_text_round_trip(c in circuit()) {
        let text = write_circuit(&c).unwrap();
        prop_assert_eq!(parse_circuit(&text).unwrap(), c);
    }

    #[test]
    fn truth_vector_round_trip(v in (1..=6u32).prop_flat_map(|n| Just((0..1u32 << n).collect::<Vec<_>>()).prop_shuffle())) {
        let f = TruthVector::from_entries(v).unwrap();
        prop_assert_eq!(parse_truth_vector(&write_truth_vector(&f)).unwrap(), f);
    }
}

#[test]
fn distance_table_round_trip() {
    let set = GeneratorSet::generalized(2).unwrap();
    let res = bfs(&set).unwrap();
    let bytes = encode_distances(set.kind(), 2, &res.distances).unwrap();
    assert_eq!(bytes.len(), 16 + 24);
    let (kind, lines, distances) = decode_distances(&bytes).unwrap();
    assert_eq!((kind, lines), (set.kind(), 2));
    assert_eq!(distances, res.distances);
    let csv = histogram_csv("distance", &res.histogram.histogram);
    assert!(csv.starts_with("distance,count\n0,1\n1,4\n"));
    assert_eq!(parse_histogram_csv(&csv).unwrap(), res.histogram.histogram);
}
