//! Deterministic instance builders shared by the benchmark targets.

use arborep::graph::Graph;
use arborep::lab::{gen_double_arborescence, gen_path_of_double_arborescences, GenConfig};
use arborep::orientation::DoubleArbOrientation;

/// A strict double-arborescence of the requested size with its orientation.
pub fn double_arborescence(n: usize, seed: u64) -> (Graph, DoubleArbOrientation) {
    let cfg = GenConfig { strict: n >= 5, ..GenConfig::new(n, seed) };
    gen_double_arborescence(&cfg).expect("size admits a strict instance")
}

/// A treelike comparability graph that is not a double-arborescence:
/// a path of n/8 strict blocks.
pub fn treelike_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 10, "needs at least two blocks");
    gen_path_of_double_arborescences(n / 8, &GenConfig::new(n, seed)).expect("n covers n/8 blocks")
}
