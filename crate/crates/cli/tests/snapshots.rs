use std::path::Path;

use singlab::corpus::{self, SNAPSHOTS};
use singlab_core::DualGraph;

#[test]
fn generated_graphs_match_stored_snapshots() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for (family, param) in SNAPSHOTS {
        let name = corpus::snapshot_name(family, param);
        let stored = std::fs::read_to_string(dir.join(&name)).unwrap();
        let generated = corpus::graph(family, param).unwrap();
        assert_eq!(stored.trim_end(), generated.to_json(), "{name}");
        assert_eq!(DualGraph::parse(&stored).unwrap(), generated, "{name}");
    }
}

#[test]
fn serialization_round_trips_on_the_corpus() {
    for family in corpus::FAMILIES {
        for param in family.min_param()..=6 {
            let g = corpus::graph(family, param).unwrap();
            assert_eq!(DualGraph::parse(&g.to_json()).unwrap(), g, "{family}({param})");
        }
    }
}
