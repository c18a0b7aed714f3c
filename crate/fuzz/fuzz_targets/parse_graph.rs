#![no_main]

use libfuzzer_sys::fuzz_target;
use proxgraph::io::{parse_graph, write_graph};
use proxgraph::realize::{decide, DecisionLevel, Target};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph(text) {
        assert_eq!(parse_graph(&write_graph(&g)).expect("written graphs parse"), g);
        let _ = proxgraph::dot::export_dot(&g);
        for level in [DecisionLevel::ExactParts, DecisionLevel::UpToIsomorphism] {
            let metric = decide(&g, Target::ProximinalMetric, level).realizable;
            assert!(!metric || decide(&g, Target::Farthest, level).realizable);
        }
    }
});
