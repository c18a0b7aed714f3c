#![no_main]

use libfuzzer_sys::fuzz_target;
use proxgraph::io::{parse_space, write_space};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(space) = parse_space(text) {
        let again = parse_space(&write_space(&space)).expect("written spaces parse");
        assert_eq!(again, space);
        let class = space.classify();
        if class.violation.is_none() && !space.is_empty() {
            for r in space.distance_set() {
                space.ball_partition(&r).expect("ultrametric spaces partition");
            }
        }
    }
});
