#![no_main]

use libfuzzer_sys::fuzz_target;
use proxgraph::family::TaggedPoint;
use proxgraph::io::parse_family;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(family) = parse_family(text) {
        let _ = family.extremum();
        let _ = family.distance(&TaggedPoint::a(1), &TaggedPoint::b(1));
    }
});
