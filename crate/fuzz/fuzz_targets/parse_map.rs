#![no_main]

use libfuzzer_sys::fuzz_target;
use proxgraph::dynamics::validate_map;
use proxgraph::fixtures::hamming_cube;
use proxgraph::io::parse_map;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = parse_map(text) {
        let cube = hamming_cube();
        let (a, b) = (cube.part("A").unwrap(), cube.part("B").unwrap());
        let _ = validate_map(&table, &cube, a, b);
    }
});
