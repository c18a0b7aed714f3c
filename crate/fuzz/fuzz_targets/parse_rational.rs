#![no_main]

use libfuzzer_sys::fuzz_target;
use proxgraph::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = text.parse::<Rational>() {
        let shown = r.to_string();
        assert_eq!(shown.parse::<Rational>().expect("display form parses"), r);
    }
});
