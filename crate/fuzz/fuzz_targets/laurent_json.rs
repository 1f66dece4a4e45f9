#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::{laurent_to_json, parse_laurent_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_laurent_json(text) {
        let canonical = laurent_to_json(&p);
        let back = parse_laurent_json(&canonical).unwrap();
        assert_eq!(laurent_to_json(&back), canonical);
    }
});
