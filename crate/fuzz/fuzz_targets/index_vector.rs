#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::parse_index_vector;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(j) = parse_index_vector(text) {
        assert_eq!(parse_index_vector(&j.to_string()).unwrap(), j);
    }
});
