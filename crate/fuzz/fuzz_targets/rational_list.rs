#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::parse_rational_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(a) = parse_rational_list(text) {
        assert_eq!(parse_rational_list(&a.to_string()).unwrap(), a);
    }
});
