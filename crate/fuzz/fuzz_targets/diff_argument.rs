#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::parse_diff_argument;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_diff_argument(text) {
        assert_eq!(parse_diff_argument(&d.to_string()).unwrap(), d);
    }
});
