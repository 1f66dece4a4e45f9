#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::parse_rational_sequence;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_rational_sequence(text) {
        let canonical: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(parse_rational_sequence(&canonical.join(",")).unwrap(), v);
    }
});
