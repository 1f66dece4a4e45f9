#![no_main]

use libfuzzer_sys::fuzz_target;
use schur_division::parse::parse_column_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_column_range(text) {
        assert!(r.kmin() <= r.kmax());
        let again = parse_column_range(&format!("{}..{}", r.kmin(), r.kmax())).unwrap();
        assert_eq!(again, r);
    }
});
