#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::census::parse_checks;
use twobridge::report::Format;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ids) = parse_checks(s) {
        assert!(!ids.is_empty());
    }
    let _ = s.parse::<Format>();
});
