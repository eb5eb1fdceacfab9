#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::ors::{ors_apply, parse_seed, OrsWord};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(seed) = parse_seed(s) else { return };
    assert!(seed.is_strongly_positive());
    if seed.len() <= 8 && seed.quotients.iter().all(|b| b.bits() <= 16) {
        let word: OrsWord = "0:-,1:-".parse().unwrap();
        let _ = ors_apply(&seed, &word);
    }
});
