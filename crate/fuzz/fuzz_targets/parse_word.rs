#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::ors::{ors_apply, parse_seed, OrsWord};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = s.parse::<OrsWord>() else {
        return;
    };
    let again: OrsWord = word.to_string().parse().expect("display output parses");
    assert_eq!(again, word);
    if word.len() <= 8 && word.syllables().iter().all(|x| x.c.abs() <= 50) {
        let seed = parse_seed("[3]").unwrap();
        // construction may reject a word but must not panic
        let _ = ors_apply(&seed, &word);
    }
});
