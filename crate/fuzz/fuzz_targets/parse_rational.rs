#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = s.parse::<Rational>() {
        // the printed form parses back to the same value
        let again: Rational = x.to_string().parse().expect("display output parses");
        assert_eq!(again, x);
    }
});
