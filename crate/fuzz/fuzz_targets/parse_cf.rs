#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::{cf_strongly_positive, ContinuedFraction};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cf) = s.parse::<ContinuedFraction>() else {
        return;
    };
    let again: ContinuedFraction = cf.to_string().parse().expect("display output parses");
    assert_eq!(again, cf);
    if cf.len() > 64 {
        return;
    }
    let x = cf.eval();
    if let Ok(sp) = cf_strongly_positive(&x) {
        assert_eq!(sp.cf.eval(), sp.value);
        assert_eq!(sp.value.denom(), x.denom());
    }
});
