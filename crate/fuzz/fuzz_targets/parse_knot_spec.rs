#![no_main]

use libfuzzer_sys::fuzz_target;
use twobridge::knot::parse_knot_spec;
use twobridge::report::SlopeReport;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(k) = parse_knot_spec(s) else { return };
    assert!(k.q().bit(0), "accepted an even denominator");
    // slope enumeration is exponential in the expansion length
    if k.q().bits() <= 14 {
        let r = SlopeReport::new(&k).expect("valid knot has slopes");
        assert_eq!(r.diameter, 2 * r.crossing_number);
    }
});
