mod common;

use common::{enumeration_mismatches, farey_paths, library_paths};
use num_integer::Integer;
use twobridge::paths::minimal_expansions_of;
use twobridge::Rational;

#[test]
fn small_cases() {
    assert_eq!(farey_paths(1, 3).len(), 2);
    assert_eq!(farey_paths(2, 5).len(), 3);
    assert_eq!(farey_paths(7, 17).len(), 5);
    assert!(farey_paths(7, 17).contains(&vec![(1, 0), (0, 1), (1, 3), (2, 5), (7, 17)]));
    assert_eq!(farey_paths(7, 17), library_paths(7, 17));
}

#[test]
fn enumerations_agree_below_100() {
    let (checked, bad) = enumeration_mismatches(99);
    assert!(checked > 2000);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn exactly_one_even_expansion() {
    for q in (3..=199i64).step_by(2) {
        for p in (1..q).filter(|p| p.gcd(&q) == 1) {
            let x = Rational::new(p, q).unwrap();
            let even = minimal_expansions_of(&x)
                .into_iter()
                .filter(|cf| cf.quotients.iter().all(|b| b.is_even()))
                .count();
            assert_eq!(even, 1, "{p}/{q}");
        }
    }
}
