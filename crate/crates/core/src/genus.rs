//! Genus of the character variety for the `3_ii` family `[b1, b2]`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

fn check_params(b1: i64, b2: i64) -> Result<()> {
    if b1 < 2 || b1 % 2 != 0 {
        return Err(Error::Domain(format!("b1 = {b1} must be even and >= 2")));
    }
    if b2 < 1 || b2 % 2 == 0 {
        return Err(Error::Domain(format!("b2 = {b2} must be odd and >= 1")));
    }
    Ok(())
}

/// `3 ((b2+1)/2)(b1/2) - (b2+1)/2 - 4 (b1/2) + 2`
pub fn genus_3ii(b1: i64, b2: i64) -> Result<i64> {
    check_params(b1, b2)?;
    let h2 = (b2 + 1) / 2;
    let h1 = b1 / 2;
    Ok(3 * h2 * h1 - h2 - 4 * h1 + 2)
}

/// Positive `d` with `genus_3ii(d b1, d b2) = genus_3ii(b1, b2)`, i.e. the
/// positive roots of `d (3 d b1 b2 - 5 b1 - 2 b2) = 3 b1 b2 - 5 b1 - 2 b2`.
///
/// The equation factors as `(d - 1)(3 b1 b2 d + C) = 0` with
/// `C = 3 b1 b2 - 5 b1 - 2 b2`, so the roots are `1` and `-C / (3 b1 b2)`.
pub fn equal_genus_d(b1: i64, b2: i64) -> Result<BTreeSet<i64>> {
    check_params(b1, b2)?;
    let lead = 3 * b1 * b2;
    let c = lead - 5 * b1 - 2 * b2;
    let mut roots = BTreeSet::from([1]);
    if c < 0 && (-c) % lead == 0 {
        roots.insert(-c / lead);
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lhs_minus_rhs(d: i64, b1: i64, b2: i64) -> i64 {
        let c = 3 * b1 * b2 - 5 * b1 - 2 * b2;
        d * (3 * d * b1 * b2 - 5 * b1 - 2 * b2) - c
    }

    #[test]
    fn values() {
        assert_eq!(genus_3ii(2, 3), Ok(2));
        assert_eq!(genus_3ii(6, 9), Ok(3 * 5 * 3 - 5 - 12 + 2));
        assert!(genus_3ii(3, 3).is_err());
        assert!(genus_3ii(2, 4).is_err());
        assert_eq!(equal_genus_d(2, 3).unwrap(), BTreeSet::from([1]));
        // (2, 1) is a double root at 1
        assert_eq!(equal_genus_d(2, 1).unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn brute_force_agrees() {
        for b1 in (2..=40).step_by(2) {
            for b2 in (1..=41).step_by(2) {
                let brute: BTreeSet<i64> = (1..=1000)
                    .filter(|&d| lhs_minus_rhs(d, b1, b2) == 0)
                    .collect();
                assert_eq!(equal_genus_d(b1, b2).unwrap(), brute, "({b1},{b2})");
                if b2 >= 3 {
                    assert_eq!(brute, BTreeSet::from([1]));
                    assert!(genus_3ii(b1, b2).unwrap() >= 1);
                }
            }
        }
    }

    #[test]
    fn equation_is_genus_equality() {
        for b1 in (2..=12).step_by(2) {
            for b2 in (1..=13).step_by(2) {
                for d in (1..=9).step_by(2) {
                    let same = genus_3ii(d * b1, d * b2).unwrap() == genus_3ii(b1, b2).unwrap();
                    assert_eq!(same, lhs_minus_rhs(d, b1, b2) == 0);
                }
            }
        }
    }
}
