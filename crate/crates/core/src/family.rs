//! Closed-form classification of 2-bridge knots with at most four distinct
//! boundary slopes, and the equivalent arithmetic conditions on `p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::cf::{euclid_expansion, ContinuedFraction};
use crate::knot::TwoBridgeKnot;
use crate::paths::SlopeMultiset;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `[a1]`, `a1` odd: torus knots.
    T2,
    /// `[a1, a2]`, both even.
    T3i,
    /// `[a1, a2]`, `a1` even, `a2` odd.
    T3ii,
    /// `[a1, 1, a1]`, `a1` odd.
    T3iii,
    /// `[a1, a2, a1]`, both odd, `a2 > 1`.
    T4i,
    /// `[a1, 1, a3]`, `a1 != a3`, both odd.
    T4ii,
    /// `[a1, 1, a3]`, `a1 != a3`, `a1` even, `a3` odd.
    T4iii,
    /// `[a1, 1, a1, a1+1]`, `a1` even.
    T4iv,
    /// `[2, 1, 1, 1, 2] = 8/21`.
    T4v,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::T2 => "2",
            Family::T3i => "3_i",
            Family::T3ii => "3_ii",
            Family::T3iii => "3_iii",
            Family::T4i => "4_i",
            Family::T4ii => "4_ii",
            Family::T4iii => "4_iii",
            Family::T4iv => "4_iv",
            Family::T4v => "4_v",
        }
    }

    pub fn slope_count(self) -> usize {
        match self {
            Family::T2 => 2,
            Family::T3i | Family::T3ii | Family::T3iii => 3,
            _ => 4,
        }
    }

    /// Matches a strongly positive quotient vector against the row
    /// patterns, returning the row parameters.
    pub fn match_quotients(a: &[i64]) -> Option<(Family, Vec<i64>)> {
        let odd = |x: i64| x % 2 != 0;
        let even = |x: i64| x % 2 == 0;
        match *a {
            [a1] if odd(a1) => Some((Family::T2, vec![a1])),
            [a1, a2] if even(a1) && even(a2) => Some((Family::T3i, vec![a1, a2])),
            [a1, a2] if even(a1) && odd(a2) => Some((Family::T3ii, vec![a1, a2])),
            [a1, 1, a3] if a1 == a3 && odd(a1) => Some((Family::T3iii, vec![a1])),
            [a1, a2, a3] if a1 == a3 && odd(a1) && odd(a2) && a2 > 1 => {
                Some((Family::T4i, vec![a1, a2]))
            }
            [a1, 1, a3] if a1 != a3 && odd(a1) && odd(a3) => Some((Family::T4ii, vec![a1, a3])),
            [a1, 1, a3] if a1 != a3 && even(a1) && odd(a3) => Some((Family::T4iii, vec![a1, a3])),
            [a1, 1, a3, a4] if a1 == a3 && a4 == a1 + 1 && even(a1) => {
                Some((Family::T4iv, vec![a1]))
            }
            [2, 1, 1, 1, 2] => Some((Family::T4v, vec![])),
            _ => None,
        }
    }

    /// The tabulated slope multiset for a row with the given parameters.
    pub fn predicted_slopes(self, params: &[i64]) -> SlopeMultiset {
        let s: Vec<i64> = match (self, params) {
            (Family::T2, &[a1]) => vec![0, 2 * a1],
            (Family::T3i, &[a1, a2]) => vec![-2 * a1, 0, 2 * a2],
            (Family::T3ii, &[a1, a2]) => vec![0, 2 * a1, 2 * a1 + 2 * a2],
            (Family::T3iii, &[a1]) => vec![-4 * a1 - 2, -2 * a1 - 2, -2 * a1 - 2, 0],
            (Family::T4i, &[a1, a2]) => vec![
                -4 * a1 - 2 * a2,
                -2 * a1 - 2 * a2,
                -2 * a1 - 2 * a2,
                -2 * a2,
                0,
            ],
            (Family::T4ii, &[a1, a3]) => {
                vec![-2 * a1 - 2 * a3 - 2, -2 * a3 - 2, -2 * a1 - 2, 0]
            }
            (Family::T4iii, &[a1, a3]) => vec![-2 * a1, 0, -2 * a1 + 2 * a3, 2 * a3 + 2],
            (Family::T4iv, &[a1]) => vec![-2 * a1, 0, 0, 2 * a1 + 2, 2 * a1 + 2, 4 * a1 + 4],
            (Family::T4v, &[]) => vec![-8, -4, -4, 0, 0, 0, 6],
            _ => panic!("wrong parameter count for family {}", self.label()),
        };
        SlopeMultiset::from_slopes(s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyTag {
    pub family: Family,
    pub params: Vec<i64>,
    /// `+1` if the matched expansion presents the knot itself, `-1` if it
    /// presents the mirror image (relative to the canonical representative).
    #[serde(rename = "chirality")]
    pub chirality_sign: i8,
    #[serde(skip)]
    pub expansion: ContinuedFraction,
    /// The class representative whose expansion matched.
    #[serde(skip)]
    pub representative: BigInt,
    pub predicted_slopes: SlopeMultiset,
}

impl FamilyTag {
    /// Predicted slopes expressed for the canonical representative.
    pub fn predicted_for_canonical(&self) -> SlopeMultiset {
        if self.chirality_sign > 0 {
            self.predicted_slopes.clone()
        } else {
            self.predicted_slopes.negated()
        }
    }
}

/// Strongly positive expansions of every class representative `p' < q/2`.
pub fn strongly_positive_expansions(knot: &TwoBridgeKnot) -> Vec<(BigInt, ContinuedFraction)> {
    let q = knot.q();
    knot.class_reps()
        .iter()
        .filter(|&r| (r * 2u32) < *q)
        .map(|r| {
            let x = Rational::new(r.clone(), q.clone()).expect("q > 0");
            (r.clone(), euclid_expansion(&x).expect("finite"))
        })
        .collect()
}

/// Number of quotients in the knot's strongly positive expansions.
pub fn strongly_positive_length(knot: &TwoBridgeKnot) -> usize {
    strongly_positive_expansions(knot)
        .first()
        .map(|(_, cf)| cf.len())
        .expect("every knot has a representative below q/2")
}

/// Matches the knot (or its mirror) against the table rows; `None` means the
/// knot has at least five distinct slopes.
pub fn classify_family(knot: &TwoBridgeKnot) -> Option<FamilyTag> {
    let canonical = knot.canonical();
    for (rep, cf) in strongly_positive_expansions(knot) {
        if cf.len() > 5 {
            continue;
        }
        let Some(quotients) = cf
            .quotients
            .iter()
            .map(|b| b.to_i64())
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        if let Some((family, params)) = Family::match_quotients(&quotients) {
            let chirality_sign = if canonical.same_chirality(&rep) {
                1
            } else {
                -1
            };
            let predicted_slopes = family.predicted_slopes(&params);
            return Some(FamilyTag {
                family,
                params,
                chirality_sign,
                expansion: cf,
                representative: rep,
                predicted_slopes,
            });
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArithmeticCondition {
    /// `p = 1`
    PIsOne,
    /// `p | q - 1`
    PDividesQMinusOne,
    /// `p² = q + 1`
    PSquaredIsQPlusOne,
    /// `p + 1 | q` and `q | p² - 1`
    PPlusOneDividesQ,
    /// `p | q + 1`
    PDividesQPlusOne,
    /// `(p - 1)³ = q²`
    CubeIsSquare,
    /// `p/q = 8/21`
    EightTwentyFirsts,
}

impl ArithmeticCondition {
    pub fn tier(self) -> u8 {
        use ArithmeticCondition::*;
        match self {
            PIsOne => 2,
            PDividesQMinusOne | PSquaredIsQPlusOne => 3,
            _ => 4,
        }
    }

    fn holds(self, p: &BigInt, q: &BigInt) -> bool {
        use ArithmeticCondition::*;
        let one = BigInt::one();
        match self {
            PIsOne => p.is_one(),
            PDividesQMinusOne => (q - &one).is_multiple_of(p),
            PSquaredIsQPlusOne => p * p == q + &one,
            PPlusOneDividesQ => q.is_multiple_of(&(p + &one)) && (p * p - &one).is_multiple_of(q),
            PDividesQPlusOne => (q + &one).is_multiple_of(p),
            CubeIsSquare => {
                let d = p - &one;
                &d * &d * &d == q * q
            }
            EightTwentyFirsts => *p == BigInt::from(8) && *q == BigInt::from(21),
        }
    }

    pub const ALL: [ArithmeticCondition; 7] = [
        ArithmeticCondition::PIsOne,
        ArithmeticCondition::PDividesQMinusOne,
        ArithmeticCondition::PSquaredIsQPlusOne,
        ArithmeticCondition::PPlusOneDividesQ,
        ArithmeticCondition::PDividesQPlusOne,
        ArithmeticCondition::CubeIsSquare,
        ArithmeticCondition::EightTwentyFirsts,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryFlags {
    /// Conditions satisfied by at least one class representative.
    pub satisfied: Vec<ArithmeticCondition>,
    /// Predicted number of distinct slopes (2, 3 or 4), `None` for five or more.
    pub tier: Option<u8>,
}

/// Evaluates the arithmetic conditions over all four class representatives.
/// Lower tiers take precedence over higher ones.
pub fn corollary_arithmetic(knot: &TwoBridgeKnot) -> CorollaryFlags {
    let q = knot.q();
    let satisfied: Vec<_> = ArithmeticCondition::ALL
        .into_iter()
        .filter(|c| knot.class_reps().iter().any(|p| c.holds(p, q)))
        .collect();
    let tier = satisfied.iter().map(|c| c.tier()).min();
    CorollaryFlags { satisfied, tier }
}
