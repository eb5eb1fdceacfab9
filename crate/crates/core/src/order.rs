//! Necessary conditions for `K_1 ≥ K_2` (an epimorphism of knot groups
//! preserving peripheral structure), and the minimality scan built on them.
//!
//! Checks run in a fixed order: determinant divisibility, slope scaling by an
//! odd degree `d`, the crossing-number bound `|d| cr(K_2) <= cr(K_1)`, and
//! divisibility of Alexander polynomials.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::alexander::alexander_general;
use crate::error::{Error, Result};
use crate::family::{classify_family, Family};
use crate::genus::equal_genus_d;
use crate::knot::{knots_equivalent, knots_with_denominator, TwoBridgeKnot};
use crate::laurent::{laurent_divides, LaurentPoly};
use crate::paths::{knot_slopes, SlopeMultiset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Determinant,
    Slopes,
    Crossing,
    Alexander,
}

impl Check {
    pub const ORDER: [Check; 4] = [
        Check::Determinant,
        Check::Slopes,
        Check::Crossing,
        Check::Alexander,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Check::Determinant => "determinant",
            Check::Slopes => "slopes",
            Check::Crossing => "crossing",
            Check::Alexander => "alexander",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Excluded(Check),
    Survives(BTreeSet<i64>),
}

impl Verdict {
    pub fn survives(&self) -> bool {
        matches!(self, Verdict::Survives(_))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderVerdict {
    pub k1: TwoBridgeKnot,
    pub k2: TwoBridgeKnot,
    pub checks: Vec<CheckResult>,
    /// Odd `d` surviving slope scaling and the crossing bound, for the
    /// canonical chirality of `K_1`. Mirroring `K_1` negates every `d`.
    pub witness_d: BTreeSet<i64>,
    pub verdict: Verdict,
}

impl OrderVerdict {
    pub fn failing_check(&self) -> Option<Check> {
        match self.verdict {
            Verdict::Excluded(c) => Some(c),
            Verdict::Survives(_) => None,
        }
    }
}

/// Everything the battery needs about one knot.
#[derive(Debug, Clone)]
pub struct KnotProfile {
    pub knot: TwoBridgeKnot,
    pub slopes: SlopeMultiset,
    pub alexander: LaurentPoly,
}

impl KnotProfile {
    pub fn new(knot: &TwoBridgeKnot) -> Self {
        let knot = knot.canonical();
        Self {
            slopes: knot_slopes(&knot),
            alexander: alexander_general(&knot),
            knot,
        }
    }
}

/// Odd `d ≠ 0` with `d · distinct(S2) ⊆ distinct(S1)`, without any bound on `|d|`.
fn scaling_degrees(s1: &SlopeMultiset, s2: &SlopeMultiset) -> BTreeSet<i64> {
    let d1 = s1.distinct();
    let d2 = s2.distinct();
    let Some(&pivot) = d2.iter().filter(|&&s| s != 0).min_by_key(|s| s.abs()) else {
        return BTreeSet::new();
    };
    d1.iter()
        .filter(|&&s| s % pivot == 0)
        .map(|&s| s / pivot)
        .filter(|&d| d.is_odd() && d2.iter().all(|&s| d1.contains(&(d * s))))
        .collect()
}

/// Odd `d` with `|d| diam(S2) <= diam(S1)` and `d · distinct(S2) ⊆ distinct(S1)`.
/// The mirror choice of `K_1` contributes the negated set, so the union
/// over both chiralities is symmetric under `d ↦ -d`.
pub fn slope_scaling_witnesses(s1: &SlopeMultiset, s2: &SlopeMultiset) -> BTreeSet<i64> {
    let (diam1, diam2) = (s1.diameter(), s2.diameter());
    scaling_degrees(s1, s2)
        .into_iter()
        .filter(|d| d.abs() * diam2 <= diam1)
        .collect()
}

pub fn candidate_battery(k1: &TwoBridgeKnot, k2: &TwoBridgeKnot) -> Result<OrderVerdict> {
    battery(&KnotProfile::new(k1), &KnotProfile::new(k2))
}

/// Runs all four checks on precomputed profiles; the verdict names the
/// first failure.
pub fn battery(p1: &KnotProfile, p2: &KnotProfile) -> Result<OrderVerdict> {
    let (k1, k2) = (&p1.knot, &p2.knot);
    if knots_equivalent(k1, k2) {
        return Err(Error::Domain(format!("{k1} and {k2} are equivalent")));
    }
    let mut checks = Vec::with_capacity(4);

    let (q1, q2) = (k1.q(), k2.q());
    let det_ok = q1.is_multiple_of(q2) && !(q1 / q2).is_one();
    checks.push(CheckResult {
        check: Check::Determinant,
        passed: det_ok,
        detail: if det_ok {
            format!("q1/q2 = {}", q1 / q2)
        } else {
            format!("{q2} does not properly divide {q1}")
        },
    });

    let scaling = scaling_degrees(&p1.slopes, &p2.slopes);
    checks.push(CheckResult {
        check: Check::Slopes,
        passed: !scaling.is_empty(),
        detail: format!("odd d with d*S2 in S1: {scaling:?}"),
    });

    let (cr1, cr2) = (p1.slopes.crossing_number(), p2.slopes.crossing_number());
    let witness_d: BTreeSet<i64> = scaling
        .into_iter()
        .filter(|d| d.abs() * cr2 <= cr1)
        .collect();
    checks.push(CheckResult {
        check: Check::Crossing,
        passed: !witness_d.is_empty(),
        detail: format!("cr1 = {cr1}, cr2 = {cr2}, surviving d: {witness_d:?}"),
    });

    let alex_ok = laurent_divides(&p2.alexander, &p1.alexander);
    checks.push(CheckResult {
        check: Check::Alexander,
        passed: alex_ok,
        detail: format!("({}) | ({}): {alex_ok}", p2.alexander, p1.alexander),
    });

    let verdict = match checks.iter().find(|c| !c.passed) {
        Some(c) => Verdict::Excluded(c.check),
        None => Verdict::Survives(witness_d.clone()),
    };
    Ok(OrderVerdict {
        k1: k1.clone(),
        k2: k2.clone(),
        checks,
        witness_d,
        verdict,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    /// `(3_x, 3_y)`-style label when `K_1` has exactly three slopes.
    pub case: Option<String>,
    pub verdict: OrderVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalityReport {
    pub knot: TwoBridgeKnot,
    pub distinct_slopes: usize,
    pub family: Option<Family>,
    pub candidates: Vec<ScanEntry>,
    pub survivors: Vec<TwoBridgeKnot>,
}

fn family_label(k: &TwoBridgeKnot) -> String {
    classify_family(k).map_or_else(|| "5+".to_string(), |t| t.family.label().to_string())
}

/// Runs the battery against every knot whose determinant is a proper
/// divisor `q2 >= 3` of `q1`, one representative per class.
pub fn minimality_scan(k1: &TwoBridgeKnot) -> Result<MinimalityReport> {
    let q1 = k1
        .q()
        .to_u64()
        .ok_or_else(|| Error::Domain(format!("{k1} is too large to scan")))?;
    let p1 = KnotProfile::new(k1);
    let tag = classify_family(&p1.knot);
    let distinct = p1.slopes.distinct_count();
    let three = distinct == 3;
    let mut candidates = Vec::new();
    let mut survivors = Vec::new();
    for q2 in (3..q1).filter(|d| q1 % d == 0) {
        for k2 in knots_with_denominator(q2) {
            let v = battery(&p1, &KnotProfile::new(&k2))?;
            if v.verdict.survives() {
                survivors.push(k2.clone());
            }
            let case = three.then(|| {
                format!(
                    "({},{})",
                    tag.as_ref().map_or("?", |t| t.family.label()),
                    family_label(&k2)
                )
            });
            candidates.push(ScanEntry { case, verdict: v });
        }
    }
    Ok(MinimalityReport {
        knot: p1.knot,
        distinct_slopes: distinct,
        family: tag.map(|t| t.family),
        candidates,
        survivors,
    })
}

/// For `K_1 = [a1, a2]` and `K_2 = [b1, b2]` both in family `3_ii`: the
/// degrees `d` with `(a1, a2) = d (b1, b2)` that pass slope scaling and the
/// genus equality of their character varieties.
pub fn genus_case_check(k1: &TwoBridgeKnot, k2: &TwoBridgeKnot) -> Result<BTreeSet<i64>> {
    let params = |k: &TwoBridgeKnot| match classify_family(k) {
        Some(t) if t.family == Family::T3ii => Ok((t.params[0], t.params[1])),
        _ => Err(Error::Domain(format!("{k} is not in family 3_ii"))),
    };
    let (a1, a2) = params(k1)?;
    let (b1, b2) = params(k2)?;
    if a1 % b1 != 0 || a1 / b1 != a2 / b2 || a2 % b2 != 0 {
        return Ok(BTreeSet::new());
    }
    let d = a1 / b1;
    let slopes = slope_scaling_witnesses(&knot_slopes(k1), &knot_slopes(k2));
    let scaled = slopes.contains(&d) || slopes.contains(&-d);
    let genus = equal_genus_d(b1, b2)?;
    Ok(if scaled && genus.contains(&d) {
        BTreeSet::from([d])
    } else {
        BTreeSet::new()
    })
}
