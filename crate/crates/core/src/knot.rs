//! 2-bridge knots `K_{p/q}` up to isotopy and mirror image.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{parse_bigint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TwoBridgeKnot {
    #[serde(serialize_with = "ser_big")]
    p: BigInt,
    #[serde(serialize_with = "ser_big")]
    q: BigInt,
    #[serde(skip)]
    class_reps: Vec<BigInt>,
    #[serde(serialize_with = "ser_big")]
    canonical_p: BigInt,
    #[serde(skip)]
    chirality_reps: Vec<BigInt>,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl TwoBridgeKnot {
    /// Normalizes `K_{p/q}`: `p` may be any integer coprime to `q`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let p = p.into();
        let q = q.into();
        if q.is_one() {
            return Err(Error::Unknot);
        }
        if !q.is_positive() {
            return Err(Error::InvalidKnot(format!(
                "denominator {q} must be positive"
            )));
        }
        let g = p.gcd(&q);
        if !g.is_one() {
            return Err(Error::NotCoprime {
                p: p.to_string(),
                q: q.to_string(),
                gcd: g.to_string(),
            });
        }
        if q.is_even() {
            return Err(Error::Link(q.to_string()));
        }
        let p = p.mod_floor(&q);
        let inv = mod_inverse(&p, &q).expect("unit modulo q");
        let mut class_reps = vec![p.clone(), &q - &p, inv.clone(), &q - &inv];
        class_reps.sort();
        class_reps.dedup();
        let canonical_p = class_reps[0].clone();
        let mut chirality_reps = vec![p.clone(), inv];
        chirality_reps.sort();
        chirality_reps.dedup();
        Ok(Self {
            p,
            q,
            class_reps,
            canonical_p,
            chirality_reps,
        })
    }

    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        Self::new(p, q)
    }

    pub fn from_fraction(x: &Rational) -> Result<Self> {
        if x.is_infinite() {
            return Err(Error::InvalidKnot("1/0 is not a 2-bridge knot".into()));
        }
        Self::new(x.numer().clone(), x.denom().clone())
    }

    /// The representative this knot was built from, reduced into `(0, q)`.
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `{p, q-p, p⁻¹, q-p⁻¹}` reduced into `(0, q)`, ascending.
    pub fn class_reps(&self) -> &[BigInt] {
        &self.class_reps
    }

    pub fn canonical_p(&self) -> &BigInt {
        &self.canonical_p
    }

    /// `{p, p⁻¹}`: the representatives of the same (not mirrored) knot.
    pub fn chirality_reps(&self) -> &[BigInt] {
        &self.chirality_reps
    }

    pub fn is_torus(&self) -> bool {
        self.class_reps.iter().any(|r| r.is_one())
    }

    /// True if `K_{rep/q}` is this knot rather than its mirror image.
    /// Amphichiral knots answer true for every class representative.
    pub fn same_chirality(&self, rep: &BigInt) -> bool {
        let r = rep.mod_floor(&self.q);
        self.chirality_reps.contains(&r)
    }

    /// The same knot presented by the canonical representative.
    pub fn canonical(&self) -> Self {
        Self::new(self.canonical_p.clone(), self.q.clone()).expect("valid")
    }

    pub fn mirror(&self) -> Self {
        Self::new(&self.q - &self.p, self.q.clone()).expect("valid")
    }

    pub fn fraction(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone()).expect("q > 0")
    }

    /// Key identifying the equivalence class (knot up to mirror image).
    pub fn class_key(&self) -> (BigInt, BigInt) {
        (self.q.clone(), self.canonical_p.clone())
    }
}

/// Parses a knot given as `p/q` or as a continued fraction `r+[b1,...]`.
/// A fraction is taken as written, so `4/6` is rejected rather than reduced.
pub fn parse_knot_spec(s: &str) -> Result<TwoBridgeKnot> {
    let t = s.trim();
    if t.contains('[') {
        let x = t.parse::<crate::cf::ContinuedFraction>()?.eval();
        return TwoBridgeKnot::from_fraction(&x);
    }
    match t.split_once('/') {
        Some((p, q)) => TwoBridgeKnot::new(parse_bigint(p.trim())?, parse_bigint(q.trim())?),
        None => TwoBridgeKnot::new(parse_bigint(t)?, 1),
    }
}

/// Equality up to isotopy and mirror image.
pub fn knots_equivalent(a: &TwoBridgeKnot, b: &TwoBridgeKnot) -> bool {
    a.q == b.q && a.canonical_p == b.canonical_p
}

/// One representative knot per equivalence class with denominator `q`,
/// ordered by canonical `p`.
pub fn knots_with_denominator(q: u64) -> Vec<TwoBridgeKnot> {
    if q < 3 || q.is_multiple_of(2) {
        return Vec::new();
    }
    (1..q)
        .filter(|&p| p.gcd(&q) == 1)
        .filter_map(|p| {
            let k = TwoBridgeKnot::new(p, q).ok()?;
            (k.canonical_p == BigInt::from(p)).then_some(k)
        })
        .collect()
}

/// Every knot class with odd `3 <= q <= q_max`, ordered by `(q, canonical p)`.
pub fn knot_census(q_max: u64) -> Vec<TwoBridgeKnot> {
    (3..=q_max)
        .step_by(2)
        .flat_map(knots_with_denominator)
        .collect()
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}/{}", self.p, self.q)
    }
}
