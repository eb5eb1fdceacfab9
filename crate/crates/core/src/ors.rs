//! ORS pairs: from a strongly positive seed `a` and a word of syllables
//! `(c_i, η_i)`, the child fraction
//!
//! ```text
//! p'/q' = [ε_1 a, 2ε_1 c_1, ε_2 a⁻¹, 2ε_2 c_2, ..., ε_{n+1} a]
//! ```
//!
//! where `a⁻¹` is `a` reversed, `ε_1 = 1` and `ε_i = Π_{j<i} (-η_j)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::knot::{knots_equivalent, TwoBridgeKnot};
use crate::paths::knot_slopes;
use crate::rational::{parse_bigint, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub c: i64,
    pub eta: i8,
}

impl Syllable {
    pub fn new(c: i64, eta: i8) -> Result<Self> {
        if eta != 1 && eta != -1 {
            return Err(Error::InvalidWord(format!("η = {eta} must be ±1")));
        }
        if c == 0 && eta == 1 {
            return Err(Error::InvalidWord("syllable (0,+) is the identity".into()));
        }
        Ok(Self { c, eta })
    }

    /// Every valid syllable with `|c| <= c_max`, ordered by `(c, η)`.
    pub fn all(c_max: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for c in -c_max..=c_max {
            for eta in [-1, 1] {
                if let Ok(s) = Self::new(c, eta) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.c, if self.eta > 0 { '+' } else { '-' })
    }
}

/// `W_1 ... W_n` with `n` even and no identity syllables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrsWord {
    syllables: Vec<Syllable>,
}

impl OrsWord {
    pub fn new(syllables: Vec<Syllable>) -> Result<Self> {
        if syllables.is_empty() || !syllables.len().is_multiple_of(2) {
            return Err(Error::InvalidWord(format!(
                "length {} must be even and positive",
                syllables.len()
            )));
        }
        for s in &syllables {
            Syllable::new(s.c, s.eta)?;
        }
        Ok(Self { syllables })
    }

    pub fn from_pairs(pairs: &[(i64, i8)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(c, e)| Syllable::new(c, e))
                .collect::<Result<_>>()?,
        )
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// `ε_1, ..., ε_{n+1}`.
    pub fn eps(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.syllables.len() + 1);
        let mut e = 1i8;
        out.push(e);
        for s in &self.syllables {
            e *= -s.eta;
            out.push(e);
        }
        out
    }

    /// Number of syllables with `c_i ≠ 0`.
    pub fn nonzero_count(&self) -> usize {
        self.syllables.iter().filter(|s| s.c != 0).count()
    }
}

/// Parses `c1:e1,c2:e2,...` with `e` one of `+`, `-`, `+1`, `-1`.
impl FromStr for OrsWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut syllables = Vec::new();
        for part in s.split(',') {
            let (c, e) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("syllable {part:?} is not c:e")))?;
            let c: i64 = parse_bigint(c.trim())?
                .try_into()
                .map_err(|_| Error::Parse(format!("twist {c:?} out of range")))?;
            let eta = match e.trim() {
                "+" | "+1" | "1" => 1,
                "-" | "-1" | "\u{2212}" => -1,
                other => return Err(Error::Parse(format!("sign {other:?} is not + or -"))),
            };
            syllables.push(Syllable::new(c, eta)?);
        }
        Self::new(syllables)
    }
}

impl fmt::Display for OrsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `[[c, η], ...]`
impl Serialize for OrsWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.syllables.len()))?;
        for syl in &self.syllables {
            seq.serialize_element(&[syl.c, i64::from(syl.eta)])?;
        }
        seq.end()
    }
}

/// Parses a seed vector `[a_1,...,a_m]` and checks it is strongly positive.
pub fn parse_seed(s: &str) -> Result<ContinuedFraction> {
    let cf: ContinuedFraction = s.parse()?;
    if !cf.is_strongly_positive() {
        return Err(Error::NotStronglyPositive(cf.to_string()));
    }
    Ok(cf)
}

#[derive(Debug, Clone)]
pub struct OrsPair {
    pub seed: ContinuedFraction,
    pub word: OrsWord,
    pub raw: ContinuedFraction,
    pub reduced: ContinuedFraction,
    pub value: Rational,
    pub child: TwoBridgeKnot,
    pub parent: TwoBridgeKnot,
}

impl OrsPair {
    /// `q'/q`.
    pub fn index(&self) -> BigInt {
        self.child.q() / self.parent.q()
    }

    pub fn is_trivial(&self) -> bool {
        knots_equivalent(&self.child, &self.parent)
    }
}

fn signed(v: &[BigInt], e: i8) -> impl Iterator<Item = BigInt> + '_ {
    v.iter().map(move |x| if e > 0 { x.clone() } else { -x })
}

/// Builds the raw and zero-free expansions of `W(p/q)`.
pub fn ors_apply(seed: &ContinuedFraction, word: &OrsWord) -> Result<OrsPair> {
    if !seed.is_strongly_positive() {
        return Err(Error::NotStronglyPositive(seed.to_string()));
    }
    let a = &seed.quotients;
    let a_rev: Vec<BigInt> = a.iter().rev().cloned().collect();
    let eps = word.eps();
    let n = word.len();
    let m = a.len();

    let mut raw = Vec::with_capacity((n + 1) * m + n);
    for (i, syl) in word.syllables().iter().enumerate() {
        let block = if i % 2 == 0 { a } else { &a_rev };
        raw.extend(signed(block, eps[i]));
        raw.push(BigInt::from(2 * i64::from(eps[i]) * syl.c));
        if syl.c == 0 && eps[i] != eps[i + 1] {
            return Err(Error::Invariant(format!(
                "zero twist {} between blocks of opposite sign",
                i + 1
            )));
        }
    }
    raw.extend(signed(a, eps[n]));
    let raw = ContinuedFraction::new(BigInt::zero(), raw);
    let reduced = raw.drop_all_zeros()?;

    let expected = n * (m - 1) + m + 2 * word.nonzero_count();
    if reduced.len() != expected || !reduced.integer_part.is_zero() {
        return Err(Error::Invariant(format!(
            "{reduced} has {} quotients, expected {expected}",
            reduced.len()
        )));
    }
    let value = raw.eval();
    if reduced.eval() != value {
        return Err(Error::Invariant(format!(
            "{raw} and {reduced} differ in value"
        )));
    }
    let parent = TwoBridgeKnot::from_fraction(&seed.eval())?;
    let child = TwoBridgeKnot::from_fraction(&value)?;
    Ok(OrsPair {
        seed: seed.clone(),
        word: word.clone(),
        raw,
        reduced,
        value,
        child,
        parent,
    })
}

/// Rewrites a zero-free expansion with positive first quotient into a
/// strongly positive one of the same value.
///
/// Repeatedly negates at the first negative quotient, `[.., m, -n, b] =
/// [.., m-1, 1, n-1, -b]`, and merges any zero this creates. This is the
/// sign-change induction: each step removes the first sign change, and the
/// three cases for blocks of length ≥ 2 as well as the tail induction for
/// one-quotient seeds are all instances of it.
pub fn ors_strongly_positive(cf: &ContinuedFraction) -> Result<ContinuedFraction> {
    if !cf.integer_part.is_zero()
        || cf.quotients.first().is_none_or(|b| !b.is_positive())
        || cf.quotients.iter().any(|b| b.is_zero())
    {
        return Err(Error::Rewrite(format!(
            "{cf} is not a zero-free expansion with positive lead"
        )));
    }
    let mut cur = cf.clone();
    // Every step removes one sign change or merges two quotients.
    let budget = 4 * cf.len() + 8;
    for _ in 0..budget {
        let Some(i) = cur.quotients.iter().position(|b| b.is_negative()) else {
            break;
        };
        cur = cur.rewrite_negate(i)?;
        // The rewrite may leave zeros at i-1 (from m = 1) or i+1 (from n = 1).
        while let Some(z) = cur.quotients.iter().position(|b| b.is_zero()) {
            if z == 0 {
                return Err(Error::Rewrite(format!("leading zero while rewriting {cf}")));
            }
            cur = cur.rewrite_drop_zero(z)?;
        }
    }
    if !cur.is_strongly_positive() {
        return Err(Error::Invariant(format!(
            "rewriting {cf} ended at {cur}, which is not strongly positive"
        )));
    }
    if cur.eval() != cf.eval() {
        return Err(Error::Invariant(format!(
            "rewriting {cf} changed its value"
        )));
    }
    Ok(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dichotomy {
    /// Child and parent are torus knots, the child has two slopes.
    TorusCase,
    /// The child has this many (at least five) distinct slopes.
    AtLeastFive(usize),
}

impl Dichotomy {
    pub fn label(self) -> &'static str {
        match self {
            Dichotomy::TorusCase => "torus",
            Dichotomy::AtLeastFive(_) => "at_least_five",
        }
    }
}

/// Checks the child is a two-slope torus knot over a torus parent, or has at
/// least five distinct slopes. Anything else is reported as an error.
pub fn theorem42_check(pair: &OrsPair) -> Result<Dichotomy> {
    let distinct = knot_slopes(&pair.child).distinct_count();
    if pair.child.is_torus() {
        if pair.parent.is_torus() && distinct == 2 {
            return Ok(Dichotomy::TorusCase);
        }
        return Err(Error::Invariant(format!(
            "torus child {} of parent {} has {distinct} slopes",
            pair.child, pair.parent
        )));
    }
    if distinct >= 5 {
        Ok(Dichotomy::AtLeastFive(distinct))
    } else {
        Err(Error::Invariant(format!(
            "child {} of {} by word {} has only {distinct} slopes",
            pair.child, pair.parent, pair.word
        )))
    }
}

/// Strongly positive seeds `[a_1..a_m]` with `m <= m_max`, entries at most
/// `a_max` and odd denominator, in lexicographic order of `(m, a)`.
pub fn sweep_seeds(m_max: usize, a_max: i64) -> Vec<ContinuedFraction> {
    let mut out = Vec::new();
    let base = a_max.max(1) as u64;
    for m in 1..=m_max {
        for code in 0..base.pow(m as u32) {
            // digits of `code` in base a_max, most significant first
            let mut v = vec![0i64; m];
            let mut c = code;
            for x in v.iter_mut().rev() {
                *x = (c % base) as i64 + 1;
                c /= base;
            }
            let cf = ContinuedFraction::from_i64(0, &v);
            if cf.is_strongly_positive() && cf.eval().denom().is_odd() {
                out.push(cf);
            }
        }
    }
    out
}

/// Every word of length `n` over `syllables`, lexicographically.
pub fn all_words(syllables: &[Syllable], n: usize) -> Vec<OrsWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Syllable>| {
                syllables.iter().map(move |s| {
                    let mut w = w.clone();
                    w.push(*s);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|w| OrsWord::new(w).expect("valid syllables"))
        .collect()
}

/// `count` words of length `n` drawn uniformly from `syllables`.
pub fn random_words<R: Rng>(
    rng: &mut R,
    syllables: &[Syllable],
    n: usize,
    count: usize,
) -> Vec<OrsWord> {
    (0..count)
        .map(|_| {
            let w = (0..n)
                .map(|_| syllables[rng.gen_range(0..syllables.len())])
                .collect();
            OrsWord::new(w).expect("valid syllables")
        })
        .collect()
}

/// Checks `q | q'` with `q'/q > 1` unless the pair is trivial.
pub fn check_divisibility(pair: &OrsPair) -> Result<()> {
    let (qc, qp) = (pair.child.q(), pair.parent.q());
    if pair.is_trivial() {
        return Ok(());
    }
    if !qc.is_multiple_of(qp) || (qc / qp).is_one() {
        return Err(Error::Invariant(format!(
            "q = {qp} does not properly divide q' = {qc} for word {}",
            pair.word
        )));
    }
    Ok(())
}
