//! Minimal Farey paths from `1/0` to `p/q` and the boundary slopes they
//! determine.
//!
//! A minimal path is the convergent path of an expansion `r + [b_1..b_k]`
//! with every `|b_i| >= 2`. Such a tail always has absolute value `< 1`, so
//! at each step the next quotient is `⌊y⌋` or `⌈y⌉` of the remaining
//! reciprocal `y`; the recursion terminates because denominators grow.
//!
//! Along a minimal path `sign(q_k) = sign(b_k) sign(q_{k-1})`, and the raw
//! edge determinant of edge `k` is `(-1)^k`, so after normalizing
//! denominators the unadjusted slope is `m = Σ_{k>=1} (-1)^k sign(b_k)`.
//! `boundary_slopes` uses that to aggregate slopes by memoized recursion
//! without materializing the paths, which matters for long expansions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;
use crate::rational::{farey_edge_det, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalPath {
    pub expansion: ContinuedFraction,
    pub vertices: Vec<Rational>,
    /// `m(γ)`: sum of edge determinants, first edge excluded.
    pub unadjusted_slope: i64,
    pub is_even: bool,
}

impl MinimalPath {
    fn from_expansion(expansion: ContinuedFraction) -> Self {
        let vertices = expansion.convergents();
        let unadjusted_slope = vertices
            .windows(2)
            .skip(1)
            .map(|w| farey_edge_det(&w[0], &w[1]))
            .sum::<BigInt>()
            .to_i64()
            .expect("path length fits in i64");
        let is_even = expansion.quotients.iter().all(|b| b.is_even());
        Self {
            expansion,
            vertices,
            unadjusted_slope,
            is_even,
        }
    }
}

/// Boundary slopes with the number of minimal paths realizing each.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SlopeMultiset {
    entries: BTreeMap<i64, u64>,
}

impl SlopeMultiset {
    pub fn from_counts(entries: BTreeMap<i64, u64>) -> Self {
        let entries = entries.into_iter().filter(|&(_, c)| c > 0).collect();
        Self { entries }
    }

    pub fn from_slopes(slopes: impl IntoIterator<Item = i64>) -> Self {
        let mut entries = BTreeMap::new();
        for s in slopes {
            *entries.entry(s).or_insert(0) += 1;
        }
        Self { entries }
    }

    pub fn entries(&self) -> &BTreeMap<i64, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, slope: i64) -> u64 {
        self.entries.get(&slope).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> BTreeSet<i64> {
        self.entries.keys().copied().collect()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of minimal paths.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn min(&self) -> i64 {
        *self.entries.keys().next().expect("non-empty")
    }

    pub fn max(&self) -> i64 {
        *self.entries.keys().next_back().expect("non-empty")
    }

    pub fn diameter(&self) -> i64 {
        self.max() - self.min()
    }

    pub fn crossing_number(&self) -> i64 {
        self.diameter() / 2
    }

    /// Slopes of the mirror image.
    pub fn negated(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(&s, &c)| (-s, c)).collect(),
        }
    }
}

fn check_rep(knot: &TwoBridgeKnot, rep: &BigInt) -> Result<Rational> {
    let q = knot.q();
    let p = rep.mod_floor(q);
    if p.is_zero() || !p.gcd(q).is_one() {
        return Err(Error::InvalidKnot(format!(
            "{rep} is not a unit modulo {q}"
        )));
    }
    let x = Rational::new(p.clone(), q.clone())?;
    let k2 = TwoBridgeKnot::new(p, q.clone())?;
    if !crate::knot::knots_equivalent(knot, &k2) {
        return Err(Error::InvalidKnot(format!(
            "{rep}/{q} does not represent {knot}"
        )));
    }
    Ok(x)
}

/// All expansions of `x` with every `|b_i| >= 2`, ordered lexicographically
/// by `(r, b_1, b_2, ...)`.
pub fn minimal_expansions_of(x: &Rational) -> Vec<ContinuedFraction> {
    let mut out = Vec::new();
    if x.is_infinite() {
        return out;
    }
    if x.is_integer() {
        out.push(ContinuedFraction::new(x.numer().clone(), Vec::new()));
        return out;
    }
    let mut prefix = Vec::new();
    for r in [x.floor(), x.ceil()] {
        let y = x.sub_integer(&r).recip();
        let start = out.len();
        collect_tails(&y, &mut prefix, &mut out);
        for cf in &mut out[start..] {
            cf.integer_part = r.clone();
        }
    }
    out
}

/// Expansions `[b_1..b_k]` of `1/y`, `|y| > 1`, with all `|b_i| >= 2`.
fn collect_tails(y: &Rational, prefix: &mut Vec<BigInt>, out: &mut Vec<ContinuedFraction>) {
    if y.is_integer() {
        prefix.push(y.numer().clone());
        out.push(ContinuedFraction::new(BigInt::zero(), prefix.clone()));
        prefix.pop();
        return;
    }
    for b in [y.floor(), y.ceil()] {
        if b.abs() < BigInt::from(2) {
            continue;
        }
        let next = y.sub_integer(&b).recip();
        prefix.push(b);
        collect_tails(&next, prefix, out);
        prefix.pop();
    }
}

/// Every minimal path for the representative `rep/q` of `knot`.
pub fn enumerate_minimal_expansions(
    knot: &TwoBridgeKnot,
    rep: &BigInt,
) -> Result<Vec<MinimalPath>> {
    let x = check_rep(knot, rep)?;
    Ok(minimal_expansions_of(&x)
        .into_iter()
        .map(MinimalPath::from_expansion)
        .collect())
}

/// The unique minimal expansion with every quotient even.
pub fn even_expansion_of(x: &Rational) -> Result<ContinuedFraction> {
    let mut found = Vec::new();
    if x.is_integer() {
        return Ok(ContinuedFraction::new(x.numer().clone(), Vec::new()));
    }
    'r: for r in [x.floor(), x.ceil()] {
        let mut y = x.sub_integer(&r).recip();
        let mut quotients = Vec::new();
        loop {
            if y.is_integer() {
                if y.numer().is_odd() {
                    continue 'r;
                }
                quotients.push(y.numer().clone());
                break;
            }
            let f = y.floor();
            let b = if f.is_even() { f } else { y.ceil() };
            y = y.sub_integer(&b).recip();
            quotients.push(b);
        }
        found.push(ContinuedFraction::new(r, quotients));
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        n => Err(Error::Invariant(format!(
            "{x} has {n} all-even minimal expansions"
        ))),
    }
}

pub fn even_expansion(knot: &TwoBridgeKnot, rep: &BigInt) -> Result<MinimalPath> {
    let x = check_rep(knot, rep)?;
    Ok(MinimalPath::from_expansion(even_expansion_of(&x)?))
}

/// `Σ_{k>=1} (-1)^k sign(b_k)`; equals `m(γ)` for minimal expansions.
pub fn sign_sum(quotients: &[BigInt]) -> i64 {
    quotients
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let s = if b.is_negative() { -1 } else { 1 };
            if i % 2 == 0 {
                -s
            } else {
                s
            }
        })
        .sum()
}

type Counts = Rc<BTreeMap<i64, u64>>;

/// Multiset of `Σ_{j>=1} (-1)^j sign(b_j)` over all minimal tails of `1/y`.
fn tail_sums(y: &Rational, memo: &mut HashMap<Rational, Counts>) -> Counts {
    if let Some(c) = memo.get(y) {
        return Rc::clone(c);
    }
    let mut acc = BTreeMap::new();
    if y.is_integer() {
        let s = if y.numer().is_negative() { 1 } else { -1 };
        acc.insert(s, 1);
    } else {
        for b in [y.floor(), y.ceil()] {
            if b.abs() < BigInt::from(2) {
                continue;
            }
            let head = if b.is_negative() { 1 } else { -1 };
            let sub = tail_sums(&y.sub_integer(&b).recip(), memo);
            for (&v, &c) in sub.iter() {
                let e = acc.entry(head - v).or_insert(0u64);
                *e = e.checked_add(c).expect("path count overflows u64");
            }
        }
    }
    let acc = Rc::new(acc);
    memo.insert(y.clone(), Rc::clone(&acc));
    acc
}

/// Unadjusted slopes of all minimal paths of `x`, with multiplicities.
pub fn unadjusted_slopes_of(x: &Rational) -> BTreeMap<i64, u64> {
    if x.is_integer() {
        return BTreeMap::from([(0, 1)]);
    }
    let mut memo = HashMap::new();
    let mut out = BTreeMap::new();
    for r in [x.floor(), x.ceil()] {
        let y = x.sub_integer(&r).recip();
        for (&m, &c) in tail_sums(&y, &mut memo).iter() {
            *out.entry(m).or_insert(0) += c;
        }
    }
    out
}

/// Boundary slopes `-2(m(γ) - m(γ_even))` of `x`.
pub fn slopes_of(x: &Rational) -> Result<SlopeMultiset> {
    let m_even = sign_sum(&even_expansion_of(x)?.quotients);
    let counts = unadjusted_slopes_of(x)
        .into_iter()
        .map(|(m, c)| (-2 * (m - m_even), c))
        .collect();
    Ok(SlopeMultiset::from_counts(counts))
}

pub fn boundary_slopes(knot: &TwoBridgeKnot, rep: &BigInt) -> Result<SlopeMultiset> {
    slopes_of(&check_rep(knot, rep)?)
}

/// Slopes of the knot, read off its canonical representative.
pub fn knot_slopes(knot: &TwoBridgeKnot) -> SlopeMultiset {
    boundary_slopes(knot, knot.canonical_p()).expect("canonical representative is valid")
}

/// Slopes computed from an explicit list of paths (one per path).
pub fn slopes_from_paths(paths: &[MinimalPath]) -> Result<SlopeMultiset> {
    let evens: Vec<_> = paths.iter().filter(|p| p.is_even).collect();
    if evens.len() != 1 {
        return Err(Error::Invariant(format!(
            "{} even paths among {} minimal paths",
            evens.len(),
            paths.len()
        )));
    }
    let m_even = evens[0].unadjusted_slope;
    Ok(SlopeMultiset::from_slopes(
        paths.iter().map(|p| -2 * (p.unadjusted_slope - m_even)),
    ))
}

/// `F(1) = F(2) = 1`, saturating at `u64::MAX`.
pub fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let c = a.saturating_add(b);
        a = b;
        b = c;
    }
    a
}

/// `(2 + ⌊m/2⌋, F(m+2))` for a strongly positive expansion with `m` quotients.
pub fn slope_count_bounds(cf: &ContinuedFraction) -> Result<(u64, u64)> {
    if !cf.is_strongly_positive() {
        return Err(Error::NotStronglyPositive(cf.to_string()));
    }
    let m = cf.len() as u64;
    Ok((2 + m / 2, fibonacci(m as u32 + 2)))
}

/// The upper and lower paths: extremes of the unadjusted slope.
pub fn extremal_paths(paths: &[MinimalPath]) -> Result<(&MinimalPath, &MinimalPath)> {
    let max = paths
        .iter()
        .map(|p| p.unadjusted_slope)
        .max()
        .ok_or_else(|| Error::Domain("no paths".into()))?;
    let min = paths.iter().map(|p| p.unadjusted_slope).min().unwrap();
    let uppers: Vec<_> = paths.iter().filter(|p| p.unadjusted_slope == max).collect();
    let lowers: Vec<_> = paths.iter().filter(|p| p.unadjusted_slope == min).collect();
    if uppers.len() != 1 || lowers.len() != 1 {
        return Err(Error::Invariant(format!(
            "extreme unadjusted slope attained by {} upper / {} lower paths",
            uppers.len(),
            lowers.len()
        )));
    }
    Ok((uppers[0], lowers[0]))
}
