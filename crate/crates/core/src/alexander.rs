//! Alexander polynomials of 2-bridge knots.
//!
//! The general route reads the even expansion `r + [2c_1, ..., 2c_n]` of
//! `p/q` as a linear plumbing of twisted bands. Its Seifert matrix is
//! tridiagonal, so `det(V - tV^T)` obeys the continuant recurrence
//!
//! ```text
//! D_0 = 1,  D_1 = d_1 (1 - t),  D_k = d_k (1 - t) D_{k-1} + t D_{k-2}
//! ```
//!
//! with `d_k = (-1)^k c_k`. The cost is quadratic in the expansion length,
//! independent of the size of `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{Family, FamilyTag};
use crate::knot::TwoBridgeKnot;
use crate::laurent::LaurentPoly;
use crate::paths::even_expansion_of;

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

/// `k (1 - t) a(t)`
fn times_one_minus_t(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + 1];
    for (i, c) in a.iter().enumerate() {
        let kc = k * c;
        out[i + 1] -= &kc;
        out[i] += kc;
    }
    out
}

/// `t a(t)`
fn times_t(a: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(BigInt::zero());
    out.extend_from_slice(a);
    out
}

/// Alexander polynomial from the band twists `c_1..c_n` of an even expansion.
pub fn alexander_from_twists(twists: &[BigInt]) -> LaurentPoly {
    let mut prev = vec![BigInt::from(1)];
    let mut cur = prev.clone();
    for (i, c) in twists.iter().enumerate() {
        let d = if i % 2 == 0 { -c } else { c.clone() };
        let next = if i == 0 {
            times_one_minus_t(&cur, &d)
        } else {
            poly_add(&times_one_minus_t(&cur, &d), &times_t(&prev))
        };
        prev = std::mem::replace(&mut cur, next);
    }
    LaurentPoly::new(cur, 0).normalized()
}

/// Alexander polynomial of `K_{p/q}`, normalized.
pub fn alexander_general(knot: &TwoBridgeKnot) -> LaurentPoly {
    let even = even_expansion_of(&knot.fraction()).expect("odd q has an even expansion");
    let twists: Vec<BigInt> = even.quotients.iter().map(|b| b / 2).collect();
    alexander_from_twists(&twists)
}

/// Closed forms for the three-slope families. Row `3_i` uses
/// `a1a2/4 - (1 + a1a2/2) t + a1a2/4 t²`, which has `|Δ(-1)| = a1a2 + 1 = q`.
pub fn alexander_family(tag: &FamilyTag) -> Result<LaurentPoly> {
    let coeffs: Vec<BigInt> = match (tag.family, tag.params.as_slice()) {
        (Family::T3i, &[a1, a2]) => {
            let h = BigInt::from(a1 * a2 / 4);
            vec![h.clone(), -BigInt::from(1 + a1 * a2 / 2), h]
        }
        (Family::T3ii, &[a1, a2]) => {
            let end = BigInt::from((a2 + 1) / 2);
            let mut v = vec![end.clone()];
            for i in 1..a1 {
                v.push(BigInt::from(if i % 2 == 0 { a2 } else { -a2 }));
            }
            v.push(end);
            v
        }
        (Family::T3iii, &[a1]) => {
            let s = (a1 + 1) * (a1 + 1);
            let e = BigInt::from(s / 4);
            vec![e.clone(), BigInt::from(1 - s / 2), e]
        }
        (f, _) => {
            return Err(Error::Domain(format!(
                "no closed-form Alexander polynomial for family {f}"
            )))
        }
    };
    Ok(LaurentPoly::new(coeffs, 0).normalized())
}

/// The row `3_i` polynomial as originally tabulated:
/// `-a1a2/4 + (1 - a1a2/2) t - a1a2/4 t²`. It evaluates to `±1` at `t = -1`,
/// so it cannot be the Alexander polynomial; kept for the discrepancy tests.
pub fn alexander_3i_as_tabulated(a1: i64, a2: i64) -> LaurentPoly {
    let h = a1 * a2 / 4;
    LaurentPoly::from_i64(&[-h, 1 - a1 * a2 / 2, -h], 0)
}

/// `|Δ(-1)|`, the knot determinant.
pub fn determinant(poly: &LaurentPoly) -> BigInt {
    let v = poly.eval_unit(-1);
    if v < BigInt::zero() {
        -v
    } else {
        v
    }
}

/// Sanity contract for 2-bridge Alexander polynomials.
pub fn check_contracts(knot: &TwoBridgeKnot, poly: &LaurentPoly) -> Result<()> {
    let at_one = poly.eval_unit(1);
    if determinant(poly) != *knot.q() || !(at_one == BigInt::from(1) || at_one == BigInt::from(-1))
    {
        return Err(Error::Invariant(format!(
            "{knot}: Δ = {poly} has Δ(-1) = {}, Δ(1) = {at_one}",
            poly.eval_unit(-1)
        )));
    }
    if !poly.is_symmetric_up_to_units() {
        return Err(Error::Invariant(format!(
            "{knot}: Δ = {poly} is not symmetric"
        )));
    }
    if knot.q().is_even() {
        return Err(Error::Invariant(format!("{knot} has even determinant")));
    }
    Ok(())
}
