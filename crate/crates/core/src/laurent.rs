//! Integer Laurent polynomials, compared up to the units `±t^k`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// `Σ coefficients[i] · t^(min_exponent + i)`.
///
/// Stored trimmed: first and last coefficients nonzero (the zero polynomial
/// has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coefficients: Vec<BigInt>,
    min_exponent: i64,
}

impl LaurentPoly {
    pub fn new(coefficients: Vec<BigInt>, min_exponent: i64) -> Self {
        let mut coefficients = coefficients;
        let lead_zeros = coefficients.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coefficients.len() {
            return Self::zero();
        }
        coefficients.drain(..lead_zeros);
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        Self {
            coefficients,
            min_exponent: min_exponent + lead_zeros as i64,
        }
    }

    pub fn from_i64(coefficients: &[i64], min_exponent: i64) -> Self {
        Self::new(
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
            min_exponent,
        )
    }

    pub fn zero() -> Self {
        Self {
            coefficients: Vec::new(),
            min_exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1], 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    /// Highest minus lowest exponent.
    pub fn span(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Representative with nonzero constant term, no negative powers, and
    /// positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let negate = self.coefficients.last().is_some_and(|c| c.is_negative());
        let coefficients = if negate {
            self.coefficients.iter().map(|c| -c).collect()
        } else {
            self.coefficients.clone()
        };
        Self {
            coefficients,
            min_exponent: 0,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.min_exponent == 0 && self.coefficients.last().is_none_or(|c| c.is_positive())
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equals_up_to_units(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// `p(t) ≐ p(1/t)`.
    pub fn is_symmetric_up_to_units(&self) -> bool {
        let n = self.normalized();
        let rev = n.coefficients.iter().rev().cloned().collect();
        n.equals_up_to_units(&Self::new(rev, 0))
    }

    /// Value at `t = ±1`.
    pub fn eval_unit(&self, t: i8) -> BigInt {
        assert!(t == 1 || t == -1);
        let e0 = self.min_exponent;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if t == -1 && (e0 + i as i64).rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .sum()
    }

    /// `t^k · self`
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coefficients: self.coefficients.clone(),
            min_exponent: self.min_exponent + k,
        }
    }

    /// Quotient `n / self` in `Z[t, t⁻¹]` up to units, if it exists.
    pub fn exact_quotient_of(&self, n: &Self) -> Option<Self> {
        let d = self.normalized();
        let n = n.normalized();
        if d.is_zero() {
            return None;
        }
        if n.is_zero() {
            return Some(Self::zero());
        }
        if n.coefficients.len() < d.coefficients.len() {
            return None;
        }
        // Long division from the top. The quotient over Q is unique, so a
        // non-integral step means no integer quotient exists.
        let mut rem = n.coefficients.clone();
        let dl = d.coefficients.len();
        let lead = d.coefficients.last().unwrap();
        let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coefficients.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot, 0))
    }
}

/// True iff `n = d · c` for an integer Laurent polynomial `c`, up to units.
pub fn laurent_divides(d: &LaurentPoly, n: &LaurentPoly) -> bool {
    d.exact_quotient_of(n).is_some()
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        LaurentPoly::new(c, self.min_exponent + rhs.min_exponent)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_exponent + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = e == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        let mut st = s.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("min_exponent", &self.min_exponent)?;
        st.serialize_field("coefficients", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64], e: i64) -> LaurentPoly {
        LaurentPoly::from_i64(c, e)
    }

    #[test]
    fn trims_and_normalizes() {
        let p = lp(&[0, -1, 3, -1, 0], -2);
        assert_eq!(p.min_exponent(), -1);
        assert_eq!(p.normalized(), lp(&[1, -3, 1], 0));
        assert!(p.is_symmetric_up_to_units());
        assert!(!lp(&[1, 2], 0).is_symmetric_up_to_units());
        assert_eq!(lp(&[0, 0], 3), LaurentPoly::zero());
    }

    #[test]
    fn evaluates_at_units() {
        let fig8 = lp(&[-1, 3, -1], -1);
        assert_eq!(fig8.eval_unit(-1), BigInt::from(5));
        assert_eq!(fig8.eval_unit(1), BigInt::from(1));
    }

    #[test]
    fn divisibility() {
        let tref = lp(&[1, -1, 1], 0);
        let fig8 = lp(&[1, -3, 1], 0);
        assert!(laurent_divides(&tref, &tref));
        assert!(!laurent_divides(&fig8, &tref));
        let prod = &tref.shift(5) * &fig8;
        assert!(laurent_divides(&tref, &prod));
        assert!(laurent_divides(&fig8, &prod.shift(-9)));
        assert_eq!(tref.exact_quotient_of(&prod).unwrap(), fig8);
        // 2 does not divide t + 1 over the integers
        assert!(!laurent_divides(&lp(&[2], 0), &lp(&[1, 1], 0)));
        assert!(laurent_divides(&lp(&[2], 0), &lp(&[4, 2], 3)));
    }

    #[test]
    fn displays() {
        assert_eq!(lp(&[1, -3, 1], 0).to_string(), "1 - 3t + t^2");
        assert_eq!(lp(&[-2, 0, 5], -1).to_string(), "-2t^-1 + 5t");
    }
}
