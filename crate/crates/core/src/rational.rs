//! Exact rationals on the extended line `Q ∪ {1/0}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `numerator / denominator`.
///
/// The denominator is never negative, and `1/0` is the only value allowed to
/// have a zero denominator. It plays the role of the Farey vertex at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den` in lowest terms. `±k/0` collapses to `1/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let mut num = num.into();
        let mut den = den.into();
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self::infinity());
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Self { num, den })
    }

    /// Builds a fraction from a pair that is already coprime, only fixing the
    /// overall sign. Used for matrix columns, which have determinant `±1`.
    pub(crate) fn from_coprime(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!(num.is_zero() && den.is_zero()));
        if den.is_zero() {
            return Self::infinity();
        }
        if den.is_negative() {
            Self {
                num: -num,
                den: -den,
            }
        } else {
            Self { num, den }
        }
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Largest integer `<= self`. Panics on `1/0`.
    pub fn floor(&self) -> BigInt {
        assert!(!self.is_infinite(), "floor of 1/0");
        self.num.div_floor(&self.den)
    }

    /// Smallest integer `>= self`. Panics on `1/0`.
    pub fn ceil(&self) -> BigInt {
        assert!(!self.is_infinite(), "ceil of 1/0");
        -((-&self.num).div_floor(&self.den))
    }

    /// `self - n` for an integer `n`.
    pub fn sub_integer(&self, n: &BigInt) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            num: &self.num - n * &self.den,
            den: self.den.clone(),
        }
    }

    /// `1 / self`; `1/0 <-> 0/1`.
    pub fn recip(&self) -> Self {
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Determinant of the directed Farey edge `a/b -> c/d`, i.e. `ad - cb`.
///
/// The two vertices are Farey neighbours exactly when this is `±1`.
pub fn farey_edge_det(from: &Rational, to: &Rational) -> BigInt {
    &from.num * &to.den - &to.num * &from.den
}

/// The mediant `(a+c)/(b+d)`, third vertex of the Farey triangle on an edge.
pub fn mediant(from: &Rational, to: &Rational) -> Rational {
    Rational::from_coprime(&from.num + &to.num, &from.den + &to.den)
}

/// Finite rationals compare by value; `1/0` sorts above everything.
impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an integer: {s:?}")));
    }
    t.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Parses `"p/q"` or a bare integer.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_bigint(p)?, parse_bigint(q)?),
            None => Ok(Rational::from_integer(parse_bigint(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(r(6, -4), r(-3, 2));
        assert_eq!(r(-3, 2).to_string(), "-3/2");
        assert_eq!(r(-5, 0), Rational::infinity());
        assert_eq!(Rational::new(0, 0), Err(Error::ZeroOverZero));
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(r(7, 3).floor(), BigInt::from(2));
        assert_eq!(r(7, 3).ceil(), BigInt::from(3));
        assert_eq!(r(-7, 4).floor(), BigInt::from(-2));
        assert_eq!(r(-7, 4).ceil(), BigInt::from(-1));
        assert_eq!(r(4, 1).ceil(), BigInt::from(4));
    }

    #[test]
    fn edge_determinants() {
        assert_eq!(farey_edge_det(&r(2, 5), &r(7, 17)), BigInt::from(-1));
        assert_eq!(
            farey_edge_det(&Rational::infinity(), &r(0, 1)),
            BigInt::from(1)
        );
        assert_eq!(farey_edge_det(&r(1, 2), &r(1, 3)), BigInt::from(1));
        assert_eq!(mediant(&r(1, 2), &r(1, 3)), r(2, 5));
    }

    #[test]
    fn parses() {
        assert_eq!("7/17".parse::<Rational>().unwrap(), r(7, 17));
        assert_eq!("-4/6".parse::<Rational>().unwrap(), r(-2, 3));
        assert_eq!("5".parse::<Rational>().unwrap(), r(5, 1));
        assert!("7/".parse::<Rational>().is_err());
        assert!("a/3".parse::<Rational>().is_err());
        assert!("0/0".parse::<Rational>().is_err());
        assert!("1/２".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![Rational::infinity(), r(1, 2), r(-3, 1), r(1, 3)];
        v.sort();
        assert_eq!(v, vec![r(-3, 1), r(1, 3), r(1, 2), Rational::infinity()]);
    }
}
