//! Continued fractions `r + [b_1, ..., b_n]` and the value-preserving
//! rewrites used to move between expansions.
//!
//! Evaluation goes through the matrix product
//! `M = [[r,1],[1,0]] [[b_1,1],[1,0]] ... [[b_n,1],[1,0]]`, whose first column
//! is `±(p, q)`. Every factor has determinant `-1`, so the column is always
//! coprime and no intermediate division can fail; zero quotients are fine.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_bigint, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub integer_part: BigInt,
    pub quotients: Vec<BigInt>,
}

/// A 2×2 integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2([
            [BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ])
    }

    /// `[[x, 1], [1, 0]]`
    pub fn quotient(x: &BigInt) -> Self {
        Mat2([[x.clone(), BigInt::one()], [BigInt::one(), BigInt::zero()]])
    }

    /// `diag(-1, 1)`
    pub fn reflection() -> Self {
        Mat2([
            [-BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ])
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let m = &self.0;
        Mat2([[&m[0][0] * k, &m[0][1] * k], [&m[1][0] * k, &m[1][1] * k]])
    }

    /// The product `M_{x_1} M_{x_2} ... M_{x_k}` of quotient matrices.
    pub fn of_quotients<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Self {
        xs.into_iter()
            .fold(Mat2::identity(), |acc, x| &acc * &Mat2::quotient(x))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2([
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ])
    }
}

/// Which fraction a strongly positive expansion actually evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StronglyPositive {
    pub cf: ContinuedFraction,
    /// The value of `cf`: either the input or its reversal partner.
    pub value: Rational,
    /// True when the Euclidean expansion started with 1 and was reversed.
    pub reversed: bool,
}

impl ContinuedFraction {
    pub fn new(integer_part: impl Into<BigInt>, quotients: Vec<BigInt>) -> Self {
        Self {
            integer_part: integer_part.into(),
            quotients,
        }
    }

    pub fn from_i64(integer_part: i64, quotients: &[i64]) -> Self {
        Self::new(
            integer_part,
            quotients.iter().map(|&b| BigInt::from(b)).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// The matrix `M_{(r, b_1, ..., b_n)}`.
    pub fn matrix(&self) -> Mat2 {
        Mat2::of_quotients(std::iter::once(&self.integer_part).chain(&self.quotients))
    }

    /// Exact value. Total: `1/0` is a legal result.
    pub fn eval(&self) -> Rational {
        let (mut p, mut q) = (self.integer_part.clone(), BigInt::one());
        let (mut pp, mut qq) = (BigInt::one(), BigInt::zero());
        for b in &self.quotients {
            let np = b * &p + &pp;
            let nq = b * &q + &qq;
            pp = std::mem::replace(&mut p, np);
            qq = std::mem::replace(&mut q, nq);
        }
        Rational::from_coprime(p, q)
    }

    /// The Farey path `1/0, r/1, ...` traced by the convergents.
    pub fn convergents(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.quotients.len() + 2);
        out.push(Rational::infinity());
        let (mut p, mut q) = (self.integer_part.clone(), BigInt::one());
        let (mut pp, mut qq) = (BigInt::one(), BigInt::zero());
        out.push(Rational::from_coprime(p.clone(), q.clone()));
        for b in &self.quotients {
            let np = b * &p + &pp;
            let nq = b * &q + &qq;
            pp = std::mem::replace(&mut p, np);
            qq = std::mem::replace(&mut q, nq);
            out.push(Rational::from_coprime(p.clone(), q.clone()));
        }
        out
    }

    /// `0 + [b_1..b_n]` with every `b_i > 0` and `b_1, b_n > 1`.
    pub fn is_strongly_positive(&self) -> bool {
        let one = BigInt::one();
        self.integer_part.is_zero()
            && !self.quotients.is_empty()
            && self.quotients.iter().all(|b| b.is_positive())
            && self.quotients[0] > one
            && self.quotients[self.quotients.len() - 1] > one
    }

    /// `r + [a, m, -n, b] = r + [a, m-1, 1, n-1, -b]`, with `index` pointing
    /// at the negative entry `-n`.
    pub fn rewrite_negate(&self, index: usize) -> Result<Self> {
        if index == 0 || index >= self.quotients.len() {
            return Err(Error::Rewrite(format!(
                "index {index} has no preceding quotient in {self}"
            )));
        }
        let neg = &self.quotients[index];
        if !neg.is_negative() {
            return Err(Error::Rewrite(format!(
                "quotient {neg} at index {index} of {self} is not negative"
            )));
        }
        let n = -neg;
        let mut out = Vec::with_capacity(self.quotients.len() + 2);
        out.extend_from_slice(&self.quotients[..index - 1]);
        out.push(&self.quotients[index - 1] - 1);
        out.push(BigInt::one());
        out.push(n - 1);
        out.extend(self.quotients[index + 1..].iter().map(|b| -b));
        Ok(Self::new(self.integer_part.clone(), out))
    }

    /// `r + [a, m, 0, n, b] = r + [a, m+n, b]`. A leading zero folds into the
    /// integer part: `r + [0, n, b] = (r+n) + [b]`.
    pub fn rewrite_drop_zero(&self, index: usize) -> Result<Self> {
        match self.quotients.get(index) {
            Some(z) if z.is_zero() => {}
            _ => {
                return Err(Error::Rewrite(format!(
                    "no zero quotient at index {index} of {self}"
                )))
            }
        }
        if index + 1 >= self.quotients.len() {
            return Err(Error::Rewrite(format!(
                "trailing zero in {self} has no merge partner"
            )));
        }
        let next = &self.quotients[index + 1];
        let mut out = Vec::with_capacity(self.quotients.len() - 2);
        if index == 0 {
            let r = &self.integer_part + next;
            out.extend_from_slice(&self.quotients[2..]);
            return Ok(Self::new(r, out));
        }
        out.extend_from_slice(&self.quotients[..index - 1]);
        out.push(&self.quotients[index - 1] + next);
        out.extend_from_slice(&self.quotients[index + 2..]);
        Ok(Self::new(self.integer_part.clone(), out))
    }

    /// Applies `rewrite_drop_zero` until no zero quotient can be removed.
    pub fn drop_all_zeros(&self) -> Result<Self> {
        let mut cf = self.clone();
        while let Some(i) = cf.quotients.iter().position(|b| b.is_zero()) {
            cf = cf.rewrite_drop_zero(i)?;
        }
        Ok(cf)
    }

    /// Reverses a strongly positive expansion. The result evaluates to
    /// `p'/q` with `p p' ≡ (-1)^(n+1) (mod q)`.
    pub fn reverse(&self) -> Result<(Self, Rational)> {
        if !self.is_strongly_positive() {
            return Err(Error::NotStronglyPositive(self.to_string()));
        }
        let rev = Self::new(
            BigInt::zero(),
            self.quotients.iter().rev().cloned().collect(),
        );
        let x = self.eval();
        let y = rev.eval();
        let q = x.denom();
        if y.denom() != q {
            return Err(Error::Invariant(format!(
                "reversal of {self} changed the denominator"
            )));
        }
        let sign = if self.len() % 2 == 1 { 1 } else { -1 };
        let lhs = (x.numer() * y.numer() - BigInt::from(sign)).mod_floor(q);
        if !lhs.is_zero() {
            return Err(Error::Invariant(format!(
                "reversal congruence fails for {self}"
            )));
        }
        Ok((rev, y))
    }

    /// Just the bracketed quotient list, e.g. `[3,0,3,2,3]`.
    pub fn quotients_string(&self) -> String {
        let parts: Vec<String> = self.quotients.iter().map(|b| b.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// The all-positive Euclidean expansion `⌊x⌋ + [b_1..b_n]`, `b_i > 0`, with
/// `b_n > 1` whenever `n > 0`.
pub fn euclid_expansion(x: &Rational) -> Result<ContinuedFraction> {
    if x.is_infinite() {
        return Err(Error::Domain("1/0 has no Euclidean expansion".into()));
    }
    let r = x.floor();
    let mut quotients = Vec::new();
    let (mut a, mut b) = (x.denom().clone(), x.numer() - &r * x.denom());
    while !b.is_zero() {
        let (d, m) = a.div_mod_floor(&b);
        quotients.push(d);
        a = std::mem::replace(&mut b, m);
    }
    Ok(ContinuedFraction::new(r, quotients))
}

/// A strongly positive expansion of `x ∈ (0,1)` with odd denominator, or
/// of its reversal partner when the Euclidean expansion starts with 1.
pub fn cf_strongly_positive(x: &Rational) -> Result<StronglyPositive> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    if x.is_infinite() || *x <= zero || *x >= one {
        return Err(Error::Domain(format!("{x} is not in (0,1)")));
    }
    if x.denom().is_even() {
        return Err(Error::Domain(format!("{x} has even denominator")));
    }
    let cf = euclid_expansion(x)?;
    if !cf.quotients[0].is_one() {
        return Ok(StronglyPositive {
            cf,
            value: x.clone(),
            reversed: false,
        });
    }
    // [1, b_2, ..., b_n] -> [b_n, ..., b_3, b_2 + 1]
    let mut rev: Vec<BigInt> = cf.quotients[1..].iter().rev().cloned().collect();
    if let Some(last) = rev.last_mut() {
        *last += 1;
    }
    let cf = ContinuedFraction::new(BigInt::zero(), rev);
    let value = cf.eval();
    Ok(StronglyPositive {
        cf,
        value,
        reversed: true,
    })
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.integer_part, self.quotients_string())
    }
}

impl Serialize for ContinuedFraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `r+[b1,b2,...]`; the `r+` prefix is optional.
impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let open = t
            .find('[')
            .ok_or_else(|| Error::Parse(format!("missing '[' in {s:?}")))?;
        let body = t[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("missing trailing ']' in {s:?}")))?;
        let prefix = t[..open].trim();
        let integer_part = if prefix.is_empty() {
            BigInt::zero()
        } else {
            let r = prefix
                .strip_suffix('+')
                .ok_or_else(|| Error::Parse(format!("expected 'r+' before '[' in {s:?}")))?;
            parse_bigint(r)?
        };
        let quotients = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(parse_bigint).collect::<Result<_>>()?
        };
        Ok(Self::new(integer_part, quotients))
    }
}
