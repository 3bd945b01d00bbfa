//! Laurent polynomials in one variable `A` with arbitrary-precision integer
//! coefficients.
//!
//! This is the coefficient ring for the Kauffman bracket. State counts grow
//! like `2^crossings`, so coefficients overflow any fixed-width integer long
//! before the braids of interest get large; everything here is `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial `sum c_k A^k`, stored as exponent-sorted terms with
/// nonzero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * A^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly {
                terms: vec![(exp, c)],
            }
        }
    }

    /// The loop value `delta = -A^2 - A^-2`.
    pub fn delta() -> Self {
        LaurentPoly {
            terms: vec![(-2, BigInt::from(-1)), (2, BigInt::from(-1))],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Exponent-sorted `(exponent, coefficient)` view.
    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Multiply by `A^k` in place.
    pub fn shift(&mut self, k: i64) {
        for t in &mut self.terms {
            t.0 += k;
        }
    }

    pub fn shifted(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.shift(k);
        out
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.terms = other.terms.clone();
            return;
        }
        let mut merged = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (Some(x), Some(y)) => {
                    if x.0 < y.0 {
                        merged.push(x.clone());
                        na = a.next();
                    } else if x.0 > y.0 {
                        merged.push(y.clone());
                        nb = b.next();
                    } else {
                        let c = &x.1 + &y.1;
                        if !c.is_zero() {
                            merged.push((x.0, c));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                }
                (Some(x), None) => {
                    merged.push(x.clone());
                    na = a.next();
                }
                (None, Some(y)) => {
                    merged.push(y.clone());
                    nb = b.next();
                }
                (None, None) => break,
            }
        }
        self.terms = merged;
    }

    /// Multiply by `delta = -A^2 - A^-2` in place. This is the hot path of the
    /// bracket evaluation, so it avoids the general product.
    pub fn mul_delta_assign(&mut self) {
        let up = self.shifted(2);
        let mut down = self.shifted(-2);
        down.add_assign_ref(&up);
        for t in &mut down.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        *self = down;
    }

    pub fn neg_assign(&mut self) {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
    }

    /// Nonnegative power.
    pub fn pow(&self, n: usize) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Lowest and highest exponents, if nonzero.
    pub fn span(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.terms[0].0, self.terms[self.terms.len() - 1].0))
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        let mut n = rhs.clone();
        n.neg_assign();
        out.add_assign_ref(&n);
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        self.neg_assign();
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Schoolbook product; operands in this crate stay small enough that
        // anything fancier would be noise.
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut part = rhs.clone();
            for t in &mut part.terms {
                t.0 += e;
                t.1 = &t.1 * c;
            }
            out.add_assign_ref(&part);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "A^{e}")?;
            } else {
                write!(f, "{mag}*A^{e}")?;
            }
        }
        Ok(())
    }
}

/// Serializes as a sorted list of `[exponent, coefficient]` pairs, e.g.
/// `[[-4,-1],[4,-1]]`. Coefficients that do not fit in an `i64` are emitted
/// as decimal strings so nothing is silently truncated.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        impl From<&BigInt> for Coeff {
            fn from(c: &BigInt) -> Self {
                match i64::try_from(c) {
                    Ok(v) => Coeff::Small(v),
                    Err(_) => Coeff::Big(c.to_string()),
                }
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(*e, Coeff::from(c)))?;
        }
        seq.end()
    }
}
