//! Finite coefficient lists.
//!
//! A [`Poly`] keeps its stored length: trailing zeros are not trimmed by
//! arithmetic, because the length of a diagonal decides how bivariate
//! triangles are transposed. Equality ignores trailing zeros.

use std::fmt;

use num_bigint::BigInt;

use crate::coeff::{Coefficient, Rational};
use crate::error::CoeffError;

#[derive(Clone, Default)]
pub struct Poly<C>(pub Vec<C>);

impl<C: Coefficient> Poly<C> {
    pub fn new(cs: Vec<C>) -> Self {
        Poly(cs)
    }

    pub fn constant(c: C) -> Self {
        Poly(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly(cs.iter().map(|&c| C::from_int(c)).collect())
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = C::one();
        Poly(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.0
    }

    /// Coefficient `k`, zero past the end.
    pub fn get(&self, k: usize) -> C {
        self.0.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Same polynomial without trailing zeros.
    pub fn trimmed(&self) -> Self {
        let mut v = self.0.clone();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        Poly(v)
    }

    /// Degree of the trimmed polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly(self.0.iter().map(|a| c.times(a)).collect())
    }

    pub fn reversed(&self) -> Self {
        Poly(self.0.iter().rev().cloned().collect())
    }

    /// Zero-pads on the right up to length `n`; never shortens.
    pub fn pad_to(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        while v.len() < n {
            v.push(C::zero());
        }
        Poly(v)
    }

    pub fn deriv(&self) -> Self {
        Poly(self.0.iter().enumerate().skip(1).map(|(k, c)| c.times(&C::from_int(k as i64))).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.0.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly(self.0.iter().map(f).collect())
    }
}

/// Length of a product under the list rules: an empty factor yields the
/// empty list, except that a zero head on the left still contributes its
/// own slot before recursing.
fn product_len<C: Coefficient>(f: &[C], lg: usize) -> usize {
    f.iter().rev().fold(0, |rest, c| {
        if c.is_zero() {
            1 + rest
        } else if lg == 0 {
            0
        } else {
            1 + (lg - 1).max(rest)
        }
    })
}

impl<C: Coefficient> Coefficient for Poly<C> {
    fn zero() -> Self {
        Poly(vec![C::zero()])
    }

    fn one() -> Self {
        Poly(vec![C::one()])
    }

    fn from_rational(r: &Rational) -> Self {
        Poly(vec![C::from_rational(r)])
    }

    /// True for `[]` and `[0]`; a longer all-zero list counts as nonzero,
    /// as it would under structural comparison with the literal zero.
    fn is_zero(&self) -> bool {
        self.0.len() <= 1 && self.0.iter().all(|c| c.is_zero())
    }

    fn plus(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly(
            (0..n)
                .map(|k| match (self.0.get(k), o.0.get(k)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    fn negate(&self) -> Self {
        Poly(self.0.iter().map(|c| c.negate()).collect())
    }

    fn times(&self, o: &Self) -> Self {
        let len = product_len(&self.0, o.0.len());
        let mut v = vec![C::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if i + j < len {
                    v[i + j] = v[i + j].plus(&a.times(b));
                }
            }
        }
        Poly(v)
    }

    /// Division after cancelling common leading zeros. A constant divisor
    /// divides entrywise and keeps the dividend's length; otherwise the
    /// quotient must be exact.
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        let mut f: &[C] = &self.0;
        let mut g: &[C] = &o.0;
        loop {
            if g.is_empty() {
                return Err(CoeffError::DivideByZero);
            }
            if f.is_empty() {
                return Ok(Poly(Vec::new()));
            }
            match (f[0].is_zero(), g[0].is_zero()) {
                (true, true) => {
                    f = &f[1..];
                    g = &g[1..];
                }
                (false, true) => return Err(CoeffError::DivideByZero),
                _ => break,
            }
        }
        let g = Poly(g.to_vec()).trimmed().0;
        let g0 = &g[0];
        if g.len() == 1 {
            return f.iter().map(|c| c.try_div(g0)).collect::<Result<_, _>>().map(Poly);
        }
        let qlen = (f.len() + 1).saturating_sub(g.len()).max(1);
        let mut rem: Vec<C> = f.to_vec();
        rem.resize(rem.len().max(qlen + g.len() - 1), C::zero());
        let mut q = Vec::with_capacity(qlen);
        for k in 0..qlen {
            let c = rem[k].try_div(g0)?;
            for (j, b) in g.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&c.times(b));
            }
            q.push(c);
        }
        if rem.iter().all(|c| c.is_zero()) {
            Ok(Poly(q))
        } else {
            Err(CoeffError::InexactDivision)
        }
    }

    fn to_integer(&self) -> Result<BigInt, CoeffError> {
        match self.trimmed().0.as_slice() {
            [] => Ok(BigInt::from(0)),
            [c] => c.to_integer(),
            _ => Err(CoeffError::NotWhole(self.to_string())),
        }
    }

    fn imaginary_unit() -> Option<Self> {
        C::imaginary_unit().map(|i| Poly(vec![i]))
    }
}

impl<C: Coefficient> PartialEq for Poly<C> {
    fn eq(&self, o: &Self) -> bool {
        let n = self.0.len().max(o.0.len());
        (0..n).all(|k| self.get(k) == o.get(k))
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coefficient> From<Vec<C>> for Poly<C> {
    fn from(v: Vec<C>) -> Self {
        Poly(v)
    }
}
