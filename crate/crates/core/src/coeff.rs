//! Exact coefficient fields.
//!
//! [`Coefficient`] is the contract every series engine relies on. It is
//! implemented by [`Rational`], [`GaussianRational`] and, for bivariate
//! series, by [`crate::Poly`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoeffError;

/// Ring operations with a partial division.
///
/// `is_zero` is the test the series engine uses for its short-circuit and
/// cancellation rules, so it must be exact.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn try_div(&self, other: &Self) -> Result<Self, CoeffError>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_bigint(n.clone()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Integer value, if the coefficient is a whole rational number.
    fn to_integer(&self) -> Result<BigInt, CoeffError>;

    /// The imaginary unit, for fields that have one.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn pow_u(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, CoeffError> {
        if den == 0 {
            return Err(CoeffError::DivideByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivideByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_whole(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value or `NotWhole`.
    pub fn make_whole(&self) -> Result<BigInt, CoeffError> {
        if self.0.is_integer() {
            Ok(self.0.numer().clone())
        } else {
            Err(CoeffError::NotWhole(self.to_string()))
        }
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational, CoeffError> {
        if other.0.is_zero() {
            Err(CoeffError::DivideByZero)
        } else {
            Ok(Rational(&self.0 / &other.0))
        }
    }

    pub fn recip(&self) -> Result<Rational, CoeffError> {
        Rational::from_int(1).checked_div(self)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn pow_i(&self, k: i32) -> Result<Rational, CoeffError> {
        if k < 0 {
            self.recip()?.pow_i(-k)
        } else {
            Ok(Rational(num_traits::pow(self.0.clone(), k as usize)))
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = CoeffError;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoeffError::NotWhole(format!("cannot parse {s:?} as a rational"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(Rational::from_bigint).map_err(|_| bad()),
            Some((p, q)) => {
                let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
                let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
                Rational::from_big_ratio(p, q)
            }
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, o: &Rational) -> Rational {
                Rational((&self.0).$m(&o.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0.$m(o.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        self.checked_div(o)
    }
    fn to_integer(&self) -> Result<BigInt, CoeffError> {
        self.make_whole()
    }
}

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// The real part, or `NotReal` if the imaginary part is nonzero.
    pub fn make_real(&self) -> Result<Rational, CoeffError> {
        if self.im.is_zero() {
            Ok(self.re.clone())
        } else {
            Err(CoeffError::NotReal(self.to_string()))
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.signum() < 0 {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl Coefficient for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(Rational::zero())
    }
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        GaussianRational::real(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn minus(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn negate(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn times(&self, o: &Self) -> Self {
        GaussianRational::new(&(&self.re * &o.re) - &(&self.im * &o.im), &(&self.re * &o.im) + &(&self.im * &o.re))
    }
    fn try_div(&self, o: &Self) -> Result<Self, CoeffError> {
        let d = &(&o.re * &o.re) + &(&o.im * &o.im);
        if d.is_zero() {
            return Err(CoeffError::DivideByZero);
        }
        let re = &(&self.re * &o.re) + &(&self.im * &o.im);
        let im = &(&self.im * &o.re) - &(&self.re * &o.im);
        Ok(GaussianRational::new(re.checked_div(&d)?, im.checked_div(&d)?))
    }
    fn to_integer(&self) -> Result<BigInt, CoeffError> {
        self.make_real()?.make_whole()
    }
    fn imaginary_unit() -> Option<Self> {
        Some(GaussianRational::i())
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalizes() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn divide_by_zero() {
        assert_eq!(q(1, 2).try_div(&Rational::zero()), Err(CoeffError::DivideByZero));
        assert_eq!(Rational::new(1, 0), Err(CoeffError::DivideByZero));
        let z = GaussianRational::zero();
        assert_eq!(GaussianRational::one().try_div(&z), Err(CoeffError::DivideByZero));
    }

    #[test]
    fn make_whole() {
        assert_eq!(q(6, 3).make_whole().unwrap(), BigInt::from(2));
        let e = q(7, 2).make_whole().unwrap_err();
        assert!(e.to_string().contains("not whole"));
    }

    #[test]
    fn gaussian_arith() {
        let i = GaussianRational::i();
        let m1 = i.times(&i);
        assert_eq!(m1, GaussianRational::from_int(-1));
        assert_eq!(m1.to_string(), "-1+0i");
        assert_eq!(GaussianRational::one().try_div(&i).unwrap().to_string(), "0-1i");
        let a = GaussianRational::new(q(1, 2), q(-3, 4));
        assert_eq!(a.to_string(), "1/2-3/4i");
        assert_eq!(a.times(&a.try_div(&a).unwrap()), a);
    }

    #[test]
    fn parse() {
        assert_eq!("-3/6".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!("12".parse::<Rational>().unwrap(), q(12, 1));
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 5), BigInt::from(0));
    }
}
