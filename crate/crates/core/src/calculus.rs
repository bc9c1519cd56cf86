//! Derivative, integral, the factorial transforms and the elementary
//! functions defined by integral equations.

use std::fmt;
use std::str::FromStr;

use crate::cache::cached;
use crate::coeff::{factorial, Coefficient};
use crate::error::{Result, SeqError};
use crate::seq::Seq;

/// `D f`: coefficient `n` is `(n+1)·f_{n+1}`.
pub fn deriv<C: Coefficient>(f: &Seq<C>) -> Seq<C> {
    f.tail().try_map(|n, c| Ok(c.times(&C::from_int(n as i64 + 1))))
}

/// `∫ f`: constant term 0, then `f_n/(n+1)`.
pub fn integ<C: Coefficient>(f: &Seq<C>) -> Seq<C> {
    let q = f.try_map(|n, c| Ok(c.try_div(&C::from_int(n as i64 + 1))?));
    Seq::cons(C::zero(), &q)
}

/// Exponential to ordinary: multiplies coefficient `n` by `n!`.
pub fn e2o<C: Coefficient>(f: &Seq<C>) -> Seq<C> {
    f.try_map(|n, c| Ok(c.times(&C::from_bigint(&factorial(n)))))
}

/// Ordinary to exponential: divides coefficient `n` by `n!`.
pub fn o2e<C: Coefficient>(f: &Seq<C>) -> Seq<C> {
    f.try_map(|n, c| Ok(c.try_div(&C::from_bigint(&factorial(n)))?))
}

/// `D^k f`, with `D⁰ f = f`.
pub fn deriv_n<C: Coefficient>(f: &Seq<C>, k: usize) -> Seq<C> {
    (0..k).fold(f.clone(), |g, _| deriv(&g))
}

/// The named elementary series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoreName {
    Expx,
    Starx,
    Lgnx,
    Sinx,
    Cosx,
    Tanx,
    Secx,
    Sinhx,
    Coshx,
    Tanhx,
    Gdx,
    Atanx,
    Asinx,
    Xcotx,
    Xcothx,
}

impl CoreName {
    pub const ALL: [CoreName; 15] = [
        CoreName::Expx,
        CoreName::Starx,
        CoreName::Lgnx,
        CoreName::Sinx,
        CoreName::Cosx,
        CoreName::Tanx,
        CoreName::Secx,
        CoreName::Sinhx,
        CoreName::Coshx,
        CoreName::Tanhx,
        CoreName::Gdx,
        CoreName::Atanx,
        CoreName::Asinx,
        CoreName::Xcotx,
        CoreName::Xcothx,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CoreName::Expx => "expx",
            CoreName::Starx => "starx",
            CoreName::Lgnx => "lgnx",
            CoreName::Sinx => "sinx",
            CoreName::Cosx => "cosx",
            CoreName::Tanx => "tanx",
            CoreName::Secx => "secx",
            CoreName::Sinhx => "sinhx",
            CoreName::Coshx => "coshx",
            CoreName::Tanhx => "tanhx",
            CoreName::Gdx => "gdx",
            CoreName::Atanx => "atanx",
            CoreName::Asinx => "asinx",
            CoreName::Xcotx => "xcotx",
            CoreName::Xcothx => "xcothx",
        }
    }

    /// The defining equation, written in the expression language.
    pub fn definition(self) -> &'static str {
        match self {
            CoreName::Expx => "expx = 1 + integ(expx)",
            CoreName::Starx => "starx = 1 + x*starx",
            CoreName::Lgnx => "lgnx = integ(1/(1+x))",
            CoreName::Sinx => "sinx = integ(cosx)",
            CoreName::Cosx => "cosx = 1 - integ(sinx)",
            CoreName::Tanx => "tanx = integ(1 + tanx^2)",
            CoreName::Secx => "secx = 1 + integ(secx*tanx)",
            CoreName::Sinhx => "sinhx = integ(coshx)",
            CoreName::Coshx => "coshx = 1 + integ(sinhx)",
            CoreName::Tanhx => "tanhx = integ(1 - tanhx^2)",
            CoreName::Gdx => "gdx = integ(1/coshx)",
            CoreName::Atanx => "atanx = integ(1/(1+x^2))",
            CoreName::Asinx => "asinx = integ(1/sqroot(1-x^2))",
            CoreName::Xcotx => "xcotx = x*cosx/sinx",
            CoreName::Xcothx => "xcothx = x*coshx/sinhx",
        }
    }
}

impl fmt::Display for CoreName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoreName {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        CoreName::ALL.into_iter().find(|c| c.as_str() == s).ok_or(())
    }
}

/// The series `name` over `C`; built once per thread and coefficient type.
pub fn core<C: Coefficient>(name: CoreName) -> Seq<C> {
    cached(name.as_str(), || build_core(name))
}

fn build_core<C: Coefficient>(name: CoreName) -> Seq<C> {
    let one = Seq::<C>::one();
    let x = Seq::<C>::x();
    match name {
        CoreName::Expx => Seq::fix(|e| &one + &integ(e)),
        CoreName::Starx => Seq::fix(|s| Seq::cons(C::one(), s)),
        CoreName::Lgnx => integ(&(&one + &x).recip()),
        CoreName::Sinx => Seq::fix(|s| integ(&(&one - &integ(s)))),
        CoreName::Cosx => &one - &integ(&core(CoreName::Sinx)),
        CoreName::Tanx => Seq::fix(|t| integ(&(&one + &(t * t)))),
        CoreName::Secx => {
            let tan = core::<C>(CoreName::Tanx);
            Seq::fix(|s| &one + &integ(&(s * &tan)))
        }
        CoreName::Sinhx => Seq::fix(|s| integ(&(&one + &integ(s)))),
        CoreName::Coshx => &one + &integ(&core(CoreName::Sinhx)),
        CoreName::Tanhx => Seq::fix(|t| integ(&(&one - &(t * t)))),
        CoreName::Gdx => integ(&core::<C>(CoreName::Coshx).recip()),
        CoreName::Atanx => integ(&(&one + &(&x * &x)).recip()),
        CoreName::Asinx => integ(&(&one - &(&x * &x)).sqroot().recip()),
        CoreName::Xcotx => &(&x * &core(CoreName::Cosx)) / &core(CoreName::Sinx),
        CoreName::Xcothx => &(&x * &core(CoreName::Coshx)) / &core(CoreName::Sinhx),
    }
}

pub fn expx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Expx)
}

pub fn starx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Starx)
}

pub fn lgnx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Lgnx)
}

pub fn sinx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Sinx)
}

pub fn cosx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Cosx)
}

pub fn tanx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Tanx)
}

pub fn secx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Secx)
}

pub fn sinhx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Sinhx)
}

pub fn coshx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Coshx)
}

pub fn tanhx<C: Coefficient>() -> Seq<C> {
    core(CoreName::Tanhx)
}

/// `0, 1, 2, 3, …`
pub fn nats<C: Coefficient>() -> Seq<C> {
    Seq::from_fn(|n| C::from_int(n as i64))
}

/// `1, 2, 3, …`
pub fn pos<C: Coefficient>() -> Seq<C> {
    Seq::from_fn(|n| C::from_int(n as i64 + 1))
}

/// `0!, 1!, 2!, …`
pub fn facs<C: Coefficient>() -> Seq<C> {
    e2o(&starx())
}

/// `log g = lgnx ∘ (g − 1)`, defined when `g₀ = 1`.
pub fn log_seq<C: Coefficient>(g: &Seq<C>) -> Seq<C> {
    let g = g.clone();
    Seq::deferred(None, move || {
        if !g.nth(0)?.is_one() {
            return Err(SeqError::NotLogDomain);
        }
        Ok(lgnx::<C>().compose(&(&g - &Seq::one())))
    })
}

/// `f^r = expx ∘ (r · log f)` for `f₀ = 1`.
pub fn pow_f<C: Coefficient>(f: &Seq<C>, r: &C) -> Seq<C> {
    expx::<C>().compose(&log_seq(f).scale(r))
}

/// `x·coth(r·x)·r`, the even series whose value at `r = i` is `x·cot x`.
pub fn xcth<C: Coefficient>(r: &C) -> Seq<C> {
    let x = Seq::<C>::x();
    let rx = x.scale(r);
    let num = (&x * &coshx::<C>().compose(&rx)).scale(r);
    &num / &sinhx::<C>().compose(&rx)
}

/// Checks that `D(∫ f) = f` on `n` coefficients.
pub fn ftc_check<C: Coefficient>(f: &Seq<C>, n: usize) -> Result<bool> {
    deriv(&integ(f)).prefix_eq(f, n)
}
