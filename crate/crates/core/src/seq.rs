//! Lazy, memoized power series.
//!
//! A [`Seq`] is a shared node that computes coefficient `n` on demand and
//! remembers it. Coefficients of a node are always produced in index order,
//! so a node that is asked for an index it is still computing has met a
//! definition that depends on itself: that is reported as `NonProductive`
//! instead of recursing forever.
//!
//! Recursive series are built with [`Seq::fix`].

use std::cell::{Cell, OnceCell, RefCell};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;

use crate::coeff::{Coefficient, Rational};
use crate::error::{Result, SeqError};
use crate::poly::Poly;

type Producer<C> = Box<dyn Fn(usize, &[C]) -> Result<C>>;

struct Node<C> {
    memo: RefCell<Vec<C>>,
    busy: Cell<bool>,
    len: Option<usize>,
    producer: Producer<C>,
}

/// A formal power series with coefficients in `C`.
///
/// Cloning is cheap and shares the memo. A series may carry a finite length,
/// in which case it behaves like the list of its stored coefficients and
/// reads as zero past the end.
pub struct Seq<C: Coefficient>(Rc<Node<C>>);

impl<C: Coefficient> Clone for Seq<C> {
    fn clone(&self) -> Self {
        Seq(self.0.clone())
    }
}

struct BusyGuard<'a>(&'a Cell<bool>);

impl Drop for BusyGuard<'_> {
    fn drop(&mut self) {
        self.0.set(false);
    }
}

/// How far the leading-zero cancellation of a division may look before it
/// gives up on an indeterminate `0/0`.
const MAX_CANCEL: usize = 4096;

fn compose_len(levels: usize, lg: usize) -> usize {
    match (levels, lg) {
        (0, _) => 0,
        (_, 0 | 1) => 1,
        (l, g) => 1 + (l - 1) * (g - 1),
    }
}

impl<C: Coefficient> Seq<C> {
    fn from_producer(len: Option<usize>, f: impl Fn(usize, &[C]) -> Result<C> + 'static) -> Self {
        Seq(Rc::new(Node { memo: RefCell::new(Vec::new()), busy: Cell::new(false), len, producer: Box::new(f) }))
    }

    fn prefilled(cs: Vec<C>, len: Option<usize>) -> Self {
        Seq(Rc::new(Node {
            memo: RefCell::new(cs),
            busy: Cell::new(false),
            len,
            producer: Box::new(|_, _| Ok(C::zero())),
        }))
    }

    /// A finite series (a polynomial) with exactly these coefficients.
    pub fn new(cs: Vec<C>) -> Self {
        let n = cs.len();
        Seq::prefilled(cs, Some(n))
    }

    /// `cs` followed by infinitely many zeros, without a finite length.
    pub fn padded(cs: Vec<C>) -> Self {
        Seq::prefilled(cs, None)
    }

    /// Either of the above, chosen by `finite`.
    pub fn from_coeffs(cs: Vec<C>, finite: bool) -> Self {
        if finite {
            Seq::new(cs)
        } else {
            Seq::padded(cs)
        }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Seq::new(cs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn from_poly(p: &Poly<C>) -> Self {
        Seq::new(p.coeffs().to_vec())
    }

    /// The empty series `[]`.
    pub fn zero() -> Self {
        Seq::new(Vec::new())
    }

    pub fn constant(c: C) -> Self {
        Seq::new(vec![c])
    }

    pub fn one() -> Self {
        Seq::constant(C::one())
    }

    pub fn int(n: i64) -> Self {
        Seq::constant(C::from_int(n))
    }

    pub fn rational(r: &Rational) -> Self {
        Seq::constant(C::from_rational(r))
    }

    /// The series `x`.
    pub fn x() -> Self {
        Seq::new(vec![C::zero(), C::one()])
    }

    /// `x^k` as a polynomial.
    pub fn monomial(k: usize) -> Self {
        Seq::from_poly(&Poly::monomial(k))
    }

    pub fn repeat(c: C) -> Self {
        Seq::from_producer(None, move |_, _| Ok(c.clone()))
    }

    /// Infinite series with `n`-th coefficient `f(n)`.
    pub fn from_fn(f: impl Fn(usize) -> C + 'static) -> Self {
        Seq::from_producer(None, move |n, _| Ok(f(n)))
    }

    pub fn try_from_fn(f: impl Fn(usize) -> Result<C> + 'static) -> Self {
        Seq::from_producer(None, move |n, _| f(n))
    }

    /// Infinite series whose `n`-th coefficient may use the ones before it.
    pub fn recurrence(f: impl Fn(usize, &[C]) -> Result<C> + 'static) -> Self {
        Seq::from_producer(None, f)
    }

    /// A series that is only constructed on first demand. `build` may fail,
    /// and the failure is reported by `nth`.
    pub fn deferred(len: Option<usize>, build: impl Fn() -> Result<Seq<C>> + 'static) -> Self {
        let cell: OnceCell<Seq<C>> = OnceCell::new();
        Seq::from_producer(len, move |n, _| {
            if let Some(s) = cell.get() {
                return s.nth(n);
            }
            let s = build()?;
            let v = s.nth(n);
            let _ = cell.set(s);
            v
        })
    }

    /// Least fixed point of `builder`. The handle passed to `builder` stands
    /// for the result; coefficient `n` may depend on the handle only below
    /// `n`, otherwise forcing it yields `NonProductive`.
    pub fn fix(builder: impl FnOnce(&Seq<C>) -> Seq<C>) -> Self {
        let cell: Rc<OnceCell<Seq<C>>> = Rc::new(OnceCell::new());
        let inner = cell.clone();
        let result = Seq::from_producer(None, move |n, _| match inner.get() {
            Some(d) => d.nth(n),
            None => Err(SeqError::NonProductive { index: n }),
        });
        let weak = Rc::downgrade(&result.0);
        let handle = Seq::from_producer(None, move |n, _| match weak.upgrade() {
            Some(node) => Seq(node).nth(n),
            None => Err(SeqError::NonProductive { index: n }),
        });
        let body = builder(&handle);
        let _ = cell.set(body);
        result
    }

    /// Finite length, if the series has one.
    pub fn finite_len(&self) -> Option<usize> {
        self.0.len
    }

    pub fn is_finite(&self) -> bool {
        self.0.len.is_some()
    }

    /// Coefficient `n`.
    pub fn nth(&self, n: usize) -> Result<C> {
        let node = &*self.0;
        if node.len.is_some_and(|l| n >= l) {
            return Ok(C::zero());
        }
        {
            let memo = node.memo.borrow();
            if n < memo.len() {
                return Ok(memo[n].clone());
            }
        }
        if node.busy.get() {
            return Err(SeqError::NonProductive { index: n });
        }
        node.busy.set(true);
        let _guard = BusyGuard(&node.busy);
        loop {
            let k = node.memo.borrow().len();
            if k > n {
                break;
            }
            let v = {
                let memo = node.memo.borrow();
                (node.producer)(k, &memo)?
            };
            node.memo.borrow_mut().push(v);
        }
        Ok(node.memo.borrow()[n].clone())
    }

    /// The first `n` coefficients (zero-padded past a finite end).
    pub fn take(&self, n: usize) -> Result<Vec<C>> {
        (0..n).map(|k| self.nth(k)).collect()
    }

    /// Coefficients converted to integers; fails with `NotWhole`.
    pub fn take_whole(&self, n: usize) -> Result<Vec<BigInt>> {
        self.take(n)?.iter().map(|c| c.to_integer().map_err(SeqError::from)).collect()
    }

    /// The stored coefficients of a finite series.
    pub fn to_poly(&self) -> Result<Poly<C>> {
        let l = self.0.len.ok_or(SeqError::InfiniteInput)?;
        Ok(Poly::new(self.take(l)?))
    }

    pub fn prefix_eq(&self, other: &Seq<C>, n: usize) -> Result<bool> {
        for k in 0..n {
            if self.nth(k)? != other.nth(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when the first `n` coefficients are zero.
    pub fn prefix_is_zero(&self, n: usize) -> Result<bool> {
        for k in 0..n {
            if !self.nth(k)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Finite prefix of length `n` as a polynomial-valued series.
    pub fn truncate(&self, n: usize) -> Seq<C> {
        let len = self.0.len.map_or(n, |l| l.min(n));
        let s = self.clone();
        Seq::from_producer(Some(len), move |k, _| s.nth(k))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D + 'static) -> Seq<D> {
        let s = self.clone();
        Seq::<D>::from_producer(self.0.len, move |n, _| Ok(f(&s.nth(n)?)))
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(usize, &C) -> Result<D> + 'static) -> Seq<D> {
        let s = self.clone();
        Seq::<D>::from_producer(self.0.len, move |n, _| f(n, &s.nth(n)?))
    }

    /// Pointwise combination; the result is as long as the shorter input.
    pub fn zip_with(&self, other: &Seq<C>, f: impl Fn(&C, &C) -> C + 'static) -> Seq<C> {
        let len = match (self.0.len, other.0.len) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let (a, b) = (self.clone(), other.clone());
        Seq::from_producer(len, move |n, _| Ok(f(&a.nth(n)?, &b.nth(n)?)))
    }

    pub fn add(&self, other: &Seq<C>) -> Seq<C> {
        let (la, lb) = (self.0.len, other.0.len);
        let len = match (la, lb) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        let (a, b) = (self.clone(), other.clone());
        Seq::from_producer(len, move |n, _| {
            if la.is_some_and(|l| n >= l) {
                b.nth(n)
            } else if lb.is_some_and(|l| n >= l) {
                a.nth(n)
            } else {
                Ok(a.nth(n)?.plus(&b.nth(n)?))
            }
        })
    }

    pub fn neg(&self) -> Seq<C> {
        let a = self.clone();
        Seq::from_producer(self.0.len, move |n, _| Ok(a.nth(n)?.negate()))
    }

    pub fn sub(&self, other: &Seq<C>) -> Seq<C> {
        self.add(&other.neg())
    }

    /// `c *| f`.
    pub fn scale(&self, c: &C) -> Seq<C> {
        let (a, c) = (self.clone(), c.clone());
        Seq::from_producer(self.0.len, move |n, _| Ok(c.times(&a.nth(n)?)))
    }

    /// Product. A zero coefficient of the left factor never forces the
    /// matching coefficients of the right factor.
    pub fn mul(&self, other: &Seq<C>) -> Seq<C> {
        let (lf, lg) = (self.0.len, other.0.len);
        let len = match (lf, lg) {
            (Some(0), _) | (_, Some(0)) => Some(0),
            (Some(a), Some(b)) => Some(a + b - 1),
            _ => None,
        };
        let (f, g) = (self.clone(), other.clone());
        Seq::from_producer(len, move |n, _| {
            let mut acc = C::zero();
            let top = lf.map_or(n, |l| n.min(l - 1));
            for k in 0..=top {
                let fk = f.nth(k)?;
                if fk.is_zero() {
                    continue;
                }
                if lg.is_some_and(|l| n - k >= l) {
                    continue;
                }
                acc = acc.plus(&fk.times(&g.nth(n - k)?));
            }
            Ok(acc)
        })
    }

    pub fn pow(&self, k: u32) -> Seq<C> {
        match k {
            0 => Seq::one(),
            1 => self.clone(),
            _ => self.mul(&self.pow(k - 1)),
        }
    }

    /// `f'`: drop the head.
    pub fn tail(&self) -> Seq<C> {
        let a = self.clone();
        Seq::from_producer(self.0.len.map(|l| l.saturating_sub(1)), move |n, _| a.nth(n + 1))
    }

    /// `c : f`.
    pub fn cons(head: C, tail: &Seq<C>) -> Seq<C> {
        let t = tail.clone();
        Seq::from_producer(tail.0.len.map(|l| l + 1), move |n, _| if n == 0 { Ok(head.clone()) } else { t.nth(n - 1) })
    }

    /// `h : f` with the head computed on demand.
    pub fn cons_with(head: impl Fn() -> Result<C> + 'static, tail: &Seq<C>) -> Seq<C> {
        let t = tail.clone();
        Seq::from_producer(tail.0.len.map(|l| l + 1), move |n, _| if n == 0 { head() } else { t.nth(n - 1) })
    }

    /// `x^k · f`.
    pub fn shift(&self, k: usize) -> Seq<C> {
        (0..k).fold(self.clone(), |s, _| Seq::cons(C::zero(), &s))
    }

    /// Quotient with cancellation of common leading zeros.
    ///
    /// Finite over finite gives a finite result when the division is exact;
    /// every other quotient is infinite.
    pub fn div(&self, other: &Seq<C>) -> Seq<C> {
        if let (Some(_), Some(_)) = (self.0.len, other.0.len) {
            if let Some(q) = exact_finite_div(self, other) {
                return q;
            }
        }
        let (f, g) = (self.clone(), other.clone());
        Seq::deferred(None, move || {
            let k = cancel_zeros(&f, &g)?;
            let Some(k) = k else {
                return Ok(Seq::zero());
            };
            let (ff, gg) = (drop_n(&f, k), drop_n(&g, k));
            let g0 = gg.nth(0)?;
            let lg = gg.0.len;
            Ok(Seq::from_producer(None, move |n, prev: &[C]| {
                let mut r = ff.nth(n)?;
                for (j, qj) in prev.iter().enumerate().take(n) {
                    if lg.is_some_and(|l| n - j >= l) {
                        continue;
                    }
                    r = r.minus(&qj.times(&gg.nth(n - j)?));
                }
                Ok(r.try_div(&g0)?)
            }))
        })
    }

    pub fn recip(&self) -> Seq<C> {
        Seq::one().div(self)
    }

    /// Square root of a series that starts with 1, or with an even run of
    /// zeros followed by 1.
    pub fn sqroot(&self) -> Seq<C> {
        let f = self.clone();
        Seq::deferred(None, move || {
            if f.0.len == Some(0) {
                return Ok(Seq::zero());
            }
            let f0 = f.nth(0)?;
            if f0.is_zero() {
                if !f.nth(1)?.is_zero() {
                    return Err(SeqError::NotASquareRootDomain);
                }
                return Ok(Seq::cons(C::zero(), &f.tail().tail().sqroot()));
            }
            if !f0.is_one() {
                return Err(SeqError::NotASquareRootDomain);
            }
            let ft = f.tail();
            Ok(Seq::fix(|r| Seq::cons(C::one(), &ft.div(&Seq::one().add(r)))))
        })
    }

    /// `f ∘ g`.
    ///
    /// With `g₀ = 0` any `f` works. With `g₀ ≠ 0` only a finite `f` does;
    /// an infinite `f` fails with `NonTerminatingComposition` when forced.
    pub fn compose(&self, g: &Seq<C>) -> Seq<C> {
        let len = match (self.0.len, g.0.len) {
            (Some(0), _) => return Seq::zero(),
            (Some(lf), Some(lg)) => Some(compose_len(lf, lg)),
            _ => None,
        };
        let (f, g) = (self.clone(), g.clone());
        Seq::deferred(len, move || {
            let g0 = g.nth(0)?;
            if g0.is_zero() {
                Ok(compose_chain(&f, &g, 0))
            } else if let Some(lf) = f.0.len {
                let gt = g.tail();
                let mut acc = Seq::zero();
                for k in (0..lf).rev() {
                    let fk = Seq::constant(f.nth(k)?);
                    acc = fk.add(&acc.scale(&g0)).add(&Seq::cons(C::zero(), &(&gt * &acc)));
                }
                Ok(acc)
            } else {
                Err(SeqError::NonTerminatingComposition)
            }
        })
    }

    /// Compositional inverse of a series `0 + c·x + …` with `c ≠ 0`.
    pub fn converse(&self) -> Seq<C> {
        let f = self.clone();
        Seq::deferred(None, move || {
            if !f.nth(0)?.is_zero() || f.nth(1)?.is_zero() {
                return Err(SeqError::NotConversible);
            }
            let ft = f.tail();
            Ok(Seq::fix(|g| Seq::cons(C::zero(), &ft.compose(g).recip())))
        })
    }

    /// Coefficients of a finite series in reverse order, after trimming
    /// trailing zeros.
    pub fn reverse_poly(&self) -> Result<Seq<C>> {
        let p = self.to_poly()?.trimmed();
        Ok(Seq::from_poly(&p.reversed()))
    }

    /// Renders the first `n` coefficients as `[c0,c1,...]`.
    pub fn render(&self, n: usize) -> Result<String> {
        Ok(render_list(&self.take(n)?))
    }
}

/// `[c0,c1,...]`.
pub fn render_list<T: fmt::Display>(cs: &[T]) -> String {
    let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn drop_n<C: Coefficient>(s: &Seq<C>, k: usize) -> Seq<C> {
    (0..k).fold(s.clone(), |acc, _| acc.tail())
}

/// Number of common leading zeros to cancel, or `None` when the dividend
/// runs out first (the quotient is then empty).
fn cancel_zeros<C: Coefficient>(f: &Seq<C>, g: &Seq<C>) -> Result<Option<usize>> {
    let mut k = 0;
    loop {
        if g.0.len.is_some_and(|l| k >= l) {
            return Err(SeqError::DivideByZero);
        }
        if f.0.len.is_some_and(|l| k >= l) {
            return Ok(None);
        }
        let fk_zero = f.nth(k)?.is_zero();
        let gk_zero = g.nth(k)?.is_zero();
        match (fk_zero, gk_zero) {
            (true, true) => {
                k += 1;
                if k > MAX_CANCEL {
                    return Err(SeqError::DivideByZero);
                }
            }
            (false, true) => return Err(SeqError::DivideByZero),
            _ => return Ok(Some(k)),
        }
    }
}

fn exact_finite_div<C: Coefficient>(f: &Seq<C>, g: &Seq<C>) -> Option<Seq<C>> {
    let fp = f.to_poly().ok()?;
    let gp = g.to_poly().ok()?;
    if gp.trimmed().is_empty() {
        return None;
    }
    // The polynomial division keeps the dividend's length for a constant
    // divisor; a longer divisor must divide exactly.
    let q = fp.try_div(&gp).ok()?;
    Some(Seq::from_poly(&q))
}

/// `(f_k : f_{k+1} : …) ∘ g` for `g₀ = 0`, as `f_k : g'·(rest ∘ g)`.
fn compose_chain<C: Coefficient>(f: &Seq<C>, g: &Seq<C>, k: usize) -> Seq<C> {
    let levels = f.0.len.map(|l| l.saturating_sub(k));
    if levels == Some(0) {
        return Seq::zero();
    }
    let len = match (levels, g.0.len) {
        (Some(l), Some(lg)) => Some(compose_len(l, lg)),
        _ => None,
    };
    let (f, g) = (f.clone(), g.clone());
    let rest: OnceCell<Seq<C>> = OnceCell::new();
    Seq::from_producer(len, move |n, _| {
        if n == 0 {
            return f.nth(k);
        }
        rest.get_or_init(|| g.tail().mul(&compose_chain(&f, &g, k + 1))).nth(n - 1)
    })
}

impl<C: Coefficient> fmt::Debug for Seq<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let memo = self.0.memo.borrow();
        f.debug_struct("Seq").field("len", &self.0.len).field("known", &render_list(&memo)).finish()
    }
}

macro_rules! seq_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr<&Seq<C>> for &Seq<C> {
            type Output = Seq<C>;
            fn $m(self, o: &Seq<C>) -> Seq<C> {
                Seq::$m(self, o)
            }
        }
        impl<C: Coefficient> $tr<Seq<C>> for Seq<C> {
            type Output = Seq<C>;
            fn $m(self, o: Seq<C>) -> Seq<C> {
                Seq::$m(&self, &o)
            }
        }
        impl<C: Coefficient> $tr<&Seq<C>> for Seq<C> {
            type Output = Seq<C>;
            fn $m(self, o: &Seq<C>) -> Seq<C> {
                Seq::$m(&self, o)
            }
        }
        impl<C: Coefficient> $tr<Seq<C>> for &Seq<C> {
            type Output = Seq<C>;
            fn $m(self, o: Seq<C>) -> Seq<C> {
                Seq::$m(self, &o)
            }
        }
    };
}
seq_binop!(Add, add);
seq_binop!(Sub, sub);
seq_binop!(Mul, mul);

impl<C: Coefficient> std::ops::Div<&Seq<C>> for &Seq<C> {
    type Output = Seq<C>;
    fn div(self, o: &Seq<C>) -> Seq<C> {
        Seq::div(self, o)
    }
}

impl<C: Coefficient> std::ops::Div<Seq<C>> for Seq<C> {
    type Output = Seq<C>;
    fn div(self, o: Seq<C>) -> Seq<C> {
        Seq::div(&self, &o)
    }
}

impl<C: Coefficient> Neg for &Seq<C> {
    type Output = Seq<C>;
    fn neg(self) -> Seq<C> {
        Seq::neg(self)
    }
}

impl<C: Coefficient> Neg for Seq<C> {
    type Output = Seq<C>;
    fn neg(self) -> Seq<C> {
        Seq::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;

    type S = Seq<Rational>;

    fn ints(s: &S, n: usize) -> Vec<i64> {
        s.take_whole(n).unwrap().iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn catalan_fixpoint() {
        let b = S::fix(|b| S::one() + S::x() * (b * b));
        assert_eq!(ints(&b, 8), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn fibonacci_by_division() {
        let f = S::one() / S::from_ints(&[1, -1, -1]);
        assert_eq!(ints(&f, 8), vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn schroeder_by_sqroot() {
        let r = S::from_ints(&[1, -6, 1]).sqroot();
        let s = (S::from_ints(&[1, 1]) - r) / S::int(4);
        assert_eq!(ints(&s, 11), vec![0, 1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]);
    }

    #[test]
    fn poly_compose_constant() {
        let p = S::from_ints(&[4, -1, 3]).compose(&S::int(2));
        assert_eq!(ints(&p, 1), vec![14]);
        assert_eq!(p.finite_len(), Some(1));
    }

    #[test]
    fn non_productive() {
        let s = S::fix(|s| S::one() + s);
        assert!(matches!(s.nth(0), Err(SeqError::NonProductive { .. })));
    }

    #[test]
    fn short_circuit_does_not_force_right_factor() {
        let bad = S::try_from_fn(|_| Err(SeqError::DivideByZero));
        let p = S::from_ints(&[0, 0, 1]) * bad;
        assert_eq!(p.nth(0).unwrap(), Rational::from_int(0));
        assert_eq!(p.nth(1).unwrap(), Rational::from_int(0));
        assert!(p.nth(2).is_err());
    }

    #[test]
    fn division_errors() {
        assert_eq!((S::one() / S::zero()).nth(0), Err(SeqError::DivideByZero));
        assert_eq!((S::one() / S::x()).nth(0), Err(SeqError::DivideByZero));
        assert_eq!((S::from_ints(&[0, 1]) / S::from_ints(&[0, 0, 1])).nth(0), Err(SeqError::DivideByZero));
    }

    #[test]
    fn exact_finite_division_stays_finite() {
        let q = S::from_ints(&[1, 2, 1]) / S::from_ints(&[1, 1]);
        assert_eq!(q.finite_len(), Some(2));
        assert_eq!(ints(&q, 3), vec![1, 1, 0]);
        let q = S::one() / S::from_ints(&[1, -1]);
        assert_eq!(q.finite_len(), None);
    }

    #[test]
    fn lengths() {
        let a = S::from_ints(&[1, 2]);
        let b = S::from_ints(&[1, 2, 3]);
        assert_eq!((&a + &b).finite_len(), Some(3));
        assert_eq!((&a * &b).finite_len(), Some(4));
        assert_eq!((&a * &S::zero()).finite_len(), Some(0));
        assert_eq!((&a + &S::repeat(Rational::from_int(1))).finite_len(), None);
    }

    #[test]
    fn composition_errors() {
        let e = S::fix(|e| S::cons(Rational::from_int(1), e));
        let c = e.compose(&S::from_ints(&[1, 1]));
        assert_eq!(c.nth(0), Err(SeqError::NonTerminatingComposition));
        assert_eq!(S::from_ints(&[1, 1]).converse().nth(0), Err(SeqError::NotConversible));
        assert_eq!(S::from_ints(&[0, 0, 1]).converse().nth(3), Err(SeqError::NotConversible));
        assert_eq!(S::from_ints(&[2, 1]).sqroot().nth(0), Err(SeqError::NotASquareRootDomain));
        assert_eq!(S::from_ints(&[0, 1]).sqroot().nth(0), Err(SeqError::NotASquareRootDomain));
    }

    #[test]
    fn converse_of_x_over_one_minus_x() {
        let f = S::x() / S::from_ints(&[1, -1]);
        let g = f.converse();
        assert_eq!(ints(&g, 6), vec![0, 1, -1, 1, -1, 1]);
        let id = f.compose(&g);
        assert_eq!(ints(&id, 8), vec![0, 1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn reverse_poly() {
        let r = S::from_ints(&[1, 2, 0]).reverse_poly().unwrap();
        assert_eq!(ints(&r, 2), vec![2, 1]);
        assert_eq!(S::repeat(Rational::from_int(1)).reverse_poly().unwrap_err(), SeqError::InfiniteInput);
    }

    #[test]
    fn demand_order_does_not_matter() {
        let mk = || S::fix(|b| S::one() + S::x() * (b * b));
        let a = mk();
        let b = mk();
        let _ = b.nth(9).unwrap();
        for k in (0..10).rev() {
            assert_eq!(a.nth(k).unwrap(), b.nth(k).unwrap());
        }
    }

    #[test]
    fn empty_series_annihilates() {
        let p = S::from_ints(&[1, 2, 3]) * S::zero();
        assert_eq!(p.finite_len(), Some(0));
        assert_eq!(p.nth(5).unwrap(), Rational::from_int(0));
    }
}
