//! Finite differences, the shuffle and infiltration products, the Newton
//! transform and polynomials in the falling factorial basis.

use std::cell::OnceCell;

use crate::bivariate::{cycles, parts, select, un_diag_e2o};
use crate::calculus::{o2e, starx};
use crate::coeff::{Coefficient, Rational};
use crate::error::Result;
use crate::seq::Seq;

/// `Δ s = s' − s`.
pub fn delta<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    &s.tail() - s
}

/// `Σ s = x · x* · s`: coefficient `n` is the sum of the first `n` terms.
pub fn sigma<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    &(&Seq::x() * &starx()) * s
}

/// Running sums starting from 0; a finite input gives one extra term.
pub fn prefix_sums<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    let src = s.clone();
    let body = Seq::recurrence(
        move |n, prev: &[C]| {
            if n == 0 {
                Ok(C::zero())
            } else {
                Ok(prev[n - 1].plus(&src.nth(n - 1)?))
            }
        },
    );
    match s.finite_len() {
        Some(l) => body.truncate(l + 1),
        None => body,
    }
}

/// Sums of all later terms, ending in 0. Needs a finite input.
pub fn suffix_sums<C: Coefficient>(s: &Seq<C>) -> Result<Seq<C>> {
    let rev = Seq::from_poly(&s.to_poly()?.reversed());
    Ok(Seq::from_poly(&prefix_sums(&rev).to_poly()?.reversed()))
}

fn product_len<C: Coefficient>(s: &Seq<C>, t: &Seq<C>) -> Option<usize> {
    match (s.finite_len(), t.finite_len()) {
        (Some(0), _) | (_, Some(0)) => Some(0),
        (Some(a), Some(b)) => Some(a + b - 1),
        _ => None,
    }
}

/// Shuffle product: head `s₀t₀`, tail `s'⊗t + s⊗t'`.
///
/// Coefficient `n` is obtained by unrolling the tail rule `n` times over the
/// grid of shifted heads.
pub fn shuffle<C: Coefficient>(s: &Seq<C>, t: &Seq<C>) -> Seq<C> {
    let len = product_len(s, t);
    let (s, t) = (s.clone(), t.clone());
    Seq::try_from_fn(move |n| {
        let mut layer: Vec<C> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            layer.push(s.nth(i)?.times(&t.nth(n - i)?));
        }
        for _ in 0..n {
            layer = layer.windows(2).map(|w| w[0].plus(&w[1])).collect();
        }
        Ok(layer.pop().unwrap_or_else(C::zero))
    })
    .truncate_opt(len)
}

/// Inverse for the shuffle product, `1/s₀ : (−s' ⊗ (r ⊗ r))`.
pub fn shuffle_inv<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    let head = s.clone();
    let neg_tail = s.tail().neg();
    Seq::fix(|r| Seq::cons_with(move || Ok(C::one().try_div(&head.nth(0)?)?), &shuffle(&neg_tail, &shuffle(r, r))))
}

/// Pointwise product.
pub fn hadamard<C: Coefficient>(s: &Seq<C>, t: &Seq<C>) -> Seq<C> {
    s.zip_with(t, |a, b| a.times(b))
}

/// Infiltration product: head `s₀t₀`, tail `s'↑t + s↑t' + s'↑t'`.
pub fn infiltration<C: Coefficient>(s: &Seq<C>, t: &Seq<C>) -> Seq<C> {
    let len = product_len(s, t);
    let (s, t) = (s.clone(), t.clone());
    Seq::try_from_fn(move |n| {
        let sv = s.take(n + 1)?;
        let tv = t.take(n + 1)?;
        let mut grid: Vec<Vec<C>> = sv.iter().map(|a| tv.iter().map(|b| a.times(b)).collect()).collect();
        for m in (1..=n).rev() {
            grid = (0..m)
                .map(|i| (0..m).map(|j| grid[i + 1][j].plus(&grid[i][j + 1]).plus(&grid[i + 1][j + 1])).collect())
                .collect();
        }
        Ok(grid[0][0].clone())
    })
    .truncate_opt(len)
}

/// Newton transform: `(1/(1+x)) ⊗ s`, the sequence of `(Δᵏ s)₀`.
pub fn h2i<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    shuffle(&Seq::from_ints(&[1, 1]).recip(), s)
}

/// Inverse Newton transform: `(1/(1−x)) ⊗ s`.
pub fn i2h<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    shuffle(&Seq::from_ints(&[1, -1]).recip(), s)
}

/// Newton transform by repeated differencing: `s₀ : rh2i(Δ s)`.
pub fn rh2i<C: Coefficient>(s: &Seq<C>) -> Seq<C> {
    let s = s.clone();
    let rest: OnceCell<Seq<C>> = OnceCell::new();
    Seq::try_from_fn(move |n| if n == 0 { s.nth(0) } else { rest.get_or_init(|| rh2i(&delta(&s))).nth(n - 1) })
}

trait TruncateOpt {
    fn truncate_opt(self, len: Option<usize>) -> Self;
}

impl<C: Coefficient> TruncateOpt for Seq<C> {
    fn truncate_opt(self, len: Option<usize>) -> Self {
        match len {
            Some(l) => self.truncate(l),
            None => self,
        }
    }
}

/// Falling factorial `r (r−1) ⋯ (r−k+1)`.
pub fn fall(r: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::from_int(1), |acc, i| &acc * &(r - &Rational::from_int(i as i64)))
}

/// A polynomial written as `Σ cₖ x^(k)` with falling factorial powers.
#[derive(Debug, Clone, PartialEq)]
pub struct FacPoly(pub Vec<Rational>);

impl FacPoly {
    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().enumerate().fold(Rational::from_int(0), |acc, (k, c)| &acc + &(c * &fall(x, k)))
    }

    /// `Δ x^(k) = k x^(k−1)`.
    pub fn delta(&self) -> FacPoly {
        FacPoly(self.0.iter().enumerate().skip(1).map(|(k, c)| c * &Rational::from_int(k as i64)).collect())
    }

    /// Indefinite sum with zero constant: `Σ x^(k) = x^(k+1)/(k+1)`.
    pub fn sigma(&self) -> FacPoly {
        let mut v = vec![Rational::from_int(0)];
        for (k, c) in self.0.iter().enumerate() {
            v.push(c.checked_div(&Rational::from_int(k as i64 + 1)).expect("nonzero"));
        }
        FacPoly(v)
    }
}

/// Rows `n = 0..count` of a triangle, each cut to `n + 1` entries.
fn e_rows(t: &Seq<crate::Poly<Rational>>, count: usize) -> Result<Vec<Vec<Rational>>> {
    let spec: Vec<usize> = (1..=count).collect();
    select(&spec, &un_diag_e2o(t))
}

/// Rewrites an ordinary polynomial in the falling factorial basis, using
/// the set partition triangle.
pub fn to_fac_poly(p: &[Rational]) -> Result<FacPoly> {
    let rows = e_rows(&parts(), p.len())?;
    let mut out = vec![Rational::from_int(0); p.len()];
    for (n, pn) in p.iter().enumerate() {
        for (k, s) in rows[n].iter().enumerate() {
            out[k] = &out[k] + &(pn * s);
        }
    }
    Ok(FacPoly(out))
}

/// Converts back to the monomial basis with the signed cycle triangle.
pub fn from_fac_poly(fp: &FacPoly) -> Result<Vec<Rational>> {
    let n = fp.0.len();
    let rows = e_rows(&cycles(), n)?;
    let mut out = vec![Rational::from_int(0); n];
    for (m, cm) in fp.0.iter().enumerate() {
        for (k, c) in rows[m].iter().enumerate() {
            let signed = if (m + k) % 2 == 0 { c.clone() } else { -c };
            out[k] = &out[k] + &(cm * &signed);
        }
    }
    Ok(out)
}

/// Interpolating polynomial through `values` at `0, 1, …` in the falling
/// factorial basis: `cₖ = (Δᵏ v)₀ / k!`.
pub fn gregory_newton(values: &[Rational]) -> Result<FacPoly> {
    let s = Seq::new(values.to_vec());
    Ok(FacPoly(o2e(&h2i(&s)).take(values.len())?))
}

/// Compares `Σ_{k≤K} (Δᵏ s)₀ xᵏ/(1−x)^{k+1}` with `s` on `n` terms.
pub fn euler_expand_check<C: Coefficient>(s: &Seq<C>, k_max: usize, n: usize) -> Result<bool> {
    let newton = h2i(s);
    let one_minus_x = Seq::<C>::from_ints(&[1, -1]);
    let mut total = Seq::<C>::zero();
    for k in 0..=k_max {
        let term = &Seq::monomial(k).scale(&newton.nth(k)?) / &one_minus_x.pow(k as u32 + 1);
        total = &total + &term;
    }
    total.prefix_eq(s, n)
}
