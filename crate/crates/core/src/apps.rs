//! Worked computations built from the rest of the library.

use crate::bivariate::{
    logan as logan_biv, pascal, poly_e2o, power_sums, select, take_ebiv, ue2o, un_diag_e2o, x2z, zigzags,
};
use crate::calculus::{cosx, deriv, e2o, expx, sinx, tanx};
use crate::coeff::{factorial, Coefficient, GaussianRational, Rational};
use crate::discrete::{fall, prefix_sums, suffix_sums};
use crate::error::{Result, SeqError};
use crate::named::bernoulli_numbers;
use crate::poly::Poly;
use crate::seq::Seq;

/// `[xⁿ] sᵏ = (k/n) [x^{n−k}] rⁿ` for `s = x (r ∘ s)`.
pub fn lagrange_term<C: Coefficient>(r: &Seq<C>, n: usize, k: usize) -> Result<C> {
    if n == 0 || k == 0 || k > n {
        return Err(SeqError::Domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if r.nth(0)?.is_zero() {
        return Err(SeqError::NotConversible);
    }
    let c = r.pow(n as u32).nth(n - k)?;
    Ok(c.times(&C::from_int(k as i64)).try_div(&C::from_int(n as i64))?)
}

/// The series `s` with `s = x (r ∘ s)`.
pub fn lagrange_fixpoint<C: Coefficient>(r: &Seq<C>) -> Seq<C> {
    let x = Seq::<C>::x();
    let r = r.clone();
    Seq::fix(|s| &x * &r.compose(s))
}

/// `[xᵏ] (1 + b x)^r = bᵏ r(r−1)⋯(r−k+1) / k!`.
pub fn binom_general(r: &Rational, b: &Rational, k: usize) -> Rational {
    let f = &fall(r, k) * &b.pow_u(k as u32);
    f.checked_div(&Rational::from_bigint(factorial(k))).expect("nonzero")
}

/// `Σ_{k≤n} C(n,k) B_k = B_n + [n = 1]` for every `n < count`.
pub fn bernoulli_recurrence_check(count: usize) -> Result<bool> {
    let b = bernoulli_numbers().take(count)?;
    for n in 0..count {
        let mut lhs = Rational::from_int(0);
        for (k, bk) in b.iter().enumerate().take(n + 1) {
            lhs = &lhs + &(bk * &Rational::from_bigint(crate::coeff::binomial(n, k)));
        }
        let rhs = if n == 1 { &b[n] + &Rational::from_int(1) } else { b[n].clone() };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C = B + x/2` with `B = x/(exp − 1)`.
pub fn c_series() -> Seq<Rational> {
    let b = crate::named::uni::<Rational>("bernoulli").expect("registered");
    &b + &Seq::x().scale(&Rational::new(1, 2).expect("nonzero"))
}

/// `C ∘ (−x) = C` on `count` terms.
pub fn c_evenness_check(count: usize) -> Result<bool> {
    let c = c_series();
    c.compose(&Seq::from_ints(&[0, -1])).prefix_eq(&c, count)
}

/// Coefficients in `u` of the polynomial giving `Σ_{k<n} kᵐ`.
pub fn power_sum_poly(m: usize) -> Result<Vec<Rational>> {
    let spec: Vec<usize> = (2..=m + 2).collect();
    Ok(select(&spec, &un_diag_e2o(&power_sums::<Rational>()))?.pop().unwrap_or_default())
}

/// Rows `m = 0..count` of the power sum polynomials.
pub fn power_sum_polys(count: usize) -> Result<Vec<Vec<Rational>>> {
    let spec: Vec<usize> = (2..count + 2).collect();
    select(&spec, &un_diag_e2o(&power_sums::<Rational>()))
}

pub fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::from_int(0), |acc, c| &(&acc * x) + c)
}

/// The factorials as `1/d₁` with `dₙ = 1 − (2n−1)x − n²x²/d_{n+1}` and the
/// innermost denominator `d_depth` replaced by 1.
pub fn cf_factorials(depth: usize) -> Seq<Rational> {
    let mut d = Seq::<Rational>::one();
    for n in (1..depth).rev() {
        let n = n as i64;
        let lin = Seq::from_ints(&[1, 1 - 2 * n]);
        let quad = Seq::monomial(2).scale(&Rational::from_int(n * n));
        d = &lin - &(&quad / &d);
    }
    d.recip()
}

/// The tangent numbers as `x u₁` with `u_k = 1/(1 − k(k+1)x² u_{k+1})` and
/// `u_depth = 1`.
pub fn cf_tangent(depth: usize) -> Seq<Rational> {
    let mut u = Seq::<Rational>::one();
    for k in (1..depth).rev() {
        let k = k as i64;
        let t = Seq::monomial(2).scale(&Rational::from_int(k * (k + 1)));
        u = (&Seq::one() - &(&t * &u)).recip();
    }
    &Seq::x() * &u
}

/// Boustrophedon rows: alternately suffix sums and prefix sums, from `[1]`.
pub fn entringer(rows: usize) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::with_capacity(rows);
    let mut row = vec![Rational::from_int(1)];
    for i in 0..rows {
        out.push(row.clone());
        let s = Seq::new(row);
        row = if i % 2 == 0 {
            suffix_sums(&s)?.to_poly()?.into_coeffs()
        } else {
            prefix_sums(&s).to_poly()?.into_coeffs()
        };
    }
    Ok(out)
}

/// Entringer rows read from the diagonals of `zigzags` with the factorials
/// removed on both sides.
pub fn zigzag_rows(rows: usize) -> Result<Vec<Vec<Rational>>> {
    let diags = zigzags::<Rational>().map(|p| poly_e2o(&ue2o(p)));
    let spec: Vec<usize> = (1..=rows).collect();
    select(&spec, &diags)
}

pub fn zigzags_check(rows: usize) -> Result<bool> {
    Ok(entringer(rows)? == zigzag_rows(rows)?)
}

/// `p₀ = x`, `p_{n+1} = (1 + x²) p_n'`.
pub fn logan_iterated(rows: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(rows);
    let mut p = Poly::<Rational>::from_ints(&[0, 1]);
    let w = Poly::from_ints(&[1, 0, 1]);
    for _ in 0..rows {
        out.push(p.coeffs().to_vec());
        p = w.times(&p.deriv());
    }
    out
}

/// Logan polynomials from the bivariate closed form.
pub fn logan_closed(rows: usize) -> Result<Vec<Vec<Rational>>> {
    let spec: Vec<usize> = (2..rows + 2).collect();
    take_ebiv(&spec, &logan_biv::<Rational>())
}

/// Rows computed both ways; an error if they disagree.
pub fn logan(rows: usize) -> Result<Vec<Vec<Rational>>> {
    let a = logan_iterated(rows);
    if a != logan_closed(rows)? {
        return Err(SeqError::Domain("logan polynomials disagree".into()));
    }
    Ok(a)
}

/// Leading coefficients `c_1 … c_count` of the generalised sieve
/// `h_{n+1} = [h_n(z,1) · pascal]_{deg h_n + d_n}`.
pub fn ksmlp(h0: &Poly<Rational>, d: impl IntoIterator<Item = usize>, count: usize) -> Result<Vec<Rational>> {
    let p = pascal::<Rational>();
    let mut h = h0.clone();
    let mut out = Vec::with_capacity(count);
    for dn in d.into_iter().take(count) {
        let idx = h.len() - 1 + dn;
        h = (&x2z(&h) * &p).nth(idx)?;
        out.push(h.coeffs().last().cloned().unwrap_or_else(Rational::zero));
    }
    Ok(out)
}

/// `1ʳ, 2ʳ, …`.
pub fn moessner(r: usize, count: usize) -> Result<Vec<Rational>> {
    ksmlp(&Poly::from_ints(&[1]), std::iter::once(r).chain(std::iter::repeat(0)), count)
}

/// `(a + (n−1)b) nʳ` for `n = 1 …`.
pub fn long(a: &Rational, b: &Rational, r: usize, count: usize) -> Result<Vec<Rational>> {
    let h0 = Poly::new(vec![b.clone(), a - b]);
    ksmlp(&h0, std::iter::once(r).chain(std::iter::repeat(0)), count)
}

/// `n!` by the sieve with `d = 1, 1, …`.
pub fn paasche_fac(count: usize) -> Result<Vec<Rational>> {
    ksmlp(&Poly::from_ints(&[1]), std::iter::repeat(1), count)
}

/// `Π_{i<n} (n−i)^{i+1}` by the sieve with `d = 1, 2, …`.
pub fn super_fac(count: usize) -> Result<Vec<Rational>> {
    ksmlp(&Poly::from_ints(&[1]), 1.., count)
}

/// The triangles `s₀ = pascal`, `s_{n+1} = x2z(s_n[r]) · pascal`, each cut
/// to `shape[n]` diagonals.
pub fn moessner_triangles(r: usize, shape: &[usize]) -> Result<Vec<Vec<Vec<Rational>>>> {
    let p = pascal::<Rational>();
    let mut s = p.clone();
    let mut out = Vec::with_capacity(shape.len());
    for &w in shape {
        out.push(s.take(w)?.into_iter().map(Poly::into_coeffs).collect());
        s = &x2z(&s.nth(r)?) * &p;
    }
    Ok(out)
}

/// `h₀ = 1`, `h_{n+1} = (x2z(h_n) · pascal)[r]`, each cut to `shape[n]`.
pub fn moessner_h(r: usize, shape: &[usize]) -> Result<Vec<Vec<Rational>>> {
    let p = pascal::<Rational>();
    let mut h = Poly::<Rational>::from_ints(&[1]);
    let mut out = Vec::with_capacity(shape.len());
    for &w in shape {
        out.push(h.coeffs().iter().take(w).cloned().collect());
        h = (&x2z(&h) * &p).nth(r)?;
    }
    Ok(out)
}

/// `Σ 1/x²` as `S₉ + Σ_{x≥0} g(x)` with `g = 1/(x+10)²`, the tail summed by
/// Euler–Maclaurin through `B₄`. Terms at infinity vanish for this `g`.
pub fn euler_maclaurin_zeta2() -> Result<f64> {
    let s9 = (1..=9).fold(Rational::from_int(0), |acc, k| &acc + &Rational::new(1, k * k).expect("nonzero"));
    let g = Seq::<Rational>::from_ints(&[10, 1]).pow(2).recip();
    let derivs = crate::calculus::o2e(&g).take(4)?;
    let b = bernoulli_numbers().take(5)?;
    let mut total = &s9 + &Rational::new(1, 10).expect("nonzero");
    total = &total + &(&derivs[0] * &Rational::new(1, 2).expect("nonzero"));
    for k in 2..=4usize {
        let coef = b[k].checked_div(&Rational::from_bigint(factorial(k))).expect("nonzero");
        total = &total - &(&coef * &derivs[k - 1]);
    }
    Ok(total.to_f64())
}

/// `ζ(2k) = (−1)^{k−1} 2^{2k−1} B_{2k} π^{2k} / (2k)!`.
pub fn zeta_even(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(SeqError::Domain("zeta_even needs k >= 1".into()));
    }
    let b = bernoulli_numbers().nth(2 * k)?;
    let c = b.checked_div(&Rational::from_bigint(factorial(2 * k))).expect("nonzero");
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * 2f64.powi(2 * k as i32 - 1) * c.to_f64() * std::f64::consts::PI.powi(2 * k as i32))
}

/// `tan = Σ (−1)^{k−1} 4ᵏ(4ᵏ−1) B_{2k}/(2k)! x^{2k−1}` from a given
/// Bernoulli sequence, on `count` terms.
pub fn tan_from_bernoulli(b: &Seq<Rational>, count: usize) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::from_int(0); count];
    for k in 1..=count.div_ceil(2) {
        let pos = 2 * k - 1;
        if pos >= count {
            break;
        }
        let four = Rational::from_int(4).pow_u(k as u32);
        let mut c = &(&four * &(&four - &Rational::from_int(1))) * &b.nth(2 * k)?;
        c = c.checked_div(&Rational::from_bigint(factorial(2 * k))).expect("nonzero");
        out[pos] = if k % 2 == 1 { c } else { -&c };
    }
    Ok(out)
}

pub fn tan_bernoulli_check(count: usize) -> Result<bool> {
    Ok(tan_from_bernoulli(&bernoulli_numbers(), count)? == tanx::<Rational>().take(count)?)
}

/// `cos + i sin = exp ∘ (i x)` on `count` terms.
pub fn euler_identity_check(count: usize) -> Result<bool> {
    type G = GaussianRational;
    let i = Seq::constant(G::i());
    let lhs = &cosx::<G>() + &(&i * &sinx::<G>());
    let rhs = expx::<G>().compose(&Seq::new(vec![G::zero(), G::i()]));
    lhs.prefix_eq(&rhs, count)
}

/// `(cos + i sin)ⁿ = cos ∘ nx + i sin ∘ nx` on `count` terms.
pub fn de_moivre_check(n: u32, count: usize) -> Result<bool> {
    type G = GaussianRational;
    let i = Seq::constant(G::i());
    let lhs = (&cosx::<G>() + &(&i * &sinx::<G>())).pow(n);
    let nx = Seq::new(vec![G::zero(), G::from_int(n as i64)]);
    let rhs = &cosx::<G>().compose(&nx) + &(&i * &sinx::<G>().compose(&nx));
    lhs.prefix_eq(&rhs, count)
}

/// Real parts of a Gaussian series; fails on a nonzero imaginary part.
pub fn make_all_real(s: &[GaussianRational]) -> Result<Vec<Rational>> {
    s.iter().map(|g| Ok(g.make_real()?)).collect()
}

/// `xcot = xcth(i)` on `count` terms, comparing real projections.
pub fn xcot_bridge_check(count: usize) -> Result<bool> {
    let g = crate::calculus::xcth(&GaussianRational::i()).take(count)?;
    let xcot = crate::calculus::core::<Rational>(crate::calculus::CoreName::Xcotx).take(count)?;
    Ok(make_all_real(&g)? == xcot)
}

/// Factorials from `fac = 1 + x·fac + x²·fac'`.
pub fn fac_ode() -> Seq<Rational> {
    let x = Seq::<Rational>::x();
    Seq::fix(|f| &(&Seq::one() + &(&x * f)) + &(&(&x * &x) * &deriv(f)))
}

pub fn e2o_tan() -> Seq<Rational> {
    e2o(&tanx())
}
