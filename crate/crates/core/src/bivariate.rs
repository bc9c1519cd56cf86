//! Bivariate series as series of homogeneous polynomials.
//!
//! A [`BivSeq`] holds its `n`-th diagonal at index `n`: the polynomial
//! `[b(0,n), b(1,n−1), …, b(n,0)]`, where `b(i,j)` is the coefficient of
//! `zⁱ uʲ`. [`un_diag`] transposes this layout into rows indexed by the
//! power of `z`.

use std::cell::RefCell;

use num_bigint::BigInt;

use crate::cache::cached;
use crate::calculus::{deriv, expx};
use crate::coeff::{factorial, Coefficient, Rational};
use crate::error::Result;
use crate::named::uni;
use crate::poly::Poly;
use crate::seq::Seq;

pub type BivSeq<C = Rational> = Seq<Poly<C>>;

/// The variable `u`.
pub fn u<C: Coefficient>() -> BivSeq<C> {
    Seq::new(vec![Poly::from_ints(&[0]), Poly::from_ints(&[1, 0])])
}

/// The variable `z`.
pub fn z<C: Coefficient>() -> BivSeq<C> {
    Seq::new(vec![Poly::from_ints(&[0]), Poly::from_ints(&[0, 1])])
}

/// A univariate series with each coefficient as a constant polynomial.
pub fn lift<C: Coefficient>(f: &Seq<C>) -> BivSeq<C> {
    f.map(|c| Poly::constant(c.clone()))
}

/// Multiplies entry `k` of a polynomial by `k!`.
pub fn poly_e2o<C: Coefficient>(p: &Poly<C>) -> Poly<C> {
    Poly::new(p.coeffs().iter().enumerate().map(|(k, c)| c.times(&C::from_bigint(&factorial(k)))).collect())
}

/// Divides entry `k` of a polynomial by `k!`.
pub fn poly_o2e<C: Coefficient>(p: &Poly<C>) -> Result<Poly<C>> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| Ok(c.try_div(&C::from_bigint(&factorial(k)))?))
        .collect::<Result<Vec<C>>>()
        .map(Poly::new)
}

/// `reverse . e2o . reverse`: removes factorials attached to `u`.
pub fn ue2o<C: Coefficient>(p: &Poly<C>) -> Poly<C> {
    poly_e2o(&p.reversed()).reversed()
}

/// Pads diagonal `n` to at least `n + 1` entries.
pub fn pad_tri<C: Coefficient>(s: &BivSeq<C>) -> BivSeq<C> {
    s.try_map(|n, p| Ok(p.pad_to(n + 1)))
}

/// Anything rows can be selected from.
pub trait RowSource<C: Coefficient> {
    /// Row `i`, cut to at most `width` entries.
    fn row(&self, i: usize, width: usize) -> Result<Vec<C>>;
}

/// The transposition of a padded triangle, computed row by row on demand.
///
/// Row `r` collects entry `r` of every diagonal long enough to have one.
/// For a regular triangle row `r` is `[b(r,0), b(r,1), …]`.
#[derive(Clone)]
pub struct Rows<C: Coefficient> {
    diags: BivSeq<C>,
}

impl<C: Coefficient> RowSource<C> for Rows<C> {
    fn row(&self, r: usize, width: usize) -> Result<Vec<C>> {
        let mut out = Vec::with_capacity(width);
        let end = self.diags.finite_len();
        let mut j = 0;
        while out.len() < width && end.is_none_or(|l| j < l) {
            let d = self.diags.nth(j)?;
            if j >= r || d.len() > r {
                out.push(d.get(r));
            }
            j += 1;
        }
        Ok(out)
    }
}

/// Selecting from the diagonals themselves; a short diagonal gives a
/// short row.
impl<C: Coefficient> RowSource<C> for BivSeq<C> {
    fn row(&self, i: usize, width: usize) -> Result<Vec<C>> {
        if self.finite_len().is_some_and(|l| i >= l) {
            return Ok(Vec::new());
        }
        Ok(self.nth(i)?.coeffs().iter().take(width).cloned().collect())
    }
}

/// Transposes diagonals into rows indexed by the power of `z`.
pub fn un_diag<C: Coefficient>(s: &BivSeq<C>) -> Rows<C> {
    Rows { diags: s.clone() }
}

/// [`un_diag`] after multiplying each `z`-power coefficient by its factorial.
pub fn un_diag_e2o<C: Coefficient>(s: &BivSeq<C>) -> Rows<C> {
    un_diag(&s.map(poly_e2o))
}

/// `zipWith take spec rows`.
pub fn select<C: Coefficient>(spec: &[usize], rows: &dyn RowSource<C>) -> Result<Vec<Vec<C>>> {
    spec.iter().enumerate().map(|(i, &w)| rows.row(i, w)).collect()
}

/// [`select`] with integer entries; fails with `NotWhole`.
pub fn select_w<C: Coefficient>(spec: &[usize], rows: &dyn RowSource<C>) -> Result<Vec<Vec<BigInt>>> {
    select(spec, rows)?.into_iter().map(|r| r.iter().map(|c| Ok(c.to_integer()?)).collect()).collect()
}

pub fn take_biv<C: Coefficient>(spec: &[usize], s: &BivSeq<C>) -> Result<Vec<Vec<C>>> {
    select(spec, &un_diag(s))
}

pub fn take_biv_w<C: Coefficient>(spec: &[usize], s: &BivSeq<C>) -> Result<Vec<Vec<BigInt>>> {
    select_w(spec, &un_diag(s))
}

pub fn take_ebiv<C: Coefficient>(spec: &[usize], s: &BivSeq<C>) -> Result<Vec<Vec<C>>> {
    select(spec, &un_diag_e2o(s))
}

pub fn take_ebiv_w<C: Coefficient>(spec: &[usize], s: &BivSeq<C>) -> Result<Vec<Vec<BigInt>>> {
    select_w(spec, &un_diag_e2o(s))
}

/// `∂/∂z`: `map deriv (tail s)`.
pub fn dz<C: Coefficient>(s: &BivSeq<C>) -> BivSeq<C> {
    s.tail().map(|p| p.deriv())
}

/// `∂/∂u`: differentiate each padded diagonal from its far end.
pub fn du<C: Coefficient>(s: &BivSeq<C>) -> BivSeq<C> {
    pad_tri(s).tail().map(|p| p.reversed().deriv().reversed())
}

/// Maclaurin coefficients read off the iterated derivatives at 0.
pub fn maclaurin<C: Coefficient>(f: &Seq<C>) -> Seq<C> {
    let derivs = RefCell::new(vec![f.clone()]);
    Seq::try_from_fn(move |n| {
        let mut ds = derivs.borrow_mut();
        while ds.len() <= n {
            let next = deriv(ds.last().expect("nonempty"));
            ds.push(next);
        }
        let d = ds[n].clone();
        drop(ds);
        Ok(d.nth(0)?.try_div(&C::from_bigint(&factorial(n)))?)
    })
}

/// Taylor expansion `f(u + z) = Σ zᵏ/k! · (Dᵏ f)(u)`.
pub fn taylor<C: Coefficient>(f: &BivSeq<C>) -> BivSeq<C> {
    zp(f, &u(), &z()).try_map(|_, p| poly_o2e(p))
}

fn zp<C: Coefficient>(g: &BivSeq<C>, u: &BivSeq<C>, z: &BivSeq<C>) -> BivSeq<C> {
    let head = g.compose(u);
    let (g2, u2, z2) = (deriv(g), u.clone(), z.clone());
    let rest = Seq::deferred(None, move || Ok(zp(&g2, &u2, &z2)));
    &head + &(z * &rest)
}

/// `Σ cₖ zᵏ`, with `zᵏ` occupying diagonal `k`.
pub fn x2z<C: Coefficient>(rho: &Poly<C>) -> BivSeq<C> {
    Seq::new(
        rho.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut v = vec![C::zero(); k + 1];
                v[k] = c.clone();
                Poly::new(v)
            })
            .collect(),
    )
}

/// Names of the built-in bivariate series.
pub const BIVARIATE_NAMES: [&str; 20] = [
    "pascal",
    "intComposition",
    "schroeder",
    "catalanLeaves",
    "cayleyLeaves",
    "ebinom",
    "cycles",
    "parts",
    "permFixedPts",
    "zigzags",
    "ascents",
    "valleys",
    "powerSums",
    "bernoulliPoly",
    "legendre",
    "chebyshev",
    "laguerre",
    "hermite",
    "meixner",
    "logan",
];

/// The defining equation of a built-in bivariate series.
pub fn bivariate_definition(name: &str) -> Option<&'static str> {
    Some(match name {
        "pascal" => "pascal = starx o (u+z)",
        "intComposition" => "intComposition = list o (u*(nonEmptyList o z))",
        "schroeder" => "schroeder = z + u*(pluralList o schroeder)",
        "catalanLeaves" => "catalanLeaves = u*z + z*(nonEmptyList o catalanLeaves)",
        "cayleyLeaves" => "cayleyLeaves = u*z + z*(nonEmptySet o cayleyLeaves)",
        "ebinom" => "ebinom = set o (z + u*z)",
        "cycles" => "cycles = set o (u*(cycle o z))",
        "parts" => "parts = set o (u*(nonEmptySet o z))",
        "permFixedPts" => "permFixedPts = (derangement o z)*(set o (u*z))",
        "zigzags" => "zigzags = (sinx o u + cosx o u)/(cosx o (u+z))",
        "ascents" => "ascents = list o (z + (pluralSet o (u*z-z))/(u-1))",
        "valleys" => "valleys = sqroot(1-u)/(sqroot(1-u) - tanhx o (z*sqroot(1-u)))",
        "powerSums" => "powerSums = ((expx o (u*z)) - 1)/((expx o z) - 1)",
        "bernoulliPoly" => "bernoulliPoly = z*(expx o (u*z))/((expx o z) - 1)",
        "legendre" => "legendre = pow(1 - 2*u*z + z^2, -1/2)",
        "chebyshev" => "chebyshev = (1 - u*z)/(z^2 - 2*u*z + 1)",
        "laguerre" => "laguerre = 1/(1-z)*(expx o (-u*z/(1-z)))",
        "hermite" => "hermite = expx o (2*u*z - z^2)",
        "meixner" => "meixner = pow(1+z^2, -1/2)*(expx o (u*(atanx o z)))",
        "logan" => "logan = (sinx o z + u*(cosx o z))/(cosx o z - u*(sinx o z))",
        _ => return None,
    })
}

/// A built-in bivariate series by name.
pub fn named_bivariate<C: Coefficient>(name: &str) -> Option<BivSeq<C>> {
    let key = BIVARIATE_NAMES.into_iter().find(|n| *n == name)?;
    Some(cached(key, || build_bivariate(key)))
}

fn half_power<C: Coefficient>(f: &BivSeq<C>) -> BivSeq<C> {
    let r = Poly::constant(C::from_rational(&Rational::new(-1, 2).expect("nonzero")));
    crate::calculus::pow_f(f, &r)
}

fn build_bivariate<C: Coefficient>(name: &str) -> BivSeq<C> {
    type B<C> = BivSeq<C>;
    let (u, z) = (u::<C>(), z::<C>());
    let one = B::<C>::one();
    let uz = &u * &z;
    let set = || expx::<Poly<C>>();
    let f = |n: &str| uni::<Poly<C>>(n).expect("registered");
    let core = |n: crate::calculus::CoreName| crate::calculus::core::<Poly<C>>(n);
    use crate::calculus::CoreName as K;
    match name {
        "pascal" => crate::calculus::starx::<Poly<C>>().compose(&(&u + &z)),
        "intComposition" => f("list").compose(&(&u * &f("nonEmptyList").compose(&z))),
        "schroeder" => {
            let pl = f("pluralList");
            Seq::fix(|s| &z + &(&u * &pl.compose(s)))
        }
        "catalanLeaves" => {
            let ne = f("nonEmptyList");
            Seq::fix(|c| &uz + &(&z * &ne.compose(c)))
        }
        "cayleyLeaves" => {
            let ne = f("nonEmptySet");
            Seq::fix(|c| &uz + &(&z * &ne.compose(c)))
        }
        "ebinom" => set().compose(&(&z + &uz)),
        "cycles" => set().compose(&(&u * &f("cycle").compose(&z))),
        "parts" => set().compose(&(&u * &f("nonEmptySet").compose(&z))),
        "permFixedPts" => &f("derangement").compose(&z) * &set().compose(&uz),
        "zigzags" => {
            let num = &core(K::Sinx).compose(&u) + &core(K::Cosx).compose(&u);
            &num / &core(K::Cosx).compose(&(&u + &z))
        }
        "ascents" => {
            let inner = &f("pluralSet").compose(&(&uz - &z)) / &(&u - &one);
            f("list").compose(&(&z + &inner))
        }
        "valleys" => {
            let r = (&one - &u).sqroot();
            &r / &(&r - &core(K::Tanhx).compose(&(&z * &r)))
        }
        "powerSums" => &(&set().compose(&uz) - &one) / &(&set().compose(&z) - &one),
        "bernoulliPoly" => &(&z * &set().compose(&uz)) / &(&set().compose(&z) - &one),
        "legendre" => half_power(&(&(&one - &uz.scale(&Poly::from_ints(&[2]))) + &(&z * &z))),
        "chebyshev" => {
            let den = &(&(&z * &z) - &uz.scale(&Poly::from_ints(&[2]))) + &one;
            &(&one - &uz) / &den
        }
        "laguerre" => {
            let omz = &one - &z;
            &omz.recip() * &set().compose(&(&(-&uz) / &omz))
        }
        "hermite" => set().compose(&(&uz.scale(&Poly::from_ints(&[2])) - &(&z * &z))),
        "meixner" => {
            let w = half_power(&(&one + &(&z * &z)));
            &w * &set().compose(&(&u * &core(K::Atanx).compose(&z)))
        }
        "logan" => {
            let (s, c) = (core(K::Sinx).compose(&z), core(K::Cosx).compose(&z));
            &(&s + &(&u * &c)) / &(&c - &(&u * &s))
        }
        _ => unreachable!("unknown bivariate series {name}"),
    }
}

macro_rules! biv_accessors {
    ($($f:ident => $n:literal),* $(,)?) => {
        $(
            pub fn $f<C: Coefficient>() -> BivSeq<C> {
                named_bivariate($n).expect("registered")
            }
        )*
    };
}

biv_accessors! {
    pascal => "pascal",
    schroeder => "schroeder",
    ebinom => "ebinom",
    cycles => "cycles",
    parts => "parts",
    zigzags => "zigzags",
    ascents => "ascents",
    valleys => "valleys",
    power_sums => "powerSums",
    bernoulli_poly => "bernoulliPoly",
    legendre => "legendre",
    chebyshev => "chebyshev",
    laguerre => "laguerre",
    hermite => "hermite",
    meixner => "meixner",
    logan => "logan",
}

/// Checks that `dz parts = u·parts + u·du parts` on the first `n` diagonals.
pub fn parts_pde_check(n: usize) -> Result<bool> {
    let p = parts::<Rational>();
    let u = u::<Rational>();
    let lhs = dz(&p);
    let rhs = &(&u * &p) + &(&u * &du(&p));
    let spec: Vec<usize> = (1..=n).collect();
    all_zeros(&spec, &(&lhs - &rhs))
}

/// True when every entry of `take_biv spec s` is zero.
pub fn all_zeros<C: Coefficient>(spec: &[usize], s: &BivSeq<C>) -> Result<bool> {
    Ok(take_biv(spec, s)?.iter().flatten().all(|c| c.is_zero()))
}

/// Checks a triangle against a closed form `b(n, k)` on rows `0..n`.
pub fn check_rows(rows: &[Vec<Rational>], f: impl Fn(usize, usize) -> Rational) -> bool {
    rows.iter().enumerate().all(|(n, r)| r.iter().enumerate().all(|(k, c)| *c == f(n, k)))
}
