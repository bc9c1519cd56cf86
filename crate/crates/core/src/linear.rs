//! Linear recurrences with constant coefficients and small square matrices
//! over coefficients or series.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::calculus::o2e;
use crate::coeff::Coefficient;
use crate::error::{Result, SeqError};
use crate::poly::Poly;
use crate::seq::Seq;

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 8;

/// A recurrence `b(E) s = 0` with initial terms `s₀ … s_{k−1}`.
///
/// `b` is stored lowest degree first, so `x² − x − 1` is `[-1, -1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Lode<C: Coefficient> {
    pub b: Poly<C>,
    pub inits: Vec<C>,
}

impl<C: Coefficient> Lode<C> {
    pub fn new(b: Poly<C>, inits: Vec<C>) -> Self {
        Lode { b, inits }
    }

    /// Checks `Σ bⱼ s_{n+j} = 0` for `n < count`.
    pub fn satisfied_by(&self, s: &Seq<C>, count: usize) -> Result<bool> {
        annihilates(&self.b, s, count)
    }
}

/// True when `Σ bⱼ s_{n+j}` vanishes for every `n < count`.
pub fn annihilates<C: Coefficient>(b: &Poly<C>, s: &Seq<C>, count: usize) -> Result<bool> {
    let terms = s.take(count + b.len())?;
    let get = |i: usize| terms.get(i).cloned().unwrap_or_else(C::zero);
    for n in 0..count {
        let mut acc = C::zero();
        for (j, bj) in b.coeffs().iter().enumerate() {
            acc = acc.plus(&bj.times(&get(n + j)));
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves a recurrence as the quotient `(b̃·inits)[0..k−1] / b̃`, where `b̃`
/// is `b` reversed.
pub fn klarner_solve<C: Coefficient>(l: &Lode<C>) -> Result<Seq<C>> {
    let b = l.b.coeffs();
    match b.last() {
        Some(lead) if !lead.is_zero() => {}
        _ => return Err(SeqError::DegenerateRecurrence),
    }
    let k = b.len() - 1;
    if l.inits.len() != k {
        return Err(SeqError::DimensionMismatch(format!(
            "recurrence of order {k} needs {k} initial terms, got {}",
            l.inits.len()
        )));
    }
    let rev = l.b.reversed();
    let mut num = vec![C::zero(); k];
    for (i, ri) in rev.coeffs().iter().enumerate().take(k) {
        for (j, s) in l.inits.iter().enumerate() {
            if i + j < k {
                num[i + j] = num[i + j].plus(&ri.times(s));
            }
        }
    }
    Ok(&Seq::padded(num) / &Seq::from_poly(&rev))
}

/// The solution of `b(D) f = 0` whose derivatives at 0 are the initial
/// terms.
pub fn lode_to_ode_bridge<C: Coefficient>(l: &Lode<C>) -> Result<Seq<C>> {
    Ok(o2e(&klarner_solve(l)?))
}

/// The operations a matrix entry needs.
pub trait Ring: Clone {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_add(&self, other: &Self) -> Self;
    fn r_mul(&self, other: &Self) -> Self;
    fn r_neg(&self) -> Self;
}

impl<C: Coefficient> Ring for C {
    fn r_zero() -> Self {
        C::zero()
    }
    fn r_one() -> Self {
        C::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self.plus(other)
    }
    fn r_mul(&self, other: &Self) -> Self {
        self.times(other)
    }
    fn r_neg(&self) -> Self {
        self.negate()
    }
}

impl<C: Coefficient> Ring for Seq<C> {
    fn r_zero() -> Self {
        Seq::zero()
    }
    fn r_one() -> Self {
        Seq::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_neg(&self) -> Self {
        -self
    }
}

/// Dense square matrix, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_DIM {
            return Err(SeqError::DimensionMismatch(format!("dimension {n} outside 1..={MAX_DIM}")));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(SeqError::DimensionMismatch(format!("row of length {} in a {n}x{n} matrix", r.len())));
        }
        Ok(Matrix { rows })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Result<Self> {
        Self::new((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diag(n, T::r_one())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| T::r_zero())
    }

    /// `r` along the diagonal.
    pub fn diag(n: usize, r: T) -> Result<Self> {
        Self::from_fn(n, |i, j| if i == j { r.clone() } else { T::r_zero() })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Matrix { rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect() }
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(SeqError::DimensionMismatch(format!("{0}x{0} against {1}x{1}", self.dim(), other.dim())))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim();
        Self::from_fn(n, |i, j| self.rows[i][j].r_add(&other.rows[i][j]))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.r_neg())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim();
        Self::from_fn(n, |i, j| (0..n).fold(T::r_zero(), |acc, k| acc.r_add(&self.rows[i][k].r_mul(&other.rows[k][j]))))
    }

    /// `c · A`.
    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| c.r_mul(a))
    }

    /// Determinant by cofactor expansion along the first row. Minors are
    /// memoised on the set of columns still in play.
    pub fn det(&self) -> T {
        let n = self.dim();
        let mut memo: HashMap<u32, T> = HashMap::new();
        self.minor_det(0, (1u32 << n) - 1, &mut memo)
    }

    fn minor_det(&self, row: usize, cols: u32, memo: &mut HashMap<u32, T>) -> T {
        if cols == 0 {
            return T::r_one();
        }
        if let Some(d) = memo.get(&cols) {
            return d.clone();
        }
        let mut acc = T::r_zero();
        let mut sign_pos = true;
        for j in 0..self.dim() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let term = self.rows[row][j].r_mul(&self.minor_det(row + 1, cols & !(1 << j), memo));
            acc = acc.r_add(&if sign_pos { term } else { term.r_neg() });
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

impl<C: Coefficient> Matrix<Seq<C>> {
    /// The matrix of `n`-th coefficients.
    pub fn coeff_matrix(&self, n: usize) -> Result<Matrix<C>> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.nth(n)).collect::<Result<Vec<C>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows })
    }

    /// Entrywise prefix equality on `n` terms.
    pub fn prefix_eq(&self, other: &Self, n: usize) -> Result<bool> {
        self.same_dim(other)?;
        for (ra, rb) in self.rows.iter().zip(&other.rows) {
            for (a, b) in ra.iter().zip(rb) {
                if !a.prefix_eq(b, n)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

type PowerCache<C> = Rc<RefCell<Vec<Matrix<C>>>>;

fn power<C: Coefficient>(a: &Matrix<C>, cache: &PowerCache<C>, n: usize) -> Result<Matrix<C>> {
    let mut c = cache.borrow_mut();
    if c.is_empty() {
        c.push(Matrix::identity(a.dim())?);
    }
    while c.len() <= n {
        let next = c[c.len() - 1].mul(a)?;
        c.push(next);
    }
    Ok(c[n].clone())
}

/// `(Ax)* = I + Ax + A²x² + ⋯` as a matrix of series.
pub fn kleene_star<C: Coefficient>(a: &Matrix<C>) -> Matrix<Seq<C>> {
    let cache: PowerCache<C> = Rc::new(RefCell::new(Vec::new()));
    let n = a.dim();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (a, cache) = (a.clone(), cache.clone());
                    Seq::try_from_fn(move |k| Ok(power(&a, &cache, k)?.get(i, j).clone()))
                })
                .collect()
        })
        .collect();
    Matrix { rows }
}

/// Checks `S = I + (Ax) S` entrywise on `n` terms.
pub fn star_equation_check<C: Coefficient>(a: &Matrix<C>, n: usize) -> Result<bool> {
    let s = kleene_star(a);
    let ax = a.map(|c| Seq::<C>::monomial(1).scale(c));
    let rhs = Matrix::identity(a.dim())?.add(&ax.mul(&s)?)?;
    s.prefix_eq(&rhs, n)
}

/// `det(xI − A)`.
pub fn char_poly<C: Coefficient>(a: &Matrix<C>) -> Poly<C> {
    let xi = a.map(|c| Poly::new(vec![c.negate()]));
    let n = a.dim();
    let m =
        Matrix::from_fn(
            n,
            |i, j| {
                if i == j {
                    Poly::new(vec![a.get(i, j).negate(), C::one()])
                } else {
                    xi.get(i, j).clone()
                }
            },
        )
        .expect("same dimension");
    m.det().trimmed()
}

pub fn det<C: Coefficient>(a: &Matrix<C>) -> C {
    a.det()
}

/// Checks that `b(E)` kills every entry of `(Ax)*` on `n` terms.
pub fn cayley_hamilton_check_with<C: Coefficient>(a: &Matrix<C>, b: &Poly<C>, n: usize) -> Result<bool> {
    let s = kleene_star(a);
    for row in s.rows() {
        for entry in row {
            if !annihilates(b, entry, n)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn cayley_hamilton_check<C: Coefficient>(a: &Matrix<C>, n: usize) -> Result<bool> {
    cayley_hamilton_check_with(a, &char_poly(a), n)
}

/// `exp(Ax)` as `Λ⁻¹(S₀I + S₁A + ⋯ + S_{k−1}A^{k−1})`, where `Sᵢ` solves the
/// characteristic recurrence with the `i`-th unit vector as initial terms.
pub fn matrix_exp<C: Coefficient>(a: &Matrix<C>) -> Result<Matrix<Seq<C>>> {
    let n = a.dim();
    let b = char_poly(a);
    let mut phi = Matrix::<Seq<C>>::zero(n)?;
    let mut ai = Matrix::<C>::identity(n)?;
    for i in 0..n {
        let inits = (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect();
        let si = klarner_solve(&Lode::new(b.clone(), inits))?;
        let term = ai.map(|c| si.scale(c));
        phi = phi.add(&term)?;
        ai = ai.mul(a)?;
    }
    Ok(phi.map(o2e))
}
