//! Evaluation of expressions to lazy series.

use std::str::FromStr;

use seqalg::bivariate::{self, BivSeq, BIVARIATE_NAMES};
use seqalg::calculus::{self, CoreName};
use seqalg::{discrete, named, Coefficient, GaussianRational, Poly, Rational, Seq, SeqError};
use thiserror::Error;

use crate::parse::{BinOp, Expr, SyntaxError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    Gaussian,
}

impl FromStr for Field {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rational" => Ok(Field::Rational),
            "gaussian" => Ok(Field::Gaussian),
            _ => Err(format!("unknown field {s:?}, expected rational or gaussian")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalMode {
    pub field: Field,
    pub biv: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("{0}")]
    Mode(String),
    #[error("{name} takes {expected} argument(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("expected a constant, found {0}")]
    NotConstant(String),
    #[error("in {sub}: {source}")]
    Eval { sub: String, source: SeqError },
    #[error("bad row spec {0:?}")]
    BadSpec(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl CliError {
    /// 2 for syntax errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax(_) => 2,
            _ => 1,
        }
    }

    /// The library error behind an evaluation failure.
    pub fn seq_error(&self) -> Option<&SeqError> {
        match self {
            CliError::Eval { source, .. } => Some(source),
            _ => None,
        }
    }
}

/// Coefficient types an expression can be evaluated over.
///
/// The bivariate hooks are only available when the coefficients are
/// themselves polynomials, i.e. for series stored by diagonals.
pub trait Domain: Coefficient {
    fn biv_leaf(_name: &str) -> Option<Seq<Self>> {
        None
    }

    fn biv_unary(_name: &str, _a: &Seq<Self>) -> Option<Seq<Self>> {
        None
    }

    /// Rendering after conversion to integers; fails with `NotWhole`.
    fn whole(&self) -> Result<String, SeqError> {
        Ok(self.to_integer()?.to_string())
    }
}

impl Domain for Rational {}
impl Domain for GaussianRational {}

impl<C: Coefficient> Domain for Poly<C> {
    fn biv_leaf(name: &str) -> Option<Seq<Self>> {
        match name {
            "u" => Some(bivariate::u()),
            "z" => Some(bivariate::z()),
            _ => bivariate::named_bivariate(name),
        }
    }

    fn biv_unary(name: &str, a: &BivSeq<C>) -> Option<BivSeq<C>> {
        Some(match name {
            "dz" => bivariate::dz(a),
            "du" => bivariate::du(a),
            "ue2o" => a.map(bivariate::ue2o),
            "padTri" => bivariate::pad_tri(a),
            "taylor" => bivariate::taylor(a),
            _ => return None,
        })
    }

    fn whole(&self) -> Result<String, SeqError> {
        let cs: Result<Vec<_>, _> = self.coeffs().iter().map(|c| c.to_integer()).collect();
        Ok(seqalg::seq::render_list(&cs?))
    }
}

pub const UNARY: [&str; 15] = [
    "deriv",
    "integ",
    "sqroot",
    "converse",
    "e2o",
    "o2e",
    "lg",
    "delta",
    "sigma",
    "h2i",
    "i2h",
    "rh2i",
    "recip",
    "shInv",
    "prefixSums",
];
pub const BINARY: [&str; 3] = ["shuffle", "hadamard", "infiltration"];
pub const BIV_UNARY: [&str; 5] = ["dz", "du", "ue2o", "padTri", "taylor"];

/// Every subexpression evaluated so far, children before parents.
pub struct Trace<K: Coefficient> {
    pub nodes: Vec<(String, Seq<K>)>,
}

/// Evaluates `e`, recording its subexpressions for error attribution.
pub fn eval<K: Domain>(e: &Expr, mode: EvalMode) -> Result<(Seq<K>, Trace<K>), CliError> {
    let mut trace = Trace { nodes: Vec::new() };
    let s = go(e, mode, &mut trace)?;
    Ok((s, trace))
}

fn arity(name: &str, args: &[Expr], n: usize) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(CliError::Arity { name: name.to_string(), expected: n, got: args.len() })
    }
}

fn go<K: Domain>(e: &Expr, mode: EvalMode, t: &mut Trace<K>) -> Result<Seq<K>, CliError> {
    let s = match e {
        Expr::Num(n) => Seq::constant(K::from_bigint(n)),
        Expr::Ident(name) => leaf(name, mode)?,
        Expr::Neg(a) => go(a, mode, t)?.neg(),
        Expr::Pow(a, k) => go(a, mode, t)?.pow(*k),
        Expr::Bin(op, a, b) => {
            let (a, b) = (go(a, mode, t)?, go(b, mode, t)?);
            match op {
                BinOp::Add => &a + &b,
                BinOp::Sub => &a - &b,
                BinOp::Mul => &a * &b,
                BinOp::Div => &a / &b,
                BinOp::Compose => a.compose(&b),
            }
        }
        Expr::Call(name, args) => call(name, args, mode, t)?,
    };
    t.nodes.push((e.to_string(), s.clone()));
    Ok(s)
}

fn leaf<K: Domain>(name: &str, mode: EvalMode) -> Result<Seq<K>, CliError> {
    if name == "x" {
        return Ok(Seq::x());
    }
    if name == "i" {
        return match (mode.field, K::imaginary_unit()) {
            (Field::Gaussian, Some(i)) => Ok(Seq::constant(i)),
            _ => Err(CliError::Mode("i needs --field gaussian".into())),
        };
    }
    if let Ok(c) = CoreName::from_str(name) {
        return Ok(calculus::core(c));
    }
    match name {
        "nats" => return Ok(calculus::nats()),
        "pos" => return Ok(calculus::pos()),
        _ => {}
    }
    if let Some(s) = named::uni(name) {
        return Ok(s);
    }
    let biv_name = name == "u" || name == "z" || BIVARIATE_NAMES.contains(&name);
    if biv_name {
        return K::biv_leaf(name).ok_or_else(|| CliError::Mode(format!("{name} is bivariate, use --biv")));
    }
    Err(CliError::UnknownName(name.to_string()))
}

fn call<K: Domain>(name: &str, args: &[Expr], mode: EvalMode, t: &mut Trace<K>) -> Result<Seq<K>, CliError> {
    if name == "unDiag" || name == "unDiagE2o" {
        return Err(CliError::Mode(format!("{name} is only allowed around a whole triangle expression")));
    }
    if name == "pow" || name == "xcth" {
        let want = if name == "pow" { 2 } else { 1 };
        arity(name, args, want)?;
        let r = constant::<K>(&args[want - 1], mode)?;
        return Ok(if name == "pow" { calculus::pow_f(&go(&args[0], mode, t)?, &r) } else { calculus::xcth(&r) });
    }
    if BINARY.contains(&name) {
        arity(name, args, 2)?;
        let (a, b) = (go(&args[0], mode, t)?, go(&args[1], mode, t)?);
        return Ok(match name {
            "shuffle" => discrete::shuffle(&a, &b),
            "hadamard" => discrete::hadamard(&a, &b),
            _ => discrete::infiltration(&a, &b),
        });
    }
    if UNARY.contains(&name) {
        arity(name, args, 1)?;
        let a = go(&args[0], mode, t)?;
        return Ok(match name {
            "deriv" => calculus::deriv(&a),
            "integ" => calculus::integ(&a),
            "sqroot" => a.sqroot(),
            "converse" => a.converse(),
            "e2o" => calculus::e2o(&a),
            "o2e" => calculus::o2e(&a),
            "lg" => calculus::log_seq(&a),
            "delta" => discrete::delta(&a),
            "sigma" => discrete::sigma(&a),
            "h2i" => discrete::h2i(&a),
            "i2h" => discrete::i2h(&a),
            "rh2i" => discrete::rh2i(&a),
            "recip" => a.recip(),
            "shInv" => discrete::shuffle_inv(&a),
            _ => discrete::prefix_sums(&a),
        });
    }
    if BIV_UNARY.contains(&name) {
        arity(name, args, 1)?;
        let a = go(&args[0], mode, t)?;
        return K::biv_unary(name, &a).ok_or_else(|| CliError::Mode(format!("{name} needs --biv")));
    }
    Err(CliError::UnknownName(name.to_string()))
}

/// Evaluates a coefficient-valued expression such as `-1/2` or `i`.
pub fn constant<K: Domain>(e: &Expr, mode: EvalMode) -> Result<K, CliError> {
    let err = |source: SeqError| CliError::Eval { sub: e.to_string(), source };
    Ok(match e {
        Expr::Num(n) => K::from_bigint(n),
        Expr::Ident(name) if name == "i" => match (mode.field, K::imaginary_unit()) {
            (Field::Gaussian, Some(i)) => i,
            _ => return Err(CliError::Mode("i needs --field gaussian".into())),
        },
        Expr::Neg(a) => constant::<K>(a, mode)?.negate(),
        Expr::Pow(a, k) => constant::<K>(a, mode)?.pow_u(*k),
        Expr::Bin(op, a, b) if *op != BinOp::Compose => {
            let (a, b) = (constant::<K>(a, mode)?, constant::<K>(b, mode)?);
            match op {
                BinOp::Add => a.plus(&b),
                BinOp::Sub => a.minus(&b),
                BinOp::Mul => a.times(&b),
                _ => a.try_div(&b).map_err(|c| err(c.into()))?,
            }
        }
        _ => return Err(CliError::NotConstant(e.to_string())),
    })
}

/// Forces `n` terms; on failure names the innermost subexpression that
/// fails on its own within the same prefix.
pub fn force<K: Domain>(s: &Seq<K>, trace: &Trace<K>, n: usize) -> Result<Vec<K>, CliError> {
    s.take(n).map_err(|e| attribute(e, trace, |sub| sub.take(n).err()))
}

/// Attribution for an error `e` raised while forcing the whole tree.
pub fn attribute<K: Coefficient>(
    e: SeqError,
    trace: &Trace<K>,
    fails: impl Fn(&Seq<K>) -> Option<SeqError>,
) -> CliError {
    for (sub, s) in &trace.nodes {
        if let Some(source) = fails(s) {
            return CliError::Eval { sub: sub.clone(), source };
        }
    }
    let sub = trace.nodes.last().map(|n| n.0.clone()).unwrap_or_default();
    CliError::Eval { sub, source: e }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn terms(src: &str, n: usize) -> Result<Vec<Rational>, CliError> {
        let (s, t) = eval::<Rational>(&parse(src).unwrap(), EvalMode::default())?;
        force(&s, &t, n)
    }

    fn show(v: &[Rational]) -> String {
        seqalg::seq::render_list(v)
    }

    #[test]
    fn x_is_the_identity_series() {
        assert_eq!(show(&terms("x", 3).unwrap()), "[0,1,0]");
    }

    #[test]
    fn schroeder_closed_form() {
        let v = terms("(1+x-sqroot(1-6*x+x^2))/4", 11).unwrap();
        assert_eq!(show(&v), "[0,1,1,3,11,45,197,903,4279,20793,103049]");
    }

    #[test]
    fn bivariate_names_need_the_flag() {
        assert!(matches!(terms("u", 1), Err(CliError::Mode(_))));
        assert!(matches!(terms("pascal", 1), Err(CliError::Mode(_))));
        assert!(matches!(terms("dz(x)", 1), Err(CliError::Mode(_))));
        assert!(matches!(terms("i", 1), Err(CliError::Mode(_))));
    }

    #[test]
    fn unknown_names_and_arity() {
        assert!(matches!(terms("nosuch", 1), Err(CliError::UnknownName(_))));
        assert!(matches!(terms("frob(x)", 1), Err(CliError::UnknownName(_))));
        assert!(matches!(terms("shuffle(x)", 1), Err(CliError::Arity { expected: 2, got: 1, .. })));
        assert!(matches!(terms("pow(1+x, x)", 1), Err(CliError::NotConstant(_))));
    }

    #[test]
    fn errors_name_the_failing_subexpression() {
        match terms("1 + x*(expx o (1+x))", 4) {
            Err(CliError::Eval { sub, source }) => {
                assert_eq!(sub, "expx o (1+x)");
                assert_eq!(source, SeqError::NonTerminatingComposition);
            }
            other => panic!("{other:?}"),
        }
        match terms("starx + sqroot(x)", 3) {
            Err(CliError::Eval { sub, source }) => {
                assert_eq!(sub, "sqroot(x)");
                assert_eq!(source, SeqError::NotASquareRootDomain);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rational_powers() {
        assert_eq!(show(&terms("pow(1+x, 1/2)", 4).unwrap()), "[1,1/2,-1/8,1/16]");
        assert_eq!(show(&terms("pow(1-4*x, -1/2)", 4).unwrap()), "[1,2,6,20]");
    }

    #[test]
    fn gaussian_constants() {
        let mode = EvalMode { field: Field::Gaussian, biv: false };
        let (s, t) = eval::<GaussianRational>(&parse("(1+i)^2*x").unwrap(), mode).unwrap();
        assert_eq!(seqalg::seq::render_list(&force(&s, &t, 2).unwrap()), "[0+0i,0+2i]");
    }
}
