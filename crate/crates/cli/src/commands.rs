//! The `seqalg` subcommands.

use clap::{Parser, Subcommand, ValueEnum};
use seqalg::bivariate::{poly_e2o, select, ue2o, un_diag, un_diag_e2o, RowSource, BIVARIATE_NAMES};
use seqalg::calculus::CoreName;
use seqalg::seq::render_list;
use seqalg::{bivariate, named, Coefficient, GaussianRational, Poly, Rational};

use crate::eval::{attribute, eval, force, CliError, Domain, EvalMode, Field};
use crate::golden;
use crate::parse::{parse, Expr};

#[derive(Debug, Parser)]
#[command(name = "seqalg", version, about = "Evaluate power series expressions exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Print the first N coefficients of an expression.
    Terms {
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
        /// Print integers, failing if a coefficient is not whole.
        #[arg(long)]
        whole: bool,
        #[arg(long, default_value = "rational")]
        field: Field,
        /// Evaluate over diagonals in u and z; prints one diagonal per entry.
        #[arg(long)]
        biv: bool,
        expr: String,
    },
    /// Print rows of a bivariate expression.
    Triangle {
        /// Row widths, `a..b` or a comma list.
        #[arg(long)]
        spec: String,
        /// Multiply the z-power coefficients by factorials.
        #[arg(long)]
        e2o: bool,
        /// Select from the raw diagonals instead of the rows.
        #[arg(long)]
        diag: bool,
        #[arg(long, value_enum)]
        mode: Option<TriMode>,
        #[arg(long)]
        whole: bool,
        #[arg(long, default_value = "rational")]
        field: Field,
        /// All rows on a single line.
        #[arg(long)]
        flat: bool,
        expr: String,
    },
    /// List every named series with its defining equation.
    Names,
    /// Run a named check suite: `golden-paper` or `registry`.
    Check { suite: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TriMode {
    /// Rows indexed by the power of z.
    Plain,
    /// As `plain`, entry `[u^k z^n]` scaled by `n!`.
    E2o,
    /// The diagonals themselves.
    Biv,
    /// Diagonals with both exponents turned into factorial weights.
    BivE2o,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.cmd) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cmd: &Cmd) -> Result<(i32, String), CliError> {
    match cmd {
        Cmd::Terms { n, whole, field, biv, expr } => {
            let mode = EvalMode { field: *field, biv: *biv };
            Ok((0, terms(expr, *n, *whole, mode)? + "\n"))
        }
        Cmd::Triangle { spec, e2o, diag, mode, whole, field, flat, expr } => {
            let tm = mode.unwrap_or(match (diag, e2o) {
                (false, false) => TriMode::Plain,
                (false, true) => TriMode::E2o,
                (true, false) => TriMode::Biv,
                (true, true) => TriMode::BivE2o,
            });
            let rows = triangle(expr, &parse_spec(spec)?, tm, *whole, *field)?;
            Ok((0, if *flat { format!("[{}]\n", rows.join(",")) } else { rows.join("\n") + "\n" }))
        }
        Cmd::Names => Ok((0, names().join("\n") + "\n")),
        Cmd::Check { suite } => {
            let results = golden::suite(suite)?;
            Ok(golden::report(&results))
        }
    }
}

/// `[c0,c1,…]` for the first `n` coefficients of `src`.
pub fn terms(src: &str, n: usize, whole: bool, mode: EvalMode) -> Result<String, CliError> {
    let e = parse(src)?;
    match (mode.field, mode.biv) {
        (Field::Rational, false) => terms_in::<Rational>(&e, n, whole, mode),
        (Field::Gaussian, false) => terms_in::<GaussianRational>(&e, n, whole, mode),
        (Field::Rational, true) => terms_in::<Poly<Rational>>(&e, n, whole, mode),
        (Field::Gaussian, true) => terms_in::<Poly<GaussianRational>>(&e, n, whole, mode),
    }
}

fn terms_in<K: Domain>(e: &Expr, n: usize, whole: bool, mode: EvalMode) -> Result<String, CliError> {
    let (s, trace) = eval::<K>(e, mode)?;
    let cs = force(&s, &trace, n)?;
    if !whole {
        return Ok(render_list(&cs));
    }
    let ws: Result<Vec<String>, _> = cs.iter().map(|c| c.whole()).collect();
    Ok(render_list(&ws.map_err(|source| CliError::Eval { sub: e.to_string(), source })?))
}

/// Row widths: `a..b` (inclusive) or `w1,w2,…`, optionally bracketed.
pub fn parse_spec(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::BadSpec(spec.to_string());
    let body = spec.trim().trim_start_matches('[').trim_end_matches(']');
    if let Some((a, b)) = body.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    body.split(',').map(|w| w.trim().parse().map_err(|_| bad())).collect()
}

/// The selected rows of a bivariate expression, each rendered as a list.
///
/// An outermost `unDiag(…)` or `unDiagE2o(…)` overrides `tm`.
pub fn triangle(src: &str, spec: &[usize], tm: TriMode, whole: bool, field: Field) -> Result<Vec<String>, CliError> {
    let mut e = parse(src)?;
    let mut tm = tm;
    if let Expr::Call(name, args) = &e {
        let explicit = match name.as_str() {
            "unDiag" => Some(TriMode::Plain),
            "unDiagE2o" => Some(TriMode::E2o),
            _ => None,
        };
        if let Some(m) = explicit {
            if args.len() != 1 {
                return Err(CliError::Arity { name: name.clone(), expected: 1, got: args.len() });
            }
            tm = m;
            e = args[0].clone();
        }
    }
    let mode = EvalMode { field, biv: true };
    match field {
        Field::Rational => triangle_in::<Rational>(&e, spec, tm, whole, mode),
        Field::Gaussian => triangle_in::<GaussianRational>(&e, spec, tm, whole, mode),
    }
}

fn triangle_in<C: Coefficient>(
    e: &Expr,
    spec: &[usize],
    tm: TriMode,
    whole: bool,
    mode: EvalMode,
) -> Result<Vec<String>, CliError> {
    let (s, trace) = eval::<Poly<C>>(e, mode)?;
    let rows: Box<dyn RowSource<C>> = match tm {
        TriMode::Plain => Box::new(un_diag(&s)),
        TriMode::E2o => Box::new(un_diag_e2o(&s)),
        TriMode::Biv => Box::new(s.clone()),
        TriMode::BivE2o => Box::new(s.map(|p| poly_e2o(&ue2o(p)))),
    };
    let depth = spec.iter().enumerate().map(|(i, w)| i + w + 1).max().unwrap_or(0);
    let rows = select(spec, rows.as_ref()).map_err(|err| attribute(err, &trace, |sub| sub.take(depth).err()))?;
    rows.iter()
        .map(|r| {
            if !whole {
                return Ok(render_list(r));
            }
            let ws: Result<Vec<_>, _> = r.iter().map(|c| c.to_integer()).collect();
            ws.map(|w| render_list(&w)).map_err(|c| CliError::Eval { sub: e.to_string(), source: c.into() })
        })
        .collect()
}

/// `name = definition` for the core, univariate and bivariate registries.
pub fn names() -> Vec<String> {
    let core = CoreName::ALL.iter().map(|c| c.definition());
    let uni = named::UNIVARIATE.iter().map(|e| e.1);
    let biv = BIVARIATE_NAMES.iter().filter_map(|n| bivariate::bivariate_definition(n));
    core.chain(uni).chain(biv).map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("seqalg").chain(args.iter().copied()))
    }

    #[test]
    fn terms_examples() {
        assert_eq!(cli(&["terms", "-n", "8", "catalan"]).stdout, "[1,1,2,5,14,42,132,429]\n");
        assert_eq!(cli(&["terms", "-n", "4", "lgnx"]).stdout, "[0,1,-1/2,1/3]\n");
        let o = cli(&["terms", "-n", "3", "--whole", "lgnx"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("not whole"), "{}", o.stderr);
    }

    #[test]
    fn triangle_prints_one_row_per_line() {
        let o = cli(&["triangle", "--spec", "1..3", "schroeder"]);
        assert_eq!(o.stdout, "[0]\n[1,0]\n[0,1,0]\n");
        let o = cli(&["triangle", "--e2o", "--spec", "1..4", "ebinom"]);
        assert_eq!(o.stdout, "[1]\n[1,1]\n[1,2,1]\n[1,3,3,1]\n");
        let o = cli(&["triangle", "--spec", "2..4", "--e2o", "powerSums"]);
        assert_eq!(o.stdout, "[0,1]\n[0,-1/2,1/2]\n[0,1/6,-1/2,1/3]\n");
    }

    #[test]
    fn explicit_transposition() {
        let a = cli(&["triangle", "--spec", "1..6", "--flat", "unDiag(schroeder)"]);
        let b = cli(&["triangle", "--spec", "1..6", "--flat", "--e2o", "unDiag(schroeder)"]);
        assert_eq!(a.stdout, "[[0],[1,0],[0,1,0],[0,1,2,0],[0,1,5,5,0],[0,1,9,21,14,0]]\n");
        assert_eq!(a, b);
        assert_eq!(cli(&["terms", "--biv", "unDiag(pascal)"]).code, 1);
    }

    #[test]
    fn specs() {
        assert_eq!(parse_spec("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_spec("[5,5,5]").unwrap(), vec![5, 5, 5]);
        assert!(parse_spec("4..1").is_err());
        assert!(parse_spec("a").is_err());
    }

    #[test]
    fn names_lists_definitions() {
        let ns = names();
        assert!(ns.iter().any(|l| l == "derangement = set o nonLoopCycle"));
        assert!(ns.iter().any(|l| l == "pascal = starx o (u+z)"));
        assert!(ns.iter().any(|l| l.starts_with("expx = ")));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(cli(&["terms", "1+*x"]).code, 2);
        assert_eq!(cli(&["terms", "1/0"]).code, 1);
        assert_eq!(cli(&["check", "nosuch"]).code, 1);
        assert_eq!(cli(&["names"]).code, 0);
    }
}
