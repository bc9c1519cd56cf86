//! Check suites run by `seqalg check`.

use std::time::{Duration, Instant};

use seqalg::apps;
use seqalg::bivariate::{self, BIVARIATE_NAMES};
use seqalg::calculus::{self, CoreName};
use seqalg::discrete::{from_fac_poly, gregory_newton, shuffle_inv};
use seqalg::linear::{klarner_solve, Lode};
use seqalg::seq::render_list;
use seqalg::{named, Poly, Rational, Seq};

use crate::commands::run;
use crate::eval::{eval, CliError, EvalMode};
use crate::parse::{parse, parse_definition};

pub const SUITES: [&str; 2] = ["golden-paper", "registry"];

pub type Check = Result<(), String>;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Check,
    pub elapsed: Duration,
}

pub fn suite(name: &str) -> Result<Vec<CheckResult>, CliError> {
    match name {
        "golden-paper" => Ok(printed()),
        "registry" => Ok(registry()),
        _ => Err(CliError::UnknownSuite(name.to_string())),
    }
}

/// One line per check, then a count; status 1 if anything failed.
pub fn report(results: &[CheckResult]) -> (i32, String) {
    let mut out = String::new();
    let mut failed = 0;
    for CheckResult { name, outcome, .. } in results {
        match outcome {
            Ok(()) => out.push_str(&format!("PASS {name}\n")),
            Err(why) => {
                failed += 1;
                out.push_str(&format!("FAIL {name}: {why}\n"));
            }
        }
    }
    out.push_str(&format!("{} passed, {failed} failed\n", results.len() - failed));
    (i32::from(failed > 0), out)
}

enum Expect {
    Exact(&'static str),
    /// Every printed entry is zero.
    Zeros,
}

/// Command-line transcripts of printed interactions.
const TRANSCRIPTS: &[(&str, &[&str], Expect)] = &[
    ("schroeder triangle", &["triangle", "--flat", "--spec", "1..6", "schroeder"], Expect::Exact(SCHROEDER_ROWS)),
    (
        "schroeder closed form",
        &["terms", "-n", "11", "--whole", "(1+x-sqroot(1-6*x+x^2))/4"],
        Expect::Exact("[0,1,1,3,11,45,197,903,4279,20793,103049]"),
    ),
    ("catalan", &["terms", "-n", "8", "catalan"], Expect::Exact("[1,1,2,5,14,42,132,429]")),
    ("starx is e2o expx", &["terms", "-n", "6", "--whole", "starx - e2o(expx)"], Expect::Exact("[0,0,0,0,0,0]")),
    ("gudermannian", &["terms", "-n", "6", "--whole", "expx - ((secx + tanx) o gdx)"], Expect::Exact("[0,0,0,0,0,0]")),
    (
        "arcsine derivative",
        &["terms", "-n", "6", "--whole", "deriv(converse(sinx)) - (1/(sqroot(1-x^2)))"],
        Expect::Exact("[0,0,0,0,0,0]"),
    ),
    ("pascal diagonals", &["terms", "--biv", "-n", "6", "pascal"], Expect::Exact(PASCAL_ROWS)),
    ("unDiag schroeder", &["triangle", "--flat", "--spec", "1..6", "unDiag(schroeder)"], Expect::Exact(SCHROEDER_ROWS)),
    ("ebinom", &["triangle", "--flat", "--whole", "--spec", "1..6", "unDiagE2o(ebinom)"], Expect::Exact(PASCAL_ROWS)),
    (
        "power sums",
        &["triangle", "--flat", "--spec", "2..4", "unDiagE2o(powerSums)"],
        Expect::Exact("[[0,1],[0,-1/2,1/2],[0,1/6,-1/2,1/3]]"),
    ),
    ("parts equation", &["triangle", "--diag", "--spec", "1..6", "dz(parts) - (u*parts + u*du(parts))"], Expect::Zeros),
    ("perm is set o cycle", &["terms", "-n", "6", "--whole", "perm - (set o cycle)"], Expect::Exact("[0,0,0,0,0,0]")),
    (
        "connected acyclic graphs",
        &["terms", "-n", "8", "--whole", "e2o(connectedAcyclicGraph)"],
        Expect::Exact("[0,1,1,3,16,125,1296,16807]"),
    ),
    (
        "legendre",
        &["triangle", "--flat", "--spec", "1..4", "unDiag(legendre)"],
        Expect::Exact("[[1],[0,1],[-1/2,0,3/2],[0,-3/2,0,5/2]]"),
    ),
    (
        "hermite",
        &["triangle", "--flat", "--spec", "1..4", "unDiagE2o(hermite)"],
        Expect::Exact("[[1],[0,2],[-2,0,4],[0,-12,0,8]]"),
    ),
    ("shuffle inverse", &["terms", "-n", "6", "--whole", "shInv(1-x)"], Expect::Exact("[1,1,2,6,24,120]")),
    (
        "sigma delta",
        &["terms", "-n", "10", "--whole", "starx + sigma(delta(fib))"],
        Expect::Exact("[1,1,2,3,5,8,13,21,34,55]"),
    ),
    (
        "newton roundtrip",
        &["terms", "-n", "10", "--whole", "i2h(h2i(fib))"],
        Expect::Exact("[1,1,2,3,5,8,13,21,34,55]"),
    ),
    ("taylor of sine", &["triangle", "--diag", "--spec", "1..8", "sinx o (u+z) - taylor(sinx)"], Expect::Zeros),
    (
        "logan",
        &["triangle", "--flat", "--whole", "--e2o", "--spec", "2..5", "logan"],
        Expect::Exact("[[0,1],[1,0,1],[0,2,0,2],[2,0,8,0,6]]"),
    ),
    (
        "zigzags",
        &["triangle", "--flat", "--whole", "--mode", "biv-e2o", "--spec", "1..7", "zigzags"],
        Expect::Exact(ENTRINGER_ROWS),
    ),
    ("xcth halves", &["terms", "-n", "10", "xcothx - (xcth(1/2) o (2*x))"], Expect::Zeros),
    ("xcth even", &["terms", "-n", "10", "(xcth(1/2) o (-x)) - xcth(1/2)"], Expect::Zeros),
    ("xcth at i", &["terms", "--field", "gaussian", "-n", "10", "xcotx - xcth(i)"], Expect::Zeros),
    (
        "xcth at i made real",
        &["terms", "--field", "gaussian", "-n", "10", "--whole", "xcotx - xcth(i)"],
        Expect::Exact("[0,0,0,0,0,0,0,0,0,0]"),
    ),
    (
        "valleys",
        &["triangle", "--flat", "--whole", "--e2o", "--spec", "1..6", "valleys"],
        Expect::Exact("[[1],[1,0],[2,0,0],[4,2,0,0],[8,16,0,0,0],[16,88,16,0,0,0]]"),
    ),
    ("euler identity", &["terms", "--field", "gaussian", "-n", "10", "cosx + i*sinx - (expx o (i*x))"], Expect::Zeros),
    ("shuffle square", &["terms", "-n", "6", "--whole", "shuffle(starx, starx)"], Expect::Exact("[1,2,4,8,16,32]")),
    ("secant numbers", &["terms", "-n", "10", "--whole", "secantNumbers"], Expect::Exact("[1,0,1,0,5,0,61,0,1385,0]")),
    ("lgn", &["terms", "-n", "4", "lgnx"], Expect::Exact("[0,1,-1/2,1/3]")),
];

const SCHROEDER_ROWS: &str = "[[0],[1,0],[0,1,0],[0,1,2,0],[0,1,5,5,0],[0,1,9,21,14,0]]";
const PASCAL_ROWS: &str = "[[1],[1,1],[1,2,1],[1,3,3,1],[1,4,6,4,1],[1,5,10,10,5,1]]";
const ENTRINGER_ROWS: &str = "[[1],[1,0],[0,1,1],[2,2,1,0],[0,2,4,5,5],[16,16,14,10,5,0],[0,16,32,46,56,61,61]]";

fn all_zero(out: &str) -> bool {
    let entries: Vec<&str> = out.split(['[', ']', ',', '\n']).filter(|s| !s.is_empty()).collect();
    !entries.is_empty() && entries.iter().all(|e| matches!(*e, "0" | "0+0i"))
}

fn transcript(args: &[&str], expect: &Expect) -> Check {
    let o = run(std::iter::once("seqalg").chain(args.iter().copied()));
    if o.code != 0 {
        return Err(format!("exit {}: {}", o.code, o.stderr.trim()));
    }
    let got = o.stdout.trim_end();
    let ok = match expect {
        Expect::Exact(want) => got == *want,
        Expect::Zeros => all_zero(got),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("got {got}"))
    }
}

fn same(got: String, want: &str) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, want {want}"))
    }
}

fn show<T: std::fmt::Display>(v: seqalg::Result<Vec<T>>) -> String {
    v.map(|v| render_list(&v)).unwrap_or_else(|e| e.to_string())
}

fn rows(v: seqalg::Result<Vec<Vec<Rational>>>) -> String {
    v.map(|rs| render_list(&rs.iter().map(|r| render_list(r)).collect::<Vec<_>>())).unwrap_or_else(|e| e.to_string())
}

fn holds(b: seqalg::Result<bool>) -> Check {
    match b {
        Ok(true) => Ok(()),
        Ok(false) => Err("identity fails".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn scanl_factorials(n: usize) -> Vec<Rational> {
    let mut acc = Rational::from_int(1);
    let mut out = vec![acc.clone()];
    for k in 1..n as i64 {
        acc = &acc * &Rational::from_int(k);
        out.push(acc.clone());
    }
    out
}

type NamedCheck = (&'static str, Box<dyn Fn() -> Check>);

fn library_checks() -> Vec<NamedCheck> {
    const FACS: &str = "[1,1,2,6,24,120]";
    const TANS: &str = "[0,1,0,2,0,16,0,272,0,7936]";
    vec![
        (
            "fib by Klarner",
            Box::new(|| {
                let one = Rational::from_int(1);
                let fib = Lode::new(Poly::from_ints(&[-1, -1, 1]), vec![one.clone(), one]);
                same(show(klarner_solve(&fib).and_then(|s| s.take_whole(10))), "[1,1,2,3,5,8,13,21,34,55]")
            }),
        ),
        ("factorials by scanl", Box::new(|| same(render_list(&scanl_factorials(6)), FACS))),
        ("factorials by ODE", Box::new(|| same(show(apps::fac_ode().take_whole(6)), FACS))),
        ("factorials by continued fraction", Box::new(|| same(show(apps::cf_factorials(4).take_whole(6)), FACS))),
        (
            "factorials by shuffle inverse",
            Box::new(|| same(show(shuffle_inv(&Seq::<Rational>::from_ints(&[1, -1])).take_whole(6)), FACS)),
        ),
        ("tangent numbers", Box::new(|| same(show(apps::e2o_tan().take_whole(10)), TANS))),
        ("tangent continued fraction", Box::new(|| same(show(apps::cf_tangent(6).take_whole(10)), TANS))),
        (
            "secant numbers",
            Box::new(|| {
                let s = named::uni::<Rational>("secantNumbers").expect("registered");
                same(show(s.take_whole(10)), "[1,0,1,0,5,0,61,0,1385,0]")
            }),
        ),
        (
            "bernoulli numbers",
            Box::new(|| same(show(named::bernoulli_numbers().take(8)), "[1,-1/2,1/6,0,-1/30,0,1/42,0]")),
        ),
        (
            "cycle counts",
            Box::new(|| {
                let c = named::uni::<Rational>("cycle").expect("registered");
                same(show(calculus::e2o(&c).take_whole(6)), "[0,1,1,2,6,24]")
            }),
        ),
        ("entringer", Box::new(|| same(rows(apps::entringer(7)), ENTRINGER_ROWS))),
        ("entringer from zigzags", Box::new(|| holds(apps::zigzags_check(7)))),
        ("logan both ways", Box::new(|| same(rows(apps::logan(4)), "[[0,1],[1,0,1],[0,2,0,2],[2,0,8,0,6]]"))),
        ("moessner", Box::new(|| same(show(apps::moessner(4, 5)), "[1,16,81,256,625]"))),
        (
            "moessner triangles",
            Box::new(|| {
                let ts = apps::moessner_triangles(4, &[5, 5, 5])
                    .map(|ts| render_list(&ts.into_iter().map(|t| rows(Ok(t))).collect::<Vec<_>>()))
                    .unwrap_or_else(|e| e.to_string());
                same(
                    ts,
                    "[[[1],[1,1],[1,2,1],[1,3,3,1],[1,4,6,4,1]],\
                     [[1],[1,5],[1,6,11],[1,7,17,15],[1,8,24,32,16]],\
                     [[1],[1,9],[1,10,33],[1,11,43,65],[1,12,54,108,81]]]",
                )
            }),
        ),
        (
            "moessner h",
            Box::new(|| {
                same(rows(apps::moessner_h(4, &[5, 5, 5, 5])), "[[1],[1,4,6,4,1],[1,8,24,32,16],[1,12,54,108,81]]")
            }),
        ),
        (
            "power sum polynomials",
            Box::new(|| same(rows(apps::power_sum_polys(3)), "[[0,1],[0,-1/2,1/2],[0,1/6,-1/2,1/3]]")),
        ),
        ("squares in the factorial basis", Box::new(|| same(show(squares_fac_poly()), "[0,1/6,1/2,1/3]"))),
        ("parts differential equation", Box::new(|| holds(bivariate::parts_pde_check(6)))),
        ("euler identity", Box::new(|| holds(apps::euler_identity_check(10)))),
        ("de moivre", Box::new(|| holds((1..=4).try_fold(true, |acc, n| Ok(acc && apps::de_moivre_check(n, 10)?))))),
        ("xcot through xcth(i)", Box::new(|| holds(apps::xcot_bridge_check(10)))),
        ("zeta(2) by euler-maclaurin", Box::new(|| near(apps::euler_maclaurin_zeta2(), 1.64493407, 1e-6))),
        ("zeta(2) from bernoulli", Box::new(|| near(apps::zeta_even(1), std::f64::consts::PI.powi(2) / 6.0, 1e-12))),
    ]
}

fn near(v: seqalg::Result<f64>, want: f64, tol: f64) -> Check {
    match v {
        Ok(v) if (v - want).abs() < tol => Ok(()),
        Ok(v) => Err(format!("got {v}, want {want} within {tol}")),
        Err(e) => Err(e.to_string()),
    }
}

/// `Σ_{k≤n} k²` interpolated from four values, in the monomial basis.
fn squares_fac_poly() -> seqalg::Result<Vec<Rational>> {
    let vals: Vec<Rational> = [0, 1, 5, 14].iter().map(|&k| Rational::from_int(k)).collect();
    from_fac_poly(&gregory_newton(&vals)?)
}

fn printed() -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = TRANSCRIPTS
        .iter()
        .map(|(name, args, expect)| timed(format!("cli {name}"), || transcript(args, expect)))
        .collect();
    out.extend(library_checks().into_iter().map(|(name, f)| timed(name.to_string(), f)));
    out
}

fn timed(name: String, f: impl FnOnce() -> Check) -> CheckResult {
    let start = Instant::now();
    let outcome = f();
    CheckResult { name, outcome, elapsed: start.elapsed() }
}

/// Every registry definition parses, prints back to itself, and, unless it
/// refers to itself, evaluates to the registered series.
fn registry() -> Vec<CheckResult> {
    let core = CoreName::ALL.iter().map(|c| (c.definition(), false));
    let uni = named::UNIVARIATE.iter().map(|e| (e.1, false));
    let biv = BIVARIATE_NAMES.iter().filter_map(|n| bivariate::bivariate_definition(n)).map(|d| (d, true));
    core.chain(uni).chain(biv).map(|(def, is_biv)| timed(def.to_string(), || check_definition(def, is_biv))).collect()
}

fn check_definition(def: &str, is_biv: bool) -> Check {
    let (name, rhs) = parse_definition(def).map_err(|e| e.to_string())?;
    let printed = rhs.to_string();
    if parse(&printed).map_err(|e| e.to_string())? != rhs {
        return Err(format!("printed as {printed}, which parses differently"));
    }
    if rhs.mentions(&name) {
        return Ok(());
    }
    let mode = EvalMode { biv: is_biv, ..EvalMode::default() };
    let agree = if is_biv {
        let (s, _) = eval::<Poly<Rational>>(&rhs, mode).map_err(|e| e.to_string())?;
        let (r, _) = eval::<Poly<Rational>>(&parse(&name).expect("a name"), mode).map_err(|e| e.to_string())?;
        s.prefix_eq(&r, 8)
    } else {
        let (s, _) = eval::<Rational>(&rhs, mode).map_err(|e| e.to_string())?;
        let (r, _) = eval::<Rational>(&parse(&name).expect("a name"), mode).map_err(|e| e.to_string())?;
        s.prefix_eq(&r, 10)
    };
    holds(agree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_golden_check_passes() {
        for r in suite("golden-paper").unwrap() {
            assert!(r.outcome.is_ok(), "{}: {:?}", r.name, r.outcome);
        }
    }

    #[test]
    fn registry_round_trips() {
        for r in suite("registry").unwrap() {
            assert!(r.outcome.is_ok(), "{}: {:?}", r.name, r.outcome);
        }
    }

    #[test]
    fn zero_detection() {
        assert!(all_zero("[0,0+0i]"));
        assert!(all_zero("[[0],[0,0]]\n[0]"));
        assert!(!all_zero("[0,1/2]"));
        assert!(!all_zero("[]"));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(suite("nosuch"), Err(CliError::UnknownSuite(_))));
    }
}
