use std::process::Command;

use proptest::prelude::*;
use seqalg_cli::parse::{parse, parse_definition, BinOp, Expr};

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..100).prop_map(Expr::num),
        prop::sample::select(vec!["x", "u", "z", "expx", "catalan", "i"]).prop_map(Expr::ident),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let ops = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Compose]);
    leaf().prop_recursive(5, 48, 3, move |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), 0u32..5).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (ops.clone(), inner.clone(), inner.clone()).prop_map(|(op, a, b)| Expr::bin(op, a, b)),
            (prop::sample::select(vec!["deriv", "sqroot", "e2o"]), inner.clone())
                .prop_map(|(f, a)| Expr::Call(f.to_string(), vec![a])),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Call("shuffle".into(), vec![a, b])),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_is_the_identity(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e);
    }

    #[test]
    fn whitespace_is_insignificant(e in expr()) {
        let printed = e.to_string();
        let padded: String = printed
            .chars()
            .map(|c| if "+-*/^(),".contains(c) { format!(" {c} ") } else { c.to_string() })
            .collect();
        prop_assert_eq!(parse(&padded).unwrap(), e);
    }
}

#[test]
fn registry_corpus_round_trips() {
    for line in seqalg_cli::commands::names() {
        let (_, rhs) = parse_definition(&line).unwrap();
        assert_eq!(parse(&rhs.to_string()).unwrap(), rhs, "{line}");
    }
}

fn seqalg(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_seqalg")).args(args).output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

#[test]
fn binary_terms_and_triangle() {
    assert_eq!(seqalg(&["terms", "-n", "8", "catalan"]).1, "[1,1,2,5,14,42,132,429]\n");
    let (code, out, _) = seqalg(&["triangle", "--spec", "1..6", "schroeder"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[0]\n[1,0]\n[0,1,0]\n[0,1,2,0]\n[0,1,5,5,0]\n[0,1,9,21,14,0]\n");
}

#[test]
fn binary_names_and_check() {
    let (code, out, _) = seqalg(&["names"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "derangement = set o nonLoopCycle"));
    let (code, out, _) = seqalg(&["check", "golden-paper"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with(" 0 failed\n"));
    let (code, _, err) = seqalg(&["check", "nosuch"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown suite"));
}

#[test]
fn binary_modes() {
    let (code, _, err) = seqalg(&["terms", "u"]);
    assert_eq!(code, 1);
    assert!(err.contains("--biv"));
    let (code, out, _) = seqalg(&["terms", "--biv", "-n", "3", "u+z"]);
    assert_eq!((code, out.as_str()), (0, "[[0],[1,1],[0]]\n"));
    let (code, out, _) = seqalg(&["terms", "--field", "gaussian", "-n", "3", "expx o (i*x)"]);
    assert_eq!((code, out.as_str()), (0, "[1+0i,0+1i,-1/2+0i]\n"));
}
