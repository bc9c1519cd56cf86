//! Named univariate counting series.
//!
//! Each entry is generic in the coefficient type so that the same name can
//! be used inside bivariate expressions.

use crate::cache::cached;
use crate::calculus::{core, e2o, expx, log_seq, starx, CoreName};
use crate::coeff::{Coefficient, Rational};
use crate::seq::Seq;

/// `(name, defining equation, defined recursively)`.
pub const UNIVARIATE: &[(&str, &str, bool)] = &[
    ("set", "set = expx", false),
    ("list", "list = starx", false),
    ("cycle", "cycle = lg(list)", false),
    ("perm", "perm = set o cycle", false),
    ("emptySet", "emptySet = 1", false),
    ("singletonSet", "singletonSet = x", false),
    ("singletonList", "singletonList = x", false),
    ("nonEmptyList", "nonEmptyList = list - 1", false),
    ("pluralList", "pluralList = list - singletonList - 1", false),
    ("ordPair", "ordPair = x^2", false),
    ("fibonacci", "fibonacci = list o (singletonList + ordPair)", false),
    ("oneCycle", "oneCycle = x", false),
    ("oneOrTwoCycle", "oneOrTwoCycle = oneCycle + x^2/2", false),
    ("involution", "involution = set o oneOrTwoCycle", false),
    ("nonLoopCycle", "nonLoopCycle = cycle - singletonSet", false),
    ("derangement", "derangement = set o nonLoopCycle", false),
    ("permutation", "permutation = derangement*set", false),
    ("nonEmptySet", "nonEmptySet = set - emptySet", false),
    ("pluralSet", "pluralSet = nonEmptySet - singletonSet", false),
    ("setPartition", "setPartition = set o nonEmptySet", false),
    ("oddNumberOfParts", "oddNumberOfParts = sinhx o nonEmptySet", false),
    ("evenSizedParts", "evenSizedParts = set o (coshx - 1)", false),
    ("catalanTree", "catalanTree = x*(list o catalanTree)", true),
    ("cayleyTree", "cayleyTree = x*(set o cayleyTree)", true),
    ("connectedAcyclicGraph", "connectedAcyclicGraph = cayleyTree - cayleyTree^2/2", false),
    ("acyclicGraph", "acyclicGraph = set o connectedAcyclicGraph", false),
    ("motzkinTree", "motzkinTree = x*(1 + motzkinTree + motzkinTree^2)", true),
    ("hipparchusSchroeder", "hipparchusSchroeder = (1 + x - sqroot(1 - 6*x + x^2))/4", false),
    ("largeSchroeder", "largeSchroeder = 2*hipparchusSchroeder/x - 1", false),
    ("connectedMapping", "connectedMapping = cycle o cayleyTree", false),
    ("mapping", "mapping = set o connectedMapping", false),
    ("fixedPointFree", "fixedPointFree = set o nonLoopCycle o cayleyTree", false),
    ("idempotent", "idempotent = set o (oneCycle*set)", false),
    ("partialMapping", "partialMapping = mapping*(set o cayleyTree)", false),
    ("surjection", "surjection = list o nonEmptySet", false),
    ("zigzag", "zigzag = 2*(tanx + secx)", false),
    ("bernoulli", "bernoulli = x/(expx - 1)", false),
    ("catalan", "catalan = 1 + x*catalan^2", true),
    ("fib", "fib = 1/(1 - x - x^2)", false),
    ("facs", "facs = e2o(starx)", false),
    ("tangentNumbers", "tangentNumbers = e2o(tanx)", false),
    ("secantNumbers", "secantNumbers = 1 + x*shuffle(secantNumbers, tangentNumbers)", true),
];

/// Names of the univariate registry, in display order.
pub fn univariate_names() -> impl Iterator<Item = &'static str> {
    UNIVARIATE.iter().map(|e| e.0)
}

pub fn univariate_definition(name: &str) -> Option<&'static str> {
    UNIVARIATE.iter().find(|e| e.0 == name).map(|e| e.1)
}

/// A named univariate series over `C`.
pub fn uni<C: Coefficient>(name: &str) -> Option<Seq<C>> {
    let key = UNIVARIATE.iter().find(|e| e.0 == name)?.0;
    Some(cached(key, || build(key)))
}

fn get<C: Coefficient>(name: &str) -> Seq<C> {
    uni(name).expect("registered series")
}

fn build<C: Coefficient>(name: &str) -> Seq<C> {
    let one = Seq::<C>::one();
    let x = Seq::<C>::x();
    let x2 = &x * &x;
    let set = expx::<C>;
    match name {
        "set" => set(),
        "list" => starx(),
        "cycle" => log_seq(&starx()),
        "perm" => set().compose(&get("cycle")),
        "emptySet" => one,
        "singletonSet" | "singletonList" | "oneCycle" => x,
        "nonEmptyList" => &get("list") - &one,
        "pluralList" => &(&get("list") - &get("singletonList")) - &one,
        "ordPair" => x2,
        "fibonacci" => get::<C>("list").compose(&(&get("singletonList") + &get("ordPair"))),
        "oneOrTwoCycle" => &get("oneCycle") + &(&x2 / &Seq::int(2)),
        "involution" => set().compose(&get("oneOrTwoCycle")),
        "nonLoopCycle" => &get("cycle") - &get("singletonSet"),
        "derangement" => set().compose(&get("nonLoopCycle")),
        "permutation" => &get("derangement") * &set(),
        "nonEmptySet" => &set() - &get("emptySet"),
        "pluralSet" => &get("nonEmptySet") - &get("singletonSet"),
        "setPartition" => set().compose(&get("nonEmptySet")),
        "oddNumberOfParts" => core::<C>(CoreName::Sinhx).compose(&get("nonEmptySet")),
        "evenSizedParts" => set().compose(&(&core(CoreName::Coshx) - &one)),
        "catalanTree" => {
            let list = get::<C>("list");
            Seq::fix(|t| &x * &list.compose(t))
        }
        "cayleyTree" => {
            let set = set();
            Seq::fix(|t| &x * &set.compose(t))
        }
        "connectedAcyclicGraph" => {
            let t = get::<C>("cayleyTree");
            &t - &(&(&t * &t) / &Seq::int(2))
        }
        "acyclicGraph" => set().compose(&get("connectedAcyclicGraph")),
        "motzkinTree" => Seq::fix(|m| &x * &(&(&one + m) + &(m * m))),
        "hipparchusSchroeder" => {
            let r = Seq::from_ints(&[1, -6, 1]).sqroot();
            &(&Seq::from_ints(&[1, 1]) - &r) / &Seq::int(4)
        }
        "largeSchroeder" => &(&get("hipparchusSchroeder").scale(&C::from_int(2)) / &x) - &one,
        "connectedMapping" => get::<C>("cycle").compose(&get("cayleyTree")),
        "mapping" => set().compose(&get("connectedMapping")),
        "fixedPointFree" => set().compose(&get::<C>("nonLoopCycle").compose(&get("cayleyTree"))),
        "idempotent" => set().compose(&(&get("oneCycle") * &set())),
        "partialMapping" => &get("mapping") * &set().compose(&get("cayleyTree")),
        "surjection" => get::<C>("list").compose(&get("nonEmptySet")),
        "zigzag" => (&core(CoreName::Tanx) + &core(CoreName::Secx)).scale(&C::from_int(2)),
        "bernoulli" => &x / &(&set() - &one),
        "catalan" => Seq::fix(|b| &one + &(&x * &(b * b))),
        "fib" => Seq::from_ints(&[1, -1, -1]).recip(),
        "facs" => e2o(&starx()),
        "tangentNumbers" => e2o(&core(CoreName::Tanx)),
        "secantNumbers" => {
            let t = get::<C>("tangentNumbers");
            Seq::fix(|s| Seq::cons(C::one(), &crate::discrete::shuffle(s, &t)))
        }
        _ => unreachable!("unknown series {name}"),
    }
}

/// Bernoulli numbers `B₀, B₁, …` with `B₁ = −1/2`.
pub fn bernoulli_numbers() -> Seq<Rational> {
    e2o(&get("bernoulli"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(name: &str, n: usize) -> Vec<i64> {
        e2o(&uni::<Rational>(name).unwrap()).take_whole(n).unwrap().iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn connected_acyclic_graphs() {
        assert_eq!(ints("connectedAcyclicGraph", 8), vec![0, 1, 1, 3, 16, 125, 1296, 16807]);
    }

    #[test]
    fn classic_counts() {
        assert_eq!(ints("derangement", 7), vec![1, 0, 1, 2, 9, 44, 265]);
        assert_eq!(ints("involution", 7), vec![1, 1, 2, 4, 10, 26, 76]);
        assert_eq!(ints("setPartition", 7), vec![1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(ints("surjection", 6), vec![1, 1, 3, 13, 75, 541]);
        assert_eq!(ints("cayleyTree", 6), vec![0, 1, 2, 9, 64, 625]);
        assert_eq!(ints("mapping", 5), vec![1, 1, 4, 27, 256]);
        assert_eq!(ints("idempotent", 6), vec![1, 1, 3, 10, 41, 196]);
        assert_eq!(ints("perm", 6), vec![1, 1, 2, 6, 24, 120]);
        assert_eq!(ints("permutation", 6), vec![1, 1, 2, 6, 24, 120]);
    }

    #[test]
    fn ordinary_counts() {
        let o = |name: &str, n: usize| -> Vec<i64> {
            uni::<Rational>(name).unwrap().take_whole(n).unwrap().iter().map(|b| i64::try_from(b).unwrap()).collect()
        };
        assert_eq!(o("motzkinTree", 8), vec![0, 1, 1, 2, 4, 9, 21, 51]);
        assert_eq!(o("catalanTree", 7), vec![0, 1, 1, 2, 5, 14, 42]);
        assert_eq!(o("largeSchroeder", 6), vec![1, 2, 6, 22, 90, 394]);
        assert_eq!(o("fibonacci", 7), vec![1, 1, 2, 3, 5, 8, 13]);
        assert_eq!(o("secantNumbers", 10), vec![1, 0, 1, 0, 5, 0, 61, 0, 1385, 0]);
    }

    #[test]
    fn bernoulli() {
        let b: Vec<String> = bernoulli_numbers().take(8).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(b, ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0"]);
    }
}
