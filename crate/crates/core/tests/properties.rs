use proptest::prelude::*;
use seqalg::apps::{lagrange_fixpoint, lagrange_term};
use seqalg::bivariate::{chebyshev, take_biv};
use seqalg::calculus::{cosx, deriv, e2o, expx, integ, lgnx, o2e, sinx, starx};
use seqalg::discrete::{
    delta, from_fac_poly, h2i, hadamard, i2h, infiltration, rh2i, shuffle, shuffle_inv, sigma, to_fac_poly,
};
use seqalg::linear::{
    annihilates, char_poly, klarner_solve, kleene_star, matrix_exp, star_equation_check, Lode, Matrix,
};
use seqalg::{Coefficient, GaussianRational, Poly, Rational, Seq};

fn rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn coeffs(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rat(), 1..=max)
}

fn poly_seq(max: usize) -> impl Strategy<Value = Seq<Rational>> {
    coeffs(max).prop_map(Seq::new)
}

fn unit_head(max: usize) -> impl Strategy<Value = Seq<Rational>> {
    coeffs(max).prop_map(|mut v| {
        v[0] = Rational::from_int(1);
        Seq::new(v)
    })
}

fn conversible(max: usize) -> impl Strategy<Value = Seq<Rational>> {
    (nonzero_rat(), prop::collection::vec(rat(), 0..max)).prop_map(|(c, rest)| {
        let mut v = vec![Rational::from_int(0), c];
        v.extend(rest);
        Seq::new(v)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(prop::collection::vec(rat(), n), n).prop_map(|rows| Matrix::new(rows).unwrap())
}

const N: usize = 12;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::from_int(1));
        }
        prop_assert_eq!(&a + &(-&a), Rational::from_int(0));
    }

    #[test]
    fn gaussian_embedding(a in rat(), b in rat()) {
        let g = |r: &Rational| GaussianRational::real(r.clone());
        prop_assert_eq!(g(&a).times(&g(&b)), g(&(&a * &b)));
        prop_assert_eq!(g(&a).plus(&g(&b)), g(&(&a + &b)));
    }

    #[test]
    fn integers_are_whole(n in -100_000i64..100_000) {
        let r = Rational::from_int(n);
        prop_assert_eq!(r.to_integer().unwrap(), n.into());
    }

    #[test]
    fn ring_laws(f in poly_seq(6), g in poly_seq(6), h in poly_seq(6)) {
        prop_assert!((&(&f * &g) * &h).prefix_eq(&(&f * &(&g * &h)), N).unwrap());
        prop_assert!((&f * &g).prefix_eq(&(&g * &f), N).unwrap());
        prop_assert!((&f * &(&g + &h)).prefix_eq(&(&(&f * &g) + &(&f * &h)), N).unwrap());
    }

    #[test]
    fn division_inverts_multiplication(f in poly_seq(6), g in unit_head(5)) {
        let q = &f / &g;
        prop_assert!((&q * &g).prefix_eq(&f, N).unwrap());
    }

    #[test]
    fn square_roots(f in unit_head(6)) {
        let r = f.sqroot();
        prop_assert!((&r * &r).prefix_eq(&f, N).unwrap());
    }

    #[test]
    fn converse_laws(f in conversible(4)) {
        let g = f.converse();
        let x = Seq::<Rational>::x();
        prop_assert!(f.compose(&g).prefix_eq(&x, 9).unwrap());
        prop_assert!(g.compose(&f).prefix_eq(&x, 9).unwrap());
    }

    #[test]
    fn memo_is_order_independent(order in Just((0..14usize).collect::<Vec<_>>()).prop_shuffle()) {
        let fresh = || Seq::<Rational>::fix(|b| &Seq::one() + &(&Seq::x() * &(b * b)));
        let a = fresh();
        let vals: Vec<Rational> = order.iter().map(|&i| a.nth(i).unwrap()).collect();
        let b = fresh().take(14).unwrap();
        for (k, &i) in order.iter().enumerate() {
            prop_assert_eq!(&vals[k], &b[i]);
            prop_assert_eq!(a.nth(i).unwrap(), b[i].clone());
        }
    }

    #[test]
    fn fundamental_theorem_of_calculus(f in poly_seq(8)) {
        prop_assert!(deriv(&integ(&f)).prefix_eq(&f, N).unwrap());
        let back = &Seq::constant(f.nth(0).unwrap()) + &integ(&deriv(&f));
        prop_assert!(back.prefix_eq(&f, N).unwrap());
    }

    #[test]
    fn chain_rule(f in poly_seq(6), g in conversible(4)) {
        let lhs = deriv(&f.compose(&g));
        let rhs = &deriv(&f).compose(&g) * &deriv(&g);
        prop_assert!(lhs.prefix_eq(&rhs, N).unwrap());
    }

    #[test]
    fn finite_differences(s in poly_seq(10)) {
        let s = &s + &(&Seq::x() * &starx());
        let back = &Seq::repeat(s.nth(0).unwrap()) + &sigma(&delta(&s));
        prop_assert!(back.prefix_eq(&s, 16).unwrap());
        prop_assert!(delta(&sigma(&s)).prefix_eq(&s, 16).unwrap());
    }

    #[test]
    fn newton_transform(s in poly_seq(10)) {
        let s = &s + &(&Seq::x() * &starx());
        prop_assert!(h2i(&s).prefix_eq(&rh2i(&s), N).unwrap());
        let mut d = s.clone();
        let newton = h2i(&s);
        for n in 0..8 {
            prop_assert_eq!(d.nth(0).unwrap(), newton.nth(n).unwrap());
            d = delta(&d);
        }
    }

    #[test]
    fn shuffle_is_binomial_convolution(f in poly_seq(8), g in poly_seq(8)) {
        let pointwise = Seq::try_from_fn({
            let (f, g) = (f.clone(), g.clone());
            move |n| {
                let mut acc = Rational::from_int(0);
                for k in 0..=n {
                    let c = Rational::from_bigint(seqalg::binomial(n, k));
                    acc = &acc + &(&c * &(&f.nth(k)? * &g.nth(n - k)?));
                }
                Ok(acc)
            }
        });
        prop_assert!(shuffle(&f, &g).prefix_eq(&pointwise, N).unwrap());
        prop_assert!(shuffle(&f, &g).prefix_eq(&e2o(&(&o2e(&f) * &o2e(&g))), N).unwrap());
    }

    #[test]
    fn shuffle_inverse(s in unit_head(6)) {
        let one = Seq::<Rational>::one();
        prop_assert!(shuffle(&s, &shuffle_inv(&s)).prefix_eq(&one, 10).unwrap());
    }

    #[test]
    fn infiltration_via_newton(s in poly_seq(6), t in poly_seq(6)) {
        let s = &s + &starx();
        let t = &t + &starx();
        let via = h2i(&hadamard(&i2h(&s), &i2h(&t)));
        prop_assert!(infiltration(&s, &t).prefix_eq(&via, 10).unwrap());
    }

    #[test]
    fn item_q_identity(f in poly_seq(8)) {
        let rhs = shuffle(&Seq::x(), &f.tail()).tail();
        prop_assert!(deriv(&f).prefix_eq(&rhs, N).unwrap());
    }

    #[test]
    fn factorial_basis_roundtrip(p in coeffs(6)) {
        let back = from_fac_poly(&to_fac_poly(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn klarner_satisfies_recurrence(lower in prop::collection::vec(rat(), 1..=4), inits_seed in coeffs(4)) {
        let mut b = lower.clone();
        b.push(Rational::from_int(1));
        let k = lower.len();
        let mut inits = inits_seed;
        inits.resize(k, Rational::from_int(0));
        let s = klarner_solve(&Lode::new(Poly::new(b.clone()), inits.clone())).unwrap();
        prop_assert_eq!(s.take(k).unwrap(), inits);
        prop_assert!(annihilates(&Poly::new(b), &s, 13).unwrap());
    }

    #[test]
    fn star_equation(a in matrix(3)) {
        prop_assert!(star_equation_check(&a, 8).unwrap());
    }

    #[test]
    fn char_poly_shape(a in matrix(3)) {
        let b = char_poly(&a);
        prop_assert_eq!(b.degree(), Some(3));
        prop_assert_eq!(b.coeffs().last().unwrap(), &Rational::from_int(1));
        prop_assert_eq!(char_poly(&a.transpose()), b);
    }

    #[test]
    fn exponential_of_matrix(a in matrix(2)) {
        let e = matrix_exp(&a).unwrap();
        prop_assert!(e.prefix_eq(&kleene_star(&a).map(o2e), 8).unwrap());
    }

    #[test]
    fn lagrange_inversion(rest in prop::collection::vec(rat(), 0..=3)) {
        let mut v = vec![Rational::from_int(1)];
        v.extend(rest);
        let r = Seq::new(v);
        let s = lagrange_fixpoint(&r);
        for k in 1..=3usize {
            let sk = s.pow(k as u32);
            for n in k..=8 {
                prop_assert_eq!(lagrange_term(&r, n, k).unwrap(), sk.nth(n).unwrap());
            }
        }
    }
}

#[test]
fn star_times_one_minus_x() {
    let p = &starx::<Rational>() * &Seq::from_ints(&[1, -1]);
    assert!(p.prefix_eq(&Seq::one(), 16).unwrap());
}

#[test]
fn pythagoras_and_log() {
    let one = Seq::<Rational>::one();
    let s = sinx::<Rational>();
    let c = cosx::<Rational>();
    assert!((&(&s * &s) + &(&c * &c)).prefix_eq(&one, 16).unwrap());
    let e = expx::<Rational>().compose(&lgnx());
    assert!(e.prefix_eq(&Seq::from_ints(&[1, 1]), 16).unwrap());
}

#[test]
fn chebyshev_by_klarner() {
    // Coefficients are polynomials in u: b = 1 − 2uz + z², inits 1, u.
    let pu = |v: &[i64]| Poly::<Rational>::from_ints(v);
    let b = Poly::new(vec![pu(&[1]), pu(&[0, -2]), pu(&[1])]);
    let s = klarner_solve(&Lode::new(b, vec![pu(&[1]), pu(&[0, 1])])).unwrap();
    let cheb = chebyshev::<Rational>();
    let spec: Vec<usize> = (1..=6).collect();
    let rows = take_biv(&spec, &cheb).unwrap();
    for (n, row) in rows.iter().enumerate() {
        let want = s.nth(n).unwrap();
        for (k, c) in row.iter().enumerate() {
            assert_eq!(c, &want.get(k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn cramer_two_by_two() {
    // S = (I − Ax)⁻¹ v solved by Cramer's rule for A = [[1,1],[1,0]], v = (1, 0).
    let a = Matrix::new(vec![
        vec![Rational::from_int(1), Rational::from_int(1)],
        vec![Rational::from_int(1), Rational::from_int(0)],
    ])
    .unwrap();
    let star = kleene_star(&a);
    let det = Seq::<Rational>::from_ints(&[1, -1, -1]);
    let s0 = &Seq::<Rational>::one() / &det;
    let s1 = &Seq::<Rational>::x() / &det;
    assert!(star.get(0, 0).prefix_eq(&s0, 12).unwrap());
    assert!(star.get(1, 0).prefix_eq(&s1, 12).unwrap());
}
