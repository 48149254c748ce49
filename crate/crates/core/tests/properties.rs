use num_traits::{One, Zero};
use proptest::prelude::*;
use slq2::coisotropic::Side;
use slq2::expr::parse_element;
use slq2::hopf::{star, Character};
use slq2::pbw::{word, FreeWord, Generator, Mono};
use slq2::scalar::{q_number, Coeff, Polynomial, RationalFunction};
use slq2::{Element, Params, Quotient, RatFunc, Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Polynomial::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(6), poly(6).prop_filter("nonzero", |p| !p.is_zero()), -3i32..=3)
        .prop_map(|(n, d, k)| RationalFunction::new(n, d).unwrap().mul_t_pow(k))
}

/// Elements of `Q(t)(sqrt(5/4))`, the field of the `rplus` preset.
fn scalar() -> impl Strategy<Value = Scalar> {
    (ratfunc(), prop::option::weighted(0.4, ratfunc()))
        .prop_map(|(re, rad)| Scalar::new(re, rad.unwrap_or_else(RatFunc::zero), Rational::new(5.into(), 4.into())))
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i32..=3, prop::bool::ANY).prop_map(|(c, k, rad)| {
        let x = Scalar::from_i64(if c == 0 { 1 } else { c }).mul_t_pow(k);
        if rad {
            x * &Scalar::sqrt_disc(Rational::new(5.into(), 4.into()))
        } else {
            x
        }
    })
}

fn mono(max_deg: u32) -> impl Strategy<Value = Mono> {
    (0..=max_deg, 0..=max_deg, 0..=max_deg, 0..=max_deg, prop::bool::ANY)
        .prop_filter("degree", move |(a, b, c, d, _)| a + b + c + d <= max_deg)
        .prop_map(|(a, b, c, d, keep_a)| if keep_a { Mono::new(a, b, c, 0) } else { Mono::new(0, b, c, d.max(a)) })
}

fn element(max_deg: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec((mono(max_deg), small_scalar()), 1..=3).prop_map(Element::from_terms)
}

fn letters(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
        prop_assert_eq!((x.clone() + &y) * &z, x.clone() * &z + &(y.clone() * &z));
        prop_assert_eq!(x.clone() + &y, y.clone() + &x);
        prop_assert_eq!(x.conj().conj(), x.clone());
        if !x.is_zero() {
            prop_assert!((x.inv().unwrap() * &x).is_one());
        }
    }

    #[test]
    fn canonical_forms_are_unique(x in scalar(), y in scalar()) {
        // (x + y)^2 by two routes
        let lhs = (x.clone() + &y) * &(x.clone() + &y);
        let two = Scalar::from_i64(2);
        let rhs = x.clone() * &x + &(two * &x * &y) + &(y.clone() * &y);
        prop_assert_eq!(lhs.to_string(), rhs.to_string());
        prop_assert!((lhs - rhs).is_zero());
    }
}

#[test]
fn q_numbers_telescope() {
    let qq = Scalar::q_pow(1) - Scalar::q_pow(-1);
    for n in -12i64..=12 {
        let lhs = q_number::<Scalar>(n) * &qq;
        assert_eq!(lhs, Scalar::q_pow(n as i32) - Scalar::q_pow(-n as i32), "n = {n}");
    }
}

#[test]
fn determinant_relation_is_conserved() {
    let da = Element::d().multiply(&Element::a());
    let bc = Element::b().multiply(&Element::c()).scale(&Scalar::q_pow(-1));
    assert_eq!(&da - &bc, Element::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn star_is_an_antimultiplicative_involution(x in element(3), y in element(3)) {
        prop_assert_eq!(star(&star(&x)), x.clone());
        prop_assert_eq!(star(&x.multiply(&y)), star(&y).multiply(&star(&x)));
    }

    #[test]
    fn multiplication_is_associative(x in element(3), y in element(3), z in element(3)) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn products_stay_in_the_pbw_basis(x in element(3), y in element(3)) {
        prop_assert!(x.multiply(&y).terms().all(|(m, _)| m.a == 0 || m.d == 0));
    }

    #[test]
    fn rewriting_agrees_with_multiplication(w in letters(6)) {
        let rewritten = FreeWord::new(Scalar::one(), w.clone()).normalize();
        prop_assert_eq!(rewritten, word::<Scalar>(&w));
    }

    #[test]
    fn parse_print_round_trip(x in element(3)) {
        let p = Params::preset("rplus").unwrap();
        prop_assert_eq!(parse_element(&x.to_string(), Some(&p)).unwrap(), x);
    }

    #[test]
    fn adjoint_is_multiplicative(x in element(2), y in element(2), k in 1i64..=4) {
        let g = Character::new(Scalar::from_i64(k)).unwrap();
        prop_assert_eq!(g.adjoint(&x.multiply(&y)), g.adjoint(&x).multiply(&g.adjoint(&y)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn generators_annihilate_in_both_quotients(m in mono(3), preset in prop::sample::select(vec!["rplus", "s1", "special"])) {
        let k = Quotient::new(Params::preset(preset).unwrap());
        let y = Element::mono(m);
        for g in [k.k1(), k.k2()] {
            prop_assert!(k.reduce(Side::Right, &g.multiply(&y)).is_zero());
            prop_assert!(k.reduce(Side::Left, &y.multiply(g)).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn quotient_maps_are_well_defined(x in element(2), m1 in element(2), m2 in element(2)) {
        let k = Quotient::new(Params::preset("rplus").unwrap());
        for side in [Side::Right, Side::Left] {
            let y = match side {
                Side::Right => &k.k1().multiply(&m1) + &k.k2().multiply(&m2),
                Side::Left => &m1.multiply(k.k1()) + &m2.multiply(k.k2()),
            };
            let base = k.reduce(side, &x);
            let moved = k.reduce(side, &(&x + &y));
            prop_assert_eq!(&base, &moved);
            prop_assert_eq!(k.coproduct(&slq2::Class { side, rep: &x + &y }), k.coproduct(&slq2::Class { side, rep: x.clone() }));
            prop_assert_eq!(k.tau(&slq2::Class { side, rep: &x + &y }), k.tau(&slq2::Class { side, rep: x.clone() }));
        }
    }
}
