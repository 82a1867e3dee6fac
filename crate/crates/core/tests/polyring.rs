use std::collections::HashMap;

use boxsort_core::poly::{e_collect, e_expand, gamma_collect, gamma_expand};
use boxsort_core::{Monomial, Poly, VarId};
use num_bigint::BigInt;
use proptest::prelude::*;

fn vars() -> [VarId; 4] {
    [VarId::plain("x"), VarId::plain("y"), VarId::plain("z"), VarId::indexed("c", 1)]
}

fn poly_with(lo: i32, hi: i32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(lo..=hi, 4), -6i64..=6), 0..6).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(es, c)| {
            (Monomial::from_factors(vars().into_iter().zip(es)), BigInt::from(c))
        }))
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    poly_with(0, 3)
}

fn laurent() -> impl Strategy<Value = Poly> {
    poly_with(-2, 2)
}

proptest! {
    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn text_round_trips(a in laurent()) {
        let back: Poly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), img in poly()) {
        let x = VarId::plain("x");
        let s = |p: &Poly| p.substitute_one(x, &img).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn simultaneous_substitution_swaps(a in poly()) {
        let (x, y) = (VarId::plain("x"), VarId::plain("y"));
        let mut b = HashMap::new();
        b.insert(x, Poly::var(y));
        b.insert(y, Poly::var(x));
        prop_assert_eq!(a.substitute(&b).unwrap(), a.swap_vars(x, y));
    }

    #[test]
    fn derivative_obeys_leibniz(a in laurent(), b in laurent()) {
        let x = VarId::plain("x");
        let lhs = (&a * &b).partial_derivative(x);
        let rhs = &(&a.partial_derivative(x) * &b) + &(&a * &b.partial_derivative(x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_quotient_times_denominator(a in poly(), m in 0u32..4) {
        let x = VarId::plain("x");
        const ORDER: usize = 5;
        let q = a.series_quotient(x, m, ORDER).unwrap();
        let one_minus = &Poly::one() - &Poly::var(x);
        let back = &q * &one_minus.pow(m);
        let trunc = |p: &Poly| Poly::from_terms(
            p.terms().filter(|(mm, _)| mm.exponent(x) <= ORDER as i32).map(|(mm, c)| (mm.clone(), c.clone())),
        );
        prop_assert_eq!(trunc(&back), trunc(&a));
    }

    #[test]
    fn gamma_reconstructs(gs in prop::collection::vec(-4i64..=4, 1..4), d in 4u32..7) {
        let (x, y) = (VarId::plain("x"), VarId::plain("y"));
        let input: Vec<(u32, Poly)> = gs.iter().enumerate().map(|(i, g)| (i as u32, Poly::from_int(*g))).collect();
        let p = gamma_collect(&input, x, y, d);
        prop_assume!(!p.is_zero());
        let back = gamma_expand(&p, x, y).unwrap();
        prop_assert_eq!(gamma_collect(&back, x, y, d), p);
    }

    #[test]
    fn e_basis_reconstructs(cs in prop::collection::vec(-4i64..=4, 1..6)) {
        let (x, y, z) = (VarId::plain("x"), VarId::plain("y"), VarId::plain("z"));
        // all of degree i + 2j + 3k = 5
        let exps = [(5, 0, 0), (3, 1, 0), (1, 2, 0), (2, 0, 1), (0, 1, 1)];
        let input: Vec<_> = cs.iter().zip(exps).map(|(c, e)| (e, BigInt::from(*c))).collect();
        let p = e_collect(&input, x, y, z);
        prop_assume!(!p.is_zero());
        let back = e_expand(&p, x, y, z).unwrap();
        prop_assert_eq!(e_collect(&back, x, y, z), p);
    }
}

#[test]
fn plain_and_indexed_names_differ() {
    let a: Poly = "c + c[0]".parse().unwrap();
    assert_eq!(a.len(), 2);
}

#[test]
fn gamma_of_eulerian() {
    let (x, y) = (VarId::plain("x"), VarId::plain("y"));
    let a: Poly = "x^3 + 11*x^2*y + 11*x*y^2 + y^3".parse().unwrap();
    let g = gamma_expand(&a, x, y).unwrap();
    assert_eq!(g, vec![(0, Poly::one()), (1, Poly::from_int(8))]);
}

#[test]
fn asymmetric_input_has_no_expansion() {
    let (x, y, z) = (VarId::plain("x"), VarId::plain("y"), VarId::plain("z"));
    let p: Poly = "x + 2*y".parse().unwrap();
    assert!(gamma_expand(&p, x, y).is_err());
    assert!(e_expand(&p, x, y, z).is_err());
}
