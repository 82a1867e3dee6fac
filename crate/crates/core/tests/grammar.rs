use boxsort_core::grammar::Grammar;
use boxsort_core::{Monomial, Poly, VarId};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0i32..3, 0i32..3, -3i64..=3), 0..4).prop_map(|t| {
        Poly::from_terms(t.into_iter().map(|(a, b, c)| {
            (Monomial::from_factors([(VarId::plain("x"), a), (VarId::plain("y"), b)]), BigInt::from(c))
        }))
    })
}

fn grammars() -> Vec<Grammar<BigInt>> {
    ["x -> x*y; y -> x^2", "x -> y; y -> y", "x -> 1; y -> 1", "x -> x^2*y^3; y -> x^3*y^2", "x -> 2*x*y; y -> -1"]
        .iter()
        .map(|s| Grammar::parse(s).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn derivation_is_leibniz(a in word(), b in word(), gi in 0usize..5) {
        let g = &grammars()[gi];
        let lhs = g.derive(&(&a * &b)).unwrap();
        let rhs = &(&g.derive(&a).unwrap() * &b) + &(&a * &g.derive(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_order_matches_iteration(w in word(), t in word(), gi in 0usize..5, n in 0usize..5) {
        let g = &grammars()[gi];
        let mut direct = t.clone();
        for _ in 0..n {
            direct = &w * &g.derive(&direct).unwrap();
        }
        let op = g.op_power(&w, n).unwrap();
        prop_assert_eq!(op.apply(g, &t).unwrap(), direct);
    }
}

#[test]
fn sequences_agree() {
    let g = Grammar::parse("a -> a*b; b -> b").unwrap();
    let a: Poly = "a".parse().unwrap();
    let seq = g.derive_seq(&a, 5).unwrap();
    for (n, p) in seq.iter().enumerate() {
        assert_eq!(p, &g.derive_n(&a, n).unwrap());
    }
}

#[test]
fn indexed_family() {
    let g = Grammar::parse("x[i] -> x[0]*x[i+1]").unwrap().with_max_index(8);
    let x0: Poly = "x[0]".parse().unwrap();
    let d3 = g.derive_n(&x0, 3).unwrap();
    assert_eq!(d3, "x[0]*x[1]^3 + 4*x[0]^2*x[1]*x[2] + x[0]^3*x[3]".parse().unwrap());
}

#[test]
fn rejects_uncovered_variables() {
    assert!(Grammar::<BigInt>::parse("x -> y").is_err());
    assert!(Grammar::<BigInt>::parse("x -> x; x -> 1").is_err());
}
