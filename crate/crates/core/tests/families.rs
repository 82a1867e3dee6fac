use boxsort_core::combinat::{box_count, factorial};
use boxsort_core::families::{family, family_seq, FamilyId};
use boxsort_core::Poly;
use num_bigint::BigInt;

fn at_one(p: &Poly) -> BigInt {
    p.terms().map(|(_, k)| k.clone()).sum()
}

fn coeffs(p: &Poly) -> Vec<BigInt> {
    p.univariate_coeffs(boxsort_core::VarId::plain("x")).unwrap()
}

fn palindromic(p: &Poly) -> bool {
    let mut c = coeffs(p);
    while c.first().is_some_and(|v| *v == BigInt::from(0)) {
        c.remove(0);
    }
    c.iter().eq(c.iter().rev())
}

#[test]
fn values_at_one() {
    for n in 1..=9usize {
        let nn = n as u64;
        assert_eq!(at_one(&family(FamilyId::EulerianA, n).unwrap()), factorial(nn));
        assert_eq!(at_one(&family(FamilyId::EulerianB, n).unwrap()), factorial(nn) << n);
        assert_eq!(at_one(&family(FamilyId::SecondOrder, n).unwrap()), box_count(nn, 2));
        for k in 1..=3 {
            assert_eq!(at_one(&family(FamilyId::KOrder(k), n).unwrap()), box_count(nn, k as u64));
            let kinv = family(FamilyId::KInvEulerian(k), n).unwrap();
            let want: BigInt = (0..nn).map(|j| BigInt::from(1 + j * k as u64)).product();
            assert_eq!(at_one(&kinv), want);
        }
        assert_eq!(at_one(&family(FamilyId::LeftPeak, n).unwrap()), factorial(nn));
        assert_eq!(at_one(&family(FamilyId::InteriorPeak, n).unwrap()), factorial(nn));
        assert_eq!(at_one(&family(FamilyId::Ramanujan, n).unwrap()), BigInt::from(n as u64).pow(n as u32 - 1));
    }
}

#[test]
fn symmetric_families() {
    for n in 1..=9usize {
        for id in [FamilyId::EulerianA, FamilyId::EulerianB, FamilyId::NarayanaA, FamilyId::NarayanaB] {
            assert!(palindromic(&family(id, n).unwrap()), "{id} n={n}");
        }
    }
}

#[test]
fn trivariate_is_symmetric() {
    let v = |s: &str| boxsort_core::VarId::plain(s);
    for n in 1..=7usize {
        let c = family(FamilyId::SecondOrderTri, n).unwrap();
        assert_eq!(c.swap_vars(v("x"), v("y")), c);
        assert_eq!(c.swap_vars(v("y"), v("z")), c);
    }
}

#[test]
fn second_order_recurrence() {
    // C_{n+1} = (2n+1) x C_n + x(1-x) C_n'
    let x: Poly = "x".parse().unwrap();
    let c = family_seq(FamilyId::SecondOrder, 8).unwrap();
    for n in 0..8 {
        let d = c[n].partial_derivative(boxsort_core::VarId::plain("x"));
        let want = &(&x * &c[n]).scale(&BigInt::from(2 * n + 1)) + &(&(&x - &x.pow(2)) * &d);
        assert_eq!(c[n + 1], want);
    }
}

#[test]
fn bivariate_specializes() {
    for n in 1..=8usize {
        let biv = family(FamilyId::EulerianABiv, n).unwrap();
        let uni = biv.substitute_one(boxsort_core::VarId::plain("y"), &Poly::one()).unwrap();
        assert_eq!(uni, family(FamilyId::EulerianA, n).unwrap());
    }
}

#[test]
fn bounds_and_names() {
    assert!(family(FamilyId::SecondOrderTri, 13).is_err());
    assert!(FamilyId::parse("kOrder", None).is_err());
    assert!(FamilyId::parse("eulerianA", Some(2)).is_err());
    assert_eq!(FamilyId::parse("kOrder", Some(2)).unwrap(), FamilyId::KOrder(2));
    assert_eq!(family(FamilyId::EulerianA, 0).unwrap(), Poly::one());
    assert!(family(FamilyId::Ramanujan, 0).is_err());
}
