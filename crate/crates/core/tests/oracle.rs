use boxsort_core::combinat::{box_count, factorial};
use boxsort_core::families::{family, FamilyId};
use boxsort_core::oracle::{stat_poly, ObjectClass, OracleError};
use boxsort_core::{Poly, VarId};
use num_bigint::BigInt;

fn total(p: &Poly) -> BigInt {
    p.terms().map(|(_, k)| k.clone()).sum()
}

fn rename(p: &Poly, from: &str) -> Poly {
    p.map_monomials(|m| m.map_vars(|v| if v == VarId::plain(from) { VarId::plain("x") } else { v }))
}

#[test]
fn class_sizes() {
    for n in 1..=6usize {
        let nn = n as u64;
        assert_eq!(total(&stat_poly(&ObjectClass::Permutation, n, &["des"]).unwrap()), factorial(nn));
        assert_eq!(total(&stat_poly(&ObjectClass::SignedPermutation, n, &["desB"]).unwrap()), factorial(nn) << n);
        for k in 1..=3 {
            if n <= 5 {
                let s = stat_poly(&ObjectClass::StirlingPermutation(k), n, &["des"]).unwrap();
                assert_eq!(total(&s), box_count(nn, k as u64));
            }
        }
        // rooted labeled trees: n^{n-1}
        let t = stat_poly(&ObjectClass::RootedLabeledTree, n, &["improper"]).unwrap();
        assert_eq!(total(&t), BigInt::from(nn).pow(n as u32 - 1));
    }
}

#[test]
fn descents_and_ascents_are_equidistributed() {
    for n in 1..=7 {
        let d = stat_poly(&ObjectClass::Permutation, n, &["des"]).unwrap();
        let a = stat_poly(&ObjectClass::Permutation, n, &["asc"]).unwrap();
        assert_eq!(rename(&d, "des"), rename(&a, "asc"));
        let e = stat_poly(&ObjectClass::Permutation, n, &["exc"]).unwrap();
        assert_eq!(rename(&d, "des"), rename(&e, "exc"));
    }
}

#[test]
fn matches_recurrences() {
    let x: Poly = "x".parse().unwrap();
    for n in 1..=7 {
        let d = rename(&stat_poly(&ObjectClass::Permutation, n, &["des"]).unwrap(), "des");
        assert_eq!(&x * &d, family(FamilyId::EulerianA, n).unwrap());
        let l = rename(&stat_poly(&ObjectClass::Permutation, n, &["lpk"]).unwrap(), "lpk");
        assert_eq!(l, family(FamilyId::LeftPeak, n).unwrap());
    }
    for n in 1..=5 {
        let b = rename(&stat_poly(&ObjectClass::SignedPermutation, n, &["desB"]).unwrap(), "desB");
        assert_eq!(b, family(FamilyId::EulerianB, n).unwrap());
    }
}

#[test]
fn gamma_coefficients_count_peak_patterns() {
    // A_n(x) = Σ γ_{n,j} x^{j+1} (1+x)^{n-1-2j}, γ_{n,j} = #{val = j, dd = 0}
    let (x, y) = (VarId::plain("x"), VarId::plain("y"));
    for n in 1..=7usize {
        let biv = family(FamilyId::EulerianABiv, n).unwrap();
        let reduced = biv.mul_monomial(&boxsort_core::Monomial::from_factors([(x, -1), (y, -1)]));
        let gamma = boxsort_core::poly::gamma_expand(&reduced, x, y).unwrap();
        let o = stat_poly(&ObjectClass::Permutation, n, &["val", "dd"]).unwrap();
        for (j, g) in gamma {
            let count: BigInt = o
                .terms()
                .filter(|(m, _)| m.exponent(VarId::plain("dd")) == 0 && m.exponent(VarId::plain("val")) == j as i32)
                .map(|(_, k)| k.clone())
                .sum();
            assert_eq!(g, Poly::constant(count), "n={n} j={j}");
        }
    }
}

#[test]
fn errors() {
    assert!(matches!(
        stat_poly(&ObjectClass::Permutation, 3, &["nope"]),
        Err(OracleError::UnknownStatistic { .. })
    ));
    assert!(matches!(stat_poly(&ObjectClass::Permutation, 12, &["des"]), Err(OracleError::TooLarge { .. })));
}
