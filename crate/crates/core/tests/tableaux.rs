use boxsort_core::combinat::{box_count, factorial};
use boxsort_core::normalorder::{c, ckd_power_on_c};
use boxsort_core::tableaux::{enumerate_syt, syt_expansion, syt_sum, Tableau};
use boxsort_core::Poly;
use num_bigint::BigInt;

const INVOLUTIONS: [usize; 9] = [1, 1, 2, 4, 10, 26, 76, 232, 764];

#[test]
fn counts_are_involution_numbers() {
    for (n, &k) in INVOLUTIONS.iter().enumerate() {
        assert_eq!(enumerate_syt(n, None).len(), k, "n={n}");
    }
}

#[test]
fn two_column_counts_are_central_binomials() {
    // SYT with at most two columns are counted by C(n, floor(n/2))
    let want = [1, 1, 2, 3, 6, 10, 20, 35];
    for (n, &k) in want.iter().enumerate() {
        assert_eq!(enumerate_syt(n, Some(2)).len(), k, "n={n}");
    }
}

#[test]
fn box_products_sum_to_box_counts() {
    for m in 1..=3u32 {
        for n in 0..=7usize {
            let s = syt_sum(n, None, |t| Poly::constant(t.box_product(m)));
            assert_eq!(s, Poly::constant(box_count(n as u64, m as u64)), "m={m} n={n}");
        }
    }
    assert_eq!(box_count(5, 1), factorial(5));
}

#[test]
fn indices_are_positive() {
    for m in 1..=3 {
        for t in enumerate_syt(6, None) {
            for i in 1..=6 {
                assert!(t.box_index(i, m).unwrap() >= 1, "{t} i={i} m={m}");
            }
        }
    }
}

#[test]
fn expansion_with_symbolic_jets_is_the_jet_derivation() {
    for m in 1..=3u32 {
        for n in 1..=5usize {
            let jets: Vec<Poly> = (0..=n).map(|i| Poly::var(c(i as u32))).collect();
            let e = syt_expansion(n, m, None, &Poly::var(c(0)), &jets);
            assert_eq!(e, ckd_power_on_c(m as usize, n).unwrap(), "m={m} n={n}");
        }
    }
}

#[test]
fn parse_display_and_validation() {
    let t: Tableau = "1,3/2".parse().unwrap();
    assert_eq!(t.to_string(), "1,3/2");
    assert_eq!(t.descent_set(), vec![1]);
    assert_eq!(t.box_product(1), BigInt::from(2));
    assert!("2,1".parse::<Tableau>().is_err());
    assert!("1,2/4".parse::<Tableau>().is_err());
    assert!("1/2,3".parse::<Tableau>().is_err());
}
