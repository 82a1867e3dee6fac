use boxsort_core::boxsort::{enumerate_owp, fiber_count, fiber_counts, weight_sum, Owp};
use boxsort_core::combinat::box_count;
use boxsort_core::normalorder::ckd_power_on_c;
use boxsort_core::tableaux::enumerate_syt;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn weight_sum_is_the_jet_derivation() {
    for m in 1..=3u32 {
        for n in 1..=5usize {
            assert_eq!(weight_sum(n, m), ckd_power_on_c(m as usize, n).unwrap(), "m={m} n={n}");
        }
    }
}

#[test]
fn owp_counts() {
    for m in 1..=3u32 {
        for n in 0..=5usize {
            assert_eq!(BigInt::from(enumerate_owp(n, m).len()), box_count(n as u64, m as u64));
        }
    }
}

#[test]
fn fibers_are_box_products() {
    for m in 1..=2u32 {
        for n in 1..=5usize {
            let fibers = fiber_counts(n, m);
            for t in enumerate_syt(n, None) {
                let k = fibers.get(&t).copied().unwrap_or(0);
                assert_eq!(BigInt::from(k), t.box_product(m), "{t} m={m}");
            }
        }
    }
    let t = "1,3/2".parse().unwrap();
    assert_eq!(fiber_count(&t, 1), 2);
}

#[test]
fn phi_breaks_ties_stably() {
    // two rows of equal length keep their block order before columns are sorted
    let p = Owp::new(1, vec![vec![1, 4], vec![2, 3], vec![], vec![], vec![]]).unwrap();
    assert_eq!(p.phi().to_string(), "1,3/2,4");
    let q = Owp::parse("1,2|-|3|-", 1).unwrap();
    assert_eq!(q.phi().to_string(), "1,2/3");
}

#[test]
fn rejects_bad_blocks() {
    assert!(Owp::new(1, vec![vec![2], vec![1], vec![]]).is_err());
    assert!(Owp::new(1, vec![vec![1], vec![2]]).is_err());
    assert!(Owp::new(1, vec![vec![1], vec![], vec![2]]).is_err());
    assert!(Owp::new(0, vec![vec![]]).is_err());
}

proptest! {
    #[test]
    fn phi_lands_in_syt(n in 1usize..6, m in 1u32..3, pick in 0usize..10_000) {
        let all = enumerate_owp(n, m);
        let p = &all[pick % all.len()];
        let t = p.phi();
        prop_assert_eq!(t.size(), n);
        prop_assert!(t.to_string().parse::<boxsort_core::tableaux::Tableau>().is_ok());
        let back = Owp::parse(&p.to_string(), m).unwrap();
        prop_assert_eq!(&back, p);
    }
}
