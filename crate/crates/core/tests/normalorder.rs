use boxsort_core::families::{number_rows, NumberTable};
use boxsort_core::normalorder::{c, cd_power_on_f, extract_a, extract_f, f, project, JetContext, Projection};
use boxsort_core::partition::Partition;
use boxsort_core::Poly;
use num_bigint::BigInt;

#[test]
fn projections_are_the_classical_triangles() {
    let n_max = 7;
    for (kind, table) in [
        (Projection::Stirling1, NumberTable::Stirling1),
        (Projection::Stirling2, NumberTable::Stirling2),
        (Projection::Eulerian, NumberTable::EulerianNum),
    ] {
        let rows = number_rows(table, n_max).unwrap();
        for n in 1..=n_max {
            for k in 1..=n {
                assert_eq!(project(kind, n, k).unwrap(), rows[n][k], "{kind:?} n={n} k={k}");
            }
        }
    }
    assert!(project(Projection::Eulerian, 3, 0).is_err());
    assert!(project(Projection::Eulerian, 3, 4).is_err());
}

#[test]
fn coefficients_follow_the_recurrence() {
    let g = JetContext::for_power(8);
    let cc = Poly::var(c(0));
    for n in 2..=7 {
        for k in 1..=n {
            let prev = if k >= 2 { extract_f(n - 1, k - 1).unwrap() } else { Poly::zero() };
            let same = if k < n { extract_f(n - 1, k).unwrap() } else { Poly::zero() };
            let want = &(&cc * &prev) + &(&cc * &g.grammar().derive(&same).unwrap());
            assert_eq!(extract_f(n, k).unwrap(), want, "n={n} k={k}");
        }
    }
}

#[test]
fn coefficient_sums_are_factorials() {
    // every coefficient of (cD)^n f counts permutations by cycle structure
    for n in 1..=7u64 {
        let total: BigInt = cd_power_on_f(n as usize).unwrap().terms().map(|(_, k)| k.clone()).sum();
        assert_eq!(total, boxsort_core::combinat::factorial(n));
    }
}

#[test]
fn every_term_has_one_f_and_n_jets() {
    for n in 1..=6usize {
        for (m, _) in cd_power_on_f(n).unwrap().terms() {
            let fs: i32 = (1..=n as u32).map(|i| m.exponent(f(i))).sum();
            let cs: i32 = (0..=n as u32).map(|i| m.exponent(c(i))).sum();
            let order: i32 = (1..=n as u32).map(|i| i as i32 * (m.exponent(c(i)) + m.exponent(f(i)))).sum();
            assert_eq!((fs, cs, order), (1, n as i32, n as i32), "{m:?}");
        }
    }
}

#[test]
fn single_coefficients() {
    // a(4, (2)) is the coefficient of c^3 c_2 f_2
    assert_eq!(extract_a(4, &Partition::new(vec![2])).unwrap(), BigInt::from(4));
    assert_eq!(extract_a(4, &Partition::new(vec![1, 1])).unwrap(), BigInt::from(7));
    assert_eq!(extract_a(4, &Partition::empty()).unwrap(), BigInt::from(1));
}
