//! Acceptance gate: one line per criterion, all comparisons exact.

use std::ops::RangeInclusive;

use boxsort_core::boxsort::fiber_count;
use boxsort_core::combinat::{box_count, factorial};
use boxsort_core::families::{family, FamilyId};
use boxsort_core::normalorder::{cd_power_on_f, extract_f};
use boxsort_core::tableaux::{enumerate_syt, syt_sum};
use boxsort_core::{Poly, VarId};
use boxsort_suite::{verify, Check, Report};
use num_bigint::BigInt;

type Verdict = Result<(), String>;

fn p(s: &str) -> Poly {
    s.parse().unwrap_or_else(|e| panic!("bad literal {s}: {e}"))
}

fn expect_eq(what: &str, got: &Poly, want: &Poly) -> Verdict {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn run(token: &str, range: RangeInclusive<usize>) -> Result<Report, String> {
    let r = verify(token, Some(range)).map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(r)
    } else {
        Err(r.to_text())
    }
}

fn value(r: &Report, token: &str, n: usize, label: &str) -> Result<Poly, String> {
    r.case(token, n)
        .and_then(|c| c.value(label))
        .cloned()
        .ok_or_else(|| format!("{token} n={n} has no check `{label}`"))
}

fn has_route(r: &Report, token: &str, n: usize, route: &str) -> bool {
    r.case(token, n).is_some_and(|c| {
        c.checks.iter().any(|ch| match ch {
            Check::Equal { routes, .. } => routes.iter().any(|(name, _)| name == route),
            Check::Holds { .. } => false,
        })
    })
}

fn at_one(q: &Poly) -> BigInt {
    q.terms().map(|(_, k)| k.clone()).sum()
}

fn table_one() -> Verdict {
    let table: [&[&str]; 4] = [
        &["c[0]"],
        &["c[0]*c[1]", "c[0]^2"],
        &["c[0]*c[1]^2 + c[0]^2*c[2]", "3*c[0]^2*c[1]", "c[0]^3"],
        &["c[0]*c[1]^3 + 4*c[0]^2*c[1]*c[2] + c[0]^3*c[3]", "7*c[0]^2*c[1]^2 + 4*c[0]^3*c[2]", "6*c[0]^3*c[1]", "c[0]^4"],
    ];
    for (i, coeffs) in table.iter().enumerate() {
        let n = i + 1;
        let mut whole = Poly::zero();
        for (j, s) in coeffs.iter().enumerate() {
            let k = j + 1;
            let want = p(s);
            expect_eq(&format!("F_{{{n},{k}}}"), &extract_f(n, k).map_err(|e| e.to_string())?, &want)?;
            whole += &(&want * &Poly::var(VarId::indexed("f", k as u32)));
        }
        expect_eq(&format!("(cD)^{n} f"), &cd_power_on_f(n).map_err(|e| e.to_string())?, &whole)?;
    }
    Ok(())
}

fn master_identity() -> Verdict {
    run("T5.1", 1..=7)?;
    for n in 1..=7 {
        let s = syt_sum(n, None, |t| Poly::constant(t.box_product(1)));
        expect_eq("sum of box products", &s, &Poly::constant(factorial(n as u64)))?;
    }
    Ok(())
}

fn fibers() -> Verdict {
    for n in 1..=6 {
        for t in enumerate_syt(n, None) {
            let k = BigInt::from(fiber_count(&t, 1));
            if k != t.box_product(1) {
                return Err(format!("fiber of {t}: {k} vs {}", t.box_product(1)));
            }
        }
    }
    let mut at3: Vec<u64> = enumerate_syt(3, None).iter().map(|t| fiber_count(t, 1)).collect();
    at3.sort_unstable();
    if at3 != [1, 1, 2, 2] {
        return Err(format!("n=3 fibers {at3:?}"));
    }
    let named = [("1,2,3", 1), ("1,2/3", 2), ("1,3/2", 2), ("1/2/3", 1)];
    for (s, k) in named {
        let t = s.parse().map_err(|e| format!("{e:?}"))?;
        if fiber_count(&t, 1) != k {
            return Err(format!("fiber of {s} is not {k}"));
        }
    }
    Ok(())
}

fn second_order() -> Verdict {
    let mut reports = Vec::new();
    for token in ["T6.7a", "T6.7b", "T6.7d"] {
        reports.push(run(token, 1..=6)?);
    }
    run("T6.7c", 1..=5)?;
    let c3 = p("x + 8*x^2 + 6*x^3");
    expect_eq("C_3 recurrence", &family(FamilyId::SecondOrder, 3).unwrap(), &c3)?;
    expect_eq("C_3 factorial jets", &value(&reports[1], "T6.7b", 3, "C_n(x)")?, &c3)?;
    expect_eq("C_3 delta", &value(&reports[2], "T6.7d", 3, "C_n(x)")?, &c3)?;
    expect_eq("C_3(x,y)", &value(&reports[0], "T6.7a", 3, "C_n(x,y)")?, &p("x*y^6 + 8*x^2*y^5 + 6*x^3*y^4"))?;
    for n in 1..=6 {
        if !has_route(&reports[0], "T6.7a", n, "Stirling des") {
            return Err(format!("Stirling oracle missing at n={n}"));
        }
    }
    Ok(())
}

fn ramanujan() -> Verdict {
    let r = run("T6.1", 1..=4)?;
    expect_eq("R_4", &value(&r, "T6.1", 3, "R_{n+1}(x)")?, &p("6 + 18*x + 25*x^2 + 15*x^3"))?;
    for n in 1..=4 {
        for route in ["SYT", "recurrence", "grammar at y=1", "rooted trees"] {
            if !has_route(&r, "T6.1", n, route) {
                return Err(format!("route {route} missing at n={n}"));
            }
        }
    }
    Ok(())
}

fn andre() -> Verdict {
    let r = run("T6.2", 1..=6)?;
    expect_eq("E_4", &value(&r, "T6.2", 3, "E_{n+1}(x,y)")?, &p("x*y^3 + 4*x^2*y"))?;
    let euler = [1, 1, 1, 2, 5, 16, 61];
    for (n, &e) in euler.iter().enumerate() {
        let got = at_one(&family(FamilyId::Andre, n).map_err(|e| e.to_string())?);
        if got != BigInt::from(e) || boxsort_core::oracle::down_up_count(n) != e as u64 {
            return Err(format!("E_{n}(1,1) = {got}, expected {e}"));
        }
    }
    Ok(())
}

fn peaks() -> Verdict {
    run("T6.3a", 1..=7)?;
    let r = run("T6.3b", 1..=7)?;
    expect_eq("W_4", &value(&r, "T6.3b", 3, "W_{n+1}(x)")?, &p("8 + 16*x"))?;
    for n in 1..=7 {
        if !has_route(&r, "T6.3b", n, "convolution of L") {
            return Err("convolution route missing".into());
        }
    }
    Ok(())
}

fn type_b() -> Verdict {
    run("T6.6", 1..=5)?;
    let r = run("T6.8b", 1..=5)?;
    expect_eq("B_3", &family(FamilyId::EulerianB, 3).unwrap(), &p("1 + 23*x + 23*x^2 + x^3"))?;
    expect_eq("3! N(B_3,x)", &value(&r, "T6.8b", 3, "n! N(B_n,x)")?, &p("6 + 54*x + 54*x^2 + 6*x^3"))
}

fn normal_ordered() -> Verdict {
    let a = run("T4.1", 1..=8)?;
    let b = run("T4.2", 1..=8)?;
    for n in 1..=4 {
        if !has_route(&a, "T4.1", n, "displayed") || !has_route(&b, "T4.2", n, "displayed") {
            return Err(format!("displayed expansion not compared at n={n}"));
        }
    }
    for n in 1..=8 {
        if !has_route(&b, "T4.2", n, "gamma recurrence") {
            return Err(format!("gamma recurrence missing at n={n}"));
        }
    }
    Ok(())
}

fn k_eulerian() -> Verdict {
    expect_eq("A_4^(2)", &family(FamilyId::KInvEulerian(2), 4).unwrap(), &p("1 + 36*x + 60*x^2 + 8*x^3"))?;
    run("T6.5", 1..=6)?;
    let r = run("E3.x", 1..=8)?;
    for n in 1..=6 {
        for k in 1..=3 {
            if r.case("E3.x", n).and_then(|c| c.value(&format!("A_n^({k})"))).is_none() {
                return Err(format!("k={k} missing at n={n}"));
            }
        }
    }
    for n in 1..=8 {
        if !has_route(&r, "E3.x", n, "Frobenius") {
            return Err(format!("Frobenius missing at n={n}"));
        }
    }
    Ok(())
}

fn legendre_stirling() -> Verdict {
    let r = run("T3.3", 1..=5)?;
    expect_eq("L_2", &family(FamilyId::LsDescent, 2).unwrap(), &p("4*x + 24*x^2 + 12*x^3"))?;
    let d = value(&r, "T3.3", 2, "(D2 D1)^n")?;
    expect_eq("grammar route at n=2", &d, &p("4*a*b^6 + 24*a^2*b^5 + 12*a^3*b^4"))?;
    value(&r, "T3.3", 2, "L_n/(1-x)^{3n+1} series").map(|_| ())
}

fn e_positivity() -> Verdict {
    run("C6.x", 1..=6).map(|_| ())
}

fn delta_reading() -> Verdict {
    for n in 1..=5 {
        let s = syt_sum(n, None, |t| Poly::constant(t.box_product(3)));
        expect_eq("sum of delta^(3) products", &s, &Poly::constant(box_count(n as u64, 3)))?;
    }
    let r = run("T6.7e", 1..=5)?;
    for n in 1..=5 {
        expect_eq("m=3 SYT formula", &value(&r, "T6.7e", n, "C_n(x;3)")?, &family(FamilyId::KOrder(3), n).unwrap())?;
    }
    Ok(())
}

fn check(name: &str, f: fn() -> Verdict) {
    match f() {
        Ok(()) => println!("pass  {name}"),
        Err(e) => {
            println!("FAIL  {name}");
            panic!("{name}: {e}");
        }
    }
}

macro_rules! criteria {
    ($($test:ident: $name:expr => $f:ident,)*) => {$(
        #[test]
        fn $test() {
            check($name, $f);
        }
    )*};
}

criteria! {
    criterion_01_cd_power_table: "1 table of (cD)^n f" => table_one,
    criterion_02_box_sorting_master_identity: "2 box sorting master identity" => master_identity,
    criterion_03_fiber_counts: "3 fiber counts" => fibers,
    criterion_04_second_order_four_ways: "4 second-order Eulerian four ways" => second_order,
    criterion_05_ramanujan: "5 Ramanujan" => ramanujan,
    criterion_06_andre: "6 Andre" => andre,
    criterion_07_peaks: "7 peaks" => peaks,
    criterion_08_type_b_and_narayana_b: "8 type B and Narayana B" => type_b,
    criterion_09_normal_ordered_grammars: "9 normal ordered grammars" => normal_ordered,
    criterion_10_k_eulerian: "10 1/k-Eulerian" => k_eulerian,
    criterion_11_legendre_stirling: "11 Legendre-Stirling" => legendre_stirling,
    criterion_12_e_positivity: "12 e-positivity" => e_positivity,
    criterion_13_delta_three_reading: "13 delta^(3) reading" => delta_reading,
}
