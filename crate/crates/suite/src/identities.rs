//! One function per catalog entry. Each returns the checks for a single `n`;
//! every `Check::Equal` lists independently computed routes.

use std::collections::HashMap;

use boxsort_core::boxsort::weight_sum;
use boxsort_core::combinat::{binomial, box_count, factorial};
use boxsort_core::families::{family, family_seq, homogenize, number_rows, FamilyId, NumberTable};
use boxsort_core::grammar::Grammar;
use boxsort_core::normalorder::{c, ckd_power_on_c, extract_f, f, project, JetContext, Projection};
use boxsort_core::oracle::{down_up_count, stat_poly, ObjectClass};
use boxsort_core::tableaux::{for_each_syt, syt_expansion, syt_sum};
use boxsort_core::{Monomial, Poly, VarId};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::check::*;

fn g(text: &str) -> Result<Grammar<BigInt>, ComputeError> {
    Ok(Grammar::parse(text)?)
}

fn fam(id: FamilyId, n: usize) -> Result<Poly, ComputeError> {
    Ok(family(id, n)?)
}

fn seq(id: FamilyId, n: usize) -> Result<Vec<Poly>, ComputeError> {
    Ok(family_seq(id, n)?)
}

fn oracle(cls: ObjectClass, n: usize, stats: &[&str]) -> Result<Poly, ComputeError> {
    Ok(stat_poly(&cls, n, stats)?)
}

/// `(w D_G)^n t`, through the normal-ordered operator.
fn weighted(gr: &Grammar<BigInt>, w: &Poly, t: &Poly, n: usize) -> Result<Poly, ComputeError> {
    Ok(gr.op_power(w, n)?.apply(gr, t)?)
}

fn xs() -> Poly {
    pv("x")
}

fn tables(kind: NumberTable, n: usize) -> Result<Vec<Vec<BigInt>>, ComputeError> {
    Ok(number_rows(kind, n)?)
}

/// `Σ_k T(n,k) z^k` for `k` in `lo..=n`.
fn row_poly(row: &[BigInt], lo: usize, z: &str) -> Poly {
    Poly::from_terms(
        row.iter()
            .enumerate()
            .skip(lo)
            .map(|(k, v)| (Monomial::var_pow(var(z), k as i32), v.clone())),
    )
}

pub fn box_sorting(n: usize) -> Outcome {
    let jets: Vec<Poly> = (0..=n).map(|i| Poly::var(c(i as u32))).collect();
    let syt = syt_expansion(n, 1, None, &Poly::var(c(0)), &jets);
    let sigma = syt_sum(n, None, |t| big(t.box_product(1)));
    Ok(vec![
        equal(
            "(cD)^n c",
            [("jet derivation", ckd_power_on_c(1, n)?), ("OWP weights", weight_sum(n, 1)), ("SYT", syt)],
        ),
        equal("sum of box products", [("SYT", sigma), ("n!", factorial_poly(n))]),
    ])
}

pub fn ramanujan(n: usize) -> Outcome {
    let x = xs();
    let alpha: Vec<Poly> = (0..=n as u64)
        .map(|i| {
            Poly::univariate(var("x"), (0..=i).map(|j| binomial(i, j) * factorial(j)))
        })
        .collect();
    let syt = syt_expansion(n, 1, None, &Poly::one(), &alpha);
    let xy = &x * &pv("y");
    let shor = g("x -> x^3*y; y -> x*y^2")?.derive_n(&xy, n)?;
    let shor = div_mono(&set(&shor, "y", &Poly::one())?, &mono(&[("x", n as i32 + 1)]));
    let normal = weighted(&g("x -> x^2; y -> y")?, &xy, &xy, n)?;
    let normal = div_mono(&normal, &mono(&[("x", n as i32 + 1), ("y", n as i32 + 1)]));
    let mut routes = vec![
        ("SYT".to_string(), syt),
        ("recurrence".to_string(), fam(FamilyId::Ramanujan, n + 1)?),
        ("grammar at y=1".to_string(), shor),
        ("normal-ordered grammar".to_string(), normal),
    ];
    if n < 6 {
        let trees = oracle(ObjectClass::RootedLabeledTree, n + 1, &["improper"])?;
        routes.push(("rooted trees".to_string(), rename(&trees, &[("improper", "x")])));
    }
    Ok(vec![equal("R_{n+1}(x)", routes)
        .note(format!("grammar cleared by x^{}", n + 1))
        .note(format!("normal-ordered grammar cleared by (xy)^{}", n + 1))])
}

pub fn andre(n: usize) -> Outcome {
    let syt = indexed_sum(n, 1, Some(2), |_, w, _| {
        Poly::term(
            mono(&[("x", n as i32 + 1 - wt(w, 1) - wt(w, 2)), ("y", wt(w, 1))]),
            BigInt::from(1),
        )
    });
    let e = fam(FamilyId::Andre, n + 1)?;
    let trees = oracle(ObjectClass::IncTree012, n + 1, &["leaves", "deg1"])?;
    let at_one = set(&set(&e, "x", &Poly::one())?, "y", &Poly::one())?;
    Ok(vec![
        equal(
            "E_{n+1}(x,y)",
            [
                ("SYT(n;2)", syt),
                ("grammar", e),
                ("0-1-2 trees", rename(&trees, &[("leaves", "x"), ("deg1", "y")])),
            ],
        ),
        equal(
            "E_{n+1}(1,1)",
            [("grammar", at_one), ("down-up permutations", big(down_up_count(n + 1).into()))],
        ),
    ])
}

pub fn left_peak(n: usize) -> Outcome {
    let syt = indexed_sum(n, 1, None, |_, w, _| {
        let odd: i32 = (1..w.len()).step_by(2).map(|i| wt(w, i)).sum();
        vpow("x", (n as i32 - odd) / 2)
    });
    let l = fam(FamilyId::LeftPeak, n)?;
    let gr = g("x -> x*y; y -> x^2")?.derive_n(&xs(), n)?;
    let gr = set(&gr, "y", &Poly::one())?;
    Ok(vec![
        equal(
            "L_n(x)",
            [
                ("SYT", syt),
                ("recurrence", l.clone()),
                ("lpk", rename(&oracle(ObjectClass::Permutation, n, &["lpk"])?, &[("lpk", "x")])),
            ],
        ),
        equal("x L_n(x^2)", [("grammar at y=1", gr), ("recurrence", &xs() * &stretch(&l, "x", 2))]),
    ])
}

pub fn interior_peak(n: usize) -> Outcome {
    let syt = indexed_sum(n, 1, Some(2), |_, _, ell| {
        vpow("x", n as i32 - ell as i32).scale(&BigInt::from(2).pow(ell as u32))
    });
    let w = fam(FamilyId::InteriorPeak, n + 1)?;
    let ls = seq(FamilyId::LeftPeak, n)?;
    let conv: Poly = (0..=n)
        .map(|k| (&ls[k] * &ls[n - k]).scale(&binomial(n as u64, k as u64)))
        .sum();
    let y = Poly::one();
    let inc = g("x -> 2*x*y; y -> x")?.derive_n(&pv("y"), n + 1)?;
    let inc = div_mono(&set(&inc, "y", &y)?, &mono(&[("x", 1)]));
    let tan = g("x -> x*y; y -> x^2")?.derive_n(&pv("y"), n + 1)?;
    let tan = div_mono(&set(&tan, "y", &y)?, &mono(&[("x", 2)]));
    let mut routes = vec![
        ("SYT(n;2)".to_string(), syt),
        ("recurrence".to_string(), w.clone()),
        ("convolution of L".to_string(), conv),
        ("binary-tree grammar".to_string(), inc),
    ];
    if n < 9 {
        let ipk = oracle(ObjectClass::Permutation, n + 1, &["ipk"])?;
        routes.push(("ipk".to_string(), rename(&ipk, &[("ipk", "x")])));
    }
    Ok(vec![
        equal("W_{n+1}(x)", routes).note("binary-tree grammar cleared by x"),
        equal("W_{n+1}(x^2)", [("peak grammar", tan), ("recurrence", stretch(&w, "x", 2))])
            .note("peak grammar cleared by x^2"),
    ])
}

pub fn eulerian(n: usize) -> Outcome {
    let x = xs();
    let y = pv("y");
    let top = indexed_sum(n, 1, None, |_, _, ell| vpow("x", (n + 1 - ell) as i32));
    let rows = indexed_sum(n, 1, None, |_, _, ell| vpow("x", ell as i32));
    let des = oracle(ObjectClass::Permutation, n, &["des"])?;
    let xpy = &x + &y;
    let biv = indexed_sum(n, 1, Some(2), |_, w, _| {
        let (w1, w2) = (wt(w, 1), wt(w, 2));
        let e = n as i32 + 1 - w1 - w2;
        (&Poly::term(mono(&[("x", e), ("y", e)]), BigInt::from(1)) * &xpy.pow(w1 as u32))
            .scale(&BigInt::from(2).pow(w2 as u32))
    });
    let mut checks = vec![equal(
        "A_n(x)",
        [
            ("SYT x^{n+1-l}", top),
            ("SYT x^l", rows),
            ("recurrence", fam(FamilyId::EulerianA, n)?),
            ("des", &x * &rename(&des, &[("des", "x")])),
        ],
    )];
    let mut routes = vec![
        ("SYT(n;2)".to_string(), biv),
        ("recurrence".to_string(), fam(FamilyId::EulerianABiv, n + 1)?),
        ("normal-ordered grammar".to_string(), weighted(&g("x -> 1; y -> 1")?, &(&x * &y), &(&x * &y), n)?),
    ];
    if n < 9 {
        let d = oracle(ObjectClass::Permutation, n + 1, &["des"])?;
        let d = homogenize(&(&x * &rename(&d, &[("des", "x")])), n as i32 + 2);
        routes.push(("des".to_string(), d));
    }
    checks.push(equal("A_{n+1}(x,y)", routes));
    Ok(checks)
}

pub fn half_eulerian(n: usize) -> Outcome {
    let ws = seq(FamilyId::InteriorPeak, n)?;
    let inv: Vec<Poly> = ws.iter().map(|w| stretch(w, "x", -1)).collect();
    let raw = indexed_sum(n, 1, None, |_, w, ell| {
        let mut acc = vpow("x", n as i32 - ell as i32);
        for (i, &k) in w.iter().enumerate().skip(1) {
            if k > 0 {
                acc = &acc * &inv[i].pow(k as u32);
            }
        }
        acc
    });
    let (syt, factor) = clear(&raw);
    let a2 = fam(FamilyId::KInvEulerian(2), n)?;
    let exc = oracle(ObjectClass::Permutation, n, &["exc", "cyc"])?;
    let exc = Poly::from_terms(exc.terms().map(|(m, k)| {
        let cyc = m.exponent(var("cyc"));
        (
            Monomial::var_pow(var("x"), m.exponent(var("exc"))),
            k * BigInt::from(2).pow((n as i32 - cyc) as u32),
        )
    }));
    let mut routes = vec![
        ("SYT with W_i(1/x)".to_string(), syt),
        ("recurrence".to_string(), a2.clone()),
        ("exc/cyc".to_string(), exc),
    ];
    if n <= 6 {
        let ap = oracle(ObjectClass::StirlingPermutation(2), n, &["ap"])?;
        routes.push(("Stirling ap".to_string(), rename(&ap, &[("ap", "x")])));
    }
    let gr = g("x -> y^2; y -> x*y")?;
    let gr = set(&weighted(&gr, &xs(), &xs(), n)?, "y", &Poly::one())?;
    Ok(vec![
        equal("A_n^(2)(x)", routes).note(format!("SYT route cleared by {}", factor_text(&factor))),
        equal("x A_n^(2)(x^2)", [("grammar at y=1", gr), ("recurrence", &xs() * &stretch(&a2, "x", 2))]),
    ])
}

fn factor_text(m: &Monomial) -> String {
    Poly::term(m.clone(), BigInt::from(1)).to_string()
}

/// `c_{2i-1} = 4^{i-1}(1 + x^2)`, `c_{2i} = 4^i x`, index 0 unused.
fn type_b_jets(n: usize) -> Vec<Poly> {
    let x = xs();
    let one_x2 = &Poly::one() + &x.pow(2);
    (0..=n)
        .map(|i| {
            if i == 0 {
                Poly::one()
            } else if i % 2 == 1 {
                one_x2.scale(&BigInt::from(4).pow((i as u32 - 1) / 2))
            } else {
                x.scale(&BigInt::from(4).pow(i as u32 / 2))
            }
        })
        .collect()
}

pub fn type_b(n: usize) -> Outcome {
    let x = xs();
    let syt = syt_expansion(n, 1, None, &x, &type_b_jets(n));
    let b = fam(FamilyId::EulerianB, n)?;
    let xy = &x * &pv("y");
    let gr = set(&weighted(&g("x -> y; y -> x")?, &xy, &xy, n)?, "y", &Poly::one())?;
    let mut routes = vec![
        ("SYT".to_string(), syt),
        ("recurrence".to_string(), &x * &stretch(&b, "x", 2)),
        ("normal-ordered grammar at y=1".to_string(), gr),
    ];
    if n <= 6 {
        let d = rename(&oracle(ObjectClass::SignedPermutation, n, &["desB"])?, &[("desB", "x")]);
        routes.push(("desB".to_string(), &x * &stretch(&d, "x", 2)));
    }
    Ok(vec![equal("x B_n(x^2)", routes)])
}

pub fn second_order_biv(n: usize) -> Outcome {
    let a = seq(FamilyId::EulerianABiv, n)?;
    let y = pv("y");
    let syt = syt_expansion(n, 1, None, &y, &a);
    let d = 2 * n as i32 + 1;
    let c = fam(FamilyId::SecondOrder, n)?;
    let gr = weighted(&g("x -> x*y; y -> x*y")?, &y, &y, n)?;
    let mut routes = vec![
        ("SYT with A_i(x,y)".to_string(), syt),
        ("recurrence".to_string(), homogenize(&c, d)),
        ("normal-ordered grammar".to_string(), gr),
    ];
    if n <= 6 {
        let des = oracle(ObjectClass::StirlingPermutation(2), n, &["des"])?;
        routes.push(("Stirling des".to_string(), homogenize(&rename(&des, &[("des", "x")]), d)));
    }
    Ok(vec![equal("C_n(x,y)", routes)])
}

pub fn second_order_factorial(n: usize) -> Outcome {
    let jets: Vec<Poly> = (0..=n as u64).map(|i| big(factorial(i))).collect();
    let syt = syt_expansion(n, 1, None, &xs(), &jets);
    let gr = set(&weighted(&g("x -> y^2; y -> y^2")?, &xs(), &xs(), n)?, "y", &Poly::one())?;
    Ok(vec![equal(
        "C_n(x)",
        [("SYT with i!", syt), ("recurrence", fam(FamilyId::SecondOrder, n)?), ("grammar at y=1", gr)],
    )])
}

pub fn second_order_tri(n: usize) -> Outcome {
    let (x, y, z) = (xs(), pv("y"), pv("z"));
    let xyz = &(&x * &y) * &z;
    let jets: Vec<Poly> = (0..=n)
        .map(|i| match i {
            0 => Poly::one(),
            1 => &(&(&x * &y) + &(&y * &z)) + &(&x * &z),
            2 => (&(&x + &y) + &z).scale(&BigInt::from(2)),
            3 => int(6),
            _ => Poly::zero(),
        })
        .collect();
    let syt = syt_expansion(n, 1, Some(3), &xyz, &jets);
    let gr = weighted(&g("x -> 1; y -> 1; z -> 1")?, &xyz, &xyz, n)?;
    let mut routes = vec![
        ("SYT(n;3)".to_string(), syt),
        ("recurrence".to_string(), fam(FamilyId::SecondOrderTri, n + 1)?),
        ("normal-ordered grammar".to_string(), gr),
    ];
    if n < 6 {
        let o = oracle(ObjectClass::StirlingPermutation(2), n + 1, &["asc", "des", "plat"])?;
        routes.push(("Stirling asc/des/plat".to_string(), rename(&o, &[("asc", "x"), ("des", "y"), ("plat", "z")])));
    }
    Ok(vec![equal("C_{n+1}(x,y,z)", routes)])
}

/// `(c^m D)^n c` at `c = 1`, `c_i = x`.
fn jets_to_x(p: &Poly) -> Result<Poly, ComputeError> {
    let mut b = HashMap::new();
    for v in p.variables() {
        let img = if v == c(0) { Poly::one() } else { xs() };
        b.insert(v, img);
    }
    Ok(p.substitute(&b)?)
}

pub fn second_order_delta(n: usize) -> Outcome {
    let ones = vec![xs(); n + 1];
    let syt = syt_expansion(n, 2, None, &Poly::one(), &ones);
    let delta = syt_sum(n, None, |t| big(t.box_product(2)));
    Ok(vec![
        equal(
            "C_n(x)",
            [
                ("SYT delta", syt),
                ("recurrence", fam(FamilyId::SecondOrder, n)?),
                ("(c^2 D)^n c specialized", jets_to_x(&ckd_power_on_c(2, n)?)?),
            ],
        ),
        equal("sum of delta products", [("SYT", delta), ("(2n-1)!!", big(box_count(n as u64, 2)))]),
    ])
}

pub fn k_order(n: usize) -> Outcome {
    let ones = vec![xs(); n + 1];
    let mut out = Vec::new();
    for m in 1..=3u32 {
        let syt = syt_expansion(n, m, None, &Poly::one(), &ones);
        let jet = ckd_power_on_c(m as usize, n)?;
        let mut routes = vec![
            ("SYT delta^(m)".to_string(), syt),
            ("recurrence".to_string(), fam(FamilyId::KOrder(m), n)?),
            ("(c^m D)^n c specialized".to_string(), jets_to_x(&jet)?),
        ];
        let stirling = ObjectClass::StirlingPermutation(m);
        if stat_poly(&stirling, n, &["des"]).is_ok() {
            routes.push(("k-Stirling des".to_string(), rename(&oracle(stirling, n, &["des"])?, &[("des", "x")])));
        }
        out.push(equal(&format!("C_n(x;{m})"), routes));
        let prod = syt_sum(n, None, |t| big(t.box_product(m)));
        out.push(equal(
            &format!("sum of delta^({m}) products"),
            [("SYT", prod), ("box count", big(box_count(n as u64, m as u64)))],
        ));
        if n <= 6 {
            out.push(equal(&format!("(c^{m} D)^n c"), [("jet derivation", jet), ("OWP weights", weight_sum(n, m))]));
        }
    }
    Ok(out)
}

pub fn narayana_a(n: usize) -> Outcome {
    let jets: Vec<Poly> = (0..=n as i64)
        .map(|i| {
            let mut p = Poly::zero();
            for j in 0..=i + 1 {
                let e = 2 * j - i;
                if (0..=i + 1).contains(&e) {
                    let k = binomial(i as u64 + 1, e as u64) * factorial(i as u64);
                    p.add_term(Monomial::var_pow(var("x"), e as i32), k);
                }
            }
            p
        })
        .collect();
    let raw = indexed_sum(n, 1, None, |_, w, ell| {
        let mut acc = vpow("x", n as i32 - 2 * ell as i32);
        for (i, &k) in w.iter().enumerate().skip(1) {
            if k > 0 {
                acc = &acc * &jets[i].pow(k as u32);
            }
        }
        acc
    });
    let (syt, factor) = clear(&raw);
    let na = fam(FamilyId::NarayanaA, n - 1)?;
    let expected = stretch(&na, "x", 2).scale(&factorial(n as u64 + 1));
    let gr = g("x -> x^2*y^3; y -> x^3*y^2")?.derive_n(&xs().pow(2), n)?;
    let gr = div_mono(&set(&gr, "y", &Poly::one())?, &mono(&[("x", n as i32 + 2)]));
    Ok(vec![equal(
        "(n+1)! N(A_{n-1},x^2)",
        [("SYT with binary-word jets", syt), ("closed form", expected), ("grammar at y=1", gr)],
    )
    .note(format!("SYT route cleared by {}", factor_text(&factor)))
    .note(format!("grammar cleared by x^{}", n + 2))])
}

pub fn narayana_b(n: usize) -> Outcome {
    let bs = seq(FamilyId::EulerianB, n)?;
    let syt = syt_expansion(n, 1, None, &Poly::one(), &bs);
    let nb = fam(FamilyId::NarayanaB, n)?;
    let nfact = factorial(n as u64);
    let x = xs();
    let delta = syt_expansion(n, 2, None, &x, &type_b_jets(n));
    let lifted = (&x.pow(n as u32 + 1) * &stretch(&nb, "x", 2)).scale(&nfact);
    let gr = g("x -> x^2*y^3; y -> x^3*y^2")?.derive_n(&(&x * &pv("y")), n)?;
    Ok(vec![
        equal("n! N(B_n,x)", [("SYT with B_i", syt), ("closed form", nb.scale(&nfact))]),
        equal(
            "n! x^{n+1} N(B_n,x^2)",
            [("SYT delta", delta), ("closed form", lifted), ("grammar at y=1", set(&gr, "y", &Poly::one())?)],
        ),
    ])
}

fn alternating(g2: &str, start: &str, n: usize) -> Result<Poly, ComputeError> {
    let g1 = g("a -> a^2; b -> a^2")?;
    let g2 = g(g2)?;
    let mut p = pv(start);
    for _ in 0..n {
        p = g2.derive(&g1.derive(&p)?)?;
    }
    Ok(p)
}

pub fn alt_narayana(n: usize) -> Outcome {
    let na = fam(FamilyId::NarayanaA, n - 1)?;
    let k = factorial(n as u64) * factorial(n as u64 + 1);
    let closed = ab_form(&na, "x", "a", n as i32 + 1, "b", n as i32)?.scale(&k);
    let coeffs = na.univariate_coeffs(var("x"))?;
    let pal = coeffs.iter().eq(coeffs.iter().rev());
    Ok(vec![
        equal(
            "(D2 D1)^n",
            [
                ("from a", alternating("a -> a*b; b -> a*b", "a", n)?),
                ("from b", alternating("a -> a*b; b -> a*b", "b", n)?),
                ("closed form", closed),
            ],
        ),
        holds("N(A_{n-1},x) palindromic", pal, format!("{na}")),
    ])
}

pub fn alt_multiset(n: usize) -> Outcome {
    const ORDER: usize = 6;
    let g2 = "a -> b^2; b -> b^2";
    let p = fam(FamilyId::MultisetDescent2, n)?;
    let mut checks = Vec::new();
    let closed = ab_form(&p, "x", "a", 1, "b", 2 * n as i32)?.scale(&BigInt::from(2).pow(n as u32));
    checks.push(equal(
        "(D2 D1)^n",
        [("from a", alternating(g2, "a", n)?), ("from b", alternating(g2, "b", n)?), ("closed form", closed)],
    ));
    let mut routes = vec![("grammar".to_string(), p.clone())];
    if let Ok(o) = stat_poly(&ObjectClass::uniform_multiset(2, n), n, &["des"]) {
        routes.push(("multiset des".to_string(), rename(&o, &[("des", "x")])));
    }
    checks.push(equal("P(x;{1^2..n^2})", routes));
    let series = p.series_quotient(var("x"), 1 + 2 * n as u32, ORDER)?;
    let mac = Poly::univariate(
        var("x"),
        (0..=ORDER as u64).map(|t| binomial(t + 2, 2).pow(n as u32)),
    );
    checks.push(equal("P/(1-x)^{2n+1} series", [("series quotient", series), ("C(t+2,2)^n", mac)]));
    Ok(checks)
}

pub fn alt_legendre(n: usize) -> Outcome {
    const ORDER: usize = 6;
    let g2 = "a -> b^3; b -> b^3";
    let l = fam(FamilyId::LsDescent, n)?;
    let closed = ab_form(&l, "x", "a", 0, "b", 3 * n as i32 + 1)?;
    let ls = tables(NumberTable::LegendreStirling, n + ORDER)?;
    let gf = Poly::univariate(var("x"), (0..=ORDER).map(|t| ls[t + n][t].clone()));
    let series = l.series_quotient(var("x"), 3 * n as u32 + 1, ORDER)?;
    Ok(vec![
        equal(
            "(D2 D1)^n",
            [("from a", alternating(g2, "a", n)?), ("from b", alternating(g2, "b", n)?), ("closed form", closed)],
        ),
        equal("L_n/(1-x)^{3n+1} series", [("series quotient", series), ("LS(t+n,t)", gf)]),
    ])
}

/// Final level of a triangle `T(m, k, l)` grown from `T(1,1,1) = 1`, as
/// `Σ T(n,k,l) · term(k, l)`.
fn grow(
    n: usize,
    next: impl Fn(i64, i64, i64, &dyn Fn(i64, i64) -> BigInt) -> BigInt,
    term: impl Fn(i64, i64) -> Monomial,
) -> (Poly, Vec<BigInt>) {
    let mut cur: HashMap<(i64, i64), BigInt> = HashMap::new();
    cur.insert((1, 1), BigInt::from(1));
    for m in 1..n as i64 {
        let get = |k: i64, l: i64| cur.get(&(k, l)).cloned().unwrap_or_default();
        let mut nxt = HashMap::new();
        for k in 1..=m + 1 {
            for l in 0..=2 * (m + 1) {
                let v = next(m, k, l, &get);
                if !v.is_zero() {
                    nxt.insert((k, l), v);
                }
            }
        }
        cur = nxt;
    }
    let values = cur.values().cloned().collect();
    (Poly::from_terms(cur.into_iter().map(|((k, l), v)| (term(k, l), v))), values)
}

fn z_orders(op: &boxsort_core::grammar::NormalOp<BigInt>) -> Poly {
    op.orders()
        .map(|(k, p)| p.mul_monomial(&Monomial::var_pow(var("z"), k as i32)))
        .sum()
}

fn displayed_binary(n: usize) -> Option<Poly> {
    let s = match n {
        1 => "x*z",
        2 => "x*y*z + x^2*z^2",
        3 => "(x*y^2 + x^2*y)*z + 3*x^2*y*z^2 + x^3*z^3",
        4 => "(x*y^3 + 4*x^2*y^2 + x^3*y)*z + (7*x^2*y^2 + 4*x^3*y)*z^2 + 6*x^3*y*z^3 + x^4*z^4",
        _ => return None,
    };
    Some(expand_text(s))
}

fn displayed_full(n: usize) -> Option<Poly> {
    let s = match n {
        1 => "x*y*z",
        2 => "(x*y^2 + x^2*y)*z + x^2*y^2*z^2",
        3 => "(x*y^3 + 4*x^2*y^2 + x^3*y)*z + (3*x^2*y^3 + 3*x^3*y^2)*z^2 + x^3*y^3*z^3",
        4 => "(x*y^4 + 11*x^2*y^3 + 11*x^3*y^2 + x^4*y)*z + (7*x^2*y^4 + 22*x^3*y^3 + 7*x^4*y^2)*z^2 \
              + (6*x^3*y^4 + 6*x^4*y^3)*z^3 + x^4*y^4*z^4",
        _ => return None,
    };
    Some(expand_text(s))
}

/// Expands a sum of `(poly)*z^k` and plain terms in displayed form.
fn expand_text(s: &str) -> Poly {
    let mut out = Poly::zero();
    let mut depth = 0;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut pieces = Vec::new();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&s[start..]);
    for piece in pieces {
        let piece = piece.trim();
        if let Some(rest) = piece.strip_prefix('(') {
            let close = rest.find(')').expect("balanced");
            let inner: Poly = rest[..close].parse().expect("fixed text");
            let tail = rest[close + 1..].trim_start_matches('*');
            let factor: Poly = if tail.is_empty() { Poly::one() } else { tail.parse().expect("fixed text") };
            out += &(&inner * &factor);
        } else {
            out += &piece.parse::<Poly>().expect("fixed text");
        }
    }
    out
}

pub fn binary_forests(n: usize) -> Outcome {
    let (x, y, z) = (xs(), pv("y"), pv("z"));
    let op = g("x -> y; y -> y")?.op_power(&x, n)?;
    let op_poly = z_orders(&op);
    let (rec, _) = grow(
        n,
        |m, k, l, get| {
            BigInt::from(l) * get(k, l) + BigInt::from(m - l + 1) * get(k, l - 1) + get(k - 1, l - 1)
        },
        |k, l| mono(&[("x", l as i32), ("y", n as i32 - l as i32), ("z", k as i32)]),
    );
    let mut tri = Poly::one();
    for m in 0..n {
        let mz = &int(m as i64) + &z;
        tri = &(&(&x * &mz) * &tri) + &(&(&x * &(&y - &x)) * &tri.partial_derivative(var("x")));
    }
    let mut routes = vec![
        ("op_power".to_string(), op_poly.clone()),
        ("A_{n,k,l} recurrence".to_string(), rec),
        ("trivariate recurrence".to_string(), tri),
    ];
    if let Some(d) = displayed_binary(n) {
        routes.push(("displayed".to_string(), d));
    }
    let at = |p: &Poly, vals: &[(&str, Poly)]| -> Result<Poly, ComputeError> {
        let mut q = p.clone();
        for (v, val) in vals {
            q = set(&q, v, val)?;
        }
        Ok(q)
    };
    let rising: Poly = (0..n).map(|i| &z + &int(i as i64)).product();
    let s2 = tables(NumberTable::Stirling2, n)?;
    let diag = Poly::from_terms(
        op_poly
            .terms()
            .filter(|(m, _)| m.exponent(var("x")) == m.exponent(var("z")))
            .map(|(m, c)| (Monomial::var_pow(var("z"), m.exponent(var("z"))), c.clone())),
    );
    let an = fam(FamilyId::EulerianA, n)?;
    let one = Poly::one();
    Ok(vec![
        equal("sum A_{n,k,l} x^l y^{n-l} z^k", routes),
        equal("A_n(1,1,z)", [("op_power", at(&op_poly, &[("x", one.clone()), ("y", one.clone())])?), ("z(z+1)...(z+n-1)", rising)]),
        equal("sum A_{n,k,k} z^k", [("op_power", diag), ("Stirling2", row_poly(&s2[n], 1, "z"))]),
        equal("A_n(x,1,1)", [("op_power", at(&op_poly, &[("y", one.clone()), ("z", one.clone())])?), ("Eulerian", an.clone())]),
        equal(
            "y A_n(1,y,1)",
            [
                ("op_power", &y * &at(&op_poly, &[("x", one.clone()), ("z", one.clone())])?),
                ("Eulerian", rename(&an, &[("x", "y")])),
            ],
        ),
    ])
}

pub fn full_binary_forests(n: usize) -> Outcome {
    let (x, y, z) = (xs(), pv("y"), pv("z"));
    let xy = &x * &y;
    let op_poly = z_orders(&g("x -> 1; y -> 1")?.op_power(&xy, n)?);
    let (rec, _) = grow(
        n,
        |m, k, l, get| {
            BigInt::from(l) * get(k, l) + BigInt::from(m + k - l + 1) * get(k, l - 1) + get(k - 1, l - 1)
        },
        |k, l| mono(&[("x", l as i32), ("y", (n as i64 + k - l) as i32), ("z", k as i32)]),
    );
    let mut tri = Poly::one();
    for m in 0..n {
        let dx = tri.partial_derivative(var("x"));
        let dz = tri.partial_derivative(var("z"));
        let lead = &x * &(&int(m as i64) + &(&y * &z));
        tri = &(&(&lead * &tri) + &(&(&x * &(&y - &x)) * &dx)) + &(&(&x * &z) * &dz);
    }
    let mut routes = vec![
        ("op_power".to_string(), op_poly.clone()),
        ("a_{n,k,l} recurrence".to_string(), rec),
        ("trivariate recurrence".to_string(), tri),
    ];
    if let Some(d) = displayed_full(n) {
        routes.push(("displayed".to_string(), d));
    }
    let lists = stat_poly(&ObjectClass::ListPartition, n, &["lists", "asc", "des"]);
    if let Ok(o) = &lists {
        routes.push(("list partitions".to_string(), rename(o, &[("lists", "z"), ("asc", "x"), ("des", "y")])));
    }
    let mut checks = vec![equal("sum a_{n,k,l} x^l y^{n+k-l} z^k", routes)];

    // change of grammar u = xy, v = x + y
    let uv_op = z_orders(&g("u -> v; v -> 2")?.op_power(&pv("u"), n)?);
    let mut back = HashMap::new();
    back.insert(var("u"), xy.clone());
    back.insert(var("v"), &x + &y);
    let (gam_rec, gvals) = grow(
        n,
        |m, k, l, get| {
            BigInt::from(l) * get(k, l)
                + BigInt::from(2 * (m + k - 2 * l + 2)) * get(k, l - 1)
                + get(k - 1, l - 1)
        },
        |k, l| mono(&[("u", l as i32), ("v", (n as i64 + k - 2 * l) as i32), ("z", k as i32)]),
    );
    let mut gam_routes = vec![("op_power in u,v".to_string(), uv_op.clone()), ("gamma recurrence".to_string(), gam_rec)];
    let mut by_basis = Poly::zero();
    for k in 1..=n as i32 {
        let part = op_poly.coefficient_of(var("z"), k);
        for (l, gm) in boxsort_core::poly::gamma_expand(&part, var("x"), var("y"))? {
            let e = n as i32 + k - 2 * l as i32;
            by_basis += &gm.mul_monomial(&mono(&[("u", l as i32), ("v", e), ("z", k)]));
        }
    }
    gam_routes.push(("gamma basis of a_n".to_string(), by_basis));
    if let Ok(o) = stat_poly(&ObjectClass::ListPartition, n, &["lists", "val", "dd"]) {
        let peaks = Poly::from_terms(o.terms().filter(|(m, _)| m.exponent(var("dd")) == 0).map(|(m, c)| {
            let k = m.exponent(var("lists"));
            let l = k + m.exponent(var("val"));
            (mono(&[("u", l), ("v", n as i32 + k - 2 * l), ("z", k)]), c.clone())
        }));
        gam_routes.push(("lists without double descents".to_string(), peaks));
    }
    checks.push(equal("sum gamma(n,k,l) u^l v^{n+k-2l} z^k", gam_routes));
    checks.push(equal("gamma basis back to x,y", [("op_power", op_poly.clone()), ("u=xy, v=x+y", uv_op.substitute(&back)?)]));
    let neg = gvals.iter().filter(|v| v.is_negative()).count();
    checks.push(holds("partial gamma-positivity", neg == 0, format!("{neg} negative coefficients")));
    let lah = tables(NumberTable::Lah, n)?;
    let one = Poly::one();
    let at11 = set(&set(&op_poly, "x", &one)?, "y", &one)?;
    checks.push(equal("a_n(1,1,z)", [("op_power", at11), ("Lah", row_poly(&lah[n], 1, "z"))]));
    Ok(checks)
}

pub fn projections(n: usize) -> Outcome {
    let b = pv("b");
    let s2 = tables(NumberTable::Stirling2, n)?;
    let s1 = tables(NumberTable::Stirling1, n)?;
    let eul = tables(NumberTable::EulerianNum, n)?;
    let a = pv("a");
    let p11: Poly = (0..=n).map(|k| (&a * &b.pow(k as u32)).scale(&s2[n][k])).sum();
    let p12: Poly = (0..=n)
        .map(|k| (&(&a * &b.pow(k as u32)) * &pv("c").pow((n - k) as u32)).scale(&s1[n][k]))
        .sum();
    let op = g("x -> 1")?.op_power(&xs(), n)?;
    let p13: Poly = (0..=n)
        .map(|k| Poly::term(mono(&[("x", k as i32), ("z", k as i32)]), s2[n][k].clone()))
        .sum();
    let proj = |kind: Projection| -> Result<Poly, ComputeError> {
        let mut p = Poly::zero();
        for k in 1..=n {
            p.add_term(Monomial::var_pow(var("z"), k as i32), project(kind, n, k)?);
        }
        Ok(p)
    };
    // F_{n,k} recurrence in the jet grammar
    let jets = JetContext::for_power(n);
    let cc = Poly::var(c(0));
    let lhs: Poly = (1..=n)
        .map(|k| Ok(&extract_f(n, k)? * &Poly::var(f(k as u32))))
        .sum::<Result<Poly, ComputeError>>()?;
    let rhs: Poly = if n == 1 {
        &cc * &Poly::var(f(1))
    } else {
        let mut acc = Poly::zero();
        for k in 1..=n {
            let prev = if k >= 2 { extract_f(n - 1, k - 1)? } else { Poly::zero() };
            let same = if k < n { extract_f(n - 1, k)? } else { Poly::zero() };
            let fk = &(&cc * &prev) + &(&cc * &jets.grammar().derive(&same)?);
            acc += &(&fk * &Poly::var(f(k as u32)));
        }
        acc
    };
    // Cayley series: x[i] -> x[0] x[i+1]
    let cay = Grammar::new()
        .with_family("x", "x[0]*x[i+1]")?
        .with_max_index(n as u32 + 1)
        .derive_n(&Poly::var(VarId::indexed("x", 0)), n - 1)?;
    let f1 = extract_f(n, 1)?.map_monomials(|m| m.map_vars(|v| VarId::indexed("x", v.index().unwrap_or(0))));
    Ok(vec![
        equal("D^n a, a -> ab, b -> b", [("grammar", g("a -> a*b; b -> b")?.derive_n(&a, n)?), ("Stirling2", p11)]),
        equal(
            "D^n a, a -> ab, b -> bc, c -> c^2",
            [("grammar", g("a -> a*b; b -> b*c; c -> c^2")?.derive_n(&a, n)?), ("Stirling1", p12)],
        ),
        equal("(x D)^n, x -> 1", [("op_power", z_orders(&op)), ("Stirling2", p13)]),
        equal("Stirling1 row", [("projection", proj(Projection::Stirling1)?), ("table", row_poly(&s1[n], 1, "z"))]),
        equal("Stirling2 row", [("projection", proj(Projection::Stirling2)?), ("table", row_poly(&s2[n], 1, "z"))]),
        equal("Eulerian row", [("projection", proj(Projection::Eulerian)?), ("table", row_poly(&eul[n], 1, "z"))]),
        equal("(cD)^n f", [("extraction", lhs), ("F recurrence", rhs)]),
        equal("F_{n,1}", [("jets renamed", f1), ("Cayley grammar", cay)]),
    ])
}

pub fn examples(n: usize) -> Outcome {
    let x = xs();
    let one_minus = &Poly::one() - &x;
    let s2 = tables(NumberTable::Stirling2, n)?;
    let frob: Poly = (0..=n)
        .map(|k| (&x.pow(k as u32) * &one_minus.pow((n - k) as u32)).scale(&(factorial(k as u64) * &s2[n][k])))
        .sum();
    let an = fam(FamilyId::EulerianA, n)?;
    let mut checks = vec![equal("A_n(x)", [("recurrence", an.clone()), ("Frobenius", frob)])];
    for k in 1..=3i64 {
        let ak = fam(FamilyId::KInvEulerian(k as u32), n)?;
        let gr = g(&format!("a -> a*b^{k}; b -> a^{k}*b"))?.derive_n(&pv("a"), n)?;
        let coeffs = ak.univariate_coeffs(var("x"))?;
        let closed = Poly::from_terms(coeffs.into_iter().enumerate().map(|(j, c)| {
            let j = j as i32;
            let k = k as i32;
            (mono(&[("a", 1 + k * j), ("b", k * (n as i32 - j))]), c)
        }));
        let xm1 = &x - &Poly::one();
        let explicit: Poly = (1..=n)
            .map(|i| {
                let rise: BigInt = (0..i as i64).map(|j| BigInt::from(1 + j * k)).product();
                let w = &s2[n][i] * BigInt::from(k).pow((n - i) as u32) * rise;
                xm1.pow((n - i) as u32).scale(&w)
            })
            .sum();
        let cyc = oracle(ObjectClass::Permutation, n, &["exc", "cyc"])?;
        let cyc = Poly::from_terms(cyc.terms().map(|(m, c)| {
            let w = BigInt::from(k).pow((n as i32 - m.exponent(var("cyc"))) as u32);
            (Monomial::var_pow(var("x"), m.exponent(var("exc"))), c * w)
        }));
        checks.push(equal(
            &format!("A_n^({k})"),
            [("recurrence", ak), ("explicit", explicit), ("exc/cyc", cyc)],
        ));
        checks.push(equal(&format!("D^n a, a -> ab^{k}, b -> a^{k}b"), [("grammar", gr), ("closed form", closed)]));
    }
    let a1 = fam(FamilyId::KInvEulerian(1), n)?;
    let reversed = a1.map_monomials(|m| Monomial::var_pow(var("x"), n as i32 - m.exponent(var("x"))));
    checks.push(equal("x^n A_n^(1)(1/x)", [("reversed", reversed), ("A_n", an)]));
    let bn = fam(FamilyId::EulerianB, n)?;
    let ab = &pv("a") * &pv("b");
    checks.push(equal(
        "D^n(ab), a -> ab^2, b -> a^2b",
        [
            ("grammar", g("a -> a*b^2; b -> a^2*b")?.derive_n(&ab, n)?),
            ("closed form", stretch_ab(&bn, 2, 1, 2 * n as i32 + 1)?),
        ],
    ));
    let cn = fam(FamilyId::SecondOrder, n)?;
    checks.push(equal(
        "D^n a, a -> ab^2, b -> ab^2",
        [
            ("grammar", g("a -> a*b^2; b -> a*b^2")?.derive_n(&pv("a"), n)?),
            ("closed form", ab_form(&cn, "x", "a", 0, "b", 2 * n as i32 + 1)?),
        ],
    ));
    let ts = seq(FamilyId::FlagAP, n + 1)?;
    let bs = seq(FamilyId::EulerianB, n)?;
    let flag = g("c -> a*b*c; a -> a*b^2; b -> a^2*b")?.derive_n(&pv("c"), n)?;
    let closed = &pv("c") * &ab_form(&ts[n], "x", "a", 0, "b", 2 * n as i32)?;
    checks.push(equal("D^n c, flag grammar", [("grammar", flag), ("closed form", closed)]));
    let conv: Poly = (0..=n)
        .map(|k| (&ts[k] * &stretch(&bs[n - k], "x", 2)).scale(&binomial(n as u64, k as u64)))
        .sum();
    checks.push(equal("T_{n+1}(x)", [("recurrence", ts[n + 1].clone()), ("convolution with B", &x * &conv)]));
    let h = fam(FamilyId::Hermite, n)?;
    checks.push(equal(
        "D^n a, a -> 2ab, b -> -1",
        [
            ("grammar", g("a -> 2*a*b; b -> -1")?.derive_n(&pv("a"), n)?),
            ("a H_n(b)", &pv("a") * &rename(&h, &[("x", "b")])),
        ],
    ));
    Ok(checks)
}

/// `Σ c_j a^{s + 2j} b^{d - 2j}` from `Σ c_j x^j`.
fn stretch_ab(p: &Poly, k: i32, s: i32, d: i32) -> Result<Poly, ComputeError> {
    let coeffs = p.univariate_coeffs(var("x"))?;
    Ok(Poly::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| (mono(&[("a", s + k * j as i32), ("b", d - k * j as i32)]), c)),
    ))
}

pub fn positivity(n: usize) -> Outcome {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let c3 = fam(FamilyId::SecondOrderTri, n)?;
    let e = boxsort_core::poly::e_expand(&c3, x, y, z)?;
    let bad: Vec<String> = e
        .iter()
        .filter(|((i, j, k), c)| c.is_negative() || (i + 2 * j + 3 * k) as usize != 2 * n + 1)
        .map(|((i, j, k), c)| format!("{c}*e1^{i}*e2^{j}*e3^{k}"))
        .collect();
    let mut checks = vec![
        holds("e-positivity with i+2j+3k = 2n+1", bad.is_empty(), bad.join(", ")),
        equal("C_n(x,y,z)", [("recurrence", c3.clone()), ("e basis", boxsort_core::poly::e_collect(&e, x, y, z))]),
    ];
    // Robinson-Schensted: Σ_λ f^λ Σ_{T ∈ SYT_λ} x^{des(T)+1}
    let mut shape_count: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_syt(n, None, |t| *shape_count.entry(t.shape().parts().to_vec()).or_default() += 1);
    let mut rsk = Poly::zero();
    for_each_syt(n, None, |t| {
        let f = shape_count[&t.shape().parts().to_vec()];
        rsk.add_term(Monomial::var_pow(x, t.descent_set().len() as i32 + 1), BigInt::from(f));
    });
    let des = oracle(ObjectClass::Permutation, n, &["des"])?;
    checks.push(equal(
        "A_n(x)",
        [
            ("SYT descents", rsk),
            ("recurrence", fam(FamilyId::EulerianA, n)?),
            ("des", &Poly::var(x) * &rename(&des, &[("des", "x")])),
        ],
    ));
    // γ(n,l) of the Eulerian polynomial
    let biv = fam(FamilyId::EulerianABiv, n)?;
    let reduced = div_mono(&biv, &mono(&[("x", 1), ("y", 1)]));
    let gam: Poly = boxsort_core::poly::gamma_expand(&reduced, x, y)?
        .into_iter()
        .map(|(l, c)| c.mul_monomial(&Monomial::var_pow(var("u"), l as i32)))
        .sum();
    let o = oracle(ObjectClass::Permutation, n, &["val", "dd"])?;
    let vd = Poly::from_terms(
        o.terms()
            .filter(|(m, _)| m.exponent(var("dd")) == 0)
            .map(|(m, c)| (Monomial::var_pow(var("u"), m.exponent(var("val"))), c.clone())),
    );
    checks.push(equal("sum gamma(n,l) u^l", [("gamma basis", gam), ("val without dd", vd)]));
    Ok(checks)
}
