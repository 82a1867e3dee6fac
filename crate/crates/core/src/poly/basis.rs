//! The two positivity bases: `(xy)^i (x+y)^{d-2i}` and the elementary
//! symmetric polynomials in three variables.

use super::{Monomial, PolyError, Polynomial, VarId};
use crate::scalar::Coeff;

/// Pairs `(i, γ_i)` with `p = Σ γ_i (xy)^i (x+y)^{d-2i}`, ascending in `i`.
pub type GammaExpansion<C> = Vec<(u32, Polynomial<C>)>;

fn check_symmetric<C: Coeff>(p: &Polynomial<C>, vars: &[VarId]) -> Result<i64, PolyError> {
    let d = p.homogeneous_degree(vars).ok_or(PolyError::NotHomogeneous)?;
    for w in vars.windows(2) {
        if p.swap_vars(w[0], w[1]) != *p {
            return Err(PolyError::NotSymmetric);
        }
    }
    Ok(d)
}

/// γ-expansion of `p` in `x, y`; coefficients may involve other variables.
pub fn gamma_expand<C: Coeff>(
    p: &Polynomial<C>,
    x: VarId,
    y: VarId,
) -> Result<GammaExpansion<C>, PolyError> {
    let d = check_symmetric(p, &[x, y])?;
    let xy = Polynomial::term(Monomial::from_factors([(x, 1), (y, 1)]), C::one());
    let x_plus_y = &Polynomial::var(x) + &Polynomial::var(y);
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (lo, _) = rest.degree_range(x).expect("nonzero");
        let i = lo as i64;
        if i < 0 || 2 * i > d {
            return Err(PolyError::NoExpansion(format!(
                "residual term x^{i} outside 0..={}",
                d / 2
            )));
        }
        let gamma = rest.coefficient_of(x, lo).coefficient_of(y, (d - i) as i32);
        let basis = &xy.pow(i as u32) * &x_plus_y.pow((d - 2 * i) as u32);
        rest -= &(&gamma * &basis);
        out.push((i as u32, gamma));
    }
    Ok(out)
}

/// Rebuilds `Σ γ_i (xy)^i (x+y)^{d-2i}`.
pub fn gamma_collect<C: Coeff>(
    gammas: &[(u32, Polynomial<C>)],
    x: VarId,
    y: VarId,
    d: u32,
) -> Polynomial<C> {
    let xy = Polynomial::term(Monomial::from_factors([(x, 1), (y, 1)]), C::one());
    let x_plus_y = &Polynomial::var(x) + &Polynomial::var(y);
    gammas
        .iter()
        .map(|(i, g)| g * &(&xy.pow(*i) * &x_plus_y.pow(d - 2 * i)))
        .sum()
}

/// Expansion `p = Σ c · e1^i e2^j e3^k` over `x, y, z`, in elimination order.
pub fn e_expand<C: Coeff>(
    p: &Polynomial<C>,
    x: VarId,
    y: VarId,
    z: VarId,
) -> Result<Vec<((u32, u32, u32), C)>, PolyError> {
    check_symmetric(p, &[x, y, z])?;
    if p.variables().iter().any(|v| ![x, y, z].contains(v)) {
        return Err(PolyError::NoExpansion(
            "coefficients must be integers".to_string(),
        ));
    }
    let (e1, e2, e3) = elementary(x, y, z);
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        // lex leading term with x > y > z
        let (m, c) = rest
            .terms()
            .max_by_key(|(m, _)| (m.exponent(x), m.exponent(y), m.exponent(z)))
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        let (a, b, cc) = (m.exponent(x), m.exponent(y), m.exponent(z));
        if cc < 0 || b < cc || a < b {
            return Err(PolyError::NoExpansion(format!(
                "leading exponents ({a},{b},{cc}) are not a partition"
            )));
        }
        let (i, j, k) = ((a - b) as u32, (b - cc) as u32, cc as u32);
        let basis = &(&e1.pow(i) * &e2.pow(j)) * &e3.pow(k);
        rest -= &basis.scale(&c);
        out.push(((i, j, k), c));
    }
    Ok(out)
}

/// `Σ c · e1^i e2^j e3^k`.
pub fn e_collect<C: Coeff>(
    terms: &[((u32, u32, u32), C)],
    x: VarId,
    y: VarId,
    z: VarId,
) -> Polynomial<C> {
    let (e1, e2, e3) = elementary(x, y, z);
    terms
        .iter()
        .map(|((i, j, k), c)| (&(&e1.pow(*i) * &e2.pow(*j)) * &e3.pow(*k)).scale(c))
        .sum()
}

fn elementary<C: Coeff>(
    x: VarId,
    y: VarId,
    z: VarId,
) -> (Polynomial<C>, Polynomial<C>, Polynomial<C>) {
    let (px, py, pz) = (Polynomial::var(x), Polynomial::var(y), Polynomial::var(z));
    let e1 = &(&px + &py) + &pz;
    let e2 = &(&(&px * &py) + &(&py * &pz)) + &(&pz * &px);
    let e3 = &(&px * &py) * &pz;
    (e1, e2, e3)
}
