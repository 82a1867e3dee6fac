use std::fmt::Write;

use super::{Monomial, Polynomial};
use crate::scalar::Coeff;

/// Plain text in the parser's syntax, e.g. `x + 8*x^2 - c[1]^3`.
pub fn text<C: Coeff>(p: &Polynomial<C>) -> String {
    render(p, " + ", " - ", text_monomial, "*")
}

/// LaTeX body without math delimiters, e.g. `x+8x^{2}-c_{1}^{3}`.
pub fn latex<C: Coeff>(p: &Polynomial<C>) -> String {
    render(p, "+", "-", latex_monomial, "")
}

fn render<C: Coeff>(
    p: &Polynomial<C>,
    plus: &str,
    minus: &str,
    mono: impl Fn(&Monomial) -> String,
    coeff_sep: &str,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { minus } else { plus });
        }
        if m.is_one() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&mono(m));
        } else {
            write!(out, "{abs}{coeff_sep}{}", mono(m)).unwrap();
        }
    }
    out
}

fn text_monomial(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .factors()
        .iter()
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

fn latex_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (v, e) in m.factors() {
        let name = v.name().as_str();
        match v.index() {
            // the jets c = c_0 and f = f_0 are written bare
            Some(0) if name == "c" || name == "f" => out.push_str(&name),
            Some(i) => write!(out, "{name}_{{{i}}}").unwrap(),
            None => out.push_str(&name),
        }
        if *e != 1 {
            write!(out, "^{{{e}}}").unwrap();
        }
    }
    out
}
