//! Context-free grammars as formal derivations, and normal-ordered powers
//! of weighted derivations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::poly::{parse_terms, IndexExpr, Monomial, Name, PolyError, Polynomial, RawTerm, VarId};
use crate::scalar::Coeff;

/// Largest index an indexed rule family may produce unless the caller says
/// otherwise.
pub const DEFAULT_MAX_INDEX: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("no rule for variable `{0}`")]
    UnknownVariable(VarId),
    #[error("rule for `{var}` needs index {needed}, above the cap {max}")]
    IndexOverflow { var: VarId, needed: i64, max: u32 },
    #[error("duplicate rule for `{0}`")]
    DuplicateRule(String),
    #[error("bad rule `{rule}`: {msg}")]
    BadRule { rule: String, msg: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Rules `v -> image`, plus optional indexed families such as
/// `c[i] -> c[i+1]` that cover every `c[k]` without an explicit rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar<C: Coeff> {
    rules: BTreeMap<VarId, Polynomial<C>>,
    families: BTreeMap<Name, Vec<RawTerm<C>>>,
    max_index: u32,
}

impl<C: Coeff> Default for Grammar<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> Grammar<C> {
    pub fn new() -> Self {
        Grammar {
            rules: BTreeMap::new(),
            families: BTreeMap::new(),
            max_index: DEFAULT_MAX_INDEX,
        }
    }

    /// Builds from `(variable, image)` pairs.
    pub fn from_rules<I: IntoIterator<Item = (VarId, Polynomial<C>)>>(rules: I) -> Self {
        let mut g = Self::new();
        for (v, p) in rules {
            g.rules.insert(v, p);
        }
        g
    }

    pub fn with_rule(mut self, v: VarId, image: Polynomial<C>) -> Self {
        self.rules.insert(v, image);
        self
    }

    /// Declares `v` inert: `D(v) = 0`.
    pub fn with_inert(self, v: VarId) -> Self {
        self.with_rule(v, Polynomial::zero())
    }

    /// Adds the family `name[i] -> template`, where the template may use
    /// `name2[i+k]` and fixed indices.
    pub fn with_family(mut self, name: &str, template: &str) -> Result<Self, GrammarError> {
        let n = Name::new(name)?;
        let terms = parse_terms(template)?;
        self.families.insert(n, terms);
        Ok(self)
    }

    pub fn with_max_index(mut self, max: u32) -> Self {
        self.max_index = max;
        self
    }

    pub fn max_index(&self) -> u32 {
        self.max_index
    }

    pub fn rules(&self) -> impl Iterator<Item = (&VarId, &Polynomial<C>)> {
        self.rules.iter()
    }

    /// Parses `a -> a*b; b -> b` or `c[i] -> c[i+1]; f[i] -> f[i+1]`.
    pub fn parse(text: &str) -> Result<Self, GrammarError> {
        let mut g = Self::new();
        let mut seen = BTreeSet::new();
        for raw in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = |msg: &str| GrammarError::BadRule {
                rule: raw.to_string(),
                msg: msg.to_string(),
            };
            let (lhs, rhs) = raw.split_once("->").ok_or_else(|| bad("missing `->`"))?;
            let lhs = lhs.trim();
            if !seen.insert(lhs.replace(' ', "")) {
                return Err(GrammarError::DuplicateRule(lhs.to_string()));
            }
            if let Some(name) = lhs.strip_suffix("[i]") {
                g = g.with_family(name.trim(), rhs)?;
            } else {
                let v: VarId = lhs.parse()?;
                let image = crate::poly::parse_poly(rhs)?;
                g.rules.insert(v, image);
            }
        }
        g.validate()?;
        Ok(g)
    }

    /// Checks that every variable in a rule image has a rule.
    pub fn validate(&self) -> Result<(), GrammarError> {
        for image in self.rules.values() {
            for v in image.variables() {
                if !self.covers(v) {
                    return Err(GrammarError::UnknownVariable(v));
                }
            }
        }
        for terms in self.families.values() {
            for t in terms {
                for f in &t.factors {
                    let covered = match f.index {
                        IndexExpr::None => self.covers(VarId::from_parts(f.name, None)),
                        IndexExpr::Fixed(i) => self.covers(VarId::from_parts(f.name, Some(i))),
                        IndexExpr::Rel(_) => self.families.contains_key(&f.name),
                    };
                    if !covered {
                        return Err(GrammarError::UnknownVariable(VarId::from_parts(
                            f.name, None,
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn covers(&self, v: VarId) -> bool {
        self.rules.contains_key(&v)
            || (v.index().is_some() && self.families.contains_key(&v.name()))
    }

    /// The image `D(v)`.
    pub fn image(&self, v: VarId) -> Result<Polynomial<C>, GrammarError> {
        if let Some(p) = self.rules.get(&v) {
            return Ok(p.clone());
        }
        let (Some(i), Some(terms)) = (v.index(), self.families.get(&v.name())) else {
            return Err(GrammarError::UnknownVariable(v));
        };
        let mut out = Polynomial::zero();
        for t in terms {
            let mut fs = Vec::with_capacity(t.factors.len());
            for f in &t.factors {
                let index = match f.index {
                    IndexExpr::None => None,
                    IndexExpr::Fixed(k) => Some(k),
                    IndexExpr::Rel(off) => {
                        let k = i as i64 + off;
                        if k < 0 || k > self.max_index as i64 {
                            return Err(GrammarError::IndexOverflow {
                                var: v,
                                needed: k,
                                max: self.max_index,
                            });
                        }
                        Some(k as u32)
                    }
                };
                fs.push((VarId::from_parts(f.name, index), f.exp));
            }
            out.add_term(Monomial::from_factors(fs), t.coeff.clone());
        }
        Ok(out)
    }

    /// One application of `D_G`, extended by linearity and the product rule.
    pub fn derive(&self, p: &Polynomial<C>) -> Result<Polynomial<C>, GrammarError> {
        let mut cache: BTreeMap<VarId, Polynomial<C>> = BTreeMap::new();
        self.derive_cached(p, &mut cache)
    }

    fn derive_cached(
        &self,
        p: &Polynomial<C>,
        cache: &mut BTreeMap<VarId, Polynomial<C>>,
    ) -> Result<Polynomial<C>, GrammarError> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            for &(v, e) in m.factors() {
                if !cache.contains_key(&v) {
                    cache.insert(v, self.image(v)?);
                }
                let image = &cache[&v];
                if image.is_zero() {
                    continue;
                }
                let rest = m.div(&Monomial::var(v));
                let k = c.clone() * C::from(e as i64);
                for (mi, ci) in image.terms() {
                    out.add_term(rest.mul(mi), k.clone() * ci.clone());
                }
            }
        }
        Ok(out)
    }

    /// `D_G^n(p)`.
    pub fn derive_n(&self, p: &Polynomial<C>, n: usize) -> Result<Polynomial<C>, GrammarError> {
        Ok(self.derive_seq(p, n)?.pop().expect("nonempty"))
    }

    /// `[p, D(p), ..., D^n(p)]`.
    pub fn derive_seq(
        &self,
        p: &Polynomial<C>,
        n: usize,
    ) -> Result<Vec<Polynomial<C>>, GrammarError> {
        let mut cache = BTreeMap::new();
        let mut out = Vec::with_capacity(n + 1);
        out.push(p.clone());
        for _ in 0..n {
            let next = self.derive_cached(out.last().expect("nonempty"), &mut cache)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Normal-ordered form of `(w · D_G)^n`.
    pub fn op_power(&self, w: &Polynomial<C>, n: usize) -> Result<NormalOp<C>, GrammarError> {
        let mut op = NormalOp::identity();
        for _ in 0..n {
            op = op.precompose_weighted(self, w)?;
        }
        Ok(op)
    }

    /// `[(wD)^0, ..., (wD)^n]`.
    pub fn op_powers(
        &self,
        w: &Polynomial<C>,
        n: usize,
    ) -> Result<Vec<NormalOp<C>>, GrammarError> {
        let mut out = vec![NormalOp::identity()];
        for _ in 0..n {
            let next = out.last().expect("nonempty").precompose_weighted(self, w)?;
            out.push(next);
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for Grammar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, p) in &self.rules {
            parts.push(format!("{v} -> {p}"));
        }
        for (name, terms) in &self.families {
            parts.push(format!("{name}[i] -> {}", render_template(terms)));
        }
        f.write_str(&parts.join("; "))
    }
}

fn render_template<C: Coeff>(terms: &[RawTerm<C>]) -> String {
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        if k > 0 {
            s.push_str(if neg { " - " } else { " + " });
        } else if neg {
            s.push('-');
        }
        let abs = t.coeff.abs();
        let mut pieces = Vec::new();
        if !abs.is_one() || t.factors.is_empty() {
            pieces.push(abs.to_string());
        }
        for f in &t.factors {
            let mut piece = f.name.to_string();
            match f.index {
                IndexExpr::None => {}
                IndexExpr::Fixed(i) => piece.push_str(&format!("[{i}]")),
                IndexExpr::Rel(0) => piece.push_str("[i]"),
                IndexExpr::Rel(o) if o > 0 => piece.push_str(&format!("[i+{o}]")),
                IndexExpr::Rel(o) => piece.push_str(&format!("[i{o}]")),
            }
            if f.exp != 1 {
                piece.push_str(&format!("^{}", f.exp));
            }
            pieces.push(piece);
        }
        s.push_str(&pieces.join("*"));
    }
    s
}

/// `Σ_k P_k · D_G^k` with the weight absorbed into each `P_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalOp<C: Coeff> {
    by_order: BTreeMap<usize, Polynomial<C>>,
}

impl<C: Coeff> NormalOp<C> {
    pub fn identity() -> Self {
        let mut by_order = BTreeMap::new();
        by_order.insert(0, Polynomial::one());
        NormalOp { by_order }
    }

    pub fn from_orders<I: IntoIterator<Item = (usize, Polynomial<C>)>>(it: I) -> Self {
        let mut by_order: BTreeMap<usize, Polynomial<C>> = BTreeMap::new();
        for (k, p) in it {
            *by_order.entry(k).or_default() += &p;
        }
        by_order.retain(|_, p| !p.is_zero());
        NormalOp { by_order }
    }

    pub fn coefficient(&self, k: usize) -> Polynomial<C> {
        self.by_order.get(&k).cloned().unwrap_or_default()
    }

    pub fn orders(&self) -> impl Iterator<Item = (usize, &Polynomial<C>)> {
        self.by_order.iter().map(|(k, p)| (*k, p))
    }

    pub fn max_order(&self) -> usize {
        self.by_order.keys().next_back().copied().unwrap_or(0)
    }

    /// `(w D) ∘ self`, using `(wD)(P D^k) = w D(P) D^k + w P D^{k+1}`.
    pub fn precompose_weighted(
        &self,
        g: &Grammar<C>,
        w: &Polynomial<C>,
    ) -> Result<Self, GrammarError> {
        let mut parts = Vec::with_capacity(2 * self.by_order.len());
        for (k, p) in &self.by_order {
            parts.push((*k, w * &g.derive(p)?));
            parts.push((k + 1, w * p));
        }
        Ok(Self::from_orders(parts))
    }

    /// `Σ_k P_k · D_G^k(target)`.
    pub fn apply(&self, g: &Grammar<C>, target: &Polynomial<C>) -> Result<Polynomial<C>, GrammarError> {
        let seq = g.derive_seq(target, self.max_order())?;
        Ok(self
            .by_order
            .iter()
            .map(|(k, p)| p * &seq[*k])
            .sum())
    }

    /// `P_k / w^k` for a single-term weight, when the division is exact.
    pub fn unweighted(&self, k: usize, w: &Polynomial<C>) -> Option<Polynomial<C>> {
        let (m, c) = w.as_term()?;
        let k32 = i32::try_from(k).ok()?;
        let mut c_pow = C::one();
        for _ in 0..k {
            c_pow = c_pow * c.clone();
        }
        let inv = Monomial::one().div(&m.pow(k32));
        self.coefficient(k)
            .exact_div_scalar(&c_pow)
            .map(|p| p.mul_monomial(&inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }
    fn g(s: &str) -> Grammar<num_bigint::BigInt> {
        Grammar::parse(s).unwrap()
    }

    #[test]
    fn stirling_grammar() {
        let gr = g("a -> a*b; b -> b");
        assert_eq!(gr.derive(&p("a")).unwrap(), p("a*b"));
        assert!(gr.derive(&p("7")).unwrap().is_zero());
        // S(3,k) = 1, 3, 1
        assert_eq!(gr.derive_n(&p("a"), 3).unwrap(), p("a*b + 3*a*b^2 + a*b^3"));
    }

    #[test]
    fn andre_third_derivative() {
        let gr = g("x -> x*y; y -> x");
        assert_eq!(gr.derive_n(&p("y"), 3).unwrap(), p("x*y^2 + x^2"));
        assert_eq!(gr.derive_n(&p("y"), 0).unwrap(), p("y"));
    }

    #[test]
    fn laurent_rule() {
        let gr = g("x -> x^-1; y -> 1");
        assert_eq!(gr.derive(&p("x^-2*y")).unwrap(), p("-2*x^-4*y + x^-2"));
    }

    #[test]
    fn unknown_variable() {
        let gr = g("a -> a");
        assert_eq!(
            gr.derive(&p("b")),
            Err(GrammarError::UnknownVariable(VarId::plain("b")))
        );
        assert!(Grammar::<i64>::parse("a -> b").is_err());
        assert!(Grammar::<i64>::parse("a -> a; a -> 1").is_err());
        assert!(Grammar::<i64>::parse("a => a").is_err());
    }

    #[test]
    fn indexed_family_and_cap() {
        let gr = g("c[i] -> c[i+1]; f[i] -> f[i+1]").with_max_index(3);
        assert_eq!(gr.derive(&p("c[0]*f[2]")).unwrap(), p("c[1]*f[2] + c[0]*f[3]"));
        assert!(matches!(
            gr.derive(&p("c[3]")),
            Err(GrammarError::IndexOverflow { needed: 4, .. })
        ));
        let yx = g("x[i] -> x[0]*x[i+1]");
        assert_eq!(yx.derive_n(&p("x[0]"), 2).unwrap(), p("x[0]*x[1]^2 + x[0]^2*x[2]"));
    }

    #[test]
    fn grammar_display_round_trips() {
        let gr = g("a -> a*b^2; b -> -a^2*b; x[i] -> x[0]*x[i+1]");
        let again: Grammar<num_bigint::BigInt> = Grammar::parse(&gr.to_string()).unwrap();
        assert_eq!(gr, again);
    }

    #[test]
    fn op_power_examples() {
        let gp = g("x -> y; y -> y");
        let op = gp.op_power(&p("x"), 4).unwrap();
        assert_eq!(op.coefficient(1), p("x*y^3 + 4*x^2*y^2 + x^3*y"));
        assert_eq!(op.coefficient(2), p("7*x^2*y^2 + 4*x^3*y"));
        assert_eq!(op.coefficient(3), p("6*x^3*y"));
        assert_eq!(op.coefficient(4), p("x^4"));
        assert!(op.coefficient(0).is_zero());
        assert_eq!(gp.op_power(&p("x"), 0).unwrap(), NormalOp::identity());

        let gpp = g("x -> 1; y -> 1");
        let op = gpp.op_power(&p("x*y"), 3).unwrap();
        assert_eq!(op.unweighted(1, &p("x*y")).unwrap(), p("y^2 + 4*x*y + x^2"));
        assert_eq!(op.coefficient(1), p("x*y^3 + 4*x^2*y^2 + x^3*y"));
    }

    #[test]
    fn op_apply_matches_iteration() {
        let gr = g("x -> 1");
        let f = p("x^3 + 2*x");
        let op = gr.op_power(&p("x"), 3).unwrap();
        let mut direct = f.clone();
        for _ in 0..3 {
            direct = p("x") * gr.derive(&direct).unwrap();
        }
        assert_eq!(op.apply(&gr, &f).unwrap(), direct);
        assert_eq!(NormalOp::identity().apply(&gr, &f).unwrap(), f);
    }
}
