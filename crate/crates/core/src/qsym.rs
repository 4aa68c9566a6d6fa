//! Homogeneous quasisymmetric functions in the fundamental basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat};
use crate::shape::{partitions, Composition, Partition, SkewPartition};
use crate::symgrp::{longest_element, DescentSet, Permutation};
use crate::tabx::{enumerate_syt, syt_descent_comp};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSym {
    degree: usize,
    terms: BTreeMap<Composition, Rat>,
}

impl QSym {
    pub fn zero(degree: usize) -> QSym {
        QSym { degree, terms: BTreeMap::new() }
    }

    pub fn one() -> QSym {
        QSym::f(Composition::empty())
    }

    pub fn f(alpha: Composition) -> QSym {
        QSym { degree: alpha.size(), terms: BTreeMap::from([(alpha, Rat::ONE)]) }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Composition, Rat)>) -> Result<QSym> {
        let mut q = QSym::zero(degree);
        for (c, v) in terms {
            if c.size() != degree {
                return Err(Error::invalid(format!("{c} is not a composition of {degree}")));
            }
            q.add_term(c, &v);
        }
        Ok(q)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> Rat {
        self.terms.get(alpha).cloned().unwrap_or(Rat::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: &Rat) {
        assert_eq!(alpha.size(), self.degree, "degree mismatch");
        let e = self.terms.entry(alpha.clone()).or_insert(Rat::ZERO);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn add(&self, other: &QSym) -> QSym {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &QSym) -> QSym {
        self.add(&other.scale(&Rat::int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> QSym {
        let mut out = QSym::zero(self.degree);
        for (a, v) in &self.terms {
            out.add_term(a.clone(), &(v * c));
        }
        out
    }

    fn map_comps(&self, f: impl Fn(&Composition) -> Composition) -> QSym {
        let mut out = QSym::zero(self.degree);
        for (a, v) in &self.terms {
            out.add_term(f(a), v);
        }
        out
    }

    /// ψ(F_α) = F_{α^c}
    pub fn psi(&self) -> QSym {
        self.map_comps(Composition::complement)
    }

    /// ρ(F_α) = F_{α^r}
    pub fn rho(&self) -> QSym {
        self.map_comps(Composition::reverse)
    }

    pub fn involution(&self, which: Involution) -> QSym {
        match which {
            Involution::Psi => self.psi(),
            Involution::Rho => self.rho(),
        }
    }

    pub fn mul(&self, other: &QSym) -> QSym {
        f_product(self, other)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "terms": self.terms.iter().map(|(a, c)| serde_json::json!({"comp": a, "coef": c.to_string()})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<QSym> {
        let degree = v["degree"].as_u64().ok_or_else(|| Error::invalid("qsym: missing degree"))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| Error::invalid("qsym: missing terms"))?;
        let mut out = Vec::new();
        for t in terms {
            let comp: Composition = serde_json::from_value(t["comp"].clone())
                .map_err(|e| Error::invalid(format!("qsym comp: {e}")))?;
            let coef: Rat = serde_json::from_value(t["coef"].clone())
                .map_err(|e| Error::invalid(format!("qsym coef: {e}")))?;
            out.push((comp, coef));
        }
        QSym::from_terms(degree, out)
    }
}

impl fmt::Display for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| if c.is_one() { format!("F{a}") } else { format!("{c}*F{a}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Psi,
    Rho,
}

/// Minimal-length word whose descent set is exactly set(α).
pub fn min_representative(alpha: &Composition) -> Permutation {
    longest_element(alpha.size(), &alpha.to_set())
}

/// Maximal-length word whose descent set is exactly set(α).
pub fn max_representative(alpha: &Composition) -> Permutation {
    let n = alpha.size();
    Permutation::longest(n).compose(&longest_element(n, &alpha.to_set().complement()))
}

fn word_descent_comp(w: &[u8]) -> Composition {
    let n = w.len();
    let members = (1..n).filter(|&i| w[i - 1] > w[i]);
    Composition::from_set(&DescentSet::new(n, members).expect("in range"))
}

/// F_α F_β as a sum over shuffles of representative words.
pub fn shuffle_fundamental(
    alpha: &Composition,
    beta: &Composition,
    rep: impl Fn(&Composition) -> Permutation,
) -> QSym {
    let (m, n) = (alpha.size(), beta.size());
    let u = rep(alpha);
    let v: Vec<u8> = rep(beta).word().iter().map(|&x| x + m as u8).collect();
    let mut out = QSym::zero(m + n);
    let mut word = Vec::with_capacity(m + n);
    fn rec(u: &[u8], v: &[u8], word: &mut Vec<u8>, out: &mut QSym) {
        if u.is_empty() && v.is_empty() {
            out.add_term(word_descent_comp(word), &Rat::ONE);
            return;
        }
        if let Some((&a, rest)) = u.split_first() {
            word.push(a);
            rec(rest, v, word, out);
            word.pop();
        }
        if let Some((&b, rest)) = v.split_first() {
            word.push(b);
            rec(u, rest, word, out);
            word.pop();
        }
    }
    rec(u.word(), &v, &mut word, &mut out);
    out
}

pub fn f_product_with(f: &QSym, g: &QSym, rep: impl Fn(&Composition) -> Permutation + Copy) -> QSym {
    let mut out = QSym::zero(f.degree + g.degree);
    for (a, c) in &f.terms {
        for (b, d) in &g.terms {
            let cd = c * d;
            for (k, v) in shuffle_fundamental(a, b, rep).terms {
                out.add_term(k, &(&v * &cd));
            }
        }
    }
    out
}

pub fn f_product(f: &QSym, g: &QSym) -> QSym {
    f_product_with(f, g, min_representative)
}

/// s_{λ/μ} = Σ_{T ∈ SYT(λ/μ)} F_{comp(T)}
pub fn schur_to_f(shape: &SkewPartition) -> QSym {
    let mut out = QSym::zero(shape.size());
    for t in enumerate_syt(shape) {
        out.add_term(syt_descent_comp(&t), &Rat::ONE);
    }
    out
}

pub fn schur_straight(lambda: &[usize]) -> QSym {
    schur_to_f(&SkewPartition::straight(lambda.to_vec()).expect("partition"))
}

struct SchurBasis {
    parts: Vec<Partition>,
    comps: Vec<Composition>,
    matrix: Mat,
}

fn schur_basis(n: usize) -> Arc<SchurBasis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SchurBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let parts = partitions(n);
    let comps = Composition::all(n);
    let cols: Vec<QSym> = parts.iter().map(|p| schur_straight(p)).collect();
    let matrix = Mat::from_fn(comps.len(), parts.len(), |r, c| cols[c].coeff(&comps[r]));
    let b = Arc::new(SchurBasis { parts, comps, matrix });
    cache.lock().unwrap().insert(n, b.clone());
    b
}

/// Coefficients c_λ with f = Σ c_λ s_λ, or `None` when f is not symmetric.
pub fn schur_expand(f: &QSym) -> Option<BTreeMap<Partition, Rat>> {
    let b = schur_basis(f.degree);
    let rhs: Vec<Rat> = b.comps.iter().map(|a| f.coeff(a)).collect();
    let x = b.matrix.solve(&rhs)?;
    Some(b.parts.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect())
}

pub fn is_symmetric(f: &QSym) -> bool {
    schur_expand(f).is_some()
}

pub fn schur_rank(n: usize) -> usize {
    schur_basis(n).matrix.rank()
}

/// Σ c_λ s_λ in the F basis.
pub fn schur_sum(coeffs: &BTreeMap<Partition, Rat>, degree: usize) -> QSym {
    let mut out = QSym::zero(degree);
    for (p, c) in coeffs {
        out = out.add(&schur_straight(p).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{basic_shapes, partition_transpose};
    use crate::tabx::rectify;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> SkewPartition {
        s.parse().unwrap()
    }

    fn fs(items: &[&str]) -> QSym {
        let n = c(items[0]).size();
        QSym::from_terms(n, items.iter().map(|s| (c(s), Rat::ONE))).unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(f_product(&QSym::f(c("(1)")), &QSym::f(c("(1)"))), fs(&["(2)", "(1,1)"]));
        let f = fs(&["(2,1)", "(1,2)"]);
        assert_eq!(f_product(&f, &QSym::one()), f);
        let lhs = f_product(&schur_straight(&[2]), &schur_straight(&[1]));
        assert_eq!(lhs, schur_straight(&[3]).add(&schur_straight(&[2, 1])));
    }

    #[test]
    fn representatives_have_exact_descents() {
        for n in 1..=6 {
            for a in Composition::all(n) {
                assert_eq!(word_descent_comp(min_representative(&a).word()), a);
                assert_eq!(word_descent_comp(max_representative(&a).word()), a);
            }
        }
    }

    #[test]
    fn product_is_representative_independent() {
        for m in 1..=3 {
            for n in 1..=3 {
                for a in Composition::all(m) {
                    for b in Composition::all(n) {
                        assert_eq!(
                            shuffle_fundamental(&a, &b, min_representative),
                            shuffle_fundamental(&a, &b, max_representative)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_commutative_associative() {
        let basis = |n: usize| Composition::all(n).into_iter().map(QSym::f).collect::<Vec<_>>();
        for a in basis(3).iter().step_by(2) {
            for b in basis(3).iter().step_by(3) {
                assert_eq!(f_product(a, b), f_product(b, a));
                for d in basis(2) {
                    assert_eq!(f_product(&f_product(a, b), &d), f_product(a, &f_product(b, &d)));
                }
            }
        }
    }

    #[test]
    fn involutions_are_algebra_maps() {
        let basis = |n: usize| Composition::all(n).into_iter().map(QSym::f).collect::<Vec<_>>();
        for a in basis(3) {
            for b in basis(2) {
                let p = f_product(&a, &b);
                assert_eq!(p.psi(), f_product(&a.psi(), &b.psi()));
                assert_eq!(p.rho(), f_product(&a.rho(), &b.rho()));
                assert_eq!(p.psi().rho(), p.rho().psi());
                assert_eq!(p.rho().rho(), p);
            }
        }
        assert_eq!(QSym::f(c("(1,2)")).psi(), QSym::f(c("(2,1)")));
    }

    #[test]
    fn schur_to_f_examples() {
        assert_eq!(schur_to_f(&sh("(2,1)")), fs(&["(2,1)", "(1,2)"]));
        assert_eq!(schur_to_f(&sh("(4)")), QSym::f(c("(4)")));
        let s = schur_to_f(&sh("(4,2,1)/(2,1)"));
        let total: Rat = s.terms().values().cloned().sum();
        assert_eq!(total, Rat::int(12));
        let e = schur_expand(&s).unwrap();
        let expect: BTreeMap<Partition, Rat> = [
            (vec![4], Rat::int(1)),
            (vec![3, 1], Rat::int(2)),
            (vec![2, 2], Rat::int(1)),
            (vec![2, 1, 1], Rat::int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, expect);
    }

    #[test]
    fn schur_expand_examples() {
        let e = schur_expand(&schur_straight(&[2, 1])).unwrap();
        assert_eq!(e, BTreeMap::from([(vec![2, 1], Rat::ONE)]));
        let f = fs(&["(1,2)", "(2,1)", "(1,1,1)"]);
        let e = schur_expand(&f).unwrap();
        assert_eq!(e, BTreeMap::from([(vec![2, 1], Rat::ONE), (vec![1, 1, 1], Rat::ONE)]));
        assert_eq!(f, schur_straight(&[3]).add(&schur_straight(&[2, 1])).psi());
        assert!(schur_expand(&QSym::f(c("(2,1)"))).is_none());
    }

    #[test]
    fn schur_functions_independent() {
        for n in 1..=8 {
            assert_eq!(schur_rank(n), partitions(n).len());
        }
    }

    #[test]
    fn psi_of_schur_is_transpose() {
        for n in 1..=6 {
            for p in partitions(n) {
                assert_eq!(schur_straight(&p).psi(), schur_straight(&partition_transpose(&p)));
            }
        }
    }

    #[test]
    fn skew_expansion_matches_rectification_shapes() {
        for n in 1..=6 {
            for s in basic_shapes(n) {
                let e = schur_expand(&schur_to_f(&s)).unwrap();
                let mut tally: BTreeMap<Partition, i64> = BTreeMap::new();
                for t in enumerate_syt(&s) {
                    *tally.entry(rectify(&t).unwrap().shape().lambda().to_vec()).or_default() += 1;
                }
                let oracle: BTreeMap<Partition, Rat> = tally
                    .into_iter()
                    .map(|(p, k)| {
                        let f = enumerate_syt(&SkewPartition::straight(p.clone()).unwrap()).len() as i64;
                        assert_eq!(k % f, 0);
                        (p, Rat::int(k / f))
                    })
                    .collect();
                assert_eq!(e, oracle, "{s}");
                assert!(e.values().all(|v| v.is_integer() && v.is_positive()));
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let f = fs(&["(1,2)", "(2,1)"]).scale(&Rat::new(3, 2));
        let j = f.to_json();
        assert_eq!(j["terms"][0]["coef"], "3/2");
        assert_eq!(QSym::from_json(&j).unwrap(), f);
    }
}
