//! Finite-dimensional modules over the 0-Hecke algebra H_n(0), stored as
//! exact generator matrices A_1..A_{n-1}.

mod character;
mod cover;
mod hom;
mod restrict;
mod twist;

pub use character::{composition_character, radical, radical_layers, socle, top, RadicalTopSocle};
pub use cover::{proj_cover, inj_hull, CoverWitness};
pub use hom::{end_semisimple_dim, hom_space, intertwines, is_indecomposable, is_isomorphic, translation_witness, IsoOutcome, ModuleMap};
pub use restrict::{restrict_blocks, verify_submodule, SubmoduleReport};
pub use twist::{twist, Twist};

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, Rat, SpMat, Vector};
use crate::poset::LabeledPoset;
use crate::qsym::QSym;
use crate::shape::{Composition, GeneralizedComposition, SkewPartition};
use crate::symgrp::{longest_element, weak_interval, DescentSet, Permutation, Side};
use crate::tabx::{enumerate_syt, BijectiveTableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Labels {
    None,
    Perms(Vec<Permutation>),
    Tableaux(Vec<BijectiveTableau>),
}

impl Labels {
    pub fn name(&self, b: usize) -> String {
        match self {
            Labels::None => format!("v{}", b + 1),
            Labels::Perms(p) => p[b].to_string(),
            Labels::Tableaux(t) => t[b].to_string(),
        }
    }

    pub fn perms(&self) -> Option<&[Permutation]> {
        match self {
            Labels::Perms(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeModule {
    n: usize,
    dim: usize,
    action: Vec<SpMat>,
    labels: Labels,
}

/// Effect of π_i on a basis vector of a combinatorial module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Fix,
    Kill,
    To(usize),
}

fn check_relations(n: usize, action: &[SpMat]) -> Result<()> {
    for (k, a) in action.iter().enumerate() {
        if a.mul(a) != *a {
            return Err(Error::Relation(format!("π_{0}π_{0} ≠ π_{0}", k + 1)));
        }
    }
    for i in 0..action.len() {
        for j in i + 1..action.len() {
            let (a, b) = (&action[i], &action[j]);
            if j == i + 1 {
                if a.mul(b).mul(a) != b.mul(a).mul(b) {
                    return Err(Error::Relation(format!(
                        "π_{0}π_{1}π_{0} ≠ π_{1}π_{0}π_{1}",
                        i + 1,
                        j + 1
                    )));
                }
            } else if a.mul(b) != b.mul(a) {
                return Err(Error::Relation(format!("π_{0}π_{1} ≠ π_{1}π_{0}", i + 1, j + 1)));
            }
        }
    }
    debug_assert_eq!(action.len(), n.saturating_sub(1));
    Ok(())
}

/// Matrices for the fix/kill/move rule on a set of permutations.
fn perm_action(n: usize, basis: &[Permutation]) -> Vec<SpMat> {
    let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(k, g)| (g, k)).collect();
    (1..n)
        .map(|i| {
            let cols = basis
                .iter()
                .map(|g| {
                    if g.has_descent(i, Side::Left) {
                        return vec![(index[g], Rat::ONE)];
                    }
                    match index.get(&g.left_mul_simple(i)) {
                        Some(&k) => vec![(k, Rat::ONE)],
                        None => Vec::new(),
                    }
                })
                .collect();
            SpMat::from_columns(basis.len(), cols)
        })
        .collect()
}

fn sort_perms(mut basis: Vec<Permutation>) -> Vec<Permutation> {
    basis.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    basis.dedup();
    basis
}

impl HeckeModule {
    /// Validates the Hecke relations.
    pub fn new(n: usize, dim: usize, action: Vec<SpMat>, labels: Labels) -> Result<HeckeModule> {
        if action.len() != n.saturating_sub(1) {
            return Err(Error::invalid(format!("expected {} generator matrices, got {}", n.saturating_sub(1), action.len())));
        }
        if action.iter().any(|a| a.nrows() != dim || a.ncols() != dim) {
            return Err(Error::invalid("generator matrices must be square of the stated dimension"));
        }
        let len = match &labels {
            Labels::None => dim,
            Labels::Perms(p) => p.len(),
            Labels::Tableaux(t) => t.len(),
        };
        if len != dim {
            return Err(Error::invalid("label count does not match dimension"));
        }
        check_relations(n, &action)?;
        Ok(HeckeModule { n, dim, action, labels })
    }

    pub(crate) fn from_parts_unchecked(n: usize, dim: usize, action: Vec<SpMat>, labels: Labels) -> HeckeModule {
        HeckeModule { n, dim, action, labels }
    }

    /// B(σ, ρ) on the left weak interval [σ, ρ]_L.
    pub fn interval(sigma: &Permutation, rho: &Permutation) -> Result<HeckeModule> {
        let iv = weak_interval(sigma, rho, Side::Left)?;
        let basis = sort_perms(iv.elements().to_vec());
        let n = sigma.n();
        Ok(HeckeModule { n, dim: basis.len(), action: perm_action(n, &basis), labels: Labels::Perms(basis) })
    }

    /// Module on ℂB with the fix/kill/move rule, rejected when a relation fails.
    pub fn from_subset(basis: &[Permutation]) -> Result<HeckeModule> {
        let Some(first) = basis.first() else {
            return Err(Error::invalid("empty basis"));
        };
        let n = first.n();
        if basis.iter().any(|g| g.n() != n) {
            return Err(Error::invalid("permutations of different sizes"));
        }
        let basis = sort_perms(basis.to_vec());
        let action = perm_action(n, &basis);
        check_relations(n, &action)?;
        Ok(HeckeModule { n, dim: basis.len(), action, labels: Labels::Perms(basis) })
    }

    /// M_P on Σ_L(P).
    pub fn poset(p: &LabeledPoset) -> Result<HeckeModule> {
        let basis = sort_perms(p.linear_extensions(Side::Left)?);
        let n = p.n();
        Ok(HeckeModule { n, dim: basis.len(), action: perm_action(n, &basis), labels: Labels::Perms(basis) })
    }

    /// X_{λ/μ} on SYT(λ/μ).
    pub fn tableau(shape: &SkewPartition) -> HeckeModule {
        let basis = enumerate_syt(shape);
        let n = shape.size();
        let index: HashMap<Vec<u8>, usize> =
            basis.iter().enumerate().map(|(k, t)| (t.entries().to_vec(), k)).collect();
        let action = (1..n)
            .map(|i| {
                let cols = basis
                    .iter()
                    .enumerate()
                    .map(|(k, t)| {
                        let (a, b) = (t.cell_of(i).1, t.cell_of(i + 1).1);
                        if a < b {
                            vec![(k, Rat::ONE)]
                        } else if a == b {
                            Vec::new()
                        } else {
                            let swapped: Vec<u8> = t
                                .entries()
                                .iter()
                                .map(|&v| match v as usize {
                                    v if v == i => (i + 1) as u8,
                                    v if v == i + 1 => i as u8,
                                    v => v as u8,
                                })
                                .collect();
                            vec![(index[&swapped], Rat::ONE)]
                        }
                    })
                    .collect();
                SpMat::from_columns(basis.len(), cols)
            })
            .collect();
        HeckeModule { n, dim: basis.len(), action, labels: Labels::Tableaux(basis) }
    }

    /// P_𝛂 = B(w_0(𝛂_•^c), w_0·w_0(𝛂_⊙)).
    pub fn projective(g: &GeneralizedComposition) -> Result<HeckeModule> {
        let (bottom, top) = projective_bounds(g);
        HeckeModule::interval(&bottom, &top)
    }

    /// The simple module F_α: π_i acts by 0 on i ∈ set(α) and by 1 otherwise.
    pub fn simple(alpha: &Composition) -> HeckeModule {
        let n = alpha.size();
        let set = alpha.to_set();
        let action = (1..n)
            .map(|i| if set.contains(i) { SpMat::zeros(1, 1) } else { SpMat::identity(1) })
            .collect();
        let label = longest_element(n, &set.complement());
        HeckeModule { n, dim: 1, action, labels: Labels::Perms(vec![label]) }
    }

    pub fn direct_sum(parts: &[&HeckeModule]) -> Result<HeckeModule> {
        let Some(first) = parts.first() else {
            return Err(Error::invalid("empty direct sum"));
        };
        let n = first.n;
        if parts.iter().any(|m| m.n != n) {
            return Err(Error::invalid("direct sum of modules over different H_n(0)"));
        }
        let action = (0..n.saturating_sub(1))
            .map(|i| SpMat::block_diag(&parts.iter().map(|m| &m.action[i]).collect::<Vec<_>>()))
            .collect();
        let dim = parts.iter().map(|m| m.dim).sum();
        Ok(HeckeModule { n, dim, action, labels: Labels::None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// A_i for 1 ≤ i ≤ n-1.
    pub fn action(&self, i: usize) -> &SpMat {
        &self.action[i - 1]
    }

    pub fn matrices(&self) -> &[SpMat] {
        &self.action
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<HeckeModule> {
        let len = match &labels {
            Labels::None => self.dim,
            Labels::Perms(p) => p.len(),
            Labels::Tableaux(t) => t.len(),
        };
        if len != self.dim {
            return Err(Error::invalid("label count does not match dimension"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn check_relations(&self) -> Result<()> {
        check_relations(self.n, &self.action)
    }

    /// Per-generator moves when every column of every A_i is zero or a unit vector.
    pub fn combinatorial_moves(&self) -> Option<Vec<Vec<Move>>> {
        let mut out = vec![Vec::with_capacity(self.action.len()); self.dim];
        for a in &self.action {
            for (b, moves) in out.iter_mut().enumerate() {
                let m = match a.column(b) {
                    [] => Move::Kill,
                    [(r, v)] if v.is_one() => {
                        if *r == b {
                            Move::Fix
                        } else {
                            Move::To(*r)
                        }
                    }
                    _ => return None,
                };
                moves.push(m);
            }
        }
        Some(out)
    }

    /// Action on the invariant subspace spanned by `vectors`, in the echelon basis.
    pub fn submodule(&self, vectors: &[Vector]) -> Result<(HeckeModule, Echelon)> {
        let ech = Echelon::from_vectors(self.dim, vectors.iter().cloned());
        let m = self.restrict_to(&ech)?;
        Ok((m, ech))
    }

    pub(crate) fn restrict_to(&self, ech: &Echelon) -> Result<HeckeModule> {
        let d = ech.rank();
        let mut action = Vec::with_capacity(self.action.len());
        for (i, a) in self.action.iter().enumerate() {
            let mut cols = Vec::with_capacity(d);
            for v in ech.basis() {
                let w = a.mul_vec(v);
                let c = ech
                    .coordinates(&w)
                    .ok_or_else(|| Error::Relation(format!("subspace not closed under π_{}", i + 1)))?;
                cols.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
            }
            action.push(SpMat::from_columns(d, cols));
        }
        Ok(HeckeModule { n: self.n, dim: d, action, labels: Labels::None })
    }

    /// Action on V / W for an invariant subspace W; basis = non-pivot coordinates.
    pub(crate) fn quotient_by(&self, ech: &Echelon) -> HeckeModule {
        let free: Vec<usize> = (0..self.dim).filter(|c| !ech.pivots().contains(c)).collect();
        let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols = free
                    .iter()
                    .map(|&c| {
                        let mut e = vec![Rat::ZERO; self.dim];
                        e[c] = Rat::ONE;
                        let w = ech.reduce(a.mul_vec(&e));
                        w.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(r, x)| (pos[&r], x)).collect()
                    })
                    .collect();
                SpMat::from_columns(free.len(), cols)
            })
            .collect();
        HeckeModule { n: self.n, dim: free.len(), action, labels: Labels::None }
    }

    /// Smallest invariant subspace containing `seeds`.
    pub fn generated_submodule(&self, seeds: impl IntoIterator<Item = Vector>) -> Echelon {
        let mut ech = Echelon::new(self.dim);
        let mut queue: Vec<Vector> = Vec::new();
        for v in seeds {
            if ech.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for a in &self.action {
                let w = a.mul_vec(&v);
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        ech
    }

    /// ch via the combinatorial basis: Σ_b F_{comp(D_b)^c}, D_b = {i : π_i b = b}.
    /// Requires unit-or-zero columns and an acyclic move graph.
    pub fn characteristic(&self) -> Result<QSym> {
        let moves = self
            .combinatorial_moves()
            .ok_or_else(|| Error::invalid("module has no combinatorial basis"))?;
        let mut indeg = vec![0usize; self.dim];
        for ms in &moves {
            for m in ms {
                if let Move::To(t) = m {
                    indeg[*t] += 1;
                }
            }
        }
        let mut stack: Vec<usize> = (0..self.dim).filter(|&b| indeg[b] == 0).collect();
        let mut seen = 0;
        while let Some(b) = stack.pop() {
            seen += 1;
            for m in &moves[b] {
                if let Move::To(t) = m {
                    indeg[*t] -= 1;
                    if indeg[*t] == 0 {
                        stack.push(*t);
                    }
                }
            }
        }
        if seen != self.dim {
            return Err(Error::invalid("combinatorial action graph has a cycle"));
        }
        let mut ch = QSym::zero(self.n);
        for ms in &moves {
            let fixed = (1..self.n).filter(|&i| ms[i - 1] == Move::Fix);
            let d = DescentSet::new(self.n, fixed).expect("in range");
            ch.add_term(Composition::from_set(&d.complement()), &Rat::ONE);
        }
        Ok(ch)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let matrices: Vec<Vec<Vec<String>>> = self
            .action
            .iter()
            .map(|a| a.to_dense().to_rows().iter().map(|r| r.iter().map(Rat::to_string).collect()).collect())
            .collect();
        let labels = match &self.labels {
            Labels::None => serde_json::Value::Null,
            Labels::Perms(p) => serde_json::to_value(p).expect("serializable"),
            Labels::Tableaux(t) => serde_json::Value::Array(t.iter().map(BijectiveTableau::to_json).collect()),
        };
        serde_json::json!({"n": self.n, "dim": self.dim, "matrices": matrices, "labels": labels})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<HeckeModule> {
        let n = v["n"].as_u64().ok_or_else(|| Error::invalid("module: missing n"))? as usize;
        let dim = v["dim"].as_u64().ok_or_else(|| Error::invalid("module: missing dim"))? as usize;
        let mats: Vec<Vec<Vec<Rat>>> = serde_json::from_value(v["matrices"].clone())
            .map_err(|e| Error::invalid(format!("module matrices: {e}")))?;
        let mut action = Vec::with_capacity(mats.len());
        for rows in mats {
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(Error::invalid("module matrix has wrong size"));
            }
            action.push(SpMat::from_dense(&Mat::from_rows(rows)));
        }
        let labels = match &v["labels"] {
            serde_json::Value::Null => Labels::None,
            serde_json::Value::Array(items) if items.first().is_some_and(|x| x.get(0).is_some_and(|y| y.is_array())) => {
                Labels::Tableaux(items.iter().map(BijectiveTableau::from_json).collect::<Result<_>>()?)
            }
            other => Labels::Perms(
                serde_json::from_value(other.clone()).map_err(|e| Error::invalid(format!("module labels: {e}")))?,
            ),
        };
        HeckeModule::new(n, dim, action, labels)
    }

    /// Action digraph with loops and kills annotated by generator, as in the figures.
    pub fn to_dot(&self) -> Result<String> {
        let moves = self
            .combinatorial_moves()
            .ok_or_else(|| Error::invalid("DOT export needs a combinatorial basis"))?;
        let mut s = String::from("digraph module {\n  rankdir=BT;\n");
        for (b, ms) in moves.iter().enumerate() {
            let fixed: Vec<String> = (1..self.n).filter(|&i| ms[i - 1] == Move::Fix).map(|i| format!("π_{i}")).collect();
            let killed: Vec<String> = (1..self.n).filter(|&i| ms[i - 1] == Move::Kill).map(|i| format!("π_{i}")).collect();
            writeln!(s, "  b{b} [label=\"{}\"];", self.labels.name(b)).unwrap();
            if !fixed.is_empty() {
                writeln!(s, "  b{b} -> b{b} [label=\"{}\"];", fixed.join(", ")).unwrap();
            }
            if !killed.is_empty() {
                writeln!(s, "  z{b} [label=\"0\", shape=plaintext];").unwrap();
                writeln!(s, "  b{b} -> z{b} [label=\"{}\"];", killed.join(", ")).unwrap();
            }
            for i in 1..self.n {
                if let Move::To(t) = ms[i - 1] {
                    writeln!(s, "  b{b} -> b{t} [label=\"π_{i}\"];").unwrap();
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

/// (w_0(𝛂_•^c), w_0·w_0(𝛂_⊙))
pub fn projective_bounds(g: &GeneralizedComposition) -> (Permutation, Permutation) {
    let n = g.size();
    let bottom = longest_element(n, &g.bullet().complement().to_set());
    let top = Permutation::longest(n).compose(&longest_element(n, &g.odot().to_set()));
    (bottom, top)
}
