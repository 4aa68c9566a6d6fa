//! Compositions, partitions, basic skew shapes, the star operation and
//! generalized compositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symgrp::DescentSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Composition {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn to_set(&self) -> DescentSet {
        let n = self.size();
        let mut acc = 0;
        let mut members = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            members.push(acc);
        }
        DescentSet::new(n, members).expect("partial sums lie in [n-1]")
    }

    pub fn from_set(set: &DescentSet) -> Composition {
        let n = set.n();
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in set.members() {
            parts.push(i - prev);
            prev = i;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Composition {
        Composition::from_set(&self.to_set().complement())
    }

    /// α · β
    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(&other.0).copied().collect())
    }

    /// α ⊙ β: the last part of α merges with the first part of β.
    pub fn fuse(&self, other: &Composition) -> Composition {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// All compositions of n, ordered by their descent-set bitmask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        (0..1u32 << (n - 1))
            .map(|b| Composition::from_set(&DescentSet::from_bits(n, b << 1)))
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad integer list `{s}`"))))
        .collect()
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Composition> {
        Composition::new(parse_list(s)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Composition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub type Partition = Vec<usize>;

pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition_transpose(lambda: &[usize]) -> Partition {
    let m = lambda.first().copied().unwrap_or(0);
    (0..m).map(|c| lambda.iter().filter(|&&l| l > c).count()).collect()
}

/// λ ⊴ μ in dominance order (same size assumed).
pub fn dominated(lambda: &[usize], mu: &[usize]) -> bool {
    let (mut a, mut b) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.get(i).copied().unwrap_or(0);
        b += mu.get(i).copied().unwrap_or(0);
        if a > b {
            return false;
        }
    }
    true
}

pub fn strictly_dominated(lambda: &[usize], mu: &[usize]) -> bool {
    lambda != mu && dominated(lambda, mu)
}

pub type Cell = (usize, usize);

/// A skew shape λ/μ kept in basic form: no empty rows or columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPartition {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

impl SkewPartition {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<SkewPartition> {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{lambda:?} is not a partition")));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{mu:?} is not a partition")));
        }
        if mu.len() > lambda.len() && mu[lambda.len()..].iter().any(|&m| m > 0) {
            return Err(Error::invalid("mu is not contained in lambda"));
        }
        if lambda.iter().zip(mu.iter()).any(|(l, m)| m > l) {
            return Err(Error::invalid("mu is not contained in lambda"));
        }
        let mut cells = Vec::new();
        for (r, &l) in lambda.iter().enumerate() {
            for c in mu.get(r).copied().unwrap_or(0)..l {
                cells.push((r, c));
            }
        }
        Ok(SkewPartition::from_cells_unchecked(&cells))
    }

    pub fn straight(lambda: Vec<usize>) -> Result<SkewPartition> {
        SkewPartition::new(lambda, Vec::new())
    }

    pub fn empty() -> SkewPartition {
        SkewPartition { lambda: Vec::new(), mu: Vec::new() }
    }

    /// Builds the basic shape from an arbitrary cell set that forms a
    /// (translated) skew diagram.
    pub fn from_cells(cells: &[Cell]) -> Result<SkewPartition> {
        let s = SkewPartition::from_cells_unchecked(cells);
        if s.size() != cells.iter().collect::<BTreeSet<_>>().len() {
            return Err(Error::invalid("cells do not form a skew diagram"));
        }
        let mut a: Vec<Cell> = normalize_cells(cells);
        a.sort();
        if a != s.cells() {
            return Err(Error::invalid("cells do not form a skew diagram"));
        }
        Ok(s)
    }

    fn from_cells_unchecked(cells: &[Cell]) -> SkewPartition {
        let norm = normalize_cells(cells);
        let rows = norm.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        let mut lambda = vec![0; rows];
        let mut mu = vec![usize::MAX; rows];
        for &(r, c) in &norm {
            lambda[r] = lambda[r].max(c + 1);
            mu[r] = mu[r].min(c);
        }
        for m in mu.iter_mut() {
            if *m == usize::MAX {
                *m = 0;
            }
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        SkewPartition { lambda, mu }
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    fn mu_at(&self, r: usize) -> usize {
        self.mu.get(r).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        (0..self.lambda.len()).map(|r| self.lambda[r] - self.mu_at(r)).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn num_cols(&self) -> usize {
        self.lambda.first().copied().unwrap_or(0)
    }

    pub fn is_straight(&self) -> bool {
        self.mu.is_empty()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.lambda.len() {
            for c in self.mu_at(r)..self.lambda[r] {
                out.push((r, c));
            }
        }
        out
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        r < self.lambda.len() && c >= self.mu_at(r) && c < self.lambda[r]
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.lambda.len()).map(|r| self.lambda[r] - self.mu_at(r)).collect()
    }

    /// a ⋆ b: b below-left, a above-right, meeting at a corner.
    pub fn star(&self, b: &SkewPartition) -> SkewPartition {
        if self.size() == 0 {
            return b.clone();
        }
        if b.size() == 0 {
            return self.clone();
        }
        let shift = b.num_cols();
        let rows = self.num_rows();
        let mut cells: Vec<Cell> = self.cells().into_iter().map(|(r, c)| (r, c + shift)).collect();
        cells.extend(b.cells().into_iter().map(|(r, c)| (r + rows, c)));
        SkewPartition::from_cells_unchecked(&cells)
    }

    /// Component index of every cell (row-major order); components are
    /// numbered top to bottom.
    pub fn component_labels(&self) -> Vec<usize> {
        let cells = self.cells();
        let mut label = vec![usize::MAX; cells.len()];
        let mut next = 0;
        for start in 0..cells.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(k) = stack.pop() {
                let (r, c) = cells[k];
                let mut nbrs = vec![(r + 1, c), (r, c + 1)];
                if r > 0 {
                    nbrs.push((r - 1, c));
                }
                if c > 0 {
                    nbrs.push((r, c - 1));
                }
                for nb in nbrs {
                    if let Ok(j) = cells.binary_search(&nb) {
                        if label[j] == usize::MAX {
                            label[j] = next;
                            stack.push(j);
                        }
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Edge-connected components, ordered top to bottom.
    pub fn components(&self) -> Vec<SkewPartition> {
        let cells = self.cells();
        let labels = self.component_labels();
        let k = labels.iter().max().map_or(0, |m| m + 1);
        (0..k)
            .map(|g| {
                let members: Vec<Cell> =
                    cells.iter().zip(&labels).filter(|(_, &l)| l == g).map(|(c, _)| *c).collect();
                SkewPartition::from_cells_unchecked(&members)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_ribbon(&self) -> bool {
        !self.cells().iter().any(|&(r, c)| {
            self.contains((r + 1, c)) && self.contains((r, c + 1)) && self.contains((r + 1, c + 1))
        })
    }

    pub fn contains_disconnected_ribbon(&self) -> bool {
        self.components().windows(2).any(|w| w[0].is_ribbon() && w[1].is_ribbon())
    }

    pub fn transpose(&self) -> SkewPartition {
        let cells: Vec<Cell> = self.cells().into_iter().map(|(r, c)| (c, r)).collect();
        SkewPartition::from_cells_unchecked(&cells)
    }

    /// (λ/μ)°: rotation by 180 degrees in the bounding box.
    pub fn rotate180(&self) -> SkewPartition {
        let (h, w) = (self.num_rows(), self.num_cols());
        let cells: Vec<Cell> = self.cells().into_iter().map(|(r, c)| (h - 1 - r, w - 1 - c)).collect();
        SkewPartition::from_cells_unchecked(&cells)
    }

    pub fn bal_proj(&self) -> GeneralizedComposition {
        let blocks = self
            .components()
            .iter()
            .map(|c| Composition(c.row_lengths()))
            .collect::<Vec<_>>();
        GeneralizedComposition::new(blocks).expect("nonempty shape")
    }

    pub fn bal_inj(&self) -> GeneralizedComposition {
        self.transpose().bal_proj().complement().reverse()
    }

    pub fn bal(&self, kind: BalKind) -> GeneralizedComposition {
        match kind {
            BalKind::Proj => self.bal_proj(),
            BalKind::Inj => self.bal_inj(),
        }
    }

    pub fn predicates(&self) -> DiagramPredicates {
        let components = self.components();
        DiagramPredicates {
            connected: components.len() <= 1,
            basic: true,
            is_ribbon: self.is_ribbon(),
            contains_disconnected_ribbon: self.contains_disconnected_ribbon(),
            components,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "lambda": self.lambda, "mu": self.mu })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SkewPartition> {
        let get = |k: &str| -> Result<Vec<usize>> {
            match v.get(k) {
                None | Some(serde_json::Value::Null) => Ok(Vec::new()),
                Some(x) => serde_json::from_value(x.clone()).map_err(|e| Error::invalid(format!("{k}: {e}"))),
            }
        };
        SkewPartition::new(get("lambda")?, get("mu")?)
    }
}

fn normalize_cells(cells: &[Cell]) -> Vec<Cell> {
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
    let rows: Vec<usize> = rows.into_iter().collect();
    let cols: Vec<usize> = cols.into_iter().collect();
    let mut out: Vec<Cell> = cells
        .iter()
        .map(|&(r, c)| (rows.binary_search(&r).unwrap(), cols.binary_search(&c).unwrap()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether the raw pair λ/μ already has no empty rows or columns.
pub fn is_basic_pair(lambda: &[usize], mu: &[usize]) -> bool {
    let m = |r: usize| mu.get(r).copied().unwrap_or(0);
    let rows_ok = (0..lambda.len()).all(|r| lambda[r] > m(r));
    let w = lambda.first().copied().unwrap_or(0);
    let cols_ok = (0..w).all(|c| (0..lambda.len()).any(|r| m(r) <= c && c < lambda[r]));
    rows_ok && cols_ok
}

impl fmt::Display for SkewPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.lambda.iter().map(|x| x.to_string()).collect();
        if self.mu.is_empty() {
            write!(f, "({})", l.join(","))
        } else {
            let m: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
            write!(f, "({})/({})", l.join(","), m.join(","))
        }
    }
}

impl fmt::Debug for SkewPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SkewPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<SkewPartition> {
        let t = s.trim();
        if t.starts_with('{') {
            let v: serde_json::Value =
                serde_json::from_str(t).map_err(|e| Error::invalid(format!("bad shape JSON: {e}")))?;
            return SkewPartition::from_json(&v);
        }
        let strict = |p: &str| -> Result<Vec<usize>> {
            let p = p.trim();
            if !(p.starts_with('(') && p.ends_with(')')) {
                return Err(Error::invalid(format!("shape `{s}` must look like (l1,l2,..)/(m1,..)")));
            }
            parse_list(p)
        };
        match t.split_once('/') {
            Some((l, m)) => SkewPartition::new(strict(l)?, strict(m)?),
            None => SkewPartition::new(strict(t)?, Vec::new()),
        }
    }
}

impl Serialize for SkewPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BalKind {
    Proj,
    Inj,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramPredicates {
    pub connected: bool,
    pub basic: bool,
    pub is_ribbon: bool,
    pub components: Vec<SkewPartition>,
    pub contains_disconnected_ribbon: bool,
}

/// All basic skew shapes with n cells, sorted.
pub fn basic_shapes(n: usize) -> Vec<SkewPartition> {
    // Rows are built bottom-up as intervals [m, l); the row above must have
    // m' in [m, l] (no empty column between them) and l' >= max(l, m' + 1).
    fn rec(rem: usize, below: (usize, usize), rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewPartition>) {
        if rem == 0 {
            let lambda = rows.iter().rev().map(|r| r.1).collect();
            let mut mu: Vec<usize> = rows.iter().rev().map(|r| r.0).collect();
            while mu.last() == Some(&0) {
                mu.pop();
            }
            out.push(SkewPartition { lambda, mu });
            return;
        }
        let (bm, bl) = below;
        for m in bm..=bl {
            let lo = bl.max(m + 1);
            for l in lo..=m + rem {
                rows.push((m, l));
                rec(rem - (l - m), (m, l), rows, out);
                rows.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![SkewPartition::empty()];
    }
    for first in 1..=n {
        let mut rows = vec![(0, first)];
        rec(n - first, (0, first), &mut rows, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedComposition {
    blocks: Vec<Composition>,
}

impl GeneralizedComposition {
    pub fn new(blocks: Vec<Composition>) -> Result<GeneralizedComposition> {
        if blocks.is_empty() || blocks.iter().any(Composition::is_empty) {
            return Err(Error::invalid("generalized composition needs nonempty blocks"));
        }
        Ok(GeneralizedComposition { blocks })
    }

    pub fn single(c: Composition) -> GeneralizedComposition {
        GeneralizedComposition { blocks: vec![c] }
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Composition::size).sum()
    }

    /// 𝛂_•: concatenate all blocks.
    pub fn bullet(&self) -> Composition {
        self.blocks.iter().fold(Composition::empty(), |a, b| a.concat(b))
    }

    /// 𝛂_⊙: fuse all blocks.
    pub fn odot(&self) -> Composition {
        self.blocks.iter().fold(Composition::empty(), |a, b| a.fuse(b))
    }

    pub fn complement(&self) -> GeneralizedComposition {
        GeneralizedComposition { blocks: self.blocks.iter().map(Composition::complement).collect() }
    }

    pub fn reverse(&self) -> GeneralizedComposition {
        GeneralizedComposition { blocks: self.blocks.iter().rev().map(Composition::reverse).collect() }
    }

    /// [𝛂]: every choice of · or ⊙ at each junction.
    pub fn bracket(&self) -> Vec<Composition> {
        let k = self.blocks.len();
        let mut out = BTreeSet::new();
        for mask in 0..1u32 << (k - 1) {
            let mut acc = self.blocks[0].clone();
            for (j, b) in self.blocks[1..].iter().enumerate() {
                acc = if mask & (1 << j) != 0 { acc.fuse(b) } else { acc.concat(b) };
            }
            out.insert(acc);
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GeneralizedComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<GeneralizedComposition> {
        let t = s.trim();
        if t.starts_with("[[") || t == "[]" {
            let v: Vec<Vec<usize>> =
                serde_json::from_str(t).map_err(|e| Error::invalid(format!("bad generalized composition: {e}")))?;
            return GeneralizedComposition::new(v.into_iter().map(Composition::new).collect::<Result<_>>()?);
        }
        GeneralizedComposition::new(
            t.split(['*', '⋆']).map(|b| b.parse::<Composition>()).collect::<Result<Vec<_>>>()?,
        )
    }
}

impl Serialize for GeneralizedComposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralizedComposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Composition>::deserialize(d)?;
        GeneralizedComposition::new(blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> SkewPartition {
        s.parse().unwrap()
    }

    #[test]
    fn composition_ops() {
        assert_eq!(c("(2,2)").complement(), c("(1,2,1)"));
        assert_eq!(c("(1,2,1)").reverse(), c("(1,2,1)"));
        assert!(c("(4)").to_set().is_empty());
        assert_eq!(c("(2,1,3)").to_set().members(), vec![2, 3]);
        assert_eq!(Composition::all(4).len(), 8);
        for n in 0..=8 {
            for a in Composition::all(n) {
                assert_eq!(a.complement().complement(), a);
                assert_eq!(a.reverse().reverse(), a);
                assert_eq!(Composition::from_set(&a.to_set()), a);
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(sh("(2,2)").star(&sh("(3,2)/(1)")), sh("(5,5,3,2)/(3,3,1)"));
        assert_eq!(sh("(1)").star(&sh("(1)")), sh("(2,1)/(1)"));
        assert_eq!(sh("(3,1)").star(&SkewPartition::empty()), sh("(3,1)"));
    }

    #[test]
    fn star_is_associative_and_additive() {
        let shapes: Vec<SkewPartition> = (1..=3).flat_map(basic_shapes).collect();
        for a in &shapes {
            for b in &shapes {
                assert_eq!(a.star(b).size(), a.size() + b.size());
                for d in shapes.iter().take(4) {
                    assert_eq!(a.star(b).star(d), a.star(&b.star(d)));
                }
            }
        }
    }

    #[test]
    fn predicates_examples() {
        let sq = sh("(2,2)").predicates();
        assert!(sq.connected && !sq.is_ribbon);
        let p = sh("(4,2)/(2)").predicates();
        assert_eq!(p.components, vec![sh("(2)"), sh("(2)")]);
        assert!(p.contains_disconnected_ribbon);
        let q = sh("(3,3,1)/(1,1)").predicates();
        assert!(!q.connected && !q.contains_disconnected_ribbon);
    }

    #[test]
    fn transforms() {
        assert_eq!(sh("(3,2)/(2)").transpose(), sh("(2,2,1)/(1,1)"));
        assert_eq!(sh("(3,2)/(2)").rotate180(), sh("(3,1)/(1)"));
        assert_eq!(sh("(2,2)").rotate180(), sh("(2,2)"));
        for n in 1..=6 {
            for s in basic_shapes(n) {
                assert_eq!(s.transpose().transpose(), s);
                assert_eq!(s.rotate180().rotate180(), s);
            }
        }
    }

    #[test]
    fn bal_examples() {
        let g = sh("(5,5,3,2)/(3,3,1)").bal_proj();
        assert_eq!(g.to_string(), "(2,2)*(2,2)");
        assert_eq!(sh("(2,2)").bal_inj().to_string(), "(1,2,1)");
        assert_eq!(sh("(5)").bal_proj().to_string(), "(5)");
        for n in 1..=6 {
            for s in basic_shapes(n) {
                let g = s.bal_proj();
                assert_eq!(g.bullet().size(), n);
                assert_eq!(g.bracket().len(), 1 << (g.blocks().len() - 1));
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let b = |s: &str| -> BTreeSet<Composition> {
            s.parse::<GeneralizedComposition>().unwrap().bracket().into_iter().collect()
        };
        assert_eq!(b("(2)*(2)"), [c("(2,2)"), c("(4)")].into_iter().collect());
        assert_eq!(b("(3,1)"), [c("(3,1)")].into_iter().collect());
        assert_eq!(
            b("(1)*(1)*(1)"),
            [c("(1,1,1)"), c("(2,1)"), c("(1,2)"), c("(3)")].into_iter().collect()
        );
    }

    /// Independent count: all pairs μ ⊆ λ inside the n × n box that are
    /// already basic.
    fn brute_basic_count(n: usize) -> usize {
        let box_parts: Vec<Partition> = (0..=n * n)
            .flat_map(partitions)
            .filter(|p| p.len() <= n && p.first().copied().unwrap_or(0) <= n)
            .collect();
        let mut count = 0;
        for l in &box_parts {
            let ls: usize = l.iter().sum();
            for m in &box_parts {
                let ms: usize = m.iter().sum();
                if ls != ms + n || m.len() > l.len() || m.iter().zip(l).any(|(a, b)| a > b) {
                    continue;
                }
                if is_basic_pair(l, m) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn basic_shape_enumeration_matches_brute_force() {
        for n in 1..=4 {
            let shapes = basic_shapes(n);
            assert_eq!(shapes.len(), brute_basic_count(n), "n = {n}");
            for s in &shapes {
                assert_eq!(s.size(), n);
                assert!(is_basic_pair(s.lambda(), s.mu()));
            }
        }
    }

    #[test]
    fn canonicalization_strips_empty_rows_and_columns() {
        assert_eq!(sh("(2,2)/(1,1)"), sh("(1,1)"));
        assert_eq!(sh("(3,1)/(1,1)"), sh("(2)"));
        assert_eq!(sh("(3,2,2)/(2)").cells(), vec![(0, 2), (1, 0), (1, 1), (2, 0), (2, 1)]);
    }

    #[test]
    fn parse_and_json() {
        let s = sh("(5,5,3,2)/(3,3,1)");
        assert_eq!(s.to_string(), "(5,5,3,2)/(3,3,1)");
        assert_eq!(SkewPartition::from_json(&s.to_json()).unwrap(), s);
        assert!("5,5/3".parse::<SkewPartition>().is_err());
        assert!("(2,3)".parse::<SkewPartition>().is_err());
        let g: GeneralizedComposition = "[[2,2],[1]]".parse().unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[2,2],[1]]");
    }

    #[test]
    fn dominance() {
        assert!(strictly_dominated(&[1, 1, 1, 1], &[2, 1, 1]));
        assert!(!dominated(&[3, 1], &[2, 2]));
        assert_eq!(partition_transpose(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(partitions(5).len(), 7);
    }
}
