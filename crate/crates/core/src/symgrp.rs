//! Permutations in one-line notation, descents, inversions and the two
//! weak Bruhat orders.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" | "L" | "l" => Ok(Side::Left),
            "right" | "R" | "r" => Ok(Side::Right),
            _ => Err(Error::invalid(format!("unknown side `{s}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Permutation> {
        let n = word.len();
        if n > MAX_N {
            return Err(Error::Cap(format!("permutation of size {n} exceeds {MAX_N}")));
        }
        let mut seen = vec![false; n + 1];
        for &w in &word {
            let w = w as usize;
            if w == 0 || w > n || seen[w] {
                return Err(Error::invalid(format!("{word:?} is not a permutation")));
            }
            seen[w] = true;
        }
        Ok(Permutation { word })
    }

    pub fn from_slice(word: &[usize]) -> Result<Permutation> {
        if word.iter().any(|&w| w > u8::MAX as usize) {
            return Err(Error::invalid("entry too large"));
        }
        Permutation::new(word.iter().map(|&w| w as u8).collect())
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { word: (1..=n as u8).collect() }
    }

    pub fn longest(n: usize) -> Permutation {
        Permutation { word: (1..=n as u8).rev().collect() }
    }

    pub fn simple(n: usize, i: usize) -> Permutation {
        assert!(1 <= i && i < n);
        let mut w = Permutation::identity(n);
        w.word.swap(i - 1, i);
        w
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// σ(k) for 1-based k.
    pub fn at(&self, k: usize) -> usize {
        self.word[k - 1] as usize
    }

    /// Position (1-based) of the value v.
    pub fn position(&self, v: usize) -> usize {
        self.word.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &w)| w as usize == i + 1)
    }

    /// (στ)(k) = σ(τ(k)).
    pub fn compose(&self, tau: &Permutation) -> Permutation {
        assert_eq!(self.n(), tau.n(), "size mismatch");
        Permutation { word: tau.word.iter().map(|&t| self.word[t as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &w) in self.word.iter().enumerate() {
            inv[w as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// s_i σ: swaps the values i and i+1.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation {
            word: self
                .word
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// σ s_i: swaps the letters in positions i and i+1.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.word.clone();
        w.swap(i - 1, i);
        Permutation { word: w }
    }

    pub fn mul_simple(&self, i: usize, side: Side) -> Permutation {
        match side {
            Side::Left => self.left_mul_simple(i),
            Side::Right => self.right_mul_simple(i),
        }
    }

    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Inv_L: position pairs (i, j), i < j, σ(i) > σ(j).
    pub fn inv_left(&self) -> BTreeSet<(usize, usize)> {
        let w = &self.word;
        let mut s = BTreeSet::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    s.insert((i + 1, j + 1));
                }
            }
        }
        s
    }

    /// Inv_R: value pairs (σ(i), σ(j)) for i < j with σ(i) > σ(j).
    pub fn inv_right(&self) -> BTreeSet<(usize, usize)> {
        let w = &self.word;
        let mut s = BTreeSet::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    s.insert((w[i] as usize, w[j] as usize));
                }
            }
        }
        s
    }

    pub fn inversions(&self, side: Side) -> BTreeSet<(usize, usize)> {
        match side {
            Side::Left => self.inv_left(),
            Side::Right => self.inv_right(),
        }
    }

    fn inv_mask(&self, side: Side) -> u128 {
        let mut m = 0u128;
        for (a, b) in self.inversions(side) {
            let (x, y) = if a < b { (a, b) } else { (b, a) };
            m |= 1u128 << ((y - 1) * (y - 2) / 2 + (x - 1));
        }
        m
    }

    pub fn descents(&self, side: Side) -> DescentSet {
        let n = self.n();
        let mut bits = 0u32;
        match side {
            Side::Left => {
                let inv = self.inverse();
                for i in 1..n {
                    if inv.at(i) > inv.at(i + 1) {
                        bits |= 1 << i;
                    }
                }
            }
            Side::Right => {
                for i in 1..n {
                    if self.at(i) > self.at(i + 1) {
                        bits |= 1 << i;
                    }
                }
            }
        }
        DescentSet { n, bits }
    }

    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Left => self.position(i) > self.position(i + 1),
            Side::Right => self.at(i) > self.at(i + 1),
        }
    }

    /// σ^{w_0} = w_0 σ w_0.
    pub fn conj_longest(&self) -> Permutation {
        let w0 = Permutation::longest(self.n());
        w0.compose(self).compose(&w0)
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        heap_lex(&mut cur, 0, &mut out);
        out.sort();
        out
    }

    pub fn to_compact(&self) -> String {
        if self.n() <= 9 {
            self.word.iter().map(|d| char::from(b'0' + d)).collect()
        } else {
            format!("{:?}", self.word)
        }
    }
}

fn heap_lex(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == cur.len() {
        out.push(Permutation { word: cur.clone() });
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        heap_lex(cur, k + 1, out);
        cur.swap(k, i);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            write!(f, "{}", self.to_compact())
        } else {
            let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.starts_with('[') {
            let v: Vec<usize> =
                serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad permutation: {e}")))?;
            return Permutation::from_slice(&v);
        }
        if !s.chars().all(|c| c.is_ascii_digit()) || s.is_empty() {
            return Err(Error::invalid(format!("bad permutation `{s}`")));
        }
        let w: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
        if w.len() > 9 {
            return Err(Error::invalid("digit strings are limited to n <= 9; use a JSON array"));
        }
        Permutation::new(w)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Vec::<u8>::deserialize(d)?;
        Permutation::new(w).map_err(serde::de::Error::custom)
    }
}

/// Subset of [n−1] stored as a bitmask (bit i for member i).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    bits: u32,
}

impl DescentSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<DescentSet> {
        let mut bits = 0u32;
        for i in members {
            if i == 0 || i >= n.max(1) {
                return Err(Error::invalid(format!("{i} is not in [{}]", n.saturating_sub(1))));
            }
            bits |= 1 << i;
        }
        Ok(DescentSet { n, bits })
    }

    pub fn from_bits(n: usize, bits: u32) -> DescentSet {
        DescentSet { n, bits: bits & full_mask(n) }
    }

    pub fn empty(n: usize) -> DescentSet {
        DescentSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> DescentSet {
        DescentSet { n, bits: full_mask(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 32 && self.bits & (1 << i) != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn complement(&self) -> DescentSet {
        DescentSet { n: self.n, bits: full_mask(self.n) & !self.bits }
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.bits & !other.bits == 0
    }
}

fn full_mask(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        ((1u32 << n) - 1) & !1
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members())
    }
}

impl Serialize for DescentSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

pub fn descents(sigma: &Permutation, side: Side) -> DescentSet {
    sigma.descents(side)
}

pub fn weak_leq(sigma: &Permutation, rho: &Permutation, side: Side) -> Result<bool> {
    if sigma.n() != rho.n() {
        return Err(Error::invalid("permutations of different sizes"));
    }
    let a = sigma.inv_mask(side);
    let b = rho.inv_mask(side);
    Ok(a & !b == 0)
}

/// The longest element of the parabolic subgroup S_I: each maximal run
/// {a, …, b} ⊆ I reverses the letters a..=b+1.
pub fn longest_element(n: usize, i_set: &DescentSet) -> Permutation {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    let mut i = 1;
    while i < n {
        if i_set.contains(i) {
            let start = i;
            while i < n && i_set.contains(i) {
                i += 1;
            }
            w[start - 1..i].reverse();
        } else {
            i += 1;
        }
    }
    Permutation { word: w }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

#[derive(Clone, Debug)]
pub struct WeakInterval {
    side: Side,
    bottom: Permutation,
    top: Permutation,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    covers: Vec<Cover>,
}

impl PartialEq for WeakInterval {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.bottom == other.bottom && self.top == other.top
    }
}

impl Eq for WeakInterval {}

impl WeakInterval {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn n(&self) -> usize {
        self.bottom.n()
    }

    /// Elements in breadth-first order from the bottom.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn element_set(&self) -> BTreeSet<Permutation> {
        self.elements.iter().cloned().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "side": self.side,
            "bottom": self.bottom,
            "top": self.top,
            "elements": self.elements,
            "covers": self.covers.iter().map(|c| {
                serde_json::json!([self.elements[c.from], self.elements[c.to], c.color])
            }).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<WeakInterval> {
        let side: Side = serde_json::from_value(v["side"].clone())
            .map_err(|e| Error::invalid(format!("interval side: {e}")))?;
        let bottom: Permutation = serde_json::from_value(v["bottom"].clone())
            .map_err(|e| Error::invalid(format!("interval bottom: {e}")))?;
        let top: Permutation = serde_json::from_value(v["top"].clone())
            .map_err(|e| Error::invalid(format!("interval top: {e}")))?;
        weak_interval(&bottom, &top, side)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph interval {\n  rankdir=BT;\n");
        for g in &self.elements {
            s.push_str(&format!("  \"{g}\";\n"));
        }
        for c in &self.covers {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"s{}\"];\n",
                self.elements[c.from], self.elements[c.to], c.color
            ));
        }
        s.push_str("}\n");
        s
    }
}

pub fn weak_interval(sigma: &Permutation, rho: &Permutation, side: Side) -> Result<WeakInterval> {
    if !weak_leq(sigma, rho, side)? {
        return Err(Error::invalid(format!("{sigma} is not below {rho} in the {side:?} weak order")));
    }
    let n = sigma.n();
    let top_mask = rho.inv_mask(side);
    let mut elements = vec![sigma.clone()];
    let mut index = HashMap::from([(sigma.clone(), 0usize)]);
    let mut covers = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let g = elements[k].clone();
        for i in 1..n {
            if g.has_descent(i, side) {
                continue;
            }
            let h = g.mul_simple(i, side);
            if h.inv_mask(side) & !top_mask != 0 {
                continue;
            }
            let j = match index.get(&h) {
                Some(&j) => j,
                None => {
                    elements.push(h.clone());
                    index.insert(h, elements.len() - 1);
                    queue.push_back(elements.len() - 1);
                    elements.len() - 1
                }
            };
            covers.push(Cover { from: k, to: j, color: i });
        }
    }
    Ok(WeakInterval { side, bottom: sigma.clone(), top: rho.clone(), elements, index, covers })
}

/// [w_0(I), w_0(J^c)·w_0]_R, which equals {σ : I ⊆ Des_L(σ) ⊆ J}.
pub fn descent_class_interval(n: usize, i_set: &DescentSet, j_set: &DescentSet) -> Result<WeakInterval> {
    if !i_set.is_subset(j_set) {
        return Err(Error::invalid("I is not a subset of J"));
    }
    let bottom = longest_element(n, i_set);
    let top = longest_element(n, &j_set.complement()).compose(&Permutation::longest(n));
    weak_interval(&bottom, &top, Side::Right)
}
