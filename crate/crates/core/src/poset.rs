//! Labeled posets on [n], their linear extensions and Schur labelings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::config::check_n;
use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::qsym::QSym;
use crate::shape::{basic_shapes, Composition};
use crate::symgrp::{weak_interval, Permutation, Side, MAX_N};
use crate::tabx::{schur_labelings, BijectiveTableau, LabelingFilter};

/// Partial order on [n]; bit j-1 of `up[i-1]` is set iff i ⪯ j.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPoset {
    n: usize,
    up: Vec<u32>,
}

/// Labeled poset counts on [n] for n = 0..=6.
pub const POSET_COUNTS: [usize; 7] = [1, 1, 3, 19, 219, 4231, 130023];

impl LabeledPoset {
    pub fn antichain(n: usize) -> LabeledPoset {
        LabeledPoset { n, up: (0..n).map(|i| 1 << i).collect() }
    }

    /// 1 ⪯ 2 ⪯ ⋯ ⪯ n
    pub fn chain(n: usize) -> LabeledPoset {
        LabeledPoset { n, up: (0..n).map(|i| ((1u32 << n) - 1) & !((1u32 << i) - 1)).collect() }
    }

    /// Transitive closure of `rels` (pairs a ⪯ b, 1-based).
    pub fn from_relations(n: usize, rels: &[(usize, usize)]) -> Result<LabeledPoset> {
        if n > MAX_N {
            return Err(Error::Cap(format!("poset size {n} exceeds {MAX_N}")));
        }
        let mut up: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        for &(a, b) in rels {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("relation ({a},{b}) outside [{n}]")));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = up[i];
                for j in 0..n {
                    if up[i] >> j & 1 == 1 {
                        acc |= up[j];
                    }
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::Relation(format!("relations contain a cycle through {} and {}", i + 1, j + 1)));
                }
            }
        }
        Ok(LabeledPoset { n, up })
    }

    /// i ⪯ j iff the cell of i is weakly upper-left of the cell of j.
    pub fn from_tableau(tau: &BijectiveTableau) -> LabeledPoset {
        let n = tau.n();
        let at = tau.cell_table();
        let up = (1..=n)
            .map(|i| {
                let (ri, ci) = at[i];
                (1..=n).filter(|&j| at[j].0 >= ri && at[j].1 >= ci).fold(0u32, |m, j| m | 1 << (j - 1))
            })
            .collect();
        LabeledPoset { n, up }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a - 1] >> (b - 1) & 1 == 1
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Bitmask of {b : a ⪯ b}.
    pub fn up_mask(&self, a: usize) -> u32 {
        self.up[a - 1]
    }

    /// Bitmask of {b : b ⪯ a}.
    pub fn down_mask(&self, a: usize) -> u32 {
        (0..self.n).filter(|&b| self.up[b] >> (a - 1) & 1 == 1).fold(0, |m, b| m | 1 << b)
    }

    /// Strict relations a ≺ b.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Cover pairs a ⋖ b.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(1..=self.n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    /// Connected components of the comparability graph, each sorted, ordered by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            loop {
                let mut next = comp;
                for x in 0..self.n {
                    if comp >> x & 1 == 1 {
                        next |= self.up[x] | self.down_mask(x + 1);
                    }
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&x| comp >> x & 1 == 1).map(|x| x + 1).collect());
        }
        out
    }

    /// Σ_L(P) = {σ : σ(i) ≤ σ(j) whenever i ⪯ j}, or its inverses for `Side::Right`.
    pub fn linear_extensions(&self, side: Side) -> Result<Vec<Permutation>> {
        check_n(self.n)?;
        let n = self.n;
        let down: Vec<u32> = (1..=n).map(|a| self.down_mask(a) & !(1 << (a - 1))).collect();
        let mut out = Vec::new();
        let mut sigma = vec![0u8; n];
        fn rec(pos: usize, placed: u32, n: usize, down: &[u32], sigma: &mut Vec<u8>, out: &mut Vec<Permutation>) {
            if pos > n {
                out.push(Permutation::new(sigma.clone()).expect("bijective"));
                return;
            }
            for x in 0..n {
                if placed >> x & 1 == 0 && down[x] & !placed == 0 {
                    sigma[x] = pos as u8;
                    rec(pos + 1, placed | 1 << x, n, down, sigma, out);
                }
            }
        }
        rec(1, 0, n, &down, &mut sigma, &mut out);
        if side == Side::Right {
            out = out.iter().map(Permutation::inverse).collect();
        }
        out.sort();
        Ok(out)
    }

    /// x ⪯ z and y strictly between them as integers imply x ⪯ y or y ⪯ z.
    pub fn is_regular(&self) -> bool {
        for x in 1..=self.n {
            for z in 1..=self.n {
                if !self.lt(x, z) {
                    continue;
                }
                let (lo, hi) = if x < z { (x, z) } else { (z, x) };
                if ((lo + 1)..hi).any(|y| !self.leq(x, y) && !self.leq(y, z)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_convex(&self, subset: &[usize]) -> bool {
        let mask = subset.iter().fold(0u32, |m, &a| m | 1 << (a - 1));
        for &a in subset {
            for &c in subset {
                for b in 1..=self.n {
                    if mask >> (b - 1) & 1 == 0 && self.leq(a, b) && self.leq(b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction to a convex subset, relabeled by rank onto [|subset|].
    pub fn convex_standardize(&self, subset: &[usize]) -> Result<LabeledPoset> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        if set.iter().any(|&a| a == 0 || a > self.n) {
            return Err(Error::invalid("subset not contained in [n]"));
        }
        let elems: Vec<usize> = set.into_iter().collect();
        if !self.is_convex(&elems) {
            return Err(Error::Relation(format!("subset {elems:?} is not convex")));
        }
        let m = elems.len();
        let up = elems
            .iter()
            .map(|&a| (0..m).filter(|&j| self.leq(a, elems[j])).fold(0u32, |acc, j| acc | 1 << j))
            .collect();
        Ok(LabeledPoset { n: m, up })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "covers": self.covers() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LabeledPoset> {
        let n = v["n"].as_u64().ok_or_else(|| Error::invalid("poset: missing n"))? as usize;
        let covers: Vec<(usize, usize)> = serde_json::from_value(v["covers"].clone())
            .map_err(|e| Error::invalid(format!("poset covers: {e}")))?;
        LabeledPoset::from_relations(n, &covers)
    }
}

impl fmt::Display for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
        write!(f, "{}:{}", self.n, covers.join(","))
    }
}

impl fmt::Debug for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `n:a<b,c<d` or the JSON form.
impl FromStr for LabeledPoset {
    type Err = Error;

    fn from_str(s: &str) -> Result<LabeledPoset> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::invalid(format!("poset json: {e}")))?;
            return LabeledPoset::from_json(&v);
        }
        let (n, rest) = s.split_once(':').unwrap_or((s, ""));
        let n: usize = n.trim().parse().map_err(|_| Error::invalid(format!("bad poset size in {s:?}")))?;
        let mut rels = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item.split_once('<').ok_or_else(|| Error::invalid(format!("bad relation {item:?}")))?;
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::invalid(format!("bad element {t:?}")));
            rels.push((parse(a)?, parse(b)?));
        }
        LabeledPoset::from_relations(n, &rels)
    }
}

/// All labeled posets on [n]: element k joins with a down-set D and an up-set U
/// of the poset on [k-1] such that every element of D lies below every element of U.
pub fn all_posets(n: usize) -> Result<Vec<LabeledPoset>> {
    if n > 7 {
        return Err(Error::Cap(format!("poset enumeration on [{n}] is capped at 7")));
    }
    let mut layer = vec![LabeledPoset::antichain(0)];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &layer {
            let downs: Vec<u32> = (0..k).map(|a| p.down_mask(a + 1)).collect();
            let subsets = 0u32..(1 << k);
            let ideals: Vec<u32> = subsets
                .clone()
                .filter(|&s| (0..k).all(|a| s >> a & 1 == 0 || downs[a] & !s == 0))
                .collect();
            let filters: Vec<u32> = subsets.filter(|&s| (0..k).all(|a| s >> a & 1 == 0 || p.up[a] & !s == 0)).collect();
            for &d in &ideals {
                for &u in &filters {
                    if d & u != 0 || (0..k).any(|a| d >> a & 1 == 1 && p.up[a] & u != u) {
                        continue;
                    }
                    let mut up = p.up.clone();
                    for (a, m) in up.iter_mut().enumerate() {
                        if d >> a & 1 == 1 {
                            *m |= 1 << k;
                        }
                    }
                    up.push(1 << k | u);
                    next.push(LabeledPoset { n: k + 1, up });
                }
            }
        }
        layer = next;
    }
    if let Some(&expected) = POSET_COUNTS.get(n) {
        if layer.len() != expected {
            return Err(Error::internal(format!("enumerated {} posets on [{n}], expected {expected}", layer.len())));
        }
    }
    Ok(layer)
}

/// Bottom and top when `set` is a left weak interval.
pub fn as_left_interval(set: &[Permutation]) -> Option<(Permutation, Permutation)> {
    let bottom = set.iter().min_by_key(|g| g.length())?.clone();
    let top = set.iter().max_by_key(|g| g.length())?.clone();
    let iv = weak_interval(&bottom, &top, Side::Left).ok()?;
    let want: BTreeSet<Permutation> = set.iter().cloned().collect();
    (iv.element_set() == want).then_some((bottom, top))
}

/// τ satisfies condition (iii): component minima increase from top to bottom.
pub fn has_increasing_component_minima(tau: &BijectiveTableau) -> bool {
    let labels = tau.shape().component_labels();
    let k = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut mins = vec![u8::MAX; k];
    for (&l, &v) in labels.iter().zip(tau.entries()) {
        mins[l] = mins[l].min(v);
    }
    mins.windows(2).all(|w| w[0] < w[1])
}

/// Schur labeled skew shape posets on [n] with their τ_P.
pub struct SchurIndex {
    map: HashMap<LabeledPoset, BijectiveTableau>,
}

impl SchurIndex {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, p: &LabeledPoset) -> Option<&BijectiveTableau> {
        self.map.get(p)
    }

    /// SP_n sorted by poset.
    pub fn entries(&self) -> Vec<(LabeledPoset, BijectiveTableau)> {
        let mut v: Vec<_> = self.map.iter().map(|(p, t)| (p.clone(), t.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// RSP_n, the regular members.
    pub fn regular_entries(&self) -> Vec<(LabeledPoset, BijectiveTableau)> {
        self.entries().into_iter().filter(|(p, _)| p.is_regular()).collect()
    }
}

fn build_index(n: usize) -> Result<SchurIndex> {
    let mut map = HashMap::new();
    for shape in basic_shapes(n) {
        for tau in schur_labelings(&shape, LabelingFilter::All) {
            if !has_increasing_component_minima(&tau) {
                continue;
            }
            let p = LabeledPoset::from_tableau(&tau);
            if let Some(prev) = map.insert(p.clone(), tau.clone()) {
                return Err(Error::internal(format!("τ_P not unique for {p}: {prev} and {tau}")));
            }
        }
    }
    Ok(SchurIndex { map })
}

/// Memoized index of SP_n; n is capped at 8.
pub fn schur_index(n: usize) -> Result<Arc<SchurIndex>> {
    if n > 8 {
        return Err(Error::Cap(format!("Schur recognition is capped at n = 8, got {n}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SchurIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ix) = cache.lock().unwrap().get(&n) {
        return Ok(ix.clone());
    }
    let ix = Arc::new(build_index(n)?);
    cache.lock().unwrap().insert(n, ix.clone());
    Ok(ix)
}

/// τ_P when P is a Schur labeled skew shape poset.
pub fn schur_recognize(p: &LabeledPoset) -> Result<Option<BijectiveTableau>> {
    Ok(schur_index(p.n())?.get(p).cloned())
}

/// Triple {m₋₁, m₀+1, m₁} spanning a non-consecutive component of τ_P, for
/// non-regular Schur labeled posets.
pub fn nonconsecutive_triple(tau: &BijectiveTableau) -> Option<[usize; 3]> {
    let labels = tau.shape().component_labels();
    let k = labels.iter().copied().max().map_or(0, |m| m + 1);
    let cells = tau.cells();
    for comp in 0..k {
        let members: BTreeSet<usize> =
            labels.iter().zip(tau.entries()).filter(|(&l, _)| l == comp).map(|(_, &v)| v as usize).collect();
        let (&lo, &hi) = (members.first()?, members.last()?);
        if hi - lo + 1 == members.len() {
            continue;
        }
        let m0 = *members.iter().find(|&&m| !members.contains(&(m + 1)))?;
        let m1 = *members.range(m0 + 1..).next()?;
        let c1 = tau.cell_of(m1);
        let m_neg = cells
            .iter()
            .zip(tau.entries())
            .filter(|(&(r, c), &v)| (v as usize) < m1 && r.abs_diff(c1.0) + c.abs_diff(c1.1) == 1)
            .map(|(_, &v)| v as usize)
            .next()?;
        return Some([m_neg, m0 + 1, m1]);
    }
    None
}

/// Σ_{γ ∈ Σ_L(P)} F_{comp(Des_L(γ))}
pub fn kp_fundamental(p: &LabeledPoset) -> Result<QSym> {
    let mut out = QSym::zero(p.n());
    for g in p.linear_extensions(Side::Left)? {
        out.add_term(Composition::from_set(&g.descents(Side::Left)), &Rat::ONE);
    }
    Ok(out)
}

/// Coefficients of monomials x_0^{e_0}⋯x_{m-1}^{e_{m-1}}, keyed by exponent vector.
pub type MonomialTable = BTreeMap<Vec<usize>, Rat>;

fn tally(table: &mut MonomialTable, values: &[usize], m: usize, c: &Rat) {
    let mut e = vec![0; m];
    for &v in values {
        e[v] += 1;
    }
    let slot = table.entry(e.clone()).or_insert(Rat::ZERO);
    *slot += c;
    if slot.is_zero() {
        table.remove(&e);
    }
}

/// Σ over P-partitions f:[n]→[0,m-1] of x^f, where i ⪯ j forces f(i) ≤ f(j),
/// strictly when i > j.
pub fn kp_monomial(p: &LabeledPoset, m: usize) -> Result<MonomialTable> {
    if m == 0 {
        return Err(Error::invalid("monomial truncation needs m ≥ 1"));
    }
    let n = p.n();
    if (m as f64).powi(n as i32) > 5e7 {
        return Err(Error::Cap(format!("{m}^{n} P-partition candidates")));
    }
    let rels = p.relations();
    let mut table = MonomialTable::new();
    let mut f = vec![0usize; n];
    loop {
        if rels.iter().all(|&(i, j)| if i > j { f[i - 1] < f[j - 1] } else { f[i - 1] <= f[j - 1] }) {
            tally(&mut table, &f, m, &Rat::ONE);
        }
        let mut k = 0;
        while k < n && f[k] == m - 1 {
            f[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        f[k] += 1;
    }
    Ok(table)
}

/// Truncation of a quasisymmetric function to m variables.
pub fn to_monomials(q: &QSym, m: usize) -> MonomialTable {
    let n = q.degree();
    let mut table = MonomialTable::new();
    for (alpha, c) in q.terms() {
        let strict = alpha.to_set();
        let mut seq = Vec::with_capacity(n);
        fn rec(seq: &mut Vec<usize>, n: usize, m: usize, strict: &crate::symgrp::DescentSet, c: &Rat, t: &mut MonomialTable) {
            if seq.len() == n {
                tally(t, seq, m, c);
                return;
            }
            let start = match seq.last() {
                None => 0,
                Some(&l) if strict.contains(seq.len()) => l + 1,
                Some(&l) => l,
            };
            for v in start..m {
                seq.push(v);
                rec(seq, n, m, strict, c, t);
                seq.pop();
            }
        }
        rec(&mut seq, n, m, &strict, c, &mut table);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::schur_expand;
    use crate::shape::SkewPartition;
    use crate::tabx::{canonical, reading, Canonical};

    fn sh(s: &str) -> SkewPartition {
        s.parse().unwrap()
    }

    fn perms(ws: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = ws.iter().map(|w| w.parse().unwrap()).collect();
        v.sort();
        v
    }

    fn tab(rows: &[&[i32]]) -> BijectiveTableau {
        let rows: Vec<Vec<Option<u8>>> =
            rows.iter().map(|r| r.iter().map(|&v| (v > 0).then_some(v as u8)).collect()).collect();
        BijectiveTableau::from_rows(&rows).unwrap()
    }

    fn two_row_poset() -> LabeledPoset {
        LabeledPoset::from_tableau(&tab(&[&[0, 0, 2], &[3, 1]]))
    }

    #[test]
    fn poset_of_tau0_matches_hasse_diagram() {
        let t = canonical(&sh("(5,5,3,2)/(3,3,1)"), Canonical::Tau0);
        let p = LabeledPoset::from_tableau(&t);
        let covers: BTreeSet<(usize, usize)> = p.covers().into_iter().collect();
        let expect: BTreeSet<(usize, usize)> =
            [(2, 1), (2, 4), (1, 3), (4, 3), (6, 5), (6, 7), (8, 7)].into_iter().collect();
        assert_eq!(covers, expect);
        assert_eq!(p.components(), vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]);
        let t1 = canonical(&sh("(5,5,3,2)/(3,3,1)"), Canonical::Tau1);
        let covers: BTreeSet<(usize, usize)> = LabeledPoset::from_tableau(&t1).covers().into_iter().collect();
        let expect: BTreeSet<(usize, usize)> =
            [(3, 1), (3, 4), (1, 2), (4, 2), (6, 5), (6, 7), (8, 7)].into_iter().collect();
        assert_eq!(covers, expect);
    }

    #[test]
    fn single_row_is_reversed_chain() {
        let p = LabeledPoset::from_tableau(&tab(&[&[3, 1, 4, 2]]));
        assert_eq!(p, LabeledPoset::from_relations(4, &[(3, 1), (1, 4), (4, 2)]).unwrap());
    }

    #[test]
    fn example_poset_relations() {
        let p = two_row_poset();
        assert_eq!(p.relations(), vec![(3, 1)]);
        assert_eq!(p.linear_extensions(Side::Right).unwrap(), perms(&["312", "231", "321"]));
    }

    #[test]
    fn chain_has_identity_only() {
        for n in 1..=6 {
            let c = LabeledPoset::chain(n);
            assert_eq!(c.linear_extensions(Side::Left).unwrap(), vec![Permutation::identity(n)]);
            assert!(c.is_regular());
            assert_eq!(kp_fundamental(&c).unwrap(), QSym::f(Composition::new(vec![n]).unwrap()));
        }
    }

    #[test]
    fn skew_421_extensions_form_interval() {
        let p = LabeledPoset::from_tableau(&canonical(&sh("(4,2,1)/(2,1)"), Canonical::Tau0));
        let ext = p.linear_extensions(Side::Left).unwrap();
        assert_eq!(ext.len(), 12);
        let (b, t) = as_left_interval(&ext).unwrap();
        assert_eq!((b.to_string(), t.to_string()), ("2134".into(), "4321".into()));
    }

    #[test]
    fn right_extensions_are_inverses() {
        for p in all_posets(4).unwrap() {
            let l = p.linear_extensions(Side::Left).unwrap();
            let mut r: Vec<_> = l.iter().map(Permutation::inverse).collect();
            r.sort();
            assert_eq!(p.linear_extensions(Side::Right).unwrap(), r);
        }
    }

    #[test]
    fn regularity_examples() {
        let p = LabeledPoset::from_relations(3, &[(1, 3)]).unwrap();
        assert!(!p.is_regular());
        assert!(!LabeledPoset::from_relations(3, &[(3, 1)]).unwrap().is_regular());
        assert!(LabeledPoset::from_relations(4, &[(2, 4), (4, 1), (1, 3)]).unwrap().is_regular());
    }

    #[test]
    fn distinguished_labelings_are_regular() {
        for n in 1..=6 {
            for s in basic_shapes(n) {
                for t in schur_labelings(&s, LabelingFilter::Distinguished) {
                    assert!(LabeledPoset::from_tableau(&t).is_regular(), "{t}");
                }
            }
        }
    }

    fn brute_posets(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
        (0u64..1 << pairs.len())
            .filter(|&mask| {
                let rel = |a: usize, b: usize| {
                    a == b || pairs.iter().position(|&p| p == (a, b)).is_some_and(|i| mask >> i & 1 == 1)
                };
                (1..=n).all(|a| {
                    (1..=n).all(|b| {
                        (a == b || !(rel(a, b) && rel(b, a)))
                            && (1..=n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))
                    })
                })
            })
            .count()
    }

    #[test]
    fn poset_counts_match_brute_force() {
        for n in 0..=4 {
            let all = all_posets(n).unwrap();
            assert_eq!(all.len(), brute_posets(n));
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert_eq!(all_posets(5).unwrap().len(), 4231);
    }

    #[test]
    fn bjorner_wachs_up_to_five() {
        for n in 1..=5 {
            for p in all_posets(n).unwrap() {
                let ext = p.linear_extensions(Side::Left).unwrap();
                if ext.len() > 1 {
                    assert_eq!(as_left_interval(&ext).is_some(), p.is_regular(), "{p}");
                }
            }
        }
    }

    #[test]
    fn recognize_antichain() {
        let t = schur_recognize(&LabeledPoset::antichain(2)).unwrap().unwrap();
        assert_eq!(t.to_string(), "[[_,1],[2]]");
    }

    #[test]
    fn recognize_displayed_examples() {
        let p = LabeledPoset::from_relations(6, &[(5, 4), (5, 6), (2, 1)]).unwrap();
        let q = LabeledPoset::from_relations(6, &[(3, 1), (3, 5), (6, 2)]).unwrap();
        let tp = schur_recognize(&p).unwrap().unwrap();
        let tq = schur_recognize(&q).unwrap().unwrap();
        assert_eq!(tp, tab(&[&[0, 0, 0, 2, 1], &[0, 0, 3], &[5, 4], &[6]]));
        assert_eq!(tq, tab(&[&[0, 0, 0, 3, 1], &[0, 0, 0, 5], &[0, 6, 2], &[4]]));
    }

    #[test]
    fn recognize_size_three_by_brute_force() {
        let ix = schur_index(3).unwrap();
        for p in all_posets(3).unwrap() {
            let found = ix.get(&p).cloned();
            let mut oracle = Vec::new();
            for s in basic_shapes(3) {
                for t in schur_labelings(&s, LabelingFilter::All) {
                    if LabeledPoset::from_tableau(&t) == p && has_increasing_component_minima(&t) {
                        oracle.push(t);
                    }
                }
            }
            assert!(oracle.len() <= 1);
            assert_eq!(found, oracle.pop());
        }
        let p = LabeledPoset::from_relations(3, &[(1, 3)]).unwrap();
        let t = schur_recognize(&p).unwrap().unwrap();
        assert_eq!(t, tab(&[&[0, 1], &[0, 3], &[2]]));
    }

    #[test]
    fn recognize_round_trip_and_regularity() {
        for n in 1..=6 {
            let ix = schur_index(n).unwrap();
            for (p, t) in ix.entries() {
                assert_eq!(LabeledPoset::from_tableau(&t), p);
                assert_eq!(p.is_regular(), t.is_distinguished(), "{t}");
            }
        }
    }

    #[test]
    fn interval_description_of_distinguished() {
        for n in 1..=6 {
            for s in basic_shapes(n) {
                let trow = canonical(&s, Canonical::TRow);
                let tcol = canonical(&s, Canonical::TCol);
                for tau in schur_labelings(&s, LabelingFilter::Distinguished) {
                    let ext = LabeledPoset::from_tableau(&tau).linear_extensions(Side::Left).unwrap();
                    let iv = weak_interval(&reading(&tau, &trow).unwrap(), &reading(&tau, &tcol).unwrap(), Side::Left)
                        .unwrap();
                    assert_eq!(iv.element_set(), ext.into_iter().collect(), "{tau}");
                }
            }
        }
    }

    #[test]
    fn kp_examples() {
        let q = kp_fundamental(&two_row_poset()).unwrap();
        let f = |s: &str| QSym::f(s.parse().unwrap());
        assert_eq!(q, f("(1,2)").add(&f("(2,1)")).add(&f("(1,1,1)")));
        let e = schur_expand(&q).unwrap();
        assert_eq!(e, BTreeMap::from([(vec![2, 1], Rat::ONE), (vec![1, 1, 1], Rat::ONE)]));
        assert_eq!(kp_fundamental(&LabeledPoset::antichain(2)).unwrap(), f("(1,1)").add(&f("(2)")));
    }

    #[test]
    fn kp_forms_agree_on_schur_posets() {
        for n in 1..=5 {
            for (p, _) in schur_index(n).unwrap().entries() {
                let q = kp_fundamental(&p).unwrap();
                assert_eq!(to_monomials(&q, n), kp_monomial(&p, n).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn kp_of_schur_poset_is_transposed_skew_schur() {
        for n in 1..=5 {
            for (p, t) in schur_index(n).unwrap().entries() {
                let s = t.shape().transpose();
                assert_eq!(kp_fundamental(&p).unwrap(), crate::qsym::schur_to_f(&s), "{t}");
            }
        }
    }

    #[test]
    fn convex_standardization() {
        let p = two_row_poset();
        assert_eq!(p.convex_standardize(&[1, 2, 3]).unwrap(), p);
        assert_eq!(p.convex_standardize(&[2]).unwrap(), LabeledPoset::antichain(1));
        let c = LabeledPoset::chain(3);
        assert!(c.convex_standardize(&[1, 3]).is_err());
        assert_eq!(c.convex_standardize(&[2, 3]).unwrap(), LabeledPoset::chain(2));
    }

    #[test]
    fn nonconsecutive_triple_standardizes_to_bad_pattern() {
        let a = perms(&["123", "132", "213"]);
        let b = perms(&["312", "231", "321"]);
        let mut seen = 0;
        for n in 4..=6 {
            for (p, t) in schur_index(n).unwrap().entries() {
                if p.is_regular() {
                    assert!(nonconsecutive_triple(&t).is_none());
                    continue;
                }
                let tri = nonconsecutive_triple(&t).expect("non-distinguished");
                assert!(tri[0] < tri[1] && tri[1] < tri[2]);
                let q = p.convex_standardize(&tri).unwrap();
                let ext = q.linear_extensions(Side::Left).unwrap();
                assert!(ext == a || ext == b, "{t} {tri:?}");
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn json_and_text_round_trip() {
        let p = LabeledPoset::from_relations(4, &[(1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p.to_json(), serde_json::json!({"n": 4, "covers": [[1, 3], [2, 3], [3, 4]]}));
        assert_eq!(LabeledPoset::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.to_string().parse::<LabeledPoset>().unwrap(), p);
        assert!("2:1<2,2<1".parse::<LabeledPoset>().is_err());
    }
}
