//! Bijective fillings of skew diagrams: standard Young tableaux, canonical
//! fillings, Schur labelings, readings, RSK and rectification.

use std::fmt;

use crate::error::{Error, Result};
use crate::shape::{Cell, Composition, SkewPartition};
use crate::symgrp::{DescentSet, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijectiveTableau {
    shape: SkewPartition,
    cells: Vec<Cell>,
    entries: Vec<u8>,
}

impl BijectiveTableau {
    /// `entries[k]` fills the k-th cell of `shape.cells()`.
    pub fn new(shape: SkewPartition, entries: Vec<u8>) -> Result<BijectiveTableau> {
        let cells = shape.cells();
        if entries.len() != cells.len() {
            return Err(Error::invalid("entry count does not match shape"));
        }
        let n = cells.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::invalid(format!("entries {entries:?} are not a bijection onto [{n}]")));
            }
            seen[e] = true;
        }
        Ok(BijectiveTableau { shape, cells, entries })
    }

    /// Rows with `None` for skew cells, e.g. `[[None, Some(1)], [Some(3), Some(2)]]`.
    pub fn from_rows(rows: &[Vec<Option<u8>>]) -> Result<BijectiveTableau> {
        let mut cells = Vec::new();
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let Some(e) = e {
                    cells.push((r, c));
                    entries.push(*e);
                }
            }
        }
        let shape = SkewPartition::from_cells(&cells)?;
        BijectiveTableau::new(shape, entries)
    }

    pub fn from_straight_rows(rows: &[Vec<u8>]) -> Result<BijectiveTableau> {
        let rows: Vec<Vec<Option<u8>>> = rows.iter().map(|r| r.iter().map(|&e| Some(e)).collect()).collect();
        BijectiveTableau::from_rows(&rows)
    }

    pub fn shape(&self) -> &SkewPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn at(&self, cell: Cell) -> Option<u8> {
        self.cells.binary_search(&cell).ok().map(|k| self.entries[k])
    }

    /// Cell holding the value k (1-based).
    pub fn cell_of(&self, k: usize) -> Cell {
        let i = self.entries.iter().position(|&e| e as usize == k).expect("value present");
        self.cells[i]
    }

    pub fn cell_table(&self) -> Vec<Cell> {
        let mut t = vec![(0, 0); self.n() + 1];
        for (c, &e) in self.cells.iter().zip(&self.entries) {
            t[e as usize] = *c;
        }
        t
    }

    pub fn to_rows(&self) -> Vec<Vec<Option<u8>>> {
        let lambda = self.shape.lambda();
        let mut rows: Vec<Vec<Option<u8>>> = lambda.iter().map(|&l| vec![None; l]).collect();
        for (&(r, c), &e) in self.cells.iter().zip(&self.entries) {
            rows[r][c] = Some(e);
        }
        rows
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_rows()).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<BijectiveTableau> {
        let rows: Vec<Vec<Option<u8>>> =
            serde_json::from_value(v.clone()).map_err(|e| Error::invalid(format!("bad tableau: {e}")))?;
        BijectiveTableau::from_rows(&rows)
    }

    pub fn is_standard(&self) -> bool {
        self.cells.iter().all(|&(r, c)| {
            let v = self.at((r, c)).unwrap();
            self.at((r, c + 1)).map_or(true, |w| w > v) && self.at((r + 1, c)).map_or(true, |w| w > v)
        })
    }

    pub fn is_schur_labeling(&self) -> bool {
        self.cells.iter().all(|&(r, c)| {
            let v = self.at((r, c)).unwrap();
            self.at((r, c + 1)).map_or(true, |w| w < v) && self.at((r + 1, c)).map_or(true, |w| w > v)
        })
    }

    /// τ_B ≥ τ_{B′} whenever B is weakly below and weakly left of B′.
    pub fn is_distinguished(&self) -> bool {
        for (i, &(r1, c1)) in self.cells.iter().enumerate() {
            for (j, &(r2, c2)) in self.cells.iter().enumerate() {
                if i != j && r1 >= r2 && c1 <= c2 && self.entries[i] < self.entries[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Straight-shape transpose; skew shapes transpose cell-wise.
    pub fn transpose(&self) -> BijectiveTableau {
        let mut pairs: Vec<(Cell, u8)> =
            self.cells.iter().zip(&self.entries).map(|(&(r, c), &e)| ((c, r), e)).collect();
        pairs.sort();
        let cells: Vec<Cell> = pairs.iter().map(|p| p.0).collect();
        let shape = SkewPartition::from_cells(&cells).expect("transpose of a skew diagram");
        BijectiveTableau::new(shape, pairs.into_iter().map(|p| p.1).collect()).expect("bijective")
    }

    /// Straight shape occupied by values 1..=k, as a partition.
    pub fn rows_of_prefix(&self, k: usize) -> Vec<Cell> {
        self.cells
            .iter()
            .zip(&self.entries)
            .filter(|(_, &e)| e as usize <= k)
            .map(|(c, _)| *c)
            .collect()
    }

    /// Concatenated rows, top to bottom.
    pub fn row_reading(&self) -> Vec<u8> {
        self.entries.clone()
    }
}

impl std::str::FromStr for BijectiveTableau {
    type Err = Error;

    /// `[[_,_,2],[3,1]]`; `_` (or `null`) marks a cell of μ.
    fn from_str(s: &str) -> Result<BijectiveTableau> {
        let json = s.replace('_', "null");
        let v: serde_json::Value =
            serde_json::from_str(json.trim()).map_err(|e| Error::invalid(format!("bad tableau `{s}`: {e}")))?;
        BijectiveTableau::from_json(&v)
    }
}

impl fmt::Display for BijectiveTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> =
                    r.iter().map(|e| e.map_or_else(|| "_".to_string(), |v| v.to_string())).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for BijectiveTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Fills `cells` with 1..n so that each cell's listed predecessors get
/// smaller values; visits candidates in row-major order.
fn fill_all(shape: &SkewPartition, preds: impl Fn(Cell) -> Vec<Cell>) -> Vec<BijectiveTableau> {
    let cells = shape.cells();
    let n = cells.len();
    let pred_idx: Vec<Vec<usize>> = cells
        .iter()
        .map(|&c| preds(c).into_iter().filter_map(|p| cells.binary_search(&p).ok()).collect())
        .collect();
    let mut filled = vec![0u8; n];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        pred_idx: &[Vec<usize>],
        filled: &mut Vec<u8>,
        shape: &SkewPartition,
        cells: &[Cell],
        out: &mut Vec<BijectiveTableau>,
    ) {
        if k > n {
            out.push(BijectiveTableau { shape: shape.clone(), cells: cells.to_vec(), entries: filled.clone() });
            return;
        }
        for i in 0..n {
            if filled[i] == 0 && pred_idx[i].iter().all(|&p| filled[p] != 0) {
                filled[i] = k as u8;
                rec(k + 1, n, pred_idx, filled, shape, cells, out);
                filled[i] = 0;
            }
        }
    }
    rec(1, n, &pred_idx, &mut filled, shape, &cells, &mut out);
    out
}

pub fn enumerate_syt(shape: &SkewPartition) -> Vec<BijectiveTableau> {
    fill_all(shape, |(r, c)| {
        let mut p = Vec::new();
        if c > 0 {
            p.push((r, c - 1));
        }
        if r > 0 {
            p.push((r - 1, c));
        }
        p
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonical {
    Tau0,
    Tau1,
    TRow,
    TCol,
}

pub fn canonical(shape: &SkewPartition, which: Canonical) -> BijectiveTableau {
    let mut order = shape.cells();
    match which {
        Canonical::Tau0 => order.sort_by_key(|&(r, c)| (r, std::cmp::Reverse(c))),
        Canonical::Tau1 => order.sort_by_key(|&(r, c)| (std::cmp::Reverse(c), r)),
        Canonical::TRow => {}
        Canonical::TCol => order.sort_by_key(|&(r, c)| (c, r)),
    }
    let cells = shape.cells();
    let mut entries = vec![0u8; cells.len()];
    for (k, cell) in order.iter().enumerate() {
        entries[cells.binary_search(cell).unwrap()] = (k + 1) as u8;
    }
    BijectiveTableau { shape: shape.clone(), cells, entries }
}

/// read_τ(T)(k) = the T-entry in the cell where τ holds k.
pub fn reading(tau: &BijectiveTableau, t: &BijectiveTableau) -> Result<Permutation> {
    if tau.shape != t.shape {
        return Err(Error::invalid("reading: shape mismatch"));
    }
    let mut word = vec![0u8; tau.n()];
    for (&k, &v) in tau.entries.iter().zip(&t.entries) {
        word[k as usize - 1] = v;
    }
    Permutation::new(word)
}

/// comp({i : i weakly right of i+1 in T}).
pub fn syt_descent_comp(t: &BijectiveTableau) -> Composition {
    let at = t.cell_table();
    let n = t.n();
    let members = (1..n).filter(|&i| at[i].1 >= at[i + 1].1);
    Composition::from_set(&DescentSet::new(n, members).expect("in range"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingFilter {
    All,
    Distinguished,
}

pub fn schur_labelings(shape: &SkewPartition, filter: LabelingFilter) -> Vec<BijectiveTableau> {
    let all = fill_all(shape, |(r, c)| {
        let mut p = vec![(r, c + 1)];
        if r > 0 {
            p.push((r - 1, c));
        }
        p
    });
    match filter {
        LabelingFilter::All => all,
        LabelingFilter::Distinguished => all.into_iter().filter(BijectiveTableau::is_distinguished).collect(),
    }
}

fn insert_row(rows: &mut Vec<Vec<u8>>, mut x: u8) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Row-insertion RSK: (P(σ), Q(σ)).
pub fn rsk(sigma: &Permutation) -> (BijectiveTableau, BijectiveTableau) {
    let (p, q) = rsk_rows(sigma.word());
    (
        BijectiveTableau::from_straight_rows(&p).expect("insertion tableau"),
        BijectiveTableau::from_straight_rows(&q).expect("recording tableau"),
    )
}

pub fn rsk_rows(word: &[u8]) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        let r = insert_row(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push((k + 1) as u8);
    }
    (p, q)
}

/// Jeu-de-taquin rectification; inner corners are vacated topmost first.
pub fn rectify(t: &BijectiveTableau) -> Result<BijectiveTableau> {
    if !t.is_standard() {
        return Err(Error::invalid("rectify: tableau is not standard"));
    }
    let mut grid = t.to_rows();
    loop {
        let corner = (0..grid.len()).find_map(|r| {
            let c = grid[r].iter().rposition(Option::is_none)?;
            let below_is_hole = grid.get(r + 1).and_then(|row| row.get(c)).map_or(false, Option::is_none);
            (!below_is_hole).then_some((r, c))
        });
        let Some((mut r, mut c)) = corner else {
            break;
        };
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let below = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            match (right, below) {
                (None, None) => {
                    grid[r].remove(c);
                    if grid[r].is_empty() {
                        grid.remove(r);
                    }
                    break;
                }
                (Some(a), Some(b)) if b < a => {
                    grid[r][c] = Some(b);
                    grid[r + 1][c] = None;
                    r += 1;
                }
                (None, Some(b)) => {
                    grid[r][c] = Some(b);
                    grid[r + 1][c] = None;
                    r += 1;
                }
                (Some(a), _) => {
                    grid[r][c] = Some(a);
                    grid[r][c + 1] = None;
                    c += 1;
                }
            }
        }
    }
    BijectiveTableau::from_rows(&grid)
}

/// P(read_{τ0}(T) w_0): the RSK route to the rectification.
pub fn rectify_via_rsk(t: &BijectiveTableau) -> BijectiveTableau {
    let tau0 = canonical(t.shape(), Canonical::Tau0);
    let w = reading(&tau0, t).expect("same shape");
    let w = w.compose(&Permutation::longest(w.n()));
    rsk(&w).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::basic_shapes;
    use crate::symgrp::{weak_interval, Side};
    use std::collections::BTreeSet;

    fn sh(s: &str) -> SkewPartition {
        s.parse().unwrap()
    }

    fn rows(t: &BijectiveTableau) -> Vec<Vec<u8>> {
        t.to_rows().iter().map(|r| r.iter().flatten().copied().collect()).collect()
    }

    fn st(r: &[&[u8]]) -> BijectiveTableau {
        BijectiveTableau::from_straight_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Independent SYT count: number of orderings of all n! bijections that
    /// happen to be standard.
    fn brute_syt_count(s: &SkewPartition) -> usize {
        let n = s.size();
        Permutation::all(n)
            .into_iter()
            .filter(|p| BijectiveTableau::new(s.clone(), p.word().to_vec()).unwrap().is_standard())
            .count()
    }

    #[test]
    fn syt_examples() {
        assert_eq!(enumerate_syt(&sh("(2,1)")).len(), 2);
        assert_eq!(enumerate_syt(&sh("(4,2,1)/(2,1)")).len(), 12);
        assert_eq!(enumerate_syt(&sh("(1,1,1,1)")).len(), 1);
        for n in 1..=5 {
            for s in basic_shapes(n) {
                let all = enumerate_syt(&s);
                assert_eq!(all.len(), brute_syt_count(&s), "{s}");
                assert!(all.iter().all(BijectiveTableau::is_standard));
            }
        }
    }

    #[test]
    fn canonical_fillings() {
        let s = sh("(5,5,3,2)/(3,3,1)");
        assert_eq!(rows(&canonical(&s, Canonical::Tau0)), vec![vec![2, 1], vec![4, 3], vec![6, 5], vec![8, 7]]);
        assert_eq!(rows(&canonical(&s, Canonical::Tau1)), vec![vec![3, 1], vec![4, 2], vec![6, 5], vec![8, 7]]);
        assert_eq!(rows(&canonical(&s, Canonical::TRow)), vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]]);
        assert_eq!(rows(&canonical(&s, Canonical::TCol)), vec![vec![5, 7], vec![6, 8], vec![2, 4], vec![1, 3]]);
        let row = sh("(4)");
        assert_eq!(rows(&canonical(&row, Canonical::TRow)), vec![vec![1, 2, 3, 4]]);
        assert_eq!(rows(&canonical(&row, Canonical::Tau1)), vec![vec![4, 3, 2, 1]]);
        for n in 1..=5 {
            for s in basic_shapes(n) {
                assert!(canonical(&s, Canonical::TRow).is_standard());
                assert!(canonical(&s, Canonical::TCol).is_standard());
                assert!(canonical(&s, Canonical::Tau0).is_distinguished());
                assert!(canonical(&s, Canonical::Tau1).is_distinguished());
            }
        }
    }

    #[test]
    fn reading_examples() {
        let tau = st(&[&[4, 2, 3], &[5, 1]]);
        let t = st(&[&[1, 3, 4], &[2, 5]]);
        assert_eq!(reading(&tau, &t).unwrap().to_string(), "53412");
        assert!(reading(&tau, &tau).unwrap().is_identity());
        let s = sh("(4,2,1)/(2,1)");
        let r = reading(&canonical(&s, Canonical::Tau0), &canonical(&s, Canonical::TRow)).unwrap();
        assert_eq!(r.to_string(), "2134");
        assert!(reading(&tau, &canonical(&s, Canonical::TRow)).is_err());
    }

    #[test]
    fn descent_comp_examples() {
        assert_eq!(syt_descent_comp(&st(&[&[1, 2], &[3, 4]])).to_string(), "(2,2)");
        assert_eq!(syt_descent_comp(&st(&[&[1, 2, 3]])).to_string(), "(3)");
        assert_eq!(syt_descent_comp(&st(&[&[1], &[2], &[3]])).to_string(), "(1,1,1)");
    }

    #[test]
    fn displayed_labelings_example() {
        // Cells: one cell at the top in column 3, then two rows of two.
        let s = sh("(3,2,2)/(2)");
        let all = schur_labelings(&s, LabelingFilter::All);
        let t = |r: &[&[Option<u8>]]| {
            BijectiveTableau::from_rows(&r.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
        };
        let tau0 = t(&[&[None, None, Some(1)], &[Some(3), Some(2)], &[Some(5), Some(4)]]);
        let tau1 = t(&[&[None, None, Some(1)], &[Some(4), Some(2)], &[Some(5), Some(3)]]);
        let bad = t(&[&[None, None, Some(2)], &[Some(3), Some(1)], &[Some(5), Some(4)]]);
        assert_eq!(tau0, canonical(&s, Canonical::Tau0));
        assert_eq!(tau1, canonical(&s, Canonical::Tau1));
        for x in [&tau0, &tau1, &bad] {
            assert!(all.contains(x));
        }
        assert!(tau0.is_distinguished() && tau1.is_distinguished());
        assert!(!bad.is_distinguished());
        let d = schur_labelings(&sh("(2,2)/(1)"), LabelingFilter::Distinguished);
        assert!(d.contains(&canonical(&sh("(2,2)/(1)"), Canonical::Tau0)));
        assert_eq!(schur_labelings(&sh("(1)"), LabelingFilter::All).len(), 1);
    }

    #[test]
    fn schur_labeling_count_matches_brute_force() {
        for n in 1..=5 {
            for s in basic_shapes(n) {
                let brute = Permutation::all(n)
                    .into_iter()
                    .filter(|p| BijectiveTableau::new(s.clone(), p.word().to_vec()).unwrap().is_schur_labeling())
                    .count();
                assert_eq!(schur_labelings(&s, LabelingFilter::All).len(), brute, "{s}");
            }
        }
    }

    #[test]
    fn distinguished_iff_consecutive_components() {
        for n in 1..=6 {
            for s in basic_shapes(n) {
                let labels = s.component_labels();
                let k = labels.iter().max().unwrap() + 1;
                for tau in schur_labelings(&s, LabelingFilter::All) {
                    let vals = |g: usize| -> Vec<u8> {
                        tau.entries().iter().zip(&labels).filter(|(_, &l)| l == g).map(|(&e, _)| e).collect()
                    };
                    let mins: Vec<u8> = (0..k).map(|g| *vals(g).iter().min().unwrap()).collect();
                    if mins.windows(2).any(|w| w[0] > w[1]) {
                        continue;
                    }
                    let consecutive = (0..k).all(|g| {
                        let v = vals(g);
                        let lo = *v.iter().min().unwrap();
                        let hi = *v.iter().max().unwrap();
                        (hi - lo) as usize + 1 == v.len()
                    });
                    assert_eq!(tau.is_distinguished(), consecutive, "{tau}");
                }
            }
        }
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&"312".parse().unwrap());
        assert_eq!(rows(&p), vec![vec![1, 2], vec![3]]);
        assert_eq!(rows(&q), vec![vec![1, 3], vec![2]]);
        let (p, q) = rsk(&Permutation::identity(4));
        assert_eq!(rows(&p), vec![vec![1, 2, 3, 4]]);
        assert_eq!(p, q);
        let (p, q) = rsk(&"53412".parse().unwrap());
        assert_eq!(rows(&p), vec![vec![1, 2], vec![3, 4], vec![5]]);
        assert_eq!(rows(&q), vec![vec![1, 3], vec![2, 5], vec![4]]);
    }

    #[test]
    fn rsk_symmetry_and_bijectivity() {
        for n in 1..=6 {
            let mut pairs = BTreeSet::new();
            for s in Permutation::all(n) {
                let (p, q) = rsk(&s);
                assert_eq!(p.shape(), q.shape());
                assert!(p.is_standard() && q.is_standard());
                if n <= 5 {
                    assert_eq!(p, rsk(&s.inverse()).1);
                }
                pairs.insert((p, q));
            }
            assert_eq!(pairs.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn rectify_examples() {
        let t = st(&[&[1, 3], &[2]]);
        assert_eq!(rectify(&t).unwrap(), t);
        let skew = BijectiveTableau::from_rows(&[vec![None, Some(1)], vec![Some(2), Some(3)]]).unwrap();
        assert_eq!(rows(&rectify(&skew).unwrap()), vec![vec![1, 3], vec![2]]);
        let allowed: BTreeSet<Vec<usize>> =
            [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]].into_iter().collect();
        for t in enumerate_syt(&sh("(4,2,1)/(2,1)")) {
            let r = rectify(&t).unwrap();
            assert!(allowed.contains(&r.shape().lambda().to_vec()));
        }
    }

    #[test]
    fn rectify_agrees_with_rsk() {
        for n in 1..=6 {
            for s in basic_shapes(n) {
                for t in enumerate_syt(&s) {
                    assert_eq!(rectify(&t).unwrap(), rectify_via_rsk(&t), "{t}");
                }
            }
        }
    }

    #[test]
    fn readings_of_syt_are_linear_extension_sets() {
        // read_τ(SYT) ⊆ S_n is closed under the weak-order interval bounds
        // for the distinguished extremes.
        let s = sh("(4,2,1)/(2,1)");
        let tau0 = canonical(&s, Canonical::Tau0);
        let reads: BTreeSet<Permutation> =
            enumerate_syt(&s).iter().map(|t| reading(&tau0, t).unwrap()).collect();
        let i = weak_interval(&"2134".parse().unwrap(), &"4321".parse().unwrap(), Side::Left).unwrap();
        assert_eq!(reads, i.element_set());
    }

    #[test]
    fn json_roundtrip() {
        let t = canonical(&sh("(3,2)/(1)"), Canonical::Tau0);
        assert_eq!(t.to_json().to_string(), "[[null,2,1],[4,3]]");
        assert_eq!(BijectiveTableau::from_json(&t.to_json()).unwrap(), t);
    }
}
