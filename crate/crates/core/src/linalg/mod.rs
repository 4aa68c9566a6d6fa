//! Exact linear algebra over `Rat`: dense matrices, column-sparse action
//! matrices, incremental echelon forms and sparse nullspaces.

mod rational;

pub use rational::{ParseRatError, Rat};

use std::collections::BTreeMap;

pub type Vector = Vec<Rat>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Rat::ZERO; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rat::ONE;
    v
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// `y += c * x`
pub fn axpy(y: &mut [Rat], c: &Rat, x: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Rat::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::ONE);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(rows: usize, cols: &[Vector]) -> Mat {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::ZERO;
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let prow: Vec<Rat> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c).clone();
                    if !f.is_zero() {
                        let base = i * m.cols;
                        for j in c..m.cols {
                            if !prow[j].is_zero() {
                                let t = &f * &prow[j];
                                m.data[base + j] -= &t;
                            }
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
        }
        e.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = zero_vec(self.cols);
                x[f] = Rat::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(i, f);
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rat::ONE
            } else {
                Rat::ZERO
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |r, c| red.get(r, c + n).clone()))
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Rat]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug = Mat::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

/// Column-sparse square or rectangular matrix; used for generator actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpMat {
    rows: usize,
    cols: Vec<Vec<(usize, Rat)>>,
}

impl SpMat {
    pub fn zeros(rows: usize, cols: usize) -> SpMat {
        SpMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> SpMat {
        SpMat { rows: n, cols: (0..n).map(|i| vec![(i, Rat::ONE)]).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vec<(usize, Rat)>>) -> SpMat {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|e| e.0);
                let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(c.len());
                for (i, v) in c {
                    assert!(i < rows, "row index out of range");
                    match merged.last_mut() {
                        Some(last) if last.0 == i => last.1 += &v,
                        _ => merged.push((i, v)),
                    }
                }
                merged.retain(|e| !e.1.is_zero());
                merged
            })
            .collect();
        SpMat { rows, cols }
    }

    pub fn from_dense(m: &Mat) -> SpMat {
        let cols = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SpMat { rows: m.rows(), cols }
    }

    pub fn to_dense(&self) -> Mat {
        let mut m = Mat::zeros(self.rows, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Rat)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        self.cols[c].iter().find(|e| e.0 == r).map_or(Rat::ZERO, |e| e.1.clone())
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vector {
        assert_eq!(v.len(), self.cols.len());
        let mut out = zero_vec(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] += &(a * x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SpMat) -> SpMat {
        assert_eq!(self.cols.len(), other.rows);
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                for (k, b) in oc {
                    for (r, a) in &self.cols[*k] {
                        *acc.entry(*r).or_default() += &(a * b);
                    }
                }
                acc.into_iter().filter(|e| !e.1.is_zero()).collect()
            })
            .collect();
        SpMat { rows: self.rows, cols }
    }

    pub fn transpose(&self) -> SpMat {
        let mut cols: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        SpMat { rows: self.cols.len(), cols }
    }

    pub fn sub(&self, other: &SpMat) -> SpMat {
        self.add_scaled(other, &Rat::int(-1))
    }

    pub fn add_scaled(&self, other: &SpMat, c: &Rat) -> SpMat {
        assert_eq!((self.rows, self.cols.len()), (other.rows, other.cols.len()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Rat> = a.iter().cloned().collect();
                for (r, v) in b {
                    *acc.entry(*r).or_default() += &(c * v);
                }
                acc.into_iter().filter(|e| !e.1.is_zero()).collect()
            })
            .collect();
        SpMat { rows: self.rows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Conjugate by a permutation of basis indices: entry (r, c) moves to
    /// (p[r], p[c]).
    pub fn permute(&self, p: &[usize]) -> SpMat {
        let mut cols = vec![Vec::new(); self.cols.len()];
        for (c, col) in self.cols.iter().enumerate() {
            cols[p[c]] = col.iter().map(|(r, v)| (p[*r], v.clone())).collect();
        }
        SpMat::from_columns(self.rows, cols)
    }

    pub fn block_diag(blocks: &[&SpMat]) -> SpMat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut cols = Vec::new();
        let mut r0 = 0;
        for b in blocks {
            for col in &b.cols {
                cols.push(col.iter().map(|(r, v)| (r + r0, v.clone())).collect());
            }
            r0 += b.rows;
        }
        SpMat { rows, cols }
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `Q^dim`.
/// Rows are kept fully reduced with a leading one at the pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(dim: usize, vs: impl IntoIterator<Item = Vector>) -> Echelon {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -&v[p];
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` in terms of `basis()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vec(self.dim);
        for (c, row) in coords.iter().zip(&self.rows) {
            axpy(&mut recon, c, row);
        }
        (recon.as_slice() == v).then_some(coords)
    }

    /// Basis of the orthogonal complement under the standard pairing.
    pub fn annihilator(&self) -> Vec<Vector> {
        let m = Mat::from_rows(if self.rows.is_empty() {
            vec![zero_vec(self.dim)]
        } else {
            self.rows.clone()
        });
        m.kernel()
    }
}

/// Nullspace of a sparse system given as rows of `(column, coefficient)`.
pub fn sparse_kernel(rows: impl IntoIterator<Item = Vec<(usize, Rat)>>, ncols: usize) -> Vec<Vector> {
    let mut pivot_rows: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
    for mut row in rows {
        row.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += &v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        let mut row = merged;
        loop {
            let Some((lead, lc)) = row.first().cloned() else {
                break;
            };
            match pivot_rows.get(&lead) {
                Some(prow) => {
                    row = sparse_combine(&row, prow, &(-&lc));
                }
                None => {
                    let inv = lc.recip();
                    let normalized: Vec<(usize, Rat)> =
                        row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
                    pivot_rows.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_rows.contains_key(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = zero_vec(ncols);
        x[f] = Rat::ONE;
        for (&p, prow) in pivot_rows.iter().rev() {
            let mut acc = Rat::ZERO;
            for (c, v) in &prow[1..] {
                if !x[*c].is_zero() {
                    acc += &(v * &x[*c]);
                }
            }
            x[p] = -acc;
        }
        basis.push(x);
    }
    basis
}

/// `a + c * b` for sorted sparse rows.
fn sparse_combine(a: &[(usize, Rat)], b: &[(usize, Rat)], c: &Rat) -> Vec<(usize, Rat)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rat {
        Rat::int(v)
    }

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&k[0])));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[q(1), q(3)]).is_none());
    }

    #[test]
    fn sparse_kernel_merges_repeated_columns() {
        let rows = vec![vec![(0, q(1)), (1, q(1)), (0, q(-1))], vec![(2, q(1)), (2, q(1))]];
        let k = sparse_kernel(rows, 3);
        assert_eq!(k, vec![vec![q(1), q(0), q(0)]]);
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let a = m(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 0, 0]]);
        let rows = (0..a.rows()).map(|r| {
            a.row(r).iter().enumerate().map(|(c, v)| (c, v.clone())).collect::<Vec<_>>()
        });
        let k = sparse_kernel(rows, 4);
        assert_eq!(k.len(), a.kernel().len());
        for v in &k {
            assert!(is_zero_vec(&a.mul_vec(v)));
        }
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new(3);
        e.insert(vec![q(1), q(1), q(0)]);
        e.insert(vec![q(0), q(1), q(1)]);
        assert!(!e.insert(vec![q(1), q(2), q(1)]));
        let v = vec![q(2), q(3), q(1)];
        let c = e.coordinates(&v).unwrap();
        let mut r = zero_vec(3);
        for (ci, b) in c.iter().zip(e.basis()) {
            axpy(&mut r, ci, b);
        }
        assert_eq!(r, v);
        assert!(e.coordinates(&[q(0), q(0), q(1)]).is_none());
        assert_eq!(e.annihilator().len(), 1);
    }

    #[test]
    fn spmat_products() {
        let a = SpMat::from_dense(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!(a.mul(&a), SpMat::identity(2));
        assert_eq!(a.transpose(), a);
        assert_eq!(a.mul_vec(&[q(3), q(5)]), vec![q(5), q(3)]);
    }
}
