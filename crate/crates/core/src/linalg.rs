//! Dense matrices over a [`FiniteField`], plus exact rational kernels of
//! integer matrices.

use num_rational::Rational64;

use crate::field::{Elem, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|row| row.iter().copied()).collect();
        Self::from_vec(r, c, data)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Elem>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Elem] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, f: &FiniteField, c: Elem) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(c, a)).collect();
        Matrix { data, ..*self }
    }

    pub fn map_entries(&self, g: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix {
            data: self.data.iter().map(|&a| g(a)).collect(),
            ..*self
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &FiniteField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in 0..m.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : self * x = 0}` as the columns of the returned matrix.
    ///
    /// One basis vector per free column, in ascending order, with a `1` in that
    /// free coordinate; the result is in reduced column echelon form with respect
    /// to the free coordinates.
    pub fn nullspace(&self, f: &FiniteField) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(r.get(row, fc)));
            }
        }
        basis
    }

    /// A surjection `P` with `ker P = im self` (rows of `P` span the left kernel).
    pub fn cokernel_map(&self, f: &FiniteField) -> Matrix {
        self.transpose().nullspace(f).transpose()
    }

    /// Basis of the column space, as columns, chosen among the original columns.
    pub fn column_space(&self, f: &FiniteField) -> Matrix {
        let (_, pivots) = self.rref(f);
        let cols: Vec<Vec<Elem>> = pivots.iter().map(|&c| self.column(c)).collect();
        Matrix::from_columns(self.rows, &cols)
    }

    pub fn inverse(&self, f: &FiniteField) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, f: &FiniteField) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Solves `self * x = b` for a single column `b`; `None` if inconsistent.
    pub fn solve(&self, f: &FiniteField, b: &[Elem]) -> Option<Vec<Elem>> {
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Invertible `P`, `Q` with `P * self * Q` equal to the rank normal form
    /// `[[I_r, 0], [0, 0]]`.
    pub fn rank_normal_form(&self, f: &FiniteField) -> (Matrix, Matrix, usize) {
        // Row reduce with a tracked left factor.
        let mut aug = Matrix::zeros(self.rows, self.cols + self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols + i, 1);
        }
        let (red, _) = aug.rref(f);
        let mut p = Matrix::zeros(self.rows, self.rows);
        let mut e = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                e.set(i, j, red.get(i, j));
            }
            for j in 0..self.rows {
                p.set(i, j, red.get(i, self.cols + j));
            }
        }
        // e is in rref; pivots may have been hidden by the identity block, recompute.
        let (_, pivots) = e.rref(f);
        let r = pivots.len();
        // Column operations: move pivot columns to the front, clear the rest.
        let mut qm = Matrix::identity(self.cols);
        let mut order: Vec<usize> = pivots.clone();
        order.extend((0..self.cols).filter(|c| !pivots.contains(c)));
        let mut perm = Matrix::zeros(self.cols, self.cols);
        for (new, &old) in order.iter().enumerate() {
            perm.set(old, new, 1);
        }
        qm = qm.mul(f, &perm);
        let ep = e.mul(f, &perm);
        // ep = [[I_r, B], [0, 0]]; clear B with [[I, -B], [0, I]].
        let mut clear = Matrix::identity(self.cols);
        for i in 0..r {
            for j in r..self.cols {
                clear.set(i, j, f.neg(ep.get(i, j)));
            }
        }
        qm = qm.mul(f, &clear);
        (p, qm, r)
    }
}

/// The rank normal form `[[I_r, 0], [0, 0]]` of the given shape.
pub fn rank_normal(rows: usize, cols: usize, r: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..r {
        m.set(i, i, 1);
    }
    m
}

/// Block diagonal matrix.
pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
    let rows: usize = blocks.iter().map(|b| b.rows).sum();
    let cols: usize = blocks.iter().map(|b| b.cols).sum();
    let mut m = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    m
}

/// Kernel of an integer matrix over the rationals, as a list of basis vectors
/// (one per free column, ascending).
pub fn rational_kernel(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i][c] != Rational64::from_integer(0)) else {
            continue;
        };
        a.swap(pr, r);
        let inv = Rational64::from_integer(1) / a[r][c];
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && a[i][c] != Rational64::from_integer(0) {
                let factor = a[i][c];
                for j in 0..cols {
                    let sub = factor * a[r][j];
                    a[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational64::from_integer(0); cols];
            v[fc] = Rational64::from_integer(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc];
            }
            v
        })
        .collect()
}
