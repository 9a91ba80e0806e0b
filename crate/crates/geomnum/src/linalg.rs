//! Small dense matrices over a generic [`Scalar`].
//!
//! Dimensions in this crate are tiny (lattice ranks up to ~12), so a plain
//! row-major `Vec` with Gaussian elimination covers everything: determinants,
//! solves, rank and null spaces. Pivoting picks the largest entry by absolute
//! value, which is a no-op for exact scalars and standard partial pivoting
//! for floats. Rank decisions compare pivots against `tol * row_scale` so the
//! exact path (tol = 0) degenerates to `pivot != 0`.

use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Build from row slices; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().cloned()).collect(),
        }
    }

    /// Build from column slices.
    pub fn from_cols(cols: &[Vec<S>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    acc += self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Gram matrix `AᵀA` of the columns.
    pub fn gram(&self) -> Self {
        let mut g = Self::zeros(self.cols, self.cols);
        for a in 0..self.cols {
            for b in a..self.cols {
                let mut acc = S::zero();
                for i in 0..self.rows {
                    acc += self[(i, a)].clone() * self[(i, b)].clone();
                }
                g[(a, b)] = acc.clone();
                g[(b, a)] = acc;
            }
        }
        g
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = S::one();
        for k in 0..n {
            let mut pivot = k;
            for i in k + 1..n {
                if m[(i, k)].abs() > m[(pivot, k)].abs() {
                    pivot = i;
                }
            }
            if m[(pivot, k)].is_zero() {
                return S::zero();
            }
            if pivot != k {
                m.swap_rows(pivot, k);
                det = -det;
            }
            det = det * m[(k, k)].clone();
            for i in k + 1..n {
                let factor = m[(i, k)].clone() / m[(k, k)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let sub = factor.clone() * m[(k, j)].clone();
                    m[(i, j)] -= sub;
                }
            }
        }
        det
    }

    /// Solve `A x = b` for square nonsingular `A`.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        for k in 0..n {
            let mut pivot = k;
            for i in k + 1..n {
                if m[(i, k)].abs() > m[(pivot, k)].abs() {
                    pivot = i;
                }
            }
            if m[(pivot, k)].is_zero() {
                return None;
            }
            if pivot != k {
                m.swap_rows(pivot, k);
                rhs.swap(pivot, k);
            }
            for i in k + 1..n {
                let factor = m[(i, k)].clone() / m[(k, k)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let sub = factor.clone() * m[(k, j)].clone();
                    m[(i, j)] -= sub;
                }
                let sub = factor.clone() * rhs[k].clone();
                rhs[i] -= sub;
            }
        }
        let mut x = vec![S::zero(); n];
        for k in (0..n).rev() {
            let mut acc = rhs[k].clone();
            for j in k + 1..n {
                acc -= m[(k, j)].clone() * x[j].clone();
            }
            x[k] = acc / m[(k, k)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for j in 0..n {
            let mut e = vec![S::zero(); n];
            e[j] = S::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                out[(i, j)] = col[i].clone();
            }
        }
        Some(out)
    }

    /// Row-echelon rank with pivot threshold `tol * scale(row)`.
    pub fn rank(&self, tol: &S) -> usize {
        self.echelon(tol).1
    }

    /// Basis of the null space `{x : A x = 0}`, using the same pivot threshold.
    pub fn null_space(&self, tol: &S) -> Vec<Vec<S>> {
        let (m, _rank, pivots) = self.echelon(tol);
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![S::zero(); self.cols];
            x[f] = S::one();
            // Back-substitute through the pivot rows (echelon order).
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = S::zero();
                for j in pc + 1..self.cols {
                    acc += m[(row, j)].clone() * x[j].clone();
                }
                x[pc] = -acc / m[(row, pc)].clone();
            }
            basis.push(x);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Forward elimination; returns (echelon matrix, rank, pivot columns).
    fn echelon(&self, tol: &S) -> (Self, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pivot = row;
            for i in row + 1..self.rows {
                if m[(i, col)].abs() > m[(pivot, col)].abs() {
                    pivot = i;
                }
            }
            // Scale-aware zero test: compare against tol times the largest
            // entry of the candidate pivot row (1 when the row is all small).
            let mut scale = S::one();
            for j in 0..self.cols {
                if m[(pivot, j)].abs() > scale {
                    scale = m[(pivot, j)].abs();
                }
            }
            if m[(pivot, col)].abs() <= tol.clone() * scale {
                continue;
            }
            m.swap_rows(pivot, row);
            for i in row + 1..self.rows {
                let factor = m[(i, col)].clone() / m[(row, col)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let sub = factor.clone() * m[(row, j)].clone();
                    m[(i, j)] -= sub;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots.len(), pivots)
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}
