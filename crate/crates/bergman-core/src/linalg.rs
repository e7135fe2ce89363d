//! Dense exact linear algebra over the Gaussian rationals.
//!
//! Plain Gaussian elimination with the first nonzero pivot in row order;
//! no fraction-free tricks are needed since coefficients are already
//! rationals in lowest terms. Pivoting is deterministic, so factoring the
//! same matrix twice yields identical results.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::scalar::GaussianRational;
use crate::Error;

/// Row-major dense matrix of Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, data: vec![GaussianRational::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.ncols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }
}

/// LU factorization with recorded row swaps; reusable for many
/// right-hand sides.
#[derive(Debug, Clone)]
pub struct LuDecomposition {
    n: usize,
    /// L strictly below the diagonal (unit diagonal implied), U on and
    /// above it.
    factors: Matrix,
    /// Row swaps `(i, pivot_row)` in elimination order.
    swaps: Vec<(usize, usize)>,
}

impl LuDecomposition {
    /// Factor a square matrix. The pivot for each column is the first row
    /// (top to bottom) with a nonzero entry.
    pub fn new(mut a: Matrix) -> Result<Self, Error> {
        assert_eq!(a.nrows, a.ncols, "LU requires a square matrix");
        let n = a.nrows;
        let mut swaps = Vec::new();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                a.swap_rows(col, pivot);
                swaps.push((col, pivot));
            }
            let inv_p = GaussianRational::one() / a.get(col, col).clone();
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone() * inv_p.clone();
                a.set(r, col, factor.clone());
                for c in col + 1..n {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(col, c).clone();
                    a.set(r, c, v);
                }
            }
        }
        Ok(LuDecomposition { n, factors: a, swaps })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Solve `A x = b` exactly.
    pub fn solve(&self, b: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(b.len(), self.n);
        let mut y = b.to_vec();
        for &(i, p) in &self.swaps {
            y.swap(i, p);
        }
        // forward substitution (unit lower factor)
        for i in 0..self.n {
            for j in 0..i {
                let t = self.factors.get(i, j).clone() * y[j].clone();
                y[i] = y[i].clone() - t;
            }
        }
        // back substitution
        for i in (0..self.n).rev() {
            for j in i + 1..self.n {
                let t = self.factors.get(i, j).clone() * y[j].clone();
                y[i] = y[i].clone() - t;
            }
            y[i] = y[i].clone() / self.factors.get(i, i).clone();
        }
        y
    }

    /// Determinant of the factored matrix.
    pub fn det(&self) -> GaussianRational {
        let mut d = GaussianRational::one();
        for i in 0..self.n {
            d *= self.factors.get(i, i).clone();
        }
        if self.swaps.len() % 2 == 1 {
            d = -d;
        }
        d
    }
}

/// One-shot exact solve of `A x = b`.
pub fn solve(a: &Matrix, b: &[GaussianRational]) -> Result<Vec<GaussianRational>, Error> {
    Ok(LuDecomposition::new(a.clone())?.solve(b))
}

/// Exact determinant (zero for singular matrices).
pub fn determinant(a: &Matrix) -> GaussianRational {
    match LuDecomposition::new(a.clone()) {
        Ok(lu) => lu.det(),
        Err(_) => GaussianRational::zero(),
    }
}

/// Exact inverse of a square matrix.
pub fn inverse(a: &Matrix) -> Result<Matrix, Error> {
    let n = a.nrows();
    let lu = LuDecomposition::new(a.clone())?;
    let mut out = Matrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![GaussianRational::zero(); n];
        e[j] = GaussianRational::one();
        let col = lu.solve(&e);
        for i in 0..n {
            out.set(i, j, col[i].clone());
        }
    }
    Ok(out)
}

/// Reduce to reduced row echelon form in place; returns the pivot
/// columns.
pub fn rref(a: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.ncols() {
        if row == a.nrows() {
            break;
        }
        let Some(p) = (row..a.nrows()).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = GaussianRational::one() / a.get(row, col).clone();
        for c in col..a.ncols() {
            let v = a.get(row, c).clone() * inv.clone();
            a.set(row, c, v);
        }
        for r in 0..a.nrows() {
            if r != row && !a.get(r, col).is_zero() {
                let factor = a.get(r, col).clone();
                for c in col..a.ncols() {
                    let v = a.get(r, c).clone() - factor.clone() * a.get(row, c).clone();
                    a.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank via row reduction.
pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

/// Basis of the null space `{x : A x = 0}`, one vector per free column,
/// in ascending column order.
pub fn null_space(a: &Matrix) -> Vec<Vec<GaussianRational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().copied().enumerate();
    let mut pivot_row_of = vec![None; a.ncols()];
    for (row, col) in &mut pivot_iter {
        pivot_row_of[col] = Some(row);
    }
    for free in 0..a.ncols() {
        if pivot_row_of[free].is_some() {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); a.ncols()];
        v[free] = GaussianRational::one();
        for (col, row_opt) in pivot_row_of.iter().enumerate() {
            if let Some(row) = row_opt {
                v[col] = -m.get(*row, free).clone();
            }
        }
        basis.push(v);
    }
    basis
}
