//! Dense matrices over Q(ξ_r) with exact Gaussian elimination.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::CycElement;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix {
    order: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycElement>,
}

impl Matrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Matrix { order, rows, cols, data: vec![CycElement::zero(order); rows * cols] }
    }

    pub fn identity(order: u32, size: usize) -> Self {
        let mut m = Self::zeros(order, size, size);
        for i in 0..size {
            m[(i, i)] = CycElement::one(order);
        }
        m
    }

    /// Builds a matrix from row vectors, which must all have the same length.
    pub fn from_rows(order: u32, rows: Vec<Vec<CycElement>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let data: Vec<CycElement> = rows.into_iter().flat_map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            row
        }).collect();
        Matrix { order, rows: nrows, cols, data }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[CycElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> CycElement {
        (0..self.rows.min(self.cols))
            .fold(CycElement::zero(self.order), |acc, i| &acc + &self[(i, i)])
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ArityMismatch(self.cols, other.rows));
        }
        let mut out = Matrix::zeros(self.order, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycElement]) -> Vec<CycElement> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(CycElement::zero(self.order), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduces a copy to row echelon form; returns it together with the pivot columns and
    /// the sign of the row permutation used.
    fn echelon(&self) -> (Matrix, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut negated = false;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            if p != row {
                m.swap_rows(p, row);
                negated = !negated;
            }
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for i in row + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let factor = &m[(i, col)] * &inv;
                for j in col..m.cols {
                    let sub = &factor * &m[(row, j)];
                    m[(i, j)] = &m[(i, j)] - &sub;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, negated)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn determinant(&self) -> Result<CycElement> {
        if self.rows != self.cols {
            return Err(Error::ArityMismatch(self.rows, self.cols));
        }
        let (m, pivots, negated) = self.echelon();
        if pivots.len() < self.rows {
            return Ok(CycElement::zero(self.order));
        }
        let det = (0..self.rows).fold(CycElement::one(self.order), |acc, i| &acc * &m[(i, i)]);
        Ok(if negated { -det } else { det })
    }

    /// Gauss-Jordan inverse. Fails with `DivisionByZero` on a singular matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ArityMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.order, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycElement::one(self.order);
        }
        for col in 0..n {
            let p = (col..n).find(|&i| !aug[(i, col)].is_zero()).ok_or(Error::DivisionByZero)?;
            aug.swap_rows(p, col);
            let inv = aug[(col, col)].inv()?;
            for j in 0..2 * n {
                aug[(col, j)] = &aug[(col, j)] * &inv;
            }
            for i in 0..n {
                if i == col || aug[(i, col)].is_zero() {
                    continue;
                }
                let factor = aug[(i, col)].clone();
                for j in 0..2 * n {
                    let sub = &factor * &aug[(col, j)];
                    aug[(i, j)] = &aug[(i, j)] - &sub;
                }
            }
        }
        let mut out = Matrix::zeros(self.order, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(out)
    }

    /// Indices of a maximal set of linearly independent rows, smallest indices first.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut rank = 0;
        for i in 0..self.rows {
            let mut rows: Vec<Vec<CycElement>> = chosen.iter().map(|&k| self.row(k).to_vec()).collect();
            rows.push(self.row(i).to_vec());
            let r = Matrix::from_rows(self.order, rows).rank();
            if r > rank {
                rank = r;
                chosen.push(i);
                if rank == self.cols {
                    break;
                }
            }
        }
        chosen
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycElement;
    fn index(&self, (i, j): (usize, usize)) -> &CycElement {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycElement {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
