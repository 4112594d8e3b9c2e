//! Dense matrices over a [`Field`] and rank by Gaussian elimination.

use std::ops::{Index, IndexMut};

use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    /// `rows x cols` matrix with every entry equal to `fill`.
    pub fn filled(rows: usize, cols: usize, fill: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![fill; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Rank, computed on a copy.
    pub fn rank(&self) -> usize {
        self.clone().into_rank()
    }

    /// Rank, reducing `self` in place to row echelon form.
    pub fn into_rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let mut pivot = None;
            let mut best = 0.0;
            for r in rank..self.rows {
                let w = self[(r, col)].magnitude();
                if w > best && !self[(r, col)].is_zero() {
                    best = w;
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(rank, p);
            let inv = self[(rank, col)]
                .inverse()
                .expect("nonzero pivot is invertible");
            for r in rank + 1..self.rows {
                if self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone() * inv.clone();
                for c in col..self.cols {
                    let delta = factor.clone() * self[(rank, c)].clone();
                    let cell = &mut self[(r, c)];
                    *cell = cell.clone() - delta;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}
