//! Dense 0-1 matrices and the Ferrers (couple-free) test.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Row-major 0-1 matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

/// Indices of a 2x2 permutation submatrix.
///
/// Rows and columns are both given in ascending order, so the submatrix is
/// either `[[1,0],[0,1]]` or `[[0,1],[1,0]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Couple {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    /// Builds a matrix from rows of 0/1 values; ragged input is an error.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BinaryMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::argument("matrix rows have different lengths"));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::argument("matrix entries must be 0 or 1")),
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Interchanges zeros and ones.
    pub fn complement(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| !v).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| !v)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&v| v).count()
    }

    /// Finds a couple, if any.
    ///
    /// A matrix is couple-free exactly when its row supports form a chain
    /// under inclusion. Rows are sorted by weight and each consecutive pair
    /// is checked for containment; the first failure yields the witness.
    pub fn find_couple(&self) -> Option<Couple> {
        let weight = |i: usize| self.row(i).iter().filter(|&&v| v).count();
        let mut order: Vec<usize> = (0..self.rows).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(weight(i)));

        for pair in order.windows(2) {
            let (big, small) = (pair[0], pair[1]);
            let only_small = (0..self.cols).find(|&c| self.get(small, c) && !self.get(big, c));
            if let Some(c_small) = only_small {
                // weight(big) >= weight(small) and small is not inside big,
                // so big has a column small lacks.
                let c_big = (0..self.cols)
                    .find(|&c| self.get(big, c) && !self.get(small, c))
                    .expect("heavier row not contained in lighter row");
                return Some(Couple {
                    rows: (big.min(small), big.max(small)),
                    cols: (c_big.min(c_small), c_big.max(c_small)),
                });
            }
        }
        None
    }

    pub fn is_ferrers(&self) -> bool {
        self.find_couple().is_none()
    }
}

/// Returns a couple of `m`, if one exists.
pub fn has_couple(m: &BinaryMatrix) -> Option<Couple> {
    m.find_couple()
}
