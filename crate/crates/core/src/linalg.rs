//! Exact Gaussian elimination over Q.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: alloc::vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank by fraction-exact row reduction.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot, rank);
            let inv = m.get(rank, col).recip();
            for r in (rank + 1)..m.rows {
                let v = m.get(r, col).clone();
                if v.is_zero() {
                    continue;
                }
                let factor = &v * &inv;
                for c in col..m.cols {
                    let sub = &factor * m.get(rank, c);
                    let idx = r * m.cols + c;
                    m.data[idx] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the right null space.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rank_of_small_matrices() {
        let mut m = RationalMatrix::zeros(3, 3);
        for (i, v) in [1, 2, 3, 2, 4, 6, 1, 0, 1].iter().enumerate() {
            m.set(i / 3, i % 3, int(*v));
        }
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
        assert_eq!(RationalMatrix::zeros(2, 5).rank(), 0);
    }
}
