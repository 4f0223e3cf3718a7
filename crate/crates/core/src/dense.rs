//! Dense row-major matrices. These exist for the oracles and for small-order
//! verification only; nothing on the O(n) closed-form path materializes one.

// Index loops mirror the textbook elimination formulas.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Square dense matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds the matrix entry-by-entry from `f(i, j)` (0-based indices).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        DenseMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        let mut y = vec![T::zero(); self.n];
        for i in 0..self.n {
            let mut acc = T::zero();
            for j in 0..self.n {
                acc += self.get(i, j) * x[j];
            }
            y[i] = acc;
        }
        Ok(y)
    }

    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |m, &v| if v.abs() > m { v.abs() } else { m })
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        debug_assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(other.data.iter())
            .fold(T::zero(), |m, (&a, &b)| {
                let d = (a - b).abs();
                if d > m {
                    d
                } else {
                    m
                }
            })
    }

    /// Max-norm distance from the identity matrix.
    pub fn max_abs_diff_identity(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { T::one() } else { T::zero() };
                let d = (self.get(i, j) - target).abs();
                if d > m {
                    m = d;
                }
            }
        }
        m
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.n)
            .map(|i| self.row(i).iter().copied().sum())
            .collect()
    }
}

/// LU factorization with partial pivoting, kept private behind the two
/// oracle entry points below.
struct Lu<T> {
    n: usize,
    lu: Vec<T>,
    perm: Vec<usize>,
    sign: T,
}

fn lu_factor<T: Real>(m: &DenseMatrix<T>) -> Result<Lu<T>> {
    let n = m.order();
    let mut lu = m.data.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = T::one();
    let scale = T::one().max(m.max_abs());
    let pivot_tol = real::<T>(1e-12) * scale;

    for col in 0..n {
        // Pick the largest remaining pivot in this column.
        let mut pivot_row = col;
        let mut pivot_val = lu[col * n + col].abs();
        for r in (col + 1)..n {
            let v = lu[r * n + col].abs();
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if pivot_val <= pivot_tol {
            return Err(Error::singular(
                "pivot below threshold in dense elimination",
                col,
                (pivot_val / scale).to_f64().unwrap_or(0.0),
            ));
        }
        if pivot_row != col {
            for j in 0..n {
                lu.swap(col * n + j, pivot_row * n + j);
            }
            perm.swap(col, pivot_row);
            sign = -sign;
        }
        let pivot = lu[col * n + col];
        for r in (col + 1)..n {
            let factor = lu[r * n + col] / pivot;
            lu[r * n + col] = factor;
            for j in (col + 1)..n {
                let v = lu[col * n + j];
                lu[r * n + j] -= factor * v;
            }
        }
    }
    Ok(Lu { n, lu, perm, sign })
}

impl<T: Real> Lu<T> {
    fn solve(&self, rhs: &[T]) -> Vec<T> {
        let n = self.n;
        let mut y = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = rhs[self.perm[i]];
            for j in 0..i {
                acc -= self.lu[i * n + j] * y[j];
            }
            y[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in (i + 1)..n {
                acc -= self.lu[i * n + j] * y[j];
            }
            y[i] = acc / self.lu[i * n + i];
        }
        y
    }

    fn determinant(&self) -> T {
        let mut det = self.sign;
        for i in 0..self.n {
            det *= self.lu[i * self.n + i];
        }
        det
    }
}

/// Solves `m x = rhs` by partial-pivot Gaussian elimination.
pub fn lu_solve<T: Real>(m: &DenseMatrix<T>, rhs: &[T]) -> Result<Vec<T>> {
    if rhs.len() != m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            found: rhs.len(),
        });
    }
    Ok(lu_factor(m)?.solve(rhs))
}

/// Determinant via the same elimination.
pub fn lu_determinant<T: Real>(m: &DenseMatrix<T>) -> Result<T> {
    Ok(lu_factor(m)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_solves_small_system() {
        let m = DenseMatrix::from_fn(3, |i, j| {
            [[2.0, 1.0, 0.0], [0.0, 2.0, 1.0], [1.0, 0.0, 2.0]][i][j]
        });
        let x: Vec<f64> = lu_solve(&m, &[1.0, 0.0, 0.0]).unwrap();
        let back = m.mul_vec(&x).unwrap();
        assert!((back[0] - 1.0).abs() < 1e-12);
        assert!(back[1].abs() < 1e-12);
        assert!(back[2].abs() < 1e-12);
    }

    #[test]
    fn lu_rejects_singular() {
        // Rank-1 all-ones matrix.
        let m = DenseMatrix::from_fn(3, |_, _| 1.0f64);
        assert!(matches!(
            lu_solve(&m, &[1.0, 0.0, 0.0]),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn lu_determinant_matches_cofactor_expansion() {
        let m = DenseMatrix::from_fn(3, |i, j| {
            [[2.0, 1.0, 0.0], [0.0, 2.0, 1.0], [1.0, 0.0, 2.0]][i][j]
        });
        let det: f64 = lu_determinant(&m).unwrap();
        assert!((det - 9.0).abs() < 1e-12);
    }
}
