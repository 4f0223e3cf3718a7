//! Circulant matrices represented by their first row, the index-reversal
//! permutation `tau`, and the elementary algebra connecting them.
//!
//! A circulant of order `n` with first row `a = (a_1, ..., a_n)` has entries
//! `A[i][j] = a_{1 + (j - i) mod n}` (1-based). Everything here stores rows
//! 0-based; the 1-based convention only appears where a formula is quoted.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Real, DEFAULT_DENSE_CAP};

/// First row of a circulant matrix. The universal handle: every operation in
/// the crate consumes or produces one of these.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantVector<T> {
    entries: Vec<T>,
}

impl<T: Real> CirculantVector<T> {
    /// Wraps a row. Fails on an empty vector; order `n >= 1` is an invariant.
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(CirculantVector { entries })
    }

    pub fn from_slice(entries: &[T]) -> Result<Self> {
        Self::new(entries.to_vec())
    }

    /// `e = (1, 0, ..., 0)`; materializes to the identity matrix.
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        let mut entries = vec![T::zero(); n];
        entries[0] = T::one();
        CirculantVector { entries }
    }

    /// The all-ones row; materializes to the all-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        CirculantVector {
            entries: vec![T::one(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<T> {
        self.entries
    }

    /// Row sum `<a, 1>`; the eigenvalue attached to the all-ones eigenvector.
    pub fn sum(&self) -> T {
        self.entries.iter().copied().sum()
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |m, &v| if v.abs() > m { v.abs() } else { m })
    }

    /// Applies the `tau` index reversal: keeps the first entry, reverses the
    /// rest. An involution, and exactly the first row of the transpose.
    pub fn tau_permute(&self) -> Self {
        let tau = TauPermutation::new(self.len());
        CirculantVector {
            entries: tau.permute(&self.entries),
        }
    }

    /// Materializes the full matrix, guarded by the default dense cap.
    pub fn materialize(&self) -> Result<DenseMatrix<T>> {
        self.materialize_capped(DEFAULT_DENSE_CAP)
    }

    pub fn materialize_capped(&self, cap: usize) -> Result<DenseMatrix<T>> {
        let n = self.len();
        if n > cap {
            return Err(Error::DenseCapExceeded { n, cap });
        }
        Ok(DenseMatrix::from_fn(n, |i, j| {
            self.entries[(j + n - i) % n]
        }))
    }

    /// `Circ(a) x`, computed directly in O(n^2) without materializing.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        let n = self.len();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let a = &self.entries;
        let mut y = vec![T::zero(); n];
        for (i, yi) in y.iter_mut().enumerate() {
            let mut acc = T::zero();
            // a[(j - i) mod n] * x[j], split to avoid the modulo in the loop
            for j in i..n {
                acc += a[j - i] * x[j];
            }
            for j in 0..i {
                acc += a[j + n - i] * x[j];
            }
            *yi = acc;
        }
        Ok(y)
    }

    /// First row of the product `Circ(a) Circ(b)`.
    ///
    /// Computed as `c_tau` with `c = Circ(x) y_tau`, where `(x, y)` is the
    /// canonically ordered operand pair; circulants commute, and fixing the
    /// evaluation order makes `multiply(a, b)` and `multiply(b, a)` agree
    /// bit for bit.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let n = self.len();
        if other.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: other.len(),
            });
        }
        let (x, y) = if slice_le(&self.entries, &other.entries) {
            (self, other)
        } else {
            (other, self)
        };
        let c = x.apply(&y.tau_permute().entries)?;
        Ok(CirculantVector { entries: c }.tau_permute())
    }

    /// The symmetric matrix `P_tau Circ(a)`.
    pub fn left_circulant(&self, cap: usize) -> Result<DenseMatrix<T>> {
        let n = self.len();
        if n > cap {
            return Err(Error::DenseCapExceeded { n, cap });
        }
        let tau = TauPermutation::new(n);
        Ok(DenseMatrix::from_fn(n, |i, j| {
            self.entries[(j + n - tau.apply(i)) % n]
        }))
    }

    /// The symmetric matrix `Circ(a) P_tau`.
    pub fn right_circulant(&self, cap: usize) -> Result<DenseMatrix<T>> {
        let n = self.len();
        if n > cap {
            return Err(Error::DenseCapExceeded { n, cap });
        }
        let tau = TauPermutation::new(n);
        Ok(DenseMatrix::from_fn(n, |i, j| {
            self.entries[(tau.apply(j) + n - i) % n]
        }))
    }
}

impl<T: Real> AsRef<[T]> for CirculantVector<T> {
    fn as_ref(&self) -> &[T] {
        &self.entries
    }
}

fn slice_le<T: Real>(a: &[T], b: &[T]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Less) => return true,
            Some(std::cmp::Ordering::Greater) => return false,
            _ => continue,
        }
    }
    true
}

/// The permutation fixing index 1 and reversing indices 2..n (1-based).
/// Conjugating a circulant by it transposes the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauPermutation {
    n: usize,
}

impl TauPermutation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "order must be at least 1");
        TauPermutation { n }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Image of a 0-based index: 0 -> 0, i -> n - i.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.n - i
        }
    }

    pub fn permute<T: Copy>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n);
        (0..self.n).map(|i| x[self.apply(i)]).collect()
    }

    /// The permutation matrix `P_tau`; its own inverse and transpose.
    pub fn matrix<T: Real>(&self, cap: usize) -> Result<DenseMatrix<T>> {
        if self.n > cap {
            return Err(Error::DenseCapExceeded { n: self.n, cap });
        }
        let mut m = DenseMatrix::zeros(self.n);
        for j in 0..self.n {
            m.set(self.apply(j), j, T::one());
        }
        Ok(m)
    }
}

/// Builds the left- and right-circulant matrices of the *inverse* given a
/// verified inverse row `g` of `a`: `P_tau Circ(a)` times the first output is
/// the identity, and `Circ(a) P_tau` times the second is as well. The check
/// runs at construction; a row that is not actually the inverse is rejected.
pub fn left_right_inverse<T: Real>(
    a: &CirculantVector<T>,
    g: &CirculantVector<T>,
    cap: usize,
) -> Result<(DenseMatrix<T>, DenseMatrix<T>)> {
    let n = a.len();
    if g.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.len(),
        });
    }
    // If g is the first row of Circ(a)^{-1}, the left/right circulant
    // inverses are built from the first *column* g_tau.
    let g_col = g.tau_permute();
    let left = g_col.left_circulant(cap)?;
    let right = g_col.right_circulant(cap)?;

    let scale = T::one().max(a.max_abs()) * T::one().max(g.max_abs());
    let tol = crate::scalar::real::<T>(1e-8) * scale;
    let left_check = a.left_circulant(cap)?.mul(&left)?.max_abs_diff_identity();
    let right_check = a.right_circulant(cap)?.mul(&right)?.max_abs_diff_identity();
    if left_check > tol || right_check > tol {
        return Err(Error::invalid(
            "provided row is not the inverse of the given circulant",
        ));
    }
    Ok((left, right))
}
