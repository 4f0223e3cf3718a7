//! Independent ground truth: direct DFT diagonalization (eigenvalues,
//! determinant, inverse row), a dense partial-pivot solver, and the exact
//! rational inverse formulas for orders 2 and 3.
//!
//! The DFT here is the plain O(n^2) summation. These routines exist to be
//! trusted, not to be fast, and complex arithmetic stays inside this module:
//! every public output is real.

use num_complex::Complex;

use crate::circulant::CirculantVector;
use crate::closed_form::{InverseResult, Method};
use crate::dense::{lu_determinant, lu_solve};
use crate::error::{Error, Result};
use crate::scalar::{real, real_of, Real};

/// Eigenstructure of `Circ(a)`: the k-th eigenvalue is the symbol polynomial
/// `P_a(x) = sum_j a_j x^{j-1}` evaluated at the k-th power of the primitive
/// n-th root of unity.
#[derive(Debug, Clone)]
pub struct SpectralData<T> {
    pub n: usize,
    pub omega: Complex<T>,
    pub eigenvalues: Vec<Complex<T>>,
    pub row: CirculantVector<T>,
}

/// Outcome of an invertibility test. `margin` is the smallest
/// scale-normalized magnitude among the factors (or eigenvalues) whose
/// non-vanishing the relevant characterization requires; `witness` is the
/// index of the factor achieving it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvertCertificate<T> {
    pub invertible: bool,
    pub margin: T,
    pub witness: usize,
}

impl<T: Real> InvertCertificate<T> {
    pub fn from_margin(margin: T, witness: usize, tol: T) -> Self {
        InvertCertificate {
            invertible: margin > tol,
            margin,
            witness,
        }
    }

    pub(crate) fn singular_error(&self, reason: &str) -> Error {
        Error::singular(reason, self.witness, self.margin.to_f64().unwrap_or(0.0))
    }
}

/// Determinant value plus an overflow flag: for large orders or large entries
/// the eigenvalue product leaves the representable range, in which case the
/// value is +/- infinity and `overflow` is set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetResult<T> {
    pub value: T,
    pub overflow: bool,
}

/// Eigenvalues by direct DFT summation, a fixed order per k.
pub fn spectrum<T: Real>(a: &CirculantVector<T>) -> SpectralData<T> {
    let n = a.len();
    let two_pi = T::PI() + T::PI();
    let omega = Complex::from_polar(T::one(), two_pi / real_of::<T>(n));
    let eigenvalues = (0..n)
        .map(|k| {
            let wk = Complex::from_polar(T::one(), two_pi * real_of::<T>(k) / real_of::<T>(n));
            let mut acc = Complex::new(T::zero(), T::zero());
            let mut power = Complex::new(T::one(), T::zero());
            for &coeff in a.as_slice() {
                acc = acc + power.scale(coeff);
                power = power * wk;
            }
            acc
        })
        .collect();
    SpectralData {
        n,
        omega,
        eigenvalues,
        row: a.clone(),
    }
}

impl<T: Real> SpectralData<T> {
    /// The eigenvector `t_k = (1, w^k, w^{2k}, ...)` attached to eigenvalue k.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex<T>> {
        let two_pi = T::PI() + T::PI();
        let wk = Complex::from_polar(T::one(), two_pi * real_of::<T>(k) / real_of::<T>(self.n));
        let mut out = Vec::with_capacity(self.n);
        let mut power = Complex::new(T::one(), T::zero());
        for _ in 0..self.n {
            out.push(power);
            power = power * wk;
        }
        out
    }

    pub fn min_abs_eigenvalue(&self) -> (usize, T) {
        let mut best = (0usize, self.eigenvalues[0].norm());
        for (k, ev) in self.eigenvalues.iter().enumerate().skip(1) {
            let m = ev.norm();
            if m < best.1 {
                best = (k, m);
            }
        }
        best
    }

    pub fn max_abs_eigenvalue(&self) -> T {
        self.eigenvalues
            .iter()
            .fold(T::zero(), |m, ev| m.max(ev.norm()))
    }

    /// Scale-normalized singularity verdict: singular iff some
    /// `|lambda_k| <= tol * max(1, max_k |lambda_k|)`.
    pub fn certificate(&self, tol: T) -> InvertCertificate<T> {
        let (witness, min) = self.min_abs_eigenvalue();
        let scale = T::one().max(self.max_abs_eigenvalue());
        InvertCertificate::from_margin(min / scale, witness, tol)
    }
}

/// Determinant as the product of the eigenvalues.
pub fn determinant<T: Real>(a: &CirculantVector<T>) -> DetResult<T> {
    let spec = spectrum(a);
    let mut prod = Complex::new(T::one(), T::zero());
    for ev in &spec.eigenvalues {
        prod = prod * *ev;
    }
    if !prod.re.is_finite() || !prod.im.is_finite() {
        let value = if prod.re.is_nan() {
            T::infinity()
        } else {
            prod.re
        };
        return DetResult {
            value,
            overflow: true,
        };
    }
    // Real input: conjugate eigenvalue pairing forces a real product, any
    // imaginary residue is roundoff.
    debug_assert!(prod.im.abs() <= real::<T>(1e-8) * T::one().max(prod.norm()));
    DetResult {
        value: prod.re,
        overflow: false,
    }
}

/// Determinant through the dense elimination oracle instead of the DFT.
pub fn dense_determinant<T: Real>(a: &CirculantVector<T>, cap: usize) -> Result<T> {
    lu_determinant(&a.materialize_capped(cap)?)
}

/// First row of the inverse via the explicit DFT inversion formula
/// `h_j = (1/n) sum_k w^{-k(j-1)} / lambda_k`.
pub fn dft_inverse<T: Real>(a: &CirculantVector<T>, tol: T) -> Result<InverseResult<T>> {
    let spec = spectrum(a);
    let certificate = spec.certificate(tol);
    if !certificate.invertible {
        return Err(certificate.singular_error("eigenvalue numerically zero"));
    }
    let n = spec.n;
    let two_pi = T::PI() + T::PI();
    let inv_lambda: Vec<Complex<T>> = spec.eigenvalues.iter().map(|ev| ev.inv()).collect();
    let inv_n = T::one() / real_of::<T>(n);
    let mut row = Vec::with_capacity(n);
    for j in 0..n {
        let wmj = Complex::from_polar(T::one(), -two_pi * real_of::<T>(j) / real_of::<T>(n));
        let mut acc = Complex::new(T::zero(), T::zero());
        let mut power = Complex::new(T::one(), T::zero());
        for il in &inv_lambda {
            acc = acc + *il * power;
            power = power * wmj;
        }
        row.push(acc.re * inv_n);
    }
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Dft,
        certificate,
    })
}

/// Solves `Circ(a) x = rhs` by dense partial-pivot elimination.
pub fn dense_solve<T: Real>(a: &CirculantVector<T>, rhs: &[T], cap: usize) -> Result<Vec<T>> {
    lu_solve(&a.materialize_capped(cap)?, rhs)
}

/// First row of the inverse obtained from the dense oracle: solve for the
/// first column and reverse its tail.
pub fn dense_inverse_row<T: Real>(
    a: &CirculantVector<T>,
    cap: usize,
) -> Result<CirculantVector<T>> {
    let n = a.len();
    let mut e = vec![T::zero(); n];
    e[0] = T::one();
    let col = dense_solve(a, &e, cap)?;
    Ok(CirculantVector::new(col)?.tau_permute())
}

/// Exact rational inverse formulas for n = 2 and n = 3.
///
/// n = 2: invertible iff `(a1 + a2)(a1 - a2) != 0`, inverse row
/// `(a1, -a2) / (a1^2 - a2^2)`.
/// n = 3: invertible iff `D = a1^3 + a2^3 + a3^3 - 3 a1 a2 a3 != 0`, inverse
/// row `(a1^2 - a2 a3, a3^2 - a1 a2, a2^2 - a1 a3) / D`.
pub fn closed_form_small<T: Real>(a: &CirculantVector<T>, tol: T) -> Result<InverseResult<T>> {
    match a.len() {
        2 => {
            let (a1, a2) = (a.as_slice()[0], a.as_slice()[1]);
            let scale = T::one().max(a1.abs()).max(a2.abs());
            let (f_plus, f_minus) = ((a1 + a2).abs(), (a1 - a2).abs());
            let (margin, witness) = if f_plus <= f_minus {
                (f_plus / scale, 0)
            } else {
                (f_minus / scale, 1)
            };
            let certificate = InvertCertificate::from_margin(margin, witness, tol);
            if !certificate.invertible {
                return Err(certificate.singular_error("order-2 determinant factor vanishes"));
            }
            let det = a1 * a1 - a2 * a2;
            Ok(InverseResult {
                row: CirculantVector::new(vec![a1 / det, -a2 / det])?,
                method: Method::SmallN2,
                certificate,
            })
        }
        3 => {
            let (a1, a2, a3) = (a.as_slice()[0], a.as_slice()[1], a.as_slice()[2]);
            let scale = T::one().max(a1.abs()).max(a2.abs()).max(a3.abs());
            let det = a1 * a1 * a1 + a2 * a2 * a2 + a3 * a3 * a3
                - (T::one() + T::one() + T::one()) * a1 * a2 * a3;
            let margin = det.abs() / (scale * scale * scale);
            let certificate = InvertCertificate::from_margin(margin, 0, tol);
            if !certificate.invertible {
                return Err(certificate.singular_error("order-3 determinant vanishes"));
            }
            Ok(InverseResult {
                row: CirculantVector::new(vec![
                    (a1 * a1 - a2 * a3) / det,
                    (a3 * a3 - a1 * a2) / det,
                    (a2 * a2 - a1 * a3) / det,
                ])?,
                method: Method::SmallN3,
                certificate,
            })
        }
        n => Err(Error::invalid(format!(
            "closed-form small inverse is defined for n = 2 or 3, got n = {n}"
        ))),
    }
}
