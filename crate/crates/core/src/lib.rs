//! Toolkit for structured circulant matrices.
//!
//! A circulant matrix is determined by its first row, so the whole crate
//! works on rows. For the structured families -- `(a, b, c, ..., c)`,
//! `(a, b, c, ..., c, b)`, geometric, arithmetic, tridiagonal-symmetric,
//! quadratic and alternating patterns -- invertibility is decided from a
//! handful of closed-form factors and the inverse row is assembled in O(n)
//! through Chebyshev-polynomial identities. Two independent oracles back
//! every formula: a direct DFT diagonalization and dense partial-pivot
//! elimination, both capped at small orders.
//!
//! Everything numeric is generic over the scalar type through
//! [`scalar::Real`]; `f64` aliases for the main handles live at the crate
//! root.
//!
//! ```
//! use circulant_core::closed_form::{inverse_3param, ThreeParamRow};
//! use circulant_core::CirculantVector;
//!
//! // Circ(2, -1, 0) has the inverse row (4, 2, 1) / 7.
//! let form = ThreeParamRow { a: 2.0, b: -1.0, c: 0.0, n: 3 };
//! let inverse = inverse_3param(&form, 1e-10).unwrap();
//! assert_eq!(inverse.row.as_slice(), &[4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0]);
//!
//! // Multiplying back gives the unit row.
//! let product = form.row().multiply(&inverse.row).unwrap();
//! let unit = CirculantVector::<f64>::unit(3);
//! for (p, e) in product.as_slice().iter().zip(unit.as_slice()) {
//!     assert!((p - e).abs() < 1e-15);
//! }
//! ```

pub mod chebyshev;
pub mod circulant;
pub mod closed_form;
pub mod dense;
pub mod error;
pub mod scalar;
pub mod spectral;

pub use circulant::{left_right_inverse, CirculantVector, TauPermutation};
pub use closed_form::{
    detect_structure, invert_structured, InverseResult, Method, SolveReport, StructuredForm,
};
pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use scalar::{default_tolerance, Real, DEFAULT_DENSE_CAP, DEFAULT_TOLERANCE};
pub use spectral::InvertCertificate;

/// `f64` row handle.
pub type CirculantF64 = CirculantVector<f64>;
/// `f32` row handle.
pub type CirculantF32 = CirculantVector<f32>;
/// `f64` dense matrix.
pub type DenseF64 = DenseMatrix<f64>;
/// `f32` dense matrix.
pub type DenseF32 = DenseMatrix<f32>;
