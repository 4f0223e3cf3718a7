//! Closed forms for the row family `(a, b, c, ..., c)`: invertibility,
//! the O(n) inverse with its three branches, the geometric and arithmetic
//! corollaries, and the singular solvers at the two degenerate parameters.

use crate::circulant::CirculantVector;
use crate::error::{Error, Result};
use crate::scalar::{real_of, Real};
use crate::spectral::InvertCertificate;

use super::{Arithmetic, Constraint, Geometric, InverseResult, Method, SolveReport, ThreeParamRow};

fn param_scale<T: Real>(values: &[T]) -> T {
    values.iter().fold(T::one(), |m, v| m.max(v.abs()))
}

/// `Circ(a, b, c, ..., c) x` in O(n): the matrix is diagonal + shift + rank
/// one, so `y_i = (a - c) x_i + (b - c) x_{i+1} + c <x, 1>` (indices cyclic).
pub fn three_param_apply<T: Real>(a: T, b: T, c: T, x: &[T]) -> Vec<T> {
    let n = x.len();
    assert!(n >= 3, "three-parameter rows need order >= 3");
    let total: T = x.iter().copied().sum();
    let ac = a - c;
    let bc = b - c;
    (0..n)
        .map(|i| ac * x[i] + bc * x[(i + 1) % n] + c * total)
        .collect()
}

/// Invertibility of `Circ(a, b, c, ..., c)`: the row sum `a + b + (n-2) c`
/// must be nonzero, and so must `(a - b)^2 + (1 - (-1)^n)(c - b)^2` -- for
/// even orders that second factor collapses to `(a - b)^2`.
///
/// Witness 0 is the row-sum factor, witness 1 the parity factor. Margins are
/// normalized by `max(1, |a|, |b|, |c|)` (the row-sum factor additionally
/// by n).
pub fn check_invertible_3param<T: Real>(
    f: &ThreeParamRow<T>,
    tol: T,
) -> Result<InvertCertificate<T>> {
    let ThreeParamRow { a, b, c, n } = *f;
    if n < 3 {
        return Err(Error::invalid("three-parameter rows need order >= 3"));
    }
    let m = param_scale(&[a, b, c]);
    let row_sum = (a + b + real_of::<T>(n - 2) * c).abs() / (real_of::<T>(n) * m);
    let parity = if n % 2 == 0 {
        (a - b).abs() / m
    } else {
        let two = T::one() + T::one();
        ((a - b) * (a - b) + two * (c - b) * (c - b)).sqrt() / m
    };
    let (margin, witness) = if row_sum <= parity {
        (row_sum, 0)
    } else {
        (parity, 1)
    };
    Ok(InvertCertificate::from_margin(margin, witness, tol))
}

/// O(n) inverse row of `Circ(a, b, c, ..., c)`.
///
/// Three branches, selected inside a normalized tolerance band:
/// - `c = b`: the matrix is `(a - b) I + b J`;
/// - `a = 2c - b` (the quotient `q = (a-c)/(c-b)` hits 1): the inverse row is
///   an arithmetic progression;
/// - otherwise the generic power form, evaluated through `q` so that every
///   power has magnitude at most one (`q^{n-j}/((c-b)(q^n - 1))` inside the
///   unit disk, `q^{-j}/((c-b)(1 - q^{-n}))` outside).
pub fn inverse_3param<T: Real>(f: &ThreeParamRow<T>, tol: T) -> Result<InverseResult<T>> {
    let ThreeParamRow { a, b, c, n } = *f;
    let certificate = check_invertible_3param(f, tol)?;
    if !certificate.invertible {
        return Err(certificate.singular_error("three-parameter invertibility factor vanishes"));
    }
    let m = param_scale(&[a, b, c]);
    let band = tol * m;
    let nt = real_of::<T>(n);

    // c = b: diagonal plus rank one.
    if (c - b).abs() <= band {
        let denom = (a - b) * (a + real_of::<T>(n - 1) * b);
        let off = -b / denom;
        let mut row = vec![off; n];
        row[0] = T::one() / (a - b) + off;
        return Ok(InverseResult {
            row: CirculantVector::new(row)?,
            method: Method::ThreeParamDiagonal,
            certificate,
        });
    }

    let q = (a - c) / (c - b);

    // a = 2c - b (q = 1): arithmetic-progression inverse. The row-sum factor
    // equals n c near this branch, so c is safely nonzero here.
    if (a + b - c - c).abs() <= band || (q - T::one()).abs() <= tol {
        let two = T::one() + T::one();
        let lead = (T::one() / (nt * c) + real_of::<T>(n - 1) / (two * (c - b))) / nt;
        let step = T::one() / (nt * (c - b));
        let row = (0..n).map(|j0| lead - real_of::<T>(j0) * step).collect();
        return Ok(InverseResult {
            row: CirculantVector::new(row)?,
            method: Method::ThreeParamArithmetic,
            certificate,
        });
    }

    // Near the q = 1 confluence the two terms of the generic formula are
    // both O(1/(q-1)) and cancel; rewrite through geometric prefix sums,
    // which stay O(1) there. With G_m = 1 + q + ... + q^{m-1}, G = G_n,
    // K = G_0 + ... + G_{n-1} and H = (c - b) - c K, the identity
    // k_j = (G_{n-j} + H / f0) / ((c - b) G) holds wherever both sides do,
    // and its right side has no vanishing denominators at q = 1.
    let f0 = a + b + real_of::<T>(n - 2) * c;
    if (q - T::one()).abs() <= real_of::<T>(4) / real_of::<T>(n) {
        let mut row = vec![T::zero(); n];
        let mut prefix = T::zero(); // G_m
        let mut power = T::one(); // q^m
        let mut k_sum = T::zero();
        for m in 0..n {
            row[n - 1 - m] = prefix; // slot j-1 holds G_{n-j}
            k_sum += prefix;
            prefix += power;
            power *= q;
        }
        let g_full = prefix; // G_n
        let h = (c - b) - c * k_sum;
        let shift = h / f0;
        let denom = (c - b) * g_full;
        for v in row.iter_mut() {
            *v = (*v + shift) / denom;
        }
        return Ok(InverseResult {
            row: CirculantVector::new(row)?,
            method: Method::ThreeParamGeneric,
            certificate,
        });
    }

    let correction = c / ((a + b - c - c) * f0);
    let mut row = vec![T::zero(); n];
    if q.abs() <= T::one() {
        // k_j = q^{n-j} / ((c-b)(q^n - 1)) - correction
        let mut power = T::one(); // q^{n-j} at j = n
        for j0 in (0..n).rev() {
            row[j0] = power;
            power *= q;
        }
        let denom = (c - b) * (power - T::one()); // power = q^n after the loop
        for v in row.iter_mut() {
            *v = *v / denom - correction;
        }
    } else {
        // k_j = q^{-j} / ((c-b)(1 - q^{-n})) - correction
        let iq = T::one() / q;
        let mut power = T::one();
        for v in row.iter_mut() {
            power *= iq; // q^{-j} for j = 1..n
            *v = power;
        }
        let denom = (c - b) * (T::one() - power); // power = q^{-n} after the loop
        for v in row.iter_mut() {
            *v = *v / denom - correction;
        }
    }
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::ThreeParamGeneric,
        certificate,
    })
}

/// Left side of the defining identity `Circ(a(q,-1,0)) z_tau(q) = (q^n - 1) e`,
/// evaluated through the generic circulant apply.
pub fn q_shift_identity<T: Real>(q: T, n: usize) -> Vec<T> {
    assert!(n >= 3, "identity stated for order >= 3");
    let row = ThreeParamRow {
        a: q,
        b: -T::one(),
        c: T::zero(),
        n,
    }
    .row();
    let z_tau = crate::chebyshev::kernel_vectors(q, n).z;
    let z_tau = CirculantVector::new(z_tau).expect("n >= 1").tau_permute();
    row.apply(z_tau.as_slice()).expect("lengths match")
}

/// Solves `Circ(a(1, -1, 0)) h = v` (the cyclic difference system).
///
/// Compatible iff the components of `v` sum to zero; the solution is then a
/// line, and the representative with `<h, 1> = gamma` is returned:
/// `h_j = (gamma - sum_i i v_i)/n + sum_{i >= j} v_i`.
pub fn solve_singular_q1<T: Real>(v: &[T], gamma: T, tol: T) -> Result<SolveReport<T>> {
    let n = v.len();
    if n < 3 {
        return Err(Error::invalid("singular solver needs order >= 3"));
    }
    let nt = real_of::<T>(n);
    let scale = param_scale(v);
    let total: T = v.iter().copied().sum();
    if total.abs() > tol * nt * scale {
        return Err(Error::Incompatible(
            "right-hand side must sum to zero".into(),
        ));
    }
    let weighted: T = v
        .iter()
        .enumerate()
        .map(|(i0, &vi)| real_of::<T>(i0 + 1) * vi)
        .sum();
    let base = (gamma - weighted) / nt;
    let mut row = vec![T::zero(); n];
    let mut suffix = T::zero();
    for j0 in (0..n).rev() {
        suffix += v[j0];
        row[j0] = base + suffix;
    }
    let residual = (0..n).fold(T::zero(), |r, i| {
        r.max((row[i] - row[(i + 1) % n] - v[i]).abs())
    });
    let achieved: T = row.iter().copied().sum();
    Ok(SolveReport {
        solution: row,
        residual,
        constraint: Some(Constraint {
            target: gamma,
            achieved,
        }),
        alpha: None,
    })
}

/// Solves `Circ(a(-1, -1, 0)) h = v` for even order.
///
/// Compatible iff `<v, z(-1)> = 0`; the solution set is the particular
/// solution `h_j = (-1)^{j+1} sum_{i >= j} (-1)^i v_i` plus any multiple of
/// the alternating kernel vector `z(-1)`, selected by `alpha`.
pub fn solve_singular_qm1<T: Real>(v: &[T], alpha: T, tol: T) -> Result<SolveReport<T>> {
    let n = v.len();
    if n < 3 {
        return Err(Error::invalid("singular solver needs order >= 3"));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::invalid(
            "this system is singular only for even order",
        ));
    }
    let nt = real_of::<T>(n);
    let scale = param_scale(v);
    // z(-1)_i = (-1)^i in 1-based indexing.
    let pairing: T = v
        .iter()
        .enumerate()
        .map(|(i0, &vi)| if i0 % 2 == 0 { -vi } else { vi })
        .sum();
    if pairing.abs() > tol * nt * scale {
        return Err(Error::Incompatible(
            "right-hand side must be orthogonal to the alternating kernel".into(),
        ));
    }
    let mut row = vec![T::zero(); n];
    let mut suffix = T::zero();
    for j0 in (0..n).rev() {
        let signed = if j0 % 2 == 0 { -v[j0] } else { v[j0] };
        suffix += signed;
        row[j0] = if j0 % 2 == 0 { suffix } else { -suffix };
        // alpha moves along the kernel without changing the residual
        row[j0] += alpha * if j0 % 2 == 0 { -T::one() } else { T::one() };
    }
    let residual = (0..n).fold(T::zero(), |r, i| {
        r.max((-row[i] - row[(i + 1) % n] - v[i]).abs())
    });
    let achieved: T = row.iter().copied().sum();
    // Row sums of the matrix are -2, so every solution satisfies
    // 2 <h, 1> = -<v, 1>.
    let two = T::one() + T::one();
    Ok(SolveReport {
        solution: row,
        residual,
        constraint: Some(Constraint {
            target: -v.iter().copied().sum::<T>() / two,
            achieved,
        }),
        alpha: Some(alpha),
    })
}

pub(super) fn cert_geometric<T: Real>(f: &Geometric<T>, tol: T) -> InvertCertificate<T> {
    let Geometric { a, r, n } = *f;
    let m = param_scale(&[a, r]);
    let factor_a = a.abs() / m;
    // |r^n - 1| normalized by max(1, |r|^n), computed without overflow.
    let factor_r = if r.abs() > T::one() {
        (T::one() - r.powi(-(n as i32))).abs()
    } else {
        (r.powi(n as i32) - T::one()).abs()
    };
    if factor_a <= factor_r {
        InvertCertificate::from_margin(factor_a, 0, tol)
    } else {
        InvertCertificate::from_margin(factor_r, 1, tol)
    }
}

/// Inverse of the geometric row `(a r^{n-1}, ..., a r, a)`: invertible iff
/// `a (r^n - 1) != 0`, with the sparse inverse row `(r, -1, 0, ..., 0)`
/// scaled by `1 / (a (r^n - 1))`.
pub fn inverse_geometric<T: Real>(f: &Geometric<T>, tol: T) -> Result<InverseResult<T>> {
    let Geometric { a, r, n } = *f;
    if n < 3 {
        return Err(Error::invalid("geometric rows need order >= 3"));
    }
    let certificate = cert_geometric(f, tol);
    if !certificate.invertible {
        return Err(certificate.singular_error("a (r^n - 1) vanishes"));
    }
    let denom = a * (r.powi(n as i32) - T::one());
    let mut row = vec![T::zero(); n];
    row[0] = r / denom;
    row[1] = -T::one() / denom;
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Geometric,
        certificate,
    })
}

pub(super) fn cert_arithmetic<T: Real>(f: &Arithmetic<T>, tol: T) -> InvertCertificate<T> {
    let Arithmetic { a, b, n } = *f;
    let m = param_scale(&[a, b]);
    let two = T::one() + T::one();
    let factor_sum = (two * a + real_of::<T>(n - 1) * b).abs() / (real_of::<T>(n) * m);
    let factor_b = b.abs() / m;
    if factor_sum <= factor_b {
        InvertCertificate::from_margin(factor_sum, 0, tol)
    } else {
        InvertCertificate::from_margin(factor_b, 1, tol)
    }
}

/// Inverse of the arithmetic row `(a, a+b, ..., a+(n-1)b)`: invertible iff
/// `(2a + (n-1) b) b != 0`; the inverse is a constant row plus the sparse
/// two-entry correction `-(1, -1, 0, ..., 0) / (n b)`.
pub fn inverse_arithmetic<T: Real>(f: &Arithmetic<T>, tol: T) -> Result<InverseResult<T>> {
    let Arithmetic { a, b, n } = *f;
    if n < 3 {
        return Err(Error::invalid("arithmetic rows need order >= 3"));
    }
    let certificate = cert_arithmetic(f, tol);
    if !certificate.invertible {
        return Err(certificate.singular_error("(2a + (n-1)b) b vanishes"));
    }
    let two = T::one() + T::one();
    let nt = real_of::<T>(n);
    let constant = two / (nt * nt * (two * a + real_of::<T>(n - 1) * b));
    let step = T::one() / (nt * b);
    let mut row = vec![constant; n];
    row[0] -= step;
    row[1] += step;
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Arithmetic,
        certificate,
    })
}
