//! Closed forms for the symmetric family `(a, b, c, ..., c, b)`: the cycle
//! Green function, the general symmetric three-parameter inverse, and the
//! tridiagonal, quadratic and alternating corollaries, plus the singular
//! solver for the cycle Laplacian.

use crate::circulant::CirculantVector;
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::{real_of, Real};
use crate::spectral::InvertCertificate;

use super::row_family::{check_invertible_3param, inverse_3param};
use super::{
    AltCase, AlternatingPattern, Constraint, InverseResult, Method, QuadraticPattern, SolveReport,
    SymThreeParam, ThreeParamRow, TridiagSym,
};

fn param_scale<T: Real>(values: &[T]) -> T {
    values.iter().fold(T::one(), |m, v| m.max(v.abs()))
}

/// `Circ(a, b, c, ..., c, b) x` in O(n):
/// `y_i = (a - c) x_i + (b - c)(x_{i-1} + x_{i+1}) + c <x, 1>`.
pub fn sym_three_param_apply<T: Real>(a: T, b: T, c: T, x: &[T]) -> Vec<T> {
    let n = x.len();
    assert!(n >= 3, "symmetric three-parameter rows need order >= 3");
    let total: T = x.iter().copied().sum();
    let ac = a - c;
    let bc = b - c;
    (0..n)
        .map(|i| ac * x[i] + bc * (x[(i + n - 1) % n] + x[(i + 1) % n]) + c * total)
        .collect()
}

/// Distance from `q` to the nearest `cos(2 pi j / n)` with `j` in
/// `[j_lo, floor(n/2)]`, in O(1): invert the cosine to find the candidate
/// index and check its neighbors.
fn nearest_cosine<T: Real>(q: T, n: usize, j_lo: usize) -> (usize, T) {
    let j_hi = n / 2;
    debug_assert!(j_lo <= j_hi);
    let two_pi = T::PI() + T::PI();
    let nt = real_of::<T>(n);
    let theta = q.min(T::one()).max(-T::one()).acos();
    let jf = (theta * nt / two_pi).to_f64().unwrap_or(0.0);
    let center = jf.floor() as i64;
    let mut best: Option<(usize, T)> = None;
    for cand in (center - 1)..=(center + 2) {
        if cand < j_lo as i64 || cand > j_hi as i64 {
            continue;
        }
        let j = cand as usize;
        let d = (q - (two_pi * real_of::<T>(j) / nt).cos()).abs();
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((j, d));
        }
    }
    // The clamp above guarantees at least one candidate (j_lo or j_hi).
    best.unwrap_or_else(|| {
        let d = (q - (two_pi * real_of::<T>(j_lo) / nt).cos()).abs();
        (j_lo, d)
    })
}

/// `w_j(q) / (2 (T_n(q) - 1))` for `j = 1..n`, the kernel ratio behind every
/// inverse in this family.
///
/// Inside `[-1, 1]` the numerators come from one forward pass of the
/// second-kind recurrence and the denominator from `-4 sin^2(n theta / 2)`.
/// Outside, with `rho` the large root of `t^2 - 2qt + 1` and `d = 1/rho`,
/// the ratio collapses to `(d^{j-1} + d^{n-j+1}) / ((rho - d)(1 - d^n))`,
/// in which every power has magnitude at most one.
fn cycle_kernel_ratio<T: Real>(q: T, n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    if q.abs() <= T::one() {
        let theta = q.acos();
        let half = theta * real_of::<T>(n) / (T::one() + T::one());
        let s = half.sin();
        let four = real_of::<T>(4);
        let denom = -four * s * s; // 2 (T_n - 1)

        // us[m] = U_m(q), m = 0..n-1
        let two_q = q + q;
        let mut us = Vec::with_capacity(n);
        let mut prev = T::zero();
        let mut cur = T::one();
        for _ in 0..n {
            us.push(cur);
            let next = two_q * cur - prev;
            prev = cur;
            cur = next;
        }
        for (j0, slot) in out.iter_mut().enumerate() {
            let u = if j0 == 0 { T::zero() } else { us[j0 - 1] };
            *slot = (u + us[n - 1 - j0]) / denom;
        }
    } else {
        let sign = if q > T::zero() { T::one() } else { -T::one() };
        let rho = q + sign * (q * q - T::one()).sqrt();
        let delta = T::one() / rho;
        let dn = delta.powi(n as i32);
        let denom = (rho - delta) * (T::one() - dn);
        let mut fwd = T::one(); // delta^{j-1}
        for slot in out.iter_mut() {
            *slot = fwd;
            fwd *= delta;
        }
        let mut bwd = delta; // delta^{n-j+1}, starting at j = n
        for slot in out.iter_mut().rev() {
            *slot = (*slot + bwd) / denom;
            bwd *= delta;
        }
    }
    out
}

pub(super) fn cert_cycle<T: Real>(q: T, n: usize, tol: T) -> Result<InvertCertificate<T>> {
    if n < 3 {
        return Err(Error::invalid("cycle rows need order >= 3"));
    }
    let (witness, dist) = nearest_cosine(q, n, 0);
    let m = T::one().max(q.abs() + q.abs());
    let two = T::one() + T::one();
    Ok(InvertCertificate::from_margin(two * dist / m, witness, tol))
}

/// Green inverse of the cycle Schroedinger row `(2q, -1, 0, ..., 0, -1)`:
/// invertible iff `q` avoids every `cos(2 pi j / n)`, and then the inverse
/// row is `w(q) / (2 (T_n(q) - 1))`.
pub fn cycle_green<T: Real>(q: T, n: usize, tol: T) -> Result<InverseResult<T>> {
    let certificate = cert_cycle(q, n, tol)?;
    if !certificate.invertible {
        return Err(certificate.singular_error("q is a cycle eigen-cosine"));
    }
    Ok(InverseResult {
        row: CirculantVector::new(cycle_kernel_ratio(q, n))?,
        method: Method::CycleGreen,
        certificate,
    })
}

/// Green function of the cycle Laplacian `Circ(2, -1, 0, ..., 0, -1)`:
/// `G[i][j] = (n^2 - 1 - 6 |i-j| (n - |i-j|)) / (12 n)`. It satisfies
/// `L G = I - J/n` and has zero row sums.
pub fn laplacian_green<T: Real>(n: usize, cap: usize) -> Result<DenseMatrix<T>> {
    if n < 3 {
        return Err(Error::invalid("cycle Laplacian needs order >= 3"));
    }
    if n > cap {
        return Err(Error::DenseCapExceeded { n, cap });
    }
    let nt = real_of::<T>(n);
    let twelve = real_of::<T>(12);
    let six = real_of::<T>(6);
    Ok(DenseMatrix::from_fn(n, |i, j| {
        let d = real_of::<T>(i.abs_diff(j));
        (nt * nt - T::one() - six * d * (nt - d)) / (twelve * nt)
    }))
}

/// Solves the cycle-Laplacian system `Circ(2, -1, 0, ..., 0, -1) h = v`.
///
/// Compatible iff `<v, 1> = 0`; the representative with `<h, 1> = gamma` is
/// `h_j = gamma / n - (1/(2n)) sum_i |j-i| (n - |i-j|) v_i`.
pub fn solve_singular_cycle<T: Real>(v: &[T], gamma: T, tol: T) -> Result<SolveReport<T>> {
    let n = v.len();
    if n < 3 {
        return Err(Error::invalid("cycle Laplacian needs order >= 3"));
    }
    let nt = real_of::<T>(n);
    let scale = param_scale(v);
    let total: T = v.iter().copied().sum();
    if total.abs() > tol * nt * scale {
        return Err(Error::Incompatible(
            "right-hand side must sum to zero".into(),
        ));
    }
    let two_n = nt + nt;
    let mut solution = vec![T::zero(); n];
    for (j, slot) in solution.iter_mut().enumerate() {
        let mut acc = T::zero();
        for (i, &vi) in v.iter().enumerate() {
            let d = real_of::<T>(i.abs_diff(j));
            acc += d * (nt - d) * vi;
        }
        *slot = gamma / nt - acc / two_n;
    }
    let two = T::one() + T::one();
    let residual = (0..n).fold(T::zero(), |r, i| {
        let lhs = two * solution[i] - solution[(i + n - 1) % n] - solution[(i + 1) % n] - v[i];
        r.max(lhs.abs())
    });
    let achieved: T = solution.iter().copied().sum();
    Ok(SolveReport {
        solution,
        residual,
        constraint: Some(Constraint {
            target: gamma,
            achieved,
        }),
        alpha: None,
    })
}

/// Invertibility of `Circ(a, b, c, ..., c, b)`: the row sum
/// `a + 2b + (n-3) c` and every factor `a - c + 2 (b - c) cos(2 pi j / n)`,
/// `j = 1 ..= floor(n/2)`, must be nonzero. With `q = (c-a)/(2(b-c))` the
/// cosine factors are `2 (c - b) (q - cos(2 pi j / n))`, so the scan is the
/// O(1) nearest-cosine search.
///
/// Witness 0 is the row-sum factor; witness `j >= 1` names the cosine index.
/// Rows with `c = b` (inside the tolerance band) belong to the plain
/// three-parameter family and are certified there.
pub fn check_invertible_sym3<T: Real>(
    f: &SymThreeParam<T>,
    tol: T,
) -> Result<InvertCertificate<T>> {
    let SymThreeParam { a, b, c, n } = *f;
    if n < 3 {
        return Err(Error::invalid(
            "symmetric three-parameter rows need order >= 3",
        ));
    }
    let m = param_scale(&[a, b, c]);
    if (c - b).abs() <= tol * m {
        return check_invertible_3param(&ThreeParamRow { a, b, c, n }, tol);
    }
    let two = T::one() + T::one();
    let nt = real_of::<T>(n);
    let row_sum = (a + b + b + real_of::<T>(n - 3) * c).abs() / (nt * m);
    let q = (c - a) / (two * (b - c));
    let (j, dist) = nearest_cosine(q, n, 1);
    let cosine = two * (c - b).abs() * dist / m;
    let (margin, witness) = if row_sum <= cosine {
        (row_sum, 0)
    } else {
        (cosine, j)
    };
    Ok(InvertCertificate::from_margin(margin, witness, tol))
}

/// O(n) inverse row of `Circ(a, b, c, ..., c, b)`.
///
/// `c = b` delegates to the plain three-parameter inverse. At `a = 3c - 2b`
/// (the quotient `q` hits 1) the inverse is the shifted cycle Green function;
/// otherwise the generic kernel-ratio form applies. The output row is
/// tau-symmetric, as the inverse of a symmetric matrix must be.
pub fn inverse_sym3<T: Real>(f: &SymThreeParam<T>, tol: T) -> Result<InverseResult<T>> {
    let SymThreeParam { a, b, c, n } = *f;
    if n < 3 {
        return Err(Error::invalid(
            "symmetric three-parameter rows need order >= 3",
        ));
    }
    let m = param_scale(&[a, b, c]);
    if (c - b).abs() <= tol * m {
        return inverse_3param(&ThreeParamRow { a, b, c, n }, tol);
    }
    let certificate = check_invertible_sym3(f, tol)?;
    if !certificate.invertible {
        return Err(certificate.singular_error("symmetric invertibility factor vanishes"));
    }
    let two = T::one() + T::one();
    let nt = real_of::<T>(n);
    let q = (c - a) / (two * (b - c));

    // a = 3c - 2b: Green-function branch. The row sum equals n c here, so the
    // certificate guarantees c != 0.
    if (a + b + b - real_of::<T>(3) * c).abs() <= tol * m || (q - T::one()).abs() <= tol {
        let twelve = real_of::<T>(12);
        let six = real_of::<T>(6);
        let lead = T::one() / (nt * nt * c);
        let denom = twelve * nt * (c - b);
        let row = (0..n)
            .map(|j0| {
                let jt = real_of::<T>(j0);
                (nt * nt - T::one() - six * jt * (nt - jt)) / denom + lead
            })
            .collect();
        return Ok(InverseResult {
            row: CirculantVector::new(row)?,
            method: Method::Sym3Green,
            certificate,
        });
    }

    let f0 = a + b + b + real_of::<T>(n - 3) * c;

    // Near the q = 1 confluence both generic terms are O(1/(q-1)); switch to
    // divided differences. With s = q - 1, D_m = (U_m(q) - (m+1)) / s obeys
    // D_{m+1} = 2 D_m - D_{m-1} + 2 U_m exactly (no division by s), and with
    // E_j = D_{j-2} + D_{n-j}, F = 2 sum_{t<=n-2} U_t + U_{n-1} and
    // Fhat = 2 sum_{t<=n-2} D_t + D_{n-1} the generic formula collapses to
    // g_j = (2n(c-b) - c Fhat + f0 E_j) / (2 (c-b) F f0),
    // which is regular at q = 1.
    let nt2 = real_of::<T>(n) * real_of::<T>(n);
    if (q - T::one()).abs() <= real_of::<T>(8) / nt2 {
        let two = T::one() + T::one();
        let two_q = q + q;
        let mut us = Vec::with_capacity(n);
        let mut ds = Vec::with_capacity(n);
        let (mut u_prev, mut u_cur) = (T::zero(), T::one());
        let (mut d_prev, mut d_cur) = (T::zero(), T::zero());
        let (mut u_sum, mut d_sum) = (T::zero(), T::zero());
        for m in 0..n {
            us.push(u_cur);
            ds.push(d_cur);
            if m <= n - 2 {
                u_sum += u_cur;
                d_sum += d_cur;
            }
            let u_next = two_q * u_cur - u_prev;
            let d_next = two * d_cur - d_prev + two * u_cur;
            u_prev = u_cur;
            u_cur = u_next;
            d_prev = d_cur;
            d_cur = d_next;
        }
        let f_full = two * u_sum + us[n - 1];
        let f_hat = two * d_sum + ds[n - 1];
        let lead = two * real_of::<T>(n) * (c - b) - c * f_hat;
        let denom = two * (c - b) * f_full * f0;
        let row = (0..n)
            .map(|j0| {
                let e = if j0 == 0 { T::zero() } else { ds[j0 - 1] } + ds[n - 1 - j0];
                (lead + f0 * e) / denom
            })
            .collect();
        return Ok(InverseResult {
            row: CirculantVector::new(row)?,
            method: Method::Sym3Generic,
            certificate,
        });
    }

    let correction = c / ((a + b + b - real_of::<T>(3) * c) * f0);
    let cb = c - b;
    let mut row = cycle_kernel_ratio(q, n);
    for v in row.iter_mut() {
        *v = *v / cb - correction;
    }
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Sym3Generic,
        certificate,
    })
}

pub(super) fn cert_tridiag<T: Real>(f: &TridiagSym<T>, tol: T) -> Result<InvertCertificate<T>> {
    let TridiagSym { a, b, n } = *f;
    if n < 3 {
        return Err(Error::invalid("tridiagonal rows need order >= 3"));
    }
    let m = param_scale(&[a, b]);
    if b.abs() <= tol * m {
        // Degenerate diagonal row (a, 0, ..., 0); certify as such.
        return check_invertible_3param(
            &ThreeParamRow {
                a,
                b,
                c: T::zero(),
                n,
            },
            tol,
        );
    }
    let two = T::one() + T::one();
    let q = -a / (two * b);
    let (j, dist) = nearest_cosine(q, n, 0);
    Ok(InvertCertificate::from_margin(
        two * b.abs() * dist / m,
        j,
        tol,
    ))
}

/// Inverse of the symmetric tridiagonal row `(a, b, 0, ..., 0, b)`:
/// invertible iff every `a + 2b cos(2 pi j / n)` is nonzero; diagonal
/// dominance `|a| > 2|b|` guarantees this. The row is the `c = 0` case of
/// the symmetric family, driven by the same kernel ratio at `q = -a/(2b)`.
pub fn inverse_tridiag_sym<T: Real>(f: &TridiagSym<T>, tol: T) -> Result<InverseResult<T>> {
    let TridiagSym { a, b, n } = *f;
    if n < 3 {
        return Err(Error::invalid("tridiagonal rows need order >= 3"));
    }
    let m = param_scale(&[a, b]);
    if b.abs() <= tol * m {
        return inverse_3param(
            &ThreeParamRow {
                a,
                b,
                c: T::zero(),
                n,
            },
            tol,
        );
    }
    let certificate = cert_tridiag(f, tol)?;
    if !certificate.invertible {
        return Err(certificate.singular_error("a + 2b cos(2 pi j / n) vanishes"));
    }
    let two = T::one() + T::one();
    let q = -a / (two * b);
    let mut row = cycle_kernel_ratio(q, n);
    for v in row.iter_mut() {
        *v /= -b;
    }
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::TridiagSym,
        certificate,
    })
}

pub(super) fn cert_quadratic<T: Real>(f: &QuadraticPattern<T>, tol: T) -> InvertCertificate<T> {
    let QuadraticPattern { a, b, n } = *f;
    let m = param_scale(&[a, b]);
    let six = real_of::<T>(6);
    let nt = real_of::<T>(n);
    let factor_sum = (six * a + b * (nt * nt - T::one())).abs() / (nt * nt * m);
    let factor_b = b.abs() / m;
    if factor_sum <= factor_b {
        InvertCertificate::from_margin(factor_sum, 0, tol)
    } else {
        InvertCertificate::from_margin(factor_b, 1, tol)
    }
}

/// Inverse of the quadratic row with entries `a + j b (n - j)`:
/// invertible iff `(6a + b (n^2 - 1)) b != 0`; the inverse is a constant row
/// plus `-(1/(2nb))` times the cycle-Laplacian row `(2, -1, 0, ..., 0, -1)`.
pub fn inverse_quadratic_pattern<T: Real>(
    f: &QuadraticPattern<T>,
    tol: T,
) -> Result<InverseResult<T>> {
    let QuadraticPattern { a, b, n } = *f;
    if n < 3 {
        return Err(Error::invalid("quadratic rows need order >= 3"));
    }
    let certificate = cert_quadratic(f, tol);
    if !certificate.invertible {
        return Err(certificate.singular_error("(6a + b(n^2 - 1)) b vanishes"));
    }
    let six = real_of::<T>(6);
    let two = T::one() + T::one();
    let nt = real_of::<T>(n);
    let constant = six / (nt * nt * (six * a + b * (nt * nt - T::one())));
    let step = T::one() / (two * nt * b);
    let mut row = vec![constant; n];
    row[0] -= two * step;
    row[1] += step;
    row[n - 1] += step;
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Quadratic,
        certificate,
    })
}

pub(super) fn cert_alternating<T: Real>(
    f: &AlternatingPattern<T>,
    tol: T,
) -> Result<InvertCertificate<T>> {
    let AlternatingPattern { case, a, b, n } = *f;
    if !case.admits(n) {
        return Err(Error::invalid(format!(
            "alternating case {} does not admit order {n}",
            case.index()
        )));
    }
    let m = param_scale(&[a, b]);
    let nt = real_of::<T>(n);
    let (f0, f1) = match case {
        AltCase::Case4 => (b.abs() / m, (a * nt + b).abs() / (nt * m)),
        _ => (
            (a - b).abs() / m,
            (a * (nt + T::one()) + b * (nt - T::one())).abs() / (nt * m),
        ),
    };
    Ok(if f0 <= f1 {
        InvertCertificate::from_margin(f0, 0, tol)
    } else {
        InvertCertificate::from_margin(f1, 1, tol)
    })
}

/// Inverse of the four alternating two-value families.
///
/// Cases 1-3: `(1/(a-b)) Circ(0, 1, 0, ..., 0, 1)` minus the constant
/// `2(a+b) / ((a-b)(a(n+1) + b(n-1)))`. Case 4: `(1/(4b)) Circ(2, 1, 0, ..., 0, 1)`
/// minus the constant `a / (b (a n + b))`.
pub fn inverse_alternating_pattern<T: Real>(
    f: &AlternatingPattern<T>,
    tol: T,
) -> Result<InverseResult<T>> {
    let AlternatingPattern { case, a, b, n } = *f;
    if n < 3 {
        return Err(Error::invalid("alternating rows need order >= 3"));
    }
    let certificate = cert_alternating(f, tol)?;
    if !certificate.invertible {
        return Err(certificate.singular_error("alternating invertibility factor vanishes"));
    }
    let two = T::one() + T::one();
    let nt = real_of::<T>(n);
    let row = match case {
        AltCase::Case4 => {
            let four = two + two;
            let constant = a / (b * (a * nt + b));
            let quarter = T::one() / (four * b);
            let mut row = vec![-constant; n];
            row[0] += two * quarter;
            row[1] += quarter;
            row[n - 1] += quarter;
            row
        }
        _ => {
            let off = T::one() / (a - b);
            let constant = two * (a + b) / ((a - b) * (a * (nt + T::one()) + b * (nt - T::one())));
            let mut row = vec![-constant; n];
            row[1] += off;
            row[n - 1] += off;
            row
        }
    };
    Ok(InverseResult {
        row: CirculantVector::new(row)?,
        method: Method::Alternating(case),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{cheb_t, kernel_vectors};
    use crate::spectral;
    use approx::assert_relative_eq;

    const TOL: f64 = 1e-10;

    fn assert_inverse_of(row: &CirculantVector<f64>, inv: &CirculantVector<f64>, tol: f64) {
        let product = row.multiply(inv).unwrap();
        let unit = CirculantVector::<f64>::unit(row.len());
        for (p, e) in product.as_slice().iter().zip(unit.as_slice()) {
            assert!((p - e).abs() < tol, "product row {:?}", product.as_slice());
        }
    }

    #[test]
    fn cycle_identity_holds() {
        // Circ(b(2q,-1,0)) w(q) = 2 (T_n(q) - 1) e at q = 3, n = 5.
        let (q, n) = (3.0f64, 5);
        let kv = kernel_vectors(q, n);
        let lhs = sym_three_param_apply(2.0 * q, -1.0, 0.0, &kv.w);
        let rhs = 2.0 * (cheb_t(n as i64, q) - 1.0);
        assert_relative_eq!(lhs[0], rhs, max_relative = 1e-12);
        for v in &lhs[1..] {
            assert!(v.abs() < 1e-9 * rhs.abs());
        }
    }

    #[test]
    fn cycle_green_rejects_laplacian() {
        assert!(matches!(
            cycle_green(1.0f64, 6, TOL),
            Err(Error::Singular { .. })
        ));
        // Interior eigen-cosine with a witness.
        let q = (2.0 * std::f64::consts::PI / 5.0).cos();
        match cycle_green(q, 5, TOL) {
            Err(Error::Singular { witness, .. }) => assert_eq!(witness, 1),
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn cycle_green_matches_dense() {
        for (q, n) in [(3.0f64, 4), (-2.5, 7), (0.3, 5), (-0.75, 6)] {
            let inv = cycle_green(q, n, TOL).unwrap();
            let row = super::super::CycleSchrodinger { q, n }.row();
            let dense = spectral::dense_inverse_row(&row, 64).unwrap();
            for (v, d) in inv.row.as_slice().iter().zip(dense.as_slice()) {
                assert_relative_eq!(*v, *d, epsilon = 1e-10, max_relative = 1e-9);
            }
            assert_inverse_of(&row, &inv.row, 1e-10);
        }
    }

    #[test]
    fn kernel_vectors_annihilated_at_interior_cosines() {
        for n in 5..=12usize {
            for j in 1..=(n - 1) / 2 {
                if 2 * j == n {
                    continue;
                }
                let q = (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos();
                let kv = kernel_vectors(q, n);
                for vec in [&kv.u, &kv.v] {
                    let image = sym_three_param_apply(2.0 * q, -1.0, 0.0, vec);
                    for y in image {
                        assert!(y.abs() < 1e-9, "kernel vector not annihilated n={n} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn laplacian_green_values_and_projection() {
        let g = laplacian_green::<f64>(3, 64).unwrap();
        assert_relative_eq!(g.get(0, 0), 2.0 / 9.0, epsilon = 1e-14);
        assert_relative_eq!(g.get(0, 1), -1.0 / 9.0, epsilon = 1e-14);

        for n in [3usize, 6, 11] {
            let g = laplacian_green::<f64>(n, 64).unwrap();
            for s in g.row_sums() {
                assert!(s.abs() < 1e-10);
            }
            let l = super::super::CycleSchrodinger { q: 1.0, n }
                .row()
                .materialize()
                .unwrap();
            let lg = l.mul(&g).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j {
                        1.0 - 1.0 / n as f64
                    } else {
                        -1.0 / n as f64
                    };
                    assert!((lg.get(i, j) - expect).abs() < 1e-10);
                }
            }
        }

        // L G v = v on mean-free vectors.
        let n = 6;
        let g = laplacian_green::<f64>(n, 64).unwrap();
        let v: Vec<f64> = (0..n).map(|i| i as f64 - 2.5).collect();
        let gv = g.mul_vec(&v).unwrap();
        let lgv = sym_three_param_apply(2.0, -1.0, 0.0, &gv);
        for (x, y) in lgv.iter().zip(&v) {
            assert_relative_eq!(*x, *y, epsilon = 1e-10);
        }
    }

    #[test]
    fn singular_cycle_solver() {
        let report = solve_singular_cycle(&[0.0; 5], 5.0, TOL).unwrap();
        for &h in &report.solution {
            assert_relative_eq!(h, 1.0, epsilon = 1e-12);
        }

        // v = e - 1/n against the Green function column.
        let n = 6;
        let mut v = vec![-1.0 / n as f64; n];
        v[0] += 1.0;
        let report = solve_singular_cycle(&v, 0.0, TOL).unwrap();
        assert!(report.residual < 1e-12);
        let g = laplacian_green::<f64>(n, 64).unwrap();
        let gv = g.mul_vec(&v).unwrap();
        for (h, e) in report.solution.iter().zip(&gv) {
            assert_relative_eq!(*h, *e, epsilon = 1e-10);
        }

        assert!(matches!(
            solve_singular_cycle(&[1.0, 0.0, 0.0, 0.0], 0.0, TOL),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn sym3_certificate_examples() {
        // The cycle Laplacian as a symmetric row: zero row sum.
        let c = check_invertible_sym3(
            &SymThreeParam {
                a: 2.0,
                b: -1.0,
                c: 0.0,
                n: 5,
            },
            TOL,
        )
        .unwrap();
        assert!(!c.invertible);
        assert_eq!(c.witness, 0);

        let c = check_invertible_sym3(
            &SymThreeParam {
                a: 4.0,
                b: 1.0,
                c: 0.0,
                n: 5,
            },
            TOL,
        )
        .unwrap();
        assert!(c.invertible);

        // Hitting the j = 1 cosine exactly.
        let (b, c0, n) = (2.0, -1.0, 7);
        let a = c0 - 2.0 * (b - c0) * (2.0 * std::f64::consts::PI / n as f64).cos();
        let c = check_invertible_sym3(&SymThreeParam { a, b, c: c0, n }, TOL).unwrap();
        assert!(!c.invertible);
        assert_eq!(c.witness, 1);
    }

    #[test]
    fn sym3_reduces_to_cycle_green_bitwise() {
        let (q, n) = (3.0f64, 6);
        let via_sym = inverse_sym3(
            &SymThreeParam {
                a: 2.0 * q,
                b: -1.0,
                c: 0.0,
                n,
            },
            TOL,
        )
        .unwrap();
        let via_cycle = cycle_green(q, n, TOL).unwrap();
        assert_eq!(via_sym.row.as_slice(), via_cycle.row.as_slice());
    }

    #[test]
    fn sym3_green_branch_against_dense() {
        // a = 3c - 2b with (b, c) = (-1, 1) gives a = 5.
        let f = SymThreeParam {
            a: 5.0,
            b: -1.0,
            c: 1.0,
            n: 5,
        };
        let inv = inverse_sym3(&f, TOL).unwrap();
        assert_eq!(inv.method, Method::Sym3Green);
        let dense = spectral::dense_inverse_row(&f.row(), 64).unwrap();
        for (v, d) in inv.row.as_slice().iter().zip(dense.as_slice()) {
            assert_relative_eq!(*v, *d, epsilon = 1e-10);
        }
        assert_inverse_of(&f.row(), &inv.row, 1e-12);
    }

    #[test]
    fn sym3_generic_branch_against_dense() {
        let f = SymThreeParam {
            a: 4.0,
            b: 1.0,
            c: 0.0,
            n: 5,
        };
        let inv = inverse_sym3(&f, TOL).unwrap();
        assert_eq!(inv.method, Method::Sym3Generic);
        let dense = spectral::dense_inverse_row(&f.row(), 64).unwrap();
        for (v, d) in inv.row.as_slice().iter().zip(dense.as_slice()) {
            assert_relative_eq!(*v, *d, epsilon = 1e-10);
        }
        // Symmetric input, symmetric inverse.
        let tau = inv.row.tau_permute();
        for (x, y) in inv.row.as_slice().iter().zip(tau.as_slice()) {
            assert_relative_eq!(*x, *y, epsilon = 1e-12);
        }
    }

    #[test]
    fn sym3_delegates_c_equals_b() {
        let f = SymThreeParam {
            a: 5.0,
            b: 2.0,
            c: 2.0,
            n: 6,
        };
        let inv = inverse_sym3(&f, TOL).unwrap();
        assert_eq!(inv.method, Method::ThreeParamDiagonal);
        assert_inverse_of(&f.row(), &inv.row, 1e-12);
    }

    #[test]
    fn sym3_branch_continuity_at_green_point() {
        let (b, c, n) = (-1.0, 1.0, 9);
        let a0 = 3.0 * c - 2.0 * b;
        let at = inverse_sym3(&SymThreeParam { a: a0, b, c, n }, TOL).unwrap();
        let near = inverse_sym3(
            &SymThreeParam {
                a: a0 + 1e-8,
                b,
                c,
                n,
            },
            TOL,
        )
        .unwrap();
        assert_eq!(near.method, Method::Sym3Generic);
        for (x, y) in at.row.as_slice().iter().zip(near.row.as_slice()) {
            assert!((x - y).abs() < 1e-6);
        }
    }

    #[test]
    fn tridiag_inverse_and_verdicts() {
        let f = TridiagSym {
            a: 4.0,
            b: 1.0,
            n: 5,
        };
        let inv = inverse_tridiag_sym(&f, TOL).unwrap();
        let dense = spectral::dense_inverse_row(&f.row(), 64).unwrap();
        for (v, d) in inv.row.as_slice().iter().zip(dense.as_slice()) {
            assert_relative_eq!(*v, *d, epsilon = 1e-9);
        }

        // The cycle Laplacian is singular.
        assert!(matches!(
            inverse_tridiag_sym(
                &TridiagSym {
                    a: 2.0,
                    b: -1.0,
                    n: 6
                },
                TOL
            ),
            Err(Error::Singular { .. })
        ));

        // (1, 1) at n = 4: not diagonally dominant, still invertible, and the
        // verdict agrees with the spectral oracle.
        let f = TridiagSym {
            a: 1.0,
            b: 1.0,
            n: 4,
        };
        let cert = cert_tridiag(&f, TOL).unwrap();
        let oracle = spectral::spectrum(&f.row()).certificate(TOL);
        assert_eq!(cert.invertible, oracle.invertible);
        assert!(cert.invertible);

        // Diagonal dominance always passes.
        for n in 3..12 {
            let f = TridiagSym { a: 4.0, b: 1.0, n };
            assert!(cert_tridiag(&f, TOL).unwrap().invertible);
        }
    }

    #[test]
    fn quadratic_inverse_and_errors() {
        let f = QuadraticPattern {
            a: 1.0,
            b: 1.0,
            n: 4,
        };
        assert_eq!(f.row().as_slice(), &[1.0, 4.0, 5.0, 4.0]);
        let inv = inverse_quadratic_pattern(&f, TOL).unwrap();
        assert_inverse_of(&f.row(), &inv.row, 1e-12);

        assert!(matches!(
            inverse_quadratic_pattern(
                &QuadraticPattern {
                    a: 1.0,
                    b: 0.0,
                    n: 4
                },
                TOL
            ),
            Err(Error::Singular { .. })
        ));
        let n = 5;
        let b = 2.0;
        let a = -b * ((n * n) as f64 - 1.0) / 6.0;
        assert!(matches!(
            inverse_quadratic_pattern(&QuadraticPattern { a, b, n }, TOL),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn alternating_inverses_against_dense() {
        let cases = [
            AlternatingPattern {
                case: AltCase::Case1,
                a: 2.0,
                b: 0.0,
                n: 5,
            },
            AlternatingPattern {
                case: AltCase::Case2,
                a: 3.0,
                b: 1.0,
                n: 6,
            },
            AlternatingPattern {
                case: AltCase::Case3,
                a: 2.0,
                b: -1.0,
                n: 7,
            },
            AlternatingPattern {
                case: AltCase::Case4,
                a: 0.0,
                b: 1.0,
                n: 5,
            },
        ];
        for f in cases {
            let inv = inverse_alternating_pattern(&f, TOL).unwrap();
            let dense = spectral::dense_inverse_row(&f.row(), 64).unwrap();
            for (v, d) in inv.row.as_slice().iter().zip(dense.as_slice()) {
                assert_relative_eq!(*v, *d, epsilon = 1e-10, max_relative = 1e-9);
            }
            assert_inverse_of(&f.row(), &inv.row, 1e-10);
        }
    }

    #[test]
    fn alternating_wrong_residue_rejected() {
        let f = AlternatingPattern {
            case: AltCase::Case2,
            a: 1.0,
            b: 2.0,
            n: 5,
        };
        assert!(matches!(
            inverse_alternating_pattern(&f, TOL),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn nearest_cosine_finds_the_minimum() {
        for n in [4usize, 5, 9, 16] {
            for &q in &[-3.0, -1.0, -0.4, 0.1, 0.97, 1.0, 2.5] {
                let (j_fast, d_fast) = nearest_cosine(q, n, 0);
                let mut best = (0usize, f64::INFINITY);
                for j in 0..=n / 2 {
                    let d = (q - (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos()).abs();
                    if d < best.1 {
                        best = (j, d);
                    }
                }
                assert_eq!(j_fast, best.0, "q={q} n={n}");
                assert_relative_eq!(d_fast, best.1, epsilon = 1e-14);
            }
        }
    }
}
