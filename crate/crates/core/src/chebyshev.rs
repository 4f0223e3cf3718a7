//! Chebyshev polynomials of the first and second kind for any integer index,
//! Horadam numbers, and the kernel vectors `z(q)`, `u(q)`, `v(q)`, `w(q)`
//! that drive the closed-form inverses.

use crate::error::{Error, Result};
use crate::scalar::{real, real_of, Real};

// Below this |sin(theta)| the trigonometric form of U is replaced by its
// endpoint limit; see `cheb_u`.
const SIN_GUARD: f64 = 1e-8;

/// Which of the two classical kinds a query refers to.
///
/// Both satisfy `Q_{m+1}(x) = 2x Q_m(x) - Q_{m-1}(x)`; the seeds differ:
/// `T_0 = 1, T_1 = x` and `U_0 = 1, U_1 = 2x`. Negative indices are defined
/// through `T_{-m} = T_m` and `U_{-m} = -U_{m-2}` (so `U_{-1} = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChebyshevKind {
    FirstKind,
    SecondKind,
}

impl ChebyshevKind {
    pub fn eval<T: Real>(self, m: i64, x: T) -> T {
        match self {
            ChebyshevKind::FirstKind => cheb_t(m, x),
            ChebyshevKind::SecondKind => cheb_u(m, x),
        }
    }
}

/// `T_m(x)` for any integer `m`.
///
/// Inside `[-1, 1]` the cosine closed form is exact and stable; outside, the
/// forward recurrence tracks the dominant growing solution and is stable too.
pub fn cheb_t<T: Real>(m: i64, x: T) -> T {
    if x.abs() <= T::one() {
        let theta = x.acos();
        return (T::from_i64(m).unwrap() * theta).cos();
    }
    let m = m.unsigned_abs();
    recurrence(m, T::one(), x, x + x)
}

/// `U_m(x)` for any integer `m`.
pub fn cheb_u<T: Real>(m: i64, x: T) -> T {
    if x.abs() <= T::one() {
        let theta = x.acos();
        let s = theta.sin();
        let mp1 = T::from_i64(m + 1).unwrap();
        if s < real(SIN_GUARD) {
            // x at (or numerically at) an endpoint: U_m(1) = m + 1,
            // U_m(-1) = (-1)^m (m + 1).
            let negate = x < T::zero() && m % 2 != 0;
            return if negate { -mp1 } else { mp1 };
        }
        return (mp1 * theta).sin() / s;
    }
    if m == -1 {
        return T::zero();
    }
    if m < -1 {
        return -cheb_u(-m - 2, x);
    }
    recurrence(m as u64, T::one(), x + x, x + x)
}

fn recurrence<T: Real>(m: u64, q0: T, q1: T, two_x: T) -> T {
    match m {
        0 => q0,
        1 => q1,
        _ => {
            let (mut prev, mut cur) = (q0, q1);
            for _ in 2..=m {
                let next = two_x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Integer parameters of the Horadam recurrence
/// `H_{m+2} = r H_{m+1} + s H_m`, seeded `H_0 = 0, H_1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoradamParams {
    r: i64,
    s: i64,
}

impl HoradamParams {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("Horadam parameter s must be nonzero"));
        }
        Ok(HoradamParams { r, s })
    }

    /// Fibonacci numbers.
    pub fn fibonacci() -> Self {
        HoradamParams { r: 1, s: 1 }
    }

    /// Pell numbers.
    pub fn pell() -> Self {
        HoradamParams { r: 2, s: 1 }
    }

    /// Jacobsthal numbers.
    pub fn jacobsthal() -> Self {
        HoradamParams { r: 1, s: 2 }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }
}

/// Exact `H_m(r, s)` by iterating the recurrence in 128-bit integers.
/// Overflow is an error, never a wraparound.
pub fn horadam(m: u32, p: HoradamParams) -> Result<i128> {
    let (r, s) = (p.r as i128, p.s as i128);
    let (mut prev, mut cur) = (0i128, 1i128);
    if m == 0 {
        return Ok(0);
    }
    for step in 2..=m {
        let next = r
            .checked_mul(cur)
            .and_then(|rc| s.checked_mul(prev).and_then(|sp| rc.checked_add(sp)))
            .ok_or(Error::Overflow(step))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `H_m(r, s)` through the second-kind Chebyshev bridge:
/// for `s < 0`, `H_m = (sqrt(-s))^{m-1} U_{m-1}(r / (2 sqrt(-s)))`;
/// for `s > 0` and even `m = 2k`, `H_m = r s^{k-1} U_{k-1}(1 + r^2 / (2s))`.
///
/// Floating-point; used to cross-validate the exact path.
pub fn horadam_via_chebyshev<T: Real>(m: u32, p: HoradamParams) -> Result<T> {
    let r = T::from_i64(p.r).unwrap();
    let s = T::from_i64(p.s).unwrap();
    if p.s < 0 {
        if m == 0 {
            return Ok(T::zero());
        }
        let root = (-s).sqrt();
        let x = r / (root + root);
        return Ok(root.powi(m as i32 - 1) * cheb_u(m as i64 - 1, x));
    }
    if !m.is_multiple_of(2) {
        return Err(Error::invalid(
            "Chebyshev form for s > 0 requires an even index",
        ));
    }
    if m == 0 {
        return Ok(T::zero());
    }
    let k = (m / 2) as i64;
    let x = T::one() + r * r / (s + s);
    Ok(r * s.powi(k as i32 - 1) * cheb_u(k - 1, x))
}

/// The four special vectors attached to a parameter `q` and an order `n`
/// (all stored 0-based; the defining formulas are 1-based):
/// `z_j = q^{n-j}`, `u_j = U_{j-2}(q)`, `v_j = U_{j-1}(q)`,
/// `w_j = U_{j-2}(q) + U_{n-j}(q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelVectors<T> {
    pub q: T,
    pub n: usize,
    pub z: Vec<T>,
    pub u: Vec<T>,
    pub v: Vec<T>,
    pub w: Vec<T>,
}

impl<T: Real> KernelVectors<T> {
    /// `<z(q), 1>` in closed form: `(q^n - 1) / (q - 1)`, with the q = 1
    /// limit value `n` taken analytically.
    pub fn z_sum(&self) -> T {
        let n = real_of::<T>(self.n);
        if (self.q - T::one()).abs() <= real(1e-12) {
            return n;
        }
        (self.q.powi(self.n as i32) - T::one()) / (self.q - T::one())
    }

    /// `<w(q), 1>` in closed form: `(T_n(q) - 1) / (q - 1)`, with the q = 1
    /// limit value `n^2` taken analytically.
    pub fn w_sum(&self) -> T {
        let n = real_of::<T>(self.n);
        if (self.q - T::one()).abs() <= real(1e-12) {
            return n * n;
        }
        (cheb_t(self.n as i64, self.q) - T::one()) / (self.q - T::one())
    }
}

/// Populates all four kernel vectors in one O(n) pass: the second-kind values
/// come from a single forward run of the three-term recurrence.
pub fn kernel_vectors<T: Real>(q: T, n: usize) -> KernelVectors<T> {
    assert!(n >= 1, "order must be at least 1");
    // us[m] = U_m(q) for m = 0..n-1
    let mut us = Vec::with_capacity(n);
    let two_q = q + q;
    let mut prev = T::zero(); // U_{-1}
    let mut cur = T::one(); // U_0
    for _ in 0..n {
        us.push(cur);
        let next = two_q * cur - prev;
        prev = cur;
        cur = next;
    }

    let mut z = vec![T::zero(); n];
    let mut p = T::one();
    for j in (0..n).rev() {
        z[j] = p;
        p *= q;
    }

    // 1-based j: u_j = U_{j-2}, v_j = U_{j-1}, w_j = U_{j-2} + U_{n-j}.
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for j0 in 0..n {
        let uj = if j0 == 0 { T::zero() } else { us[j0 - 1] };
        u.push(uj);
        v.push(us[j0]);
        w.push(uj + us[n - 1 - j0]);
    }
    KernelVectors { q, n, z, u, v, w }
}

/// The cosines `cos(2 pi j / n)` for `j = 1 ..= ceil((n-1)/2)`: together with
/// `q = 1` these are exactly the parameters at which `Circ(2q, -1, 0, ..., 0, -1)`
/// is singular. At the interior points (`2j < n`) the vector `w(q)` vanishes
/// identically; at `q = -1` (even `n`) it does not vanish but spans the kernel.
pub fn w_vanishing_points<T: Real>(n: usize) -> Vec<T> {
    assert!(n >= 3, "order must be at least 3");
    let two_pi = T::PI() + T::PI();
    let nn = real_of::<T>(n);
    (1..=n / 2)
        .map(|j| (two_pi * real_of::<T>(j) / nn).cos())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn t_at_one_is_one() {
        assert_relative_eq!(cheb_t(5, 1.0), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn kind_dispatch() {
        assert_relative_eq!(
            ChebyshevKind::FirstKind.eval(4, 0.3),
            cheb_t(4, 0.3),
            epsilon = 0.0
        );
        assert_relative_eq!(
            ChebyshevKind::SecondKind.eval(-3, 1.7),
            cheb_u(-3, 1.7),
            epsilon = 0.0
        );
    }

    #[test]
    fn t_at_zero_alternates() {
        assert_relative_eq!(cheb_t(4, 0.0), 1.0, epsilon = 1e-14);
        assert!(cheb_t(3, 0.0f64).abs() < 1e-14);
        assert_relative_eq!(cheb_t(2, 0.0), -1.0, epsilon = 1e-14);
    }

    #[test]
    fn t_negative_index_reflects() {
        assert_relative_eq!(cheb_t(-3, 0.7), cheb_t(3, 0.7), epsilon = 1e-14);
        assert_relative_eq!(cheb_t(-4, 1.9), cheb_t(4, 1.9), epsilon = 1e-14);
    }

    #[test]
    fn u_small_values() {
        assert_relative_eq!(cheb_u(3, 1.0), 4.0, epsilon = 1e-12);
        assert!(cheb_u(-1, 2.3f64).abs() < 1e-14);
        assert_relative_eq!(cheb_u(4, -1.0), 5.0, epsilon = 1e-12);
        assert_relative_eq!(cheb_u(3, -1.0), -4.0, epsilon = 1e-12);
        // U_2(x) = 4x^2 - 1
        assert_relative_eq!(cheb_u(2, 1.5), 8.0, epsilon = 1e-12);
        assert_relative_eq!(cheb_u(2, 3.0), 35.0, epsilon = 1e-12);
    }

    #[test]
    fn u_negative_index_reflects() {
        for &x in &[-1.7f64, -0.4, 0.3, 1.2] {
            for m in 2..8i64 {
                assert_relative_eq!(cheb_u(-m, x), -cheb_u(m - 2, x), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn first_kind_pell_identity() {
        // T_m(x) = x U_{m-1}(x) - U_{m-2}(x)
        for &x in &[-1.9f64, -0.6, 0.0, 0.8, 1.4] {
            for m in 0..20i64 {
                let lhs = cheb_t(m, x);
                let rhs = x * cheb_u(m - 1, x) - cheb_u(m - 2, x);
                assert_relative_eq!(lhs, rhs, epsilon = 1e-10, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn horadam_seed_values() {
        let p = HoradamParams::fibonacci();
        assert_eq!(horadam(0, p).unwrap(), 0);
        assert_eq!(horadam(1, p).unwrap(), 1);
        assert_eq!(horadam(1, HoradamParams::new(7, -3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn horadam_fibonacci_and_pell() {
        assert_eq!(horadam(6, HoradamParams::fibonacci()).unwrap(), 8);
        assert_eq!(horadam(4, HoradamParams::pell()).unwrap(), 12);
        assert_eq!(horadam(4, HoradamParams::jacobsthal()).unwrap(), 5);
        // H_m(2, -1) = m
        let p = HoradamParams::new(2, -1).unwrap();
        for m in 0..20u32 {
            assert_eq!(horadam(m, p).unwrap(), m as i128);
        }
    }

    #[test]
    fn horadam_overflow_is_reported() {
        let p = HoradamParams::new(i64::MAX / 2, i64::MAX / 2).unwrap();
        assert!(matches!(horadam(90, p), Err(Error::Overflow(_))));
    }

    #[test]
    fn horadam_rejects_zero_s() {
        assert!(HoradamParams::new(3, 0).is_err());
    }

    #[test]
    fn chebyshev_bridge_matches_examples() {
        // F_6 = U_2(3/2)
        assert_relative_eq!(
            horadam_via_chebyshev::<f64>(6, HoradamParams::fibonacci()).unwrap(),
            8.0,
            max_relative = 1e-12
        );
        // P_4 = 2 U_1(3)
        assert_relative_eq!(
            horadam_via_chebyshev::<f64>(4, HoradamParams::pell()).unwrap(),
            12.0,
            max_relative = 1e-12
        );
        // J_4 = 2 U_1(5/4)
        assert_relative_eq!(
            horadam_via_chebyshev::<f64>(4, HoradamParams::jacobsthal()).unwrap(),
            5.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn chebyshev_bridge_rejects_odd_index_for_positive_s() {
        assert!(horadam_via_chebyshev::<f64>(5, HoradamParams::fibonacci()).is_err());
    }

    #[test]
    fn chebyshev_bridge_covers_negative_s() {
        let p = HoradamParams::new(2, -1).unwrap();
        for m in 1..25u32 {
            let exact = horadam(m, p).unwrap() as f64;
            let bridged: f64 = horadam_via_chebyshev(m, p).unwrap();
            assert_relative_eq!(bridged, exact, max_relative = 1e-10);
        }
    }

    #[test]
    fn kernel_vectors_at_one() {
        let kv = kernel_vectors(1.0f64, 4);
        assert_eq!(kv.w, vec![4.0, 4.0, 4.0, 4.0]);
        let kv3 = kernel_vectors(1.0f64, 3);
        assert_eq!(kv3.z, vec![1.0, 1.0, 1.0]);
        assert_relative_eq!(kv3.z_sum(), 3.0);
        assert_relative_eq!(kv3.w_sum(), 9.0);
    }

    #[test]
    fn kernel_vectors_powers_of_two() {
        let kv = kernel_vectors(2.0f64, 3);
        assert_eq!(kv.z, vec![4.0, 2.0, 1.0]);
        assert_relative_eq!(kv.z_sum(), 7.0);
        let direct: f64 = kv.z.iter().sum();
        assert_relative_eq!(direct, kv.z_sum());
    }

    #[test]
    fn kernel_vector_w_is_tau_symmetric() {
        for &q in &[-1.5f64, -0.3, 0.9, 2.0] {
            for n in 1..10usize {
                let kv = kernel_vectors(q, n);
                let w = crate::circulant::CirculantVector::new(kv.w.clone()).unwrap();
                let wt = w.tau_permute();
                for (a, b) in w.as_slice().iter().zip(wt.as_slice()) {
                    assert_relative_eq!(a, b, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn kernel_vector_w_sum_matches_closed_form() {
        for &q in &[-2.0f64, -0.7, 0.4, 1.8] {
            for n in 2..12usize {
                let kv = kernel_vectors(q, n);
                let direct: f64 = kv.w.iter().sum();
                assert_relative_eq!(direct, kv.w_sum(), epsilon = 1e-9, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn vanishing_points_small_orders() {
        let p3 = w_vanishing_points::<f64>(3);
        assert_eq!(p3.len(), 1);
        assert_relative_eq!(p3[0], -0.5, epsilon = 1e-14);

        let p4 = w_vanishing_points::<f64>(4);
        assert_eq!(p4.len(), 2);
        assert!(p4[0].abs() < 1e-14);
        assert_relative_eq!(p4[1], -1.0, epsilon = 1e-14);
    }

    #[test]
    fn w_vanishes_at_interior_points() {
        for n in 3..=12usize {
            for (idx, q) in w_vanishing_points::<f64>(n).iter().enumerate() {
                let j = idx + 1;
                if 2 * j == n {
                    // q = -1 for even n: w spans the kernel but is not zero.
                    continue;
                }
                let kv = kernel_vectors(*q, n);
                let norm = kv.w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                assert!(norm < 1e-9, "w not vanishing at n={n} j={j}: {norm}");
                // At these points u and v lose their mean.
                let su: f64 = kv.u.iter().sum();
                let sv: f64 = kv.v.iter().sum();
                assert!(su.abs() < 1e-9 && sv.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn w_norm_small_at_n5_point() {
        let q = (2.0 * std::f64::consts::PI / 5.0).cos();
        let kv = kernel_vectors(q, 5);
        let norm = kv.w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(norm < 1e-9);
    }

    #[test]
    fn w_components_at_zero_and_minus_one() {
        // Even n: odd-position components of w(0) vanish and the even ones
        // alternate with strength 1 - (-1)^{n/2}.
        for n in (4..=14).step_by(2) {
            let kv = kernel_vectors(0.0f64, n);
            for j in 1..=n / 2 {
                assert!(kv.w[2 * j - 2].abs() < 1e-12);
                let expect = if (j - 1) % 2 == 0 { 1.0 } else { -1.0 }
                    * (1.0 - if (n / 2) % 2 == 0 { 1.0 } else { -1.0 });
                assert_relative_eq!(kv.w[2 * j - 1], expect, epsilon = 1e-12);
            }
        }
        // Odd n: w_j(-1) = (-1)^{j-1} (n + 2 - 2j).
        for n in (3..=15).step_by(2) {
            let kv = kernel_vectors(-1.0f64, n);
            for j in 1..=n {
                let expect =
                    if (j - 1) % 2 == 0 { 1.0 } else { -1.0 } * (n as f64 + 2.0 - 2.0 * j as f64);
                assert_relative_eq!(kv.w[j - 1], expect, epsilon = 1e-12);
            }
        }
    }
}
