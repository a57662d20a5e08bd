use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol::Tolerances;

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Principal square root. A zero real part maps to a non-negative imaginary
/// part, independent of the sign of a zero imaginary input.
pub fn csqrt(z: C64) -> C64 {
    let z = if z.im == 0.0 { C64::new(z.re, 0.0) } else { z };
    let s = z.sqrt();
    if s.re == 0.0 && s.im < 0.0 {
        -s
    } else {
        s
    }
}

pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Three complex components, the coefficient vector of a Pauli expansion.
pub type Vec3 = [C64; 3];

/// Bilinear (unconjugated) dot product.
pub fn dot3(u: &Vec3, v: &Vec3) -> C64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross3(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub fn conj3(u: &Vec3) -> Vec3 {
    [u[0].conj(), u[1].conj(), u[2].conj()]
}

pub fn scale3(s: C64, u: &Vec3) -> Vec3 {
    [s * u[0], s * u[1], s * u[2]]
}

pub fn add3(u: &Vec3, v: &Vec3) -> Vec3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

/// Dense 2x2 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CMat2 {
    pub m: [[C64; 2]; 2],
}

impl fmt::Debug for CMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

impl CMat2 {
    pub const fn new(a11: C64, a12: C64, a21: C64, a22: C64) -> Self {
        CMat2 {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        CMat2::new(r(a11), r(a12), r(a21), r(a22))
    }

    pub const fn zero() -> Self {
        CMat2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        CMat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn diag(a: C64, b: C64) -> Self {
        CMat2::new(a, ZERO, ZERO, b)
    }

    pub fn dagger(&self) -> Self {
        let m = &self.m;
        CMat2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        CMat2::new(m[0][0], m[1][0], m[0][1], m[1][1])
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let m = &self.m;
        CMat2::new(f(m[0][0]), f(m[0][1]), f(m[1][0]), f(m[1][1]))
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| s * z)
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|&z| is_finite(z))
    }

    /// Inverse with the singularity guard `|det| > eq_abs * max(1, |M|^2)`.
    pub fn inverse(&self, tol: &Tolerances) -> Result<Self> {
        let d = self.det();
        let n = self.frobenius_norm();
        let threshold = tol.eq_abs * (n * n).max(1.0);
        if !(d.norm() > threshold) {
            return Err(Error::SingularMatrix {
                det: d.norm(),
                threshold,
            });
        }
        let m = &self.m;
        Ok(CMat2::new(m[1][1], -m[0][1], -m[1][0], m[0][0]).scale(d.inv()))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Splits into diagonal and off-diagonal parts.
    pub fn split(&self) -> (Self, Self) {
        (
            CMat2::diag(self.m[0][0], self.m[1][1]),
            CMat2::new(ZERO, self.m[0][1], self.m[1][0], ZERO),
        )
    }

    /// Entrywise comparison against `eq_abs + eq_rel * max(|A|, |B|)`.
    pub fn approx_eq(&self, other: &Self, tol: &Tolerances) -> bool {
        let scale = self.frobenius_norm().max(other.frobenius_norm());
        let t = tol.threshold(scale);
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .all(|(a, b)| (a - b).norm() <= t)
    }

    /// Largest entrywise deviation divided by `max(1, |A|, |B|)`.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        let scale = self
            .frobenius_norm()
            .max(other.frobenius_norm())
            .max(f64::MIN_POSITIVE);
        (*self - *other).max_abs() / scale
    }

    /// Eigenvalues of a Hermitian matrix in ascending order. Only the Hermitian
    /// part is used.
    pub fn hermitian_eigenvalues(&self) -> [f64; 2] {
        let a = self.m[0][0].re;
        let d = self.m[1][1].re;
        let b = (self.m[0][1] + self.m[1][0].conj()) * 0.5;
        let mean = 0.5 * (a + d);
        let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        [mean - rad, mean + rad]
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, o: CMat2) -> CMat2 {
        let (a, b) = (&self.m, &o.m);
        CMat2::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl AddAssign for CMat2 {
    fn add_assign(&mut self, o: CMat2) {
        *self = *self + o;
    }
}

impl Sub for CMat2 {
    type Output = CMat2;
    fn sub(self, o: CMat2) -> CMat2 {
        self + (-o)
    }
}

impl Neg for CMat2 {
    type Output = CMat2;
    fn neg(self) -> CMat2 {
        self.map(|z| -z)
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, o: CMat2) -> CMat2 {
        let (a, b) = (&self.m, &o.m);
        CMat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<C64> for CMat2 {
    type Output = CMat2;
    fn mul(self, s: C64) -> CMat2 {
        self.scale(s)
    }
}

impl Mul<CMat2> for C64 {
    type Output = CMat2;
    fn mul(self, m: CMat2) -> CMat2 {
        m.scale(self)
    }
}

impl Mul<f64> for CMat2 {
    type Output = CMat2;
    fn mul(self, s: f64) -> CMat2 {
        self.scale(r(s))
    }
}

impl Mul<CMat2> for f64 {
    type Output = CMat2;
    fn mul(self, m: CMat2) -> CMat2 {
        m.scale(r(self))
    }
}

pub fn sigma0() -> CMat2 {
    CMat2::identity()
}

pub fn sigma1() -> CMat2 {
    CMat2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma2() -> CMat2 {
    CMat2::new(ZERO, -I, I, ZERO)
}

pub fn sigma3() -> CMat2 {
    CMat2::new(ONE, ZERO, ZERO, -ONE)
}

/// `v . sigma` for a complex three-vector.
pub fn dot_sigma(v: &Vec3) -> CMat2 {
    CMat2::new(v[2], v[0] - I * v[1], v[0] + I * v[1], -v[2])
}

/// Dense 4x4 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CMat4 {
    pub m: [[C64; 4]; 4],
}

impl fmt::Debug for CMat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        f.write_str("]")
    }
}

impl CMat4 {
    pub const fn zero() -> Self {
        CMat4 { m: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diag([ONE; 4])
    }

    pub fn diag(d: [C64; 4]) -> Self {
        let mut out = Self::zero();
        for (i, &x) in d.iter().enumerate() {
            out.m[i][i] = x;
        }
        out
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = r(rows[i][j]);
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut out = *self;
        out.m.iter_mut().flatten().for_each(|z| *z = f(*z));
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| s * z)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = self.m[j][i];
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.m[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|&z| is_finite(z))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| i == j || self.m[i][j] == ZERO))
    }

    /// LU factorisation with partial pivoting; returns (lu, perm, sign).
    fn lu(&self) -> ([[C64; 4]; 4], [usize; 4], f64) {
        let mut a = self.m;
        let mut perm = [0, 1, 2, 3];
        let mut sign = 1.0;
        for k in 0..4 {
            let p = (k..4)
                .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
                .unwrap_or(k);
            if p != k {
                a.swap(p, k);
                perm.swap(p, k);
                sign = -sign;
            }
            if a[k][k] == ZERO {
                continue;
            }
            for i in k + 1..4 {
                let f = a[i][k] / a[k][k];
                a[i][k] = f;
                for j in k + 1..4 {
                    let t = a[k][j];
                    a[i][j] -= f * t;
                }
            }
        }
        (a, perm, sign)
    }

    pub fn det(&self) -> C64 {
        let (lu, _, sign) = self.lu();
        (0..4).map(|i| lu[i][i]).product::<C64>() * sign
    }

    pub fn inverse(&self, tol: &Tolerances) -> Result<Self> {
        let d = self.det();
        let n = self.frobenius_norm();
        let threshold = tol.eq_abs * (n * n).max(1.0);
        if !(d.norm() > threshold) {
            return Err(Error::SingularMatrix {
                det: d.norm(),
                threshold,
            });
        }
        let (lu, perm, _) = self.lu();
        let mut inv = Self::zero();
        for col in 0..4 {
            let mut y = [ZERO; 4];
            for i in 0..4 {
                let mut s = if perm[i] == col { ONE } else { ZERO };
                for j in 0..i {
                    s -= lu[i][j] * y[j];
                }
                y[i] = s;
            }
            for i in (0..4).rev() {
                let mut s = y[i];
                for j in i + 1..4 {
                    s -= lu[i][j] * inv.m[j][col];
                }
                inv.m[i][col] = s / lu[i][i];
            }
        }
        Ok(inv)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerances) -> bool {
        let t = tol.threshold(self.frobenius_norm().max(other.frobenius_norm()));
        (*self - *other).max_abs() <= t
    }
}

impl Add for CMat4 {
    type Output = CMat4;
    fn add(self, o: CMat4) -> CMat4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] += o.m[i][j];
            }
        }
        out
    }
}

impl Sub for CMat4 {
    type Output = CMat4;
    fn sub(self, o: CMat4) -> CMat4 {
        self + (-o)
    }
}

impl Neg for CMat4 {
    type Output = CMat4;
    fn neg(self) -> CMat4 {
        self.map(|z| -z)
    }
}

impl Mul for CMat4 {
    type Output = CMat4;
    fn mul(self, o: CMat4) -> CMat4 {
        let mut out = CMat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = (0..4).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        out
    }
}

impl Mul<C64> for CMat4 {
    type Output = CMat4;
    fn mul(self, s: C64) -> CMat4 {
        self.scale(s)
    }
}

impl Mul<CMat4> for C64 {
    type Output = CMat4;
    fn mul(self, m: CMat4) -> CMat4 {
        m.scale(self)
    }
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &CMat2, b: &CMat2) -> CMat4 {
    let mut out = CMat4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.m[2 * i + k][2 * j + l] = a.m[i][j] * b.m[k][l];
                }
            }
        }
    }
    out
}
