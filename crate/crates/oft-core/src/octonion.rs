//! Octonion arithmetic.
//!
//! An octonion is stored as eight `f64` coefficients over the basis
//! `{1, e1, ..., e7}` (index 0 is the real part). Multiplication follows the
//! Cayley-Dickson doubling of quaternions: `(q0, q1) * (p0, p1) =
//! (q0 p0 - p1* q1, p1 q0 + q1 p0*)`. The resulting basis products are
//! hard-coded in [`BASIS_SIGN`]/[`BASIS_IDX`]; `basis_table_from_pairs`
//! regenerates them from the pair formula so the two sources can be checked
//! against each other.
//!
//! The algebra is non-commutative and non-associative (but alternative and
//! flexible), so every multi-factor product in this crate is written as an
//! explicit left-to-right fold.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

/// Sign of `e_i * e_j` in the basis product table.
pub const BASIS_SIGN: [[i8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, -1, 1],
    [1, -1, -1, 1, 1, 1, -1, -1],
    [1, 1, -1, -1, 1, -1, 1, -1],
    [1, -1, -1, -1, -1, 1, 1, 1],
    [1, 1, -1, 1, -1, -1, -1, 1],
    [1, 1, 1, -1, -1, 1, -1, -1],
    [1, -1, 1, 1, -1, -1, 1, -1],
];

/// Basis index of `e_i * e_j` (0 denotes the real unit).
pub const BASIS_IDX: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];

/// Norms below this are treated as zero when inverting.
pub const ZERO_NORM_EPSILON: f64 = 1e-300;

/// Below this imaginary magnitude, `exp` switches to a Taylor form of
/// `sin(t)/t` to avoid 0/0.
const EXP_SMALL_ANGLE: f64 = 1e-8;

/// Attempt to invert an octonion with (numerically) zero norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroOctonion;

impl fmt::Display for ZeroOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "octonion has zero norm and cannot be inverted")
    }
}

impl std::error::Error for ZeroOctonion {}

/// An octonion: eight real coefficients over `{1, e1, ..., e7}`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub c: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { c: [0.0; 8] };
    pub const ONE: Octonion = Octonion::unit(0);

    pub const fn new(c: [f64; 8]) -> Self {
        Octonion { c }
    }

    /// The basis element `e_i` (`e_0` is the real unit).
    pub const fn unit(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion { c }
    }

    pub const fn real(r: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = r;
        Octonion { c }
    }

    /// A complex value `re + im*e_axis` embedded in the plane of `e_axis`.
    pub fn from_complex_axis(re: f64, im: f64, axis: usize) -> Self {
        debug_assert!((1..8).contains(&axis));
        let mut c = [0.0; 8];
        c[0] = re;
        c[axis] = im;
        Octonion { c }
    }

    pub fn re(&self) -> f64 {
        self.c[0]
    }

    /// Imaginary part (coefficients 1..7, real part zeroed).
    pub fn im(&self) -> Octonion {
        let mut c = self.c;
        c[0] = 0.0;
        Octonion { c }
    }

    pub fn conj(&self) -> Octonion {
        let mut c = [0.0; 8];
        c[0] = self.c[0];
        for i in 1..8 {
            c[i] = -self.c[i];
        }
        Octonion { c }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Octonion {
        let mut c = self.c;
        for x in &mut c {
            *x *= s;
        }
        Octonion { c }
    }

    /// `self * e_axis` as a signed coefficient permutation.
    pub fn mul_basis_right(&self, axis: usize) -> Octonion {
        let mut c = [0.0; 8];
        for i in 0..8 {
            c[BASIS_IDX[i][axis]] += BASIS_SIGN[i][axis] as f64 * self.c[i];
        }
        Octonion { c }
    }

    /// `self * (cos t + sign * e_axis * sin t)`; the workhorse of every
    /// transform kernel. `sign` is +1 or -1 for the kernel direction.
    pub fn mul_axis_phase(&self, axis: usize, cos_t: f64, sin_t: f64, sign: f64) -> Octonion {
        let rotated = self.mul_basis_right(axis);
        let mut c = [0.0; 8];
        let s = sign * sin_t;
        for i in 0..8 {
            c[i] = self.c[i] * cos_t + rotated.c[i] * s;
        }
        Octonion { c }
    }

    /// Multiplicative inverse `conj(o) / |o|^2`.
    pub fn inverse(&self) -> Result<Octonion, ZeroOctonion> {
        let n2 = self.norm_sqr();
        if n2.sqrt() < ZERO_NORM_EPSILON {
            return Err(ZeroOctonion);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// Octonion exponential `e^{Re o} (cos|v| + v/|v| sin|v|)` with `v = Im o`.
    pub fn exp(&self) -> Octonion {
        let v = self.im();
        let t = v.norm();
        let scale = self.c[0].exp();
        // sin(t)/t, switching to its series for tiny t.
        let sinc = if t < EXP_SMALL_ANGLE {
            1.0 - t * t / 6.0
        } else {
            t.sin() / t
        };
        let mut out = v.scale(scale * sinc);
        out.c[0] = scale * t.cos();
        out
    }

    /// Polar decomposition `(|o|, axis, theta)` with `o = |o| exp(axis*theta)`.
    ///
    /// For real `o` the axis degenerates; it is fixed to `e1` with
    /// `theta = 0` (positive) or `pi` (negative).
    pub fn polar(&self) -> Result<(f64, Octonion, f64), ZeroOctonion> {
        let mag = self.norm();
        if mag < ZERO_NORM_EPSILON {
            return Err(ZeroOctonion);
        }
        let v = self.im();
        let vn = v.norm();
        if vn == 0.0 {
            let theta = if self.c[0] > 0.0 { 0.0 } else { std::f64::consts::PI };
            return Ok((mag, Octonion::unit(1), theta));
        }
        let axis = v.scale(1.0 / vn);
        let theta = vn.atan2(self.c[0]);
        Ok((mag, axis, theta))
    }

    /// Scalar part of `self * conj(other)` summed coefficient-wise.
    pub fn dot(&self, other: &Octonion) -> f64 {
        (0..8).map(|i| self.c[i] * other.c[i]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.c[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for i in 0..8 {
            c[i] += rhs.c[i];
        }
        Octonion { c }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        for i in 0..8 {
            self.c[i] += rhs.c[i];
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for i in 0..8 {
            c[i] -= rhs.c[i];
        }
        Octonion { c }
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        for i in 0..8 {
            self.c[i] -= rhs.c[i];
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        let mut c = [0.0; 8];
        for i in 0..8 {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..8 {
                c[BASIS_IDX[i][j]] += BASIS_SIGN[i][j] as f64 * a * rhs.c[j];
            }
        }
        Octonion { c }
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

/// Quaternion product on coefficient quadruples, `e1*e2 = e3` convention.
fn quat_mul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: [f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

/// Octonion product through the Cayley-Dickson pair formula, bypassing the
/// basis tables entirely. Slower than `Mul`; kept as the independent route
/// the tables are checked against.
pub fn mul_cayley_dickson(a: Octonion, b: Octonion) -> Octonion {
    let (q0, q1) = ([a.c[0], a.c[1], a.c[2], a.c[3]], [a.c[4], a.c[5], a.c[6], a.c[7]]);
    let (p0, p1) = ([b.c[0], b.c[1], b.c[2], b.c[3]], [b.c[4], b.c[5], b.c[6], b.c[7]]);
    let mut lo = quat_mul(q0, p0);
    let t = quat_mul(quat_conj(p1), q1);
    for i in 0..4 {
        lo[i] -= t[i];
    }
    let mut hi = quat_mul(p1, q0);
    let t = quat_mul(q1, quat_conj(p0));
    for i in 0..4 {
        hi[i] += t[i];
    }
    Octonion::new([lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]])
}

/// Regenerate the basis product table from the Cayley-Dickson pair formula.
pub fn basis_table_from_pairs() -> [[(i8, usize); 8]; 8] {
    let mut table = [[(0i8, 0usize); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let p = mul_cayley_dickson(Octonion::unit(i), Octonion::unit(j));
            let mut entry = None;
            for (k, &v) in p.c.iter().enumerate() {
                if v != 0.0 {
                    assert!(entry.is_none(), "basis product is not a signed basis element");
                    assert!(v == 1.0 || v == -1.0);
                    entry = Some((v as i8, k));
                }
            }
            table[i][j] = entry.expect("basis product vanished");
        }
    }
    table
}
