//! The commutative quadruple-complex algebra.
//!
//! The same eight reals that make up an octonion can be read as four complex
//! scalars `(s0, s1, s2, s3) = (c0 + c1 i, c2 + c3 i, c4 + c5 i, c6 + c7 i)`.
//! Under this reading the product (written `qmul` here) is commutative and
//! associative, which is what makes frequency-domain system algebra work.
//! The price is that not every nonzero element is invertible: inversion
//! fails exactly where the quartic `delta` vanishes.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::octonion::Octonion;

/// Element with `delta` too close to zero to invert; carries the offending
/// delta value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularElement {
    pub delta: Complex64,
}

impl fmt::Display for SingularElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quadruple-complex element is singular (delta = {})", self.delta)
    }
}

impl std::error::Error for SingularElement {}

/// A quadruple-complex number; `s[k]` holds octonion coefficients
/// `(c_{2k}, c_{2k+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QuadComplex {
    pub s: [Complex64; 4],
}

/// Relative threshold on `|delta|`; delta is quartic in the coefficients so
/// the scale enters at the fourth power.
pub const SINGULAR_EPSILON: f64 = 1e-12;

impl QuadComplex {
    pub const ZERO: QuadComplex = QuadComplex {
        s: [Complex64::new(0.0, 0.0); 4],
    };
    pub const ONE: QuadComplex = {
        let mut s = [Complex64::new(0.0, 0.0); 4];
        s[0] = Complex64::new(1.0, 0.0);
        QuadComplex { s }
    };

    pub const fn new(s: [Complex64; 4]) -> Self {
        QuadComplex { s }
    }

    pub fn real(r: f64) -> Self {
        let mut s = [Complex64::new(0.0, 0.0); 4];
        s[0] = Complex64::new(r, 0.0);
        QuadComplex { s }
    }

    /// Reinterpret an octonion; pure coefficient bookkeeping, bit-exact.
    pub fn from_octonion(o: &Octonion) -> Self {
        QuadComplex {
            s: [
                Complex64::new(o.c[0], o.c[1]),
                Complex64::new(o.c[2], o.c[3]),
                Complex64::new(o.c[4], o.c[5]),
                Complex64::new(o.c[6], o.c[7]),
            ],
        }
    }

    /// Inverse reinterpretation of [`from_octonion`](Self::from_octonion).
    pub fn to_octonion(&self) -> Octonion {
        Octonion::new([
            self.s[0].re, self.s[0].im, self.s[1].re, self.s[1].im, self.s[2].re, self.s[2].im,
            self.s[3].re, self.s[3].im,
        ])
    }

    /// The quartic whose vanishing marks the non-invertible set. Complex in
    /// general.
    pub fn delta(&self) -> Complex64 {
        let [s0, s1, s2, s3] = self.s;
        let a = s0 - s3;
        let b = s1 + s2;
        let c = s0 + s3;
        let d = s1 - s2;
        (a * a + b * b) * (c * c + d * d)
    }

    pub fn max_abs(&self) -> f64 {
        self.s.iter().fold(0.0f64, |m, z| m.max(z.norm()))
    }

    /// Closed-form inverse. Fails with [`SingularElement`] when `|delta|`
    /// falls below `SINGULAR_EPSILON * scale^4`.
    pub fn inverse(&self) -> Result<QuadComplex, SingularElement> {
        let [s0, s1, s2, s3] = self.s;
        let delta = self.delta();
        let scale = self.max_abs();
        if delta.norm() <= SINGULAR_EPSILON * scale.powi(4) {
            return Err(SingularElement { delta });
        }
        let q0 = s0 * s0;
        let q1 = s1 * s1;
        let q2 = s2 * s2;
        let q3 = s3 * s3;
        let two = Complex64::new(2.0, 0.0);
        let num = [
            s0 * (q0 + q1 + q2 - q3) + two * s1 * s2 * s3,
            -s1 * (q0 + q1 - q2 + q3) - two * s0 * s2 * s3,
            -s2 * (q0 - q1 + q2 + q3) - two * s0 * s1 * s3,
            s3 * (-q0 + q1 + q2 + q3) + two * s0 * s1 * s2,
        ];
        Ok(QuadComplex {
            s: [num[0] / delta, num[1] / delta, num[2] / delta, num[3] / delta],
        })
    }

    pub fn scale(&self, k: f64) -> QuadComplex {
        let mut s = self.s;
        for z in &mut s {
            *z *= k;
        }
        QuadComplex { s }
    }
}

/// The commutative product.
pub fn qmul(a: &QuadComplex, b: &QuadComplex) -> QuadComplex {
    let [s0, s1, s2, s3] = a.s;
    let [t0, t1, t2, t3] = b.s;
    QuadComplex {
        s: [
            s0 * t0 - s1 * t1 - s2 * t2 + s3 * t3,
            s0 * t1 + s1 * t0 - s2 * t3 - s3 * t2,
            s0 * t2 + s2 * t0 - s1 * t3 - s3 * t1,
            s0 * t3 + s3 * t0 + s1 * t2 + s2 * t1,
        ],
    }
}

impl Mul for QuadComplex {
    type Output = QuadComplex;
    fn mul(self, rhs: QuadComplex) -> QuadComplex {
        qmul(&self, &rhs)
    }
}

impl Add for QuadComplex {
    type Output = QuadComplex;
    fn add(self, rhs: QuadComplex) -> QuadComplex {
        let mut s = self.s;
        for i in 0..4 {
            s[i] += rhs.s[i];
        }
        QuadComplex { s }
    }
}

impl AddAssign for QuadComplex {
    fn add_assign(&mut self, rhs: QuadComplex) {
        for i in 0..4 {
            self.s[i] += rhs.s[i];
        }
    }
}

impl Sub for QuadComplex {
    type Output = QuadComplex;
    fn sub(self, rhs: QuadComplex) -> QuadComplex {
        let mut s = self.s;
        for i in 0..4 {
            s[i] -= rhs.s[i];
        }
        QuadComplex { s }
    }
}

impl Neg for QuadComplex {
    type Output = QuadComplex;
    fn neg(self) -> QuadComplex {
        self.scale(-1.0)
    }
}
