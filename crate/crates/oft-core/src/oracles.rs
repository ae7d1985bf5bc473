//! Independent reference routes used by the test and verification suites.
//!
//! Nothing here shares code with the fast paths it is used to check: the
//! inverse below goes through dense Gaussian elimination on the 4x4
//! multiplication matrix instead of the closed-form formula, and the
//! determinant comes from the same elimination.

use num_complex::Complex64;

use crate::quad_complex::{QuadComplex, SingularElement};

/// The 4x4 complex matrix `M(a)` with `qmul(a, x) = M(a) x` on coefficient
/// vectors.
pub fn qc_multiplication_matrix(a: &QuadComplex) -> [[Complex64; 4]; 4] {
    let [s0, s1, s2, s3] = a.s;
    [
        [s0, -s1, -s2, s3],
        [s1, s0, -s3, -s2],
        [s2, -s3, s0, -s1],
        [s3, s2, s1, s0],
    ]
}

/// Determinant of `M(a)`, by elimination with partial pivoting. Equals
/// `delta(a)` (same sign convention; pinned by tests).
pub fn qc_matrix_determinant(a: &QuadComplex) -> Complex64 {
    let mut m = qc_multiplication_matrix(a);
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..4 {
            let factor = m[row][col] / m[col][col];
            for k in col..4 {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    det
}

/// Solve `qmul(a, x) = 1` as a dense linear system.
pub fn qc_inverse_linear_solve(a: &QuadComplex) -> Result<QuadComplex, SingularElement> {
    let mut m = qc_multiplication_matrix(a);
    let mut rhs = [Complex64::new(0.0, 0.0); 4];
    rhs[0] = Complex64::new(1.0, 0.0);

    let scale = a.max_abs().max(1e-300);
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        if m[pivot][col].norm() <= 1e-14 * scale {
            return Err(SingularElement { delta: a.delta() });
        }
        if pivot != col {
            m.swap(pivot, col);
            rhs.swap(pivot, col);
        }
        for row in col + 1..4 {
            let factor = m[row][col] / m[col][col];
            for k in col..4 {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
            let sub = factor * rhs[col];
            rhs[row] -= sub;
        }
    }
    let mut x = [Complex64::new(0.0, 0.0); 4];
    for row in (0..4).rev() {
        let mut acc = rhs[row];
        for k in row + 1..4 {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Ok(QuadComplex::new(x))
}
