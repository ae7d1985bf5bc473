//! Complex 3-D DFT used by the fast transform paths.
//!
//! Forward is unnormalized, inverse carries 1/N per axis. Power-of-two lines
//! go through an iterative radix-2 FFT; any other length falls back to the
//! O(N^2) line transform, trading speed for radix coverage.

use num_complex::Complex64;

use crate::field::SamplingGrid;

/// Dense complex grid, same layout as `OctField3` (third index fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField3 {
    pub shape: [usize; 3],
    pub data: Vec<Complex64>,
}

impl ComplexField3 {
    pub fn zeros(shape: [usize; 3]) -> Self {
        ComplexField3 { shape, data: vec![Complex64::new(0.0, 0.0); shape[0] * shape[1] * shape[2]] }
    }

    pub fn flat(&self, idx: [usize; 3]) -> usize {
        (idx[0] * self.shape[1] + idx[1]) * self.shape[2] + idx[2]
    }

    pub fn get(&self, idx: [usize; 3]) -> Complex64 {
        self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: [usize; 3], v: Complex64) {
        let flat = self.flat(idx);
        self.data[flat] = v;
    }

    /// Value at the index with the selected axes reflected mod N.
    pub fn get_reflected(&self, idx: [usize; 3], flip: [bool; 3]) -> Complex64 {
        let mut r = idx;
        for a in 0..3 {
            if flip[a] && r[a] != 0 {
                r[a] = self.shape[a] - r[a];
            }
        }
        self.get(r)
    }

    pub fn indices(&self) -> impl Iterator<Item = [usize; 3]> {
        let [n1, n2, n3] = self.shape;
        (0..n1).flat_map(move |i| (0..n2).flat_map(move |j| (0..n3).map(move |k| [i, j, k])))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// O(N^2) reference line transform. Also the fallback for lengths that are
/// not powers of two.
pub fn dft_line_naive(line: &[Complex64], direction: Direction) -> Vec<Complex64> {
    let n = line.len();
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &v) in line.iter().enumerate() {
            let angle = sign * 2.0 * std::f64::consts::PI * (k * j % n) as f64 / n as f64;
            acc += v * Complex64::new(angle.cos(), angle.sin());
        }
        *slot = acc;
    }
    if direction == Direction::Inverse {
        let scale = 1.0 / n as f64;
        for v in &mut out {
            *v *= scale;
        }
    }
    out
}

/// Iterative radix-2 FFT, in place. `line.len()` must be a power of two.
fn fft_radix2(line: &mut [Complex64], direction: Direction) {
    let n = line.len();
    debug_assert!(n.is_power_of_two());
    // bit reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            line.swap(i, j);
        }
    }
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let mut len = 2;
    while len <= n {
        let angle = sign * 2.0 * std::f64::consts::PI / len as f64;
        let w_len = Complex64::new(angle.cos(), angle.sin());
        for start in (0..n).step_by(len) {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let a = line[start + k];
                let b = line[start + k + len / 2] * w;
                line[start + k] = a + b;
                line[start + k + len / 2] = a - b;
                w *= w_len;
            }
        }
        len <<= 1;
    }
    if direction == Direction::Inverse {
        let scale = 1.0 / n as f64;
        for v in line.iter_mut() {
            *v *= scale;
        }
    }
}

fn transform_line(line: &mut Vec<Complex64>, direction: Direction) {
    if line.len().is_power_of_two() {
        fft_radix2(line, direction);
    } else {
        *line = dft_line_naive(line, direction);
    }
}

/// Transform along every line of the given axis.
fn transform_axis(field: &mut ComplexField3, axis: usize, direction: Direction) {
    let [n1, n2, n3] = field.shape;
    let n = field.shape[axis];
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let (outer_a, outer_b) = match axis {
        0 => (n2, n3),
        1 => (n1, n3),
        _ => (n1, n2),
    };
    for a in 0..outer_a {
        for b in 0..outer_b {
            for t in 0..n {
                let idx = match axis {
                    0 => [t, a, b],
                    1 => [a, t, b],
                    _ => [a, b, t],
                };
                line[t] = field.get(idx);
            }
            transform_line(&mut line, direction);
            for t in 0..n {
                let idx = match axis {
                    0 => [t, a, b],
                    1 => [a, t, b],
                    _ => [a, b, t],
                };
                field.set(idx, line[t]);
            }
        }
    }
}

/// 3-D complex DFT: unnormalized forward, 1/(N1 N2 N3) inverse.
pub fn cft3(input: &ComplexField3, direction: Direction) -> ComplexField3 {
    let mut out = input.clone();
    for axis in 0..3 {
        transform_axis(&mut out, axis, direction);
    }
    out
}

/// Naive full 3-D DFT; O(N^2) per axis, oracle for `cft3`.
pub fn cft3_naive(input: &ComplexField3, direction: Direction) -> ComplexField3 {
    let mut out = input.clone();
    for axis in 0..3 {
        let [n1, n2, n3] = out.shape;
        let n = out.shape[axis];
        let (outer_a, outer_b) = match axis {
            0 => (n2, n3),
            1 => (n1, n3),
            _ => (n1, n2),
        };
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        for a in 0..outer_a {
            for b in 0..outer_b {
                for t in 0..n {
                    let idx = match axis {
                        0 => [t, a, b],
                        1 => [a, t, b],
                        _ => [a, b, t],
                    };
                    line[t] = out.get(idx);
                }
                let transformed = dft_line_naive(&line, direction);
                for t in 0..n {
                    let idx = match axis {
                        0 => [t, a, b],
                        1 => [a, t, b],
                        _ => [a, b, t],
                    };
                    out.set(idx, transformed[t]);
                }
            }
        }
    }
    out
}

/// Convenience for tests: delta field checks and friends.
pub fn complex_delta(grid: &SamplingGrid) -> ComplexField3 {
    let mut f = ComplexField3::zeros(grid.shape);
    f.data[0] = Complex64::new(1.0, 0.0);
    f
}
