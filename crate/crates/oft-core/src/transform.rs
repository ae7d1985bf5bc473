//! Discrete-space and quadrature octonion Fourier transforms.
//!
//! The forward transform of a field `u` is
//!
//! ```text
//! U[k] = sum_n ((u[n] * E1) * E2) * E4,   E_a = exp(-e_a 2 pi k_a n_a / N_a)
//! ```
//!
//! with the three kernel factors multiplied strictly left to right (the
//! algebra is non-associative, so the order is part of the definition).
//! The forward transform is unnormalized; the inverse carries
//! `1/(N1 N2 N3)` and applies the kernels in reversed order `E4, E2, E1`
//! with positive exponents.
//!
//! `dsoft_naive`/`idsoft_naive` are the O(N^6) reference sums. The fast
//! paths split the field into four complex components, run complex FFTs,
//! and recombine with reflection/sign patterns; they agree with the naive
//! sums to roundoff and cost O(N^3 log N) on power-of-two grids.

use num_complex::Complex64;

use crate::dft::{cft3, ComplexField3, Direction};
use crate::field::{Domain, OctField3};
use crate::octonion::Octonion;

/// Imaginary unit attached to each transform axis: `e1`, `e2`, `e4`.
pub const AXIS_UNITS: [usize; 3] = [1, 2, 4];

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// `(cos, sin)` of `2 pi t / n` for `t` in `0..n`.
fn phase_table(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|t| {
            let angle = TAU * t as f64 / n as f64;
            (angle.cos(), angle.sin())
        })
        .collect()
}

/// O(N^6) forward transform, the reference oracle.
pub fn dsoft_naive(u: &OctField3) -> OctField3 {
    assert_eq!(u.domain, Domain::Space, "dsoft input must be a space-domain field");
    let [n1, n2, n3] = u.shape();
    let tables: Vec<Vec<(f64, f64)>> = vec![phase_table(n1), phase_table(n2), phase_table(n3)];
    let mut out = OctField3::zeros(u.grid, Domain::Frequency);
    for k1 in 0..n1 {
        for k2 in 0..n2 {
            for k3 in 0..n3 {
                let mut acc = Octonion::ZERO;
                for m1 in 0..n1 {
                    let (c1, s1) = tables[0][(k1 * m1) % n1];
                    for m2 in 0..n2 {
                        let (c2, s2) = tables[1][(k2 * m2) % n2];
                        for m3 in 0..n3 {
                            let (c3, s3) = tables[2][(k3 * m3) % n3];
                            // explicit left-to-right kernel fold
                            let w = u[[m1, m2, m3]]
                                .mul_axis_phase(1, c1, s1, -1.0)
                                .mul_axis_phase(2, c2, s2, -1.0)
                                .mul_axis_phase(4, c3, s3, -1.0);
                            acc += w;
                        }
                    }
                }
                out[[k1, k2, k3]] = acc;
            }
        }
    }
    out
}

/// O(N^6) inverse transform: reversed kernel order, positive exponents,
/// `1/(N1 N2 N3)` normalization.
pub fn idsoft_naive(spectrum: &OctField3) -> OctField3 {
    assert_eq!(
        spectrum.domain,
        Domain::Frequency,
        "idsoft input must be a frequency-domain field"
    );
    let [n1, n2, n3] = spectrum.shape();
    let tables: Vec<Vec<(f64, f64)>> = vec![phase_table(n1), phase_table(n2), phase_table(n3)];
    let norm = 1.0 / (n1 * n2 * n3) as f64;
    let mut out = OctField3::zeros(spectrum.grid, Domain::Space);
    for m1 in 0..n1 {
        for m2 in 0..n2 {
            for m3 in 0..n3 {
                let mut acc = Octonion::ZERO;
                for k1 in 0..n1 {
                    let (c1, s1) = tables[0][(k1 * m1) % n1];
                    for k2 in 0..n2 {
                        let (c2, s2) = tables[1][(k2 * m2) % n2];
                        for k3 in 0..n3 {
                            let (c3, s3) = tables[2][(k3 * m3) % n3];
                            let w = spectrum[[k1, k2, k3]]
                                .mul_axis_phase(4, c3, s3, 1.0)
                                .mul_axis_phase(2, c2, s2, 1.0)
                                .mul_axis_phase(1, c1, s1, 1.0);
                            acc += w;
                        }
                    }
                }
                out[[m1, m2, m3]] = acc.scale(norm);
            }
        }
    }
    out
}

/// Split an octonion field into its four e1-complex component grids
/// `(c0 + c1 i, c2 + c3 i, c4 + c5 i, c6 + c7 i)`.
fn split_e1_components(u: &OctField3) -> [ComplexField3; 4] {
    let shape = u.shape();
    let mut parts = [
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
    ];
    for (i, o) in u.data().iter().enumerate() {
        for j in 0..4 {
            parts[j].data[i] = Complex64::new(o.c[2 * j], o.c[2 * j + 1]);
        }
    }
    parts
}

/// Transform of one e1-complex component from its plain complex spectrum:
/// combine the four `f2/f3` reflections with `(1 -+ e3)` then `(1 -+ e5)`
/// right factors.
fn oft_of_complex_spectrum(w: &ComplexField3, k: [usize; 3]) -> Octonion {
    let one_m_e3 = Octonion::ONE - Octonion::unit(3);
    let one_p_e3 = Octonion::ONE + Octonion::unit(3);
    let one_m_e5 = Octonion::ONE - Octonion::unit(5);
    let one_p_e5 = Octonion::ONE + Octonion::unit(5);

    let as_oct = |z: Complex64| Octonion::from_complex_axis(z.re, z.im, 1);
    let a = as_oct(w.get_reflected(k, [false, false, false]));
    let b = as_oct(w.get_reflected(k, [false, true, false]));
    let c = as_oct(w.get_reflected(k, [false, false, true]));
    let d = as_oct(w.get_reflected(k, [false, true, true]));

    let t1 = a * one_m_e3 + b * one_p_e3;
    let t2 = c * one_m_e3 + d * one_p_e3;
    (t1 * one_m_e5 + t2 * one_p_e5).scale(0.25)
}

/// Fast forward transform via four complex FFTs.
pub fn dsoft_fast(u: &OctField3) -> OctField3 {
    assert_eq!(u.domain, Domain::Space, "dsoft input must be a space-domain field");
    let parts = split_e1_components(u);
    let spectra: Vec<ComplexField3> = parts.iter().map(|p| cft3(p, Direction::Forward)).collect();

    let mut phi = vec![OctField3::zeros(u.grid, Domain::Frequency); 4];
    for j in 0..4 {
        for k in u.grid.indices() {
            phi[j][k] = oft_of_complex_spectrum(&spectra[j], k);
        }
    }

    let e2 = Octonion::unit(2);
    let e4 = Octonion::unit(4);
    let mut out = OctField3::zeros(u.grid, Domain::Frequency);
    for k in u.grid.indices() {
        let p0 = phi[0][k];
        let p1 = phi[1].at_reflected(k, [true, false, true]);
        let p2 = phi[2].at_reflected(k, [true, true, false]);
        let p3 = phi[3].at_reflected(k, [false, true, true]);
        out[k] = p0 + p1 * e2 + p2 * e4 + (p3 * e2) * e4;
    }
    out
}

/// Split a spectrum into its four e4-complex component grids
/// `(c0 + c4 i, c1 - c5 i, c2 - c6 i, c3 + c7 i)`.
fn split_e4_components(spectrum: &OctField3) -> [ComplexField3; 4] {
    let shape = spectrum.shape();
    let mut parts = [
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
        ComplexField3::zeros(shape),
    ];
    for (i, o) in spectrum.data().iter().enumerate() {
        parts[0].data[i] = Complex64::new(o.c[0], o.c[4]);
        parts[1].data[i] = Complex64::new(o.c[1], -o.c[5]);
        parts[2].data[i] = Complex64::new(o.c[2], -o.c[6]);
        parts[3].data[i] = Complex64::new(o.c[3], o.c[7]);
    }
    parts
}

/// Inverse transform of one e4-complex component from its plain complex
/// inverse DFT: combine the four `x1/x2` reflections with `(1 +- e6)` then
/// `(1 +- e5)` right factors.
fn ioft_of_complex_field(w: &ComplexField3, n: [usize; 3]) -> Octonion {
    let one_p_e6 = Octonion::ONE + Octonion::unit(6);
    let one_m_e6 = Octonion::ONE - Octonion::unit(6);
    let one_p_e5 = Octonion::ONE + Octonion::unit(5);
    let one_m_e5 = Octonion::ONE - Octonion::unit(5);

    let as_oct = |z: Complex64| Octonion::from_complex_axis(z.re, z.im, 4);
    let a = as_oct(w.get_reflected(n, [false, false, false]));
    let b = as_oct(w.get_reflected(n, [false, true, false]));
    let c = as_oct(w.get_reflected(n, [true, false, false]));
    let d = as_oct(w.get_reflected(n, [true, true, false]));

    let t1 = a * one_p_e6 + b * one_m_e6;
    let t2 = c * one_p_e6 + d * one_m_e6;
    (t1 * one_p_e5 + t2 * one_m_e5).scale(0.25)
}

/// Fast inverse transform via four complex inverse FFTs.
pub fn idsoft(spectrum: &OctField3) -> OctField3 {
    assert_eq!(
        spectrum.domain,
        Domain::Frequency,
        "idsoft input must be a frequency-domain field"
    );
    let parts = split_e4_components(spectrum);
    let inverses: Vec<ComplexField3> =
        parts.iter().map(|p| cft3(p, Direction::Inverse)).collect();

    let mut v = vec![OctField3::zeros(spectrum.grid, Domain::Space); 4];
    for j in 0..4 {
        for n in spectrum.grid.indices() {
            v[j][n] = ioft_of_complex_field(&inverses[j], n);
        }
    }

    let e1 = Octonion::unit(1);
    let e2 = Octonion::unit(2);
    let mut out = OctField3::zeros(spectrum.grid, Domain::Space);
    for n in spectrum.grid.indices() {
        let p0 = v[0][n];
        let p1 = v[1].at_reflected(n, [false, true, true]);
        let p2 = v[2].at_reflected(n, [true, false, true]);
        let p3 = v[3].at_reflected(n, [true, true, false]);
        out[n] = p0 + p1 * e1 + p2 * e2 + (p3 * e1) * e2;
    }
    out
}

/// Label order of the eight parity components: even/odd per axis, first
/// axis varying fastest (`eee, oee, eoe, ooe, eeo, oeo, eoo, ooo`).
pub const PARITY_LABELS: [&str; 8] = ["eee", "oee", "eoe", "ooe", "eeo", "oeo", "eoo", "ooo"];

/// Split a field into its eight parity components under index reflection.
/// The components sum back to the input exactly; component `p` picks up the
/// sign `epsilon_a` when axis `a` is reflected.
pub fn parity_components(u: &OctField3) -> [OctField3; 8] {
    let mut out: Vec<OctField3> = (0..8).map(|_| OctField3::zeros(u.grid, u.domain)).collect();
    for idx in u.grid.indices() {
        // gather the eight reflected samples once per site
        let mut samples = [Octonion::ZERO; 8];
        for (f, sample) in samples.iter_mut().enumerate() {
            let flip = [f & 1 != 0, f & 2 != 0, f & 4 != 0];
            *sample = u.at_reflected(idx, flip);
        }
        for p in 0..8 {
            let mut acc = Octonion::ZERO;
            for (f, sample) in samples.iter().enumerate() {
                // epsilon product: -1 for every axis that is both odd in the
                // component and reflected in the sample
                let neg = (p & f).count_ones() % 2 == 1;
                acc += if neg { -*sample } else { *sample };
            }
            out[p][idx] = acc.scale(0.125);
        }
    }
    out.try_into().unwrap()
}

/// Midpoint-rule quadrature of the continuous transform of `f` over the box
/// `[-h_a, h_a]` per axis with `steps_a` cells, evaluated at one frequency.
pub fn quad_oft(
    f: &dyn Fn([f64; 3]) -> Octonion,
    freq: [f64; 3],
    half_widths: [f64; 3],
    steps: [usize; 3],
) -> Octonion {
    assert!(half_widths.iter().all(|&h| h > 0.0), "box half-widths must be positive");
    assert!(steps.iter().all(|&s| s > 0), "step counts must be positive");
    let h: Vec<f64> = (0..3).map(|a| 2.0 * half_widths[a] / steps[a] as f64).collect();
    let volume = h[0] * h[1] * h[2];

    // per-axis sample coordinates and kernel phases
    let mut coords = Vec::with_capacity(3);
    let mut phases = Vec::with_capacity(3);
    for a in 0..3 {
        let xs: Vec<f64> = (0..steps[a])
            .map(|j| -half_widths[a] + (j as f64 + 0.5) * h[a])
            .collect();
        let ph: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| {
                let angle = TAU * freq[a] * x;
                (angle.cos(), angle.sin())
            })
            .collect();
        coords.push(xs);
        phases.push(ph);
    }

    let mut acc = Octonion::ZERO;
    for i in 0..steps[0] {
        let (c1, s1) = phases[0][i];
        for j in 0..steps[1] {
            let (c2, s2) = phases[1][j];
            for k in 0..steps[2] {
                let (c3, s3) = phases[2][k];
                let w = f([coords[0][i], coords[1][j], coords[2][k]])
                    .mul_axis_phase(1, c1, s1, -1.0)
                    .mul_axis_phase(2, c2, s2, -1.0)
                    .mul_axis_phase(4, c3, s3, -1.0);
                acc += w;
            }
        }
    }
    acc.scale(volume)
}

/// Circular convolution `sum_m u[m] v[n - m]` (indices mod N per axis).
/// Single product per term, so the non-associativity of the algebra does
/// not enter; the convolution theorem applies to real-valued inputs.
pub fn circular_convolve(u: &OctField3, v: &OctField3) -> OctField3 {
    assert_eq!(u.shape(), v.shape(), "field shapes differ");
    let [n1, n2, n3] = u.shape();
    let mut out = OctField3::zeros(u.grid, u.domain);
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            for x3 in 0..n3 {
                let mut acc = Octonion::ZERO;
                for m1 in 0..n1 {
                    let d1 = (x1 + n1 - m1) % n1;
                    for m2 in 0..n2 {
                        let d2 = (x2 + n2 - m2) % n2;
                        for m3 in 0..n3 {
                            let d3 = (x3 + n3 - m3) % n3;
                            acc += u[[m1, m2, m3]] * v[[d1, d2, d3]];
                        }
                    }
                }
                out[[x1, x2, x3]] = acc;
            }
        }
    }
    out
}

/// Residual of the period-4 identity for a complex-valued field: the twice
/// transformed field, normalized by `1/(N1 N2 N3)`, must equal
/// `(-u(n) + u(-n1, n2, -n3) + u(-n1, -n2, n3) + u(n1, -n2, -n3)) / 2`
/// under index reflection. Returns the max-norm difference.
///
/// The reflection average is an involution, so applying the normalized
/// double transform twice gives back the input; the transform has period 4.
pub fn double_oft_check(u: &OctField3) -> f64 {
    assert!(
        u.data().iter().all(|o| o.c[2..].iter().all(|&x| x == 0.0)),
        "double_oft_check requires a complex-valued field (coefficients 0 and 1 only)"
    );
    let twice = double_oft(u);
    let mut worst = 0.0f64;
    for idx in u.grid.indices() {
        let rhs = (-u[idx]
            + u.at_reflected(idx, [true, false, true])
            + u.at_reflected(idx, [true, true, false])
            + u.at_reflected(idx, [false, true, true]))
        .scale(0.5);
        worst = worst.max((twice[idx] - rhs).max_abs());
    }
    worst
}

/// Two forward transforms with a single `1/(N1 N2 N3)` normalization.
pub fn double_oft(u: &OctField3) -> OctField3 {
    let n = u.grid.len() as f64;
    let once = dsoft_fast(u).with_domain(Domain::Space);
    let twice = dsoft_fast(&once);
    twice.map(|o| o.scale(1.0 / n)).with_domain(u.domain)
}
