//! Executable verification of the transform theorems.
//!
//! Each verifier computes the two sides of one identity through disjoint
//! code paths and reports the max-norm residual: the left side transforms a
//! modified field, the right side is assembled from the spectrum of the
//! unmodified field by reflections, circular shifts, and basis factors.
//!
//! Grid-exact identities (shift, modulation, convolution, Parseval,
//! Plancherel, period-4) use integer carriers and hold to roundoff on
//! circular grids. Continuous-only identities (argument scaling, the
//! derivative rules) are checked by quadrature on Gaussians, where the
//! closed-form derivatives are available.

use crate::field::{Domain, OctField3, SamplingGrid};
use crate::octonion::Octonion;
use crate::quad_complex::{qmul, QuadComplex};
use crate::rng::SplitMix64;
use crate::transform::{
    circular_convolve, double_oft, double_oft_check, dsoft_fast, quad_oft, AXIS_UNITS,
};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Tolerance for identities that are exact on circular grids.
pub const GRID_TOLERANCE: f64 = 1e-10;
/// Tolerance for quadrature-verified identities.
pub const QUAD_TOLERANCE: f64 = 1e-4;
/// Tolerance for the spectral-decay check.
pub const DECAY_TOLERANCE: f64 = 1e-6;
/// Tolerance for the quadruple-application identity.
pub const PERIOD4_QUAD_TOLERANCE: f64 = 1e-9;

/// Outcome of one verifier run.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub config: String,
}

impl TheoremReport {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64, config: impl Into<String>) -> Self {
        let name = name.into();
        TheoremReport {
            passed: residual <= tolerance,
            name,
            residual,
            tolerance,
            config: config.into(),
        }
    }

    /// The machine-parseable report line: `name residual tolerance PASS|FAIL`.
    pub fn line(&self) -> String {
        format!(
            "{} {:.6e} {:.1e} {}",
            self.name,
            self.residual,
            self.tolerance,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 0,
            Axis::X2 => 1,
            Axis::X3 => 2,
        }
    }

    pub fn unit(self) -> usize {
        AXIS_UNITS[self.index()]
    }

    pub fn label(self) -> &'static str {
        match self {
            Axis::X1 => "x1",
            Axis::X2 => "x2",
            Axis::X3 => "x3",
        }
    }
}

/// Derivative multi-indices covered by the derivative rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivOrder {
    X1,
    X2,
    X3,
    X1X2,
    X1X3,
    X2X3,
    X1X2X3,
    X1X1,
    X2X2,
    X3X3,
}

impl DerivOrder {
    pub const ALL: [DerivOrder; 10] = [
        DerivOrder::X1,
        DerivOrder::X2,
        DerivOrder::X3,
        DerivOrder::X1X2,
        DerivOrder::X1X3,
        DerivOrder::X2X3,
        DerivOrder::X1X2X3,
        DerivOrder::X1X1,
        DerivOrder::X2X2,
        DerivOrder::X3X3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            DerivOrder::X1 => "x1",
            DerivOrder::X2 => "x2",
            DerivOrder::X3 => "x3",
            DerivOrder::X1X2 => "x1x2",
            DerivOrder::X1X3 => "x1x3",
            DerivOrder::X2X3 => "x2x3",
            DerivOrder::X1X2X3 => "x1x2x3",
            DerivOrder::X1X1 => "x1x1",
            DerivOrder::X2X2 => "x2x2",
            DerivOrder::X3X3 => "x3x3",
        }
    }
}

/// Separable Gaussian `A exp(-pi sum ((x_a - c_a)/w_a)^2)` with closed-form
/// partial derivatives.
#[derive(Debug, Clone, Copy)]
pub struct GaussianParams {
    pub amplitude: f64,
    pub center: [f64; 3],
    pub width: [f64; 3],
}

impl GaussianParams {
    pub fn standard() -> Self {
        GaussianParams { amplitude: 1.0, center: [0.0; 3], width: [1.0; 3] }
    }

    pub fn eval(&self, x: [f64; 3]) -> f64 {
        let mut s = 0.0;
        for a in 0..3 {
            let t = (x[a] - self.center[a]) / self.width[a];
            s += t * t;
        }
        self.amplitude * (-std::f64::consts::PI * s).exp()
    }

    /// First-derivative log factor along one axis.
    fn log_factor(&self, x: [f64; 3], a: usize) -> f64 {
        -TAU * (x[a] - self.center[a]) / (self.width[a] * self.width[a])
    }

    /// Analytic partial derivative for the given multi-index.
    pub fn deriv(&self, which: DerivOrder, x: [f64; 3]) -> f64 {
        let u = self.eval(x);
        let g = [self.log_factor(x, 0), self.log_factor(x, 1), self.log_factor(x, 2)];
        let second = |a: usize| {
            let w2 = self.width[a] * self.width[a];
            (g[a] * g[a] - TAU / w2) * u
        };
        match which {
            DerivOrder::X1 => g[0] * u,
            DerivOrder::X2 => g[1] * u,
            DerivOrder::X3 => g[2] * u,
            DerivOrder::X1X2 => g[0] * g[1] * u,
            DerivOrder::X1X3 => g[0] * g[2] * u,
            DerivOrder::X2X3 => g[1] * g[2] * u,
            DerivOrder::X1X2X3 => g[0] * g[1] * g[2] * u,
            DerivOrder::X1X1 => second(0),
            DerivOrder::X2X2 => second(1),
            DerivOrder::X3X3 => second(2),
        }
    }
}

/// Quadrature box and resolution.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub half_widths: [f64; 3],
    pub steps: [usize; 3],
}

impl QuadConfig {
    /// Box half-width 5, step 0.1.
    pub fn standard() -> Self {
        QuadConfig { half_widths: [5.0; 3], steps: [100; 3] }
    }

    pub fn describe(&self) -> String {
        format!(
            "box={:.1} step={:.3}",
            self.half_widths[0],
            2.0 * self.half_widths[0] / self.steps[0] as f64
        )
    }
}

/// Frequency probes with every component in `[-2, 2]`.
const PROBES: [[f64; 3]; 4] = [
    [0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0],
    [0.5, 0.5, -0.5],
    [1.5, -1.0, 2.0],
];

/// Spectrum sample at index `(+-k + shift) mod N` per axis; reflection first.
fn sample(u: &OctField3, k: [usize; 3], flip: [bool; 3], shift: [i64; 3]) -> Octonion {
    let mut idx = [0usize; 3];
    for a in 0..3 {
        let n = u.grid.shape[a] as i64;
        let base = if flip[a] { -(k[a] as i64) } else { k[a] as i64 };
        idx[a] = (base + shift[a]).rem_euclid(n) as usize;
    }
    u[idx]
}

fn shift_vec(axis: Axis, k0: i64) -> [i64; 3] {
    let mut s = [0i64; 3];
    s[axis.index()] = k0;
    s
}

/// Residual between a transformed field and an assembled right side.
fn field_residual(lhs: &OctField3, rhs: &OctField3) -> f64 {
    lhs.max_rel_diff(rhs)
}

pub fn verify_modulation_cos(u: &OctField3, axis: Axis, k0: i64) -> TheoremReport {
    let n = u.grid.shape[axis.index()];
    let modulated = modulate_scalar(u, axis, k0, f64::cos);
    let lhs = dsoft_fast(&modulated);
    let spectrum = dsoft_fast(u);
    let plus = shift_vec(axis, k0);
    let minus = shift_vec(axis, -k0);
    let rhs = OctField3::from_fn(u.grid, Domain::Frequency, |k| {
        (sample(&spectrum, k, [false; 3], plus) + sample(&spectrum, k, [false; 3], minus))
            .scale(0.5)
    });
    TheoremReport::new(
        format!("modulation_cos_{}_n{}", axis.label(), n),
        field_residual(&lhs, &rhs),
        GRID_TOLERANCE,
        format!("grid {n}^3 carrier k0={k0}"),
    )
}

pub fn verify_modulation_sin(u: &OctField3, axis: Axis, k0: i64) -> TheoremReport {
    let n = u.grid.shape[axis.index()];
    let modulated = modulate_scalar(u, axis, k0, f64::sin);
    let lhs = dsoft_fast(&modulated);
    let spectrum = dsoft_fast(u);
    let flips = match axis {
        Axis::X1 => [false, true, true],
        Axis::X2 => [false, false, true],
        Axis::X3 => [false, false, false],
    };
    let plus = shift_vec(axis, k0);
    let minus = shift_vec(axis, -k0);
    let unit = axis.unit();
    let rhs = OctField3::from_fn(u.grid, Domain::Frequency, |k| {
        (sample(&spectrum, k, flips, plus) - sample(&spectrum, k, flips, minus))
            .mul_basis_right(unit)
            .scale(0.5)
    });
    TheoremReport::new(
        format!("modulation_sin_{}_n{}", axis.label(), n),
        field_residual(&lhs, &rhs),
        GRID_TOLERANCE,
        format!("grid {n}^3 carrier k0={k0}"),
    )
}

pub fn verify_modulation_exp(u: &OctField3, axis: Axis, k0: i64) -> TheoremReport {
    let n = u.grid.shape[axis.index()];
    let na = n as f64;
    let unit = axis.unit();
    let modulated = OctField3::from_fn(u.grid, u.domain, |idx| {
        let angle = TAU * k0 as f64 * idx[axis.index()] as f64 / na;
        u[idx].mul_axis_phase(unit, angle.cos(), angle.sin(), -1.0)
    });
    let lhs = dsoft_fast(&modulated);
    let spectrum = dsoft_fast(u);
    let plus = shift_vec(axis, k0);
    let minus = shift_vec(axis, -k0);
    let rhs = match axis {
        Axis::X1 => OctField3::from_fn(u.grid, Domain::Frequency, |k| {
            sample(&spectrum, k, [false; 3], plus)
        }),
        Axis::X2 => OctField3::from_fn(u.grid, Domain::Frequency, |k| {
            (sample(&spectrum, k, [false; 3], plus)
                + sample(&spectrum, k, [false; 3], minus)
                + sample(&spectrum, k, [true, false, false], plus)
                - sample(&spectrum, k, [true, false, false], minus))
            .scale(0.5)
        }),
        Axis::X3 => OctField3::from_fn(u.grid, Domain::Frequency, |k| {
            (sample(&spectrum, k, [false; 3], plus)
                + sample(&spectrum, k, [false; 3], minus)
                + sample(&spectrum, k, [true, true, false], plus)
                - sample(&spectrum, k, [true, true, false], minus))
            .scale(0.5)
        }),
    };
    TheoremReport::new(
        format!("modulation_exp_{}_n{}", axis.label(), n),
        field_residual(&lhs, &rhs),
        GRID_TOLERANCE,
        format!("grid {n}^3 carrier k0={k0}"),
    )
}

fn modulate_scalar(u: &OctField3, axis: Axis, k0: i64, trig: fn(f64) -> f64) -> OctField3 {
    let na = u.grid.shape[axis.index()] as f64;
    OctField3::from_fn(u.grid, u.domain, |idx| {
        let angle = TAU * k0 as f64 * idx[axis.index()] as f64 / na;
        u[idx].scale(trig(angle))
    })
}

pub fn verify_shift(u: &OctField3, axis: Axis, m: i64) -> TheoremReport {
    let n = u.grid.shape[axis.index()];
    let na = n as f64;
    let shifted = OctField3::from_fn(u.grid, u.domain, |idx| {
        let mut src = idx;
        src[axis.index()] = (idx[axis.index()] as i64 - m).rem_euclid(n as i64) as usize;
        u[src]
    });
    let lhs = dsoft_fast(&shifted);
    let spectrum = dsoft_fast(u);
    let flips = match axis {
        Axis::X1 => [false, true, true],
        Axis::X2 => [false, false, true],
        Axis::X3 => [false, false, false],
    };
    let unit = axis.unit();
    let rhs = OctField3::from_fn(u.grid, Domain::Frequency, |k| {
        let angle = TAU * (k[axis.index()] as i64 * m) as f64 / na;
        spectrum[k].scale(angle.cos())
            - sample(&spectrum, k, flips, [0; 3])
                .mul_basis_right(unit)
                .scale(angle.sin())
    });
    TheoremReport::new(
        format!("shift_{}_n{}", axis.label(), n),
        field_residual(&lhs, &rhs),
        GRID_TOLERANCE,
        format!("grid {n}^3 shift m={m}"),
    )
}

/// The eight parity coefficient functions of the spectrum of a real field,
/// read off the basis slots (the transform of a real field carries each
/// parity piece on its own slot with a fixed sign pattern).
fn parity_slots(spectrum_value: &Octonion) -> [f64; 8] {
    let c = &spectrum_value.c;
    [c[0], -c[1], -c[2], c[3], -c[4], c[5], c[6], -c[7]]
}

/// Convolution rule for real fields; checks the direct form, the commuted
/// form, and the commutative-algebra pointwise product, all against the
/// transform of the circular convolution.
pub fn verify_convolution(u: &OctField3, v: &OctField3) -> TheoremReport {
    let n = u.grid.shape[0];
    assert!(
        u.data().iter().chain(v.data()).all(|o| o.c[1..].iter().all(|&x| x == 0.0)),
        "convolution rule applies to real-valued fields"
    );
    let lhs = dsoft_fast(&circular_convolve(u, v));
    let bigu = dsoft_fast(u);
    let bigv = dsoft_fast(v);

    let assemble = |spec_v: &OctField3, spec_u: &OctField3| {
        OctField3::from_fn(u.grid, Domain::Frequency, |k| {
            let p = parity_slots(&spec_u[k]);
            let [eee, oee, eoe, ooe, eeo, oeo, eoo, ooo] = p;
            let mut w0 = Octonion::ZERO;
            w0.c[0] = eee;
            w0.c[4] = -eeo;
            let mut w1 = Octonion::ZERO;
            w1.c[1] = -oee;
            w1.c[3] = ooe;
            let mut w2 = Octonion::ZERO;
            w2.c[2] = -eoe;
            w2.c[5] = oeo;
            let mut w3 = Octonion::ZERO;
            w3.c[6] = eoo;
            w3.c[7] = -ooo;
            sample(spec_v, k, [false, false, false], [0; 3]) * w0
                + sample(spec_v, k, [false, true, true], [0; 3]) * w1
                + sample(spec_v, k, [false, false, true], [0; 3]) * w2
                + sample(spec_v, k, [true, false, true], [0; 3]) * w3
        })
    };

    let direct = assemble(&bigv, &bigu);
    let commuted = assemble(&bigu, &bigv);
    let pointwise = bigu.zip_map(&bigv, |a, b| {
        qmul(&QuadComplex::from_octonion(b), &QuadComplex::from_octonion(a)).to_octonion()
    });

    let residual = field_residual(&lhs, &direct)
        .max(field_residual(&lhs, &commuted))
        .max(field_residual(&lhs, &pointwise));
    TheoremReport::new(
        format!("convolution_n{n}"),
        residual,
        GRID_TOLERANCE,
        format!("grid {n}^3, direct + commuted + pointwise-product forms"),
    )
}

/// Inner-product identity for real fields: `<u, v> = <U, V> / (N1 N2 N3)`.
pub fn verify_parseval(u: &OctField3, v: &OctField3) -> TheoremReport {
    let n = u.grid.shape[0];
    let bigu = dsoft_fast(u);
    let bigv = dsoft_fast(v);
    let mut lhs = Octonion::ZERO;
    let mut rhs = Octonion::ZERO;
    for idx in u.grid.indices() {
        lhs += u[idx] * v[idx].conj();
        rhs += bigu[idx] * bigv[idx].conj();
    }
    let rhs = rhs.scale(1.0 / u.grid.len() as f64);
    let unorm: f64 = u.data().iter().map(|o| o.norm_sqr()).sum::<f64>().sqrt();
    let vnorm: f64 = v.data().iter().map(|o| o.norm_sqr()).sum::<f64>().sqrt();
    let scale = (unorm * vnorm).max(f64::MIN_POSITIVE);
    TheoremReport::new(
        format!("parseval_n{n}"),
        (lhs - rhs).norm() / scale,
        GRID_TOLERANCE,
        format!("grid {n}^3 real pair"),
    )
}

/// Energy identity for octonion fields: `||u||^2 = ||U||^2 / (N1 N2 N3)`.
pub fn verify_plancherel(u: &OctField3) -> TheoremReport {
    let n = u.grid.shape[0];
    let spectrum = dsoft_fast(u);
    let lhs: f64 = u.data().iter().map(|o| o.norm_sqr()).sum();
    let rhs: f64 =
        spectrum.data().iter().map(|o| o.norm_sqr()).sum::<f64>() / u.grid.len() as f64;
    TheoremReport::new(
        format!("plancherel_n{n}"),
        (lhs - rhs).abs() / lhs.max(f64::MIN_POSITIVE),
        GRID_TOLERANCE,
        format!("grid {n}^3 octonion field"),
    )
}

/// Period-4 structure, reflection-average side.
pub fn verify_period4_double(u: &OctField3) -> TheoremReport {
    let n = u.grid.shape[0];
    TheoremReport::new(
        format!("period4_double_n{n}"),
        double_oft_check(u),
        GRID_TOLERANCE,
        format!("grid {n}^3 complex field"),
    )
}

/// Period-4 structure: the normalized double transform applied twice is the
/// identity.
pub fn verify_period4_quadruple(u: &OctField3) -> TheoremReport {
    let n = u.grid.shape[0];
    let twice = double_oft(&double_oft(u));
    TheoremReport::new(
        format!("period4_quadruple_n{n}"),
        twice.max_rel_diff(u),
        PERIOD4_QUAD_TOLERANCE,
        format!("grid {n}^3 complex field"),
    )
}

/// Argument-scaling rule `u(x1/a, x2/b, x3/c) -> |abc| U(a f1, b f2, c f3)`,
/// checked by quadrature at the probe frequencies.
pub fn verify_scaling(gauss: &GaussianParams, abc: [f64; 3], quad: &QuadConfig) -> TheoremReport {
    assert!(abc.iter().all(|&s| s != 0.0), "scale factors must be nonzero");
    let scaled = |x: [f64; 3]| {
        Octonion::real(gauss.eval([x[0] / abc[0], x[1] / abc[1], x[2] / abc[2]]))
    };
    let plain = |x: [f64; 3]| Octonion::real(gauss.eval(x));
    let jac = (abc[0] * abc[1] * abc[2]).abs();
    let mut residual = 0.0f64;
    for f in PROBES {
        let lhs = quad_oft(&scaled, f, quad.half_widths, quad.steps);
        let rhs = quad_oft(
            &plain,
            [abc[0] * f[0], abc[1] * f[1], abc[2] * f[2]],
            quad.half_widths,
            quad.steps,
        )
        .scale(jac);
        residual = residual.max((lhs - rhs).norm());
    }
    TheoremReport::new(
        "scaling",
        residual,
        QUAD_TOLERANCE,
        format!("gaussian, abc=({},{},{}), {}", abc[0], abc[1], abc[2], quad.describe()),
    )
}

/// Reflection pattern and basis factor of each derivative rule.
fn deriv_rule(which: DerivOrder, f: [f64; 3]) -> ([bool; 3], Octonion) {
    let w = [TAU * f[0], TAU * f[1], TAU * f[2]];
    match which {
        DerivOrder::X1 => ([false, true, true], Octonion::unit(1).scale(w[0])),
        DerivOrder::X2 => ([false, false, true], Octonion::unit(2).scale(w[1])),
        DerivOrder::X3 => ([false, false, false], Octonion::unit(4).scale(w[2])),
        DerivOrder::X1X2 => ([false, true, true], Octonion::unit(3).scale(w[0] * w[1])),
        DerivOrder::X1X3 => ([false, false, true], Octonion::unit(5).scale(w[0] * w[2])),
        DerivOrder::X2X3 => ([true, false, true], Octonion::unit(6).scale(w[1] * w[2])),
        DerivOrder::X1X2X3 => {
            ([true, false, true], Octonion::unit(7).scale(w[0] * w[1] * w[2]))
        }
        DerivOrder::X1X1 => ([false, false, false], Octonion::real(-w[0] * w[0])),
        DerivOrder::X2X2 => ([false, false, false], Octonion::real(-w[1] * w[1])),
        DerivOrder::X3X3 => ([false, false, false], Octonion::real(-w[2] * w[2])),
    }
}

/// Derivative rule: the transform of an analytic Gaussian derivative equals
/// the reflected spectrum times a frequency-scaled basis factor.
pub fn verify_derivative(
    gauss: &GaussianParams,
    which: DerivOrder,
    quad: &QuadConfig,
) -> TheoremReport {
    let deriv = |x: [f64; 3]| Octonion::real(gauss.deriv(which, x));
    let plain = |x: [f64; 3]| Octonion::real(gauss.eval(x));
    let mut residual = 0.0f64;
    for f in PROBES {
        let lhs = quad_oft(&deriv, f, quad.half_widths, quad.steps);
        let (flips, factor) = deriv_rule(which, f);
        let mut f_refl = f;
        for a in 0..3 {
            if flips[a] {
                f_refl[a] = -f_refl[a];
            }
        }
        let rhs = quad_oft(&plain, f_refl, quad.half_widths, quad.steps) * factor;
        residual = residual.max((lhs - rhs).norm());
    }
    TheoremReport::new(
        format!("derivative_{}", which.label()),
        residual,
        QUAD_TOLERANCE,
        format!("gaussian, {}", quad.describe()),
    )
}

/// Spectrum-differentiation rule: central differences of the quadrature
/// spectrum against both closed forms (coordinate-weighted field, and the
/// same with a trailing basis factor).
pub fn verify_oft_differentiation(
    gauss: &GaussianParams,
    axis: Axis,
    quad: &QuadConfig,
) -> TheoremReport {
    let plain = |x: [f64; 3]| Octonion::real(gauss.eval(x));
    let ai = axis.index();
    let unit = axis.unit();
    let weighted = move |x: [f64; 3]| Octonion::real(-TAU * x[ai] * gauss.eval(x));
    let weighted_unit =
        move |x: [f64; 3]| Octonion::unit(unit).scale(-TAU * x[ai] * gauss.eval(x));

    // reflections of the two closed forms per axis
    let (v_flips, w_flips) = match axis {
        Axis::X1 => ([false, true, true], [false, false, false]),
        Axis::X2 => ([false, false, true], [true, false, false]),
        Axis::X3 => ([false, false, false], [true, true, false]),
    };

    let delta = 1e-3;
    let mut residual = 0.0f64;
    for f in PROBES {
        let mut fp = f;
        let mut fm = f;
        fp[ai] += delta;
        fm[ai] -= delta;
        let diff = (quad_oft(&plain, fp, quad.half_widths, quad.steps)
            - quad_oft(&plain, fm, quad.half_widths, quad.steps))
        .scale(1.0 / (2.0 * delta));

        let reflect = |f: [f64; 3], flips: [bool; 3]| {
            let mut r = f;
            for a in 0..3 {
                if flips[a] {
                    r[a] = -r[a];
                }
            }
            r
        };
        let v_form = quad_oft(&weighted, reflect(f, v_flips), quad.half_widths, quad.steps)
            .mul_basis_right(unit);
        let w_form = quad_oft(&weighted_unit, reflect(f, w_flips), quad.half_widths, quad.steps);

        residual = residual
            .max((diff - v_form).norm())
            .max((diff - w_form).norm());
    }
    TheoremReport::new(
        format!("oft_differentiation_f{}", ai + 1),
        residual,
        QUAD_TOLERANCE,
        format!("gaussian, central difference delta={delta}, {}", quad.describe()),
    )
}

/// Spectral decay of the Gaussian: magnitude at |f| = 4 is below the decay
/// tolerance and below the magnitude at |f| = 1.
pub fn verify_riemann_lebesgue(quad: &QuadConfig) -> TheoremReport {
    let gauss = GaussianParams::standard();
    let plain = |x: [f64; 3]| Octonion::real(gauss.eval(x));
    let d = 4.0 / 3.0f64.sqrt();
    let far = [[4.0, 0.0, 0.0], [0.0, 4.0, 0.0], [0.0, 0.0, 4.0], [d, d, d]];
    let e = 1.0 / 3.0f64.sqrt();
    let near = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [e, e, e]];
    let worst_far = far
        .iter()
        .map(|&f| quad_oft(&plain, f, quad.half_widths, quad.steps).norm())
        .fold(0.0f64, f64::max);
    let best_near = near
        .iter()
        .map(|&f| quad_oft(&plain, f, quad.half_widths, quad.steps).norm())
        .fold(f64::INFINITY, f64::min);
    // residual stays zero-ish only if the far probes are both tiny and below
    // every near probe
    let residual = worst_far.max((worst_far - best_near).max(0.0));
    TheoremReport::new(
        "riemann_lebesgue",
        residual,
        DECAY_TOLERANCE,
        format!("gaussian |f|=4 vs |f|=1, {}", quad.describe()),
    )
}

/// Run the whole verifier matrix. Grid-exact verifiers run once per size
/// with fields and carriers drawn from the seed; quadrature verifiers run
/// once on the standard Gaussian configuration. Reports are sorted by name.
/// An empty size list verifies nothing.
pub fn run_all(seed: u64, sizes: &[usize]) -> Vec<TheoremReport> {
    let mut rng = SplitMix64::new(seed);
    let mut reports = Vec::new();
    if sizes.is_empty() {
        return reports;
    }

    for &n in sizes {
        let grid = SamplingGrid::cubic(n);
        let u = OctField3::random(grid, rng.next_u64());
        let u_real = OctField3::random_real(grid, rng.next_u64());
        let v_real = OctField3::random_real(grid, rng.next_u64());
        let u_complex = OctField3::random_complex(grid, rng.next_u64());
        let max_carrier = (n as u64 / 2).max(2);

        for axis in Axis::ALL {
            let k0 = rng.next_range(1, max_carrier) as i64;
            reports.push(verify_modulation_cos(&u, axis, k0));
            reports.push(verify_modulation_sin(&u, axis, k0));
            reports.push(verify_modulation_exp(&u, axis, k0));
            let m = rng.next_range(1, n as u64) as i64;
            reports.push(verify_shift(&u, axis, m));
        }
        reports.push(verify_convolution(&u_real, &v_real));
        reports.push(verify_parseval(&u_real, &v_real));
        reports.push(verify_plancherel(&u));
        reports.push(verify_period4_double(&u_complex));
        reports.push(verify_period4_quadruple(&u_complex));
    }

    let gauss = GaussianParams::standard();
    let quad = QuadConfig::standard();
    reports.push(verify_scaling(&gauss, [2.0, 1.0, -0.5], &quad));
    for which in DerivOrder::ALL {
        reports.push(verify_derivative(&gauss, which, &quad));
    }
    for axis in Axis::ALL {
        reports.push(verify_oft_differentiation(&gauss, axis, &quad));
    }
    reports.push(verify_riemann_lebesgue(&quad));

    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid8() -> SamplingGrid {
        SamplingGrid::cubic(8)
    }

    #[test]
    fn cos_modulation_with_zero_carrier_is_exact() {
        let u = OctField3::random(grid8(), 1);
        let report = verify_modulation_cos(&u, Axis::X1, 0);
        assert!(report.residual < 1e-14, "{}", report.line());
    }

    #[test]
    fn modulation_on_random_fields() {
        let u = OctField3::random(grid8(), 2);
        for axis in Axis::ALL {
            assert!(verify_modulation_cos(&u, axis, 3).passed);
            assert!(verify_modulation_sin(&u, axis, 2).passed);
            assert!(verify_modulation_exp(&u, axis, 3).passed);
        }
    }

    #[test]
    fn exp_modulation_axis1_is_pure_shift() {
        let u = OctField3::random(grid8(), 3);
        let report = verify_modulation_exp(&u, Axis::X1, 5);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn exp_modulation_with_zero_carrier_is_identity() {
        let u = OctField3::random(grid8(), 4);
        for axis in Axis::ALL {
            let report = verify_modulation_exp(&u, axis, 0);
            assert!(report.residual < 1e-14);
        }
    }

    #[test]
    fn shift_zero_and_full_wrap_are_exact() {
        let u = OctField3::random(grid8(), 5);
        for axis in Axis::ALL {
            assert!(verify_shift(&u, axis, 0).residual < 1e-14);
            assert!(verify_shift(&u, axis, 8).residual < 1e-12);
        }
    }

    #[test]
    fn shift_on_random_fields() {
        let u = OctField3::random(grid8(), 6);
        for axis in Axis::ALL {
            let report = verify_shift(&u, axis, 3);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn convolution_with_delta_collapses() {
        let grid = grid8();
        let u = OctField3::random_real(grid, 7);
        let delta = OctField3::delta(grid, [0, 0, 0]);
        let report = verify_convolution(&u, &delta);
        assert!(report.passed, "{}", report.line());
        let report = verify_convolution(&delta, &u);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn convolution_on_random_real_pair() {
        let grid = grid8();
        let u = OctField3::random_real(grid, 8);
        let v = OctField3::random_real(grid, 9);
        let report = verify_convolution(&u, &v);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn convolution_rule_collapses_for_fully_even_fields() {
        // a field even in every axis keeps only the first parity slot, so
        // the eight-term right side reduces to a plain pointwise product
        let grid = grid8();
        let raw = OctField3::random_real(grid, 14);
        let u = crate::transform::parity_components(&raw)[0].clone();
        let v = OctField3::random_real(grid, 15);
        let spectrum = dsoft_fast(&u);
        for idx in grid.indices() {
            let slots = parity_slots(&spectrum[idx]);
            for (s, &value) in slots.iter().enumerate().skip(1) {
                assert!(value.abs() < 1e-10, "slot {s} leaked at {idx:?}");
            }
        }
        let report = verify_convolution(&u, &v);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn parseval_and_plancherel() {
        let grid = grid8();
        let u = OctField3::random_real(grid, 10);
        let v = OctField3::random_real(grid, 11);
        assert!(verify_parseval(&u, &v).passed);
        assert!(verify_plancherel(&OctField3::random(grid, 12)).passed);
    }

    #[test]
    fn period4_reports() {
        let u = OctField3::random_complex(grid8(), 13);
        assert!(verify_period4_double(&u).passed);
        assert!(verify_period4_quadruple(&u).passed);
    }

    #[test]
    fn scaling_identity_factors() {
        // light quadrature config keeps the unit test quick
        let quad = QuadConfig { half_widths: [4.0; 3], steps: [40; 3] };
        let gauss = GaussianParams::standard();
        let report = verify_scaling(&gauss, [1.0, 1.0, 1.0], &quad);
        assert!(report.residual < 1e-12, "{}", report.line());
    }

    #[test]
    fn scaling_with_stretch_and_sign() {
        let quad = QuadConfig { half_widths: [5.0; 3], steps: [50; 3] };
        let gauss = GaussianParams::standard();
        assert!(verify_scaling(&gauss, [2.0, 1.0, 1.0], &quad).residual < 1e-5);
        assert!(verify_scaling(&gauss, [-1.0, 1.0, 1.0], &quad).residual < 1e-5);
    }

    #[test]
    fn derivative_rules_on_offset_gaussian() {
        let quad = QuadConfig { half_widths: [5.0; 3], steps: [50; 3] };
        let gauss = GaussianParams {
            amplitude: 1.0,
            center: [0.3, -0.2, 0.1],
            width: [1.0, 1.2, 0.8],
        };
        for which in DerivOrder::ALL {
            let report = verify_derivative(&gauss, which, &quad);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn oft_differentiation_all_axes() {
        let quad = QuadConfig { half_widths: [5.0; 3], steps: [50; 3] };
        let gauss = GaussianParams::standard();
        for axis in Axis::ALL {
            let report = verify_oft_differentiation(&gauss, axis, &quad);
            assert!(report.passed, "{}", report.line());
        }
    }

    #[test]
    fn oft_differentiation_forms_agree_pointwise() {
        // the two closed forms are the same algebraic object; they agree far
        // below the quadrature tolerance
        let quad = QuadConfig { half_widths: [4.0; 3], steps: [32; 3] };
        let gauss = GaussianParams::standard();
        let f = [0.5, 0.5, 0.0];
        let weighted = |x: [f64; 3]| Octonion::real(-TAU * x[0] * gauss.eval(x));
        let weighted_unit = |x: [f64; 3]| Octonion::unit(1).scale(-TAU * x[0] * gauss.eval(x));
        let v_form = quad_oft(&weighted, [f[0], -f[1], -f[2]], quad.half_widths, quad.steps)
            .mul_basis_right(1);
        let w_form = quad_oft(&weighted_unit, f, quad.half_widths, quad.steps);
        assert!((v_form - w_form).norm() < 1e-12);
    }

    #[test]
    fn riemann_lebesgue_decay() {
        // step must stay <= 1/8 so the first quadrature alias of the |f|=4
        // probes lands past |f|=4 again
        let quad = QuadConfig { half_widths: [5.0; 3], steps: [80; 3] };
        let report = verify_riemann_lebesgue(&quad);
        assert!(report.passed, "{}", report.line());
    }

    #[test]
    fn run_all_is_deterministic_and_passes() {
        let quick: Vec<TheoremReport> = run_all_grid_only(42, &[4]);
        assert!(!quick.is_empty());
        for r in &quick {
            assert!(r.passed, "{}", r.line());
        }
        let again = run_all_grid_only(42, &[4]);
        for (a, b) in quick.iter().zip(&again) {
            assert_eq!(a.residual.to_bits(), b.residual.to_bits());
            assert_eq!(a.name, b.name);
        }
    }

    #[test]
    fn empty_size_list_yields_no_reports() {
        assert!(run_all(1, &[]).is_empty());
    }

    /// Grid-only slice of `run_all`, for fast unit testing.
    fn run_all_grid_only(seed: u64, sizes: &[usize]) -> Vec<TheoremReport> {
        let mut rng = SplitMix64::new(seed);
        let mut reports = Vec::new();
        for &n in sizes {
            let grid = SamplingGrid::cubic(n);
            let u = OctField3::random(grid, rng.next_u64());
            let u_real = OctField3::random_real(grid, rng.next_u64());
            let v_real = OctField3::random_real(grid, rng.next_u64());
            let u_complex = OctField3::random_complex(grid, rng.next_u64());
            let max_carrier = (n as u64 / 2).max(2);
            for axis in Axis::ALL {
                let k0 = rng.next_range(1, max_carrier) as i64;
                reports.push(verify_modulation_cos(&u, axis, k0));
                reports.push(verify_modulation_sin(&u, axis, k0));
                reports.push(verify_modulation_exp(&u, axis, k0));
                let m = rng.next_range(1, n as u64) as i64;
                reports.push(verify_shift(&u, axis, m));
            }
            reports.push(verify_convolution(&u_real, &v_real));
            reports.push(verify_parseval(&u_real, &v_real));
            reports.push(verify_plancherel(&u));
            reports.push(verify_period4_double(&u_complex));
            reports.push(verify_period4_quadruple(&u_complex));
        }
        reports.sort_by(|a, b| a.name.cmp(&b.name));
        reports
    }
}
