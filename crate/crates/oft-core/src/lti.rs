//! Frequency-domain tools for 3-D LTI systems and spectral PDE solves.
//!
//! Frequency responses live in the commutative quadruple-complex algebra,
//! so system composition is plain pointwise arithmetic: cascade is the
//! pointwise product, parallel the sum, feedback needs a pointwise inverse
//! and therefore inherits the singular set of the algebra. PDE symbols map
//! derivatives to pointwise factors over signed grid frequencies.
//!
//! For the solvers the first grid axis is time: a forcing with axes
//! `(t, x1, x2)` transforms to `(tau, f1, f2)`.

use std::fmt;

use crate::field::{Domain, OctField3, SamplingGrid};
use crate::quad_complex::{qmul, QuadComplex};
use crate::theorems::DerivOrder;
use crate::transform::{dsoft_fast, idsoft};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Relative magnitude below which a symbol value counts as resonant.
const RESONANCE_EPSILON: f64 = 1e-9;

/// Forcing magnitude (relative to the spectrum peak) above which a singular
/// index counts as obstructed.
const OBSTRUCTION_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeMismatch {
    pub expected: [usize; 3],
    pub got: [usize; 3],
}

impl fmt::Display for ShapeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "field shape {:?} does not match system shape {:?}",
            self.got, self.expected
        )
    }
}

impl std::error::Error for ShapeMismatch {}

/// How a system's response came to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    FromImpulse,
    Composed,
    Symbol,
}

/// An LTI system described by its frequency response on a grid.
#[derive(Debug, Clone)]
pub struct LtiSystem {
    response: Vec<QuadComplex>,
    grid: SamplingGrid,
    provenance: Provenance,
    /// Indices where a feedback inverse did not exist; response is zero there.
    singular_set: Vec<[usize; 3]>,
}

impl LtiSystem {
    /// System with the given response values (row-major, third index fastest).
    pub fn from_response(grid: SamplingGrid, response: Vec<QuadComplex>, provenance: Provenance) -> Self {
        assert_eq!(response.len(), grid.len(), "response length must match grid");
        LtiSystem { response, grid, provenance, singular_set: Vec::new() }
    }

    /// Frequency response of a (real) impulse response field.
    pub fn from_impulse(h: &OctField3) -> Self {
        assert_eq!(h.domain, Domain::Space, "impulse response must be a space-domain field");
        let spectrum = dsoft_fast(h);
        let response = spectrum.data().iter().map(QuadComplex::from_octonion).collect();
        LtiSystem {
            response,
            grid: h.grid,
            provenance: Provenance::FromImpulse,
            singular_set: Vec::new(),
        }
    }

    /// The pass-through system (response one everywhere).
    pub fn identity(grid: SamplingGrid) -> Self {
        LtiSystem {
            response: vec![QuadComplex::ONE; grid.len()],
            grid,
            provenance: Provenance::Composed,
            singular_set: Vec::new(),
        }
    }

    pub fn shape(&self) -> [usize; 3] {
        self.grid.shape
    }

    pub fn grid(&self) -> &SamplingGrid {
        &self.grid
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn response(&self) -> &[QuadComplex] {
        &self.response
    }

    pub fn singular_set(&self) -> &[[usize; 3]] {
        &self.singular_set
    }

    fn check_shape(&self, other: [usize; 3]) -> Result<(), ShapeMismatch> {
        if self.grid.shape == other {
            Ok(())
        } else {
            Err(ShapeMismatch { expected: self.grid.shape, got: other })
        }
    }

    /// Filter a space-domain input through the system: transform, pointwise
    /// product in the commutative algebra, inverse transform.
    pub fn apply(&self, u: &OctField3) -> Result<OctField3, ShapeMismatch> {
        assert_eq!(u.domain, Domain::Space, "system input must be a space-domain field");
        self.check_shape(u.shape())?;
        let spectrum = dsoft_fast(u);
        let mut out = OctField3::zeros(u.grid, Domain::Frequency);
        for (i, idx) in u.grid.indices().enumerate() {
            let v = qmul(&self.response[i], &QuadComplex::from_octonion(&spectrum[idx]));
            out[idx] = v.to_octonion();
        }
        Ok(idsoft(&out))
    }

    /// Series connection: pointwise product of responses (commutative).
    pub fn cascade(&self, other: &LtiSystem) -> Result<LtiSystem, ShapeMismatch> {
        self.check_shape(other.grid.shape)?;
        let response = self
            .response
            .iter()
            .zip(&other.response)
            .map(|(a, b)| qmul(a, b))
            .collect();
        Ok(LtiSystem {
            response,
            grid: self.grid,
            provenance: Provenance::Composed,
            singular_set: Vec::new(),
        })
    }

    /// Parallel connection: pointwise sum of responses.
    pub fn parallel(&self, other: &LtiSystem) -> Result<LtiSystem, ShapeMismatch> {
        self.check_shape(other.grid.shape)?;
        let response = self
            .response
            .iter()
            .zip(&other.response)
            .map(|(a, b)| *a + *b)
            .collect();
        Ok(LtiSystem {
            response,
            grid: self.grid,
            provenance: Provenance::Composed,
            singular_set: Vec::new(),
        })
    }

    /// Negative feedback of `other` around `self`:
    /// `H = (1 + H1 H2)^-1 H1` pointwise. Where the inverse does not exist
    /// the response is zeroed and the index recorded in the returned
    /// system's singular set; the caller decides whether that is an error.
    pub fn feedback(&self, other: &LtiSystem) -> Result<LtiSystem, ShapeMismatch> {
        self.check_shape(other.grid.shape)?;
        let mut response = Vec::with_capacity(self.response.len());
        let mut singular_set = Vec::new();
        for (i, idx) in self.grid.indices().enumerate() {
            let loop_gain = QuadComplex::ONE + qmul(&self.response[i], &other.response[i]);
            match loop_gain.inverse() {
                Ok(inv) => response.push(qmul(&inv, &self.response[i])),
                Err(_) => {
                    response.push(QuadComplex::ZERO);
                    singular_set.push(idx);
                }
            }
        }
        Ok(LtiSystem { response, grid: self.grid, provenance: Provenance::Composed, singular_set })
    }
}

/// Pointwise frequency-domain factor of a differential operator, with its
/// non-invertible index set.
#[derive(Debug, Clone)]
pub struct PdeSymbol {
    pub values: Vec<QuadComplex>,
    pub grid: SamplingGrid,
    pub singular_set: Vec<[usize; 3]>,
    singular_mask: Vec<bool>,
}

impl PdeSymbol {
    fn from_values(grid: SamplingGrid, values: Vec<QuadComplex>) -> Self {
        assert_eq!(values.len(), grid.len());
        let peak = values.iter().fold(0.0f64, |m, v| m.max(v.max_abs()));
        let mut singular_set = Vec::new();
        let mut singular_mask = vec![false; values.len()];
        for (i, idx) in grid.indices().enumerate() {
            let resonant = values[i].max_abs() <= RESONANCE_EPSILON * peak;
            if resonant || values[i].inverse().is_err() {
                singular_set.push(idx);
                singular_mask[i] = true;
            }
        }
        PdeSymbol { values, grid, singular_set, singular_mask }
    }

    pub fn is_singular_at(&self, flat: usize) -> bool {
        self.singular_mask[flat]
    }

    /// Pointwise product of two symbols.
    pub fn compose(&self, other: &PdeSymbol) -> PdeSymbol {
        assert_eq!(self.grid.shape, other.grid.shape);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| qmul(a, b))
            .collect();
        PdeSymbol::from_values(self.grid, values)
    }
}

/// Signed frequencies (cycles per unit length) of a grid index.
fn signed_freqs(grid: &SamplingGrid, idx: [usize; 3]) -> [f64; 3] {
    [
        grid.signed_frequency(idx[0], 0),
        grid.signed_frequency(idx[1], 1),
        grid.signed_frequency(idx[2], 2),
    ]
}

/// Frequency-domain factor of one partial derivative: a frequency-scaled
/// basis element per multi-index, on signed grid frequencies.
pub fn derivative_symbol(grid: &SamplingGrid, which: DerivOrder) -> PdeSymbol {
    use crate::octonion::Octonion;
    let mut values = Vec::with_capacity(grid.len());
    for idx in grid.indices() {
        let f = signed_freqs(grid, idx);
        let w = [TAU * f[0], TAU * f[1], TAU * f[2]];
        let oct = match which {
            DerivOrder::X1 => Octonion::unit(1).scale(w[0]),
            DerivOrder::X2 => Octonion::unit(2).scale(w[1]),
            DerivOrder::X3 => Octonion::unit(4).scale(w[2]),
            DerivOrder::X1X2 => Octonion::unit(3).scale(w[0] * w[1]),
            DerivOrder::X1X3 => Octonion::unit(5).scale(w[0] * w[2]),
            DerivOrder::X2X3 => Octonion::unit(6).scale(w[1] * w[2]),
            DerivOrder::X1X2X3 => Octonion::unit(7).scale(w[0] * w[1] * w[2]),
            DerivOrder::X1X1 => Octonion::real(-w[0] * w[0]),
            DerivOrder::X2X2 => Octonion::real(-w[1] * w[1]),
            DerivOrder::X3X3 => Octonion::real(-w[2] * w[2]),
        };
        values.push(QuadComplex::from_octonion(&oct));
    }
    PdeSymbol::from_values(*grid, values)
}

/// Heat operator `d/dt - d^2/dx1^2 - d^2/dx2^2` over axes `(t, x1, x2)`:
/// `(2 pi f1)^2 + (2 pi f2)^2 + (2 pi tau) e1`. Singular only at the zero
/// frequency.
pub fn heat_symbol(grid: &SamplingGrid) -> PdeSymbol {
    use num_complex::Complex64;
    let mut values = Vec::with_capacity(grid.len());
    for idx in grid.indices() {
        let [tau, f1, f2] = signed_freqs(grid, idx);
        let a = (TAU * f1) * (TAU * f1) + (TAU * f2) * (TAU * f2);
        let b = TAU * tau;
        let mut q = QuadComplex::ZERO;
        q.s[0] = Complex64::new(a, b);
        values.push(q);
    }
    PdeSymbol::from_values(*grid, values)
}

/// Closed-form reciprocal of the heat symbol value at one frequency triple:
/// `(a - b e1) / (a^2 + b^2)` with `a = (2 pi f1)^2 + (2 pi f2)^2`,
/// `b = 2 pi tau`. Used as an independent check of the generic inverse.
pub fn heat_symbol_inverse(tau: f64, f1: f64, f2: f64) -> QuadComplex {
    use num_complex::Complex64;
    let a = (TAU * f1) * (TAU * f1) + (TAU * f2) * (TAU * f2);
    let b = TAU * tau;
    let den = a * a + b * b;
    let mut q = QuadComplex::ZERO;
    q.s[0] = Complex64::new(a / den, -b / den);
    q
}

/// Wave operator `d^2/dt^2 - d^2/dx1^2 - d^2/dx2^2` over axes `(t, x1, x2)`:
/// the real factor `(2 pi f1)^2 + (2 pi f2)^2 - (2 pi tau)^2`. Singular on
/// the resonance cone.
pub fn wave_symbol(grid: &SamplingGrid) -> PdeSymbol {
    use num_complex::Complex64;
    let mut values = Vec::with_capacity(grid.len());
    for idx in grid.indices() {
        let [tau, f1, f2] = signed_freqs(grid, idx);
        let a = (TAU * f1) * (TAU * f1) + (TAU * f2) * (TAU * f2) - (TAU * tau) * (TAU * tau);
        let mut q = QuadComplex::ZERO;
        q.s[0] = Complex64::new(a, 0.0);
        values.push(q);
    }
    PdeSymbol::from_values(*grid, values)
}

/// Outcome of a spectral solve: the solution field, the symbol's singular
/// indices (projected out), and the subset where the forcing was
/// non-negligible (the solvability obstruction).
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    pub field: OctField3,
    pub singular: Vec<[usize; 3]>,
    pub obstructed: Vec<[usize; 3]>,
}

impl SpectralSolution {
    pub fn is_solvable(&self) -> bool {
        self.obstructed.is_empty()
    }
}

/// Invert a symbol against a forcing field: `U = symbol^-1 (.) F` pointwise,
/// zero at the singular set.
pub fn solve_symbol(forcing: &OctField3, symbol: &PdeSymbol) -> SpectralSolution {
    assert_eq!(forcing.domain, Domain::Space, "forcing must be a space-domain field");
    assert_eq!(forcing.shape(), symbol.grid.shape, "forcing and symbol shapes differ");
    let spectrum = dsoft_fast(forcing);
    let peak = spectrum.max_abs().max(f64::MIN_POSITIVE);
    let mut solution = OctField3::zeros(forcing.grid, Domain::Frequency);
    let mut obstructed = Vec::new();
    for (i, idx) in forcing.grid.indices().enumerate() {
        let f_hat = QuadComplex::from_octonion(&spectrum[idx]);
        if symbol.is_singular_at(i) {
            if f_hat.max_abs() > OBSTRUCTION_EPSILON * peak {
                obstructed.push(idx);
            }
            // coefficient stays zero: projection onto the solvable subspace
        } else {
            let inv = symbol.values[i].inverse().expect("non-singular symbol value");
            solution[idx] = qmul(&inv, &f_hat).to_octonion();
        }
    }
    SpectralSolution {
        field: idsoft(&solution),
        singular: symbol.singular_set.clone(),
        obstructed,
    }
}

/// Solve the heat equation `u_t = u_x1x1 + u_x2x2 + f` spectrally.
pub fn solve_heat(forcing: &OctField3) -> SpectralSolution {
    let symbol = heat_symbol(&forcing.grid);
    solve_symbol(forcing, &symbol)
}

/// Solve the wave equation `u_tt = u_x1x1 + u_x2x2 + f` spectrally.
pub fn solve_wave(forcing: &OctField3) -> SpectralSolution {
    let symbol = wave_symbol(&forcing.grid);
    solve_symbol(forcing, &symbol)
}
