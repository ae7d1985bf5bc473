//! Octonion Fourier analysis on 3-D grids.
//!
//! The crate provides the octonion and quadruple-complex algebras, the
//! discrete-space octonion Fourier transform (naive reference and FFT-backed
//! fast paths), quadrature evaluation of the continuous transform,
//! executable verifiers for the transform theorems, and frequency-domain
//! tools for 3-D LTI systems and spectral PDE solves.

pub mod dft;
pub mod field;
pub mod lti;
pub mod octonion;
pub mod of3b;
pub mod oracles;
pub mod quad_complex;
pub mod rng;
pub mod theorems;
pub mod transform;

pub use field::{Domain, OctField3, SamplingGrid};
pub use octonion::{Octonion, ZeroOctonion};
pub use quad_complex::{qmul, QuadComplex, SingularElement};
