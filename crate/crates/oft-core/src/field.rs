//! Sampled 3-D octonion fields.
//!
//! Data is dense row-major with the third index fastest. Frequency negation
//! on a periodic grid is index reflection `k -> (N - k) mod N`, which keeps
//! index 0 (and N/2 for even N) fixed.

use crate::octonion::Octonion;
use crate::rng::SplitMix64;

/// Which side of the transform a field lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Space,
    Frequency,
}

/// Uniform sampling lattice: physical coordinate of index `n` along axis `i`
/// is `origin[i] + n * spacing[i]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingGrid {
    pub shape: [usize; 3],
    pub spacing: [f64; 3],
    pub origin: [f64; 3],
}

impl SamplingGrid {
    pub fn new(shape: [usize; 3], spacing: [f64; 3], origin: [f64; 3]) -> Self {
        assert!(shape.iter().all(|&n| n > 0), "grid shape must be positive");
        assert!(spacing.iter().all(|&d| d > 0.0), "grid spacing must be positive");
        SamplingGrid { shape, spacing, origin }
    }

    /// Unit-spacing grid at the origin.
    pub fn cubic(n: usize) -> Self {
        SamplingGrid::new([n, n, n], [1.0, 1.0, 1.0], [0.0, 0.0, 0.0])
    }

    pub fn len(&self) -> usize {
        self.shape[0] * self.shape[1] * self.shape[2]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coordinate(&self, idx: [usize; 3]) -> [f64; 3] {
        [
            self.origin[0] + idx[0] as f64 * self.spacing[0],
            self.origin[1] + idx[1] as f64 * self.spacing[1],
            self.origin[2] + idx[2] as f64 * self.spacing[2],
        ]
    }

    /// Signed frequency of index `k` along `axis`, in cycles per unit length:
    /// `k` for `k < N/2`, `k - N` otherwise, divided by `N * spacing`.
    pub fn signed_frequency(&self, k: usize, axis: usize) -> f64 {
        let n = self.shape[axis];
        let signed = if 2 * k < n { k as i64 } else { k as i64 - n as i64 };
        signed as f64 / (n as f64 * self.spacing[axis])
    }

    /// Index of `-k mod N` along `axis`.
    pub fn reflect(&self, k: usize, axis: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.shape[axis] - k
        }
    }

    pub fn flat(&self, idx: [usize; 3]) -> usize {
        debug_assert!(idx[0] < self.shape[0] && idx[1] < self.shape[1] && idx[2] < self.shape[2]);
        (idx[0] * self.shape[1] + idx[1]) * self.shape[2] + idx[2]
    }

    /// Iterate all index triples in storage order.
    pub fn indices(&self) -> impl Iterator<Item = [usize; 3]> {
        let [n1, n2, n3] = self.shape;
        (0..n1).flat_map(move |i| (0..n2).flat_map(move |j| (0..n3).map(move |k| [i, j, k])))
    }
}

/// Dense grid of octonions plus sampling metadata and a domain flag.
///
/// Frequency-domain fields keep the space-grid metadata; symbol builders
/// read the spacing from it.
#[derive(Debug, Clone, PartialEq)]
pub struct OctField3 {
    pub grid: SamplingGrid,
    pub domain: Domain,
    data: Vec<Octonion>,
}

impl OctField3 {
    pub fn zeros(grid: SamplingGrid, domain: Domain) -> Self {
        let len = grid.len();
        OctField3 { grid, domain, data: vec![Octonion::ZERO; len] }
    }

    pub fn from_data(grid: SamplingGrid, domain: Domain, data: Vec<Octonion>) -> Self {
        assert_eq!(data.len(), grid.len(), "data length does not match grid");
        OctField3 { grid, domain, data }
    }

    pub fn from_fn(
        grid: SamplingGrid,
        domain: Domain,
        mut f: impl FnMut([usize; 3]) -> Octonion,
    ) -> Self {
        let mut data = Vec::with_capacity(grid.len());
        for idx in grid.indices() {
            data.push(f(idx));
        }
        OctField3 { grid, domain, data }
    }

    /// Kronecker delta at `at`.
    pub fn delta(grid: SamplingGrid, at: [usize; 3]) -> Self {
        let mut field = OctField3::zeros(grid, Domain::Space);
        field[at] = Octonion::ONE;
        field
    }

    /// Octonion-valued field with all coefficients uniform in `[-1, 1]`.
    pub fn random(grid: SamplingGrid, seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        OctField3::from_fn(grid, Domain::Space, |_| {
            let mut c = [0.0; 8];
            for x in &mut c {
                *x = rng.next_unit();
            }
            Octonion::new(c)
        })
    }

    /// Real-valued random field.
    pub fn random_real(grid: SamplingGrid, seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        OctField3::from_fn(grid, Domain::Space, |_| Octonion::real(rng.next_unit()))
    }

    /// Complex-valued (coefficients 0 and 1 only) random field.
    pub fn random_complex(grid: SamplingGrid, seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        OctField3::from_fn(grid, Domain::Space, |_| {
            Octonion::from_complex_axis(rng.next_unit(), rng.next_unit(), 1)
        })
    }

    pub fn shape(&self) -> [usize; 3] {
        self.grid.shape
    }

    pub fn data(&self) -> &[Octonion] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Octonion] {
        &mut self.data
    }

    /// Value at the reflected index `(-n) mod N` per axis, for the axes where
    /// `flip` is set.
    pub fn at_reflected(&self, idx: [usize; 3], flip: [bool; 3]) -> Octonion {
        let mut r = idx;
        for a in 0..3 {
            if flip[a] {
                r[a] = self.grid.reflect(idx[a], a);
            }
        }
        self[r]
    }

    pub fn map(&self, f: impl Fn(&Octonion) -> Octonion) -> OctField3 {
        OctField3 {
            grid: self.grid,
            domain: self.domain,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn zip_map(&self, other: &OctField3, f: impl Fn(&Octonion, &Octonion) -> Octonion) -> OctField3 {
        assert_eq!(self.grid.shape, other.grid.shape, "field shapes differ");
        OctField3 {
            grid: self.grid,
            domain: self.domain,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, o| m.max(o.max_abs()))
    }

    /// Largest pointwise difference, scaled by the larger field magnitude.
    pub fn max_rel_diff(&self, other: &OctField3) -> f64 {
        assert_eq!(self.grid.shape, other.grid.shape, "field shapes differ");
        let scale = self.max_abs().max(other.max_abs()).max(f64::MIN_POSITIVE);
        let mut worst = 0.0f64;
        for (a, b) in self.data.iter().zip(&other.data) {
            worst = worst.max((*a - *b).max_abs());
        }
        worst / scale
    }

    pub fn with_domain(mut self, domain: Domain) -> OctField3 {
        self.domain = domain;
        self
    }
}

impl std::ops::Index<[usize; 3]> for OctField3 {
    type Output = Octonion;
    fn index(&self, idx: [usize; 3]) -> &Octonion {
        &self.data[self.grid.flat(idx)]
    }
}

impl std::ops::IndexMut<[usize; 3]> for OctField3 {
    fn index_mut(&mut self, idx: [usize; 3]) -> &mut Octonion {
        let flat = self.grid.flat(idx);
        &mut self.data[flat]
    }
}
