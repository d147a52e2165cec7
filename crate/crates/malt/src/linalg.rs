//! Dense fp64 vectors and matrices, subspace projections, and seeded
//! randomness.
//!
//! All arithmetic is fp64. Randomness comes from [`SeededRng`], a ChaCha8
//! stream cipher: the same seed yields the same stream on every platform
//! and at every thread count. Parallel work never shares an rng; it forks
//! children with [`SeededRng::child`].

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis vectors are linearly dependent")]
    DependentVectors,
    #[error("subspace dimension {subspace} must be >= 1 and < ambient dimension {ambient}")]
    BadSubspaceDim { subspace: usize, ambient: usize },
}

/// A dense fp64 vector. Entries stay finite after every public operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Self {
        debug_assert!(entries.iter().all(|x| x.is_finite()), "non-finite entry");
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self, kind: NormKind) -> f64 {
        match kind {
            NormKind::L2 => self.norm_l2(),
            NormKind::LInf => self.norm_linf(),
        }
    }

    pub fn norm_l2(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_linf(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector::new(self.0.iter().map(|a| a * factor).collect())
    }

    /// self += factor * other
    pub fn axpy(&mut self, factor: f64, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += factor * b;
        }
    }

    /// Index of the largest entry; `None` when the maximum is attained by
    /// more than one entry (an exact tie).
    pub fn unique_argmax(&self) -> Option<usize> {
        let (mut best, mut best_val, mut ties) = (0usize, f64::NEG_INFINITY, 0usize);
        for (i, &v) in self.0.iter().enumerate() {
            if v > best_val {
                best = i;
                best_val = v;
                ties = 1;
            } else if v == best_val {
                ties += 1;
            }
        }
        (ties == 1).then_some(best)
    }

    /// Index of the largest entry, lowest index on ties.
    pub fn argmax(&self) -> usize {
        let mut best = 0usize;
        for (i, &v) in self.0.iter().enumerate() {
            if v > self.0[best] {
                best = i;
            }
        }
        best
    }
}

impl From<Vec<f64>> for Vector {
    fn from(entries: Vec<f64>) -> Self {
        Vector::new(entries)
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    L2,
    LInf,
}

/// Row-major dense fp64 matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(rows * cols, data.len(), "shape does not match entry count");
        debug_assert!(data.iter().all(|x| x.is_finite()), "non-finite entry");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r.as_slice());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.row(i).to_vec())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// A · x
    pub fn matvec(&self, x: &Vector) -> Result<Vector, LinalgError> {
        if x.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            out.push(
                self.row(i)
                    .iter()
                    .zip(x.as_slice())
                    .map(|(a, b)| a * b)
                    .sum(),
            );
        }
        Ok(Vector::new(out))
    }

    /// Aᵀ · y
    pub fn matvec_transpose(&self, y: &Vector) -> Result<Vector, LinalgError> {
        if y.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                got: y.len(),
            });
        }
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            let yi = y[i];
            if yi == 0.0 {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += yi * a;
            }
        }
        Ok(Vector::new(out))
    }
}

/// An orthonormal basis of a proper subspace of R^d.
///
/// Construction runs modified Gram–Schmidt twice, so pairwise dot products
/// stay below 1e-10 and every basis vector has norm 1 within 1e-10.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis_vectors: Vec<Vector>,
}

impl SubspaceBasis {
    /// Orthonormalize `candidates` into a basis. Fails if the candidates
    /// are dependent or if there are too many of them.
    pub fn orthonormalize(
        ambient_dim: usize,
        candidates: &[Vector],
    ) -> Result<Self, LinalgError> {
        if candidates.is_empty() || candidates.len() >= ambient_dim {
            return Err(LinalgError::BadSubspaceDim {
                subspace: candidates.len(),
                ambient: ambient_dim,
            });
        }
        let mut basis: Vec<Vector> = Vec::with_capacity(candidates.len());
        for c in candidates {
            if c.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    got: c.len(),
                });
            }
            let mut v = c.clone();
            // Two orthogonalization passes keep the residual dot products
            // at rounding level.
            for _ in 0..2 {
                for b in &basis {
                    let coeff = v.dot(b);
                    v.axpy(-coeff, b);
                }
            }
            let norm = v.norm_l2();
            if norm < 1e-12 * c.norm_l2().max(1.0) {
                return Err(LinalgError::DependentVectors);
            }
            basis.push(v.scale(1.0 / norm));
        }
        Ok(SubspaceBasis {
            ambient_dim,
            basis_vectors: basis,
        })
    }

    /// A random `subspace_dim`-dimensional basis in R^`ambient_dim`,
    /// deterministic per rng state.
    pub fn random(
        rng: &mut SeededRng,
        ambient_dim: usize,
        subspace_dim: usize,
    ) -> Result<Self, LinalgError> {
        if subspace_dim == 0 || subspace_dim >= ambient_dim {
            return Err(LinalgError::BadSubspaceDim {
                subspace: subspace_dim,
                ambient: ambient_dim,
            });
        }
        let candidates: Vec<Vector> = (0..subspace_dim)
            .map(|_| sample_gaussian(rng, ambient_dim, 1.0))
            .collect();
        // Gaussian draws are dependent with probability zero; treat a
        // collision as unreachable rather than resampling.
        Self::orthonormalize(ambient_dim, &candidates)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of basis vectors (the subspace dimension).
    pub fn dim(&self) -> usize {
        self.basis_vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.basis_vectors
    }

    /// Σ_k coeffs[k] · b_k — a point inside the subspace.
    pub fn combine(&self, coeffs: &[f64]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Vector::zeros(self.ambient_dim);
        for (c, b) in coeffs.iter().zip(&self.basis_vectors) {
            out.axpy(*c, b);
        }
        out
    }

    /// Orthogonal projection onto the subspace: Σ_k ⟨x, b_k⟩ b_k.
    pub fn project_onto(&self, x: &Vector) -> Result<Vector, LinalgError> {
        if x.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.len(),
            });
        }
        let mut out = Vector::zeros(self.ambient_dim);
        for b in &self.basis_vectors {
            out.axpy(x.dot(b), b);
        }
        Ok(out)
    }
}

/// Orthogonal projection onto the complement of the subspace spanned by
/// `basis`: x − Σ_k ⟨x, b_k⟩ b_k.
pub fn project_complement(x: &Vector, basis: &SubspaceBasis) -> Result<Vector, LinalgError> {
    if x.len() != basis.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.ambient_dim(),
            got: x.len(),
        });
    }
    let mut out = x.clone();
    for b in basis.vectors() {
        let coeff = out.dot(b);
        out.axpy(-coeff, b);
    }
    Ok(out)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic random stream (ChaCha8 keyed by a 64-bit seed).
///
/// Identical seeds produce identical streams on all platforms. Instances
/// are never shared between threads; parallel tasks fork children via
/// `child_seed = splitmix64(splitmix64(parent_seed) ^ task_index)`.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    /// Name of the underlying generator, fixed for the life of the crate.
    pub const ALGORITHM: &'static str = "chacha8";

    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Fork a deterministic child stream for parallel task `task_index`.
    pub fn child(&self, task_index: u64) -> SeededRng {
        SeededRng::new(splitmix64(splitmix64(self.seed) ^ task_index))
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }
}

/// `dim` i.i.d. draws from N(0, std²).
pub fn sample_gaussian(rng: &mut SeededRng, dim: usize, std: f64) -> Vector {
    assert!(dim >= 1 && std > 0.0);
    Vector::new(
        (0..dim)
            .map(|_| {
                let z: f64 = StandardNormal.sample(rng);
                z * std
            })
            .collect(),
    )
}

/// `dim` i.i.d. uniform draws from {+magnitude, −magnitude}.
pub fn sample_sign(rng: &mut SeededRng, dim: usize, magnitude: f64) -> Vector {
    assert!(dim >= 1 && magnitude > 0.0);
    Vector::new(
        (0..dim)
            .map(|_| {
                if rng.random::<bool>() {
                    magnitude
                } else {
                    -magnitude
                }
            })
            .collect(),
    )
}
