//! Randomized experiments on the variety of Hom-Lie algebras.
//!
//! Results over `F_p` are sampling evidence for statements about generic
//! points, not proofs: a fixed nonzero polynomial of degree `d` vanishes at a
//! uniform point of `F_p^N` with probability at most `d/p`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::SkewAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linear_map::LinearMap;
use crate::random;
use crate::system::HomJacobiMatrix;

pub const DEFAULT_PRIME: u64 = 10007;
pub const DEFAULT_BOUND: u64 = 10;

/// Coefficient bound for random transports over Q.
const TRANSPORT_BOUND: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub dim: usize,
    pub field: FieldSpec,
    pub trials: usize,
    pub seed: u64,
    /// nullity -> number of samples
    pub histogram: BTreeMap<usize, usize>,
    /// Samples with trivial kernel.
    pub full_rank: usize,
    pub elapsed: Duration,
}

impl SampleReport {
    pub fn full_rank_fraction(&self) -> f64 {
        self.full_rank as f64 / self.trials as f64
    }

    /// Adds the counts of another report on the same dimension and field.
    pub fn merge(&mut self, other: &SampleReport) -> Result<()> {
        if self.dim != other.dim || self.field != other.field {
            return Err(Error::Argument("cannot merge reports of different experiments".into()));
        }
        for (&k, &v) in &other.histogram {
            *self.histogram.entry(k).or_insert(0) += v;
        }
        self.trials += other.trials;
        self.full_rank += other.full_rank;
        self.elapsed += other.elapsed;
        Ok(())
    }
}

/// Random algebra for sample `index` of an experiment seeded with `seed`.
pub fn sample_algebra(dim: usize, field: FieldSpec, seed: u64, index: u64, bound: u64) -> Result<SkewAlgebra> {
    SkewAlgebra::random(dim, field, random::derive_seed(seed, index), bound)
}

/// Records the nullity of `M_μ` for `trials` seeded random algebras.
/// `bound` only matters over Q.
pub fn genericity_experiment(
    dim: usize,
    trials: usize,
    field: FieldSpec,
    seed: u64,
    bound: u64,
) -> Result<SampleReport> {
    if dim < 3 {
        return Err(Error::Argument(format!("dimension must be at least 3, got {dim}")));
    }
    if trials == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    let start = Instant::now();
    let nullities: Vec<usize> = (0..trials as u64)
        .into_par_iter()
        .map(|i| Ok(HomJacobiMatrix::build(&sample_algebra(dim, field, seed, i, bound)?).nullity()))
        .collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for &k in &nullities {
        *histogram.entry(k).or_insert(0) += 1;
    }
    Ok(SampleReport {
        dim,
        field,
        trials,
        seed,
        full_rank: histogram.get(&0).copied().unwrap_or(0),
        histogram,
        elapsed: start.elapsed(),
    })
}

/// Rejection-samples an invertible map from `seed`.
pub fn random_invertible(dim: usize, field: FieldSpec, seed: u64) -> LinearMap {
    let mut rng = random::rng(seed);
    loop {
        let flat: Vec<_> = (0..dim * dim)
            .map(|_| random::scalar(&mut rng, field, TRANSPORT_BOUND))
            .collect();
        let g = LinearMap::from_flat(field, dim, &flat).expect("square");
        if g.is_invertible() {
            return g;
        }
    }
}

/// Checks, for `trials` random invertible `g`, that the transported algebra
/// has the same nullity and that `g ∘ f ∘ g⁻¹` solves its system for every
/// canonical kernel map `f` of the original.
pub fn invariance_battery(algebra: &SkewAlgebra, trials: usize, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::Argument("at least one trial is required".into()));
    }
    let n = algebra.dim();
    let field = algebra.field();
    let kernel = HomJacobiMatrix::build(algebra).kernel_basis();
    let outcomes: Vec<bool> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let g = random_invertible(n, field, random::derive_seed(seed, i));
            transport_preserves(algebra, &kernel.maps, &g)
        })
        .collect::<Result<_>>()?;
    Ok(outcomes.into_iter().all(|ok| ok))
}

/// Invariance check for one transport `g`.
pub fn transport_preserves(algebra: &SkewAlgebra, kernel: &[LinearMap], g: &LinearMap) -> Result<bool> {
    let moved = HomJacobiMatrix::build(&algebra.transport(g)?);
    if moved.nullity() != kernel.len() {
        return Ok(false);
    }
    let g_inv = g.inverse()?;
    for f in kernel {
        if !moved.annihilates(&g.compose(f)?.compose(&g_inv)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
