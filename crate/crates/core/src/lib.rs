//! Exact Hom-Jacobi systems for finite-dimensional skew-symmetric algebras.
//!
//! Given structure constants `C_{i,j}^k`, [`system::HomJacobiMatrix`] encodes
//! the Hom-Jacobi identity `↺ μ(μ(x,y), f(z)) = 0` as a linear system in the
//! entries of `f`. Its kernel is the space of twisting maps; the algebra is
//! Hom-Lie when that kernel is nonzero. Everything is computed exactly over Q
//! or a prime field.

pub mod algebra;
pub mod catalog;
pub mod determinant;
pub mod error;
pub mod field;
pub mod formats;
pub mod lab;
pub mod linear_map;
pub mod matrix;
pub mod random;
pub mod registry;
pub mod system;

pub use algebra::{SkewAlgebra, Vector};
pub use error::{Error, Result};
pub use field::{FieldSpec, Modulus, Scalar};
pub use linear_map::LinearMap;
pub use matrix::Matrix;
pub use system::{
    hom_jacobi_defect, is_hom_lie, is_in_kernel, HomJacobiMatrix, HomLieVerdict, KernelBasis,
    SupportPattern,
};
