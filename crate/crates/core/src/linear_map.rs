use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// An endomorphism of `K^n`. Column `q` holds the coordinates of `f(e_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::Shape(format!(
                "a linear map needs a nonempty square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap { matrix })
    }

    /// `columns[q]` are the coordinates of `f(e_{q+1})`.
    pub fn from_columns(field: FieldSpec, columns: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = columns.len();
        if columns.iter().any(|c| c.len() != n) {
            return Err(Error::Shape(format!("expected {n} columns of length {n}")));
        }
        let mut m = Matrix::zeros(field, n, n);
        for (q, col) in columns.into_iter().enumerate() {
            for (p, x) in col.into_iter().enumerate() {
                if x.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field,
                        right: x.field(),
                    });
                }
                m.set(p, q, x);
            }
        }
        LinearMap::from_matrix(m)
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, n),
        }
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(field, n, n),
        }
    }

    pub fn scalar(field: FieldSpec, n: usize, lambda: &Scalar) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, n).scale(lambda),
        }
    }

    /// Map with a single nonzero entry `a_{p,q} = value` (1-based).
    pub fn elementary(field: FieldSpec, n: usize, p: usize, q: usize, value: Scalar) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        m.set(p - 1, q - 1, value);
        LinearMap { matrix: m }
    }

    /// Inverse of [`LinearMap::flatten`]: slot `(q-1)*n + (p-1)` holds `a_{p,q}`.
    pub fn from_flat(field: FieldSpec, n: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != n * n || n == 0 {
            return Err(Error::Shape(format!(
                "flat vector of length {} for dimension {n}",
                flat.len()
            )));
        }
        LinearMap::from_columns(field, flat.chunks(n).map(<[Scalar]>::to_vec).collect())
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Entry `a_{p,q}`, the `e_p` coordinate of `f(e_q)` (1-based).
    pub fn entry(&self, p: usize, q: usize) -> &Scalar {
        self.matrix.get(p - 1, q - 1)
    }

    pub fn column(&self, q: usize) -> Vector {
        Vector::new(self.matrix.column(q - 1))
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|q| self.matrix.column(q)).collect()
    }

    /// Column-by-column flattening, the vector `v_f`.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.columns().into_iter().flatten().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(x.coords()).map(Vector::new)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        self.matrix.mul(&other.matrix).map(|matrix| LinearMap { matrix })
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        self.matrix.inverse().map(|matrix| LinearMap { matrix })
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    pub fn check_compatible(&self, dim: usize, field: FieldSpec) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::Shape(format!(
                "map of dimension {} against algebra of dimension {dim}",
                self.dim()
            )));
        }
        if self.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: self.field(),
            });
        }
        Ok(())
    }
}
