//! Determinant methods, selectable by name.

use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::registry::{Named, Registry};

pub trait DeterminantMethod: Named + Send + Sync {
    /// Exact determinant of a square matrix.
    fn determinant(&self, m: &Matrix) -> Result<Scalar>;
}

fn require_square(m: &Matrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Values Bareiss elimination can run on: exact division by a previous
/// pivot must be available.
trait FractionFree: Clone {
    fn is_zero(&self) -> bool;
    /// `a*d - b*c`
    fn cross(a: &Self, d: &Self, b: &Self, c: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl FractionFree for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &Self, d: &Self, b: &Self, c: &Self) -> Self {
        a * d - b * c
    }
    fn div_exact(&self, by: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % by)));
        self / by
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl FractionFree for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn cross(a: &Self, d: &Self, b: &Self, c: &Self) -> Self {
        &(a * d) - &(b * c)
    }
    fn div_exact(&self, by: &Self) -> Self {
        self.checked_div(by).expect("nonzero Bareiss pivot")
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Fraction-free elimination on an `n x n` matrix. `one` is the initial
/// previous pivot; the determinant is the last pivot, sign-adjusted for swaps.
fn bareiss<T: FractionFree>(mut a: Vec<Vec<T>>, one: T, zero: T) -> T {
    let n = a.len();
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut negated = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negated = !negated;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = T::cross(&a[i][j], &a[k][k], &a[i][k], &a[k][j]);
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negated {
        det.negate()
    } else {
        det
    }
}

/// Fraction-free (Bareiss) elimination. Rational matrices are first lifted
/// to integers row by row using the least common denominator.
pub struct Bareiss;

impl Named for Bareiss {
    fn name(&self) -> &'static str {
        "bareiss"
    }
}

impl DeterminantMethod for Bareiss {
    fn determinant(&self, m: &Matrix) -> Result<Scalar> {
        require_square(m)?;
        let field = m.field();
        match field {
            FieldSpec::Rational => {
                let mut scale = BigInt::one();
                let rows: Vec<Vec<BigInt>> = (0..m.rows())
                    .map(|r| {
                        let row = m.row(r);
                        let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                            acc.lcm(x.as_rational().expect("rational entry").denom())
                        });
                        scale *= &lcm;
                        row.iter()
                            .map(|x| {
                                let q = x.as_rational().expect("rational entry");
                                q.numer() * (&lcm / q.denom())
                            })
                            .collect()
                    })
                    .collect();
                let det = bareiss(rows, BigInt::one(), BigInt::zero());
                Ok(Scalar::Rational(BigRational::new(det, scale)))
            }
            FieldSpec::Prime(_) => Ok(bareiss(m.row_vecs(), field.one(), field.zero())),
        }
    }
}

/// Plain Gaussian elimination over the field: product of the pivots.
pub struct GaussElimination;

impl Named for GaussElimination {
    fn name(&self) -> &'static str {
        "gauss"
    }
}

impl DeterminantMethod for GaussElimination {
    fn determinant(&self, m: &Matrix) -> Result<Scalar> {
        require_square(m)?;
        let n = m.rows();
        let field = m.field();
        let mut a = m.clone();
        let mut det = field.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(field.zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for r in k + 1..n {
                let factor = a.get(r, k) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a.get(r, c) - &(&factor * a.get(k, c));
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }
}

static METHODS: LazyLock<Registry<dyn DeterminantMethod>> = LazyLock::new(|| {
    let mut reg: Registry<dyn DeterminantMethod> = Registry::new("determinant method");
    reg.register(Arc::new(Bareiss));
    reg.register(Arc::new(GaussElimination));
    reg
});

/// Built-in determinant methods; `bareiss` is the default.
pub fn methods() -> &'static Registry<dyn DeterminantMethod> {
    &METHODS
}

pub fn determinant(m: &Matrix) -> Result<Scalar> {
    Bareiss.determinant(m)
}
