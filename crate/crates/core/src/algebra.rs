//! Skew-symmetric algebras given by structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linear_map::LinearMap;
use crate::random;

/// Coordinates of an element of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Vector::new(vec![field.zero(); n])
    }

    /// The basis vector `e_i` (1-based).
    pub fn basis(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Vector::zero(field, n);
        v.coords[i - 1] = field.one();
        v
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * s).collect())
    }

    /// `self += s * other`
    fn add_scaled(&mut self, s: &Scalar, other: &[Scalar]) {
        for (a, b) in self.coords.iter_mut().zip(other) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }
}

/// An `n`-dimensional algebra with skew-symmetric product
/// `μ(e_i, e_j) = Σ_k C_{i,j}^k e_k`.
///
/// Only pairs `i < j` with a nonzero product are stored; `μ(e_j, e_i)` and
/// `μ(e_i, e_i)` follow by skew-symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewAlgebra {
    dim: usize,
    field: FieldSpec,
    constants: BTreeMap<(usize, usize), Vec<Scalar>>,
    /// `table[(i-1)*n + (j-1)]` is `μ(e_i, e_j)` for all ordered pairs.
    table: Vec<Vec<Scalar>>,
}

impl SkewAlgebra {
    /// Validates structure constants listed as `(i, j, μ(e_i, e_j))` with `i < j`.
    pub fn new(
        dim: usize,
        field: FieldSpec,
        products: impl IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        let mut constants = BTreeMap::new();
        for (i, j, coeffs) in products {
            if i < 1 || i >= j || j > dim {
                return Err(Error::Ordering {
                    left: i,
                    right: j,
                    dim,
                });
            }
            if coeffs.len() != dim {
                return Err(Error::Shape(format!(
                    "product ({i},{j}) has {} coordinates, expected {dim}",
                    coeffs.len()
                )));
            }
            if let Some(x) = coeffs.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: x.field(),
                });
            }
            if constants.insert((i, j), coeffs).is_some() {
                return Err(Error::DuplicatePair { left: i, right: j });
            }
        }
        constants.retain(|_, v: &mut Vec<Scalar>| !v.iter().all(Scalar::is_zero));
        Ok(SkewAlgebra::from_constants(dim, field, constants))
    }

    fn from_constants(
        dim: usize,
        field: FieldSpec,
        constants: BTreeMap<(usize, usize), Vec<Scalar>>,
    ) -> Self {
        let zero = vec![field.zero(); dim];
        let mut table = vec![zero; dim * dim];
        for (&(i, j), c) in &constants {
            table[(i - 1) * dim + (j - 1)] = c.clone();
            table[(j - 1) * dim + (i - 1)] = c.iter().map(|x| -x).collect();
        }
        SkewAlgebra {
            dim,
            field,
            constants,
            table,
        }
    }

    /// The algebra with all products zero.
    pub fn abelian(dim: usize, field: FieldSpec) -> Result<Self> {
        SkewAlgebra::new(dim, field, [])
    }

    /// Shorthand for integer structure constants.
    pub fn from_i64(dim: usize, field: FieldSpec, products: &[(usize, usize, Vec<i64>)]) -> Result<Self> {
        SkewAlgebra::new(
            dim,
            field,
            products
                .iter()
                .map(|(i, j, c)| (*i, *j, c.iter().map(|&v| field.from_i64(v)).collect())),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Stored products `(i, j) -> μ(e_i, e_j)` for `i < j`, zero pairs omitted.
    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.constants
    }

    /// `μ(e_i, e_j)` for any `1 <= i, j <= n`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[(i - 1) * self.dim + (j - 1)]
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    fn check_vector(&self, x: &Vector) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::Shape(format!(
                "vector of length {} in a {}-dimensional algebra",
                x.len(),
                self.dim
            )));
        }
        if let Some(c) = x.coords().iter().find(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.product(x, y))
    }

    fn product(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if i == j || yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), &self.table[i * self.dim + j]);
            }
        }
        out
    }

    /// `μ(μ(x,y),z) + μ(μ(y,z),x) + μ(μ(z,x),y)`
    pub fn jacobiator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        for v in [x, y, z] {
            self.check_vector(v)?;
        }
        let a = self.product(&self.product(x, y), z);
        let b = self.product(&self.product(y, z), x);
        let c = self.product(&self.product(z, x), y);
        Ok(a.add(&b).add(&c))
    }

    /// True iff the Jacobi identity holds on every basis triple `i < j < k`.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                (j + 1..=n).all(|k| {
                    self.jacobiator(&self.basis(i), &self.basis(j), &self.basis(k))
                        .expect("basis vectors fit")
                        .is_zero()
                })
            })
        })
    }

    /// The isomorphic structure `μ'(x, y) = g(μ(g⁻¹x, g⁻¹y))`.
    pub fn transport(&self, g: &LinearMap) -> Result<SkewAlgebra> {
        g.check_compatible(self.dim, self.field)?;
        let g_inv = g.inverse()?;
        let images: Vec<Vector> = (1..=self.dim).map(|q| g_inv.column(q)).collect();
        let mut products = Vec::new();
        for i in 1..=self.dim {
            for j in i + 1..=self.dim {
                let p = self.product(&images[i - 1], &images[j - 1]);
                products.push((i, j, g.apply(&p)?.into_coords()));
            }
        }
        SkewAlgebra::new(self.dim, self.field, products)
    }

    /// Multiplies every structure constant by `lambda`.
    pub fn scaled(&self, lambda: &Scalar) -> Result<SkewAlgebra> {
        SkewAlgebra::new(
            self.dim,
            self.field,
            self.constants
                .iter()
                .map(|(&(i, j), c)| (i, j, c.iter().map(|x| x * lambda).collect())),
        )
    }

    /// Every constant `C_{i,j}^k` (`i < j`) drawn independently: integers in
    /// `[-bound, bound]` over Q, uniform residues over `F_p`.
    pub fn random(dim: usize, field: FieldSpec, seed: u64, bound: u64) -> Result<SkewAlgebra> {
        if dim == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        if field == FieldSpec::Rational && bound == 0 {
            return Err(Error::Argument("bound must be at least 1".into()));
        }
        let mut rng = random::rng(seed);
        let mut products = Vec::new();
        for i in 1..=dim {
            for j in i + 1..=dim {
                let coeffs = (0..dim).map(|_| random::scalar(&mut rng, field, bound)).collect();
                products.push((i, j, coeffs));
            }
        }
        SkewAlgebra::new(dim, field, products)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn ints(v: &[i64]) -> Vector {
        Vector::new(v.iter().map(|&x| q().from_i64(x)).collect())
    }

    #[test]
    fn rejects_malformed_products() {
        let err = SkewAlgebra::from_i64(3, q(), &[(2, 1, vec![0, 0, 1])]).unwrap_err();
        assert!(matches!(err, Error::Ordering { left: 2, right: 1, .. }));
        let err = SkewAlgebra::from_i64(3, q(), &[(1, 4, vec![0, 0, 1])]).unwrap_err();
        assert!(matches!(err, Error::Ordering { .. }));
        let err = SkewAlgebra::from_i64(3, q(), &[(1, 2, vec![0, 1]), ]).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
        let err =
            SkewAlgebra::from_i64(3, q(), &[(1, 2, vec![0, 0, 1]), (1, 2, vec![1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::DuplicatePair { left: 1, right: 2 });
        assert!(SkewAlgebra::abelian(0, q()).is_err());
    }

    #[test]
    fn abelian_products_vanish() {
        let a = SkewAlgebra::abelian(3, q()).unwrap();
        assert!(a.constants().is_empty());
        assert!(a.multiply(&ints(&[1, 2, 3]), &ints(&[4, -1, 0])).unwrap().is_zero());
        assert!(a.is_lie());
    }

    #[test]
    fn counterexample_products() {
        let a = catalog::counterexample4(q());
        let e = |i| a.basis(i);
        assert_eq!(a.multiply(&e(1), &e(2)).unwrap(), ints(&[0, 1, 2, -1]));
        assert_eq!(a.multiply(&e(2), &e(1)).unwrap(), ints(&[0, -1, -2, 1]));
        assert_eq!(a.multiply(&e(3), &e(4)).unwrap(), ints(&[-2, -1, 1, 2]));
        let x = ints(&[3, -1, 4, 1]);
        assert!(a.multiply(&x, &x).unwrap().is_zero());
        assert!(!a.jacobiator(&e(1), &e(2), &e(3)).unwrap().is_zero());
        assert!(!a.is_lie());
    }

    #[test]
    fn jacobi_holds_for_lie_algebras() {
        let cp = catalog::cross_product3(q());
        assert!(cp.jacobiator(&cp.basis(1), &cp.basis(2), &cp.basis(3)).unwrap().is_zero());
        assert!(cp.is_lie());
        assert!(catalog::heisenberg3(q()).is_lie());
        assert!(catalog::sl2_plus_k4(q()).is_lie());
    }

    #[test]
    fn shape_and_field_errors() {
        let a = catalog::heisenberg3(q());
        assert!(a.multiply(&ints(&[1, 0]), &ints(&[1, 0, 0])).is_err());
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(a.multiply(&Vector::basis(f7, 3, 1), &a.basis(2)).is_err());
    }

    #[test]
    fn transport_by_identity_and_scalars() {
        let cp = catalog::cross_product3(q());
        assert_eq!(cp.transport(&LinearMap::identity(q(), 3)).unwrap(), cp);
        let lambda = q().from_i64(3);
        let moved = cp.transport(&LinearMap::scalar(q(), 3, &lambda)).unwrap();
        assert_eq!(moved, cp.scaled(&lambda.inv().unwrap()).unwrap());
        let singular = LinearMap::elementary(q(), 3, 1, 1, q().one());
        assert_eq!(cp.transport(&singular), Err(Error::Singular));
    }

    #[test]
    fn transport_is_an_action() {
        let a = SkewAlgebra::random(3, q(), 11, 4).unwrap();
        let g = LinearMap::from_columns(q(), vec![
            vec![q().from_i64(1), q().from_i64(2), q().zero()],
            vec![q().zero(), q().from_i64(1), q().from_i64(-1)],
            vec![q().from_i64(3), q().zero(), q().from_i64(1)],
        ])
        .unwrap();
        let h = LinearMap::from_columns(q(), vec![
            vec![q().from_i64(2), q().zero(), q().zero()],
            vec![q().from_i64(1), q().from_i64(1), q().zero()],
            vec![q().zero(), q().from_i64(5), q().from_i64(-1)],
        ])
        .unwrap();
        let step = a.transport(&g).unwrap().transport(&h).unwrap();
        assert_eq!(step, a.transport(&h.compose(&g).unwrap()).unwrap());
        let back = a.transport(&g).unwrap().transport(&g.inverse().unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn random_is_deterministic() {
        let f = FieldSpec::prime(10007).unwrap();
        assert_eq!(
            SkewAlgebra::random(4, f, 99, 0).unwrap(),
            SkewAlgebra::random(4, f, 99, 0).unwrap()
        );
        assert_ne!(
            SkewAlgebra::random(4, f, 99, 0).unwrap(),
            SkewAlgebra::random(4, f, 100, 0).unwrap()
        );
        assert!(SkewAlgebra::random(3, q(), 1, 0).is_err());
    }

    fn small_vec(n: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(-5i64..6, n).prop_map(|v| ints(&v))
    }

    proptest! {
        #[test]
        fn product_is_skew_and_bilinear(
            seed in any::<u64>(),
            x in small_vec(4), x2 in small_vec(4), y in small_vec(4), z in small_vec(4),
            lambda in -4i64..5,
        ) {
            let a = SkewAlgebra::random(4, q(), seed, 5).unwrap();
            for i in 1..=4 {
                prop_assert!(a.multiply(&a.basis(i), &a.basis(i)).unwrap().is_zero());
                for j in 1..=4 {
                    let ij = a.multiply(&a.basis(i), &a.basis(j)).unwrap();
                    let ji = a.multiply(&a.basis(j), &a.basis(i)).unwrap();
                    prop_assert_eq!(ij, ji.scale(&q().from_i64(-1)));
                }
            }
            let l = q().from_i64(lambda);
            let lhs = a.multiply(&x.add(&x2.scale(&l)), &y).unwrap();
            let rhs = a.multiply(&x, &y).unwrap().add(&a.multiply(&x2, &y).unwrap().scale(&l));
            prop_assert_eq!(lhs, rhs);
            let jxyz = a.jacobiator(&x, &y, &z).unwrap();
            let jyxz = a.jacobiator(&y, &x, &z).unwrap();
            prop_assert_eq!(jxyz, jyxz.scale(&q().from_i64(-1)));
        }

        #[test]
        fn lie_property_is_isomorphism_invariant(entries in proptest::collection::vec(-3i64..4, 9)) {
            let g = LinearMap::from_flat(q(), 3, &entries.iter().map(|&v| q().from_i64(v)).collect::<Vec<_>>()).unwrap();
            prop_assume!(g.is_invertible());
            for a in [catalog::heisenberg3(q()), catalog::cross_product3(q()), SkewAlgebra::random(3, q(), 5, 3).unwrap()] {
                let moved = a.transport(&g).unwrap();
                prop_assert_eq!(a.is_lie(), moved.is_lie());
                prop_assert_eq!(moved.transport(&g.inverse().unwrap()).unwrap(), a);
            }
        }
    }
}
