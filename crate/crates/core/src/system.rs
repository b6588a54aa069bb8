//! The Hom-Jacobi linear system of an algebra.
//!
//! A linear map `f` satisfies `↺ μ(μ(x,y), f(z)) = 0` iff its column-major
//! flattening lies in the kernel of [`HomJacobiMatrix`]. Rows are indexed by
//! (triple `i<j<k` in lexicographic order, output coordinate `l`), columns by
//! the unknown `a_{p,q}` at `(q-1)*n + (p-1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, LazyLock};

use rayon::prelude::*;

use crate::algebra::{SkewAlgebra, Vector};
use crate::determinant::{self, DeterminantMethod};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linear_map::LinearMap;
use crate::matrix::Matrix;
use crate::random;
use crate::registry::{Named, Registry};

/// Basis triples `i < j < k` (1-based) in lexicographic order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// `n * C(n,3) = n²(n-1)(n-2)/6`
pub fn row_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * n * (n - 1) * (n - 2) / 6
    }
}

/// Column of the unknown `a_{p,q}` (1-based indices).
pub fn column_index(n: usize, p: usize, q: usize) -> usize {
    (q - 1) * n + (p - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomJacobiMatrix {
    dim: usize,
    matrix: Matrix,
}

impl HomJacobiMatrix {
    /// Builds `M_μ`. Entry `((i,j,k), l), (p,q)` is coordinate `l` of
    /// `μ(μ(e_j,e_k), e_p)` when `q = i`, of `μ(μ(e_k,e_i), e_p)` when `q = j`
    /// and of `μ(μ(e_i,e_j), e_p)` when `q = k`.
    pub fn build(algebra: &SkewAlgebra) -> Self {
        let n = algebra.dim();
        let field = algebra.field();
        // nested[(a-1)*n + (b-1)][p-1] = μ(μ(e_a,e_b), e_p)
        let nested: Vec<Vec<Vector>> = (1..=n)
            .flat_map(|a| (1..=n).map(move |b| (a, b)))
            .map(|(a, b)| {
                let ab = Vector::new(algebra.basis_product(a, b).to_vec());
                (1..=n)
                    .map(|p| algebra.multiply(&ab, &algebra.basis(p)).expect("same algebra"))
                    .collect()
            })
            .collect();
        let block = |a: usize, b: usize, p: usize| &nested[(a - 1) * n + (b - 1)][p - 1];

        let mut m = Matrix::zeros(field, row_count(n), n * n);
        for (t, (i, j, k)) in triples(n).into_iter().enumerate() {
            for (q, (a, b)) in [(i, (j, k)), (j, (k, i)), (k, (i, j))] {
                for p in 1..=n {
                    for (l, x) in block(a, b, p).coords().iter().enumerate() {
                        m.set(t * n + l, column_index(n, p, q), x.clone());
                    }
                }
            }
        }
        HomJacobiMatrix { dim: n, matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.cols() - self.rank()
    }

    pub fn kernel_basis(&self) -> KernelBasis {
        let field = self.field();
        let maps = self
            .matrix
            .kernel()
            .into_iter()
            .map(|v| LinearMap::from_flat(field, self.dim, &v).expect("n² coordinates"))
            .collect();
        KernelBasis { dim: self.dim, maps }
    }

    /// Bareiss determinant; only square when `n = 4` (or the empty `n <= 2` case).
    pub fn determinant(&self) -> Result<Scalar> {
        self.determinant_with(&determinant::Bareiss)
    }

    pub fn determinant_with(&self, method: &dyn DeterminantMethod) -> Result<Scalar> {
        if self.dim <= 2 {
            return Ok(self.field().one());
        }
        method.determinant(&self.matrix)
    }

    /// Whether `M_μ · v_f = 0`.
    pub fn annihilates(&self, f: &LinearMap) -> Result<bool> {
        f.check_compatible(self.dim, self.field())?;
        Ok(self.matrix.mul_vec(&f.flatten())?.iter().all(Scalar::is_zero))
    }

    /// Columns of `M_μ` belonging to the support, ordered by `(q, p)`.
    pub fn restrict_columns(&self, support: &SupportPattern) -> Result<Matrix> {
        if support.dim() != self.dim {
            return Err(Error::Support(format!(
                "pattern for dimension {} against matrix for dimension {}",
                support.dim(),
                self.dim
            )));
        }
        self.matrix.select_columns(&support.columns())
    }
}

/// Canonical basis of the Hom-Lie twisting maps of one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub dim: usize,
    pub maps: Vec<LinearMap>,
}

impl KernelBasis {
    pub fn nullity(&self) -> usize {
        self.maps.len()
    }
}

/// One evaluated triple of the Hom-Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleDefect {
    pub triple: (usize, usize, usize),
    pub defect: Vector,
}

/// `μ(μ(e_i,e_j),f(e_k)) + μ(μ(e_j,e_k),f(e_i)) + μ(μ(e_k,e_i),f(e_j))` for
/// every triple, evaluated through the product without building `M_μ`.
pub fn hom_jacobi_defect(algebra: &SkewAlgebra, f: &LinearMap) -> Result<Vec<TripleDefect>> {
    f.check_compatible(algebra.dim(), algebra.field())?;
    let e = |i| algebra.basis(i);
    let image = |i| f.column(i);
    triples(algebra.dim())
        .into_iter()
        .map(|(i, j, k)| {
            let a = algebra.multiply(&algebra.multiply(&e(i), &e(j))?, &image(k))?;
            let b = algebra.multiply(&algebra.multiply(&e(j), &e(k))?, &image(i))?;
            let c = algebra.multiply(&algebra.multiply(&e(k), &e(i))?, &image(j))?;
            Ok(TripleDefect {
                triple: (i, j, k),
                defect: a.add(&b).add(&c),
            })
        })
        .collect()
}

pub fn is_in_kernel(algebra: &SkewAlgebra, f: &LinearMap) -> Result<bool> {
    HomJacobiMatrix::build(algebra).annihilates(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieVerdict {
    pub is_hom_lie: bool,
    pub nullity: usize,
    /// First canonical kernel vector, present iff `is_hom_lie`.
    pub witness: Option<LinearMap>,
}

/// An algebra is Hom-Lie when some nonzero map satisfies the Hom-Jacobi
/// identity, i.e. when `M_μ` has a nontrivial kernel.
pub fn is_hom_lie(algebra: &SkewAlgebra) -> HomLieVerdict {
    let kernel = HomJacobiMatrix::build(algebra).kernel_basis();
    HomLieVerdict {
        is_hom_lie: kernel.nullity() > 0,
        nullity: kernel.nullity(),
        witness: kernel.maps.into_iter().next(),
    }
}

/// The entries of `f` allowed to be nonzero in a restricted system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPattern {
    dim: usize,
    /// `(q, p)` pairs, so iteration order is column order.
    positions: BTreeSet<(usize, usize)>,
}

impl SupportPattern {
    /// Builds a pattern from `(p, q)` positions (1-based).
    pub fn new(dim: usize, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (p, q) in positions {
            if p < 1 || q < 1 || p > dim || q > dim {
                return Err(Error::Support(format!(
                    "position ({p},{q}) outside 1..={dim}"
                )));
            }
            set.insert((q, p));
        }
        if set.is_empty() {
            return Err(Error::Support("empty support".into()));
        }
        Ok(SupportPattern {
            dim,
            positions: set,
        })
    }

    /// Resolves a named rule (`diag`, `bidiag`, `full`) or parses an
    /// explicit list `p,q;p,q;...`.
    pub fn parse(spec: &str, dim: usize) -> Result<Self> {
        if let Some(rule) = support_rules().get(spec.trim()) {
            return rule.pattern(dim);
        }
        let mut positions = Vec::new();
        for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let parsed = item
                .split_once(',')
                .and_then(|(p, q)| Some((p.trim().parse().ok()?, q.trim().parse().ok()?)));
            match parsed {
                Some(pq) => positions.push(pq),
                None => {
                    return Err(Error::Support(format!(
                        "cannot read {item:?}; expected one of {} or a list like \"1,1;2,2\"",
                        support_rules().names().join(", ")
                    )))
                }
            }
        }
        SupportPattern::new(dim, positions)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `(p, q)` positions in column order.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.positions.iter().map(|&(q, p)| (p, q)).collect()
    }

    pub fn columns(&self) -> Vec<usize> {
        self.positions
            .iter()
            .map(|&(q, p)| column_index(self.dim, p, q))
            .collect()
    }

    /// Zero-pads a solution of the restricted system into a full map.
    pub fn embed(&self, field: FieldSpec, values: &[Scalar]) -> Result<LinearMap> {
        if values.len() != self.len() {
            return Err(Error::Shape(format!(
                "{} values for a support of size {}",
                values.len(),
                self.len()
            )));
        }
        let mut flat = vec![field.zero(); self.dim * self.dim];
        for (c, v) in self.columns().into_iter().zip(values) {
            flat[c] = v.clone();
        }
        LinearMap::from_flat(field, self.dim, &flat)
    }
}

pub trait SupportRule: Named + Send + Sync {
    fn pattern(&self, dim: usize) -> Result<SupportPattern>;
}

/// Diagonal maps `a_{i,i}`.
pub struct Diagonal;

impl Named for Diagonal {
    fn name(&self) -> &'static str {
        "diag"
    }
}

impl SupportRule for Diagonal {
    fn pattern(&self, dim: usize) -> Result<SupportPattern> {
        SupportPattern::new(dim, (1..=dim).map(|i| (i, i)))
    }
}

/// Upper bidiagonal maps `a_{i,i}`, `a_{i,i+1}`; the shape of a triangularized
/// endomorphism with at most one superdiagonal.
pub struct Bidiagonal;

impl Named for Bidiagonal {
    fn name(&self) -> &'static str {
        "bidiag"
    }
}

impl SupportRule for Bidiagonal {
    fn pattern(&self, dim: usize) -> Result<SupportPattern> {
        SupportPattern::new(
            dim,
            (1..=dim).flat_map(|i| std::iter::once((i, i)).chain((i < dim).then_some((i, i + 1)))),
        )
    }
}

pub struct Full;

impl Named for Full {
    fn name(&self) -> &'static str {
        "full"
    }
}

impl SupportRule for Full {
    fn pattern(&self, dim: usize) -> Result<SupportPattern> {
        SupportPattern::new(dim, (1..=dim).flat_map(|p| (1..=dim).map(move |q| (p, q))))
    }
}

static SUPPORT_RULES: LazyLock<Registry<dyn SupportRule>> = LazyLock::new(|| {
    let mut reg: Registry<dyn SupportRule> = Registry::new("support rule");
    reg.register(Arc::new(Diagonal));
    reg.register(Arc::new(Bidiagonal));
    reg.register(Arc::new(Full));
    reg
});

pub fn support_rules() -> &'static Registry<dyn SupportRule> {
    &SUPPORT_RULES
}

/// Rank histogram of the bidiagonal-support restriction over `count` random
/// 4-dimensional algebras; sample `i` uses seed `derive_seed(seed, i)`.
pub fn generic_reduced_rank(count: usize, field: FieldSpec, seed: u64) -> Result<BTreeMap<usize, usize>> {
    if field == FieldSpec::Rational {
        return Err(Error::Argument("reduced-rank sampling needs a prime field".into()));
    }
    let support = Bidiagonal.pattern(4)?;
    let ranks: Vec<usize> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let a = SkewAlgebra::random(4, field, random::derive_seed(seed, i), 0)?;
            Ok(HomJacobiMatrix::build(&a).restrict_columns(&support)?.rank())
        })
        .collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for r in ranks {
        *histogram.entry(r).or_insert(0) += 1;
    }
    Ok(histogram)
}
