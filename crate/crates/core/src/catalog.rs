//! Named algebras with known Hom-Lie data, used as regression fixtures.

use crate::algebra::SkewAlgebra;
use crate::field::FieldSpec;

/// `μ(e1,e2) = e3` only.
pub fn heisenberg3(field: FieldSpec) -> SkewAlgebra {
    SkewAlgebra::from_i64(3, field, &[(1, 2, vec![0, 0, 1])]).expect("valid constants")
}

/// The cross product on `K^3`: `μ(e1,e2)=e3, μ(e2,e3)=e1, μ(e1,e3)=-e2`.
pub fn cross_product3(field: FieldSpec) -> SkewAlgebra {
    SkewAlgebra::from_i64(
        3,
        field,
        &[(1, 2, vec![0, 0, 1]), (1, 3, vec![0, -1, 0]), (2, 3, vec![1, 0, 0])],
    )
    .expect("valid constants")
}

/// A 4-dimensional skew algebra whose Hom-Jacobi matrix is invertible, so the
/// only map satisfying the Hom-Jacobi identity is zero.
pub fn counterexample4(field: FieldSpec) -> SkewAlgebra {
    SkewAlgebra::from_i64(
        4,
        field,
        &[
            (1, 2, vec![0, 1, 2, -1]),
            (1, 3, vec![1, 2, -1, 0]),
            (1, 4, vec![2, -1, 0, 1]),
            (2, 3, vec![-1, 0, 1, 2]),
            (2, 4, vec![1, 2, -1, 3]),
            (3, 4, vec![-2, -1, 1, 2]),
        ],
    )
    .expect("valid constants")
}

/// `sl(2) ⊕ K` with `h, e, f = e1, e2, e3` and `e4` central.
pub fn sl2_plus_k4(field: FieldSpec) -> SkewAlgebra {
    SkewAlgebra::from_i64(
        4,
        field,
        &[(1, 2, vec![0, 2, 0, 0]), (1, 3, vec![0, 0, -2, 0]), (2, 3, vec![1, 0, 0, 0])],
    )
    .expect("valid constants")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectations {
    pub is_lie: bool,
    pub is_hom_lie: bool,
    pub nullity: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub name: &'static str,
    pub algebra: SkewAlgebra,
    pub expected: Expectations,
}

/// The built-in catalog over `field`.
pub fn catalog(field: FieldSpec) -> Vec<NamedAlgebra> {
    let entry = |name, algebra, is_lie, is_hom_lie, nullity| NamedAlgebra {
        name,
        algebra,
        expected: Expectations {
            is_lie,
            is_hom_lie,
            nullity: Some(nullity),
        },
    };
    let abelian = |n| SkewAlgebra::abelian(n, field).expect("positive dimension");
    vec![
        entry("abelian3", abelian(3), true, true, 9),
        entry("abelian4", abelian(4), true, true, 16),
        entry("abelian5", abelian(5), true, true, 25),
        entry("heisenberg3", heisenberg3(field), true, true, 9),
        entry("cross_product3", cross_product3(field), true, true, 6),
        entry("counterexample4", counterexample4(field), false, false, 0),
        entry("sl2_plus_k4", sl2_plus_k4(field), true, true, 10),
    ]
}

pub fn by_name(name: &str, field: FieldSpec) -> Option<NamedAlgebra> {
    catalog(field).into_iter().find(|a| a.name == name)
}
