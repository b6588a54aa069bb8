//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any failed.

use std::collections::HashMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use homlie_core::catalog::{self, catalog};
use homlie_core::formats::{MatrixCodec, PlainText};
use homlie_core::lab::{self, genericity_experiment, invariance_battery, sample_algebra};
use homlie_core::system::generic_reduced_rank;
use homlie_core::{
    hom_jacobi_defect, is_hom_lie, is_in_kernel, random, FieldSpec, HomJacobiMatrix, LinearMap,
    Matrix, Modulus, Scalar, SkewAlgebra,
};

const P: u64 = 10007;

/// Determinant of the correctly built matrix of the 4-dimensional
/// counterexample, frozen from an exact Bareiss run and an independent
/// symbolic computation.
const COUNTEREXAMPLE_DET: i64 = 7574844564;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn fp() -> FieldSpec {
    FieldSpec::prime(P).unwrap()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, run: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = run();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            o.passed = false;
        }
        o.detail = format!("{}; {:.3}s (limit {:.1}s)", o.detail, elapsed.as_secs_f64(), limit.as_secs_f64());
    } else {
        o.detail = format!("{}; {:.3}s", o.detail, elapsed.as_secs_f64());
    }
    o
}

// C1
fn golden_matrix() -> Outcome {
    let text = std::fs::read_to_string(fixture("counterexample4.printed.txt")).unwrap();
    let printed = PlainText.decode(&text, FieldSpec::Rational).unwrap();
    let built = HomJacobiMatrix::build(&catalog::counterexample4(FieldSpec::Rational));
    let m = built.matrix();
    if (m.rows(), m.cols()) != (printed.rows(), printed.cols()) {
        return outcome(false, format!("shape {}x{} vs printed {}x{}", m.rows(), m.cols(), printed.rows(), printed.cols()));
    }
    let mut mismatches = Vec::new();
    for r in 0..16 {
        for c in 0..16 {
            if m.get(r, c) != printed.get(r, c) {
                mismatches.push(format!("({},{}) built {} printed {}", r + 1, c + 1, m.get(r, c), printed.get(r, c)));
            }
        }
    }
    let shown: Vec<_> = mismatches.iter().take(4).cloned().collect();
    outcome(
        mismatches.is_empty(),
        format!("{}/256 entries differ from the printed matrix [{} ...]", mismatches.len(), shown.join("; ")),
    )
}

/// Cofactor expansion along the first remaining row, memoized over the set
/// of remaining columns, in plain u64 arithmetic mod p.
fn cofactor_det_mod(rows: &[Vec<i64>], p: u64) -> u64 {
    let n = rows.len();
    let a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut memo: HashMap<u32, u64> = HashMap::new();
    fn go(mask: u32, n: usize, a: &[Vec<u64>], p: u64, memo: &mut HashMap<u32, u64>) -> u64 {
        if mask == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let row = n - mask.count_ones() as usize;
        let mut total: u64 = 0;
        let mut position = 0;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = a[row][c];
            if entry != 0 {
                let minor = go(mask & !(1 << c), n, a, p, memo);
                let term = (entry as u128 * minor as u128 % p as u128) as u64;
                total = if position % 2 == 0 { (total + term) % p } else { (total + p - term) % p };
            }
            position += 1;
        }
        memo.insert(mask, total);
        total
    }
    go((1u32 << n) - 1, n, &a, p, &mut memo)
}

fn integer_rows(m: &Matrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| i64::try_from(x.to_integer().unwrap()).unwrap()).collect())
        .collect()
}

// C2
fn counterexample_determinant() -> Outcome {
    let q = FieldSpec::Rational;
    let a = catalog::counterexample4(q);
    let m = HomJacobiMatrix::build(&a);
    let det = m.determinant().unwrap();
    let frozen = q.from_i64(COUNTEREXAMPLE_DET);
    let verdict = is_hom_lie(&a);
    let rows = integer_rows(m.matrix());
    let mut ok = det == frozen && !det.is_zero() && !verdict.is_hom_lie && verdict.witness.is_none();
    let mut checks = Vec::new();
    for p in [10007u64, 1_000_003, 2_147_483_647] {
        let by_cofactor = cofactor_det_mod(&rows, p);
        let by_bareiss = det.reduce_mod(Modulus::new(p).unwrap()).unwrap();
        let agree = by_bareiss.to_string() == by_cofactor.to_string();
        ok &= agree;
        checks.push(format!("mod {p}: {}", if agree { "agree" } else { "DISAGREE" }));
    }
    outcome(ok, format!("det = {det}, is_hom_lie = {}, cofactor check {}", verdict.is_hom_lie, checks.join(", ")))
}

// C3
fn dimension_three_theorem() -> Outcome {
    let report = genericity_experiment(3, 1000, fp(), 3, 0).unwrap();
    let all_six = report.histogram.keys().all(|&k| k >= 6);
    let hom_lie = (0..1000u64).all(|i| is_hom_lie(&sample_algebra(3, fp(), 3, i, 0).unwrap()).is_hom_lie);
    outcome(
        all_six && hom_lie && report.full_rank == 0,
        format!("nullity histogram {:?}", report.histogram),
    )
}

// C4
fn dimension_four_genericity() -> Outcome {
    let nonzero = (0..1000u64)
        .filter(|&i| {
            let a = sample_algebra(4, fp(), 4, i, 0).unwrap();
            !HomJacobiMatrix::build(&a).determinant().unwrap().is_zero()
        })
        .count();
    outcome(nonzero >= 990, format!("det != 0 in {nonzero}/1000 (need >= 990)"))
}

// C5
fn dimension_five_genericity() -> Outcome {
    let report = genericity_experiment(5, 200, fp(), 5, 0).unwrap();
    outcome(
        report.full_rank * 100 >= 99 * 200,
        format!("rank 25 in {}/200 (need >= 198), histogram {:?}", report.full_rank, report.histogram),
    )
}

// C6
fn reduced_system() -> Outcome {
    let histogram = generic_reduced_rank(1000, fp(), 6).unwrap();
    let rank7 = histogram.get(&7).copied().unwrap_or(0);
    outcome(rank7 >= 990, format!("rank 7 in {rank7}/1000 (need >= 990), histogram {histogram:?}"))
}

// C7
fn lie_catalog() -> Outcome {
    let q = FieldSpec::Rational;
    let wanted = ["abelian3", "abelian4", "abelian5", "heisenberg3", "cross_product3", "sl2_plus_k4"];
    let mut failures = Vec::new();
    for name in wanted {
        let entry = catalog::by_name(name, q).unwrap();
        let a = &entry.algebra;
        let id = LinearMap::identity(q, a.dim());
        if !(a.is_lie() && is_in_kernel(a, &id).unwrap() && is_hom_lie(a).is_hom_lie) {
            failures.push(name.to_string());
        }
    }
    let cp = catalog::cross_product3(q);
    let nullity = is_hom_lie(&cp).nullity;
    let one = q.one();
    let mut symmetric_ok = true;
    for p in 1..=3 {
        for r in p..=3 {
            let mut f = LinearMap::elementary(q, 3, p, r, one.clone()).matrix().clone();
            f.set(r - 1, p - 1, one.clone());
            symmetric_ok &= is_in_kernel(&cp, &LinearMap::from_matrix(f).unwrap()).unwrap();
        }
    }
    let mut anti = LinearMap::elementary(q, 3, 1, 2, one.clone()).matrix().clone();
    anti.set(1, 0, -&one);
    let anti_excluded = !is_in_kernel(&cp, &LinearMap::from_matrix(anti).unwrap()).unwrap();
    outcome(
        failures.is_empty() && nullity == 6 && symmetric_ok && anti_excluded,
        format!(
            "failures {failures:?}; cross_product3 nullity {nullity}, symmetric maps in kernel: {symmetric_ok}, antisymmetric excluded: {anti_excluded}"
        ),
    )
}

fn random_map(n: usize, field: FieldSpec, seed: u64) -> LinearMap {
    let mut rng = random::rng(seed);
    let flat: Vec<Scalar> = (0..n * n).map(|_| random::scalar(&mut rng, field, 5)).collect();
    LinearMap::from_flat(field, n, &flat).unwrap()
}

// C8
fn oracle_equivalence() -> Outcome {
    let mut kernel_vectors = 0;
    let mut kernel_ok = 0;
    let mut non_kernel = 0;
    let mut agree = 0;
    for i in 0..100u64 {
        let n = 3 + (i % 3) as usize;
        let field = if i % 2 == 0 { fp() } else { FieldSpec::Rational };
        let a = sample_algebra(n, field, 8, i, 4).unwrap();
        let m = HomJacobiMatrix::build(&a);
        for f in m.kernel_basis().maps {
            kernel_vectors += 1;
            if hom_jacobi_defect(&a, &f).unwrap().iter().all(|d| d.defect.is_zero()) {
                kernel_ok += 1;
            }
        }
        let f = random_map(n, field, random::derive_seed(88, i));
        let in_kernel = m.annihilates(&f).unwrap();
        if !in_kernel {
            non_kernel += 1;
        }
        let defect_zero = hom_jacobi_defect(&a, &f).unwrap().iter().all(|d| d.defect.is_zero());
        if in_kernel == defect_zero {
            agree += 1;
        }
    }
    outcome(
        kernel_ok == kernel_vectors && agree == 100 && non_kernel == 100,
        format!(
            "kernel vectors with zero defect {kernel_ok}/{kernel_vectors}; random maps agreeing {agree}/100 ({non_kernel} outside the kernel)"
        ),
    )
}

// C9
fn invariance() -> Outcome {
    let q = FieldSpec::Rational;
    let mut algebras: Vec<(String, SkewAlgebra)> =
        catalog(q).into_iter().map(|e| (e.name.to_string(), e.algebra)).collect();
    for (i, n) in [3usize, 4, 3].into_iter().enumerate() {
        algebras.push((format!("random{n}#{i}"), sample_algebra(n, q, 9, i as u64, 3).unwrap()));
    }
    let mut failures = Vec::new();
    for (i, (name, a)) in algebras.iter().enumerate() {
        if !invariance_battery(a, 200, 900 + i as u64).unwrap() {
            failures.push(name.clone());
        }
    }
    outcome(
        failures.is_empty() && algebras.len() == 10,
        format!("{} algebras x 200 transports, failures {failures:?}", algebras.len()),
    )
}

// C10
fn structural_counts() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=7usize {
        for (k, field) in [fp(), FieldSpec::Rational].into_iter().enumerate() {
            let a = sample_algebra(n, field, 10, k as u64, 3).unwrap();
            let m = HomJacobiMatrix::build(&a);
            let rows_ok = m.rows() == n * n * (n - 1) * (n - 2) / 6 && m.cols() == n * n;
            let rank_nullity_ok = m.rank() + m.kernel_basis().nullity() == n * n;
            if !(rows_ok && rank_nullity_ok) {
                bad.push((n, field.to_string()));
            }
        }
    }
    for entry in catalog(FieldSpec::Rational) {
        let m = HomJacobiMatrix::build(&entry.algebra);
        if m.rank() + m.kernel_basis().nullity() != m.cols() {
            bad.push((entry.algebra.dim(), entry.name.to_string()));
        }
    }
    outcome(bad.is_empty(), format!("n = 3..7 over Q and F_{P}, plus catalog; failures {bad:?}"))
}

// C11
fn field_consistency() -> Outcome {
    let p = Modulus::new(P).unwrap();
    let mut equal = 0;
    let mut exceeded = 0;
    let mut reduction_mismatch = 0;
    for i in 0..100u64 {
        let n = 3 + (i % 3) as usize;
        let a = sample_algebra(n, FieldSpec::Rational, 11, i, lab::DEFAULT_BOUND).unwrap();
        let over_q = HomJacobiMatrix::build(&a);
        let reduced = over_q.matrix().try_map(FieldSpec::Prime(p), |x| x.reduce_mod(p)).unwrap();
        let nullity_q = over_q.nullity();
        let nullity_p = reduced.cols() - reduced.rank();
        // the reduced algebra must give the same matrix as reducing the matrix
        let a_p = SkewAlgebra::new(
            n,
            FieldSpec::Prime(p),
            a.constants().iter().map(|(&(i, j), c)| (i, j, c.iter().map(|x| x.reduce_mod(p).unwrap()).collect())),
        )
        .unwrap();
        if HomJacobiMatrix::build(&a_p).matrix() != &reduced {
            reduction_mismatch += 1;
        }
        if nullity_q == nullity_p {
            equal += 1;
        }
        if nullity_q > nullity_p {
            exceeded += 1;
        }
    }
    outcome(
        equal >= 99 && exceeded == 0 && reduction_mismatch == 0,
        format!(
            "equal nullity in {equal}/100 (need >= 99); Q nullity above F_p nullity in {exceeded} trials; \
             reduced algebra disagreeing with reduced matrix in {reduction_mismatch}"
        ),
    )
}

fn main() {
    let criteria: Vec<(&str, Option<Duration>, fn() -> Outcome)> = vec![
        ("C1 golden 16x16 matrix", Some(Duration::from_millis(100)), golden_matrix),
        ("C2 counterexample determinant", None, counterexample_determinant),
        ("C3 dimension-3 theorem", Some(Duration::from_secs(10)), dimension_three_theorem),
        ("C4 dimension-4 genericity", Some(Duration::from_secs(60)), dimension_four_genericity),
        ("C5 dimension-5 genericity", Some(Duration::from_secs(120)), dimension_five_genericity),
        ("C6 reduced 16x7 system", None, reduced_system),
        ("C7 Lie catalog", None, lie_catalog),
        ("C8 oracle equivalence", None, oracle_equivalence),
        ("C9 isomorphism invariance", None, invariance),
        ("C10 structural counts", None, structural_counts),
        ("C11 field consistency", None, field_consistency),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let o = timed(limit, run);
        if !o.passed {
            failed += 1;
        }
        println!("[{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} failed", failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
