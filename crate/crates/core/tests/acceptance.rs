//! Acceptance suite. Prints one PASS/FAIL line per criterion; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{conjugate, random_singular_descriptor, random_unimodular};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torus_nielsen::apps::{bundle_s1_min_circles, bundle_t2_min_circles, T2BundleMapData};
use torus_nielsen::hochschild::{boundary_d1, boundary_d2, reduce_to_canonical, Chain1, Chain2, GroupElement};
use torus_nielsen::intlin::{exact_determinant, rank, IntMatrix};
use torus_nielsen::nielsen::{jezierski_d, lefschetz_class, nielsen_by_invariant_factors, semicentralizer};
use torus_nielsen::oracle::{fixed_set_exact, fixed_set_grid, LinearHomotopy};
use torus_nielsen::{one_param_nielsen, HomotopyDescriptor, NielsenCase};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, detail: String) -> Outcome {
    match failures.first() {
        None => Outcome { passed: true, detail },
        Some(first) => Outcome {
            passed: false,
            detail: format!("{detail}; {} failure(s), first: {first}", failures.len()),
        },
    }
}

fn desc<R: AsRef<[i64]>>(phi: &[R], c: &[i64]) -> HomotopyDescriptor {
    HomotopyDescriptor::from_i64(phi, c).unwrap()
}

fn circle_case() -> Outcome {
    let mut failures = Vec::new();
    for c in -5i64..=5 {
        let d = desc(&[[1]], &[c]);
        let n = one_param_nielsen(&d).nielsen;
        let geometric = fixed_set_exact(&LinearHomotopy::generic(d, 0)).component_count;
        if n != BigInt::from(c.abs()) || geometric != n {
            failures.push(format!("c = {c}: N = {n}, oracle = {geometric}"));
        }
    }
    outcome(failures, "c in -5..=5, N = |c| = exact oracle count".into())
}

fn three_routes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut failures = Vec::new();
    let mut full_rank = 0;
    let total = 600;
    for i in 0..total {
        let n = if i % 2 == 0 { 2 } else { 3 };
        let d = random_singular_descriptor(&mut rng, n, 3);
        let by_reduction = one_param_nielsen(&d).nielsen;
        let by_factors = nielsen_by_invariant_factors(&d);
        let by_minors = jezierski_d(&d);
        if by_reduction.is_positive() {
            full_rank += 1;
        }
        if by_reduction != by_factors || by_reduction != by_minors {
            failures.push(format!("{d:?}: {by_reduction} / {by_factors} / {by_minors}"));
        }
    }
    outcome(failures, format!("{total} singular descriptors (n = 2, 3; entries in [-3, 3]), {full_rank} with N > 0"))
}

/// Fiber-type homotopies on T² with one-parameter Nielsen number at most 12.
fn curated_planar_cases() -> Vec<(HomotopyDescriptor, u32)> {
    vec![
        (desc(&[[1, 1], [0, 2]], &[0, 1]), 1),
        (desc(&[[1, 1], [0, 1]], &[0, 1]), 1),
        (desc(&[[1, 0], [0, 2]], &[1, 0]), 1),
        (desc(&[[1, 0], [0, 2]], &[3, 0]), 3),
        (desc(&[[1, 0], [0, 2]], &[2, 5]), 2),
        (desc(&[[1, 0], [0, 3]], &[2, 0]), 4),
        (desc(&[[1, 0], [0, 0]], &[3, 1]), 3),
        (desc(&[[1, 0], [0, -1]], &[2, 1]), 4),
        (desc(&[[1, 0], [0, -1]], &[1, 0]), 2),
        (desc(&[[1, 0], [0, -2]], &[2, 0]), 6),
        (desc(&[[1, 2], [0, 1]], &[0, 3]), 6),
        (desc(&[[1, 2], [0, 1]], &[5, -1]), 2),
        (desc(&[[1, 1], [0, 3]], &[1, 1]), 1),
        (desc(&[[1, -1], [0, 3]], &[2, 1]), 5),
        (desc(&[[1, 3], [0, 2]], &[1, 0]), 1),
        (desc(&[[1, 0], [0, 5]], &[3, 0]), 12),
        (desc(&[[1, 1], [0, -1]], &[1, 2]), 4),
        (desc(&[[1, 0], [0, 4]], &[3, 2]), 9),
        (desc(&[[1, 0], [2, 1]], &[3, 0]), 6),
        (desc(&[[2, -1], [1, 0]], &[1, 0]), 1),
        (desc(&[[0, 1], [1, 0]], &[1, 0]), 1),
        (desc(&[[3, -2], [2, -1]], &[1, 0]), 2),
        (desc(&[[2, 1], [0, 1]], &[0, 2]), 2),
        (desc(&[[1, 0], [1, 2]], &[2, 0]), 2),
    ]
}

fn geometric_oracle() -> Outcome {
    const RESOLUTION: usize = 192;
    let cases = curated_planar_cases();
    let mut failures = Vec::new();
    for (d, expected) in &cases {
        let r = one_param_nielsen(d);
        let h = LinearHomotopy::generic(d.clone(), 0);
        let exact = fixed_set_exact(&h).component_count;
        let grid = fixed_set_grid(&h, &[RESOLUTION; 3], None).map(|g| g.component_count);
        let expected = BigInt::from(*expected);
        let ok = r.case == NielsenCase::FullRank
            && r.nielsen == expected
            && exact == expected
            && grid.as_ref() == Ok(&expected);
        if !ok {
            failures.push(format!(
                "phi {:?} c {:?}: N = {} ({}), exact = {exact}, grid = {grid:?}",
                d.phi().to_rows(),
                d.c(),
                r.nielsen,
                r.case
            ));
        }
    }
    outcome(
        failures,
        format!("{} curated FULL_RANK cases on T², grid {RESOLUTION}^3 = exact = N", cases.len()),
    )
}

fn rank_deficient_vanishing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut failures = Vec::new();
    let total = 80;
    for i in 0..total {
        let n = 1 + i % 3;
        let base = random_singular_descriptor(&mut rng, n, 3);
        let y = common::random_vec(&mut rng, n, 3);
        let c = base.phi_minus_identity().mul_vec(&y).unwrap();
        let d = HomotopyDescriptor::new(base.phi().clone(), c).unwrap();
        if rank(&d.class_matrix()) >= n {
            failures.push(format!("generator produced a full-rank class matrix for {d:?}"));
            continue;
        }
        let count = fixed_set_exact(&LinearHomotopy::generic(d.clone(), i as u64 % 3)).component_count;
        let r = one_param_nielsen(&d);
        if !count.is_zero() || !r.nielsen.is_zero() || r.case != NielsenCase::RankDeficient {
            failures.push(format!("{d:?}: oracle {count}, N {} ({})", r.nielsen, r.case));
        }
    }
    outcome(failures, format!("{total} descriptors with rank [(M - I) | c] < n, generic offset"))
}

fn random_element<R: Rng>(rng: &mut R, n: usize, bound: i64) -> GroupElement {
    GroupElement::from_i64(&(0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

fn hochschild_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut failures = Vec::new();

    for _ in 0..1000 {
        let n = rng.gen_range(1..=3);
        let phi = common::random_matrix(&mut rng, n, n, 3);
        let mut x = Chain2::new(phi).unwrap();
        for _ in 0..rng.gen_range(1..=5) {
            let coeff = rng.gen_range(-3..=3);
            let (b, d, e) = (random_element(&mut rng, n, 4), random_element(&mut rng, n, 4), random_element(&mut rng, n, 4));
            x.add_term(coeff, b, d, e).unwrap();
        }
        if !boundary_d1(&boundary_d2(&x)).is_zero() {
            failures.push(format!("d1 d2 != 0 on a chain over {:?}", x.phi().to_rows()));
        }
    }

    let reduced_phis = [
        IntMatrix::from_rows(&[[1]]),
        IntMatrix::from_rows(&[[1, 1], [0, 2]]),
        IntMatrix::from_rows(&[[1, -1], [0, 3]]),
        IntMatrix::from_rows(&[[1, 2, 0], [0, 0, 1], [0, 1, 0]]),
    ];
    let mut family = 0;
    for phi in &reduced_phis {
        let n = phi.rows();
        for k in -6i64..=6 {
            for _ in 0..3 {
                let d = random_element(&mut rng, n, 3);
                let u1 = GroupElement::generator_power(n, 0, 1);
                let ch = Chain1::new(phi.clone()).unwrap().with_term(1, GroupElement::generator_power(n, 0, k), d.clone()).unwrap();
                let expected = Chain1::new(phi.clone())
                    .unwrap()
                    .with_term(k, u1, GroupElement::generator_power(n, 0, k - 1).mul(&d))
                    .unwrap();
                family += 1;
                match reduce_to_canonical(&ch) {
                    Ok(red) => {
                        let mut check = red.canonical.clone();
                        check.add_scaled(&boundary_d2(&red.certificate), &BigInt::from(1)).unwrap();
                        if check != ch || red.canonical != expected {
                            failures.push(format!("k = {k}, D = {d} over {:?}", phi.to_rows()));
                        }
                    }
                    Err(e) => failures.push(format!("k = {k}: {e}")),
                }
            }
        }
    }

    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let phi = common::random_matrix(&mut rng, n, n, 3);
        let m = random_element(&mut rng, n, 6);
        let id = GroupElement::identity(n);
        let x = Chain2::new(phi.clone()).unwrap().with_term(1, id.clone(), id.clone(), m.clone()).unwrap();
        if boundary_d2(&x) != Chain1::new(phi).unwrap().with_term(1, id, m.clone()).unwrap() {
            failures.push(format!("d2(1 ⊗ 1 ⊗ {m}) != 1 ⊗ {m}"));
        }
    }
    outcome(
        failures,
        format!("d1 d2 = 0 on 1000 chains; {family} certificates for u1^k ⊗ D, k in -6..=6; 100 unit boundaries"),
    )
}

fn classical_nonzero_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut failures = Vec::new();
    let mut seen = 0;
    while seen < 150 {
        let n = 1 + seen % 3;
        let d = common::random_descriptor(&mut rng, n, 3);
        if exact_determinant(&d.phi_minus_identity()).unwrap().is_zero() {
            continue;
        }
        seen += 1;
        let r = one_param_nielsen(&d);
        let l = lefschetz_class(&d);
        if !semicentralizer(&d).is_empty() || !r.nielsen.is_zero() || r.case != NielsenCase::ClassicalNonzero || !l.is_zero() {
            failures.push(format!("{d:?}"));
        }
    }
    outcome(failures, format!("{seen} descriptors with det(M - I) != 0"))
}

fn application_formulas() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for b12 in -3i64..=3 {
        for b22 in -3i64..=3 {
            for c1 in -3i64..=3 {
                for c2 in -3i64..=3 {
                    count += 1;
                    let d = T2BundleMapData::new(b12, b22, c1, c2);
                    let formula = bundle_t2_min_circles(&d);
                    let nielsen = one_param_nielsen(&d.descriptor()).nielsen;
                    if formula != nielsen {
                        failures.push(format!("b12 {b12} b22 {b22} c ({c1}, {c2}): {formula} vs {nielsen}"));
                    }
                }
            }
        }
    }
    for k in -10i64..=10 {
        let k_big = BigInt::from(k);
        let by_formula = bundle_s1_min_circles(&k_big);
        let by_circle = one_param_nielsen(&desc(&[[1]], &[k])).nielsen;
        if by_formula != k_big.abs() || by_circle != by_formula {
            failures.push(format!("k = {k}: {by_formula} vs {by_circle}"));
        }
    }
    outcome(failures, format!("{count} T² bundle cases and k in -10..=10"))
}

fn conjugation_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut failures = Vec::new();
    let mut nonzero = 0;
    for i in 0..200 {
        let n = 2 + i % 2;
        let d = random_singular_descriptor(&mut rng, n, 3);
        let p = random_unimodular(&mut rng, n, 8);
        let before = one_param_nielsen(&d).nielsen;
        let after = one_param_nielsen(&conjugate(&d, &p)).nielsen;
        if before.is_positive() {
            nonzero += 1;
        }
        if before != after {
            failures.push(format!("{d:?} under {:?}: {before} vs {after}", p.to_rows()));
        }
    }
    outcome(failures, format!("200 random unimodular conjugations, {nonzero} with N > 0"))
}

#[test]
fn acceptance_criteria() {
    type Criterion = (u32, &'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 8] = [
        (1, "circle case", circle_case, Duration::from_secs(1)),
        (2, "three-route agreement", three_routes, Duration::from_secs(10)),
        (3, "geometric oracle", geometric_oracle, Duration::from_secs(60)),
        (4, "rank-deficient vanishing", rank_deficient_vanishing, Duration::from_secs(60)),
        (5, "Hochschild suite", hochschild_suite, Duration::from_secs(60)),
        (6, "nonzero classical number", classical_nonzero_consistency, Duration::from_secs(60)),
        (7, "bundle formulas", application_formulas, Duration::from_secs(60)),
        (8, "conjugation invariance", conjugation_invariance, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let passed = result.passed && in_time;
        println!(
            "criterion {id} {}: {name}: {} [{:.3} s, limit {} s]",
            if passed { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
