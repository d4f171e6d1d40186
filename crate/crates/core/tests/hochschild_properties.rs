mod common;

use common::singular_descriptor_strategy;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use torus_nielsen::hochschild::{
    boundary_d1, boundary_d2, decompose_components, homology_coefficients, marker, reduce_to_canonical, same_class,
    tensor_trace, Chain1, Chain2, ClassRelation, GroupElement, RingElement, RingMatrix,
};
use torus_nielsen::intlin::{rank, IntMatrix};
use torus_nielsen::nielsen::reduce_basis;
use torus_nielsen::HomotopyDescriptor;

fn element(n: usize, bound: i64) -> impl Strategy<Value = GroupElement> {
    proptest::collection::vec(-bound..=bound, n).prop_map(|v| GroupElement::from_i64(&v))
}

fn chain2(phi: IntMatrix, max_terms: usize) -> impl Strategy<Value = Chain2> {
    let n = phi.rows();
    proptest::collection::vec((-3i64..=3, element(n, 4), element(n, 4), element(n, 4)), 0..=max_terms).prop_map(
        move |terms| {
            let mut ch = Chain2::new(phi.clone()).unwrap();
            for (a, b, d, e) in terms {
                ch.add_term(a, b, d, e).unwrap();
            }
            ch
        },
    )
}

fn phi_and_chain2() -> impl Strategy<Value = Chain2> {
    (1usize..=3)
        .prop_flat_map(|n| common::matrix_strategy(n, n, 3))
        .prop_flat_map(|phi| chain2(phi, 6))
}

/// A reduced descriptor with `rank(φ − I) = n − 1`.
fn reduced_corank_one() -> impl Strategy<Value = HomotopyDescriptor> {
    singular_descriptor_strategy(1..=3, 3).prop_filter_map("needs corank one", |d| {
        let reduced = reduce_basis(&d).ok()?.reduced;
        (rank(&reduced.phi_minus_identity()) + 1 == reduced.n()).then_some(reduced)
    })
}

/// `Σ a_i u1^{k_i} ⊗ D_i + d2(x)`: a cycle whose class is known.
fn cycle_with_boundary() -> impl Strategy<Value = (HomotopyDescriptor, Chain1, Chain1)> {
    reduced_corank_one().prop_flat_map(|desc| {
        let n = desc.n();
        let phi = desc.phi().clone();
        (
            Just(desc),
            proptest::collection::vec((-3i64..=3, -4i64..=4, element(n, 3)), 0..=4),
            chain2(phi, 3),
        )
            .prop_map(|(desc, cycle_terms, x)| {
                let n = desc.n();
                let mut cycle = Chain1::new(desc.phi().clone()).unwrap();
                for (a, k, d) in cycle_terms {
                    cycle.add_term(a, GroupElement::generator_power(n, 0, k), d).unwrap();
                }
                let mut full = cycle.clone();
                full.add_scaled(&boundary_d2(&x), &BigInt::from(1)).unwrap();
                (desc, cycle, full)
            })
    })
}

fn ring(n: usize) -> impl Strategy<Value = RingElement> {
    proptest::collection::vec((-3i64..=3, element(n, 3)), 0..=3).prop_map(RingElement::from_terms)
}

fn ring_matrix(n: usize, size: usize) -> impl Strategy<Value = RingMatrix> {
    proptest::collection::vec(proptest::collection::vec(ring(n), size), size)
        .prop_map(|rows| RingMatrix::from_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_of_boundary_vanishes(ch in phi_and_chain2()) {
        prop_assert!(boundary_d1(&boundary_d2(&ch)).is_zero());
    }

    #[test]
    fn unit_prefix_is_a_boundary(phi in common::matrix_strategy(2, 2, 3), m in element(2, 6)) {
        let id = GroupElement::identity(2);
        let x = Chain2::new(phi.clone()).unwrap().with_term(1, id.clone(), id.clone(), m.clone()).unwrap();
        let expected = Chain1::new(phi).unwrap().with_term(1, id, m).unwrap();
        prop_assert_eq!(boundary_d2(&x), expected);
    }

    #[test]
    fn reduction_is_sound((_desc, _cycle, full) in cycle_with_boundary()) {
        let red = reduce_to_canonical(&full).unwrap();
        let u1 = GroupElement::generator_power(full.dim(), 0, 1);
        prop_assert!(red.canonical.terms().all(|(b, _, _)| *b == u1));
        let mut check = red.canonical.clone();
        check.add_scaled(&boundary_d2(&red.certificate), &BigInt::from(1)).unwrap();
        prop_assert_eq!(check, full);
    }

    #[test]
    fn class_coefficients_ignore_boundaries((desc, cycle, full) in cycle_with_boundary()) {
        let relation = ClassRelation::new(&desc);
        let keyed = |ch: &Chain1| -> std::collections::BTreeMap<Vec<BigInt>, BigInt> {
            let canonical = reduce_to_canonical(ch).unwrap().canonical;
            homology_coefficients(&canonical, &desc)
                .unwrap()
                .into_iter()
                .map(|(g, k)| (relation.key(&g).unwrap(), k))
                .collect()
        };
        prop_assert_eq!(keyed(&full), keyed(&cycle));

        // Independent count: u1^k ⊗ D contributes k to the class of its marker.
        let mut by_key: std::collections::BTreeMap<Vec<BigInt>, BigInt> = Default::default();
        for (b, d, a) in cycle.terms() {
            *by_key.entry(relation.key(&marker(b, d)).unwrap()).or_default() += a * &b.exponents()[0];
        }
        by_key.retain(|_, v| !v.is_zero());
        let keyed = keyed(&cycle);
        prop_assert_eq!(keyed, by_key);
    }

    #[test]
    fn same_class_is_an_equivalence(
        desc in common::descriptor_strategy(2..=2, 3),
        g1 in element(2, 5),
        g2 in element(2, 5),
        g3 in element(2, 5),
    ) {
        prop_assert!(same_class(&g1, &g1, &desc).unwrap());
        let a = same_class(&g1, &g2, &desc).unwrap();
        prop_assert_eq!(a, same_class(&g2, &g1, &desc).unwrap());
        if a && same_class(&g2, &g3, &desc).unwrap() {
            prop_assert!(same_class(&g1, &g3, &desc).unwrap());
        }
        let shift = desc.class_matrix().mul_vec(&[1, -2, 1].map(BigInt::from)).unwrap();
        let moved = g1.mul(&GroupElement::new(shift));
        prop_assert!(same_class(&g1, &moved, &desc).unwrap());
    }

    #[test]
    fn decomposition_partitions_the_chain(desc in common::descriptor_strategy(2..=2, 3), x in chain2(IntMatrix::identity(2), 4)) {
        let ch = {
            let mut ch = Chain1::new(desc.phi().clone()).unwrap();
            for (b, d, e, a) in x.terms() {
                ch.add_term(a.clone(), b.mul(e), d.clone()).unwrap();
            }
            ch
        };
        let parts = decompose_components(&ch, &desc).unwrap();
        let mut union = Chain1::new(desc.phi().clone()).unwrap();
        for (rep, part) in &parts {
            for (b, d, _) in part.terms() {
                prop_assert!(same_class(rep, &marker(b, d), &desc).unwrap());
                prop_assert!(rep <= &marker(b, d));
            }
            union.add_scaled(part, &BigInt::from(1)).unwrap();
        }
        prop_assert_eq!(union, ch);
        let reps: Vec<&GroupElement> = parts.keys().collect();
        for (i, r) in reps.iter().enumerate() {
            for s in &reps[i + 1..] {
                prop_assert!(!same_class(r, s, &desc).unwrap());
            }
        }
    }

    #[test]
    fn trace_is_bilinear_and_signed(
        phi in common::matrix_strategy(2, 2, 2),
        p1 in ring_matrix(2, 2),
        p2 in ring_matrix(2, 2),
        q in ring_matrix(2, 2),
    ) {
        let sum = tensor_trace(&phi, &p1.add(&p2).unwrap(), &q, 1).unwrap();
        let mut parts = tensor_trace(&phi, &p1, &q, 1).unwrap();
        parts.add_scaled(&tensor_trace(&phi, &p2, &q, 1).unwrap(), &BigInt::from(1)).unwrap();
        prop_assert_eq!(&sum, &parts);
        let mut neg = tensor_trace(&phi, &p1, &q, -1).unwrap();
        neg.add_scaled(&tensor_trace(&phi, &p1, &q, 1).unwrap(), &BigInt::from(1)).unwrap();
        prop_assert!(neg.is_empty());
    }
}
