#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use torus_nielsen::intlin::{exact_determinant, unimodular_inverse, IntMatrix};
use torus_nielsen::HomotopyDescriptor;

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, entries).unwrap()
}

pub fn random_vec<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect()
}

pub fn random_descriptor<R: Rng>(rng: &mut R, n: usize, bound: i64) -> HomotopyDescriptor {
    HomotopyDescriptor::new(random_matrix(rng, n, n, bound), random_vec(rng, n, bound)).unwrap()
}

pub fn is_singular_shift(desc: &HomotopyDescriptor) -> bool {
    exact_determinant(&desc.phi_minus_identity()).unwrap() == BigInt::from(0)
}

/// Rejection-samples descriptors with `det(φ − I) = 0`.
pub fn random_singular_descriptor<R: Rng>(rng: &mut R, n: usize, bound: i64) -> HomotopyDescriptor {
    loop {
        let d = random_descriptor(rng, n, bound);
        if is_singular_shift(&d) {
            return d;
        }
    }
}

/// Product of random elementary row operations and sign flips.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut rows = IntMatrix::identity(n).to_rows();
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                let f = BigInt::from(rng.gen_range(-2..=2));
                let src = rows[j].clone();
                for (a, b) in rows[i].iter_mut().zip(&src) {
                    *a += &f * b;
                }
            }
            1 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                rows.swap(i, j);
            }
            _ => rows[i].iter_mut().for_each(|a| *a = -a.clone()),
        }
    }
    IntMatrix::from_rows(&rows)
}

/// `(P⁻¹ φ P, P⁻¹ c)`
pub fn conjugate(desc: &HomotopyDescriptor, p: &IntMatrix) -> HomotopyDescriptor {
    let p_inv = unimodular_inverse(p).unwrap();
    let phi = &(&p_inv * desc.phi()) * p;
    HomotopyDescriptor::new(phi, p_inv.mul_vec(desc.c()).unwrap()).unwrap()
}

pub fn matrix_strategy(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-bound..=bound, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap())
}

pub fn sized_matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| matrix_strategy(r, c, bound))
}

pub fn vec_strategy(n: usize, bound: i64) -> impl Strategy<Value = Vec<BigInt>> {
    proptest::collection::vec(-bound..=bound, n).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

pub fn descriptor_strategy(dims: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = HomotopyDescriptor> {
    dims.prop_flat_map(move |n| {
        (matrix_strategy(n, n, bound), vec_strategy(n, bound))
            .prop_map(|(phi, c)| HomotopyDescriptor::new(phi, c).unwrap())
    })
}

/// Descriptors with `det(φ − I) = 0`, built as `P⁻¹ φ' P` from a reduced
/// `φ'` so that every draw qualifies.
pub fn singular_descriptor_strategy(dims: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = HomotopyDescriptor> {
    dims.prop_flat_map(move |n| {
        (matrix_strategy(n, n, bound), vec_strategy(n, bound), any::<u64>()).prop_map(move |(m, c, seed)| {
            let mut rows = m.to_rows();
            for (i, row) in rows.iter_mut().enumerate() {
                row[0] = BigInt::from(u8::from(i == 0));
            }
            let reduced = HomotopyDescriptor::new(IntMatrix::from_rows(&rows), c).unwrap();
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            conjugate(&reduced, &random_unimodular(&mut rng, n, 4))
        })
    })
}
