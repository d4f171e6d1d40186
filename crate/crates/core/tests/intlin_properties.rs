mod common;

use common::{matrix_strategy, sized_matrix_strategy, vec_strategy};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_nielsen::intlin::{
    cokernel_structure, exact_determinant, hermite_rows, kernel_basis, lattice_contains, rank, smith_normal_form,
    unimodular_complete, unimodular_inverse, IntMatrix, Lattice,
};

/// Laplace expansion along the first row.
fn cofactor_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    (0..n)
        .map(|j| {
            let term = &m[(0, j)] * cofactor_det(&m.minor_matrix(0, j));
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn is_unimodular(m: &IntMatrix) -> bool {
    exact_determinant(m).unwrap().abs().is_one()
}

proptest! {
    #[test]
    fn smith_decomposition_is_valid(m in sized_matrix_strategy(4, 6)) {
        let snf = smith_normal_form(&m);
        prop_assert!(is_unimodular(&snf.u));
        prop_assert!(is_unimodular(&snf.v));
        prop_assert_eq!(&(&snf.u * &m) * &snf.v, snf.s.clone());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    prop_assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && w[1].is_multiple_of(&w[0]));
        }
        prop_assert_eq!(snf.rank(), rank(&m));
    }

    #[test]
    fn determinant_matches_cofactor_expansion(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = common::random_matrix(&mut rng, n, n, 9);
        prop_assert_eq!(exact_determinant(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn kernel_basis_spans_a_saturated_kernel(m in sized_matrix_strategy(4, 4)) {
        let basis = kernel_basis(&m);
        prop_assert_eq!(basis.len(), m.cols() - rank(&m));
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        if !basis.is_empty() {
            // Saturated: the basis extends to a lattice basis, i.e. the gcd of
            // its maximal minors is one.
            let k = IntMatrix::from_columns(m.cols(), &basis).unwrap();
            let snf = smith_normal_form(&k);
            prop_assert!(snf.nonzero_diagonal().iter().all(One::is_one));
            prop_assert_eq!(kernel_basis(&m), basis);
        }
    }

    #[test]
    fn cokernel_is_invariant_under_unimodular_changes(m in sized_matrix_strategy(3, 5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_unimodular(&mut rng, m.rows(), 6);
        let q = common::random_unimodular(&mut rng, m.cols(), 6);
        prop_assert_eq!(cokernel_structure(&(&(&p * &m) * &q)), cokernel_structure(&m));
    }

    #[test]
    fn lattice_membership_and_solving(b in matrix_strategy(3, 4, 5), x in vec_strategy(4, 6), noise in vec_strategy(3, 3)) {
        let v = b.mul_vec(&x).unwrap();
        prop_assert!(lattice_contains(&b, &v).unwrap());
        let lattice = Lattice::new(b.clone());
        let w: Vec<BigInt> = v.iter().zip(&noise).map(|(a, e)| a + e).collect();
        match lattice.solve(&w).unwrap() {
            Some(y) => prop_assert_eq!(b.mul_vec(&y).unwrap(), w.clone()),
            None => prop_assert!(!lattice.contains(&w).unwrap()),
        }
        prop_assert_eq!(lattice.coset_key(&w).unwrap(), lattice.coset_key(&noise).unwrap());
    }

    #[test]
    fn unimodular_completion_keeps_first_column(v in vec_strategy(4, 20)) {
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let w: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
        let p = unimodular_complete(&w).unwrap();
        prop_assert!(is_unimodular(&p));
        prop_assert_eq!(p.column(0), w);
        let p_inv = unimodular_inverse(&p).unwrap();
        prop_assert!((&p * &p_inv).is_identity());
    }

    #[test]
    fn hermite_rows_generate_the_row_lattice(m in sized_matrix_strategy(4, 5)) {
        let h = hermite_rows(&m);
        prop_assert_eq!(h.rows(), rank(&m));
        let mt = m.transpose();
        for i in 0..h.rows() {
            prop_assert!(lattice_contains(&mt, h.row(i)).unwrap());
        }
        if h.rows() > 0 {
            let ht = h.transpose();
            for i in 0..m.rows() {
                prop_assert!(lattice_contains(&ht, m.row(i)).unwrap());
            }
        }
        prop_assert_eq!(hermite_rows(&h), h);
    }
}
