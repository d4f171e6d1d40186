//! Exact integer linear algebra.
//!
//! Everything here works over `BigInt` and is fraction-free: determinants
//! use Bareiss elimination, kernels and cokernels come from the Smith normal
//! form, and canonical lattice bases from the Hermite normal form.

mod matrix;
mod normal_form;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use matrix::{int_vec, IntMatrix};
pub use normal_form::{hermite_rows, smith_normal_form, SmithDecomposition};

/// Order of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl GroupOrder {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }
}

/// `Z^rows / (column lattice of M)` as `Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CokernelStructure {
    /// Invariant factors greater than one, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    pub order: GroupOrder,
}

pub fn cokernel_structure(m: &IntMatrix) -> CokernelStructure {
    let snf = smith_normal_form(m);
    let nonzero = snf.nonzero_diagonal();
    let free_rank = m.rows() - nonzero.len();
    let invariant_factors: Vec<BigInt> = nonzero.into_iter().filter(|d| !d.is_one()).collect();
    let order = if free_rank == 0 {
        GroupOrder::Finite(invariant_factors.iter().product())
    } else {
        GroupOrder::Infinite
    };
    CokernelStructure {
        invariant_factors,
        free_rank,
        order,
    }
}

/// Canonical ℤ-basis of `{v : Mv = 0}`.
///
/// The basis is the Hermite normal form of the kernel lattice: every vector
/// is primitive with a positive leading coordinate, and the vectors come in
/// order of increasing leading position.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let free: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| snf.v.column(j)).collect();
    if free.is_empty() {
        return Vec::new();
    }
    let stacked = IntMatrix::from_columns(m.cols(), &free)
        .expect("kernel vectors have cols entries")
        .transpose();
    hermite_rows(&stacked).to_rows()
}

pub fn rank(m: &IntMatrix) -> usize {
    hermite_rows(m).rows()
}

/// Fraction-free (Bareiss) determinant.
pub fn exact_determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Determinants of the square matrices obtained by deleting one column of a
/// `n x (n+1)` matrix, in column order.
pub fn maximal_minors(m: &IntMatrix) -> Result<Vec<BigInt>> {
    if m.cols() != m.rows() + 1 {
        return Err(Error::mismatch(format!(
            "expected an n x (n+1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    (0..m.cols())
        .map(|j| exact_determinant(&m.without_column(j)))
        .collect()
}

/// Integer inverse of a unimodular matrix via the adjugate.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let det = exact_determinant(m)?;
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular(det));
    }
    let n = m.rows();
    let mut inv = IntMatrix::zeros(n, n);
    if n == 1 {
        inv[(0, 0)] = det;
        return Ok(inv);
    }
    for i in 0..n {
        for j in 0..n {
            let cofactor = exact_determinant(&m.minor_matrix(j, i))?;
            let signed = if (i + j) % 2 == 0 { cofactor } else { -cofactor };
            inv[(i, j)] = signed * &det;
        }
    }
    Ok(inv)
}

/// Square unimodular matrix whose first column is the primitive vector `w`.
pub fn unimodular_complete(w: &[BigInt]) -> Result<IntMatrix> {
    if w.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        return Err(Error::NonPrimitiveVector(g));
    }
    let n = w.len();
    // Row-reduce a copy of w to ±e1 while keeping p * v == w.
    let mut v = w.to_vec();
    let mut p = IntMatrix::identity(n);
    loop {
        let pivot = (0..n)
            .filter(|&i| !v[i].is_zero())
            .min_by_key(|&i| v[i].abs())
            .expect("v stays nonzero");
        let mut reduced = true;
        for i in 0..n {
            if i == pivot || v[i].is_zero() {
                continue;
            }
            // v[i] += q v[pivot]  ⇔  p.col[pivot] -= q p.col[i]
            let q = -v[i].div_floor(&v[pivot]);
            let step = &q * &v[pivot];
            v[i] += step;
            p.add_col_multiple(pivot, i, &-&q);
            reduced &= v[i].is_zero();
        }
        if reduced {
            v.swap(0, pivot);
            p.swap_cols(0, pivot);
            break;
        }
    }
    if v[0].is_negative() {
        p.negate_col(0);
    }
    Ok(p)
}

/// Integer column lattice of a matrix, with its Smith data cached for
/// membership, solving and coset labelling.
#[derive(Debug, Clone)]
pub struct Lattice {
    generators: IntMatrix,
    snf: SmithDecomposition,
    diagonal: Vec<BigInt>,
}

impl Lattice {
    pub fn new(generators: IntMatrix) -> Self {
        let snf = smith_normal_form(&generators);
        let diagonal = snf.nonzero_diagonal();
        Self {
            generators,
            snf,
            diagonal,
        }
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.rows()
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.snf
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::mismatch(format!(
                "vector of length {} in a lattice of ambient dimension {}",
                v.len(),
                self.ambient_dim()
            )));
        }
        Ok(())
    }

    /// Some integer `x` with `generators * x == v`, if one exists.
    pub fn solve(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_len(v)?;
        let w = self.snf.u.mul_vec(v)?;
        let mut y = vec![BigInt::zero(); self.generators.cols()];
        for (i, wi) in w.iter().enumerate() {
            match self.diagonal.get(i) {
                Some(d) => {
                    let (q, r) = wi.div_rem(d);
                    if !r.is_zero() {
                        return Ok(None);
                    }
                    y[i] = q;
                }
                None if !wi.is_zero() => return Ok(None),
                None => {}
            }
        }
        Ok(Some(self.snf.v.mul_vec(&y)?))
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        self.check_len(v)?;
        let w = self.snf.u.mul_vec(v)?;
        Ok(w.iter().enumerate().all(|(i, wi)| match self.diagonal.get(i) {
            Some(d) => wi.is_multiple_of(d),
            None => wi.is_zero(),
        }))
    }

    /// Label of the coset `v + L`, equal for two vectors iff their
    /// difference lies in the lattice.
    pub fn coset_key(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_len(v)?;
        let w = self.snf.u.mul_vec(v)?;
        Ok(w.into_iter()
            .enumerate()
            .map(|(i, wi)| match self.diagonal.get(i) {
                Some(d) => wi.mod_floor(d),
                None => wi,
            })
            .collect())
    }
}

/// Whether `v` lies in the integer span of the columns of `b`.
pub fn lattice_contains(b: &IntMatrix, v: &[BigInt]) -> Result<bool> {
    Lattice::new(b.clone()).contains(v)
}
