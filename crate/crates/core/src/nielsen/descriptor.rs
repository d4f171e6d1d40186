use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlin::{int_vec, IntMatrix};

/// Homotopy data on `Tⁿ`: the matrix of the induced homomorphism `φ` and the
/// exponents `c` of the loop `[w] = u1^c1 ... un^cn` traced by the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyDescriptor {
    phi: IntMatrix,
    c: Vec<BigInt>,
}

impl HomotopyDescriptor {
    pub fn new(phi: IntMatrix, c: Vec<BigInt>) -> Result<Self> {
        if !phi.is_square() {
            return Err(Error::NonSquare {
                rows: phi.rows(),
                cols: phi.cols(),
            });
        }
        if phi.rows() == 0 {
            return Err(Error::mismatch("dimension n must be at least 1"));
        }
        if c.len() != phi.rows() {
            return Err(Error::mismatch(format!(
                "loop vector has {} entries, phi is {}x{}",
                c.len(),
                phi.rows(),
                phi.cols()
            )));
        }
        Ok(Self { phi, c })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64<R: AsRef<[i64]>>(phi: &[R], c: &[i64]) -> Result<Self> {
        Self::new(IntMatrix::try_from_rows(phi)?, int_vec(c))
    }

    pub fn n(&self) -> usize {
        self.phi.rows()
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn c(&self) -> &[BigInt] {
        &self.c
    }

    /// `φ − I`
    pub fn phi_minus_identity(&self) -> IntMatrix {
        self.phi.minus_identity().expect("phi is square")
    }

    /// The `n x (n+1)` matrix `[(φ − I) | c]` whose columns generate the
    /// lattice of semiconjugacy relations.
    pub fn class_matrix(&self) -> IntMatrix {
        self.phi_minus_identity()
            .with_column(&self.c)
            .expect("c has n entries")
    }
}
