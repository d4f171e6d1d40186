//! One-parameter Nielsen theory for homotopies on the n-torus.
//!
//! A homotopy `F: Tⁿ × I → Tⁿ` is described by the matrix of
//! `φ: π₁(Tⁿ) → π₁(Tⁿ)` and the exponent vector `c` of the basepoint loop.
//! When the classical Nielsen number `|det(φ − I)|` vanishes, `φ` has a
//! fixed primitive vector `w`; in a basis starting with `w` the first column
//! of `φ` is `e1`, and the one-parameter Nielsen number is `|det A|` where
//! `A` collects columns `2..n` of `φ − I` together with `c`.

mod descriptor;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hochschild::GroupElement;
use crate::intlin::{
    cokernel_structure, exact_determinant, hermite_rows, kernel_basis, maximal_minors, rank,
    unimodular_complete, unimodular_inverse, CokernelStructure, IntMatrix,
};

pub use descriptor::HomotopyDescriptor;

/// Which branch of the main formula produced `N(F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenCase {
    /// `det(φ − I) ≠ 0`: every semicentralizer is trivial and `N(F) = 0`.
    ClassicalNonzero,
    /// `rank A < n`: the homotopy deforms off its fixed circles.
    RankDeficient,
    /// `rank A = n` and `N(F) = |det A|`.
    FullRank,
}

impl NielsenCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            NielsenCase::ClassicalNonzero => "CLASSICAL_NONZERO",
            NielsenCase::RankDeficient => "RANK_DEFICIENT",
            NielsenCase::FullRank => "FULL_RANK",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        [Self::ClassicalNonzero, Self::RankDeficient, Self::FullRank]
            .into_iter()
            .find(|c| c.as_str() == label)
    }
}

impl fmt::Display for NielsenCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneParamResult {
    pub nielsen: BigInt,
    /// Primitive generator of `ker(φ − I)` in the original basis; present
    /// exactly when `nielsen > 0`.
    pub alpha_direction: Option<Vec<BigInt>>,
    /// The sign of `α` depends on orientation choices and is not fixed.
    pub sign_ambiguous: bool,
    pub case: NielsenCase,
}

/// `L(F) = ±N(F)·α` reported as magnitude plus primitive direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzClass {
    pub magnitude: BigInt,
    pub alpha_direction: Option<Vec<BigInt>>,
    pub sign_ambiguous: bool,
}

impl LefschetzClass {
    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }
}

/// Change of basis bringing `φ` into reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBasis {
    /// Unimodular; its first column spans `ker(φ − I)` canonically.
    pub p: IntMatrix,
    /// `P⁻¹ φ P` and `P⁻¹ c`.
    pub reduced: HomotopyDescriptor,
}

/// Semiconjugacy classes: `ℤⁿ / lattice[(φ − I) | c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiconjugacyClasses {
    pub structure: CokernelStructure,
    /// One representative per class when there are finitely many.
    pub representatives: Option<Vec<GroupElement>>,
}

/// `|det(φ − I)|`
pub fn classical_nielsen(phi: &IntMatrix) -> Result<BigInt> {
    Ok(exact_determinant(&phi.minus_identity()?)?.abs())
}

pub fn reduce_basis(desc: &HomotopyDescriptor) -> Result<ReducedBasis> {
    let shifted = desc.phi_minus_identity();
    let det = exact_determinant(&shifted)?;
    if !det.is_zero() {
        return Err(Error::ClassicalNonzero(det));
    }
    let w = kernel_basis(&shifted)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("singular φ − I with trivial kernel".into()))?;
    let p = unimodular_complete(&w)?;
    let p_inv = unimodular_inverse(&p)?;
    let phi = &(&p_inv * desc.phi()) * &p;
    let c = p_inv.mul_vec(desc.c())?;
    let reduced = HomotopyDescriptor::new(phi, c)?;
    Ok(ReducedBasis { p, reduced })
}

fn is_reduced(desc: &HomotopyDescriptor) -> bool {
    let phi = desc.phi();
    (0..desc.n()).all(|i| phi[(i, 0)] == BigInt::from(u8::from(i == 0)))
}

/// Columns `2..n` of `φ' − I` followed by `c'`, for a descriptor in
/// reduced form.
pub fn one_param_matrix(reduced: &HomotopyDescriptor) -> Result<IntMatrix> {
    if !is_reduced(reduced) {
        return Err(Error::NotReducedBasis);
    }
    let n = reduced.n();
    let shifted = reduced.phi_minus_identity();
    let mut columns: Vec<Vec<BigInt>> = (1..n).map(|j| shifted.column(j)).collect();
    columns.push(reduced.c().to_vec());
    IntMatrix::from_columns(n, &columns)
}

pub fn one_param_nielsen(desc: &HomotopyDescriptor) -> OneParamResult {
    let zero = |case| OneParamResult {
        nielsen: BigInt::zero(),
        alpha_direction: None,
        sign_ambiguous: false,
        case,
    };
    let basis = match reduce_basis(desc) {
        Ok(b) => b,
        Err(Error::ClassicalNonzero(_)) => return zero(NielsenCase::ClassicalNonzero),
        Err(e) => unreachable!("descriptor invariants hold: {e}"),
    };
    let a = one_param_matrix(&basis.reduced).expect("reduce_basis yields reduced form");
    let det = exact_determinant(&a).expect("A is square");
    if det.is_zero() {
        return zero(NielsenCase::RankDeficient);
    }
    OneParamResult {
        nielsen: det.abs(),
        alpha_direction: Some(basis.p.column(0)),
        sign_ambiguous: true,
        case: NielsenCase::FullRank,
    }
}

pub fn lefschetz_class(desc: &HomotopyDescriptor) -> LefschetzClass {
    let r = one_param_nielsen(desc);
    LefschetzClass {
        magnitude: r.nielsen,
        alpha_direction: r.alpha_direction,
        sign_ambiguous: r.sign_ambiguous,
    }
}

/// Cokernel of `[(φ − I) | c]`, with representatives reduced into the
/// fundamental box of its Hermite basis when finite.
pub fn semiconjugacy_classes(desc: &HomotopyDescriptor) -> SemiconjugacyClasses {
    let b = desc.class_matrix();
    let structure = cokernel_structure(&b);
    let representatives = structure.order.finite().map(|_| {
        // Rows of the Hermite form are a triangular basis of the lattice; the
        // box 0 <= x_i < h_ii holds exactly one point of each coset.
        let h = hermite_rows(&b.transpose());
        let bounds: Vec<BigInt> = (0..desc.n()).map(|i| h[(i, i)].clone()).collect();
        box_points(&bounds).into_iter().map(GroupElement::new).collect()
    });
    SemiconjugacyClasses {
        structure,
        representatives,
    }
}

fn box_points(bounds: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut points = vec![Vec::new()];
    for bound in bounds {
        let mut next = Vec::new();
        for p in &points {
            let mut k = BigInt::zero();
            while &k < bound {
                let mut q = p.clone();
                q.push(k.clone());
                next.push(q);
                k += 1;
            }
        }
        points = next;
    }
    points
}

/// Canonical basis of `ker(φ − I)`, isomorphic to every semicentralizer.
pub fn semicentralizer(desc: &HomotopyDescriptor) -> Vec<Vec<BigInt>> {
    kernel_basis(&desc.phi_minus_identity())
}

/// gcd of the absolute values of the maximal minors of `[(φ − I) | c]`.
pub fn jezierski_d(desc: &HomotopyDescriptor) -> BigInt {
    maximal_minors(&desc.class_matrix())
        .expect("class matrix is n x (n+1)")
        .iter()
        .fold(BigInt::zero(), |acc, m| acc.gcd(m))
}

/// `N(F)` via the cokernel order of `[(φ − I) | c]`: the product of its
/// invariant factors when it has rank `n`, else zero. Valid when
/// `det(φ − I) = 0`.
pub fn nielsen_by_invariant_factors(desc: &HomotopyDescriptor) -> BigInt {
    let b = desc.class_matrix();
    if rank(&b) < desc.n() {
        return BigInt::zero();
    }
    cokernel_structure(&b)
        .order
        .finite()
        .cloned()
        .unwrap_or_else(BigInt::one)
}
