//! Exact one-parameter Nielsen theory on the n-torus.
//!
//! Given the matrix of `φ = F(·,0)_#` on `π₁(Tⁿ) = ℤⁿ` and the exponents `c`
//! of the loop traced by the basepoint, computes the one-parameter Nielsen
//! number `N(F) = |det A|`, the Lefschetz class `L(F) = ±N(F)·α`,
//! semiconjugacy classes and semicentralizers, and the Jezierski invariant
//! `D`. A Hochschild 1-chain engine over `ℤ[ℤⁿ]` reduces trace cycles to
//! canonical form, and a geometric oracle counts fixed circles of a linear
//! representative independently of the algebra.

pub mod apps;
pub mod cli;
pub mod error;
pub mod hochschild;
pub mod intlin;
pub mod nielsen;
pub mod oracle;

pub use error::{Error, Result};
pub use nielsen::{
    classical_nielsen, jezierski_d, lefschetz_class, one_param_nielsen, HomotopyDescriptor,
    NielsenCase, OneParamResult,
};
