//! Hochschild chains of the group ring ℤ[ℤⁿ] twisted by an endomorphism φ.

mod algebra;
mod chain;
mod classes;
mod reduce;

pub use algebra::{apply_phi, GroupElement, RingElement, RingMatrix};
pub use chain::{boundary_d1, boundary_d2, marker, tensor_trace, Chain1, Chain2};
pub use classes::{decompose_components, homology_coefficients, same_class, ClassRelation};
pub use reduce::{reduce_to_canonical, CanonicalReduction};
