//! Twisted Hochschild chains over `ℤ[ℤ²]`: boundaries, the trace of a tensor
//! product, and reduction of a 1-cycle to `u1 ⊗ D` form with a certificate.
//!
//! ```bash
//! cargo run --example hochschild_reduction
//! ```

use num_bigint::BigInt;
use torus_nielsen::hochschild::{
    boundary_d1, boundary_d2, homology_coefficients, reduce_to_canonical, tensor_trace, Chain1, Chain2, GroupElement,
    RingElement, RingMatrix,
};
use torus_nielsen::HomotopyDescriptor;

fn main() -> torus_nielsen::Result<()> {
    let desc = HomotopyDescriptor::from_i64(&[[1, 1], [0, 2]], &[0, 1])?;
    let phi = desc.phi().clone();
    let g = GroupElement::from_i64;

    let x = Chain2::new(phi.clone())?.with_term(1, g(&[2, 0]), g(&[1, 0]), g(&[0, 1]))?;
    let dx = boundary_d2(&x);
    println!("d2(u1^2 ⊗ u1 ⊗ u2) = {dx:?}");
    println!("d1 of that = {:?}", boundary_d1(&dx));

    let p = RingMatrix::from_rows(vec![vec![RingElement::monomial(1, g(&[1, 0]))]])?;
    let q = RingMatrix::from_rows(vec![vec![RingElement::from_terms([(1, g(&[0, 1])), (-1, g(&[0, 0]))])]])?;
    println!("trace(P ⊗ Q) = {:?}", tensor_trace(&phi, &p, &q, 1)?);

    let mut cycle = Chain1::new(phi)?
        .with_term(1, g(&[-2, 0]), g(&[1, 1]))?
        .with_term(3, g(&[3, 0]), g(&[0, -1]))?;
    cycle.add_scaled(&dx, &BigInt::from(1))?;
    println!("cycle = {cycle:?}");

    let red = reduce_to_canonical(&cycle)?;
    println!("canonical = {:?}", red.canonical);
    println!("certificate has {} terms", red.certificate.len());

    let mut check = red.canonical.clone();
    check.add_scaled(&boundary_d2(&red.certificate), &BigInt::from(1))?;
    println!("canonical + d2(certificate) == cycle: {}", check == cycle);

    for (class, coefficient) in homology_coefficients(&red.canonical, &desc)? {
        println!("class of {class}: {coefficient}");
    }
    Ok(())
}
