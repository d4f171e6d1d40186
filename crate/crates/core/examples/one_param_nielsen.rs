//! The full pipeline on a homotopy whose fixed direction is not a coordinate
//! axis: basis reduction, the matrix `A`, `N(F)` and the Lefschetz class.
//!
//! ```bash
//! cargo run --example one_param_nielsen
//! ```

use torus_nielsen::nielsen::{classical_nielsen, lefschetz_class, one_param_matrix, reduce_basis};
use torus_nielsen::{one_param_nielsen, HomotopyDescriptor};

fn main() -> torus_nielsen::Result<()> {
    let desc = HomotopyDescriptor::from_i64(&[[2, -1], [1, 0]], &[3, -2])?;
    println!("phi = {}", desc.phi());
    println!("classical N = {}", classical_nielsen(desc.phi())?);

    let basis = reduce_basis(&desc)?;
    println!("P = {}", basis.p);
    println!("P^-1 phi P = {}", basis.reduced.phi());
    println!("P^-1 c = {:?}", basis.reduced.c());

    let a = one_param_matrix(&basis.reduced)?;
    println!("A = {a}");

    let r = one_param_nielsen(&desc);
    println!("N(F) = {} ({})", r.nielsen, r.case);

    let l = lefschetz_class(&desc);
    match &l.alpha_direction {
        Some(alpha) => println!("L(F) = ±{} · {:?}", l.magnitude, alpha),
        None => println!("L(F) = 0"),
    }
    Ok(())
}
