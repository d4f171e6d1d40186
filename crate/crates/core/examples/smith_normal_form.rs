//! Exact integer linear algebra: Smith and Hermite forms, kernels, cokernels,
//! unimodular completion and lattice membership.
//!
//! ```bash
//! cargo run --example smith_normal_form
//! ```

use torus_nielsen::intlin::{
    cokernel_structure, exact_determinant, hermite_rows, int_vec, kernel_basis, lattice_contains, smith_normal_form,
    unimodular_complete, IntMatrix,
};

fn main() -> torus_nielsen::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M = {m}");
    println!("S = {}", snf.s);
    println!("U M V == S: {}", &(&snf.u * &m) * &snf.v == snf.s);
    println!("det M = {}", exact_determinant(&m)?);
    println!("cokernel: {:?}", cokernel_structure(&m));
    println!("Hermite rows: {}", hermite_rows(&m));

    let b = IntMatrix::from_rows(&[[0, 1, 0], [0, 1, 1]]);
    println!("kernel of {b}: {:?}", kernel_basis(&b));
    println!("(3, 5) in lattice: {}", lattice_contains(&b, &int_vec(&[3, 5]))?);

    let p = unimodular_complete(&int_vec(&[3, 5, 7]))?;
    println!("completion of (3, 5, 7): {p}, det {}", exact_determinant(&p)?);
    Ok(())
}
