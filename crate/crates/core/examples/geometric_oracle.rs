//! Counting fixed circles of `F(x, t) = Mx + tc + ε` on `T² × S¹` by exact
//! subtorus analysis and by grid sampling.
//!
//! ```bash
//! cargo run --release --example geometric_oracle
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use torus_nielsen::oracle::{choose_generic_epsilon, fixed_set_exact, fixed_set_grid, LinearHomotopy};
use torus_nielsen::{one_param_nielsen, HomotopyDescriptor};

fn main() -> torus_nielsen::Result<()> {
    let desc = HomotopyDescriptor::from_i64(&[[1, 1], [0, 2]], &[0, 1])?;
    let eps = vec![
        BigRational::new(BigInt::from(1), BigInt::from(11)),
        BigRational::new(BigInt::from(1), BigInt::from(13)),
    ];
    let h = LinearHomotopy::new(desc.clone(), eps)?;
    let exact = fixed_set_exact(&h);
    println!("exact: {} component(s)", exact.component_count);
    for point in exact.samples.iter().flatten() {
        let shown: Vec<String> = point.iter().map(ToString::to_string).collect();
        println!("  sample (x1, x2, t) = ({})", shown.join(", "));
    }
    let grid = fixed_set_grid(&h, &[192, 192, 192], None)?;
    println!("grid 192^3: {} component(s)", grid.component_count);
    println!("N(F) = {}", one_param_nielsen(&desc).nielsen);

    let desc = HomotopyDescriptor::from_i64(&[[1, 0], [0, 1]], &[2, 0])?;
    let eps = choose_generic_epsilon(&desc, 0);
    let shown: Vec<String> = eps.iter().map(ToString::to_string).collect();
    println!("generic offset for the identity with c = (2, 0): ({})", shown.join(", "));
    let h = LinearHomotopy::new(desc, eps)?;
    println!("fixed circles after perturbing: {}", fixed_set_exact(&h).component_count);
    Ok(())
}
