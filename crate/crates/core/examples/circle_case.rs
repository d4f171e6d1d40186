//! Homotopies on the circle: `N(F) = |c|`, and the geometric count of fixed
//! circles of `x + tc + ε` agrees.
//!
//! ```bash
//! cargo run --example circle_case
//! ```

use torus_nielsen::oracle::{fixed_set_exact, LinearHomotopy};
use torus_nielsen::{one_param_nielsen, HomotopyDescriptor};

fn main() -> torus_nielsen::Result<()> {
    println!("{:>3}  {:>4}  {:>7}  case", "c", "N(F)", "circles");
    for c in -5..=5 {
        let desc = HomotopyDescriptor::from_i64(&[[1]], &[c])?;
        let r = one_param_nielsen(&desc);
        let circles = fixed_set_exact(&LinearHomotopy::generic(desc, 0)).component_count;
        println!("{c:>3}  {:>4}  {circles:>7}  {}", r.nielsen, r.case);
    }
    Ok(())
}
