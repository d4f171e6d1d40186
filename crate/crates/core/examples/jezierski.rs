//! Three independent routes to `N(F)` on random homotopies with
//! `det(φ − I) = 0`: basis reduction, invariant factors, and the gcd of
//! maximal minors.
//!
//! ```bash
//! cargo run --example jezierski
//! ```

use torus_nielsen::intlin::{exact_determinant, IntMatrix};
use torus_nielsen::nielsen::{jezierski_d, nielsen_by_invariant_factors};
use torus_nielsen::{one_param_nielsen, HomotopyDescriptor};

fn main() -> torus_nielsen::Result<()> {
    let mut shown = 0;
    'outer: for a in -2..=2i64 {
        for b in -2..=2i64 {
            for c1 in -2..=2i64 {
                let phi = IntMatrix::from_rows(&[[1 + a, b, 0], [a, 1 + b, 1], [0, 0, 2]]);
                let desc = HomotopyDescriptor::new(phi, vec![c1.into(), 1.into(), (a - b).into()])?;
                if !exact_determinant(&desc.phi_minus_identity())?.eq(&0.into()) {
                    continue;
                }
                let r = one_param_nielsen(&desc);
                println!(
                    "phi {:?} c {:?}: reduction {}, invariant factors {}, minors {}",
                    desc.phi().to_rows(),
                    desc.c(),
                    r.nielsen,
                    nielsen_by_invariant_factors(&desc),
                    jezierski_d(&desc)
                );
                shown += 1;
                if shown == 12 {
                    break 'outer;
                }
            }
        }
    }
    Ok(())
}
