//! Minimum numbers of fixed circles for fiber-preserving maps of torus
//! bundles over the circle, next to the one-parameter Nielsen number of the
//! fiber homotopy.
//!
//! ```bash
//! cargo run --example torus_bundles
//! ```

use num_bigint::BigInt;
use torus_nielsen::apps::{bundle_s1_min_circles, bundle_t2_min_circles, T2BundleMapData};
use torus_nielsen::one_param_nielsen;

fn main() {
    println!("b12 b22  c1  c2  circles  N(F)");
    for (b12, b22, c1, c2) in [(0, 1, 3, -2), (0, -1, 2, 1), (1, 1, 0, 3), (2, 3, 1, -1), (-1, 0, 2, 2)] {
        let d = T2BundleMapData::new(b12, b22, c1, c2);
        let n = one_param_nielsen(&d.descriptor()).nielsen;
        println!("{b12:>3} {b22:>3} {c1:>3} {c2:>3} {:>8} {n:>5}", bundle_t2_min_circles(&d));
    }
    for k in [0, -4, 7] {
        println!("circle bundle, k = {k}: {}", bundle_s1_min_circles(&BigInt::from(k)));
    }
}
