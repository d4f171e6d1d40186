//! Minimum numbers of fixed circles for fiber-preserving maps of torus bundles
//! over the circle.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::intlin::IntMatrix;
use crate::nielsen::HomotopyDescriptor;

/// A fiber-preserving map of a `T²`-bundle whose fiber homomorphism is
/// `[[1, b12], [0, b22]]` and which sends the section loop to `a^c1 b^c2`
/// times itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T2BundleMapData {
    pub b12: BigInt,
    pub b22: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
    /// Free-form label for the type of the bundle monodromy; the count does
    /// not depend on it.
    pub case: Option<String>,
}

impl T2BundleMapData {
    pub fn new(b12: impl Into<BigInt>, b22: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        Self {
            b12: b12.into(),
            b22: b22.into(),
            c1: c1.into(),
            c2: c2.into(),
            case: None,
        }
    }

    /// The fiber homotopy as a descriptor on `T²`.
    pub fn descriptor(&self) -> HomotopyDescriptor {
        let entries = vec![BigInt::from(1), self.b12.clone(), BigInt::from(0), self.b22.clone()];
        let phi = IntMatrix::new(2, 2, entries).expect("four entries");
        HomotopyDescriptor::new(phi, vec![self.c1.clone(), self.c2.clone()]).expect("2x2 data")
    }
}

/// `|c1 (b22 − 1) − c2 b12|`
pub fn bundle_t2_min_circles(d: &T2BundleMapData) -> BigInt {
    let shifted: BigInt = &d.b22 - 1;
    (&d.c1 * shifted - &d.c2 * &d.b12).abs()
}

/// Circle bundles over the circle: `|k|`.
pub fn bundle_s1_min_circles(k: &BigInt) -> BigInt {
    k.abs()
}
