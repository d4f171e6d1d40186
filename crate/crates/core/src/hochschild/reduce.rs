//! Reduction of 1-cycles to the canonical form `Σ a·(u1 ⊗ D)`.
//!
//! The reduction runs in two passes, each built from explicit boundaries so
//! that `input − canonical = d₂(certificate)` holds exactly.
//!
//! 1. Generator form. `XY ⊗ E` is traded for `Y ⊗ Eφ(X) + X ⊗ YE` via
//!    `d₂(X ⊗ Y ⊗ E)`, `u_i⁻¹ ⊗ E` for `−u_i ⊗ u_i⁻¹Eφ(u_i)⁻¹` via
//!    `d₂(u_i ⊗ u_i⁻¹ ⊗ E')`, and `1 ⊗ E` is dropped via `d₂(1 ⊗ 1 ⊗ E)`.
//!    Afterwards every term is `u_i ⊗ E`.
//! 2. Sweep. A term `u_j ⊗ E` is an edge from its marker `m = u_j E` to
//!    `m·(φ(u_j)u_j⁻¹)`. For `j ≥ 2` the steps `v_j = (φ − I)e_j` are
//!    linearly independent, so these edges live on a cubical grid, and the
//!    2-chain `u_i ⊗ u_j ⊗ E − u_j ⊗ u_i ⊗ E` bounds an elementary square
//!    of it. Edges are pushed along one grid axis at a time onto the
//!    hyperplane where that coordinate is zero; the cycle condition then
//!    forces the edges of that axis to cancel. `u1` edges are loops
//!    (`φ(u1) = u1`) and are left alone.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebra::{apply_phi, GroupElement};
use super::chain::{boundary_d1, boundary_d2, marker, Chain1, Chain2};
use crate::error::{Error, Result};
use crate::intlin::{rank, IntMatrix, Lattice};

/// Output of [`reduce_to_canonical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReduction {
    /// Homologous chain whose terms are all `a·(u1 ⊗ D)`.
    pub canonical: Chain1,
    /// 2-chain with `input − canonical = d₂(certificate)`.
    pub certificate: Chain2,
}

struct Reducer {
    n: usize,
    phi: IntMatrix,
    current: Chain1,
    certificate: Chain2,
}

impl Reducer {
    /// `current −= a·d₂(q)`, `certificate += a·q`
    fn apply(&mut self, a: &BigInt, q: &Chain2) -> Result<()> {
        self.current.add_scaled(&boundary_d2(q), &-a)?;
        self.certificate.add_scaled(q, a)
    }

    fn simplex(&self, b: GroupElement, d: GroupElement, e: GroupElement) -> Result<Chain2> {
        Chain2::new(self.phi.clone())?.with_term(1, b, d, e)
    }

    fn unit(&self, i: usize, power: i64) -> GroupElement {
        GroupElement::generator_power(self.n, i, power)
    }

    fn is_generator(b: &GroupElement) -> bool {
        matches!(b.as_generator_power(), Some((_, e)) if e.is_one())
    }

    fn to_generator_form(&mut self) -> Result<()> {
        loop {
            let next = self
                .current
                .terms()
                .find(|(b, _, _)| !Self::is_generator(b))
                .map(|(b, d, a)| (b.clone(), d.clone(), a.clone()));
            let Some((b, e, a)) = next else {
                return Ok(());
            };
            let q = if b.is_identity() {
                let id = GroupElement::identity(self.n);
                self.simplex(id.clone(), id, e)?
            } else if let Some(i) = inverse_generator(&b) {
                let u = self.unit(i, 1);
                let e_shift = e.div(&apply_phi(&self.phi, &u)?);
                self.simplex(u, b.clone(), e_shift)?
            } else {
                let (i, k) = b
                    .exponents()
                    .iter()
                    .enumerate()
                    .find(|(_, k)| !k.is_zero())
                    .expect("b is not the identity");
                let x = self.unit(i, if k.is_positive() { 1 } else { -1 });
                let y = b.div(&x);
                // d₂(X ⊗ Y ⊗ E) carries −(XY ⊗ E).
                let q = self.simplex(x, y, e)?;
                self.apply(&-&a, &q)?;
                continue;
            };
            self.apply(&a, &q)?;
        }
    }

    /// `u_i ⊗ u_j ⊗ E − u_j ⊗ u_i ⊗ E` with `E = m·u_i⁻¹u_j⁻¹`; its boundary
    /// is `edge(i, m) + edge(j, m + v_i) − edge(i, m + v_j) − edge(j, m)`.
    fn square(&self, i: usize, j: usize, m: &GroupElement) -> Result<Chain2> {
        let (ui, uj) = (self.unit(i, 1), self.unit(j, 1));
        let e = m.div(&ui).div(&uj);
        Chain2::new(self.phi.clone())?
            .with_term(1, ui.clone(), uj.clone(), e.clone())?
            .with_term(-1, uj, ui, e)
    }

    fn sweep(&mut self) -> Result<()> {
        let n = self.n;
        if n < 2 {
            return self.check_no_edges(0);
        }
        let shifted = self.phi.minus_identity()?;
        let steps: Vec<GroupElement> = (0..n).map(|j| GroupElement::new(shifted.column(j))).collect();
        let grid = Lattice::new(IntMatrix::from_columns(n, &shifted_columns(&shifted))?);
        let mut origins: BTreeMap<Vec<BigInt>, GroupElement> = BTreeMap::new();

        for s in 1..n {
            loop {
                let mut target = None;
                for (b, e, a) in self.current.terms() {
                    let Some((j, _)) = b.as_generator_power() else {
                        return Err(Error::Internal("term left generator form".into()));
                    };
                    if j <= s {
                        continue;
                    }
                    let m = marker(b, e);
                    let key = grid.coset_key(m.exponents())?;
                    let origin = origins.entry(key).or_insert_with(|| m.clone()).clone();
                    let coords = grid
                        .solve(m.div(&origin).exponents())?
                        .ok_or_else(|| Error::Internal("marker left its coset".into()))?;
                    let t = coords[s - 1].clone();
                    if !t.is_zero() {
                        target = Some((j, m, a.clone(), t));
                        break;
                    }
                }
                let Some((j, m, a, t)) = target else { break };
                if t.is_positive() {
                    let q = self.square(s, j, &m.div(&steps[s]))?;
                    self.apply(&a, &q)?;
                } else {
                    let q = self.square(s, j, &m)?;
                    self.apply(&-a, &q)?;
                }
            }
            self.check_no_edges(s)?;
        }
        Ok(())
    }

    fn check_no_edges(&self, s: usize) -> Result<()> {
        if s == 0 {
            return Ok(());
        }
        let u = self.unit(s, 1);
        if self.current.terms().any(|(b, _, _)| *b == u) {
            return Err(Error::Internal(format!("u{} edges survived the sweep", s + 1)));
        }
        Ok(())
    }
}

/// `Some(i)` when `b = u_{i+1}⁻¹`.
fn inverse_generator(b: &GroupElement) -> Option<usize> {
    let (i, k) = b.as_generator_power()?;
    (k.is_negative() && k.magnitude().is_one()).then_some(i)
}

fn shifted_columns(shifted: &IntMatrix) -> Vec<Vec<BigInt>> {
    (1..shifted.cols()).map(|j| shifted.column(j)).collect()
}

/// Rewrites a 1-cycle as a homologous chain of `u1 ⊗ D` terms.
///
/// Requires `φ` in reduced form (first column `e1`) with
/// `rank(φ − I) = n − 1`.
pub fn reduce_to_canonical(ch: &Chain1) -> Result<CanonicalReduction> {
    let phi = ch.phi().clone();
    let n = ch.dim();
    if n == 0 {
        return Err(Error::mismatch("rank-0 group has no canonical form"));
    }
    let first: Vec<BigInt> = phi.column(0);
    if first.iter().enumerate().any(|(i, x)| *x != BigInt::from(u8::from(i == 0))) {
        return Err(Error::NotReducedBasis);
    }
    let r = rank(&phi.minus_identity()?);
    if r + 1 != n {
        return Err(Error::RankPrecondition { rank: r, expected: n - 1 });
    }
    if !boundary_d1(ch).is_zero() {
        return Err(Error::NotACycle);
    }

    let mut reducer = Reducer {
        n,
        phi: phi.clone(),
        current: ch.clone(),
        certificate: Chain2::new(phi)?,
    };
    reducer.to_generator_form()?;
    reducer.sweep()?;

    let u1 = reducer.unit(0, 1);
    if let Some((b, _, _)) = reducer.current.terms().find(|(b, _, _)| **b != u1) {
        return Err(Error::Internal(format!("non-canonical term {b} survived reduction")));
    }
    Ok(CanonicalReduction {
        canonical: reducer.current,
        certificate: reducer.certificate,
    })
}
