//! Splitting chains by the semiconjugacy class of their markers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::algebra::{accumulate, GroupElement};
use super::chain::{marker, Chain1};
use crate::error::{Error, Result};
use crate::intlin::{rank, Lattice};
use crate::nielsen::HomotopyDescriptor;

/// Semiconjugacy relation on `ℤⁿ`: `g1 ~ g2` iff `g2 − g1` lies in the
/// column lattice of `[(φ − I) | c]`.
#[derive(Debug, Clone)]
pub struct ClassRelation {
    lattice: Lattice,
}

impl ClassRelation {
    pub fn new(desc: &HomotopyDescriptor) -> Self {
        Self {
            lattice: Lattice::new(desc.class_matrix()),
        }
    }

    pub fn dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn same_class(&self, g1: &GroupElement, g2: &GroupElement) -> Result<bool> {
        g1.check_dim(self.dim())?;
        g2.check_dim(self.dim())?;
        self.lattice.contains(g2.div(g1).exponents())
    }

    /// Canonical label of the class of `g`.
    pub fn key(&self, g: &GroupElement) -> Result<Vec<BigInt>> {
        g.check_dim(self.dim())?;
        self.lattice.coset_key(g.exponents())
    }
}

pub fn same_class(g1: &GroupElement, g2: &GroupElement, desc: &HomotopyDescriptor) -> Result<bool> {
    ClassRelation::new(desc).same_class(g1, g2)
}

fn check_chain(ch: &Chain1, desc: &HomotopyDescriptor) -> Result<()> {
    if ch.dim() != desc.n() {
        return Err(Error::mismatch(format!(
            "chain over rank-{} group, descriptor has n = {}",
            ch.dim(),
            desc.n()
        )));
    }
    Ok(())
}

/// Partitions a chain by the classes of its markers. Each part is keyed by
/// the lexicographically least marker occurring in it.
pub fn decompose_components(
    ch: &Chain1,
    desc: &HomotopyDescriptor,
) -> Result<BTreeMap<GroupElement, Chain1>> {
    check_chain(ch, desc)?;
    let relation = ClassRelation::new(desc);
    let mut parts: BTreeMap<Vec<BigInt>, (GroupElement, Chain1)> = BTreeMap::new();
    for (b, d, a) in ch.terms() {
        let m = marker(b, d);
        let key = relation.key(&m)?;
        let (rep, part) = match parts.get_mut(&key) {
            Some(entry) => entry,
            None => {
                let fresh = Chain1::new(ch.phi().clone())?;
                parts.entry(key).or_insert((m.clone(), fresh))
            }
        };
        if m < *rep {
            *rep = m;
        }
        part.add_term(a.clone(), b.clone(), d.clone())?;
    }
    Ok(parts.into_values().collect())
}

/// Per-class coordinate in `H₁(Z(g_C)) ≅ ℤ` of a chain made of `u1 ⊗ D`
/// terms: the sum of the coefficients within each class. Zero sums are
/// omitted.
pub fn homology_coefficients(
    canonical: &Chain1,
    desc: &HomotopyDescriptor,
) -> Result<BTreeMap<GroupElement, BigInt>> {
    check_chain(canonical, desc)?;
    let n = desc.n();
    let r = rank(&desc.phi_minus_identity());
    if r + 1 != n {
        return Err(Error::RankPrecondition { rank: r, expected: n - 1 });
    }
    let u1 = GroupElement::generator_power(n, 0, 1);
    if let Some((b, d, _)) = canonical.terms().find(|(b, _, _)| **b != u1) {
        return Err(Error::NotCanonical(format!("term {b} ⊗ {d} does not start with u1")));
    }
    let mut sums: BTreeMap<GroupElement, BigInt> = BTreeMap::new();
    for (rep, part) in decompose_components(canonical, desc)? {
        let total: BigInt = part.terms().map(|(_, _, a)| a.clone()).sum();
        accumulate(&mut sums, rep, total);
    }
    sums.retain(|_, v| !v.is_zero());
    Ok(sums)
}
