//! Group elements of ℤⁿ, the group ring ℤ[ℤⁿ], and matrices over it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// The element `u1^k1 ... un^kn` of the free abelian group on `n` generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(Vec<BigInt>);

impl GroupElement {
    pub fn new(exponents: Vec<BigInt>) -> Self {
        Self(exponents)
    }

    pub fn from_i64(exponents: &[i64]) -> Self {
        Self(exponents.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    /// `u_{index+1}^power` (generators are zero-indexed here).
    pub fn generator_power(n: usize, index: usize, power: impl Into<BigInt>) -> Self {
        let mut e = vec![BigInt::zero(); n];
        e[index] = power.into();
        Self(e)
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Group product: componentwise sum of exponents.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> GroupElement {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// `self * other^-1`
    pub fn div(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `Some((i, e))` when the element is `u_{i+1}^e` with `e != 0`.
    pub fn as_generator_power(&self) -> Option<(usize, &BigInt)> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, e)| !e.is_zero());
        let first = nonzero.next()?;
        nonzero.next().is_none().then_some(first)
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::mismatch(format!(
                "group element with {} exponents in rank-{n} group",
                self.dim()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "u{}", i + 1)?;
            } else {
                write!(f, "u{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Image of a group element under the endomorphism with matrix `phi`.
pub fn apply_phi(phi: &IntMatrix, g: &GroupElement) -> Result<GroupElement> {
    if !phi.is_square() {
        return Err(Error::NonSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    g.check_dim(phi.rows())?;
    Ok(GroupElement(phi.mul_vec(g.exponents())?))
}

/// Adds `coeff` to `map[key]`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Finite ℤ-linear combination of group elements.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct RingElement {
    terms: BTreeMap<GroupElement, BigInt>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: impl Into<BigInt>, g: GroupElement) -> Self {
        let mut r = Self::zero();
        r.add_term(coeff, g);
        r
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, GroupElement)>,
        C: Into<BigInt>,
    {
        let mut r = Self::zero();
        for (c, g) in terms {
            r.add_term(c, g);
        }
        r
    }

    pub fn add_term(&mut self, coeff: impl Into<BigInt>, g: GroupElement) {
        accumulate(&mut self.terms, g, coeff.into());
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(c.clone(), g.clone());
        }
        r
    }

    pub fn neg(&self) -> RingElement {
        Self {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    /// Product in the (commutative) group ring.
    pub fn mul(&self, other: &RingElement) -> RingElement {
        let mut r = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                r.add_term(a * b, g.mul(h));
            }
        }
        r
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{mag}·{g}")?;
            }
        }
        Ok(())
    }
}

/// Dense matrix over ℤ[ℤⁿ], e.g. a boundary or chain-homotopy matrix of a
/// cellular chain complex of the universal cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![RingElement::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::mismatch("ragged ring matrix rows"));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RingElement) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::mismatch("ring matrix shapes differ"));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }
}
