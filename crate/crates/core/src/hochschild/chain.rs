//! Hochschild chains of ℤG with coefficients in the twisted bimodule (ℤG)^φ,
//! where `g·m = gm` and `m·g = mφ(g)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::algebra::{accumulate, apply_phi, GroupElement, RingElement, RingMatrix};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

fn check_phi(phi: &IntMatrix) -> Result<()> {
    if !phi.is_square() {
        return Err(Error::NonSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    Ok(())
}

fn same_phi(a: &IntMatrix, b: &IntMatrix) -> Result<()> {
    if a != b {
        return Err(Error::mismatch("chains twisted by different endomorphisms"));
    }
    Ok(())
}

/// `Σ a·(B ⊗ D)` in `C₁(ℤG, (ℤG)^φ)`, like terms combined.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain1 {
    phi: IntMatrix,
    terms: BTreeMap<(GroupElement, GroupElement), BigInt>,
}

impl Chain1 {
    pub fn new(phi: IntMatrix) -> Result<Self> {
        check_phi(&phi)?;
        Ok(Self {
            phi,
            terms: BTreeMap::new(),
        })
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn add_term(&mut self, coeff: impl Into<BigInt>, b: GroupElement, d: GroupElement) -> Result<()> {
        b.check_dim(self.dim())?;
        d.check_dim(self.dim())?;
        accumulate(&mut self.terms, (b, d), coeff.into());
        Ok(())
    }

    pub fn with_term(mut self, coeff: impl Into<BigInt>, b: GroupElement, d: GroupElement) -> Result<Self> {
        self.add_term(coeff, b, d)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &GroupElement, &BigInt)> {
        self.terms.iter().map(|((b, d), c)| (b, d, c))
    }

    pub fn coefficient(&self, b: &GroupElement, d: &GroupElement) -> BigInt {
        self.terms
            .get(&(b.clone(), d.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &Chain1, factor: &BigInt) -> Result<()> {
        same_phi(&self.phi, &other.phi)?;
        for ((b, d), c) in &other.terms {
            accumulate(&mut self.terms, (b.clone(), d.clone()), c * factor);
        }
        Ok(())
    }

    pub fn sub(&self, other: &Chain1) -> Result<Chain1> {
        let mut r = self.clone();
        r.add_scaled(other, &-BigInt::one())?;
        Ok(r)
    }
}

impl fmt::Debug for Chain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Chain1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (k, ((b, d), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "({b} ⊗ {d})")?;
        }
        Ok(())
    }
}

/// `Σ a·(B ⊗ D ⊗ E)` in `C₂(ℤG, (ℤG)^φ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain2 {
    phi: IntMatrix,
    terms: BTreeMap<(GroupElement, GroupElement, GroupElement), BigInt>,
}

impl Chain2 {
    pub fn new(phi: IntMatrix) -> Result<Self> {
        check_phi(&phi)?;
        Ok(Self {
            phi,
            terms: BTreeMap::new(),
        })
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn add_term(
        &mut self,
        coeff: impl Into<BigInt>,
        b: GroupElement,
        d: GroupElement,
        e: GroupElement,
    ) -> Result<()> {
        b.check_dim(self.dim())?;
        d.check_dim(self.dim())?;
        e.check_dim(self.dim())?;
        accumulate(&mut self.terms, (b, d, e), coeff.into());
        Ok(())
    }

    pub fn with_term(
        mut self,
        coeff: impl Into<BigInt>,
        b: GroupElement,
        d: GroupElement,
        e: GroupElement,
    ) -> Result<Self> {
        self.add_term(coeff, b, d, e)?;
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &GroupElement, &GroupElement, &BigInt)> {
        self.terms.iter().map(|((b, d, e), c)| (b, d, e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Chain2, factor: &BigInt) -> Result<()> {
        same_phi(&self.phi, &other.phi)?;
        for ((b, d, e), c) in &other.terms {
            accumulate(&mut self.terms, (b.clone(), d.clone(), e.clone()), c * factor);
        }
        Ok(())
    }
}

impl fmt::Debug for Chain2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (k, ((b, d, e), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·({b} ⊗ {d} ⊗ {e})")?;
        }
        Ok(())
    }
}

/// `d₁(B ⊗ D) = D·φ(B) − B·D`, extended linearly.
pub fn boundary_d1(ch: &Chain1) -> RingElement {
    let mut r = RingElement::zero();
    for ((b, d), a) in &ch.terms {
        let twisted = apply_phi(&ch.phi, b).expect("chain terms match phi");
        r.add_term(a.clone(), d.mul(&twisted));
        r.add_term(-a, b.mul(d));
    }
    r
}

/// `d₂(B ⊗ D ⊗ E) = D ⊗ E·φ(B) − B·D ⊗ E + B ⊗ D·E`, extended linearly.
pub fn boundary_d2(ch: &Chain2) -> Chain1 {
    let mut out = Chain1 {
        phi: ch.phi.clone(),
        terms: BTreeMap::new(),
    };
    for ((b, d, e), a) in &ch.terms {
        let twisted = apply_phi(&ch.phi, b).expect("chain terms match phi");
        accumulate(&mut out.terms, (d.clone(), e.mul(&twisted)), a.clone());
        accumulate(&mut out.terms, (b.mul(d), e.clone()), -a);
        accumulate(&mut out.terms, (b.clone(), d.mul(e)), a.clone());
    }
    out
}

/// `sign · Σ_{i,j} P[i,j] ⊗ Q[j,i]`, expanded bilinearly.
pub fn tensor_trace(phi: &IntMatrix, p: &RingMatrix, q: &RingMatrix, sign: i32) -> Result<Chain1> {
    if p.rows() != q.cols() || p.cols() != q.rows() {
        return Err(Error::mismatch(format!(
            "trace of {}x{} ⊗ {}x{} is undefined",
            p.rows(),
            p.cols(),
            q.rows(),
            q.cols()
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::MalformedInput(format!("trace sign must be ±1, got {sign}")));
    }
    let mut out = Chain1::new(phi.clone())?;
    let sign = BigInt::from(sign);
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            for (g, a) in p.get(i, j).terms() {
                for (h, b) in q.get(j, i).terms() {
                    out.add_term(&sign * a * b, g.clone(), h.clone())?;
                }
            }
        }
    }
    Ok(out)
}

/// The element `B·D` that marks the semiconjugacy class of `B ⊗ D`.
pub fn marker(b: &GroupElement, d: &GroupElement) -> GroupElement {
    b.mul(d)
}
