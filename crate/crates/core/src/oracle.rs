//! Geometric fixed-circle counts for linear homotopies
//! `F(x, t) = Mx + tc + ε` on `Tⁿ`, independent of the Hochschild machinery.
//!
//! Fixed points are the solutions of `(M − I)x + tc + ε ≡ 0 (mod ℤⁿ)` on
//! `Tⁿ × S¹`, i.e. the preimage of `−ε` under the torus homomorphism
//! `T^{n+1} → Tⁿ` induced by `B = [(M − I) | c]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intlin::{smith_normal_form, IntMatrix, SmithDecomposition};
use crate::nielsen::HomotopyDescriptor;

/// Exact samples are listed only up to this many components.
pub const SAMPLE_LIMIT: u64 = 4096;

/// Largest dimension the grid method accepts.
pub const GRID_MAX_DIM: usize = 3;

pub const GRID_MIN_RESOLUTION: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHomotopy {
    desc: HomotopyDescriptor,
    epsilon: Vec<BigRational>,
}

impl LinearHomotopy {
    /// Offsets are reduced into `[0, 1)`; the fixed set only depends on them
    /// modulo `ℤⁿ`.
    pub fn new(desc: HomotopyDescriptor, epsilon: Vec<BigRational>) -> Result<Self> {
        if epsilon.len() != desc.n() {
            return Err(Error::mismatch(format!(
                "epsilon has {} entries, n = {}",
                epsilon.len(),
                desc.n()
            )));
        }
        let epsilon = epsilon.iter().map(|e| e - e.floor()).collect();
        Ok(Self { desc, epsilon })
    }

    /// Uses [`choose_generic_epsilon`].
    pub fn generic(desc: HomotopyDescriptor, seed: u64) -> Self {
        let epsilon = choose_generic_epsilon(&desc, seed);
        Self { desc, epsilon }
    }

    pub fn desc(&self) -> &HomotopyDescriptor {
        &self.desc
    }

    pub fn epsilon(&self) -> &[BigRational] {
        &self.epsilon
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleMethod {
    Exact,
    Grid,
}

impl OracleMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleMethod::Exact => "EXACT",
            OracleMethod::Grid => "GRID",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSetReport {
    pub component_count: BigInt,
    pub method: OracleMethod,
    /// One point `(x1, ..., xn, t)` per component, coordinates in `[0, 1)`.
    pub samples: Option<Vec<Vec<BigRational>>>,
}

fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

fn rational_mul_vec(m: &IntMatrix, v: &[BigRational]) -> Vec<BigRational> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (a, x)| acc + x * BigRational::from_integer(a.clone()))
        })
        .collect()
}

pub fn fixed_set_exact(h: &LinearHomotopy) -> FixedSetReport {
    let b = h.desc.class_matrix();
    let snf = smith_normal_form(&b);
    let target: Vec<BigRational> = h.epsilon.iter().map(|e| -e).collect();
    let z = rational_mul_vec(&snf.u, &target);
    let r = snf.rank();
    if !z[r..].iter().all(BigRational::is_integer) {
        return FixedSetReport {
            component_count: BigInt::zero(),
            method: OracleMethod::Exact,
            samples: Some(Vec::new()),
        };
    }
    let factors = snf.nonzero_diagonal();
    let count: BigInt = factors.iter().product();
    let samples = count
        .to_u64()
        .filter(|&c| c <= SAMPLE_LIMIT)
        .map(|_| exact_samples(&snf, &z, &factors));
    FixedSetReport {
        component_count: count,
        method: OracleMethod::Exact,
        samples,
    }
}

/// Solves `S y ≡ z` with `y_i = (z_i + k_i) / d_i` on the constrained
/// coordinates and zero on the free ones, then maps back through `V`.
fn exact_samples(snf: &SmithDecomposition, z: &[BigRational], factors: &[BigInt]) -> Vec<Vec<BigRational>> {
    let dim = snf.v.rows();
    let mut shifts: Vec<Vec<BigInt>> = vec![Vec::new()];
    for d in factors {
        shifts = shifts
            .into_iter()
            .flat_map(|prefix| {
                num_iter(d).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    shifts
        .into_iter()
        .map(|ks| {
            let mut y = vec![BigRational::zero(); dim];
            for (i, (k, d)) in ks.iter().zip(factors).enumerate() {
                y[i] = (&z[i] + BigRational::from_integer(k.clone())) / BigRational::from_integer(d.clone());
            }
            rational_mul_vec(&snf.v, &y).iter().map(frac).collect()
        })
        .collect()
}

fn num_iter(bound: &BigInt) -> impl Iterator<Item = BigInt> {
    let bound = bound.clone();
    std::iter::successors(Some(BigInt::zero()), |k| Some(k + 1)).take_while(move |k| *k < bound)
}

fn is_prime(p: &BigInt) -> bool {
    if *p < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(1/p, 1/p², ..., 1/pⁿ)` where `p` is the `seed`-th prime exceeding twice
/// every entry of `B = [(M − I) | c]` and of the left Smith transforms of `B`
/// and `M − I`, and dividing no invariant factor of `B`.
///
/// With such `p`, `U·ε` has a non-integral entry in every row of every such
/// transform `U`, so `−ε` avoids every proper image subtorus involved: there
/// are no fixed points on the `t = 0` slice when `det(M − I) = 0`, and none at
/// all when `rank B < n`.
pub fn choose_generic_epsilon(desc: &HomotopyDescriptor, seed: u64) -> Vec<BigRational> {
    let b = desc.class_matrix();
    let snf_b = smith_normal_form(&b);
    let snf_shift = smith_normal_form(&desc.phi_minus_identity());
    let bound = [&b, &snf_b.u, &snf_shift.u]
        .iter()
        .map(|m| m.max_abs_entry())
        .max()
        .unwrap_or_default()
        * 2;
    let factors = snf_b.nonzero_diagonal();
    let admissible = |p: &BigInt| is_prime(p) && factors.iter().all(|d| !d.is_multiple_of(p));
    let mut p = bound + 1;
    let mut remaining = seed;
    loop {
        if admissible(&p) {
            if remaining == 0 {
                break;
            }
            remaining -= 1;
        }
        p += 1;
    }
    let mut denom = BigInt::one();
    (0..desc.n())
        .map(|_| {
            denom *= &p;
            BigRational::new(BigInt::one(), denom.clone())
        })
        .collect()
}

const AXES: usize = GRID_MAX_DIM + 1;

type GridPoint = [usize; AXES];

/// Grid residuals in units of `1/L`, `L` the lcm of the axis resolutions, so
/// that every residual is an exact integer plus a fixed offset.
struct GridProblem {
    /// `B_ij · L / R_j` reduced modulo `L`.
    coef: Vec<[i128; AXES]>,
    res: Vec<usize>,
    strides: Vec<usize>,
    /// `L · ε_i`
    offset: Vec<f64>,
    scale: i128,
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::ResolutionTooCoarse(format!("matrix entry {v} too large for grid sampling")))
}

/// Default marking tolerance `1.5 / R · (1 + max row sum of |B|)` with `R` the
/// finest-resolved axis count.
pub fn default_grid_tolerance(desc: &HomotopyDescriptor, resolution: &[usize]) -> f64 {
    let b = desc.class_matrix();
    let row_sum = (0..b.rows())
        .map(|i| b.row(i).iter().map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>())
        .fold(0.0, f64::max);
    let r = resolution.iter().copied().min().unwrap_or(1) as f64;
    1.5 / r * (1.0 + row_sum)
}

/// Samples `Tⁿ × S¹` on a grid with `resolution[j]` points along axis `j`
/// (the last axis is `t`), marks points whose residual
/// `(M − I)x + tc + ε` is within `tol` of `ℤⁿ` in the sup norm, and counts
/// the wrap-around connected components of the marked set that contain a
/// core point (residual at most `tol − δ`, where `δ` bounds the residual
/// change under rounding to the grid).
///
/// Every fixed component then yields exactly one counted component provided
/// `2δ <= tol` and `2·tol + step < 1`, with `step` the largest residual
/// change along a single grid edge; otherwise the resolution is rejected.
/// When `rank B < n` the image of `B` is a proper subtorus that can pass
/// arbitrarily close to `−ε`, so `tol` must also be below the separation bound
/// of [`rank_deficient_separation`].
pub fn fixed_set_grid(h: &LinearHomotopy, resolution: &[usize], tol: Option<f64>) -> Result<FixedSetReport> {
    let n = h.desc.n();
    if n > GRID_MAX_DIM {
        return Err(Error::UnsupportedDimension {
            n,
            reason: format!("grid sampling supports n <= {GRID_MAX_DIM}"),
        });
    }
    if resolution.len() != n + 1 {
        return Err(Error::mismatch(format!(
            "grid needs {} axis resolutions, got {}",
            n + 1,
            resolution.len()
        )));
    }
    if let Some(&r) = resolution.iter().find(|&&r| r < GRID_MIN_RESOLUTION) {
        return Err(Error::ResolutionTooCoarse(format!(
            "resolution {r} below the minimum of {GRID_MIN_RESOLUTION} per axis"
        )));
    }
    let b = h.desc.class_matrix();
    let tol = tol.unwrap_or_else(|| default_grid_tolerance(&h.desc, resolution));
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::MalformedInput(format!("tolerance must be positive, got {tol}")));
    }

    let b_small: Vec<Vec<i64>> = (0..n).map(|i| b.row(i).iter().map(to_i64).collect()).collect::<Result<_>>()?;
    let rounding = b_small
        .iter()
        .map(|row| row.iter().zip(resolution).map(|(&x, &r)| x.unsigned_abs() as f64 / (2.0 * r as f64)).sum::<f64>())
        .fold(0.0, f64::max);
    let step = b_small
        .iter()
        .flat_map(|row| row.iter().zip(resolution).map(|(&x, &r)| x.unsigned_abs() as f64 / r as f64))
        .fold(0.0, f64::max);
    let core_tol = tol - rounding;
    if core_tol < rounding {
        return Err(Error::ResolutionTooCoarse(format!(
            "tolerance {tol} is below twice the rounding error {rounding}"
        )));
    }
    if 2.0 * tol + step >= 1.0 {
        return Err(Error::ResolutionTooCoarse(format!(
            "tolerance {tol} with per-step drift {step} cannot separate components"
        )));
    }

    if let Some(limit) = rank_deficient_separation(&b, &h.epsilon) {
        if tol >= limit {
            return Err(Error::ResolutionTooCoarse(format!(
                "tolerance {tol} does not separate -ε from the image subtorus (needs < {limit})"
            )));
        }
    }

    let problem = GridProblem::new(b_small, resolution, &h.epsilon)?;
    let marks = problem.mark(tol, core_tol);
    let (count, samples) = problem.components(&marks);

    if count == 0 {
        let exact = fixed_set_exact(h);
        if exact.component_count.is_positive() {
            return Err(Error::ResolutionTooCoarse(format!(
                "no grid point within {tol} of the fixed set, which has {} components",
                exact.component_count
            )));
        }
    }
    Ok(FixedSetReport {
        component_count: BigInt::from(count),
        method: OracleMethod::Grid,
        samples: Some(samples),
    })
}

/// For `rank B = r < n`, with `U B V = S` and `z = U(−ε)`: a residual `ρ`
/// of sup norm `s` satisfies `(Uρ)_i ≡ −z_i (mod 1)` for `i >= r` and
/// `|(Uρ)_i| <= s·|U_i|₁`. If some `z_i` is non-integral, no residual below
/// `‖z_i‖ / |U_i|₁` exists. Otherwise a residual below `1 / |U_i|₁` for all
/// such `i` lies in the real image of `B` and is removable along a segment.
/// Returns `None` when `B` has rank `n`.
fn rank_deficient_separation(b: &IntMatrix, epsilon: &[BigRational]) -> Option<f64> {
    let snf = smith_normal_form(b);
    let r = snf.rank();
    if r == b.rows() {
        return None;
    }
    let target: Vec<BigRational> = epsilon.iter().map(|e| -e).collect();
    let z = rational_mul_vec(&snf.u, &target);
    let norm = |i: usize| snf.u.row(i).iter().map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>();
    let rows = r..b.rows();
    if z[r..].iter().all(BigRational::is_integer) {
        return Some(rows.map(|i| 1.0 / norm(i)).fold(f64::INFINITY, f64::min));
    }
    let off = |q: &BigRational| {
        let f = frac(q);
        let g = BigRational::one() - &f;
        f.min(g).to_f64().unwrap_or(0.0)
    };
    Some(rows.map(|i| off(&z[i]) / norm(i)).fold(0.0, f64::max) * (1.0 - 1e-9))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Off,
    Near,
    Core,
}

impl GridProblem {
    fn new(b: Vec<Vec<i64>>, resolution: &[usize], epsilon: &[BigRational]) -> Result<Self> {
        let scale_int = resolution.iter().fold(BigInt::one(), |acc, &r| acc.lcm(&BigInt::from(r)));
        let scale = scale_int
            .to_i64()
            .filter(|&l| l < 1 << 40)
            .ok_or_else(|| Error::ResolutionTooCoarse(format!("axis resolutions {resolution:?} have too large an lcm")))?
            as i128;
        let coef = b
            .iter()
            .map(|row| {
                let mut c = [0i128; AXES];
                for ((slot, &bij), &rj) in c.iter_mut().zip(row).zip(resolution) {
                    *slot = (bij as i128 * (scale / rj as i128)).rem_euclid(scale);
                }
                c
            })
            .collect();
        let offset = epsilon
            .iter()
            .map(|e| (e * BigRational::from_integer(scale_int.clone())).to_f64().unwrap_or(0.0))
            .collect();
        let mut strides = vec![1; resolution.len()];
        for j in (0..resolution.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * resolution[j + 1];
        }
        Ok(Self {
            coef,
            res: resolution.to_vec(),
            strides,
            offset,
            scale,
        })
    }

    fn len(&self) -> usize {
        self.res.iter().product()
    }

    fn coords(&self, index: usize) -> GridPoint {
        let mut k = [0; AXES];
        for (j, (&r, &stride)) in self.res.iter().zip(&self.strides).enumerate() {
            k[j] = index / stride % r;
        }
        k
    }

    /// Sup-norm distance from the residual at grid point `k` to `ℤⁿ`.
    fn distance(&self, k: &GridPoint) -> f64 {
        let scale = self.scale as f64;
        self.coef
            .iter()
            .zip(&self.offset)
            .map(|(row, &off)| {
                let lattice: i128 = row.iter().zip(k).map(|(&c, &kj)| c * kj as i128).sum();
                let v = (lattice.rem_euclid(self.scale) as f64 + off).rem_euclid(scale);
                v.min(scale - v) / scale
            })
            .fold(0.0, f64::max)
    }

    /// The first axis is the slowest-varying one, so contiguous chunks are
    /// slabs along it.
    fn mark(&self, tol: f64, core_tol: f64) -> Vec<Mark> {
        let slab = self.strides[0];
        let mut marks = vec![Mark::Off; self.len()];
        marks.par_chunks_mut(slab).enumerate().for_each(|(s, chunk)| {
            for (offset, m) in chunk.iter_mut().enumerate() {
                let d = self.distance(&self.coords(s * slab + offset));
                *m = if d <= core_tol {
                    Mark::Core
                } else if d <= tol {
                    Mark::Near
                } else {
                    Mark::Off
                };
            }
        });
        marks
    }

    /// Union-find over marked points with wrap-around axis adjacency; counts
    /// components holding a core point and returns the core point of least
    /// residual in each.
    fn components(&self, marks: &[Mark]) -> (usize, Vec<Vec<BigRational>>) {
        let mut parent: Vec<usize> = (0..marks.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for idx in 0..marks.len() {
            if marks[idx] == Mark::Off {
                continue;
            }
            let k = self.coords(idx);
            for (axis, (&r, &stride)) in self.res.iter().zip(&self.strides).enumerate() {
                let j = if k[axis] + 1 == r { idx - (r - 1) * stride } else { idx + stride };
                if marks[j] != Mark::Off {
                    let (a, b) = (find(&mut parent, idx), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut best: std::collections::BTreeMap<usize, (f64, usize)> = std::collections::BTreeMap::new();
        for idx in 0..marks.len() {
            if marks[idx] != Mark::Core {
                continue;
            }
            let root = find(&mut parent, idx);
            let d = self.distance(&self.coords(idx));
            let entry = best.entry(root).or_insert((d, idx));
            if d < entry.0 {
                *entry = (d, idx);
            }
        }
        let samples = best
            .values()
            .map(|&(_, idx)| {
                self.coords(idx)
                    .iter()
                    .zip(&self.res)
                    .map(|(&k, &r)| BigRational::new(BigInt::from(k), BigInt::from(r)))
                    .collect()
            })
            .collect();
        (best.len(), samples)
    }
}
