//! Splitting types of cokernels of matrix pencils on `P^1`.
//!
//! A pencil `s*A + t*B` with `A`, `B` of size `w x u` presents a sheaf map
//! `O(-1)^u -> O^w`. When it is injective on every fiber, its cokernel `E` is
//! a vector bundle of rank `w - u` and degree `u`, and `E = ⊕ O(b_i)` with all
//! `b_i >= 0` (quotients of trivial bundles are globally generated).
//!
//! The type is read off from `h_t = h^0(E(-t))`. Twisting the presentation by
//! `O(-t)` and taking cohomology gives, for `t >= 1`,
//!
//! ```text
//! 0 -> H^0(E(-t)) -> H^1(O(-1-t))^u -> H^1(O(-t))^w
//! ```
//!
//! and by Serre duality the last map is dual to the Sylvester block matrix
//! `S_{t-1} : H^0(O(t-2)) ⊗ W* -> H^0(O(t-1)) ⊗ U*` of the transposed pencil.
//! Hence `h_t = t*u - rank S_{t-1}`. On the other side `h_t = Σ max(b_i - t + 1, 0)`,
//! so `h_t - h_{t+1} = #{i : b_i >= t}`.
//!
//! Equivalently `h_t` is the dimension of the space of chains
//! `(θ_0, ..., θ_{t-1})` in `k^u` with `A θ_i + B θ_{i+1} = 0`, which
//! [`Pencil::twisted_section_dims_chained`] builds one link at a time from the
//! kernel of `[A | B]`. That route only ever factors `u`-row matrices and is
//! the one [`Pencil::splitting_type`] uses; the Sylvester ranks are kept as
//! an independent cross-check.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::random::{self, SeededRng};
use crate::algebra::{ExactMatrix, Rational, UniPoly};
use crate::error::{Error, Result};

/// Seed for the specialization points of the injectivity test.
const INJECTIVITY_SEED: u64 = 0x5eed_0f1e;

/// Non-increasing tuple of nonnegative integers `(b_1, ..., b_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    entries: Vec<u32>,
}

impl SplittingType {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing);
        }
        Ok(SplittingType { entries })
    }

    /// `(1, ..., 1, 0, ..., 0)` with `ones` ones.
    pub fn generic(length: usize, ones: usize) -> Self {
        assert!(ones <= length, "more ones than entries");
        let mut entries = vec![1; ones];
        entries.resize(length, 0);
        SplittingType { entries }
    }

    /// `(2, 1, ..., 1, 0, ..., 0)` of the given length and degree `>= 2`.
    pub fn one_jump(length: usize, degree: usize) -> Self {
        assert!(degree >= 2 && degree - 1 <= length, "no room for a single jump");
        let mut entries = vec![2];
        entries.resize(degree - 1, 1);
        entries.resize(length, 0);
        SplittingType { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&b| b as u64).sum()
    }

    pub fn zeros(&self) -> usize {
        self.entries.iter().filter(|&&b| b == 0).count()
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`. Larger types are more
    /// special.
    pub fn dominates(&self, other: &SplittingType) -> Result<bool> {
        if self.len() != other.len() || self.sum() != other.sum() {
            return Err(Error::IncomparableFrame);
        }
        let (mut lhs, mut rhs) = (0u64, 0u64);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            lhs += *a as u64;
            rhs += *b as u64;
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// The pencil `s*A + t*B` of two `w x u` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    a: ExactMatrix,
    b: ExactMatrix,
}

impl Pencil {
    pub fn new(a: ExactMatrix, b: ExactMatrix) -> Result<Self> {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::Dimension(alloc::format!(
                "pencil halves differ: {}x{} vs {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if a.cols() > a.rows() {
            return Err(Error::Dimension(alloc::format!(
                "pencil with u = {} > w = {} cannot be injective",
                a.cols(),
                a.rows()
            )));
        }
        Ok(Pencil { a, b })
    }

    pub fn a(&self) -> &ExactMatrix {
        &self.a
    }

    pub fn b(&self) -> &ExactMatrix {
        &self.b
    }

    /// Rank of the target `O^w`.
    pub fn w(&self) -> usize {
        self.a.rows()
    }

    /// Rank of the source `O(-1)^u`.
    pub fn u(&self) -> usize {
        self.a.cols()
    }

    /// The constant matrix `s*A + t*B`.
    pub fn at(&self, s: &Rational, t: &Rational) -> ExactMatrix {
        ExactMatrix::combine(s, &self.a, t, &self.b).expect("halves share a shape")
    }

    /// `s*B + t*A`.
    pub fn swapped(&self) -> Pencil {
        Pencil { a: self.b.clone(), b: self.a.clone() }
    }

    /// Replaces `(A, B)` by `(αA + βB, γA + δB)`, an invertible change of the
    /// coordinates `(s : t)`.
    pub fn change_coordinates(
        &self,
        alpha: &Rational,
        beta: &Rational,
        gamma: &Rational,
        delta: &Rational,
    ) -> Result<Pencil> {
        if (alpha * delta - beta * gamma).is_zero() {
            return Err(Error::InvalidParameters("coordinate change is singular".into()));
        }
        Pencil::new(
            ExactMatrix::combine(alpha, &self.a, beta, &self.b)?,
            ExactMatrix::combine(gamma, &self.a, delta, &self.b)?,
        )
    }

    /// `(L A R, L B R)`.
    pub fn transform(&self, left: &ExactMatrix, right: &ExactMatrix) -> Result<Pencil> {
        Pencil::new(left.mul(&self.a)?.mul(right)?, left.mul(&self.b)?.mul(right)?)
    }

    /// Whether the map `O(-1)^u -> O^w` is injective, i.e. the pencil has rank
    /// `u` over the function field.
    ///
    /// Tries three random specializations first; if none reaches rank `u`
    /// the rank over `Q(s)` (chart `t = 1`) is computed exactly.
    pub fn is_injective(&self) -> bool {
        let u = self.u();
        if u == 0 {
            return true;
        }
        let mut rng = random::stream(INJECTIVITY_SEED, 0);
        for _ in 0..3 {
            let s = random::integer(&mut rng, random::DEFAULT_BOUND);
            let t = random::nonzero_integer(&mut rng, random::DEFAULT_BOUND);
            if self.at(&s, &t).rank() == u {
                return true;
            }
        }
        let entries: Vec<Vec<UniPoly>> = (0..self.w())
            .map(|i| {
                (0..u)
                    .map(|j| UniPoly::linear(self.a.get(i, j).clone(), self.b.get(i, j).clone()))
                    .collect()
            })
            .collect();
        polynomial_rank(entries, u) == u
    }

    /// The Sylvester block matrix `S_j`, of size `(j+1)u x jw`: column block
    /// `i` carries `Aᵀ` in row block `i` and `Bᵀ` in row block `i + 1`.
    pub fn sylvester(&self, j: usize) -> ExactMatrix {
        let (w, u) = (self.w(), self.u());
        let mut s = ExactMatrix::zeros((j + 1) * u, j * w);
        for block in 0..j {
            for r in 0..u {
                for c in 0..w {
                    let col = block * w + c;
                    let a = self.a.get(c, r);
                    if !a.is_zero() {
                        s.set(block * u + r, col, a.clone());
                    }
                    let b = self.b.get(c, r);
                    if !b.is_zero() {
                        s.set((block + 1) * u + r, col, b.clone());
                    }
                }
            }
        }
        s
    }

    /// `[h_1, ..., h_{t_max}]` with `h_t = h^0(E(-t)) = t*u - rank S_{t-1}`.
    pub fn twisted_section_dims(&self, t_max: usize) -> Result<Vec<usize>> {
        if !self.is_injective() {
            return Err(Error::NotInjective);
        }
        let u = self.u();
        let mut dims = Vec::with_capacity(t_max);
        for t in 1..=t_max {
            if dims.last() == Some(&0) {
                dims.push(0);
                continue;
            }
            dims.push(t * u - self.sylvester(t - 1).rank());
        }
        Ok(dims)
    }

    /// Same sequence as [`twisted_section_dims`](Self::twisted_section_dims),
    /// computed as dimensions of chain spaces
    /// `{(θ_0, ..., θ_{t-1}) : A θ_i + B θ_{i+1} = 0}`.
    pub fn twisted_section_dims_chained(&self, t_max: usize) -> Result<Vec<usize>> {
        if !self.is_injective() {
            return Err(Error::NotInjective);
        }
        Ok(self.chain_dims(t_max))
    }

    fn chain_dims(&self, t_max: usize) -> Vec<usize> {
        let u = self.u();
        let mut dims = Vec::with_capacity(t_max);
        if t_max == 0 {
            return dims;
        }
        dims.push(u);
        if u == 0 {
            dims.resize(t_max, 0);
            return dims;
        }
        // links (θ, θ') with Aθ + Bθ' = 0, split into their two halves
        let links = self.a.hconcat(&self.b).expect("halves share a shape").kernel_basis();
        let m = links.len();
        let head = ExactMatrix::from_fn(u, m, |i, j| links[j][i].clone());
        let tail = ExactMatrix::from_fn(u, m, |i, j| links[j][u + i].clone());
        // last element of each basis chain of the current space
        let mut last = ExactMatrix::identity(u);
        while dims.len() < t_max {
            if *dims.last().expect("nonempty") == 0 {
                dims.push(0);
                continue;
            }
            let minus_head = ExactMatrix::combine(&-Rational::one(), &head, &Rational::zero(), &head)
                .expect("same shape");
            let glue = last.hconcat(&minus_head).expect("both have u rows");
            let next = glue.kernel_basis();
            let prev_dim = last.cols();
            let coeffs = ExactMatrix::from_fn(m, next.len(), |i, j| next[j][prev_dim + i].clone());
            last = tail.mul(&coeffs).expect("m x dim");
            dims.push(next.len());
        }
        dims
    }

    /// Splitting type of the cokernel bundle.
    ///
    /// Fails with [`Error::NotInjective`] for non-injective pencils and with
    /// [`Error::InconsistentSections`] when the section dimensions do not come
    /// from a bundle `⊕ O(b_i)` with `b_i >= 0` (torsion in the cokernel).
    pub fn splitting_type(&self) -> Result<SplittingType> {
        let dims = self.twisted_section_dims_chained(self.u() + 1)?;
        type_from_section_dims(&dims, self.w(), self.u())
    }

    /// Block-diagonal pencil with one Kronecker block `L_b` per entry `b`:
    /// `A = [I_b; 0]`, `B = [0; I_b]` of size `(b+1) x b`, whose cokernel is
    /// `O(b)`. With `mixing = Some(seed)` the result is further multiplied by
    /// seeded random unimodular integer matrices on both sides.
    pub fn kronecker(ty: &SplittingType, w: usize, u: usize, mixing: Option<u64>) -> Result<Pencil> {
        if ty.sum() != u as u64 || ty.len() + u != w {
            return Err(Error::TypeFrame { length: ty.len(), sum: ty.sum(), w, u });
        }
        let mut a = ExactMatrix::zeros(w, u);
        let mut b = ExactMatrix::zeros(w, u);
        let (mut row, mut col) = (0, 0);
        for &entry in ty.entries() {
            let entry = entry as usize;
            for i in 0..entry {
                a.set(row + i, col + i, Rational::one());
                b.set(row + i + 1, col + i, Rational::one());
            }
            row += entry + 1;
            col += entry;
        }
        let pencil = Pencil::new(a, b)?;
        match mixing {
            None => Ok(pencil),
            Some(seed) => {
                let mut rng = random::stream(seed, 0);
                let left = unimodular(&mut rng, w);
                let right = unimodular(&mut rng, u);
                pencil.transform(&left, &right)
            }
        }
    }
}

/// Rebuilds `(b_i)` from `[h_1, h_2, ...]` using `h_t - h_{t+1} = #{i : b_i >= t}`.
pub fn type_from_section_dims(dims: &[usize], w: usize, u: usize) -> Result<SplittingType> {
    let bad = || Error::InconsistentSections(dims.to_vec());
    let rank = w - u;
    if dims.first().copied().unwrap_or(0) != u || dims.last().copied().unwrap_or(0) != 0 {
        return Err(bad());
    }
    let counts: Vec<usize> = dims
        .windows(2)
        .map(|p| p[0].checked_sub(p[1]))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    if counts.windows(2).any(|c| c[0] < c[1]) || counts.first().is_some_and(|&c| c > rank) {
        return Err(bad());
    }
    let entries = (0..rank).map(|i| counts.iter().filter(|&&c| c > i).count() as u32).collect();
    let ty = SplittingType::new(entries)?;
    if ty.sum() != u as u64 {
        return Err(bad());
    }
    Ok(ty)
}

/// Seeded random `n x n` integer matrix of determinant ±1: a permutation
/// times unit lower and unit upper triangular factors with small entries.
pub fn unimodular(rng: &mut SeededRng, n: usize) -> ExactMatrix {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = ExactMatrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let l = ExactMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => Rational::one(),
        core::cmp::Ordering::Greater => random::integer(rng, 2),
        core::cmp::Ordering::Less => Rational::zero(),
    });
    let r = ExactMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => Rational::one(),
        core::cmp::Ordering::Less => random::integer(rng, 2),
        core::cmp::Ordering::Greater => Rational::zero(),
    });
    p.mul(&l).and_then(|pl| pl.mul(&r)).expect("square factors")
}

/// Rank over `Q(s)` of a matrix with entries in `Q[s]`, by Bareiss
/// elimination with exact polynomial division.
fn polynomial_rank(mut m: Vec<Vec<UniPoly>>, cols: usize) -> usize {
    let mut prev = UniPoly::constant(Rational::one());
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &(&pivot_row[c] * &row[j]) - &(&factor * &pivot_row[j]);
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    r
}
