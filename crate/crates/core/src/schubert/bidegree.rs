use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Class in `A(P^r × P^s) = Z[α, β] / (α^{r+1}, β^{s+1})`, where `α` and `β`
/// are the pulled-back hyperplane classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeClass {
    r: u32,
    s: u32,
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BidegreeClass {
    pub fn zero(r: u32, s: u32) -> Self {
        BidegreeClass { r, s, terms: BTreeMap::new() }
    }

    /// `c · α^i β^j`, zero past the truncation.
    pub fn monomial(r: u32, s: u32, i: u32, j: u32, c: BigInt) -> Self {
        let mut x = Self::zero(r, s);
        x.add_term(i, j, c);
        x
    }

    pub fn one(r: u32, s: u32) -> Self {
        Self::monomial(r, s, 0, 0, BigInt::one())
    }

    pub fn alpha(r: u32, s: u32) -> Self {
        Self::monomial(r, s, 1, 0, BigInt::one())
    }

    pub fn beta(r: u32, s: u32) -> Self {
        Self::monomial(r, s, 0, 1, BigInt::one())
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.r, self.s)
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if i > self.r || j > self.s || c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &BidegreeClass) -> Result<BidegreeClass> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> BidegreeClass {
        (0..e).fold(Self::one(self.r, self.s), |acc, _| {
            bidegree_product(&acc, self).expect("same factors")
        })
    }

    /// Coefficient of `α^r β^s`, the degree of the zero-dimensional part.
    pub fn degree(&self) -> BigInt {
        self.coefficient(self.r, self.s)
    }

    /// `pr_{2,*}`: keeps the coefficient of `α^r` as a class on `P^s`.
    pub fn pushforward_factor2(&self) -> ProjectiveClass {
        let mut out = ProjectiveClass::zero(self.s);
        for (&(i, j), c) in &self.terms {
            if i == self.r {
                out.add_term(j, c.clone());
            }
        }
        out
    }

    /// `pr_2^*` of a class on `P^s`, into `P^r × P^s`.
    pub fn pullback_factor2(x: &ProjectiveClass, r: u32) -> BidegreeClass {
        let mut out = Self::zero(r, x.dim);
        for (&j, c) in &x.terms {
            out.add_term(0, j, c.clone());
        }
        out
    }

    fn compatible(&self, other: &BidegreeClass) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

/// Truncated polynomial product in `A(P^r × P^s)`.
pub fn bidegree_product(x: &BidegreeClass, y: &BidegreeClass) -> Result<BidegreeClass> {
    x.compatible(y)?;
    let mut out = BidegreeClass::zero(x.r, x.s);
    for (&(i1, j1), c1) in &x.terms {
        for (&(i2, j2), c2) in &y.terms {
            out.add_term(i1 + i2, j1 + j2, c1 * c2);
        }
    }
    Ok(out)
}

/// Class in `A(P^dim) = Z[β] / (β^{dim+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveClass {
    dim: u32,
    terms: BTreeMap<u32, BigInt>,
}

impl ProjectiveClass {
    pub fn zero(dim: u32) -> Self {
        ProjectiveClass { dim, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn coefficient(&self, j: u32) -> BigInt {
        self.terms.get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, j: u32, c: BigInt) {
        if j > self.dim || c.is_zero() {
            return;
        }
        let e = self.terms.entry(j).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    fn h(r: u32, s: u32) -> BidegreeClass {
        BidegreeClass::alpha(r, s).add(&BidegreeClass::beta(r, s)).unwrap()
    }

    #[test]
    fn point_class_has_degree_one() {
        assert_eq!(BidegreeClass::monomial(3, 4, 3, 4, BigInt::one()).degree(), BigInt::one());
        assert!(BidegreeClass::monomial(3, 4, 4, 0, BigInt::one()).degree().is_zero());
    }

    #[test]
    fn beta_times_hyperplane_cubed() {
        let x = bidegree_product(&BidegreeClass::beta(2, 2), &h(2, 2).pow(3)).unwrap();
        assert_eq!(x.degree(), BigInt::from(3));
    }

    #[test]
    fn pushforward_of_hyperplane_power() {
        for n in 1..4u32 {
            for m in 0..5u32 {
                for a in 0..(n + m + 2) {
                    let push = h(n, m).pow(a + 1).pushforward_factor2();
                    let j = (a + 1).checked_sub(n);
                    let expected = BigInt::from(binomial(a as i64 + 1, n as i64));
                    match j {
                        Some(j) if j <= m => assert_eq!(push.coefficient(j), expected),
                        _ => assert!(push.terms.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_and_mismatch() {
        let p = h(2, 3).pow(3).pushforward_factor2();
        let back = BidegreeClass::pullback_factor2(&p, 2);
        assert_eq!(back.coefficient(0, 1), BigInt::from(3));
        assert!(bidegree_product(&h(1, 2), &h(2, 1)).is_err());
    }
}
