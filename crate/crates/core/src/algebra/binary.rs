use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Binary form of fixed degree in `(s, t)`; `coeffs[i]` multiplies `s^i t^(degree-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm { degree, coeffs: vec![Rational::zero(); degree as usize + 1] }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { degree: 0, coeffs: vec![c] }
    }

    /// The linear form `a*s + b*t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm { degree: 1, coeffs: vec![b, a] }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm { degree: coeffs.len() as u32 - 1, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = BinaryForm::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        (0..e).fold(BinaryForm::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn add_assign(&mut self, other: &BinaryForm) {
        assert_eq!(self.degree, other.degree, "binary forms of different degree");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// The affine restriction `F(s, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Power of `t` dividing the form; `None` for the zero form.
    pub fn t_multiplicity(&self) -> Option<u32> {
        let d = self.dehomogenize().degree()?;
        Some(self.degree - d as u32)
    }
}

/// Dense univariate polynomial over Q, coefficients from low to high degree,
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `a*s + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::default(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::default(), UniPoly::default());
        };
        if nd < dd {
            return (UniPoly::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = &rem[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dc;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::from_i64;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| from_i64(x)).collect())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (s - 1)(s + 2) and (s - 1)(s - 3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[0, 1])).degree(), Some(0));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 7]);
        let b = p(&[1, 4, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn t_multiplicity_tracks_root_at_infinity() {
        // s * t^2
        let f = BinaryForm::from_coeffs(vec![from_i64(0), from_i64(1), from_i64(0), from_i64(0)]);
        assert_eq!(f.t_multiplicity(), Some(2));
        assert_eq!(BinaryForm::zero(3).t_multiplicity(), None);
        let st = BinaryForm::linear(from_i64(1), from_i64(0))
            .mul(&BinaryForm::linear(from_i64(0), from_i64(1)));
        assert_eq!(st.coeffs()[1], from_i64(1));
    }
}
