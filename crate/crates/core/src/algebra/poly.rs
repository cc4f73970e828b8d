use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::binary::BinaryForm;
use super::monomial::{Monomial, MonomialIndex};
use super::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// A homogeneous form of fixed degree in `num_vars` variables over Q.
///
/// The zero form keeps its nominal degree, so `f * 0` still lives in the
/// expected graded piece.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousPolynomial { num_vars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(num_vars), c)
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        Self::term(Monomial::variable(num_vars, index), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.num_vars(), m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a form from `(exponents, coefficient)` pairs, summing repeated
    /// monomials and dropping zero coefficients.
    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_vars, degree);
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            if exps.len() != num_vars {
                return Err(Error::ExponentLength { term: i, expected: num_vars, found: exps.len() });
            }
            let m = Monomial::new(exps);
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { term: i, expected: degree, found: m.degree() });
            }
            *p.terms.entry(m).or_insert_with(Rational::zero) += c;
        }
        p.terms.retain(|_, c| !c.is_zero());
        Ok(p)
    }

    /// Inverse of [`coefficient_vector`](Self::coefficient_vector).
    pub fn from_coefficients(n: usize, degree: u32, coeffs: &[Rational]) -> Self {
        let basis = super::monomial_basis(n, degree as i64);
        assert_eq!(basis.len(), coeffs.len(), "coefficient count does not match the graded piece");
        let terms = basis
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, c.clone()))
            .collect();
        HomogeneousPolynomial { num_vars: n + 1, degree, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Dimension `n` of the projective space the form lives on.
    pub fn n(&self) -> usize {
        self.num_vars - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients in [`monomial_basis`](super::monomial_basis) order.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        super::monomial_basis(self.n(), self.degree as i64)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.degree != other.degree {
            return Err(Error::InhomogeneousSum { left: self.degree, right: other.degree });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            *out.terms.entry(m.clone()).or_insert_with(Rational::zero) += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars, self.degree);
        }
        HomogeneousPolynomial {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        poly_mul(self, other)
    }

    /// Matrix of `theta -> self * theta` from `H^0(O(src_deg))` to
    /// `H^0(O(src_deg + deg self))`, both in monomial basis order.
    pub fn mult_matrix(&self, src_deg: i64) -> ExactMatrix {
        let n = self.n();
        let source = super::monomial_basis(n, src_deg);
        let target = MonomialIndex::new(n, src_deg + self.degree as i64);
        let mut m = ExactMatrix::zeros(target.len(), source.len());
        for (j, theta) in source.iter().enumerate() {
            for (mono, c) in &self.terms {
                let row = target.position(&mono.mul(theta)).expect("product stays in the graded piece");
                m.set(row, j, c.clone());
            }
        }
        m
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VariableCountMismatch { left: self.num_vars, right: other.num_vars });
        }
        Ok(())
    }
}

pub fn poly_mul(f: &HomogeneousPolynomial, g: &HomogeneousPolynomial) -> Result<HomogeneousPolynomial> {
    f.check_ring(g)?;
    let mut out = HomogeneousPolynomial::zero(f.num_vars, f.degree + g.degree);
    for (m1, c1) in &f.terms {
        for (m2, c2) in &g.terms {
            *out.terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
        }
    }
    out.terms.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Substitutes `x_i = subst[i][0] * s + subst[i][1] * t`.
pub fn restrict_to_line(f: &HomogeneousPolynomial, subst: &ExactMatrix) -> Result<BinaryForm> {
    if subst.rows() != f.num_vars || subst.cols() != 2 {
        return Err(Error::Dimension(format!(
            "substitution must be {}x2, got {}x{}",
            f.num_vars,
            subst.rows(),
            subst.cols()
        )));
    }
    let linear: Vec<BinaryForm> = (0..f.num_vars)
        .map(|i| BinaryForm::linear(subst.get(i, 0).clone(), subst.get(i, 1).clone()))
        .collect();
    // powers[i][e] = (a_i s + b_i t)^e, built lazily up to the largest exponent
    let max_exp = f.terms.keys().flat_map(|m| m.exponents().iter().copied()).max().unwrap_or(0);
    let powers: Vec<Vec<BinaryForm>> = linear
        .iter()
        .map(|l| {
            let mut p = Vec::with_capacity(max_exp as usize + 1);
            p.push(BinaryForm::constant(Rational::one()));
            for e in 1..=max_exp as usize {
                let next = p[e - 1].mul(l);
                p.push(next);
            }
            p
        })
        .collect();
    let mut out = BinaryForm::zero(f.degree);
    for (m, c) in &f.terms {
        let mut term = BinaryForm::constant(c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                term = term.mul(&powers[i][e as usize]);
            }
        }
        out.add_assign(&term);
    }
    Ok(out)
}

impl fmt::Display for HomogeneousPolynomial {
    /// Writes the inline grammar, e.g. `3/2*x0^2 - x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {} in {} vars] {}", self.degree, self.num_vars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::from_i64;
    use alloc::string::ToString;
    use alloc::vec;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::variable(n + 1, i)
    }

    #[test]
    fn products_of_variables() {
        let p = poly_mul(&x(1, 0), &x(1, 1)).unwrap();
        assert_eq!(p.to_string(), "x0*x1");
        let zero = HomogeneousPolynomial::zero(2, 3);
        let q = poly_mul(&p, &zero).unwrap();
        assert!(q.is_zero());
        assert_eq!(q.degree(), 5);
    }

    #[test]
    fn difference_of_squares() {
        let plus = x(1, 0).add(&x(1, 1)).unwrap();
        let minus = x(1, 0).add(&x(1, 1).scale(&from_i64(-1))).unwrap();
        assert_eq!(poly_mul(&plus, &minus).unwrap().to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn mismatched_rings_rejected() {
        assert!(poly_mul(&x(1, 0), &x(2, 0)).is_err());
        assert!(x(2, 0).add(&poly_mul(&x(2, 0), &x(2, 1)).unwrap()).is_err());
    }

    #[test]
    fn from_terms_validates_degrees() {
        let err = HomogeneousPolynomial::from_terms(3, 2, vec![(vec![2, 0, 0], from_i64(1)), (vec![1, 0, 0], from_i64(1))]);
        assert_eq!(err, Err(Error::DegreeMismatch { term: 1, expected: 2, found: 1 }));
        let err = HomogeneousPolynomial::from_terms(3, 1, vec![(vec![1, 0], from_i64(1))]);
        assert!(matches!(err, Err(Error::ExponentLength { .. })));
        let cancel = HomogeneousPolynomial::from_terms(
            2,
            1,
            vec![(vec![1, 0], from_i64(2)), (vec![1, 0], from_i64(-2))],
        )
        .unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn mult_matrix_of_x0_on_linear_forms() {
        let m = x(1, 0).mult_matrix(1);
        assert_eq!((m.rows(), m.cols()), (3, 2));
        // columns are x0*x0 = x0^2 and x0*x1
        assert_eq!(m.column(0), vec![from_i64(1), from_i64(0), from_i64(0)]);
        assert_eq!(m.column(1), vec![from_i64(0), from_i64(1), from_i64(0)]);
    }

    #[test]
    fn mult_matrix_of_x0x1_in_three_variables() {
        let f = poly_mul(&x(2, 0), &x(2, 1)).unwrap();
        let m = f.mult_matrix(1);
        assert_eq!((m.rows(), m.cols()), (10, 3));
        let cubics = super::super::monomial_basis(2, 3);
        let support = |j: usize| -> Vec<_> {
            (0..10).filter(|&i| !m.get(i, j).is_zero()).map(|i| cubics[i].to_string()).collect()
        };
        assert_eq!(support(0), ["x0^2*x1"]);
        assert_eq!(support(1), ["x0*x1^2"]);
        assert_eq!(support(2), ["x0*x1*x2"]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn overlapping_multiples_have_rank_five() {
        let f1 = poly_mul(&x(2, 0), &x(2, 1)).unwrap();
        let f2 = poly_mul(&x(2, 0), &x(2, 2)).unwrap();
        let m = f1.mult_matrix(1).hconcat(&f2.mult_matrix(1)).unwrap();
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn restriction_is_a_ring_map() {
        let subst = ExactMatrix::from_integers(3, 2, &[1, 0, 0, 1, 2, -3]);
        let f = x(2, 0).add(&x(2, 2)).unwrap();
        let g = poly_mul(&x(2, 1), &x(2, 2)).unwrap();
        let fg = poly_mul(&f, &g).unwrap();
        let lhs = restrict_to_line(&fg, &subst).unwrap();
        let rhs = restrict_to_line(&f, &subst).unwrap().mul(&restrict_to_line(&g, &subst).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degree(), 3);
        let st = restrict_to_line(&poly_mul(&x(1, 0), &x(1, 1)).unwrap(), &ExactMatrix::identity(2)).unwrap();
        assert_eq!(st.coeffs(), &[from_i64(0), from_i64(1), from_i64(0)]);
    }

    #[test]
    fn coefficient_vector_round_trip() {
        let f = HomogeneousPolynomial::from_terms(
            3,
            2,
            vec![(vec![0, 1, 1], from_i64(3)), (vec![2, 0, 0], Rational::new(1.into(), 2.into()))],
        )
        .unwrap();
        let v = f.coefficient_vector();
        assert_eq!(HomogeneousPolynomial::from_coefficients(2, 2, &v), f);
        assert_eq!(f.to_string(), "1/2*x0^2 + 3*x1*x2");
    }
}
