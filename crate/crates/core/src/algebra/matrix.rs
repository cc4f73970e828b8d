use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over Q.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("ragged rows, expected {cols} columns")));
        }
        let n = rows.len();
        Ok(ExactMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        ExactMatrix {
            rows,
            cols,
            data: entries.iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &ExactMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `[self ; other]`.
    pub fn vconcat(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns over {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `a * self + b * other`.
    pub fn combine(a: &Rational, x: &ExactMatrix, b: &Rational, y: &ExactMatrix) -> Result<Self> {
        if x.rows != y.rows || x.cols != y.cols {
            return Err(Error::Dimension(format!(
                "cannot combine {}x{} with {}x{}",
                x.rows, x.cols, y.rows, y.cols
            )));
        }
        Ok(ExactMatrix {
            rows: x.rows,
            cols: x.cols,
            data: x.data.iter().zip(&y.data).map(|(p, q)| a * p + b * q).collect(),
        })
    }

    /// Exact rank over Q by fraction-free elimination.
    pub fn rank(&self) -> usize {
        Echelon::new(self.integer_rows(), self.cols).pivots.len()
    }

    /// A basis of the right kernel `{x : self * x = 0}`.
    ///
    /// Vectors are primitive integer vectors (stored as rationals), one per
    /// non-pivot column, so their number is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::new(self.integer_rows(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (i, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[i];
                let mut s = Rational::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += &x[j] * Rational::from_integer(row[j].clone());
                    }
                }
                if !s.is_zero() {
                    x[pc] = -s / Rational::from_integer(row[pc].clone());
                }
            }
            basis.push(primitive(x));
        }
        basis
    }

    /// Rows scaled to integers, each divided by its content.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                let mut ints: Vec<BigInt> =
                    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
                let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
                if !content.is_zero() && !content.is_one() {
                    for v in ints.iter_mut() {
                        *v /= &content;
                    }
                }
                ints
            })
            .collect()
    }
}

/// Scales a nonzero rational vector to a primitive integer vector with the
/// same direction.
pub(crate) fn primitive(x: Vec<Rational>) -> Vec<Rational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if content.is_zero() {
        return x;
    }
    ints.into_iter().map(|v| Rational::from_integer(v / &content)).collect()
}

/// Row echelon form computed by Bareiss' fraction-free elimination.
///
/// After `new`, the first `pivots.len()` rows are the echelon rows and
/// `pivots[i]` is the pivot column of row `i`. Every intermediate entry is a
/// minor of the input, so all divisions are exact.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(mut m: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| m[i][c].bits())
            else {
                continue;
            };
            m.swap(r, p);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let piv = &pivot_row[c];
            for row in rest.iter_mut() {
                let factor = core::mem::take(&mut row[c]);
                if factor.is_zero() {
                    if prev.is_one() && piv.is_one() {
                        continue;
                    }
                    for v in row[c + 1..].iter_mut() {
                        if !v.is_zero() {
                            *v = &*v * piv / &prev;
                        }
                    }
                } else {
                    for j in c + 1..cols {
                        let lhs = if row[j].is_zero() { BigInt::zero() } else { piv * &row[j] };
                        let v = if pivot_row[j].is_zero() {
                            lhs
                        } else {
                            lhs - &factor * &pivot_row[j]
                        };
                        row[j] = if v.is_zero() || prev.is_one() { v } else { v / &prev };
                    }
                }
            }
            prev = piv.clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Echelon { rows: m, pivots }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::from_i64;
    use proptest::prelude::*;

    /// Textbook Gauss-Jordan over Q, kept independent of the Bareiss path.
    fn naive_rank(m: &ExactMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][c].recip();
            let pivot: Vec<Rational> = a[rank].iter().map(|v| v * &inv).collect();
            for (i, row) in a.iter_mut().enumerate() {
                if i != rank && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (v, pv) in row.iter_mut().zip(&pivot) {
                        *v -= &f * pv;
                    }
                }
            }
            a[rank] = pivot;
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero() {
        let id = ExactMatrix::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
        let z = ExactMatrix::zeros(2, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 5);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(ExactMatrix::zeros(0, 3).rank(), 0);
        assert_eq!(ExactMatrix::zeros(4, 0).rank(), 0);
        assert_eq!(ExactMatrix::zeros(0, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn rational_entries() {
        let m = ExactMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), Rational::new(1.into(), 3.into())],
            vec![from_i64(3), from_i64(2)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![from_i64(-2), from_i64(3)]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(ExactMatrix::from_rows(vec![vec![from_i64(1)], vec![]]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            // low-rank products show up often enough with a narrow range
            prop::collection::vec(-2i64..=2, r * c)
                .prop_map(move |v| ExactMatrix::from_integers(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn rank_matches_gauss_jordan(m in small_matrix()) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn kernel_is_annihilated_and_rank_nullity_holds(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            if !k.is_empty() {
                let kmat = ExactMatrix::from_rows(k.clone()).unwrap();
                prop_assert_eq!(kmat.rank(), k.len());
            }
        }

        #[test]
        fn rank_invariant_under_unimodular_mixing(
            m in small_matrix(),
            lower in prop::collection::vec(-3i64..=3, 36),
            upper in prop::collection::vec(-3i64..=3, 36),
        ) {
            let unimodular = |n: usize, v: &[i64], lower_part: bool| {
                ExactMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        Rational::one()
                    } else if (i > j) == lower_part {
                        from_i64(v[i * 6 + j])
                    } else {
                        Rational::zero()
                    }
                })
            };
            let left = unimodular(m.rows(), &lower, true).mul(&unimodular(m.rows(), &upper, false)).unwrap();
            let right = unimodular(m.cols(), &upper, true).mul(&unimodular(m.cols(), &lower, false)).unwrap();
            let mixed = left.mul(&m).unwrap().mul(&right).unwrap();
            prop_assert_eq!(mixed.rank(), m.rank());
        }
    }
}
