use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// A monomial `x0^e0 * ... * xn^en`.
///
/// The ordering is graded lexicographic with `x0 > x1 > ... > xn`, arranged so
/// that ascending order is the order of [`monomial_basis`]: within one degree
/// `x0^m` comes first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `m` in `n + 1` variables, in graded lex order.
///
/// A negative degree yields the empty basis of the zero space.
pub fn monomial_basis(n: usize, m: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    let mut exps = vec![0u32; n + 1];
    fill(&mut exps, 0, m as u32, &mut out);
    out
}

fn fill(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Position lookup for one graded piece.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    basis: Vec<Monomial>,
    positions: BTreeMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(n: usize, m: i64) -> Self {
        let basis = monomial_basis(n, m);
        let positions = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        MonomialIndex { basis, positions }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.positions.get(m).copied()
    }
}
