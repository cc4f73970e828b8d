//! Chow ring of the Grassmannian `Gr(2, N)` of lines in `P^{N-1}`, in the
//! two-row Schubert basis `σ_{a,b}` (`N-2 >= a >= b >= 0`, codimension `a+b`),
//! and the truncated ring of `P^r × P^s` used for push-pull computations.
//!
//! Products go through Giambelli, `σ_{a,b} = σ_a σ_b - σ_{a+1} σ_{b-1}`, and
//! then Pieri, `σ_c σ_{a,b} = Σ σ_{a',b'}` over `a'+b' = a+b+c` with
//! `N-2 >= a' >= a >= b' >= b`.

mod bidegree;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use bidegree::{bidegree_product, BidegreeClass, ProjectiveClass};

/// `Gr(2, N)`: lines in `P^{N-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrContext {
    n: usize,
}

impl GrContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(alloc::format!("Gr(2, {n}) needs N >= 2")));
        }
        Ok(GrContext { n })
    }

    /// Dimension `N` of the ambient vector space.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest Schubert index, `N - 2`.
    pub fn max_index(&self) -> u32 {
        self.n as u32 - 2
    }

    /// `dim Gr(2, N) = 2(N - 2)`.
    pub fn dim(&self) -> u32 {
        2 * self.max_index()
    }

    pub fn is_valid(&self, a: i64, b: i64) -> bool {
        0 <= b && b <= a && a <= self.max_index() as i64
    }

    pub fn zero(&self) -> SchubertClass {
        SchubertClass { ctx: *self, terms: BTreeMap::new() }
    }

    pub fn sigma(&self, a: i64, b: i64) -> Result<SchubertClass> {
        if !self.is_valid(a, b) {
            return Err(Error::SchubertIndex { a, b, n: self.n });
        }
        let mut x = self.zero();
        x.terms.insert((a as u32, b as u32), BigInt::one());
        Ok(x)
    }

    /// Special class `σ_c`; zero when `c > N - 2`.
    pub fn special(&self, c: u32) -> SchubertClass {
        self.sigma(c as i64, 0).unwrap_or_else(|_| self.zero())
    }

    pub fn one(&self) -> SchubertClass {
        self.special(0)
    }

    /// Class of a point, `σ_{N-2,N-2}`.
    pub fn point(&self) -> SchubertClass {
        let m = self.max_index() as i64;
        self.sigma(m, m).expect("point class is always valid")
    }

    /// All symbols of codimension `c`, largest `a` first.
    pub fn basis(&self, c: u32) -> Vec<(u32, u32)> {
        let m = self.max_index();
        (0..=c / 2).filter(|&b| c - b <= m).map(|b| (c - b, b)).collect()
    }

    /// The dual symbol `(N-2-b, N-2-a)` of `(a, b)`.
    pub fn dual(&self, a: u32, b: u32) -> (u32, u32) {
        let m = self.max_index();
        (m - b, m - a)
    }
}

/// Integer combination of Schubert classes in a fixed `Gr(2, N)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertClass {
    ctx: GrContext,
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl SchubertClass {
    pub fn from_terms(ctx: GrContext, terms: impl IntoIterator<Item = (i64, i64, BigInt)>) -> Result<Self> {
        let mut x = ctx.zero();
        for (a, b, c) in terms {
            if !ctx.is_valid(a, b) {
                return Err(Error::SchubertIndex { a, b, n: ctx.n });
            }
            x.add_term(a as u32, b as u32, &c);
        }
        Ok(x)
    }

    pub fn context(&self) -> GrContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms `((a, b), coefficient)` in increasing `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Codimension if all terms share one, `None` for zero or mixed classes.
    pub fn codimension(&self) -> Option<u32> {
        let mut codims = self.terms.keys().map(|(a, b)| a + b);
        let first = codims.next()?;
        codims.all(|c| c == first).then_some(first)
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(Signed::is_negative)
    }

    fn add_term(&mut self, a: u32, b: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(*a, *b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> SchubertClass {
        let mut out = self.ctx.zero();
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        }
        out
    }

    /// Coefficient of the point class; other components contribute nothing.
    pub fn degree(&self) -> BigInt {
        let m = self.ctx.max_index();
        self.coefficient(m, m)
    }

    fn same_ring(&self, other: &SchubertClass) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

/// `σ_c · x` by Pieri's rule. Terms past the index bound vanish, and so does
/// `σ_c` itself for `c > N - 2`.
pub fn pieri(c: u32, x: &SchubertClass) -> SchubertClass {
    let ctx = x.ctx;
    let m = ctx.max_index();
    let mut out = ctx.zero();
    if c > m {
        return out;
    }
    for (&(a, b), coeff) in &x.terms {
        // a' ranges over [a, min(a + c, m)] with b' = a + b + c - a' in [b, a]
        let total = a + b + c;
        let lo = a.max(total.saturating_sub(a));
        let hi = m.min(total - b);
        for a2 in lo..=hi {
            let b2 = total - a2;
            if b2 >= b && b2 <= a && b2 <= a2 {
                out.add_term(a2, b2, coeff);
            }
        }
    }
    out
}

/// A signed product `coefficient · σ_first · σ_second` of special classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialProduct {
    pub coefficient: i64,
    pub first: u32,
    pub second: u32,
}

/// Giambelli's formula `σ_{a,b} = σ_a σ_b - σ_{a+1} σ_{b-1}`; the second
/// product is omitted when `b = 0`.
pub fn giambelli(ctx: &GrContext, a: i64, b: i64) -> Result<Vec<SpecialProduct>> {
    if !ctx.is_valid(a, b) {
        return Err(Error::SchubertIndex { a, b, n: ctx.n });
    }
    let (a, b) = (a as u32, b as u32);
    let mut out = vec![SpecialProduct { coefficient: 1, first: a, second: b }];
    if b > 0 {
        out.push(SpecialProduct { coefficient: -1, first: a + 1, second: b - 1 });
    }
    Ok(out)
}

/// Evaluates a sum of special products in the ring, via Pieri.
pub fn expand_special_products(ctx: &GrContext, products: &[SpecialProduct]) -> SchubertClass {
    products.iter().fold(ctx.zero(), |acc, p| {
        let term = pieri(p.first, &pieri(p.second, &ctx.one()));
        acc.add(&term.scale(&BigInt::from(p.coefficient))).expect("same context")
    })
}

/// `x · y`: each `σ_{a,b}` in `y` is rewritten by Giambelli and applied to
/// `x` as two Pieri steps.
pub fn product(x: &SchubertClass, y: &SchubertClass) -> Result<SchubertClass> {
    x.same_ring(y)?;
    let mut out = x.ctx.zero();
    for (&(a, b), coeff) in &y.terms {
        for p in giambelli(&x.ctx, a as i64, b as i64)? {
            let term = pieri(p.first, &pieri(p.second, x));
            out = out.add(&term.scale(&(coeff * p.coefficient)))?;
        }
    }
    Ok(out)
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // largest a first, the usual way these classes are written
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match i {
                0 if c.is_negative() => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "s({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[Gr(2,{})] {}", self.ctx.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::random::stream;
    use alloc::string::ToString;
    use rand::Rng;

    fn gr(n: usize) -> GrContext {
        GrContext::new(n).unwrap()
    }

    #[test]
    fn smallest_pieri() {
        let g = gr(6);
        assert_eq!(pieri(1, &g.special(1)).to_string(), "s(2,0) + s(1,1)");
        let x = g.sigma(2, 1).unwrap();
        assert_eq!(pieri(0, &x), x);
        // interlacing a' >= 1 >= b' >= 1 leaves only b' = 1
        assert_eq!(pieri(2, &g.sigma(1, 1).unwrap()).to_string(), "s(3,1)");
        assert_eq!(pieri(2, &g.special(2)).to_string(), "s(4,0) + s(3,1) + s(2,2)");
    }

    #[test]
    fn pieri_respects_the_bound() {
        let g = gr(4);
        // σ_2 σ_2 = σ_{2,2} in Gr(2,4)
        assert_eq!(pieri(2, &g.special(2)), g.point());
        assert!(pieri(3, &g.one()).is_zero());
    }

    #[test]
    fn giambelli_examples() {
        let g = gr(6);
        assert_eq!(giambelli(&g, 3, 0).unwrap(), vec![SpecialProduct { coefficient: 1, first: 3, second: 0 }]);
        let gb = giambelli(&g, 2, 1).unwrap();
        assert_eq!(expand_special_products(&g, &gb), g.sigma(2, 1).unwrap());
        assert_eq!(
            giambelli(&g, 2, 2).unwrap(),
            vec![
                SpecialProduct { coefficient: 1, first: 2, second: 2 },
                SpecialProduct { coefficient: -1, first: 3, second: 1 }
            ]
        );
        assert!(giambelli(&g, 1, 2).is_err());
        assert!(giambelli(&g, 5, 0).is_err());
    }

    #[test]
    fn degrees_in_gr26() {
        let g = gr(6);
        assert_eq!(g.point().degree(), BigInt::one());
        let s4 = g.special(4);
        assert_eq!(product(&s4, &s4).unwrap().degree(), BigInt::one());
        let s31 = g.sigma(3, 1).unwrap();
        let s22 = g.sigma(2, 2).unwrap();
        assert_eq!(product(&s31, &s31).unwrap().degree(), BigInt::one());
        assert_eq!(product(&s31, &s22).unwrap().degree(), BigInt::zero());
    }

    #[test]
    fn lines_through_two_points_and_four_lines() {
        // σ_1^4 = 2 in Gr(2,4): two lines meet four general lines in P^3
        let g = gr(4);
        let s1 = g.special(1);
        let p = (0..3).fold(s1.clone(), |acc, _| product(&acc, &s1).unwrap());
        assert_eq!(p.degree(), BigInt::from(2));
        // deg σ_1^{2(N-2)} is the Catalan number C_{N-2}
        let g = gr(7);
        let s1 = g.special(1);
        let p = (1..g.dim()).fold(s1.clone(), |acc, _| product(&acc, &s1).unwrap());
        assert_eq!(p.degree(), BigInt::from(42));
    }

    #[test]
    fn giambelli_exhaustive_and_duality() {
        for n in 2..=10 {
            let g = gr(n);
            let m = g.max_index();
            for a in 0..=m {
                for b in 0..=a {
                    let gb = giambelli(&g, a as i64, b as i64).unwrap();
                    assert_eq!(expand_special_products(&g, &gb), g.sigma(a as i64, b as i64).unwrap());
                    let x = g.sigma(a as i64, b as i64).unwrap();
                    for (c, d) in g.basis(g.dim() - a - b) {
                        let y = g.sigma(c as i64, d as i64).unwrap();
                        let expected = i32::from((c, d) == g.dual(a, b));
                        assert_eq!(product(&x, &y).unwrap().degree(), BigInt::from(expected), "N={n} ({a},{b})·({c},{d})");
                    }
                }
            }
        }
    }

    #[test]
    fn commutative_and_associative_on_random_classes() {
        let g = gr(8);
        let random_class = |seed: u64| {
            let mut rng = stream(seed, 3);
            let terms: Vec<(i64, i64, BigInt)> = (0..3)
                .map(|_| {
                    let a = rng.random_range(0..=6i64);
                    let b = rng.random_range(0..=a);
                    (a, b, BigInt::from(rng.random_range(-4..=4i64)))
                })
                .collect();
            SchubertClass::from_terms(g, terms).unwrap()
        };
        for seed in 0..20 {
            let (x, y, z) = (random_class(3 * seed), random_class(3 * seed + 1), random_class(3 * seed + 2));
            assert_eq!(product(&x, &y).unwrap(), product(&y, &x).unwrap());
            let l = product(&product(&x, &y).unwrap(), &z).unwrap();
            let r = product(&x, &product(&y, &z).unwrap()).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn context_mismatch() {
        assert_eq!(product(&gr(5).one(), &gr(6).one()), Err(Error::ContextMismatch));
        assert!(GrContext::new(1).is_err());
    }

    #[test]
    fn basis_listing() {
        let g = gr(6);
        assert_eq!(g.basis(4), vec![(4, 0), (3, 1), (2, 2)]);
        assert_eq!(g.basis(7), vec![(4, 3)]);
        assert_eq!(g.dual(3, 1), (3, 1));
    }
}
