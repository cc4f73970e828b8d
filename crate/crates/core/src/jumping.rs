//! The class of the locus `Z` of jumping lines of `V_{d+1}` in the
//! Grassmannian of lines in `|O(d)| = P^{N-1}`, `N = C(n+d, n)`.
//!
//! `Z` is the image of `(line in |O(1)|, h in |O(d-1)|) -> h·line`. Two
//! routes to `[Z]` are implemented side by side:
//!
//! * the closed coefficients `C(a+1,n)C(b+1,n) - C(a+2,n)C(b,n)` on
//!   `σ_{a',b'}` ([`class_by_theorem`]);
//! * the intersection numbers `deg([Z]·σ_a σ_b)` recomputed in the Chow ring
//!   of `P^n × P^M` by pushing `(α+β)^{a+1}` forward to `P^M` and pairing the
//!   pullback with `(α+β)^{b+1}`, then assembled through Giambelli and
//!   complementary duality ([`class_by_pushpull`]).
//!
//! The dimension of `Z` enters both; it is taken either from the closed
//! formula `n + 1 + C(d-1+n, n)` or from the exact Jacobian rank of the
//! Plücker-lifted parametrization ([`dim_z_oracle`]), and
//! [`reconcile`] reports how the pieces fit together.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::random::{self, DEFAULT_BOUND};
use crate::algebra::rational::from_i64;
use crate::algebra::{binomial, monomial_basis, poly_mul, ExactMatrix, HomogeneousPolynomial, Rational};
use crate::error::{Error, Result};
use crate::schubert::{bidegree_product, BidegreeClass, GrContext, SchubertClass};

/// Largest `N` for which reports are computed.
pub const MAX_AMBIENT: usize = 60;

/// `N = dim H^0(P^n, O(d))`.
pub fn ambient_dimension(n: usize, d: u32) -> usize {
    binomial(n as i64 + d as i64, n as i64) as usize
}

/// `dim |O(d-1)| = C(d-1+n, n) - 1`, the second factor of the multiplication map.
fn cofactor_space_dim(n: usize, d: u32) -> u32 {
    binomial(d as i64 - 1 + n as i64, n as i64) as u32 - 1
}

/// `dim Z = n + 1 + C(d-1+n, n)` as the closed formula states it.
pub fn dim_z_closed_form(n: usize, d: u32) -> u32 {
    n as u32 + 1 + binomial(d as i64 - 1 + n as i64, n as i64) as u32
}

/// `dim Gr(1, P^n) + dim |O(d-1)| = 2(n-1) + C(d-1+n, n) - 1`, the dimension
/// of the domain of the (generically injective) multiplication map.
pub fn dim_z_parameter_count(n: usize, d: u32) -> u32 {
    2 * (n as u32 - 1) + cofactor_space_dim(n, d)
}

/// `dim Q = n + C(d-1+n, n) - 1` for the image `Q` of `|O(1)| × |O(d-1)|`.
pub fn dim_q(n: usize, d: u32) -> u32 {
    n as u32 + cofactor_space_dim(n, d)
}

/// Whether `dim Q' = b - n + 1` holds for every complementary pair
/// `a + b = dim_z`, `0 <= b <= dim_z/2`, where `Q' = Q ∩ H` with
/// `codim H = a + 1`.
pub fn bookkeeping_holds(n: usize, d: u32, dim_z: u32) -> bool {
    let q = dim_q(n, d) as i64;
    (0..=dim_z / 2).all(|b| {
        let a = (dim_z - b) as i64;
        q - (a + 1) == b as i64 - n as i64 + 1
    })
}

fn check_scope(n: usize, d: u32) -> Result<GrContext> {
    if !(2..=3).contains(&n) || d < 2 {
        return Err(Error::InvalidParameters(format!(
            "jumping-line classes need n in {{2, 3}} and d >= 2 (got n={n}, d={d})"
        )));
    }
    let big_n = ambient_dimension(n, d);
    if big_n > MAX_AMBIENT {
        return Err(Error::InvalidParameters(format!(
            "N = {big_n} exceeds the desk-scale bound {MAX_AMBIENT}"
        )));
    }
    GrContext::new(big_n)
}

/// Exact Jacobian of `(g1, g2, h) -> (h·g1) ∧ (h·g2)` in Plücker coordinates,
/// one row per parameter (coefficients of `g1`, then `g2`, then `h`).
pub fn plucker_jacobian(
    g1: &HomogeneousPolynomial,
    g2: &HomogeneousPolynomial,
    h: &HomogeneousPolynomial,
) -> Result<ExactMatrix> {
    let n = h.n();
    let f1 = poly_mul(h, g1)?.coefficient_vector();
    let f2 = poly_mul(h, g2)?.coefficient_vector();
    let big_n = f1.len();
    let zero = alloc::vec![Rational::zero(); big_n];
    // (dF1, dF2) for each parameter
    let mut tangents: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    for m in monomial_basis(n, 1) {
        let dir = poly_mul(h, &HomogeneousPolynomial::term(m, from_i64(1)))?;
        tangents.push((dir.coefficient_vector(), zero.clone()));
    }
    for m in monomial_basis(n, 1) {
        let dir = poly_mul(h, &HomogeneousPolynomial::term(m, from_i64(1)))?;
        tangents.push((zero.clone(), dir.coefficient_vector()));
    }
    for m in monomial_basis(n, h.degree() as i64) {
        let theta = HomogeneousPolynomial::term(m, from_i64(1));
        tangents.push((poly_mul(&theta, g1)?.coefficient_vector(), poly_mul(&theta, g2)?.coefficient_vector()));
    }
    let pairs: Vec<(usize, usize)> =
        (0..big_n).flat_map(|j| (j + 1..big_n).map(move |l| (j, l))).collect();
    Ok(ExactMatrix::from_fn(tangents.len(), pairs.len(), |p, c| {
        let (j, l) = pairs[c];
        let (d1, d2) = &tangents[p];
        &d1[j] * &f2[l] + &f1[j] * &d2[l] - &d1[l] * &f2[j] - &f1[l] * &d2[j]
    }))
}

/// `dim Z` as (rank of the Plücker Jacobian at a random integer point) - 1,
/// maximized over `trials` seeded points. The rank is the dimension of the
/// affine cone over `Z`.
pub fn dim_z_oracle(n: usize, d: u32, trials: usize, seed: u64) -> Result<u32> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2 and d >= 2 (got n={n}, d={d})")));
    }
    if trials == 0 {
        return Err(Error::InvalidParameters("dim_z_oracle needs at least one trial".into()));
    }
    let mut best = 0;
    for trial in 0..trials {
        let mut rng = random::stream(seed, trial as u64);
        let g1 = random::nonzero_form(&mut rng, n, 1, DEFAULT_BOUND);
        let g2 = random::nonzero_form(&mut rng, n, 1, DEFAULT_BOUND);
        let h = random::nonzero_form(&mut rng, n, d - 1, DEFAULT_BOUND);
        best = best.max(plucker_jacobian(&g1, &g2, &h)?.rank());
    }
    if best == 0 {
        return Err(Error::DegenerateSubstitution);
    }
    Ok(best as u32 - 1)
}

/// `C(a+1, n)·C(b+1, n)`, zero when `b < 0`.
pub fn pairing_degree_closed(n: usize, a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(a + 1, n as i64)) * BigInt::from(binomial(b + 1, n as i64))
}

/// Push-pull evaluation of `deg([Z]·σ_a σ_b)` in the Chow ring of
/// `P^n × P^M`, `M = dim |O(d-1)|`.
struct PushPull {
    n: u32,
    m: u32,
    powers: Vec<BidegreeClass>,
}

impl PushPull {
    fn new(n: usize, d: u32) -> Self {
        Self::on(n as u32, cofactor_space_dim(n, d))
    }

    fn on(n: u32, m: u32) -> Self {
        PushPull { n, m, powers: alloc::vec![BidegreeClass::one(n, m)] }
    }

    fn hyperplane_power(&mut self, e: u32) -> BidegreeClass {
        let h = BidegreeClass::alpha(self.n, self.m).add(&BidegreeClass::beta(self.n, self.m)).expect("same factors");
        while self.powers.len() <= e as usize {
            let next = bidegree_product(self.powers.last().expect("starts with 1"), &h).expect("same factors");
            self.powers.push(next);
        }
        self.powers[e as usize].clone()
    }

    /// `deg([Λ''] · (α+β)^{b+1})` with `[Λ''] = pr_2^* pr_{2,*} (α+β)^{a+1}`.
    fn degree(&mut self, a: i64, b: i64) -> BigInt {
        if a < 0 || b < 0 {
            return BigInt::zero();
        }
        let pushed = self.hyperplane_power(a as u32 + 1).pushforward_factor2();
        let lambda = BidegreeClass::pullback_factor2(&pushed, self.n);
        let cut = self.hyperplane_power(b as u32 + 1);
        bidegree_product(&lambda, &cut).expect("same factors").degree()
    }

    fn checked_degree(&mut self, a: i64, b: i64) -> Result<BigInt> {
        let bidegree = self.degree(a, b);
        let closed = pairing_degree_closed(self.n as usize, a, b);
        if bidegree != closed {
            return Err(Error::PushPullMismatch {
                a: a as u32,
                b: b as u32,
                bidegree: format!("{bidegree}"),
                binomial: format!("{closed}"),
            });
        }
        Ok(bidegree)
    }
}

/// `deg(pr_2^* pr_{2,*}(α+β)^{a+1} · (α+β)^{b+1})` on `P^n × P^m`. Equals
/// `C(a+1, n)·C(b+1, n)` exactly when `a + b = 2n + m - 2`.
pub fn pushpull_degree(n: u32, m: u32, a: u32, b: u32) -> BigInt {
    PushPull::on(n, m).degree(a as i64, b as i64)
}

/// A term whose Schubert symbol falls outside `N-2 >= a' >= b' >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutOfRangeTerm {
    pub a: i64,
    pub b: i64,
    pub coefficient: BigInt,
}

/// The coefficient on the self-complementary symbol when `dim Z` is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddleTerm {
    pub a: i64,
    pub b: i64,
    pub coefficient: BigInt,
}

/// A candidate class for `[Z]` at a given dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEvaluation {
    pub dim_z: u32,
    /// Terms with valid symbols.
    pub class: SchubertClass,
    /// Nonzero terms with invalid symbols, which cannot live in the ring.
    pub out_of_range: Vec<OutOfRangeTerm>,
    /// Separately derived middle coefficient (n = 3, even dimension).
    pub middle: Option<MiddleTerm>,
}

impl ClassEvaluation {
    pub fn has_negative_coefficient(&self) -> bool {
        self.class.has_negative_coefficient() || self.out_of_range.iter().any(|t| t.coefficient.is_negative())
    }

    fn push(&mut self, a: i64, b: i64, coefficient: BigInt) -> Result<()> {
        if coefficient.is_zero() {
            return Ok(());
        }
        let ctx = self.class.context();
        if ctx.is_valid(a, b) {
            let term = SchubertClass::from_terms(ctx, [(a, b, coefficient)])?;
            self.class = self.class.add(&term)?;
        } else {
            self.out_of_range.push(OutOfRangeTerm { a, b, coefficient });
        }
        Ok(())
    }
}

/// Shift from a complementary pair `(a, b)` to the symbol `(a', b')` it
/// detects: `(codim Z - dim Z)/2 = N - 2 - dim Z`.
fn index_shift(ctx: &GrContext, dim_z: u32) -> Result<i64> {
    let g = ctx.dim() as i64;
    let dim = dim_z as i64;
    if dim > g {
        return Err(Error::InvalidParameters(format!(
            "dim Z = {dim_z} exceeds dim Gr(2,{}) = {g}",
            ctx.n()
        )));
    }
    let gap = (g - dim) - dim;
    assert!(gap % 2 == 0, "codim - dim is even since dim Gr is even");
    Ok(gap / 2)
}

fn closed_coefficient(n: usize, a: i64, b: i64) -> BigInt {
    pairing_degree_closed(n, a, b) - pairing_degree_closed(n, a + 1, b - 1)
}

/// `[Z]` from the closed coefficient formula at the supplied dimension.
///
/// For `n = 2` or odd `dim_z` the sum runs over `0 <= b <= dim_z/2`. For
/// `n = 3` and even `dim_z` it runs over `b < dim_z/2` and the middle symbol
/// receives `+C(dim_z/2 + 2, n)·C(dim_z/2, n)`.
pub fn class_by_theorem(n: usize, d: u32, dim_z: u32) -> Result<ClassEvaluation> {
    let ctx = check_scope(n, d)?;
    let shift = index_shift(&ctx, dim_z)?;
    let dim = dim_z as i64;
    let special_middle = n == 3 && dim_z.is_multiple_of(2);
    let mut out = ClassEvaluation { dim_z, class: ctx.zero(), out_of_range: Vec::new(), middle: None };
    for b in 0..=dim / 2 {
        if special_middle && 2 * b == dim {
            continue;
        }
        let a = dim - b;
        out.push(a + shift, b + shift, closed_coefficient(n, a, b))?;
    }
    if special_middle {
        let half = dim / 2;
        let c = BigInt::from(binomial(half + 2, n as i64)) * BigInt::from(binomial(half, n as i64));
        let idx = half + shift;
        out.push(idx, idx, c.clone())?;
        out.middle = Some(MiddleTerm { a: idx, b: idx, coefficient: c });
    }
    Ok(out)
}

/// `[Z]` from push-pull intersection numbers at the supplied dimension.
///
/// `α_{a',b'} = deg([Z]σ_aσ_b) - deg([Z]σ_{a+1}σ_{b-1})` for each
/// complementary pair, with every `deg([Z]σ_aσ_b)` computed in the bidegree
/// ring and required to equal `C(a+1,n)·C(b+1,n)`. For `n = 3` and even
/// `dim_z` the middle pairing `deg([Z]σ_bσ_b)` is taken to be zero.
pub fn class_by_pushpull(n: usize, d: u32, dim_z: u32) -> Result<ClassEvaluation> {
    let ctx = check_scope(n, d)?;
    let shift = index_shift(&ctx, dim_z)?;
    let dim = dim_z as i64;
    let special_middle = n == 3 && dim_z.is_multiple_of(2);
    let mut pp = PushPull::new(n, d);
    let mut out = ClassEvaluation { dim_z, class: ctx.zero(), out_of_range: Vec::new(), middle: None };
    for b in 0..=dim / 2 {
        let a = dim - b;
        let is_middle = special_middle && 2 * b == dim;
        let direct = if is_middle { BigInt::zero() } else { pp.checked_degree(a, b)? };
        let coefficient = direct - pp.checked_degree(a + 1, b - 1)?;
        if is_middle {
            out.middle = Some(MiddleTerm { a: a + shift, b: b + shift, coefficient: coefficient.clone() });
        }
        out.push(a + shift, b + shift, coefficient)?;
    }
    Ok(out)
}

/// Findings raised by [`reconcile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    DimMismatch,
    NegativeCoefficient,
    OutOfRangeIndex,
    MiddleTermDisagreement,
}

impl Flag {
    pub fn name(&self) -> &'static str {
        match self {
            Flag::DimMismatch => "DIM_MISMATCH",
            Flag::NegativeCoefficient => "NEGATIVE_COEFFICIENT",
            Flag::OutOfRangeIndex => "OUT_OF_RANGE_INDEX",
            Flag::MiddleTermDisagreement => "MIDDLE_TERM_DISAGREEMENT",
        }
    }
}

/// One symbol of the oracle-dimension comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRow {
    pub a: u32,
    pub b: u32,
    pub theorem: BigInt,
    pub pushpull: BigInt,
    pub middle: bool,
}

impl CoefficientRow {
    pub fn agrees(&self) -> bool {
        self.theorem == self.pushpull
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpingClassReport {
    pub n: usize,
    pub d: u32,
    pub grassmannian: GrContext,
    pub dim_z_closed_form: u32,
    pub dim_z_oracle: u32,
    /// Closed formula at the closed-form dimension; `None` if that dimension
    /// does not fit in the Grassmannian.
    pub class_theorem_closed_form: Option<ClassEvaluation>,
    pub class_theorem_oracle: ClassEvaluation,
    pub class_pushpull: ClassEvaluation,
    pub coefficient_table: Vec<CoefficientRow>,
    pub bookkeeping_closed_form: bool,
    pub bookkeeping_oracle: bool,
    pub flags: Vec<Flag>,
}

impl JumpingClassReport {
    /// Rows where the two pipelines disagree, excluding the middle symbol.
    pub fn pipeline_mismatches(&self) -> impl Iterator<Item = &CoefficientRow> {
        self.coefficient_table.iter().filter(|r| !r.middle && !r.agrees())
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

/// Runs both dimension routes and both class routes and records how they
/// compare. Discrepancies are findings, not errors.
pub fn reconcile(n: usize, d: u32, trials: usize, seed: u64) -> Result<JumpingClassReport> {
    let ctx = check_scope(n, d)?;
    let dim_closed = dim_z_closed_form(n, d);
    let dim_oracle = dim_z_oracle(n, d, trials, seed)?;
    let class_theorem_closed_form = class_by_theorem(n, d, dim_closed).ok();
    let class_theorem_oracle = class_by_theorem(n, d, dim_oracle)?;
    let class_pushpull = class_by_pushpull(n, d, dim_oracle)?;

    let middle_symbol = class_pushpull.middle.as_ref().map(|m| (m.a as u32, m.b as u32));
    let mut symbols: BTreeMap<(u32, u32), ()> = BTreeMap::new();
    for x in [&class_theorem_oracle.class, &class_pushpull.class] {
        for (&key, _) in x.terms() {
            symbols.insert(key, ());
        }
    }
    let coefficient_table = symbols
        .into_keys()
        .rev()
        .map(|(a, b)| CoefficientRow {
            a,
            b,
            theorem: class_theorem_oracle.class.coefficient(a, b),
            pushpull: class_pushpull.class.coefficient(a, b),
            middle: middle_symbol == Some((a, b)),
        })
        .collect();

    let evaluations: Vec<&ClassEvaluation> = class_theorem_closed_form
        .iter()
        .chain([&class_theorem_oracle, &class_pushpull])
        .collect();
    let mut flags = Vec::new();
    if dim_closed != dim_oracle {
        flags.push(Flag::DimMismatch);
    }
    if evaluations.iter().any(|e| e.has_negative_coefficient()) {
        flags.push(Flag::NegativeCoefficient);
    }
    if evaluations.iter().any(|e| !e.out_of_range.is_empty()) {
        flags.push(Flag::OutOfRangeIndex);
    }
    let middle_differs = match (&class_theorem_oracle.middle, &class_pushpull.middle) {
        (Some(t), Some(p)) => t.coefficient != p.coefficient,
        (None, None) => false,
        _ => true,
    };
    if middle_differs {
        flags.push(Flag::MiddleTermDisagreement);
    }

    Ok(JumpingClassReport {
        n,
        d,
        grassmannian: ctx,
        dim_z_closed_form: dim_closed,
        dim_z_oracle: dim_oracle,
        class_theorem_closed_form,
        class_theorem_oracle,
        class_pushpull,
        coefficient_table,
        bookkeeping_closed_form: bookkeeping_holds(n, d, dim_closed),
        bookkeeping_oracle: bookkeeping_holds(n, d, dim_oracle),
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_dimension_formula() {
        assert_eq!(dim_z_closed_form(2, 2), 6);
        assert_eq!(dim_z_closed_form(3, 2), 8);
        assert_eq!(dim_z_closed_form(2, 3), 9);
        assert_eq!(dim_z_parameter_count(2, 2), 4);
        assert_eq!(dim_z_parameter_count(3, 2), 7);
    }

    #[test]
    fn oracle_on_conics() {
        for seed in 0..3 {
            assert_eq!(dim_z_oracle(2, 2, 3, seed).unwrap(), 4);
        }
        let g = GrContext::new(ambient_dimension(2, 2)).unwrap();
        assert!(dim_z_oracle(2, 2, 1, 0).unwrap() < g.dim());
    }

    #[test]
    fn theorem_class_for_conics() {
        let e = class_by_theorem(2, 2, 4).unwrap();
        let g = GrContext::new(6).unwrap();
        let expected = SchubertClass::from_terms(g, [(3, 1, big(6)), (2, 2, big(3))]).unwrap();
        assert_eq!(e.class, expected);
        assert!(e.out_of_range.is_empty());
        assert_eq!(class_by_pushpull(2, 2, 4).unwrap().class, expected);
    }

    #[test]
    fn closed_dimension_pushes_indices_out_of_range() {
        let e = class_by_theorem(2, 2, 6).unwrap();
        assert!(e.out_of_range.iter().any(|t| t.b < 0 && !t.coefficient.is_zero()));
        assert_eq!(e.out_of_range[0], OutOfRangeTerm { a: 3, b: -1, coefficient: big(15) });
    }

    #[test]
    fn pushpull_rejects_unsaturated_dimension() {
        assert!(matches!(class_by_pushpull(2, 2, 6), Err(Error::PushPullMismatch { .. })));
    }

    #[test]
    fn pushpull_degrees_for_conics() {
        let mut pp = PushPull::new(2, 2);
        assert_eq!(pp.checked_degree(3, 1).unwrap(), big(6));
        assert_eq!(pp.checked_degree(4, 0).unwrap(), big(0));
    }

    #[test]
    fn saturation_matches_parameter_count() {
        for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let target = 2 * n as i64 - 3 + binomial(n as i64 + d as i64 - 1, n as i64) as i64;
            let mut pp = PushPull::new(n, d);
            for a in 0..target + 3 {
                for b in 0..=a {
                    let saturated = pp.degree(a, b) == pairing_degree_closed(n, a, b);
                    if a + b == target {
                        assert!(saturated);
                    } else if !pairing_degree_closed(n, a, b).is_zero() {
                        assert!(!saturated, "n={n} d={d} a={a} b={b}");
                    }
                }
            }
            assert_eq!(target as u32, dim_z_parameter_count(n, d));
        }
    }

    #[test]
    fn pushpull_on_small_products() {
        // P^2 x P^1: saturated pairs have a + b = 3
        assert_eq!(pushpull_degree(2, 1, 2, 1), big(3));
        assert_eq!(pushpull_degree(2, 1, 3, 0), big(0));
        assert_eq!(pushpull_degree(2, 1, 1, 1), big(0));
        assert_eq!(pushpull_degree(2, 2, 3, 1), big(6));
    }

    #[test]
    fn bookkeeping_identity() {
        for (n, d) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
            assert!(bookkeeping_holds(n, d, dim_z_parameter_count(n, d)));
            assert!(!bookkeeping_holds(n, d, dim_z_closed_form(n, d)));
        }
    }

    #[test]
    fn report_for_conics() {
        let r = reconcile(2, 2, 3, 0).unwrap();
        assert_eq!((r.dim_z_closed_form, r.dim_z_oracle), (6, 4));
        assert!(r.has_flag(Flag::DimMismatch));
        assert!(r.has_flag(Flag::OutOfRangeIndex));
        assert!(!r.has_flag(Flag::MiddleTermDisagreement));
        assert_eq!(r.pipeline_mismatches().count(), 0);
        assert!(r.bookkeeping_oracle);
        assert_eq!(r.coefficient_table.len(), 2);
    }

    #[test]
    fn scope_checks() {
        assert!(reconcile(4, 2, 1, 0).is_err());
        assert!(class_by_theorem(2, 10, 5).is_err());
        assert!(class_by_theorem(2, 1, 1).is_err());
    }
}
