//! The Verlinde bundles `V_k` of the universal degree-`d` hypersurface in
//! `P^n`, restricted to lines `T = <f1, f2>` in `|O(d)|`.
//!
//! `V_k` is the cokernel of multiplication by the universal form,
//! `O(-1) ⊗ H^0(O(k-d)) -> O ⊗ H^0(O(k))`, so on `T` it is the cokernel of
//! the pencil `s*M(f1) + t*M(f2)` of multiplication matrices.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::random::{self, DEFAULT_BOUND};
use crate::algebra::{binomial, gcd_degree, poly_mul, ExactMatrix, HomogeneousPolynomial};
use crate::error::{Error, Result};
use crate::pencil::{Pencil, SplittingType};

/// Resampling budget for random lines.
const MAX_LINE_ATTEMPTS: usize = 16;

/// Numerical data of `V_k` for hypersurfaces of degree `d` in `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VerlindeContext {
    n: usize,
    d: u32,
    k: u32,
    w: usize,
    u: usize,
}

impl VerlindeContext {
    /// `w = C(k+n, n)`, `u = C(k+n-d, n)` (zero when `k < d`).
    pub fn new(n: usize, d: u32, k: u32) -> Result<Self> {
        if n < 2 || d < 1 || k < 1 {
            return Err(Error::InvalidParameters(format!(
                "need n >= 2, d >= 1, k >= 1 (got n={n}, d={d}, k={k})"
            )));
        }
        let w = binomial(k as i64 + n as i64, n as i64) as usize;
        let u = if k < d { 0 } else { binomial(k as i64 - d as i64 + n as i64, n as i64) as usize };
        Ok(VerlindeContext { n, d, k, w, u })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `dim H^0(P^n, O(k))`.
    pub fn w(&self) -> usize {
        self.w
    }

    /// `dim H^0(P^n, O(k-d))`.
    pub fn u(&self) -> usize {
        self.u
    }

    /// `r^(k) = rank V_k`.
    pub fn rank(&self) -> usize {
        self.w - self.u
    }

    /// `d^(k) = deg V_k`.
    pub fn degree(&self) -> usize {
        self.u
    }

    /// Whether `d^(k) <= r^(k)`, the range where the generic type is defined.
    pub fn has_generic_type(&self) -> bool {
        self.degree() <= self.rank()
    }

    /// `(1, ..., 1, 0, ..., 0)` with `d^(k)` ones.
    pub fn generic_type(&self) -> Result<SplittingType> {
        self.require_generic()?;
        Ok(SplittingType::generic(self.rank(), self.degree()))
    }

    fn require_generic(&self) -> Result<()> {
        if !self.has_generic_type() {
            return Err(Error::GenericTypeUndefined { degree: self.degree(), rank: self.rank() });
        }
        Ok(())
    }

    fn check_line(&self, line: &LineInSystem) -> Result<()> {
        if line.degree() != self.d || line.f1().num_vars() != self.n + 1 {
            return Err(Error::LineMismatch {
                found: line.degree(),
                vars: line.f1().num_vars(),
                expected: self.d,
                expected_vars: self.n + 1,
            });
        }
        Ok(())
    }
}

/// A line in `|O(d)|`, spanned by two linearly independent forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInSystem {
    f1: HomogeneousPolynomial,
    f2: HomogeneousPolynomial,
}

impl LineInSystem {
    pub fn new(f1: HomogeneousPolynomial, f2: HomogeneousPolynomial) -> Result<Self> {
        if f1.num_vars() != f2.num_vars() {
            return Err(Error::VariableCountMismatch { left: f1.num_vars(), right: f2.num_vars() });
        }
        if f1.degree() != f2.degree() {
            return Err(Error::InhomogeneousSum { left: f1.degree(), right: f2.degree() });
        }
        let span = ExactMatrix::from_rows(alloc::vec![f1.coefficient_vector(), f2.coefficient_vector()])?;
        if span.rank() < 2 {
            return Err(Error::DegenerateLine);
        }
        Ok(LineInSystem { f1, f2 })
    }

    pub fn f1(&self) -> &HomogeneousPolynomial {
        &self.f1
    }

    pub fn f2(&self) -> &HomogeneousPolynomial {
        &self.f2
    }

    pub fn degree(&self) -> u32 {
        self.f1.degree()
    }

    pub fn swapped(&self) -> LineInSystem {
        LineInSystem { f1: self.f2.clone(), f2: self.f1.clone() }
    }
}

/// The pencil `s*M(f1) + t*M(f2)` with `M(f)` multiplication by `f` from
/// `H^0(O(k-d))` to `H^0(O(k))`; empty (`u = 0`) when `k < d`.
pub fn verlinde_pencil(ctx: &VerlindeContext, line: &LineInSystem) -> Result<Pencil> {
    ctx.check_line(line)?;
    let src = ctx.k as i64 - ctx.d as i64;
    if src < 0 {
        return Pencil::new(ExactMatrix::zeros(ctx.w, 0), ExactMatrix::zeros(ctx.w, 0));
    }
    Pencil::new(line.f1.mult_matrix(src), line.f2.mult_matrix(src))
}

/// `[A | B]`, whose column space is `f1·U + f2·U` inside `H^0(O(k))`.
fn span_matrix(ctx: &VerlindeContext, line: &LineInSystem) -> Result<ExactMatrix> {
    let p = verlinde_pencil(ctx, line)?;
    p.a().hconcat(p.b())
}

/// Number of zero entries of the splitting type, computed as
/// `dim H^0(O(k)) - dim(f1·U + f2·U)`.
pub fn zero_count(ctx: &VerlindeContext, line: &LineInSystem) -> Result<usize> {
    Ok(ctx.w - span_matrix(ctx, line)?.rank())
}

/// Whether `V_k|_T` has the generic type, decided by linear independence of
/// the products `f1·θ, f2·θ` over a monomial basis `θ` of `U`.
pub fn is_generic_type(ctx: &VerlindeContext, line: &LineInSystem) -> Result<bool> {
    ctx.require_generic()?;
    Ok(span_matrix(ctx, line)?.rank() == 2 * ctx.u)
}

/// Outcome of the gcd criterion for a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdPrediction {
    /// Estimated `deg gcd(f1, f2)`.
    pub gcd_degree: u32,
    /// Whether `deg gcd >= 2d - k`, i.e. the type is not generic.
    pub jumping: bool,
    /// Full predicted type when `k = d + 1`.
    pub predicted_type: Option<SplittingType>,
}

/// Predicts genericity from the degree of `gcd(f1, f2)`: the type is
/// non-generic iff `deg gcd >= 2d - k`. At `k = d + 1` the only non-generic
/// type is `(2, 1, ..., 1, 0, ..., 0)`.
pub fn predict_by_gcd(
    ctx: &VerlindeContext,
    line: &LineInSystem,
    trials: usize,
    seed: u64,
) -> Result<GcdPrediction> {
    ctx.require_generic()?;
    ctx.check_line(line)?;
    let g = gcd_degree(&line.f1, &line.f2, trials, seed)?;
    let jumping = g as i64 >= 2 * ctx.d as i64 - ctx.k as i64;
    let predicted_type = (ctx.k == ctx.d + 1).then(|| {
        if jumping {
            SplittingType::one_jump(ctx.rank(), ctx.degree())
        } else {
            SplittingType::generic(ctx.rank(), ctx.degree())
        }
    });
    Ok(GcdPrediction { gcd_degree: g, jumping, predicted_type })
}

/// How [`sample_line`] draws its forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SampleMode {
    /// Two independent dense random forms of degree `d`.
    Random,
    /// `(h·g1, h·g2)` with `deg h` equal to the payload and random `g_i`.
    Jumping(u32),
}

/// Draws a seeded random line of the requested shape.
pub fn sample_line(ctx: &VerlindeContext, mode: SampleMode, seed: u64) -> Result<LineInSystem> {
    if let SampleMode::Jumping(shared) = mode {
        if shared >= ctx.d {
            return Err(Error::InvalidParameters(format!(
                "planted gcd degree {shared} must be below d = {}",
                ctx.d
            )));
        }
    }
    let mut rng = random::stream(seed, 0);
    let n = ctx.n;
    for _ in 0..MAX_LINE_ATTEMPTS {
        let (f1, f2) = match mode {
            SampleMode::Random => (
                random::form(&mut rng, n, ctx.d, DEFAULT_BOUND),
                random::form(&mut rng, n, ctx.d, DEFAULT_BOUND),
            ),
            SampleMode::Jumping(shared) => {
                let h = random::nonzero_form(&mut rng, n, shared, DEFAULT_BOUND);
                let g1 = random::form(&mut rng, n, ctx.d - shared, DEFAULT_BOUND);
                let g2 = random::form(&mut rng, n, ctx.d - shared, DEFAULT_BOUND);
                (poly_mul(&h, &g1)?, poly_mul(&h, &g2)?)
            }
        };
        match LineInSystem::new(f1, f2) {
            Ok(line) => return Ok(line),
            Err(Error::DegenerateLine) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegenerateLine)
}

/// One row of [`genericity_range_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericityRow {
    pub k: u32,
    pub degree: usize,
    pub rank: usize,
    pub degree_at_most_rank: bool,
    pub k_at_most_2d: bool,
}

impl GenericityRow {
    /// `k <= 2d  =>  d^(k) <= r^(k)`.
    pub fn implication_holds(&self) -> bool {
        !self.k_at_most_2d || self.degree_at_most_rank
    }
}

pub fn genericity_range_table(n: usize, d: u32, k_max: u32) -> Result<Vec<GenericityRow>> {
    (1..=k_max)
        .map(|k| {
            let ctx = VerlindeContext::new(n, d, k)?;
            Ok(GenericityRow {
                k,
                degree: ctx.degree(),
                rank: ctx.rank(),
                degree_at_most_rank: ctx.has_generic_type(),
                k_at_most_2d: k <= 2 * d,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::variable(n + 1, i)
    }

    fn xx(n: usize, i: usize, j: usize) -> HomogeneousPolynomial {
        poly_mul(&x(n, i), &x(n, j)).unwrap()
    }

    fn special_line() -> LineInSystem {
        LineInSystem::new(xx(2, 0, 1), xx(2, 0, 2)).unwrap()
    }

    #[test]
    fn context_numbers() {
        let c = VerlindeContext::new(2, 2, 3).unwrap();
        assert_eq!((c.w(), c.u(), c.rank(), c.degree()), (10, 3, 7, 3));
        let c = VerlindeContext::new(2, 2, 5).unwrap();
        assert_eq!((c.w(), c.u(), c.rank(), c.degree()), (21, 10, 11, 10));
        for (n, d) in [(2, 3), (3, 2), (3, 4)] {
            assert_eq!(VerlindeContext::new(n, d, d).unwrap().degree(), 1);
        }
        assert_eq!(VerlindeContext::new(2, 3, 2).unwrap().u(), 0);
        assert!(VerlindeContext::new(1, 2, 3).is_err());
    }

    #[test]
    fn special_line_jumps() {
        let ctx = VerlindeContext::new(2, 2, 3).unwrap();
        let line = special_line();
        let p = verlinde_pencil(&ctx, &line).unwrap();
        assert_eq!((p.w(), p.u()), (10, 3));
        assert!(p.is_injective());
        assert_eq!(p.twisted_section_dims(4).unwrap(), vec![3, 1, 0, 0]);
        assert_eq!(p.sylvester(1).rank(), 5);
        assert_eq!(p.splitting_type().unwrap().entries(), &[2, 1, 0, 0, 0, 0, 0]);
        assert_eq!(zero_count(&ctx, &line).unwrap(), 5);
        assert!(!is_generic_type(&ctx, &line).unwrap());
        let pred = predict_by_gcd(&ctx, &line, 3, 0).unwrap();
        assert_eq!(pred.gcd_degree, 1);
        assert!(pred.jumping);
        assert_eq!(pred.predicted_type.unwrap().entries(), &[2, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn swapping_forms_swaps_halves() {
        let ctx = VerlindeContext::new(2, 2, 3).unwrap();
        let p = verlinde_pencil(&ctx, &special_line()).unwrap();
        let q = verlinde_pencil(&ctx, &special_line().swapped()).unwrap();
        assert_eq!(p.swapped(), q);
    }

    #[test]
    fn coprime_monomials_are_generic() {
        let ctx = VerlindeContext::new(2, 2, 3).unwrap();
        let line = LineInSystem::new(xx(2, 0, 0), xx(2, 1, 1)).unwrap();
        let pred = predict_by_gcd(&ctx, &line, 3, 0).unwrap();
        assert!(!pred.jumping);
        assert!(is_generic_type(&ctx, &line).unwrap());
        assert_eq!(verlinde_pencil(&ctx, &line).unwrap().splitting_type().unwrap(), ctx.generic_type().unwrap());
    }

    #[test]
    fn random_line_is_generic() {
        let ctx = VerlindeContext::new(2, 2, 3).unwrap();
        let line = sample_line(&ctx, SampleMode::Random, 4).unwrap();
        assert_eq!(zero_count(&ctx, &line).unwrap(), 4);
        assert!(is_generic_type(&ctx, &line).unwrap());
        let t = verlinde_pencil(&ctx, &line).unwrap().splitting_type().unwrap();
        assert_eq!(t.entries(), &[1, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn k_equals_d_leaves_only_the_span() {
        let ctx = VerlindeContext::new(3, 2, 2).unwrap();
        let line = sample_line(&ctx, SampleMode::Jumping(1), 2).unwrap();
        assert_eq!(zero_count(&ctx, &line).unwrap(), ctx.w() - 2);
    }

    #[test]
    fn below_d_the_bundle_is_trivial() {
        let ctx = VerlindeContext::new(2, 3, 2).unwrap();
        let line = sample_line(&ctx, SampleMode::Random, 0).unwrap();
        let p = verlinde_pencil(&ctx, &line).unwrap();
        assert_eq!((p.w(), p.u()), (6, 0));
        assert_eq!(p.splitting_type().unwrap(), SplittingType::generic(6, 0));
    }

    #[test]
    fn past_2d_never_generic() {
        let ctx = VerlindeContext::new(2, 2, 5).unwrap();
        assert!(ctx.has_generic_type());
        for seed in 0..3 {
            let line = sample_line(&ctx, SampleMode::Random, seed).unwrap();
            assert!(!is_generic_type(&ctx, &line).unwrap());
        }
    }

    #[test]
    fn generic_guard() {
        // n=2, d=1, k=3: degree C(4,2)=6 > rank 10-6=4
        let ctx = VerlindeContext::new(2, 1, 3).unwrap();
        assert!(!ctx.has_generic_type());
        let line = sample_line(&ctx, SampleMode::Random, 0).unwrap();
        assert!(matches!(is_generic_type(&ctx, &line), Err(Error::GenericTypeUndefined { .. })));
    }

    #[test]
    fn planted_linear_gcd_in_p3() {
        let ctx = VerlindeContext::new(3, 2, 3).unwrap();
        let line = sample_line(&ctx, SampleMode::Jumping(1), 9).unwrap();
        let pred = predict_by_gcd(&ctx, &line, 3, 1).unwrap();
        assert!(pred.jumping);
        let predicted = pred.predicted_type.unwrap();
        assert_eq!(predicted.len(), 16);
        assert_eq!(predicted.entries()[..4], [2, 1, 1, 0]);
        assert_eq!(verlinde_pencil(&ctx, &line).unwrap().splitting_type().unwrap(), predicted);
    }

    #[test]
    fn degenerate_lines_rejected() {
        let f = xx(2, 0, 1);
        assert_eq!(LineInSystem::new(f.clone(), f.scale(&crate::Rational::from_integer(3.into()))), Err(Error::DegenerateLine));
        let ctx = VerlindeContext::new(2, 2, 3).unwrap();
        assert!(sample_line(&ctx, SampleMode::Jumping(2), 0).is_err());
        let wrong = LineInSystem::new(x(2, 0), x(2, 1)).unwrap();
        assert!(matches!(zero_count(&ctx, &wrong), Err(Error::LineMismatch { .. })));
    }

    #[test]
    fn genericity_table() {
        let rows = genericity_range_table(2, 2, 8).unwrap();
        assert!(rows.iter().all(GenericityRow::implication_holds));
        assert!(rows[..4].iter().all(|r| r.degree_at_most_rank));
        assert_eq!((rows[4].degree, rows[4].rank, rows[4].degree_at_most_rank), (10, 11, true));
        let rows = genericity_range_table(3, 3, 12).unwrap();
        assert!(rows.iter().all(GenericityRow::implication_holds));
    }
}
