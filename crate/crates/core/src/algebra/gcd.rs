use num_traits::Zero;

use super::binary::BinaryForm;
use super::poly::restrict_to_line;
use super::random::{self, DEFAULT_BOUND};
use super::{ExactMatrix, HomogeneousPolynomial};
use crate::error::{Error, Result};

/// Resampling budget per trial when both restrictions vanish.
const MAX_RESAMPLES: usize = 16;

/// Degree of the gcd of two binary forms of equal degree.
///
/// Euclid runs on the chart `t = 1`; the common power of `t` (roots at
/// infinity, invisible on that chart) is added back separately. The zero form
/// is divisible by everything, so `gcd(0, F) = F`.
pub fn binary_gcd_degree(f1: &BinaryForm, f2: &BinaryForm) -> Option<u32> {
    match (f1.t_multiplicity(), f2.t_multiplicity()) {
        (None, None) => None,
        (None, Some(_)) => Some(f2.degree()),
        (Some(_), None) => Some(f1.degree()),
        (Some(m1), Some(m2)) => {
            let affine = f1.dehomogenize().gcd(&f2.dehomogenize());
            Some(affine.degree().unwrap_or(0) as u32 + m1.min(m2))
        }
    }
}

/// Monte Carlo estimate of `deg gcd(f1, f2)` from random line restrictions.
///
/// Each trial substitutes `x_i = a_i s + b_i t` with integers uniform in
/// `[-50, 50]` and takes the gcd degree of the two binary forms; the result
/// is the minimum over trials. It never underestimates: a common factor `h`
/// restricts to a common factor of degree `deg h` unless the line meets the
/// vanishing of a coefficient, and in that case the bound only grows. For
/// `n >= 2` a random line misses the codimension-2 common zero locus of the
/// cofactors, so one honest trial usually suffices.
pub fn gcd_degree(
    f1: &HomogeneousPolynomial,
    f2: &HomogeneousPolynomial,
    trials: usize,
    seed: u64,
) -> Result<u32> {
    if f1.num_vars() != f2.num_vars() {
        return Err(Error::VariableCountMismatch { left: f1.num_vars(), right: f2.num_vars() });
    }
    if trials == 0 {
        return Err(Error::InvalidParameters("gcd_degree needs at least one trial".into()));
    }
    let vars = f1.num_vars();
    let mut best: Option<u32> = None;
    for trial in 0..trials {
        let mut rng = random::stream(seed, trial as u64);
        let mut found = None;
        for _ in 0..MAX_RESAMPLES {
            let subst = ExactMatrix::from_fn(vars, 2, |_, _| random::integer(&mut rng, DEFAULT_BOUND));
            let r1 = restrict_to_line(f1, &subst)?;
            let r2 = restrict_to_line(f2, &subst)?;
            if let Some(deg) = binary_gcd_degree(&r1, &r2) {
                found = Some(deg);
                break;
            }
        }
        let deg = found.ok_or(Error::DegenerateSubstitution)?;
        best = Some(best.map_or(deg, |b| b.min(deg)));
        if best.is_some_and(|b| b.is_zero()) {
            break;
        }
    }
    Ok(best.expect("at least one trial ran"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_mul;
    use crate::algebra::random::{nonzero_form, stream};
    use crate::algebra::rational::from_i64;

    fn x(n: usize, i: usize) -> HomogeneousPolynomial {
        HomogeneousPolynomial::variable(n + 1, i)
    }

    #[test]
    fn shared_variable() {
        let f1 = poly_mul(&x(2, 0), &x(2, 1)).unwrap();
        let f2 = poly_mul(&x(2, 0), &x(2, 2)).unwrap();
        assert_eq!(gcd_degree(&f1, &f2, 3, 11).unwrap(), 1);
    }

    #[test]
    fn equal_and_coprime_forms() {
        let mut rng = stream(5, 0);
        let f = nonzero_form(&mut rng, 2, 3, 50);
        assert_eq!(gcd_degree(&f, &f, 2, 0).unwrap(), 3);
        let a = poly_mul(&x(2, 0), &x(2, 0)).unwrap();
        let b = poly_mul(&x(2, 1), &x(2, 1)).unwrap();
        assert_eq!(gcd_degree(&a, &b, 3, 0).unwrap(), 0);
    }

    #[test]
    fn both_zero_is_degenerate() {
        let z = HomogeneousPolynomial::zero(3, 2);
        assert_eq!(gcd_degree(&z, &z, 1, 0), Err(Error::DegenerateSubstitution));
    }

    #[test]
    fn planted_factor_adds_its_degree() {
        for seed in 0..20u64 {
            let mut rng = stream(seed, 99);
            let h = nonzero_form(&mut rng, 2, (seed % 3) as u32, 50);
            let g1 = nonzero_form(&mut rng, 2, 2, 50);
            let g2 = nonzero_form(&mut rng, 2, 2, 50);
            let base = gcd_degree(&g1, &g2, 4, seed).unwrap();
            let lifted = gcd_degree(&poly_mul(&h, &g1).unwrap(), &poly_mul(&h, &g2).unwrap(), 4, seed).unwrap();
            assert_eq!(lifted, h.degree() + base);
            assert_eq!(base, 0);
        }
    }

    #[test]
    fn roots_at_infinity_are_counted() {
        // t^2 * s and t^2 * (s + t) share t^2
        let t = BinaryForm::linear(from_i64(0), from_i64(1));
        let s = BinaryForm::linear(from_i64(1), from_i64(0));
        let spt = BinaryForm::linear(from_i64(1), from_i64(1));
        let a = t.mul(&t).mul(&s);
        let b = t.mul(&t).mul(&spt);
        assert_eq!(binary_gcd_degree(&a, &b), Some(2));
    }
}
