//! The inline polynomial grammar: `3/2*x0^2 - x1*x2 + 4*x0*x2`.
//!
//! A polynomial is a signed sum of terms. A term is a rational coefficient,
//! a product of variables `x<i>` or `x<i>^<e>`, or a coefficient followed by
//! `*` and such a product. Whitespace is ignored.

use num_traits::Zero;
use verlinde_core::algebra::parse_rational;
use verlinde_core::{HomogeneousPolynomial, Rational};

use crate::error::InputError;

/// Parses `text` as a form in `n + 1` variables. With `degree = None` the
/// degree is taken from the first term.
pub fn parse_polynomial(text: &str, n: usize, degree: Option<u32>) -> Result<HomogeneousPolynomial, InputError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(InputError::Syntax { input: text.to_string(), reason: "empty polynomial".into() });
    }
    let mut terms = Vec::new();
    for (index, (negative, body)) in split_terms(&compact)?.into_iter().enumerate() {
        let (exps, mut c) = parse_term(body, n).map_err(|reason| InputError::Term { index, term: body.to_string(), reason })?;
        if negative {
            c = -c;
        }
        terms.push((body.to_string(), exps, c));
    }
    let degree = match degree {
        Some(d) => d,
        None => terms[0].1.iter().sum(),
    };
    for (index, (body, exps, c)) in terms.iter().enumerate() {
        let found: u32 = exps.iter().sum();
        // a bare `0` is the zero form of any degree
        if found != degree && !(found == 0 && c.is_zero()) {
            return Err(InputError::Term {
                index,
                term: body.clone(),
                reason: format!("degree {found}, expected {degree}"),
            });
        }
    }
    let nonzero = terms.into_iter().filter(|(_, _, c)| !c.is_zero()).map(|(_, e, c)| (e, c));
    Ok(HomogeneousPolynomial::from_terms(n + 1, degree, nonzero)?)
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, InputError> {
    let (mut negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let mut out = Vec::new();
    let mut rest = body;
    while let Some(i) = rest.find(['+', '-']) {
        out.push((negative, &rest[..i]));
        negative = rest.as_bytes()[i] == b'-';
        rest = &rest[i + 1..];
    }
    out.push((negative, rest));
    if let Some(index) = out.iter().position(|(_, t)| t.is_empty()) {
        return Err(InputError::Term { index, term: String::new(), reason: "empty term".into() });
    }
    Ok(out)
}

fn parse_term(body: &str, n: usize) -> Result<(Vec<u32>, Rational), String> {
    let mut exps = vec![0u32; n + 1];
    let mut coefficient = Rational::from_integer(1.into());
    for (i, factor) in body.split('*').enumerate() {
        if let Some(var) = factor.strip_prefix('x') {
            let (index, power) = match var.split_once('^') {
                Some((index, power)) => (index, power.parse::<u32>().map_err(|_| format!("bad exponent in `{factor}`"))?),
                None => (var, 1),
            };
            let index: usize = index.parse().map_err(|_| format!("bad variable `{factor}`"))?;
            if index > n {
                return Err(format!("variable x{index} outside x0..x{n}"));
            }
            exps[index] += power;
        } else if i == 0 {
            coefficient = parse_rational(factor).map_err(|e| e.to_string())?;
        } else {
            return Err(format!("unexpected factor `{factor}`"));
        }
    }
    Ok((exps, coefficient))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_products_and_fractions() {
        let f = parse_polynomial("3/2*x0^2 - x1*x2", 2, Some(2)).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coefficient(&verlinde_core::Monomial::new(vec![2, 0, 0])), q(3, 2));
        assert_eq!(f.coefficient(&verlinde_core::Monomial::new(vec![0, 1, 1])), q(-1, 1));
        assert_eq!(f.to_string(), "3/2*x0^2 - x1*x2");
    }

    #[test]
    fn infers_degree_and_merges_repeats() {
        let f = parse_polynomial("x0*x0 + 2*x0^2", 1, None).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.to_string(), "3*x0^2");
        assert!(parse_polynomial("x0 - x0", 1, None).unwrap().is_zero());
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(parse_polynomial("-5/3", 2, Some(0)).unwrap().to_string(), "-5/3");
        assert!(parse_polynomial("0", 2, Some(0)).unwrap().is_zero());
        let z = parse_polynomial("0", 2, Some(3)).unwrap();
        assert!(z.is_zero() && z.degree() == 3);
        assert!(parse_polynomial("1", 2, Some(3)).is_err());
    }

    #[test]
    fn rejects_with_term_names() {
        let err = parse_polynomial("x0*x1 + x2^3", 2, Some(2)).unwrap_err();
        assert!(err.to_string().contains("x2^3"), "{err}");
        let err = parse_polynomial("x0*x5", 2, Some(2)).unwrap_err();
        assert!(err.to_string().contains("x5"), "{err}");
        assert!(parse_polynomial("x0 + ", 2, None).is_err());
        assert!(parse_polynomial("1.5*x0", 2, None).is_err());
        assert!(parse_polynomial("x0*3", 2, None).is_err());
        assert!(parse_polynomial("", 2, None).is_err());
    }
}
