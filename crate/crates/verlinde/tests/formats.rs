use num_bigint::BigInt;
use proptest::prelude::*;
use verlinde::format::{polynomial_from_json, polynomial_to_json, SchubertClassJson};
use verlinde::inline::parse_polynomial;
use verlinde_core::{monomial_basis, GrContext, HomogeneousPolynomial, Rational, SchubertClass};

fn forms() -> impl Strategy<Value = HomogeneousPolynomial> {
    (1usize..=3, 0u32..=4).prop_flat_map(|(n, degree)| {
        let size = monomial_basis(n, degree as i64).len();
        prop::collection::vec((0..size, -30i64..=30, 1i64..=12), 0..6).prop_map(move |terms| {
            let basis = monomial_basis(n, degree as i64);
            let terms = terms
                .into_iter()
                .map(|(i, p, q)| (basis[i].exponents().to_vec(), Rational::new(p.into(), q.into())));
            HomogeneousPolynomial::from_terms(n + 1, degree, terms).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn inline_round_trip(f in forms()) {
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(&text, f.n(), Some(f.degree())).unwrap(), f.clone());
    }

    #[test]
    fn json_round_trip(f in forms()) {
        prop_assert_eq!(polynomial_from_json(&polynomial_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn inline_through_json(f in forms()) {
        let g = parse_polynomial(&f.to_string(), f.n(), Some(f.degree())).unwrap();
        let h = polynomial_from_json(&polynomial_to_json(&g)).unwrap();
        prop_assert_eq!(h.to_string(), f.to_string());
    }

    #[test]
    fn schubert_json_round_trip(coeffs in prop::collection::vec(-1000i64..1000, 6)) {
        let ctx = GrContext::new(6).unwrap();
        let symbols = ctx.basis(4);
        let x = SchubertClass::from_terms(
            ctx,
            symbols.iter().zip(coeffs).map(|(&(a, b), c)| (a as i64, b as i64, BigInt::from(c))).collect::<Vec<_>>(),
        )
        .unwrap();
        let text = serde_json::to_string(&SchubertClassJson::from(&x)).unwrap();
        let back: SchubertClassJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_class().unwrap(), x);
    }
}

#[test]
fn malformed_json_names_the_term() {
    let err = polynomial_from_json(r#"{"n":1,"degree":2,"terms":[{"c":"1","e":[2,0]},{"c":"2","e":[2,1]}]}"#)
        .unwrap_err()
        .to_string();
    assert!(err.contains("term 1"), "{err}");
    assert!(err.contains(r#""e":[2,1]"#), "{err}");
}
