//! JSON representations of polynomials, pencils, splitting types, Schubert
//! classes and jumping-class reports.
//!
//! Rationals are written as strings `"p"` or `"p/q"`. Integer coefficients of
//! Schubert classes are numbers when they fit in an `i64` and decimal
//! strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use verlinde_core::jumping::{ClassEvaluation, CoefficientRow, JumpingClassReport};
use verlinde_core::algebra::parse_rational;
use verlinde_core::{ExactMatrix, GrContext, HomogeneousPolynomial, Pencil, SchubertClass, SplittingType};

use crate::error::InputError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl From<&HomogeneousPolynomial> for PolynomialJson {
    fn from(f: &HomogeneousPolynomial) -> Self {
        PolynomialJson {
            n: f.n(),
            degree: f.degree(),
            terms: f.terms().map(|(m, c)| TermJson { c: c.to_string(), e: m.exponents().to_vec() }).collect(),
        }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self) -> Result<HomogeneousPolynomial, InputError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (index, t) in self.terms.iter().enumerate() {
            let bad = |reason: String| InputError::Term { index, term: serde_json::to_string(t).expect("plain data"), reason };
            if t.e.len() != self.n + 1 {
                return Err(bad(format!("{} exponents, expected {}", t.e.len(), self.n + 1)));
            }
            let sum: u32 = t.e.iter().sum();
            if sum != self.degree {
                return Err(bad(format!("exponents sum to {sum}, expected degree {}", self.degree)));
            }
            let c = parse_rational(&t.c).map_err(|e| bad(e.to_string()))?;
            terms.push((t.e.clone(), c));
        }
        Ok(HomogeneousPolynomial::from_terms(self.n + 1, self.degree, terms)?)
    }
}

pub fn polynomial_from_json(text: &str) -> Result<HomogeneousPolynomial, InputError> {
    serde_json::from_str::<PolynomialJson>(text)?.to_polynomial()
}

pub fn polynomial_to_json(f: &HomogeneousPolynomial) -> String {
    serde_json::to_string(&PolynomialJson::from(f)).expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilJson {
    pub w: usize,
    pub u: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
}

fn matrix_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|q| q.to_string()).collect()).collect()
}

fn matrix_from_strings(rows: &[Vec<String>], w: usize, u: usize, name: &str) -> Result<ExactMatrix, InputError> {
    if rows.len() != w || rows.iter().any(|r| r.len() != u) {
        return Err(InputError::Usage(format!("matrix {name} must be {w}x{u}")));
    }
    if w == 0 || u == 0 {
        return Ok(ExactMatrix::zeros(w, u));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactMatrix::from_rows(parsed)?)
}

impl From<&Pencil> for PencilJson {
    fn from(p: &Pencil) -> Self {
        PencilJson { w: p.w(), u: p.u(), a: matrix_strings(p.a()), b: matrix_strings(p.b()) }
    }
}

impl PencilJson {
    pub fn to_pencil(&self) -> Result<Pencil, InputError> {
        let a = matrix_from_strings(&self.a, self.w, self.u, "A")?;
        let b = matrix_from_strings(&self.b, self.w, self.u, "B")?;
        Ok(Pencil::new(a, b)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingTypeJson {
    pub entries: Vec<u32>,
}

impl From<&SplittingType> for SplittingTypeJson {
    fn from(t: &SplittingType) -> Self {
        SplittingTypeJson { entries: t.entries().to_vec() }
    }
}

impl SplittingTypeJson {
    pub fn to_type(&self) -> Result<SplittingType, InputError> {
        Ok(SplittingType::new(self.entries.clone())?)
    }
}

/// An integer written as a JSON number when it fits in `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntegerJson {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntegerJson {
    fn from(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(x) => IntegerJson::Small(x),
            None => IntegerJson::Big(v.to_string()),
        }
    }
}

impl IntegerJson {
    pub fn to_bigint(&self) -> Result<BigInt, InputError> {
        match self {
            IntegerJson::Small(x) => Ok(BigInt::from(*x)),
            IntegerJson::Big(s) => s
                .parse()
                .map_err(|_| InputError::Syntax { input: s.clone(), reason: "not an integer".into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertTermJson {
    pub a: i64,
    pub b: i64,
    pub c: IntegerJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertClassJson {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub terms: Vec<SchubertTermJson>,
}

impl From<&SchubertClass> for SchubertClassJson {
    fn from(x: &SchubertClass) -> Self {
        SchubertClassJson {
            big_n: x.context().n(),
            terms: {
                let mut terms: Vec<_> = x
                    .terms()
                    .map(|(&(a, b), c)| SchubertTermJson { a: a as i64, b: b as i64, c: c.into() })
                    .collect();
                terms.reverse();
                terms
            },
        }
    }
}

impl SchubertClassJson {
    pub fn to_class(&self) -> Result<SchubertClass, InputError> {
        let ctx = GrContext::new(self.big_n)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.a, t.b, t.c.to_bigint()?)))
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(SchubertClass::from_terms(ctx, terms)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEvaluationJson {
    pub dim_z: u32,
    pub class: SchubertClassJson,
    pub display: String,
    /// Nonzero terms whose symbols fall outside the Grassmannian.
    pub out_of_range: Vec<SchubertTermJson>,
    pub middle: Option<SchubertTermJson>,
}

impl From<&ClassEvaluation> for ClassEvaluationJson {
    fn from(e: &ClassEvaluation) -> Self {
        ClassEvaluationJson {
            dim_z: e.dim_z,
            class: (&e.class).into(),
            display: e.class.to_string(),
            out_of_range: e
                .out_of_range
                .iter()
                .map(|t| SchubertTermJson { a: t.a, b: t.b, c: (&t.coefficient).into() })
                .collect(),
            middle: e.middle.as_ref().map(|m| SchubertTermJson { a: m.a, b: m.b, c: (&m.coefficient).into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimZJson {
    #[serde(rename = "paper")]
    pub closed_form: u32,
    pub oracle: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTheoremJson {
    /// At the closed-form dimension; absent when it exceeds the Grassmannian.
    #[serde(rename = "paper")]
    pub closed_form: Option<ClassEvaluationJson>,
    pub oracle: ClassEvaluationJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRowJson {
    pub a: u32,
    pub b: u32,
    pub theorem: IntegerJson,
    pub pushpull: IntegerJson,
    pub agree: bool,
    pub middle: bool,
}

impl From<&CoefficientRow> for CoefficientRowJson {
    fn from(r: &CoefficientRow) -> Self {
        CoefficientRowJson {
            a: r.a,
            b: r.b,
            theorem: (&r.theorem).into(),
            pushpull: (&r.pushpull).into(),
            agree: r.agrees(),
            middle: r.middle,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookkeepingJson {
    #[serde(rename = "paper")]
    pub closed_form: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub d: u32,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub dim_z: DimZJson,
    pub dim_mismatch: bool,
    pub class_theorem: ClassTheoremJson,
    pub class_pushpull: ClassEvaluationJson,
    pub coefficient_table: Vec<CoefficientRowJson>,
    pub bookkeeping: BookkeepingJson,
    pub flags: Vec<String>,
}

impl From<&JumpingClassReport> for ReportJson {
    fn from(r: &JumpingClassReport) -> Self {
        ReportJson {
            n: r.n,
            d: r.d,
            big_n: r.grassmannian.n(),
            dim_z: DimZJson { closed_form: r.dim_z_closed_form, oracle: r.dim_z_oracle },
            dim_mismatch: r.dim_z_closed_form != r.dim_z_oracle,
            class_theorem: ClassTheoremJson {
                closed_form: r.class_theorem_closed_form.as_ref().map(Into::into),
                oracle: (&r.class_theorem_oracle).into(),
            },
            class_pushpull: (&r.class_pushpull).into(),
            coefficient_table: r.coefficient_table.iter().map(Into::into).collect(),
            bookkeeping: BookkeepingJson { closed_form: r.bookkeeping_closed_form, oracle: r.bookkeeping_oracle },
            flags: r.flags.iter().map(|f| f.name().to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_json_round_trip() {
        let text = r#"{"n":2,"degree":2,"terms":[{"c":"3/2","e":[2,0,0]},{"c":"-1","e":[0,1,1]}]}"#;
        let f = polynomial_from_json(text).unwrap();
        assert_eq!(f.to_string(), "3/2*x0^2 - x1*x2");
        assert_eq!(polynomial_to_json(&f), text);
    }

    #[test]
    fn polynomial_json_rejects_bad_terms() {
        let err = polynomial_from_json(r#"{"n":2,"degree":2,"terms":[{"c":"1","e":[2,0,0]},{"c":"1","e":[1,1,1]}]}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("term 1"), "{err}");
        assert!(err.to_string().contains(r#"{"c":"1","e":[1,1,1]}"#), "{err}");
        let err = polynomial_from_json(r#"{"n":2,"degree":1,"terms":[{"c":"1","e":[1,0]}]}"#).unwrap_err();
        assert!(err.to_string().contains("2 exponents"), "{err}");
        assert!(polynomial_from_json(r#"{"n":2,"degree":1,"terms":[{"c":"0.5","e":[1,0,0]}]}"#).is_err());
        assert!(polynomial_from_json(r#"{"n":2,"degree":1}"#).is_err());
    }

    #[test]
    fn pencil_json_round_trip() {
        let ty = SplittingType::new(vec![2, 1, 0]).unwrap();
        let p = Pencil::kronecker(&ty, 6, 3, Some(3)).unwrap();
        let json = PencilJson::from(&p);
        let back = serde_json::from_str::<PencilJson>(&serde_json::to_string(&json).unwrap()).unwrap();
        let q = back.to_pencil().unwrap();
        assert_eq!(q, p);
        assert_eq!(q.splitting_type().unwrap(), ty);
        let mut bad = json.clone();
        bad.a[0].pop();
        assert!(bad.to_pencil().is_err());
    }

    #[test]
    fn splitting_type_json() {
        let t: SplittingTypeJson = serde_json::from_str(r#"{"entries":[2,1,0]}"#).unwrap();
        assert_eq!(t.to_type().unwrap().to_string(), "(2,1,0)");
        let t: SplittingTypeJson = serde_json::from_str(r#"{"entries":[0,1]}"#).unwrap();
        assert!(t.to_type().is_err());
    }

    #[test]
    fn schubert_json_round_trip_with_big_coefficients() {
        let ctx = GrContext::new(6).unwrap();
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = SchubertClass::from_terms(ctx, [(3, 1, BigInt::from(6)), (2, 2, huge)]).unwrap();
        let json = serde_json::to_string(&SchubertClassJson::from(&x)).unwrap();
        assert_eq!(
            json,
            r#"{"N":6,"terms":[{"a":3,"b":1,"c":6},{"a":2,"b":2,"c":"123456789012345678901234567890"}]}"#
        );
        let back: SchubertClassJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_class().unwrap(), x);
    }
}
