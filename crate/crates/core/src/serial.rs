//! JSON schemas.
//!
//! * Weyl element: `{"lambda":[...],"word":[...]}`, the word being the
//!   canonical reduced word of the finite part in `s_1..s_l`.
//! * `GF(p)` coefficient: an integer in `0..p`.
//! * Group-ring element: `[{"exp":[...l+1 ints...],"coeff":int}]`, sorted
//!   lexicographically by exponent.
//! * Hecke element and Schubert vector: `[{"elem":<element>,"coeff":<coeff>}]`
//!   sorted by (length, canonical reduced word).
//! * Grassmannian vector: `[{"lambda":[...],"coeff":<coeff>}]` with
//!   antidominant keys.
//!
//! Output is deterministic, so equal values serialize to identical bytes.

use serde_json::{json, Value};
use thiserror::Error;

use crate::coeffs::{CoeffError, Coefficient, Fp, GroupRingElement, LinearCombination};
use crate::hecke::{convert_basis, HeckeBasis, HeckeElement};
use crate::kmodule::{GrassmannianVector, SchubertVector};
use crate::rootdata::Coweight;
use crate::weyl::{AffineWeylElement, AffineWeylGroup, WeylError, Word};

#[derive(Debug, Error)]
pub enum SerialError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

fn schema(msg: impl Into<String>) -> SerialError {
    SerialError::Schema(msg.into())
}

/// Parameters needed to rebuild coefficients: the prime and the number of
/// torus exponents (`l + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffContext {
    pub prime: u64,
    pub width: usize,
}

pub trait JsonCoefficient: Coefficient + Sized {
    fn to_json(&self) -> Value;
    fn from_json(ctx: CoeffContext, v: &Value) -> Result<Self, SerialError>;
}

impl JsonCoefficient for Fp {
    fn to_json(&self) -> Value {
        json!(self.residue())
    }

    fn from_json(ctx: CoeffContext, v: &Value) -> Result<Self, SerialError> {
        let n = v
            .as_i64()
            .ok_or_else(|| schema(format!("expected an integer coefficient, got {v}")))?;
        Ok(Fp::new(n, ctx.prime)?)
    }
}

impl JsonCoefficient for GroupRingElement {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(chi, c)| json!({"exp": chi.0, "coeff": c.residue()}))
                .collect(),
        )
    }

    fn from_json(ctx: CoeffContext, v: &Value) -> Result<Self, SerialError> {
        let items = v
            .as_array()
            .ok_or_else(|| schema(format!("expected a group-ring term list, got {v}")))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let exp = int_vec(
                item.get("exp")
                    .ok_or_else(|| schema("group-ring term without \"exp\""))?,
            )?;
            let coeff = item
                .get("coeff")
                .and_then(Value::as_i64)
                .ok_or_else(|| schema("group-ring term without integer \"coeff\""))?;
            terms.push((exp, coeff));
        }
        Ok(GroupRingElement::from_terms(ctx.prime, ctx.width, terms)?)
    }
}

fn int_vec(v: &Value) -> Result<Vec<i64>, SerialError> {
    v.as_array()
        .ok_or_else(|| schema(format!("expected an integer array, got {v}")))?
        .iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| schema(format!("expected an integer, got {x}")))
        })
        .collect()
}

fn index_vec(v: &Value) -> Result<Vec<usize>, SerialError> {
    int_vec(v)?
        .into_iter()
        .map(|i| usize::try_from(i).map_err(|_| schema(format!("negative generator index {i}"))))
        .collect()
}

pub fn word_to_json(w: &Word) -> Value {
    json!(w.0)
}

pub fn word_from_json(v: &Value) -> Result<Word, SerialError> {
    Ok(Word(index_vec(v)?))
}

pub fn element_to_json(group: &AffineWeylGroup, x: &AffineWeylElement) -> Value {
    json!({"lambda": x.translation().0, "word": group.finite_word(x).0})
}

pub fn element_from_json(
    group: &AffineWeylGroup,
    v: &Value,
) -> Result<AffineWeylElement, SerialError> {
    let lambda = int_vec(
        v.get("lambda")
            .ok_or_else(|| schema("element without \"lambda\""))?,
    )?;
    let word = word_from_json(
        v.get("word")
            .ok_or_else(|| schema("element without \"word\""))?,
    )?;
    Ok(group.from_parts(&Coweight(lambda), &word)?)
}

/// (length, canonical reduced word): the output order of basis terms.
pub fn element_sort_key(group: &AffineWeylGroup, x: &AffineWeylElement) -> (usize, Word) {
    (group.length(x), group.reduced_word(x))
}

fn combination_to_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    terms: &LinearCombination<AffineWeylElement, C>,
) -> Value {
    let mut items: Vec<_> = terms
        .iter()
        .map(|(x, c)| (element_sort_key(group, x), x, c))
        .collect();
    items.sort_by(|a, b| a.0.cmp(&b.0));
    Value::Array(
        items
            .into_iter()
            .map(|(_, x, c)| json!({"elem": element_to_json(group, x), "coeff": c.to_json()}))
            .collect(),
    )
}

fn combination_from_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    ctx: CoeffContext,
    v: &Value,
) -> Result<LinearCombination<AffineWeylElement, C>, SerialError> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(format!("expected a term list, got {v}")))?;
    let mut out = LinearCombination::new();
    for item in items {
        let elem = element_from_json(
            group,
            item.get("elem")
                .ok_or_else(|| schema("term without \"elem\""))?,
        )?;
        let coeff = C::from_json(
            ctx,
            item.get("coeff")
                .ok_or_else(|| schema("term without \"coeff\""))?,
        )?;
        out.add_term(elem, coeff);
    }
    Ok(out)
}

/// Serialize `h` with coefficients relative to `basis`.
pub fn hecke_to_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    h: &HeckeElement<C>,
    basis: HeckeBasis,
) -> Value {
    combination_to_json(group, convert_basis(group, h, basis).terms())
}

pub fn hecke_from_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    ctx: CoeffContext,
    v: &Value,
    basis: HeckeBasis,
) -> Result<HeckeElement<C>, SerialError> {
    Ok(HeckeElement::from_terms(
        basis,
        combination_from_json(group, ctx, v)?,
    ))
}

pub fn schubert_to_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    v: &SchubertVector<C>,
) -> Value {
    combination_to_json(group, v.terms())
}

pub fn schubert_from_json<C: JsonCoefficient>(
    group: &AffineWeylGroup,
    ctx: CoeffContext,
    v: &Value,
) -> Result<SchubertVector<C>, SerialError> {
    Ok(SchubertVector::from_terms(combination_from_json(
        group, ctx, v,
    )?))
}

pub fn grassmannian_to_json(g: &GrassmannianVector) -> Value {
    Value::Array(
        g.terms()
            .iter()
            .map(|(lambda, c)| json!({"lambda": lambda.0, "coeff": c.to_json()}))
            .collect(),
    )
}

pub fn grassmannian_from_json(
    group: &AffineWeylGroup,
    ctx: CoeffContext,
    v: &Value,
) -> Result<GrassmannianVector, SerialError> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(format!("expected a term list, got {v}")))?;
    let mut out = GrassmannianVector::zero();
    for item in items {
        let lambda = Coweight(int_vec(
            item.get("lambda")
                .ok_or_else(|| schema("term without \"lambda\""))?,
        )?);
        if lambda.rank() != group.rank() {
            return Err(WeylError::DimensionMismatch {
                expected: group.rank(),
                got: lambda.rank(),
            }
            .into());
        }
        let coeff = GroupRingElement::from_json(
            ctx,
            item.get("coeff")
                .ok_or_else(|| schema("term without \"coeff\""))?,
        )?;
        out.add_class(group.root_system(), &lambda, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{LieType, RootSystem};
    use proptest::prelude::*;

    fn a2() -> AffineWeylGroup {
        AffineWeylGroup::new(RootSystem::build(LieType::A, 2).unwrap())
    }

    #[test]
    fn element_schema() {
        let g = AffineWeylGroup::new(RootSystem::build(LieType::A, 1).unwrap());
        let s0 = g.generator(0);
        assert_eq!(
            element_to_json(&g, s0).to_string(),
            r#"{"lambda":[1],"word":[1]}"#
        );
        assert_eq!(
            &element_from_json(&g, &element_to_json(&g, s0)).unwrap(),
            s0
        );
        assert!(element_from_json(&g, &json!({"lambda":[1]})).is_err());
        assert!(element_from_json(&g, &json!({"lambda":[1],"word":[0]})).is_err());
        assert!(element_from_json(&g, &json!({"lambda":[1,2],"word":[]})).is_err());
    }

    #[test]
    fn group_ring_schema_is_sorted() {
        let a = GroupRingElement::from_terms(
            5,
            2,
            [(vec![1, 0], 2), (vec![-1, 3], 4), (vec![0, 0], 1)],
        )
        .unwrap();
        assert_eq!(
            a.to_json().to_string(),
            r#"[{"coeff":4,"exp":[-1,3]},{"coeff":1,"exp":[0,0]},{"coeff":2,"exp":[1,0]}]"#
        );
    }

    #[test]
    fn hecke_terms_sorted_by_length_then_word() {
        let g = a2();
        let ball = g.enumerate_ball(2, 100).unwrap();
        let mut terms = LinearCombination::new();
        for x in ball.iter() {
            terms.add_term(x.clone(), Fp::one(3));
        }
        let h = HeckeElement::from_terms(HeckeBasis::Y, terms);
        let v = hecke_to_json(&g, &h, HeckeBasis::Y);
        let keys: Vec<_> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|t| element_sort_key(&g, &element_from_json(&g, &t["elem"]).unwrap()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // Ytilde labels flip the sign of odd-length terms
        let vt = hecke_to_json(&g, &h, HeckeBasis::YTilde);
        assert_eq!(vt[1]["coeff"], json!(2));
        assert_eq!(vt[0]["coeff"], json!(1));
        let ctx = CoeffContext { prime: 3, width: 3 };
        let back: HeckeElement<Fp> = hecke_from_json(&g, ctx, &vt, HeckeBasis::YTilde).unwrap();
        assert_eq!(convert_basis(&g, &back, HeckeBasis::Y), h);
    }

    #[test]
    fn grassmannian_schema_normalizes_keys() {
        let g = a2();
        let ctx = CoeffContext { prime: 3, width: 3 };
        let v = json!([{"lambda":[1,1],"coeff":[{"exp":[0,0,0],"coeff":1}]}]);
        let gv = grassmannian_from_json(&g, ctx, &v).unwrap();
        assert_eq!(
            grassmannian_to_json(&gv).to_string(),
            r#"[{"coeff":[{"coeff":1,"exp":[0,0,0]}],"lambda":[-1,-1]}]"#
        );
    }

    fn group_ring() -> impl Strategy<Value = GroupRingElement> {
        prop::collection::vec((prop::collection::vec(-3i64..=3, 3), 0i64..7), 0..4)
            .prop_map(|ts| GroupRingElement::from_terms(7, 3, ts).unwrap())
    }

    proptest! {
        #[test]
        fn schubert_vectors_round_trip(
            words in prop::collection::vec(prop::collection::vec(0usize..3, 0..6), 0..5),
            coeffs in prop::collection::vec(group_ring(), 5),
        ) {
            let g = a2();
            let mut v = SchubertVector::zero();
            for (w, c) in words.iter().zip(&coeffs) {
                v.add_class(g.word_product(&Word(w.clone())).unwrap(), c.clone());
            }
            let ctx = CoeffContext { prime: 7, width: 3 };
            let json = schubert_to_json(&g, &v);
            let back: SchubertVector = schubert_from_json(&g, ctx, &json).unwrap();
            prop_assert_eq!(&back, &v);
            prop_assert_eq!(schubert_to_json(&g, &back).to_string(), json.to_string());
        }
    }
}
