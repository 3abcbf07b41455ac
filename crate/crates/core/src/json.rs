//! JSON encodings.
//!
//! * `BigRat`: `{"num": "<decimal>", "den": "<decimal>"}`
//! * `QSqrt2`: `{"rat": <BigRat>, "sqrt2": <BigRat>}`
//! * `MultiPoly`: `{"arity": n, "terms": [{"exponents": [..], "coeff": <BigRat>}, ..]}`
//! * `WeylElement`: `{"n": n, "terms": [{"alpha": [..], "beta": [..], "coeff": <BigRat>}, ..]}`
//! * `ExactMatrix`: `{"rows": r, "cols": c, "ring": "int"|"rat"|"qsqrt2"|"poly", "entries": [[..], ..]}`
//!
//! Integers inside `"int"` matrices are decimal strings.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::linalg::{ExactMatrix, Ring};
use crate::poly::MultiPoly;
use crate::scalar::{BigRat, QSqrt2};
use crate::weyl::{WeylElement, WeylMonomial};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(v: &Value) -> Result<Self>;
}

/// Ring tag used in the matrix header.
pub trait RingTag {
    const TAG: &'static str;
}

impl RingTag for BigInt {
    const TAG: &'static str = "int";
}
impl RingTag for BigRat {
    const TAG: &'static str = "rat";
}
impl RingTag for QSqrt2 {
    const TAG: &'static str = "qsqrt2";
}
impl RingTag for MultiPoly {
    const TAG: &'static str = "poly";
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.parse().map_err(|_| bad(format!("invalid integer `{s}`"))),
        Value::Number(n) => n.to_string().parse().map_err(|_| bad(format!("invalid integer `{n}`"))),
        _ => Err(bad("expected integer string")),
    }
}

fn parse_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| bad("expected non-negative integer"))
}

fn parse_index(v: &Value) -> Result<MultiIndex> {
    let arr = v.as_array().ok_or_else(|| bad("expected exponent array"))?;
    arr.iter()
        .map(|e| e.as_u64().and_then(|k| u32::try_from(k).ok()).ok_or_else(|| bad("expected exponent")))
        .collect::<Result<Vec<_>>>()
        .map(MultiIndex::new)
}

impl ToJson for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl FromJson for BigInt {
    fn from_json(v: &Value) -> Result<Self> {
        parse_bigint(v)
    }
}

impl ToJson for BigRat {
    fn to_json(&self) -> Value {
        json!({"num": self.numer().to_string(), "den": self.denom().to_string()})
    }
}

impl FromJson for BigRat {
    fn from_json(v: &Value) -> Result<Self> {
        let num = parse_bigint(field(v, "num")?)?;
        let den = parse_bigint(field(v, "den")?)?;
        if den == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        Ok(BigRat::new(num, den))
    }
}

impl ToJson for QSqrt2 {
    fn to_json(&self) -> Value {
        json!({"rat": self.rat.to_json(), "sqrt2": self.irr.to_json()})
    }
}

impl FromJson for QSqrt2 {
    fn from_json(v: &Value) -> Result<Self> {
        Ok(QSqrt2::new(BigRat::from_json(field(v, "rat")?)?, BigRat::from_json(field(v, "sqrt2")?)?))
    }
}

impl ToJson for MultiPoly {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms().map(|(e, c)| json!({"exponents": e.entries(), "coeff": c.to_json()})).collect();
        json!({"arity": self.arity(), "terms": terms})
    }
}

impl FromJson for MultiPoly {
    fn from_json(v: &Value) -> Result<Self> {
        let arity = parse_usize(field(v, "arity")?)?;
        let terms = field(v, "terms")?.as_array().ok_or_else(|| bad("`terms` must be an array"))?;
        let parsed = terms
            .iter()
            .map(|t| Ok((parse_index(field(t, "exponents")?)?, BigRat::from_json(field(t, "coeff")?)?)))
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(arity, parsed)
    }
}

impl ToJson for WeylMonomial {
    fn to_json(&self) -> Value {
        json!({"alpha": self.alpha().entries(), "beta": self.beta().entries()})
    }
}

impl ToJson for WeylElement {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| json!({"alpha": m.alpha().entries(), "beta": m.beta().entries(), "coeff": c.to_json()}))
            .collect();
        json!({"n": self.arity(), "terms": terms})
    }
}

impl FromJson for WeylElement {
    fn from_json(v: &Value) -> Result<Self> {
        let n = parse_usize(field(v, "n")?)?;
        let terms = field(v, "terms")?.as_array().ok_or_else(|| bad("`terms` must be an array"))?;
        let parsed = terms
            .iter()
            .map(|t| {
                let m = WeylMonomial::new(parse_index(field(t, "alpha")?)?, parse_index(field(t, "beta")?)?)?;
                Ok((m, BigRat::from_json(field(t, "coeff")?)?))
            })
            .collect::<Result<Vec<_>>>()?;
        WeylElement::from_terms(n, parsed)
    }
}

impl<R: Ring + ToJson + RingTag> ToJson for ExactMatrix<R> {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.row_vecs().iter().map(|row| Value::Array(row.iter().map(ToJson::to_json).collect())).collect();
        let mut obj = Map::new();
        obj.insert("rows".into(), json!(self.rows()));
        obj.insert("cols".into(), json!(self.cols()));
        obj.insert("ring".into(), json!(R::TAG));
        obj.insert("entries".into(), Value::Array(entries));
        Value::Object(obj)
    }
}

impl<R: Ring + FromJson + RingTag> FromJson for ExactMatrix<R> {
    fn from_json(v: &Value) -> Result<Self> {
        let ring = field(v, "ring")?.as_str().ok_or_else(|| bad("`ring` must be a string"))?;
        if ring != R::TAG {
            return Err(bad(format!("expected ring `{}`, found `{ring}`", R::TAG)));
        }
        let rows = parse_usize(field(v, "rows")?)?;
        let cols = parse_usize(field(v, "cols")?)?;
        let entries = field(v, "entries")?.as_array().ok_or_else(|| bad("`entries` must be an array"))?;
        let parsed = entries
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("matrix row must be an array"))?
                    .iter()
                    .map(R::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = ExactMatrix::from_rows(parsed)?;
        if m.rows() != rows || m.cols() != cols {
            return Err(bad(format!("header says {rows}x{cols}, entries are {}x{}", m.rows(), m.cols())));
        }
        Ok(m)
    }
}

/// Reads the `ring` tag of a matrix document.
pub fn matrix_ring(v: &Value) -> Result<&str> {
    field(v, "ring")?.as_str().ok_or_else(|| bad("`ring` must be a string"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_frac};

    #[test]
    fn rational_shape() {
        assert_eq!(rat_frac(-3, 6).to_json(), json!({"num": "-1", "den": "2"}));
        assert_eq!(BigRat::from_json(&json!({"num": "4", "den": "-6"})).unwrap(), rat_frac(-2, 3));
        assert!(BigRat::from_json(&json!({"num": "1", "den": "0"})).is_err());
    }

    #[test]
    fn qsqrt2_shape() {
        let v = QSqrt2::from_ints(1, 2).to_json();
        assert_eq!(v, json!({"rat": {"num": "1", "den": "1"}, "sqrt2": {"num": "2", "den": "1"}}));
        assert_eq!(QSqrt2::from_json(&v).unwrap(), QSqrt2::from_ints(1, 2));
    }

    #[test]
    fn element_round_trip() {
        let e = WeylElement::from_terms(
            2,
            [(WeylMonomial::from_exps(&[2, 0], &[1, 0]), rat(3)), (WeylMonomial::unit(2), rat_frac(-1, 2))],
        )
        .unwrap();
        let v = e.to_json();
        assert_eq!(v["n"], json!(2));
        assert_eq!(v["terms"][0]["alpha"], json!([0, 0]));
        assert_eq!(WeylElement::from_json(&v).unwrap(), e);
    }

    #[test]
    fn matrix_round_trip() {
        let m = ExactMatrix::from_rows(vec![
            vec![BigInt::from(1), BigInt::from(-2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ])
        .unwrap();
        let v = m.to_json();
        assert_eq!(v["ring"], json!("int"));
        assert_eq!(v["entries"][0][1], json!("-2"));
        assert_eq!(ExactMatrix::<BigInt>::from_json(&v).unwrap(), m);
        assert!(ExactMatrix::<BigRat>::from_json(&v).is_err());
        let mut broken = v.clone();
        broken["rows"] = json!(3);
        assert!(ExactMatrix::<BigInt>::from_json(&broken).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let p = &MultiPoly::var(2, 0).pow(2) + &MultiPoly::constant(2, rat(-5));
        assert_eq!(MultiPoly::from_json(&p.to_json()).unwrap(), p);
    }
}
