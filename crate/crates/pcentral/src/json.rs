//! Canonical JSON helpers shared by the file formats.
//!
//! Every document this crate writes is canonical: object keys sorted (the
//! default `serde_json` map is a BTreeMap), rationals in lowest terms with
//! positive denominator, integers as decimal strings where arbitrary
//! precision is required. Re-serializing a parsed document reproduces it
//! byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Map, Value};
use std::str::FromStr;

use crate::cyclo::CycloNum;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};

/// Serializes a value compactly with a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

/// Parses a JSON document, mapping syntax errors to format errors.
pub fn parse_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("JSON parse error: {e}")))
}

pub(crate) fn get<'v>(value: &'v Value, key: &str, ctx: &str) -> Result<&'v Value> {
    value
        .as_object()
        .ok_or_else(|| Error::Format(format!("{ctx}: expected an object")))?
        .get(key)
        .ok_or_else(|| Error::Format(format!("{ctx}: missing field {key:?}")))
}

pub(crate) fn as_u64(value: &Value, ctx: &str) -> Result<u64> {
    value
        .as_u64()
        .ok_or_else(|| Error::Format(format!("{ctx}: expected a non-negative integer")))
}

pub(crate) fn as_usize(value: &Value, ctx: &str) -> Result<usize> {
    Ok(as_u64(value, ctx)? as usize)
}

pub(crate) fn as_i64(value: &Value, ctx: &str) -> Result<i64> {
    value
        .as_i64()
        .ok_or_else(|| Error::Format(format!("{ctx}: expected an integer")))
}

pub(crate) fn as_array<'v>(value: &'v Value, ctx: &str) -> Result<&'v Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| Error::Format(format!("{ctx}: expected an array")))
}

pub(crate) fn as_str<'v>(value: &'v Value, ctx: &str) -> Result<&'v str> {
    value
        .as_str()
        .ok_or_else(|| Error::Format(format!("{ctx}: expected a string")))
}

pub(crate) fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// `"num/den"` in lowest terms with positive denominator.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::Format(format!("rational {s:?} must be \"num/den\"")))?;
    let num = BigInt::from_str(num)
        .map_err(|_| Error::Format(format!("bad numerator in rational {s:?}")))?;
    let den = BigInt::from_str(den)
        .map_err(|_| Error::Format(format!("bad denominator in rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Format(format!("zero denominator in rational {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl CycloNum {
    /// JSON form: an array of p−1 `"num/den"` strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs()
                .iter()
                .map(|c| Value::String(rational_to_string(c)))
                .collect(),
        )
    }

    pub fn from_json(p: u64, value: &Value) -> Result<Self> {
        let items = as_array(value, "cyclotomic number")?;
        let coeffs = items
            .iter()
            .map(|item| rational_from_str(as_str(item, "cyclotomic coefficient")?))
            .collect::<Result<Vec<_>>>()?;
        CycloNum::from_coeffs(p, coeffs)
    }
}

impl EisensteinInt {
    /// JSON form: `{"a": "<decimal>", "b": "<decimal>"}`.
    pub fn to_json(&self) -> Value {
        object(vec![
            ("a", Value::String(self.component_a().to_string())),
            ("b", Value::String(self.component_b().to_string())),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "Eisenstein integer";
        let a = as_str(get(value, "a", ctx)?, ctx)?;
        let b = as_str(get(value, "b", ctx)?, ctx)?;
        let a = BigInt::from_str(a)
            .map_err(|_| Error::Format(format!("{ctx}: bad decimal string {a:?}")))?;
        let b = BigInt::from_str(b)
            .map_err(|_| Error::Format(format!("{ctx}: bad decimal string {b:?}")))?;
        Ok(EisensteinInt::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rational_strings_are_lowest_terms() {
        let r = rational_from_str("4/-6").unwrap();
        assert_eq!(rational_to_string(&r), "-2/3");
        assert_eq!(rational_to_string(&BigRational::one()), "1/1");
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("7").is_err());
    }

    #[test]
    fn cyclo_round_trip() {
        let v = CycloNum::from_coeffs(
            3,
            vec![
                BigRational::one(),
                BigRational::new(BigInt::from(-2), BigInt::from(3)),
            ],
        )
        .unwrap();
        let json = v.to_json();
        assert_eq!(to_canonical_string(&json), "[\"1/1\",\"-2/3\"]\n");
        assert_eq!(CycloNum::from_json(3, &json).unwrap(), v);
    }

    #[test]
    fn cyclo_length_must_match_prime() {
        let json = serde_json::json!(["1/1", "0/1"]);
        assert!(CycloNum::from_json(5, &json).is_err());
    }

    #[test]
    fn eisenstein_round_trip() {
        let v = EisensteinInt::new(-12345678901234567890i128, 7);
        let json = v.to_json();
        assert_eq!(
            to_canonical_string(&json),
            "{\"a\":\"-12345678901234567890\",\"b\":\"7\"}\n"
        );
        assert_eq!(EisensteinInt::from_json(&json).unwrap(), v);
    }
}
