//! `{"num": [term…], "den": [term…]}` with `term = {"c": […], "q": int, "t": int}`.

use serde_json::{json, Value};

use super::cyclotomic::CycElem;
use super::poly::{Mono, Poly};
use super::ratfn::RatFn;
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::ParseError {
        pos: 0,
        msg: msg.into(),
    }
}

fn poly_to_json(p: &Poly, b: u32) -> Result<Value> {
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        if !b.is_multiple_of(c.conductor()) {
            return Err(Error::InvalidParameters(format!(
                "coefficient of conductor {} does not live in Q(ζ_{b})",
                c.conductor()
            )));
        }
        let coords: Vec<String> = c.coords(b).iter().map(format_rational).collect();
        terms.push(json!({"c": coords, "q": m.q, "t": m.t}));
    }
    Ok(Value::Array(terms))
}

fn poly_from_json(v: &Value, b: u32) -> Result<Poly> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("term list must be an array"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for term in arr {
        let coords = term["c"]
            .as_array()
            .ok_or_else(|| bad("term needs a coordinate list \"c\""))?
            .iter()
            .map(|s| {
                parse_rational(
                    s.as_str()
                        .ok_or_else(|| bad("coordinate must be a string"))?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let exp = |k: &str| -> Result<u32> {
            term[k]
                .as_u64()
                .map(|e| e as u32)
                .ok_or_else(|| bad(format!("term needs a non-negative integer \"{k}\"")))
        };
        terms.push((
            Mono::new(exp("q")?, exp("t")?),
            CycElem::from_coords(b, coords)?,
        ));
    }
    Ok(Poly::from_terms(terms))
}

/// Encodes a scalar with coefficients written in the power basis of Q(ζ_b).
pub fn scalar_to_json(r: &RatFn, b: u32) -> Result<Value> {
    Ok(json!({"num": poly_to_json(r.num(), b)?, "den": poly_to_json(r.den(), b)?}))
}

pub fn scalar_from_json(v: &Value, b: u32) -> Result<RatFn> {
    let num = poly_from_json(&v["num"], b)?;
    let den = poly_from_json(&v["den"], b)?;
    RatFn::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::constants::derived_constants;

    #[test]
    fn encodes_the_documented_layout() {
        let c = derived_constants(2);
        let v = scalar_to_json(&c.a, 2).unwrap();
        assert_eq!(
            v,
            json!({
                "num": [{"c": ["1/2"], "q": 0, "t": 2}, {"c": ["-1/2"], "q": 1, "t": 0}],
                "den": [{"c": ["1/1"], "q": 0, "t": 1}]
            })
        );
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains("\"1/2\""));
        let back = scalar_from_json(&v, 2).unwrap();
        assert_eq!(back, c.a);
        assert_eq!(
            serde_json::to_string(&scalar_to_json(&back, 2).unwrap()).unwrap(),
            text
        );
    }

    #[test]
    fn cyclotomic_coefficients_roundtrip() {
        let z = CycElem::zeta(3);
        let r = RatFn::q()
            .scale(&z)
            .add(&RatFn::one())
            .div(&RatFn::t())
            .unwrap();
        let v = scalar_to_json(&r, 3).unwrap();
        assert_eq!(v["num"][0]["c"], json!(["0/1", "1/1"]));
        assert_eq!(scalar_from_json(&v, 3).unwrap(), r);
        assert!(scalar_to_json(&r, 2).is_err());
    }
}
