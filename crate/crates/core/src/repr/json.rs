use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::json::{scalar_from_json, scalar_to_json};
use crate::scalars::RatFn;
use crate::tableaux::{BPartition, BTableau};

use super::HModule;

pub fn matrix_to_json(m: &Matrix<RatFn>, b: u32) -> Result<Value> {
    let rows = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| scalar_to_json(x, b))
                .collect::<Result<Vec<_>>>()
                .map(Value::Array)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Value::Array(rows))
}

pub fn matrix_from_json(v: &Value, b: u32) -> Result<Matrix<RatFn>> {
    let bad = || Error::ParseError {
        pos: 0,
        msg: "matrix must be a list of rows".into(),
    };
    let rows = v
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| scalar_from_json(x, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// `{"lambda", "basis", "generators": {"T1": …, "R1": …}}` for the named
/// generators (all T_j and R_i when `names` is empty).
pub fn module_to_json(v: &HModule<RatFn>, names: &[String]) -> Result<Value> {
    let all: Vec<String> = if names.is_empty() {
        (1..=v.n())
            .map(|j| format!("T{j}"))
            .chain((1..v.n()).map(|i| format!("R{i}")))
            .collect()
    } else {
        names.to_vec()
    };
    let mut gens = Map::new();
    for name in &all {
        gens.insert(
            name.clone(),
            matrix_to_json(&v.generator_matrix(name)?, v.b())?,
        );
    }
    Ok(json!({
        "lambda": v.lambda().to_json(),
        "basis": v.basis().iter().map(|t| t.to_json()).collect::<Vec<_>>(),
        "generators": Value::Object(gens),
    }))
}

/// Inverse of [`module_to_json`].
#[allow(clippy::type_complexity)]
pub fn module_from_json(
    v: &Value,
) -> Result<(BPartition, Vec<BTableau>, BTreeMap<String, Matrix<RatFn>>)> {
    let missing = |k: &str| Error::ParseError {
        pos: 0,
        msg: format!("missing field {k:?}"),
    };
    let lambda = BPartition::parse(
        &v.get("lambda")
            .ok_or_else(|| missing("lambda"))?
            .to_string(),
    )?;
    let b = lambda.b() as u32;
    let basis = v
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| missing("basis"))?
        .iter()
        .map(|t| BTableau::parse(&t.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let gens = v
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| missing("generators"))?
        .iter()
        .map(|(k, m)| Ok((k.clone(), matrix_from_json(m, b)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok((lambda, basis, gens))
}
