//! Browser bindings: a q-binomial table, a Gram block and the braiding of
//! two A1 modules at a rational point.

use mpqg::borel::PairingEngine;
use mpqg::cartan::CartanDatum;
use mpqg::coeff::{qbinom, Assignment, FieldElem, ParamMatrix, Specializer, Var};
use mpqg::repmod::{braiding, highest_weight_module};
use num_rational::BigRational;
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_N: u32 = 12;
const MAX_A1: u32 = 4;

/// Rows `[n,0]_v ... [n,n]_v` for `n = 0..=max`.
pub fn qbinomial_rows(max: u32) -> Result<String, String> {
    if max > MAX_N {
        return Err(format!("n is limited to {MAX_N}"));
    }
    let v = FieldElem::var(Var::V);
    let mut rows = Vec::new();
    for n in 0..=max {
        let row: Vec<String> = (0..=n).map(|k| qbinom(n, k, &v).map(|x| x.to_string())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        rows.push(row);
    }
    Ok(json!({ "rows": rows }).to_string())
}

/// Gram block at `degree` (comma-separated) for a standard type.
pub fn gram_block(ty: &str, degree: &str) -> Result<String, String> {
    let datum = CartanDatum::standard(ty).map_err(|e| e.to_string())?;
    let beta: Vec<i64> = degree
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad degree `{degree}`")))
        .collect::<Result<_, _>>()?;
    if beta.len() != datum.rank() || beta.iter().any(|&b| b < 0) {
        return Err(format!("degree needs {} nonnegative entries", datum.rank()));
    }
    if beta.iter().sum::<i64>() > 4 {
        return Err("height is limited to 4".into());
    }
    let p = ParamMatrix::generic(&datum);
    let mut e = PairingEngine::new(&p);
    let g = e.gram(&beta).map_err(|e| e.to_string())?;
    let word = |w: &Vec<u8>| w.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join("");
    Ok(json!({
        "rows": g.rows.iter().map(word).collect::<Vec<_>>(),
        "cols": g.cols.iter().map(word).collect::<Vec<_>>(),
        "matrix": g.matrix.to_strings(),
        "rank": g.rank,
    })
    .to_string())
}

/// Braiding on `L(m1) ⊗ L(m2)` for A1 with `v = s^2`, `s` a rational
/// such as `3/2`.
pub fn a1_rmatrix(m1: u32, m2: u32, s: &str) -> Result<String, String> {
    if m1 > MAX_A1 || m2 > MAX_A1 {
        return Err(format!("highest weights are limited to 0..={MAX_A1}"));
    }
    let s: BigRational = s.trim().parse().map_err(|_| format!("`{s}` is not a rational"))?;
    if s == BigRational::from_integer(0.into()) {
        return Err("s must be nonzero".into());
    }
    let p = ParamMatrix::generic(&CartanDatum::standard("A1").map_err(|e| e.to_string())?);
    let a = highest_weight_module(&p, &[m1.into()], 2 * MAX_A1 as usize).map_err(|e| e.to_string())?;
    let b = highest_weight_module(&p, &[m2.into()], 2 * MAX_A1 as usize).map_err(|e| e.to_string())?;
    let r = braiding(&a, &b).map_err(|e| e.to_string())?;
    let mut at = Assignment::new();
    at.insert(Var::V, &s * &s);
    let mut sp = Specializer::new(at);
    let mut rows = Vec::new();
    for i in 0..r.rows() {
        let row: Vec<String> = (0..r.cols()).map(|j| sp.eval(r.get(i, j)).map(|x| x.to_string())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        rows.push(row);
    }
    Ok(json!({ "dim": r.rows(), "matrix": rows }).to_string())
}

#[wasm_bindgen(js_name = qbinomialTable)]
pub fn qbinomial_table(max: u32) -> Result<String, JsError> {
    qbinomial_rows(max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = gramBlock)]
pub fn gram_block_js(ty: &str, degree: &str) -> Result<String, JsError> {
    gram_block(ty, degree).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = a1RMatrix)]
pub fn a1_rmatrix_js(m1: u32, m2: u32, s: &str) -> Result<String, JsError> {
    a1_rmatrix(m1, m2, s).map_err(|e| JsError::new(&e))
}
