//! Wire forms of `HLPoly`, `OneVarFrac`, `TriVarElem` and `MonGraph`.

use serde::{Deserialize, Serialize};

use crate::algebra::bilaurent::BiLaurent;
use crate::algebra::hlpoly::format_doubled_exponent;
use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::{AlgebraError, HLPoly, OneVarFrac, TriVarElem};
use crate::diagram::{DiagramError, Edge, MonGraph};

/// Exponent of `t`: an integer, or a string `"k"` / `"k/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpCode {
    Int(i64),
    Text(String),
}

/// `[[exponent, coefficient], ...]`.
pub type PolyCode = Vec<(ExpCode, String)>;

/// A polynomial, or `{num, den}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FracCode {
    Poly(PolyCode),
    Frac { num: PolyCode, den: PolyCode },
}

/// `{num: [[i, j, c], ...], den: [[i, j, c], ...]}` for `Σ c x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriCode {
    pub num: Vec<(i64, i64, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<Vec<(i64, i64, String)>>,
}

/// `{vertices, orders, edges: [[tail, head, a, b], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphCode {
    pub vertices: usize,
    pub orders: Vec<[usize; 3]>,
    pub edges: Vec<(usize, usize, i64, u32)>,
}

fn doubled_exponent(e: &ExpCode) -> Result<i64, AlgebraError> {
    let bad = |s: &str| AlgebraError::Parse(format!("not an exponent: {s:?}"));
    match e {
        ExpCode::Int(k) => k.checked_mul(2).ok_or_else(|| bad(&k.to_string())),
        ExpCode::Text(s) => {
            let t = s.trim();
            match t.split_once('/') {
                Some((k, "2")) => k.trim().parse().map_err(|_| bad(s)),
                Some(_) => Err(bad(s)),
                None => t.parse::<i64>().ok().and_then(|k| k.checked_mul(2)).ok_or_else(|| bad(s)),
            }
        }
    }
}

pub fn encode_poly(p: &HLPoly) -> PolyCode {
    p.terms().map(|(k, c)| (ExpCode::Text(format_doubled_exponent(k)), format_rational(c))).collect()
}

pub fn decode_poly(code: &PolyCode) -> Result<HLPoly, AlgebraError> {
    let mut terms = Vec::with_capacity(code.len());
    for (e, c) in code {
        terms.push((doubled_exponent(e)?, parse_rational(c)?));
    }
    Ok(HLPoly::from_doubled_terms(terms))
}

pub fn encode_frac(f: &OneVarFrac) -> FracCode {
    match f.as_poly() {
        Some(p) => FracCode::Poly(encode_poly(p)),
        None => FracCode::Frac { num: encode_poly(f.numer()), den: encode_poly(f.denom()) },
    }
}

pub fn decode_frac(code: &FracCode) -> Result<OneVarFrac, AlgebraError> {
    match code {
        FracCode::Poly(p) => Ok(OneVarFrac::from_poly(decode_poly(p)?)),
        FracCode::Frac { num, den } => OneVarFrac::new(decode_poly(num)?, decode_poly(den)?),
    }
}

fn encode_bilaurent(p: &BiLaurent) -> Vec<(i64, i64, String)> {
    p.terms().map(|((i, j), c)| (i, j, format_rational(c))).collect()
}

fn decode_bilaurent(code: &[(i64, i64, String)]) -> Result<BiLaurent, AlgebraError> {
    let mut terms = Vec::with_capacity(code.len());
    for (i, j, c) in code {
        terms.push(((*i, *j), parse_rational(c)?));
    }
    Ok(BiLaurent::from_terms(terms))
}

/// The denominator is always written, even when it is 1.
pub fn encode_tri(f: &TriVarElem) -> TriCode {
    TriCode { num: encode_bilaurent(f.numer()), den: Some(encode_bilaurent(f.denom())) }
}

pub fn decode_tri(code: &TriCode) -> Result<TriVarElem, AlgebraError> {
    let num = decode_bilaurent(&code.num)?;
    match &code.den {
        Some(d) => TriVarElem::new(num, decode_bilaurent(d)?),
        None => Ok(TriVarElem::from_laurent(num)),
    }
}

pub fn encode_graph(g: &MonGraph) -> GraphCode {
    GraphCode {
        vertices: g.vertex_count(),
        orders: g.orders().to_vec(),
        edges: g.edges().iter().map(|e| (e.tail, e.head, e.a, e.b)).collect(),
    }
}

pub fn decode_graph(code: &GraphCode) -> Result<MonGraph, DiagramError> {
    if code.orders.len() != code.vertices {
        return Err(DiagramError::Malformed(format!(
            "{} orders for {} vertices",
            code.orders.len(),
            code.vertices
        )));
    }
    let edges = code.edges.iter().map(|&(t, h, a, b)| Edge::new(t, h, a, b)).collect();
    MonGraph::new(edges, code.orders.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::algebra::trivar::Var;
    use crate::diagram::theta_shape;

    #[test]
    fn poly_round_trip() {
        let p = HLPoly::from_doubled_terms([(3, rat(-1, 2)), (0, int(7)), (-2, int(1))]);
        let code = encode_poly(&p);
        assert_eq!(serde_json::to_string(&code).unwrap(), r#"[["-1","1"],["0","7"],["3/2","-1/2"]]"#);
        assert_eq!(decode_poly(&code).unwrap(), p);
    }

    #[test]
    fn poly_decoding_variants() {
        let code: PolyCode = serde_json::from_str(r#"[[1, "2"], ["-1/2", "3/4"], ["1", "1"]]"#).unwrap();
        let p = decode_poly(&code).unwrap();
        assert_eq!(p, HLPoly::from_doubled_terms([(2, int(3)), (-1, rat(3, 4))]));
        let bad: PolyCode = serde_json::from_str(r#"[["1/3", "1"]]"#).unwrap();
        assert!(decode_poly(&bad).is_err());
        let bad: PolyCode = serde_json::from_str(r#"[["1", "1/0"]]"#).unwrap();
        assert!(decode_poly(&bad).is_err());
    }

    #[test]
    fn frac_round_trip() {
        let f = OneVarFrac::new(HLPoly::t_pow(1), HLPoly::from_int_terms(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(decode_frac(&encode_frac(&f)).unwrap(), f);
        let g = OneVarFrac::from_poly(HLPoly::t_pow(-2));
        assert!(matches!(encode_frac(&g), FracCode::Poly(_)));
        assert_eq!(decode_frac(&encode_frac(&g)).unwrap(), g);
    }

    #[test]
    fn tri_round_trip() {
        let x = TriVarElem::var(Var::X);
        let f = (&x + &TriVarElem::var(Var::Z)).checked_div(&(&TriVarElem::one() - &x)).unwrap();
        let text = serde_json::to_string(&encode_tri(&f)).unwrap();
        let back: TriCode = serde_json::from_str(&text).unwrap();
        assert_eq!(decode_tri(&back).unwrap(), f);
        let six: TriCode = serde_json::from_str(r#"{"num": [[0, 0, "6"]]}"#).unwrap();
        assert_eq!(decode_tri(&six).unwrap(), TriVarElem::constant(int(6)));
    }

    #[test]
    fn graph_round_trip() {
        let g = theta_shape();
        assert_eq!(decode_graph(&encode_graph(&g)).unwrap(), g);
        let mut bad = encode_graph(&g);
        bad.vertices = 3;
        assert!(decode_graph(&bad).is_err());
    }
}
