//! Manifest documents:
//!
//! ```json
//! {
//!   "initial": {"Delta": [...], "delta": [...], "Q": {"num": [...], "den": [...]}},
//!   "moves": [
//!     {"type": "surgery", "g": 1, "Laa": [[...]], "Lab": [[...]], "Lba": [[...]], "Lbb": [[...]],
//!      "p": 1, "q": 1, "Delta_after": [...], "delta_after": [...]},
//!     {"type": "connected_sum", "lambda": "1/2"},
//!     {"type": "framing", "n": 1},
//!     {"type": "knot_change", "V": [...]}
//!   ]
//! }
//! ```
//!
//! `initial` and its `Q` are optional. A surgery move may carry
//! `"b_plus_a": [...]`, one entry per `i`, overriding `lk_e(b_i^+, a_i)`.

use serde::Deserialize;

use crate::alexander::{AlexanderError, AlexanderPair};
use crate::algebra::rational::parse_rational;
use crate::algebra::{AlgebraError, OneVarFrac, TriVarElem};
use crate::casson::{CassonError, SurgeryCoefficient};
use crate::surgery::{Manifest, Move, SurgeryDatum, SurgeryError};

use super::codec::{decode_frac, decode_poly, decode_tri, FracCode, PolyCode, TriCode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifestError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("manifest does not match the schema at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("{context}: {source}")]
    Encoding { context: String, source: AlgebraError },
    #[error("{context}: {message}")]
    Domain { context: String, message: String },
}

impl ManifestError {
    pub fn code(&self) -> &'static str {
        match self {
            ManifestError::Syntax { .. } => "json_syntax",
            ManifestError::Schema { .. } => "schema",
            ManifestError::Encoding { .. } => "encoding",
            ManifestError::Domain { .. } => "invalid_manifest",
        }
    }

    /// Errors in the text itself, as opposed to well-formed but
    /// mathematically invalid data.
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, ManifestError::Domain { .. })
    }

    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            ManifestError::Syntax { line, column, .. } | ManifestError::Schema { line, column, .. } => {
                Some((*line, *column))
            }
            _ => None,
        }
    }

    fn from_json(e: serde_json::Error) -> Self {
        let (line, column, message) = (e.line(), e.column(), e.to_string());
        match e.classify() {
            serde_json::error::Category::Data => ManifestError::Schema { line, column, message },
            _ => ManifestError::Syntax { line, column, message },
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    #[serde(default)]
    initial: Option<RawInitial>,
    #[serde(default)]
    moves: Vec<RawMove>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInitial {
    #[serde(rename = "Delta")]
    delta_big: PolyCode,
    delta: PolyCode,
    #[serde(rename = "Q", default)]
    q: Option<TriCode>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawMove {
    Surgery {
        g: usize,
        #[serde(rename = "Laa")]
        laa: Vec<Vec<FracCode>>,
        #[serde(rename = "Lab")]
        lab: Vec<Vec<FracCode>>,
        #[serde(rename = "Lba")]
        lba: Vec<Vec<FracCode>>,
        #[serde(rename = "Lbb")]
        lbb: Vec<Vec<FracCode>>,
        p: i64,
        q: i64,
        #[serde(rename = "Delta_after")]
        delta_big_after: PolyCode,
        delta_after: PolyCode,
        #[serde(default)]
        b_plus_a: Option<Vec<FracCode>>,
    },
    ConnectedSum {
        lambda: String,
    },
    Framing {
        n: i64,
    },
    KnotChange {
        #[serde(rename = "V")]
        v: PolyCode,
    },
}

struct Ctx(String);

impl Ctx {
    fn enc<T>(&self, r: Result<T, AlgebraError>) -> Result<T, ManifestError> {
        r.map_err(|source| ManifestError::Encoding { context: self.0.clone(), source })
    }

    fn dom<T, E: std::fmt::Display>(&self, r: Result<T, E>) -> Result<T, ManifestError> {
        r.map_err(|e| ManifestError::Domain { context: self.0.clone(), message: e.to_string() })
    }

    fn pair(&self, big: &PolyCode, small: &PolyCode) -> Result<AlexanderPair, ManifestError> {
        let big = self.enc(decode_poly(big))?;
        let small = self.enc(decode_poly(small))?;
        self.dom::<_, AlexanderError>(AlexanderPair::new(big, small))
    }

    fn matrix(&self, m: &[Vec<FracCode>]) -> Result<Vec<Vec<OneVarFrac>>, ManifestError> {
        m.iter().map(|row| row.iter().map(|c| self.enc(decode_frac(c))).collect()).collect()
    }
}

pub fn parse_manifest(text: &str) -> Result<Manifest, ManifestError> {
    let raw: RawManifest = serde_json::from_str(text).map_err(ManifestError::from_json)?;
    let initial = match &raw.initial {
        Some(init) => {
            let ctx = Ctx("initial".into());
            let pair = ctx.pair(&init.delta_big, &init.delta)?;
            let q = match &init.q {
                Some(code) => ctx.enc(decode_tri(code))?,
                None => TriVarElem::zero(),
            };
            Some((pair, q))
        }
        None => None,
    };
    let mut moves = Vec::with_capacity(raw.moves.len());
    for (i, m) in raw.moves.iter().enumerate() {
        let ctx = Ctx(format!("move {i}"));
        let mv = match m {
            RawMove::Surgery { g, laa, lab, lba, lbb, p, q, delta_big_after, delta_after, b_plus_a } => {
                let coefficient = ctx.dom::<_, CassonError>(SurgeryCoefficient::new(*p, *q))?;
                let mut datum = ctx.dom::<_, SurgeryError>(SurgeryDatum::new(
                    ctx.matrix(laa)?,
                    ctx.matrix(lab)?,
                    ctx.matrix(lba)?,
                    ctx.matrix(lbb)?,
                    coefficient,
                ))?;
                if datum.genus() != *g {
                    return Err(ManifestError::Domain {
                        context: ctx.0,
                        message: format!("g = {g} but the matrices are {0}x{0}", datum.genus()),
                    });
                }
                if let Some(o) = b_plus_a {
                    let o: Vec<OneVarFrac> = o.iter().map(|c| ctx.enc(decode_frac(c))).collect::<Result<_, _>>()?;
                    datum = ctx.dom(datum.with_override(o))?;
                }
                Move::Surgery { datum, after: ctx.pair(delta_big_after, delta_after)? }
            }
            RawMove::ConnectedSum { lambda } => Move::ConnectedSum { lambda: ctx.enc(parse_rational(lambda))? },
            RawMove::Framing { n } => Move::Framing { n: *n },
            RawMove::KnotChange { v } => Move::KnotChange { v: ctx.enc(decode_poly(v))? },
        };
        moves.push(mv);
    }
    Ok(Manifest { initial, moves, reduction: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn empty_manifests() {
        assert_eq!(parse_manifest("{}").unwrap().moves.len(), 0);
        let m = parse_manifest(r#"{"moves": []}"#).unwrap();
        assert!(m.initial.is_none());
    }

    #[test]
    fn all_move_types() {
        let text = r#"{
            "initial": {"Delta": [["1","1"],["0","-1"],["-1","1"]], "delta": [["1","1"],["0","-1"],["-1","1"]]},
            "moves": [
                {"type": "framing", "n": -2},
                {"type": "knot_change", "V": [["1","1"],["-1","-1"]]},
                {"type": "connected_sum", "lambda": "-1/3"},
                {"type": "surgery", "g": 1, "Laa": [[[["0","-1"]]]], "Lab": [[[["0","1"]]]],
                 "Lba": [[[]]], "Lbb": [[[["0","-1"]]]], "p": 5, "q": 2,
                 "Delta_after": [["0","1"]], "delta_after": [["0","1"]]}
            ]
        }"#;
        let m = parse_manifest(text).unwrap();
        assert_eq!(m.moves.len(), 4);
        assert_eq!(m.moves[2], Move::ConnectedSum { lambda: rat(-1, 3) });
        match &m.moves[3] {
            Move::Surgery { datum, after } => {
                assert_eq!(datum.genus(), 1);
                assert!(after.is_trivial());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        let e = parse_manifest("{\n  \"moves\": [,]\n}").unwrap_err();
        assert_eq!(e.code(), "json_syntax");
        assert_eq!(e.position().map(|p| p.0), Some(2));
        assert!(e.is_parse_error());
    }

    #[test]
    fn schema_and_domain_errors() {
        let e = parse_manifest(r#"{"moves": [{"type": "twist"}]}"#).unwrap_err();
        assert_eq!(e.code(), "schema");
        let e = parse_manifest(r#"{"moves": [{"type": "connected_sum", "lambda": "1/0"}]}"#).unwrap_err();
        assert_eq!(e.code(), "encoding");
        let text = r#"{"moves": [{"type": "surgery", "g": 0, "Laa": [], "Lab": [], "Lba": [], "Lbb": [],
            "p": 4, "q": 2, "Delta_after": [["0","1"]], "delta_after": [["0","1"]]}]}"#;
        let e = parse_manifest(text).unwrap_err();
        assert_eq!(e.code(), "invalid_manifest");
        assert!(!e.is_parse_error());
        let e = parse_manifest(r#"{"initial": {"Delta": [["1","1"]], "delta": [["0","1"]]}}"#).unwrap_err();
        assert_eq!(e.code(), "invalid_manifest");
    }
}
