//! Report documents written by `compute`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::alexander::AlexanderPair;
use crate::algebra::rational::format_rational;
use crate::surgery::{check_symmetry, ReductionRequest, Report};

use super::codec::{decode_tri, encode_poly, encode_tri, PolyCode, TriCode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCode {
    #[serde(rename = "Delta")]
    pub delta_big: PolyCode,
    pub delta: PolyCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCode {
    pub index: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub delta: TriCode,
    pub eval_111: Option<String>,
    pub pair_after: PairCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCode {
    pub k_max: u32,
    pub window: [i64; 2],
    pub rank: usize,
    pub representative: TriCode,
    pub coordinates: Vec<String>,
    pub reduces_to_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksCode {
    pub symmetry: bool,
    pub round_trip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCode {
    #[serde(rename = "Q")]
    pub q: TriCode,
    pub eval_111: Option<String>,
    pub pair: PairCode,
    pub moves: Vec<MoveCode>,
    pub reduction: Option<ReductionCode>,
    pub checks: ChecksCode,
    pub notes: Vec<String>,
}

fn encode_pair(p: &AlexanderPair) -> PairCode {
    PairCode { delta_big: encode_poly(p.Delta()), delta: encode_poly(p.delta()) }
}

pub fn encode_report(report: &Report, request: Option<&ReductionRequest>) -> ReportCode {
    let q = encode_tri(&report.q);
    let round_trip = decode_tri(&q).map(|back| back == report.q).unwrap_or(false);
    let moves = report
        .moves
        .iter()
        .map(|m| MoveCode {
            index: m.index,
            kind: m.kind.to_string(),
            delta: encode_tri(&m.delta),
            eval_111: m.delta_at_one.as_ref().map(format_rational),
            pair_after: encode_pair(&m.pair_after),
        })
        .collect();
    let reduction = match (&report.reduction, request) {
        (Some(r), Some(req)) => Some(ReductionCode {
            k_max: req.k_max,
            window: [req.window.min, req.window.max],
            rank: r.rank,
            representative: encode_tri(&r.representative),
            coordinates: r.coordinates.iter().map(format_rational).collect(),
            reduces_to_zero: r.is_zero(),
        }),
        _ => None,
    };
    ReportCode {
        q,
        eval_111: report.q_at_one.as_ref().map(format_rational),
        pair: encode_pair(&report.pair),
        moves,
        reduction,
        checks: ChecksCode { symmetry: check_symmetry(&report.q), round_trip },
        notes: report.notes.clone(),
    }
}

/// Report text: one key per line, scalar-only arrays (polynomial terms)
/// kept on one line, trailing newline.
pub fn report_json(report: &Report, request: Option<&ReductionRequest>) -> String {
    let value = serde_json::to_value(encode_report(report, request)).expect("report serializes");
    let mut s = String::new();
    write_value(&value, 0, &mut s);
    s.push('\n');
    s
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Indented JSON where arrays of scalars stay on a single line.
pub fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        _ if is_flat(v) => out.push_str(&serde_json::to_string(v).expect("serializes")),
        Value::Array(items) if items.iter().all(is_flat) && items.len() <= 1 => {
            out.push_str(&serde_json::to_string(v).expect("serializes"))
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("serializes"));
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::surgery::{run_pipeline, Manifest, Move};

    #[test]
    fn connected_sum_report() {
        let m = Manifest { initial: None, moves: vec![Move::ConnectedSum { lambda: rat(1, 1) }], reduction: None };
        let r = run_pipeline(&m).unwrap();
        let code = encode_report(&r, None);
        assert_eq!(code.eval_111.as_deref(), Some("6"));
        assert_eq!(code.q.num, vec![(0, 0, "6".to_string())]);
        assert!(code.checks.symmetry && code.checks.round_trip);
        let text = report_json(&r, None);
        let back: ReportCode = serde_json::from_str(&text).unwrap();
        assert_eq!(back, code);
        assert_eq!(decode_tri(&back.q).unwrap(), r.q);
    }
}
