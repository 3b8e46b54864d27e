//! JSON encodings of the exact types, manifests and reports.
//!
//! Rationals are strings `"num/den"` (or `"num"`), exponents of `t` are
//! strings `"k"` or `"k/2"`, and nothing is ever a float.

pub mod codec;
pub mod manifest;
pub mod report;

pub use codec::{
    decode_frac, decode_graph, decode_poly, decode_tri, encode_frac, encode_graph, encode_poly, encode_tri, FracCode,
    GraphCode, PolyCode, TriCode,
};
pub use manifest::{parse_manifest, ManifestError};
pub use report::{encode_report, report_json, ReportCode};
