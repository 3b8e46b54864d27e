//! Running a manifest of moves and printing the JSON report.
//!
//! ```text
//! cargo run --example pipeline_manifest [path/to/manifest.json]
//! ```

use eqcube::io::{parse_manifest, report_json};
use eqcube::surgery::{run_pipeline, CoefficientWindow, ReductionRequest};

const DEFAULT: &str = include_str!("../manifests/trefoil_moves.json");

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable manifest"),
        None => DEFAULT.to_string(),
    };
    let mut manifest = match parse_manifest(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{} ({})", e, e.code());
            std::process::exit(2);
        }
    };
    manifest.reduction = Some(ReductionRequest { k_max: 4, window: CoefficientWindow::default() });
    match run_pipeline(&manifest) {
        Ok(report) => {
            for m in &report.moves {
                let v = m.delta_at_one.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "-".into());
                eprintln!("move {} {:<14} delta(1,1,1) = {v}", m.index, m.kind);
            }
            print!("{}", report_json(&report, manifest.reduction.as_ref()));
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
