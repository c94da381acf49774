use std::time::Duration;

use dbclosure::{diameter, Graph};
use serde::Serialize;
use serde_json::{json, Value};

/// What a command produced: exit status, human-readable text and the JSON
/// payload used for `--json`.
pub struct Outcome {
    pub code: u8,
    pub input: Value,
    pub result: Value,
    pub text: String,
    /// Diagnostic for non-zero, non-error exits (unsupported family, budget).
    pub note: Option<String>,
}

impl Outcome {
    pub fn ok(input: Value, result: Value, text: String) -> Self {
        Outcome { code: 0, input, result, text, note: None }
    }
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: Value,
    input: &'a Value,
    result: &'a Value,
    timing: Timing,
    version: &'static str,
}

pub fn render_json(name: &str, argv: &[String], outcome: &Outcome, elapsed: Duration) -> String {
    let report = RunReport {
        command: json!({ "name": name, "argv": argv }),
        input: &outcome.input,
        result: &outcome.result,
        timing: Timing { elapsed_ms: elapsed.as_secs_f64() * 1e3 },
        version: env!("CARGO_PKG_VERSION"),
    };
    serde_json::to_string_pretty(&report).expect("report is plain data")
}

pub fn graph_summary(path: &std::path::Path, g: &Graph) -> Value {
    json!({
        "path": path.display().to_string(),
        "n": g.n(),
        "edge_count": g.edge_count(),
        "max_degree": g.max_degree(),
        "diameter": diameter(g).ok(),
    })
}

pub fn edge_list(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}
