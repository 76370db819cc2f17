//! Structured per-instance verification results and their two sink
//! formats, JSON Lines and CSV.

use serde::Serialize;
use serde_json::Value;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// One verified claim instance. `expected` is the closed form or printed
/// fixture, `engine` the generic computation, `oracle` the brute-force
/// scan; any of them may be absent. The verdict is pass exactly when all
/// channels that are present agree.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: Vec<(String, i64)>,
    pub expected: Option<Value>,
    pub engine: Option<Value>,
    pub oracle: Option<Value>,
    pub verdict: Verdict,
    pub ms: u64,
}

impl ClaimReport {
    /// "n=2;j=3" style key=value rendering of the parameters.
    pub fn params_compact(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Equality that ignores the timing field.
    pub fn same_data(&self, other: &Self) -> bool {
        self.claim_id == other.claim_id
            && self.params == other.params
            && self.expected == other.expected
            && self.engine == other.engine
            && self.oracle == other.oracle
            && self.verdict == other.verdict
    }

    /// One JSON object, keys in a fixed order:
    /// claim_id, params, expected, engine, oracle, verdict, ms.
    pub fn to_jsonl(&self) -> String {
        let mut line = String::from("{");
        line.push_str(&format!(
            "\"claim_id\":{},",
            serde_json::to_string(&self.claim_id).unwrap()
        ));
        line.push_str("\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&format!("\"{k}\":{v}"));
        }
        line.push_str("},");
        for (key, value) in [
            ("expected", &self.expected),
            ("engine", &self.engine),
            ("oracle", &self.oracle),
        ] {
            let rendered = match value {
                Some(v) => serde_json::to_string(v).unwrap(),
                None => "null".to_string(),
            };
            line.push_str(&format!("\"{key}\":{rendered},"));
        }
        line.push_str(&format!(
            "\"verdict\":\"{}\",\"ms\":{}}}",
            self.verdict.as_str(),
            self.ms
        ));
        line
    }
}

pub const CSV_HEADER: &str = "claim_id,params,expected,engine,oracle,verdict,ms";

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_value(value: &Option<Value>) -> String {
    match value {
        Some(v) => csv_escape(&serde_json::to_string(v).unwrap()),
        None => String::new(),
    }
}

pub fn write_jsonl<W: Write>(reports: &[ClaimReport], w: &mut W) -> io::Result<()> {
    for r in reports {
        writeln!(w, "{}", r.to_jsonl())?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(reports: &[ClaimReport], w: &mut W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            csv_escape(&r.claim_id),
            csv_escape(&r.params_compact()),
            csv_value(&r.expected),
            csv_value(&r.engine),
            csv_value(&r.oracle),
            r.verdict.as_str(),
            r.ms
        )?;
    }
    Ok(())
}
