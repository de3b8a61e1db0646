//! Claim reports and their serialized forms.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified claim. `status` is pass iff `computed` equals `expected`
/// exactly; there are no tolerances anywhere.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub paper_ref: String,
    pub elapsed_ms: u64,
    pub notes: String,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// JSON array of report objects, field order fixed by the struct.
pub fn emit_json(reports: &[ClaimReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// JSON with elapsed_ms zeroed, for byte-identical comparisons across runs.
pub fn normalized_json(reports: &[ClaimReport]) -> String {
    let zeroed: Vec<ClaimReport> = reports
        .iter()
        .map(|r| ClaimReport { elapsed_ms: 0, ..r.clone() })
        .collect();
    emit_json(&zeroed)
}

/// Fixed-width text table, one claim per line.
pub fn emit_text(reports: &[ClaimReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<24} {:<7} {:>9}  {}\n",
        "claim", "status", "ms", "computed"
    ));
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        let computed = compact(&r.computed);
        out.push_str(&format!(
            "{:<24} {:<7} {:>9}  {}\n",
            r.id, status, r.elapsed_ms, computed
        ));
    }
    let pass = reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{pass}/{} claims pass\n", reports.len()));
    out
}

fn compact(v: &Value) -> String {
    let s = serde_json::to_string(v).unwrap_or_default();
    if s.len() > 96 {
        format!("{}…", &s[..95])
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_report_list_serializes_to_empty_array() {
        assert_eq!(emit_json(&[]), "[]");
    }

    #[test]
    fn single_entry_has_all_seven_fields() {
        let r = ClaimReport {
            id: "demo".into(),
            status: Status::Pass,
            expected: json!(5),
            computed: json!(5),
            paper_ref: "demo claim".into(),
            elapsed_ms: 3,
            notes: String::new(),
        };
        let v: Value = serde_json::from_str(&emit_json(&[r])).unwrap();
        let obj = v[0].as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(
            keys,
            ["id", "status", "expected", "computed", "paper_ref", "elapsed_ms", "notes"]
        );
    }

    #[test]
    fn normalized_json_zeroes_elapsed_only() {
        let r = ClaimReport {
            id: "demo".into(),
            status: Status::Fail,
            expected: json!({"a": 1}),
            computed: json!({"a": 2}),
            paper_ref: String::new(),
            elapsed_ms: 999,
            notes: "n".into(),
        };
        let n = normalized_json(std::slice::from_ref(&r));
        assert!(n.contains("\"elapsed_ms\": 0"));
        assert!(n.contains("\"a\": 2"));
    }
}
