//! The shipped report schema accepts every JSON report the tool can emit.

use qw::rewrite::RelationMode;
use qw::verify::{run_solve, run_suite, Suite};

fn schema() -> serde_json::Value {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schema/report.schema.json"
    );
    let text = std::fs::read_to_string(path).expect("schema file is shipped in-repo");
    serde_json::from_str(&text).expect("schema file is valid JSON")
}

fn assert_valid(validator: &jsonschema::Validator, report: &impl serde::Serialize, label: &str) {
    let value = serde_json::to_value(report).expect("report serializes");
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{}: {:?}", label, errors);
}

#[test]
fn suite_reports_validate_against_shipped_schema() {
    let validator = jsonschema::validator_for(&schema()).expect("schema compiles");
    for suite in Suite::ALL {
        for mode in [RelationMode::Central, RelationMode::StrictPaper] {
            let report = run_suite(suite, mode, 2, 7, 20);
            assert_valid(&validator, &report, &format!("{} ({})", suite, mode));
        }
    }
}

#[test]
fn solve_reports_validate_against_shipped_schema() {
    let validator = jsonschema::validator_for(&schema()).expect("schema compiles");
    for window in [2, 3] {
        let report = run_solve(window);
        assert_valid(&validator, &report, &format!("solve window {}", window));
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let validator = jsonschema::validator_for(&schema()).expect("schema compiles");
    let bad = serde_json::json!({ "suite": "jacobi", "pass": "yes" });
    assert!(!validator.is_valid(&bad));
    let wrong_enum = serde_json::json!({
        "suite": "nonsense", "mode": "central", "window": 1, "seed": 0,
        "samples": 0, "total": 0, "failures": 0, "pass": true, "records": []
    });
    assert!(!validator.is_valid(&wrong_enum));
}
