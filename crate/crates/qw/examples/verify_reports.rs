//! The verification suites behind `qw verify`, run in-process, with their
//! machine-readable reports.
//!
//! Run with `cargo run --example verify_reports`.

use qw::rewrite::RelationMode;
use qw::verify::{run_solve, run_suite, Suite};

fn main() {
    println!("all six suites, central mode, window 2, seed 0:");
    for suite in Suite::ALL {
        let r = run_suite(suite, RelationMode::Central, 2, 0, 40);
        println!(
            "  {:<10} {:>5} checks, {} failures -> {}",
            r.suite,
            r.total,
            r.failures,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }

    println!("\nthe relations suite in strict_paper mode names its counterexample:");
    let strict = run_suite(Suite::Relations, RelationMode::StrictPaper, 2, 0, 0);
    if let Some(first) = strict.first_failure() {
        println!("  first failure: {} at {}", first.check, first.instance);
        if let Some(ce) = &first.counterexample {
            println!("  counterexample: {}", ce);
        }
    }

    println!("\nreports serialize to JSON (schema: schema/report.schema.json):");
    let jacobi = run_suite(Suite::Jacobi, RelationMode::Central, 1, 0, 0);
    let json = serde_json::to_value(&jacobi).expect("reports serialize");
    println!(
        "  suite = {}, total = {}, pass = {}",
        json["suite"], json["total"], json["pass"]
    );

    println!("\nthe cocycle solver report:");
    let solve = run_solve(2);
    println!(
        "  window {}: nullspace dim {}, gauge-fixed dim {}, normalized multiple {:?}, pass = {}",
        solve.window,
        solve.nullspace_dim,
        solve.gauge_fixed_dim,
        solve.normalized_multiple,
        solve.pass
    );
}
