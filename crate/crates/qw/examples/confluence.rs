//! The associativity probe: seeded random triples of words multiplied in both
//! groupings. Central mode is clean; the strict C-T relation is not.
//!
//! Run with `cargo run --example confluence`.

use qw::rewrite::{confluence_probe, RelationMode};

fn main() {
    for mode in [RelationMode::Central, RelationMode::StrictPaper] {
        let report = confluence_probe(500, 3, 3, 42, mode);
        println!(
            "mode {}: {} samples (index bound {}, length <= {}), {} failures",
            mode, report.samples, report.index_bound, report.max_len, report.failures
        );
        if let Some(ce) = &report.first_counterexample {
            println!("  first counterexample:");
            println!("    u = {}", ce.u);
            println!("    v = {}", ce.v);
            println!("    w = {}", ce.w);
            println!("    (u v) w = {}", ce.left);
            println!("    u (v w) = {}", ce.right);
        }
    }

    println!();
    println!("determinism: the same seed replays the same verdict:");
    let a = confluence_probe(200, 3, 3, 7, RelationMode::Central);
    let b = confluence_probe(200, 3, 3, 7, RelationMode::Central);
    println!("  failures {} == {}", a.failures, b.failures);
}
