//! The expression language: parse, evaluate exactly, and render as text,
//! JSON, or LaTeX. Canonical text parses back to the same value.
//!
//! Run with `cargo run --example parse_eval`.

use qw::rewrite::RelationMode;
use qw::textio::{evaluate, parse, render, OutputFormat, Value};

fn main() {
    let central = RelationMode::Central;
    let inputs = [
        "[L(1),L(-1)]_q",
        "[L(2),W(-2)]_q",
        "q^2*L(3)*W(-1) + C",
        "S(L(1))",
        "Delta(W(2))",
        "eps(T^-1)",
        "(q+1)/q * L(0)",
        "L(1)*L(2) - L(2)*L(1)",
    ];

    for input in inputs {
        let ast = parse(input).expect("well-formed input");
        let value = evaluate(&ast, central).expect("evaluates");
        println!("input:  {}", input);
        println!("  text:  {}", render(&value, OutputFormat::Text));
        println!("  latex: {}", render(&value, OutputFormat::Latex));
        println!("  json:  {}", render(&value, OutputFormat::Json));

        // canonical text is a fixed point of parse . evaluate . render
        if let Value::Element(e) = &value {
            let text = render(&value, OutputFormat::Text);
            let again = evaluate(&parse(&text).expect("canonical text parses"), central)
                .expect("canonical text evaluates");
            match again {
                Value::Element(back) => assert_eq!(&back, e),
                Value::Scalar(s) => assert!(e.num_terms() <= 1 && !s.is_zero()),
                Value::Tensor(_) => unreachable!("elements never round trip to tensors"),
            }
        }
        println!();
    }

    println!("error reporting carries positions:");
    for bad in ["(", "L(1)/L(1)", "Delta(Delta(C))"] {
        let outcome = match parse(bad) {
            Err(e) => format!("syntax error: {}", e),
            Ok(ast) => match evaluate(&ast, central) {
                Err(e) => format!("evaluation error: {}", e),
                Ok(v) => format!("unexpectedly fine: {}", render(&v, OutputFormat::Text)),
            },
        };
        println!("  {:<18} -> {}", bad, outcome);
    }
}
