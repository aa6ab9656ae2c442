//! The Hopf structure: coproduct, counit, antipode, the axiom checks, and
//! compatibility with the defining relations.
//!
//! Run with `cargo run --example hopf_maps`.

use qw::algebra::{AlgebraElement, GeneratorSymbol};
use qw::hopf::{
    antipode, check_antipode_axiom, check_coassociativity, check_cocommutativity,
    check_counit_axiom, check_delta_respects_relations, coproduct, counit, tensor_arithmetic,
    RelationPair, TensorOp,
};
use qw::rewrite::{multiply, RelationMode};

fn gen(g: GeneratorSymbol) -> AlgebraElement {
    AlgebraElement::generator(g)
}

fn main() {
    use GeneratorSymbol::{C, L, W, T};
    let central = RelationMode::Central;

    println!("generator images:");
    for g in [L(3), W(-1), C, T] {
        println!("  Delta({}) = {}", g, coproduct(&gen(g), central));
    }
    for g in [L(1), W(2), C, T] {
        println!("  S({}) = {}", g, antipode(&gen(g), central));
        println!("  eps({}) = {}", g, counit(&gen(g)));
    }

    println!("\nDelta is an algebra map: Delta(x y) = Delta(x) Delta(y):");
    let x = gen(W(1));
    let y = gen(L(1));
    let product = multiply(&x, &y, central);
    let lhs = coproduct(&product, central);
    let rhs = tensor_arithmetic(
        &coproduct(&x, central),
        &coproduct(&y, central),
        TensorOp::Mul,
        central,
    );
    println!("  Delta(W(1)*L(1)) = {}", lhs);
    println!("  equal slotwise:    {}", lhs == rhs);

    println!("\nantipode of a product reverses factors: S(L(1)W(2)):");
    println!(
        "  {}",
        antipode(&multiply(&gen(L(1)), &gen(W(2)), central), central)
    );

    println!("\naxioms on a straightened product x = L(2)*L(-2)*T:");
    let w = multiply(&multiply(&gen(L(2)), &gen(L(-2)), central), &gen(T), central);
    println!("  coassociativity: {}", check_coassociativity(&w, central));
    println!("  counit axiom:    {}", check_counit_axiom(&w, central));
    println!("  antipode axiom:  {}", check_antipode_axiom(&w, central));
    println!("  cocommutative:   {}", check_cocommutativity(&w, central));

    println!("\ncoproduct respects the defining relations (central mode):");
    for pair in RelationPair::ALL {
        let ok = (-3..=3).all(|m| {
            (-3..=3).all(|n| check_delta_respects_relations(m, n, pair, central))
        });
        println!("  {}: {}", pair, ok);
    }

    println!("\n... but the strict C-T relation leaks through Delta:");
    let strict = RelationMode::StrictPaper;
    for m in [0, 1, 2] {
        println!(
            "  CL compatible at m = {}: {}",
            m,
            check_delta_respects_relations(m, 0, RelationPair::CL, strict)
        );
    }
}
