//! Normal ordering in the enveloping algebra: straightening words into the
//! T-power, C-power, sorted-L, sorted-W basis, the deformed structure
//! constants behind it, and what the strict C-T relation breaks.
//!
//! Run with `cargo run --example normal_ordering`.

use qw::algebra::{AlgebraElement, GeneratorSymbol, LieGenerator};
use qw::rewrite::{
    multiply, normal_form, normal_form_stats, q_bracket_realized, structure_central_coeff,
    structure_coeff, RawWord, RelationMode,
};

fn gen(g: GeneratorSymbol) -> AlgebraElement {
    AlgebraElement::generator(g)
}

fn main() {
    use GeneratorSymbol::{L, W, T};
    let central = RelationMode::Central;

    println!("straightening structure constants B(m, n) = (m - n) q^(-mn):");
    for (m, n) in [(1, 0), (1, -1), (2, -2), (3, 1)] {
        println!("  B({:>2}, {:>2}) = {}", m, n, structure_coeff(m, n));
    }
    println!("central correction Z(m) = q^(m^2) (m^3 - m)/12:");
    for m in [1, 2, 3] {
        println!("  Z({}) = {}", m, structure_central_coeff(m));
    }

    println!("\nproducts (letters sort, corrections appear):");
    for word in [
        vec![L(1), L(0)],
        vec![L(2), L(-2)],
        vec![W(-2), L(2)],
        vec![L(2), T],
        vec![T, L(2)],
    ] {
        let raw = RawWord(word.clone());
        let (nf, steps) = normal_form_stats(&raw, central);
        println!("  {} -> {}   ({} rewrite steps)", raw, nf, steps);
    }

    println!("\nnoncommutativity: the plain commutator realizes B and Z:");
    let l1l2 = multiply(&gen(L(1)), &gen(L(2)), central);
    let l2l1 = multiply(&gen(L(2)), &gen(L(1)), central);
    println!("  L(1)*L(2) = {}", l1l2);
    println!("  L(2)*L(1) = {}", l2l1);
    println!("  difference = {}", &l1l2 - &l2l1);

    println!("\nweighted q-bracket in the enveloping algebra:");
    let lm = AlgebraElement::lie_generator(LieGenerator::L(1));
    let ln = AlgebraElement::lie_generator(LieGenerator::L(-1));
    println!(
        "  q^1 L(1)*L(-1) - q^-1 L(-1)*L(1) = {}",
        q_bracket_realized(&lm, &ln, 1, -1, central)
    );

    println!("\nmodes differ only on C crossing T:");
    let ct = RawWord(vec![GeneratorSymbol::C, T]);
    println!("  central:      C*T -> {}", normal_form(&ct, central));
    println!(
        "  strict_paper: C*T -> {}",
        normal_form(&ct, RelationMode::StrictPaper)
    );

    println!("\nstrict mode loses associativity once a central term crosses T:");
    let a = multiply(&gen(L(2)), &gen(L(-2)), RelationMode::StrictPaper);
    let left = multiply(&a, &gen(T), RelationMode::StrictPaper);
    let b = multiply(&gen(L(-2)), &gen(T), RelationMode::StrictPaper);
    let right = multiply(&gen(L(2)), &b, RelationMode::StrictPaper);
    println!("  (L(2)*L(-2))*T = {}", left);
    println!("  L(2)*(L(-2)*T) = {}", right);
    println!("  equal: {}", left == right);
}
