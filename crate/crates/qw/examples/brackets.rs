//! Tour of the bracket tables: q-integers, the deformed structure constants,
//! antisymmetry, and the twisted Jacobi identity.
//!
//! Run with `cargo run --example brackets`.

use qw::algebra::{bracket_table, check_antisymmetry, check_q_jacobi, LieGenerator};
use qw::scalars::{central_coeff, q_integer};

fn main() {
    use LieGenerator::{L, W};

    println!("q-integers [n] = (q^n - 1)/(q - 1):");
    for n in -3..=3 {
        println!("  [{:>2}] = {}", n, q_integer(n));
    }

    println!("\ncentral coefficient phi(m) (zero exactly on -1, 0, 1):");
    for m in -3..=3 {
        println!("  phi({:>2}) = {}", m, central_coeff(m));
    }

    println!("\nbracket tables:");
    for (x, y) in [(L(2), L(-1)), (L(1), L(-1)), (L(2), W(-2)), (W(1), W(2))] {
        println!("  [{}, {}]_q = {}", x, y, bracket_table(x, y));
    }
    println!("  [{}, {}]_q = {}", L(0), LieGenerator::C, bracket_table(L(0), LieGenerator::C));

    println!("\nq-antisymmetry q^n [x_m, y_n]_q = -q^m [y_n, x_m]_q on [-4, 4]^2:");
    let mut pairs = 0;
    for m in -4..=4 {
        for n in -4..=4 {
            assert!(check_antisymmetry(L(m), L(n)));
            assert!(check_antisymmetry(L(m), W(n)));
            assert!(check_antisymmetry(W(m), W(n)));
            pairs += 3;
        }
    }
    println!("  verified on {} pairs", pairs);

    println!("\ntwisted Jacobi with f_q(X_m) = (q^m + 1) X_m on [-3, 3]^3:");
    let mut triples = 0;
    for i in -3..=3 {
        for j in -3..=3 {
            for k in -3..=3 {
                assert!(check_q_jacobi(L(i), L(j), L(k)));
                assert!(check_q_jacobi(L(i), L(j), W(k)));
                triples += 2;
            }
        }
    }
    println!("  verified on {} triples", triples);
}
