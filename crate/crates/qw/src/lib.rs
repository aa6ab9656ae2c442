//! Exact kernel for a q-deformed W(2,2) algebra.
//!
//! Everything is computed over the rational function field Q(q): no floats, no
//! modular tricks, structural equality is mathematical equality. The crate
//! provides
//!
//! * [`scalars`]: canonical rational functions in q, q-integers, and the
//!   central charge coefficient,
//! * [`algebra`]: generators, normal monomials, and the deformed bracket
//!   tables together with the twisted Jacobi checker,
//! * [`rewrite`]: normal ordering of words in the enveloping algebra and an
//!   associativity (confluence) probe,
//! * [`hopf`]: coproduct, counit, antipode, and the Hopf axiom checkers,
//! * [`cocycle`]: a window truncation of the 2-cocycle functional equation,
//!   an exact nullspace solver, and the comparison against the closed form,
//! * [`textio`]: a small expression language (parse, evaluate, render as
//!   text/JSON/LaTeX),
//! * [`verify`]: the named verification sweeps backing `qw verify`,
//! * [`cli`]: the command implementations used by the `qw` binary.
//!
//! The `examples/` directory has one runnable tour per capability; start with
//! `cargo run --example brackets`.

pub mod algebra;
pub mod cli;
pub mod cocycle;
pub mod hopf;
pub mod rewrite;
pub mod scalars;
pub mod textio;
pub mod verify;

pub use algebra::{AlgebraElement, GeneratorSymbol, LieGenerator, NormalMonomial};
pub use rewrite::{
    multiply, normal_form, structure_central_coeff, structure_coeff, RawWord, RelationMode,
};
pub use scalars::{central_coeff, q_integer, q_power, ExactRational, QPolynomial, QScalar};
