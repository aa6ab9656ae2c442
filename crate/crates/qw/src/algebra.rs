//! Generators, normal monomials, elements, and the deformed bracket tables.
//!
//! The deformed algebra has basis {L_m, W_m, C : m integer}. Its q-bracket
//! pairs generators by index weight, and the tables are
//!
//! ```text
//! [L_m, L_n]_q = ([m]-[n]) L_{m+n} + central_coeff(m) delta_{m,-n} C
//! [L_m, W_n]_q = ([m]-[n]) W_{m+n} + central_coeff(m) delta_{m,-n} C
//! [W_m, W_n]_q = 0,              C central
//! ```
//!
//! The twisted Jacobi identity uses the scaling map f_q(X_m) = (q^m + 1) X_m
//! (and f_q(C) = 2C):
//!
//! ```text
//! [f_q(u), [v, w]_q]_q + [f_q(w), [u, v]_q]_q + [f_q(v), [w, u]_q]_q = 0
//! ```
//!
//! These tables are Lie-side data: they drive the classical-limit sweep, the
//! twisted Jacobi checker, and the cocycle right-hand sides. The associative
//! normal-ordering layer in [`crate::rewrite`] carries its own deformed
//! structure constants with the same q = 1 limit; the two layers agree
//! classically but intentionally not at generic q, and the notes in
//! [`crate::rewrite`] prove why no associative normal ordering can realize
//! the tables above verbatim.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::{central_coeff, q_integer, q_power, QScalar};

/// A single letter of a raw word in the enveloping algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorSymbol {
    L(i64),
    W(i64),
    C,
    T,
    TInv,
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::L(m) => write!(f, "L({})", m),
            GeneratorSymbol::W(m) => write!(f, "W({})", m),
            GeneratorSymbol::C => write!(f, "C"),
            GeneratorSymbol::T => write!(f, "T"),
            GeneratorSymbol::TInv => write!(f, "T^-1"),
        }
    }
}

/// Basis element of the Lie-side algebra (no T here; T lives upstairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieGenerator {
    L(i64),
    W(i64),
    C,
}

impl LieGenerator {
    /// Index weight entering the q-bracket; C has weight 0.
    pub fn weight(&self) -> i64 {
        match self {
            LieGenerator::L(m) | LieGenerator::W(m) => *m,
            LieGenerator::C => 0,
        }
    }
}

impl fmt::Display for LieGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGenerator::L(m) => write!(f, "L({})", m),
            LieGenerator::W(m) => write!(f, "W({})", m),
            LieGenerator::C => write!(f, "C"),
        }
    }
}

/// Normal-ordered monomial T^t C^c L_{m_1}..L_{m_j} W_{n_1}..W_{n_k} with both
/// index blocks nondecreasing. The derived ordering (t, c, L-block, W-block)
/// is the canonical term order used everywhere deterministic output matters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    pub t_exp: i64,
    pub c_exp: u32,
    pub l_indices: Vec<i64>,
    pub w_indices: Vec<i64>,
}

impl NormalMonomial {
    pub fn identity() -> Self {
        NormalMonomial {
            t_exp: 0,
            c_exp: 0,
            l_indices: Vec::new(),
            w_indices: Vec::new(),
        }
    }

    pub fn t_power(t: i64) -> Self {
        NormalMonomial {
            t_exp: t,
            ..NormalMonomial::identity()
        }
    }

    pub fn central() -> Self {
        NormalMonomial {
            c_exp: 1,
            ..NormalMonomial::identity()
        }
    }

    pub fn l(m: i64) -> Self {
        NormalMonomial {
            l_indices: vec![m],
            ..NormalMonomial::identity()
        }
    }

    pub fn w(m: i64) -> Self {
        NormalMonomial {
            w_indices: vec![m],
            ..NormalMonomial::identity()
        }
    }

    /// Assemble a monomial, asserting the normal-form shape.
    pub fn new(t_exp: i64, c_exp: u32, l_indices: Vec<i64>, w_indices: Vec<i64>) -> Self {
        let m = NormalMonomial {
            t_exp,
            c_exp,
            l_indices,
            w_indices,
        };
        assert!(m.is_normal_shape(), "index blocks must be nondecreasing");
        m
    }

    pub fn is_identity(&self) -> bool {
        self.t_exp == 0 && self.c_exp == 0 && self.l_indices.is_empty() && self.w_indices.is_empty()
    }

    /// Both blocks sorted nondecreasing; this is the shape every emitted
    /// normal form must have.
    pub fn is_normal_shape(&self) -> bool {
        self.l_indices.windows(2).all(|p| p[0] <= p[1])
            && self.w_indices.windows(2).all(|p| p[0] <= p[1])
    }

    /// Sum of all L and W indices: the T-crossing weight of the word part.
    pub fn word_weight(&self) -> i64 {
        self.l_indices.iter().sum::<i64>() + self.w_indices.iter().sum::<i64>()
    }

    /// Total word length (number of L and W letters).
    pub fn word_len(&self) -> usize {
        self.l_indices.len() + self.w_indices.len()
    }
}

impl fmt::Display for NormalMonomial {
    /// Canonical factor order T^t C^c L(..) .. W(..), `*`-separated, factors
    /// with zero exponent omitted; the empty product prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.t_exp {
            0 => {}
            1 => parts.push("T".into()),
            t => parts.push(format!("T^{}", t)),
        }
        match self.c_exp {
            0 => {}
            1 => parts.push("C".into()),
            c => parts.push(format!("C^{}", c)),
        }
        for m in &self.l_indices {
            parts.push(format!("L({})", m));
        }
        for n in &self.w_indices {
            parts.push(format!("W({})", n));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Finite Q(q)-linear combination of normal monomials. Zero coefficients are
/// never stored, so structural equality is equality in the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<NormalMonomial, QScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::from_monomial(NormalMonomial::identity(), QScalar::one())
    }

    pub fn from_monomial(m: NormalMonomial, coeff: QScalar) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(m, coeff);
        e
    }

    pub fn from_scalar(c: QScalar) -> Self {
        AlgebraElement::from_monomial(NormalMonomial::identity(), c)
    }

    pub fn generator(g: GeneratorSymbol) -> Self {
        let m = match g {
            GeneratorSymbol::L(m) => NormalMonomial::l(m),
            GeneratorSymbol::W(m) => NormalMonomial::w(m),
            GeneratorSymbol::C => NormalMonomial::central(),
            GeneratorSymbol::T => NormalMonomial::t_power(1),
            GeneratorSymbol::TInv => NormalMonomial::t_power(-1),
        };
        AlgebraElement::from_monomial(m, QScalar::one())
    }

    pub fn lie_generator(g: LieGenerator) -> Self {
        match g {
            LieGenerator::L(m) => AlgebraElement::generator(GeneratorSymbol::L(m)),
            LieGenerator::W(m) => AlgebraElement::generator(GeneratorSymbol::W(m)),
            LieGenerator::C => AlgebraElement::generator(GeneratorSymbol::C),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_else(QScalar::zero)
    }

    /// Merge `coeff * m` into the element, dropping cancellations.
    pub fn add_term(&mut self, m: NormalMonomial, coeff: QScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// The deformed bracket on basis elements, including the central term.
pub fn bracket_table(x: LieGenerator, y: LieGenerator) -> AlgebraElement {
    use LieGenerator::*;
    match (x, y) {
        (C, _) | (_, C) => AlgebraElement::zero(),
        (L(m), L(n)) => {
            let mut out = AlgebraElement::zero();
            out.add_term(NormalMonomial::l(m + n), &q_integer(m) - &q_integer(n));
            if m == -n {
                out.add_term(NormalMonomial::central(), central_coeff(m));
            }
            out
        }
        (L(m), W(n)) => {
            let mut out = AlgebraElement::zero();
            out.add_term(NormalMonomial::w(m + n), &q_integer(m) - &q_integer(n));
            if m == -n {
                out.add_term(NormalMonomial::central(), central_coeff(m));
            }
            out
        }
        (W(n), L(m)) => -&bracket_table(L(m), W(n)),
        (W(_), W(_)) => AlgebraElement::zero(),
    }
}

/// The twist f_q: L_m and W_m scale by (q^m + 1), C by 2.
pub fn f_q(x: LieGenerator) -> AlgebraElement {
    let s = match x {
        LieGenerator::L(m) | LieGenerator::W(m) => &q_power(m) + &QScalar::one(),
        LieGenerator::C => QScalar::from_int(2),
    };
    AlgebraElement::lie_generator(x).scale(&s)
}

/// Interpret a single-letter monomial as a Lie basis element. Panics on
/// anything outside the generator span.
pub fn monomial_as_lie(m: &NormalMonomial) -> LieGenerator {
    assert_eq!(m.t_exp, 0, "not a Lie element: carries a T power");
    match (m.c_exp, m.l_indices.as_slice(), m.w_indices.as_slice()) {
        (1, [], []) => LieGenerator::C,
        (0, [i], []) => LieGenerator::L(*i),
        (0, [], [i]) => LieGenerator::W(*i),
        _ => panic!("not a Lie element: {}", m),
    }
}

/// Bilinear extension of [`bracket_table`] to linear combinations of single
/// generators. Panics if either argument has a monomial that is not a single
/// L, W, or C.
pub fn lie_element_bracket(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let br = bracket_table(monomial_as_lie(ma), monomial_as_lie(mb));
            out = &out + &br.scale(&(ca * cb));
        }
    }
    out
}

/// [x, y]_q = -[y, x]_q on basis elements.
pub fn check_antisymmetry(x: LieGenerator, y: LieGenerator) -> bool {
    bracket_table(x, y) == -&bracket_table(y, x)
}

/// Twisted Jacobi identity on a basis triple.
pub fn check_q_jacobi(u: LieGenerator, v: LieGenerator, w: LieGenerator) -> bool {
    let term = |a: LieGenerator, b: LieGenerator, c: LieGenerator| {
        lie_element_bracket(&f_q(a), &bracket_table(b, c))
    };
    let mut sum = term(u, v, w);
    sum = &sum + &term(w, u, v);
    sum = &sum + &term(v, w, u);
    sum.is_zero()
}
