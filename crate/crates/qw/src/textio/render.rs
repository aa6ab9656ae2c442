//! Canonical text, JSON, and LaTeX rendering of evaluated values.
//!
//! Text output is deterministic (monomials in their stored order: T-power,
//! C-power, then blocks) and parses back to the same value. JSON keeps every
//! scalar as exact canonical text, never floats. LaTeX is one-way.

use num::Zero;
use serde_json::json;

use crate::algebra::{AlgebraElement, NormalMonomial};
use crate::hopf::TensorElement;
use crate::scalars::{QPolynomial, QScalar};
use crate::textio::Value;

/// Output format selector shared with the command-line layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
        }
    }
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            other => Err(format!("unknown format '{}', expected text, json, or latex", other)),
        }
    }
}

fn scalar_needs_parens(text: &str) -> bool {
    text.contains(['+', '-', '*', '/'])
}

/// One signed term: returns the sign and the body without it.
fn split_sign(c: &QScalar) -> (bool, QScalar) {
    if c.is_negative_lead() {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

pub(crate) fn element_to_text(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.terms().enumerate() {
        let (neg, mag) = split_sign(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let cs = mag.to_string();
        if m.is_identity() {
            if scalar_needs_parens(&cs) {
                out.push('(');
                out.push_str(&cs);
                out.push(')');
            } else {
                out.push_str(&cs);
            }
        } else if mag.is_one() {
            out.push_str(&m.to_string());
        } else {
            if scalar_needs_parens(&cs) {
                out.push('(');
                out.push_str(&cs);
                out.push(')');
            } else {
                out.push_str(&cs);
            }
            out.push('*');
            out.push_str(&m.to_string());
        }
    }
    out
}

pub(crate) fn tensor_to_text(t: &TensorElement) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in t.terms().enumerate() {
        let (neg, mag) = split_sign(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let pair = format!("{} (x) {}", a, b);
        if mag.is_one() {
            out.push_str(&pair);
        } else {
            let cs = mag.to_string();
            if scalar_needs_parens(&cs) {
                out.push('(');
                out.push_str(&cs);
                out.push(')');
            } else {
                out.push_str(&cs);
            }
            out.push_str("*(");
            out.push_str(&pair);
            out.push(')');
        }
    }
    out
}

fn monomial_json(m: &NormalMonomial) -> serde_json::Value {
    json!({
        "t": m.t_exp,
        "c": m.c_exp,
        "L": m.l_indices,
        "W": m.w_indices,
    })
}

pub(crate) fn element_to_json(e: &AlgebraElement) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .terms()
        .map(|(m, c)| {
            json!({
                "coeff": c.to_string(),
                "t": m.t_exp,
                "c": m.c_exp,
                "L": m.l_indices,
                "W": m.w_indices,
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub(crate) fn tensor_to_json(t: &TensorElement) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = t
        .terms()
        .map(|((a, b), c)| {
            json!({
                "coeff": c.to_string(),
                "slots": [monomial_json(a), monomial_json(b)],
            })
        })
        .collect();
    json!({ "terms": terms })
}

fn poly_latex(p: &QPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let deg = p.degree().unwrap_or(0);
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c < num::BigRational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag_is_one = mag == num::BigRational::from_integer(1.into());
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag_is_one {
                out.push_str(&mag.to_string());
            }
            if k == 1 {
                out.push('q');
            } else {
                out.push_str(&format!("q^{{{}}}", k));
            }
        }
    }
    out
}

pub(crate) fn scalar_latex(s: &QScalar) -> String {
    if s.denominator().is_one() {
        poly_latex(s.numerator())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            poly_latex(s.numerator()),
            poly_latex(s.denominator())
        )
    }
}

fn monomial_latex(m: &NormalMonomial) -> String {
    if m.is_identity() {
        return "1".to_string();
    }
    let mut out = String::new();
    match m.t_exp {
        0 => {}
        1 => out.push_str("\\mathcal{T}"),
        t => out.push_str(&format!("\\mathcal{{T}}^{{{}}}", t)),
    }
    match m.c_exp {
        0 => {}
        1 => out.push_str("\\mathcal{C}"),
        c => out.push_str(&format!("\\mathcal{{C}}^{{{}}}", c)),
    }
    for i in &m.l_indices {
        out.push_str(&format!("L_{{{}}}", i));
    }
    for j in &m.w_indices {
        out.push_str(&format!("W_{{{}}}", j));
    }
    out
}

fn coeff_latex_prefix(mag: &QScalar) -> String {
    if mag.is_one() {
        return String::new();
    }
    if !mag.denominator().is_one() {
        return scalar_latex(mag);
    }
    let body = poly_latex(mag.numerator());
    if body.contains(['+', '-']) {
        format!("({})", body)
    } else {
        body
    }
}

pub(crate) fn element_to_latex(e: &AlgebraElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.terms().enumerate() {
        let (neg, mag) = split_sign(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if m.is_identity() {
            let body = scalar_latex(&mag);
            if body.contains(['+', '-']) && !body.starts_with("\\frac") {
                out.push_str(&format!("({})", body));
            } else {
                out.push_str(&body);
            }
        } else {
            out.push_str(&coeff_latex_prefix(&mag));
            out.push_str(&monomial_latex(m));
        }
    }
    out
}

pub(crate) fn tensor_to_latex(t: &TensorElement) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in t.terms().enumerate() {
        let (neg, mag) = split_sign(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&coeff_latex_prefix(&mag));
        out.push_str(&monomial_latex(a));
        out.push_str("\\otimes");
        let right = monomial_latex(b);
        // a letter straight after \otimes would extend the control word
        if right.starts_with(|ch: char| ch.is_ascii_alphabetic()) {
            out.push(' ');
        }
        out.push_str(&right);
    }
    out
}

/// Render an evaluated value in the requested format.
pub fn render(v: &Value, format: OutputFormat) -> String {
    match (v, format) {
        (Value::Scalar(s), OutputFormat::Text) => s.to_string(),
        (Value::Scalar(s), OutputFormat::Json) => json!({ "scalar": s.to_string() }).to_string(),
        (Value::Scalar(s), OutputFormat::Latex) => scalar_latex(s),
        (Value::Element(e), OutputFormat::Text) => element_to_text(e),
        (Value::Element(e), OutputFormat::Json) => element_to_json(e).to_string(),
        (Value::Element(e), OutputFormat::Latex) => element_to_latex(e),
        (Value::Tensor(t), OutputFormat::Text) => tensor_to_text(t),
        (Value::Tensor(t), OutputFormat::Json) => tensor_to_json(t).to_string(),
        (Value::Tensor(t), OutputFormat::Latex) => tensor_to_latex(t),
    }
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&element_to_text(self))
    }
}

impl std::fmt::Display for TensorElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&tensor_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GeneratorSymbol, LieGenerator};
    use crate::hopf::coproduct;
    use crate::rewrite::{normal_form, q_bracket_realized, RawWord, RelationMode};
    use crate::scalars::q_power;
    use crate::textio::{evaluate, parse};

    const M: RelationMode = RelationMode::Central;

    fn rt(e: &AlgebraElement) {
        let text = element_to_text(e);
        let back = evaluate(&parse(&text).expect("reparse"), M)
            .expect("re-evaluate")
            .into_element()
            .expect("element value");
        assert_eq!(&back, e, "round trip through '{}'", text);
    }

    #[test]
    fn zero_and_scalar_examples() {
        assert_eq!(element_to_text(&AlgebraElement::zero()), "0");
        let e = AlgebraElement::lie_generator(LieGenerator::L(0))
            .scale(&(&(&QScalar::q() + &QScalar::one()) * &q_power(-1).clone()));
        assert_eq!(element_to_text(&e), "((q+1)/q)*L(0)");
    }

    #[test]
    fn bracket_table_render_shape() {
        let e = crate::algebra::bracket_table(LieGenerator::L(1), LieGenerator::L(-1));
        assert_eq!(element_to_text(&e), "((q+1)/q)*L(0)");
    }

    #[test]
    fn antipode_render() {
        let s = crate::hopf::antipode(&AlgebraElement::generator(GeneratorSymbol::L(1)), M);
        assert_eq!(element_to_text(&s), "-(1/q)*T^-2*L(1)");
        rt(&s);
    }

    #[test]
    fn latex_tensor_example() {
        let d = coproduct(&AlgebraElement::generator(GeneratorSymbol::L(3)), M);
        assert_eq!(
            tensor_to_latex(&d),
            "L_{3}\\otimes\\mathcal{T}^{3}+\\mathcal{T}^{3}\\otimes L_{3}"
        );
    }

    #[test]
    fn latex_element_examples() {
        let e = AlgebraElement::generator(GeneratorSymbol::L(1)).scale(&-&q_power(2));
        assert_eq!(element_to_latex(&e), "-q^{2}L_{1}");
        let f = crate::algebra::bracket_table(LieGenerator::L(1), LieGenerator::L(-1));
        assert_eq!(element_to_latex(&f), "\\frac{q+1}{q}L_{0}");
        let c = AlgebraElement::generator(GeneratorSymbol::C);
        assert_eq!(element_to_latex(&c), "\\mathcal{C}");
    }

    #[test]
    fn json_shapes() {
        let e = AlgebraElement::generator(GeneratorSymbol::L(1)).scale(&q_power(2));
        let v = element_to_json(&e);
        assert_eq!(v["terms"][0]["coeff"], "q^2");
        assert_eq!(v["terms"][0]["t"], 0);
        assert_eq!(v["terms"][0]["L"][0], 1);
        let d = coproduct(&AlgebraElement::generator(GeneratorSymbol::C), M);
        let tv = tensor_to_json(&d);
        // canonical term order puts 1 (x) C before C (x) 1
        assert_eq!(tv["terms"][0]["slots"][0]["c"], 0);
        assert_eq!(tv["terms"][0]["slots"][1]["c"], 1);
        assert_eq!(tv["terms"][1]["slots"][0]["c"], 1);
        assert_eq!(tv["terms"][1]["slots"][1]["c"], 0);
    }

    #[test]
    fn round_trips() {
        use GeneratorSymbol::{C, L, TInv, W, T};
        let words = [
            vec![L(1), L(0)],
            vec![L(2), L(-2)],
            vec![W(1), L(2), T],
            vec![TInv, C, L(-1)],
            vec![T, T, W(0), W(0)],
        ];
        for w in &words {
            rt(&normal_form(&RawWord(w.clone()), M));
        }
        for m in -3..=3i64 {
            for n in -3..=3i64 {
                let lm = AlgebraElement::generator(L(m));
                let wn = AlgebraElement::generator(W(n));
                rt(&q_bracket_realized(&lm, &wn, m, n, M));
            }
        }
        // scalar-term and negative-scalar-term joins
        let tricky = &AlgebraElement::from_monomial(NormalMonomial::t_power(-1), QScalar::one())
            - &AlgebraElement::from_scalar(&QScalar::q() + &QScalar::one());
        assert_eq!(element_to_text(&tricky), "T^-1-(q+1)");
        rt(&tricky);
        let also = &AlgebraElement::from_scalar(&QScalar::q() + &QScalar::one())
            + &AlgebraElement::lie_generator(LieGenerator::L(1));
        assert_eq!(element_to_text(&also), "(q+1)+L(1)");
        rt(&also);
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = crate::algebra::bracket_table(LieGenerator::L(2), LieGenerator::W(-2));
        let b = crate::algebra::bracket_table(LieGenerator::L(2), LieGenerator::W(-2));
        assert_eq!(element_to_text(&a), element_to_text(&b));
        assert_eq!(
            element_to_json(&a).to_string(),
            element_to_json(&b).to_string()
        );
    }

    #[test]
    fn format_parsing() {
        assert_eq!("text".parse::<OutputFormat>().unwrap(), OutputFormat::Text);
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert_eq!("latex".parse::<OutputFormat>().unwrap(), OutputFormat::Latex);
        assert!("yaml".parse::<OutputFormat>().is_err());
    }
}
