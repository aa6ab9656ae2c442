//! Surface syntax: a small expression language for elements, q-brackets, and
//! the Hopf maps, with canonical text, JSON, and LaTeX renderers.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := primary ('^' int)*
//! primary := int | 'q' | gen | '[' expr ',' expr ']_q'
//!          | 'Delta(' expr ')' | 'S(' expr ')' | 'eps(' expr ')'
//!          | '(' expr ')'
//! gen     := 'L(' int ')' | 'W(' int ')' | 'C' | 'T'
//! int     := ['-'] digits
//! ```
//!
//! Division accepts only scalar divisors; powers take integer literals and
//! `T^-1` is the inverse grouplike. Evaluation is exact and normal-ordering;
//! bracket nodes infer operand weights from homogeneity (every monomial of
//! the operand must carry the same total letter index) unless the AST node
//! declares them. Text rendering is canonical and parses back to the same
//! value; JSON and LaTeX are one-way.

pub mod parse;
pub mod render;

pub use parse::{parse, ParseError};
pub use render::{render, OutputFormat};

use crate::algebra::{AlgebraElement, GeneratorSymbol, NormalMonomial};
use crate::hopf::{antipode, coproduct, counit, TensorElement};
use crate::rewrite::{multiply, q_bracket_realized, RelationMode};
use crate::scalars::QScalar;

/// Lossless syntax tree for the expression language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Q,
    Gen(GeneratorSymbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `[x, y]_q`; weights may be declared programmatically, otherwise they
    /// are inferred from homogeneous operands.
    Bracket(Box<Expr>, Box<Expr>, Option<(i64, i64)>),
    Delta(Box<Expr>),
    Antipode(Box<Expr>),
    Counit(Box<Expr>),
}

/// An evaluated expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(QScalar),
    Element(AlgebraElement),
    Tensor(TensorElement),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Tensor(_) => "tensor",
        }
    }

    /// Scalars lift to scalar multiples of the identity element.
    pub fn into_element(self) -> Option<AlgebraElement> {
        match self {
            Value::Scalar(s) => Some(AlgebraElement::from_scalar(s)),
            Value::Element(e) => Some(e),
            Value::Tensor(_) => None,
        }
    }
}

/// Evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("type mismatch: {0}")]
    Type(String),
    #[error("weight inference failed: {0}")]
    Weight(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative power of a non-invertible {0}")]
    NegativePower(&'static str),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

fn scalar_of(v: Value) -> Option<QScalar> {
    match v {
        Value::Scalar(s) => Some(s),
        _ => None,
    }
}

/// The common letter-index weight of all monomials, if one exists. T and C
/// carry weight zero; the zero element is homogeneous of weight zero.
fn homogeneous_weight(x: &AlgebraElement) -> Option<i64> {
    let mut weight = None;
    for (m, _) in x.terms() {
        let w = m.word_weight();
        match weight {
            None => weight = Some(w),
            Some(prev) if prev != w => return None,
            Some(_) => {}
        }
    }
    Some(weight.unwrap_or(0))
}

fn add_values(a: Value, b: Value, negate_b: bool) -> Result<Value, EvalError> {
    let fix = |v: Value| -> Value {
        if !negate_b {
            return v;
        }
        match v {
            Value::Scalar(s) => Value::Scalar(-&s),
            Value::Element(e) => Value::Element(-&e),
            Value::Tensor(t) => Value::Tensor(-&t),
        }
    };
    match (a, fix(b)) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &y)),
        (Value::Element(x), Value::Element(y)) => Ok(Value::Element(&x + &y)),
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(&x + &y)),
        (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
            Ok(Value::Element(&AlgebraElement::from_scalar(s) + &e))
        }
        (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => {
            Ok(Value::Tensor(&TensorElement::one().scale(&s) + &t))
        }
        (x, y) => Err(EvalError::Type(format!(
            "cannot add {} and {}",
            x.kind(),
            y.kind()
        ))),
    }
}

fn mul_values(a: Value, b: Value, mode: RelationMode) -> Result<Value, EvalError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
        (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
            Ok(Value::Element(e.scale(&s)))
        }
        (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => {
            Ok(Value::Tensor(t.scale(&s)))
        }
        (Value::Element(x), Value::Element(y)) => Ok(Value::Element(multiply(&x, &y, mode))),
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.multiply(&y, mode))),
        (x, y) => Err(EvalError::Type(format!(
            "cannot multiply {} by {}",
            x.kind(),
            y.kind()
        ))),
    }
}

fn pow_value(base: Value, k: i64, mode: RelationMode) -> Result<Value, EvalError> {
    match base {
        Value::Scalar(s) => {
            if k < 0 && s.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            let p = s.pow_i(k).map_err(|e| EvalError::Internal(e.to_string()))?;
            Ok(Value::Scalar(p))
        }
        Value::Element(e) => {
            if k >= 0 {
                let mut acc = AlgebraElement::one();
                for _ in 0..k {
                    acc = multiply(&acc, &e, mode);
                }
                return Ok(Value::Element(acc));
            }
            // negative powers exist only for invertible single monomials:
            // scalar multiples of T-powers
            if e.num_terms() == 1 {
                let (m, c) = e.terms().next().expect("one term");
                if m.c_exp == 0 && m.l_indices.is_empty() && m.w_indices.is_empty() && !c.is_zero()
                {
                    let mono = NormalMonomial::t_power(m.t_exp * k);
                    let coeff = c.pow_i(k).map_err(|e| EvalError::Internal(e.to_string()))?;
                    return Ok(Value::Element(AlgebraElement::from_monomial(mono, coeff)));
                }
            }
            Err(EvalError::NegativePower("element"))
        }
        Value::Tensor(_) => {
            if k < 0 {
                return Err(EvalError::NegativePower("tensor"));
            }
            let mut acc = Value::Tensor(TensorElement::one());
            let t = base;
            for _ in 0..k {
                acc = mul_values(acc, t.clone(), mode)?;
            }
            Ok(acc)
        }
    }
}

/// Exact evaluation; Hopf maps apply to element-valued subexpressions and
/// tensors multiply only with tensors or scalars.
pub fn evaluate(ast: &Expr, mode: RelationMode) -> Result<Value, EvalError> {
    match ast {
        Expr::Int(n) => Ok(Value::Scalar(QScalar::from_int(*n))),
        Expr::Q => Ok(Value::Scalar(QScalar::q())),
        Expr::Gen(g) => Ok(Value::Element(AlgebraElement::generator(*g))),
        Expr::Neg(e) => match evaluate(e, mode)? {
            Value::Scalar(s) => Ok(Value::Scalar(-&s)),
            Value::Element(x) => Ok(Value::Element(-&x)),
            Value::Tensor(t) => Ok(Value::Tensor(-&t)),
        },
        Expr::Add(a, b) => add_values(evaluate(a, mode)?, evaluate(b, mode)?, false),
        Expr::Sub(a, b) => add_values(evaluate(a, mode)?, evaluate(b, mode)?, true),
        Expr::Mul(a, b) => mul_values(evaluate(a, mode)?, evaluate(b, mode)?, mode),
        Expr::Div(a, b) => {
            let num = evaluate(a, mode)?;
            let den = evaluate(b, mode)?;
            let d = scalar_of(den).ok_or_else(|| {
                EvalError::Type("division requires a scalar divisor".to_string())
            })?;
            if d.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            let inv = d.inv().map_err(|_| EvalError::DivisionByZero)?;
            mul_values(num, Value::Scalar(inv), mode)
        }
        Expr::Pow(e, k) => pow_value(evaluate(e, mode)?, *k, mode),
        Expr::Bracket(a, b, declared) => {
            let x = evaluate(a, mode)?
                .into_element()
                .ok_or_else(|| EvalError::Type("bracket of a tensor".to_string()))?;
            let y = evaluate(b, mode)?
                .into_element()
                .ok_or_else(|| EvalError::Type("bracket of a tensor".to_string()))?;
            let (wx, wy) = match declared {
                Some(w) => *w,
                None => {
                    let wx = homogeneous_weight(&x).ok_or_else(|| {
                        EvalError::Weight("left operand is not weight-homogeneous".to_string())
                    })?;
                    let wy = homogeneous_weight(&y).ok_or_else(|| {
                        EvalError::Weight("right operand is not weight-homogeneous".to_string())
                    })?;
                    (wx, wy)
                }
            };
            Ok(Value::Element(q_bracket_realized(&x, &y, wx, wy, mode)))
        }
        Expr::Delta(e) => {
            let x = evaluate(e, mode)?
                .into_element()
                .ok_or_else(|| EvalError::Type("Delta of a tensor".to_string()))?;
            Ok(Value::Tensor(coproduct(&x, mode)))
        }
        Expr::Antipode(e) => {
            let x = evaluate(e, mode)?
                .into_element()
                .ok_or_else(|| EvalError::Type("S of a tensor".to_string()))?;
            Ok(Value::Element(antipode(&x, mode)))
        }
        Expr::Counit(e) => {
            let x = evaluate(e, mode)?
                .into_element()
                .ok_or_else(|| EvalError::Type("eps of a tensor".to_string()))?;
            Ok(Value::Scalar(counit(&x)))
        }
    }
}
