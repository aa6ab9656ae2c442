//! Exact scalar arithmetic over Q(q).
//!
//! Provides:
//! * [`ExactRational`]: arbitrary-precision rationals (coefficients and
//!   evaluation points),
//! * [`QPolynomial`]: dense polynomials in the deformation parameter q,
//! * [`QScalar`]: rational functions num/den kept in a canonical form so that
//!   structural equality coincides with mathematical equality,
//! * [`q_integer`], [`q_power`], [`central_coeff`]: the q-number primitives
//!   every structure constant in the crate is built from.
//!
//! Canonical form of a [`QScalar`]: numerator and denominator have integer
//! coefficients, are coprime as polynomials, carry no common integer content,
//! and the denominator's leading coefficient is positive. Zero is stored as
//! 0/1. Every value has exactly one representation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type ExactRational = BigRational;

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("pole at q = {0}: denominator vanishes")]
    Pole(ExactRational),
}

fn big(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Dense polynomial in q with rational coefficients.
///
/// Invariant: `coeffs` has no trailing zero; the zero polynomial is the empty
/// vector. `coeffs[k]` is the coefficient of q^k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<ExactRational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        let mut p = QPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(n: i64) -> Self {
        QPolynomial::constant(big(n))
    }

    /// The variable q itself.
    pub fn q() -> Self {
        QPolynomial::monomial(ExactRational::one(), 1)
    }

    /// c * q^k.
    pub fn monomial(c: ExactRational, k: usize) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn scale(&self, s: &ExactRational) -> Self {
        if s.is_zero() {
            return QPolynomial::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Euclidean division over Q: self = quot * div + rem with deg rem < deg div.
    ///
    /// Panics on a zero divisor.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.coeffs.len() < div.coeffs.len() {
            return (QPolynomial::zero(), self.clone());
        }
        let dlead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - div.coeffs.len() + 1;
        let mut quot = vec![ExactRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + div.coeffs.len() - 1] / &dlead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in div.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + i] = &rem[k + i] - t;
            }
            quot[k] = c;
        }
        (QPolynomial::from_coeffs(quot), QPolynomial::from_coeffs(rem))
    }

    /// Monic greatest common divisor (Euclid with per-step normalization).
    pub fn gcd_monic(a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let lead = b.leading().unwrap().clone();
            b = b.scale(&lead.recip());
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs =
            vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + t;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for QPolynomial {
    /// Expanded form, descending powers: `6*q^4+6*q^2`, `q+1`, `-q^3+2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let coeff_is_one = mag.is_one();
            match (k, coeff_is_one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", mag)?,
                (_, true) => write!(f, "q^{}", k)?,
                (_, false) => write!(f, "{}*q^{}", mag, k)?,
            }
        }
        Ok(())
    }
}

/// Canonical rational function in q. See the module docs for the stored form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: QPolynomial,
    den: QPolynomial,
}

impl QScalar {
    /// Reduce an arbitrary num/den pair to canonical form.
    pub fn canonicalize(num: QPolynomial, den: QPolynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QScalar {
                num: QPolynomial::zero(),
                den: QPolynomial::one(),
            });
        }
        let g = QPolynomial::gcd_monic(&num, &den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());

        // Clear coefficient denominators jointly, then strip joint integer content.
        let mut lcm = BigInt::one();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            lcm = lcm.lcm(c.denom());
        }
        let lcm = ExactRational::from_integer(lcm);
        let num = num.scale(&lcm);
        let den = den.scale(&lcm);
        let mut content = BigInt::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            debug_assert!(c.denom().is_one());
            content = content.gcd(c.numer());
        }
        let scale = ExactRational::from_integer(content).recip();
        let mut num = num.scale(&scale);
        let mut den = den.scale(&scale);
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(QScalar { num, den })
    }

    pub fn zero() -> Self {
        QScalar {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: QPolynomial::one(),
            den: QPolynomial::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar {
            num: QPolynomial::from_int(n),
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(r: ExactRational) -> Self {
        QScalar::canonicalize(QPolynomial::constant(r), QPolynomial::one())
            .expect("denominator one")
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        QScalar::canonicalize(p, QPolynomial::one()).expect("denominator one")
    }

    /// The variable q.
    pub fn q() -> Self {
        QScalar {
            num: QPolynomial::q(),
            den: QPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the numerator's leading coefficient is negative (the stored
    /// denominator is always positive-leading). Used for sign-aware printing.
    pub fn is_negative_lead(&self) -> bool {
        matches!(self.num.leading(), Some(c) if c.is_negative())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        QScalar::canonicalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        QScalar::canonicalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow_i(&self, e: i64) -> Result<Self, ScalarError> {
        let mag = e.unsigned_abs() as u32;
        let p = QScalar::canonicalize(self.num.pow(mag), self.den.pow(mag))
            .expect("nonzero denominator power");
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Exact evaluation at a rational point; reports a pole when the stored
    /// denominator vanishes there.
    pub fn eval_at(&self, point: &ExactRational) -> Result<ExactRational, ScalarError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(ScalarError::Pole(point.clone()));
        }
        Ok(self.num.eval(point) / d)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QScalar::canonicalize(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        QScalar::canonicalize(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl Div for &QScalar {
    /// Panics on a zero divisor; use [`QScalar::checked_div`] where the divisor
    /// is not known to be nonzero.
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $m:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(QPolynomial, Add, add);
forward_owned_binop!(QPolynomial, Sub, sub);
forward_owned_binop!(QPolynomial, Mul, mul);
forward_owned_binop!(QScalar, Add, add);
forward_owned_binop!(QScalar, Sub, sub);
forward_owned_binop!(QScalar, Mul, mul);
forward_owned_binop!(QScalar, Div, div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl fmt::Display for QScalar {
    /// Canonical text: `q/2`, `(q^2+q)/(6*q^2+6)`, `(q+1)/q`, `0`.
    /// A side is parenthesized exactly when it prints more than one term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let d = self.den.to_string();
        let wrap = |s: &str| {
            // One printed term never contains an interior + or -.
            s[1..].contains(['+', '-'])
        };
        if wrap(&n) {
            write!(f, "({})", n)?;
        } else {
            write!(f, "{}", n)?;
        }
        write!(f, "/")?;
        if wrap(&d) {
            write!(f, "({})", d)
        } else {
            write!(f, "{}", d)
        }
    }
}

/// The q-integer [n] = (q^n - 1)/(q - 1), defined for every integer n.
///
/// [0] = 0, [2] = 1 + q, [-1] = -1/q.
pub fn q_integer(n: i64) -> QScalar {
    let qm1 = QScalar::canonicalize(
        QPolynomial::from_coeffs(vec![big(-1), big(1)]),
        QPolynomial::one(),
    )
    .unwrap();
    &(&q_power(n) - &QScalar::one()) / &qm1
}

/// q^m for any integer m (negative exponents give 1/q^|m|).
pub fn q_power(m: i64) -> QScalar {
    let p = QPolynomial::monomial(ExactRational::one(), m.unsigned_abs() as usize);
    if m >= 0 {
        QScalar::from_poly(p)
    } else {
        QScalar::canonicalize(QPolynomial::one(), p).expect("q^k is nonzero")
    }
}

/// Central charge coefficient
/// q^{-m} [m-1][m][m+1] / (6 (1 + q^m)).
///
/// Vanishes exactly for m in {-1, 0, 1}; at q = 1 it degenerates to
/// (m^3 - m)/12; and central_coeff(-m) = -central_coeff(m).
pub fn central_coeff(m: i64) -> QScalar {
    let num = &(&q_integer(m - 1) * &q_integer(m)) * &q_integer(m + 1);
    let den = &QScalar::from_int(6) * &(&QScalar::one() + &q_power(m));
    &(&q_power(-m) * &num) / &den
}
