//! Exact univariate integer polynomials and the symmetry, unimodality and
//! gamma-expansion predicates built on them.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` is the coefficient of
//! `x^i`. The representation is always normalized, so the zero polynomial is
//! the empty vector and every other polynomial ends in a nonzero coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial is not symmetric about half its degree")]
    NotSymmetric,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Dense polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `(1 + x)^k`, built from one row of Pascal's triangle.
    pub fn one_plus_x_pow(k: usize) -> Self {
        let mut row = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        row.push(c.clone());
        for i in 0..k {
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
            row.push(c.clone());
        }
        Self { coeffs: row }
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize, PolyError> {
        match self.coeffs.len() {
            0 => Err(PolyError::ZeroPolynomial),
            len => Ok(len - 1),
        }
    }

    /// True when every coefficient is nonnegative (vacuously true for zero).
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `x^d p(1/x)`: the coefficient vector reversed around degree `d`.
    /// Returns `None` when `d` is smaller than the degree.
    pub fn reflect(&self, d: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() > d + 1 {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Some(Self::new(coeffs))
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    fn neg_impl(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                $body(self, rhs)
            }
        }
        impl $trait<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                $body(&self, &rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                $body(&self, rhs)
            }
        }
        impl $trait<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &IntPolynomial, b: &IntPolynomial| a
    .add_impl(b));
forward_binop!(Sub, sub, |a: &IntPolynomial, b: &IntPolynomial| a
    .add_impl(&b.neg_impl()));
forward_binop!(Mul, mul, |a: &IntPolynomial, b: &IntPolynomial| a
    .mul_impl(b));

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.neg_impl()
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.neg_impl()
    }
}

/// Ring operation on two polynomials; the result is exact and normalized.
pub fn poly_arith(p: &IntPolynomial, q: &IntPolynomial, op: ArithOp) -> IntPolynomial {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

/// `a_i = a_{d-i}` for every `i`, where `d` is the degree.
pub fn is_symmetric(p: &IntPolynomial) -> Result<bool, PolyError> {
    let d = p.degree()?;
    let c = p.coeffs();
    Ok((0..=d / 2).all(|i| c[i] == c[d - i]))
}

/// Unimodality of a symmetric polynomial: `a_0 <= a_1 <= ... <= a_{floor(d/2)}`.
///
/// Unimodality is only defined here for symmetric coefficient sequences, so
/// any other input is rejected.
pub fn is_unimodal_symmetric(p: &IntPolynomial) -> Result<bool, PolyError> {
    if !is_symmetric(p)? {
        return Err(PolyError::NotSymmetric);
    }
    let d = p.degree()?;
    Ok(p.coeffs()[..=d / 2].windows(2).all(|w| w[0] <= w[1]))
}

/// A symmetric polynomial written as `sum_i gammas[i] x^i (1+x)^(d-2i)`.
///
/// `gammas` always has length `floor(d/2) + 1`; trailing zeros are kept so the
/// length records `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaDecomposition {
    pub d: usize,
    pub gammas: Vec<BigInt>,
}

impl GammaDecomposition {
    pub fn new(d: usize, gammas: Vec<BigInt>) -> Self {
        assert_eq!(
            gammas.len(),
            d / 2 + 1,
            "gamma vector length must be floor(d/2)+1"
        );
        Self { d, gammas }
    }

    pub fn from_i64s(d: usize, gammas: &[i64]) -> Self {
        Self::new(d, gammas.iter().map(|&g| BigInt::from(g)).collect())
    }

    pub fn is_gamma_positive(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    /// `Gamma(y) = sum_i gammas[i] y^i` as a normalized polynomial in `y`.
    pub fn gamma_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.gammas.clone())
    }
}

/// Peels off `gamma_i x^i (1+x)^(d-2i)` for `i = 0, 1, ...` until nothing is
/// left. The remainder after the last step is zero for every symmetric input.
pub fn gamma_expand(p: &IntPolynomial) -> Result<GammaDecomposition, PolyError> {
    if !is_symmetric(p)? {
        return Err(PolyError::NotSymmetric);
    }
    let d = p.degree()?;
    let mut rest: Vec<BigInt> = p.coeffs().to_vec();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest[i].clone();
        if !g.is_zero() {
            let binom = IntPolynomial::one_plus_x_pow(d - 2 * i);
            for (k, b) in binom.coeffs().iter().enumerate() {
                rest[i + k] -= &g * b;
            }
        }
        gammas.push(g);
    }
    if rest.iter().any(|c| !c.is_zero()) {
        return Err(PolyError::InvariantViolation(
            "nonzero remainder after gamma peeling".into(),
        ));
    }
    Ok(GammaDecomposition { d, gammas })
}

pub fn gamma_compose(g: &GammaDecomposition) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); g.d + 1];
    for (i, gamma) in g.gammas.iter().enumerate() {
        if gamma.is_zero() {
            continue;
        }
        let binom = IntPolynomial::one_plus_x_pow(g.d - 2 * i);
        for (k, b) in binom.coeffs().iter().enumerate() {
            coeffs[i + k] += gamma * b;
        }
    }
    IntPolynomial::new(coeffs)
}

/// Renders in ascending powers, e.g. `1 + 3x + x^2`, with unit coefficients
/// suppressed on nonconstant terms.
pub struct PolyDisplay<'a> {
    poly: &'a IntPolynomial,
    var: &'a str,
}

impl IntPolynomial {
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x").fmt(f)
    }
}
