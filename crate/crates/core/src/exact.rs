//! Exact integer and polynomial arithmetic.
//!
//! Everything here is arbitrary precision. Polynomials are dense in one
//! variable `t`, and Hilbert series are always carried as a numerator over
//! the fixed denominator `(1 - t)^N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer used for every count in the crate.
pub type Integer = BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("f-vector must start with f_{{-1}} = 1, got {0}")]
    EmptyFaceCount(Integer),
    #[error("f-vector has faces of size {face_size} but only {n_vars} variables are available")]
    TooFewVariables { face_size: usize, n_vars: usize },
}

/// `binom(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> Integer {
    if e.rem_euclid(2) == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Dense polynomial in `t` with integer coefficients; `coeffs[s]` is the
/// coefficient of `t^s`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^s`
    pub fn monomial(c: Integer, s: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); s + 1];
        coeffs[s] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^s`; zero past the degree.
    pub fn coeff(&self, s: usize) -> Integer {
        self.coeffs.get(s).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match s {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match s {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{s}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|s| self.coeff(s) + rhs.coeff(s)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|s| self.coeff(s) - rhs.coeff(s)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Expansion of `(1 - t)^m`: the coefficient of `t^s` is `(-1)^s binom(m, s)`.
pub fn one_minus_t_power(m: usize) -> IntPolynomial {
    let m = m as i64;
    IntPolynomial::from_coeffs((0..=m).map(|s| sign(s) * binomial(m, s)).collect())
}

/// Face counts by dimension: `entries[0]` is `f_{-1}`, `entries[d + 1]` is `f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    entries: Vec<Integer>,
}

impl FVector {
    pub fn new(entries: Vec<Integer>) -> Self {
        Self { entries }
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        Self::new(entries.iter().map(|&x| Integer::from(x)).collect())
    }

    pub fn entries(&self) -> &[Integer] {
        &self.entries
    }

    /// `f_d` for `d >= -1`; zero above the top dimension.
    pub fn face_count(&self, d: i64) -> Integer {
        usize::try_from(d + 1).ok().and_then(|idx| self.entries.get(idx).cloned()).unwrap_or_default()
    }

    /// Dimension of the complex, `-1` for `{∅}`; `None` for an empty vector.
    pub fn dimension(&self) -> Option<i64> {
        (!self.entries.is_empty()).then(|| self.entries.len() as i64 - 2)
    }

    /// The first `k + 2` entries, i.e. the f-vector of the `k`-skeleton.
    pub fn truncate(&self, k: usize) -> Self {
        Self::new(self.entries.iter().take(k + 2).cloned().collect())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, x) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Numerator of a Hilbert series written over `(1 - t)^n_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertNumerator {
    pub n_vars: usize,
    pub poly: IntPolynomial,
}

impl HilbertNumerator {
    pub fn coeff(&self, s: usize) -> Integer {
        self.poly.coeff(s)
    }
}

/// Clears denominators in `sum_i f_i t^{i+1} / (1-t)^{i+1}` to get a
/// numerator over `(1 - t)^n_vars`.
pub fn numerator_from_fvector(f: &FVector, n_vars: usize) -> Result<HilbertNumerator, ExactError> {
    match f.entries.first() {
        Some(x) if x.is_one() => {}
        Some(x) => return Err(ExactError::EmptyFaceCount(x.clone())),
        None => return Err(ExactError::EmptyFaceCount(Integer::zero())),
    }
    let mut poly = IntPolynomial::zero();
    for (size, count) in f.entries.iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        // faces with `size` vertices contribute f * t^size * (1-t)^(N - size)
        let rest = n_vars.checked_sub(size).ok_or(ExactError::TooFewVariables { face_size: size, n_vars })?;
        poly = &poly + &one_minus_t_power(rest).shift(size).scale(count);
    }
    Ok(HilbertNumerator { n_vars, poly })
}
