//! Coefficient fields and exact matrix rank over them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::OracleError;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// GF(p), `p` prime and below `2^31`.
    Prime(u32),
    /// The rationals.
    Rational,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);

    pub fn prime(p: u64) -> Result<Self, OracleError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(OracleError::BadField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Short name used on the command line: `gf2`, `gf3`, ..., `rat`.
    pub fn name(self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("gf{p}"),
            FieldSpec::Rational => "rat".to_string(),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "rat" | "q" | "qq" | "rational" => Ok(FieldSpec::Rational),
            _ => {
                let digits = lower
                    .strip_prefix("gf")
                    .map(|d| d.trim_start_matches('(').trim_end_matches(')'))
                    .ok_or_else(|| OracleError::BadField(format!("unknown field `{s}`")))?;
                let p: u64 =
                    digits.parse().map_err(|_| OracleError::BadField(format!("unknown field `{s}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse row with entries in `{-1, 0, 1}` (boundary coefficients).
pub(crate) type SignedRow = Vec<(usize, i8)>;

/// Rank of the matrix whose rows are `rows`, each of length `width`.
pub(crate) fn rank(rows: &[SignedRow], width: usize, field: FieldSpec) -> usize {
    if rows.is_empty() || width == 0 {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(rows, width),
        FieldSpec::Prime(p) => rank_gfp(rows, width, p as u64),
        FieldSpec::Rational => rank_rational(rows, width),
    }
}

fn rank_gf2(rows: &[SignedRow], width: usize) -> usize {
    let words = width.div_ceil(64);
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; width];
    let mut rank = 0;
    for row in rows {
        let mut v = vec![0u64; words];
        for &(c, _) in row {
            v[c / 64] ^= 1 << (c % 64);
        }
        while let Some(pivot) = lowest_bit(&v) {
            match &basis[pivot] {
                Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                None => {
                    basis[pivot] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_gfp(rows: &[SignedRow], width: usize, p: u64) -> usize {
    // basis rows are stored normalized so their pivot entry is 1
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; width];
    let mut rank = 0;
    for row in rows {
        let mut v = vec![0u64; width];
        for &(c, s) in row {
            v[c] = if s > 0 { 1 } else { p - 1 };
        }
        while let Some(pivot) = v.iter().position(|&x| x != 0) {
            match &basis[pivot] {
                Some(b) => {
                    let factor = v[pivot];
                    for (x, y) in v.iter_mut().zip(b).skip(pivot) {
                        *x = (*x + p - factor * y % p) % p;
                    }
                }
                None => {
                    let inv = inverse_mod(v[pivot], p);
                    v.iter_mut().for_each(|x| *x = *x * inv % p);
                    basis[pivot] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn rank_rational(rows: &[SignedRow], width: usize) -> usize {
    let mut basis: Vec<Option<Vec<BigRational>>> = vec![None; width];
    let mut rank = 0;
    for row in rows {
        let mut v = vec![BigRational::zero(); width];
        for &(c, s) in row {
            v[c] = BigRational::from_integer(BigInt::from(s));
        }
        while let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            match &basis[pivot] {
                Some(b) => {
                    let factor = v[pivot].clone();
                    for (x, y) in v.iter_mut().zip(b).skip(pivot) {
                        if !y.is_zero() {
                            *x -= &factor * y;
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / &v[pivot];
                    v.iter_mut().for_each(|x| *x *= &inv);
                    basis[pivot] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
