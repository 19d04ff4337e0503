//! Closed formulas for `K[Δ(n_1, ..., n_e)_(k)]`: f-vector, Hilbert
//! numerators, the two nonzero Betti strands and the ring invariants.
//!
//! Besides the explicit binomial sums there is a second Betti route that
//! reads both strands off the difference of two Hilbert numerators. It never
//! calls the strand formulas, so the two can be checked against each other
//! and against the homology oracle.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::betti::{BettiTable, RingInvariants};
use crate::complex::{validate_sizes, ComplexError};
use crate::exact::{binomial, one_minus_t_power, sign, FVector, HilbertNumerator, IntPolynomial, Integer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error(transparent)]
    Sizes(#[from] ComplexError),
    #[error("the formula needs at least two facets")]
    SingleFacet,
    #[error("the strand formulas need k >= 1")]
    ZeroSkeleton,
    #[error("formula produced negative Betti number β_{{{i},{j}}} = {value}")]
    NegativeBetti { i: usize, j: usize, value: Integer },
}

/// Facet sizes and the skeleton parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkeletonQuery {
    sizes: Vec<usize>,
    k: usize,
}

impl SkeletonQuery {
    pub fn new(sizes: Vec<usize>, k: usize) -> Result<Self, ClosedFormError> {
        validate_sizes(&sizes)?;
        Ok(Self { sizes, k })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of facets `e`.
    pub fn facet_count(&self) -> usize {
        self.sizes.len()
    }

    /// `N = sum n_i - (e - 1)`.
    pub fn n_vertices(&self) -> usize {
        self.sizes.iter().sum::<usize>() + 1 - self.sizes.len()
    }

    /// `n = max n_i`.
    pub fn max_size(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// `s = min(k, n - 1)`, the dimension of the skeleton.
    pub fn top_dimension(&self) -> usize {
        self.k.min(self.max_size() - 1)
    }

    /// Whether the skeleton is the whole complex.
    pub fn is_full(&self) -> bool {
        self.k + 1 >= self.max_size()
    }

    /// `c_j = sum_i binom(n_i, j)`.
    pub fn c(&self, j: usize) -> Integer {
        face_count_sum(&self.sizes, j)
    }
}

fn face_count_sum(sizes: &[usize], j: usize) -> Integer {
    sizes.iter().map(|&n| binomial(n as i64, j as i64)).sum()
}

fn n_vertices_of(sizes: &[usize]) -> usize {
    sizes.iter().sum::<usize>() + 1 - sizes.len()
}

/// Betti numbers along one diagonal `j - i`, for `i = 1, 2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandVector {
    pub diagonal: usize,
    pub values: Vec<Integer>,
}

impl StrandVector {
    fn new(diagonal: usize, mut values: Vec<Integer>) -> Result<Self, ClosedFormError> {
        if let Some((idx, v)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(ClosedFormError::NegativeBetti {
                i: idx + 1,
                j: idx + 1 + diagonal,
                value: v.clone(),
            });
        }
        while values.last().is_some_and(Zero::is_zero) {
            values.pop();
        }
        Ok(Self { diagonal, values })
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn add_to(&self, table: &mut BettiTable) {
        for (idx, v) in self.values.iter().enumerate() {
            table.add(idx + 1, idx + 1 + self.diagonal, v.clone());
        }
    }
}

/// `(1, N, c_2, ..., c_{s+1})`.
pub fn skeleton_f_vector(q: &SkeletonQuery) -> FVector {
    let mut entries = vec![Integer::from(1), Integer::from(q.n_vertices())];
    entries.extend((2..=q.top_dimension() + 1).map(|j| q.c(j)));
    FVector::new(entries)
}

/// `sum_s (1-t)^{N - n_s} - (e - 1)(1-t)^{N-1}` over `(1-t)^N`.
pub fn fatforest_numerator(sizes: &[usize]) -> Result<HilbertNumerator, ClosedFormError> {
    validate_sizes(sizes)?;
    let n = n_vertices_of(sizes);
    let glued = one_minus_t_power(n - 1).scale(&Integer::from(sizes.len() - 1));
    let poly = sizes.iter().fold(-&glued, |acc, &ns| &acc + &one_minus_t_power(n - ns));
    Ok(HilbertNumerator { n_vars: n, poly })
}

/// `(1-t)^N + N t (1-t)^{N-1} + sum_{i=2}^{s+1} c_i t^i (1-t)^{N-i}` over `(1-t)^N`.
pub fn skeleton_numerator(q: &SkeletonQuery) -> HilbertNumerator {
    let n = q.n_vertices();
    let mut poly = &one_minus_t_power(n) + &one_minus_t_power(n - 1).shift(1).scale(&Integer::from(n));
    for i in 2..=q.top_dimension() + 1 {
        poly = &poly + &one_minus_t_power(n - i).shift(i).scale(&q.c(i));
    }
    HilbertNumerator { n_vars: n, poly }
}

/// `β_{i,i+1} = -sum_s binom(N - n_s, i+1) + (e-1) binom(N-1, i+1)` for
/// `i = 1..=N-2`.
pub fn linear_strand(sizes: &[usize]) -> Result<StrandVector, ClosedFormError> {
    validate_sizes(sizes)?;
    if sizes.len() < 2 {
        return Err(ClosedFormError::SingleFacet);
    }
    let n = n_vertices_of(sizes) as i64;
    let e = sizes.len() as i64;
    let values = (1..=n - 2)
        .map(|i| {
            let own: Integer = sizes.iter().map(|&ns| binomial(n - ns as i64, i + 1)).sum();
            Integer::from(e - 1) * binomial(n - 1, i + 1) - own
        })
        .collect();
    StrandVector::new(1, values)
}

/// `β_{i,k+1+i} = sum_{j=k+2}^{n} sum_s binom(n_s, j) (-1)^{k-j} binom(N-j, k+i+1-j)`
/// for `i = 1..=N-k-1`; empty when `k >= n - 1`.
pub fn upper_strand(q: &SkeletonQuery) -> Result<StrandVector, ClosedFormError> {
    if q.k == 0 {
        return Err(ClosedFormError::ZeroSkeleton);
    }
    let diagonal = q.k + 1;
    if q.is_full() {
        return StrandVector::new(diagonal, Vec::new());
    }
    let (n, k, top) = (q.n_vertices() as i64, q.k as i64, q.max_size() as i64);
    let term = |i: i64| -> Integer {
        (k + 2..=top).map(|j| q.c(j as usize) * sign(k - j) * binomial(n - j, k + i + 1 - j)).sum()
    };
    debug_assert!(term(n - k).is_zero());
    StrandVector::new(diagonal, (1..n - k).map(term).collect())
}

/// `β_{0,0} = 1` plus the linear strand and, for `k < n - 1`, the strand on
/// diagonal `k + 1`.
pub fn betti_closed(q: &SkeletonQuery) -> Result<BettiTable, ClosedFormError> {
    if q.k == 0 {
        return Err(ClosedFormError::ZeroSkeleton);
    }
    let mut table = BettiTable::new(q.n_vertices());
    linear_strand(&q.sizes)?.add_to(&mut table);
    upper_strand(q)?.add_to(&mut table);
    Ok(table)
}

/// Reads both strands off Hilbert numerators: the fat-forest numerator has
/// `t^{i+1}` coefficient `(-1)^i β_{i,i+1}`, and the skeleton numerator minus
/// the fat-forest numerator has `t^{i+k+1}` coefficient `(-1)^i β_{i,i+k+1}`.
pub fn betti_via_strand_subtraction(q: &SkeletonQuery) -> Result<BettiTable, ClosedFormError> {
    if q.k == 0 {
        return Err(ClosedFormError::ZeroSkeleton);
    }
    if q.facet_count() < 2 {
        return Err(ClosedFormError::SingleFacet);
    }
    let n = q.n_vertices();
    let whole = fatforest_numerator(&q.sizes)?;
    let linear = (1..n).map(|i| sign(i as i64) * whole.coeff(i + 1)).collect();
    let difference = &skeleton_numerator(q).poly - &whole.poly;
    let upper = (1..n).map(|i| sign(i as i64) * difference.coeff(i + q.k + 1)).collect();

    let mut table = BettiTable::new(n);
    StrandVector::new(1, linear)?.add_to(&mut table);
    StrandVector::new(q.k + 1, upper)?.add_to(&mut table);
    Ok(table)
}

/// `pd = N - 2`, `depth = 2`, `reg = k + 1` below the top dimension and 1
/// otherwise, Cohen–Macaulay iff `k <= 1` or `n = 2`.
pub fn invariants_closed(q: &SkeletonQuery) -> Result<RingInvariants, ClosedFormError> {
    if q.facet_count() < 2 {
        return Err(ClosedFormError::SingleFacet);
    }
    if q.k == 0 {
        return Err(ClosedFormError::ZeroSkeleton);
    }
    let n = q.max_size();
    Ok(RingInvariants {
        pd: q.n_vertices() - 2,
        reg: if q.k + 1 < n { q.k + 1 } else { 1 },
        depth: 2,
        krull_dim: q.top_dimension() + 1,
        is_cm: q.k <= 1 || n == 2,
    })
}

/// Skeleton numerator minus fat-forest numerator: the `d_s` coefficients
/// [`betti_via_strand_subtraction`] reads the upper strand from.
pub fn upper_strand_numerator(q: &SkeletonQuery) -> Result<IntPolynomial, ClosedFormError> {
    Ok(&skeleton_numerator(q).poly - &fatforest_numerator(&q.sizes)?.poly)
}
