//! Graded Betti tables and the ring invariants read off them.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::exact::{sign, Integer};

/// Sparse table of graded Betti numbers `β_{i,j}` of `K[x_1..x_N]/I`.
///
/// Only nonzero entries are stored; `β_{0,0} = 1` is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n_vars: usize,
    entries: BTreeMap<(usize, usize), Integer>,
}

impl BettiTable {
    pub fn new(n_vars: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), Integer::one());
        Self { n_vars, entries }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn get(&self, i: usize, j: usize) -> Integer {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Adds `value` to `β_{i,j}`; entries that reach zero are dropped.
    pub fn add(&mut self, i: usize, j: usize, value: Integer) {
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_default();
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Integer)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.values().any(Signed::is_negative)
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j - i` over nonzero entries with `i >= 1`, or 0 if there are none.
    pub fn regularity(&self) -> usize {
        self.entries.keys().filter(|&&(i, _)| i >= 1).map(|&(i, j)| j.saturating_sub(i)).max().unwrap_or(0)
    }

    /// Distinct values of `j - i` over nonzero entries, ascending.
    pub fn diagonals(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.entries.keys().map(|&(i, j)| j - i).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `β_{i, i + diagonal}` for `i = 1, 2, ...`, trailing zeros trimmed.
    pub fn strand(&self, diagonal: usize) -> Vec<Integer> {
        let pd = self.projective_dimension();
        let mut out: Vec<Integer> = (1..=pd).map(|i| self.get(i, i + diagonal)).collect();
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Column sums `sum_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<Integer> {
        let mut out = vec![Integer::zero(); self.projective_dimension() + 1];
        for (&(i, _), v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// `sum_i (-1)^i β_{i,j}`, the `t^j` coefficient of the Hilbert numerator.
    pub fn alternating_sum(&self, j: usize) -> Integer {
        self.entries.iter().filter(|(&(_, jj), _)| jj == j).map(|(&(i, _), v)| sign(i as i64) * v).sum()
    }

    /// Largest `j` with a nonzero entry.
    pub fn max_degree(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }
}

/// Homological invariants of a Stanley–Reisner ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingInvariants {
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub is_cm: bool,
}

/// pd and reg from the table; depth by Auslander–Buchsbaum; Krull dimension
/// is `dim Δ + 1`.
pub fn invariants_from_table(table: &BettiTable, n_vars: usize, complex_dim: i64) -> RingInvariants {
    let pd = table.projective_dimension();
    let depth = n_vars.saturating_sub(pd);
    let krull_dim = usize::try_from(complex_dim + 1).unwrap_or(0);
    RingInvariants { pd, reg: table.regularity(), depth, krull_dim, is_cm: depth == krull_dim }
}
