//! Brute-force ground truth: reduced simplicial homology over a field,
//! Hochster's formula summed over every vertex subset, and Reisner's
//! Cohen–Macaulay criterion.

mod field;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::betti::BettiTable;
use crate::complex::{SimplicialComplex, VertexSet};

pub use field::FieldSpec;

/// Default limit on the number of vertices the oracle accepts.
pub const DEFAULT_VERTEX_GUARD: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("complex has {n_vertices} vertices, above the oracle guard of {guard}")]
    GuardExceeded { n_vertices: usize, guard: usize },
    #[error("{0}")]
    BadField(String),
}

/// Exhaustive homology computations over a fixed field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub field: FieldSpec,
    pub max_vertices: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(FieldSpec::GF2)
    }
}

impl Oracle {
    pub fn new(field: FieldSpec) -> Self {
        Self { field, max_vertices: DEFAULT_VERTEX_GUARD }
    }

    pub fn with_guard(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    fn check_guard(&self, c: &SimplicialComplex) -> Result<(), OracleError> {
        if c.n_vertices() > self.max_vertices {
            return Err(OracleError::GuardExceeded { n_vertices: c.n_vertices(), guard: self.max_vertices });
        }
        Ok(())
    }

    /// `dim H̃_d(C)` for `d = -1, ..., dim C`; index `d + 1`.
    pub fn reduced_homology_dims(&self, c: &SimplicialComplex) -> Result<Vec<usize>, OracleError> {
        self.check_guard(c)?;
        Ok(reduced_homology_of_faces(&c.faces_by_size(), self.field))
    }

    /// `β_{i,j} = sum over |S| = j of dim H̃_{j-i-1}(C_S)`.
    pub fn hochster_betti(&self, c: &SimplicialComplex) -> Result<BettiTable, OracleError> {
        self.check_guard(c)?;
        let n = c.n_vertices();
        let faces = c.faces_by_size();
        let field = self.field;
        let counts = (0..1u64 << n)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, mask| {
                let s = VertexSet::from_bits(mask);
                let j = s.len();
                let induced: Vec<Vec<VertexSet>> = faces
                    .iter()
                    .take(j + 1)
                    .map(|level| level.iter().copied().filter(|f| f.is_subset_of(s)).collect())
                    .collect();
                for (idx, &h) in reduced_homology_of_faces(&induced, field).iter().enumerate() {
                    // idx = d + 1 and i = j - d - 1
                    if h > 0 && idx <= j {
                        *acc.entry((j - idx, j)).or_default() += h as u64;
                    }
                }
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        let mut table = BettiTable::new(n);
        for ((i, j), v) in counts {
            if (i, j) != (0, 0) {
                table.add(i, j, BigInt::from(v));
            }
        }
        Ok(table)
    }

    /// Reisner: `H̃_i(lk σ) = 0` for every face `σ` (including `∅`) and every
    /// `i < dim lk σ`.
    pub fn reisner_is_cm(&self, c: &SimplicialComplex) -> Result<bool, OracleError> {
        self.check_guard(c)?;
        for level in c.faces_by_size() {
            for sigma in level {
                let link = c.link(sigma).expect("enumerated faces have links");
                let dim = link.dimension();
                let h = reduced_homology_of_faces(&link.faces_by_size(), self.field);
                // h[idx] is H̃_{idx-1}; require zero for idx - 1 < dim
                if h.iter().take((dim + 1).max(0) as usize).any(|&x| x != 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Reduced homology from faces grouped by size (`faces[s]` sorted by mask).
///
/// Uses the augmented chain complex, so the empty face is the single
/// generator in degree `-1`. Returns `dim H̃_d` at index `d + 1`.
fn reduced_homology_of_faces(faces: &[Vec<VertexSet>], field: FieldSpec) -> Vec<usize> {
    let top = match faces.iter().rposition(|level| !level.is_empty()) {
        Some(t) => t,
        None => return Vec::new(),
    };
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let lower = &faces[s - 1];
        let rows: Vec<_> = faces[s]
            .iter()
            .map(|face| {
                face.iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let col =
                            lower.binary_search(&face.without(v)).expect("faces are closed under subsets");
                        (col, if pos % 2 == 0 { 1i8 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        ranks[s] = field::rank(&rows, lower.len(), field);
    }
    (0..=top).map(|s| faces[s].len() - ranks[s] - ranks[s + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_fat_forest, FatForestSpec};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| vs(f)).collect()).unwrap()
    }

    const FIELDS: [FieldSpec; 4] = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Prime(5), FieldSpec::Rational];

    #[test]
    fn circle() {
        let c = complex(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        for field in FIELDS {
            assert_eq!(Oracle::new(field).reduced_homology_dims(&c).unwrap(), vec![0, 0, 1]);
        }
    }

    #[test]
    fn two_points() {
        let c = complex(2, &[&[0], &[1]]);
        assert_eq!(Oracle::default().reduced_homology_dims(&c).unwrap(), vec![0, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = SimplicialComplex::simplex(4);
        for field in FIELDS {
            assert_eq!(Oracle::new(field).reduced_homology_dims(&c).unwrap(), vec![0; 5]);
        }
    }

    #[test]
    fn empty_face_only() {
        let c = SimplicialComplex::new(3, vec![]).unwrap();
        assert_eq!(Oracle::default().reduced_homology_dims(&c).unwrap(), vec![1]);
    }

    #[test]
    fn projective_plane_detects_characteristic() {
        // 6-vertex RP^2: H̃_1 and H̃_2 are nonzero only in characteristic 2
        let rp2 = complex(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[2, 3, 5],
                &[1, 3, 4],
                &[2, 4, 5],
                &[1, 3, 5],
            ],
        );
        assert_eq!(Oracle::new(FieldSpec::GF2).reduced_homology_dims(&rp2).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(Oracle::new(FieldSpec::GF3).reduced_homology_dims(&rp2).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(Oracle::new(FieldSpec::Rational).reduced_homology_dims(&rp2).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn hochster_on_path() {
        let p = build_fat_forest(&FatForestSpec::chain(&[2, 2])).unwrap();
        let t = Oracle::default().hochster_betti(&p).unwrap();
        let mut expected = BettiTable::new(3);
        expected.add(1, 2, BigInt::from(1));
        assert_eq!(t, expected);
    }

    #[test]
    fn hochster_on_circle() {
        let c = complex(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let t = Oracle::default().hochster_betti(&c).unwrap();
        let mut expected = BettiTable::new(3);
        expected.add(1, 3, BigInt::from(1));
        assert_eq!(t, expected);
    }

    #[test]
    fn hochster_ghost_vertex_is_a_linear_generator() {
        let c = complex(2, &[&[0]]);
        let t = Oracle::default().hochster_betti(&c).unwrap();
        let mut expected = BettiTable::new(2);
        expected.add(1, 1, BigInt::from(1));
        assert_eq!(t, expected);
    }

    #[test]
    fn guard_is_enforced() {
        let c = SimplicialComplex::simplex(6);
        let oracle = Oracle::default().with_guard(5);
        let err = oracle.hochster_betti(&c).unwrap_err();
        assert_eq!(err, OracleError::GuardExceeded { n_vertices: 6, guard: 5 });
        assert!(oracle.reduced_homology_dims(&c).is_err());
        assert!(oracle.reisner_is_cm(&c).is_err());
    }

    #[test]
    fn reisner_examples() {
        let oracle = Oracle::default();
        let path = build_fat_forest(&FatForestSpec::chain(&[2, 2])).unwrap();
        assert!(oracle.reisner_is_cm(&path).unwrap());
        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        assert!(!oracle.reisner_is_cm(&two_edges).unwrap());
        // two triangles sharing a vertex: the shared vertex has a disconnected
        // 1-dimensional link, so the complex is not Cohen-Macaulay
        let d33 = build_fat_forest(&FatForestSpec::chain(&[3, 3])).unwrap();
        assert_eq!(d33.skeleton(2), d33);
        assert!(!oracle.reisner_is_cm(&d33).unwrap());
        let inv = crate::betti::invariants_from_table(&oracle.hochster_betti(&d33).unwrap(), 5, 2);
        assert_eq!((inv.depth, inv.krull_dim, inv.is_cm), (2, 3, false));
        // its 1-skeleton is a connected graph, hence Cohen-Macaulay
        assert!(oracle.reisner_is_cm(&d33.skeleton(1)).unwrap());
    }

    #[test]
    fn reisner_mixed_dimension_is_not_cm() {
        let c = complex(4, &[&[0, 1, 2], &[2, 3]]);
        assert!(!Oracle::default().reisner_is_cm(&c).unwrap());
    }
}
