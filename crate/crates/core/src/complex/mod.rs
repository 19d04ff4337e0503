//! Simplicial complexes on at most 64 vertices, stored as canonical facet lists.

mod facet_list;
mod fat_forest;
mod vertex_set;

use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::FVector;

pub use facet_list::{format_facet_list, parse_facet_list};
pub(crate) use fat_forest::validate_sizes;
pub use fat_forest::{build_fat_forest, glued_facets, has_point_gluing, FatForestSpec, Gluing};
pub use vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet {index} has size {size}; every facet needs at least 2 vertices")]
    FacetTooSmall { index: usize, size: usize },
    #[error("at least one facet size is required")]
    NoFacets,
    #[error("{0} vertices exceed the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is outside the vertex range 0..{n_vertices}")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error(
        "facet {facet} is glued at vertex {vertex}, but only {available} vertices exist when it is attached"
    )]
    GluingTarget { facet: usize, vertex: usize, available: usize },
    #[error("invalid gluing schedule: {0}")]
    GluingSchedule(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simplicial complex given by its facets.
///
/// Facets are inclusion-maximal, distinct and sorted by `(size, mask)`. The
/// complex `{∅}` is stored with the single facet `∅`; there is no void complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating faces; non-maximal ones are dropped.
    pub fn new(n_vertices: usize, faces: Vec<VertexSet>) -> Result<Self, ComplexError> {
        if n_vertices > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(n_vertices));
        }
        let universe = VertexSet::full(n_vertices);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset_of(universe)) {
            let vertex = bad.difference(universe).iter().next().unwrap_or_default();
            return Err(ComplexError::VertexOutOfRange { vertex, n_vertices });
        }
        Ok(Self::from_generators(n_vertices, faces))
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_generators(n, vec![VertexSet::full(n)])
    }

    fn from_generators(n_vertices: usize, faces: Vec<VertexSet>) -> Self {
        Self { n_vertices, facets: maximal_sets(faces) }
    }

    /// For facet lists already known to be an antichain.
    fn from_antichain(n_vertices: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort_unstable_by_key(|f| f.canonical_key());
        facets.dedup();
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        Self { n_vertices, facets }
    }

    /// Size of the ambient vertex set (the number of polynomial variables).
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// `max |F| - 1`; `-1` for `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as i64 - 1
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(*f))
    }

    /// Vertices of the ambient set that are not faces.
    pub fn ghost_vertices(&self) -> VertexSet {
        let covered = self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        VertexSet::full(self.n_vertices).difference(covered)
    }

    /// Every face grouped by size: `out[s]` holds the faces with `s` vertices,
    /// sorted by mask. `out[0] == [∅]`.
    ///
    /// Cost is the sum of `2^|F|` over facets.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for facet in &self.facets {
            seen.extend(facet.subsets());
        }
        let mut out = vec![Vec::new(); top + 1];
        for face in seen {
            out[face.len()].push(face);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }

    /// The `k`-skeleton: every face of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Self {
        // Small facets stay maximal and no (k+1)-subset of a larger facet can
        // sit inside one, so only duplicates need removing.
        let mut facets = Vec::new();
        for &facet in &self.facets {
            if facet.len() <= k + 1 {
                facets.push(facet);
            } else {
                facets.extend(facet.subsets_of_size(k + 1));
            }
        }
        Self::from_antichain(self.n_vertices, facets)
    }

    /// Exact face counts by dimension.
    pub fn f_vector(&self) -> FVector {
        FVector::new(self.faces_by_size().iter().map(|level| BigInt::from(level.len())).collect())
    }

    /// Faces of `self` contained in `s`, on the same ambient vertex set.
    pub fn induced_subcomplex(&self, s: VertexSet) -> Self {
        Self::from_generators(self.n_vertices, self.facets.iter().map(|f| f.intersection(s)).collect())
    }

    /// `lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Σ }`.
    pub fn link(&self, sigma: VertexSet) -> Result<Self, ComplexError> {
        let faces: Vec<_> =
            self.facets.iter().filter(|f| sigma.is_subset_of(**f)).map(|f| f.difference(sigma)).collect();
        if faces.is_empty() {
            return Err(ComplexError::NotAFace(sigma));
        }
        Ok(Self::from_generators(self.n_vertices, faces))
    }

    /// Inclusion-minimal nonfaces, i.e. the supports of the minimal
    /// generators of the Stanley–Reisner ideal, in canonical order.
    ///
    /// Level-wise search: a candidate of size `d` is a face of size `d - 1`
    /// extended by a vertex above its maximum, kept only if every
    /// `(d-1)`-subset is a face.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let by_size = self.faces_by_size();
        let mut out = Vec::new();
        for v in self.ghost_vertices().iter() {
            out.push(VertexSet::singleton(v));
        }
        for size in 2..=self.n_vertices {
            let Some(lower) = by_size.get(size - 1) else {
                break;
            };
            let lower_set: HashSet<VertexSet> = lower.iter().copied().collect();
            let exists = |s: &VertexSet| by_size.get(size).is_some_and(|l| l.binary_search(s).is_ok());
            for &face in lower {
                let start = face.max_vertex().map_or(0, |m| m + 1);
                for v in start..self.n_vertices {
                    let cand = face.with(v);
                    if exists(&cand) {
                        continue;
                    }
                    if face.iter().all(|u| lower_set.contains(&cand.without(u))) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort_unstable_by_key(|s| s.canonical_key());
        out
    }
}

/// Inclusion-maximal members of `sets`, deduplicated and canonically sorted.
/// Falls back to `[∅]` when nothing is left.
fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    if kept.is_empty() {
        kept.push(VertexSet::EMPTY);
    }
    kept.sort_unstable_by_key(|f| f.canonical_key());
    kept
}
